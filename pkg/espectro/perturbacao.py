# Arquivo: espectro/perturbacao.py
"""
Série perturbativa para Z pequeno: s = n*pi + rho(t), rho = sum c_{2i} t^{2i}.

A equação de cada ramo, escrita em rho, é
    t sinh t = sigma (-1)^n (n*pi + rho) sin(rho)
com sigma = +1 para FatorMenos e -1 para FatorMais. Como só aparecem
potências pares de t, as contas são feitas na variável u = t^2.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from modelo import MAX_ITERACOES_PONTO_FIXO, ORDEM_MAXIMA_SERIE, PI
from modelo.erros import ErroCondicionamento, ErroConvergencia, ErroDominio
from modelo.secular import t_sinh_t

logger = logging.getLogger(__name__)

T_MAXIMO_AJUSTE = 0.2
TERMOS_EXTRAS_AJUSTE = 2


@dataclass(frozen=True)
class CoeficientesSerie:
    n: int
    ramo: object
    coeficientes: tuple   # (c2, c4, ..., c_{2M})
    ordem_maxima: int

    @property
    def c2(self):
        return self.coeficientes[0]

    def coeficiente(self, potencia):
        if potencia % 2 or not 2 <= potencia <= self.ordem_maxima:
            raise ErroDominio(f"Potência t^{potencia} fora da série (ordem {self.ordem_maxima}).")
        return self.coeficientes[potencia // 2 - 1]

    def rho(self, t):
        u = np.asarray(t, dtype=float) ** 2
        # polinômio em u sem termo constante
        valor = u * np.polynomial.polynomial.polyval(u, self.coeficientes)
        return float(valor) if np.ndim(t) == 0 else valor


def _validar_nivel_ordem(n, ordem_maxima):
    if int(n) != n or n < 1:
        raise ErroDominio(f"Nível n={n} inválido: a expansão exige n >= 1.")
    if int(ordem_maxima) != ordem_maxima or ordem_maxima % 2 or ordem_maxima < 2:
        raise ErroDominio(f"Ordem {ordem_maxima} inválida: precisa ser par e >= 2.")
    if ordem_maxima > ORDEM_MAXIMA_SERIE:
        raise ErroDominio(f"Ordem {ordem_maxima} acima do máximo {ORDEM_MAXIMA_SERIE}.")


def _gama(n, ramo):
    return ramo.sigma * (-1.0) ** n


def _produto(a, b, m):
    return np.convolve(a, b)[: m + 1]


def _seno_serie(rho, m):
    """sin(rho(u)) truncado em u^m; rho sem termo constante."""
    resultado = np.zeros(m + 1)
    quadrado = _produto(rho, rho, m)
    potencia = rho.copy()
    k = 0
    while np.any(potencia) and 2 * k + 1 <= m:
        resultado += (-1.0) ** k / math.factorial(2 * k + 1) * potencia
        potencia = _produto(potencia, quadrado, m)
        k += 1
    return resultado


def coeficientes_serie(n, ramo, ordem_maxima):
    _validar_nivel_ordem(n, ordem_maxima)
    m_max = ordem_maxima // 2
    n_pi = n * PI
    gama = _gama(n, ramo)
    # t sinh t = sum_{m>=1} u^m / (2m-1)!
    lado_esquerdo = np.array([0.0] + [1.0 / math.factorial(2 * m - 1) for m in range(1, m_max + 1)])
    c = np.zeros(m_max + 1)
    for m in range(1, m_max + 1):
        seno = _seno_serie(c, m_max)
        # parte não linear: n*pi (sin rho - rho) + rho sin rho; só usa c_1..c_{m-1}
        nao_linear = n_pi * (seno - c) + _produto(c, seno, m_max)
        c[m] = (gama * lado_esquerdo[m] - nao_linear[m]) / n_pi
    return CoeficientesSerie(n=n, ramo=ramo, coeficientes=tuple(float(x) for x in c[1:]),
                             ordem_maxima=ordem_maxima)


def coeficientes_impressos(n, ramo):
    """Coeficientes de t^2, t^4 e t^6 na forma em que foram publicados (para comparação)."""
    _validar_nivel_ordem(n, 6)
    sinal = ramo.sigma         # sinal de cima <-> FatorMenos
    q = (-1.0) ** n
    n_pi = n * PI
    c2 = sinal * q / n_pi
    c4 = -1.0 / n_pi ** 3 + sinal * q / n_pi
    c6 = q * (sinal * 2.0 / n_pi ** 5 - q / (3.0 * n_pi ** 3) + sinal / (6.0 * n_pi ** 3)
              + sinal / (120.0 * n_pi))
    return CoeficientesSerie(n=n, ramo=ramo, coeficientes=(c2, c4, c6), ordem_maxima=6)


def rho_numerico(n, ramo, t):
    """Resolve a equação do ramo para rho = s - n*pi com t fixo (sem a restrição 2st = Z)."""
    gama = _gama(n, ramo)
    n_pi = n * PI
    lado_t = t_sinh_t(t)

    def equacao(rho):
        return lado_t - gama * (n_pi + rho) * math.sin(rho)

    return brentq(equacao, -0.5, 0.5, xtol=1e-300)


def ajustar_serie_numerica(n, ramo, amostras_t, ordem_maxima):
    _validar_nivel_ordem(n, ordem_maxima)
    amostras = np.asarray(sorted(set(float(t) for t in amostras_t)))
    m_max = ordem_maxima // 2
    if len(amostras) < m_max + 2:
        raise ErroCondicionamento(
            f"Amostras insuficientes: {len(amostras)} distintas, mínimo {m_max + 2}."
        )
    if amostras[0] <= 0 or amostras[-1] > T_MAXIMO_AJUSTE:
        raise ErroDominio(f"Amostras de t precisam estar em (0, {T_MAXIMO_AJUSTE}].")

    rho = np.array([rho_numerico(n, ramo, t) for t in amostras])
    u = amostras ** 2
    # termos extras absorvem o truncamento; só os m_max primeiros são devolvidos
    termos = m_max + min(TERMOS_EXTRAS_AJUSTE, len(amostras) - m_max)
    escala = u[-1]
    matriz = np.vander(u / escala, termos, increasing=True)
    solucao, _, posto, _ = np.linalg.lstsq(matriz, rho / u, rcond=None)
    if posto < termos:
        raise ErroCondicionamento(f"Ajuste mal condicionado: posto {posto} < {termos}.")
    coeficientes = solucao / escala ** np.arange(termos)
    logger.debug("ajuste n=%d %s: %s", n, ramo.value, coeficientes)
    return CoeficientesSerie(n=n, ramo=ramo, coeficientes=tuple(float(x) for x in coeficientes[:m_max]),
                             ordem_maxima=ordem_maxima)


def energia_perturbativa(n, ramo, z, ordem_maxima):
    coef = coeficientes_serie(n, ramo, ordem_maxima)
    n_pi = n * PI
    if z < 0 or z > n_pi / 2:
        raise ErroDominio(f"Z={z} fora do alcance da série para n={n} (0 <= Z <= n*pi/2).")
    t = z / (2.0 * n_pi)
    for _ in range(MAX_ITERACOES_PONTO_FIXO):
        t_novo = z / (2.0 * (n_pi + coef.rho(t)))
        if abs(t_novo - t) <= 1e-14:
            t = t_novo
            break
        t = t_novo
    else:
        raise ErroConvergencia(f"Ponto fixo não convergiu para n={n}, Z={z}.", z=z)
    return (n_pi + coef.rho(t)) ** 2 - t ** 2

# Arquivo: transicao/quebrado.py
"""
Regime de simetria PT quebrada.

Convenção interna: k = s - it, l = p - iq, com
    s = K sinh(alfa), t = K cosh(alfa), p = K sinh(beta), q = K cosh(beta),
    K = sqrt(2Z / (sinh 2alfa + sinh 2beta)),
de modo que ReE = K^2 e eps = (K^2/2)(sinh 2beta - sinh 2alfa).
Fora deste módulo só circulam (alfa, beta, K, ReE, eps).
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from modelo import MAX_PASSOS_NEWTON, PASSO_JACOBIANO, TOL_QUEBRADO
from modelo.erros import ErroConvergencia, ErroDominio, ErroJacobianoSingular
from modelo.parametros import ParametrosExatos

logger = logging.getLogger(__name__)

CONDICAO_MAXIMA = 1e13
AMORTECIMENTO_MINIMO = 1e-10


@dataclass(frozen=True)
class EnergiaComplexa:
    re_e: float
    eps: float

    @property
    def valor(self):
        return complex(self.re_e, self.eps)

    def conjugada(self):
        return EnergiaComplexa(re_e=self.re_e, eps=-self.eps)


@dataclass(frozen=True)
class ParametrosQuebrados:
    alfa: float
    beta: float
    K: float

    @classmethod
    def de_angulos(cls, alfa, beta, z):
        if alfa <= 0 or beta <= 0:
            raise ErroDominio(f"alfa={alfa} e beta={beta} precisam ser positivos.")
        if z <= 0:
            raise ErroDominio(f"Z={z} precisa ser positivo no regime quebrado.")
        return cls(alfa=float(alfa), beta=float(beta),
                   K=math.sqrt(2.0 * z / (math.sinh(2 * alfa) + math.sinh(2 * beta))))

    @classmethod
    def do_regime_exato(cls, params, z):
        """Ponto real (s, t) na convenção k = t + is: K^2 = E e sinh(alfa) = t/K."""
        energia = params.energia
        if energia <= 0:
            raise ErroDominio(f"Energia {energia} não positiva não tem parametrização hiperbólica.")
        alfa = math.asinh(params.t / math.sqrt(energia))
        return cls.de_angulos(alfa, alfa, z)

    @property
    def k(self):
        return complex(self.K * math.sinh(self.alfa), -self.K * math.cosh(self.alfa))

    @property
    def l_conj(self):
        return complex(self.K * math.sinh(self.beta), self.K * math.cosh(self.beta))

    @property
    def simetrico(self):
        return self.alfa == self.beta

    def trocados(self):
        return ParametrosQuebrados(alfa=self.beta, beta=self.alfa, K=self.K)

    def para_exatos(self):
        """Só faz sentido com alfa = beta: volta para (t, s) com E = s^2 - t^2."""
        return ParametrosExatos(t=self.K * math.sinh(self.alfa), s=self.K * math.cosh(self.alfa))


def energia_complexa(params):
    k2 = params.K ** 2
    return EnergiaComplexa(re_e=k2, eps=0.5 * k2 * (math.sinh(2 * params.beta) - math.sinh(2 * params.alfa)))


def _termos(params):
    k = params.k
    l_conj = params.l_conj
    primeiro = 2.0 * k
    segundo = 2.0 * k * np.cosh(k) * np.cosh(l_conj)
    terceiro = (k ** 2 + l_conj ** 2) / l_conj * np.sinh(k) * np.sinh(l_conj)
    return primeiro, segundo, terceiro


def _rebater(params, z):
    # K sempre recalculado a partir de Z
    return ParametrosQuebrados.de_angulos(params.alfa, params.beta, z)


def secular_quebrado(params, z):
    """2k(1 - cosh k cosh l*) - ((k^2 + l*^2)/l*) sinh k sinh l*."""
    primeiro, segundo, terceiro = _termos(_rebater(params, z))
    return complex(primeiro - segundo - terceiro)


def escala_quebrado(params, z):
    return max(abs(termo) for termo in _termos(_rebater(params, z)))


def residuo_escalado(params, z):
    return abs(secular_quebrado(params, z)) / escala_quebrado(params, z)


def secular_quebrado_reduzido(params, z):
    """Equação secular dividida por k: 2 - tr(M), M a matriz de transferência de um período."""
    params = _rebater(params, z)
    return secular_quebrado(params, z) / params.k


def _vetor(x, z, escala):
    valor = secular_quebrado(ParametrosQuebrados.de_angulos(x[0], x[1], z), z) / escala
    return np.array([valor.real, valor.imag])


def _jacobiano(x, z, escala):
    jac = np.empty((2, 2))
    for j in range(2):
        h = PASSO_JACOBIANO * max(1.0, abs(x[j]))
        mais, menos = x.copy(), x.copy()
        mais[j] += h
        menos[j] -= h
        jac[:, j] = (_vetor(mais, z, escala) - _vetor(menos, z, escala)) / (2.0 * h)
    return jac


def resolver_quebrado(z, inicial, tol=TOL_QUEBRADO):
    """Newton amortecido em (alfa, beta) para Re e Im da equação secular complexa."""
    x = np.array([inicial.alfa, inicial.beta], dtype=float)
    params = ParametrosQuebrados.de_angulos(x[0], x[1], z)
    residuo = residuo_escalado(params, z)
    for iteracao in range(MAX_PASSOS_NEWTON):
        if residuo <= tol:
            logger.debug("Z=%g: Newton convergiu em %d passos (resíduo %.2e)", z, iteracao, residuo)
            return params, energia_complexa(params)
        escala = escala_quebrado(params, z)
        jac = _jacobiano(x, z, escala)
        if not np.all(np.isfinite(jac)) or np.linalg.cond(jac) > CONDICAO_MAXIMA:
            raise ErroJacobianoSingular(
                f"Jacobiano singular em alfa={x[0]:.8f}, beta={x[1]:.8f} (Z={z}); "
                "perto da dobra use a continuação a partir do ponto crítico.", z=z)
        passo = np.linalg.solve(jac, -_vetor(x, z, escala))

        lam = 1.0
        while lam >= AMORTECIMENTO_MINIMO:
            candidato = x + lam * passo
            if np.all(candidato > 0):
                novo = ParametrosQuebrados.de_angulos(candidato[0], candidato[1], z)
                novo_residuo = residuo_escalado(novo, z)
                if novo_residuo < residuo:
                    break
            lam /= 2.0
        else:
            raise ErroConvergencia(
                f"Amortecimento esgotado em alfa={x[0]:.8f}, beta={x[1]:.8f} (Z={z}, resíduo {residuo:.2e}).",
                z=z)
        x, params, residuo = candidato, novo, novo_residuo

    if residuo <= tol:
        return params, energia_complexa(params)
    raise ErroConvergencia(f"Newton não convergiu em {MAX_PASSOS_NEWTON} passos (Z={z}, resíduo {residuo:.2e}).",
                           z=z)


def grade_z(z_de, z_ate, passos, origem=None):
    """Grade linear em Z, ou geométrica na distância a `origem` (tipicamente o Z crítico)."""
    if z_de == z_ate:
        return np.array([z_de])
    if passos < 1:
        raise ErroDominio(f"Número de passos {passos} precisa ser >= 1.")
    if origem is None:
        return np.linspace(z_de, z_ate, passos + 1)
    if min(z_de, z_ate) <= origem:
        raise ErroDominio(f"Grade geométrica exige Z acima da origem {origem}.")
    return origem + np.geomspace(z_de - origem, z_ate - origem, passos + 1)


def continuar_em_z(z_de, z_ate, passos, inicial, origem=None):
    """Caminho [(Z, params, energia)] semeando cada passo com a solução anterior."""
    from transicao.passos import MarchaQuebrada

    marcha = MarchaQuebrada(grade_z(z_de, z_ate, passos, origem), inicial)
    caminho = []
    while True:
        passo = marcha.proximo_passo()
        if passo is None:
            break
        if passo["status"] == "erro":
            raise passo["erro"]
        caminho.append((passo["z"], passo["params"], passo["energia"]))
    return caminho

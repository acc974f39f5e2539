# Arquivo: oraculo/residuos.py
import logging
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from modelo.erros import ErroDominio
from oraculo.contorno import Regime, determinante_relativo, numeros_de_onda

logger = logging.getLogger(__name__)

GRADE_MINIMA = 64
PONTOS_PT = 256
FASES_PRE_BUSCA = 64


@dataclass(frozen=True)
class RelatorioResiduos:
    residuo_edo_fd: float
    residuo_edo_analitico: float
    residuos_contorno: tuple
    modulo_det: float

    @property
    def maximo_contorno(self):
        return max(self.residuos_contorno)


class FuncaoOnda:
    """psi por partes a partir das amplitudes; cada peça vale fora do seu intervalo por continuação."""

    def __init__(self, solucao, energia, z):
        self.solucao = solucao
        self.energia = complex(energia)
        self.z = z
        k, m = numeros_de_onda(energia, z)
        self.k, self.m = complex(k), complex(m)
        # sinal do número de onda igual ao da solução (ramo da raiz)
        if solucao.k_direita.real * self.k.real + solucao.k_direita.imag * self.k.imag < 0:
            self.k, self.m = -self.k, -self.m

    def direita(self, x, ordem=0):
        a1, a2, _, _ = self.solucao.amplitudes
        k = self.k
        x = np.asarray(x, dtype=float)
        if self.solucao.regime is Regime.EXATO:
            return a1 * k ** ordem * np.exp(k * x) + a2 * (-k) ** ordem * np.exp(-k * x)
        u = k * (1.0 - x)
        sh, ch = np.sinh(u), np.cosh(u)
        derivadas = {0: (sh, ch), 1: (-k * ch, -k * sh), 2: (k * k * sh, k * k * ch)}
        d_sh, d_ch = derivadas[ordem]
        return a1 * d_sh + a2 * d_ch

    def esquerda(self, x, ordem=0):
        _, _, b1, b2 = self.solucao.amplitudes
        m = self.m
        x = np.asarray(x, dtype=float)
        if self.solucao.regime is Regime.EXATO:
            return b1 * m ** ordem * np.exp(m * (x + 1.0)) + b2 * (-m) ** ordem * np.exp(-m * (x + 1.0))
        u = m * (1.0 + x)
        sh, ch = np.sinh(u), np.cosh(u)
        derivadas = {0: (sh, ch), 1: (m * ch, m * sh), 2: (m * m * sh, m * m * ch)}
        d_sh, d_ch = derivadas[ordem]
        return b1 * d_sh + b2 * d_ch

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return np.where(x >= 0, self.direita(x), self.esquerda(x))


def _residuo_edo(psi_xx, psi, potencial, energia):
    return np.abs(-psi_xx + 1j * potencial * psi - energia * psi)


def verificar_residuos(solucao, energia, z, grade_n=256):
    if grade_n < GRADE_MINIMA:
        raise ErroDominio(f"grade_n={grade_n} abaixo do mínimo {GRADE_MINIMA} pontos por peça.")
    psi = FuncaoOnda(solucao, energia, z)
    x_dir = np.linspace(0.0, 1.0, grade_n)
    x_esq = np.linspace(-1.0, 0.0, grade_n)
    h = x_dir[1] - x_dir[0]
    escala = max(np.max(np.abs(psi.direita(x_dir))), np.max(np.abs(psi.esquerda(x_esq))))

    analitico = max(
        np.max(_residuo_edo(psi.direita(x_dir, 2), psi.direita(x_dir), z, psi.energia)),
        np.max(_residuo_edo(psi.esquerda(x_esq, 2), psi.esquerda(x_esq), -z, psi.energia)),
    ) / escala

    def segunda_fd(peca, x):
        return (-peca(x + 2 * h) + 16 * peca(x + h) - 30 * peca(x) + 16 * peca(x - h) - peca(x - 2 * h)) / (12 * h * h)

    fd = max(
        np.max(_residuo_edo(segunda_fd(psi.direita, x_dir), psi.direita(x_dir), z, psi.energia)),
        np.max(_residuo_edo(segunda_fd(psi.esquerda, x_esq), psi.esquerda(x_esq), -z, psi.energia)),
    ) / escala

    escala_derivada = escala * max(1.0, abs(psi.k), abs(psi.m))
    contorno = (
        abs(psi.direita(1.0) - psi.esquerda(-1.0)) / escala,
        abs(psi.direita(1.0, 1) - psi.esquerda(-1.0, 1)) / escala_derivada,
        abs(psi.direita(0.0) - psi.esquerda(0.0)) / escala,
        abs(psi.direita(0.0, 1) - psi.esquerda(0.0, 1)) / escala_derivada,
    )
    relatorio = RelatorioResiduos(residuo_edo_fd=float(fd), residuo_edo_analitico=float(analitico),
                                  residuos_contorno=tuple(float(c) for c in contorno),
                                  modulo_det=float(determinante_relativo(energia, z)))
    logger.debug("Resíduos em E=%s, Z=%g: %s", energia, z, relatorio)
    return relatorio


def verificar_simetria_pt(solucao, z, energia=None):
    """min sobre |lambda| = 1 de max |conj psi(-x) - lambda psi(x)| / max |psi| numa grade simétrica."""
    if energia is None:
        energia = -solucao.k_direita ** 2 + 1j * z
        if solucao.regime is Regime.EXATO:
            energia = energia.real
    psi = FuncaoOnda(solucao, energia, z)
    x = np.linspace(-1.0, 1.0, PONTOS_PT)
    valores = psi(x)
    espelhados = np.conj(valores[::-1])
    escala = np.max(np.abs(valores))

    def distancia(fase):
        return np.max(np.abs(espelhados - np.exp(1j * fase) * valores)) / escala

    # fase ótima em média quadrática como ponto de partida
    projecao = np.vdot(valores, espelhados)
    fase_l2 = float(np.angle(projecao)) if abs(projecao) > 0 else 0.0
    candidatas = fase_l2 + np.linspace(-np.pi, np.pi, FASES_PRE_BUSCA, endpoint=False)
    melhor = min(candidatas, key=distancia)
    passo = 2 * np.pi / FASES_PRE_BUSCA
    refinado = minimize_scalar(distancia, bounds=(melhor - passo, melhor + passo), method="bounded",
                               options={"xatol": 1e-12})
    return float(min(distancia(fase_l2), distancia(melhor), refinado.fun))

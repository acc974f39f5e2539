# Arquivo: oraculo/contorno.py
"""
Matriz de casamento 4x4 construída direto do ansatz e das condições de
contorno periódicas, sem passar pelas equações seculares fechadas.

Energia real (regime exato), em (0,1) e (-1,0):
    psi1 = A1 e^{kx} + A2 e^{-kx},   psi2 = B1 e^{m(x+1)} + B2 e^{-m(x+1)}
Energia complexa (regime quebrado):
    psi1 = A1 sinh k(1-x) + A2 cosh k(1-x),   psi2 = B1 sinh m(1+x) + B2 cosh m(1+x)
com k = sqrt(-E + iZ) (ramo principal) e m = conj(sqrt(-conj(E) + iZ)), m^2 = -E - iZ.
Linhas: psi1(1)=psi2(-1), psi1'(1)=psi2'(-1), psi1(0)=psi2(0), psi1'(0)=psi2'(0).
Colunas: (A1, A2, B1, B2).
"""
import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.linalg import svd
from scipy.optimize import brentq

from modelo import PI, TOL_POSTO
from modelo.erros import ErroNaoAutovalor
from modelo.secular import t_sinh_t
from espectro.varredura import s_minimo

logger = logging.getLogger(__name__)

PASSO_S_ORACULO = PI / 8192


class Regime(Enum):
    EXATO = "Exato"
    QUEBRADO = "Quebrado"

    @classmethod
    def de_energia(cls, energia):
        return cls.EXATO if np.all(np.imag(energia) == 0) else cls.QUEBRADO


@dataclass(frozen=True)
class SolucaoOnda:
    amplitudes: tuple        # (A1, A2, B1, B2)
    k_direita: complex
    k_esquerda: complex
    regime: Regime
    multiplicidade: int = 1

    @property
    def A1(self):
        return self.amplitudes[0]

    @property
    def A2(self):
        return self.amplitudes[1]

    @property
    def B1(self):
        return self.amplitudes[2]

    @property
    def B2(self):
        return self.amplitudes[3]


def numeros_de_onda(energia, z, ramo_raiz=1):
    """(k, m) para cada energia; ramo_raiz=-1 troca o ramo da raiz quadrada."""
    e = np.asarray(energia, dtype=complex)
    k = ramo_raiz * np.sqrt(-e + 1j * z)
    m = ramo_raiz * np.conj(np.sqrt(-np.conj(e) + 1j * z))
    return k, m


def _matrizes_exponenciais(k, m):
    ek, emk = np.exp(k), np.exp(-k)
    em, emm = np.exp(m), np.exp(-m)
    um = np.ones_like(k)
    linhas = [
        [ek, emk, -um, -um],
        [k * ek, -k * emk, -m, m],
        [um, um, -em, -emm],
        [k, -k, -m * em, m * emm],
    ]
    return np.moveaxis(np.array(linhas), (0, 1), (-2, -1))


def _matrizes_hiperbolicas(k, m):
    shk, chk = np.sinh(k), np.cosh(k)
    shm, chm = np.sinh(m), np.cosh(m)
    um, zero = np.ones_like(k), np.zeros_like(k)
    linhas = [
        [zero, um, zero, -um],
        [-k, zero, -m, zero],
        [shk, chk, -shm, -chm],
        [-k * chk, -k * shk, -m * chm, -m * shm],
    ]
    return np.moveaxis(np.array(linhas), (0, 1), (-2, -1))


def matriz_contorno(energia, z, ramo_raiz=1):
    k, m = numeros_de_onda(energia, z, ramo_raiz)
    if Regime.de_energia(energia) is Regime.EXATO:
        return _matrizes_exponenciais(k, m)
    return _matrizes_hiperbolicas(k, m)


def escala_matriz(matriz):
    """Produto dos maiores módulos de cada linha: limite natural para |det|."""
    return np.prod(np.max(np.abs(matriz), axis=-1), axis=-1)


def determinante_contorno(energia, z, ramo_raiz=1):
    det = np.linalg.det(matriz_contorno(energia, z, ramo_raiz))
    return complex(det) if np.ndim(det) == 0 else det


def determinante_relativo(energia, z, ramo_raiz=1):
    matriz = matriz_contorno(energia, z, ramo_raiz)
    return np.abs(np.linalg.det(matriz)) / escala_matriz(matriz)


def razao_prefator(energia, z):
    """det W * |k|^4 / (-F+ F-) para energia real, com k = t + is."""
    k, _ = numeros_de_onda(float(energia), z)
    t, s = k.real, k.imag
    tsh, ssn = t_sinh_t(t), s * np.sin(s)
    razao = determinante_contorno(float(energia), z) * abs(k) ** 4 / (-(tsh + ssn) * (tsh - ssn))
    logger.info("Razão det/fatorada em E=%g, Z=%g: %s", energia, z, razao)
    return razao


def _grade_energia(z, s_max, passo=PASSO_S_ORACULO):
    # E(s) = s^2 - Z^2/(4s^2), crescente em s
    inicio = s_minimo(z)
    s = np.linspace(inicio, s_max, max(int(np.ceil((s_max - inicio) / passo)), 1) + 1)
    return s * s - z * z / (4.0 * s * s)


def raizes_determinante(z, s_max):
    """Raízes reais de Re det W(E) por varredura em E e refinamento de Brent."""
    energias = _grade_energia(z, s_max)
    valores = np.real(np.linalg.det(matriz_contorno(energias, z)))
    raizes = [float(e) for e in energias[valores == 0.0]]

    def real_det(e):
        return determinante_contorno(e, z).real

    for i in np.flatnonzero(valores[:-1] * valores[1:] < 0):
        raizes.append(brentq(real_det, energias[i], energias[i + 1], xtol=1e-14))
    raizes.sort()
    logger.debug("Z=%g: %d raízes do determinante até s=%g", z, len(raizes), s_max)
    return raizes


def solucao_nucleo(energia, z):
    matriz = matriz_contorno(energia, z)
    _, valores, vh = svd(matriz)
    razoes = valores / valores[0]
    if razoes[-1] > TOL_POSTO:
        raise ErroNaoAutovalor(
            f"E={energia} não é autovalor para Z={z}: menor razão singular {razoes[-1]:.2e} > {TOL_POSTO}."
        )
    vetor = np.conj(vh[-1])
    # fase fixada pela maior componente, que vira 1
    vetor = vetor / vetor[int(np.argmax(np.abs(vetor)))]
    k, m = numeros_de_onda(energia, z)
    return SolucaoOnda(amplitudes=tuple(complex(a) for a in vetor), k_direita=complex(k),
                       k_esquerda=complex(m), regime=Regime.de_energia(energia),
                       multiplicidade=int(np.sum(razoes <= TOL_POSTO)))

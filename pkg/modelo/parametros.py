# Arquivo: modelo/parametros.py
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from modelo import TOL_RESTRICAO
from modelo.erros import ErroDominio


class Ramo(Enum):
    """Qual fator de (t sinh t + s sin s)(t sinh t - s sin s) se anula."""
    FATOR_MAIS = "FatorMais"
    FATOR_MENOS = "FatorMenos"

    @property
    def sinal(self):
        # sinal do termo s sin s dentro do fator
        return 1.0 if self is Ramo.FATOR_MAIS else -1.0

    @property
    def sigma(self):
        # sinal do termo dominante da série: +1 para FatorMenos, -1 para FatorMais
        return -self.sinal

    @classmethod
    def de_rotulo(cls, rotulo):
        for ramo in cls:
            if ramo.value == rotulo or ramo.name == rotulo:
                return ramo
        raise ErroDominio(f"Ramo '{rotulo}' desconhecido.")


def validar_acoplamento(z):
    z = float(z)
    if not math.isfinite(z) or z < 0:
        raise ErroDominio(f"Acoplamento Z={z} inválido: precisa ser finito e não negativo.")
    return z


@dataclass(frozen=True)
class ParametrosExatos:
    """k = t + is no regime exato; ligado a Z por 2st = Z."""
    t: float
    s: float

    def __post_init__(self):
        # t = 0 só aparece no limite hermitiano Z = 0
        for nome in ("t", "s"):
            valor = np.asarray(getattr(self, nome), dtype=float)
            if not np.all(np.isfinite(valor)) or np.any(valor < 0):
                raise ErroDominio(f"{nome}={getattr(self, nome)} inválido: precisa ser finito e não negativo.")

    @classmethod
    def na_restricao(cls, s, z):
        if s <= 0:
            raise ErroDominio(f"s={s} precisa ser positivo na curva 2st = Z.")
        return cls(t=z / (2.0 * s), s=s)

    @property
    def energia(self):
        return energia_de(self)

    def desvio_restricao(self, z):
        return abs(2.0 * self.s * self.t - z)

    def satisfaz_restricao(self, z):
        return self.desvio_restricao(z) <= TOL_RESTRICAO * max(1.0, z)


def energia_de(params):
    return params.s ** 2 - params.t ** 2


@dataclass(frozen=True)
class PontoEspectral:
    z: float
    ramo: Ramo
    n: int
    params: ParametrosExatos
    energia: float
    residuo: float

    @property
    def s(self):
        return self.params.s

    @property
    def t(self):
        return self.params.t

    def __repr__(self):
        return f"PontoEspectral(n={self.n}, {self.ramo.value}, E={self.energia:.12g})"

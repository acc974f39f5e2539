# Arquivo: espectro/varredura.py
"""
Espectro real: varredura em s ao longo da curva 2st = Z, busca de mudanças
de sinal em cada fator e refinamento por Brent.
"""
import logging
import math
from collections import defaultdict
from dataclasses import dataclass, field, replace

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from modelo import MAX_ITERACOES_REFINO, PASSO_VARREDURA, PI, TOL_FATOR, TOL_PONTO
from modelo.erros import ErroConvergencia, ErroDominio, ErroSemMudancaSinal
from modelo.parametros import ParametrosExatos, PontoEspectral, Ramo, validar_acoplamento
from modelo.secular import fator_na_curva

logger = logging.getLogger(__name__)

S_INICIAL_HERMITIANO = 1e-9
PONTOS_PRE_BUSCA = 257


@dataclass(frozen=True)
class OpcoesVarredura:
    passo: float = PASSO_VARREDURA
    tol_fator: float = TOL_FATOR
    max_iteracoes: int = MAX_ITERACOES_REFINO

    def __post_init__(self):
        if not 0 < self.passo <= PASSO_VARREDURA:
            raise ErroDominio(f"Passo de varredura {self.passo} fora de (0, pi/64].")


@dataclass(frozen=True)
class PedidoEspectro:
    z: float
    s_max: float
    opcoes: OpcoesVarredura = field(default_factory=OpcoesVarredura)

    def __post_init__(self):
        object.__setattr__(self, "z", validar_acoplamento(self.z))
        if not self.s_max >= PI:
            raise ErroDominio(f"s_max={self.s_max} precisa ser pelo menos pi.")


def s_minimo(z):
    # abaixo de sqrt(Z/2) vale t > s e nenhum fator se anula
    return math.sqrt(z / 2.0) if z > 0 else S_INICIAL_HERMITIANO


def grade_s(z, s_max, passo=PASSO_VARREDURA):
    """Grade em s: o ponto s_min seguido de pontos deslocados de meio passo (nunca caem em n*pi)."""
    s_lo = s_minimo(z)
    if s_lo >= s_max:
        return np.array([s_lo])
    quantidade = int(math.ceil((s_max - s_lo) / passo + 0.5))
    interior = s_lo + passo * (np.arange(1, quantidade + 1) - 0.5)
    interior = np.minimum(interior, s_max)
    return np.unique(np.concatenate(([s_lo], interior)))


def refinar_raiz(intervalo, z, ramo, opcoes=None):
    opcoes = opcoes or OpcoesVarredura()
    s_lo, s_hi = intervalo
    f_lo = fator_na_curva(s_lo, z, ramo)
    f_hi = fator_na_curva(s_hi, z, ramo)
    if f_lo == 0.0:
        s = s_lo
    elif f_hi == 0.0:
        s = s_hi
    elif f_lo * f_hi > 0:
        raise ErroSemMudancaSinal(
            f"O fator {ramo.value} não muda de sinal em [{s_lo}, {s_hi}] (Z={z})."
        )
    else:
        try:
            s, info = brentq(fator_na_curva, s_lo, s_hi, args=(z, ramo), xtol=1e-300,
                             maxiter=opcoes.max_iteracoes, full_output=True)
        except RuntimeError as erro:
            raise ErroConvergencia(f"Refinamento falhou em [{s_lo}, {s_hi}]: {erro}", z=z) from erro
        logger.debug("raiz %s em s=%.15g após %d iterações", ramo.value, s, info.iterations)

    params = ParametrosExatos.na_restricao(s, z)
    residuo = abs(fator_na_curva(s, z, ramo))
    limite = opcoes.tol_fator * max(1.0, s)
    if residuo > TOL_PONTO:
        raise ErroConvergencia(f"Resíduo {residuo:.3e} acima do aceitável em s={s} (Z={z}).", z=z)
    if residuo > limite:
        logger.warning("Resíduo %.3e acima de %.1e em s=%.15g (Z=%g)", residuo, limite, s, z)
    return PontoEspectral(z=z, ramo=ramo, n=int(round(s / PI)), params=params,
                          energia=params.energia, residuo=residuo)


def rotular_niveis(valores_s):
    """
    Índice n de cada raiz de um mesmo ramo. Raízes do mesmo fator vem em
    pares dentro de um intervalo (j*pi, (j+1)*pi): a da esquerda e o nível j,
    a da direita o nível j+1. Intervalo com raiz isolada: n = round(s/pi).
    """
    grupos = defaultdict(list)
    for s in valores_s:
        grupos[int(s // PI)].append(s)
    rotulos = {}
    for j, lista in grupos.items():
        lista.sort()
        if len(lista) == 2:
            rotulos[lista[0]], rotulos[lista[1]] = j, j + 1
            continue
        if len(lista) > 2:
            logger.warning("Intervalo %d com %d raízes do mesmo ramo", j, len(lista))
        for s in lista:
            rotulos[s] = int(round(s / PI))
    return [rotulos[s] for s in valores_s]


def limites_intervalo(z, j):
    return max(j * PI, s_minimo(z)), (j + 1) * PI


def minimo_no_intervalo(z, ramo, j, s_max=None):
    """(min F, s do mínimo) no intervalo (j*pi, (j+1)*pi) ao longo da curva, cortado em s_max."""
    lo, hi = limites_intervalo(z, j)
    if s_max is not None:
        hi = min(hi, s_max)
    if lo >= hi:
        return float(fator_na_curva(hi, z, ramo)), hi
    grade = np.linspace(lo, hi, PONTOS_PRE_BUSCA)
    valores = fator_na_curva(grade, z, ramo)
    i = int(np.argmin(valores))
    a, b = grade[max(i - 1, 0)], grade[min(i + 1, len(grade) - 1)]
    resultado = minimize_scalar(fator_na_curva, bounds=(a, b), args=(z, ramo), method="bounded",
                                options={"xatol": 1e-12})
    if resultado.fun > valores[i]:
        return float(valores[i]), float(grade[i])
    return float(resultado.fun), float(resultado.x)


def _pares_estreitos(grade, z, ramo, encontrados, opcoes):
    """Pares que cabem numa célula da grade: o fator fica negativo sem trocar de sinal nos nós."""
    ocupados = {int(p.s // PI) for p in encontrados}
    pontos = []
    for j in range(int(grade[0] // PI), int(grade[-1] // PI) + 1):
        if j in ocupados:
            continue
        f_min, s_min = minimo_no_intervalo(z, ramo, j, grade[-1])
        if f_min >= 0:
            continue
        lo, hi = limites_intervalo(z, j)
        hi = min(hi, grade[-1])
        logger.debug("Par estreito %s no intervalo %d (Z=%g, F_min=%.3e)", ramo.value, j, z, f_min)
        for a, b in ((lo, s_min), (s_min, hi)):
            if fator_na_curva(a, z, ramo) * fator_na_curva(b, z, ramo) < 0:
                pontos.append(refinar_raiz((a, b), z, ramo, opcoes))
    return pontos


def _raizes_do_ramo(grade, z, ramo, opcoes):
    valores = np.asarray(fator_na_curva(grade, z, ramo))
    pontos = []
    for i in np.flatnonzero(valores == 0.0):
        pontos.append(refinar_raiz((grade[i], grade[i]), z, ramo, opcoes))
    trocas = np.flatnonzero(valores[:-1] * valores[1:] < 0)
    for i in trocas:
        pontos.append(refinar_raiz((grade[i], grade[i + 1]), z, ramo, opcoes))
    if z > 0:
        # com Z > 0 o fator é positivo em todo n*pi: raízes só no interior dos intervalos
        pontos.extend(_pares_estreitos(grade, z, ramo, pontos, opcoes))
    pontos.sort(key=lambda p: p.s)
    niveis = rotular_niveis([p.s for p in pontos])
    return [replace(p, n=n) for p, n in zip(pontos, niveis)]


def varrer_raizes(pedido):
    """Todas as raízes reais com s em (0, s_max], ordenadas por energia."""
    grade = grade_s(pedido.z, pedido.s_max, pedido.opcoes.passo)
    pontos = []
    for ramo in Ramo:
        pontos.extend(_raizes_do_ramo(grade, pedido.z, ramo, pedido.opcoes))
    pontos.sort(key=lambda p: (p.energia, p.s, p.ramo.value))
    logger.debug("Z=%g: %d raízes reais até s=%g", pedido.z, len(pontos), pedido.s_max)
    return pontos


def espectro_real(z, s_max, opcoes=None):
    return varrer_raizes(PedidoEspectro(z=z, s_max=s_max, opcoes=opcoes or OpcoesVarredura()))

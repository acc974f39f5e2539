# Arquivo: transicao/critico.py
"""
Acoplamentos críticos: valores de Z em que duas raízes reais do mesmo fator
se juntam numa raiz dupla ao longo da curva t = Z/(2s).

O fator cresce com Z em s fixo, então o mínimo do fator dentro do intervalo
do par é uma função crescente de Z e a dobra é o zero desse mínimo.
"""
import logging
import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.optimize import brentq

from modelo import MAX_PARES_CRITICOS, MAX_PASSOS_NEWTON, PI, T_LIMITE_LOG, TOL_DOBRA
from modelo.erros import (ErroConvergencia, ErroDominio, ErroJacobianoSingular, ErroRaizSimples,
                          ErroRastreamento, ErroRegime)
from modelo.parametros import Ramo
from modelo.secular import derivadas_na_curva
from espectro.varredura import limites_intervalo, minimo_no_intervalo, refinar_raiz
from transicao.passos import MarchaRaizes
from transicao.quebrado import ParametrosQuebrados, continuar_em_z, resolver_quebrado

logger = logging.getLogger(__name__)

CURVATURA_MINIMA = 1e-4
PASSO_Z_RELATIVO = 1e-6
MAX_EXPANSOES = 60
DESLOCAMENTO_SEMENTE = 1e-4   # distância relativa a dobra do primeiro ponto quebrado
PASSOS_CONTINUACAO = 20


@dataclass(frozen=True)
class PontoCritico:
    nu: int
    z_crit: float
    s_merge: float
    e_merge: float
    ramo: Ramo
    t_merge: float
    curvatura: float      # d2F/ds2 na dobra
    derivada_z: float     # dF/dZ na dobra

    @property
    def intervalo(self):
        return int(self.s_merge // PI)


def _derivada_em_z(s, z, ramo):
    h = PASSO_Z_RELATIVO * max(1.0, z)
    mais = derivadas_na_curva(s, z + h, ramo)
    menos = derivadas_na_curva(s, z - h, ramo)
    return (mais[0] - menos[0]) / (2 * h), (mais[1] - menos[1]) / (2 * h)


def encontrar_raiz_dupla(z_palpite, s_palpite, ramo, nu=0):
    """Newton 2D em (Z, s) para F = 0 e dF/ds = 0."""
    x = np.array([z_palpite, s_palpite], dtype=float)
    f, f_s, f_ss = derivadas_na_curva(x[1], x[0], ramo)
    norma = math.hypot(f, f_s)
    for _ in range(MAX_PASSOS_NEWTON):
        if abs(f) <= TOL_DOBRA * 1e-3 and abs(f_s) <= TOL_DOBRA * 1e-3:
            break
        f_z, f_sz = _derivada_em_z(x[1], x[0], ramo)
        jac = np.array([[f_z, f_s], [f_sz, f_ss]])
        try:
            passo = np.linalg.solve(jac, [-f, -f_s])
        except np.linalg.LinAlgError as erro:
            raise ErroJacobianoSingular(f"Jacobiano singular em Z={x[0]}, s={x[1]}.", z=x[0]) from erro

        lam = 1.0
        while lam > 1e-10:
            candidato = x + lam * passo
            if candidato[0] > 0 and 0 < candidato[0] / (2.0 * candidato[1]) <= T_LIMITE_LOG:
                novo = derivadas_na_curva(candidato[1], candidato[0], ramo)
                if math.hypot(novo[0], novo[1]) < norma:
                    break
            lam /= 2.0
        else:
            break
        if np.all(np.abs(candidato - x) <= 1e-15 * np.maximum(1.0, np.abs(x))):
            x = candidato
            f, f_s, f_ss = novo
            break
        x = candidato
        f, f_s, f_ss = novo
        norma = math.hypot(f, f_s)

    z, s = float(x[0]), float(x[1])
    if abs(f) > TOL_DOBRA or abs(f_s) > TOL_DOBRA:
        raise ErroConvergencia(
            f"Raiz dupla não convergiu perto de Z={z_palpite}, s={s_palpite} (|F|={abs(f):.2e}, |F_s|={abs(f_s):.2e}).",
            z=z)
    if abs(f_ss) < CURVATURA_MINIMA:
        raise ErroRaizSimples(f"Sem dobra quadrática em Z={z}, s={s}: d2F/ds2={f_ss:.2e}.", z=z)

    t = z / (2.0 * s)
    f_z, _ = _derivada_em_z(s, z, ramo)
    ponto = PontoCritico(nu=nu, z_crit=z, s_merge=s, e_merge=s * s - t * t, ramo=ramo, t_merge=t,
                         curvatura=f_ss, derivada_z=f_z)
    logger.debug("Dobra %s: Z=%.12g s=%.12g E=%.12g", ramo.value, z, s, ponto.e_merge)
    return ponto


def localizar_dobra(ramo, j, z_antes, z_depois, nu=0):
    """Zero do mínimo do fator entre Z (par presente) e Z depois do sumiço."""
    def minimo(z):
        return minimo_no_intervalo(z, ramo, j)[0]

    if minimo(z_antes) >= 0:
        raise ErroRastreamento(f"Par do intervalo {j} já ausente em Z={z_antes}.", z=z_antes)
    z_b = z_depois
    for _ in range(MAX_EXPANSOES):
        if minimo(z_b) > 0:
            break
        # par estreito demais para a grade: ainda não colidiu
        z_b += z_b - z_antes
    else:
        raise ErroRastreamento(f"Dobra do intervalo {j} não encontrada acima de Z={z_antes}.", z=z_b)

    z_c = brentq(minimo, z_antes, z_b, xtol=1e-14)
    s_c = minimo_no_intervalo(z_c, ramo, j)[1]
    return encontrar_raiz_dupla(z_c, s_c, ramo, nu=nu)


def sequencia_critica(quantidade):
    if int(quantidade) != quantidade or not 1 <= quantidade <= MAX_PARES_CRITICOS:
        raise ErroDominio(f"Quantidade {quantidade} fora de [1, {MAX_PARES_CRITICOS}].")
    marcha = MarchaRaizes(intervalos=int(quantidade) + 1)
    pontos = []
    while len(pontos) < quantidade:
        passo = marcha.proximo_passo()
        if passo is None or passo["status"] == "finalizado":
            raise ErroRastreamento(f"Marcha terminou com {len(pontos)} de {quantidade} dobras.")
        if passo["status"] == "erro":
            raise ErroRastreamento(passo["mensagem"], z=passo["z"])
        if passo["status"] == "colisao":
            pontos.append(localizar_dobra(passo["ramo"], passo["intervalo"], passo["z_antes"],
                                          passo["z_depois"], nu=len(pontos)))

    pontos.sort(key=lambda p: p.z_crit)
    for anterior, seguinte in zip(pontos, pontos[1:]):
        if not seguinte.z_crit > anterior.z_crit:
            raise ErroRastreamento(f"Dobras fora de ordem: {anterior.z_crit} e {seguinte.z_crit}.")
    return [replace(p, nu=nu) for nu, p in enumerate(pontos)]


def raizes_do_par(ponto, z):
    """As duas raízes reais do par da dobra `ponto` para Z abaixo da dobra."""
    if z >= ponto.z_crit:
        raise ErroRegime(f"Z={z} não está abaixo da dobra Z={ponto.z_crit:.10g}: o par é complexo.")
    j = ponto.intervalo
    lo, hi = limites_intervalo(z, j)
    _, s_meio = minimo_no_intervalo(z, ponto.ramo, j)
    esquerda = refinar_raiz((lo, s_meio), z, ponto.ramo)
    direita = refinar_raiz((s_meio, hi), z, ponto.ramo)
    return [replace(esquerda, n=j), replace(direita, n=j + 1)]


def semente_quebrada(ponto, z):
    """Desdobramento em raiz quadrada: alfa, beta = alfa_f -/+ c sqrt(Z - Z_crit)."""
    dz = z - ponto.z_crit
    if dz <= 0:
        raise ErroRegime(f"Z={z} abaixo da dobra Z={ponto.z_crit:.10g}; use 'spectrum'.")
    if ponto.curvatura <= 0 or ponto.derivada_z <= 0:
        raise ErroDominio(f"Dobra em Z={ponto.z_crit} sem a orientação esperada para desdobrar.")
    k2 = ponto.e_merge
    alfa_f = math.asinh(ponto.t_merge / math.sqrt(k2))
    s, t = ponto.s_merge, ponto.t_merge
    # eps ~ (dE/ds) sqrt(2 F_Z dZ / F_ss)
    gama = (2.0 * s + 2.0 * t * t / s) * math.sqrt(2.0 * ponto.derivada_z / ponto.curvatura)
    c = gama / (2.0 * k2 * math.cosh(2.0 * alfa_f))
    delta = c * math.sqrt(dz)
    return ParametrosQuebrados.de_angulos(alfa_f - delta, alfa_f + delta, z)


def ramo_quebrado(ponto, z, passos=PASSOS_CONTINUACAO):
    """Caminho no regime quebrado da dobra até Z, semeado pelo desdobramento."""
    if z <= ponto.z_crit:
        raise ErroRegime(f"Z={z} abaixo da dobra Z={ponto.z_crit:.10g} do par {ponto.nu}; use 'spectrum'.")
    z_0 = ponto.z_crit + min(z - ponto.z_crit, DESLOCAMENTO_SEMENTE * max(1.0, ponto.z_crit))
    params, energia = resolver_quebrado(z_0, semente_quebrada(ponto, z_0))
    if z_0 == z:
        return [(z, params, energia)]
    return continuar_em_z(z_0, z, passos, params, origem=ponto.z_crit)


def solucao_quebrada(ponto, z, passos=PASSOS_CONTINUACAO):
    return ramo_quebrado(ponto, z, passos)[-1]


def ponto_critico_do_par(par):
    if int(par) != par or par < 0:
        raise ErroDominio(f"Par {par} inválido.")
    return sequencia_critica(int(par) + 1)[int(par)]

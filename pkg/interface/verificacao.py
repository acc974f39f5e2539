# Arquivo: interface/verificacao.py
"""Bateria de propriedades rodada pelo comando `verify`."""
import logging
from dataclasses import dataclass

import numpy as np

from modelo import DIRICHLET_CRITICOS, INTERVALOS_CRITICOS, PI
from modelo.erros import ErroEspectral
from modelo.parametros import Ramo
from modelo.secular import derivadas_na_curva, residuo_identidade, residuo_identidade_s
from espectro.perturbacao import ajustar_serie_numerica, coeficientes_impressos, coeficientes_serie
from espectro.varredura import espectro_real
from oraculo.contorno import raizes_determinante, solucao_nucleo
from oraculo.residuos import verificar_residuos, verificar_simetria_pt
from transicao.critico import raizes_do_par, ramo_quebrado, sequencia_critica
from transicao.quebrado import ParametrosQuebrados, resolver_quebrado
from transicao.tabela import reproduzir_tabela

logger = logging.getLogger(__name__)

SEMENTE = 20240917
TOL_IDENTIDADE = 1e-9
TOL_ZEROS = 1e-8
TOL_CONTORNO = 1e-8
TOL_SERIE = 1e-6
TOL_PT_EXATO = 1e-8
PT_QUEBRADO_MINIMO = 0.1
# folga extra em torno dos intervalos impressos (o terceiro é degenerado)
FOLGA_INTERVALOS = (0.0, 0.0, 1e-3, 1e-4, 0.0)
AMOSTRAS_T_SERIE = np.linspace(0.005, 0.05, 12)


@dataclass(frozen=True)
class Resultado:
    propriedade: str
    passou: bool
    detalhe: str


@dataclass(frozen=True)
class NivelVerificacao:
    pontos_identidade: int
    acoplamentos_zeros: tuple    # (Z, N) com janela (N + 1/2) pi
    dobras: int


NIVEIS = {
    "quick": NivelVerificacao(pontos_identidade=10_000, acoplamentos_zeros=((3.0, 2), (5.0, 2)), dobras=2),
    "full": NivelVerificacao(pontos_identidade=10_000,
                             acoplamentos_zeros=((0.5, 1), (3.0, 2), (5.0, 2), (10.0, 2), (17.0, 2)),
                             dobras=5),
}


def identidade_fatoracao(nivel, _contexto):
    rng = np.random.default_rng(SEMENTE)
    t = rng.uniform(1e-3, 20.0, nivel.pontos_identidade)
    z = rng.uniform(0.0, 100.0, nivel.pontos_identidade)
    pior = float(np.max(residuo_identidade(t, z)))
    return pior <= TOL_IDENTIDADE, f"max resíduo relativo {pior:.2e}"


def identidade_representacao_s(nivel, _contexto):
    rng = np.random.default_rng(SEMENTE + 1)
    # mesma nuvem (t, Z) da fatoração, levada para s = Z/(2t)
    t = rng.uniform(1e-3, 20.0, nivel.pontos_identidade)
    z = rng.uniform(0.0, 100.0, nivel.pontos_identidade)
    s = z / (2.0 * t)
    pior = float(np.max(residuo_identidade_s(s, z)))
    return pior <= TOL_IDENTIDADE, f"max resíduo relativo {pior:.2e}"


def equivalencia_zeros(nivel, _contexto):
    detalhes = []
    passou = True
    for z, janela in nivel.acoplamentos_zeros:
        s_max = (janela + 0.5) * PI
        secular = sorted(p.energia for p in espectro_real(z, s_max))
        determinante = raizes_determinante(z, s_max)
        if len(secular) != len(determinante):
            passou = False
            detalhes.append(f"Z={z}: {len(secular)} raízes seculares vs {len(determinante)} do determinante")
            continue
        desvio = max((abs(a - b) for a, b in zip(secular, determinante)), default=0.0)
        contorno = max((verificar_residuos(solucao_nucleo(e, z), e, z).maximo_contorno for e in secular),
                       default=0.0)
        passou &= desvio <= TOL_ZEROS and contorno <= TOL_CONTORNO
        detalhes.append(f"Z={z}: {len(secular)} raízes, dE {desvio:.1e}, contorno {contorno:.1e}")
    return passou, "; ".join(detalhes)


def serie_contra_ajuste(_nivel, _contexto):
    pior = 0.0
    c2_identico = True
    for n in (1, 2, 3):
        for ramo in Ramo:
            derivados = coeficientes_serie(n, ramo, 4)
            ajuste = ajustar_serie_numerica(n, ramo, AMOSTRAS_T_SERIE, 4)
            for a, b in zip(derivados.coeficientes, ajuste.coeficientes):
                pior = max(pior, abs(a - b) / abs(a))
            c2_identico &= derivados.c2 == coeficientes_impressos(n, ramo).c2
    return pior <= TOL_SERIE and c2_identico, f"max desvio relativo {pior:.2e}, c2 impresso idêntico: {c2_identico}"


def certificados_dobra(nivel, contexto):
    pontos = contexto["dobras"]
    detalhes = []
    passou = True
    for ponto, (lo, hi), folga in zip(pontos, INTERVALOS_CRITICOS, FOLGA_INTERVALOS):
        f, f_s, f_ss = derivadas_na_curva(ponto.s_merge, ponto.z_crit, ponto.ramo)
        dentro = lo - folga <= ponto.z_crit <= hi + folga
        ok = abs(f) <= 1e-10 and abs(f_s) <= 1e-10 and abs(f_ss) >= 1e-4 and dentro
        passou &= ok
        detalhes.append(f"Z{ponto.nu}={ponto.z_crit:.9f}{'' if ok else ' (falhou)'}")
    passou &= pontos[0].z_crit > DIRICHLET_CRITICOS[0][1]
    return passou, ", ".join(detalhes)


def tabela_referencia(_nivel, contexto):
    linhas = [linha for linha in reproduzir_tabela(contexto["dobras"][:2]) if not linha.proxima_dobra]
    suspeitas = [f"{linha.z:g}" for linha in linhas if linha.suspeita]
    return not suspeitas, f"{len(linhas)} linhas conferidas" + (f", fora da tolerância: {', '.join(suspeitas)}" if suspeitas else "")


def quebra_de_simetria(_nivel, contexto):
    z_exato = 2.0
    pior_exato = max(verificar_simetria_pt(solucao_nucleo(p.energia, z_exato), z_exato)
                     for p in espectro_real(z_exato, 2.5 * PI))

    dobra = contexto["dobras"][0]
    caminho = ramo_quebrado(dobra, 6.5)
    eps_positivo = all(energia.eps > 0 for _, _, energia in caminho)
    _, _, energia_6 = ramo_quebrado(dobra, 6.0)[-1]
    quebrado = verificar_simetria_pt(solucao_nucleo(energia_6.valor, 6.0), 6.0, energia_6.valor)

    # abaixo da dobra o par real resolve a equação complexa com alfa = beta
    z_abaixo = dobra.z_crit - 1e-3
    raiz = raizes_do_par(dobra, z_abaixo)[0]
    params, energia = resolver_quebrado(z_abaixo, ParametrosQuebrados.do_regime_exato(raiz.params, z_abaixo))
    simetrico = abs(params.alfa - params.beta) <= 1e-4 and abs(energia.eps) <= 1e-4 * energia.re_e

    passou = pior_exato <= TOL_PT_EXATO and quebrado >= PT_QUEBRADO_MINIMO and eps_positivo and simetrico
    return passou, (f"PT exato {pior_exato:.1e}, PT quebrado {quebrado:.2f}, eps>0 no caminho: {eps_positivo}, "
                    f"alfa=beta abaixo da dobra: {simetrico}")


PROPRIEDADES = (
    ("identidade_fatoracao", identidade_fatoracao),
    ("identidade_representacao_s", identidade_representacao_s),
    ("equivalencia_zeros", equivalencia_zeros),
    ("serie_contra_ajuste", serie_contra_ajuste),
    ("certificados_dobra", certificados_dobra),
    ("tabela_referencia", tabela_referencia),
    ("quebra_de_simetria", quebra_de_simetria),
)


def executar_verificacao(nivel="quick"):
    configuracao = NIVEIS[nivel]
    contexto = {"dobras": sequencia_critica(configuracao.dobras)}
    resultados = []
    for nome, propriedade in PROPRIEDADES:
        try:
            passou, detalhe = propriedade(configuracao, contexto)
        except ErroEspectral as erro:
            passou, detalhe = False, f"{type(erro).__name__}: {erro}"
        logger.info("%s: %s (%s)", nome, "PASS" if passou else "FAIL", detalhe)
        resultados.append(Resultado(propriedade=nome, passou=bool(passou), detalhe=detalhe))
    return resultados

# Arquivo: interface/comandos.py
import argparse
import logging
import math
import platform
import re
import sys
import time

import numpy as np
import scipy

from modelo import MAX_PARES_CRITICOS, PI, VERSAO_PROGRAMA
from modelo.erros import ErroConvergencia, ErroDominio, ErroEspectral, ErroRegime
from modelo.secular import secular_t
from espectro.varredura import espectro_real
from interface.saida import RegistroSaida, emitir
from interface.verificacao import NIVEIS, executar_verificacao
from transicao.critico import ponto_critico_do_par, sequencia_critica, solucao_quebrada
from transicao.tabela import reproduzir_tabela

logger = logging.getLogger(__name__)

SAIDA_OK = 0
SAIDA_FALHA_VERIFICACAO = 1
SAIDA_NAO_CONVERGIU = 2
SAIDA_USO = 64

MAX_PONTOS_EIXO = 4096
FIG1_Z = 5.0
FIG1_PONTOS = "1000"
FIG2_GRADE = "200x200"
JANELA_T = (0.05, 3.0)
JANELA_Z = (0.0, 20.0)


class AnalisadorArgumentos(argparse.ArgumentParser):
    """Erros de uso saem com o código 64 em vez do 2 padrão do argparse."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(SAIDA_USO, f"{self.prog}: erro: {message}\n")


# --- Tipos de argumento ---
def _real_finito(texto):
    try:
        valor = float(texto)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{texto}' não é um número.") from None
    if not math.isfinite(valor):
        raise argparse.ArgumentTypeError(f"'{texto}' precisa ser finito.")
    return valor


def acoplamento(texto):
    valor = _real_finito(texto)
    if valor < 0:
        raise argparse.ArgumentTypeError(f"Z={valor} precisa ser >= 0.")
    return valor


def limite_s(texto):
    valor = _real_finito(texto)
    if valor < PI:
        raise argparse.ArgumentTypeError(f"smax={valor} precisa ser >= pi.")
    return valor


def quantidade_dobras(texto):
    try:
        valor = int(texto)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{texto}' não é inteiro.") from None
    if not 1 <= valor <= MAX_PARES_CRITICOS:
        raise argparse.ArgumentTypeError(f"count={valor} fora de [1, {MAX_PARES_CRITICOS}].")
    return valor


def indice_par(texto):
    try:
        valor = int(texto)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{texto}' não é inteiro.") from None
    if not 0 <= valor < MAX_PARES_CRITICOS:
        raise argparse.ArgumentTypeError(f"pair={valor} fora de [0, {MAX_PARES_CRITICOS - 1}].")
    return valor


def grade(texto):
    """'N' ou 'NxM', com 1 <= N, M <= 4096."""
    casamento = re.fullmatch(r"\s*(\d+)\s*(?:[xX]\s*(\d+)\s*)?", texto)
    if not casamento:
        raise argparse.ArgumentTypeError(f"Grade '{texto}' malformada: use N ou NxM.")
    dimensoes = tuple(int(g) for g in casamento.groups() if g is not None)
    if len(dimensoes) == 1:
        dimensoes = (dimensoes[0], 1)
    if not all(1 <= d <= MAX_PONTOS_EIXO for d in dimensoes):
        raise argparse.ArgumentTypeError(f"Grade '{texto}' fora de [1, {MAX_PONTOS_EIXO}] por eixo.")
    return dimensoes


# --- Comandos ---
def cmd_spectrum(args):
    registro = RegistroSaida("spectrum", _entradas(args), ["n", "branch", "s", "t", "E", "residual"])
    for ponto in espectro_real(args.Z, args.smax):
        registro.adicionar(n=ponto.n, branch=ponto.ramo.value, s=ponto.s, t=ponto.t, E=ponto.energia,
                           residual=ponto.residuo)
    return registro, SAIDA_OK


def cmd_critical(args):
    registro = RegistroSaida("critical", _entradas(args), ["nu", "Z_crit", "s_merge", "E_merge", "branch"])
    for ponto in sequencia_critica(args.count):
        registro.adicionar(nu=ponto.nu, Z_crit=ponto.z_crit, s_merge=ponto.s_merge, E_merge=ponto.e_merge,
                           branch=ponto.ramo.value)
    return registro, SAIDA_OK


def cmd_broken(args):
    ponto = ponto_critico_do_par(args.pair)
    if args.Z <= ponto.z_crit:
        raise ErroRegime(f"Z={args.Z} não passa da dobra do par {args.pair} (Z_crit={ponto.z_crit:.10g}): "
                         "o par ainda é real, use o comando 'spectrum'.")
    z, params, energia = solucao_quebrada(ponto, args.Z)
    registro = RegistroSaida("broken", _entradas(args), ["Z", "alpha", "beta", "K", "ReE", "eps"])
    registro.adicionar(Z=z, alpha=params.alfa, beta=params.beta, K=params.K, ReE=energia.re_e, eps=energia.eps)
    return registro, SAIDA_OK


def cmd_table1(args):
    colunas = ["Z", "pair", "regime", "alpha", "beta", "ReE", "eps", "alpha_printed", "beta_printed",
               "ReE_printed", "d_alpha", "d_beta", "d_ReE", "near_fold", "flag"]
    registro = RegistroSaida("table1", _entradas(args), colunas)
    for linha in reproduzir_tabela():
        registro.adicionar(Z=linha.z, pair=linha.par, regime=linha.regime, alpha=linha.alfa, beta=linha.beta,
                           ReE=linha.re_e, eps=linha.eps, alpha_printed=linha.alfa_impresso,
                           beta_printed=linha.beta_impresso, ReE_printed=linha.re_e_impresso,
                           d_alpha=linha.desvio_alfa, d_beta=linha.desvio_beta, d_ReE=linha.desvio_re_e,
                           near_fold=linha.proxima_dobra, flag="SUSPECT" if linha.suspeita else "OK")
    return registro, SAIDA_OK


def _eixo(intervalo, pontos):
    lo, hi = intervalo
    if pontos == 1:
        return np.array([(lo + hi) / 2.0])
    return np.linspace(lo, hi, pontos)


def cmd_fig(args):
    t_range = tuple(args.t_range or JANELA_T)
    if t_range[0] <= 0 or t_range[1] <= t_range[0]:
        raise ErroDominio(f"Intervalo de t {t_range} inválido: precisa de 0 < t_min < t_max.")
    if args.which == 1:
        n_t, _ = args.grid or grade(FIG1_PONTOS)
        eixo_t = _eixo(t_range, n_t)
        registro = RegistroSaida("fig", _entradas(args), ["t", "secular_t"],
                                 notas=[f"secular_t(t, Z) em representação t com Z={args.Z:g}"])
        for t, valor in zip(eixo_t, secular_t(eixo_t, args.Z)):
            registro.adicionar(t=float(t), secular_t=float(valor))
        return registro, SAIDA_OK

    z_range = tuple(args.z_range or JANELA_Z)
    if z_range[0] < 0 or z_range[1] < z_range[0]:
        raise ErroDominio(f"Intervalo de Z {z_range} inválido: precisa de 0 <= Z_min <= Z_max.")
    n_t, n_z = args.grid or grade(FIG2_GRADE)
    eixo_t, eixo_z = _eixo(t_range, n_t), _eixo(z_range, n_z)
    malha_t, malha_z = np.meshgrid(eixo_t, eixo_z)
    sinais = np.sign(secular_t(malha_t, malha_z)).astype(int)
    registro = RegistroSaida("fig", _entradas(args), ["t", "Z", "sign"],
                             notas=["eixos: t na horizontal, Z na vertical",
                                    "sign = sinal de secular_t(t, Z); a fronteira entre -1 e +1 é o conjunto de zeros"])
    for i, z in enumerate(eixo_z):
        for j, t in enumerate(eixo_t):
            registro.adicionar(t=float(t), Z=float(z), sign=int(sinais[i, j]))
    return registro, SAIDA_OK


def cmd_verify(args):
    registro = RegistroSaida("verify", _entradas(args), ["property", "status", "detail"])
    resultados = executar_verificacao(args.level)
    for resultado in resultados:
        registro.adicionar(property=resultado.propriedade, status="PASS" if resultado.passou else "FAIL",
                           detail=resultado.detalhe)
    codigo = SAIDA_OK if all(r.passou for r in resultados) else SAIDA_FALHA_VERIFICACAO
    return registro, codigo


# --- Montagem do analisador ---
def _entradas(args):
    return {chave: valor for chave, valor in vars(args).items() if chave not in ("funcao", "verbose", "meta", "out")}


def criar_analisador():
    comum = argparse.ArgumentParser(add_help=False)
    comum.add_argument("--format", choices=("csv", "json"), default="csv", help="Formato da saída.")
    comum.add_argument("--out", default=None, help="Arquivo de saída (padrão: saída padrão).")
    comum.add_argument("--meta", action="store_true", help="Anexa metadados da execução.")
    comum.add_argument("--verbose", action="store_true", help="Log em nível DEBUG.")

    analisador = AnalisadorArgumentos(prog="pocopt", description="Espectro do poço quadrado periódico PT-simétrico.")
    sub = analisador.add_subparsers(dest="comando", required=True)

    spectrum = sub.add_parser("spectrum", parents=[comum], help="Autovalores reais até smax.")
    spectrum.add_argument("--Z", type=acoplamento, required=True)
    spectrum.add_argument("--smax", type=limite_s, required=True)
    spectrum.set_defaults(funcao=cmd_spectrum)

    critical = sub.add_parser("critical", parents=[comum], help="Primeiros acoplamentos críticos.")
    critical.add_argument("--count", type=quantidade_dobras, required=True)
    critical.set_defaults(funcao=cmd_critical)

    broken = sub.add_parser("broken", parents=[comum], help="Par complexo acima da dobra.")
    broken.add_argument("--Z", type=acoplamento, required=True)
    broken.add_argument("--pair", type=indice_par, default=0)
    broken.set_defaults(funcao=cmd_broken)

    table1 = sub.add_parser("table1", parents=[comum], help="Recalcula a tabela de referência.")
    table1.set_defaults(funcao=cmd_table1)

    fig = sub.add_parser("fig", parents=[comum], help="Dados das figuras (sem renderizar).")
    fig.add_argument("--which", type=int, choices=(1, 2), required=True)
    fig.add_argument("--grid", type=grade, default=None)
    fig.add_argument("--t-range", dest="t_range", type=_real_finito, nargs=2, default=None)
    fig.add_argument("--z-range", dest="z_range", type=_real_finito, nargs=2, default=None)
    fig.add_argument("--Z", type=acoplamento, default=FIG1_Z)
    fig.set_defaults(funcao=cmd_fig)

    verify = sub.add_parser("verify", parents=[comum], help="Roda a bateria de propriedades.")
    verify.add_argument("--level", choices=tuple(NIVEIS), default="quick")
    verify.set_defaults(funcao=cmd_verify)
    return analisador


def _metadados(inicio):
    return {
        "version": VERSAO_PROGRAMA,
        "python": platform.python_version(),
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "wall_time_s": time.perf_counter() - inicio,
    }


def main(argv=None):
    inicio = time.perf_counter()
    analisador = criar_analisador()
    try:
        args = analisador.parse_args(argv)
    except SystemExit as saida:
        return saida.code if isinstance(saida.code, int) else SAIDA_USO
    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    try:
        registro, codigo = args.funcao(args)
    except ErroDominio as erro:
        print(f"erro: {erro}", file=sys.stderr)
        return SAIDA_USO
    except (ErroRegime, ErroConvergencia) as erro:
        print(f"erro: {erro}", file=sys.stderr)
        return SAIDA_NAO_CONVERGIU
    except ErroEspectral as erro:
        logger.exception("Falha inesperada no comando %s", args.comando)
        print(f"erro: {erro}", file=sys.stderr)
        return SAIDA_NAO_CONVERGIU

    meta = _metadados(inicio) if args.meta else None
    try:
        emitir(registro.renderizar(args.format, meta), args.out, sys.stdout)
    except OSError as erro:
        print(f"erro: não foi possível escrever {args.out}: {erro}", file=sys.stderr)
        return SAIDA_USO
    return codigo

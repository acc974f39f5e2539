# Arquivo: transicao/tabela.py
import logging
import math
from dataclasses import dataclass

from modelo import LINHAS_PROXIMAS_DOBRA, TABELA_REFERENCIA
from transicao.critico import raizes_do_par, sequencia_critica, solucao_quebrada

logger = logging.getLogger(__name__)

TOL_ANGULO = 1e-5
TOL_ENERGIA_RELATIVA = 1e-4
Z_SEPARACAO_PARES = 10.0   # linhas abaixo pertencem ao par 0, acima ao par 1


@dataclass(frozen=True)
class LinhaTabela:
    z: float
    par: int
    regime: str
    alfa: float
    beta: float
    re_e: float
    eps: float
    alfa_impresso: float
    beta_impresso: float
    re_e_impresso: float

    @property
    def desvio_alfa(self):
        return abs(self.alfa - self.alfa_impresso)

    @property
    def desvio_beta(self):
        return abs(self.beta - self.beta_impresso)

    @property
    def desvio_re_e(self):
        return abs(self.re_e - self.re_e_impresso)

    @property
    def proxima_dobra(self):
        return self.z in LINHAS_PROXIMAS_DOBRA

    @property
    def suspeita(self):
        return (self.desvio_alfa > TOL_ANGULO or self.desvio_beta > TOL_ANGULO
                or self.desvio_re_e > TOL_ENERGIA_RELATIVA * abs(self.re_e_impresso))


def _linha_exata(ponto, z, alfa_p, beta_p, re_e_p):
    # abaixo da dobra: a raiz real do par mais próxima do alfa impresso
    candidatos = []
    for raiz in raizes_do_par(ponto, z):
        alfa = math.asinh(raiz.t / math.sqrt(raiz.energia))
        candidatos.append((abs(alfa - alfa_p), alfa, raiz.energia))
    _, alfa, energia = min(candidatos)
    return LinhaTabela(z=z, par=ponto.nu, regime="Exato", alfa=alfa, beta=alfa, re_e=energia, eps=0.0,
                       alfa_impresso=alfa_p, beta_impresso=beta_p, re_e_impresso=re_e_p)


def _linha_quebrada(ponto, z, alfa_p, beta_p, re_e_p):
    _, params, energia = solucao_quebrada(ponto, z)
    return LinhaTabela(z=z, par=ponto.nu, regime="Quebrado", alfa=params.alfa, beta=params.beta,
                       re_e=energia.re_e, eps=energia.eps,
                       alfa_impresso=alfa_p, beta_impresso=beta_p, re_e_impresso=re_e_p)


def reproduzir_tabela(pontos_criticos=None):
    """Recalcula cada linha da tabela de referência no seu Z impresso."""
    pontos = pontos_criticos or sequencia_critica(2)
    linhas = []
    for z, alfa_p, beta_p, re_e_p in TABELA_REFERENCIA:
        ponto = pontos[0] if z < Z_SEPARACAO_PARES else pontos[1]
        if z < ponto.z_crit:
            linha = _linha_exata(ponto, z, alfa_p, beta_p, re_e_p)
        else:
            linha = _linha_quebrada(ponto, z, alfa_p, beta_p, re_e_p)
        if linha.suspeita:
            logger.warning("Linha Z=%g SUSPEITA: dalfa=%.2e dbeta=%.2e dReE=%.2e", z,
                           linha.desvio_alfa, linha.desvio_beta, linha.desvio_re_e)
        linhas.append(linha)
    return linhas

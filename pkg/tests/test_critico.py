import pytest

from modelo import DIRICHLET_CRITICOS, INTERVALOS_CRITICOS, PI
from modelo.erros import ErroDominio, ErroRegime
from modelo.parametros import Ramo
from modelo.secular import derivadas_na_curva
from transicao.critico import (encontrar_raiz_dupla, minimo_no_intervalo, raizes_do_par, ramo_quebrado,
                               semente_quebrada, sequencia_critica, solucao_quebrada)
from transicao.quebrado import ParametrosQuebrados, resolver_quebrado


# --- Dobras ---
def test_duas_primeiras_dobras(dobras):
    (lo0, hi0), (lo1, hi1) = INTERVALOS_CRITICOS[:2]
    assert lo0 < dobras[0].z_crit < hi0
    assert lo1 < dobras[1].z_crit < hi1
    assert dobras[1].z_crit - dobras[0].z_crit == pytest.approx(12.3589, abs=1e-4)
    assert [p.nu for p in dobras] == [0, 1]


def test_pares_que_se_juntam(dobras):
    assert dobras[0].ramo is Ramo.FATOR_MENOS and dobras[0].intervalo == 0
    assert dobras[1].ramo is Ramo.FATOR_MAIS and dobras[1].intervalo == 1
    assert dobras[0].e_merge == pytest.approx(5.0441, abs=5e-4)
    assert dobras[0].s_merge == pytest.approx(2.504, abs=2e-3)
    assert dobras[0].t_merge == pytest.approx(1.107, abs=2e-3)


def test_certificado_de_dobra(dobras):
    for ponto in dobras:
        f, f_s, f_ss = derivadas_na_curva(ponto.s_merge, ponto.z_crit, ponto.ramo)
        assert abs(f) <= 1e-10
        assert abs(f_s) <= 1e-10
        assert abs(f_ss) >= 1e-4


def test_acima_do_poco_de_dirichlet(dobras):
    assert dobras[0].z_crit > DIRICHLET_CRITICOS[0][1]
    assert dobras[1].z_crit > DIRICHLET_CRITICOS[1][1]


@pytest.mark.parametrize("z, s, ramo, intervalo", [
    (5.5, 2.5, Ramo.FATOR_MENOS, 0),
    (17.9, 5.33, Ramo.FATOR_MAIS, 1),
])
def test_raiz_dupla_a_partir_de_palpite(z, s, ramo, intervalo):
    ponto = encontrar_raiz_dupla(z, s, ramo)
    lo, hi = INTERVALOS_CRITICOS[intervalo]
    assert lo < ponto.z_crit < hi
    assert ponto.s_merge ** 2 - ponto.t_merge ** 2 == pytest.approx(ponto.e_merge)


def test_raiz_dupla_com_palpite_colado_em_s_zero():
    # t = Z/(2s) passaria de 2700: sinh direto estouraria
    with pytest.raises(ErroDominio):
        encontrar_raiz_dupla(5.5, 1e-3, Ramo.FATOR_MENOS)


def test_minimo_muda_de_sinal_na_dobra(dobras):
    ponto = dobras[0]
    assert minimo_no_intervalo(ponto.z_crit - 1e-3, ponto.ramo, 0)[0] < 0
    assert minimo_no_intervalo(ponto.z_crit + 1e-3, ponto.ramo, 0)[0] > 0


@pytest.mark.parametrize("quantidade", [0, 17, 2.5])
def test_quantidade_invalida(quantidade):
    with pytest.raises(ErroDominio):
        sequencia_critica(quantidade)


def test_uma_dobra():
    (ponto,) = sequencia_critica(1)
    assert ponto.z_crit == pytest.approx(5.5423095, abs=1e-6)


@pytest.mark.slow
def test_cinco_dobras():
    pontos = sequencia_critica(5)
    folgas = (0.0, 0.0, 1e-3, 1e-4, 0.0)
    for ponto, (lo, hi), folga in zip(pontos, INTERVALOS_CRITICOS, folgas):
        assert lo - folga <= ponto.z_crit <= hi + folga
    assert all(a.z_crit < b.z_crit for a, b in zip(pontos, pontos[1:]))


# --- Abaixo da dobra ---
def test_raizes_do_par_abaixo_da_dobra(dobras):
    ponto = dobras[0]
    z = ponto.z_crit - 1e-3
    esquerda, direita = raizes_do_par(ponto, z)
    assert (esquerda.n, direita.n) == (0, 1)
    assert esquerda.s < ponto.s_merge < direita.s < PI
    assert esquerda.energia < ponto.e_merge < direita.energia


def test_consistencia_exato_quebrado(dobras):
    ponto = dobras[0]
    z = ponto.z_crit - 1e-3
    energias = []
    for raiz in raizes_do_par(ponto, z):
        params, energia = resolver_quebrado(z, ParametrosQuebrados.do_regime_exato(raiz.params, z))
        assert params.alfa == pytest.approx(params.beta, abs=1e-4)
        assert energia.re_e == pytest.approx(raiz.energia, rel=1e-5)
        energias.append(energia.re_e)
    assert energias[0] != pytest.approx(energias[1], rel=1e-3)


def test_raizes_do_par_acima_da_dobra(dobras):
    with pytest.raises(ErroRegime):
        raizes_do_par(dobras[0], 6.0)


# --- Acima da dobra ---
def test_semente_abre_em_raiz_quadrada(dobras):
    ponto = dobras[0]
    perto = semente_quebrada(ponto, ponto.z_crit + 1e-6)
    longe = semente_quebrada(ponto, ponto.z_crit + 4e-6)
    assert perto.beta > perto.alfa
    assert (longe.beta - longe.alfa) == pytest.approx(2 * (perto.beta - perto.alfa), rel=1e-6)


def test_semente_perto_da_solucao(dobras):
    ponto = dobras[0]
    z = ponto.z_crit + 1e-5
    semente = semente_quebrada(ponto, z)
    params, _ = resolver_quebrado(z, semente)
    assert params.beta - params.alfa == pytest.approx(semente.beta - semente.alfa, rel=5e-2)


@pytest.mark.parametrize("z, alfa, beta, re_e", [
    (5.55, 0.457619, 0.492438, 5.044371),
    (6.0, 0.358129, 0.622216, 5.062183),
    (6.5, 0.318347, 0.693565, 5.083353),
])
def test_linhas_do_primeiro_par(dobras, z, alfa, beta, re_e):
    _, params, energia = solucao_quebrada(dobras[0], z)
    assert params.alfa == pytest.approx(alfa, abs=1e-5)
    assert params.beta == pytest.approx(beta, abs=1e-5)
    assert energia.re_e == pytest.approx(re_e, rel=1e-4)


@pytest.mark.parametrize("z, alfa, beta, re_e", [
    (17.95, 0.308679, 0.344308, 25.61228),
    (19.0, 0.253831, 0.422062, 25.71469),
])
def test_linhas_do_segundo_par(dobras, z, alfa, beta, re_e):
    _, params, energia = solucao_quebrada(dobras[1], z)
    assert params.alfa == pytest.approx(alfa, abs=1e-5)
    assert params.beta == pytest.approx(beta, abs=1e-5)
    assert energia.re_e == pytest.approx(re_e, rel=1e-4)


def test_eps_positivo_no_caminho(dobras):
    caminho = ramo_quebrado(dobras[0], 6.5)
    assert caminho[0][0] > dobras[0].z_crit
    assert all(energia.eps > 0 for _, _, energia in caminho)
    assert all(a[0] < b[0] for a, b in zip(caminho, caminho[1:]))


def test_energia_continua_atraves_da_dobra(dobras):
    ponto = dobras[0]
    _, _, energia = solucao_quebrada(ponto, ponto.z_crit + 1e-6)
    assert energia.re_e == pytest.approx(ponto.e_merge, rel=1e-4)


def test_ramo_quebrado_abaixo_da_dobra(dobras):
    with pytest.raises(ErroRegime):
        ramo_quebrado(dobras[0], 5.0)
    with pytest.raises(ErroRegime):
        semente_quebrada(dobras[0], dobras[0].z_crit)

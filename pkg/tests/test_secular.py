import math

import numpy as np
import pytest

from modelo import PI
from modelo.erros import ErroDominio
from modelo.parametros import ParametrosExatos, Ramo, energia_de
from modelo.secular import (derivadas_na_curva, fator_na_curva, fator_secular, residuo_identidade,
                            residuo_identidade_s, secular_s, secular_t, t_sinh_t)
from espectro.varredura import espectro_real


# --- Representação t ---
def test_secular_t_sem_acoplamento_e_16_sinh2():
    assert secular_t(1.0, 0.0) == pytest.approx(16.0 * math.sinh(1.0) ** 2, rel=1e-12)


def test_secular_t_primeiro_termo_domina():
    assert secular_t(3.0, 5.0) > 0


def test_secular_t_se_anula_nas_raizes():
    for ponto in espectro_real(5.0, 12.0):
        escala = 16.0 * ponto.t ** 2 * math.sinh(ponto.t) ** 2
        assert abs(secular_t(ponto.t, 5.0)) <= 1e-9 * max(1.0, escala)


def test_secular_t_positivo_para_t_grande():
    t, z = np.meshgrid(np.linspace(10.0, 60.0, 51), np.linspace(0.0, 100.0, 41))
    assert np.all(secular_t(t, z) > 0)


@pytest.mark.parametrize("t", [0.0, -1.0])
def test_secular_t_recusa_t_nao_positivo(t):
    with pytest.raises(ErroDominio):
        secular_t(t, 1.0)


# --- Representação s ---
def test_secular_s_sem_acoplamento():
    assert secular_s(PI, 0.0) == pytest.approx(0.0, abs=1e-12)
    assert secular_s(PI / 2, 0.0) == pytest.approx(-4.0 * PI ** 2, rel=1e-12)


def test_secular_s_se_anula_nas_raizes():
    for ponto in espectro_real(0.1, 10.0):
        if ponto.n == 0:
            continue
        assert abs(secular_s(ponto.s, 0.1)) <= 1e-9 * 16.0 * ponto.s ** 2


def test_secular_s_recusa_s_nao_positivo():
    with pytest.raises(ErroDominio):
        secular_s(0.0, 1.0)


# --- Forma fatorada ---
def test_fator_no_limite_hermitiano():
    assert fator_secular(ParametrosExatos(t=0.0, s=PI), Ramo.FATOR_MENOS) == pytest.approx(0.0, abs=1e-12)
    assert fator_secular(ParametrosExatos(t=0.0, s=PI / 2), Ramo.FATOR_MENOS) == pytest.approx(-PI / 2)


def test_fator_mais_em_um():
    valor = fator_secular(ParametrosExatos(t=1.0, s=1.0), Ramo.FATOR_MAIS)
    assert valor == pytest.approx(math.sinh(1.0) + math.sin(1.0), rel=1e-14)


def test_t_sinh_t_par():
    for t in [0.3, 2.0, 7.5, 400.0]:
        assert t_sinh_t(-t) == t_sinh_t(t)


@pytest.mark.parametrize("t, s", [(-0.5, 1.0), (1.0, -0.1), (float("nan"), 1.0), (1.0, float("inf"))])
def test_parametros_exatos_invalidos(t, s):
    with pytest.raises(ErroDominio):
        ParametrosExatos(t=t, s=s)


def test_parametros_exatos_vetoriais():
    assert ParametrosExatos(t=np.array([0.0, 1.0]), s=np.array([PI, 2.0])).energia.shape == (2,)
    with pytest.raises(ErroDominio):
        ParametrosExatos(t=np.array([1.0, -1.0]), s=np.array([1.0, 1.0]))


def test_t_sinh_t_no_dominio_logaritmico():
    assert np.isfinite(t_sinh_t(400.0))
    assert np.isfinite(t_sinh_t(2000.0))
    assert t_sinh_t(400.0) == pytest.approx(math.exp(math.log(400.0) + 400.0 - math.log(2.0)), rel=1e-12)


# --- Identidades entre representações ---
@pytest.mark.parametrize("t, z, tol", [(1.0, 0.0, 1e-12), (0.5, 5.0, 1e-9), (2.0, 17.9, 1e-9)])
def test_residuo_identidade_pontual(t, z, tol):
    assert residuo_identidade(t, z) <= tol


def test_identidade_em_pontos_aleatorios():
    rng = np.random.default_rng(7)
    t = rng.uniform(1e-3, 20.0, 10_000)
    z = rng.uniform(0.0, 100.0, 10_000)
    assert np.max(residuo_identidade(t, z)) <= 1e-9


def test_identidade_na_representacao_s():
    rng = np.random.default_rng(11)
    t = rng.uniform(1e-3, 20.0, 10_000)
    z = rng.uniform(0.0, 100.0, 10_000)
    assert np.max(residuo_identidade_s(z / (2.0 * t), z)) <= 1e-9


def test_identidade_s_recusa_estouro():
    # t = Z/(2s) = 5e4: os dois lados passam de 1e308
    with pytest.raises(ErroDominio):
        residuo_identidade_s(1e-3, 100.0)
    with pytest.raises(ErroDominio):
        residuo_identidade_s(np.array([1.0, 1e-3]), np.array([1.0, 100.0]))


def test_derivadas_recusam_s_minusculo():
    with pytest.raises(ErroDominio):
        derivadas_na_curva(1e-3, 5.5, Ramo.FATOR_MENOS)
    f, f_s, f_ss = derivadas_na_curva(2.5, 5.5, Ramo.FATOR_MENOS)
    assert f == pytest.approx(fator_na_curva(2.5, 5.5, Ramo.FATOR_MENOS), rel=1e-12)
    assert all(map(math.isfinite, (f, f_s, f_ss)))


# --- Energia ---
def test_energia_de():
    assert energia_de(ParametrosExatos(t=0.0, s=PI)) == pytest.approx(PI ** 2)
    assert energia_de(ParametrosExatos(t=1.3, s=1.3)) == 0.0


def test_energia_na_dobra_reconstruida_da_tabela():
    k2, alfa = 5.041586, 0.474944
    params = ParametrosExatos(t=math.sqrt(k2) * math.sinh(alfa), s=math.sqrt(k2) * math.cosh(alfa))
    assert params.energia == pytest.approx(k2, rel=1e-12)


def test_restricao():
    params = ParametrosExatos.na_restricao(2.5, 5.0)
    assert params.t == 1.0
    assert params.satisfaz_restricao(5.0)
    with pytest.raises(ErroDominio):
        ParametrosExatos.na_restricao(0.0, 5.0)


def test_ramo_de_rotulo():
    assert Ramo.de_rotulo("FatorMais") is Ramo.FATOR_MAIS
    assert Ramo.de_rotulo("FATOR_MENOS") is Ramo.FATOR_MENOS
    with pytest.raises(ErroDominio):
        Ramo.de_rotulo("outro")

import math

import numpy as np
import pytest

from modelo.erros import ErroDominio
from espectro.varredura import espectro_real
from transicao.quebrado import (ParametrosQuebrados, continuar_em_z, energia_complexa, grade_z,
                                residuo_escalado, resolver_quebrado, secular_quebrado,
                                secular_quebrado_reduzido)


def _tabela(alfa, beta, z):
    return ParametrosQuebrados.de_angulos(alfa, beta, z)


# --- Parametrização ---
def test_k_construido_de_z():
    params = _tabela(0.358129, 0.622216, 6.0)
    assert params.K ** 2 * (math.sinh(2 * params.alfa) + math.sinh(2 * params.beta)) == pytest.approx(12.0)


def test_energia_complexa_em_z6():
    energia = energia_complexa(_tabela(0.358129, 0.622216, 6.0))
    assert energia.re_e == pytest.approx(5.062183, rel=1e-4)
    assert energia.eps == pytest.approx(2.056095, rel=5e-4)
    assert energia.valor == complex(energia.re_e, energia.eps)


@pytest.mark.parametrize("alfa, beta, z", [(0.0, 0.5, 6.0), (0.5, -0.1, 6.0), (0.3, 0.5, 0.0)])
def test_de_angulos_invalidos(alfa, beta, z):
    with pytest.raises(ErroDominio):
        ParametrosQuebrados.de_angulos(alfa, beta, z)


# --- Equação secular complexa ---
@pytest.mark.parametrize("alfa, beta, z", [
    (0.474944, 0.474944, 5.542309),
    (0.358129, 0.622216, 6.0),
    (0.318347, 0.693565, 6.5),
    (0.253831, 0.422062, 19.0),
])
def test_linhas_da_tabela_anulam_a_equacao(alfa, beta, z):
    assert residuo_escalado(_tabela(alfa, beta, z), z) <= 1e-4


def test_regime_exato_resolve_a_equacao_complexa():
    z = 3.0
    for ponto in espectro_real(z, 10.0):
        params = ParametrosQuebrados.do_regime_exato(ponto.params, z)
        assert params.simetrico
        assert params.K ** 2 == pytest.approx(ponto.energia, rel=1e-12)
        assert residuo_escalado(params, z) <= 1e-8
        assert params.para_exatos().s == pytest.approx(ponto.s, rel=1e-12)


def test_troca_conjuga_a_forma_reduzida():
    z = 6.0
    params = _tabela(0.358129, 0.622216, z)
    direto = secular_quebrado_reduzido(params, z)
    trocado = secular_quebrado_reduzido(params.trocados(), z)
    assert abs(trocado - direto.conjugate()) <= 1e-12 * max(1.0, abs(direto))
    assert abs(secular_quebrado(params, z)) > 0


def test_troca_inverte_eps():
    params = _tabela(0.3, 0.7, 6.0)
    direto, trocado = energia_complexa(params), energia_complexa(params.trocados())
    assert trocado.re_e == direto.re_e
    assert trocado.eps == -direto.eps
    assert trocado == direto.conjugada()


# --- Newton ---
def test_resolver_parte_da_linha_impressa():
    params, energia = resolver_quebrado(6.0, _tabela(0.358, 0.622, 6.0))
    assert params.alfa == pytest.approx(0.358129, abs=1e-5)
    assert params.beta == pytest.approx(0.622216, abs=1e-5)
    assert energia.re_e == pytest.approx(5.062183, rel=1e-4)
    assert residuo_escalado(params, 6.0) <= 1e-12


def test_resolver_no_regime_exato_fica_simetrico():
    ponto = espectro_real(3.0, 5.0)[-1]
    params, energia = resolver_quebrado(3.0, ParametrosQuebrados.do_regime_exato(ponto.params, 3.0))
    assert params.alfa == pytest.approx(params.beta, abs=1e-10)
    assert energia.eps == pytest.approx(0.0, abs=1e-8)
    assert energia.re_e == pytest.approx(ponto.energia, rel=1e-10)


# --- Continuação ---
def test_continuacao_ate_6_5():
    caminho = continuar_em_z(5.55, 6.5, 20, _tabela(0.457619, 0.492438, 5.55))
    z, params, energia = caminho[-1]
    assert len(caminho) == 21
    assert z == pytest.approx(6.5)
    assert params.alfa == pytest.approx(0.318347, abs=1e-5)
    assert params.beta == pytest.approx(0.693565, abs=1e-5)
    assert energia.re_e == pytest.approx(5.083353, rel=1e-4)
    assert all(e.eps > 0 for _, _, e in caminho)


def test_continuacao_do_segundo_par():
    _, params, energia = continuar_em_z(17.95, 19.0, 20, _tabela(0.308679, 0.344308, 17.95))[-1]
    assert params.alfa == pytest.approx(0.253831, abs=1e-5)
    assert params.beta == pytest.approx(0.422062, abs=1e-5)
    assert energia.re_e == pytest.approx(25.71469, rel=1e-4)


def test_continuacao_degenerada():
    inicial = _tabela(0.358, 0.622, 6.0)
    caminho = continuar_em_z(6.0, 6.0, 20, inicial)
    assert len(caminho) == 1
    assert caminho[0][1:] == resolver_quebrado(6.0, inicial)


def test_grade_z():
    assert np.allclose(grade_z(1.0, 2.0, 4), [1.0, 1.25, 1.5, 1.75, 2.0])
    geometrica = grade_z(1.0, 2.0, 4, origem=0.5)
    assert geometrica[0] == pytest.approx(1.0) and geometrica[-1] == pytest.approx(2.0)
    razoes = np.diff(np.log(geometrica - 0.5))
    assert np.allclose(razoes, razoes[0])
    with pytest.raises(ErroDominio):
        grade_z(1.0, 2.0, 4, origem=1.5)
    with pytest.raises(ErroDominio):
        grade_z(1.0, 2.0, 0)


import pytest

from modelo import TABELA_REFERENCIA
from transicao.tabela import LinhaTabela, reproduzir_tabela


@pytest.fixture(scope="module")
def linhas(dobras):
    return {linha.z: linha for linha in reproduzir_tabela(dobras)}


def test_todas_as_linhas(linhas):
    assert sorted(linhas) == sorted(z for z, *_ in TABELA_REFERENCIA)


@pytest.mark.parametrize("z", [5.55, 6.0, 6.5, 17.95, 19.0])
def test_linhas_longe_da_dobra_confirmadas(linhas, z):
    linha = linhas[z]
    assert linha.regime == "Quebrado"
    assert not linha.proxima_dobra
    assert not linha.suspeita
    assert linha.desvio_re_e <= 1e-4 * linha.re_e_impresso


def test_linhas_abaixo_da_dobra_sao_reais(linhas, dobras):
    for z in (5.542309, 17.90123):
        linha = linhas[z]
        assert z < dobras[linha.par].z_crit
        assert linha.regime == "Exato"
        assert linha.alfa == linha.beta
        assert linha.eps == 0.0
        assert not linha.proxima_dobra


def test_linha_17_90123_perto_do_valor_impresso(linhas):
    # a dobra fica a menos de 1e-5 em Z: o ângulo varia como raiz quadrada da distância
    assert linhas[17.90123].alfa == pytest.approx(0.325829, abs=5e-3)


def test_pares_atribuidos(linhas):
    assert all(linha.par == (0 if z < 10 else 1) for z, linha in linhas.items())


def test_energia_do_lado_quebrado_continua(linhas):
    # acima da dobra ReE parte da energia de junção (~5.0441), não de 5.041586
    assert linhas[5.54232].re_e == pytest.approx(5.044078, rel=1e-4)
    assert linhas[5.54232].regime == "Quebrado"


def test_suspeita_por_desvio():
    linha = LinhaTabela(z=1.0, par=0, regime="Exato", alfa=0.5, beta=0.5, re_e=5.0, eps=0.0,
                        alfa_impresso=0.5, beta_impresso=0.5001, re_e_impresso=5.0)
    assert linha.desvio_beta == pytest.approx(1e-4)
    assert linha.suspeita
    assert not linha.proxima_dobra

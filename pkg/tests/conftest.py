import pytest

from transicao.critico import sequencia_critica


@pytest.fixture(scope="session")
def dobras():
    # as duas primeiras dobras, reaproveitadas por vários módulos de teste
    return sequencia_critica(2)

class ErroEspectral(Exception):
    """Base de todos os erros numéricos do projeto."""


class ErroDominio(ErroEspectral, ValueError):
    pass


class ErroSemMudancaSinal(ErroEspectral, ValueError):
    pass


class ErroNaoAutovalor(ErroEspectral, ValueError):
    pass


class ErroCondicionamento(ErroEspectral, ValueError):
    pass


class ErroRegime(ErroEspectral, ValueError):
    """Pedido de solução quebrada abaixo da dobra do par."""


class ErroConvergencia(ErroEspectral, RuntimeError):
    def __init__(self, mensagem, z=None):
        super().__init__(mensagem)
        self.z = z


class ErroJacobianoSingular(ErroConvergencia):
    pass


class ErroRaizSimples(ErroConvergencia):
    pass


class ErroRastreamento(ErroConvergencia):
    pass

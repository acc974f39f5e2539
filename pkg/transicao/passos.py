# Arquivo: transicao/passos.py
"""Marchas passo a passo em Z, no formato de geradores que emitem dicionários de estado."""
import logging
from collections import defaultdict

from modelo import PI
from modelo.erros import ErroEspectral
from espectro.varredura import PedidoEspectro, varrer_raizes
from transicao.quebrado import resolver_quebrado

logger = logging.getLogger(__name__)


class MarchaPassos:
    def __init__(self):
        self.gerador = self._criar_gerador()

    def proximo_passo(self):
        try:
            return next(self.gerador)
        except StopIteration:
            return None

    def executar(self):
        passos = []
        while (passo := self.proximo_passo()) is not None:
            passos.append(passo)
        return passos

    def _criar_gerador(self):
        raise NotImplementedError("Subclasses devem implementar este método.")


# --- Marcha das raízes reais ---
class MarchaRaizes(MarchaPassos):
    """
    Acompanha as raízes reais de cada ramo nos intervalos (j*pi, (j+1)*pi),
    j < intervalos, enquanto Z cresce. Cada intervalo começa com um par do
    mesmo ramo; quando o par some entre dois passos emite um passo com status "colisao".
    """

    def __init__(self, intervalos, z_inicial=0.5, passo_z=0.5, passo_minimo=1e-2,
                 folga_minima=0.1, z_maximo=None):
        self.intervalos = intervalos
        self.s_max = intervalos * PI
        self.z_inicial = z_inicial
        self.passo_z = passo_z
        self.passo_minimo = passo_minimo
        self.folga_minima = folga_minima
        self.z_maximo = z_maximo if z_maximo is not None else 50.0 + 30.0 * (intervalos + 1)
        super().__init__()

    def _pares(self, z):
        grupos = defaultdict(list)
        for ponto in varrer_raizes(PedidoEspectro(z=z, s_max=self.s_max)):
            j = int(ponto.s // PI)
            if j < self.intervalos:
                grupos[(ponto.ramo, j)].append(ponto.s)
        return {chave: sorted(lista) for chave, lista in grupos.items()}

    def _criar_gerador(self):
        z = self.z_inicial
        passo = self.passo_z
        pares = self._pares(z)
        yield {"status": "executando", "z": z, "passo": 0.0, "pares": pares}

        while pares:
            if z >= self.z_maximo:
                yield {"status": "erro", "z": z,
                       "mensagem": f"Marcha interrompida (limite Z={self.z_maximo} atingido) com {len(pares)} pares vivos."}
                return

            folgas = [lista[1] - lista[0] for lista in pares.values() if len(lista) == 2]
            if folgas and min(folgas) < self.folga_minima:
                passo = max(passo / 2.0, self.passo_minimo)
            else:
                passo = min(passo * 2.0, self.passo_z)

            z_novo = z + passo
            novos = self._pares(z_novo)
            for chave, lista in pares.items():
                restantes = len(novos.get(chave, []))
                if restantes == len(lista):
                    continue
                ramo, j = chave
                if len(lista) == 2 and restantes == 0:
                    logger.debug("Par %s no intervalo %d sumiu entre Z=%g e Z=%g", ramo.value, j, z, z_novo)
                    yield {"status": "colisao", "ramo": ramo, "intervalo": j,
                           "z_antes": z, "z_depois": z_novo, "par": tuple(lista)}
                else:
                    yield {"status": "erro", "z": z_novo,
                           "mensagem": f"Intervalo {j} ({ramo.value}) passou de {len(lista)} para {restantes} raízes."}
                    return
            z, pares = z_novo, novos
            yield {"status": "executando", "z": z, "passo": passo, "pares": pares}

        yield {"status": "finalizado", "z": z, "mensagem": "Todos os pares acompanhados colidiram."}


# --- Marcha no regime quebrado ---
class MarchaQuebrada(MarchaPassos):
    def __init__(self, grade, inicial):
        self.grade = [float(z) for z in grade]
        self.inicial = inicial
        super().__init__()

    def _criar_gerador(self):
        atual = self.inicial
        eps_anterior = z_anterior = None
        for z in self.grade:
            try:
                atual, energia = resolver_quebrado(z, atual)
            except ErroEspectral as erro:
                if getattr(erro, "z", None) is None:
                    erro.z = z
                yield {"status": "erro", "z": z, "erro": erro,
                       "mensagem": f"Continuação falhou em Z={z}: {erro}"}
                return
            if eps_anterior is not None and (z - z_anterior) * (abs(energia.eps) - abs(eps_anterior)) < 0:
                logger.warning("|eps| diminuiu ao longo do caminho em Z=%g (%.6g -> %.6g)",
                               z, abs(eps_anterior), abs(energia.eps))
            eps_anterior, z_anterior = energia.eps, z
            yield {"status": "executando", "z": z, "params": atual, "energia": energia}

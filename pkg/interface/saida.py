# Arquivo: interface/saida.py
"""Emissão de registros em CSV ou JSON. Floats sempre com 12 algarismos significativos."""
import csv
import io
import json
import math
from dataclasses import dataclass, field

from modelo import VERSAO_ESQUEMA


def formatar_numero(valor):
    if isinstance(valor, bool) or not isinstance(valor, float):
        return valor
    if not math.isfinite(valor):
        return repr(valor)
    return f"{valor:.12g}"


def _valor_json(valor):
    if isinstance(valor, bool) or not isinstance(valor, float):
        return valor
    if not math.isfinite(valor):
        return repr(valor)
    return float(f"{valor:.12g}")


@dataclass
class RegistroSaida:
    comando: str
    entradas: dict
    colunas: list
    linhas: list = field(default_factory=list)
    notas: list = field(default_factory=list)
    versao_esquema: str = VERSAO_ESQUEMA

    def adicionar(self, **linha):
        faltando = [c for c in self.colunas if c not in linha]
        if faltando:
            raise ValueError(f"Linha sem as colunas {faltando}.")
        self.linhas.append(linha)

    def _comentarios(self, meta):
        comentarios = [f"schema_version={self.versao_esquema}", f"command={self.comando}"]
        comentarios += [f"input.{chave}={formatar_numero(valor)}" for chave, valor in sorted(self.entradas.items())]
        comentarios += list(self.notas)
        if meta:
            comentarios += [f"meta.{chave}={formatar_numero(valor)}" for chave, valor in meta.items()]
        return comentarios

    def para_csv(self, meta=None):
        buffer = io.StringIO()
        escritor = csv.DictWriter(buffer, fieldnames=self.colunas, lineterminator="\n")
        escritor.writeheader()
        for linha in self.linhas:
            escritor.writerow({c: formatar_numero(linha[c]) for c in self.colunas})
        for comentario in self._comentarios(meta):
            buffer.write(f"# {comentario}\n")
        return buffer.getvalue()

    def para_json(self, meta=None):
        documento = {
            "schema_version": self.versao_esquema,
            "command": self.comando,
            "inputs": {chave: _valor_json(valor) for chave, valor in sorted(self.entradas.items())},
            "columns": list(self.colunas),
            "rows": [{c: _valor_json(linha[c]) for c in self.colunas} for linha in self.linhas],
        }
        if self.notas:
            documento["notes"] = list(self.notas)
        if meta:
            documento["meta"] = {chave: _valor_json(valor) for chave, valor in meta.items()}
        return json.dumps(documento, ensure_ascii=False, indent=2) + "\n"

    def renderizar(self, formato, meta=None):
        if formato == "json":
            return self.para_json(meta)
        return self.para_csv(meta)


def emitir(texto, destino, fluxo):
    if destino is None or destino == "-":
        fluxo.write(texto)
        return
    with open(destino, "w", encoding="utf-8", newline="") as arquivo:
        arquivo.write(texto)

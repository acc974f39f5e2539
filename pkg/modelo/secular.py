# Arquivo: modelo/secular.py
"""
Funções seculares do poço quadrado periódico com degrau imaginário iZ sign(x).

Três representações equivalentes da condição de quantização:
  - representação t:  4e^{-2t}(e^{2t}-1)^2 t^2 + (2Z^2/t^2)(cos(Z/t) - 1)
  - representação s:  8s^2(cos 2s - 1) + e^{-Z/s}(e^{Z/s}-1)^2 Z^2/s^2
  - forma fatorada:   (t sinh t + s sin s)(t sinh t - s sin s)
com k = t + is, E = s^2 - t^2 e 2st = Z. A forma fatorada é a canônica para
busca de raízes; as outras servem para validação cruzada e para as figuras.
"""
import numpy as np

from modelo import LOG_MAXIMO, T_LIMITE_LOG
from modelo.erros import ErroDominio
from modelo.parametros import ParametrosExatos, Ramo


def _como_saida(valor, referencia):
    # devolve float quando a entrada era escalar
    if np.ndim(referencia) == 0:
        return float(valor)
    return valor


def _exigir_positivo(nome, valor):
    if np.any(np.asarray(valor) <= 0):
        raise ErroDominio(f"{nome} precisa ser positivo (recebido {valor}).")


def t_sinh_t(t):
    """t sinh t, par em t; acima de T_LIMITE_LOG avaliado no domínio logarítmico."""
    a = np.abs(np.asarray(t, dtype=float))
    with np.errstate(over="ignore", divide="ignore"):
        direto = a * np.sinh(np.minimum(a, T_LIMITE_LOG))
        log_valor = np.log(a) + a - np.log(2.0) + np.log1p(-np.exp(-2.0 * a))
        grande = np.exp(np.minimum(log_valor, LOG_MAXIMO))
    return _como_saida(np.where(a > T_LIMITE_LOG, grande, direto), t)


def _exp_quadrado(x):
    # e^{-x}(e^{x}-1)^2 = (e^x - 1)(1 - e^{-x}), com x >= 0
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        direto = np.expm1(x) * -np.expm1(-x)
        log_valor = x + 2.0 * np.log1p(-np.exp(-x))
        grande = np.exp(np.minimum(log_valor, LOG_MAXIMO))
    return np.where(x > T_LIMITE_LOG, grande, direto)


def secular_t(t, z):
    _exigir_positivo("t", t)
    tt = np.asarray(t, dtype=float)
    zz = np.asarray(z, dtype=float)
    primeiro = 4.0 * tt ** 2 * _exp_quadrado(2.0 * tt)
    segundo = (2.0 * zz ** 2 / tt ** 2) * (-1.0 + np.cos(zz / tt))
    return _como_saida(primeiro + segundo, tt + zz)


def secular_s(s, z):
    _exigir_positivo("s", s)
    ss = np.asarray(s, dtype=float)
    zz = np.asarray(z, dtype=float)
    primeiro = 8.0 * ss ** 2 * (-1.0 + np.cos(2.0 * ss))
    segundo = _exp_quadrado(zz / ss) * zz ** 2 / ss ** 2
    return _como_saida(primeiro + segundo, ss + zz)


def fator_secular(params, ramo):
    return t_sinh_t(params.t) + ramo.sinal * params.s * np.sin(params.s)


def fator_na_curva(s, z, ramo):
    """Fator do ramo ao longo da curva t = Z/(2s); aceita vetores em s."""
    ss = np.asarray(s, dtype=float)
    valor = t_sinh_t(z / (2.0 * ss)) + ramo.sinal * ss * np.sin(ss)
    return _como_saida(valor, s)


def derivadas_na_curva(s, z, ramo):
    """(F, dF/ds, d2F/ds2) do fator ao longo de t = Z/(2s), com dt/ds = -t/s."""
    _exigir_positivo("s", s)
    t = z / (2.0 * s)
    if t > T_LIMITE_LOG:
        # sinh e cosh diretos estourariam
        raise ErroDominio(f"t=Z/(2s)={t:.3g} grande demais para as derivadas na curva (s={s}).")
    sh, ch = np.sinh(t), np.cosh(t)
    sn, cs = np.sin(s), np.cos(s)
    f = t * sh + ramo.sinal * s * sn
    d_t = sh + t * ch                       # d(t sinh t)/dt
    d2_t = 2.0 * ch + t * sh                # d2(t sinh t)/dt2
    f_s = -d_t * t / s + ramo.sinal * (sn + s * cs)
    f_ss = d2_t * t ** 2 / s ** 2 + d_t * 2.0 * t / s ** 2 + ramo.sinal * (2.0 * cs - s * sn)
    return float(f), float(f_s), float(f_ss)


def produto_fatores(t, z):
    """16 F+ F- em (t, s = Z/(2t))."""
    tt = np.asarray(t, dtype=float)
    params = ParametrosExatos(t=tt, s=np.asarray(z, dtype=float) / (2.0 * tt))
    produto = 16.0 * fator_secular(params, Ramo.FATOR_MAIS) * fator_secular(params, Ramo.FATOR_MENOS)
    return _como_saida(produto, tt + params.s)


def residuo_identidade(t, z):
    _exigir_positivo("t", t)
    valor = np.asarray(secular_t(t, z))
    diferenca = np.abs(valor - produto_fatores(t, z))
    return _como_saida(diferenca / np.maximum(1.0, np.abs(valor)), np.asarray(t) + np.asarray(z))


def residuo_identidade_s(s, z):
    """Mesma identidade na representação s: 16(t sinh t)^2 - 16(s sin s)^2 com t = Z/(2s)."""
    _exigir_positivo("s", s)
    ss = np.asarray(s, dtype=float)
    t = np.asarray(z, dtype=float) / (2.0 * ss)
    valor = np.asarray(secular_s(s, z))
    with np.errstate(over="ignore"):
        fatorada = 16.0 * t_sinh_t(t) ** 2 - 16.0 * (ss * np.sin(ss)) ** 2
    if not (np.all(np.isfinite(valor)) and np.all(np.isfinite(fatorada))):
        raise ErroDominio("Identidade na representação s estoura o ponto flutuante: Z/s grande demais.")
    diferenca = np.abs(valor - fatorada)
    return _como_saida(diferenca / np.maximum(1.0, np.abs(valor)), ss + np.asarray(z))

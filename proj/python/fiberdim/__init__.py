"""Exact fiber dimension, Hilbert tables and lattice checks for polynomial submodules.

Modules are passed as text in the same format the ``fiberdim`` CLI reads::

    n = 2
    N = 1
    gen = (z1)
    gen = (z2)

Every call returns the same report dict that ``fiberdim --json`` prints.
Warnings go through the ``warnings`` module.
"""

import json
import os
import warnings
from fractions import Fraction

from . import _fiberdim

__all__ = ["FiberdimError", "parse", "digest", "fd", "hilbert", "samuel", "lattice", "witness", "model"]


class FiberdimError(Exception):
    """Raised with the same code and exit status the CLI would report."""

    def __init__(self, code, exit_status, message):
        super().__init__(message)
        self.code = code
        self.exit_status = exit_status
        self.message = message

    def __str__(self):
        return f"{self.code}: {self.message}"


def _text(module):
    if isinstance(module, os.PathLike):
        with open(module, encoding="utf-8") as f:
            return f.read()
    return module


def _vector(values):
    if values is None or isinstance(values, str):
        return values
    out = []
    for v in values:
        if isinstance(v, float):
            raise TypeError("floats are not exact; pass int, Fraction or 'p/q'")
        out.append(str(Fraction(v)) if not isinstance(v, str) else v)
    return ",".join(out)


def _options(seed, max_degree, translate, cache_dir, kernel_at=()):
    o = _fiberdim.Options()
    o.seed = seed
    o.max_degree = max_degree
    o.translate = _vector(translate)
    o.cache_dir = None if cache_dir is None else os.fspath(cache_dir)
    o.kernel_at = [(_vector(z), _vector(w)) for z, w in kernel_at]
    return o


def _call(fn, *args):
    try:
        report, notes = fn(*args)
    except _fiberdim.Error as e:
        raise FiberdimError(*e.args) from None
    for note in notes:
        warnings.warn(note, stacklevel=3)
    return json.loads(report)


def parse(module):
    """Canonical text of a module; raises FiberdimError on bad input."""
    try:
        return _fiberdim.parse(_text(module))
    except _fiberdim.Error as e:
        raise FiberdimError(*e.args) from None


def digest(module):
    try:
        return _fiberdim.digest(_text(module))
    except _fiberdim.Error as e:
        raise FiberdimError(*e.args) from None


def fd(module, *, seed=0, max_degree=None, translate=None, cache_dir=None):
    return _call(_fiberdim.fd, _text(module), _options(seed, max_degree, translate, cache_dir))


def hilbert(module, *, seed=0, max_degree=None, translate=None, cache_dir=None):
    return _call(_fiberdim.hilbert, _text(module), _options(seed, max_degree, translate, cache_dir))


def samuel(module, *, seed=0, max_degree=None, translate=None, cache_dir=None):
    return _call(_fiberdim.samuel, _text(module), _options(seed, max_degree, translate, cache_dir))


def lattice(first, second, *, witness=False, seed=0, max_degree=None, cache_dir=None):
    opts = _options(seed, max_degree, None, cache_dir)
    return _call(_fiberdim.lattice, _text(first), _text(second), witness, opts)


def witness(first, second, *, seed=0, max_degree=None, cache_dir=None):
    opts = _options(seed, max_degree, None, cache_dir)
    return _call(_fiberdim.witness, _text(first), _text(second), opts)


def model(preset, module, *, kernel_at=(), seed=0, max_degree=None, translate=None, cache_dir=None):
    opts = _options(seed, max_degree, translate, cache_dir, kernel_at)
    return _call(_fiberdim.model, preset, _text(module), opts)

"""Jacquet modules of representations of SO(2n+1) and Sp(2n).

Documents are dicts in the command-line JSON schema, e.g.
{"group": "SOodd", "phi": [["1", 2], ["1", 4], ["1", 4]], "eta": [1, 1, 1]}.
"""

import json

from . import _core
from ._core import InputError, NonGenericStandard

__all__ = [
    "InputError",
    "NonGenericStandard",
    "packet",
    "jac",
    "jac_pk",
    "zeta_exponents",
    "is_generic",
    "std_irreducible",
    "run_cli",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def packet(doc):
    return _core.packet(_text(doc))


def jac(doc, xs, rho="1"):
    if isinstance(xs, str):
        xs = [x for x in xs.split(",") if x.strip()]
    return _core.jac(_text(doc), [str(x) for x in xs], rho)


def jac_pk(doc, k):
    return _core.jac_pk(_text(doc), k)


def zeta_exponents(doc):
    return _core.zeta_exponents(_text(doc))


def is_generic(doc):
    return _core.is_generic(_text(doc))


def std_irreducible(doc, x, rho="1"):
    return _core.std_irreducible(_text(doc), str(x), rho)


def run_cli(args):
    return _core.run_cli(list(args))

"""Geodesics in orthoscheme complexes of modular semilattices.

Structures and points use the same JSON shapes as the ``orthogeo`` command
line tool; they may be passed as dicts or as JSON text.
"""

import json

from . import _orthogeo

__all__ = [
    "OrthogeoError",
    "validate",
    "classify",
    "distance",
    "geodesic",
    "geodesic_csv",
    "arch",
    "msip",
    "oracle",
    "cat0_check",
]


class OrthogeoError(ValueError):
    """Domain failure with a stable ``code`` such as ``"InvalidPoint"``."""

    def __init__(self, code, detail):
        super().__init__(f"{code}: {detail}")
        self.code = code
        self.detail = detail


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def _call(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except _orthogeo.Error as e:
        code, _, detail = str(e).partition(": ")
        raise OrthogeoError(code, detail) from None


def validate(structure, as_=None):
    return json.loads(_call(_orthogeo.validate, _text(structure), as_))


def classify(structure, as_=None, gated=False):
    return json.loads(_call(_orthogeo.classify, _text(structure), as_, gated))


def distance(structure, x, y, as_=None):
    return json.loads(_call(_orthogeo.distance, _text(structure), _text(x), _text(y), as_))["length"]


def geodesic(structure, x, y, as_=None):
    return json.loads(_call(_orthogeo.geodesic, _text(structure), _text(x), _text(y), as_))


def geodesic_csv(structure, x, y, samples, as_=None):
    return _call(_orthogeo.geodesic_csv, _text(structure), _text(x), _text(y), samples, as_)


def arch(structure, x, y, all=False, as_=None):
    return json.loads(_call(_orthogeo.arch, _text(structure), _text(x), _text(y), all, as_))


def msip(structure, x, y, lam, as_=None):
    return json.loads(_call(_orthogeo.msip, _text(structure), _text(x), _text(y), str(lam), as_))


def oracle(structure, x, y, n=8, as_=None):
    return json.loads(_call(_orthogeo.oracle, _text(structure), _text(x), _text(y), n, as_))


def cat0_check(structure, samples, seed=1, as_=None):
    return json.loads(_call(_orthogeo.cat0_check, _text(structure), samples, seed, as_))

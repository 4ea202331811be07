"""Exact computations with deformed preprojective algebras of A_inf, A_plus_inf and D_inf.

Quivers are family names ("A_plus_inf") or dicts, weights are dicts in the
layout of docs/formats.md or plain lists of values starting at vertex 0,
scalars are ints, strings ("-1/2", "1+i") or Fractions. Dimension vectors are
dicts {vertex: value}. Results come back as plain Python data; exact scalars
are [re_num, re_den, im_num, im_den] lists (see `to_fraction`).
"""

import json
from fractions import Fraction

from . import _preproj
from ._preproj import DomainError, ValidationError

__all__ = [
    "DomainError",
    "ValidationError",
    "check_extension_conditions",
    "check_module",
    "dominate",
    "enumerate_simples",
    "enumerate_vrs",
    "exists_simple",
    "in_lambda_i",
    "interval_conditions",
    "is_isomorphic",
    "khare_lambda",
    "oracle_exists_simple",
    "p_value",
    "positive_roots",
    "reflect",
    "symmetric_group_irrep",
    "to_fraction",
]


def _scalar(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (int, str)):
        return str(x)
    if isinstance(x, list) and len(x) == 4:
        return x
    raise TypeError(f"cannot use {x!r} as an exact scalar")


def _quiver(q):
    return json.dumps(q if isinstance(q, dict) else {"family": q})


def _weight(w):
    if w is None or w == "zero":
        return json.dumps({"base": "zero"})
    if isinstance(w, dict):
        return json.dumps(w)
    return json.dumps({"base": "explicit", "start": 0, "values": [_scalar(x) for x in w]})


def _dim(alpha):
    if isinstance(alpha, dict):
        alpha = sorted(alpha.items())
    return json.dumps([[int(v), int(d)] for v, d in alpha])


def _module(m):
    return m if isinstance(m, str) else json.dumps(m)


def to_fraction(s):
    """Converts a real 4-tuple scalar to a Fraction."""
    re_num, re_den, im_num, im_den = (int(x) for x in s)
    if im_num != 0:
        raise ValueError("scalar is not real")
    return Fraction(re_num, re_den)


def positive_roots(quiver, window):
    return [dict(pairs) for pairs in json.loads(_preproj.positive_roots(_quiver(quiver), list(window)))]


def p_value(quiver, alpha):
    return _preproj.p_value(_quiver(quiver), _dim(alpha))


def dominate(quiver, weight, window):
    return json.loads(_preproj.dominate(_quiver(quiver), _weight(weight), list(window)))


def exists_simple(quiver, weight, alpha):
    return json.loads(_preproj.exists_simple(_quiver(quiver), _weight(weight), _dim(alpha)))


def enumerate_simples(quiver, weight, window, jobs=1):
    return json.loads(_preproj.enumerate_simples(_quiver(quiver), _weight(weight), list(window), jobs))


def interval_conditions(quiver, weight, s, r):
    return _preproj.interval_conditions(_quiver(quiver), _weight(weight), s, r)


def oracle_exists_simple(quiver, weight, alpha):
    return _preproj.oracle_exists_simple(_quiver(quiver), _weight(weight), _dim(alpha))


def khare_lambda(f):
    """f lists the coefficients of f(Delta), constant term first."""
    return json.loads(_preproj.khare_lambda([str(Fraction(c)) for c in f]))


def enumerate_vrs(f, r_max):
    return json.loads(_preproj.enumerate_vrs([str(Fraction(c)) for c in f], r_max))


def check_module(module, weight=None, nu=0):
    return json.loads(_preproj.check_module(_module(module), _weight(weight), json.dumps(_scalar(nu))))


def reflect(module, word, weight=None, nu=0):
    """Applies F_w; `word` is a vertex or a list j_m, ..., j_1 (rightmost first)."""
    if isinstance(word, int):
        word = [word]
    return json.loads(_preproj.reflect(_module(module), list(word), _weight(weight), json.dumps(_scalar(nu))))


def is_isomorphic(a, b, weight=None, nu=0, seed=0x5EED):
    return _preproj.is_isomorphic(_module(a), _module(b), _weight(weight), json.dumps(_scalar(nu)), seed)


def in_lambda_i(weight, nu, i, n):
    return _preproj.in_lambda_i(_weight(weight), json.dumps(_scalar(nu)), i, n)


def check_extension_conditions(quiver, partition, diagrams, vertices, weight=None, nu=0, verify=False):
    return json.loads(
        _preproj.check_extension_conditions(
            _quiver(quiver), list(partition), [list(d) for d in diagrams], list(vertices),
            _weight(weight), json.dumps(_scalar(nu)), verify,
        )
    )


def symmetric_group_irrep(rows):
    return json.loads(_preproj.symmetric_group_irrep(list(rows)))

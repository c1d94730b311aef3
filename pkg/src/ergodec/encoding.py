"""Canonical JSON-ready encodings of exact values.

Certificates and reports carry only plain data: ints stay ints, proper
fractions become "num/den" strings, and structured values become lists and
dicts with deterministic ordering.  Decoding inverts the encoding exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .intpoly import Polynomial
from .laurent import LaurentPoly
from .matrices import Matrix, Subspace


def encode_scalar(x):
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    raise TypeError(f"cannot encode {type(x).__name__}")


def decode_scalar(v):
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        f = Fraction(v)
        return int(f) if f.denominator == 1 else f
    raise TypeError(f"cannot decode scalar from {type(v).__name__}")


def encode_vector(v) -> list:
    return [encode_scalar(x) for x in v]


def decode_vector(v) -> tuple:
    return tuple(decode_scalar(x) for x in v)


def encode_matrix(m: Matrix) -> list:
    return [encode_vector(row) for row in m.rows]


def decode_matrix(rows) -> Matrix:
    return Matrix.from_rows([decode_vector(row) for row in rows])


def encode_poly(f: Polynomial) -> list:
    return encode_vector(f.coeffs)


def decode_poly(coeffs) -> Polynomial:
    return Polynomial.from_coeffs(decode_vector(coeffs))


def encode_subspace(s: Subspace) -> dict:
    return {"ambient": s.ambient, "basis": [encode_vector(v) for v in s.basis]}


def decode_subspace(d) -> Subspace:
    return Subspace.span(d["ambient"], [decode_vector(v) for v in d["basis"]])


def encode_laurent(f: LaurentPoly) -> dict:
    return {"p": f.p, "vars": f.nvars,
            "terms": [[list(e), c] for e, c in f.terms]}


def decode_laurent(d) -> LaurentPoly:
    return LaurentPoly.from_terms(d["p"], d["vars"],
                                  {tuple(e): c for e, c in d["terms"]})

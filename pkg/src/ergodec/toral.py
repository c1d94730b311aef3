"""Ergodicity and distality decisions for toral and solenoidal actions.

Everything is decided on the dual side.  A character has a finite orbit
under a single automorphism exactly when the dual matrix has a
root-of-unity eigenvalue on its rational span, and the orders of the
roots of unity that an r-by-r rational matrix can carry are bounded
through the totient, so one uniform power exposes them all.  Every
operation returns a verdict with a certificate that can be replayed by
exact linear algebra alone, and each predicate is computed by two
independent routes that are asserted to agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from . import encoding
from .actions import dual_element
from .errors import InternalCheckError, NotErgodicGroupError, SearchExhaustedError
from .intpoly import (Polynomial, cyclotomic, orders_with_totient_at_most,
                      poly_gcd, root_of_unity_lcm)
from .matrices import (Matrix, Subspace, express_in, kernel, lift_from_quotient,
                       quotient_matrix, restrict_matrix)

_ORBIT_ENUMERATION_CAP = 200_000


class VerdictKind(str, Enum):
    ERGODIC = "ergodic"
    NOT_ERGODIC = "not-ergodic"
    DISTAL = "distal"
    NOT_DISTAL = "not-distal"


@dataclass(frozen=True)
class Certificate:
    """Replayable evidence for a verdict; data is JSON-ready."""

    kind: str
    data: dict

    def to_payload(self) -> dict:
        return {"kind": self.kind, "data": self.data}


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    certificate: Certificate

    @property
    def is_ergodic(self) -> bool:
        return self.kind == VerdictKind.ERGODIC

    @property
    def is_distal(self) -> bool:
        return self.kind == VerdictKind.DISTAL

    def to_payload(self) -> dict:
        return {"kind": self.kind.value, "certificate": self.certificate.to_payload()}


@dataclass(frozen=True)
class FiltrationReport:
    """Weakly decreasing chain of invariant dual subspaces with one
    generator certified ergodic on each successive quotient."""

    chain: tuple
    attributions: tuple
    residual: Subspace
    group_ergodic: bool

    def dims(self) -> tuple:
        return tuple(w.dim for w in self.chain)

    def to_payload(self) -> dict:
        return {
            "chain": [encoding.encode_subspace(w) for w in self.chain],
            "attributions": list(self.attributions),
            "residual": encoding.encode_subspace(self.residual),
            "group_ergodic": self.group_ergodic,
        }


def _root_of_unity_data(b: Matrix, rank: int):
    """Both root-of-unity detection routes for a dual matrix, asserted to
    agree: shared cyclotomic factors of the characteristic polynomial, and
    singularity of b**m - identity for the uniform power m."""
    cp = b.char_poly()
    orders = orders_with_totient_at_most(rank)
    shared = []
    for d in orders:
        g = poly_gcd(cp, cyclotomic(d))
        if not g.is_one:
            shared.append(d)
    m = root_of_unity_lcm(rank)
    powered = b ** m
    det_value = (powered - Matrix.identity(b.nrows)).det()
    if bool(shared) != (det_value == 0):
        raise InternalCheckError(
            "cyclotomic gcd route and power determinant route disagree")
    return cp, orders, shared, m, powered, det_value


def is_ergodic_element(action, exponents) -> Verdict:
    """Ergodicity of a single product of generator powers."""
    b = dual_element(action, exponents)
    rank = action.dim
    cp, orders, shared, m, powered, det_value = _root_of_unity_data(b, rank)
    if not shared:
        cert = Certificate("no-root-of-unity-eigenvalue", {
            "char_poly": encoding.encode_poly(cp),
            "orders_checked": orders,
            "power": m,
            "det_power_minus_identity": encoding.encode_scalar(det_value),
        })
        return Verdict(VerdictKind.ERGODIC, cert)
    fixed = kernel(powered - Matrix.identity(b.nrows))
    witness = _witness_vector(action, fixed)
    cert = Certificate("witness-character", {
        "character": encoding.encode_vector(witness),
        "power": m,
        "shared_orders": shared,
    })
    return Verdict(VerdictKind.NOT_ERGODIC, cert)


def _witness_vector(action, subspace: Subspace):
    if subspace.is_zero:
        raise InternalCheckError("expected a nonzero fixed subspace")
    if action.kind == "toral":
        return subspace.integral_basis()[0]
    return subspace.basis[0]


def _cyclotomic_split(cp: Polynomial, orders):
    """Strip cyclotomic factors from a monic polynomial; returns the
    factor multiset and the non-cyclotomic cofactor."""
    factors = []
    rest = cp
    for d in orders:
        phi = cyclotomic(d)
        count = 0
        while not rest.is_one and phi.divides(rest):
            rest = rest.exact_div(phi)
            count += 1
        if count:
            factors.append((d, count))
    return factors, rest


def is_distal_element(action, exponents) -> Verdict:
    """Distality of a single product of generator powers: the dual matrix
    must be quasi-unipotent."""
    b = dual_element(action, exponents)
    rank = action.dim
    cp = b.char_poly()
    orders = orders_with_totient_at_most(rank)
    factors, rest = _cyclotomic_split(cp, orders)
    m = root_of_unity_lcm(rank)
    nilpotent_part = (b ** m) - Matrix.identity(b.nrows)
    is_nilpotent = _is_zero_matrix(nilpotent_part ** rank)
    if rest.is_one != is_nilpotent:
        raise InternalCheckError(
            "cyclotomic factorization route and nilpotency route disagree")
    if rest.is_one:
        cert = Certificate("cyclotomic-char-poly", {
            "factors": [[d, c] for d, c in factors],
            "power": m,
        })
        return Verdict(VerdictKind.DISTAL, cert)
    cert = Certificate("non-cyclotomic-factor", {
        "factor": encoding.encode_poly(rest),
        "cyclotomic_part": [[d, c] for d, c in factors],
        "orders_checked": orders,
    })
    return Verdict(VerdictKind.NOT_DISTAL, cert)


def _is_zero_matrix(m: Matrix) -> bool:
    return all(x == 0 for row in m.rows for x in row)


def _finite_orbit_subspace_of(duals, dim: int, rank: int) -> Subspace:
    """Common fixed space of the uniform powers of the dual matrices;
    this is exactly the set of characters with a finite group orbit."""
    m = root_of_unity_lcm(rank)
    stacked = []
    for d in duals:
        diff = (d ** m) - Matrix.identity(dim)
        stacked.extend(diff.rows)
    return kernel(Matrix.from_rows(stacked))


def finite_orbit_subspace(action) -> Subspace:
    """Characters of the dual space whose group orbit is finite."""
    return _finite_orbit_subspace_of(action.dual_generators, action.dim, action.dim)


def _enumerate_finite_orbit(duals, chi):
    """Full group orbit of a character known to be finite (closed walk
    over the dual generators and their inverses)."""
    maps = []
    for d in duals:
        maps.append(d)
        maps.append(d.inverse())
    seen = {chi}
    frontier = [chi]
    while frontier:
        nxt = []
        for v in frontier:
            for m in maps:
                w = m.matvec(v)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        if len(seen) > _ORBIT_ENUMERATION_CAP:
            raise InternalCheckError("orbit enumeration exceeded the safety cap")
        frontier = nxt
    return sorted(seen)


def is_ergodic_group(action) -> Verdict:
    """Group ergodicity: no nonzero character with a finite orbit."""
    fixed = finite_orbit_subspace(action)
    m = root_of_unity_lcm(action.dim)
    if fixed.is_zero:
        cert = Certificate("zero-finite-orbit-subspace", {"power": m})
        return Verdict(VerdictKind.ERGODIC, cert)
    witness = _witness_vector(action, fixed)
    orbit = _enumerate_finite_orbit(action.dual_generators, witness)
    cert = Certificate("witness-character", {
        "character": encoding.encode_vector(witness),
        "power": m,
        "orbit_size": len(orbit),
        "orbit": [encoding.encode_vector(v) for v in orbit],
    })
    return Verdict(VerdictKind.NOT_ERGODIC, cert)


def is_distal_group(action) -> Verdict:
    """Group distality is equivalent to distality of every generator for
    commuting automorphisms."""
    per_generator = []
    for i in range(action.n_generators):
        exps = tuple(1 if j == i else 0 for j in range(action.n_generators))
        per_generator.append(is_distal_element(action, exps))
    if all(v.is_distal for v in per_generator):
        cert = Certificate("all-generators-quasi-unipotent", {
            "generators": [v.certificate.to_payload() for v in per_generator],
        })
        return Verdict(VerdictKind.DISTAL, cert)
    failing = next(i for i, v in enumerate(per_generator, start=1) if not v.is_distal)
    cert = Certificate("non-quasi-unipotent-generator", {
        "generator": failing,
        "generators": [v.certificate.to_payload() for v in per_generator],
    })
    return Verdict(VerdictKind.NOT_DISTAL, cert)


def _quasi_unipotent_on(d: Matrix, sub: Subspace, rank: int) -> bool:
    if sub.is_zero:
        return True
    restricted = restrict_matrix(d, sub)
    m = root_of_unity_lcm(rank)
    nil = (restricted ** m) - Matrix.identity(sub.dim)
    return _is_zero_matrix(nil ** sub.dim)


def largest_ergodic_subgroup(action):
    """Smallest invariant dual subspace whose quotient carries no nonzero
    finite-orbit character.  The corresponding closed subgroup is the
    largest one the group acts ergodically on, and the action on the
    quotient by that subgroup is distal because every generator is
    quasi-unipotent on the returned subspace.

    Returns (subspace, report).
    """
    rank = action.dim
    duals = action.dual_generators
    w = Subspace.zero(rank)
    rounds = []
    while True:
        if w.is_full:
            break
        if w.is_zero:
            quotient_duals = list(duals)
        else:
            quotient_duals = [quotient_matrix(d, w) for d in duals]
        qdim = rank - w.dim
        fixed = _finite_orbit_subspace_of(quotient_duals, qdim, rank)
        if fixed.is_zero:
            break
        lifts = [lift_from_quotient(w, v) for v in fixed.basis]
        grown = w.add(Subspace.span(rank, lifts))
        if grown.dim <= w.dim:
            raise InternalCheckError("fixpoint failed to grow")
        w = grown
        rounds.append(w.dim)
    for d in duals:
        if not w.is_invariant(d):
            raise InternalCheckError("accumulated subspace is not invariant")
        if not _quasi_unipotent_on(d, w, rank):
            raise InternalCheckError("generator is not quasi-unipotent on the result")
    report = {
        "rounds": rounds,
        "subspace": encoding.encode_subspace(w),
        "quotient_has_no_finite_orbit": True,
        "generators_quasi_unipotent_on_subspace": True,
    }
    return w, report


def ergodic_distal_filtration(action) -> FiltrationReport:
    """Chain of invariant dual subspaces, one stage per generator, with
    generator i certified ergodic on the stage quotient and every
    generator quasi-unipotent on the residual."""
    rank = action.dim
    duals = action.dual_generators
    m = root_of_unity_lcm(rank)
    w_prev = Subspace.full(rank)
    chain = [w_prev]
    attributions = []
    for i, d in enumerate(duals, start=1):
        nil = (d ** m) - Matrix.identity(rank)
        quasi_unipotent_part = kernel(nil ** rank)
        w_i = quasi_unipotent_part.intersect(w_prev)
        for other in duals:
            if not w_i.is_invariant(other):
                raise InternalCheckError("stage subspace is not invariant")
        certified = _certify_stage_ergodic(d, w_prev, w_i, m)
        attributions.append({
            "stage": i,
            "generator": i,
            "dim_from": w_prev.dim,
            "dim_to": w_i.dim,
            "ergodic_on_quotient": certified,
        })
        chain.append(w_i)
        w_prev = w_i
    residual = chain[-1]
    for d in duals:
        if not _quasi_unipotent_on(d, residual, rank):
            raise InternalCheckError("generator is not quasi-unipotent on the residual")
    group_verdict = is_ergodic_group(action)
    if residual.is_zero != group_verdict.is_ergodic:
        raise InternalCheckError(
            "residual vanishing disagrees with the independent group verdict")
    return FiltrationReport(tuple(chain), tuple(attributions), residual,
                            group_verdict.is_ergodic)


def _certify_stage_ergodic(d: Matrix, w_outer: Subspace, w_inner: Subspace,
                           power: int) -> bool:
    """No nonzero character of the quotient w_outer/w_inner is fixed by
    the given power of d."""
    if w_outer.dim == w_inner.dim:
        return True  # trivial quotient
    if w_outer.is_full and w_inner.is_zero:
        q = d
    else:
        restricted = restrict_matrix(d, w_outer)
        inner_coords = express_in(w_outer, w_inner)
        q = restricted if inner_coords.is_zero else quotient_matrix(restricted, inner_coords)
    fixed = kernel((q ** power) - Matrix.identity(q.nrows))
    if not fixed.is_zero:
        raise InternalCheckError("stage quotient carries a finite-orbit character")
    return True


def _positive_vectors(n: int, total: int):
    """All-positive integer vectors with the given coordinate sum, in
    lexicographic order."""
    if n == 1:
        yield (total,)
        return
    for first in range(1, total - n + 2):
        for rest in _positive_vectors(n - 1, total - first):
            yield (first,) + rest


def find_ergodic_exponents(action, max_exponent_sum: int = 60):
    """First all-positive exponent vector, by increasing coordinate sum
    then lexicographic order, whose product element is ergodic.

    Returns (exponents, element_verdict).  Raises NotErgodicGroupError
    when the group itself is not ergodic, and SearchExhaustedError when
    the configured bound is hit (the group verdict guarantees existence,
    with no effective bound on the coordinate sum).
    """
    group = is_ergodic_group(action)
    if not group.is_ergodic:
        raise NotErgodicGroupError(group.to_payload())
    n = action.n_generators
    for total in range(n, max_exponent_sum + 1):
        for exps in _positive_vectors(n, total):
            v = is_ergodic_element(action, exps)
            if v.is_ergodic:
                return exps, v
    raise SearchExhaustedError(max_exponent_sum)


def mixing_flag(verdict: Verdict) -> bool:
    """A single ergodic automorphism of a compact group is mixing of all
    orders; this flag only reflects the ergodicity verdict."""
    return verdict.is_ergodic


def exponent_candidates(n: int, max_exponent_sum: int):
    """Public view of the deterministic exponent scan order."""
    return itertools.chain.from_iterable(
        _positive_vectors(n, total) for total in range(n, max_exponent_sum + 1))

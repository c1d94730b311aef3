"""Independent brute-force verification of the dual orbit semantics.

The analytic engine never touches this module's logic: orbits are walked
character by character over the dual generators and their inverses, and
finiteness means the frontier emptied.  A breadth-first search that gives
up (too many characters visited, or coordinates past the size guard)
certifies nothing; only the analytic side can assert an orbit is
infinite.  Cross-validation walks a whole box of characters, shares work
between characters that turn out to lie on the same orbit, and flags any
disagreement with the engine as a hard failure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .actions import ProductDemoSpec
from .toral import finite_orbit_subspace

DEFAULT_COORD_BITS = 64


@dataclass(frozen=True)
class OrbitResult:
    status: str  # "finite" | "exceeded-cap"
    size: int | None
    visited: int
    max_coordinate: int
    reason: str | None  # "visited-cap" | "coordinate-guard" for exceeded-cap

    @property
    def is_finite(self) -> bool:
        return self.status == "finite"

    def to_payload(self) -> dict:
        return {"status": self.status, "size": self.size, "visited": self.visited,
                "max_coordinate": self.max_coordinate, "reason": self.reason}


def _compile_map(rows):
    """Unrolled matrix-vector closure; the orbit walk is the hot path."""
    n = len(rows)
    if n == 1:
        (a,), = rows
        return lambda v: (a * v[0],)
    if n == 2:
        (a, b), (c, d) = rows
        return lambda v: (a * v[0] + b * v[1], c * v[0] + d * v[1])
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return lambda v: (a * v[0] + b * v[1] + c * v[2],
                          d * v[0] + e * v[1] + f * v[2],
                          g * v[0] + h * v[1] + i * v[2])
    return lambda v: tuple(sum(a * b for a, b in zip(row, v)) for row in rows)


def _orbit_maps(action):
    maps = []
    for d in action.dual_generators:
        maps.append(_compile_map(d.rows))
        maps.append(_compile_map(d.inverse().rows))
    return maps


def _require_toral(action):
    if action.kind != "toral":
        raise ValueError("orbit enumeration runs on integer characters only")


def orbit_bfs(action, chi, cap: int,
              max_coord_bits: int = DEFAULT_COORD_BITS) -> OrbitResult:
    """Breadth-first walk of the group orbit of an integer character.

    Finite status is re-verified on output: the enumerated set must be
    closed under every dual generator and inverse.  The walk gives up
    once more than cap characters are visited or a coordinate outgrows
    the bit guard; both outcomes are reported as exceeded-cap with the
    reason recorded, and certify nothing.
    """
    _require_toral(action)
    chi = tuple(int(x) for x in chi)
    if all(x == 0 for x in chi):
        raise ValueError("the zero character is fixed by everything")
    maps = _orbit_maps(action)
    guard = 1 << max_coord_bits
    seen = {chi}
    frontier = [chi]
    max_abs = max(abs(x) for x in chi)
    while frontier:
        nxt = []
        for v in frontier:
            for apply_map in maps:
                w = apply_map(v)
                big = max(map(abs, w))
                if big > max_abs:
                    max_abs = big
                if big >= guard:
                    return OrbitResult("exceeded-cap", None, len(seen), max_abs,
                                       "coordinate-guard")
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
                    if len(seen) > cap:
                        return OrbitResult("exceeded-cap", None, len(seen), max_abs,
                                           "visited-cap")
        frontier = nxt
    for v in seen:
        for apply_map in maps:
            if apply_map(v) not in seen:
                raise AssertionError("finite orbit is not closed; enumeration bug")
    return OrbitResult("finite", len(seen), len(seen), max_abs, None)


def _box_characters(dim: int, norm_bound: int):
    def rec(prefix, k):
        if k == 0:
            if any(prefix):
                yield tuple(prefix)
            return
        for x in range(-norm_bound, norm_bound + 1):
            yield from rec(prefix + [x], k - 1)
    yield from rec([], dim)


def cross_validate(action, norm_bound: int, cap: int,
                   max_coord_bits: int = DEFAULT_COORD_BITS) -> dict:
    """Differential test of the finite-orbit subspace against orbit
    enumeration, over every nonzero integer character in the box.

    Hard failures: a finite enumerated orbit whose character lies outside
    the engine's finite-orbit subspace, or a character inside it whose
    enumeration did not close.  Exceeded-cap outside the subspace is
    consistent by construction.
    """
    _require_toral(action)
    fixed = finite_orbit_subspace(action)
    maps = _orbit_maps(action)
    guard = 1 << max_coord_bits
    class_of: dict = {}
    class_status: list = []

    def classify(start):
        if start in class_of:
            return class_of[start]
        seen = {start}
        seen_add = seen.add
        known_class = class_of.get
        frontier = [start]
        status = None
        while frontier and status is None:
            nxt = []
            nxt_append = nxt.append
            for v in frontier:
                for apply_map in maps:
                    w = apply_map(v)
                    if w in seen:
                        continue
                    known = known_class(w)
                    if known is not None:
                        # Same orbit as an already-walked class; inherit.
                        status = class_status[known]
                        break
                    if max(map(abs, w)) >= guard:
                        status = ("exceeded-cap", "coordinate-guard")
                        break
                    seen_add(w)
                    nxt_append(w)
                    if len(seen) > cap:
                        status = ("exceeded-cap", "visited-cap")
                        break
                if status is not None:
                    break
            frontier = nxt
        if status is None:
            status = ("finite", len(seen))
        cid = len(class_status)
        class_status.append(status)
        for v in seen:
            class_of.setdefault(v, cid)
        return cid

    checked = 0
    finite_count = 0
    exceeded_count = 0
    failures = []
    for chi in _box_characters(action.dim, norm_bound):
        checked += 1
        cid = classify(chi)
        status = class_status[cid]
        inside = fixed.contains(chi)
        if status[0] == "finite":
            finite_count += 1
            if not inside:
                failures.append({
                    "character": list(chi),
                    "kind": "finite-orbit-outside-subspace",
                    "orbit_size": status[1],
                })
        else:
            exceeded_count += 1
            if inside:
                failures.append({
                    "character": list(chi),
                    "kind": "enumeration-gave-up-inside-subspace",
                    "reason": status[1],
                })
    return {
        "norm_bound": norm_bound,
        "cap": cap,
        "characters_checked": checked,
        "finite_orbits": finite_count,
        "exceeded": exceeded_count,
        "failures": failures,
        "consistent": not failures,
    }


def product_action_demo(spec: ProductDemoSpec) -> dict:
    """Certificate bundle for the product construction in which the full
    two-parameter group acts ergodically but no single element does.

    Each factor indexed by (i, j) carries the translation action sending
    the group element (n, m) to the base automorphism raised to m*i - n*j.
    The element (i, j) therefore acts on its own factor with exponent
    j*i - i*j = 0, so it is not ergodic there, and factors are quotients
    of the product.  The nested subproducts indexed by i + j at least n
    form a strictly descending chain of invariant subgroups, so the
    action has arbitrarily long descending chains.
    """
    b = spec.box_radius
    points = []
    for i in range(-b, b + 1):
        for j in range(-b, b + 1):
            if i == 0 and j == 0:
                continue
            exponent = j * i - i * j
            if exponent != 0:
                raise AssertionError("exponent identity failed; arithmetic bug")
            points.append({"element": [i, j], "exponent_on_own_factor": exponent})
    chain = []
    previous = None
    for level in range(1, b + 1):
        members = [(i, j) for i in range(-b, b + 1) for j in range(-b, b + 1)
                   if (i, j) != (0, 0) and i + j >= level]
        if previous is not None and not (set(members) < set(previous)):
            raise AssertionError("chain is not strictly descending")
        chain.append({"level": level, "factor_count": len(members)})
        previous = members
    return {
        "box_radius": b,
        "points_certified": len(points),
        "points": points,
        "chain": chain,
        "chain_length": len(chain),
        "strictly_descending": True,
    }

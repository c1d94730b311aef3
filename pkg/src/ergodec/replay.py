"""Certificate replay: re-check every claim in a report using only the
exact-arithmetic core.

Replay works on the serialized report, so a report that round-trips
through JSON carries everything needed to re-derive its own verdicts.
Each check returns silently or records a failure entry; nothing here
consults the engines' verdict logic beyond shared exact primitives.
"""

from __future__ import annotations

from . import encoding
from .actions import build_action, dual_element
from .intpoly import cyclotomic, poly_gcd, root_of_unity_lcm
from .laurent import (bivar_gcd, content_in, direction_power_minus_one,
                      laurent_divides)
from .matrices import Matrix, Subspace, kernel


def _check(condition: bool, failures: list, what: str) -> None:
    if not condition:
        failures.append(what)


def _matrix_fixes(vector, matrix: Matrix) -> bool:
    return matrix.matvec(vector) == tuple(vector)


def replay_element_verdict(action, exponents, payload: dict, failures: list) -> None:
    cert = payload["certificate"]
    kind = cert["kind"]
    data = cert["data"]
    b = dual_element(action, exponents)
    rank = action.dim
    if kind == "no-root-of-unity-eigenvalue":
        cp = b.char_poly()
        _check(encoding.encode_poly(cp) == data["char_poly"], failures,
               "stored characteristic polynomial differs")
        _check(data["power"] == root_of_unity_lcm(rank), failures,
               "stored power is not the uniform root-of-unity power")
        for d in data["orders_checked"]:
            _check(poly_gcd(cp, cyclotomic(d)).is_one, failures,
                   f"characteristic polynomial shares a factor with order {d}")
        det = (b ** data["power"] - Matrix.identity(rank)).det()
        _check(det != 0, failures, "power minus identity is singular")
        _check(encoding.encode_scalar(det) == data["det_power_minus_identity"],
               failures, "stored determinant differs")
    elif kind == "witness-character":
        chi = encoding.decode_vector(data["character"])
        _check(any(x != 0 for x in chi), failures, "witness character is zero")
        _check(_matrix_fixes(chi, b ** data["power"]), failures,
               "witness character is not fixed by the stated power")
    elif kind == "cyclotomic-char-poly":
        prod = _cyclotomic_product(data["factors"])
        _check(prod == b.char_poly(), failures,
               "cyclotomic factors do not multiply to the characteristic polynomial")
    elif kind == "non-cyclotomic-factor":
        rest = encoding.decode_poly(data["factor"])
        prod = _cyclotomic_product(data["cyclotomic_part"]) * rest
        _check(prod == b.char_poly(), failures,
               "factorization does not multiply back")
        _check(rest.degree >= 1, failures, "residual factor is constant")
        for d in data["orders_checked"]:
            _check(poly_gcd(rest, cyclotomic(d)).is_one, failures,
                   f"residual factor shares a cyclotomic factor of order {d}")
    else:
        failures.append(f"unknown element certificate kind {kind!r}")


def _cyclotomic_product(factors):
    from .intpoly import Polynomial
    prod = Polynomial.one()
    for d, count in factors:
        prod = prod * cyclotomic(d).pow(count)
    return prod


def replay_group_verdict(action, payload: dict, failures: list) -> None:
    cert = payload["certificate"]
    kind = cert["kind"]
    data = cert["data"]
    duals = action.dual_generators
    if kind == "zero-finite-orbit-subspace":
        m = data["power"]
        stacked = []
        for d in duals:
            stacked.extend(((d ** m) - Matrix.identity(action.dim)).rows)
        _check(kernel(Matrix.from_rows(stacked)).is_zero, failures,
               "finite-orbit subspace is not zero")
    elif kind == "witness-character":
        chi = encoding.decode_vector(data["character"])
        _check(any(x != 0 for x in chi), failures, "witness character is zero")
        for d in duals:
            _check(_matrix_fixes(chi, d ** data["power"]), failures,
                   "witness character is not fixed by a generator power")
        orbit = [encoding.decode_vector(v) for v in data["orbit"]]
        orbit_set = set(orbit)
        _check(tuple(chi) in orbit_set, failures, "orbit does not contain the witness")
        _check(len(orbit_set) == data["orbit_size"], failures, "orbit size mismatch")
        maps = []
        for d in duals:
            maps.append(d)
            maps.append(d.inverse())
        for v in orbit:
            for m in maps:
                _check(m.matvec(v) in orbit_set, failures, "orbit is not closed")
    elif kind == "all-generators-quasi-unipotent":
        for i, sub in enumerate(data["generators"]):
            exps = tuple(1 if j == i else 0 for j in range(action.n_generators))
            replay_element_verdict(action, exps, {"certificate": sub}, failures)
    elif kind == "non-quasi-unipotent-generator":
        for i, sub in enumerate(data["generators"]):
            exps = tuple(1 if j == i else 0 for j in range(action.n_generators))
            replay_element_verdict(action, exps, {"certificate": sub}, failures)
    else:
        failures.append(f"unknown group certificate kind {kind!r}")


def replay_subspace_invariance(action, subspace_payload: dict, failures: list) -> Subspace:
    sub = encoding.decode_subspace(subspace_payload)
    for d in action.dual_generators:
        _check(sub.is_invariant(d), failures, "subspace is not invariant")
    return sub


def replay_filtration(action, payload: dict, failures: list) -> None:
    from .matrices import express_in, quotient_matrix, restrict_matrix
    chain = [encoding.decode_subspace(w) for w in payload["chain"]]
    rank = action.dim
    m = root_of_unity_lcm(rank)
    _check(chain[0].is_full, failures, "chain does not start at the full space")
    for prev, cur in zip(chain, chain[1:]):
        _check(prev.contains_subspace(cur), failures, "chain is not decreasing")
    for w in chain:
        for d in action.dual_generators:
            _check(w.is_invariant(d), failures, "chain member is not invariant")
    for entry, (prev, cur) in zip(payload["attributions"], zip(chain, chain[1:])):
        d = action.dual_generators[entry["generator"] - 1]
        if prev.dim == cur.dim:
            continue
        if prev.is_full and cur.is_zero:
            q = d
        else:
            restricted = restrict_matrix(d, prev)
            inner = express_in(prev, cur)
            q = restricted if inner.is_zero else quotient_matrix(restricted, inner)
        fixed = kernel((q ** m) - Matrix.identity(q.nrows))
        _check(fixed.is_zero, failures, "stage quotient has a finite-orbit character")
    residual = encoding.decode_subspace(payload["residual"])
    _check(residual == chain[-1], failures, "residual differs from the chain tail")
    for d in action.dual_generators:
        if residual.is_zero:
            break
        restricted = restrict_matrix(d, residual)
        nil = (restricted ** m) - Matrix.identity(residual.dim)
        power = nil ** residual.dim
        _check(all(x == 0 for row in power.rows for x in row), failures,
               "a generator is not quasi-unipotent on the residual")
    _check(payload["group_ergodic"] == residual.is_zero, failures,
           "group flag disagrees with the residual")


def replay_bounded_verdict(action, payload: dict, failures: list) -> None:
    cert = payload["certificate"]
    kind = cert["kind"]
    data = cert["data"]
    g = action.presenter
    if kind == "finite-quotient-witness":
        witness = encoding.decode_laurent(data["witness"])
        quotient = encoding.decode_laurent(data["quotient"])
        factor = encoding.decode_laurent(data["common_factor"])
        direction = tuple(data["direction"])
        k = data["power"]
        w = direction_power_minus_one(action.p, action.nvars, direction, k)
        _check(w * witness == quotient * g, failures,
               "witness identity does not hold exactly")
        _check(laurent_divides(g, witness) is None, failures,
               "witness class is zero in the module")
        _check(not factor.is_unit and not factor.is_zero, failures,
               "common factor is trivial")
        _check(laurent_divides(factor, g) is not None, failures,
               "common factor does not divide the presenter")
        _check(laurent_divides(factor, w) is not None, failures,
               "common factor does not divide the power identity")
    elif kind == "trivial-univariate-content":
        var = data["variable"]
        _check(content_in(g, var) == list(data["content"]), failures,
               "stored content differs")
        _check(len(data["content"]) == 1, failures, "content is not constant")
    elif kind == "coprime-axis-powers":
        _check(action.nvars == 2, failures, "closure argument needs two variables")
        _check(not g.is_zero and not g.is_unit, failures,
               "presenter must be a nonzero non-unit")
    elif kind == "bounded-scan":
        direction = tuple(data["direction"])
        for k in range(1, data["k_max"] + 1):
            w = direction_power_minus_one(action.p, 2, direction, k).canonical()
            _check(bivar_gcd(g, w).is_unit, failures,
                   f"scan missed a common factor at power {k}")
    else:
        failures.append(f"unknown bounded certificate kind {kind!r}")


def replay_demo(payload: dict, failures: list) -> None:
    b = payload["box_radius"]
    expected = (2 * b + 1) ** 2 - 1
    _check(payload["points_certified"] == expected, failures,
           "point count does not match the box")
    for point in payload["points"]:
        i, j = point["element"]
        _check(j * i - i * j == point["exponent_on_own_factor"] == 0, failures,
               "exponent identity failed")
    counts = [entry["factor_count"] for entry in payload["chain"]]
    _check(all(a > b2 for a, b2 in zip(counts, counts[1:])), failures,
           "chain counts are not strictly descending")
    _check(len(counts) == b, failures, "chain length does not match the box")


def replay_report(report: dict) -> dict:
    """Re-check every certificate in a serialized report.

    Returns {"checked": n, "failures": [...]}.
    """
    failures: list = []
    checked = 0
    command = report["command"]
    results = report["results"]
    action = None
    if command in ("analyze", "find-ergodic", "filtration", "oracle-check"):
        action = build_action(report["input"])
    if command == "analyze":
        if action.kind in ("toral", "solenoid"):
            for entry in results["generators"]:
                exps = tuple(1 if j == entry["index"] - 1 else 0
                             for j in range(action.n_generators))
                replay_element_verdict(action, exps, entry["ergodic"], failures)
                checked += 1
                replay_element_verdict(action, exps, entry["distal"], failures)
                checked += 1
            replay_group_verdict(action, results["group"]["ergodic"], failures)
            checked += 1
            replay_group_verdict(action, results["group"]["distal"], failures)
            checked += 1
            replay_subspace_invariance(
                action, results["largest_ergodic_subgroup"]["subspace"], failures)
            checked += 1
        else:
            for entry in results["directions"]:
                replay_bounded_verdict(action, entry["verdict"], failures)
                checked += 1
            replay_bounded_verdict(action, results["group"], failures)
            checked += 1
    elif command == "find-ergodic":
        if action.kind in ("toral", "solenoid"):
            replay_group_verdict(action, results["group"], failures)
            checked += 1
            replay_element_verdict(action, tuple(results["exponents"]),
                                   results["verdict"], failures)
            checked += 1
        else:
            replay_bounded_verdict(action, results["group"], failures)
            checked += 1
            replay_bounded_verdict(action, results["verdict"], failures)
            checked += 1
    elif command == "filtration":
        replay_filtration(action, results, failures)
        checked += 1
    elif command == "oracle-check":
        _check(results["consistent"] and not results["failures"], failures,
               "cross-validation recorded failures")
        checked += 1
    elif command == "demo-e2":
        replay_demo(results, failures)
        checked += 1
    else:
        failures.append(f"unknown command {command!r}")
    return {"checked": checked, "failures": failures}

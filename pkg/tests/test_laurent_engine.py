import random

import pytest

from ergodec import (BoundedVerdictKind, LaurentPoly, NotErgodicGroupError,
                     default_k_max, direction_is_ergodic,
                     direction_power_minus_one, find_ergodic_direction,
                     group_is_ergodic, laurent_cyclic_action, laurent_divides,
                     orbit_probe)


def lp(p, nvars, terms):
    return LaurentPoly.from_terms(p, nvars, terms)


def ledrappier_action():
    return laurent_cyclic_action(2, 2, lp(2, 2, {(0, 0): 1, (1, 0): 1, (0, 1): 1}))


def trinomial_action():
    # p=2, one variable, g = u^2 + u + 1 (irreducible)
    return laurent_cyclic_action(2, 1, lp(2, 1, {(0,): 1, (1,): 1, (2,): 1}))


def replay_witness(action, verdict):
    data = verdict.certificate.data
    from ergodec.encoding import decode_laurent
    witness = decode_laurent(data["witness"])
    quotient = decode_laurent(data["quotient"])
    w = direction_power_minus_one(action.p, action.nvars,
                                  tuple(data["direction"]), data["power"])
    assert w * witness == quotient * action.presenter
    assert laurent_divides(action.presenter, witness) is None


class TestOneVariable:
    def test_irreducible_trinomial_witness_at_three(self):
        act = trinomial_action()
        v = direction_is_ergodic(act, (1,))
        assert v.kind == BoundedVerdictKind.NOT_ERGODIC
        assert v.exact
        assert v.certificate.data["power"] == 3
        replay_witness(act, v)

    def test_group_matches_single_direction(self):
        act = trinomial_action()
        g = group_is_ergodic(act)
        assert g.kind == BoundedVerdictKind.NOT_ERGODIC
        assert g.certificate.data["power"] == 3

    def test_witness_power_is_minimal_for_its_witness(self):
        rng = random.Random(103)
        for _ in range(25):
            p = rng.choice([2, 3])
            deg = rng.randint(1, 4)
            coeffs = {(i,): rng.randint(0, p - 1) for i in range(deg)}
            coeffs[(deg,)] = rng.randint(1, p - 1)
            coeffs[(0,)] = rng.randint(1, p - 1)  # keep u invertible mod g
            g = lp(p, 1, coeffs)
            if g.is_unit:
                continue
            act = laurent_cyclic_action(p, 1, g)
            v = direction_is_ergodic(act, (1,))
            assert v.kind == BoundedVerdictKind.NOT_ERGODIC
            k = v.certificate.data["power"]
            assert k <= p ** g.degree_in(0) - 1
            from ergodec.encoding import decode_laurent
            witness = decode_laurent(v.certificate.data["witness"])
            probe = orbit_probe(act, witness, (1,), cap=k + 5)
            assert probe == {"status": "finite", "power": k}

    def test_negative_direction_also_certified(self):
        act = trinomial_action()
        v = direction_is_ergodic(act, (-1,))
        assert v.kind == BoundedVerdictKind.NOT_ERGODIC
        replay_witness(act, v)

    def test_find_direction_rejects_one_variable(self):
        with pytest.raises(NotErgodicGroupError):
            find_ergodic_direction(trinomial_action(), 3)


class TestLedrappier:
    def test_axes_exactly_ergodic(self):
        act = ledrappier_action()
        for n in ((1, 0), (0, 1), (-1, 0), (0, -1)):
            v = direction_is_ergodic(act, n)
            assert v.kind == BoundedVerdictKind.ERGODIC
            assert v.exact
            assert v.certificate.kind == "trivial-univariate-content"

    def test_diagonal_is_bounded(self):
        act = ledrappier_action()
        v = direction_is_ergodic(act, (1, 1))
        assert v.kind == BoundedVerdictKind.ERGODIC_UP_TO
        assert not v.exact
        assert v.bound == default_k_max(act)

    def test_group_exactly_ergodic(self):
        v = group_is_ergodic(ledrappier_action())
        assert v.kind == BoundedVerdictKind.ERGODIC
        assert v.exact

    def test_find_direction_returns_first_axis(self):
        direction, verdict = find_ergodic_direction(ledrappier_action(), 3)
        assert direction == (1, 0)
        assert verdict.exact

    def test_orbit_probe_of_one_never_closes(self):
        act = ledrappier_action()
        probe = orbit_probe(act, LaurentPoly.one(2, 2), (1, 0), 64)
        assert probe == {"status": "no-finite-orbit-up-to", "cap": 64}


class TestTwoVariableWitnesses:
    def test_reducible_presenter_caught_at_one(self):
        # (u1-1)(u2+1) over F3: the content in u1 is u1-1
        g = lp(3, 2, {(1, 1): 1, (1, 0): 1, (0, 1): 2, (0, 0): 2})
        act = laurent_cyclic_action(3, 2, g)
        v = direction_is_ergodic(act, (1, 0))
        assert v.kind == BoundedVerdictKind.NOT_ERGODIC
        assert v.certificate.data["power"] == 1
        replay_witness(act, v)

    def test_group_always_ergodic_in_two_variables(self):
        # (u1-1)(u2-1): both axes fail but the full group is ergodic; a
        # simultaneous witness would be divisible by g after clearing the
        # coprime axis identities, hence zero in the module.
        g = lp(3, 2, {(1, 1): 1, (1, 0): 2, (0, 1): 2, (0, 0): 1})
        act = laurent_cyclic_action(3, 2, g)
        assert direction_is_ergodic(act, (1, 0)).kind == BoundedVerdictKind.NOT_ERGODIC
        assert direction_is_ergodic(act, (0, 1)).kind == BoundedVerdictKind.NOT_ERGODIC
        v = group_is_ergodic(act)
        assert v.kind == BoundedVerdictKind.ERGODIC and v.exact

    def test_group_verdict_backed_by_orbit_probes(self):
        # Oracle support for the simultaneous-coprimality argument: no
        # small class has finite orbit in both axis directions at once.
        g = lp(3, 2, {(1, 1): 1, (1, 0): 2, (0, 1): 2, (0, 0): 1})
        act = laurent_cyclic_action(3, 2, g)
        rng = random.Random(107)
        candidates = [LaurentPoly.one(3, 2),
                      lp(3, 2, {(1, 0): 1, (0, 0): 2}),
                      lp(3, 2, {(0, 1): 1, (0, 0): 2})]
        for _ in range(10):
            terms = {(rng.randint(0, 2), rng.randint(0, 2)): rng.randint(1, 2)
                     for _ in range(rng.randint(1, 3))}
            candidates.append(lp(3, 2, terms))
        for m in candidates:
            if laurent_divides(act.presenter, m) is not None:
                continue
            finite_first = orbit_probe(act, m, (1, 0), 12)["status"] == "finite"
            finite_second = orbit_probe(act, m, (0, 1), 12)["status"] == "finite"
            assert not (finite_first and finite_second)

    def test_mixed_direction_witness(self):
        # g = u1*u2 - 1 divides u^(k*(1,1)) - 1 at k = 1
        g = lp(2, 2, {(1, 1): 1, (0, 0): 1})
        act = laurent_cyclic_action(2, 2, g)
        v = direction_is_ergodic(act, (1, 1))
        assert v.kind == BoundedVerdictKind.NOT_ERGODIC
        assert v.certificate.data["power"] == 1
        replay_witness(act, v)
        # but the opposite diagonal never meets it within the bound
        v2 = direction_is_ergodic(act, (1, -1), k_max=8)
        assert v2.kind == BoundedVerdictKind.ERGODIC_UP_TO

    def test_scan_continues_past_failing_directions(self):
        # (u1+1)*(1+u1+u2) over F2: directions with a u1 power fail at
        # once, the second axis is exactly ergodic.
        h = lp(2, 2, {(0, 0): 1, (1, 0): 1, (0, 1): 1})
        g = lp(2, 2, {(1, 0): 1, (0, 0): 1}) * h
        act = laurent_cyclic_action(2, 2, g)
        assert direction_is_ergodic(act, (1, 0)).kind == BoundedVerdictKind.NOT_ERGODIC
        direction, verdict = find_ergodic_direction(act, 3)
        assert direction == (0, 1)
        assert verdict.exact


class TestInvariances:
    def test_unit_multiple_of_presenter_same_verdicts(self):
        rng = random.Random(109)
        base = lp(2, 2, {(0, 0): 1, (1, 0): 1, (0, 1): 1})
        for _ in range(10):
            unit = LaurentPoly.monomial(2, 2, (rng.randint(-3, 3), rng.randint(-3, 3)))
            act1 = laurent_cyclic_action(2, 2, base)
            act2 = laurent_cyclic_action(2, 2, base * unit)
            for n in ((1, 0), (0, 1), (1, 1)):
                assert (direction_is_ergodic(act1, n).kind
                        == direction_is_ergodic(act2, n).kind)

    def test_variable_swap_with_swapped_direction(self):
        g = lp(3, 2, {(0, 0): 1, (2, 0): 1, (0, 1): 2})
        swapped = lp(3, 2, {(e[1], e[0]): c for e, c in g.terms})
        act = laurent_cyclic_action(3, 2, g)
        act_swapped = laurent_cyclic_action(3, 2, swapped)
        for n in ((1, 0), (0, 1), (1, 1), (2, -1)):
            v1 = direction_is_ergodic(act, n, k_max=6)
            v2 = direction_is_ergodic(act_swapped, (n[1], n[0]), k_max=6)
            assert v1.kind == v2.kind

    def test_zero_direction_rejected(self):
        with pytest.raises(ValueError):
            direction_is_ergodic(ledrappier_action(), (0, 0))

    def test_probe_rejects_zero_class(self):
        act = ledrappier_action()
        with pytest.raises(ValueError):
            orbit_probe(act, act.presenter, (1, 0), 5)

"""Validated descriptions of finitely generated commuting actions.

Three kinds of acting groups are supported: integer matrix groups on
tori (unimodular generators), rational matrix groups on solenoids
(invertible generators), and coordinate translation groups on duals of
cyclic Laurent quotient modules over a prime field.  Validation collects
every failure before reporting, and each validated action carries the
dual generators the engines actually compute with.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import Issue, ValidationError
from .laurent import LaurentPoly
from .matrices import Matrix


@dataclass(frozen=True)
class ToralAction:
    """Commuting unimodular integer matrices acting on the torus of the
    given dimension."""

    dim: int
    generators: tuple
    dual_generators: tuple

    @property
    def kind(self) -> str:
        return "toral"

    @property
    def n_generators(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class SolenoidAction:
    """Commuting invertible rational matrices acting on the solenoid of
    the given rational dimension."""

    dim: int
    generators: tuple
    dual_generators: tuple

    @property
    def kind(self) -> str:
        return "solenoid"

    @property
    def n_generators(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class LaurentCyclicAction:
    """Coordinate translations on the dual of S/(g), where S is the
    Laurent polynomial ring over F_p in one or two variables and g is a
    nonzero non-unit presenter, stored in canonical form."""

    p: int
    nvars: int
    presenter: LaurentPoly

    @property
    def kind(self) -> str:
        return "laurent"


@dataclass(frozen=True)
class ProductDemoSpec:
    """Box radius for the product-action demonstration, built over a
    formal ergodic base automorphism."""

    box_radius: int

    def __post_init__(self):
        if self.box_radius < 1:
            raise ValueError("box radius must be positive")


def dual_matrix(m: Matrix) -> Matrix:
    """Matrix of the dual automorphism: inverse transpose."""
    return m.transpose().inverse()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    q = 2
    while q * q <= n:
        if n % q == 0:
            return False
        q += 1
    return True


def _matrix_issues(mats, dim, unimodular):
    issues = []
    for i, m in enumerate(mats, start=1):
        if not m.is_square or m.nrows != dim:
            issues.append(Issue("bad-shape", (i,),
                                f"generator {i} is not {dim}x{dim}"))
            continue
        d = m.det()
        if unimodular:
            if not m.is_integral:
                issues.append(Issue("not-integral", (i,),
                                    f"generator {i} has non-integer entries"))
            elif d not in (1, -1):
                issues.append(Issue("not-unimodular", (i,),
                                    f"generator {i} has determinant {d}"))
        elif d == 0:
            issues.append(Issue("not-invertible", (i,),
                                f"generator {i} is singular"))
    shaped = [m for m in mats if m.is_square and m.nrows == dim]
    if len(shaped) == len(mats):
        for i in range(len(mats)):
            for j in range(i + 1, len(mats)):
                if mats[i] * mats[j] != mats[j] * mats[i]:
                    issues.append(Issue("non-commuting", (i + 1, j + 1),
                                        f"generators {i + 1} and {j + 1} do not commute"))
    return issues


def toral_action(generators) -> ToralAction:
    mats = tuple(g if isinstance(g, Matrix) else Matrix.from_rows(g) for g in generators)
    issues = []
    if not mats:
        issues.append(Issue("no-generators", (), "at least one generator is required"))
        raise ValidationError(issues)
    dim = mats[0].nrows
    if dim < 1:
        issues.append(Issue("bad-dimension", (), "dimension must be positive"))
    issues.extend(_matrix_issues(mats, dim, unimodular=True))
    if issues:
        raise ValidationError(issues)
    duals = tuple(dual_matrix(m) for m in mats)
    for d in duals:
        if not d.is_integral:
            raise ValidationError([Issue("not-unimodular", (),
                                         "dual generator is not integral")])
    return ToralAction(dim, mats, duals)


def solenoid_action(generators) -> SolenoidAction:
    mats = tuple(g if isinstance(g, Matrix) else Matrix.from_rows(g) for g in generators)
    if not mats:
        raise ValidationError([Issue("no-generators", (),
                                     "at least one generator is required")])
    dim = mats[0].nrows
    issues = _matrix_issues(mats, dim, unimodular=False)
    if issues:
        raise ValidationError(issues)
    return SolenoidAction(dim, mats, tuple(dual_matrix(m) for m in mats))


def laurent_cyclic_action(p: int, nvars: int, presenter: LaurentPoly) -> LaurentCyclicAction:
    issues = []
    if not _is_prime(p):
        issues.append(Issue("bad-modulus", (), f"{p} is not prime"))
    if nvars not in (1, 2):
        issues.append(Issue("bad-variable-count", (), "one or two variables supported"))
    if not issues:
        if presenter.p != p or presenter.nvars != nvars:
            issues.append(Issue("bad-modulus", (),
                                "presenter does not match the declared ring"))
        elif presenter.is_zero or presenter.is_unit:
            issues.append(Issue("unit-presentation", (),
                                "presenter must be a nonzero non-unit"))
    if issues:
        raise ValidationError(issues)
    return LaurentCyclicAction(p, nvars, presenter.canonical())


def element(action, exponents) -> Matrix:
    """Exact product of generator powers."""
    gens = action.generators
    if len(exponents) != len(gens):
        raise ValueError("one exponent per generator expected")
    out = Matrix.identity(action.dim)
    for g, e in zip(gens, exponents):
        if e:
            out = out * (g ** e)
    return out


def dual_element(action, exponents) -> Matrix:
    """Dual matrix of the product of generator powers."""
    gens = action.dual_generators
    if len(exponents) != len(gens):
        raise ValueError("one exponent per generator expected")
    out = Matrix.identity(action.dim)
    for g, e in zip(gens, exponents):
        if e:
            out = out * (g ** e)
    return out


def _decode_entry(v):
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        f = Fraction(v)
        return int(f) if f.denominator == 1 else f
    if isinstance(v, list) and len(v) == 2 and all(isinstance(x, int) for x in v):
        f = Fraction(v[0], v[1])
        return int(f) if f.denominator == 1 else f
    raise ValidationError([Issue("schema", (), f"bad matrix entry {v!r}")])


def build_action(doc: dict):
    """Build and validate an action from a parsed input document."""
    if not isinstance(doc, dict) or "type" not in doc:
        raise ValidationError([Issue("schema", (), "document must declare a type")])
    kind = doc["type"]
    if kind in ("toral", "solenoid"):
        if "generators" not in doc or not isinstance(doc["generators"], list):
            raise ValidationError([Issue("schema", (), "generators array required")])
        try:
            mats = [Matrix.from_rows([[_decode_entry(x) for x in row] for row in g])
                    for g in doc["generators"]]
        except (TypeError, ValueError) as exc:
            if isinstance(exc, ValidationError):
                raise
            raise ValidationError([Issue("schema", (), f"bad generator: {exc}")])
        if "r" in doc and mats and mats[0].nrows != doc["r"]:
            raise ValidationError([Issue("schema", (),
                                         "declared dimension does not match generators")])
        return toral_action(mats) if kind == "toral" else solenoid_action(mats)
    if kind == "laurent":
        for key in ("p", "d", "g"):
            if key not in doc:
                raise ValidationError([Issue("schema", (), f"missing field {key!r}")])
        try:
            g = LaurentPoly.from_terms(doc["p"], doc["d"], [
                (tuple(t["exponents"]), t["coefficient"]) for t in doc["g"]])
        except (TypeError, KeyError, ValueError) as exc:
            raise ValidationError([Issue("schema", (), f"bad presenter: {exc}")])
        return laurent_cyclic_action(doc["p"], doc["d"], g)
    raise ValidationError([Issue("schema", (), f"unknown action type {kind!r}")])

"""Sparse Laurent polynomials over prime fields, in one or two variables.

A Laurent polynomial is a finite map from integer exponent vectors to
nonzero residues mod p.  Monomials are units of the ring, so divisibility
questions are settled on canonical forms, obtained by multiplying with the
unique monomial that makes every exponent nonnegative with a zero minimum
per variable.  Division is sparse multivariate division driven by the
graded lexicographic order; a single divisor generates its own ideal
head, so a zero remainder is equivalent to ideal membership.
"""

from __future__ import annotations

from dataclasses import dataclass


class ModulusMismatchError(ValueError):
    """Operands live over different coefficient fields or variable counts."""


# ---------------------------------------------------------------------------
# Univariate helpers over F_p: coefficient lists, lowest degree first.


def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_add(a, b, p):
    n = max(len(a), len(b))
    return _fp_trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                     for i in range(n)])


def _fp_sub(a, b, p):
    n = max(len(a), len(b))
    return _fp_trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                     for i in range(n)])


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _fp_trim(out)


def _fp_scale(a, c, p):
    c %= p
    return _fp_trim([(x * c) % p for x in a])


def _fp_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    rem = list(a)
    inv = pow(b[-1], p - 2, p)
    dq = len(rem) - len(b)
    if dq < 0:
        return [], _fp_trim(rem)
    quo = [0] * (dq + 1)
    for k in range(dq, -1, -1):
        top = rem[k + len(b) - 1] % p
        if top == 0:
            continue
        q = (top * inv) % p
        quo[k] = q
        for j, y in enumerate(b):
            rem[k + j] = (rem[k + j] - q * y) % p
    return _fp_trim(quo), _fp_trim(rem)


def _fp_exact_div(a, b, p):
    q, r = _fp_divmod(a, b, p)
    if r:
        raise ArithmeticError("inexact univariate division")
    return q


def _fp_monic(a, p):
    if not a:
        return a
    inv = pow(a[-1], p - 2, p)
    return [(x * inv) % p for x in a]


def _fp_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        _, r = _fp_divmod(a, b, p)
        a, b = b, r
    return _fp_monic(a, p)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LaurentPoly:
    """Immutable sparse Laurent polynomial over F_p."""

    p: int
    nvars: int
    terms: tuple  # sorted tuple of (exponent tuple, coefficient in 1..p-1)

    @staticmethod
    def from_terms(p: int, nvars: int, terms) -> "LaurentPoly":
        if nvars not in (1, 2):
            raise ValueError("one or two variables supported")
        acc = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exps, c in items:
            e = tuple(int(x) for x in exps)
            if len(e) != nvars:
                raise ValueError("exponent vector has the wrong length")
            acc[e] = (acc.get(e, 0) + c) % p
        clean = tuple(sorted((e, c) for e, c in acc.items() if c))
        return LaurentPoly(p, nvars, clean)

    @staticmethod
    def zero(p: int, nvars: int) -> "LaurentPoly":
        return LaurentPoly(p, nvars, ())

    @staticmethod
    def one(p: int, nvars: int) -> "LaurentPoly":
        return LaurentPoly.from_terms(p, nvars, {(0,) * nvars: 1})

    @staticmethod
    def monomial(p: int, nvars: int, exps, coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly.from_terms(p, nvars, {tuple(exps): coeff})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    @property
    def is_unit(self) -> bool:
        # Monomials are the units of the Laurent ring.
        return self.is_monomial

    @property
    def is_one(self) -> bool:
        return self.terms == (((0,) * self.nvars, 1),)

    def total_degree(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no degree")
        return max(sum(e) for e, _ in self.terms)

    def degree_in(self, var: int) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no degree")
        return max(e[var] for e, _ in self.terms)

    def min_exponents(self) -> tuple:
        if self.is_zero:
            raise ValueError("zero polynomial has no support")
        return tuple(min(e[v] for e, _ in self.terms) for v in range(self.nvars))

    def is_canonical(self) -> bool:
        return self.is_zero or self.min_exponents() == (0,) * self.nvars

    def canonical(self) -> "LaurentPoly":
        """Unit-normalized form: shift exponents so each variable has
        minimum exponent zero."""
        if self.is_zero:
            return self
        off = self.min_exponents()
        if all(o == 0 for o in off):
            return self
        return LaurentPoly(self.p, self.nvars, tuple(sorted(
            (tuple(x - o for x, o in zip(e, off)), c) for e, c in self.terms)))

    def shift(self, offsets) -> "LaurentPoly":
        return LaurentPoly(self.p, self.nvars, tuple(sorted(
            (tuple(x + o for x, o in zip(e, offsets)), c) for e, c in self.terms)))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._compatible(other)
        return LaurentPoly.from_terms(self.p, self.nvars,
                                      list(self.terms) + list(other.terms))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.p, self.nvars,
                           tuple((e, (-c) % self.p) for e, c in self.terms))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._compatible(other)
        acc = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = (acc.get(e, 0) + c1 * c2) % self.p
        return LaurentPoly(self.p, self.nvars,
                           tuple(sorted((e, c) for e, c in acc.items() if c)))

    def associates(self, other: "LaurentPoly") -> bool:
        """Equal up to multiplication by a unit (monomial times scalar)."""
        a, b = self.canonical(), other.canonical()
        if a.is_zero or b.is_zero:
            return a.is_zero and b.is_zero
        lead_a, lead_b = a.terms[-1][1], b.terms[-1][1]
        scale = (lead_b * pow(lead_a, self.p - 2, self.p)) % self.p
        scaled = tuple((e, (c * scale) % self.p) for e, c in a.terms)
        return scaled == b.terms

    def univariate_in(self, var: int):
        """Coefficient list if the polynomial involves only one variable."""
        other = 1 - var if self.nvars == 2 else None
        if self.is_zero:
            return []
        if other is not None and self.degree_in(other) != 0:
            raise ValueError("polynomial involves the other variable")
        out = [0] * (self.degree_in(var) + 1)
        for e, c in self.terms:
            out[e[var]] = c
        return out

    @staticmethod
    def from_univariate(p: int, nvars: int, var: int, coeffs) -> "LaurentPoly":
        terms = {}
        for i, c in enumerate(coeffs):
            if c % p:
                e = [0] * nvars
                e[var] = i
                terms[tuple(e)] = c % p
        return LaurentPoly.from_terms(p, nvars, terms)

    def coefficients_along(self, var: int) -> dict:
        """For two-variable polynomials: map from exponent of the other
        variable to the univariate coefficient list in `var`."""
        if self.nvars != 2:
            raise ValueError("defined for two-variable polynomials")
        other = 1 - var
        groups = {}
        for e, c in self.terms:
            groups.setdefault(e[other], {})[e[var]] = c
        out = {}
        for j, d in groups.items():
            coeffs = [0] * (max(d) + 1)
            for i, c in d.items():
                coeffs[i] = c
            out[j] = coeffs
        return out

    def _compatible(self, other: "LaurentPoly") -> None:
        if self.p != other.p or self.nvars != other.nvars:
            raise ModulusMismatchError("mixed moduli or variable counts")

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        names = ("u",) if self.nvars == 1 else ("u1", "u2")
        parts = []
        for e, c in sorted(self.terms, key=lambda t: (sum(t[0]), t[0]), reverse=True):
            factors = []
            if c != 1 or all(x == 0 for x in e):
                factors.append(str(c))
            for name, x in zip(names, e):
                if x == 1:
                    factors.append(name)
                elif x != 0:
                    factors.append(f"{name}^{x}")
            parts.append("*".join(factors))
        return " + ".join(parts)


def direction_power_minus_one(p: int, nvars: int, direction, k: int) -> LaurentPoly:
    """The Laurent polynomial u^(k*direction) - 1."""
    exps = tuple(k * n for n in direction)
    if all(x == 0 for x in exps):
        raise ValueError("direction must be nonzero")
    return LaurentPoly.from_terms(p, nvars, {exps: 1, (0,) * nvars: p - 1})


def _grlex_key(e):
    return (sum(e), e)


def _poly_divide_canonical(h: dict, g: dict, p: int, nvars: int):
    """Exact division of canonical polynomial term maps; None when the
    remainder is nonzero.  {g} heads its own ideal, so a term that is not
    reducible by the leading term of g certifies non-membership."""
    lead_g = max(g, key=_grlex_key)
    lead_c_inv = pow(g[lead_g], p - 2, p)
    work = dict(h)
    quo = {}
    while work:
        t = max(work, key=_grlex_key)
        if any(t[i] < lead_g[i] for i in range(nvars)):
            return None
        shift = tuple(t[i] - lead_g[i] for i in range(nvars))
        c = (work[t] * lead_c_inv) % p
        quo[shift] = c
        for e, ce in g.items():
            key = tuple(e[i] + shift[i] for i in range(nvars))
            v = (work.get(key, 0) - c * ce) % p
            if v:
                work[key] = v
            else:
                work.pop(key, None)
    return quo


def laurent_divides(g: LaurentPoly, h: LaurentPoly):
    """Quotient q with q*g == h exactly, or None when h is not a multiple
    of g.  The answer does not depend on unit normalization."""
    g._compatible(h)
    if g.is_zero:
        raise ValueError("division by the zero polynomial")
    if h.is_zero:
        return LaurentPoly.zero(g.p, g.nvars)
    off_g = g.min_exponents()
    off_h = h.min_exponents()
    gc = {tuple(x - o for x, o in zip(e, off_g)): c for e, c in g.terms}
    hc = {tuple(x - o for x, o in zip(e, off_h)): c for e, c in h.terms}
    quo = _poly_divide_canonical(hc, gc, g.p, g.nvars)
    if quo is None:
        return None
    shift = tuple(oh - og for oh, og in zip(off_h, off_g))
    return LaurentPoly.from_terms(g.p, g.nvars, {
        tuple(e[i] + shift[i] for i in range(g.nvars)): c for e, c in quo.items()})


def laurent_gcd_1d(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Monic univariate gcd, after canonicalization."""
    f._compatible(g)
    if f.nvars != 1:
        raise ValueError("univariate gcd needs one-variable polynomials")
    if f.is_zero and g.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    a = f.canonical().univariate_in(0) if not f.is_zero else []
    b = g.canonical().univariate_in(0) if not g.is_zero else []
    return LaurentPoly.from_univariate(f.p, 1, 0, _fp_gcd(a, b, f.p))


def content_in(f: LaurentPoly, var: int):
    """Monic gcd over F_p[u_var] of the coefficients of the canonical form
    of f, grouped by the exponent of the other variable.

    A nonzero univariate polynomial in u_var divides f exactly when it
    divides this content.
    """
    if f.is_zero:
        raise ValueError("content of the zero polynomial is undefined")
    fc = f.canonical()
    if fc.nvars == 1:
        return _fp_monic(fc.univariate_in(0), fc.p)
    gcd = []
    for coeffs in fc.coefficients_along(var).values():
        gcd = _fp_gcd(gcd, coeffs, fc.p)
        if gcd == [1]:
            break
    return gcd


def _to_var2_coeffs(f: LaurentPoly):
    """Canonical two-variable polynomial as a dense list over the second
    variable's exponent, entries univariate in the first variable."""
    by_e2 = f.coefficients_along(0)
    out = [[] for _ in range(max(by_e2) + 1)]
    for j, coeffs in by_e2.items():
        out[j] = coeffs
    return out


def _sylvester_resultant_is_zero(fa, fb, p) -> bool:
    """Whether the resultant in the second variable of two primitive
    two-variable polynomials vanishes.  The Sylvester determinant over
    F_p[u1] is computed by fraction-free Bareiss elimination."""
    m = len(fa) - 1
    n = len(fb) - 1
    size = m + n
    rows = []
    for i in range(n):
        row = [[] for _ in range(size)]
        for j, c in enumerate(fa):
            row[i + (m - j)] = list(c)
        rows.append(row)
    for i in range(m):
        row = [[] for _ in range(size)]
        for j, c in enumerate(fb):
            row[i + (n - j)] = list(c)
        rows.append(row)
    sign = 1
    prev = [1]
    for k in range(size - 1):
        if not rows[k][k]:
            swap = next((i for i in range(k + 1, size) if rows[i][k]), None)
            if swap is None:
                return True
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = _fp_sub(_fp_mul(rows[i][j], rows[k][k], p),
                              _fp_mul(rows[i][k], rows[k][j], p), p)
                rows[i][j] = _fp_exact_div(num, prev, p)
            rows[i][k] = []
        prev = rows[k][k]
    return not rows[size - 1][size - 1]


def bivar_common_factor(f: LaurentPoly, g: LaurentPoly):
    """Whether two two-variable polynomials share a non-unit common
    divisor.  Returns (flag, route) where route names the deciding check:
    a univariate content gcd (with its variable) or the resultant in the
    second variable of the primitive parts."""
    f._compatible(g)
    if f.nvars != 2:
        raise ValueError("two-variable polynomials expected")
    if f.is_zero or g.is_zero:
        raise ValueError("nonzero polynomials expected")
    fc, gc = f.canonical(), g.canonical()
    f_has_2 = fc.degree_in(1) > 0
    g_has_2 = gc.degree_in(1) > 0
    f_has_1 = fc.degree_in(0) > 0
    g_has_1 = gc.degree_in(0) > 0
    if not f_has_2 and not g_has_2:
        gcd = _fp_gcd(fc.univariate_in(0), gc.univariate_in(0), fc.p)
        return len(gcd) > 1, {"route": "univariate", "variable": 0}
    if not f_has_1 and not g_has_1:
        gcd = _fp_gcd(fc.univariate_in(1), gc.univariate_in(1), fc.p)
        return len(gcd) > 1, {"route": "univariate", "variable": 1}
    if not f_has_2:
        gcd = _fp_gcd(fc.univariate_in(0), content_in(gc, 0), fc.p)
        return len(gcd) > 1, {"route": "content", "variable": 0}
    if not g_has_2:
        gcd = _fp_gcd(gc.univariate_in(0), content_in(fc, 0), fc.p)
        return len(gcd) > 1, {"route": "content", "variable": 0}
    if not f_has_1:
        gcd = _fp_gcd(fc.univariate_in(1), content_in(gc, 1), fc.p)
        return len(gcd) > 1, {"route": "content", "variable": 1}
    if not g_has_1:
        gcd = _fp_gcd(gc.univariate_in(1), content_in(fc, 1), fc.p)
        return len(gcd) > 1, {"route": "content", "variable": 1}
    cont_gcd = _fp_gcd(content_in(fc, 0), content_in(gc, 0), fc.p)
    if len(cont_gcd) > 1:
        return True, {"route": "content", "variable": 0}
    pf = _primitive_part_var2(fc)
    pg = _primitive_part_var2(gc)
    if _sylvester_resultant_is_zero(_to_var2_coeffs(pf), _to_var2_coeffs(pg), fc.p):
        return True, {"route": "resultant", "variable": 1}
    return False, {"route": "resultant", "variable": 1}


def _primitive_part_var2(f: LaurentPoly) -> LaurentPoly:
    """Divide out the gcd of the F_p[u1]-coefficients of a canonical
    two-variable polynomial."""
    cont = content_in(f, 0)
    if len(cont) <= 1:
        return f
    divisor = LaurentPoly.from_univariate(f.p, 2, 0, cont)
    q = laurent_divides(divisor, f)
    if q is None:
        raise ArithmeticError("content does not divide its polynomial")
    return q.canonical()


def _prem_var2(a, b, p):
    """Pseudo-remainder of dense var2-coefficient lists over F_p[u1]."""
    ra = [list(c) for c in a]
    db, lb = len(b) - 1, b[-1]
    while len(ra) - 1 >= db and any(ra):
        while ra and not ra[-1]:
            ra.pop()
        if len(ra) - 1 < db:
            break
        da = len(ra) - 1
        top = ra[-1]
        ra = [_fp_mul(c, lb, p) for c in ra]
        shift = da - db
        for j, c in enumerate(b):
            ra[shift + j] = _fp_sub(ra[shift + j], _fp_mul(top, c, p), p)
        ra.pop()
    while ra and not ra[-1]:
        ra.pop()
    return ra


def bivar_gcd(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """A gcd in F_p[u1,u2] of the canonical forms, normalized to leading
    coefficient one in the graded lexicographic order.  Computed from the
    univariate content gcd and a primitive pseudo-remainder sequence."""
    f._compatible(g)
    if f.nvars != 2:
        raise ValueError("two-variable polynomials expected")
    fc, gc = f.canonical(), g.canonical()
    if fc.is_zero or gc.is_zero:
        raise ValueError("nonzero polynomials expected")
    if fc.degree_in(1) == 0 and gc.degree_in(1) == 0:
        gcd = _fp_gcd(fc.univariate_in(0), gc.univariate_in(0), fc.p)
        return LaurentPoly.from_univariate(fc.p, 2, 0, gcd)
    if fc.degree_in(0) == 0 and gc.degree_in(0) == 0:
        gcd = _fp_gcd(fc.univariate_in(1), gc.univariate_in(1), fc.p)
        return LaurentPoly.from_univariate(fc.p, 2, 1, gcd)
    if fc.degree_in(1) == 0:
        gcd = _fp_gcd(fc.univariate_in(0), content_in(gc, 0), fc.p)
        return LaurentPoly.from_univariate(fc.p, 2, 0, gcd)
    if gc.degree_in(1) == 0:
        gcd = _fp_gcd(gc.univariate_in(0), content_in(fc, 0), fc.p)
        return LaurentPoly.from_univariate(fc.p, 2, 0, gcd)
    cont = _fp_gcd(content_in(fc, 0), content_in(gc, 0), fc.p)
    a = _to_var2_coeffs(_primitive_part_var2(fc))
    b = _to_var2_coeffs(_primitive_part_var2(gc))
    if len(a) < len(b):
        a, b = b, a
    while True:
        r = _prem_var2(a, b, fc.p)
        if not r:
            pp = b
            break
        if len(r) == 1:
            pp = None
            break
        cont_r = []
        for c in r:
            cont_r = _fp_gcd(cont_r, c, fc.p)
        r = [_fp_exact_div(c, cont_r, fc.p) for c in r]
        a, b = b, r
    result = LaurentPoly.from_univariate(fc.p, 2, 0, cont)
    if pp is not None:
        cont_pp = []
        for c in pp:
            cont_pp = _fp_gcd(cont_pp, c, fc.p)
        pp = [_fp_exact_div(c, cont_pp, fc.p) for c in pp]
        terms = {}
        for j, coeffs in enumerate(pp):
            for i, c in enumerate(coeffs):
                if c:
                    terms[(i, j)] = c
        result = result * LaurentPoly.from_terms(fc.p, 2, terms)
    lead = max(result.terms, key=lambda t: _grlex_key(t[0]))
    scale = pow(lead[1], fc.p - 2, fc.p)
    result = LaurentPoly(fc.p, 2, tuple((e, (c * scale) % fc.p) for e, c in result.terms))
    for side in (fc, gc):
        if laurent_divides(result, side) is None:
            raise ArithmeticError("gcd candidate fails the divisibility check")
    return result

"""Exact integer Laurent polynomials in one variable q, and fractions of them.

Everything downstream (Hecke coefficients, Gram matrices, determinants) runs on
these two types; no floating point enters the algebra path.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping


# ---------------------------------------------------------------------------
# dense helpers on int-list polynomials (index = degree, no trailing zeros)
# ---------------------------------------------------------------------------

def _strip(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return _strip(out)


def poly_add(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] += bi
    return _strip(out)


def poly_sub(a: list[int], b: list[int]) -> list[int]:
    return poly_add(a, [-x for x in b])


def poly_divmod_exact_lead(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    """Long division a = q*b + r requiring every leading division to be exact in Z.

    Valid whenever the true quotient has integer coefficients (e.g. b | a, or b monic).
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q: list[int] = [0] * max(0, len(a) - len(b) + 1)
    while len(r) >= len(b):
        lead, rem = divmod(r[-1], b[-1])
        if rem:
            raise ValueError("non-exact leading coefficient in polynomial division")
        shift = len(r) - len(b)
        q[shift] = lead
        for i, bi in enumerate(b):
            r[shift + i] -= lead * bi
        _strip(r)
    return _strip(q), r


def poly_content(p: list[int]) -> int:
    c = 0
    for x in p:
        c = gcd(c, x)
    return c


def poly_primitive(p: list[int]) -> tuple[int, list[int]]:
    """Return (content, primitive part) with primitive part having positive lead."""
    if not p:
        return 0, []
    c = poly_content(p)
    if p[-1] < 0:
        c = -c
    return c, [x // c for x in p]


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b (b nonzero), over Z."""
    r = list(a)
    d = b[-1]
    while len(r) >= len(b):
        shift = len(r) - len(b)
        lead = r[-1]
        r = [x * d for x in r]
        for i, bi in enumerate(b):
            r[shift + i] -= lead * bi
        _strip(r)
    return r


def poly_gcd(a: list[int], b: list[int]) -> list[int]:
    """Gcd in Z[q] via the primitive pseudo-remainder sequence."""
    a, b = list(a), list(b)
    if not a:
        return poly_primitive(b)[1] if b else []
    if not b:
        return poly_primitive(a)[1]
    ca, pa = poly_primitive(a)
    cb, pb = poly_primitive(b)
    while pb:
        r = _pseudo_rem(pa, pb)
        pa, pb = pb, poly_primitive(r)[1] if r else []
    g = gcd(abs(ca), abs(cb))
    return [x * g for x in pa]


@lru_cache(maxsize=None)
def cyclotomic_poly(e: int) -> tuple[int, ...]:
    """Coefficients of the e-th cyclotomic polynomial, ascending degree."""
    if e < 1:
        raise ValueError("cyclotomic index must be positive")
    p = [-1] + [0] * (e - 1) + [1]  # q^e - 1
    for d in range(1, e):
        if e % d == 0:
            p, rem = poly_divmod_exact_lead(p, list(cyclotomic_poly(d)))
            if rem:
                raise AssertionError("cyclotomic division left a remainder")
    return tuple(p)


# ---------------------------------------------------------------------------
# LaurentPoly
# ---------------------------------------------------------------------------

class LaurentPoly:
    """Sparse Laurent polynomial in q with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        d: dict[int, int] = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
            for e, c in items:
                if c:
                    d[e] = d.get(e, 0) + c
                    if not d[e]:
                        del d[e]
        self.coeffs = d

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def from_int(cls, n: int) -> "LaurentPoly":
        return cls({0: n})

    @classmethod
    def q_power(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls({e: c})

    @classmethod
    def gauss_int(cls, k: int) -> "LaurentPoly":
        """The q-integer 1 + q + ... + q^(k-1)."""
        return cls({e: 1 for e in range(k)})

    @classmethod
    def gauss_factorial(cls, k: int) -> "LaurentPoly":
        out = cls.one()
        for j in range(2, k + 1):
            out = out * cls.gauss_int(j)
        return out

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def min_exp(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    def max_exp(self) -> int:
        return max(self.coeffs) if self.coeffs else 0

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def monomial_parts(self) -> tuple[int, int]:
        """(coefficient, exponent) for a monomial; raises otherwise."""
        if not self.is_monomial():
            raise ValueError(f"not a monomial: {self}")
        ((e, c),) = self.coeffs.items()
        return c, e

    def constant_value(self) -> int:
        if self.is_zero:
            return 0
        c, e = self.monomial_parts()
        if e != 0:
            raise ValueError(f"not a constant: {self}")
        return c

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        d = dict(self.coeffs)
        for e, c in other.coeffs.items():
            nc = d.get(e, 0) + c
            if nc:
                d[e] = nc
            elif e in d:
                del d[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = d
        return out

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {e: -c for e, c in self.coeffs.items()}
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return LaurentPoly.zero()
            out = LaurentPoly.__new__(LaurentPoly)
            out.coeffs = {e: c * other for e, c in self.coeffs.items()}
            return out
        d: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                nc = d.get(e, 0) + c1 * c2
                if nc:
                    d[e] = nc
                elif e in d:
                    del d[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = d
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            c, e = self.monomial_parts()
            if abs(c) != 1:
                raise ValueError("negative power of a non-unit Laurent polynomial")
            return LaurentPoly({e * n: c ** (n & 1) if c == -1 else 1})
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def bar(self) -> "LaurentPoly":
        """The involution q -> q^(-1)."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {-e: c for e, c in self.coeffs.items()}
        return out

    def shift(self, k: int) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {e + k: c for e, c in self.coeffs.items()}
        return out

    def evaluate(self, x):
        """Evaluate at an invertible ring element (CycloNum, Fraction, complex...).

        Horner on the q-power-cleared polynomial, then one power of x for the shift.
        """
        one = x ** 0
        acc = one * 0
        if self.is_zero:
            return acc
        lo = self.min_exp()
        for e in range(self.max_exp(), lo - 1, -1):
            acc = acc * x
            c = self.coeffs.get(e, 0)
            if c:
                acc = acc + one * c
        if lo:
            acc = acc * x ** lo
        return acc

    # -- division ----------------------------------------------------------

    def to_int_poly(self) -> tuple[list[int], int]:
        """Return (dense poly with nonzero constant term, q-exponent shift)."""
        if self.is_zero:
            return [], 0
        lo = self.min_exp()
        out = [0] * (self.max_exp() - lo + 1)
        for e, c in self.coeffs.items():
            out[e - lo] = c
        return out, lo

    @classmethod
    def from_int_poly(cls, p: list[int], shift: int = 0) -> "LaurentPoly":
        return cls({i + shift: c for i, c in enumerate(p) if c})

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises if the quotient is not an integer Laurent polynomial."""
        if other.is_zero:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero:
            return LaurentPoly.zero()
        pn, sn = self.to_int_poly()
        pd, sd = other.to_int_poly()
        q, r = poly_divmod_exact_lead(pn, pd)
        if r:
            raise ValueError("non-exact Laurent division")
        return LaurentPoly.from_int_poly(q, sn - sd)

    def divides(self, other: "LaurentPoly") -> bool:
        try:
            other.exact_div(self)
            return True
        except (ValueError, ZeroDivisionError):
            return False

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in sorted(self.coeffs.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in data.items()})

    def __repr__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                parts.append(f"{c}")
            elif e == 1:
                parts.append(f"{c}*q")
            else:
                parts.append(f"{c}*q^{e}")
        return " + ".join(parts).replace("+ -", "- ")


def cyclotomic_root_multiplicities(p: LaurentPoly, e_max: int) -> dict[int, int]:
    """Multiplicity of each cyclotomic polynomial Phi_e, 2 <= e <= e_max, in p.

    The overall power of q is cleared first; only nonzero multiplicities are reported.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no well-defined cyclotomic content")
    poly, _ = p.to_int_poly()
    out: dict[int, int] = {}
    for e in range(2, e_max + 1):
        phi = list(cyclotomic_poly(e))
        mult = 0
        while True:
            q, r = poly_divmod_exact_lead(poly, phi) if len(poly) >= len(phi) else ([], [1])
            if r:
                break
            poly = q
            mult += 1
        if mult:
            out[e] = mult
    return out


# ---------------------------------------------------------------------------
# QqFraction: fractions of Laurent polynomials, the field Q(q)
# ---------------------------------------------------------------------------

class QqFraction:
    """Element of Q(q) as a reduced ratio of integer Laurent polynomials.

    Denominators are kept as integer polynomials with nonzero constant term and
    positive leading coefficient; q-power units live in the numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None, _reduced: bool = False):
        if den is None:
            den = LaurentPoly.one()
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if _reduced:
            self.num, self.den = num, den
            return
        self.num, self.den = self._reduce(num, den)

    @staticmethod
    def _reduce(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        if num.is_zero:
            return LaurentPoly.zero(), LaurentPoly.one()
        pn, sn = num.to_int_poly()
        pd, sd = den.to_int_poly()
        g = poly_gcd(pn, pd)
        if len(g) > 1 or g[0] != 1:
            pn, _ = poly_divmod_exact_lead(pn, g)
            pd, _ = poly_divmod_exact_lead(pd, g)
        cn = poly_content(pn)
        cd = poly_content(pd)
        c = gcd(cn, cd)
        if pd[-1] < 0:
            c = -c
        if c != 1:
            pn = [x // c for x in pn]
            pd = [x // c for x in pd]
        return LaurentPoly.from_int_poly(pn, sn - sd), LaurentPoly.from_int_poly(pd, 0)

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> "QqFraction":
        return cls(p, LaurentPoly.one(), _reduced=True)

    @classmethod
    def from_int(cls, n: int) -> "QqFraction":
        return cls.from_laurent(LaurentPoly.from_int(n))

    @classmethod
    def zero(cls) -> "QqFraction":
        return cls.from_int(0)

    @classmethod
    def one(cls) -> "QqFraction":
        return cls.from_int(1)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other: "QqFraction") -> "QqFraction":
        if isinstance(other, int):
            other = QqFraction.from_int(other)
        return QqFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "QqFraction":
        return QqFraction(-self.num, self.den, _reduced=True)

    def __sub__(self, other: "QqFraction") -> "QqFraction":
        return self + (-other)

    def __mul__(self, other: "QqFraction") -> "QqFraction":
        if isinstance(other, int):
            other = QqFraction.from_int(other)
        return QqFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: "QqFraction") -> "QqFraction":
        if isinstance(other, int):
            other = QqFraction.from_int(other)
        if other.is_zero:
            raise ZeroDivisionError("division by zero in Q(q)")
        return QqFraction(self.num * other.den, self.den * other.num)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QqFraction.from_int(other)
        if not isinstance(other, QqFraction):
            return NotImplemented
        return (self.num * other.den) == (other.num * self.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def bar(self) -> "QqFraction":
        return QqFraction(self.num.bar(), self.den.bar())

    def as_laurent(self) -> LaurentPoly:
        """Collapse to a Laurent polynomial; raises if the denominator is not 1."""
        if self.den == LaurentPoly.one():
            return self.num
        return self.num.exact_div(self.den)

    def is_laurent(self) -> bool:
        try:
            self.as_laurent()
            return True
        except (ValueError, ZeroDivisionError):
            return False

    def evaluate(self, x):
        den = self.den.evaluate(x)
        return self.num.evaluate(x) / den

    def __repr__(self) -> str:
        if self.den == LaurentPoly.one():
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"

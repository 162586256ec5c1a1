"""Exact arithmetic in cyclotomic fields Q(zeta_m), with certified real signs.

CycloNum stores an element of Q(zeta_m) in the power basis modulo the m-th
cyclotomic polynomial, as an integer coordinate vector over a common positive
denominator. The embedding is fixed once and for all: zeta_m = exp(2*pi*i/m).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

import mpmath

from .laurent import LaurentPoly, cyclotomic_poly


DEFAULT_PRECISION_BITS = int(os.environ.get("HECKEFORM_PRECISION_BITS", "64"))


# ---------------------------------------------------------------------------
# RationalC: the parameter c with q = exp(2*pi*i*c), normalized to (-1/2, 1/2]
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class RationalC:
    """A rational angle c in (-1/2, 1/2], stored reduced."""

    value: Fraction

    def __init__(self, value) -> None:
        f = Fraction(value)
        # normalize modulo 1 into (-1/2, 1/2]
        r = f - math.floor(f)
        if r > Fraction(1, 2):
            r -= 1
        object.__setattr__(self, "value", r)

    @classmethod
    def parse(cls, text: str) -> "RationalC":
        text = text.strip()
        if "/" in text:
            num, den = text.split("/")
            return cls(Fraction(int(num), int(den)))
        return cls(Fraction(int(text)))

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    def __str__(self) -> str:
        return f"{self.value.numerator}/{self.value.denominator}" if self.value.denominator != 1 \
            else str(self.value.numerator)


def smallest_e(c: RationalC) -> int | float:
    """Smallest e >= 1 with 1 + q + ... + q^(e-1) = 0 at q = exp(2*pi*i*c); inf if none.

    For q != 1 this is the multiplicative order of q, i.e. the reduced denominator.
    """
    m = c.denominator
    return m if m > 1 else math.inf


# ---------------------------------------------------------------------------
# per-conductor data
# ---------------------------------------------------------------------------

class _Ring:
    """Cached structural data for Q(zeta_m)."""

    def __init__(self, m: int):
        self.m = m
        phi_poly = list(cyclotomic_poly(m))
        self.degree = len(phi_poly) - 1
        self.phi_poly = phi_poly
        # reduction of x^k as integer rows, for k in [degree, max(2*degree - 2, m - 1)]
        top = max(2 * self.degree - 2, m - 1)
        rows: list[list[int]] = []
        # x^degree mod Phi = -(phi_poly[:-1]) since Phi is monic
        cur = [-c for c in phi_poly[:-1]]
        rows.append(list(cur))
        for _ in range(self.degree, top):
            # multiply by x and reduce
            lead = cur[-1]
            cur = [0] + cur[:-1]
            if lead:
                for i in range(self.degree):
                    cur[i] -= lead * phi_poly[i]
            rows.append(list(cur))
        self.reduction_rows = rows  # rows[k - degree] = coords of x^k

    def reduce_int_poly(self, p: list[int]) -> list[int]:
        """Reduce an integer polynomial (dense, any length) modulo Phi_m."""
        d = self.degree
        out = p[:d] + [0] * max(0, d - len(p))
        for k in range(d, len(p)):
            c = p[k]
            if c:
                row = self.reduction_rows[k - d]
                for i in range(d):
                    out[i] += c * row[i]
        return out

    def power_coords(self, k: int) -> list[int]:
        """Coordinates of zeta_m^k (k arbitrary integer)."""
        k %= self.m
        if k < self.degree:
            out = [0] * self.degree
            out[k] = 1
            return out
        return self.reduce_int_poly([0] * k + [1])


@lru_cache(maxsize=None)
def _ring(m: int) -> _Ring:
    return _Ring(m)


def _euler_phi(m: int) -> int:
    return _ring(m).degree


# ---------------------------------------------------------------------------
# CycloNum
# ---------------------------------------------------------------------------

class CycloNum:
    """Element of Q(zeta_m): integer coordinates over a positive denominator."""

    __slots__ = ("m", "num", "den")

    def __init__(self, m: int, num: Sequence[int], den: int = 1, _normalized: bool = False):
        self.m = m
        if _normalized:
            self.num = tuple(num)
            self.den = den
            return
        if den == 0:
            raise ZeroDivisionError("zero denominator in CycloNum")
        if den < 0:
            num = [-x for x in num]
            den = -den
        g = den
        for x in num:
            g = gcd(g, x)
            if g == 1:
                break
        if g > 1:
            num = [x // g for x in num]
            den //= g
        self.num = tuple(num)
        self.den = den

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, m: int = 1) -> "CycloNum":
        return cls(m, [0] * _euler_phi(m), 1, _normalized=True)

    @classmethod
    def one(cls, m: int = 1) -> "CycloNum":
        coords = [0] * _euler_phi(m)
        coords[0] = 1
        return cls(m, coords, 1, _normalized=True)

    @classmethod
    def from_fraction(cls, f: Fraction, m: int = 1) -> "CycloNum":
        coords = [0] * _euler_phi(m)
        coords[0] = f.numerator
        return cls(m, coords, f.denominator)

    @classmethod
    def root_of_unity(cls, m: int, k: int = 1) -> "CycloNum":
        """zeta_m^k under the fixed embedding."""
        return cls(m, _ring(m).power_coords(k), 1)

    # -- structure ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for x in self.num)

    def is_rational(self) -> bool:
        return all(x == 0 for x in self.num[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not rational: {self}")
        return Fraction(self.num[0], self.den)

    def promote(self, m2: int) -> "CycloNum":
        """Embed into Q(zeta_m2) for m | m2 via zeta_m -> zeta_m2^(m2/m)."""
        if m2 == self.m:
            return self
        if m2 % self.m:
            raise ValueError(f"cannot promote conductor {self.m} into {m2}")
        step = m2 // self.m
        ring2 = _ring(m2)
        acc = [0] * ring2.degree
        for k, c in enumerate(self.num):
            if c:
                row = ring2.power_coords(k * step)
                for i in range(ring2.degree):
                    acc[i] += c * row[i]
        return CycloNum(m2, acc, self.den)

    @staticmethod
    def _align(a: "CycloNum", b: "CycloNum") -> tuple["CycloNum", "CycloNum"]:
        if a.m == b.m:
            return a, b
        m = a.m * b.m // gcd(a.m, b.m)
        return a.promote(m), b.promote(m)

    # -- arithmetic -------------------------------------------------------------

    def _coerce(self, other) -> "CycloNum":
        if isinstance(other, CycloNum):
            return other
        if isinstance(other, int):
            return CycloNum.from_fraction(Fraction(other), 1)
        if isinstance(other, Fraction):
            return CycloNum.from_fraction(other, 1)
        return NotImplemented

    def __add__(self, other) -> "CycloNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._align(self, other)
        num = [x * b.den + y * a.den for x, y in zip(a.num, b.num)]
        return CycloNum(a.m, num, a.den * b.den)

    __radd__ = __add__

    def __neg__(self) -> "CycloNum":
        return CycloNum(self.m, [-x for x in self.num], self.den, _normalized=True)

    def __sub__(self, other) -> "CycloNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "CycloNum":
        return (-self) + other

    def __mul__(self, other) -> "CycloNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._align(self, other)
        ring = _ring(a.m)
        prod = [0] * (2 * ring.degree - 1 if ring.degree else 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        prod[i + j] += x * y
        coords = ring.reduce_int_poly(prod)
        return CycloNum(a.m, coords, a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        """Field inverse via extended gcd with Phi_m over Q[x]."""
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero CycloNum")
        if self.is_rational():
            f = 1 / self.as_fraction()
            return CycloNum.from_fraction(f, self.m)
        ring = _ring(self.m)

        def strip(p: list[Fraction]) -> list[Fraction]:
            while p and p[-1] == 0:
                p.pop()
            return p

        def poly_sub(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
            out = [Fraction(0)] * max(len(p), len(q))
            for i, c in enumerate(p):
                out[i] += c
            for i, c in enumerate(q):
                out[i] -= c
            return strip(out)

        def poly_mul(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
            if not p or not q:
                return []
            out = [Fraction(0)] * (len(p) + len(q) - 1)
            for i, a in enumerate(p):
                if a:
                    for j, b in enumerate(q):
                        out[i + j] += a * b
            return strip(out)

        def poly_divmod(p: list[Fraction], q: list[Fraction]):
            quo = [Fraction(0)] * max(1, len(p) - len(q) + 1)
            rem = list(p)
            while len(rem) >= len(q):
                c = rem[-1] / q[-1]
                sh = len(rem) - len(q)
                quo[sh] = c
                for i, qc in enumerate(q):
                    rem[sh + i] -= c * qc
                strip(rem)
            return strip(quo), rem

        # extended Euclid on (Phi, a): track s with s*a = gcd (mod Phi)
        r0 = strip([Fraction(c) for c in ring.phi_poly])
        r1 = strip([Fraction(x, self.den) for x in self.num])
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            quo, rem = poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, poly_sub(s0, poly_mul(quo, s1))
        if not r1:
            raise ZeroDivisionError("element is a zero divisor (impossible in a field)")
        g = r1[0]
        inv_coeffs = [c / g for c in s1]
        den = 1
        for c in inv_coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in inv_coeffs] + [0] * max(0, ring.degree - len(inv_coeffs))
        ints = ring.reduce_int_poly(ints)
        return CycloNum(self.m, ints, den)

    def __truediv__(self, other) -> "CycloNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int) -> "CycloNum":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        out = CycloNum.one(self.m)
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._align(self, other)
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        return hash((self.m, self.num, self.den))

    def conj(self) -> "CycloNum":
        """Complex conjugation: zeta_m -> zeta_m^(-1)."""
        ring = _ring(self.m)
        acc = [0] * max(ring.degree, 1)
        for k, c in enumerate(self.num):
            if c:
                row = ring.power_coords(-k)
                for i in range(ring.degree):
                    acc[i] += c * row[i]
        return CycloNum(self.m, acc, self.den)

    def is_real(self) -> bool:
        return self.conj() == self

    # -- numerics ---------------------------------------------------------------

    def interval_real(self, bits: int):
        """mpmath interval enclosing the real part (exact for real elements)."""
        iv = mpmath.iv
        old = iv.prec
        iv.prec = bits
        try:
            total = iv.mpf(0)
            two_pi = 2 * iv.pi
            for k, c in enumerate(self.num):
                if c:
                    total += iv.mpf(c) * iv.cos(two_pi * k / self.m)
            return total / iv.mpf(self.den)
        finally:
            iv.prec = old

    def to_complex(self) -> complex:
        out = 0j
        for k, c in enumerate(self.num):
            if c:
                out += c * complex(math.cos(2 * math.pi * k / self.m),
                                   math.sin(2 * math.pi * k / self.m))
        return out / self.den

    # -- serialization ------------------------------------------------------------

    def to_json(self) -> dict:
        return {"m": self.m, "coords": [str(Fraction(x, self.den)) for x in self.num]}

    @classmethod
    def from_json(cls, data: dict) -> "CycloNum":
        m = int(data["m"])
        fracs = [Fraction(s) for s in data["coords"]]
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        return cls(m, [int(f * den) for f in fracs], den)

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.num):
            if c:
                frac = Fraction(c, self.den)
                terms.append(f"{frac}" if k == 0 else f"{frac}*z{self.m}^{k}")
        return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# specialization, certified signs, roots of unity
# ---------------------------------------------------------------------------

def specialize(p: LaurentPoly, c: RationalC) -> CycloNum:
    """Evaluate a Laurent polynomial at q = exp(2*pi*i*c) inside Q(zeta_m)."""
    m = c.denominator
    r = c.numerator
    ring = _ring(m)
    acc = [0] * max(ring.degree, 1)
    den = 1
    for e, coeff in p.coeffs.items():
        row = ring.power_coords(r * e)
        for i in range(ring.degree):
            acc[i] += coeff * row[i]
    return CycloNum(m, acc, den)


@dataclass(frozen=True)
class SignCert:
    """A certified sign of a real cyclotomic number."""

    value: CycloNum
    sign: int
    precision_used: int


def sign_of_real(x: CycloNum, start_bits: int | None = None, max_bits: int = 1 << 20) -> SignCert:
    """Certified sign of a real cyclotomic number.

    Exact zero test first; otherwise interval evaluation at doubling precision
    until the enclosure excludes zero. Terminates for every nonzero input.
    """
    if not x.is_real():
        raise ValueError(f"sign_of_real requires a real element, got {x!r}")
    if x.is_zero:
        return SignCert(x, 0, 0)
    bits = start_bits or DEFAULT_PRECISION_BITS
    while bits <= max_bits:
        box = x.interval_real(bits)
        if box.a > 0:
            return SignCert(x, 1, bits)
        if box.b < 0:
            return SignCert(x, -1, bits)
        bits *= 2
    raise RuntimeError(f"sign not certified below {max_bits} bits for {x!r}")


def root_of_unity_log(x: CycloNum) -> tuple[int, int]:
    """Write x as zeta_M^j with M = lcm(2, m); raises if x is not a root of unity."""
    m = x.m
    big = m if m % 2 == 0 else 2 * m
    zeta = CycloNum.root_of_unity(big, 1)
    xb = x.promote(big)
    cur = CycloNum.one(big)
    for j in range(big):
        if cur == xb:
            return big, j
        cur = cur * zeta
    raise ValueError(f"not a root of unity in its field: {x!r}")


def sqrt_root_of_unity(x: CycloNum) -> CycloNum:
    """A square root of a root of unity, enlarging the conductor at most twofold."""
    big, j = root_of_unity_log(x)
    if j % 2 == 0:
        return CycloNum.root_of_unity(big, j // 2)
    return CycloNum.root_of_unity(2 * big, j)

"""Specht modules in the cellular basis: actions, Gram matrices, Hermitian forms.

The cellular basis is recovered from the seminormal model through
z_t = z_lambda T_{d(t)} with z_lambda equal to the seminormal vector of the
initial tableau (dominance-maximality makes the identification exact). The
bilinear form is then forced by invariance from <z_lambda, z_lambda>.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .combinat import MultiPartition, Partition, Tableau, as_multipartition, tableaux
from .cyclo import CycloNum, RationalC, smallest_e, specialize, sqrt_root_of_unity
from .laurent import (LaurentPoly, QqFraction, cyclotomic_poly,
                      cyclotomic_root_multiplicities)
from .matrixtools import bareiss_det, invert_matrix, mat_mul, mat_vec, transpose, vec_mat
from .seminormal import CycloField, SymbolicField, seminormal_module


@dataclass(frozen=True)
class AlgebraSpec:
    """Which Hecke algebra, and over which coefficients, a module is built for.

    ``params`` are angle exponents: q = exp(2*pi*i*c) and, for r >= 2, the
    cyclotomic parameters q_k = exp(2*pi*i*c_k). Symbolic mode is type A only.
    """

    n: int
    r: int = 1
    mode: str = "symbolic"
    params: tuple[RationalC, ...] = ()

    def __post_init__(self):
        if self.n < 1 or self.r < 1:
            raise ValueError("rank and level must be positive")
        if self.mode == "symbolic":
            if self.r != 1:
                raise ValueError("symbolic coefficients are supported for r = 1 only")
            if self.params:
                raise ValueError("symbolic mode takes no parameters")
        elif self.mode == "specialized":
            want = 1 if self.r == 1 else self.r + 1
            if len(self.params) != want:
                raise ValueError(f"specialized mode for r={self.r} needs {want} parameters")
        else:
            raise ValueError(f"unknown coefficient mode: {self.mode}")

    def coefficient_field(self):
        if self.mode == "symbolic":
            return SymbolicField()
        c_q = self.params[0]
        if self.r == 1:
            return CycloField.from_exponents(c_q, [RationalC(0)])
        return CycloField.from_exponents(c_q, list(self.params[1:]))


def sigma_power_exponent(shape: Partition | MultiPartition) -> int:
    """The exponent s with sigma(x_lambda) = q^s x_lambda: minus the length of the
    longest element of the row stabilizer."""
    shape = as_multipartition(shape)
    return -sum(w * (w - 1) // 2 for w in shape.rows())


@dataclass
class SpechtData:
    """A cell module: basis tableaux, generator actions, and the invariant Gram form.

    ``action[i]`` is the left-action matrix of T_i (columns transform); ``gram``
    satisfies transpose(action[i]) @ gram == gram @ action[i] for every i.
    """

    shape: MultiPartition
    spec: AlgebraSpec
    basis: list[Tableau]
    action: dict[int, list[list]]
    gram: list[list]
    right_matrices: dict[int, list[list]] = field(repr=False, default_factory=dict)
    parents: list[tuple[int, int] | None] = field(repr=False, default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def is_symbolic(self) -> bool:
        return self.spec.mode == "symbolic"


class GuardError(ValueError):
    """A resource guard refused the computation (CLI exit code 3)."""


def _to_laurent_matrix(rows: list[list[QqFraction]]) -> list[list[LaurentPoly]]:
    out = []
    for row in rows:
        lrow = []
        for x in row:
            if not x.is_laurent():
                raise AssertionError("cellular matrix entry is not a Laurent polynomial")
            lrow.append(x.as_laurent())
        out.append(lrow)
    return out


def build_specht(shape: Partition | MultiPartition, spec: AlgebraSpec | None = None) -> SpechtData:
    """Generator action matrices and Gram matrix in the standard-tableau basis."""
    shape = as_multipartition(shape)
    if spec is None:
        spec = AlgebraSpec(n=shape.n, r=shape.r)
    if shape.n != spec.n or shape.r != spec.r:
        raise ValueError(f"shape {shape} does not match algebra spec {spec}")
    if not tableaux(shape, "standard"):
        raise ValueError(f"shape {shape} has no standard tableaux")

    fld = spec.coefficient_field()
    sn = seminormal_module(shape, fld)
    dim = sn.dimension
    symbolic = isinstance(fld, SymbolicField)
    basis, lengths, parents = sn.basis, sn.lengths, sn.parents
    index = {t: k for k, t in enumerate(basis)}
    zero, one, q = fld.zero, fld.one, fld.q
    q_minus_1 = q - one

    # rows of the transition: z_t in seminormal coordinates, z_{t^lambda} = f_{t^lambda}
    order = sorted(range(dim), key=lambda k: (lengths[k], k))
    P: list[list] = [None] * dim
    P[0] = [one if j == 0 else zero for j in range(dim)]
    for ti in order:
        if parents[ti] is not None:
            pi, i = parents[ti]
            P[ti] = vec_mat(P[pi], sn.matrices[i - 1])
    P_inv = invert_matrix(P)

    # Murphy action, right-module convention: row t of R_i = expansion of z_t T_i
    n = shape.n
    right: dict[int, list[list]] = {}
    for i in range(1, n):
        rows = []
        for ti, t in enumerate(basis):
            ci, ri_, col_i = t.position_of(i)
            cj, rj_, col_j = t.position_of(i + 1)
            row = [zero] * dim
            if ci == cj and ri_ == rj_:
                row[ti] = q
            else:
                s = t.swap_values(i)
                if s in index:
                    si = index[s]
                    if lengths[si] > lengths[ti]:
                        row[si] = one
                    else:
                        row[si] = q
                        row[ti] = q_minus_1
                else:
                    assert ci == cj and col_i == col_j, "non-standard swap off the column case"
                    row = vec_mat(vec_mat(P[ti], sn.matrices[i - 1]), P_inv)
            rows.append(row)
        right[i] = rows

    # Gram: base column from the seminormal diagonal, the rest by invariance
    gamma0 = sn.gammas[0]
    gram_cols: list[list] = [None] * dim
    gram_cols[0] = [gamma0 * P[s][0] for s in range(dim)]
    for ti in order:
        if parents[ti] is not None:
            pi, i = parents[ti]
            gram_cols[ti] = mat_vec(right[i], gram_cols[pi])
    gram = [[gram_cols[t][s] for t in range(dim)] for s in range(dim)]

    if symbolic:
        right = {i: _to_laurent_matrix(rows) for i, rows in right.items()}
        gram = _to_laurent_matrix(gram)
    for s in range(dim):
        for t in range(s):
            assert gram[s][t] == gram[t][s], "Gram matrix must be symmetric"

    action = {i: transpose(rows) for i, rows in right.items()}
    return SpechtData(shape, spec, basis, action, gram, right, parents)


@lru_cache(maxsize=None)
def symbolic_specht(parts: tuple[int, ...]) -> SpechtData:
    """Cached symbolic cell module for a one-component shape."""
    shape = Partition(parts)
    return build_specht(shape, AlgebraSpec(n=shape.n))


# ---------------------------------------------------------------------------
# the module involution sigma and the Hermitian form
# ---------------------------------------------------------------------------

def _laurent_identity(dim: int) -> list[list[LaurentPoly]]:
    one, zero = LaurentPoly.one(), LaurentPoly.zero()
    return [[one if i == j else zero for j in range(dim)] for i in range(dim)]


@lru_cache(maxsize=None)
def sigma_matrix_symbolic(parts: tuple[int, ...]) -> list[list[LaurentPoly]]:
    """Matrix of the semilinear involution on the cell module, over Z[q, q^-1].

    Column t is sigma(v_t) = q^s T_{d(t)}^{-1} v_{t^lambda}, assembled along the
    BFS tree; entries are Laurent, so the matrix specializes everywhere.
    """
    sd = symbolic_specht(parts)
    dim = sd.dimension
    n = sd.spec.n
    s_exp = sigma_power_exponent(sd.shape)
    qinvm = LaurentPoly.q_power(-1)
    q_minus_1 = LaurentPoly.q_power(1) - LaurentPoly.one()
    # left action of T_i^{-1} = (T_i - (q-1)) / q
    left_inv = {}
    for i in range(1, n):
        mat = sd.action[i]
        left_inv[i] = [[(mat[a][b] - (q_minus_1 if a == b else LaurentPoly.zero())) * qinvm
                        for b in range(dim)] for a in range(dim)]
    cols: list[list[LaurentPoly] | None] = [None] * dim
    base = [LaurentPoly.zero()] * dim
    base[0] = LaurentPoly.q_power(s_exp)
    cols[0] = base
    pending = [ti for ti in range(dim) if sd.parents[ti] is not None]
    while pending:
        rest = []
        for ti in pending:
            pi, i = sd.parents[ti]
            if cols[pi] is not None:
                cols[ti] = mat_vec(left_inv[i], cols[pi])
            else:
                rest.append(ti)
        if len(rest) == len(pending):
            raise AssertionError("cyclic parent structure")
        pending = rest
    return [[cols[t][s] for t in range(dim)] for s in range(dim)]


@lru_cache(maxsize=None)
def phase_monomial(parts: tuple[int, ...]) -> tuple[int, int]:
    """(sign, exponent) with (G S)^T = sign * q^exponent * bar(G S), proved symbolically."""
    sd = symbolic_specht(parts)
    S = sigma_matrix_symbolic(parts)
    R = mat_mul(sd.gram, S)
    dim = sd.dimension
    ratio = None
    for a in range(dim):
        for b in range(dim):
            if not R[b][a].is_zero and not R[a][b].is_zero:
                ratio = R[b][a].exact_div(R[a][b].bar())
                break
        if ratio is not None:
            break
    if ratio is None:
        raise AssertionError("sesquilinear form vanished identically in symbolic mode")
    sign, exp = ratio.monomial_parts()
    if sign not in (1, -1):
        raise AssertionError("phase ratio is not a unit monomial")
    unit = LaurentPoly.q_power(exp, sign)
    for a in range(dim):
        for b in range(dim):
            assert R[b][a] == R[a][b].bar() * unit, "phase monomial identity fails entrywise"
    return sign, exp


def specialize_matrix(mat: list[list[LaurentPoly]], c: RationalC) -> list[list[CycloNum]]:
    return [[specialize(x, c) for x in row] for row in mat]


@dataclass
class HermitianGram:
    """The braid-invariant Hermitian form at a unit-circle specialization."""

    shape: MultiPartition
    c: RationalC
    matrix: list[list[CycloNum]]
    alpha: CycloNum
    sigma_matrix: list[list[CycloNum]]

    @property
    def dimension(self) -> int:
        return len(self.matrix)


def sigma_on_module(sd: SpechtData, c: RationalC) -> list[list[CycloNum]]:
    """The semilinear involution's matrix at q = exp(2*pi*i*c); always invertible."""
    if not sd.is_symbolic():
        raise ValueError("sigma_on_module needs the symbolic cell module")
    return specialize_matrix(sigma_matrix_symbolic(sd.shape.as_partition().parts), c)


def hermitian_gram(sd: SpechtData, c: RationalC) -> HermitianGram:
    """H = alpha * conj(G_c S_c): exactly Hermitian and braid-invariant.

    At total degenerations (G_c = 0) the zero form is returned with alpha = 1.
    """
    if not sd.is_symbolic():
        raise ValueError("hermitian_gram needs the symbolic cell module")
    parts = sd.shape.as_partition().parts
    g_c = specialize_matrix(sd.gram, c)
    s_c = sigma_on_module(sd, c)
    dim = sd.dimension
    if all(x.is_zero for row in g_c for x in row):
        return HermitianGram(sd.shape, c, g_c, CycloNum.one(), s_c)
    b = mat_mul(g_c, s_c)
    if all(x.is_zero for row in b for x in row):
        raise AssertionError("nonzero bilinear form with vanishing sesquilinear form")
    sign, exp = phase_monomial(parts)
    m = c.denominator
    u_c = CycloNum.root_of_unity(m, (c.numerator * exp) % m)
    if sign < 0:
        u_c = -u_c
    alpha = sqrt_root_of_unity(u_c)
    h = [[alpha * x.conj() for x in row] for row in b]
    return HermitianGram(sd.shape, c, h, alpha, s_c)


# ---------------------------------------------------------------------------
# Gram determinant and Jantzen layers
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def gram_determinant_cached(parts: tuple[int, ...]) -> LaurentPoly:
    sd = symbolic_specht(parts)
    det = bareiss_det(sd.gram)
    assert not det.is_zero, "generic Gram determinant must be nonzero"
    return det


def gram_determinant(sd: SpechtData) -> LaurentPoly:
    """Exact determinant of the symbolic Gram matrix (fraction-free elimination)."""
    if not sd.is_symbolic():
        raise ValueError("gram_determinant needs the symbolic cell module")
    return gram_determinant_cached(sd.shape.as_partition().parts)


def det_factor_table(parts: tuple[int, ...]) -> dict:
    """Factor det G as unit * prod Phi_e^mult; asserts nothing else remains."""
    det = gram_determinant_cached(parts)
    n = sum(parts)
    mults = cyclotomic_root_multiplicities(det, max(n, 2))
    rem = det
    for e, k in mults.items():
        phi = LaurentPoly({i: c for i, c in enumerate(cyclotomic_poly(e))})
        for _ in range(k):
            rem = rem.exact_div(phi)
    coeff, exp = rem.monomial_parts()
    assert coeff in (1, -1), f"non-cyclotomic content {rem} left in Gram determinant"
    return {"multiplicities": mults, "unit_sign": coeff, "unit_exponent": exp}


@dataclass
class JantzenReport:
    shape: MultiPartition
    c: RationalC
    layer_dims: list[int]


class _Series:
    """Truncated power series in t = q - zeta over a cyclotomic field."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: list[CycloNum]):
        self.coeffs = coeffs

    def valuation(self) -> int | None:
        for k, c in enumerate(self.coeffs):
            if not c.is_zero:
                return k
        return None

    def __add__(self, other):
        return _Series([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return _Series([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        npr = len(self.coeffs)
        out = [CycloNum.zero() for _ in range(npr)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= npr:
                    break
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return _Series(out)

    def unit_inverse(self):
        if self.coeffs[0].is_zero:
            raise ZeroDivisionError("series has positive valuation")
        npr = len(self.coeffs)
        inv0 = self.coeffs[0].inverse()
        out = [inv0] + [CycloNum.zero()] * (npr - 1)
        for k in range(1, npr):
            acc = CycloNum.zero()
            for j in range(1, k + 1):
                if not self.coeffs[j].is_zero:
                    acc = acc + self.coeffs[j] * out[k - j]
            out[k] = -(inv0 * acc)
        return _Series(out)


def _laurent_to_series(p: LaurentPoly, pow_table: dict[int, _Series], precision: int) -> _Series:
    acc = _Series([CycloNum.zero() for _ in range(precision)])
    for e, cf in sorted(p.coeffs.items()):
        acc = acc + _Series([x * cf for x in pow_table[e].coeffs])
    return acc


def _power_table(exponents: set[int], zeta: CycloNum, precision: int) -> dict[int, _Series]:
    """Series of (zeta + t)^e for every required exponent e."""
    one = _Series([CycloNum.one()] + [CycloNum.zero()] * (precision - 1))
    qs = _Series(([zeta, CycloNum.one()] + [CycloNum.zero()] * precision)[:precision])
    qinv = qs.unit_inverse()
    table = {0: one}
    hi = max((e for e in exponents if e > 0), default=0)
    lo = min((e for e in exponents if e < 0), default=0)
    cur = one
    for e in range(1, hi + 1):
        cur = cur * qs
        table[e] = cur
    cur = one
    for e in range(-1, lo - 1, -1):
        cur = cur * qinv
        table[e] = cur
    return table


def jantzen_layers(sd: SpechtData, c: RationalC) -> JantzenReport:
    """Layer dimensions of the (q - zeta)-adic filtration of the Gram form.

    Computed from the valuations of the elementary divisors of G over the local
    ring at q = zeta, by Smith-style elimination on truncated power series.
    """
    if not sd.is_symbolic():
        raise ValueError("jantzen_layers needs the symbolic cell module")
    parts = sd.shape.as_partition().parts
    dim = sd.dimension
    e = smallest_e(c)
    det = gram_determinant_cached(parts)
    if math.isinf(e):
        return JantzenReport(sd.shape, c, [dim, 0])
    mults = cyclotomic_root_multiplicities(det, max(int(e), 2))
    total = mults.get(int(e), 0)
    if total == 0:
        return JantzenReport(sd.shape, c, [dim, 0])
    precision = total + dim + 2
    zeta = CycloNum.root_of_unity(c.denominator, c.numerator)
    exponents = {e2 for row in sd.gram for x in row for e2 in x.coeffs}
    table = _power_table(exponents, zeta, precision)
    mat = [[_laurent_to_series(x, table, precision) for x in row] for row in sd.gram]
    divisors: list[int] = []
    rows = list(range(dim))
    cols = list(range(dim))
    while rows:
        best = None
        for a in rows:
            for b in cols:
                v = mat[a][b].valuation()
                if v is not None and (best is None or v < best[0]):
                    best = (v, a, b)
        if best is None:
            raise AssertionError("Jantzen elimination exhausted precision")
        v, pa, pb = best
        divisors.append(v)
        pivot_unit = _Series(list(mat[pa][pb].coeffs[v:]) + [CycloNum.zero()] * v)
        pinv = pivot_unit.unit_inverse()
        for a in rows:
            if a == pa:
                continue
            f = mat[a][pb]
            if f.valuation() is None:
                continue
            f_shift = _Series(list(f.coeffs[v:]) + [CycloNum.zero()] * v)
            factor = f_shift * pinv
            for b in cols:
                mat[a][b] = mat[a][b] - factor * mat[pa][b]
        rows.remove(pa)
        cols.remove(pb)
    assert sum(divisors) == total, "elementary divisor valuations must sum to det multiplicity"
    layers = [dim]
    i = 1
    while True:
        d = sum(1 for v in divisors if v >= i)
        layers.append(d)
        if d == 0:
            break
        i += 1
    return JantzenReport(sd.shape, c, layers)

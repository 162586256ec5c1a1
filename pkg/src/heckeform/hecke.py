"""Hecke algebra arithmetic.

Two engines share the element interface:

* type A (r = 1): the T_w basis with the classical length-bookkeeping
  multiplication, symbolic (Laurent) or specialized (cyclotomic) coefficients;
* Ariki-Koike (r >= 2), specialized coefficients: elements are coordinate
  vectors over the normal-form basis {L^a T_w}, with products computed in a
  faithful sum of cell modules and re-expanded by an exact linear solve.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinat import (MultiPartition, Partition, Permutation, as_multipartition,
                       multipartitions_of, young_subgroup_elements)
from .cyclo import CycloNum, RationalC
from .laurent import LaurentPoly
from .matrixtools import invert_matrix, mat_mul, solve_linear_system
from .seminormal import CycloField, seminormal_module
from .specht import AlgebraSpec


# ---------------------------------------------------------------------------
# type A engine: elements as {permutation word: coefficient}
# ---------------------------------------------------------------------------

class HeckeElement:
    """Element of H_q(S_n) in the T_w basis; coefficients Laurent or cyclotomic."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: AlgebraSpec, terms: dict[tuple[int, ...], object] | None = None):
        if spec.r != 1:
            raise ValueError("HeckeElement is the type A engine; use ArikiKoike for r >= 2")
        self.spec = spec
        self.terms = {}
        if terms:
            for w, c in terms.items():
                if not _is_zero_coeff(c):
                    self.terms[w] = c

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        if self.spec != other.spec:
            return False
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[w] == other.terms[w] for w in self.terms)

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        _check_same_spec(self, other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms[w] + c if w in terms else c
        return HeckeElement(self.spec, terms)

    def __neg__(self) -> "HeckeElement":
        return self.scale(-1)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, c) -> "HeckeElement":
        return HeckeElement(self.spec, {w: x * c for w, x in self.terms.items()})

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        _check_same_spec(self, other)
        out = HeckeElement(self.spec)
        for w, c in other.terms.items():
            piece = self
            for i in Permutation(w).reduced_word():
                piece = right_mult_gen(piece, i)
            out = out + piece.scale(c)
        return out

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, w: tuple[int, ...]):
        return self.terms.get(w, _ring(self.spec).zero)

    def to_json(self) -> list[dict]:
        out = []
        for w in sorted(self.terms):
            c = self.terms[w]
            cj = c.to_json() if hasattr(c, "to_json") else str(c)
            out.append({"word": ",".join(str(x) for x in w), "coeff": cj})
        return out

    def __repr__(self) -> str:
        if self.is_zero:
            return "0"
        return " + ".join(f"({self.terms[w]!r})*T{list(w)}" for w in sorted(self.terms))


class _SymbolicRing:
    def __init__(self):
        self.one = LaurentPoly.one()
        self.zero = LaurentPoly.zero()
        self.q = LaurentPoly.q_power(1)
        self.qinv = LaurentPoly.q_power(-1)

    @staticmethod
    def conj(c: LaurentPoly) -> LaurentPoly:
        return c.bar()


class _SpecializedRing:
    def __init__(self, c_q: RationalC):
        self.one = CycloNum.one()
        self.zero = CycloNum.zero()
        self.q = CycloNum.root_of_unity(c_q.denominator, c_q.numerator)
        self.qinv = self.q.inverse()

    @staticmethod
    def conj(c: CycloNum) -> CycloNum:
        return c.conj()


@lru_cache(maxsize=None)
def _ring(spec: AlgebraSpec):
    return _SymbolicRing() if spec.mode == "symbolic" else _SpecializedRing(spec.params[0])


def _is_zero_coeff(c) -> bool:
    return c.is_zero


def _check_same_spec(a: HeckeElement, b: HeckeElement):
    if a.spec != b.spec:
        raise ValueError(f"algebra mismatch: {a.spec} vs {b.spec}")


def unit(spec: AlgebraSpec) -> HeckeElement:
    return HeckeElement(spec, {Permutation.identity(spec.n).word: _ring(spec).one})


def gen(spec: AlgebraSpec, i: int) -> HeckeElement:
    """The generator T_i, 1 <= i <= n-1 (for r = 1, T_0 is the identity)."""
    if i == 0:
        return unit(spec)
    if not 1 <= i < spec.n:
        raise ValueError(f"generator index {i} out of range for n={spec.n}")
    return HeckeElement(spec, {Permutation.transposition(spec.n, i).word: _ring(spec).one})


def right_mult_gen(x: HeckeElement, i: int) -> HeckeElement:
    """x * T_i: right multiplication swaps the values i, i+1 of each word."""
    rg = _ring(x.spec)
    terms: dict[tuple[int, ...], object] = {}

    def put(w, c):
        if w in terms:
            terms[w] = terms[w] + c
        else:
            terms[w] = c

    for w, c in x.terms.items():
        pos_i = w.index(i)
        pos_j = w.index(i + 1)
        wl = list(w)
        wl[pos_i], wl[pos_j] = wl[pos_j], wl[pos_i]
        ws = tuple(wl)
        if pos_i < pos_j:
            put(ws, c)
        else:
            put(ws, c * rg.q)
            put(w, c * (rg.q - rg.one))
    return HeckeElement(x.spec, terms)


def left_mult_gen(i: int, x: HeckeElement) -> HeckeElement:
    """T_i * x: left multiplication swaps the entries at positions i, i+1."""
    rg = _ring(x.spec)
    terms: dict[tuple[int, ...], object] = {}

    def put(w, c):
        if w in terms:
            terms[w] = terms[w] + c
        else:
            terms[w] = c

    for w, c in x.terms.items():
        length_up = w[i - 1] < w[i]
        wl = list(w)
        wl[i - 1], wl[i] = wl[i], wl[i - 1]
        ws = tuple(wl)
        if length_up:
            put(ws, c)
        else:
            put(ws, c * rg.q)
            put(w, c * (rg.q - rg.one))
    return HeckeElement(x.spec, terms)


def t_word(spec: AlgebraSpec, word: tuple[int, ...]) -> HeckeElement:
    out = unit(spec)
    for i in word:
        out = right_mult_gen(out, i)
    return out


def invert_generator(spec: AlgebraSpec, i: int) -> HeckeElement:
    """T_i^{-1} = q^{-1} T_i + (q^{-1} - 1)."""
    rg = _ring(spec)
    if i == 0:
        return unit(spec)
    return gen(spec, i).scale(rg.qinv) + unit(spec).scale(rg.qinv - rg.one)


def right_mult_gen_inverse(x: HeckeElement, i: int) -> HeckeElement:
    rg = _ring(x.spec)
    return right_mult_gen(x, i).scale(rg.qinv) + x.scale(rg.qinv - rg.one)


@lru_cache(maxsize=None)
def _sigma_of_word(spec: AlgebraSpec, word: tuple[int, ...]) -> HeckeElement:
    """sigma(T_w), built up one generator inverse at a time."""
    if not word:
        return unit(spec)
    prefix = _sigma_of_word(spec, word[:-1])
    return right_mult_gen_inverse(prefix, word[-1])


def sigma(x: HeckeElement) -> HeckeElement:
    """The semilinear involution: coefficients are barred, T_w -> product of T_i^{-1}."""
    rg = _ring(x.spec)
    out = HeckeElement(x.spec)
    for w, c in x.terms.items():
        out = out + _sigma_of_word(x.spec, Permutation(w).reduced_word()).scale(rg.conj(c))
    return out


def star(x: HeckeElement) -> HeckeElement:
    """The linear anti-involution fixing the generators: T_w -> T_{w^{-1}}."""
    return HeckeElement(x.spec, {Permutation(w).inverse().word: c for w, c in x.terms.items()})


def jucys_murphy(spec: AlgebraSpec, m: int) -> HeckeElement:
    """L_m = q^{1-m} T_{m-1} ... T_1 T_0 T_1 ... T_{m-1} (T_0 = 1 for r = 1)."""
    if not 1 <= m <= spec.n:
        raise ValueError(f"L_{m} out of range for n={spec.n}")
    rg = _ring(spec)
    word = tuple(range(m - 1, 0, -1)) + tuple(range(1, m))
    return t_word(spec, word).scale(rg.qinv ** (m - 1))


def x_lambda(spec: AlgebraSpec, shape: Partition | MultiPartition) -> HeckeElement:
    """Sum of T_w over the row stabilizer of the initial tableau."""
    shape = as_multipartition(shape)
    if shape.n != spec.n:
        raise ValueError(f"|{shape}| != n={spec.n}")
    rg = _ring(spec)
    return HeckeElement(spec, {w.word: rg.one for w in young_subgroup_elements(shape)})


def m_lambda(spec: AlgebraSpec, shape: Partition | MultiPartition) -> HeckeElement:
    """For r = 1 the Jucys-Murphy prefactor is empty, so m_lambda = x_lambda."""
    return x_lambda(spec, shape)


def sigma_x_exponent(spec: AlgebraSpec, shape: Partition | MultiPartition) -> int:
    """Compute sigma(x_lambda), assert it is q^s x_lambda, and return s."""
    if spec.mode != "symbolic":
        raise ValueError("sigma_x_exponent runs in symbolic mode")
    x = x_lambda(spec, shape)
    sx = sigma(x)
    idw = Permutation.identity(spec.n).word
    coeff = sx.coefficient(idw)
    if coeff.is_zero or not coeff.is_monomial():
        raise AssertionError(f"sigma(x_{shape}) is not proportional to x_{shape}")
    c, s = coeff.monomial_parts()
    if c != 1 or not sx == x.scale(LaurentPoly.q_power(s)):
        raise AssertionError(f"sigma(x_{shape}) is not a q-power multiple of x_{shape}")
    return s


@dataclass
class SigmaMWitness:
    """A factorization sigma(m_lambda) = m_lambda * u with an explicit inverse of u."""

    shape: MultiPartition
    u: object            # HeckeElement or AKElement
    u_inverse: object


def sigma_m_witness_type_a(spec: AlgebraSpec, shape: Partition | MultiPartition) -> SigmaMWitness:
    shape = as_multipartition(shape)
    s = sigma_x_exponent(spec, shape.as_partition() if shape.r == 1 else shape)
    u = unit(spec).scale(LaurentPoly.q_power(s))
    uinv = unit(spec).scale(LaurentPoly.q_power(-s))
    return SigmaMWitness(shape, u, uinv)


# ---------------------------------------------------------------------------
# Ariki-Koike engine (r >= 2) over specialized parameters
# ---------------------------------------------------------------------------

class AKElement:
    """Element of the Ariki-Koike algebra as coordinates over {L^a T_w}."""

    __slots__ = ("engine", "terms")

    def __init__(self, engine: "ArikiKoike", terms: dict | None = None):
        self.engine = engine
        self.terms = {k: c for k, c in (terms or {}).items() if not c.is_zero}

    def __add__(self, other: "AKElement") -> "AKElement":
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms[k] + c if k in terms else c
        return AKElement(self.engine, terms)

    def __neg__(self) -> "AKElement":
        return self.scale(CycloNum.from_fraction(Fraction(-1)))

    def __sub__(self, other: "AKElement") -> "AKElement":
        return self + (-other)

    def scale(self, c: CycloNum) -> "AKElement":
        return AKElement(self.engine, {k: x * c for k, x in self.terms.items()})

    def __mul__(self, other: "AKElement") -> "AKElement":
        return self.engine.multiply(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AKElement):
            return NotImplemented
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def to_json(self) -> list[dict]:
        out = []
        for (a, w) in sorted(self.terms):
            c = self.terms[(a, w)]
            word = "L" + ",".join(str(x) for x in a) + ";" + ",".join(str(x) for x in w)
            out.append({"word": word, "coeff": c.to_json()})
        return out

    def __repr__(self) -> str:
        return " + ".join(f"({c!r})*[{k}]" for k, c in sorted(self.terms.items())) or "0"


class ArikiKoike:
    """H(r,1,n) at unit-circle parameters, realized on the sum of its cell modules.

    The chosen parameters must be separating (semisimple); this is certified at
    construction time by the fullness of the flattened basis matrix.
    """

    def __init__(self, n: int, r: int, param_exponents: tuple[RationalC, ...]):
        if r < 2:
            raise ValueError("ArikiKoike engine is for r >= 2")
        if len(param_exponents) != r + 1:
            raise ValueError(f"need exponents for (q, q_1..q_{r})")
        self.n, self.r = n, r
        self.param_exponents = tuple(param_exponents)
        self.field = CycloField.from_exponents(param_exponents[0], list(param_exponents[1:]))
        self.q = self.field.q
        self.qs = self.field.params

        shapes = multipartitions_of(n, r)
        self.blocks = [seminormal_module(shape, self.field) for shape in shapes]
        dims = [b.dimension for b in self.blocks]
        self.dim = r ** n * _factorial(n)
        if sum(d * d for d in dims) != self.dim:
            raise ValueError("cell module dimensions do not flatten to r^n n!")

        # generator matrices per block: index 0 is T_0 = L_1 (diagonal), then T_1..T_{n-1}
        self.gen_mats: list[list[list[list[CycloNum]]]] = []
        for b in self.blocks:
            t0 = _diag([b.residues[t][0] for t in range(b.dimension)])
            self.gen_mats.append([t0] + [m for m in b.matrices])

        self.basis_keys = self._basis_keys()
        self._basis_mats: dict = {}
        for k in self.basis_keys:
            self._basis_mats[k] = self._matrix_of_key(k)
        basis_flat = [self._flatten(self._basis_mats[k]) for k in self.basis_keys]
        if len(basis_flat) != self.dim:
            raise AssertionError("basis enumeration does not match the algebra dimension")
        try:
            self._binv = invert_matrix(basis_flat)
        except ValueError as exc:
            raise ValueError(
                "parameters are not separating (non-semisimple specialization); "
                "choose parameters with distinct residues") from exc
        self._key_index = {k: i for i, k in enumerate(self.basis_keys)}

    # -- bookkeeping --------------------------------------------------------

    def _basis_keys(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        perms = sorted(itertools.permutations(range(1, self.n + 1)))
        avecs = list(itertools.product(range(self.r), repeat=self.n))
        return [(a, w) for a in avecs for w in perms]

    def _block_matrices_of_word(self, gens: list[int]) -> list[list[list[CycloNum]]]:
        out = []
        for bi, b in enumerate(self.blocks):
            m = _identity(b.dimension)
            for g in gens:
                m = mat_mul(m, self.gen_mats[bi][g])
            out.append(m)
        return out

    def _matrix_of_key(self, key) -> list[list[list[CycloNum]]]:
        if hasattr(self, "_basis_mats") and key in self._basis_mats:
            return self._basis_mats[key]
        a, w = key
        gens: list[int] = []
        for m_index, power in enumerate(a, start=1):
            gens.extend(self._jm_word(m_index) * power)
        gens.extend(Permutation(w).reduced_word())
        mats = self._block_matrices_of_word(gens)
        # L_m carries the prefactor q^{1-m} per power
        scale = CycloNum.one()
        for m_index, power in enumerate(a, start=1):
            if power:
                scale = scale * self.q ** ((1 - m_index) * power)
        return [[[x * scale for x in row] for row in m] for m in mats]

    @staticmethod
    def _jm_word(m: int) -> list[int]:
        return list(range(m - 1, 0, -1)) + [0] + list(range(1, m))

    def _flatten(self, mats: list[list[list[CycloNum]]]) -> list[CycloNum]:
        out: list[CycloNum] = []
        for m in mats:
            for row in m:
                out.extend(row)
        return out

    def _coords(self, flat: list[CycloNum]) -> dict:
        coeffs = vec_mat_cyclo(flat, self._binv)
        return {self.basis_keys[i]: c for i, c in enumerate(coeffs) if not c.is_zero}

    def matrices_of(self, x: AKElement) -> list[list[list[CycloNum]]]:
        out = [_zero_matrix(b.dimension) for b in self.blocks]
        for key, c in x.terms.items():
            mats = self._matrix_of_key(key)
            for bi, m in enumerate(mats):
                for i, row in enumerate(m):
                    for j, v in enumerate(row):
                        if not v.is_zero:
                            out[bi][i][j] = out[bi][i][j] + c * v
        return out

    # -- element constructors --------------------------------------------------

    def zero(self) -> AKElement:
        return AKElement(self)

    def one(self) -> AKElement:
        key = (tuple([0] * self.n), Permutation.identity(self.n).word)
        return AKElement(self, {key: CycloNum.one()})

    def gen(self, i: int) -> AKElement:
        """T_i for 0 <= i <= n-1 as a basis element."""
        if i == 0:
            a = [0] * self.n
            a[0] = 1
            return AKElement(self, {(tuple(a), Permutation.identity(self.n).word): CycloNum.one()})
        return AKElement(self, {(tuple([0] * self.n),
                                 Permutation.transposition(self.n, i).word): CycloNum.one()})

    def jucys_murphy(self, m: int) -> AKElement:
        a = [0] * self.n
        a[m - 1] = 1
        return AKElement(self, {(tuple(a), Permutation.identity(self.n).word): CycloNum.one()})

    def from_word(self, gens: list[int]) -> AKElement:
        """Normal form of a product of generators (the rewriting surface)."""
        mats = self._block_matrices_of_word(gens)
        return AKElement(self, self._coords(self._flatten(mats)))

    def multiply(self, x: AKElement, y: AKElement) -> AKElement:
        mx, my = self.matrices_of(x), self.matrices_of(y)
        prod = [mat_mul(a, b) if a and b else [] for a, b in zip(mx, my)]
        return AKElement(self, self._coords(self._flatten(prod)))

    def invert_generator(self, i: int) -> AKElement:
        if i >= 1:
            qinv = self.q.inverse()
            return self.gen(i).scale(qinv) + self.one().scale(qinv - CycloNum.one())
        # T_0^{-1} from the cyclotomic relation prod (T_0 - q_k) = 0
        e = _elementary_symmetric(self.qs)
        acc = self.zero()
        t0_pow = self.one()
        for j in range(1, self.r + 1):
            coeff = e[self.r - j] * ((-1) ** (self.r - j))
            acc = acc + t0_pow.scale(coeff)
            if j < self.r:
                t0_pow = self.multiply(t0_pow, self.gen(0))
        sign = CycloNum.from_fraction(Fraction((-1) ** (self.r + 1)))
        return acc.scale(sign * e[self.r].inverse())

    # -- structural maps --------------------------------------------------------

    @property
    def _sigma_gens(self) -> list[AKElement]:
        if not hasattr(self, "_sigma_gen_cache"):
            self._sigma_gen_cache = [self.invert_generator(i) for i in range(self.n)]
        return self._sigma_gen_cache

    def sigma(self, x: AKElement) -> AKElement:
        out = self.zero()
        for (a, w), c in x.terms.items():
            piece = self.one()
            for m_index, power in enumerate(a, start=1):
                if power:
                    sig_l = self._sigma_jm(m_index)
                    for _ in range(power):
                        piece = self.multiply(piece, sig_l)
            for i in Permutation(w).reduced_word():
                piece = self.multiply(piece, self._sigma_gens[i])
            out = out + piece.scale(c.conj())
        return out

    @lru_cache(maxsize=None)
    def _sigma_jm(self, m: int) -> AKElement:
        piece = self.one()
        for g in self._jm_word(m):
            piece = self.multiply(piece, self._sigma_gens[g])
        return piece.scale(self.q ** (m - 1))

    def star(self, x: AKElement) -> AKElement:
        out = self.zero()
        for (a, w), c in x.terms.items():
            winv = Permutation(w).inverse()
            piece = self.from_word(list(winv.reduced_word()))
            for m_index, power in enumerate(a, start=1):
                for _ in range(power):
                    piece = self.multiply(piece, self.jucys_murphy(m_index))
            out = out + piece.scale(c)
        return out

    def x_lambda(self, shape: MultiPartition) -> AKElement:
        zero_a = tuple([0] * self.n)
        return AKElement(self, {(zero_a, w.word): CycloNum.one()
                                for w in young_subgroup_elements(shape)})

    def m_lambda(self, shape: MultiPartition) -> AKElement:
        acc = self.x_lambda(shape)
        offsets = shape.offsets
        for k in range(self.r):
            for m in range(1, offsets[k] + 1):
                factor = self.jucys_murphy(m) - self.one().scale(self.qs[k])
                acc = self.multiply(factor, acc)
        return acc

    def sigma_m_witness(self, shape: MultiPartition, rng_seed: int = 7) -> SigmaMWitness:
        """Solve sigma(m_lambda) = m_lambda * u and certify u invertible."""
        m = self.m_lambda(shape)
        if m.is_zero:
            raise AssertionError("m_lambda vanished; parameters too degenerate")
        target_el = self.sigma(m)
        target = _coeff_vector(target_el, self.basis_keys)
        cols = []
        for key in self.basis_keys:
            prod = self.multiply(m, AKElement(self, {key: CycloNum.one()}))
            cols.append(_coeff_vector(prod, self.basis_keys))
        matrix = [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]
        sol = solve_linear_system(matrix, target)
        if sol is None:
            raise AssertionError("no u with sigma(m_lambda) = m_lambda u exists")
        u = AKElement(self, {self.basis_keys[i]: c for i, c in enumerate(sol) if not c.is_zero})
        mats = self.matrices_of(u)
        try:
            inv_mats = [invert_matrix(mm) if mm else [] for mm in mats]
        except ValueError as exc:
            raise AssertionError("solved u is not invertible") from exc
        uinv = AKElement(self, self._coords(self._flatten(inv_mats)))
        assert self.multiply(u, uinv) == self.one()
        assert self.sigma(m) == self.multiply(m, u)
        return SigmaMWitness(shape, u, uinv)

    def check_defining_relations(self) -> bool:
        """Quadratic, braid, commuting and cyclotomic relations on every block."""
        one = CycloNum.one()
        for bi, b in enumerate(self.blocks):
            d = b.dimension
            mats = self.gen_mats[bi]
            ident = _identity(d)
            t0 = mats[0]
            # prod (T_0 - q_k) = 0
            acc = ident
            for k in range(self.r):
                acc = mat_mul(acc, _mat_sub(t0, _diag([self.qs[k]] * d)))
            if not _is_zero_matrix(acc):
                return False
            for i in range(1, self.n):
                ti = mats[i]
                quad = mat_mul(_mat_add(ti, ident), _mat_sub(ti, _diag([self.q] * d)))
                if not _is_zero_matrix(quad):
                    return False
            if self.n >= 2:
                lhs = mat_mul(mat_mul(t0, mats[1]), mat_mul(t0, mats[1]))
                rhs = mat_mul(mat_mul(mats[1], t0), mat_mul(mats[1], t0))
                if not _mats_equal(lhs, rhs):
                    return False
            for i in range(1, self.n - 1):
                lhs = mat_mul(mat_mul(mats[i], mats[i + 1]), mats[i])
                rhs = mat_mul(mat_mul(mats[i + 1], mats[i]), mats[i + 1])
                if not _mats_equal(lhs, rhs):
                    return False
            for i in range(self.n):
                for j in range(i + 2, self.n):
                    if not _mats_equal(mat_mul(mats[i], mats[j]), mat_mul(mats[j], mats[i])):
                        return False
        return True


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _identity(d: int) -> list[list[CycloNum]]:
    one, zero = CycloNum.one(), CycloNum.zero()
    return [[one if i == j else zero for j in range(d)] for i in range(d)]


def _zero_matrix(d: int) -> list[list[CycloNum]]:
    zero = CycloNum.zero()
    return [[zero for _ in range(d)] for _ in range(d)]


def _diag(vals) -> list[list[CycloNum]]:
    d = len(vals)
    zero = CycloNum.zero()
    return [[vals[i] if i == j else zero for j in range(d)] for i in range(d)]


def _mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _is_zero_matrix(a) -> bool:
    return all(x.is_zero for row in a for x in row)


def _mats_equal(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def _elementary_symmetric(vals: tuple[CycloNum, ...]) -> list[CycloNum]:
    """e_0..e_len as CycloNums."""
    out = [CycloNum.one()] + [CycloNum.zero()] * len(vals)
    for v in vals:
        for k in range(len(vals), 0, -1):
            out[k] = out[k] + out[k - 1] * v
    return out


def _coeff_vector(x: AKElement, keys) -> list[CycloNum]:
    zero = CycloNum.zero()
    return [x.terms.get(k, zero) for k in keys]


def vec_mat_cyclo(v: list[CycloNum], m: list[list[CycloNum]]) -> list[CycloNum]:
    cols = len(m[0])
    out = []
    for j in range(cols):
        acc = CycloNum.zero()
        for k, vk in enumerate(v):
            if not vk.is_zero:
                acc = acc + vk * m[k][j]
        out.append(acc)
    return out


def random_generator_word(n: int, r: int, length: int, rng: random.Random) -> list[int]:
    lo = 1 if r == 1 else 0
    return [rng.randint(lo, n - 1) for _ in range(length)]

"""Seminormal (Jucys-Murphy eigenbasis) models of the cell modules.

The generator action is forced by the defining relations on each Jucys-Murphy
eigenspace pair, with the coefficient toward the longer tableau normalized to 1.
The diagonal form values gamma_t are pinned by form invariance together with
the exactly computable base value <z_lambda, z_lambda>.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .combinat import (MultiPartition, Partition, Tableau, as_multipartition, d_of,
                       initial_tableau, tableaux)
from .cyclo import CycloNum, RationalC
from .laurent import LaurentPoly, QqFraction


# ---------------------------------------------------------------------------
# coefficient fields
# ---------------------------------------------------------------------------

class SymbolicField:
    """Coefficients in Q(q); one-parameter (type A) algebras only."""

    name = "symbolic"

    def __init__(self):
        self.one = QqFraction.one()
        self.zero = QqFraction.zero()
        self.q = QqFraction.from_laurent(LaurentPoly.q_power(1))

    def q_power(self, e: int) -> QqFraction:
        return QqFraction.from_laurent(LaurentPoly.q_power(e))

    def residue(self, component: int, content: int) -> QqFraction:
        if component != 0:
            raise ValueError("symbolic coefficients support only one-component shapes")
        return self.q_power(content)

    def component_param(self, component: int) -> QqFraction:
        if component != 0:
            raise ValueError("symbolic coefficients support only one-component shapes")
        return self.one


class CycloField:
    """Coefficients in a cyclotomic field, parameters q, q_1..q_r on the unit circle."""

    name = "specialized"

    def __init__(self, q: CycloNum, component_params: Sequence[CycloNum]):
        for p in (q, *component_params):
            if p.is_zero or not (p * p.conj() == CycloNum.one()):
                raise ValueError("Hecke parameters must lie on the unit circle")
        self.q = q
        self.params = tuple(component_params)
        self.one = CycloNum.one()
        self.zero = CycloNum.zero()
        self._qpow_cache: dict[int, CycloNum] = {0: self.one, 1: q}

    @classmethod
    def from_exponents(cls, c_q: RationalC, c_params: Sequence[RationalC]) -> "CycloField":
        q = CycloNum.root_of_unity(c_q.denominator, c_q.numerator)
        ps = [CycloNum.root_of_unity(c.denominator, c.numerator) for c in c_params]
        return cls(q, ps)

    def q_power(self, e: int) -> CycloNum:
        if e not in self._qpow_cache:
            self._qpow_cache[e] = self.q ** e
        return self._qpow_cache[e]

    def residue(self, component: int, content: int) -> CycloNum:
        return self.params[component] * self.q_power(content)

    def component_param(self, component: int) -> CycloNum:
        return self.params[component]


# ---------------------------------------------------------------------------
# seminormal module
# ---------------------------------------------------------------------------

@dataclass
class SeminormalData:
    shape: MultiPartition
    field: object
    basis: list[Tableau]                    # canonical (reading-word) order
    lengths: list[int]                      # Coxeter length of d(t)
    matrices: list  # matrices[i-1][t] = row of f_t T_i images (right action)
    gammas: list                            # diagonal of the invariant form
    parents: list[tuple[int, int] | None]   # BFS tree: (parent index, generator)
    residues: list[list]                    # residues[t][m-1] = JM eigenvalue of L_m

    @property
    def dimension(self) -> int:
        return len(self.basis)


def poincare_polynomial(shape: MultiPartition | Partition, field) -> object:
    """Sum of q^l(w) over the row stabilizer: the product of row q-factorials."""
    shape = as_multipartition(shape)
    if isinstance(field, SymbolicField):
        acc = LaurentPoly.one()
        for width in shape.rows():
            acc = acc * LaurentPoly.gauss_factorial(width)
        return QqFraction.from_laurent(acc)
    acc = field.one
    for width in shape.rows():
        for j in range(2, width + 1):
            term = field.zero
            for e in range(j):
                term = term + field.q_power(e)
            acc = acc * term
    return acc


def cyclotomic_prefactor(shape: MultiPartition, field) -> object:
    """prod_k prod_{m <= a_k} (res_{t^lambda}(m) - q_k), the level-(r>1) norm factor."""
    t0 = initial_tableau(shape)
    acc = field.one
    offsets = shape.offsets
    for k in range(shape.r):
        for m in range(1, offsets[k] + 1):
            res = field.residue(t0.component_of(m), t0.content_of(m))
            acc = acc * (res - field.component_param(k))
    return acc


def seminormal_module(shape: Partition | MultiPartition, field) -> SeminormalData:
    shape = as_multipartition(shape)
    n = shape.n
    basis = tableaux(shape, "standard")
    index = {t: k for k, t in enumerate(basis)}
    lengths = [d_of(t).length() for t in basis]
    assert lengths[0] == 0, "canonical order must start at the initial tableau"

    residues = [[field.residue(t.component_of(m), t.content_of(m)) for m in range(1, n + 1)]
                for t in basis]

    dim = len(basis)
    zero, one = field.zero, field.one
    q = field.q
    q_minus_1 = q - one

    matrices = []
    for i in range(1, n):
        mat = [[zero] * dim for _ in range(dim)]
        for ti, t in enumerate(basis):
            ci, ri, _ = t.position_of(i)
            cj, rj, _ = t.position_of(i + 1)
            same_comp = ci == cj
            if same_comp and ri == rj:
                mat[ti][ti] = q
                continue
            if same_comp and t.position_of(i)[2] == t.position_of(i + 1)[2]:
                mat[ti][ti] = zero - one
                continue
            s = t.swap_values(i)
            si = index[s]
            u = residues[ti][i - 1]
            v = residues[ti][i]
            diff = v - u
            if diff.is_zero:
                raise ValueError(
                    "coincident Jucys-Murphy residues: parameters are not separating")
            alpha = q_minus_1 * v / diff
            mat[ti][ti] = alpha
            if lengths[si] > lengths[ti]:
                mat[ti][si] = one
            else:
                qu_v = q * u - v
                qv_u = q * v - u
                mat[ti][si] = zero - (qu_v * qv_u) / (diff * diff)
        matrices.append(mat)

    # BFS tree from the initial tableau along length-increasing edges
    parents: list[tuple[int, int] | None] = [None] * dim
    order = sorted(range(dim), key=lambda k: (lengths[k], k))
    for ti in order:
        if lengths[ti] == 0:
            continue
        t = basis[ti]
        found = False
        for i in range(1, n):
            s = t.swap_values(i)
            if s in index and lengths[index[s]] == lengths[ti] - 1:
                parents[ti] = (index[s], i)
                found = True
                break
        if not found:
            raise AssertionError(f"no length-decreasing standard neighbor for {t}")

    # gammas by invariance along the tree, consistency-checked on all other edges
    gammas = [None] * dim
    gammas[0] = poincare_polynomial(shape, field) * cyclotomic_prefactor(shape, field)
    for ti in order:
        if parents[ti] is not None:
            pi, i = parents[ti]
            kappa = matrices[i - 1][ti][pi]
            gammas[ti] = kappa * gammas[pi]
    for i in range(1, n):
        for ti in range(dim):
            for si in range(dim):
                if si != ti and not matrices[i - 1][ti][si].is_zero:
                    lhs = matrices[i - 1][ti][si] * gammas[si]
                    rhs = matrices[i - 1][si][ti] * gammas[ti]
                    assert lhs == rhs, "form invariance fails across a seminormal edge"

    return SeminormalData(shape, field, basis, lengths, matrices, gammas, parents, residues)

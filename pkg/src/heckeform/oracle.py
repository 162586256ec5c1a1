"""From-the-definition cell module construction, used only as a cross-check.

Everything here is computed literally inside the full algebra: the span of the
cellular elements above a shape, the quotient basis, the left action, and the
bilinear form by coefficient extraction in the defining congruence. It is
intentionally independent of the seminormal construction in ``specht``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinat import (MultiPartition, Partition, Permutation, Tableau,
                       as_multipartition, d_of, multipartitions_of,
                       strictly_dominates, tableaux)
from .laurent import QqFraction
from .matrixtools import RowSolver
from .specht import AlgebraSpec, GuardError
from . import hecke


@dataclass
class OracleSpecht:
    shape: MultiPartition
    basis: list[Tableau]
    action: dict[int, list[list]]   # left action matrices
    gram: list[list]

    @property
    def dimension(self) -> int:
        return len(self.basis)


class _TypeAOps:
    """Full type A Hecke algebra as a coefficient vector space over Q(q)."""

    def __init__(self, spec: AlgebraSpec):
        self.spec = spec
        self.words = sorted(
            Permutation(p).word for p in _all_perm_words(spec.n))
        self.index = {w: i for i, w in enumerate(self.words)}
        self.dim = len(self.words)

    def vec(self, x: hecke.HeckeElement) -> list[QqFraction]:
        out = [QqFraction.zero()] * self.dim
        for w, c in x.terms.items():
            out[self.index[w]] = QqFraction.from_laurent(c)
        return out

    def m_shape(self, shape: MultiPartition) -> hecke.HeckeElement:
        return hecke.m_lambda(self.spec, shape)

    def t_perm(self, perm: Permutation) -> hecke.HeckeElement:
        return hecke.t_word(self.spec, perm.reduced_word())

    def mul(self, a, b):
        return a * b

    def left_gen(self, i, x):
        return hecke.left_mult_gen(i, x)

    def star(self, x):
        return hecke.star(x)


class _ArikiKoikeOps:
    """The r >= 2 engine exposed through the same minimal surface."""

    def __init__(self, engine: hecke.ArikiKoike):
        self.engine = engine
        self.keys = engine.basis_keys
        self.dim = engine.dim

    def vec(self, x: hecke.AKElement):
        from .cyclo import CycloNum
        zero = CycloNum.zero()
        return [x.terms.get(k, zero) for k in self.keys]

    def m_shape(self, shape: MultiPartition) -> hecke.AKElement:
        return self.engine.m_lambda(shape)

    def t_perm(self, perm: Permutation) -> hecke.AKElement:
        return self.engine.from_word(list(perm.reduced_word()))

    def mul(self, a, b):
        return self.engine.multiply(a, b)

    def left_gen(self, i, x):
        return self.engine.multiply(self.engine.gen(i), x)

    def star(self, x):
        return self.engine.star(x)


def _all_perm_words(n: int):
    import itertools
    return itertools.permutations(range(1, n + 1))


def oracle_specht(shape: Partition | MultiPartition,
                  spec: AlgebraSpec | None = None,
                  engine: hecke.ArikiKoike | None = None) -> OracleSpecht:
    """Literal cell module: basis, left action and Gram form modulo the span
    of cellular elements for strictly dominating shapes."""
    shape = as_multipartition(shape)
    n = shape.n
    if n > 4:
        raise GuardError(f"oracle construction is guarded to n <= 4, got n = {n}")
    if shape.r > 2:
        raise GuardError("oracle construction is guarded to r <= 2")

    if shape.r == 1:
        spec = spec or AlgebraSpec(n=n)
        ops = _TypeAOps(spec)
    else:
        if engine is None:
            raise ValueError("r = 2 oracle needs an ArikiKoike engine")
        ops = _ArikiKoikeOps(engine)

    higher_rows = []
    for mu in multipartitions_of(n, shape.r):
        if not strictly_dominates(mu, shape):
            continue
        m_mu = ops.m_shape(mu)
        stds = tableaux(mu, "standard")
        for s in stds:
            left = ops.t_perm(d_of(s).inverse())
            left_m = ops.mul(left, m_mu)
            for t in stds:
                m_st = ops.mul(left_m, ops.t_perm(d_of(t)))
                higher_rows.append(ops.vec(m_st))
    expected_higher = sum(
        len(tableaux(mu, "standard")) ** 2
        for mu in multipartitions_of(n, shape.r) if strictly_dominates(mu, shape))

    m_lam = ops.m_shape(shape)
    stds = tableaux(shape, "standard")
    w_elems = [ops.mul(ops.t_perm(d_of(s).inverse()), m_lam) for s in stds]
    w_vecs = [ops.vec(w) for w in w_elems]

    nbar = RowSolver(higher_rows, ops.dim) if higher_rows else None
    if nbar is not None:
        assert nbar.rank == expected_higher, "cellular elements above the shape are dependent"

    full_rows = higher_rows + w_vecs
    solver = RowSolver(full_rows, ops.dim)
    assert solver.rank == len(higher_rows) + len(stds), \
        "cell module basis is not independent modulo the higher span"

    k_high = len(higher_rows)
    dim = len(stds)

    def reduce_to_basis(vec) -> list:
        coeffs = solver.solve(vec)
        assert coeffs is not None, "element left the cyclic module span"
        return coeffs[k_high:]

    action: dict[int, list[list]] = {}
    for i in range(1, n):
        cols = [reduce_to_basis(ops.vec(ops.left_gen(i, w))) for w in w_elems]
        action[i] = [[cols[s][t] for s in range(dim)] for t in range(dim)]

    m_vec = ops.vec(m_lam)
    form_solver = RowSolver(higher_rows + [m_vec], ops.dim)
    assert form_solver.rank == k_high + 1, "m_lambda fell inside the higher span"
    gram = []
    for s in range(dim):
        row = []
        star_ws = ops.star(w_elems[s])
        for t in range(dim):
            prod = ops.mul(star_ws, w_elems[t])
            coeffs = form_solver.solve(ops.vec(prod))
            assert coeffs is not None, "pairing left the congruence span"
            row.append(coeffs[-1])
        gram.append(row)
    return OracleSpecht(shape, stds, action, gram)

"""Partitions, multipartitions, tableaux and permutations.

Conventions
-----------
* Tableaux are fillings of a multipartition diagram by 1..n; the initial
  tableau fills rows left to right, component by component.
* Permutations act on the right of {1..n}; ``d_of(t)`` is the minimal-length
  coset representative carrying the initial tableau to ``t``.
* The canonical order on tableaux of a fixed shape is lexicographic on their
  row-reading words, so the initial tableau always comes first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        pt = tuple(int(p) for p in parts)
        if any(p <= 0 for p in pt):
            raise ValueError(f"partition parts must be positive: {pt}")
        if any(pt[i] < pt[i + 1] for i in range(len(pt) - 1)):
            raise ValueError(f"partition parts must weakly decrease: {pt}")
        object.__setattr__(self, "parts", pt)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    @property
    def is_empty(self) -> bool:
        return not self.parts

    def cells(self) -> Iterator[tuple[int, int]]:
        """(row, col) pairs, 0-based."""
        for r, width in enumerate(self.parts):
            for c in range(width):
                yield (r, c)

    def contains(self, other: "Partition") -> bool:
        op = other.parts
        return len(op) <= len(self.parts) and all(op[i] <= self.parts[i] for i in range(len(op)))

    def is_rectangular(self) -> bool:
        return len(set(self.parts)) <= 1

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls(())
        return cls(int(p) for p in text.split(","))


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if p.is_empty:
        return p
    cols = [0] * p.parts[0]
    for width in p.parts:
        for c in range(width):
            cols[c] += 1
    return Partition(cols)


def hook_lengths(p: Partition) -> dict[tuple[int, int], int]:
    conj = conjugate(p)
    return {(r, c): (p.parts[r] - c) + (conj.parts[c] - r) - 1 for (r, c) in p.cells()}


def standard_count_hook_formula(p: Partition) -> int:
    """Number of standard tableaux via the hook length formula (independent oracle)."""
    if p.is_empty:
        return 1
    den = 1
    for h in hook_lengths(p).values():
        den *= h
    return factorial(p.n) // den


def is_e_restricted(p: Partition, e: int | float) -> bool:
    """True iff consecutive part differences (with a trailing zero) are all < e."""
    if e is math.inf:
        return True
    if e < 2:
        raise ValueError("e must be at least 2 or infinity")
    parts = p.parts + (0,)
    return all(parts[i] - parts[i + 1] < e for i in range(len(p.parts)))


def beta_numbers(p: Partition, length: int | None = None) -> list[int]:
    """First-column hook lengths padded to the requested length, decreasing."""
    k = len(p.parts) if length is None else length
    if k < len(p.parts):
        raise ValueError("beta-set length shorter than the partition")
    parts = p.parts + (0,) * (k - len(p.parts))
    return [parts[i] + (k - 1 - i) for i in range(k)]


def _partition_from_betas(betas: set[int], length: int) -> Partition:
    vals = sorted(betas, reverse=True)
    parts = [v - (length - 1 - i) for i, v in enumerate(vals)]
    return Partition(p for p in parts if p > 0)


def e_core(p: Partition, e: int) -> Partition:
    """Strip all rim hooks of length e, via beads on an abacus with e runners."""
    if e < 2:
        raise ValueError("e must be at least 2")
    length = len(p.parts) + e  # padding ensures every runner has room
    beads = set(beta_numbers(p, length))
    moved = True
    while moved:
        moved = False
        for b in sorted(beads):
            if b - e >= 0 and (b - e) not in beads:
                beads.remove(b)
                beads.add(b - e)
                moved = True
    return _partition_from_betas(beads, length)


@dataclass(frozen=True)
class HookData:
    largest: int          # L, hook length of the (1,1) cell
    multiplicity: int     # b, multiplicity of the largest part
    smallest_main: int    # l
    main_hooks: frozenset[int]


def hook_data(p: Partition) -> HookData:
    """Largest hook L, largest-part multiplicity b, and the main hooks l..L."""
    if p.is_empty:
        raise ValueError("hook data of the empty partition")
    L = p.parts[0] + len(p.parts) - 1
    b = sum(1 for x in p.parts if x == p.parts[0])
    if p.is_rectangular() and b > 1:
        smallest = L - b + 2
    else:
        smallest = L - b + 1
    main = frozenset(range(smallest, L + 1))
    if len(p.parts) > 1:
        for k in main:
            assert is_e_restricted(p, k), f"main hook {k} of {p} violates k-restriction"
    return HookData(L, b, smallest, main)


# ---------------------------------------------------------------------------
# multipartitions
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class MultiPartition:
    components: tuple[Partition, ...]

    def __init__(self, components: Iterable[Partition | Iterable[int]]):
        comps = tuple(c if isinstance(c, Partition) else Partition(c) for c in components)
        if not comps:
            raise ValueError("a multipartition needs at least one component")
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_partition(cls, p: Partition) -> "MultiPartition":
        return cls((p,))

    @property
    def r(self) -> int:
        return len(self.components)

    @property
    def n(self) -> int:
        return sum(c.n for c in self.components)

    @property
    def offsets(self) -> tuple[int, ...]:
        """a_i = |lambda^1| + ... + |lambda^(i-1)|, so offsets[0] = 0."""
        out = []
        acc = 0
        for c in self.components:
            out.append(acc)
            acc += c.n
        return tuple(out)

    def rows(self) -> list[int]:
        """All row lengths in reading order across components."""
        out: list[int] = []
        for c in self.components:
            out.extend(c.parts)
        return out

    def as_partition(self) -> Partition:
        if self.r != 1:
            raise ValueError(f"not a one-component multipartition: {self}")
        return self.components[0]

    def __str__(self) -> str:
        return "|".join(str(c) for c in self.components)

    @classmethod
    def parse(cls, text: str) -> "MultiPartition":
        return cls(Partition.parse(part) for part in text.split("|"))


def as_multipartition(shape: Partition | MultiPartition) -> MultiPartition:
    return shape if isinstance(shape, MultiPartition) else MultiPartition.from_partition(shape)


def dominates(a: MultiPartition | Partition, b: MultiPartition | Partition) -> bool:
    """Dominance on multipartitions: all partial sums of a bound those of b."""
    a, b = as_multipartition(a), as_multipartition(b)
    if a.n != b.n:
        raise ValueError(f"dominance needs equal sizes: |{a}| != |{b}|")
    if a.r != b.r:
        raise ValueError(f"dominance needs equal numbers of components: {a} vs {b}")
    prior_a = prior_b = 0
    for k in range(a.r):
        pa, pb = a.components[k].parts, b.components[k].parts
        sa, sb = prior_a, prior_b
        for j in range(max(len(pa), len(pb))):
            sa += pa[j] if j < len(pa) else 0
            sb += pb[j] if j < len(pb) else 0
            if sa < sb:
                return False
        prior_a, prior_b = sa, sb
    return True


def strictly_dominates(a, b) -> bool:
    a, b = as_multipartition(a), as_multipartition(b)
    return a != b and dominates(a, b)


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n, in reverse-lexicographic (dominance-compatible) order."""
    if max_part is None:
        max_part = n

    def gen(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(Partition(t) for t in gen(n, max_part))


@lru_cache(maxsize=None)
def multipartitions_of(n: int, r: int) -> tuple[MultiPartition, ...]:
    """All r-component multipartitions of n."""
    if r == 1:
        return tuple(MultiPartition.from_partition(p) for p in partitions_of(n))
    out = []
    for k in range(n + 1):
        for head in partitions_of(k):
            for tail in multipartitions_of(n - k, r - 1):
                out.append(MultiPartition((head,) + tail.components))
    return tuple(out)


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Permutation:
    """Permutation of {1..n} acting on the right: i -> word[i-1]."""

    word: tuple[int, ...]

    def __init__(self, word: Iterable[int]):
        w = tuple(word)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a permutation word: {w}")
        object.__setattr__(self, "word", w)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, i: int) -> "Permutation":
        """The adjacent transposition s_i swapping i and i+1."""
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(w)

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition `self then other` (right-action convention)."""
        return Permutation(other.word[x - 1] for x in self.word)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, x in enumerate(self.word):
            inv[x - 1] = i + 1
        return Permutation(inv)

    def right_multiply_simple(self, i: int) -> "Permutation":
        """self * s_i, i.e. swap the values i and i+1."""
        w = list(self.word)
        a, b = w.index(i), w.index(i + 1)
        w[a], w[b] = w[b], w[a]
        return Permutation(w)

    def length(self) -> int:
        """Coxeter length = inversion count of the word."""
        inv = 0
        w = self.word
        for i in range(len(w)):
            for j in range(i + 1, len(w)):
                if w[i] > w[j]:
                    inv += 1
        return inv

    def is_identity(self) -> bool:
        return all(self.word[i] == i + 1 for i in range(self.n))

    def descent_right(self) -> int | None:
        """Some i with l(self * s_i) < l(self), or None for the identity."""
        pos = [0] * (self.n + 1)
        for idx, val in enumerate(self.word):
            pos[val] = idx
        for i in range(1, self.n):
            if pos[i] > pos[i + 1]:
                return i
        return None

    def reduced_word(self) -> tuple[int, ...]:
        """A reduced expression self = s_{i1} ... s_{ik} (right-action order)."""
        picked: list[int] = []
        cur = self
        while True:
            i = cur.descent_right()
            if i is None:
                break
            cur = cur.right_multiply_simple(i)
            picked.append(i)
        return tuple(reversed(picked))

    def all_reduced_words(self) -> list[tuple[int, ...]]:
        """Every reduced expression (exponential; small n only)."""
        if self.is_identity():
            return [()]
        out = []
        pos = [0] * (self.n + 1)
        for idx, val in enumerate(self.word):
            pos[val] = idx
        for i in range(1, self.n):
            if pos[i] > pos[i + 1]:
                for w in self.right_multiply_simple(i).all_reduced_words():
                    out.append(w + (i,))
        return out


# ---------------------------------------------------------------------------
# tableaux
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Tableau:
    """A bijective filling of a multipartition shape by 1..n."""

    shape: MultiPartition
    entries: tuple[tuple[tuple[int, ...], ...], ...]  # [component][row] -> entries

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for comp in self.entries for row in comp for x in row)

    @property
    def n(self) -> int:
        return self.shape.n

    def position_of(self, value: int) -> tuple[int, int, int]:
        """(component, row, col) of a value, 0-based."""
        for ci, comp in enumerate(self.entries):
            for ri, row in enumerate(comp):
                for cj, x in enumerate(row):
                    if x == value:
                        return (ci, ri, cj)
        raise ValueError(f"value {value} not in tableau")

    def content_of(self, value: int) -> int:
        _, r, c = self.position_of(value)
        return c - r

    def component_of(self, value: int) -> int:
        return self.position_of(value)[0]

    def is_row_standard(self) -> bool:
        return all(row[i] < row[i + 1]
                   for comp in self.entries for row in comp for i in range(len(row) - 1))

    def is_standard(self) -> bool:
        if not self.is_row_standard():
            return False
        for comp in self.entries:
            for ri in range(len(comp) - 1):
                upper, lower = comp[ri], comp[ri + 1]
                if any(upper[c] > lower[c] for c in range(len(lower))):
                    return False
        return True

    def swap_values(self, i: int) -> "Tableau":
        """Swap the entries i and i+1 in place (the right action of s_i)."""
        def sub(x: int) -> int:
            return i + 1 if x == i else (i if x == i + 1 else x)
        return Tableau(self.shape, tuple(tuple(tuple(sub(x) for x in row) for row in comp)
                                         for comp in self.entries))

    def __str__(self) -> str:
        comps = []
        for comp in self.entries:
            comps.append(";".join(",".join(str(x) for x in row) for row in comp))
        return "|".join(comps)


def initial_tableau(shape: Partition | MultiPartition) -> Tableau:
    """Fill 1..n along rows, component by component."""
    shape = as_multipartition(shape)
    counter = 1
    comps = []
    for comp in shape.components:
        rows = []
        for width in comp.parts:
            rows.append(tuple(range(counter, counter + width)))
            counter += width
        comps.append(tuple(rows))
    return Tableau(shape, tuple(comps))


def tableau_from_word(shape: Partition | MultiPartition, word: Sequence[int]) -> Tableau:
    shape = as_multipartition(shape)
    it = iter(word)
    comps = []
    for comp in shape.components:
        rows = []
        for width in comp.parts:
            rows.append(tuple(next(it) for _ in range(width)))
        comps.append(tuple(rows))
    return Tableau(shape, tuple(comps))


def tableaux(shape: Partition | MultiPartition, flavor: str = "standard") -> list[Tableau]:
    """All row-standard or standard tableaux, in canonical (reading-word) order."""
    shape = as_multipartition(shape)
    if flavor not in ("standard", "row-standard"):
        raise ValueError(f"unknown tableau flavor: {flavor}")
    rows = shape.rows()
    n = shape.n
    results: list[tuple[int, ...]] = []

    def place(row_idx: int, remaining: frozenset[int], acc: tuple[int, ...]):
        if row_idx == len(rows):
            results.append(acc)
            return
        width = rows[row_idx]
        from itertools import combinations
        for combo in combinations(sorted(remaining), width):
            place(row_idx + 1, remaining - frozenset(combo), acc + combo)

    place(0, frozenset(range(1, n + 1)), ())
    out = [tableau_from_word(shape, w) for w in sorted(results)]
    if flavor == "standard":
        out = [t for t in out if t.is_standard()]
    return out


def d_of(t: Tableau) -> Permutation:
    """The minimal coset representative with initial_tableau * d = t."""
    if not t.is_row_standard():
        raise ValueError(f"d_of needs a row-standard tableau, got {t}")
    return Permutation(t.reading_word())


def sort_rows(t: Tableau) -> Tableau:
    """Row-sort each row (projects onto the row-standard coset representative)."""
    return Tableau(t.shape, tuple(tuple(tuple(sorted(row)) for row in comp)
                                  for comp in t.entries))


def young_subgroup_generators(shape: Partition | MultiPartition) -> frozenset[int]:
    """Indices i with s_i inside the row stabilizer of the initial tableau."""
    shape = as_multipartition(shape)
    gens = set()
    start = 1
    for width in shape.rows():
        gens.update(range(start, start + width - 1))
        start += width
    return frozenset(gens)


def young_subgroup_elements(shape: Partition | MultiPartition) -> list[Permutation]:
    """All elements of the row stabilizer (product of per-row symmetric groups)."""
    from itertools import permutations as iperm

    shape = as_multipartition(shape)
    n = shape.n
    blocks = []
    start = 1
    for width in shape.rows():
        blocks.append(list(range(start, start + width)))
        start += width
    elems = [Permutation.identity(n)]
    for block in blocks:
        new = []
        for perm_block in iperm(block):
            mapping = dict(zip(block, perm_block))
            w = Permutation(mapping.get(i, i) for i in range(1, n + 1))
            for e in elems:
                new.append(e * w)
        elems = new
    return elems

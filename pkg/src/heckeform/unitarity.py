"""Signatures, unitarity verdicts, predicted loci, and verification scans."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .combinat import Partition, hook_data, is_e_restricted, partitions_of
from .cyclo import CycloNum, RationalC, sign_of_real, smallest_e
from .laurent import cyclotomic_root_multiplicities
from .specht import (SpechtData, gram_determinant_cached, hermitian_gram,
                     specialize_matrix, symbolic_specht)

ZERO = "Zero"
UNITARY = "NonzeroUnitary"
NOT_UNITARY = "NonzeroNotUnitary"


# ---------------------------------------------------------------------------
# signature of an exact Hermitian matrix
# ---------------------------------------------------------------------------

def signature(h: list[list[CycloNum]], start_bits: int | None = None) -> tuple[int, int, int]:
    """Inertia (n+, n-, n0) by conjugate-congruence elimination with certified
    pivot signs; zero-diagonal blocks are broken up by unit-circle column mixes."""
    dim = len(h)
    for i in range(dim):
        if len(h[i]) != dim:
            raise ValueError("signature needs a square matrix")
        for j in range(i, dim):
            if not h[i][j] == h[j][i].conj():
                raise ValueError("signature needs an exactly Hermitian matrix")
    work = [list(row) for row in h]
    active = list(range(dim))
    npos = nneg = 0
    while active:
        pivot = None
        for a in active:
            if not work[a][a].is_zero:
                pivot = a
                break
        if pivot is None:
            pair = None
            for ai, a in enumerate(active):
                for b in active[ai + 1:]:
                    if not work[a][b].is_zero:
                        pair = (a, b)
                        break
                if pair:
                    break
            if pair is None:
                break  # remaining block is identically zero
            a, b = pair
            entry = work[a][b]
            big = entry.m if entry.m % 2 == 0 else 2 * entry.m
            mix = None
            for k in range(big):
                cand = CycloNum.root_of_unity(big, k)
                if not ((cand * entry) + (cand * entry).conj()).is_zero:
                    mix = cand
                    break
            assert mix is not None, "no unit-circle mix produces a real pivot"
            mixc = mix.conj()
            for j in range(dim):
                work[a][j] = work[a][j] + mixc * work[b][j]
            for i in range(dim):
                work[i][a] = work[i][a] + mix * work[i][b]
            continue
        p = pivot
        cert = sign_of_real(work[p][p], start_bits=start_bits)
        if cert.sign > 0:
            npos += 1
        else:
            nneg += 1
        inv_p = work[p][p].inverse()
        others = [a for a in active if a != p]
        for a in others:
            if work[a][p].is_zero:
                continue
            factor = work[a][p] * inv_p
            for b in others:
                work[a][b] = work[a][b] - factor * work[p][b]
            work[a][p] = CycloNum.zero()
        for b in others:
            work[p][b] = CycloNum.zero()
        active = others
    return npos, nneg, dim - npos - nneg


def matrix_rank(h: list[list[CycloNum]]) -> int:
    """Plain Gaussian rank over the cyclotomic field (independent of signature)."""
    mat = [list(row) for row in h]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(mat)):
            if not mat[r][col].is_zero:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = mat[rank][col].inverse()
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and not mat[r][col].is_zero:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[rank])]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# verdicts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UnitarityVerdict:
    shape: Partition
    c: RationalC
    e: int | float
    status: str
    signature: tuple[int, int, int]
    dim_s: int
    dim_d: int

    def to_json(self) -> dict:
        return {
            "lambda": str(self.shape),
            "c": str(self.c),
            "e": "inf" if math.isinf(self.e) else int(self.e),
            "status": self.status,
            "signature": list(self.signature),
            "dim_S": self.dim_s,
            "dim_D": self.dim_d,
        }


def verdict(shape: Partition, c: RationalC, start_bits: int | None = None) -> UnitarityVerdict:
    """Exact unitarity verdict for the cell module of ``shape`` at q = e^(2 pi i c)."""
    sd = symbolic_specht(shape.parts)
    e = smallest_e(c)
    g_c = specialize_matrix(sd.gram, c)
    if all(x.is_zero for row in g_c for x in row):
        return UnitarityVerdict(shape, c, e, ZERO, (0, 0, sd.dimension), sd.dimension, 0)
    hg = hermitian_gram(sd, c)
    npos, nneg, nzero = signature(hg.matrix, start_bits=start_bits)
    dim_d = npos + nneg
    if dim_d == 0:
        status = ZERO
    elif nneg == 0 or npos == 0:
        status = UNITARY
    else:
        status = NOT_UNITARY
    return UnitarityVerdict(shape, c, e, status, (npos, nneg, nzero), sd.dimension, dim_d)


# ---------------------------------------------------------------------------
# predicted loci
# ---------------------------------------------------------------------------

FULL_INTERVAL = "FullInterval"
N_MINUS_SET = "NMinusSet"
INTERVAL_PLUS_POINTS = "IntervalPlusPoints"


@dataclass(frozen=True)
class LocusDescription:
    kind: str
    interval_radius: Fraction | None
    points: frozenset[Fraction]
    excluded: frozenset[Fraction]

    def contains(self, c: RationalC) -> bool:
        v = c.value
        if self.kind == FULL_INTERVAL:
            return True
        if self.kind == N_MINUS_SET:
            return v not in self.excluded
        return abs(v) < self.interval_radius or v in self.points

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.interval_radius is not None:
            out["interval_radius"] = str(self.interval_radius)
        if self.points:
            out["points"] = [_fmt_frac(x) for x in sorted(self.points)]
        if self.excluded:
            out["excluded"] = [_fmt_frac(x) for x in sorted(self.excluded)]
        return out


def _fmt_frac(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)


def predicted_locus(shape: Partition) -> LocusDescription:
    """The classified unitarity locus: the full window for a single column, the
    window minus small-denominator rationals for a single row, and otherwise
    the open interval of radius 1/L together with the points 1/k at main hooks."""
    if shape.is_empty:
        raise ValueError("empty shape has no locus")
    n = shape.n
    parts = shape.parts
    if len(parts) == 1 and parts[0] == 1:
        return LocusDescription(FULL_INTERVAL, None, frozenset(), frozenset())
    if parts[0] == 1:  # single column (1^n)
        return LocusDescription(FULL_INTERVAL, None, frozenset(), frozenset())
    if len(parts) == 1:  # single row (n)
        excluded = set()
        for m in range(1, n + 1):
            for r in range(1, n + 1):
                if gcd(r, m) == 1:
                    for sgn in (1, -1):
                        v = Fraction(sgn * r, m)
                        if Fraction(-1, 2) < v <= Fraction(1, 2):
                            excluded.add(v)
        return LocusDescription(N_MINUS_SET, None, frozenset(), frozenset(excluded))
    hd = hook_data(shape)
    points = set()
    for k in hd.main_hooks:
        for sgn in (1, -1):
            v = Fraction(sgn, k)
            if Fraction(-1, 2) < v <= Fraction(1, 2):
                points.add(v)
    return LocusDescription(INTERVAL_PLUS_POINTS, Fraction(1, hd.largest),
                            frozenset(points), frozenset())


@lru_cache(maxsize=None)
def singular_points(parts: tuple[int, ...]) -> tuple[RationalC, ...]:
    """All c in the window where the symbolic Gram determinant vanishes."""
    det = gram_determinant_cached(parts)
    n = sum(parts)
    mults = cyclotomic_root_multiplicities(det, max(n, 2))
    out = set()
    for e in sorted(mults):
        for r in range(-e, e + 1):
            if r == 0 or gcd(abs(r), e) != 1:
                continue
            v = Fraction(r, e)
            if Fraction(-1, 2) < v <= Fraction(1, 2):
                out.add(RationalC(v))
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# scans
# ---------------------------------------------------------------------------

def window_rationals(bound: int) -> list[RationalC]:
    """All reduced rationals in (-1/2, 1/2] with denominator at most ``bound``."""
    vals = {Fraction(0)}
    for m in range(2, bound + 1):
        for r in range(-m // 2, m // 2 + 1):
            if r and gcd(abs(r), m) == 1:
                v = Fraction(r, m)
                if Fraction(-1, 2) < v <= Fraction(1, 2):
                    vals.add(v)
    return [RationalC(v) for v in sorted(vals)]


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The smallest-denominator rational strictly inside (lo, hi) (Stern-Brocot)."""
    if not lo < hi:
        raise ValueError("empty interval")
    # shift to positive territory to walk the Stern-Brocot tree
    shift = 0
    while lo + shift <= 0:
        shift += 1
    a, b = lo + shift, hi + shift
    num_lo, den_lo, num_hi, den_hi = 0, 1, 1, 0
    while True:
        med_num, med_den = num_lo + num_hi, den_lo + den_hi
        med = Fraction(med_num, med_den)
        if med <= a:
            num_lo, den_lo = med_num, med_den
        elif med >= b:
            num_hi, den_hi = med_num, med_den
        else:
            return med - shift


@dataclass
class ScanReport:
    shape: Partition
    predicted: LocusDescription
    tested_points: list[tuple[RationalC, UnitarityVerdict]]
    singular: tuple[RationalC, ...]
    interval_samples: list[RationalC]
    agreement: bool
    mismatches: list[str]

    def to_json(self) -> dict:
        return {
            "lambda": str(self.shape),
            "predicted": self.predicted.to_json(),
            "points": [
                {"c": str(c), "status": v.status, "signature": list(v.signature)}
                for c, v in self.tested_points
            ],
            "agreement": self.agreement,
        }

    def csv_rows(self) -> list[list[str]]:
        rows = []
        for c, v in self.tested_points:
            rows.append([
                str(self.shape), str(c),
                "inf" if math.isinf(v.e) else str(int(v.e)), v.status,
                str(v.signature[0]), str(v.signature[1]), str(v.signature[2]),
                str(v.dim_d),
                "1" if self.predicted.contains(c) else "0",
                "1" if v.status == UNITARY else "0",
            ])
        return rows


CSV_HEADER = ["lambda", "c", "e", "status", "n_plus", "n_minus", "n_zero",
              "dim_D", "predicted_member", "computed_member"]


def scan_locus(shape: Partition, bound: int, start_bits: int | None = None) -> ScanReport:
    """Verdict scan over all window rationals of bounded denominator.

    Verdicts are computed exactly at every singular point and at one sample
    inside each complementary interval; elsewhere the locally constant
    signature is inherited from the interval's sample.
    """
    n = shape.n
    if bound < 2 * n + 2:
        raise ValueError(f"denominator bound {bound} < 2n+2 = {2 * n + 2}")
    predicted = predicted_locus(shape)
    tested = window_rationals(bound)
    singular = singular_points(shape.parts)
    singular_vals = [c.value for c in singular]
    assert all(c in tested for c in singular), "singular points must be tested"

    boundaries = [Fraction(-1, 2)] + singular_vals + [Fraction(1, 2)]
    samples: list[RationalC] = []
    interval_of: list[tuple[Fraction, Fraction, RationalC]] = []
    for lo, hi in zip(boundaries, boundaries[1:]):
        if lo >= hi:
            continue
        mid = RationalC(simplest_between(lo, hi))
        samples.append(mid)
        interval_of.append((lo, hi, mid))

    exact_points = sorted({*(c.value for c in singular), *(c.value for c in samples)})
    verdicts: dict[Fraction, UnitarityVerdict] = {
        v: verdict(shape, RationalC(v), start_bits=start_bits) for v in exact_points}

    def verdict_at(c: RationalC) -> UnitarityVerdict:
        if c.value in verdicts:
            return verdicts[c.value]
        for lo, hi, mid in interval_of:
            if lo < c.value <= hi:
                base = verdicts[mid.value]
                return UnitarityVerdict(shape, c, smallest_e(c), base.status,
                                        base.signature, base.dim_s, base.dim_d)
        raise AssertionError(f"tested point {c} not covered by any interval")

    tested_points = [(c, verdict_at(c)) for c in tested]
    mismatches = []
    for c, v in tested_points:
        want = predicted.contains(c)
        got = v.status == UNITARY
        if want != got:
            mismatches.append(f"lambda={shape} c={c}: predicted "
                              f"{'member' if want else 'non-member'}, computed {v.status}")
    return ScanReport(shape, predicted, tested_points, singular, samples,
                      not mismatches, mismatches)


# ---------------------------------------------------------------------------
# full verification runs
# ---------------------------------------------------------------------------

def _scan_task(args: tuple[tuple[int, ...], int, int | None]) -> dict:
    parts, bound, bits = args
    report = scan_locus(Partition(parts), bound, start_bits=bits)
    return {
        "lambda": str(report.shape),
        "n": report.shape.n,
        "agreement": report.agreement,
        "mismatches": report.mismatches,
        "json": report.to_json(),
        "csv": report.csv_rows(),
    }


def verify_classification(n_max: int, bound: int, threads: int = 1,
                          start_bits: int | None = None, n_min: int = 2) -> dict:
    """Scan every shape of every size in range and compare against the
    predicted loci; the summary's ``agreement`` is the conjunction."""
    if n_max > 7:
        raise ValueError("full verification is guarded to n_max <= 7")
    tasks = []
    for n in range(n_min, n_max + 1):
        for p in partitions_of(n):
            tasks.append((p.parts, bound, start_bits))
    if threads > 1 and len(tasks) > 1:
        import multiprocessing as mp

        with mp.get_context("fork").Pool(processes=threads) as pool:
            results = pool.map(_scan_task, tasks)
    else:
        results = [_scan_task(t) for t in tasks]
    results.sort(key=lambda r: (r["n"], r["lambda"]))
    all_mismatches = [m for r in results for m in r["mismatches"]]
    return {
        "n_max": n_max,
        "bound": bound,
        "shapes": [{"lambda": r["lambda"], "agreement": r["agreement"]} for r in results],
        "agreement": not all_mismatches,
        "mismatches": all_mismatches,
        "reports": [r["json"] for r in results],
    }

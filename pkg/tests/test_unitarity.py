import random
from fractions import Fraction

import pytest

from heckeform.combinat import Partition, partitions_of
from heckeform.cyclo import CycloNum, RationalC
from heckeform.matrixtools import mat_mul
from heckeform.unitarity import (NOT_UNITARY, UNITARY, ZERO, matrix_rank,
                                 predicted_locus, scan_locus, signature,
                                 simplest_between, singular_points, verdict,
                                 verify_classification, window_rationals)


def cyclo_int(k):
    return CycloNum.from_fraction(Fraction(k))


def diag(vals):
    return [[cyclo_int(vals[i]) if i == j else CycloNum.zero()
             for j in range(len(vals))] for i in range(len(vals))]


def test_signature_basics():
    assert signature(diag([1, 1, 1])) == (3, 0, 0)
    assert signature(diag([1, -1, 0])) == (1, 1, 1)
    assert signature([]) == (0, 0, 0)


def test_signature_rejects_non_hermitian():
    z3 = CycloNum.root_of_unity(3, 1)
    bad = [[CycloNum.one(), z3], [z3, CycloNum.one()]]
    with pytest.raises(ValueError):
        signature(bad)


def test_signature_zero_diagonal_block():
    # [[0, 1], [1, 0]] has inertia (1, 1, 0)
    h = [[CycloNum.zero(), CycloNum.one()], [CycloNum.one(), CycloNum.zero()]]
    assert signature(h) == (1, 1, 0)
    # imaginary off-diagonal entry
    i4 = CycloNum.root_of_unity(4, 1)
    h = [[CycloNum.zero(), i4], [-i4, CycloNum.zero()]]
    assert signature(h) == (1, 1, 0)


def random_hermitian(rng, dim, m=12):
    from heckeform.cyclo import _euler_phi
    deg = _euler_phi(m)
    a = [[CycloNum(m, [rng.randint(-3, 3) for _ in range(deg)], rng.randint(1, 3))
          for _ in range(dim)] for _ in range(dim)]
    out = [[CycloNum.zero() for _ in range(dim)] for _ in range(dim)]
    for i in range(dim):
        for j in range(dim):
            out[i][j] = a[i][j] + a[j][i].conj()
    return out


def random_invertible(rng, dim, m=12):
    while True:
        p = [[CycloNum.from_fraction(Fraction(rng.randint(-3, 3)))
              for _ in range(dim)] for _ in range(dim)]
        if rng.random() < 0.5:
            p[0][0] = p[0][0] + CycloNum.root_of_unity(m, rng.randrange(m))
        if matrix_rank(p) == dim:
            return p


def test_sylvester_invariance():
    rng = random.Random(7)
    for dim in (2, 3, 4, 5, 6):
        h = random_hermitian(rng, dim)
        sig = signature(h)
        assert sum(sig) == dim
        p = random_invertible(rng, dim)
        pdag = [[p[b][a].conj() for b in range(dim)] for a in range(dim)]
        congruent = mat_mul(mat_mul(pdag, h), p)
        assert signature(congruent) == sig


def test_signature_agrees_with_float_eigenvalues():
    import numpy as np
    rng = random.Random(8)
    for dim in (2, 3, 4):
        for _ in range(5):
            h = random_hermitian(rng, dim)
            npls, nneg, nz = signature(h)
            arr = np.array([[x.to_complex() for x in row] for row in h])
            eig = np.linalg.eigvalsh(arr)
            assert npls == sum(1 for v in eig if v > 1e-9)
            assert nneg == sum(1 for v in eig if v < -1e-9)


def test_verdict_examples():
    v = verdict(Partition([1, 1]), RationalC.parse("1/2"))
    assert v.status == UNITARY and v.dim_d == 1
    v = verdict(Partition([3]), RationalC.parse("1/2"))
    assert v.status == ZERO and v.dim_d == 0
    v = verdict(Partition([2, 1]), RationalC.parse("0"))
    assert v.status == UNITARY and v.signature == (2, 0, 0)
    v = verdict(Partition([2, 1]), RationalC.parse("1/3"))
    assert v.status == UNITARY and v.signature[2] == 1
    v = verdict(Partition([3, 1]), RationalC.parse("1/4"))
    assert v.status == UNITARY
    v = verdict(Partition([3, 1]), RationalC.parse("1/3"))
    assert v.status == NOT_UNITARY
    # sign-symmetry: flipping H cannot change the verdict category
    assert verdict(Partition([2, 2]), RationalC.parse("1/4")).status in (UNITARY, NOT_UNITARY)


def test_zero_status_matches_e_restriction():
    from heckeform.combinat import is_e_restricted
    from heckeform.cyclo import smallest_e
    for n in range(2, 6):
        for p in partitions_of(n):
            for c in window_rationals(8):
                v = verdict(p, c)
                assert (v.status == ZERO) == (not is_e_restricted(p, smallest_e(c)))
                assert sum(v.signature) == v.dim_s
                assert v.dim_d == v.signature[0] + v.signature[1]


def test_predicted_locus_examples():
    loc = predicted_locus(Partition([3, 1]))
    assert loc.kind == "IntervalPlusPoints"
    assert loc.interval_radius == Fraction(1, 4)
    assert loc.points == frozenset({Fraction(1, 4), Fraction(-1, 4)})
    loc = predicted_locus(Partition([2, 2, 2]))
    assert loc.interval_radius == Fraction(1, 4)
    assert loc.points == frozenset({Fraction(1, 4), Fraction(-1, 4),
                                    Fraction(1, 3), Fraction(-1, 3)})
    assert predicted_locus(Partition([1, 1, 1])).kind == "FullInterval"
    loc = predicted_locus(Partition([3]))
    assert loc.kind == "NMinusSet"
    assert loc.excluded == frozenset({Fraction(1, 2), Fraction(1, 3), Fraction(-1, 3)})
    assert loc.contains(RationalC.parse("0"))
    assert not loc.contains(RationalC.parse("1/3"))
    assert loc.contains(RationalC.parse("1/5"))


def test_singular_points():
    assert [str(c) for c in singular_points((2, 1))] == ["-1/3", "1/3"]
    assert singular_points((1, 1, 1)) == ()
    for parts in [(2, 2), (3, 1), (2, 1, 1)]:
        n = sum(parts)
        for c in singular_points(parts):
            from heckeform.cyclo import smallest_e
            assert 2 <= smallest_e(c) <= n


def test_window_rationals():
    pts = window_rationals(4)
    vals = [c.value for c in pts]
    assert Fraction(1, 2) in vals and Fraction(-1, 2) not in vals
    assert Fraction(0) in vals
    assert vals == sorted(vals)
    assert all(v.denominator <= 4 for v in vals)


def test_simplest_between():
    assert simplest_between(Fraction(0), Fraction(1, 2)) == Fraction(1, 3)
    assert simplest_between(Fraction(-1, 3), Fraction(-1, 4)) == Fraction(-2, 7)
    assert simplest_between(Fraction(1, 3), Fraction(1, 2)) == Fraction(2, 5)


def test_scan_bound_guard():
    with pytest.raises(ValueError):
        scan_locus(Partition([2, 1]), 4)


def test_scan_examples():
    rep = scan_locus(Partition([2, 1]), 8)
    assert rep.agreement
    members = {c.value for c, v in rep.tested_points if v.status == UNITARY}
    assert members == {c.value for c in window_rationals(8)
                       if abs(c.value) <= Fraction(1, 3)}
    rep = scan_locus(Partition([1, 1]), 6)
    assert rep.agreement
    assert all(v.status == UNITARY for _, v in rep.tested_points)
    rep = scan_locus(Partition([2, 2]), 10)
    assert rep.agreement
    members = {c.value for c, v in rep.tested_points if v.status == UNITARY}
    assert members == {c.value for c in window_rationals(10)
                       if abs(c.value) <= Fraction(1, 3)}


def test_scan_local_constancy():
    rep = scan_locus(Partition([3, 1]), 12)
    singular_vals = {c.value for c in rep.singular}
    runs = []
    cur = None
    for c, v in rep.tested_points:
        if c.value in singular_vals:
            cur = None
            continue
        if cur is None:
            runs.append([])
            cur = []
        runs[-1].append(v.status)
    assert all(len(set(r)) == 1 for r in runs)


def test_scan_report_json_schema():
    rep = scan_locus(Partition([2, 1]), 8)
    data = rep.to_json()
    assert set(data) == {"lambda", "predicted", "points", "agreement"}
    assert all(set(p) == {"c", "status", "signature"} for p in data["points"])
    rows = rep.csv_rows()
    from heckeform.unitarity import CSV_HEADER
    assert all(len(r) == len(CSV_HEADER) for r in rows)


def test_endpoint_containment_small():
    # every main hook point of a non-hook, non-row/column shape is unitary
    from heckeform.combinat import hook_data
    for n in range(3, 6):
        for p in partitions_of(n):
            parts = p.parts
            if len(parts) == 1 or parts[0] == 1:
                continue
            hd = hook_data(p)
            for k in hd.main_hooks:
                if Fraction(1, k) <= Fraction(1, 2):
                    assert verdict(p, RationalC(Fraction(1, k))).status == UNITARY
            beyond = Fraction(1, hd.smallest_main) + Fraction(1, 100)
            c = RationalC(simplest_between(Fraction(1, hd.smallest_main), beyond))
            if c.value not in {Fraction(1, k) for k in hd.main_hooks}:
                assert verdict(p, c).status == NOT_UNITARY


def test_verify_small_all_agree():
    summary = verify_classification(4, 12, threads=1)
    assert summary["agreement"]
    assert len(summary["shapes"]) == 2 + 3 + 5


def test_verify_threaded_determinism():
    a = verify_classification(4, 10, threads=1)
    b = verify_classification(4, 10, threads=2)
    assert a == b


def test_known_divergences_inventory():
    # the closed-form locus misses Galois conjugates of boundary points where
    # the quotient is one-dimensional; pin the exact inventory at n = 5
    rep = scan_locus(Partition([4, 1]), 12)
    assert not rep.agreement
    bad = sorted(c.value for c, v in rep.tested_points
                 if (v.status == UNITARY) != rep.predicted.contains(c))
    assert bad == [Fraction(-2, 5), Fraction(2, 5)]
    assert verdict(Partition([4, 1]), RationalC.parse("2/5")).dim_d == 1

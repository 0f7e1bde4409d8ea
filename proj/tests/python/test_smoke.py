import cmath
import json
import os
import random
import subprocess
from fractions import Fraction
from math import comb

import pytest

import kohn_lens as kl


def test_lens_space_roundtrip():
    lens = kl.LensSpace(5, [6, -3])
    assert lens.n == 2 and lens.k == 5
    assert lens.weights == [1, 2]
    assert str(lens) == "5:1,2"
    assert kl.LensSpace.parse("5:1,2") == lens
    assert repr(lens) == "LensSpace('5:1,2')"


def test_errors_carry_codes():
    with pytest.raises(kl.KohnError) as info:
        kl.LensSpace(4, [1, 2])
    assert info.value.code == "InvalidWeight"
    assert isinstance(info.value, ValueError)
    with pytest.raises(kl.KohnError) as info:
        kl.multiplicity(kl.sphere(2), 7)
    assert info.value.code == "InvalidEigenvalue"
    with pytest.raises(ValueError):
        kl.dim_invariant(kl.sphere(2), 1, 1, method="nope")


def test_dimensions():
    assert kl.dim_hpq(3, 2, 1) == 15
    assert kl.eigenvalue(2, 2, 1) == 6
    assert kl.sphere_counting(2, 4) == 8
    lens = kl.LensSpace(3, [1, 2])
    for method in ("dp", "bruteforce", "recurrence"):
        assert kl.dim_invariant(lens, 1, 1, method=method) == 1
        assert kl.dim_invariant(lens, 4, 1, method=method) == 2
    assert kl.mn_counts(lens, 1, 1) == (1, 1)
    # Big integers survive the trip into Python.
    n, p, q = 20, 200, 200
    exact = (p + q + n - 1) * comb(p + n - 2, n - 2) * comb(q + n - 2, n - 2) // (n - 1)
    assert exact > 2**64
    assert kl.dim_hpq(n, p, q) == exact


def test_spectrum():
    table = kl.build_spectrum(kl.sphere(2), 8)
    assert {lam: mult for lam, (mult, _) in table.items()} == {2: 2, 4: 6, 6: 8, 8: 14}
    assert table[4][1] == [(0, 2, 3), (1, 1, 3)]
    assert kl.lens_counting(kl.LensSpace(2, [1, 1]), 4) == 6
    assert kl.multiplicity(kl.sphere(2), 6) == 8


def test_asymptotics():
    assert abs(kl.universal_constant(2) - 1 / 48) < 1e-9
    lam, n_lens, n_sphere, ratio = kl.weyl_ratio_series(kl.LensSpace(3, [1, 2]), 2000, 2000)[0]
    assert lam == 2000
    assert ratio == Fraction(n_lens, n_sphere)
    assert abs(ratio - Fraction(1, 3)) < Fraction(1, 50)
    assert kl.check_lower_bound(10, 2, 3, 3) == (28, Fraction(-88, 3), True)
    assert kl.check_upper_bound(10, 2, 3, 3) == (74, 132, True)
    assert kl.lemma_ratio(2, 1) == Fraction(1, 2)


def test_isospectral():
    a, b = kl.LensSpace(5, [1, 2]), kl.LensSpace(5, [1, 3])
    assert kl.condition4_witness(a, b) == (3, [1, 0])
    assert kl.condition4_witness(kl.LensSpace(5, [1, 1]), a) is None
    assert kl.spectra_equal_up_to(a, b, 200)
    assert not kl.dims_equal(kl.LensSpace(7, [1, 2]), kl.LensSpace(7, [1, 3]))
    assert kl.d_invariant_check(a, b)
    assert kl.c_matrix(3, 6) == [[1, 0, 0], [0, 0, 0], [0, 1, 0]]
    assert kl.span_dimension(3, list(range(2, 201, 2))) == 6
    classes = kl.classify_all(5)
    assert len(classes) == 3
    assert sum(len(c["members"]) for c in classes) == 16


def test_genfunc():
    lens = kl.LensSpace(3, [1, 2])
    closed = kl.genfunc_closed(lens, 0.3, 0.2)
    assert abs(closed - kl.genfunc_series(lens, 0.3, 0.2, 60, 60)) < 1e-9
    with pytest.raises(kl.KohnError):
        kl.genfunc_closed(lens, 0.95, 0.0)
    rng = random.Random(3)
    points = [(cmath.rect(0.5 * rng.random(), 6.28 * rng.random()), cmath.rect(0.5 * rng.random(), 6.28 * rng.random()))
              for _ in range(12)]
    assert kl.independence_probe(3, points) == 6


@pytest.mark.skipif("KOHN_LENS_CLI" not in os.environ, reason="command line tool not built")
def test_cli_matches_module():
    cli = os.environ["KOHN_LENS_CLI"]
    out = subprocess.run([cli, "cmatrix", "--k", "5", "--lambda", "50"], capture_output=True, text=True, check=True)
    assert json.loads(out.stdout) == kl.c_matrix(5, 50)
    out = subprocess.run([cli, "count", "--lens", "7:1,3", "--lambda-max", "300"],
                         capture_output=True, text=True, check=True)
    assert int(out.stdout) == kl.lens_counting(kl.LensSpace(7, [1, 3]), 300)
    bad = subprocess.run([cli, "dim", "--lens", "4:1,2", "--p", "1", "--q", "1"], capture_output=True, text=True)
    assert bad.returncode == 2

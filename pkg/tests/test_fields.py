import itertools

import numpy as np
import pytest

from grasspack.designs import BlockDesign, verify_design
from grasspack.errors import ParameterError
from grasspack.fields import (PrimePower, build_field, enumerate_affine_hyperplanes,
                              enumerate_projective_plane, factor_prime_power,
                              field_trace, is_prime, smallest_irreducible)


def test_is_prime():
    primes = {2, 3, 5, 7, 11, 13, 71, 101}
    for n in range(2, 102):
        assert is_prime(n) == (n in primes or all(n % k for k in range(2, n)))
    assert not is_prime(1) and not is_prime(0)


def test_prime_power_validation():
    assert PrimePower(3, 2).q == 9
    with pytest.raises(ParameterError):
        PrimePower(4, 1)
    with pytest.raises(ParameterError):
        PrimePower(3, 0)
    assert factor_prime_power(27) == PrimePower(3, 3)
    assert factor_prime_power(7) == PrimePower(7, 1)
    with pytest.raises(ParameterError):
        factor_prime_power(12)


def test_smallest_irreducible_gf9_gf25():
    # over GF(3): x^2 (v=0) is reducible, x^2+1 (v=1) has no root -> chosen
    assert smallest_irreducible(3, 2) == (1, 0, 1)
    # over GF(5): x^2+1 has root 2, x^2+2 has none -> chosen
    assert smallest_irreducible(5, 2) == (2, 0, 1)


@pytest.mark.parametrize("q", [9, 25, 27, 49, 81])
def test_field_axioms_exhaustive(q):
    ft = build_field(q)
    elems = np.arange(q)
    a = elems[:, None, None]
    b = elems[None, :, None]
    c = elems[None, None, :]
    assert np.array_equal(ft.mul(a, ft.add(b, c)), ft.add(ft.mul(a, b), ft.mul(a, c)))
    assert np.array_equal(ft.mul(ft.mul(a, b), c), ft.mul(a, ft.mul(b, c)))
    assert np.array_equal(ft.add(ft.add(a, b), c), ft.add(a, ft.add(b, c)))
    for x in range(1, q):
        assert ft.mul(x, ft.inv(x)) == 1


def test_gf7_trace_is_identity():
    ft = build_field(PrimePower(7, 1))
    assert field_trace(ft, 5) == 5
    assert all(ft.trace(x) == x for x in range(7))


def test_gf9_trace_by_enumeration():
    # tr(x) = x + x^3: verify linearity and surjectivity exhaustively
    ft = build_field(PrimePower(3, 2))
    assert ft.trace(0) == 0

    def cube(x):
        return ft.mul(x, ft.mul(x, x))

    for x in range(9):
        assert ft.trace(x) == ft.add(x, cube(x))
        for y in range(9):
            assert ft.trace(ft.add(x, y)) == (ft.trace(x) + ft.trace(y)) % 3
    assert {ft.trace(x) for x in range(9)} == {0, 1, 2}


def test_gf9_character_sum_vanishes():
    ft = build_field(9)
    omega = np.exp(2j * np.pi / 3)
    total = sum(omega ** ft.trace(x) for x in range(9))
    assert abs(total) < 1e-12


def test_build_field_rejects_nonprime():
    with pytest.raises(ParameterError):
        build_field(PrimePower(4, 1))


class TestAffineHyperplanes:
    def test_ag22_line_count_and_size(self):
        blocks = enumerate_affine_hyperplanes(2, 2)
        assert len(blocks) == 6
        assert all(len(b) == 2 for b in blocks)
        # every pair of the 4 points appears exactly once: these are all 6 pairs
        assert sorted(blocks) == sorted(itertools.combinations(range(4), 2))

    def test_ag23_count(self):
        blocks = enumerate_affine_hyperplanes(3, 2)
        assert len(blocks) == 12  # 3 (9-1)/2
        assert all(len(b) == 3 for b in blocks)

    def test_dimension_below_minimum(self):
        with pytest.raises(ParameterError):
            enumerate_affine_hyperplanes(2, 1)

    @pytest.mark.parametrize("p,t1", [(2, 2), (3, 2), (2, 3)])
    def test_is_two_design_with_expected_lambda(self, p, t1):
        blocks = enumerate_affine_hyperplanes(p, t1)
        design = BlockDesign(p ** t1, blocks)
        report = verify_design(design, 2)
        assert report.is_t_design[2]
        assert report.lambda_observed == (p ** (t1 - 1) - 1) // (p - 1)


class TestProjectivePlane:
    def test_fano(self):
        lines = enumerate_projective_plane(2)
        assert len(lines) == 7
        assert all(len(L) == 3 for L in lines)
        report = verify_design(BlockDesign(7, lines), 2)
        assert report.is_t_design[2] and report.lambda_observed == 1
        assert report.is_symmetric

    def test_order_three(self):
        lines = enumerate_projective_plane(3)
        assert len(lines) == 13
        assert all(len(L) == 4 for L in lines)

    def test_pairwise_intersection_is_one(self):
        for q in (2, 3, 4):
            lines = enumerate_projective_plane(q)
            for a, b in itertools.combinations(lines, 2):
                assert len(set(a) & set(b)) == 1

    def test_invalid_order(self):
        with pytest.raises(ParameterError):
            enumerate_projective_plane(6)

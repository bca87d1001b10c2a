from collections import Counter
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import cover_pairs_by_scan
from younglat.partitions import (
    Shape,
    leq,
    partitions_in_box,
    to_multiplicity,
)
from younglat.poset import (
    ParseError,
    RankPolynomial,
    build_lattice,
    check_splitting_identities,
    gaussian_binomial,
    parse_poset,
    q_factorial,
    rank_profile,
    serialize_poset,
)


class TestGaussianBinomial:
    def test_3_3(self):
        assert list(gaussian_binomial(3, 3)) == [1, 1, 2, 3, 3, 3, 3, 2, 1, 1]

    def test_n_zero(self):
        assert list(gaussian_binomial(5, 0)) == [1]
        assert list(gaussian_binomial(0, 5)) == [1]

    def test_2_2_against_enumeration(self):
        counts = Counter(sum(a) for a in partitions_in_box(2, 2))
        expected = [counts[k] for k in range(5)]
        assert expected == [1, 1, 2, 1, 1]
        assert list(gaussian_binomial(2, 2)) == expected

    def test_4_3_frozen_from_enumeration(self):
        counts = Counter(sum(a) for a in partitions_in_box(4, 3))
        expected = [counts[k] for k in range(13)]
        assert expected == [1, 1, 2, 3, 4, 4, 5, 4, 4, 3, 2, 1, 1]
        assert list(gaussian_binomial(4, 3)) == expected

    def test_4_3_splits_into_3_3_and_shifted_4_2(self):
        whole = list(gaussian_binomial(4, 3))
        peeled = [0, 0, 0] + list(gaussian_binomial(3, 3))
        rest = list(gaussian_binomial(4, 2))
        summed = [
            (peeled[k] if k < len(peeled) else 0)
            + (rest[k] if k < len(rest) else 0)
            for k in range(len(whole))
        ]
        assert whole == summed

    def test_coefficients_count_partitions(self):
        for m in range(6):
            for n in range(6):
                g = gaussian_binomial(m, n)
                counts = Counter(sum(a) for a in partitions_in_box(m, n))
                assert list(g) == [counts[k] for k in range(m * n + 1)]

    def test_total_is_binomial(self):
        for m in range(9):
            for n in range(9):
                assert gaussian_binomial(m, n).total == comb(m + n, m)

    def test_symmetry_and_unimodality_up_to_12(self):
        for m in range(13):
            for n in range(13):
                g = gaussian_binomial(m, n)
                assert g.is_symmetric
                assert g.is_unimodal

    def test_q_factorial_factorization(self):
        # (m+n)! = m! n! [m+n choose m] as polynomials
        from younglat.poset import _poly_mul

        for m in range(1, 7):
            for n in range(1, 7):
                lhs = list(q_factorial(m + n))
                rhs = _poly_mul(
                    list(q_factorial(m)),
                    _poly_mul(list(q_factorial(n)), list(gaussian_binomial(m, n))),
                )
                assert lhs == rhs


class TestRankPolynomialType:
    def test_not_unimodal_detected(self):
        assert not RankPolynomial((1, 2, 1, 2, 1)).is_unimodal

    def test_not_symmetric_detected(self):
        assert not RankPolynomial((1, 2)).is_symmetric


class TestBuildLattice:
    def test_l33_has_twenty_elements(self):
        assert len(build_lattice(Shape(3, 3))) == 20

    def test_one_row_is_a_chain(self):
        for n in range(1, 7):
            p = build_lattice(Shape(1, n))
            assert len(p) == n + 1
            assert len(p.covers) == n

    def test_l43_count_and_height(self):
        p = build_lattice(Shape(4, 3))
        assert len(p) == 35 == comb(7, 3)
        assert p.height == 12

    def test_degenerate_shapes_empty(self):
        for shape in [Shape(0, 4), Shape(4, 0), Shape(0, 0)]:
            p = build_lattice(shape)
            assert len(p) == 0 and len(p.covers) == 0

    def test_unique_min_and_max(self):
        for m in range(1, 6):
            for n in range(1, 6):
                p = build_lattice(Shape(m, n))
                profile = rank_profile(p)
                assert profile[0] == 1 and profile[p.height] == 1

    def test_covers_raise_rank_by_one(self):
        p = build_lattice(Shape(4, 4), "composition")
        for lo, hi, _ in p.covers:
            assert p.ranks[hi] == p.ranks[lo] + 1

    def test_profile_matches_gaussian_small(self):
        for m in range(6):
            for n in range(6):
                for coords in ("partition", "composition"):
                    p = build_lattice(Shape(m, n), coords)
                    if m and n:
                        assert rank_profile(p) == gaussian_binomial(m, n)

    def test_rejects_unknown_coordinate_mode(self):
        with pytest.raises(ValueError):
            build_lattice(Shape(2, 2), "cartesian")

    def test_accessors(self):
        p = build_lattice(Shape(2, 2), "composition")
        assert (1, 0, 1) in p
        assert p.rank_of((1, 0, 1)) == 2
        assert p.is_cover((0, 1, 1), (1, 0, 1))
        assert p.color_of((0, 1, 1), (1, 0, 1)) == 1
        with pytest.raises(KeyError):
            p.index_of((9, 9, 9))
        assert not p.is_cover((9, 9, 9), (1, 0, 1))

    def test_q_factorial_rejects_negative(self):
        with pytest.raises(ValueError):
            q_factorial(-1)

    def test_cover_scan_oracle(self):
        # independent pairwise scan agrees with constructive generation
        for m in range(1, 5):
            for n in range(1, 5):
                shape = Shape(m, n)
                p = build_lattice(shape)
                elements = list(p.elements)
                expected = cover_pairs_by_scan(
                    elements, lambda a, b: a != b and leq(a, b, shape)
                )
                got = sorted(
                    (p.elements[lo], p.elements[hi]) for lo, hi, _ in p.covers
                )
                assert got == expected

    def test_coordinate_systems_isomorphic(self):
        for m in range(1, 6):
            for n in range(1, 6):
                shape = Shape(m, n)
                pp = build_lattice(shape, "partition")
                pc = build_lattice(shape, "composition")
                mapped = [to_multiplicity(a, shape) for a in pp.elements]
                assert mapped == list(pc.elements)
                assert pp.covers == pc.covers
                assert pp.ranks == pc.ranks


class TestSplittingIdentities:
    def test_l33_splits_ten_ten(self):
        result = check_splitting_identities(3, 3)
        assert result.passed
        assert result.with_largest == 10
        assert result.without_largest == 10

    def test_smallest_box(self):
        assert check_splitting_identities(1, 1).passed

    def test_l43(self):
        assert check_splitting_identities(4, 3).passed

    def test_exhaustive_up_to_8(self):
        for m in range(1, 9):
            for n in range(1, 9):
                assert check_splitting_identities(m, n).passed

    def test_iterated_decomposition_by_largest_part(self):
        # peeling the largest part of L(3,3) repeatedly splits it into
        # two-row boxes with ceilings 3, 2, 1, 0
        elements = list(partitions_in_box(3, 3))
        groups = {k: set() for k in range(4)}
        for a in elements:
            groups[a[0] if a else 0].add(a)
        assert {len(groups[k]) for k in groups} == {10, 6, 3, 1}
        for k in range(4):
            image = {a[1:] for a in groups[k]} if k else groups[k]
            assert image == set(partitions_in_box(2, k))


class TestPosetFiles:
    def test_round_trip_both_coordinate_modes(self):
        for coords in ("partition", "composition"):
            p = build_lattice(Shape(4, 3), coords)
            text = serialize_poset(p)
            q = parse_poset(text)
            assert q == p
            assert serialize_poset(q) == text

    def test_bodies_identical_across_modes(self):
        a = serialize_poset(build_lattice(Shape(4, 3), "partition"))
        b = serialize_poset(build_lattice(Shape(4, 3), "composition"))
        assert a.splitlines()[0] == "poset L(4,3) height=12 count=35"
        assert b.splitlines()[0] == "poset L'(4,3) height=12 count=35"
        assert a.splitlines()[1:] == b.splitlines()[1:]

    def test_header_shape(self):
        text = serialize_poset(build_lattice(Shape(3, 3)))
        first = text.splitlines()[0]
        assert first == "poset L(3,3) height=9 count=20"

    @given(st.integers(0, 4), st.integers(0, 4))
    def test_round_trip_random_shapes(self, m, n):
        p = build_lattice(Shape(m, n), "composition")
        assert parse_poset(serialize_poset(p)) == p

    def test_parse_error_carries_line_number(self):
        text = serialize_poset(build_lattice(Shape(2, 2)))
        lines = text.splitlines()
        lines[3] = "bogus line"
        with pytest.raises(ParseError) as err:
            parse_poset("\n".join(lines) + "\n")
        assert err.value.line == 4

    def test_parse_rejects_wrong_count(self):
        text = serialize_poset(build_lattice(Shape(2, 2)))
        with pytest.raises(ParseError):
            parse_poset(text.replace("count=6", "count=5"))

    def test_parse_rejects_bad_rank(self):
        text = serialize_poset(build_lattice(Shape(2, 2)))
        bad = text.replace("1 1 011", "1 2 011")
        with pytest.raises(ParseError):
            parse_poset(bad)

    def test_parse_rejects_wrong_color(self):
        p = build_lattice(Shape(2, 2))
        text = serialize_poset(p)
        lines = text.splitlines()
        lo, hi, color = lines[-1].split()
        flipped = "1" if color != "1" else "2"
        lines[-1] = f"{lo} {hi} {flipped}"
        with pytest.raises(ParseError):
            parse_poset("\n".join(lines) + "\n")

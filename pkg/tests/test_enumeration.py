"""Enumeration: levelled finite/affine growth and the hyperbolic search.

Heavier cross-checks (oracle rank 5, brute force rank 4, the full rank sweep)
live in the acceptance tests; this file keeps the fast cases.
"""

from __future__ import annotations

import pytest

from dynkin import RankBoundError
from dynkin.classify import AFFINE, FINITE, kind_of_rows, rows_fully_finite
from dynkin.enumeration import (
    finite_affine_classes,
    hyperbolic_fast_flags,
    search_rank,
    search_rank_bruteforce,
    search_rank_oracle,
)
from dynkin.classify import hyperbolic_compact_scan

from lie_fixtures import AFFINE_CLASS_COUNTS, FINITE_CLASS_COUNTS


class TestFiniteAffineLevels:
    @pytest.mark.parametrize("k", range(1, 7))
    def test_counts(self, k):
        fin, aff = finite_affine_classes(k)
        assert len(fin) == FINITE_CLASS_COUNTS[k]
        assert len(aff) == AFFINE_CLASS_COUNTS.get(k, 0)

    def test_members_have_claimed_type(self):
        for k in range(1, 6):
            fin, aff = finite_affine_classes(k)
            for rows in fin:
                assert kind_of_rows(rows) == FINITE
            for rows in aff:
                assert kind_of_rows(rows) == AFFINE

    def test_members_are_canonical_and_distinct(self):
        from dynkin.canonical import canonical_rows

        for k in range(1, 6):
            fin, aff = finite_affine_classes(k)
            pool = list(fin) + list(aff)
            assert len(set(pool)) == len(pool)
            for rows in pool:
                assert canonical_rows(rows)[0] == rows


class TestSearchRank:
    def test_rank3_matches_oracle(self):
        assert search_rank(3) == search_rank_oracle(3)

    def test_rank4_matches_oracle(self):
        assert search_rank(4) == search_rank_oracle(4)

    def test_rank3_matches_bruteforce(self):
        assert set(search_rank(3)) == set(search_rank_bruteforce(3))

    def test_rank_bounds(self):
        with pytest.raises(RankBoundError):
            search_rank(2)
        with pytest.raises(RankBoundError):
            search_rank_oracle(6)
        with pytest.raises(RankBoundError):
            search_rank_bruteforce(5)

    def test_results_sorted_and_canonical(self):
        from dynkin.canonical import canonical_rows

        found = search_rank(4)
        assert list(found) == sorted(found)
        for rows in found:
            assert canonical_rows(rows)[0] == rows


class TestFastFlags:
    def test_agrees_with_definition_on_search_output(self):
        for n in (3, 4):
            for rows in search_rank(n):
                assert hyperbolic_fast_flags(rows) == hyperbolic_compact_scan(rows)

    def test_agrees_on_non_hyperbolic_cases(self):
        cases = [
            ((2, -3, 0, 0), (-2, 2, -1, 0), (0, -1, 2, -1), (0, 0, -1, 2)),
            ((2, -2, -2), (-2, 2, -2), (-2, -2, 2)),
        ]
        for rows in cases:
            assert hyperbolic_fast_flags(rows) == hyperbolic_compact_scan(rows)

    def test_full_finite_helper(self):
        assert rows_fully_finite(((2, -1, 0), (-1, 2, 0), (0, 0, 2)))
        assert not rows_fully_finite(((2, -2), (-2, 2)))

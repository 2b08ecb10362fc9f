"""Canonical labelling: minimality, invariance, and the realizing permutation."""

from __future__ import annotations

import itertools
import random

from dynkin import canonical_form, validate_gcm
from dynkin.canonical import canonical_rows
from dynkin.symmetrize import random_gcm


def permute(rows, perm):
    n = len(rows)
    return tuple(tuple(rows[perm[i]][perm[j]] for j in range(n)) for i in range(n))


def brute_minimum(rows):
    n = len(rows)
    return min(permute(rows, p) for p in itertools.permutations(range(n)))


class TestMinimality:
    def test_matches_bruteforce(self):
        rng = random.Random(41)
        for _ in range(150):
            A = random_gcm(rng, rng.randint(1, 5))
            canon, _ = canonical_rows(A.rows)
            assert canon == brute_minimum(A.rows)

    def test_known_small_case(self):
        canon, _ = canonical_rows(((2, -1), (-4, 2)))
        assert canon == ((2, -4), (-1, 2))


class TestInvariance:
    def test_all_relabelings_collapse(self):
        rng = random.Random(43)
        for _ in range(60):
            A = random_gcm(rng, rng.randint(2, 6))
            canon, _ = canonical_rows(A.rows)
            for _ in range(5):
                perm = list(range(A.rank))
                rng.shuffle(perm)
                shuffled = permute(A.rows, perm)
                validate_gcm(shuffled)  # permuting preserves the axioms
                assert canonical_rows(shuffled)[0] == canon

    def test_idempotent(self):
        rng = random.Random(47)
        for _ in range(60):
            A = random_gcm(rng, rng.randint(1, 6))
            canon, _ = canonical_rows(A.rows)
            assert canonical_rows(canon)[0] == canon


class TestRealizingPermutation:
    def test_permutation_produces_canonical_rows(self):
        rng = random.Random(53)
        for _ in range(100):
            A = random_gcm(rng, rng.randint(1, 6))
            canon, perm = canonical_rows(A.rows)
            assert permute(A.rows, perm) == canon
            assert sorted(perm) == list(range(A.rank))

    def test_wrapper_returns_matrix(self, unbalanced_triangle):
        cf = canonical_form(unbalanced_triangle)
        assert cf.matrix.rows == cf.rows
        assert canonical_form(cf.matrix).rows == cf.rows

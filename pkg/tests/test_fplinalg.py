"""Mod-p linear algebra: rank/kernel goldens and the incremental accumulator."""

import random

from torushecke.fplinalg import FpMatrix, FpRankAccumulator, fp_rank, fp_rank_kernel


def test_rank_kernel_golden():
    m = FpMatrix.from_rows([[1, 2], [2, 4]], 5)
    rank, basis = fp_rank_kernel(m)
    assert rank == 1
    assert basis == [(3, 1)]
    # kernel vector actually annihilates the rows
    for row in m.entries:
        assert sum(a * b for a, b in zip(row, basis[0])) % 5 == 0


def test_rank_identity_and_zero():
    assert fp_rank([[1, 0], [0, 1]], 7) == 2
    assert fp_rank([[0, 0], [0, 0]], 7) == 0
    assert fp_rank([], 7) == 0


def test_rank_kernel_dimension_formula():
    rng = random.Random(2026)
    for _ in range(50):
        p = rng.choice([2, 3, 5, 7])
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = FpMatrix.from_rows(
            [[rng.randrange(p) for _ in range(cols)] for _ in range(rows)], p
        )
        rank, basis = fp_rank_kernel(m)
        assert rank + len(basis) == cols
        for vec in basis:
            for row in m.entries:
                assert sum(a * b for a, b in zip(row, vec)) % p == 0
        # kernel vectors are independent: stack them and re-rank
        if basis:
            assert fp_rank(basis, p) == len(basis)


def test_accumulator_agrees_with_batch_rank():
    rng = random.Random(99)
    for _ in range(30):
        p = rng.choice([3, 5])
        width = rng.randint(1, 4)
        vecs = [
            tuple(rng.randrange(p) for _ in range(width))
            for _ in range(rng.randint(1, 6))
        ]
        acc = FpRankAccumulator(p, width)
        grew = [acc.add(v) for v in vecs]
        assert acc.rank == fp_rank(vecs, p)
        assert sum(grew) == acc.rank
        for v in vecs:
            assert acc.contains(v)
        # a vector outside the span is rejected by contains
        if acc.rank < width:
            for cand in _unit_vectors(width):
                if not acc.contains(cand):
                    break
            else:
                raise AssertionError("span is proper but contains every unit vector")


def _unit_vectors(width):
    for i in range(width):
        yield tuple(1 if j == i else 0 for j in range(width))

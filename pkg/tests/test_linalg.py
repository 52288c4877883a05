"""Fraction-free elimination: canonical bases, kernels, zone restriction."""

import random
from fractions import Fraction

from ospoly.linalg import (
    Echelon,
    intersect,
    kernel,
    normalize,
    restrict_to_zone,
    row_to_fractions,
    span,
    vec_from_fractions,
)
from oracles import dense_nullspace


def test_normalize_content_and_sign():
    assert normalize({0: -4, 2: 6}) == {0: -2, 2: 3} or normalize({0: -4, 2: 6}) == {
        0: 2,
        2: -3,
    }
    v = normalize({0: -4, 2: 6})
    assert v[min(v)] > 0


def test_insert_and_membership():
    ech = Echelon()
    assert ech.insert({0: 1, 1: 2}) is not None
    assert ech.insert({0: 2, 1: 4}) is None
    assert ech.insert({1: 1}) is not None
    assert ech.dim == 2
    assert ech.contains({0: 5, 1: -7})
    assert not ech.contains({2: 1})


def test_reduced_echelon_is_canonical_under_shuffle():
    rng = random.Random(7)
    vecs = []
    for _ in range(8):
        vecs.append({i: rng.randint(-5, 5) for i in range(6) if rng.random() < 0.7})
    base = span(vecs).basis()
    for _ in range(5):
        rng.shuffle(vecs)
        assert span(vecs).basis() == base


def test_kernel_matches_dense_oracle():
    rng = random.Random(13)
    ncols = 7
    images = []
    for _ in range(9):
        images.append({i: rng.randint(-3, 3) for i in range(ncols) if rng.random() < 0.6})
    got = kernel(images)
    dense_rows = [[images[r].get(c, 0) for r in range(len(images))] for c in range(ncols)]
    # oracle: nullspace of the column-matrix (map e_r -> images[r])
    oracle = dense_nullspace(dense_rows, len(images))
    assert len(got) == len(oracle)
    # every oracle vector must lie in the span of the computed kernel
    ech = span(got)
    for vec in oracle:
        intified = vec_from_fractions({i: v for i, v in enumerate(vec) if v != 0})
        assert ech.contains(intified)


def test_kernel_vectors_annihilate():
    images = [{0: 1}, {0: 2}, {1: 1}, {0: 1, 1: 1}]
    for combo in kernel(images):
        acc = {}
        for i, c in combo.items():
            for k, v in images[i].items():
                acc[k] = acc.get(k, 0) + c * v
        assert all(v == 0 for v in acc.values())


def test_intersect():
    u = [{0: 1, 1: 1}, {2: 1}]
    v = [{0: 1, 1: 1, 2: 2}, {0: 1}]
    got = intersect(u, v)
    ech = span(got)
    assert ech.dim == 1
    assert ech.contains({0: 1, 1: 1, 2: 2})


def test_restrict_to_zone():
    vecs = [{0: 1, 5: 1}, {1: 1, 5: 2}, {2: 1}]
    inside = restrict_to_zone(vecs, lambda k: k < 5)
    ech = span(inside)
    assert ech.dim == 2
    assert ech.contains({2: 1})
    # the combination (v1 - 2*v0) = {1:1, 0:-2} cancels coordinate 5
    assert ech.contains({0: -2, 1: 1})
    assert not ech.contains({0: 1})


def test_vec_from_fractions():
    v = vec_from_fractions({0: Fraction(1, 2), 3: Fraction(-2, 3)})
    assert v == {0: 3, 3: -4}
    assert row_to_fractions(v) == {0: Fraction(1), 3: Fraction(-4, 3)}

import pytest

from toruscurves import (
    EMPTY_CURVE,
    InvalidPermutation,
    InvalidShape,
    Scheme,
    Unresolvable,
    curve,
    get,
    new_scheme,
    permute,
    reduce_zeros,
    replay_reduction,
    scheme_sum,
    zero_scheme,
)
from conftest import random_nonzero_scheme, random_permutation


def test_new_scheme():
    s = new_scheme(3, [6, 10, 14])
    assert (get(s, 1, 2), get(s, 1, 3), get(s, 2, 3)) == (6, 10, 14)
    assert new_scheme(1, []).entries == ()
    with pytest.raises(InvalidShape):
        new_scheme(3, [1, 2])
    with pytest.raises(InvalidShape):
        new_scheme(0, [])


def test_get_antisymmetric():
    s = new_scheme(3, [6, 10, 14])
    assert get(s, 2, 1) == -6
    with pytest.raises(IndexError):
        get(s, 3, 3)
    with pytest.raises(IndexError):
        get(s, 0, 1)
    for i in range(1, 4):
        for j in range(1, 4):
            if i != j:
                assert get(s, i, j) == -get(s, j, i)


def test_permute_examples():
    assert permute(new_scheme(3, [1, 1, 1]), (2, 1, 3)).entries == (-1, 1, 1)
    s = new_scheme(3, [6, 10, 14])
    assert permute(s, (1, 2, 3)) == s
    out = permute(new_scheme(4, [1, 1, 1, 2, 1, -1]), (1, 2, 4, 3))
    assert out.entries == (1, 2, 1, 1, 1, 1)
    with pytest.raises(InvalidPermutation):
        permute(s, (1, 1, 2))


def test_permute_group_action(rng):
    for _ in range(200):
        n = rng.choice([2, 3, 4, 5])
        s = random_nonzero_scheme(rng, n)
        sig, tau = random_permutation(rng, n), random_permutation(rng, n)
        composed = tuple(sig[tau[i] - 1] for i in range(n))
        assert permute(permute(s, sig), tau) == permute(s, composed)
        assert permute(s, tuple(range(1, n + 1))) == s


def test_scheme_sum():
    a, b = new_scheme(3, [1, 5, 14]), new_scheme(3, [5, 5, 0])
    assert scheme_sum(a, b) == new_scheme(3, [6, 10, 14])
    m = new_scheme(3, [1, 1, 1])
    assert scheme_sum(m, zero_scheme(3)) == m
    assert scheme_sum(m, m) == new_scheme(3, [2, 2, 2])
    with pytest.raises(InvalidShape):
        scheme_sum(m, new_scheme(2, [1]))


def test_reduce_zeros_duplicate():
    log = reduce_zeros(new_scheme(3, [3, 3, 0]))
    assert log.reduced == new_scheme(2, [3])
    (step,) = log.steps
    assert (step.removed_index, step.of_index, step.sign) == (3, 2, 1)
    assert log.survivors == (1, 2)


def test_reduce_zeros_unresolvable():
    out = reduce_zeros(new_scheme(3, [3, 2, 0]))
    assert isinstance(out, Unresolvable)
    assert (out.i, out.j) == (2, 3)


def test_reduce_zeros_empty_row():
    log = reduce_zeros(new_scheme(3, [0, 1, 0]))
    assert log.reduced == new_scheme(2, [1])
    (step,) = log.steps
    assert step.removed_index == 2 and step.reason == "empty"
    assert log.survivors == (1, 3)


def test_reduce_zeros_negated_duplicate():
    log = reduce_zeros(new_scheme(3, [3, -3, 0]))
    assert log.reduced == new_scheme(2, [3])
    (step,) = log.steps
    assert step.sign == -1


def test_reduce_zeros_output_nonzero(rng):
    for _ in range(500):
        n = rng.choice([2, 3, 4, 5])
        k = n * (n - 1) // 2
        s = Scheme(n, tuple(rng.choice([-2, -1, 0, 0, 1, 2]) for _ in range(k)))
        out = reduce_zeros(s)
        if isinstance(out, Unresolvable):
            continue
        assert all(e != 0 for e in out.reduced.entries)
        assert replay_reduction(out) == s


def test_replay_reconstructs_multistep():
    s = new_scheme(4, [0, 5, 0, 5, 0, 5])  # curves 1,3 empty-ish pattern
    out = reduce_zeros(s)
    if not isinstance(out, Unresolvable):
        assert replay_reduction(out) == s


def test_curveclass_basics():
    assert EMPTY_CURVE.is_empty and EMPTY_CURVE.is_primitive()
    assert curve(2, 0).is_primitive() is False
    assert curve(0, 0).is_primitive() is False
    assert curve(-1, 1).negated() == curve(1, -1)

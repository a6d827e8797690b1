import itertools
import random

import pytest

from branchcover.constellation import Constellation, InvalidConstellation, canonical_form, genus, validate
from branchcover.hurwitz import (
    BraidWord,
    Direction,
    apply_braid_word,
    bundle_tuple,
    hurwitz_move,
    hurwitz_orbit,
    monodromy_movie,
)
from branchcover.perm import ParseError, Permutation, cycle_type, product

from conftest import random_identity_tuple


def C(d, *texts):
    return Constellation.from_cycles(d, texts)


def simple_tuples(d, n):
    swaps = [Permutation.transposition(d, i, j) for i in range(1, d + 1) for j in range(i + 1, d + 1)]
    for tup in itertools.product(swaps, repeat=n):
        yield Constellation(d, tup)


def test_bundle_tuple_examples():
    assert bundle_tuple(2) == C(2, *["(1 2)"] * 4)
    assert bundle_tuple(3) == C(3, *["(1 2)"] * 4, *["(2 3)"] * 4)
    assert genus(bundle_tuple(5)) == 4
    with pytest.raises(ValueError):
        bundle_tuple(1)


def test_hurwitz_move_examples():
    c = C(3, "(1 2)", "(2 3)")
    moved = hurwitz_move(c, 1)
    assert moved == C(3, "(1 3)", "(1 2)")
    assert hurwitz_move(moved, 1, Direction.BACKWARD) == c
    assert product(moved.perms, 3) == product(c.perms, 3) == Permutation.from_cycles("(1 3 2)", 3)
    with pytest.raises(IndexError):
        hurwitz_move(c, 2)
    with pytest.raises(IndexError):
        hurwitz_move(c, 0)


def test_moves_preserve_invariants_on_random_tuples():
    rng = random.Random(5)
    for _ in range(200):
        c = random_identity_tuple(rng, rng.randint(1, 5), rng.randint(2, 6))
        k = rng.randint(1, len(c) - 1)
        for direction in Direction:
            m = hurwitz_move(c, k, direction)
            assert m.degree == c.degree
            assert product(m.perms, m.degree) == product(c.perms, c.degree)
            assert sorted(map(cycle_type, m.perms)) == sorted(map(cycle_type, c.perms))
            before, after = validate(c), validate(m)
            assert (before.transitive, before.euler_characteristic) == (after.transitive, after.euler_characteristic)
        assert hurwitz_move(hurwitz_move(c, k), k, Direction.BACKWARD) == c


def test_apply_braid_word_examples():
    c = bundle_tuple(3)
    assert apply_braid_word(c, BraidWord()) == c
    assert apply_braid_word(c, BraidWord((1, -1))) == c
    assert apply_braid_word(c, [2, -2, 5]) == hurwitz_move(c, 5)
    with pytest.raises(IndexError):
        apply_braid_word(c, [8])
    with pytest.raises(ValueError):
        BraidWord((0,))


def test_braid_relation_exhaustive_degree3_length4():
    for c in simple_tuples(3, 4):
        assert apply_braid_word(c, [1, 2, 1]) == apply_braid_word(c, [2, 1, 2])
        assert apply_braid_word(c, [2, 3, 2]) == apply_braid_word(c, [3, 2, 3])
        assert apply_braid_word(c, [1, 3]) == apply_braid_word(c, [3, 1])


def test_braid_word_parse():
    assert BraidWord.parse("1 -2  3").letters == (1, -2, 3)
    assert BraidWord.parse("").letters == ()
    assert str(BraidWord((1, -2))) == "1 -2"
    for bad in ("1 x", "0", "1.5"):
        with pytest.raises(ParseError):
            BraidWord.parse(bad)


def test_orbit_of_fixed_tuple_is_single():
    summary = hurwitz_orbit(C(2, *["(1 2)"] * 4))
    assert summary.size == 1 and not summary.truncated


def test_orbit_single_for_degree3_four_transpositions():
    valid = [c for c in simple_tuples(3, 4) if validate(c).valid]
    assert len(valid) == 24
    summary = hurwitz_orbit(valid[0])
    assert not summary.truncated
    assert set(summary.representatives) == {canonical_form(c) for c in valid}
    assert all(genus(r) == 0 for r in summary.representatives)


def test_orbit_is_order_independent():
    valid = [c for c in simple_tuples(3, 4) if validate(c).valid]
    reps = {hurwitz_orbit(c).representatives for c in valid[:6]}
    assert len(reps) == 1


def test_orbit_truncation_and_errors():
    c = bundle_tuple(3)
    summary = hurwitz_orbit(c, cap=2)
    assert summary.truncated and summary.size == 2
    with pytest.raises(InvalidConstellation):
        hurwitz_orbit(C(3, "(1 2)", "(1 3)"))


def test_movie_examples():
    movie = monodromy_movie(2, [])
    assert len(movie.frames) == 1 and movie.closes_up

    movie = monodromy_movie(3, BraidWord((1, -1)))
    assert len(movie.frames) == 3 and movie.closes_up

    movie = monodromy_movie(3, [4])
    assert all(genus(f) == 2 for f in movie.frames)
    expected = canonical_form(movie.frames[-1]) == canonical_form(movie.frames[0])
    assert movie.closes_up == expected
    # the move at the seam between the two handles gives a non-conjugate tuple
    assert movie.frames[-1] == C(3, *["(1 2)"] * 3, "(1 3)", "(1 2)", *["(2 3)"] * 3)
    assert not movie.closes_up

    with pytest.raises(IndexError):
        monodromy_movie(3, [8])

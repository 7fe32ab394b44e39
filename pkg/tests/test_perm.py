from itertools import permutations

import pytest
from hypothesis import given

from nakayama321.dyck import ascent_descent, enumerate_dyck, parse_path, partial_code
from nakayama321.errors import IdentityNotCovered, Not321Avoiding, ParseError
from nakayama321.perm import (
    Permutation,
    bjs,
    bjs_inverse,
    block_number,
    connectivity_formula,
    connectivity_set,
    excedances,
    fixed_points,
    fixed_points_formula,
    identity,
    is_321_avoiding,
    parse_permutation,
    partial_sums_check,
    support_size,
)

from oracles import catalan_rec, has_321, reduced_word_supports
from strategies import dyck_paths

EX = Permutation((4, 1, 2, 7, 3, 5, 8, 6))
EX_PATH = "UUUDUUUDDDUDDDUD"


def P(*images):
    return Permutation(images)


def test_parse():
    assert parse_permutation("4 1 2 7 3 5 8 6") == EX
    assert parse_permutation("4,1,2,7,3,5,8,6") == EX
    assert parse_permutation("") == Permutation(())
    with pytest.raises(ParseError):
        parse_permutation("1 1 2")
    with pytest.raises(ParseError):
        parse_permutation("1 x")


@pytest.mark.parametrize(
    "p,expected",
    [(P(8, 1, 5, 2, 4, 3, 6, 7), False), (identity(6), True), (EX, True), (P(3, 2, 1), False)],
)
def test_is_321_avoiding(p, expected):
    assert is_321_avoiding(p) is expected


@pytest.mark.parametrize("n", range(0, 8))
def test_is_321_avoiding_matches_triple_scan(n):
    for images in permutations(range(1, n + 1)):
        assert is_321_avoiding(Permutation(images)) is not has_321(images)


@pytest.mark.parametrize(
    "word,images",
    [(EX_PATH, (4, 1, 2, 7, 3, 5, 8, 6)), ("UUUUDDDD", (1, 2, 3, 4)), ("UDUDUD", (2, 3, 1)), ("", ())],
)
def test_bjs(word, images):
    assert bjs(parse_path(word)).images == images
    assert bjs_inverse(Permutation(images)).steps == word


def test_bjs_inverse_example_runs():
    dec = ascent_descent(bjs_inverse(EX))
    assert dec.a == (3, 3, 1, 1) and dec.d == (1, 3, 3, 1)


def test_bjs_inverse_rejects_321():
    with pytest.raises(Not321Avoiding):
        bjs_inverse(P(3, 2, 1))


def test_roundtrips_and_cardinality():
    for n in range(0, 11):
        images = set()
        for path in enumerate_dyck(n):
            p = bjs(path)
            assert is_321_avoiding(p)
            assert bjs_inverse(p) == path
            images.add(p.images)
            if n:
                exc, code = excedances(p), partial_code(path)
                assert exc.locations == code.D
                assert exc.values == tuple(x + 1 for x in code.A)
        assert len(images) == catalan_rec(n)


@pytest.mark.parametrize("n", range(0, 8))
def test_321_avoiders_are_exactly_bjs_images(n):
    avoiders = {q for q in permutations(range(1, n + 1)) if not has_321(q)}
    assert avoiders == {bjs(path).images for path in enumerate_dyck(n)}
    for q in avoiders:
        assert bjs(bjs_inverse(Permutation(q))).images == q


@pytest.mark.parametrize("p,fp", [(EX, 0), (identity(5), 5), (P(2, 1, 3), 1)])
def test_fixed_points(p, fp):
    assert fixed_points(p) == fp


@pytest.mark.parametrize("p,value", [(EX, 0), (identity(8), 8), (P(2, 3, 1), 0)])
def test_fixed_points_formula(p, value):
    assert fixed_points_formula(p) == value


@pytest.mark.parametrize(
    "p,conn", [(identity(4), [1, 2, 3, 4]), (EX, [1]), (P(2, 1, 3), [1, 3])]
)
def test_connectivity_set(p, conn):
    assert connectivity_set(p) == conn


@pytest.mark.parametrize("p,value", [(EX, 1), (P(2, 1), 1), (P(2, 3, 1), 1)])
def test_connectivity_formula(p, value):
    assert connectivity_formula(p) == value


def test_connectivity_formula_errors():
    with pytest.raises(IdentityNotCovered):
        connectivity_formula(identity(3))
    with pytest.raises(Not321Avoiding):
        connectivity_formula(P(3, 2, 1))
    with pytest.raises(Not321Avoiding):
        fixed_points_formula(P(3, 2, 1))


@pytest.mark.parametrize(
    "p,blocks,supp",
    [(identity(5), 5, 0), (EX, 1, 7), (P(2, 1, 4, 3), 2, 2), (P(2, 1, 3), 2, 1)],
)
def test_block_number_and_support(p, blocks, supp):
    assert block_number(p) == blocks
    assert support_size(p) == supp


@pytest.mark.parametrize("p,locs,vals", [(EX, (1, 4, 7), (4, 7, 8)), (identity(3), (), ()), (P(2, 3, 1), (1, 2), (2, 3))])
def test_excedances(p, locs, vals):
    exc = excedances(p)
    assert (exc.locations, exc.values) == (locs, vals)


def test_partial_sums_check():
    assert partial_sums_check(EX)
    assert partial_sums_check(P(2, 1))
    for n in range(1, 9):
        for path in enumerate_dyck(n):
            assert partial_sums_check(bjs(path))
    with pytest.raises(Not321Avoiding):
        partial_sums_check(P(3, 2, 1))


def test_closed_formulas_exhaustive():
    for n in range(0, 11):
        for path in enumerate_dyck(n):
            p = bjs(path)
            assert fixed_points_formula(p) == fixed_points(p)
            if not p.is_identity():
                assert connectivity_formula(p) == len(connectivity_set(p))
            exc = excedances(p)
            assert list(exc.values) == sorted(exc.values)
            assert (exc.r == 0) == p.is_identity()


@pytest.mark.parametrize("n", range(0, 8))
def test_connectivity_is_block_number_on_all_of_sn(n):
    for images in permutations(range(1, n + 1)):
        p = Permutation(images)
        assert len(connectivity_set(p)) == block_number(p)


@pytest.mark.parametrize("n", range(0, 6))
def test_support_size_matches_reduced_words(n):
    for images in permutations(range(1, n + 1)):
        supports = reduced_word_supports(images)
        assert len({len(s) for s in supports}) == 1
        assert len(next(iter(supports))) == support_size(Permutation(images))


def test_json():
    assert EX.to_json() == {
        "n": 8,
        "images": [4, 1, 2, 7, 3, 5, 8, 6],
        "excedance_locations": [1, 4, 7],
        "excedance_values": [4, 7, 8],
        "fixed_points": 0,
        "support_size": 7,
        "connectivity": [1],
    }


@given(dyck_paths(max_n=60))
def test_bjs_roundtrip_large(path):
    p = bjs(path)
    assert is_321_avoiding(p)
    assert bjs_inverse(p) == path
    assert support_size(p) == p.n - block_number(p)

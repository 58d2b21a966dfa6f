import math
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from oracles import brute_partitions, brute_schur_terms, brute_syt_count
from tenscat.errors import DomainError, ResourceBoundError
from tenscat.young import (
    EMPTY,
    MonomialPoly,
    YoungDiagram,
    conjugate,
    contains,
    diagram_key,
    partitions_of,
    schur_in_vars,
    schur_product_expand,
    size,
    syt_count,
)

D = YoungDiagram


@st.composite
def diagrams(draw, max_n=12):
    n = draw(st.integers(min_value=0, max_value=max_n))
    bins = draw(st.lists(st.integers(min_value=0, max_value=max(n - 1, 0)), min_size=n, max_size=n))
    return D(sorted(Counter(bins).values(), reverse=True))


def test_construction_validates():
    assert D([3, 1, 0, 0]) == D([3, 1])
    with pytest.raises(DomainError):
        D([1, 2])
    with pytest.raises(DomainError):
        D([2, -1])
    with pytest.raises(DomainError):
        D([2, 0, 1])
    assert str(D([3, 1, 1])) == "[3,1,1]"
    assert str(EMPTY) == "[]"


@pytest.mark.parametrize("d, n", [((), 0), ((3, 1), 4), ((2, 2, 1), 5)])
def test_size(d, n):
    assert size(D(d)) == n


@pytest.mark.parametrize("d, c", [((3,), (1, 1, 1)), ((2, 1), (2, 1)), ((), ()), ((4, 2, 1), (3, 2, 1, 1))])
def test_conjugate(d, c):
    assert conjugate(D(d)) == D(c)


def test_conjugate_involution_exhaustive():
    for n in range(11):
        for d in partitions_of(n):
            assert conjugate(conjugate(d)) == d
            assert size(conjugate(d)) == n


def test_contains():
    assert contains(D([3, 1]), D([2]))
    assert not contains(D([2]), D([1, 1]))
    for d in partitions_of(4):
        assert contains(d, EMPTY)


def test_partitions_small():
    assert partitions_of(0) == [EMPTY]
    assert partitions_of(3) == [D([3]), D([2, 1]), D([1, 1, 1])]
    assert len(partitions_of(5)) == 7


@pytest.mark.parametrize("n", range(9))
def test_partitions_match_brute_force(n):
    got = partitions_of(n)
    assert sorted(map(tuple, got)) == sorted(brute_partitions(n))
    assert len(set(got)) == len(got)
    assert got == sorted(got, key=diagram_key)
    assert got == sorted(got, reverse=True)  # decreasing lexicographic


def test_partitions_bound():
    assert len(partitions_of(30)) == 5604
    with pytest.raises(ResourceBoundError):
        partitions_of(31)
    assert len(partitions_of(31, max_size=31)) == 6842


@pytest.mark.parametrize("d, count", [((5,), 1), ((2, 1), 2), ((2, 2), 2), ((3, 2), 5), ((3, 2, 1), 16)])
def test_syt_examples(d, count):
    assert syt_count(D(d)) == count


def test_syt_matches_enumeration():
    for n in range(8):
        for d in partitions_of(n):
            assert syt_count(d) == brute_syt_count(d)


@pytest.mark.parametrize("n", range(9))
def test_sum_of_squares_is_factorial(n):
    assert sum(syt_count(d) ** 2 for d in partitions_of(n)) == math.factorial(n)


def test_syt_large_exact():
    # staircase values are OEIS A005118
    d = D([6, 5, 4, 3, 2, 1])
    assert syt_count(d) == 1100742656
    assert syt_count(D([25])) == 1
    with pytest.raises(ResourceBoundError):
        syt_count(D([26]))


def test_schur_examples():
    assert schur_in_vars(D([1]), 2) == MonomialPoly(2, {(1, 0): 1, (0, 1): 1})
    assert schur_in_vars(D([2]), 2) == MonomialPoly(2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    assert schur_in_vars(D([1, 1]), 2) == MonomialPoly(2, {(1, 1): 1})
    with pytest.raises(DomainError):
        schur_in_vars(D([1, 1, 1]), 2)
    with pytest.raises(ResourceBoundError):
        schur_in_vars(D([9]), 9)


def test_schur_matches_brute_force():
    for n in range(5):
        for d in partitions_of(n):
            for k in range(max(len(d), 1), 4):
                assert schur_in_vars(d, k).terms == brute_schur_terms(d, k)


def test_schur_symmetric_under_adjacent_swaps():
    for n in range(6):
        for d in partitions_of(n):
            if len(d) > 4:
                continue
            s = schur_in_vars(d, 4)
            assert all(c >= 1 for c in s.terms.values())
            for v in range(3):
                assert s.swap_variables(v, v + 1) == s


def test_schur_product_examples():
    assert schur_product_expand(D([1]), D([1]), 2) == {D([2]): 1, D([1, 1]): 1}
    assert schur_product_expand(D([1]), D([1, 1]), 3) == {D([2, 1]): 1, D([1, 1, 1]): 1}
    for lam in partitions_of(3):
        assert schur_product_expand(lam, EMPTY, 3) == {lam: 1}
    with pytest.raises(DomainError):
        schur_product_expand(D([1]), D([1]), 1)


def test_schur_product_reconstructs_polynomial():
    a, b = D([2, 1]), D([1, 1])
    k = 5
    exp = schur_product_expand(a, b, k)
    total = MonomialPoly(k)
    for lam, c in exp.items():
        total = total + schur_in_vars(lam, k).scale(c)
    assert total == schur_in_vars(a, k) * schur_in_vars(b, k)


def test_schur_product_dimension_count():
    # sum coeff * d_lam = C(n, |a|) d_a d_b
    shapes = [d for n in range(7) for d in partitions_of(n)]
    for a in shapes:
        for b in shapes:
            n = size(a) + size(b)
            if n > 6:
                continue
            exp = schur_product_expand(a, b, max(n, 1))
            assert all(c > 0 for c in exp.values())
            lhs = sum(c * syt_count(lam) for lam, c in exp.items())
            assert lhs == math.comb(n, size(a)) * syt_count(a) * syt_count(b)


@given(diagrams())
def test_conjugate_property(d):
    c = conjugate(d)
    assert conjugate(c) == d
    assert size(c) == size(d)
    assert len(c) == (d[0] if d else 0)


@given(diagrams(max_n=20))
def test_hook_formula_divides(d):
    assert syt_count(d) >= 1
    assert syt_count(d) == syt_count(conjugate(d))


def test_monomial_poly_rejects_bad_exponents():
    with pytest.raises(DomainError):
        MonomialPoly(2, {(1, 0, 0): 1})
    assert not MonomialPoly(2, {(1, 0): 0})

from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import elimination_dimension, polynomials, sympy_reduced_basis
from tensordim.fixtures import groebner_fixtures, poly_vars, presented_fixtures, variable_ideal
from tensordim.groebner import (AlgebraPresentation, EmptySpectrum, NotPrime, buchberger,
                                ideal_dimension, is_groebner_basis, is_reduced, normal_form,
                                prime_height, relative_height, tensor_presentation)
from tensordim.poly import GREVLEX, LEX, MonomialOrder, Polynomial

LEX_ = MonomialOrder(LEX)
GREVLEX_ = MonomialOrder(GREVLEX)
x, y = poly_vars("xy")


def test_normal_form_examples():
    assert normal_form(Polynomial.zero(2), [x ** 2 - y]).is_zero()
    assert normal_form(x ** 2, [x ** 2 - y], LEX_) == y
    G = [x ** 2 - y, x * y - 1]
    for g in G:
        assert normal_form(g, G, LEX_).is_zero()


def test_normal_form_remainder_not_divisible():
    G = buchberger([x ** 2 - y, x * y - 1], LEX_)
    r = normal_form(x ** 5 + 3 * x * y ** 2 + 7, G, LEX_)
    leads = [g.leading_monomial(LEX_) for g in G]
    assert all(not all(a <= b for a, b in zip(l, m)) for m in r.monomials() for l in leads)


def test_buchberger_examples():
    assert buchberger([x, y]) == [x, y]
    assert buchberger([x - y, y ** 2], LEX_) == [x - y, y ** 2]
    assert buchberger([]) == []
    assert buchberger([x - 1, x]) == [Polynomial.constant(2, 1)]


@pytest.mark.parametrize("name", sorted(groebner_fixtures()))
@pytest.mark.parametrize("kind", [LEX, GREVLEX])
def test_buchberger_matches_sympy(name, kind):
    a = groebner_fixtures()[name]
    order = MonomialOrder(kind)
    mine = buchberger(a.generators, order)
    ref = sympy_reduced_basis(a.generators, a.nvars, kind)
    assert sorted(mine, key=repr) == sorted(ref, key=repr)
    assert is_groebner_basis(mine, order) and is_reduced(mine, order)


@settings(max_examples=40, deadline=None)
@given(st.lists(polynomials(3, max_terms=3, max_exp=2), min_size=1, max_size=3),
       st.sampled_from([LEX, GREVLEX]))
def test_random_bases_match_sympy(gens, kind):
    order = MonomialOrder(kind)
    mine = buchberger(gens, order)
    assert sorted(mine, key=repr) == sorted(sympy_reduced_basis(gens, 3, kind), key=repr)


@settings(max_examples=40, deadline=None)
@given(st.lists(polynomials(3, max_terms=2, max_exp=2), min_size=2, max_size=2),
       polynomials(3, max_terms=3, max_exp=2), st.sampled_from([LEX, GREVLEX]))
def test_membership_is_decided(gens, cofactor, kind):
    order = MonomialOrder(kind)
    G = buchberger(gens, order)
    h = gens[0] * cofactor + gens[1] * (cofactor + 1)
    assert normal_form(h, G, order).is_zero()


def test_non_member_has_nonzero_normal_form():
    G = buchberger([x ** 2 - y], LEX_)
    assert not normal_form(x, G, LEX_).is_zero()


def test_dimension_examples():
    assert ideal_dimension(AlgebraPresentation(("a", "b", "c"))) == 3
    assert ideal_dimension(variable_ideal("xy", "x")) == 1
    assert ideal_dimension(presented_fixtures()["QQ[x,y,z,w]/(xw-yz)"]) == 3


def test_unit_ideal_signals_empty_spectrum():
    with pytest.raises(EmptySpectrum):
        ideal_dimension(AlgebraPresentation(("x", "y"), (x - 1, x)))


@pytest.mark.parametrize("name", sorted(groebner_fixtures()))
def test_dimension_matches_elimination_oracle(name):
    a = groebner_fixtures()[name]
    try:
        mine = ideal_dimension(a)
    except EmptySpectrum:
        mine = None
    if mine is None:
        with pytest.raises(AssertionError):
            elimination_dimension(a.generators, a.nvars)
    else:
        assert mine == elimination_dimension(a.generators, a.nvars)
        assert ideal_dimension(a, LEX_) == mine


def test_height_examples():
    assert prime_height(AlgebraPresentation(("x", "y", "z"))) == 0
    assert prime_height(variable_ideal("xy", "xy")) == 2
    assert prime_height(presented_fixtures()["QQ[x,y]/(y^2-x^3)"]) == 1


def test_height_needs_prime_assertion():
    with pytest.raises(NotPrime):
        prime_height(AlgebraPresentation(("x", "y"), (x * y,)))
    with pytest.raises(EmptySpectrum):
        prime_height(AlgebraPresentation(("x",), (Polynomial.constant(1, 1),), prime=True))


def test_tensor_examples():
    t = tensor_presentation(AlgebraPresentation(("x",)), AlgebraPresentation(("y",)))
    assert t.variables == ("x", "y") and t.generators == ()
    t = tensor_presentation(variable_ideal("x", "x"), variable_ideal("y", "y"))
    assert buchberger(t.generators) == poly_vars("xy")
    cusp = presented_fixtures()["QQ[x,y]/(y^2-x^3)"]
    t = tensor_presentation(cusp, AlgebraPresentation(("u",)))
    assert t.variables == ("x", "y", "u")
    assert ideal_dimension(t) == 2


def test_tensor_renames_right_collisions():
    t = tensor_presentation(AlgebraPresentation(("x", "x_r")), AlgebraPresentation(("x", "y")))
    assert t.variables == ("x", "x_r", "x_r_r", "y")


@pytest.mark.parametrize("pair", list(combinations_with_replacement(sorted(presented_fixtures()), 2)))
def test_tensor_dimension_is_additive(pair):
    fx = presented_fixtures()
    a, b = fx[pair[0]], fx[pair[1]]
    assert ideal_dimension(tensor_presentation(a, b)) == ideal_dimension(a) + ideal_dimension(b)


@pytest.mark.parametrize("names,small,large", [
    ("xyz", "x", "xy"), ("xyz", "", "xyz"), ("xyzw", "xz", "xyzw"), ("xy", "y", "xy"),
])
def test_height_superadditivity_on_variable_primes(names, small, large):
    vs = poly_vars(names)
    I = [vs[names.index(c)] for c in small]
    J = [vs[names.index(c)] for c in large]
    ring = AlgebraPresentation(tuple(names))
    ht_I = prime_height(AlgebraPresentation(tuple(names), tuple(I), prime=True))
    ht_J = prime_height(AlgebraPresentation(tuple(names), tuple(J), prime=True))
    quotient = AlgebraPresentation(tuple(names), tuple(I), prime=True)
    ht_J_over_I = relative_height(quotient, J)
    assert ht_I + ht_J_over_I <= ht_J
    assert ht_I + ht_J_over_I == ht_J
    assert relative_height(ring, J) == ht_J

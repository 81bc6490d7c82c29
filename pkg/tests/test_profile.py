import pytest
from hypothesis import given
from hypothesis import strategies as st

from tensordim.fixtures import cusp, quadric, zero_ideal
from tensordim.groebner import AlgebraPresentation, EmptySpectrum, NotPrime
from tensordim.poly import Polynomial
from tensordim.profile import (HeightSequence, NotADomain, build_profile, example_2_8_profile,
                               fg_domain_profile, field_profile, is_af_domain, is_afn,
                               is_locally_jaffard, make_profile, profile_from_presentation,
                               pullback_field_profile, smallest_afn, validate_profile)

ZERO = HeightSequence()


def two_node(td_total, td_top, seq, domain=True):
    return make_profile(["0", "M"], td_total, [td_total, td_top],
                        {(0, 0): ZERO, (1, 1): ZERO, (0, 1): seq}, domain=domain)


def test_height_sequence_evaluation():
    h = HeightSequence.capped_linear(1, 4)
    assert [h(n) for n in range(7)] == [1, 2, 3, 4, 4, 4, 4]
    assert HeightSequence((2, 2), 2) == HeightSequence.constant(2)
    assert HeightSequence.constant(3).is_constant()


def test_height_sequence_rejects_decrease():
    with pytest.raises(ValueError):
        HeightSequence((2,), 1)
    with pytest.raises(ValueError):
        HeightSequence((-1,), 0)


def test_validate_examples():
    assert validate_profile(field_profile(3)).ok
    bad = two_node(1, 0, HeightSequence.constant(2))
    assert "nagata" in validate_profile(bad).rules()
    assert validate_profile(example_2_8_profile()).ok


def test_validate_reports_witnesses():
    bad = two_node(1, 0, HeightSequence.constant(2))
    (v,) = [v for v in validate_profile(bad).violations if v.rule == "nagata"]
    assert v.nodes == ("0", "M") and v.n == 0


def test_validate_superadditivity_and_strictness():
    one = HeightSequence.constant(1)
    s = make_profile(["0", "p", "m"], 3, [3, 2, 1],
                     {(0, 0): ZERO, (1, 1): ZERO, (2, 2): ZERO,
                      (0, 1): one, (1, 2): one, (0, 2): one})
    assert "superadditivity" in validate_profile(s).rules()
    flat = two_node(2, 1, ZERO)
    assert "strict" in validate_profile(flat).rules()


def test_validate_order_and_td_problems():
    s = make_profile(["0", "p", "m"], 2, [2, 1, 0],
                     {(0, 0): ZERO, (1, 1): ZERO, (2, 2): ZERO,
                      (0, 1): HeightSequence.constant(1), (1, 2): HeightSequence.constant(1)})
    assert "transitivity" in validate_profile(s).rules()
    rising = two_node(1, 2, HeightSequence.constant(1))
    assert {"td-monotone", "nagata"} <= validate_profile(rising).rules()


def test_superadditivity_checked_in_prefix():
    # 0 < p < m, fine at n = 0 but broken at n = 1
    s = make_profile(["0", "p", "m"], 4, [4, 3, 0],
                     {(0, 0): ZERO, (1, 1): ZERO, (2, 2): ZERO,
                      (0, 1): HeightSequence((1,), 2),
                      (1, 2): HeightSequence.constant(2),
                      (0, 2): HeightSequence((3,), 3)})
    (v,) = validate_profile(s).violations
    assert v.rule == "superadditivity" and v.n == 1


def test_af_examples():
    assert is_af_domain(fg_domain_profile(3))
    assert not is_af_domain(example_2_8_profile())
    assert is_af_domain(field_profile(4))


def test_afn_examples():
    E = example_2_8_profile()
    assert not any(is_afn(E, n) for n in range(11))
    assert is_afn(pullback_field_profile(3), 3)
    assert not is_afn(pullback_field_profile(1), 0)
    assert is_afn(fg_domain_profile(2), 0) == is_af_domain(fg_domain_profile(2))


def test_domain_predicates_refuse_non_domains():
    s = make_profile(["a", "b"], 1, [1, 0], {(0, 0): ZERO, (1, 1): ZERO}, domain=False)
    assert validate_profile(s).ok
    with pytest.raises(NotADomain):
        is_af_domain(s)
    assert is_locally_jaffard(s)


def test_locally_jaffard_examples():
    assert is_locally_jaffard(fg_domain_profile(2))
    assert is_locally_jaffard(example_2_8_profile())
    P = pullback_field_profile(1)
    assert not is_locally_jaffard(P)
    assert P.rel(0, 1)(1) == 2 > P.rel(0, 1)(0) == 1


def test_builders():
    k = build_profile("field", m=0)
    assert len(k.labels) == 1 and k.td_total == 0
    D = build_profile("fg_domain", d=1)
    assert is_af_domain(D) and D.dim == 1
    P = build_profile("pullback_field", r=1)
    assert validate_profile(P).ok and is_afn(P, 1) and not is_af_domain(P)
    E = build_profile("example_2_8")
    assert E.td_total == 2 and E.td_quotient == (2, 0) and E.rel(0, 1) == HeightSequence.constant(1)


@pytest.mark.parametrize("kind,params", [
    ("field", {"m": -1}), ("fg_domain", {"d": -2}), ("pullback_field", {"r": 0}),
    ("pullback_field", {}), ("example_2_8", {"r": 1}), ("torus", {}),
])
def test_builder_rejects_bad_params(kind, params):
    with pytest.raises(ValueError):
        build_profile(kind, **params)


def test_fg_domain_chain_structure():
    D = fg_domain_profile(3)
    assert D.td_quotient == (3, 2, 1, 0)
    assert D.rel(1, 3) == HeightSequence.constant(2)
    assert D.resolve("min") == 0 and D.resolve("max") == 3


def test_profile_from_presentation():
    assert profile_from_presentation(cusp()) == fg_domain_profile(1)
    assert profile_from_presentation(zero_ideal("xyz")) == fg_domain_profile(3)
    assert profile_from_presentation(quadric()) == fg_domain_profile(3)


def test_profile_from_presentation_errors():
    one = Polynomial.constant(1, 1)
    with pytest.raises(EmptySpectrum):
        profile_from_presentation(AlgebraPresentation(("x",), (one,), prime=True))
    x = Polynomial.variable(2, 0)
    with pytest.raises(NotPrime):
        profile_from_presentation(AlgebraPresentation(("x", "y"), (x * x,)))


builders = st.one_of(
    st.integers(0, 8).map(field_profile),
    st.integers(0, 8).map(fg_domain_profile),
    st.just(example_2_8_profile()),
    st.integers(1, 8).map(pullback_field_profile),
)


@given(builders)
def test_every_builder_output_validates(s):
    assert validate_profile(s).ok


@given(builders, st.integers(0, 12))
def test_afn_consistent_with_nagata(s, n):
    m = s.minimum
    for p in s.nodes:
        assert s.rel(m, p)(n) + s.td_quotient[p] <= s.td_total or not validate_profile(s).ok


@given(builders)
def test_strictly_larger_nodes_have_positive_height(s):
    for i in s.nodes:
        for j in s.nodes:
            if s.lt(i, j):
                assert all(s.rel(i, j)(n) >= 1 for n in range(s.horizon + 2))


@given(st.integers(0, 8), st.integers(0, 20))
def test_fg_domain_stays_af(d, n):
    assert is_afn(fg_domain_profile(d), n)


@pytest.mark.parametrize("r", range(1, 9))
def test_pullback_af_exactly_from_r(r):
    P = pullback_field_profile(r)
    assert [is_afn(P, n) for n in range(r + 6)] == [n >= r for n in range(r + 6)]
    assert smallest_afn(P) == r

"""Built-in acceptance suites 1-9, run by ``tensordim selftest`` and the tests."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from . import engine, groebner, profile
from .fixtures import (fixture_profiles, groebner_fixtures, poly_vars, presented_fixtures, quadric,
                       zero_ideal)
from .poly import GREVLEX, LEX, MonomialOrder, Polynomial
from .profile import (HeightSequence, example_2_8_profile, fg_domain_profile, field_profile,
                      make_profile, pullback_field_profile)

SEED = 20061016


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d} {self.name}: {self.detail}"


class _Tally:
    def __init__(self):
        self.checks = 0
        self.failures: list[str] = []

    def check(self, ok: bool, what: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(what)

    def result(self, number: int, name: str) -> CriterionResult:
        if self.failures:
            shown = "; ".join(self.failures[:3])
            more = f" (+{len(self.failures) - 3} more)" if len(self.failures) > 3 else ""
            return CriterionResult(number, name, False,
                                   f"{len(self.failures)}/{self.checks} failed: {shown}{more}")
        return CriterionResult(number, name, True, f"{self.checks} checks")


def sharp_formula() -> CriterionResult:
    t = _Tally()
    for m, n in product(range(7), repeat=2):
        t.check(engine.dim_tensor_fields(m, n) == min(m, n), f"fields({m},{n})")
        v = engine.dim_tensor_thm27(field_profile(m), field_profile(n)).value
        t.check(v == min(m, n), f"thm27(field({m}),field({n}))={v}")
    return t.result(1, "tensor of fields is min of t.d.")


def oracle_formula_equivalence() -> CriterionResult:
    t = _Tally()
    fx = presented_fixtures()
    profiles = {k: profile.profile_from_presentation(a) for k, a in fx.items()}
    for ka, kb in combinations_with_replacement(sorted(fx), 2):
        a, b = fx[ka], fx[kb]
        oracle = groebner.ideal_dimension(groebner.tensor_presentation(a, b))
        A, B = profiles[ka], profiles[kb]
        af_af = engine.dim_tensor_af_af(A.dim, A.td_total, B.dim, B.td_total)
        thm = engine.dim_tensor_thm27(A, B).value
        t.check(oracle == af_af == thm, f"{ka} (x) {kb}: oracle {oracle}, af_af {af_af}, thm {thm}")
    return t.result(2, "oracle vs formula")


def random_af_profiles(rng: random.Random, count: int = 50):
    out = []
    for _ in range(count):
        if rng.random() < 0.5:
            out.append(fg_domain_profile(rng.randint(0, 5)))
        else:
            out.append(field_profile(rng.randint(0, 5)))
    return out


def thm27_generalizes_wadsworth(seed: int = SEED) -> CriterionResult:
    t = _Tally()
    Bs = fixture_profiles()
    for A in random_af_profiles(random.Random(seed)):
        for name, B in Bs.items():
            x = engine.dim_tensor_thm27(A, B).value
            y = engine.dim_tensor_af_any(A, B).value
            t.check(x == y, f"{A.describe()} (x) {name}: {x} != {y}")
    return t.result(3, "general formula matches D-function on AF")


def example_2_8_checks() -> CriterionResult:
    t = _Tally()
    E = example_2_8_profile()
    t.check(not profile.is_af_domain(E), "is_af_domain")
    for n in range(1, 11):
        t.check(not profile.is_afn(E, n), f"is_afn({n})")
    t.check(profile.is_locally_jaffard(E), "locally Jaffard")
    t.check(profile.validate_profile(E).ok, "validate")
    Bs = [field_profile(m) for m in range(4)] + [fg_domain_profile(d) for d in range(4)]
    for B in Bs:
        for p, q in product(E.nodes, B.nodes):
            mixed = engine.ht_mixed_ideal(E, B, p, q).value
            for delta in range(min(E.td_quotient[p], B.td_quotient[q]) + 1):
                try:
                    g = engine.gsct_height(E, B, engine.TensorPrimeDescriptor(p, q, delta))
                except engine.PreconditionError as exc:
                    t.check(False, f"gsct refused on {B.describe()}: {exc}")
                    continue
                t.check(g.value == mixed + delta, f"{B.describe()} ({p},{q},{delta})")
    return t.result(4, "two-node GAF fixture")


def pullback_checks() -> CriterionResult:
    t = _Tally()
    for r in (1, 2, 3):
        P = pullback_field_profile(r)
        t.check(not profile.is_af_domain(P), f"r={r} is_af_domain")
        for n in range(r + 6):
            t.check(profile.is_afn(P, n) == (n >= r), f"r={r} is_afn({n})")
    P = pullback_field_profile(1)
    tr = engine.dim_tensor_thm27(P, P)
    want = (("q1", "0"), ("q", "M"), ("p1", "0"), ("p", "M"))
    t.check(tr.value == 3, f"dim = {tr.value}")
    t.check(tr.witness == want, f"witness {tr.witness_str()}")
    return t.result(5, "pullback fixture")


def _embed_ideal(a, gens, b):
    """Images in ``a (x) b`` of polynomials ``gens`` over ``a``'s variables."""
    total = a.nvars + b.nvars
    return [Polynomial(total, tuple((m + (0,) * b.nvars, c) for m, c in g.terms)) for g in gens]


def prop_2_2_triples():
    x, y = poly_vars("xy")
    X = poly_vars("xyz")[0]
    Q = poly_vars("xyzw")
    return [
        ("QQ[x,y] > (x,y) with QQ[u]", zero_ideal("xy"), [x, y], zero_ideal("u")),
        ("QQ[x,y,z] > (x) with QQ[u,v]", zero_ideal("xyz"), [X], zero_ideal("uv")),
        ("QQ[x,y,z,w]/(xw-yz) > (x,y) with QQ[u]", quadric(), [Q[0], Q[1]], zero_ideal("u")),
    ]


def prop_2_2_checks() -> CriterionResult:
    t = _Tally()
    for name, a, p_gens, b in prop_2_2_triples():
        ht_p = groebner.relative_height(a, p_gens)
        A = profile.profile_from_presentation(a)
        B = profile.profile_from_presentation(b)
        formula = engine.ht_min_over_extension(B, A, ht_p)
        ab = groebner.tensor_presentation(a, b)
        ab = groebner.AlgebraPresentation(ab.variables, ab.generators, prime=True)
        oracle = groebner.relative_height(ab, _embed_ideal(a, p_gens, b))
        t.check(formula == oracle, f"{name}: formula {formula}, oracle {oracle}")
    return t.result(6, "height of extended prime")


def superadditivity_violator():
    """Chain 0 < p < m with ht(p) = ht(m/p) = ht(m) = 1."""
    one = HeightSequence.constant(1)
    rel = {(0, 0): HeightSequence(), (1, 1): HeightSequence(), (2, 2): HeightSequence(),
           (0, 1): one, (1, 2): one, (0, 2): one}
    return make_profile(["0", "p", "m"], 3, [3, 2, 1], rel)


def random_builder_profile(rng: random.Random):
    kind = rng.choice(["field", "fg_domain", "example_2_8", "pullback_field"])
    if kind == "field":
        return profile.build_profile(kind, m=rng.randint(0, 8))
    if kind == "fg_domain":
        return profile.build_profile(kind, d=rng.randint(0, 8))
    if kind == "pullback_field":
        return profile.build_profile(kind, r=rng.randint(1, 8))
    return profile.build_profile(kind)


def validator_checks(seed: int = SEED, count: int = 200) -> CriterionResult:
    t = _Tally()
    rep = profile.validate_profile(superadditivity_violator())
    t.check("superadditivity" in rep.rules(), f"violator accepted: {rep}")
    rng = random.Random(seed)
    for _ in range(count):
        s = random_builder_profile(rng)
        rep = profile.validate_profile(s)
        t.check(rep.ok, f"{s.describe()}: {rep}")
    return t.result(7, "superadditivity validator")


def af_is_gaf_checks() -> CriterionResult:
    t = _Tally()
    As = [field_profile(m) for m in range(4)] + [fg_domain_profile(d) for d in range(4)]
    for A in As:
        for name, B in fixture_profiles().items():
            for q in B.nodes:
                for delta in range(min(A.td_total, B.td_quotient[q]) + 1):
                    g = engine.gsct_height(A, B, engine.TensorPrimeDescriptor("min", q, delta))
                    s = engine.sct_height(A, B, q, delta)
                    t.check(g.value == s, f"{A.describe()} (x) {name} q={q} d={delta}")
    return t.result(8, "AF implies GAF consistency")


def groebner_checks() -> CriterionResult:
    t = _Tally()
    orders = (MonomialOrder(GREVLEX), MonomialOrder(LEX))
    for name, a in groebner_fixtures().items():
        for order in orders:
            first = groebner.buchberger(a.generators, order)
            second = groebner.buchberger(a.generators, order)
            t.check(repr(first) == repr(second), f"{name} {order} not canonical")
            t.check(groebner.is_groebner_basis(first, order), f"{name} {order} S-pairs")
            t.check(groebner.is_reduced(first, order), f"{name} {order} not reduced")
        try:
            dims = {groebner.ideal_dimension(a, o) for o in orders}
        except groebner.EmptySpectrum:
            dims = {"empty"}
        t.check(len(dims) == 1, f"{name} dimension depends on order: {dims}")
    return t.result(9, "Groebner engine soundness")


SUITES = [sharp_formula, oracle_formula_equivalence, thm27_generalizes_wadsworth,
          example_2_8_checks, pullback_checks, prop_2_2_checks, validator_checks,
          af_is_gaf_checks, groebner_checks]


def run_all() -> list[CriterionResult]:
    return [suite() for suite in SUITES]

"""Shared fixture algebras and profiles.

Only ideals whose primality is classical are shipped: variable subsets,
the cusp ``y^2 - x^3`` and the determinantal quadric ``xw - yz``.
"""

from __future__ import annotations

from .groebner import AlgebraPresentation
from .poly import Polynomial
from .profile import (SpectralProfile, example_2_8_profile, fg_domain_profile, field_profile,
                      pullback_field_profile)


def poly_vars(names: str):
    n = len(names)
    return [Polynomial.variable(n, i) for i in range(n)]


def zero_ideal(names: str) -> AlgebraPresentation:
    return AlgebraPresentation(tuple(names))


def cusp() -> AlgebraPresentation:
    x, y = poly_vars("xy")
    return AlgebraPresentation(("x", "y"), (y ** 2 - x ** 3,), prime=True)


def quadric() -> AlgebraPresentation:
    x, y, z, w = poly_vars("xyzw")
    return AlgebraPresentation(("x", "y", "z", "w"), (x * w - y * z,), prime=True)


def variable_ideal(names: str, killed: str) -> AlgebraPresentation:
    vs = poly_vars(names)
    gens = tuple(vs[names.index(c)] for c in killed)
    return AlgebraPresentation(tuple(names), gens, prime=True)


def presented_fixtures() -> dict[str, AlgebraPresentation]:
    return {
        "QQ[x]": zero_ideal("x"),
        "QQ[x,y]": zero_ideal("xy"),
        "QQ[x,y,z]": zero_ideal("xyz"),
        "QQ[x,y]/(y^2-x^3)": cusp(),
        "QQ[x,y,z,w]/(xw-yz)": quadric(),
        "QQ[x,y]/(x)": variable_ideal("xy", "x"),
        "QQ[x,y]/(x,y)": variable_ideal("xy", "xy"),
    }


def groebner_fixtures() -> dict[str, AlgebraPresentation]:
    """Presented fixtures plus a few ideals with nontrivial Buchberger runs."""
    out = dict(presented_fixtures())
    x, y, z = poly_vars("xyz")
    out["twisted cubic"] = AlgebraPresentation(
        ("x", "y", "z"), (y - x ** 2, z - x ** 3), prime=True)
    a, b = poly_vars("xy")
    out["QQ[x,y]/(x-y, y^2)"] = AlgebraPresentation(("x", "y"), (a - b, b ** 2))
    out["cyclic-3 style"] = AlgebraPresentation(
        ("x", "y", "z"), (x + y + z, x * y + y * z + z * x, x * y * z - 1))
    out["two quadrics"] = AlgebraPresentation(
        ("x", "y", "z"), (x ** 2 - y * z, y ** 2 - x * z))
    return out


def fixture_profiles() -> dict[str, SpectralProfile]:
    """The B-side fixture set used against formula checks."""
    out: dict[str, SpectralProfile] = {}
    for m in range(4):
        out[f"field({m})"] = field_profile(m)
    for d in range(4):
        out[f"fg_domain({d})"] = fg_domain_profile(d)
    out["example_2_8"] = example_2_8_profile()
    for r in (1, 2, 3):
        out[f"pullback_field({r})"] = pullback_field_profile(r)
    return out

"""Cocycle family, derived 2-cochains, projective characters."""

import itertools

import pytest

from stw.cocycle import (
    CocycleParams,
    cocycle_identity_holds,
    gamma,
    omega,
    projective_character,
    theta,
    theta_ratio_check,
)
from stw.cyclotomic import CycloNumber, root_of_unity
from stw.group import GroupElement, GroupSpec, multiply

SPEC = GroupSpec(11, 5, 4)
E = GroupElement(0, 0)


def b(m, l=0):
    return GroupElement(l % 11, m % 5)


def omega_fraction_oracle(u, gm, hm, km):
    """Direct transcription: exp(2 pi i u [k]([g]+[h]-[g+h]) / p^2)."""
    gm, hm, km = gm % 5, hm % 5, km % 5
    numerator = u * km * (gm + hm - (gm + hm) % 5)
    return root_of_unity(numerator, 25)


def test_omega_matches_direct_formula_exhaustively():
    for u in range(5):
        params = CocycleParams(SPEC, u)
        for gm, hm, km in itertools.product(range(5), repeat=3):
            got = omega(params, b(gm, 2), b(hm, 7), b(km, 1))
            assert got == omega_fraction_oracle(u, gm, hm, km)


def test_omega_pinned_values():
    params = CocycleParams(SPEC, 1)
    assert omega(params, b(2), b(4), b(1)) == root_of_unity(1, 5)
    assert omega(params, b(1), b(1), b(1)) == 1
    assert omega(params, b(3), b(2), b(2)) == root_of_unity(2, 5)
    params4 = CocycleParams(SPEC, 4)
    assert omega(params4, b(3), b(2), b(2)) == root_of_unity(8, 5)
    assert omega(CocycleParams(SPEC, 0), b(3), b(2), b(2)) == 1


def test_omega_is_normalized():
    params = CocycleParams(SPEC, 3)
    for m1, m2 in itertools.product(range(5), repeat=2):
        assert omega(params, E, b(m1), b(m2)) == 1
        assert omega(params, b(m1), E, b(m2)) == 1
        assert omega(params, b(m1), b(m2), E) == 1


def test_omega_ignores_a_parts():
    params = CocycleParams(SPEC, 2)
    for gm, hm, km in itertools.product(range(5), repeat=3):
        base = omega(params, b(gm), b(hm), b(km))
        assert omega(params, b(gm, 3), b(hm, 10), b(km, 6)) == base


def test_cocycle_identity_exhaustive_over_zp_parts():
    for u in range(5):
        params = CocycleParams(SPEC, u)
        for gm, hm, km, lm in itertools.product(range(5), repeat=4):
            assert cocycle_identity_holds(params, b(gm, 1), b(hm, 4), b(km), b(lm, 9))


def test_theta_pinned_values_and_triviality():
    params = CocycleParams(SPEC, 1)
    # theta_b(b^3, b^4): carry(3,4) = 1, so zeta_5^(u * 1 * 1)
    assert theta(params, b(1), b(3), b(4)) == root_of_unity(1, 5)
    assert theta(params, b(2), b(3), b(4)) == root_of_unity(2, 5)
    assert theta(params, b(1), b(1), b(2)) == 1  # no carry
    assert theta(params, E, b(3), b(4)) == 1  # theta_e is trivial
    params0 = CocycleParams(SPEC, 0)
    for gm, xm, ym in itertools.product(range(5), repeat=3):
        assert theta(params0, b(gm), b(xm), b(ym)) == 1


def test_theta_matches_defining_ratio_with_real_conjugations():
    for u in (0, 1, 2, 3, 4):
        params = CocycleParams(SPEC, u)
        for g, x, y in itertools.product(
            [b(0), b(1, 3), b(2), b(4, 8)], [b(0, 5), b(2, 1), b(3)], [b(1), b(4, 2)]
        ):
            assert theta_ratio_check(params, g, x, y)


def test_gamma_pinned_values():
    params = CocycleParams(SPEC, 1)
    # gamma_h(x, y) = zeta_5^(u [h] carry([x],[y])) for this family
    assert gamma(params, b(2), b(3), b(4)) == root_of_unity(2, 5)
    assert gamma(params, b(2), b(1), b(2)) == 1
    for xm, ym in itertools.product(range(5), repeat=2):
        assert gamma(params, E, b(xm), b(ym)) == 1


def test_theta_multiplicativity_in_the_flux():
    # For this pullback family theta_g theta_h = theta_(gh) pointwise
    # (exponent is linear in [g]); the engine relies on this when fusing
    # fluxes across strands.
    params = CocycleParams(SPEC, 3)
    for gm, hm, xm, ym in itertools.product(range(5), repeat=4):
        lhs = theta(params, b(gm), b(xm), b(ym)) * theta(params, b(hm), b(xm), b(ym))
        assert lhs == theta(params, b(gm + hm), b(xm), b(ym))


def test_projective_character_pinned_values():
    params1 = CocycleParams(SPEC, 1)
    params0 = CocycleParams(SPEC, 0)
    # b-type flux b^1, s = 0, u = 1 at x = b: zeta_25^(0*5 + 1*1)
    assert projective_character(params1, b(1), 0, b(1)) == root_of_unity(1, 25)
    # b-type flux b^2, s = 1, u = 0 at x = b^2: zeta_25^(5*2) = zeta_5^2
    assert projective_character(params0, b(2), 1, b(2)) == root_of_unity(2, 5)
    # a-type flux, centralizer Z_11: a^2 at s = 3 -> zeta_11^6
    assert projective_character(params1, GroupElement(1, 0), 3, GroupElement(2, 0)) == root_of_unity(6, 11)
    # identity flux: ordinary character of irrep 1 at b
    assert projective_character(params1, E, 1, b(1)) == root_of_unity(1, 5)


def test_projective_character_rejects_noncentralizing_arguments():
    params = CocycleParams(SPEC, 1)
    with pytest.raises(ValueError):
        projective_character(params, b(1), 0, GroupElement(1, 1))
    with pytest.raises(ValueError):
        projective_character(params, GroupElement(1, 0), 0, GroupElement(0, 1))


def test_projectivity_relation_exhaustive_on_cyclic_centralizers():
    """pi(x) pi(y) == theta_t(x, y) pi(xy) over the full centralizer,
    every flux type, every character index, u in {0, 1, 4}."""
    for u in (0, 1, 4):
        params = CocycleParams(SPEC, u)
        # b-type fluxes: centralizer generated by b
        for k in range(1, 5):
            t = b(k)
            for s in range(5):
                for i, j in itertools.product(range(5), repeat=2):
                    x, y = b(i), b(j)
                    lhs = projective_character(params, t, s, x) * projective_character(
                        params, t, s, y
                    )
                    xy = multiply(SPEC, x, y)
                    rhs = theta(params, t, x, y) * projective_character(params, t, s, xy)
                    assert lhs == rhs
        # a-type fluxes: centralizer Z_11, theta restricted there is trivial
        t = GroupElement(1, 0)
        for s in (0, 1, 7):
            for i, j in ((1, 1), (5, 9), (10, 3)):
                x, y = GroupElement(i, 0), GroupElement(j, 0)
                lhs = projective_character(params, t, s, x) * projective_character(
                    params, t, s, y
                )
                xy = multiply(SPEC, x, y)
                assert lhs == projective_character(params, t, s, xy)


def test_u_reduces_mod_p():
    assert CocycleParams(SPEC, 7).u == 2
    assert CocycleParams(SPEC, -1).u == 4
    a = omega(CocycleParams(SPEC, 7), b(3), b(2), b(2))
    assert a == omega(CocycleParams(SPEC, 2), b(3), b(2), b(2))

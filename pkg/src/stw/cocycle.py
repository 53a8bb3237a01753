"""The 3-cocycles on Z_q x| Z_p pulled back from H^3(Z_p, U(1)) = Z_p,
and the derived 2-cochains that twist the anyon algebra.

With [g] denoting the Z_p part of g (the exponent of b), the family is

    omega_u(g, h, k) = zeta_p ^ (u * [k] * carry([g], [h])),

where carry(i, j) = 1 if i + j >= p for reduced representatives
0 <= i, j < p.  This is exactly exp(2 pi i u [k]([g]+[h]-[g+h]) / p^2).
All values are p-th roots of unity and depend only on Z_p parts; since
conjugation preserves Z_p parts, the derived quantities theta and gamma
inherit that property, which the exponent helpers exploit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from stw.cyclotomic import CycloNumber, root_of_unity
from stw.group import GroupElement, GroupSpec, inverse, irreps_of_G, multiply

__all__ = [
    "CocycleParams",
    "omega",
    "theta",
    "gamma",
    "projective_character",
    "omega_exponent",
    "theta_exponent",
    "gamma_exponent",
    "theta_exponent_table",
]


@dataclass(frozen=True)
class CocycleParams:
    """A group together with a twisting class u in Z_p."""

    spec: GroupSpec
    u: int = 0

    def __post_init__(self):
        object.__setattr__(self, "u", self.u % self.spec.p)


def _carry(i: int, j: int, p: int) -> int:
    return 1 if (i % p) + (j % p) >= p else 0


def omega_exponent(params: CocycleParams, gm: int, hm: int, km: int) -> int:
    """Exponent of zeta_p in omega_u evaluated on Z_p parts (gm, hm, km)."""
    p = params.spec.p
    return (params.u * (km % p) * _carry(gm, hm, p)) % p


def theta_exponent(params: CocycleParams, gm: int, xm: int, ym: int) -> int:
    """Exponent of zeta_p in theta_g(x, y), via the defining ratio

        theta_g(x, y) = omega(g, x, y) omega(x, y, (xy)^-1 g xy)
                        / omega(x, x^-1 g x, y).

    Conjugation preserves Z_p parts, so only (gm, xm, ym) matter.
    """
    return (
        omega_exponent(params, gm, xm, ym)
        + omega_exponent(params, xm, ym, gm)
        - omega_exponent(params, xm, gm, ym)
    ) % params.spec.p


def gamma_exponent(params: CocycleParams, hm: int, xm: int, ym: int) -> int:
    """Exponent of zeta_p in gamma_h(x, y), via the defining ratio

        gamma_h(x, y) = omega(x, y, h) omega(h, h^-1 x h, h^-1 y h)
                        / omega(x, h, h^-1 y h).
    """
    return (
        omega_exponent(params, xm, ym, hm)
        + omega_exponent(params, hm, xm, ym)
        - omega_exponent(params, xm, hm, ym)
    ) % params.spec.p


def omega(params: CocycleParams, g: GroupElement, h: GroupElement, k: GroupElement) -> CycloNumber:
    return root_of_unity(omega_exponent(params, g.m, h.m, k.m), params.spec.p)


def theta(params: CocycleParams, g: GroupElement, x: GroupElement, y: GroupElement) -> CycloNumber:
    return root_of_unity(theta_exponent(params, g.m, x.m, y.m), params.spec.p)


def gamma(params: CocycleParams, h: GroupElement, x: GroupElement, y: GroupElement) -> CycloNumber:
    return root_of_unity(gamma_exponent(params, h.m, x.m, y.m), params.spec.p)


def theta_exponent_table(params: CocycleParams) -> np.ndarray:
    """theta exponents (zeta_p units) indexed by (gm, xm, ym)."""
    p = params.spec.p
    table = np.zeros((p, p, p), dtype=np.int64)
    for gm in range(p):
        for xm in range(p):
            for ym in range(p):
                table[gm, xm, ym] = theta_exponent(params, gm, xm, ym)
    return table


def projective_character(
    params: CocycleParams, t: GroupElement, s: int, x: GroupElement
) -> CycloNumber:
    """Value at x of the s-th theta_t-projective character of the
    centralizer of t.  These satisfy

        pi(x) pi(y) = theta_t(x, y) pi(x y)    for x, y in C_G(t).

    Cases: t identity -> ordinary character of the s-th irreducible of
    the whole group; t of a-type (centralizer Z_q) -> x = a^l maps to
    zeta_q^(s l); t of b-type b^k (centralizer Z_p) -> x = b^l maps to
    zeta_(p^2)^((s p + u k) l).
    """
    spec = params.spec
    if t == GroupElement(0, 0):
        reps = irreps_of_G(spec)
        if not 0 <= s < len(reps):
            raise ValueError(f"irrep index {s} out of range")
        return reps[s].character(x)
    if t.m == 0:
        if x.m != 0:
            raise ValueError(f"{x} is not in the centralizer of {t}")
        return root_of_unity(s * x.l, spec.q)
    if x.l != 0:
        raise ValueError(f"{x} is not in the centralizer of {t}")
    return root_of_unity((s * spec.p + params.u * t.m) * x.m, spec.p**2)


def cocycle_identity_holds(
    params: CocycleParams,
    g: GroupElement,
    h: GroupElement,
    k: GroupElement,
    l: GroupElement,
) -> bool:
    """The pentagon/3-cocycle condition at one tuple:
    omega(g,h,k) omega(g,hk,l) omega(h,k,l) == omega(gh,k,l) omega(g,h,kl).
    """
    spec = params.spec
    lhs = (
        omega(params, g, h, k)
        * omega(params, g, multiply(spec, h, k), l)
        * omega(params, h, k, l)
    )
    rhs = omega(params, multiply(spec, g, h), k, l) * omega(params, g, h, multiply(spec, k, l))
    return lhs == rhs


def theta_ratio_check(
    params: CocycleParams, g: GroupElement, x: GroupElement, y: GroupElement
) -> bool:
    """Verify theta against its defining omega-ratio with explicit
    conjugations (no Z_p-part shortcut)."""
    spec = params.spec
    xy = multiply(spec, x, y)
    g_xy = multiply(spec, multiply(spec, inverse(spec, xy), g), xy)
    g_x = multiply(spec, multiply(spec, inverse(spec, x), g), x)
    lhs = omega(params, g, x, y) * omega(params, x, y, g_xy)
    rhs = omega(params, x, g_x, y) * theta(params, g, x, y)
    return lhs == rhs

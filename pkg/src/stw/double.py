"""Simple objects of the twisted double of Z_q x| Z_p and their
half-braiding data, realized concretely: every simple is an induced
module with a monomial action, so braid generators act by a permutation
of basis vectors times a root of unity.

A simple object is (conjugacy class of the flux t, projective character
of the centralizer of t twisted by theta_t).  Basis vectors of the
underlying space are pairs (coset index i, internal index a): the flux
of (i, a) is members[i] = r_i t r_i^-1, and group elements act by

    y . |r_i, v>  =  theta_{t'}(y, r_i) / theta_{t'}(r_j, s) |r_j, pi(s) v>

where y r_i = r_j s with s in the centralizer and t' = r_j t r_j^-1.
All phases live in the cyclic group of order p^2 * q, so the engine
tracks integer exponents and only materializes exact cyclotomic numbers
at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from stw.cocycle import CocycleParams, omega_exponent, theta_exponent_table
from stw.cyclotomic import CycloNumber, root_of_unity
from stw.group import (
    ConjClassInfo,
    GroupData,
    GroupElement,
    GroupSpec,
    conjugacy_data,
    irreps_of_G,
)

__all__ = [
    "SimpleObject",
    "AnyonTables",
    "DoubleContext",
    "context_for",
    "enumerate_simples",
    "qdim",
    "twist",
    "dpr_action",
    "sigma_action",
    "sigma_inverse_action",
    "associator_scalar",
]


@dataclass(frozen=True)
class SimpleObject:
    """One simple object: flux class + centralizer character index."""

    label: str
    class_index: int
    char_index: int
    dim: int  # quantum dimension (a positive integer here)
    internal_dim: int  # dimension of the centralizer character's space

    def __str__(self) -> str:
        return self.label


@dataclass
class AnyonTables:
    """Integer engine tables for one simple object.

    Basis vectors are encoded as coset * internal_dim + internal.
    pi_perm/pi_exp give the monomial action of centralizer element
    s (by centralizer index) on the internal space; exponents are in
    units of zeta_(p^2 q).
    """

    simple: SimpleObject
    class_info: ConjClassInfo
    n_cosets: int
    internal_dim: int
    dim: int
    class_bpart: int
    flux: np.ndarray  # (n_cosets,) group index of members
    coset_rep: np.ndarray  # (n_cosets,) group index
    coset_of: np.ndarray  # (|G|,) -> coset index
    srep: np.ndarray  # (|G|,) -> centralizer index with g = r_j s
    cent_bpart: np.ndarray  # (n_cent,)
    pi_perm: np.ndarray  # (n_cent, internal_dim)
    pi_exp: np.ndarray  # (n_cent, internal_dim), mod p^2 q
    twist_exp: int  # mod p^2 q

    def basis_coset(self, basis: int) -> int:
        return basis // self.internal_dim

    def basis_flux(self, basis: int) -> int:
        return int(self.flux[basis // self.internal_dim])


class DoubleContext:
    """All engine data for one (group, twisting) pair."""

    def __init__(self, params: CocycleParams):
        self.params = params
        spec = params.spec
        self.spec = spec
        self.root_order = spec.p**2 * spec.q  # every engine phase lives here
        self.gdata = GroupData(spec)
        self.classes = conjugacy_data(spec)
        self.theta_zp = theta_exponent_table(params)  # (p,p,p), zeta_p units
        self._zp_unit = self.root_order // spec.p
        self.theta_ne_tab = self.theta_zp * self._zp_unit  # engine units
        self._zq_unit = self.root_order // spec.q
        self._zp2_unit = self.root_order // spec.p**2
        self.simples: list[SimpleObject] = []
        self.tables: list[AnyonTables] = []
        self._build()
        self.label_index = {s.label: i for i, s in enumerate(self.simples)}

    # ----- construction --------------------------------------------------

    def _class_tables(self, cls: ConjClassInfo):
        gd = self.gdata
        order = self.spec.order
        n_cosets = len(cls.members)
        flux = np.array([gd.index(m) for m in cls.members], dtype=np.int64)
        reps = np.array([gd.index(r) for r in cls.coset_reps], dtype=np.int64)
        cent_idx = np.array([gd.index(c) for c in cls.centralizer], dtype=np.int64)
        coset_of = np.full(order, -1, dtype=np.int64)
        srep = np.full(order, -1, dtype=np.int64)
        for j in range(n_cosets):
            products = gd.mult_table[reps[j], cent_idx]
            coset_of[products] = j
            srep[products] = np.arange(len(cent_idx))
        if np.any(coset_of < 0):
            raise AssertionError("cosets do not cover the group")
        cent_bpart = gd.b_part[cent_idx]
        return flux, reps, coset_of, srep, cent_idx, cent_bpart

    def _build(self):
        spec = self.spec
        p, q, u = spec.p, spec.q, self.params.u
        irreps = irreps_of_G(spec)
        for ci, cls in enumerate(self.classes):
            flux, reps, coset_of, srep, cent_idx, cent_bpart = self._class_tables(cls)
            shared = dict(
                class_info=cls, class_bpart=cls.representative.m, flux=flux,
                coset_rep=reps, coset_of=coset_of, srep=srep, cent_bpart=cent_bpart,
            )
            rep_el = cls.representative
            if rep_el == GroupElement(0, 0):
                # identity flux: one coset, characters = irreps of G
                for s, irrep in enumerate(irreps):
                    unit = self.root_order // irrep.root_order
                    self._add(
                        f"I_{s}", ci, s, internal_dim=irrep.dim,
                        pi_perm=irrep.perm[cent_idx],
                        pi_exp=(irrep.exponents[cent_idx] * unit) % self.root_order,
                        twist_exp=0, **shared,
                    )
            elif rep_el.m == 0:
                # a-type flux: centralizer Z_q, characters zeta_q^(s l)
                l0 = rep_el.l
                cent_apart = self.gdata.a_part[cent_idx]
                for s in range(q):
                    self._add(
                        f"A_{l0}_{s}", ci, s, internal_dim=1,
                        pi_perm=np.zeros((len(cent_idx), 1), dtype=np.int64),
                        pi_exp=(cent_apart * s * self._zq_unit).reshape(-1, 1)
                        % self.root_order,
                        twist_exp=l0 * s * self._zq_unit, **shared,
                    )
            else:
                # b-type flux b^k: centralizer Z_p, characters
                # zeta_(p^2)^((s p + u k) l) on b^l
                k = rep_el.m
                for s in range(p):
                    lift = (s * p + u * k) % (p * p)
                    self._add(
                        f"B_{k}_{s}", ci, s, internal_dim=1,
                        pi_perm=np.zeros((len(cent_idx), 1), dtype=np.int64),
                        pi_exp=(cent_bpart * lift * self._zp2_unit).reshape(-1, 1)
                        % self.root_order,
                        twist_exp=lift * k * self._zp2_unit, **shared,
                    )

    def _add(
        self, label, ci, s, *, internal_dim, pi_perm, pi_exp, twist_exp,
        class_info, class_bpart, flux, coset_rep, coset_of, srep, cent_bpart,
    ):
        n_cosets = len(class_info.members)
        simple = SimpleObject(
            label=label, class_index=ci, char_index=s,
            dim=n_cosets * internal_dim, internal_dim=internal_dim,
        )
        self.simples.append(simple)
        self.tables.append(
            AnyonTables(
                simple=simple, class_info=class_info, n_cosets=n_cosets,
                internal_dim=internal_dim, dim=n_cosets * internal_dim,
                class_bpart=class_bpart,
                flux=flux, coset_rep=coset_rep, coset_of=coset_of, srep=srep,
                cent_bpart=cent_bpart, pi_perm=pi_perm, pi_exp=pi_exp,
                twist_exp=twist_exp % self.root_order,
            )
        )

    # ----- scalar helpers -------------------------------------------------

    def theta_ne(self, flux_bpart: int, x_bpart: int, y_bpart: int) -> int:
        """theta exponent in engine units (zeta_(p^2 q))."""
        return int(self.theta_zp[flux_bpart, x_bpart, y_bpart]) * self._zp_unit

    def omega_ne(self, gm: int, hm: int, km: int) -> int:
        """omega exponent in engine units."""
        return omega_exponent(self.params, gm, hm, km) * self._zp_unit

    def index_of(self, anyon) -> int:
        if isinstance(anyon, SimpleObject):
            return self.label_index[anyon.label]
        if isinstance(anyon, str):
            return self.label_index[anyon]
        return int(anyon)

    def root(self, exponent: int) -> CycloNumber:
        return root_of_unity(exponent % self.root_order, self.root_order)

    # ----- elementary actions ---------------------------------------------

    def dpr_core(self, t: AnyonTables, g_idx: int, basis: int) -> tuple[int, int]:
        """Act by the group element with index g_idx on a basis vector of
        the module with tables t.  Returns (new basis, phase exponent).
        """
        gd = self.gdata
        coset = basis // t.internal_dim
        internal = basis % t.internal_dim
        rk = int(t.coset_rep[coset])
        w = int(gd.mult_table[g_idx, rk])
        j = int(t.coset_of[w])
        s_idx = int(t.srep[w])
        hm = t.class_bpart
        exp = self.theta_ne(hm, int(gd.b_part[g_idx]), int(gd.b_part[rk]))
        exp -= self.theta_ne(hm, int(gd.b_part[t.coset_rep[j]]), int(t.cent_bpart[s_idx]))
        exp += int(t.pi_exp[s_idx, internal])
        new_internal = int(t.pi_perm[s_idx, internal])
        return j * t.internal_dim + new_internal, exp % self.root_order


@lru_cache(maxsize=None)
def context_for(params: CocycleParams) -> DoubleContext:
    return DoubleContext(params)


def enumerate_simples(params: CocycleParams) -> list[SimpleObject]:
    """All simple objects in canonical order: identity-flux objects
    (linear characters first, then the induced ones), a-type fluxes by
    ascending class representative, then b-type fluxes b^1..b^(p-1)."""
    return list(context_for(params).simples)


def qdim(simple: SimpleObject) -> CycloNumber:
    """Quantum dimension (here always the integer |class| * dim(char))."""
    return CycloNumber.from_rational(simple.dim)


def twist(params: CocycleParams, simple) -> CycloNumber:
    """Ribbon twist theta = pi(t) / id evaluated on the flux t."""
    ctx = context_for(params)
    t = ctx.tables[ctx.index_of(simple)]
    return ctx.root(t.twist_exp)


def dpr_action(
    params: CocycleParams, simple, y: GroupElement, basis: int
) -> tuple[int, CycloNumber]:
    """Action of the group element y on basis vector `basis` of the
    module underlying `simple`: returns (new basis index, coefficient).
    The coefficient is always a single root of unity (monomial action).
    """
    ctx = context_for(params)
    t = ctx.tables[ctx.index_of(simple)]
    new_basis, exp = ctx.dpr_core(t, ctx.gdata.index(y), basis)
    return new_basis, ctx.root(exp)


def basis_flux(params: CocycleParams, simple, basis: int) -> GroupElement:
    """Flux (group grading) of one basis vector."""
    ctx = context_for(params)
    t = ctx.tables[ctx.index_of(simple)]
    return ctx.gdata.element(t.basis_flux(basis))


def sigma_action(
    params: CocycleParams, pair, bases: tuple[int, int]
) -> tuple[CycloNumber, tuple[int, int]]:
    """Braiding c_{X,Y}: V_X (x) V_Y -> V_Y (x) V_X on basis vectors.

    pair = (X, Y) are the colors (labels, indices or SimpleObjects) and
    bases = (bx, by).  Returns (phase, (by', bx')): the X vector crosses
    over, acting on the Y vector by its flux.
    """
    ctx = context_for(params)
    X = ctx.tables[ctx.index_of(pair[0])]
    Y = ctx.tables[ctx.index_of(pair[1])]
    bx, by = bases
    g_idx = X.basis_flux(bx)
    by_new, exp = ctx.dpr_core(Y, g_idx, by)
    return ctx.root(exp), (by_new, bx)


def sigma_inverse_action(
    params: CocycleParams, pair, bases: tuple[int, int]
) -> tuple[CycloNumber, tuple[int, int]]:
    """Inverse braiding c_{X,Y}^-1: V_Y (x) V_X -> V_X (x) V_Y.

    pair = (X, Y) and bases = (by, bx) in the order they sit on the
    strands.  Satisfies sigma_action . sigma_inverse_action = id.
    """
    ctx = context_for(params)
    gd = ctx.gdata
    X = ctx.tables[ctx.index_of(pair[0])]
    Y = ctx.tables[ctx.index_of(pair[1])]
    by, bx = bases
    g_idx = X.basis_flux(bx)
    g_inv = int(gd.inv_table[g_idx])
    gm = int(gd.b_part[g_idx])
    gim = int(gd.b_part[g_inv])
    hm = Y.class_bpart
    by_new, exp = ctx.dpr_core(Y, g_inv, by)
    # remove the theta_{y}(x, x^-1) normalization of the inverse crossing
    exp -= ctx.theta_ne(hm, gm, gim)
    return ctx.root(exp), (bx, by_new)


def associator_scalar(params: CocycleParams, fluxes) -> CycloNumber:
    """Scalar by which the associator acts on a triple of flux sectors."""
    f1, f2, f3 = fluxes
    ctx = context_for(params)
    return ctx.root(ctx.omega_ne(f1.m, f2.m, f3.m))

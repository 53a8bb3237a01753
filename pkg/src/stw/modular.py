"""Modular data (S, T), the symmetrized Whitehead W-matrix, derived knot
and 3-manifold invariants, and the permutation-equivalence search that
separates the five twisted-double theories of one group by (S, T, W).

Everything here is exact.  Matrix entries live in Z[zeta_N] (N = p^2*q)
and are carried as integer histograms over the N-th roots of unity, the
shape the braid engine produces.  Bulk identities are certified by a
rigorous modular-evaluation scheme: a histogram vector is mapped into
F_P (for several primes P = 1 mod lcm(8, N)) by evaluating at gamma^f
with gamma of multiplicative order N.  An identity E = 0 in Z[zeta_N]
holds exactly iff the evaluations vanish at every frequency f coprime
to N for each P and the product of the primes exceeds twice an explicit
coefficient bound for E reduced modulo the N-th cyclotomic polynomial.
No floating point enters any decision.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .braid import BraidWord, closure_structure, framed_trace_counts, parse_braid
from .cocycle import CocycleParams
from .cyclotomic import CycloNumber, reduction_bound_factor, root_of_unity
from .double import context_for
from .group import GroupSpec

# Three-strand words whose closures are the two-component clasp pattern
# (a doubled strand clasped through a bare one with zero total linking):
# the pattern computed on every color pair assembles the W-matrix.  The
# second word is the mirror image of the first.
WHITEHEAD_WORD = "s2^-2 s1 s2^-1 s1"
WHITEHEAD_MIRROR_WORD = "s2^-2 s1^-1 s2^2 s1^2"

_INT64_LIMIT = 2**63 - 1


# ----- primes and modular evaluation -----------------------------------------


def _is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond 64 bits."""
    if m < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % small == 0:
            return m == small
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def _verification_primes(modulus: int, count: int) -> tuple[int, ...]:
    """The largest `count` primes below 2^31 congruent to 1 mod modulus."""
    primes = []
    k = (2**31 - 2) // modulus
    while len(primes) < count and k > 0:
        candidate = k * modulus + 1
        if _is_prime(candidate):
            primes.append(candidate)
        k -= 1
    if len(primes) < count:
        raise RuntimeError("not enough verification primes below 2^31")
    return tuple(primes)


def _prime_factors(n: int) -> tuple[int, ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def _element_of_order(prime: int, n: int) -> int:
    """Some gamma of multiplicative order exactly n modulo prime."""
    if (prime - 1) % n:
        raise ValueError("n must divide prime - 1")
    factors = _prime_factors(n)
    for a in range(2, prime):
        gamma = pow(a, (prime - 1) // n, prime)
        if gamma != 1 and all(pow(gamma, n // r, prime) != 1 for r in factors):
            return gamma
    raise RuntimeError("no element of the requested order")


class _FreqPrime:
    """Evaluation of histogram vectors at all powers of a fixed root of
    unity gamma modulo one prime, and the exact inverse transform."""

    def __init__(self, prime: int, n: int):
        self.prime = prime
        self.n = n
        gamma = _element_of_order(prime, n)
        pows = np.empty(n, dtype=np.int64)
        pows[0] = 1
        for k in range(1, n):
            pows[k] = pows[k - 1] * gamma % prime
        self.pows = pows
        idx = (np.arange(n)[:, None] * np.arange(n)[None, :]) % n
        self.eval_table = pows[idx]
        self.inv_table = pows[(-idx) % n]
        self.n_inv = pow(n, -1, prime)

    def evaluate(self, counts: np.ndarray) -> np.ndarray:
        """(..., n) integer vectors -> (..., n) residues of the values at
        gamma^f, f = 0..n-1."""
        c = np.ascontiguousarray(counts, dtype=np.int64)
        peak = int(np.abs(c).max(initial=0))
        if peak and peak > _INT64_LIMIT // ((self.prime - 1) * self.n):
            raise OverflowError("histogram entries too large to evaluate")
        return (c @ self.eval_table) % self.prime

    def invert(self, evals: np.ndarray) -> np.ndarray:
        """Inverse transform: residues at all n frequencies back to the
        residues of the histogram coefficients."""
        hi, lo = evals >> 16, evals & 0xFFFF
        out = (((hi @ self.inv_table) % self.prime) << 16) + (
            (lo @ self.inv_table) % self.prime
        )
        return out % self.prime * self.n_inv % self.prime


def _matmul_mod(a: np.ndarray, b: np.ndarray, prime: int) -> np.ndarray:
    """Frequency-wise matrix product: a is (x, k, F), b is (k, y, F);
    returns (x, y, F) mod prime.  Products are reduced before summation
    so nothing exceeds int64."""
    out = np.zeros((a.shape[0], b.shape[1], a.shape[2]), dtype=np.int64)
    for j in range(a.shape[1]):
        out += a[:, j, None, :] * b[None, j, :, :] % prime
    return out % prime


def _crt_centered(residues: list[np.ndarray], primes: tuple[int, ...]) -> np.ndarray:
    """Combine per-prime residue arrays into the centered exact integers."""
    product = math.prod(primes)
    if len(primes) == 2 and product < _INT64_LIMIT:
        (r1, r2), (p1, p2) = residues, primes
        t = (r2 - r1) * pow(p1, -1, p2) % p2
        x = r1 + p1 * t
        return np.where(x > product // 2, x - product, x)
    x = residues[0].astype(object)
    m = primes[0]
    for r, p in zip(residues[1:], primes[1:]):
        t = (r.astype(object) - x) * pow(m % p, -1, p) % p
        x = x + m * t
        m *= p
    return np.where(x > m // 2, x - m, x)


class _ExactChecker:
    """Shared rigor machinery for one root order: primes, evaluation
    tables, the primitive-frequency mask, and the bound bookkeeping."""

    def __init__(self, order: int, prime_count: int = 2):
        self.order = order
        self.kappa = reduction_bound_factor(order)
        self.primes = _verification_primes(math.lcm(8, order), prime_count)
        self.freq = [_FreqPrime(p, order) for p in self.primes]
        self.product = math.prod(self.primes)
        prim = np.array([f for f in range(order) if math.gcd(f, order) == 1])
        self.prim = prim
        self.neg = (-np.arange(order)) % order

    def require_capacity(self, l1_bound: int, what: str) -> None:
        """A vanishing or extraction argument is only valid when the prime
        product dominates the reduced-coefficient bound."""
        if 2 * self.kappa * int(l1_bound) >= self.product:
            raise ArithmeticError(
                f"verification primes cannot certify {what}: bound too large"
            )


@lru_cache(maxsize=None)
def _checker(order: int, prime_count: int = 2) -> _ExactChecker:
    return _ExactChecker(order, prime_count)


# ----- modular data -----------------------------------------------------------


@dataclass
class ModularData:
    """Exact modular data of one twisted-double theory.

    s_counts[a, b] is the histogram of the two-strand trace whose root
    sum is the unnormalized S-matrix entry; the normalized S divides by
    the total dimension D.  The twist exponents give T = diag(zeta^t).
    """

    params: CocycleParams
    labels: tuple[str, ...]
    dims: np.ndarray
    twist_exps: np.ndarray
    root_order: int
    s_counts: np.ndarray
    total_dim: int
    c_mod_8: int
    s2_is_permutation: bool
    dual: tuple[int, ...] | None
    _label_index: dict = field(repr=False, default_factory=dict)
    _verlinde: np.ndarray | None = field(repr=False, default=None)
    _r_table: list | None = field(repr=False, default=None)

    def __post_init__(self):
        self._label_index = {lab: i for i, lab in enumerate(self.labels)}

    @property
    def n_objects(self) -> int:
        return len(self.labels)

    def index_of(self, obj) -> int:
        if isinstance(obj, str):
            return self._label_index[obj]
        return int(obj)

    def twist(self, a) -> CycloNumber:
        return root_of_unity(int(self.twist_exps[self.index_of(a)]), self.root_order)

    def twists(self) -> list[CycloNumber]:
        return [self.twist(a) for a in range(self.n_objects)]

    def s_tilde(self, a, b) -> CycloNumber:
        """Unnormalized S entry (the bare two-strand trace)."""
        a, b = self.index_of(a), self.index_of(b)
        return CycloNumber.from_root_counts(self.root_order, self.s_counts[a, b])

    def s_entry(self, a, b) -> CycloNumber:
        """Normalized S entry: the trace divided by D."""
        return self.s_tilde(a, b) / self.total_dim

    def s_pos_counts(self) -> np.ndarray:
        """Histograms of the opposite-chirality two-strand traces (the
        entrywise complex conjugate of s_counts)."""
        neg = (-np.arange(self.root_order)) % self.root_order
        return self.s_counts[:, :, neg]

    def dual_of(self, a) -> int:
        if self.dual is None:
            raise ArithmeticError("charge conjugation undefined: S^2 is not a permutation")
        return self.dual[self.index_of(a)]


def t_matrix(params: CocycleParams) -> list[CycloNumber]:
    """Diagonal of T: the twists in canonical label order."""
    ctx = context_for(params)
    return [ctx.root(ctx.tables[i].twist_exp) for i in range(len(ctx.simples))]


def s_matrix(params: CocycleParams) -> list[list[CycloNumber]]:
    """The normalized S-matrix as exact cyclotomic numbers."""
    md = modular_data(params)
    return [
        [md.s_entry(a, b) for b in range(md.n_objects)] for a in range(md.n_objects)
    ]


_MD_CACHE: dict[tuple[int, int, int, int], ModularData] = {}


def modular_data(params: CocycleParams) -> ModularData:
    """Assemble the exact modular data of one theory.

    The S-matrix is defined through the braid engine: the unnormalized
    entry is the trace of the two-strand word sigma_1^-2 colored (a, b).
    With T the diagonal of twists this normalization satisfies, exactly:
    unit row = dims/D, S unitary, S^2 = charge conjugation, and
    (ST)^3 = S^2 scaled by the Gauss-sum phase.
    """
    spec = params.spec
    key = (spec.q, spec.p, spec.n, params.u)
    if key in _MD_CACHE:
        return _MD_CACHE[key]
    ctx = context_for(params)
    n = len(ctx.simples)
    labels = tuple(s.label for s in ctx.simples)
    dims = np.array([s.dim for s in ctx.simples], dtype=np.int64)
    twist_exps = np.array(
        [ctx.tables[i].twist_exp % ctx.root_order for i in range(n)], dtype=np.int64
    )
    total_sq = int(np.sum(dims * dims))
    total_dim = math.isqrt(total_sq)
    if total_dim * total_dim != total_sq:
        raise ArithmeticError("sum of squared dimensions is not a perfect square")

    word = BraidWord(2, (-1, -1))
    s_counts = np.zeros((n, n, ctx.root_order), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            s_counts[a, b] = framed_trace_counts(params, word, [labels[a], labels[b]])

    gauss_hist = np.zeros(ctx.root_order, dtype=np.int64)
    np.add.at(gauss_hist, twist_exps, dims * dims)
    gauss = CycloNumber.from_root_counts(ctx.root_order, gauss_hist)
    for c_mod_8 in range(8):
        if gauss == root_of_unity(c_mod_8, 8) * total_dim:
            break
    else:
        raise ArithmeticError("Gauss sum is not D times an eighth root of unity")

    md = ModularData(
        params=params,
        labels=labels,
        dims=dims,
        twist_exps=twist_exps,
        root_order=ctx.root_order,
        s_counts=s_counts,
        total_dim=total_dim,
        c_mod_8=c_mod_8,
        s2_is_permutation=False,
        dual=None,
    )
    s_squared = _extract_s_squared(md)
    if s_squared is not None:
        target = total_dim * total_dim
        perm_ok = bool(
            np.all((s_squared == 0) | (s_squared == target))
            and np.all(np.sum(s_squared != 0, axis=0) == 1)
            and np.all(np.sum(s_squared != 0, axis=1) == 1)
        )
        md.s2_is_permutation = perm_ok
        if perm_ok:
            md.dual = tuple(int(np.nonzero(row)[0][0]) for row in s_squared != 0)
    _MD_CACHE[key] = md
    return md


def _s_evals(md: ModularData, checker: _ExactChecker) -> list[np.ndarray]:
    """Per-prime evaluations of every s_counts histogram, all frequencies."""
    return [fp.evaluate(md.s_counts) for fp in checker.freq]


def _extract_s_squared(md: ModularData) -> np.ndarray | None:
    """Exact integer matrix of S-tilde squared, or None if some entry is
    not a rational integer (then S^2 cannot be a permutation)."""
    checker = _checker(md.root_order)
    n = md.n_objects
    l1 = np.sum(md.s_counts, axis=2)
    bound = int(np.max(l1 @ l1))
    checker.require_capacity(bound + int(np.max(np.abs(l1 @ l1))), "S^2 extraction")
    values = []
    for fp, evals in zip(checker.freq, _s_evals(md, checker)):
        sq = _matmul_mod(evals, evals, fp.prime)[:, :, checker.prim]
        if not np.all(sq == sq[:, :, :1]):
            return None
        values.append(sq[:, :, 0])
    exact = _crt_centered(values, checker.primes)
    if np.any(np.abs(exact) > bound):
        return None
    return exact.astype(np.int64)


# ----- modularity verification -------------------------------------------------


@dataclass(frozen=True)
class ModularityReport:
    """Outcome of the exact modularity suite for one theory."""

    unitary: bool
    s2_permutation: bool
    self_dual_count: int
    unit_row_is_dims: bool
    st_cubed_matches_s2: bool
    gauss_sum_phase: int
    verlinde_integral_nonnegative: bool
    dim_homomorphism: bool
    failures: tuple[str, ...]

    @property
    def all_passed(self) -> bool:
        return not self.failures


def modularity_report(md: ModularData) -> ModularityReport:
    """Run the full exact modularity suite on one theory."""
    failures: list[str] = []
    checker = _checker(md.root_order)
    n = md.n_objects
    evals = _s_evals(md, checker)
    l1 = np.sum(md.s_counts, axis=2)
    d_sq = md.total_dim * md.total_dim

    unit_ok = all(
        md.s_tilde(0, b) == CycloNumber.from_rational(int(md.dims[b]), 1)
        for b in range(n)
    )
    if not unit_ok:
        failures.append("unit row of S-tilde is not the dimension vector")

    unitary = True
    bound = int(np.max(l1 @ l1.T)) + d_sq
    checker.require_capacity(bound, "unitarity")
    for fp, ev in zip(checker.freq, evals):
        conj = ev[:, :, checker.neg]
        gram = _matmul_mod(ev, conj.transpose(1, 0, 2), fp.prime)[:, :, checker.prim]
        gram[np.arange(n), np.arange(n), :] -= d_sq
        if np.any(gram % fp.prime):
            unitary = False
    if not unitary:
        failures.append("S-tilde times its conjugate transpose is not D^2 times identity")

    s2_ok = md.s2_is_permutation
    self_dual = 0
    if s2_ok:
        self_dual = sum(1 for a, b in enumerate(md.dual) if a == b)
        if self_dual != 1 or md.dual[0] != 0:
            failures.append("charge conjugation does not fix exactly the unit")
    else:
        failures.append("S^2 is not D^2 times a permutation matrix")

    st_ok = _st_cubed_matches_s2(md, checker, evals, l1)
    if not st_ok:
        failures.append("(ST)^3 does not equal the Gauss phase times S^2")

    verlinde_ok = True
    dim_hom = True
    try:
        table = verlinde_table(md)
        sums = np.einsum("abc,c->ab", table, md.dims)
        dim_hom = bool(np.array_equal(sums, np.outer(md.dims, md.dims)))
    except ArithmeticError as err:
        verlinde_ok = False
        failures.append(str(err))
    if verlinde_ok and not dim_hom:
        failures.append("fusion multiplicities break the dimension homomorphism")

    return ModularityReport(
        unitary=unitary,
        s2_permutation=s2_ok,
        self_dual_count=self_dual,
        unit_row_is_dims=unit_ok,
        st_cubed_matches_s2=st_ok,
        gauss_sum_phase=md.c_mod_8,
        verlinde_integral_nonnegative=verlinde_ok,
        dim_homomorphism=dim_hom,
        failures=tuple(failures),
    )


def _st_cubed_matches_s2(md, checker, evals, l1) -> bool:
    """(S-tilde T)^3 = D * phase * S-tilde^2 with phase the Gauss-sum
    eighth root of unity; certified when the phase is rational (+-1)."""
    if md.c_mod_8 % 4:
        raise ArithmeticError(
            "Gauss phase is a primitive eighth root of unity; the"
            " frequency check only supports rational phases"
        )
    sign = 1 if md.c_mod_8 == 0 else -1
    n = md.n_objects
    bound = (
        int(np.max(l1 @ l1 @ l1)) + md.total_dim * int(np.max(l1 @ l1))
    )
    checker.require_capacity(bound, "(ST)^3 comparison")
    ok = True
    for fp, ev in zip(checker.freq, evals):
        twist_phase = fp.pows[
            np.arange(md.root_order)[None, :] * md.twist_exps[:, None] % md.root_order
        ]
        st = ev * twist_phase[None, :, :] % fp.prime
        cubed = _matmul_mod(_matmul_mod(st, st, fp.prime), st, fp.prime)
        s2 = _matmul_mod(ev, ev, fp.prime)
        rhs = sign * md.total_dim % fp.prime * s2 % fp.prime
        if np.any((cubed - rhs)[:, :, checker.prim] % fp.prime):
            ok = False
    return ok


# ----- fusion rules -------------------------------------------------------------


def verlinde(md: ModularData, a, b, c) -> int:
    """One fusion multiplicity N_ab^c = sum_z S_az S_bz S*_cz / S_0z,
    evaluated with exact cyclotomic arithmetic."""
    a, b, c = md.index_of(a), md.index_of(b), md.index_of(c)
    acc = CycloNumber.zero(md.root_order)
    for z in range(md.n_objects):
        weight = md.total_dim // int(md.dims[z])
        term = md.s_tilde(a, z) * md.s_tilde(b, z) * md.s_tilde(c, z).conjugate()
        acc = acc + term * weight
    value = acc / md.total_dim**3
    if not value.is_integer():
        raise ArithmeticError(f"Verlinde value for {(a, b, c)} is not an integer")
    result = int(value.as_fraction())
    if result < 0:
        raise ArithmeticError(f"Verlinde value for {(a, b, c)} is negative")
    return result


def verlinde_table(md: ModularData) -> np.ndarray:
    """All fusion multiplicities N_ab^c as an (n, n, n) integer array,
    certified exactly via the modular-evaluation scheme."""
    if md._verlinde is not None:
        return md._verlinde
    checker = _checker(md.root_order)
    n = md.n_objects
    l1 = np.sum(md.s_counts, axis=2)
    weights = (md.total_dim // md.dims).astype(np.int64)
    colmax = np.max(l1, axis=0).astype(object)
    bound = int(np.sum(weights.astype(object) * colmax**3))
    checker.require_capacity(bound, "Verlinde extraction")

    per_prime = []
    for fp, ev in zip(checker.freq, _s_evals(md, checker)):
        sub = ev[:, :, checker.prim]
        conj = ev[:, :, checker.neg][:, :, checker.prim]
        vals = np.zeros((n, n, n), dtype=np.int64)
        for a in range(n):
            t1 = sub[a] * weights[:, None] % fp.prime
            for b in range(n):
                t2 = t1 * sub[b] % fp.prime
                prod = np.sum(t2[None, :, :] * conj % fp.prime, axis=1) % fp.prime
                if not np.all(prod == prod[:, :1]):
                    raise ArithmeticError(
                        f"Verlinde value for a={a}, b={b} is not rational"
                    )
                vals[a, b] = prod[:, 0]
        per_prime.append(vals)
    exact = _crt_centered(per_prime, checker.primes)
    scale = md.total_dim**3
    if np.any(exact % scale) or np.any(exact < 0):
        raise ArithmeticError("Verlinde table is not nonnegative-integral")
    table = (exact // scale).astype(np.int64)
    md._verlinde = table
    return table


# ----- W-matrix -----------------------------------------------------------------


@dataclass
class WMatrix:
    """The clasp-pattern invariants on all color pairs.

    v_counts[a, b] is the histogram of the zero-framed invariant V_ab of
    the two-component clasp closure with the doubled strand colored a and
    the bare strand colored b.  The retained matrix is
    W-tilde_ab = theta_a^-2 V_ab, and W_ab = (theta_a/theta_b) W-tilde_ab.
    """

    params: CocycleParams
    labels: tuple[str, ...]
    word_text: str
    mirror: bool
    root_order: int
    twist_exps: np.ndarray
    v_counts: np.ndarray

    def index_of(self, obj) -> int:
        if isinstance(obj, str):
            return list(self.labels).index(obj)
        return int(obj)

    def _counts(self, a, b, shift: int) -> CycloNumber:
        rolled = np.roll(self.v_counts[self.index_of(a), self.index_of(b)], shift)
        return CycloNumber.from_root_counts(self.root_order, rolled)

    def v_entry(self, a, b) -> CycloNumber:
        """The raw zero-framed clasp invariant V_ab."""
        return self._counts(a, b, 0)

    def w_tilde_entry(self, a, b) -> CycloNumber:
        """W-tilde_ab = theta_a^-2 V_ab: V with the internal clasp framing
        of the doubled component removed."""
        ta = int(self.twist_exps[self.index_of(a)])
        return self._counts(a, b, -2 * ta)

    def w_entry(self, a, b) -> CycloNumber:
        """W_ab = (theta_a/theta_b) W-tilde_ab = V_ab/(theta_a theta_b)."""
        ta = int(self.twist_exps[self.index_of(a)])
        tb = int(self.twist_exps[self.index_of(b)])
        return self._counts(a, b, -ta - tb)

    def w_counts(self) -> np.ndarray:
        """Histogram array of W (exact: W is a root multiple of V)."""
        n = len(self.labels)
        out = np.empty_like(self.v_counts)
        for a in range(n):
            for b in range(n):
                shift = -int(self.twist_exps[a]) - int(self.twist_exps[b])
                out[a, b] = np.roll(self.v_counts[a, b], shift % self.root_order)
        return out


_WM_CACHE: dict[tuple[int, int, int, int, bool], WMatrix] = {}


def w_matrix(params: CocycleParams, mirror: bool = False) -> WMatrix:
    """Compute the W-matrix by running the clasp braid on every ordered
    color pair (doubled-component color, bare-component color)."""
    spec = params.spec
    key = (spec.q, spec.p, spec.n, params.u, mirror)
    if key in _WM_CACHE:
        return _WM_CACHE[key]
    ctx = context_for(params)
    n = len(ctx.simples)
    labels = tuple(s.label for s in ctx.simples)
    text = WHITEHEAD_MIRROR_WORD if mirror else WHITEHEAD_WORD
    word = parse_braid(text, 3)
    info = closure_structure(word)
    if sorted(len(c) for c in info.components) != [1, 2]:
        raise ValueError("clasp word must close to a doubled plus a bare component")
    doubled = max(info.components, key=len)
    twist_exps = np.array(
        [ctx.tables[i].twist_exp % ctx.root_order for i in range(n)], dtype=np.int64
    )
    v_counts = np.zeros((n, n, ctx.root_order), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            colors = [labels[b]] * 3
            for strand in doubled:
                colors[strand - 1] = labels[a]
            raw = framed_trace_counts(params, word, colors)
            correction = 0
            for comp, sw in zip(info.components, info.self_writhes):
                color = a if comp == doubled else b
                correction -= sw * int(twist_exps[color])
            v_counts[a, b] = np.roll(raw, correction % ctx.root_order)
    wm = WMatrix(
        params=params,
        labels=labels,
        word_text=text,
        mirror=mirror,
        root_order=ctx.root_order,
        twist_exps=twist_exps,
        v_counts=v_counts,
    )
    _WM_CACHE[key] = wm
    return wm


@dataclass(frozen=True)
class WIdentityReport:
    """Exhaustive exact checks of the W-matrix structure identities."""

    symmetric: bool
    twist_duality: bool
    second_dual_invariance: bool
    failures: tuple[str, ...]

    @property
    def all_passed(self) -> bool:
        return not self.failures


def w_identities(md: ModularData, wm: WMatrix) -> WIdentityReport:
    """Check, for all pairs: W symmetric; theta_a^2 W-tilde_ax equals
    theta_x^2 W-tilde_{x, dual(a)}; and W-tilde_ax = W-tilde_{a, dual(x)}.
    In terms of the raw clasp values these are V_ax = V_xa,
    V_ax = V_{x, dual(a)}, and V_ax = V_{a, dual(x)}."""
    n = md.n_objects
    failures = []
    v = [
        [
            CycloNumber.from_root_counts(wm.root_order, wm.v_counts[a, b])
            for b in range(n)
        ]
        for a in range(n)
    ]
    symmetric = twist_duality = second_dual = True
    for a in range(n):
        for x in range(n):
            if v[a][x] != v[x][a]:
                symmetric = False
                failures.append(f"W asymmetry at ({md.labels[a]}, {md.labels[x]})")
            if v[a][x] != v[x][md.dual_of(a)]:
                twist_duality = False
                failures.append(
                    f"twist-duality identity fails at ({md.labels[a]}, {md.labels[x]})"
                )
            if v[a][x] != v[a][md.dual_of(x)]:
                second_dual = False
                failures.append(
                    f"dual-argument identity fails at ({md.labels[a]}, {md.labels[x]})"
                )
    return WIdentityReport(
        symmetric=symmetric,
        twist_duality=twist_duality,
        second_dual_invariance=second_dual,
        failures=tuple(failures),
    )


def ba_block_formula_report(md: ModularData, wm: WMatrix) -> tuple[bool, list[str]]:
    """Compare every (B-type, A-type) W entry against the closed formula

        W = 55 * (-1)^(l*m*k2) * (theta_A^(k2/2))^-1 * theta_B^-1,

    k2 = k^2 mod p, with the odd-order square-root convention
    (zeta_q^j)^(1/2) = zeta_2q^j = (-1)^j zeta_q^((q+1)/2 * j)."""
    spec = md.params.spec
    q, p = spec.q, spec.p
    failures = []
    for a, la in enumerate(md.labels):
        if not la.startswith("B_"):
            continue
        k = int(la.split("_")[1])
        k2 = k * k % p
        for b, lb in enumerate(md.labels):
            if not lb.startswith("A_"):
                continue
            _, l_str, m_str = lb.split("_")
            lm = int(l_str) * int(m_str)
            sign = -1 if (lm * k2) % 2 else 1
            # theta_A^(k2/2) = (zeta_2q^lm)^k2 with zeta_2q = -zeta_q^((q+1)/2)
            half_power = root_of_unity((q + 1) // 2 * lm * k2, q)
            if (lm * k2) % 2:
                half_power = -half_power
            expected = (
                CycloNumber.from_rational(q * p, 1)
                * sign
                / half_power
                / md.twist(a)
            )
            if wm.w_entry(a, b) != expected:
                failures.append(f"BA formula fails at ({la}, {lb})")
    return (not failures, failures)


# ----- punctured traces ----------------------------------------------------------


def punctured_s_trace(md: ModularData, wm: WMatrix, z, a) -> CycloNumber:
    """The diagonal block trace of the once-punctured torus S-matrix:
    (d_a/(theta_a D^2)) * sum_x S_zx theta_x W_ax."""
    z, a = md.index_of(z), md.index_of(a)
    acc = CycloNumber.zero(md.root_order)
    for x in range(md.n_objects):
        acc = acc + md.s_entry(z, x) * md.twist(x) * wm.w_entry(a, x)
    return acc * int(md.dims[a]) / (md.twist(a) * md.total_dim**2)


def punctured_vanishing_report(md: ModularData, wm: WMatrix) -> tuple[bool, list[str]]:
    """Certify that the punctured trace vanishes whenever the fusion
    channel is absent: N_{a, dual(a)}^z = 0 implies the trace is zero.
    (The converse can fail: accidental zeros inside the support exist.)"""
    checker = _checker(md.root_order)
    n = md.n_objects
    table = verlinde_table(md)
    l1s = np.sum(md.s_counts, axis=2)
    l1v = np.sum(np.abs(wm.v_counts), axis=2)
    bound = int(np.max(l1s @ l1v.T))
    checker.require_capacity(bound, "punctured-trace vanishing")
    # theta_x cancels between S_zx theta_x and W_ax = V_ax/(theta_a theta_x),
    # so the trace is proportional to F_za = sum_x S~_zx V_ax.
    zero_mask = None
    for fp, ev in zip(checker.freq, _s_evals(md, checker)):
        v_ev = fp.evaluate(wm.v_counts)[:, :, checker.prim]
        sub = ev[:, :, checker.prim]
        f_vals = _matmul_mod(sub, v_ev.transpose(1, 0, 2), fp.prime)
        mask = ~np.any(f_vals, axis=2)
        zero_mask = mask if zero_mask is None else (zero_mask & mask)
    failures = []
    for a in range(n):
        channel = table[a, md.dual_of(a)]
        for z in range(n):
            if channel[z] == 0 and not zero_mask[z, a]:
                failures.append(
                    f"trace nonzero outside fusion support at (z={md.labels[z]},"
                    f" a={md.labels[a]})"
                )
    return (not failures, failures)


def w_from_punctured(md: ModularData, wm: WMatrix, a, b) -> CycloNumber:
    """Reconstruct W_ab from the punctured traces by S-unitarity:
    W_ab = (theta_a D^2/(d_a theta_b)) sum_x S*_bx trace(x, a)."""
    a, b = md.index_of(a), md.index_of(b)
    acc = CycloNumber.zero(md.root_order)
    for x in range(md.n_objects):
        acc = acc + md.s_entry(b, x).conjugate() * punctured_s_trace(md, wm, x, a)
    scale = md.twist(a) * md.total_dim**2 / (int(md.dims[a]) * md.twist(b))
    return acc * scale


# ----- diagonal R-sums and two-strand closures ------------------------------------


def _r_table(md: ModularData) -> list[list[CycloNumber]]:
    """All diagonal R-sums r(a, c) = sum_mu [R^aa_c]_mu,mu from modular
    data only, reconstructed exactly through the evaluation scheme."""
    if md._r_table is not None:
        return md._r_table
    n = md.n_objects
    ne = md.root_order
    l1 = np.sum(md.s_counts, axis=2)
    weights = (md.total_dim // md.dims).astype(np.int64)
    # Integer target: R~(a, c) = sum_z S~_az B~_cz A~_z (D/d_z), where
    # A~_z = sum_y d_y theta_y^2 S~*_yz and B~_cz = sum_x theta_x^-2 S~*_xz S~*_cx;
    # then r(a, c) = theta_a^-1 R~(a, c) / D^5.
    l1_obj = np.maximum(l1, l1.T).astype(object)
    a_l1 = l1_obj.T @ md.dims.astype(object)
    b_l1 = l1_obj.T @ l1_obj
    bound = int(np.max((l1_obj * (a_l1 * weights.astype(object))[None, :]) @ b_l1))
    prime_count = 2
    while True:
        checker = _checker(ne, prime_count)
        if 2 * checker.kappa * bound < checker.product:
            break
        prime_count += 1
    per_prime = []
    for fp, ev in zip(checker.freq, _s_evals(md, checker)):
        conj = ev[:, :, checker.neg]
        freq_idx = np.arange(ne)
        twist_pos = fp.pows[(2 * md.twist_exps[:, None] * freq_idx[None, :]) % ne]
        twist_neg = fp.pows[(-2 * md.twist_exps[:, None] * freq_idx[None, :]) % ne]
        # A~_z evaluations: (z, f)
        a_ev = (
            np.sum(md.dims[:, None, None] * twist_pos[:, None, :] % fp.prime * conj
                   % fp.prime, axis=0)
            % fp.prime
        )
        # B~_cz evaluations: for each c, sum_x (theta_x^-2 S~*_xz) S~*_cx
        t1 = twist_neg[:, None, :] * conj % fp.prime  # (x, z, f)
        b_ev = np.zeros((n, n, ne), dtype=np.int64)
        for c in range(n):
            b_ev[c] = np.sum(t1 * conj[c][:, None, :] % fp.prime, axis=0) % fp.prime
        k_ev = b_ev * (a_ev[None, :, :] * weights[None, :, None] % fp.prime) % fp.prime
        r_ev = np.zeros((n, n, ne), dtype=np.int64)
        for a in range(n):
            r_ev[a] = np.sum(ev[a][None, :, :] * k_ev % fp.prime, axis=1) % fp.prime
        per_prime.append(fp.invert(r_ev))
    exact = _crt_centered(per_prime, checker.primes)
    if np.any(np.abs(exact.astype(object)) > bound):
        raise ArithmeticError("R-sum reconstruction exceeded its bound")
    scale = md.total_dim**5
    table = []
    for a in range(n):
        row = []
        for c in range(n):
            counts = np.roll(exact[a, c], -int(md.twist_exps[a]) % ne)
            row.append(CycloNumber.from_root_counts(ne, counts) / scale)
        table.append(row)
    md._r_table = table
    return table


def r_symbol_sum(md: ModularData, a, c) -> CycloNumber:
    """sum_mu [R^aa_c]_mu,mu: the braiding eigenvalue sum in channel c."""
    return _r_table(md)[md.index_of(a)][md.index_of(c)]


@dataclass(frozen=True)
class LambdaReport:
    """The signed multiplicity Lambda_ac = r(a,c) theta_a / theta_c^(1/2)
    under the odd-order square-root convention.  A nonzero value flips
    sign under the other branch, so only its magnitude is branch-free."""

    value: int | None
    integral: bool
    branch_sensitive: bool


def lambda_signature(md: ModularData, a, c) -> LambdaReport:
    """Divide the R-sum by its ribbon phase; the result must be a plain
    integer (a signed count of eigenvalue multiplicities)."""
    a, c = md.index_of(a), md.index_of(c)
    half = (md.root_order + 1) // 2
    phase = root_of_unity(
        (int(md.twist_exps[a]) - half * int(md.twist_exps[c])) % md.root_order,
        md.root_order,
    )
    value = _r_table(md)[a][c] * phase
    if not value.is_integer():
        return LambdaReport(value=None, integral=False, branch_sensitive=True)
    n = int(value.as_fraction())
    return LambdaReport(value=n, integral=True, branch_sensitive=n != 0)


def two_strand_closure(md: ModularData, a, b, n: int, parity: str) -> CycloNumber:
    """Closed-form invariant of the (2, *) torus closures.

    parity 'even': the closure of sigma_1^(2n) colored (a, b) equals
    sum_c d_c N_ab^c (theta_c/(theta_a theta_b))^n.  parity 'odd': the
    closure of sigma_1^(2n+1) colored a (one component; requires b = a)
    equals sum_c d_c r(a, c) (theta_c/theta_a^2)^n."""
    a, b = md.index_of(a), md.index_of(b)
    ne = md.root_order
    if parity == "even":
        table = verlinde_table(md)
        hist = np.zeros(ne, dtype=np.int64)
        exps = (n * (md.twist_exps - md.twist_exps[a] - md.twist_exps[b])) % ne
        np.add.at(hist, exps, md.dims * table[a, b])
        return CycloNumber.from_root_counts(ne, hist)
    if parity == "odd":
        if a != b:
            raise ValueError("odd closures are knots: both strands carry one color")
        r_row = _r_table(md)[a]
        acc = CycloNumber.zero(ne)
        for c in range(md.n_objects):
            phase = root_of_unity(
                (n * (int(md.twist_exps[c]) - 2 * int(md.twist_exps[a]))) % ne, ne
            )
            acc = acc + r_row[c] * phase * int(md.dims[c])
        return acc
    raise ValueError("parity must be 'even' or 'odd'")


# ----- Frobenius-Schur indicators -------------------------------------------------


def fs_indicator(md: ModularData, a, n: int) -> CycloNumber:
    """The n-th Frobenius-Schur indicator
    nu_n(a) = (1/D^2) sum_{x,y} N_ax^y d_x d_y (theta_y/theta_x)^n."""
    a = md.index_of(a)
    table = verlinde_table(md)
    ne = md.root_order
    exps = (n * (md.twist_exps[None, :] - md.twist_exps[:, None])) % ne
    weights = table[a] * np.outer(md.dims, md.dims)
    hist = np.zeros(ne, dtype=np.int64)
    np.add.at(hist, exps, weights)
    return CycloNumber.from_root_counts(ne, hist) / md.total_dim**2


# ----- lens spaces ----------------------------------------------------------------


def negative_continued_fraction(p_surgery: int, q_surgery: int) -> tuple[int, ...]:
    """Digits of the negative-regular continued fraction
    p/q = a_1 - 1/(a_2 - 1/(...)); unique with all digits >= 2 when
    0 < q < p, and the natural short expansions for the small cases."""
    if q_surgery <= 0:
        raise ValueError("q_surgery must be positive")
    if math.gcd(p_surgery, q_surgery) != 1:
        raise ValueError("surgery coefficients must be coprime")
    p, q = p_surgery, q_surgery
    digits = []
    while q:
        a = -(-p // q)  # ceiling
        digits.append(a)
        p, q = q, a * q - p
    return tuple(digits)


def linking_signature(digits: tuple[int, ...]) -> int:
    """Signature of the tridiagonal linking matrix with the digits on the
    diagonal and ones off it, by exact LDL^T pivots."""
    from fractions import Fraction

    signature = 0
    pivot = None
    for i, a in enumerate(digits):
        pivot = Fraction(a) if pivot is None or pivot == 0 else a - 1 / pivot
        if pivot > 0:
            signature += 1
        elif pivot < 0:
            signature -= 1
        elif i != len(digits) - 1:
            raise ArithmeticError("interior zero pivot in the linking matrix")
    return signature


def lens_space_invariant(md: ModularData, p_surgery: int, q_surgery: int) -> CycloNumber:
    """The surgery invariant of the lens space L(p, q):

        Z = phase^-sigma / D^(n+1) * sum over colorings of the n-chain of
            d theta^a_1 ... d theta^a_n times the chain of positive Hopf
            traces, one dimension factor per chain edge endpoint shared.

    phase is the Gauss eighth root of unity and sigma the linking-matrix
    signature."""
    digits = negative_continued_fraction(p_surgery, q_surgery)
    sigma = linking_signature(digits)
    n_comp = len(digits)
    ne = md.root_order
    s_pos = md.s_pos_counts()
    vec = [
        root_of_unity((digits[0] * int(md.twist_exps[x])) % ne, ne) * int(md.dims[x])
        for x in range(md.n_objects)
    ]
    for j in range(1, n_comp):
        nxt = []
        for y in range(md.n_objects):
            acc = CycloNumber.zero(ne)
            for x in range(md.n_objects):
                acc = acc + vec[x] * CycloNumber.from_root_counts(ne, s_pos[x, y])
            phase = root_of_unity((digits[j] * int(md.twist_exps[y])) % ne, ne)
            if j == n_comp - 1:
                phase = phase * int(md.dims[y])
            nxt.append(acc * phase)
        vec = nxt
    if n_comp == 1:
        total = CycloNumber.zero(ne)
        for x in range(md.n_objects):
            total = total + vec[x] * int(md.dims[x])
    else:
        total = CycloNumber.zero(ne)
        for y in range(md.n_objects):
            total = total + vec[y]
    phase = root_of_unity((-md.c_mod_8 * sigma) % 8, 8)
    return total * phase / md.total_dim ** (n_comp + 1)


def lens_space_via_chain_braid(md: ModularData, p_surgery: int, q_surgery: int) -> CycloNumber:
    """Independent route: evaluate the same surgery sum with the chain of
    Hopf traces replaced by one braid-engine trace of the chain braid
    sigma_1^2 sigma_2^2 ... on n strands per coloring."""
    digits = negative_continued_fraction(p_surgery, q_surgery)
    sigma = linking_signature(digits)
    n_comp = len(digits)
    ne = md.root_order
    params = md.params
    letters = []
    for j in range(1, n_comp):
        letters += [j, j]
    word = BraidWord(max(n_comp, 1), tuple(letters))
    hist = np.zeros(ne, dtype=np.int64)
    for combo in np.ndindex(*([md.n_objects] * n_comp)):
        colors = [md.labels[x] for x in combo]
        counts = framed_trace_counts(params, word, colors)
        weight = 1
        shift = 0
        for x, a in zip(combo, digits):
            weight *= int(md.dims[x])
            shift += a * int(md.twist_exps[x])
        hist += weight * np.roll(counts, shift % ne)
    phase = root_of_unity((-md.c_mod_8 * sigma) % 8, 8)
    return CycloNumber.from_root_counts(ne, hist) * phase / md.total_dim ** (n_comp + 1)


# ----- equivalence search ---------------------------------------------------------


@dataclass(frozen=True)
class TheoryData:
    """Hashable exact fingerprint data of one theory for the search."""

    name: str
    labels: tuple[str, ...]
    dims: tuple[int, ...]
    t_keys: tuple
    s_keys: tuple
    w_keys: tuple | None


def theory_data(md: ModularData, wm: WMatrix | None = None) -> TheoryData:
    """Freeze (S, T[, W]) into comparable canonical keys."""
    n = md.n_objects
    t_keys = tuple(md.twist(a).canonical_key() for a in range(n))
    s_keys = tuple(
        tuple(md.s_tilde(a, b).canonical_key() for b in range(n)) for a in range(n)
    )
    w_keys = None
    if wm is not None:
        w_keys = tuple(
            tuple(wm.w_entry(a, b).canonical_key() for b in range(n)) for a in range(n)
        )
    return TheoryData(
        name=f"u={md.params.u}",
        labels=md.labels,
        dims=tuple(int(d) for d in md.dims),
        t_keys=t_keys,
        s_keys=s_keys,
        w_keys=w_keys,
    )


@dataclass(frozen=True)
class SearchResult:
    """Outcome of the permutation search between two theories."""

    equivalent: bool
    permutation: tuple[int, ...] | None
    nodes: int
    reason: str


def _candidate_sets(d1: TheoryData, d2: TheoryData) -> list[list[int]] | str:
    """Per-object candidate images matching all row-level fingerprints;
    a string return names the first object with no candidates."""
    n = len(d1.labels)
    rows1 = [tuple(sorted(d1.s_keys[a])) for a in range(n)]
    rows2 = [tuple(sorted(d2.s_keys[a])) for a in range(n)]
    wrows1 = wrows2 = None
    if d1.w_keys is not None and d2.w_keys is not None:
        wrows1 = [tuple(sorted(d1.w_keys[a])) for a in range(n)]
        wrows2 = [tuple(sorted(d2.w_keys[a])) for a in range(n)]
    candidates = []
    for a in range(n):
        options = [
            b
            for b in range(n)
            if d1.dims[a] == d2.dims[b]
            and d1.t_keys[a] == d2.t_keys[b]
            and rows1[a] == rows2[b]
            and (wrows1 is None or wrows1[a] == wrows2[b])
        ]
        if a == 0:
            options = [b for b in options if b == 0]
        if not options:
            return d1.labels[a]
        candidates.append(options)
    return candidates


def equivalence_search(d1: TheoryData, d2: TheoryData) -> SearchResult:
    """Decide whether a bijection pi exists with T_pi(a) = T_a,
    S_pi(a)pi(b) = S_ab, and (when supplied) W_pi(a)pi(b) = W_ab, with
    pi fixing the unit.  Backtracking over fingerprint-pruned candidate
    sets; returns a witness permutation when one exists."""
    if len(d1.labels) != len(d2.labels):
        return SearchResult(False, None, 0, "different object counts")
    n = len(d1.labels)
    candidates = _candidate_sets(d1, d2)
    if isinstance(candidates, str):
        return SearchResult(
            False, None, 0, f"no fingerprint-compatible image for {candidates}"
        )
    order = sorted(range(n), key=lambda a: len(candidates[a]))
    assignment: dict[int, int] = {}
    used = [False] * n
    nodes = 0

    use_w = d1.w_keys is not None and d2.w_keys is not None

    def feasible(a: int, b: int) -> bool:
        for a2, b2 in assignment.items():
            if d1.s_keys[a][a2] != d2.s_keys[b][b2]:
                return False
            if use_w and d1.w_keys[a][a2] != d2.w_keys[b][b2]:
                return False
        return True

    def search(depth: int) -> bool:
        nonlocal nodes
        if depth == n:
            return True
        a = order[depth]
        for b in candidates[a]:
            if used[b] or not feasible(a, b):
                continue
            nodes += 1
            assignment[a] = b
            used[b] = True
            if search(depth + 1):
                return True
            del assignment[a]
            used[b] = False
        return False

    if search(0):
        perm = tuple(assignment[a] for a in range(n))
        return SearchResult(True, perm, nodes, "witness permutation found")
    return SearchResult(False, None, nodes, "search space exhausted")


@dataclass(frozen=True)
class ObstructionCertificate:
    """A human-readable inequivalence proof localized at two objects.

    The twists alone force the anchor's image into `anchor_images` and
    the labelled object's image into `t_allowed`.  Equality of the
    single W entry at (anchor, label) then forces the labelled object's
    image into `w_required`.  An empty intersection of `t_allowed` with
    `w_required` rules out every permutation matching both T and W."""

    label: str
    anchor: str
    anchor_images: tuple[str, ...]
    t_allowed: tuple[str, ...]
    w_required: tuple[str, ...]
    compatible: tuple[str, ...]


def obstruction_certificate(
    d1: TheoryData, d2: TheoryData, label: str = "A_1_4", anchor: str = "B_1_0"
) -> ObstructionCertificate:
    """Build the local T-versus-W obstruction between two theories."""
    if d1.w_keys is None or d2.w_keys is None:
        raise ValueError("obstruction certificate needs W data on both sides")
    n = len(d1.labels)
    a = d1.labels.index(label)
    anc = d1.labels.index(anchor)

    def t_images(i: int) -> tuple[str, ...]:
        return tuple(
            d2.labels[b]
            for b in range(n)
            if d1.dims[i] == d2.dims[b] and d1.t_keys[i] == d2.t_keys[b]
        )

    anchor_images = t_images(anc)
    t_allowed = t_images(a)
    w_key = d1.w_keys[anc][a]
    anchor_idx = [d2.labels.index(b) for b in anchor_images]
    w_required = tuple(
        d2.labels[x]
        for x in range(n)
        if d1.dims[a] == d2.dims[x]
        and any(d2.w_keys[b][x] == w_key for b in anchor_idx)
    )
    compatible = tuple(x for x in t_allowed if x in w_required)
    return ObstructionCertificate(
        label=label,
        anchor=anchor,
        anchor_images=anchor_images,
        t_allowed=t_allowed,
        w_required=w_required,
        compatible=compatible,
    )


def partition_theories(datas: list[TheoryData]) -> list[tuple[str, ...]]:
    """Group theories into equivalence classes by pairwise search."""
    classes: list[list[int]] = []
    for i in range(len(datas)):
        for group in classes:
            if equivalence_search(datas[group[0]], datas[i]).equivalent:
                group.append(i)
                break
        else:
            classes.append([i])
    return [tuple(datas[i].name for i in group) for group in classes]


# ----- serialization --------------------------------------------------------------


def modular_data_to_json(md: ModularData) -> dict:
    """JSON document of the exact modular data (plus float previews)."""
    spec = md.params.spec
    return {
        "group": {"q": spec.q, "p": spec.p, "n": spec.n},
        "u": md.params.u,
        "labels": list(md.labels),
        "dims": [int(d) for d in md.dims],
        "total_dim": md.total_dim,
        "c_mod_8": md.c_mod_8,
        "T": [md.twist(a).to_json() for a in range(md.n_objects)],
        "S": [
            [md.s_entry(a, b).to_json() for b in range(md.n_objects)]
            for a in range(md.n_objects)
        ],
    }


def w_matrix_to_json(wm: WMatrix) -> dict:
    """JSON document of the W-matrix (and the retained W-tilde)."""
    n = len(wm.labels)
    return {
        "group": {
            "q": wm.params.spec.q,
            "p": wm.params.spec.p,
            "n": wm.params.spec.n,
        },
        "u": wm.params.u,
        "word": wm.word_text,
        "mirror": wm.mirror,
        "labels": list(wm.labels),
        "W": [[wm.w_entry(a, b).to_json() for b in range(n)] for a in range(n)],
        "W_tilde": [
            [wm.w_tilde_entry(a, b).to_json() for b in range(n)] for a in range(n)
        ],
    }


def write_json(document: dict, path: str) -> None:
    with open(path, "w") as handle:
        json.dump(document, handle, indent=2, sort_keys=True)
        handle.write("\n")


def write_matrix_csv(matrix: list[list[CycloNumber]], labels, path: str) -> None:
    """Float-preview CSV (real and imaginary parts); display only."""
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["row", "col", "re", "im"])
        for la, row in zip(labels, matrix):
            for lb, value in zip(labels, row):
                z = value.to_complex()
                writer.writerow([la, lb, f"{z.real:.12f}", f"{z.imag:.12f}"])

"""Symmetric pairs from multiplication operators of a Jordan algebra.

For a unital algebra J with injective u -> T_u, let V0 be the
trace-zero subspace {u : tr T_u = 0}, p = {T_X : X in V0} and
k = span{[T_X, T_Y] : X, Y in V0}.  Then g = k (+) p is a Lie algebra of
operators on J and (g, k) is a symmetric pair:

    [k, k] <= k,   [k, p] <= p,   [p, p] <= k,

with k acting by derivations that kill the unit element and are skew
for the trace form.  :func:`restricted_pair` builds the pair with exact
integer arithmetic; :func:`check_pair` re-verifies every relation and
returns a report.

The bracket computations stay in scaled-integer form throughout: the
algebra's multiplication operators share one denominator, so commutators
and products compare exactly as integer matrices.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import exactla as la
from .config import RATIONAL
from .jordan import JordanAlgebra, JordanError, NotUnitalError
from .reports import CheckResult, VerificationReport


class PairError(JordanError):
    pass


@dataclass
class SymmetricPair:
    """The operator pair (k, p) attached to a Jordan algebra.

    All operator matrices are integer numpy arrays over a single
    denominator per block: ``p_ops / p_den`` are the multiplication
    operators of the trace-zero basis ``v0`` and ``k_ops / k_den`` the
    chosen commutator basis of k.  ``k_pairs`` names the generator pair
    (indices into v0) behind every k basis element.
    """

    algebra: JordanAlgebra
    v0: tuple            # basis of the trace-zero subspace (int vectors)
    p_ops: np.ndarray    # stack (dim_p, n, n)
    p_den: int
    k_ops: np.ndarray    # stack (dim_k, n, n)
    k_den: int
    k_pairs: tuple       # (i, j) per k basis element

    @property
    def dim_p(self):
        return len(self.v0)

    @property
    def dim_k(self):
        return len(self.k_ops)

    @property
    def dim_g(self):
        return self.dim_k + self.dim_p

    def k_element(self, coeffs):
        """Fraction matrix for a combination of the k basis."""
        acc = np.tensordot(np.array([int(c) for c in coeffs]),
                           self.k_ops, axes=1)
        return tuple(tuple(Fraction(int(x), self.k_den) for x in row)
                     for row in acc)


def _unit_vector(j):
    e = j.unity()
    ints, den = la.clear_denominators_vec(e)
    return np.array(ints, dtype=np.int64), den


def _trace_zero_basis(j):
    """Integer basis of {u : tr T_u = 0}."""
    tr, _ = j._basis_traces()
    n = j.dim
    p = next((i for i, t in enumerate(tr) if t), None)
    if p is None:
        raise PairError(f"{j.name}: every multiplication operator is "
                        "traceless, so the trace form degenerates")
    out = []
    for i in range(n):
        if i == p:
            continue
        v = [0] * n
        v[i] = tr[p]
        v[p] = -tr[i]
        g = 0
        for x in v:
            g = abs(x) if g == 0 else np.gcd(g, abs(x))
        out.append(tuple(x // int(g) for x in v))
    return tuple(out)


def _operator_stack(j, vectors):
    """Integer T_X stack over a common denominator for integer vectors."""
    if not vectors:
        _, den = j._t_stack()
        return np.zeros((0, j.dim, j.dim), dtype=np.int64), den
    mats = []
    den = None
    for v in vectors:
        frac = tuple(Fraction(x) for x in v)
        m, d = j._t_int(frac)
        if den is None:
            den = d
        elif d != den:
            raise PairError("operator denominators diverged")
        mats.append(np.asarray(m, dtype=np.int64) if not isinstance(
            m, np.ndarray) else m)
    return np.stack(mats), den


def restricted_pair(j):
    """Build the symmetric pair of the trace-zero multiplication operators.

    Requires rational mode and a unit element.  k is found by certified
    integer rank selection among the commutators of the p basis.
    """
    if j.mode != RATIONAL:
        raise PairError("symmetric pairs are extracted in rational mode")
    j.unity()
    v0 = _trace_zero_basis(j)
    p_ops, p_den = _operator_stack(j, v0)
    n = j.dim
    npairs = len(v0) * (len(v0) - 1) // 2
    if npairs == 0:
        k_ops = np.zeros((0, n, n), dtype=np.int64)
        return SymmetricPair(j, v0, p_ops, p_den, k_ops, p_den * p_den, ())
    gens = np.empty((npairs, n, n), dtype=np.int64)
    pairs = []
    at = 0
    # commutators in pure int64 with an overflow guard
    bound = n * int(np.max(np.abs(p_ops)) or 0) ** 2 * 2
    if bound >= 2 ** 62:
        raise PairError("operator entries too large for the integer path")
    for a in range(len(v0) - 1):
        ta = p_ops[a]
        prod = np.einsum("ab,ibc->iac", ta, p_ops[a + 1:]) \
            - np.einsum("iab,bc->iac", p_ops[a + 1:], ta)
        cnt = len(v0) - a - 1
        gens[at:at + cnt] = prod
        pairs.extend((a, b) for b in range(a + 1, len(v0)))
        at += cnt
    flat = gens.reshape(npairs, n * n)
    idx, rank = la.independent_rows(flat)
    k_ops = gens[list(idx)].copy()
    k_pairs = tuple(pairs[i] for i in idx)
    return SymmetricPair(j, v0, p_ops, p_den, k_ops, p_den * p_den,
                         k_pairs)


def _max_abs_arr(a):
    return int(np.max(np.abs(a))) if a.size else 0


def check_pair(pair, n_samples=3, seed=0):
    """Verify every defining relation of the pair, exactly.

    Checks: independence of the k basis and of k (+) p, the span
    [p, p] = k, the derivation identity [Phi, T_u] = T_{Phi(u)} with
    Phi(u) trace-zero, Phi(e) = 0, skewness of k for the trace form,
    a seeded sample of k-k brackets re-expanded in the k basis, and
    injectivity of u -> T_u.
    """
    t_start = time.monotonic()
    j = pair.algebra
    n = j.dim
    report = VerificationReport(target=f"pair({j.name})", mode=j.mode,
                                checks=[])
    k, p = pair.k_ops, pair.p_ops
    dim_k, dim_p = pair.dim_k, pair.dim_p

    # independence and direct sum
    if dim_k + dim_p == 0:
        rank_kp = 0
    else:
        kp = np.concatenate(
            [k.reshape(len(k), n * n) * pair.p_den,
             p.reshape(len(p), n * n) * pair.k_den], axis=0)
        rank_kp = la.int_rank(kp)
    report.add(CheckResult(
        name="k_p_direct_sum", passed=rank_kp == dim_k + dim_p,
        max_residual=dim_k + dim_p - rank_kp,
        details={"dim_k": dim_k, "dim_p": dim_p, "rank": rank_kp}))

    # [p, p] inside span(k): all commutators of p basis pairs
    npairs = dim_p * (dim_p - 1) // 2
    if npairs:
        gens = np.empty((npairs, n * n), dtype=np.int64)
        at = 0
        for a in range(dim_p - 1):
            ta = p[a]
            prod = np.einsum("ab,ibc->iac", ta, p[a + 1:]) \
                - np.einsum("iab,bc->iac", p[a + 1:], ta)
            gens[at:at + len(prod)] = prod.reshape(len(prod), -1)
            at += len(prod)
        stacked = np.concatenate([k.reshape(dim_k, -1), gens], axis=0)
        rank_all = la.int_rank(stacked)
        report.add(CheckResult(
            name="pp_spans_k", passed=rank_all == dim_k,
            max_residual=rank_all - dim_k,
            details={"generators": npairs, "dim_k": dim_k}))
    else:
        report.add(CheckResult(name="pp_spans_k", passed=dim_k == 0))

    # derivation identity in operator form: for every k basis element
    # Phi and every algebra basis vector b_i,
    #   Phi T_{b_i} - T_{b_i} Phi = T_{Phi(b_i)}.
    st, s_den = j._t_stack()
    st = np.asarray(st, dtype=np.int64)
    ms, mk = _max_abs_arr(st), _max_abs_arr(k)
    if n * ms * mk * 2 >= 2 ** 62:
        raise PairError("derivation check exceeds the integer guard")
    if dim_k:
        lhs = np.einsum("kab,ibc->kiac", k, st) \
            - np.einsum("iab,kbc->kiac", st, k)
        rhs = np.einsum("kji,jac->kiac", k, st)
        worst = _max_abs_arr(lhs - rhs)
        # common denominator: k carries k_den, st carries s_den on both
        # sides, so the integer difference is exact
        report.add(CheckResult(
            name="derivation_identity", passed=worst == 0,
            max_residual=Fraction(worst, pair.k_den * s_den),
            samples=dim_k * n))
    else:
        report.add(CheckResult(name="derivation_identity", passed=True))

    # k kills the unit
    e_int, _ = _unit_vector(j)
    ke = np.einsum("kab,b->ka", k, e_int) if dim_k else np.zeros((0, n))
    worst_e = _max_abs_arr(ke)
    report.add(CheckResult(
        name="k_kills_unity", passed=worst_e == 0,
        max_residual=Fraction(worst_e, pair.k_den)))

    # skewness for the trace form: (G Phi)^T = -G Phi
    g = j.gram()
    g_int, g_den = la.clear_denominators([list(r) for r in g])
    g_arr = np.array(g_int, dtype=np.int64)
    if dim_k:
        gk = np.einsum("ab,kbc->kac", g_arr, k)
        worst_skew = _max_abs_arr(gk + gk.transpose(0, 2, 1))
        report.add(CheckResult(
            name="k_skew_for_trace_form", passed=worst_skew == 0,
            max_residual=Fraction(worst_skew, g_den * pair.k_den)))
    else:
        report.add(CheckResult(name="k_skew_for_trace_form", passed=True))

    # [k, p] lands in p: Phi(X) is trace-zero for X in v0, and the
    # derivation identity above already wrote [Phi, T_X] as T_{Phi(X)}
    tr, tr_den = j._basis_traces()
    tr_arr = np.array(tr, dtype=np.int64)
    if dim_k:
        v0_arr = np.array(pair.v0, dtype=np.int64).T
        kx = np.einsum("kab,bi->kai", k, v0_arr)
        worst_tr = _max_abs_arr(np.einsum("kai,a->ki", kx, tr_arr))
        report.add(CheckResult(
            name="kp_in_p", passed=worst_tr == 0,
            max_residual=Fraction(worst_tr, pair.k_den * tr_den),
            samples=dim_k * dim_p))
    else:
        report.add(CheckResult(name="kp_in_p", passed=True))

    # seeded sample of k-k brackets, re-expanded in the k basis
    rng = random.Random(seed)
    ok_kk = True
    tried = 0
    if dim_k >= 2:
        kmat = [tuple(Fraction(int(x)) for x in row)
                for row in k.reshape(dim_k, -1).T]
        for _ in range(n_samples):
            a, b = rng.sample(range(dim_k), 2)
            br = k[a] @ k[b] - k[b] @ k[a]
            rhs = tuple(Fraction(int(x), pair.k_den) for x in br.reshape(-1))
            sol = la.solve_tall(kmat, rhs)
            tried += 1
            if sol is None:
                ok_kk = False
                break
    report.add(CheckResult(name="kk_in_k", passed=ok_kk, samples=tried,
                           seed=seed))

    # effectiveness: T is injective, k kills e, and V = R e (+) V0,
    # so an element of k vanishing on V0 vanishes everywhere
    inj = j.is_nondegenerate()
    tr_e = sum(t * int(x) for t, x in zip(tr, e_int))
    report.add(CheckResult(
        name="effective", passed=bool(inj) and tr_e != 0 and worst_e == 0,
        details={"t_injective": inj, "unit_trace_nonzero": tr_e != 0}))

    report.elapsed_ms = (time.monotonic() - t_start) * 1000.0
    return report

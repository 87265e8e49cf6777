"""Equiaffine hypersphere models carried by unital Jordan algebras.

A unital algebra J of dimension n+1 with nondegenerate trace form
carries a level-set hypersurface

    M = { x : det P_x = (C^2)^(n+1) }

through the base point o = C e, where the scale C depends only on n and
the target affine mean curvature L1 != 0:

    C = -sign(L1) * sqrt(n+1) * ((n+1) |L1|)^(-(n+2)/2),

so C^2 = (n+1)^-(n+1) * |L1|^-(n+2) is rational whenever L1 is.  The
tangent space at o is the trace-zero subspace V0, and the Blaschke data
pulled back to V0 is algebraic:

    g(X, Y)  = -<X, Y> / ((n+1) L1)          (affine metric),
    A(X, Y)  = X o Y - tr(T_{X o Y})/(n+1) e (difference tensor),
    S        = L1 * Id                        (shape operator),
    xi_o     = -L1 C e                        (affine normal at o).

The curvature R(X, Y) = -[T_X, T_Y] restricted to V0 satisfies the
Gauss equation of an affine hypersphere,

    R(X, Y)Z = L1 (g(Y, Z) X - g(X, Z) Y) - [A_X, A_Y] Z,

which :func:`verify_model` certifies exactly, along with apolarity,
total symmetry of the cubic form, nondegeneracy of g, the quadratic
expansion P_{e + h X} = I + 2 h T_X + h^2 (2 T_X^2 - T_{X^2}) behind
the tangency of V0, and an exact product reconstruction from (g, A,
L1).  Floating-point orbit sampling confirms the level-set value.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import exactla as la
from .config import RATIONAL, TOL
from .jordan import JordanAlgebra, JordanError
from .reports import CheckResult, VerificationReport
from .structure import _trace_zero_basis, _operator_stack

_INT64_SAFE = 2 ** 62


class ModelError(JordanError):
    pass


def scale_constant(n, l1):
    """(C^2, float C with sign, sign) for ambient dimension n+1."""
    l1 = la.as_fraction(l1)
    if l1 == 0:
        raise ModelError("the mean curvature parameter must be nonzero")
    c_sq = Fraction(1, (n + 1) ** (n + 1)) / (abs(l1) ** (n + 2))
    sign = -1 if l1 > 0 else 1
    return c_sq, sign * math.sqrt(float(c_sq)), sign


@dataclass
class HypersurfaceModel:
    """Blaschke data of the level-set hypersphere of an algebra."""

    algebra: JordanAlgebra
    l1: Fraction
    n: int                    # hypersurface dimension (= dim - 1)
    c_squared: Fraction
    c_float: float
    v0: tuple                 # integer basis of the trace-zero subspace
    g_v0: tuple               # affine metric on the v0 basis (Fractions)
    _ints: dict = field(default_factory=dict, repr=False)

    @property
    def level_value(self):
        """Exact value of det P_x on the hypersurface."""
        return self.c_squared ** (self.n + 1)

    def metric_signature(self):
        if self.n == 0:
            return (0, 0, 0)
        return la.inertia(self.g_v0)

    def affine_normal(self):
        """The normal at the base point, exactly -L1 C e."""
        j = self.algebra
        e = j.unity()
        ef = np.array([float(x) for x in e])
        return {
            "coefficient_times_c": -self.l1,
            "c_float": self.c_float,
            "vector_float": -float(self.l1) * self.c_float * ef,
        }

    def base_point(self):
        j = self.algebra
        return self.c_float * np.array([float(x) for x in j.unity()])

    # -- integer stacks ---------------------------------------------------

    def _stacks(self):
        """Integer T and A stacks over the v0 basis plus denominators."""
        if self._ints:
            return self._ints
        j = self.algebra
        nn = j.dim
        t_ops, t_den = _operator_stack(j, self.v0)
        e_int, e_den = la.clear_denominators_vec(j.unity())
        e_arr = np.array(e_int, dtype=np.int64)
        g_rows = [list(r) for r in j.gram()]
        g_int, g_den = la.clear_denominators(g_rows)
        g_arr = np.array(g_int, dtype=np.int64)
        v0_arr = np.array(self.v0, dtype=np.int64) if self.n else \
            np.zeros((0, nn), dtype=np.int64)
        outer_den = e_den * g_den * nn
        d = t_den * outer_den // math.gcd(t_den, outer_den)
        if self.n:
            w = np.einsum("ab,ib->ia", g_arr, v0_arr)
            outer = e_arr[None, :, None] * w[:, None, :]
            bound = (d // t_den) * int(np.max(np.abs(t_ops)) or 0) \
                + (d // outer_den) * int(np.max(np.abs(outer)) or 0)
            if bound >= _INT64_SAFE:
                raise ModelError("difference tensor exceeds integer range")
            a_ops = (d // t_den) * t_ops - (d // outer_den) * outer
        else:
            a_ops = np.zeros((0, nn, nn), dtype=np.int64)
        self._ints = {
            "t_ops": t_ops, "t_den": t_den, "a_ops": a_ops, "a_den": d,
            "e": e_arr, "e_den": e_den, "g": g_arr, "g_den": g_den,
            "v0": v0_arr,
        }
        return self._ints

    # -- exact checks ------------------------------------------------------

    def check_metric(self):
        pos, neg, zero = self.metric_signature()
        return CheckResult(
            name="metric_nondegenerate", passed=zero == 0,
            max_residual=zero,
            details={"signature": (pos, neg), "dim": self.n})

    def check_difference_tensor(self):
        """A maps V0 x V0 into V0 and has vanishing trace (apolarity)."""
        s = self._stacks()
        j = self.algebra
        tr, tr_den = j._basis_traces()
        tr_arr = np.array(tr, dtype=np.int64)
        if self.n == 0:
            return CheckResult(name="difference_tensor_into_v0",
                               passed=True)
        img = np.einsum("iab,jb->ija", s["a_ops"], s["v0"])
        worst_tr = int(np.max(np.abs(np.einsum("ija,a->ij", img, tr_arr)))
                       ) if img.size else 0
        diag = int(np.max(np.abs(np.einsum("iaa->i", s["a_ops"]))))
        passed = worst_tr == 0 and diag == 0
        return CheckResult(
            name="difference_tensor_into_v0", passed=passed,
            max_residual=Fraction(max(worst_tr, diag),
                                  s["a_den"] * tr_den),
            samples=self.n * self.n,
            details={"apolarity_residual": Fraction(diag, s["a_den"])})

    def check_cubic_form(self):
        """g(A(X,Y), Z) is symmetric in all three arguments."""
        if self.n == 0:
            return CheckResult(name="cubic_form_symmetric", passed=True)
        s = self._stacks()
        img = np.einsum("iab,jb->ija", s["a_ops"], s["v0"])
        mx = int(np.max(np.abs(img)) or 0)
        bound = self.algebra.dim ** 2 * mx \
            * int(np.max(np.abs(s["g"])) or 0) \
            * int(np.max(np.abs(s["v0"])) or 1)
        if bound >= _INT64_SAFE:
            raise ModelError("cubic form check exceeds integer range")
        cub = np.einsum("ija,ab,kb->ijk", img, s["g"], s["v0"])
        worst = 0
        for perm in ((0, 2, 1), (1, 0, 2), (2, 1, 0)):
            worst = max(worst, int(np.max(np.abs(
                cub - cub.transpose(perm)))))
        return CheckResult(
            name="cubic_form_symmetric", passed=worst == 0,
            max_residual=Fraction(worst, s["a_den"] * s["g_den"]),
            samples=self.n ** 3)

    def check_gauss(self):
        """R(X,Y) = L1 (g(Y,.)X - g(X,.)Y) - [A_X, A_Y] on V0, exactly."""
        if self.n < 2:
            return CheckResult(name="gauss_equation", passed=True)
        s = self._stacks()
        t_ops, a_ops, g_arr, v0 = (s["t_ops"], s["a_ops"], s["g"],
                                   s["v0"])
        nn = self.algebra.dim
        den_t = s["t_den"] ** 2
        den_a = s["a_den"] ** 2
        den_g = s["g_den"] * nn
        d = den_t
        for x in (den_a, den_g):
            d = d * x // math.gcd(d, x)
        ft, fa, fg = d // den_t, d // den_a, d // den_g
        w = np.einsum("ab,ib->ia", g_arr, v0)
        mt = int(np.max(np.abs(t_ops)) or 0)
        ma = int(np.max(np.abs(a_ops)) or 0)
        mg = int(np.max(np.abs(w)) or 0)
        mv = int(np.max(np.abs(v0)) or 1)
        bound = (2 * ft * nn * mt * mt + 2 * fa * nn * ma * ma
                 + 2 * fg * mv * mg) * nn * mv
        use_int = bound < _INT64_SAFE
        worst = Fraction(0)
        count = 0
        for a in range(self.n - 1):
            rest = slice(a + 1, self.n)
            if use_int:
                comm_t = np.einsum("ab,ibc->iac", t_ops[a], t_ops[rest]) \
                    - np.einsum("iab,bc->iac", t_ops[rest], t_ops[a])
                comm_a = np.einsum("ab,ibc->iac", a_ops[a], a_ops[rest]) \
                    - np.einsum("iab,bc->iac", a_ops[rest], a_ops[a])
                rank2 = v0[a][None, :, None] * w[rest][:, None, :] \
                    - v0[rest][:, :, None] * w[a][None, None, :]
                res = -ft * comm_t + fg * rank2 + fa * comm_a
                resv = np.einsum("iab,jb->ija", res, v0)
                m = int(np.max(np.abs(resv))) if resv.size else 0
                worst = max(worst, Fraction(m, d))
                count += resv.shape[0] * resv.shape[1]
            else:
                worst, count = self._gauss_pair_slow(a, worst, count)
        return CheckResult(
            name="gauss_equation", passed=worst == 0, max_residual=worst,
            samples=count)

    def _gauss_pair_slow(self, a, worst, count):
        j = self.algebra
        nn = j.dim
        xs = [la.fvec(v) for v in self.v0]
        g = j.gram()
        ta = j.t_operator(xs[a])
        aa = self._a_operator_frac(a)
        for b in range(a + 1, self.n):
            tb = j.t_operator(xs[b])
            ab = self._a_operator_frac(b)
            comm_t = la.mat_sub(la.mat_mul(ta, tb), la.mat_mul(tb, ta))
            comm_a = la.mat_sub(la.mat_mul(aa, ab), la.mat_mul(ab, aa))
            wa = la.mat_vec(g, xs[a])
            wb = la.mat_vec(g, xs[b])
            rank2 = tuple(tuple(
                (xs[a][r] * wb[c] - xs[b][r] * wa[c]) / nn
                for c in range(nn)) for r in range(nn))
            res = la.mat_add(la.mat_sub(rank2, comm_t), comm_a)
            for v in xs:
                img = la.mat_vec(res, v)
                worst = max(worst, max((abs(x) for x in img),
                                       default=Fraction(0)))
            count += self.n
        return worst, count

    def _a_operator_frac(self, a):
        s = self._stacks()
        d = Fraction(1, s["a_den"])
        return tuple(tuple(d * int(x) for x in row)
                     for row in s["a_ops"][a])

    def check_quadratic_expansion(self, hs=(Fraction(1, 3), Fraction(2),
                                            Fraction(-1, 5))):
        """P_{e+hX} = I + 2h T_X + h^2 (2 T_X^2 - T_{X^2}), so the level
        function has vanishing first-order term along V0 at the base
        point and V0 is the tangent space there."""
        j = self.algebra
        e = j.unity()
        worst = Fraction(0)
        tangency = Fraction(0)
        count = 0
        for idx in range(min(self.n, 6)):
            x = la.fvec(self.v0[idx])
            tx = j.t_operator(x)
            tx2 = j.t_operator(j.square(x))
            quad = la.mat_sub(la.mat_scale(2, la.mat_mul(tx, tx)), tx2)
            tangency = max(tangency, abs(sum(tx[i][i]
                                             for i in range(j.dim))))
            for h in hs:
                u = tuple(a + h * b for a, b in zip(e, x))
                p = j.p_operator(u)
                ident = la.identity(j.dim)
                pred = la.mat_add(
                    ident, la.mat_add(la.mat_scale(2 * h, tx),
                                      la.mat_scale(h * h, quad)))
                r = max((abs(x1 - x2) for r1, r2 in zip(p, pred)
                         for x1, x2 in zip(r1, r2)), default=Fraction(0))
                worst = max(worst, r)
                count += 1
        return CheckResult(
            name="tangent_quadratic_expansion",
            passed=worst == 0 and tangency == 0,
            max_residual=max(worst, tangency), samples=count,
            details={"first_order_trace": tangency})

    def check_reconstruction(self):
        """The product is recovered from (g, A, L1) on the basis e, V0.

        Verifies e o e = e, e o X = X and the ambient identity
        X o Y = A(X, Y) - L1 g(X, Y) e over the v0 basis, which is the
        full multiplication table in the adapted basis.  The L1 factors
        cancel exactly: -L1 g(X, Y) = <X, Y> / (n+1).
        """
        j = self.algebra
        nn = j.dim
        e = j.unity()
        worst = Fraction(0)
        ee = j.product(e, e)
        worst = max(worst, max((abs(x - y) for x, y in zip(ee, e)),
                               default=Fraction(0)))
        if self.n == 0:
            return CheckResult(name="reconstruction_roundtrip",
                               passed=worst == 0, max_residual=worst,
                               samples=1)
        s = self._stacks()
        v0, e_arr = s["v0"], s["e"]
        ci, cden = j._int_tensor()
        ci = np.asarray(ci, dtype=np.int64)
        ex = np.einsum("ijk,j->ik", ci, e_arr) @ v0.T - \
            cden * s["e_den"] * v0.T
        worst = max(worst, Fraction(
            int(np.max(np.abs(ex))) if ex.size else 0,
            cden * s["e_den"]))
        mv = int(np.max(np.abs(v0)) or 1)
        bound = nn * nn * int(np.max(np.abs(ci)) or 0) * mv * mv
        if bound >= _INT64_SAFE:
            raise ModelError("reconstruction check exceeds integer range")
        prod = np.einsum("ijk,ai,bj->abk", ci, v0, v0)
        img = np.einsum("aij,bj->abi", s["a_ops"], v0)
        gv0 = v0 @ s["g"] @ v0.T
        unit_term = gv0[:, :, None] * e_arr[None, None, :]
        den_p = cden
        den_a = s["a_den"]
        den_u = s["g_den"] * nn * s["e_den"]
        d = den_p
        for x in (den_a, den_u):
            d = d * x // math.gcd(d, x)
        res = (d // den_p) * prod - (d // den_a) * img \
            - (d // den_u) * unit_term
        worst = max(worst, Fraction(int(np.max(np.abs(res))), d))
        return CheckResult(
            name="reconstruction_roundtrip", passed=worst == 0,
            max_residual=worst, samples=self.n * self.n + self.n + 1)

    # -- floating point sampling -------------------------------------------

    def sample_points(self, count=8, seed=0, steps=2, scale=0.35):
        """Orbit points C exp(T_{Y_1}) ... exp(T_{Y_k}) e on the level set."""
        from scipy.linalg import expm

        j = self.algebra
        jf = j.to_float()
        ef = np.array([float(x) for x in j.unity()])
        rng = random.Random(seed)
        if self.n == 0:
            return np.tile(self.c_float * ef, (count, 1))
        v0f = np.array(self.v0, dtype=np.float64)
        out = np.empty((count, j.dim))
        for s in range(count):
            x = ef.copy()
            for _ in range(steps):
                coeff = np.array([rng.uniform(-scale, scale)
                                  for _ in range(self.n)])
                y = coeff @ v0f
                y /= max(1.0, np.linalg.norm(y))
                x = expm(np.asarray(jf.t_operator(y))) @ x
            out[s] = self.c_float * x
        return out

    def log_level_value(self):
        """Natural log of the level value, safe from float underflow."""
        v = self.level_value
        return math.log(v.numerator) - math.log(v.denominator)

    def check_level(self, count=8, seed=0, steps=2):
        """det P_x at sampled orbit points against the exact level value.

        The comparison runs in log space (a log difference is a relative
        error of the value) because the level value underflows float64
        already in middling dimensions.
        """
        jf = self.algebra.to_float()
        pts = self.sample_points(count=count, seed=seed, steps=steps)
        log_target = self.log_level_value()
        worst = 0.0
        sign_ok = True
        for x in pts:
            t = np.asarray(jf.t_operator(x))
            p = 2.0 * (t @ t) - np.asarray(jf.t_operator(jf.square(x)))
            sign, logabs = np.linalg.slogdet(p)
            sign_ok = sign_ok and sign > 0
            worst = max(worst, abs(logabs - log_target))
        return CheckResult(
            name="level_set_samples",
            passed=sign_ok and worst <= TOL.level,
            max_residual=worst, samples=count, seed=seed,
            details={"log_level_value": log_target,
                     "positive_branch": sign_ok})


def reconstruct_algebra(model):
    """Rebuild the algebra from model data alone, in the basis (e, V0).

    Returns a new :class:`JordanAlgebra` whose products come from
    X o Y = A(X, Y) - L1 g(X, Y) e with e adjoined as unit.  Exact
    Fraction arithmetic throughout; intended for small dimensions.
    """
    j = model.algebra
    nn = j.dim
    e = j.unity()
    cols = [e] + [la.fvec(v) for v in model.v0]
    bmat = tuple(tuple(cols[c][r] for c in range(nn)) for r in range(nn))
    binv = la.inverse(bmat)
    if binv is None:
        raise ModelError("unit and trace-zero basis do not span")
    zero = Fraction(0)
    c = [[None] * nn for _ in range(nn)]
    for i in range(nn):
        c[0][i] = tuple(Fraction(1) if t == i else zero
                        for t in range(nn))
        c[i][0] = c[0][i]
    for a in range(model.n):
        aop = model._a_operator_frac(a)
        for b in range(model.n):
            img = la.mat_vec(aop, la.fvec(model.v0[b]))
            coords = la.mat_vec(binv, img)
            lam = -model.l1 * model.g_v0[a][b]
            c[1 + a][1 + b] = (coords[0] + lam,) + tuple(coords[1:])
    return JordanAlgebra(
        c, name=f"rebuilt({j.name})",
        meta={"rebuilt_from": j.name, "l1": str(model.l1)})


def adapted_constants(model):
    """Structure constants of the original algebra over (e, V0).

    Computed independently of :func:`reconstruct_algebra`: products of
    the adapted basis vectors are taken in the original coordinates and
    converted back with the basis inverse, so comparing the two tensors
    certifies the reconstruction entry by entry.
    """
    j = model.algebra
    nn = j.dim
    cols = [j.unity()] + [la.fvec(v) for v in model.v0]
    bmat = tuple(tuple(cols[c][r] for c in range(nn)) for r in range(nn))
    binv = la.inverse(bmat)
    if binv is None:
        raise ModelError("unit and trace-zero basis do not span")
    bi, dbi = la.clear_denominators(binv)
    ci, cden = j._int_tensor()
    b_arr = np.array([[int(x) for x in col] for col in cols],
                     dtype=np.int64)
    bi_arr = np.array([[int(x) for x in row] for row in bi],
                      dtype=np.int64)
    c_arr = np.asarray(ci, dtype=np.int64)
    bound = (nn * int(np.max(np.abs(b_arr)))) ** 2 \
        * max(int(np.max(np.abs(c_arr))), 1) \
        * nn * max(int(np.max(np.abs(bi_arr))), 1)
    if bound >= _INT64_SAFE:
        b_arr = b_arr.astype(object)
        bi_arr = bi_arr.astype(object)
        c_arr = c_arr.astype(object)
    prod = np.einsum("ijk,ai,bj->abk", c_arr, b_arr, b_arr,
                     optimize=True)
    fc = np.einsum("abk,tk->abt", prod, bi_arr)
    den = cden * dbi
    return tuple(
        tuple(tuple(Fraction(int(fc[a, b, t]), den) for t in range(nn))
              for b in range(nn))
        for a in range(nn))


def build_model(j, l1):
    """Attach the hypersphere model with mean curvature ``l1`` to ``j``."""
    if j.mode != RATIONAL:
        raise ModelError("models are built from rational-mode algebras")
    l1 = la.as_fraction(l1)
    e = j.unity()
    n = j.dim - 1
    c_sq, c_f, _ = scale_constant(n, l1)
    ok, sig = j.is_semisimple()
    if not ok:
        raise ModelError(
            f"{j.name}: the trace form is degenerate {sig}; the affine "
            "metric of the model would be degenerate too")
    v0 = _trace_zero_basis(j) if n else ()
    g = j.gram()
    scale = Fraction(-1, (n + 1)) / l1
    g_v0 = tuple(
        tuple(scale * sum(
            Fraction(xa) * g[r][c] * Fraction(xb)
            for r, xa in enumerate(va) if xa
            for c, xb in enumerate(vb) if xb)
            for vb in v0)
        for va in v0)
    return HypersurfaceModel(
        algebra=j, l1=l1, n=n, c_squared=c_sq, c_float=c_f, v0=v0,
        g_v0=g_v0)


def verify_model(j, l1, n_float_samples=6, seed=0):
    """Build the model and certify all of its defining identities."""
    t0 = time.monotonic()
    model = build_model(j, l1)
    report = VerificationReport(
        target=f"model({j.name}, l1={l1})", mode=j.mode, checks=[])
    report.add(model.check_metric())
    report.add(model.check_difference_tensor())
    report.add(model.check_cubic_form())
    report.add(model.check_gauss())
    report.add(model.check_quadratic_expansion())
    report.add(model.check_reconstruction())
    report.add(model.check_level(count=n_float_samples, seed=seed))
    report.elapsed_ms = (time.monotonic() - t0) * 1000.0
    return model, report

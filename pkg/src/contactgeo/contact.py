"""Contact sub-Riemannian structures from a declared orthonormal frame.

Given an oriented frame (A, B) of the rank-2 distribution E, this module
derives the normalized contact form, the Reeb field Z, the taming metrics
g_eps, the almost complex structure J, the symmetric tensor tau, the
canonical connection (parallel Z, simple torsion) and the Levi-Civita
connections of every g_eps, together with their curvature operators.

Everything is evaluated through jet rings, so the same code path produces
plain values, derivatives, and composites along surfaces and curves.  The
construction chain consumes jet orders as follows (seeds of order n):

    A, B : n        [A,B] : n-1       alpha : n-1
    Z    : n-2      g_eps, J : n-2    tau, Christoffels : n-3
    covariant derivatives : n-3       curvature values : seeds 4

The normalized contact form is realized as the covector dual to T = [A, B]
in the frame (A, B, T); this is exactly the normalization d(alpha)(A,B) = -1
since alpha([A,B]) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import DegenerateContact, SingularFrame
from .jets import (
    ConstantVectorField,
    Jet,
    VectorField,
    bracket_jets,
    jet_seeds,
)

__all__ = [
    "ContactFrame",
    "ContactStructure",
    "build_contact",
    "build_euclidean",
    "metric_eps",
    "nabla",
    "nabla_eps",
    "curvature_Reps",
    "curvature_expansion_residuals",
]

_DEGENERACY_TOL = 1e-12


# ---------------------------------------------------------------------------
# small linear algebra over jet entries


def vdot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def vcross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def mat_det(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def mat_inv(m):
    """Inverse of a 3x3 with jet entries via the adjugate; returns (inv, det)."""
    c00 = m[1][1] * m[2][2] - m[1][2] * m[2][1]
    c01 = m[1][2] * m[2][0] - m[1][0] * m[2][2]
    c02 = m[1][0] * m[2][1] - m[1][1] * m[2][0]
    c10 = m[0][2] * m[2][1] - m[0][1] * m[2][2]
    c11 = m[0][0] * m[2][2] - m[0][2] * m[2][0]
    c12 = m[0][1] * m[2][0] - m[0][0] * m[2][1]
    c20 = m[0][1] * m[1][2] - m[0][2] * m[1][1]
    c21 = m[0][2] * m[1][0] - m[0][0] * m[1][2]
    c22 = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    det = m[0][0] * c00 + m[0][1] * c01 + m[0][2] * c02
    inv_det = det.reciprocal() if isinstance(det, Jet) else 1.0 / det
    inv = [
        [c00 * inv_det, c10 * inv_det, c20 * inv_det],
        [c01 * inv_det, c11 * inv_det, c21 * inv_det],
        [c02 * inv_det, c12 * inv_det, c22 * inv_det],
    ]
    return inv, det


def mat_vec(m, v):
    return tuple(vdot(m[i], v) for i in range(3))


def _values(vec):
    return np.stack([np.asarray(c.value if isinstance(c, Jet) else c, dtype=float) for c in vec])


# ---------------------------------------------------------------------------
# frame and structure


@dataclass(frozen=True)
class ContactFrame:
    """Oriented frame (A, B) declared g_E-orthonormal, spanning E."""

    A: VectorField
    B: VectorField
    chart_box: tuple = ((-1.0, 1.0), (-1.0, 1.0), (-1.0, 1.0))
    name: str = "frame"


class Tower:
    """All derived structure objects at one base point (or batch), one ring.

    Attributes are lazy; each is a jet (or tuple/list of jets) in the ring of
    the seeds used to build the tower.
    """

    def __init__(self, structure: "ContactStructure", seeds):
        self.s = structure
        self.seeds = seeds

    @cached_property
    def A(self):
        return tuple(self.s.frame.A.at(self.seeds))

    @cached_property
    def B(self):
        return tuple(self.s.frame.B.at(self.seeds))

    @cached_property
    def T(self):
        """[A, B]; for euclidean structures the chart cross product instead."""
        if self.s.is_contact:
            return bracket_jets(self.A, self.B)
        cross = vcross(self.A, self.B)
        n2 = vdot(cross, cross)
        inv = n2 ** (-0.5)
        return tuple(c * inv for c in cross)

    @cached_property
    def _m3(self):
        cols = [self.A, self.B, self.T]
        return [[cols[j][i] for j in range(3)] for i in range(3)]

    @cached_property
    def _m3_inv_det(self):
        return mat_inv(self._m3)

    @cached_property
    def frame_volume(self):
        """det[A, B, [A,B]] = -d(alpha0)(A, B) for the chart annihilator."""
        return mat_det(self._m3)

    @cached_property
    def alpha(self):
        """Normalized contact form: dual of T in (A, B, T); d(alpha)(A,B) = -1."""
        return tuple(self._m3_inv_det[0][2])

    @cached_property
    def Z(self):
        if not self.s.is_contact:
            return self.T
        bt = bracket_jets(self.T, self.B)
        ta = bracket_jets(self.T, self.A)
        u = -vdot(self.alpha, bt)
        v = vdot(self.alpha, ta)
        return tuple(self.T[k] + u * self.A[k] + v * self.B[k] for k in range(3))

    @cached_property
    def E3(self):
        cols = [self.A, self.B, self.Z]
        return [[cols[j][i] for j in range(3)] for i in range(3)]

    @cached_property
    def _w3_det(self):
        return mat_inv(self.E3)

    @property
    def W3(self):
        """Dual coframe rows (w_A, w_B, w_Z); w_Z coincides with alpha."""
        return self._w3_det[0]

    def coframe(self, vec):
        """Components of a chart vector in the frame (A, B, Z)."""
        return mat_vec(self.W3, vec)

    def metric(self, eps: float):
        w = self.W3
        g = [[None] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(i + 1):
                g[i][j] = g[j][i] = w[0][i] * w[0][j] + w[1][i] * w[1][j] + w[2][i] * w[2][j] * (1.0 / eps)
        return g

    def metric_inv(self, eps: float):
        e = self.E3
        g = [[None] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(i + 1):
                g[i][j] = g[j][i] = e[i][0] * e[j][0] + e[i][1] * e[j][1] + e[i][2] * e[j][2] * eps
        return g

    @cached_property
    def g1(self):
        return self.metric(1.0)

    def ip(self, v, w, eps: float = 1.0):
        g = self.g1 if eps == 1.0 else self.metric(eps)
        return vdot(mat_vec(g, v), w)

    @cached_property
    def J(self):
        w = self.W3
        return [
            [self.B[i] * w[0][j] - self.A[i] * w[1][j] for j in range(3)]
            for i in range(3)
        ]

    @cached_property
    def tau(self):
        if not self.s.is_contact:
            zero = self.seeds[0] * 0.0
            return [[zero] * 3 for _ in range(3)]
        za = bracket_jets(self.Z, self.A)
        zb = bracket_jets(self.Z, self.B)
        t_aa = -self.ip(za, self.A)
        t_bb = -self.ip(zb, self.B)
        t_ab = (self.ip(za, self.B) + self.ip(zb, self.A)) * (-0.5)
        w = self.W3
        return [
            [
                self.A[i] * (t_aa * w[0][j] + t_ab * w[1][j])
                + self.B[i] * (t_ab * w[0][j] + t_bb * w[1][j])
                for j in range(3)
            ]
            for i in range(3)
        ]

    def tau_apply(self, v):
        return mat_vec(self.tau, v)

    def christoffels(self, eps: float):
        """Levi-Civita Christoffel symbols of g_eps in the chart."""
        g = self.metric(eps)
        ginv = self.metric_inv(eps)
        dg = [[[g[i][j].diff(k) for k in range(3)] for j in range(3)] for i in range(3)]
        gamma = [[[None] * 3 for _ in range(3)] for _ in range(3)]
        for k in range(3):
            for i in range(3):
                for j in range(i + 1):
                    acc = None
                    for l in range(3):
                        term = (dg[j][l][i] + dg[i][l][j] - dg[i][j][l]) * ginv[k][l]
                        acc = term if acc is None else acc + term
                    gamma[k][i][j] = gamma[k][j][i] = acc * 0.5
        return gamma

    # -- covariant derivatives ---------------------------------------------

    def dirderiv(self, V, f):
        """Directional derivative of a scalar jet along a jet vector."""
        return V[0] * f.diff(0) + V[1] * f.diff(1) + V[2] * f.diff(2)

    def nabla_lc(self, V, W, eps: float = 1.0, gamma=None):
        """Levi-Civita covariant derivative of W along V (chart fields)."""
        if gamma is None:
            gamma = self.christoffels(eps)
        out = []
        for k in range(3):
            acc = self.dirderiv(V, W[k])
            for i in range(3):
                for j in range(3):
                    acc = acc + gamma[k][i][j] * V[i] * W[j]
            out.append(acc)
        return tuple(out)

    def pr_E(self, V):
        a = vdot(self.alpha, V)
        return tuple(V[k] - a * self.Z[k] for k in range(3)), a

    def nabla_can(self, V, W, gamma1=None):
        """Canonical connection: grad Z = 0, nabla_Z X = [Z,X] + tau X,
        nabla_X Y = pr_E nabla1_X Y for X, Y in E; tensorial first slot."""
        Wh, aW = self.pr_E(W)
        Vh, aV = self.pr_E(V)
        n1 = self.nabla_lc(Vh, Wh, 1.0, gamma1)
        n1h, _ = self.pr_E(n1)
        zw = bracket_jets(self.Z, Wh)
        tw = self.tau_apply(Wh)
        daw = self.dirderiv(V, aW)
        return tuple(n1h[k] + aV * (zw[k] + tw[k]) + daw * self.Z[k] for k in range(3))

    def q_eps(self, V, eps: float):
        jv = mat_vec(self.J, V)
        tv = self.tau_apply(V)
        return tuple(jv[k] * 0.5 - tv[k] * eps for k in range(3))

    def nabla_eps(self, V, W, eps: float, gamma1=None):
        """Levi-Civita of g_eps via the canonical-connection correction."""
        if not self.s.is_contact:
            return self.nabla_lc(V, W, eps)
        base = self.nabla_can(V, W, gamma1)
        qv = self.q_eps(V, eps)
        aW = vdot(self.alpha, W)
        aV = vdot(self.alpha, V)
        s1 = self.ip(qv, W)
        jw = mat_vec(self.J, W)
        return tuple(
            base[k] + s1 * self.Z[k] - (1.0 / eps) * aW * qv[k] - (0.5 / eps) * aV * jw[k]
            for k in range(3)
        )

    def torsion_can(self, V, W):
        nvw = self.nabla_can(V, W)
        nwv = self.nabla_can(W, V)
        br = bracket_jets(V, W)
        return tuple(nvw[k] - nwv[k] - br[k] for k in range(3))

    def curvature(self, V, W, U, eps: float | None):
        """R(V,W)U values; eps=None selects the canonical connection."""
        if eps is None:
            nab = self.nabla_can
        else:
            def nab(x, y):
                return self.nabla_eps(x, y, eps)

        inner_wu = nab(W, U)
        inner_vu = nab(V, U)
        t1 = nab(V, inner_wu)
        t2 = nab(W, inner_vu)
        br = bracket_jets(V, W)
        t3 = nab(br, U)
        return tuple(t1[k] - t2[k] - t3[k] for k in range(3))


class ContactStructure:
    """Immutable bundle of evaluators for one contact (or euclidean) frame."""

    def __init__(self, frame: ContactFrame, is_contact: bool = True):
        self.frame = frame
        self.is_contact = is_contact

    # -- tower access --------------------------------------------------------

    def tower_at(self, p, order: int) -> Tower:
        return Tower(self, jet_seeds(p, order))

    def tower_on(self, seeds) -> Tower:
        """Tower over caller-supplied ring elements (surface/curve composites)."""
        return Tower(self, seeds)

    # -- pointwise evaluators ------------------------------------------------

    def alpha(self, p) -> np.ndarray:
        return _values(self.tower_at(p, 1).alpha)

    def alpha_jets(self, p, order: int):
        return self.tower_at(p, order + 1).alpha

    def reeb(self, p) -> np.ndarray:
        return _values(self.tower_at(p, 2 if self.is_contact else 0).Z)

    def reeb_jets(self, p, order: int):
        return self.tower_at(p, order + (2 if self.is_contact else 0)).Z

    def J_matrix(self, p) -> np.ndarray:
        t = self.tower_at(p, 2 if self.is_contact else 0)
        return np.array([[c.value for c in row] for row in t.J])

    def tau_matrix(self, p) -> np.ndarray:
        t = self.tower_at(p, 3 if self.is_contact else 0)
        return np.array([[np.asarray(c.value if isinstance(c, Jet) else c, dtype=float) for c in row] for row in t.tau])

    def metric_matrix(self, p, eps: float) -> np.ndarray:
        t = self.tower_at(p, 2 if self.is_contact else 0)
        self._check_frame(t)
        return np.array([[c.value for c in row] for row in t.metric(eps)])

    def metric_eps(self, p, v, w, eps: float) -> float:
        """<v, w>_eps by expanding both vectors in the frame (A, B, Z)."""
        t = self.tower_at(p, 2 if self.is_contact else 0)
        self._check_frame(t)
        cv = _values(t.coframe(tuple(np.asarray(v, dtype=float))))
        cw = _values(t.coframe(tuple(np.asarray(w, dtype=float))))
        return float(cv[0] * cw[0] + cv[1] * cw[1] + cv[2] * cw[2] / eps)

    def _check_frame(self, tower: Tower):
        det = tower._w3_det[1]
        val = np.asarray(det.value if isinstance(det, Jet) else det)
        if np.any(np.abs(val) < _DEGENERACY_TOL):
            raise SingularFrame("frame matrix (A, B, Z) is numerically singular")

    @staticmethod
    def _as_field(v) -> VectorField:
        if isinstance(v, VectorField):
            return v
        return ConstantVectorField(np.asarray(v, dtype=float))

    def nabla(self, V, W, p) -> np.ndarray:
        """Canonical-connection derivative of the field W along V at p."""
        depth = 4 if self.is_contact else 2
        t = self.tower_at(p, depth)
        vj = self._as_field(V).at(t.seeds)
        wj = self._as_field(W).at(t.seeds)
        return _values(t.nabla_can(vj, wj))

    def nabla_eps(self, V, W, p, eps: float) -> np.ndarray:
        """Levi-Civita derivative of W along V for g_eps (Q_eps formula)."""
        depth = 4 if self.is_contact else 2
        t = self.tower_at(p, depth)
        vj = self._as_field(V).at(t.seeds)
        wj = self._as_field(W).at(t.seeds)
        return _values(t.nabla_eps(vj, wj, eps))

    def nabla_eps_koszul(self, V, W, p, eps: float) -> np.ndarray:
        """Independent route: Christoffel symbols of g_eps in the chart."""
        depth = 4 if self.is_contact else 2
        t = self.tower_at(p, depth)
        vj = self._as_field(V).at(t.seeds)
        wj = self._as_field(W).at(t.seeds)
        return _values(t.nabla_lc(vj, wj, eps))

    def torsion(self, V, W, p) -> np.ndarray:
        depth = 4 if self.is_contact else 2
        t = self.tower_at(p, depth)
        vj = self._as_field(V).at(t.seeds)
        wj = self._as_field(W).at(t.seeds)
        return _values(t.torsion_can(vj, wj))

    def curvature_Reps(self, V, W, U, p, eps: float) -> np.ndarray:
        """R^eps(V, W)U at p; V, W, U fields (constant extensions welcome)."""
        depth = 4 if self.is_contact else 2
        t = self.tower_at(p, depth)
        vj = self._as_field(V).at(t.seeds)
        wj = self._as_field(W).at(t.seeds)
        uj = self._as_field(U).at(t.seeds)
        return _values(t.curvature(vj, wj, uj, eps))

    def curvature_canonical(self, V, W, U, p) -> np.ndarray:
        t = self.tower_at(p, 4)
        vj = self._as_field(V).at(t.seeds)
        wj = self._as_field(W).at(t.seeds)
        uj = self._as_field(U).at(t.seeds)
        return _values(t.curvature(vj, wj, uj, None))

    # -- curvature expansion identities --------------------------------------

    def curvature_expansion_residuals(self, X, p, eps: float) -> np.ndarray:
        """|LHS - RHS| of the four R^eps expansion identities at p.

        X is a horizontal direction (field or vector); it is projected to E
        and normalized before use, matching the unit-length statement.
        """
        t = self.tower_at(p, 4)
        xj = self._as_field(X).at(t.seeds)
        xh, _ = t.pr_E(xj)
        x0 = _values(xh)
        norm = float(np.sqrt(self.metric_eps(p, x0, x0, 1.0)))
        x0 = x0 / norm

        xc = ConstantVectorField(x0).at(t.seeds)
        y0 = _values(mat_vec(t.J, xc))
        yc = ConstantVectorField(y0).at(t.seeds)
        z = t.Z

        def ip1(a, b):
            return float(np.asarray((t.ip(a, b)).value if isinstance(t.ip(a, b), Jet) else t.ip(a, b)))

        def ip_eps(a, b):
            r = t.ip(a, b, eps)
            return float(np.asarray(r.value if isinstance(r, Jet) else r))

        tau_x = t.tau_apply(xc)
        tau0 = ip1(tau_x, xc)
        tau1 = ip1(tau_x, yc)
        tau_x_sq = ip1(tau_x, tau_x)

        def nabla_tau(direction, vec_const):
            tv = t.tau_apply(vec_const)
            term1 = t.nabla_can(direction, tv)
            ndir = t.nabla_can(direction, vec_const)
            term2 = t.tau_apply(ndir)
            return tuple(term1[k] - term2[k] for k in range(3))

        # identity 1: <R^e(X,JX)JX,X>_e = <R(X,JX)JX,X> - 3/(4e) + e(tau0^2+tau1^2)
        r_eps = t.curvature(xc, yc, yc, eps)
        lhs1 = ip_eps(r_eps, xc)
        r_can = t.curvature(xc, yc, yc, None)
        rhs1 = ip1(r_can, xc) - 3.0 / (4.0 * eps) + eps * (tau0**2 + tau1**2)

        # identity 2: <R^e(X,JX)X,Z>_e = <(grad_JX tau)X,X> - <(grad_X tau)JX,X>
        r2 = t.curvature(xc, yc, xc, eps)
        lhs2 = ip_eps(r2, z)
        rhs2 = ip1(nabla_tau(yc, xc), xc) - ip1(nabla_tau(xc, yc), xc)

        # identity 3: <R^e(X,Z)Z,X>_e = 1/(4e^2) - |tau X|^2 - <(grad_Z tau)X,X> - tau1/e
        r3 = t.curvature(xc, z, z, eps)
        lhs3 = ip_eps(r3, xc)
        rhs3 = 1.0 / (4.0 * eps**2) - tau_x_sq - ip1(nabla_tau(z, xc), xc) - tau1 / eps

        # identity 4: <R^e(X,Z)JX,Z>_e = -tau0/e + <(grad_Z tau)X + tau^2 X, JX>
        # (the proof's form; the lemma display misprints tau0 as tau1)
        r4 = t.curvature(xc, z, yc, eps)
        lhs4 = ip_eps(r4, z)
        tau_tau_x = t.tau_apply(t.tau_apply(xc))
        nz = nabla_tau(z, xc)
        rhs4 = -tau0 / eps + ip1(tuple(nz[k] + tau_tau_x[k] for k in range(3)), yc)

        return np.abs(np.array([lhs1 - rhs1, lhs2 - rhs2, lhs3 - rhs3, lhs4 - rhs4]))

    # -- diagnostics for the invariant suite ----------------------------------

    def structure_residuals(self, p) -> dict:
        """Pointwise residuals of the defining identities, for tests/reports."""
        t = self.tower_at(p, 4)
        a_j = t.alpha
        out = {}

        def d_alpha(v, w):
            av = vdot(a_j, v)
            aw = vdot(a_j, w)
            br = bracket_jets(v, w)
            r = t.dirderiv(v, aw) - t.dirderiv(w, av) - vdot(a_j, br)
            return float(np.asarray(r.value))

        A, B, Z = t.A, t.B, t.Z
        out["dalpha_AB_plus_1"] = abs(d_alpha(A, B) + 1.0)
        out["alpha_Z_minus_1"] = abs(float(np.asarray(vdot(a_j, Z).value)) - 1.0)
        out["dalpha_ZA"] = abs(d_alpha(Z, A))
        out["dalpha_ZB"] = abs(d_alpha(Z, B))

        jm = np.array([[c.value for c in row] for row in t.J])
        zv = _values(Z)
        av = _values(a_j)
        pr = np.eye(3) - np.outer(zv, av)
        out["J_squared_plus_prE"] = float(np.max(np.abs(jm @ jm + pr)))
        out["J_Z"] = float(np.max(np.abs(jm @ zv)))

        tm = np.array([[np.asarray(c.value if isinstance(c, Jet) else c) for c in row] for row in t.tau])
        out["tau_Z"] = float(np.max(np.abs(tm @ zv)))
        out["trace_tau"] = abs(float(np.trace(tm)))
        out["tau_J_anticommute"] = float(np.max(np.abs(tm @ jm + jm @ tm)))

        g1 = np.array([[c.value for c in row] for row in t.metric(1.0)])
        out["tau_symmetric"] = float(np.max(np.abs(g1 @ tm - (g1 @ tm).T)))

        # grad J = 0: compare nabla(JW) with J nabla(W) for frame pairs
        res = 0.0
        for v in (A, B, Z):
            for w in (A, B):
                jw = mat_vec(t.J, w)
                lhs = _values(t.nabla_can(v, jw))
                rhs = jm @ _values(t.nabla_can(v, w))
                res = max(res, float(np.max(np.abs(lhs - rhs))))
        out["nabla_J"] = res

        # L_Z J = 2 J tau on frame fields (the composition order that follows
        # from L_Z(dalpha) = 0 with these tau/J conventions)
        res = 0.0
        for w in (A, B):
            jw = mat_vec(t.J, w)
            lie = _values(bracket_jets(Z, jw)) - jm @ _values(bracket_jets(Z, w))
            ref = 2.0 * jm @ tm @ _values(w)
            res = max(res, float(np.max(np.abs(lie - ref))))
        out["lie_Z_J_minus_2Jtau"] = res
        return out


# ---------------------------------------------------------------------------
# constructors and module-level op wrappers


def _probe_points(box, n: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    lo = np.array([b[0] for b in box])
    hi = np.array([b[1] for b in box])
    return lo + (hi - lo) * rng.random((n, 3))


def build_contact(frame: ContactFrame, probes: int = 200, seed: int = 12345) -> ContactStructure:
    """Derive the contact structure, validating the frame at probe points."""
    cs = ContactStructure(frame, is_contact=True)
    pts = _probe_points(frame.chart_box, probes, seed)
    t = cs.tower_on(jet_seeds((pts[:, 0], pts[:, 1], pts[:, 2]), 1))
    cross = vcross(t.A, t.B)
    n2 = _values(cross)
    if np.any(np.sum(n2**2, axis=0) < _DEGENERACY_TOL**2):
        raise SingularFrame(f"frame {frame.name!r}: A, B linearly dependent at a probe point")
    vol = np.asarray(t.frame_volume.value)
    if np.any(np.abs(vol) < _DEGENERACY_TOL):
        raise DegenerateContact(
            f"frame {frame.name!r}: contact condition fails (|d(alpha0)(A,B)| < {_DEGENERACY_TOL})"
        )
    return cs


def build_euclidean(frame: ContactFrame) -> ContactStructure:
    """Bypass structure for integrable frames: tau = 0, Z the unit normal.

    Used by flat sanity fixtures only; contact-specific closed forms refuse
    to run on it, while metric, connection and curvature evaluators work.
    """
    return ContactStructure(frame, is_contact=False)


def metric_eps(cs: ContactStructure, p, v, w, eps: float) -> float:
    return cs.metric_eps(p, v, w, eps)


def nabla(cs: ContactStructure, V, W, p) -> np.ndarray:
    return cs.nabla(V, W, p)


def nabla_eps(cs: ContactStructure, V, W, p, eps: float) -> np.ndarray:
    return cs.nabla_eps(V, W, p, eps)


def curvature_Reps(cs: ContactStructure, V, W, U, p, eps: float) -> np.ndarray:
    return cs.curvature_Reps(V, W, U, p, eps)


def curvature_expansion_residuals(cs: ContactStructure, X, p, eps: float) -> np.ndarray:
    return cs.curvature_expansion_residuals(X, p, eps)

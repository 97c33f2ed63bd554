"""Pointwise geometry of immersed surface patches.

The central object is SurfacePointData: all surface quantities at one
parameter point (or a batch of points), built from two ingredients that the
jet engine makes exact,

  * parameter-ring jets of the immersion F(u, v) and of composites along it
    (the chart tower is evaluated at the image point and its jets are
    substituted with the displacement jets of F), and
  * chart-ring evaluations at the image point for covariant derivatives,
    where surface-only fields are extended off the patch through a
    first-order inverse of the immersion (the extension only enters
    tensorial slots, so the choice is immaterial).

Both the parameter ring and the chart ring carry a trailing batch axis, so
quadrature can evaluate thousands of points per call.

Conventions: a is the inner product of oriented unit bivectors of the
tangent plane and of E; X spans T(Sigma) cap E with the sign fixed by
sqrt(1-a^2) iota_X sigma = +alpha|_TSigma; X2 = b0 Z + a JX completes X to
an oriented basis; N^eps = eps a Z - b0 JX.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .contact import ContactStructure, Tower, mat_vec, vdot
from .errors import CharacteristicPoint, ContactGeoError, RankDeficient
from .expressions import parse
from .jets import Jet, jet_seeds

TOL_CHAR = 1e-8
_RANK_TOL = 1e-16

__all__ = [
    "SurfaceMap",
    "Cap",
    "SurfacePatch",
    "SurfacePointFrame",
    "CurvaturePanel",
    "SurfaceGeometry",
    "horizontal_parameter",
    "adapted_frame",
    "xa_identity_residual",
    "second_fundamental_form",
    "gauss_curvature",
    "brioschi_curvature",
    "b_panel",
    "TOL_CHAR",
]


class SurfaceMap:
    """Immersion (u, v) -> chart point, components as expression trees."""

    def __init__(self, exprs, variables=("u", "v")):
        self.exprs = [parse(e) if isinstance(e, str) else e for e in exprs]
        self.variables = tuple(variables)

    def at(self, coords):
        env = dict(zip(self.variables, coords))
        return tuple(coords[0] * 0.0 + e.eval(env) for e in self.exprs)


@dataclass(frozen=True)
class Cap:
    """Excluded strip along one side of the parameter domain."""

    axis: int
    side: str  # "min" or "max"
    width: float

    def shrink(self, factor: float) -> "Cap":
        return Cap(self.axis, self.side, self.width * factor)


@dataclass(frozen=True)
class SurfacePatch:
    chart_map: SurfaceMap
    domain: tuple
    periodic: tuple = (False, False)
    orientation: int = 1
    caps: tuple = ()
    chi: int | None = None
    name: str = "patch"
    boundary: object = None


@dataclass
class SurfacePointFrame:
    """Adapted frame data at one non-characteristic surface point."""

    uv: tuple
    point: np.ndarray
    eps: float
    a: float
    b0: float
    b_eps: float
    X: np.ndarray
    X2: np.ndarray
    X2_hat: np.ndarray
    N_hat: np.ndarray
    tau0: float
    tau1: float
    Xa: float
    X2a: float


@dataclass
class CurvaturePanel:
    """All pointwise curvature quantities entering the Gauss-Bonnet limits."""

    uv: tuple
    eps: float
    a: float
    sec_eps: float
    II11: float
    II12: float
    II22: float
    K_eps: float
    B1m1: float
    B10: float
    B20: float
    B21: float
    K_sigma_E: float
    h_eps: np.ndarray
    sigma_density: float
    sigma_eps_density: float

    def recombined_K_density(self) -> float:
        """Eq.-(KB) reconstruction of K^eps * sigma^eps-density / sigma-density."""
        se = np.sqrt(self.eps)
        return (se / self.b_eps) * (self.B1m1 / self.eps + self.B10) + (
            se / self.b_eps**3
        ) * (self.B20 + self.eps * self.B21)

    @property
    def b_eps(self) -> float:
        return float(np.sqrt(1.0 + (self.eps - 1.0) * self.a**2))


def _val(x):
    return np.asarray(x.value if isinstance(x, Jet) else x, dtype=float)


class SurfacePointData:
    """Lazy per-point (or per-batch) evaluation pipeline."""

    def __init__(self, cs: ContactStructure, patch: SurfacePatch, ju, jv, chart_order: int = 3):
        self.cs = cs
        self.patch = patch
        self.ju = ju
        self.jv = jv
        self.chart_order = chart_order
        self.param_ring = ju.nvars

    # -- immersion ----------------------------------------------------------

    @cached_property
    def F(self):
        return self.patch.chart_map.at((self.ju, self.jv))

    @cached_property
    def p0(self):
        return np.stack([_val(c) for c in self.F])

    @cached_property
    def _dF(self):
        disp = []
        for c in self.F:
            d = Jet(c.nvars, c.order, c.coeffs.copy())
            d.coeffs[0] = np.zeros(c.batch)
            disp.append(d)
        return disp

    @cached_property
    def tangents(self):
        """(Y1, Y2): oriented coordinate tangents as parameter-ring jets."""
        fu = tuple(c.diff(0) for c in self.F)
        fv = tuple(c.diff(1) for c in self.F)
        if self.patch.orientation >= 0:
            return fu, fv
        return fv, fu

    @property
    def _axes(self):
        return (0, 1) if self.patch.orientation >= 0 else (1, 0)

    # -- chart tower and composition ----------------------------------------

    @cached_property
    def ct(self) -> Tower:
        seeds = jet_seeds(tuple(self.p0), self.chart_order)
        return self.cs.tower_on(seeds)

    def compose(self, obj):
        if isinstance(obj, Jet):
            return obj.substitute(self._dF)
        if isinstance(obj, (tuple, list)) and isinstance(obj[0], (tuple, list)):
            return [[self.compose(c) for c in row] for row in obj]
        return tuple(self.compose(c) for c in obj)

    @cached_property
    def g1c(self):
        return self.compose(self.ct.g1)

    @cached_property
    def alpha_c(self):
        return self.compose(self.ct.alpha)

    @cached_property
    def Zc(self):
        return self.compose(self.ct.Z)

    @cached_property
    def Jc(self):
        return self.compose(self.ct.J)

    def ip1(self, v, w):
        return vdot(mat_vec(self.g1c, v), w)

    # -- first fundamental data and the horizontal parameter ------------------

    @cached_property
    def gram(self):
        y1, y2 = self.tangents
        g11 = self.ip1(y1, y1)
        g12 = self.ip1(y1, y2)
        g22 = self.ip1(y2, y2)
        det = g11 * g22 - g12 * g12
        if np.any(_val(det) < _RANK_TOL):
            raise RankDeficient(f"immersion rank < 2 on patch {self.patch.name!r}")
        return g11, g12, g22, det

    @cached_property
    def a(self):
        """Horizontal angle parameter via the bivector inner product."""
        y1, y2 = self.tangents
        ct = self.ct
        ac = self.compose(ct.A)
        bc = self.compose(ct.B)
        m11 = self.ip1(y1, ac)
        m12 = self.ip1(y1, bc)
        m21 = self.ip1(y2, ac)
        m22 = self.ip1(y2, bc)
        det = self.gram[3]
        return (m11 * m22 - m12 * m21) * det ** (-0.5)

    @cached_property
    def a_value(self):
        return _val(self.a)

    def require_noncharacteristic(self):
        if np.any(np.abs(self.a_value) >= 1.0 - TOL_CHAR):
            raise CharacteristicPoint(
                f"|a| >= 1 - {TOL_CHAR} on patch {self.patch.name!r}"
            )

    @cached_property
    def b0(self):
        return (1.0 - self.a * self.a) ** 0.5

    def b_eps(self, eps: float):
        return (1.0 + (eps - 1.0) * self.a * self.a) ** 0.5

    # -- the adapted frame ----------------------------------------------------

    @cached_property
    def X(self):
        """Unit generator of T(Sigma) cap E with the +beta sign convention.

        X ~ alpha(Y2) Y1 - alpha(Y1) Y2 already realizes the convention:
        testing iota_X sigma against either Y_i gives alpha(Y_i)^2 >= 0.
        """
        self.require_noncharacteristic()
        y1, y2 = self.tangents
        a1 = vdot(self.alpha_c, y1)
        a2 = vdot(self.alpha_c, y2)
        raw = tuple(a2 * y1[k] - a1 * y2[k] for k in range(3))
        n = self.ip1(raw, raw) ** (-0.5)
        x = tuple(raw[k] * n for k in range(3))
        self._x_param = (a2 * n, -a1 * n)
        return x

    @cached_property
    def x_param(self):
        """Components of X in the oriented tangent basis (Y1, Y2)."""
        _ = self.X
        return self._x_param

    @cached_property
    def JX(self):
        return mat_vec(self.Jc, self.X)

    @cached_property
    def X2(self):
        return tuple(self.b0 * self.Zc[k] + self.a * self.JX[k] for k in range(3))

    def X2_hat(self, eps: float):
        s = self.b_eps(eps) ** (-1.0) * np.sqrt(eps)
        return tuple(c * s for c in self.X2)

    def N_vec(self, eps: float):
        return tuple(eps * self.a * self.Zc[k] - self.b0 * self.JX[k] for k in range(3))

    def N_hat(self, eps: float):
        inv = self.b_eps(eps) ** (-1.0)
        return tuple(c * inv for c in self.N_vec(eps))

    @cached_property
    def x2_param(self):
        """Components of X2 in (Y1, Y2) from the Gram system (X2 is tangent)."""
        y1, y2 = self.tangents
        g11, g12, g22, det = self.gram
        r1 = self.ip1(self.X2, y1)
        r2 = self.ip1(self.X2, y2)
        inv = det ** (-1.0)
        return ((r1 * g22 - r2 * g12) * inv, (r2 * g11 - r1 * g12) * inv)

    def deriv_along(self, param_coeffs, scalar_jet):
        """Directional derivative of a parameter-ring scalar along a tangent
        vector given by components in (Y1, Y2)."""
        if self.param_ring != 2:
            raise ContactGeoError("parameter-space derivatives need a 2d ring")
        ax1, ax2 = self._axes
        return param_coeffs[0] * scalar_jet.diff(ax1) + param_coeffs[1] * scalar_jet.diff(ax2)

    @cached_property
    def Xa(self):
        return self.deriv_along(self.x_param, self.a)

    @cached_property
    def X2a(self):
        return self.deriv_along(self.x2_param, self.a)

    @cached_property
    def tau_c(self):
        return self.compose(self.ct.tau)

    @cached_property
    def tau01(self):
        tx = mat_vec(self.tau_c, self.X)
        return self.ip1(tx, self.X), self.ip1(tx, self.JX)

    # -- covariant quantities through chart extensions ------------------------

    @cached_property
    def _ext_map(self):
        y1, y2 = self.tangents
        fu = np.stack([_val(c) for c in (y1 if self._axes[0] == 0 else y2)])
        fv = np.stack([_val(c) for c in (y1 if self._axes[0] == 1 else y2)])
        # fu/fv above are the coordinate tangents in original (u, v) order
        n = np.cross(fu, fv, axis=0)
        m = np.stack([fu, fv, n], axis=1)  # (3, 3, *batch) columns
        m = np.moveaxis(m, (0, 1), (-2, -1))
        inv = np.linalg.inv(m)
        linv = np.moveaxis(inv, (-2, -1), (0, 1))
        return linv[:2]  # rows L_u, L_v : chart displacement -> (du, dv)

    def extend(self, comps):
        """First-order chart extension of parameter-ring components."""
        L = self._ext_map
        seeds = self.ct.seeds
        disp = []
        for r in range(2):
            d = None
            for k in range(3):
                s = Jet(seeds[k].nvars, seeds[k].order, seeds[k].coeffs.copy())
                s.coeffs[0] = np.zeros(seeds[k].batch)
                term = s * L[r, k]
                d = term if d is None else d + term
            disp.append(d)
        return tuple(c.substitute(disp) for c in comps)

    def _const_chart(self, values):
        zero = self.ct.seeds[0] * 0.0
        return tuple(zero + values[k] for k in range(3))

    @cached_property
    def conn_terms(self):
        """(<grad_X X, JX>, <grad_X2 X, JX>) for the canonical connection."""
        xt = self.extend(self.X)
        xdir = self._const_chart(np.stack([_val(c) for c in self.X]))
        x2dir = self._const_chart(np.stack([_val(c) for c in self.X2]))
        nx = self.ct.nabla_can(xdir, xt)
        nx2 = self.ct.nabla_can(x2dir, xt)
        jxv = self._const_chart(np.stack([_val(c) for c in self.JX]))
        return _val(self.ct.ip(nx, jxv)), _val(self.ct.ip(nx2, jxv))

    # -- second fundamental form ----------------------------------------------

    def second_fundamental(self, eps: float) -> dict:
        """Closed forms of the lemma plus the definitional oracle."""
        a = self.a_value
        b0 = _val(self.b0)
        be = _val(self.b_eps(eps))
        t0, t1 = (_val(t) for t in self.tau01)
        xa = _val(self.Xa)
        x2a = _val(self.X2a)
        pxx, px2x = self.conn_terms
        se = np.sqrt(eps)

        ii11 = -(eps * a * t0 + b0 * pxx) / be
        ii22 = -eps * x2a / (be**3 * b0) + eps * a * t0 / be
        ii12_a = -se * xa / (b0 * be**2) + (1.0 - 2.0 * eps * t1) / (2.0 * se)
        ii12_b = -(se / be**2) * (b0 * px2x + a**2 * (1.0 + eps * t1)) + 1.0 / (2.0 * se)
        return {
            "II11": ii11,
            "II12": ii12_a,
            "II12_alt": ii12_b,
            "II22": ii22,
        }

    def second_fundamental_defn(self, eps: float):
        """-<grad^eps_{X_i} N-hat, X_j>_eps with N-hat extended off the patch."""
        nhat = self.extend(self.N_hat(eps))
        xdir = self._const_chart(np.stack([_val(c) for c in self.X]))
        x2dir = self._const_chart(np.stack([_val(c) for c in self.X2_hat(eps)]))
        dn_x = self.ct.nabla_eps(xdir, nhat, eps) if self.cs.is_contact else self.ct.nabla_lc(xdir, nhat, eps)
        dn_x2 = self.ct.nabla_eps(x2dir, nhat, eps) if self.cs.is_contact else self.ct.nabla_lc(x2dir, nhat, eps)
        ii11 = -_val(self.ct.ip(dn_x, xdir, eps))
        ii12 = -_val(self.ct.ip(dn_x, x2dir, eps))
        ii21 = -_val(self.ct.ip(dn_x2, xdir, eps))
        ii22 = -_val(self.ct.ip(dn_x2, x2dir, eps))
        return ii11, 0.5 * (ii12 + ii21), ii22

    # -- curvature --------------------------------------------------------------

    def sec_eps(self, eps: float):
        """<R^eps(X, X2hat) X2hat, X>_eps with coordinate-frozen extensions."""
        xv = np.stack([_val(c) for c in self.X])
        x2v = np.stack([_val(c) for c in self.X2_hat(eps)])
        xc = self._const_chart(xv)
        x2c = self._const_chart(x2v)
        r = self.ct.curvature(xc, x2c, x2c, eps)
        return _val(self.ct.ip(r, xc, eps))

    def gauss_curvature(self, eps: float):
        sec = self.sec_eps(eps)
        if self.cs.is_contact:
            ii = self.second_fundamental(eps)
            return sec + ii["II11"] * ii["II22"] - ii["II12"] ** 2
        ii11, ii12, ii22 = self.second_fundamental_defn(eps)
        return sec + ii11 * ii22 - ii12**2

    @cached_property
    def _geps_cache(self):
        return {}

    def h_eps(self, eps: float):
        """Pullback metric components (E, F, G) as parameter-ring jets."""
        if eps not in self._geps_cache:
            self._geps_cache[eps] = self.compose(self.ct.metric(eps))
        gc = self._geps_cache[eps]
        fu = tuple(c.diff(0) for c in self.F)
        fv = tuple(c.diff(1) for c in self.F)

        def ip(v, w):
            return vdot(mat_vec(gc, v), w)

        return ip(fu, fu), ip(fu, fv), ip(fv, fv)

    def brioschi_curvature(self, eps: float):
        """Intrinsic curvature of h_eps from the Brioschi determinants."""
        E, F, G = self.h_eps(eps)
        Eu, Ev = E.diff(0), E.diff(1)
        Fu, Fv = F.diff(0), F.diff(1)
        Gu, Gv = G.diff(0), G.diff(1)
        Evv = Ev.diff(1)
        Fuv = Fu.diff(1)
        Guu = Gu.diff(0)
        m1 = [
            [Evv * (-0.5) + Fuv - Guu * 0.5, Eu * 0.5, Fu - Ev * 0.5],
            [Fv - Gu * 0.5, E, F],
            [Gv * 0.5, F, G],
        ]
        m2 = [
            [Eu * 0.0, Ev * 0.5, Gu * 0.5],
            [Ev * 0.5, E, F],
            [Gu * 0.5, F, G],
        ]

        def det3(m):
            return (
                m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
            )

        den = E * G - F * F
        k = (det3(m1) - det3(m2)) / (den * den)
        return _val(k)

    def densities(self, eps: float):
        """(sigma-density, sigma^eps-density) w.r.t. du dv (orientation-free)."""
        E1, F1, G1 = self.h_eps(1.0)
        s1 = _val((E1 * G1 - F1 * F1) ** 0.5)
        if eps == 1.0:
            return s1, s1
        Ee, Fe, Ge = self.h_eps(eps)
        se = _val((Ee * Ge - Fe * Fe) ** 0.5)
        return s1, se

    # -- the B panel --------------------------------------------------------------

    def b_terms(self):
        """(B_{1,-1}, B_{1,0}, B_{2,0}, B_{2,1}) and K_{Sigma,E} = B_{2,0}.

        B_{1,-1} = -a^2 + Xa/b0: the assembly of the curvature bands forces
        the + sign (and no 1/eps factor); the identity integral and the
        recombination against K^eps both pin it down.
        """
        if not self.cs.is_contact:
            raise ContactGeoError("B-panel terms are defined for contact structures only")
        a = self.a_value
        b0 = _val(self.b0)
        t0, t1 = (_val(t) for t in self.tau01)
        xa = _val(self.Xa)
        x2a = _val(self.X2a)
        pxx, _ = self.conn_terms
        sec1 = self.sec_eps(1.0)

        b10 = (
            sec1
            + a**2 * (0.75 - (t0**2 + t1**2))
            + b0**2 * t1
            - b0**2 / 4.0
            - b0 * a * t0 * pxx
            - 2.0 * t1 * xa / b0
            + a**2 * t1
            - b0**2 * t1**2
        )
        b21 = a * t0 * x2a / b0
        return self.b1m1(), b10, self.b20(), b21

    def b1m1(self):
        """B_{1,-1} alone (no curvature evaluation needed)."""
        a = self.a_value
        return -(a**2) + _val(self.Xa) / _val(self.b0)

    def b20(self):
        """B_{2,0} alone (no curvature evaluation needed)."""
        xa = _val(self.Xa)
        x2a = _val(self.X2a)
        pxx, _ = self.conn_terms
        return pxx * x2a - (xa / _val(self.b0)) ** 2

    def k_sigma_e(self):
        """The curvature measure whose cumulative slope recovers 2 pi chi.

        K_{Sigma,E} = B_{2,0} - B_{1,-1}.  The published statement uses
        B_{2,0} alone, but the 1/eps curvature band does not vanish in the
        limit when cha(Sigma) is nonempty: its kernel sqrt(eps)/(eps b_eps)
        deposits -2 pi B_{1,-1} per unit characteristic measure, and
        B_{1,-1} -> a^2 - Xa/b0 -> 1/2 at the poles of the model sphere.
        With the correction the slope reproduces 2 pi chi; without it the
        sphere gives 0.6 * 4 pi.  (B_{1,-1} integrates to zero against
        1/b0, so the correction does not disturb the closed-band identity.)
        """
        return self.b20() - self.b1m1()

    def k_sigma_e_intro_variant(self):
        """Introduction's variant with (Xa)^2 / b0 (diagnostic only)."""
        xa = _val(self.Xa)
        x2a = _val(self.X2a)
        pxx, _ = self.conn_terms
        return pxx * x2a - xa**2 / _val(self.b0)


class SurfaceGeometry:
    """Binds a structure and a patch; entry point for batched evaluation."""

    def __init__(self, cs: ContactStructure, patch: SurfacePatch):
        self.cs = cs
        self.patch = patch

    def point_data(self, u, v, chart_order: int = 3, param_order: int = 2) -> SurfacePointData:
        ju, jv = jet_seeds((np.asarray(u, dtype=float), np.asarray(v, dtype=float)), param_order, nvars=2)
        return SurfacePointData(self.cs, self.patch, ju, jv, chart_order)

    def point_data_on(self, ju, jv, chart_order: int = 3) -> SurfacePointData:
        return SurfacePointData(self.cs, self.patch, ju, jv, chart_order)

    # batched value helpers used by quadrature

    def a_values(self, u, v) -> np.ndarray:
        pd = self.point_data(u, v, chart_order=2, param_order=1)
        return np.atleast_1d(pd.a_value)

    def k_sigma_e_density(self, u, v):
        """(K_{Sigma,E} * sigma-density, a) for region integrals."""
        pd = self.point_data(u, v, chart_order=3, param_order=2)
        s1, _ = pd.densities(1.0)
        return pd.k_sigma_e() * s1, pd.a_value

    def b1m1_over_b0_density(self, u, v):
        pd = self.point_data(u, v, chart_order=3, param_order=2)
        s1, _ = pd.densities(1.0)
        return pd.b1m1() / _val(pd.b0) * s1, pd.a_value

    def k_eps_density(self, u, v, eps: float):
        """K^eps * sigma^eps-density via the Brioschi route (batched)."""
        pd = self.point_data(u, v, chart_order=4, param_order=3)
        k = pd.brioschi_curvature(eps)
        _, se = pd.densities(eps)
        return k * se

    def area_density(self, u, v, eps: float):
        pd = self.point_data(u, v, chart_order=2, param_order=2)
        _, se = pd.densities(eps)
        return se


# ---------------------------------------------------------------------------
# module-level ops (spec surface)


def horizontal_parameter(cs: ContactStructure, patch: SurfacePatch, uv) -> float:
    pd = SurfaceGeometry(cs, patch).point_data(uv[0], uv[1], chart_order=2, param_order=1)
    return float(pd.a_value)


def adapted_frame(cs: ContactStructure, patch: SurfacePatch, uv, eps: float) -> SurfacePointFrame:
    pd = SurfaceGeometry(cs, patch).point_data(uv[0], uv[1])
    pd.require_noncharacteristic()
    t0, t1 = (float(_val(t)) for t in pd.tau01)
    return SurfacePointFrame(
        uv=tuple(uv),
        point=pd.p0.copy(),
        eps=eps,
        a=float(pd.a_value),
        b0=float(_val(pd.b0)),
        b_eps=float(_val(pd.b_eps(eps))),
        X=np.stack([_val(c) for c in pd.X]),
        X2=np.stack([_val(c) for c in pd.X2]),
        X2_hat=np.stack([_val(c) for c in pd.X2_hat(eps)]),
        N_hat=np.stack([_val(c) for c in pd.N_hat(eps)]),
        tau0=t0,
        tau1=t1,
        Xa=float(_val(pd.Xa)),
        X2a=float(_val(pd.X2a)),
    )


def xa_identity_residual(cs: ContactStructure, patch: SurfacePatch, uv) -> float:
    """|Xa/b0 - a^2 - b0 <grad_X2 X, JX> + (1 - a^2) tau1|."""
    pd = SurfaceGeometry(cs, patch).point_data(uv[0], uv[1])
    pd.require_noncharacteristic()
    a = float(pd.a_value)
    b0 = float(_val(pd.b0))
    _, t1 = (float(_val(t)) for t in pd.tau01)
    _, px2x = pd.conn_terms
    xa = float(_val(pd.Xa))
    return abs(xa / b0 - a**2 - b0 * float(px2x) + (1.0 - a**2) * t1)


def second_fundamental_form(cs: ContactStructure, patch: SurfacePatch, uv, eps: float):
    pd = SurfaceGeometry(cs, patch).point_data(uv[0], uv[1])
    pd.require_noncharacteristic()
    if cs.is_contact:
        ii = pd.second_fundamental(eps)
        return float(ii["II11"]), float(ii["II12"]), float(ii["II22"])
    ii11, ii12, ii22 = pd.second_fundamental_defn(eps)
    return float(ii11), float(ii12), float(ii22)


def gauss_curvature(cs: ContactStructure, patch: SurfacePatch, uv, eps: float) -> float:
    pd = SurfaceGeometry(cs, patch).point_data(uv[0], uv[1], chart_order=4)
    pd.require_noncharacteristic()
    return float(pd.gauss_curvature(eps))


def brioschi_curvature(cs: ContactStructure, patch: SurfacePatch, uv, eps: float) -> float:
    pd = SurfaceGeometry(cs, patch).point_data(uv[0], uv[1], chart_order=4, param_order=3)
    return float(pd.brioschi_curvature(eps))


def b_panel(cs: ContactStructure, patch: SurfacePatch, uv, eps: float) -> CurvaturePanel:
    pd = SurfaceGeometry(cs, patch).point_data(uv[0], uv[1], chart_order=4, param_order=3)
    pd.require_noncharacteristic()
    ii = pd.second_fundamental(eps)
    sec = float(pd.sec_eps(eps))
    k_eps = sec + float(ii["II11"] * ii["II22"] - ii["II12"] ** 2)
    b1m1, b10, b20, b21 = (float(b) for b in pd.b_terms())
    E1, F1, G1 = (float(_val(c)) for c in pd.h_eps(eps))
    s1, se = pd.densities(eps)
    return CurvaturePanel(
        uv=tuple(uv),
        eps=eps,
        a=float(pd.a_value),
        sec_eps=sec,
        II11=float(ii["II11"]),
        II12=float(ii["II12"]),
        II22=float(ii["II22"]),
        K_eps=k_eps,
        B1m1=b1m1,
        B10=b10,
        B20=b20,
        B21=b21,
        K_sigma_E=b20 - b1m1,
        h_eps=np.array([[E1, F1], [F1, G1]]),
        sigma_density=float(s1),
        sigma_eps_density=float(se),
    )

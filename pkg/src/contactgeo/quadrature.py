"""Deterministic adaptive quadrature over surface patches.

The engine integrates f(u, v) du dv over the patch domain with per-cell
tensor Gauss-Legendre rules and wave-based adaptive refinement (split axis
chosen from the observed variation).  Region integrals over {|a| > 1 - c}
resolve the level set by per-column bisection on a inside straddling cells
and integrate the curved sliver with a mapped tensor rule, so the region
boundary costs no order of accuracy.

Characteristic caps declared by the fixture are excluded from the mesh;
their contribution is recovered by Richardson/Aitken extrapolation in the
cap width (caps at width w, w/2, w/4).  A diverging extrapolation raises
NonConvergent instead of reporting a value.

All rules are fixed and accumulation order is sorted, so results are
bit-reproducible for a given configuration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import IllConditionedFit, NonConvergent
from .surface import Cap, SurfaceGeometry, SurfacePatch

__all__ = [
    "QuadConfig",
    "integrate_domain",
    "integrate_surface",
    "region_integral_A",
    "check_B1m1_identity",
    "CumulativeProfile",
    "cumulative_profile",
    "slope_at_zero",
    "SlopeFit",
    "I1_I2",
    "integrate_curve",
]


@dataclass(frozen=True)
class QuadConfig:
    rtol: float = 1e-6
    atol: float = 1e-12
    max_depth: int = 12
    order: int = 4
    initial: int = 8
    bisect_tol: float = 1e-10
    min_bisect_depth: int = 2


@lru_cache(maxsize=None)
def _gl(order: int):
    x, w = np.polynomial.legendre.leggauss(order)
    return x, w


# ---------------------------------------------------------------------------
# mesh setup


def _axis_break_points(lo: float, hi: float, caps, axis: int):
    """Active sub-intervals of [lo, hi] after removing cap strips."""
    left, right = lo, hi
    for cap in caps:
        if cap.axis != axis:
            continue
        if cap.side == "min":
            left = max(left, lo + cap.width)
        else:
            right = min(right, hi - cap.width)
    if left >= right:
        return []
    return [(left, right)]


def _initial_cells(domain, caps, n0: int):
    cells = []
    (u0, u1), (v0, v1) = domain
    u_ints = _axis_break_points(u0, u1, caps, 0)
    v_ints = _axis_break_points(v0, v1, caps, 1)
    idx = 0
    for ua, ub in u_ints:
        nu = max(1, round(n0 * (ub - ua) / (u1 - u0)))
        for va, vb in v_ints:
            nv = max(1, round(n0 * (vb - va) / (v1 - v0)))
            for i in range(nu):
                for j in range(nv):
                    cells.append(
                        (
                            ua + (ub - ua) * i / nu,
                            ua + (ub - ua) * (i + 1) / nu,
                            va + (vb - va) * j / nv,
                            va + (vb - va) * (j + 1) / nv,
                            (idx, i, j),
                        )
                    )
            idx += 1
    return cells


# ---------------------------------------------------------------------------
# the adaptive engine


class _Engine:
    def __init__(self, fn, config: QuadConfig, region=None, cls_fn=None):
        """fn(u, v) -> (values, cls or None); region = threshold on |cls|."""
        self.fn = fn
        self.cfg = config
        self.region = region
        self.cls_fn = cls_fn
        self.nodes_used = 0

    def _eval_cells(self, cells):
        """Tensor-rule integrals and node grids for a list of cells."""
        o = self.cfg.order
        x, w = _gl(o)
        n = len(cells)
        arr = np.asarray([c[:4] for c in cells])  # (n, 4)
        du = (arr[:, 1] - arr[:, 0])[:, None]
        dv = (arr[:, 3] - arr[:, 2])[:, None]
        un = arr[:, 0][:, None] + du * (x[None, :] + 1) / 2  # (n, o)
        vn = arr[:, 2][:, None] + dv * (x[None, :] + 1) / 2
        # full tensor grids
        uu = np.repeat(un[:, :, None], o, axis=2).reshape(n, o * o)
        vv = np.repeat(vn[:, None, :], o, axis=1).reshape(n, o * o)
        vals, cls = self.fn(uu.ravel(), vv.ravel())
        self.nodes_used += uu.size
        vals = np.asarray(vals, dtype=float).reshape(n, o, o)
        ww = (w[:, None] * w[None, :])[None, :, :]
        ints = np.sum(vals * ww, axis=(1, 2)) * (du[:, 0] * dv[:, 0]) / 4.0
        cls = None if cls is None else np.asarray(cls, dtype=float).reshape(n, o, o)
        return ints, vals, cls

    def _masked_ints(self, cells, vals, cls):
        if self.region is None:
            o = self.cfg.order
            _, w = _gl(o)
            ww = (w[:, None] * w[None, :])[None, :, :]
            arr = np.asarray([c[:4] for c in cells])
            du = arr[:, 1] - arr[:, 0]
            dv = arr[:, 3] - arr[:, 2]
            return np.sum(vals * ww, axis=(1, 2)) * du * dv / 4.0, None
        mask = np.abs(cls) > self.region
        o = self.cfg.order
        _, w = _gl(o)
        ww = (w[:, None] * w[None, :])[None, :, :]
        arr = np.asarray([c[:4] for c in cells])
        du = arr[:, 1] - arr[:, 0]
        dv = arr[:, 3] - arr[:, 2]
        ints = np.sum(vals * mask * ww, axis=(1, 2)) * du * dv / 4.0
        return ints, mask

    def _split(self, cell, vals):
        """Children of a cell; split axis from the observed variation."""
        u0, u1, v0, v1, cid = cell
        col = vals.max(axis=1) - vals.min(axis=1)  # variation along v per u row?
        # vals indexed [iu, iv]: variation along u at fixed v / along v at fixed u
        var_u = float(np.max(vals.max(axis=0) - vals.min(axis=0)))
        var_v = float(np.max(vals.max(axis=1) - vals.min(axis=1)))
        um = (u0 + u1) / 2
        vm = (v0 + v1) / 2
        if var_u > 4.0 * var_v and (u1 - u0) > 4.0 * self.cfg.bisect_tol:
            return [
                (u0, um, v0, v1, cid + (0,)),
                (um, u1, v0, v1, cid + (1,)),
            ]
        if var_v > 4.0 * var_u and (v1 - v0) > 4.0 * self.cfg.bisect_tol:
            return [
                (u0, u1, v0, vm, cid + (0,)),
                (u0, u1, vm, v1, cid + (1,)),
            ]
        return [
            (u0, um, v0, vm, cid + (0,)),
            (um, u1, v0, vm, cid + (1,)),
            (u0, um, vm, v1, cid + (2,)),
            (um, u1, vm, v1, cid + (3,)),
        ]

    # -- level-set resolution by per-column bisection -------------------------

    def _cls_at(self, u, v):
        self.nodes_used += np.asarray(u).size
        return np.abs(self.cls_fn(u, v)) - self.region

    def _bisect_brackets(self, lo, hi, fixed, axis):
        """Roots of |a| - thr in [lo, hi] per column (sign change assumed)."""
        a, b = lo.copy(), hi.copy()

        def g(t):
            return self._cls_at(fixed, t) if axis == 1 else self._cls_at(t, fixed)

        ga = g(a)
        for _ in range(64):
            m = (a + b) / 2
            gm = g(m)
            pick = (ga * gm) <= 0
            b = np.where(pick, m, b)
            a = np.where(pick, a, m)
            ga = np.where(pick, ga, gm)
            if np.max(b - a) < self.cfg.bisect_tol:
                break
        return (a + b) / 2

    def _integrate_straddle(self, cell):
        """Mapped tensor rule on the in-region part of a straddling cell.

        Samples |a| - thr along lines of the cell; if the sign changes at
        most once per line along one axis, the crossing is located by
        bisection and the curved sliver integrated with a per-column mapped
        Gauss rule.  Returns None when the pattern is not yet resolvable.
        """
        u0, u1, v0, v1, cid = cell
        o = self.cfg.order
        x, w = _gl(o)
        nprobe = o + 2

        for axis in (1, 0):
            lo, hi = (v0, v1) if axis == 1 else (u0, u1)
            flo, fhi = (u0, u1) if axis == 1 else (v0, v1)
            fixed = flo + (fhi - flo) * (x + 1) / 2
            probe = np.linspace(lo, hi, nprobe)
            ff = np.repeat(fixed[:, None], nprobe, axis=1)
            tt = np.repeat(probe[None, :], o, axis=0)
            g = self._cls_at(ff.ravel(), tt.ravel()) if axis == 1 else self._cls_at(tt.ravel(), ff.ravel())
            sgn = (np.asarray(g).reshape(o, nprobe) > 0).astype(int)
            trans = np.abs(np.diff(sgn, axis=1)).sum(axis=1)
            if np.all(trans <= 1):
                break
        else:
            return None

        in_lo = sgn[:, 0] > 0
        in_hi = sgn[:, -1] > 0
        cross = trans == 1
        starts = np.where(in_lo, lo, hi).astype(float)
        ends = np.where(in_hi, hi, lo).astype(float)
        if np.any(cross):
            # bracket from the probe grid, then bisect
            idx = np.argmax(np.abs(np.diff(sgn, axis=1)), axis=1)
            blo = probe[idx]
            bhi = probe[idx + 1]
            roots = self._bisect_brackets(blo, bhi, fixed, axis)
            starts = np.where(cross & in_hi, roots, starts)
            ends = np.where(cross & in_lo, roots, ends)
        full_out = ~in_lo & ~in_hi & ~cross
        starts = np.where(full_out, lo, starts)
        ends = np.where(full_out, lo, ends)

        length = ends - starts
        tgrid = starts[:, None] + length[:, None] * (x[None, :] + 1) / 2
        if axis == 1:
            uu = np.repeat(fixed[:, None], o, axis=1)
            vv = tgrid
        else:
            vv = np.repeat(fixed[:, None], o, axis=1)
            uu = tgrid
        vals, _ = self.fn(uu.ravel(), vv.ravel())
        self.nodes_used += uu.size
        vals = np.asarray(vals, dtype=float).reshape(o, o)
        inner = np.sum(vals * w[None, :], axis=1) * length / 2.0
        outer = np.sum(inner * w) * (fhi - flo) / 2.0
        return float(outer)

    # -- region classification --------------------------------------------------

    def _classify(self, cells, masks):
        """Per-cell region status: 0 = outside, 1 = inside, 2 = straddling.

        Nodes alone can miss slivers near cell edges, so the boundary of the
        cell is sampled as well before declaring a cell fully in or out.
        """
        n = len(cells)
        o = self.cfg.order
        arr = np.asarray([c[:4] for c in cells])
        ue = np.linspace(0, 1, o + 2)
        uu = arr[:, 0][:, None] + (arr[:, 1] - arr[:, 0])[:, None] * ue[None, :]
        vv = arr[:, 2][:, None] + (arr[:, 3] - arr[:, 2])[:, None] * ue[None, :]
        pts_u = np.concatenate([uu, uu, np.repeat(arr[:, 0][:, None], o + 2, 1), np.repeat(arr[:, 1][:, None], o + 2, 1)], axis=1)
        pts_v = np.concatenate([np.repeat(arr[:, 2][:, None], o + 2, 1), np.repeat(arr[:, 3][:, None], o + 2, 1), vv, vv], axis=1)
        g = self._cls_at(pts_u.ravel(), pts_v.ravel()).reshape(n, -1) > 0
        status = np.empty(n, dtype=int)
        for i in range(n):
            node_in = int(masks[i].sum())
            edge_in = int(g[i].sum())
            if node_in == 0 and edge_in == 0:
                status[i] = 0
            elif node_in == masks[i].size and edge_in == g[i].size:
                status[i] = 1
            else:
                status[i] = 2
        return status

    # -- driver ----------------------------------------------------------------

    def run(self, cells0):
        cfg = self.cfg
        accepted: list[tuple[tuple, float]] = []
        residual = 0.0

        ints0, vals0, cls0 = self._eval_cells(cells0)
        m0, mask0 = self._masked_ints(cells0, vals0, cls0)
        status0 = None if mask0 is None else self._classify(cells0, mask0)
        wave = []
        for i, cell in enumerate(cells0):
            st = 1 if status0 is None else int(status0[i])
            wave.append((cell, float(m0[i]), vals0[i], st, 0))

        total_area = sum((c[1] - c[0]) * (c[3] - c[2]) for c in cells0)
        estimate = float(np.sum(m0))

        while wave:
            next_wave = []
            to_refine = []
            for cell, i_self, vals, status, depth in wave:
                if status == 0:
                    accepted.append((cell[4], 0.0))
                    continue
                if status == 2:
                    if depth >= cfg.min_bisect_depth:
                        got = self._integrate_straddle(cell)
                        if got is not None:
                            accepted.append((cell[4], got))
                            continue
                    if depth >= cfg.max_depth:
                        accepted.append((cell[4], i_self))
                        residual += abs(i_self)
                        continue
                to_refine.append((cell, i_self, vals, status, depth))

            if not to_refine:
                break

            children_all = []
            owners = []
            for k, (cell, i_self, vals, status, depth) in enumerate(to_refine):
                kids = self._split(cell, vals)
                owners.append((k, len(kids)))
                children_all.extend(kids)
            ints, vals_k, cls_k = self._eval_cells(children_all)
            m_k, mask_k = self._masked_ints(children_all, vals_k, cls_k)
            status_k = None if mask_k is None else self._classify(children_all, mask_k)

            pos = 0
            scale = max(abs(estimate), cfg.atol)
            for (k, nk) in owners:
                cell, i_self, vals, status, depth = to_refine[k]
                sl = slice(pos, pos + nk)
                pos += nk
                s_children = float(np.sum(m_k[sl]))
                area = (cell[1] - cell[0]) * (cell[3] - cell[2])
                loctol = cfg.rtol * scale * max(area / total_area, 1e-6)
                err = abs(s_children - i_self)
                straddling = status_k is not None and any(
                    status_k[i] == 2 for i in range(sl.start, sl.stop)
                )
                if err <= loctol and not straddling and status != 2:
                    for i in range(sl.start, sl.stop):
                        accepted.append((children_all[i][4], float(m_k[i])))
                elif depth + 1 >= cfg.max_depth:
                    for i in range(sl.start, sl.stop):
                        accepted.append((children_all[i][4], float(m_k[i])))
                    residual += err
                else:
                    for i in range(sl.start, sl.stop):
                        st = 1 if status_k is None else int(status_k[i])
                        next_wave.append((children_all[i], float(m_k[i]), vals_k[i], st, depth + 1))
            wave = next_wave
            estimate = math.fsum(v for _, v in accepted) + math.fsum(e[1] for e in wave)

        total = math.fsum(v for _, v in sorted(accepted, key=lambda t: t[0]))
        if residual > 100.0 * cfg.rtol * max(abs(total), cfg.atol):
            raise NonConvergent(
                f"adaptive quadrature residual {residual:.3e} with value {total:.6e}"
            )
        return total, residual


def integrate_domain(fn, domain, caps=(), config: QuadConfig | None = None, region=None, cls_fn=None):
    """Integrate fn(u, v) du dv over the domain minus caps.

    fn returns (values, cls); region restricts to {|cls| > region}.
    Returns (value, nodes_used).
    """
    cfg = config or QuadConfig()
    cells = _initial_cells(domain, caps, cfg.initial)
    if not cells:
        return 0.0, 0
    eng = _Engine(fn, cfg, region=region, cls_fn=cls_fn)
    value, _ = eng.run(cells)
    return value, eng.nodes_used


def _collar_domain(domain, caps, cap: Cap, w_outer: float, w_inner: float):
    """Strip uncovered when one cap shrinks from w_outer to w_inner."""
    (u0, u1), (v0, v1) = domain
    if cap.axis == 0:
        if cap.side == "min":
            sub = ((u0 + w_inner, u0 + w_outer), (v0, v1))
        else:
            sub = ((u1 - w_outer, u1 - w_inner), (v0, v1))
    else:
        if cap.side == "min":
            sub = ((u0, u1), (v0 + w_inner, v0 + w_outer))
        else:
            sub = ((u0, u1), (v1 - w_outer, v1 - w_inner))
    other = tuple(c for c in caps if c is not cap)
    return sub, other


def _cap_extrapolated(fn, patch: SurfacePatch, config, region=None, cls_fn=None):
    """Base integral plus Aitken-extrapolated cap contributions."""
    cfg = config or QuadConfig()
    base, nodes = integrate_domain(fn, patch.domain, patch.caps, cfg, region, cls_fn)
    if not patch.caps:
        return base, nodes, 0.0
    collar_cfg = QuadConfig(
        rtol=cfg.rtol,
        atol=cfg.atol,
        max_depth=max(4, cfg.max_depth - 4),
        order=cfg.order,
        initial=4,
        bisect_tol=cfg.bisect_tol,
        min_bisect_depth=0,
    )
    d1 = 0.0
    d2 = 0.0
    for cap in patch.caps:
        sub1, others = _collar_domain(patch.domain, patch.caps, cap, cap.width, cap.width / 2)
        sub2, _ = _collar_domain(patch.domain, patch.caps, cap, cap.width / 2, cap.width / 4)
        c1, n1 = integrate_domain(fn, sub1, (), collar_cfg, region, cls_fn)
        c2, n2 = integrate_domain(fn, sub2, (), collar_cfg, region, cls_fn)
        d1 += c1
        d2 += c2
        nodes += n1 + n2
    i0, i1, i2 = base, base + d1, base + d1 + d2
    if abs(d2) <= cfg.atol:
        return i2, nodes, 0.0
    if abs(d2) > abs(d1):
        raise NonConvergent(
            f"cap extrapolation diverges on {patch.name!r}: collars {d1:.3e}, {d2:.3e}"
        )
    denom = d1 - d2
    tail = d2 * d2 / denom if denom != 0 else 0.0
    return i2 + tail, nodes, abs(tail)


# ---------------------------------------------------------------------------
# surface-level integrals


def integrate_surface(
    cs,
    patch: SurfacePatch,
    f=None,
    eps: float = 1.0,
    config: QuadConfig | None = None,
    extrapolate_caps: bool = True,
):
    """Integral of a pointwise scalar against the sigma^eps area form.

    f(u, v) -> values (batched); f = None integrates 1 (area).  Returns
    (value, nodes_used).
    """
    geom = SurfaceGeometry(cs, patch)

    def fn(u, v):
        dens = geom.area_density(u, v, eps)
        if f is None:
            return dens, None
        return np.asarray(f(u, v), dtype=float) * dens, None

    if extrapolate_caps and patch.caps:
        value, nodes, _ = _cap_extrapolated(fn, patch, config)
        return value, nodes
    value, nodes = integrate_domain(fn, patch.domain, patch.caps, config)
    return value, nodes


def integrate_gauss_curvature(cs, patch: SurfacePatch, eps: float, config: QuadConfig | None = None):
    """Total curvature of h_eps (Brioschi route), for Gauss-Bonnet checks."""
    geom = SurfaceGeometry(cs, patch)

    def fn(u, v):
        return geom.k_eps_density(u, v, eps), None

    value, nodes, _ = _cap_extrapolated(fn, patch, config)
    return value, nodes


def region_integral_A(
    cs,
    patch: SurfacePatch,
    c: float,
    config: QuadConfig | None = None,
    integrand: str = "k_sigma_e",
):
    """Integral of K_{Sigma,E} (default) over {|a| > 1 - c} minus caps,
    with the cap contribution Richardson-extrapolated."""
    if not 0.0 < c < 1.0:
        raise ValueError("region parameter c must lie in (0, 1)")
    geom = SurfaceGeometry(cs, patch)

    if integrand == "k_sigma_e":
        def fn(u, v):
            return geom.k_sigma_e_density(u, v)
    elif integrand == "b1m1_over_b0":
        def fn(u, v):
            return geom.b1m1_over_b0_density(u, v)
    else:
        raise ValueError(f"unknown integrand {integrand!r}")

    def cls_fn(u, v):
        return geom.a_values(u, v)

    value, nodes, _ = _cap_extrapolated(fn, patch, config, region=1.0 - c, cls_fn=cls_fn)
    return value, nodes


def check_B1m1_identity(cs, patch: SurfacePatch, config: QuadConfig | None = None):
    """Integral of B_{1,-1}/b0 over a closed fixture (expected ~ 0)."""
    geom = SurfaceGeometry(cs, patch)

    def fn(u, v):
        return geom.b1m1_over_b0_density(u, v)

    value, nodes, _ = _cap_extrapolated(fn, patch, config)
    return value, nodes


# ---------------------------------------------------------------------------
# cumulative profile and the slope estimator


@dataclass
class SlopeFit:
    slope: float
    residual: float
    window: tuple
    c_mean: float


@dataclass
class CumulativeProfile:
    """Samples of c -> A(c) on a geometric ladder, c strictly decreasing."""

    c_values: np.ndarray
    A_values: np.ndarray
    nodes: int = 0
    fixture: str = ""

    def __post_init__(self):
        self.c_values = np.asarray(self.c_values, dtype=float)
        self.A_values = np.asarray(self.A_values, dtype=float)
        if np.any(np.diff(self.c_values) >= 0):
            raise ValueError("profile requires strictly decreasing c samples")


def cumulative_profile(
    cs,
    patch: SurfacePatch,
    c0: float = 0.2,
    halvings: int = 8,
    config: QuadConfig | None = None,
) -> CumulativeProfile:
    cls = [c0 * 2.0**-k for k in range(halvings + 1)]
    values = []
    nodes = 0
    for c in cls:
        v, n = region_integral_A(cs, patch, c, config)
        values.append(v)
        nodes += n
    return CumulativeProfile(np.array(cls), np.array(values), nodes, patch.name)


def slope_at_zero(profile: CumulativeProfile) -> SlopeFit:
    """Weighted least-squares slope of A(c) through the origin.

    The window is the suffix of smallest-c samples (length >= 5 when
    available) minimizing the normalized fit residual; weights 1/c^2.
    Raises IllConditionedFit when the best residual exceeds 10 percent of
    |slope| * mean(c).
    """
    c = profile.c_values[::-1]  # ascending
    A = profile.A_values[::-1]
    n = len(c)
    if n < 5:
        raise ValueError("slope_at_zero needs at least 5 ladder samples")
    best = None
    for m in range(min(5, n), n + 1):
        cc, aa = c[:m], A[:m]
        slope = float(np.mean(aa / cc))
        resid = float(np.sqrt(np.mean((aa - slope * cc) ** 2)))
        cbar = float(np.mean(cc))
        norm = 0.0 if resid == 0.0 else resid / max(abs(slope) * cbar, 1e-300)
        fit = SlopeFit(slope, resid, (n - m, n), cbar)
        if best is None or norm < best[0]:
            best = (norm, fit)
    fit = best[1]
    if fit.residual > 0.1 * abs(fit.slope) * fit.c_mean:
        raise IllConditionedFit(
            f"slope fit residual {fit.residual:.3e} exceeds 10% of |slope|*c̄ "
            f"({abs(fit.slope) * fit.c_mean:.3e}); profile may not be differentiable at 0"
        )
    return fit


# ---------------------------------------------------------------------------
# closed forms of the model integrals


def I1_I2(eps: float, rho: float) -> tuple[float, float]:
    """Closed forms of the two band integrals

        I1 = int_{-1}^{-sqrt(1-rho^2)} da / sqrt(1 + (eps-1) a^2),
        I2 = int_{-1}^{-sqrt(1-rho^2)} da / (1 + (eps-1) a^2)^{3/2}.

    Antiderivatives: asin(sqrt(1-eps) a)/sqrt(1-eps) and
    a / sqrt(1 + (eps-1) a^2); the published display of I2 does not match
    either the eps -> 1 limit or direct quadrature, so the evaluated
    antiderivative is used.
    """
    if not 0.0 < eps < 1.0:
        raise ValueError("eps must lie in (0, 1)")
    if not 0.0 < rho <= 1.0:
        raise ValueError("rho must lie in (0, 1]")
    s = math.sqrt(1.0 - eps)
    r2 = 1.0 - rho * rho
    i1 = (math.asin(s) - math.asin(s * math.sqrt(r2))) / s
    i2 = 1.0 / math.sqrt(eps) - math.sqrt(r2 / (eps + (1.0 - eps) * rho * rho))
    return i1, i2


# ---------------------------------------------------------------------------
# 1d adaptive quadrature (boundary integrals)


def integrate_curve(fn, t0: float, t1: float, rtol: float = 1e-8, max_depth: int = 14, order: int = 8):
    """Adaptive Gauss-Legendre integral of fn(t) (batched) over [t0, t1]."""
    x, w = _gl(order)

    def seg_int(a, b):
        t = a + (b - a) * (x + 1) / 2
        return float(np.sum(np.asarray(fn(t), dtype=float) * w) * (b - a) / 2)

    accepted = []
    n0 = 8
    stack = []
    for i in range(n0):
        a = t0 + (t1 - t0) * i / n0
        b = t0 + (t1 - t0) * (i + 1) / n0
        stack.append(((i,), a, b, seg_int(a, b), 0))
    estimate = math.fsum(s[3] for s in stack)
    while stack:
        nxt = []
        for cid, a, b, i_self, depth in stack:
            m = (a + b) / 2
            left = seg_int(a, m)
            right = seg_int(m, b)
            err = abs(left + right - i_self)
            if err <= rtol * max(abs(estimate), 1e-12) * max((b - a) / (t1 - t0), 1e-6) or depth >= max_depth:
                accepted.append((cid, left + right))
            else:
                nxt.append((cid + (0,), a, m, left, depth + 1))
                nxt.append((cid + (1,), m, b, right, depth + 1))
        stack = nxt
        estimate = math.fsum(v for _, v in accepted) + math.fsum(s[3] for s in stack)
    return math.fsum(v for _, v in sorted(accepted, key=lambda t: t[0]))

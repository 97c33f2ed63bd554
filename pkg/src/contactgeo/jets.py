"""Truncated-Taylor (jet) arithmetic in 1 to 3 variables.

A Jet stores the Taylor coefficients of a smooth function at a base point,
truncated at a fixed order: f(p + d) = sum_alpha c_alpha d^alpha + O(|d|^k+1).
Coefficients are monomial coefficients, so the partial derivative for a
multi-index alpha is c_alpha * alpha!.  Arithmetic (+, *, /, elementary
functions, composition) is closed on truncations, which makes a Jet an exact
derivative carrier: no finite-difference error anywhere downstream.

Coefficient arrays may carry trailing batch axes, so a single Jet can hold
the Taylor data of a function at many points at once; all operations are
vectorized over the batch.

The public oracle (`evaluate_jet`) is capped at order 3.  Internal consumers
may build deeper rings (curvature of the taming metrics needs four orders of
the declared frame because the Reeb field already consumes two).
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .errors import JetOrderError

MAX_ORDER = 6

__all__ = [
    "Jet",
    "jet_seeds",
    "evaluate_jet",
    "lie_bracket",
    "directional_derivative",
    "VectorField",
    "ExpressionVectorField",
    "FunctionVectorField",
    "ConstantVectorField",
    "ScalarField",
    "FunctionScalarField",
    "atan2_jet",
    "invert_increasing_1d",
]


# ---------------------------------------------------------------------------
# index tables


def _exponents(nvars: int, order: int) -> list[tuple[int, ...]]:
    """Multi-indices with |alpha| <= order, graded (degree-major) order.

    Grading guarantees that the first ncoef(k) entries are exactly the
    order-k block, so truncation is a slice.
    """
    out = []
    for deg in range(order + 1):
        block = []

        def rec(prefix, remaining, slots):
            if slots == 1:
                block.append(prefix + (remaining,))
                return
            for i in range(remaining + 1):
                rec(prefix + (i,), remaining - i, slots - 1)

        rec((), deg, nvars)
        out.extend(sorted(block, reverse=True))
    return out


class _Tables:
    """Precomputed index arrays for one (nvars, order) ring."""

    def __init__(self, nvars: int, order: int):
        self.nvars = nvars
        self.order = order
        self.exps = _exponents(nvars, order)
        self.index = {e: i for i, e in enumerate(self.exps)}
        self.ncoef = len(self.exps)
        # number of coefficients per truncation order, for slicing
        self.block = [sum(1 for e in self.exps if sum(e) <= k) for k in range(order + 1)]

        ia, ib, io = [], [], []
        for i, ea in enumerate(self.exps):
            for j, eb in enumerate(self.exps):
                s = tuple(x + y for x, y in zip(ea, eb))
                if sum(s) <= order:
                    ia.append(i)
                    ib.append(j)
                    io.append(self.index[s])
        sort = np.argsort(np.asarray(io), kind="stable")
        self.mul_ia = np.asarray(ia)[sort]
        self.mul_ib = np.asarray(ib)[sort]
        io_sorted = np.asarray(io)[sort]
        # segment starts for reduceat; every output index occurs at least once
        self.mul_seg = np.searchsorted(io_sorted, np.arange(self.ncoef))

        # diff maps: output ring has order-1
        if order > 0:
            sub = _tables(nvars, order - 1)
            self.diff_src = []
            self.diff_mul = []
            for axis in range(nvars):
                src, mul = [], []
                for e in sub.exps:
                    up = tuple(x + (1 if k == axis else 0) for k, x in enumerate(e))
                    src.append(self.index[up])
                    mul.append(e[axis] + 1)
                self.diff_src.append(np.asarray(src))
                self.diff_mul.append(np.asarray(mul, dtype=float))

        self.fact = np.array([math.prod(math.factorial(x) for x in e) for e in self.exps])


@lru_cache(maxsize=None)
def _tables(nvars: int, order: int) -> _Tables:
    return _Tables(nvars, order)


def _pad(coeffs: np.ndarray, batch_rank: int, target_rank: int) -> np.ndarray:
    if batch_rank == target_rank:
        return coeffs
    shape = (coeffs.shape[0],) + (1,) * (target_rank - batch_rank) + coeffs.shape[1:]
    return coeffs.reshape(shape)


# ---------------------------------------------------------------------------
# the Jet class


class Jet:
    """Truncated Taylor expansion at a base point; supports batch axes."""

    __slots__ = ("nvars", "order", "coeffs")

    def __init__(self, nvars: int, order: int, coeffs: np.ndarray):
        self.nvars = nvars
        self.order = order
        self.coeffs = coeffs

    # -- constructors -------------------------------------------------------

    @staticmethod
    def constant(value, nvars: int, order: int) -> "Jet":
        value = np.asarray(value, dtype=float)
        t = _tables(nvars, order)
        coeffs = np.zeros((t.ncoef,) + value.shape)
        coeffs[0] = value
        return Jet(nvars, order, coeffs)

    @staticmethod
    def variable(value, axis: int, nvars: int, order: int) -> "Jet":
        value = np.asarray(value, dtype=float)
        t = _tables(nvars, order)
        coeffs = np.zeros((t.ncoef,) + value.shape)
        coeffs[0] = value
        if order > 0:
            e = tuple(1 if k == axis else 0 for k in range(nvars))
            coeffs[t.index[e]] = 1.0
        return Jet(nvars, order, coeffs)

    # -- inspection ---------------------------------------------------------

    @property
    def value(self):
        return self.coeffs[0]

    @property
    def batch(self) -> tuple:
        return self.coeffs.shape[1:]

    def partial(self, alpha: Sequence[int]):
        """Partial derivative for multi-index alpha (coefficient * alpha!)."""
        alpha = tuple(alpha)
        if sum(alpha) > self.order:
            raise JetOrderError(f"partial {alpha} beyond jet order {self.order}")
        t = _tables(self.nvars, self.order)
        return self.coeffs[t.index[alpha]] * t.fact[t.index[alpha]]

    def gradient(self) -> np.ndarray:
        t = _tables(self.nvars, self.order)
        rows = []
        for axis in range(self.nvars):
            e = tuple(1 if k == axis else 0 for k in range(self.nvars))
            rows.append(self.coeffs[t.index[e]])
        return np.stack(rows)

    def hessian(self) -> np.ndarray:
        n = self.nvars
        h = np.empty((n, n) + self.batch)
        for i in range(n):
            for j in range(n):
                alpha = tuple((1 if k == i else 0) + (1 if k == j else 0) for k in range(n))
                h[i, j] = self.partial(alpha)
        return h

    def truncate(self, order: int) -> "Jet":
        if order == self.order:
            return self
        if order > self.order:
            raise JetOrderError(f"cannot extend jet of order {self.order} to {order}")
        t = _tables(self.nvars, self.order)
        return Jet(self.nvars, order, self.coeffs[: t.block[order]])

    def diff(self, axis: int) -> "Jet":
        """Derivative along one ring variable; drops one order."""
        if self.order == 0:
            raise JetOrderError("cannot differentiate an order-0 jet")
        t = _tables(self.nvars, self.order)
        c = self.coeffs[t.diff_src[axis]]
        mul = t.diff_mul[axis].reshape((-1,) + (1,) * len(self.batch))
        return Jet(self.nvars, self.order - 1, c * mul)

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Jet):
            return other
        return Jet.constant(other, self.nvars, self.order)

    def __add__(self, other):
        o = self._coerce(other)
        order = min(self.order, o.order)
        a, b = self.truncate(order), o.truncate(order)
        rank = max(len(a.batch), len(b.batch))
        return Jet(self.nvars, order, _pad(a.coeffs, len(a.batch), rank) + _pad(b.coeffs, len(b.batch), rank))

    __radd__ = __add__

    def __neg__(self):
        return Jet(self.nvars, self.order, -self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Jet):
            other = np.asarray(other, dtype=float)
            rank = max(len(self.batch), other.ndim)
            c = _pad(self.coeffs, len(self.batch), rank) * other
            return Jet(self.nvars, self.order, c)
        order = min(self.order, other.order)
        a, b = self.truncate(order), other.truncate(order)
        t = _tables(self.nvars, order)
        rank = max(len(a.batch), len(b.batch))
        ca = _pad(a.coeffs, len(a.batch), rank)
        cb = _pad(b.coeffs, len(b.batch), rank)
        prod = ca[t.mul_ia] * cb[t.mul_ib]
        out = np.add.reduceat(prod, t.mul_seg, axis=0)
        return Jet(self.nvars, order, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            return self * (1.0 / np.asarray(other, dtype=float))
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, expo):
        if isinstance(expo, int):
            if expo < 0:
                return (self ** (-expo)).reciprocal()
            result = Jet.constant(np.ones(self.batch), self.nvars, self.order)
            base = self
            e = expo
            while e:
                if e & 1:
                    result = result * base
                base = base * base
                e >>= 1
            return result
        r = float(expo)
        u0 = self.value
        derivs = []
        fac = np.ones_like(np.asarray(u0, dtype=float))
        for k in range(self.order + 1):
            derivs.append(fac * u0 ** (r - k))
            fac = fac * (r - k)
        return self.lift(derivs)

    # -- composition with univariate functions ------------------------------

    def lift(self, derivs: Sequence[np.ndarray]) -> "Jet":
        """Compose with a univariate f given [f(u0), f'(u0), ..., f^(k)(u0)]."""
        du = Jet(self.nvars, self.order, self.coeffs.copy())
        du.coeffs[0] = np.zeros(self.batch)
        k = self.order
        acc = Jet.constant(np.asarray(derivs[k], dtype=float) / math.factorial(k), self.nvars, self.order)
        for j in range(k - 1, -1, -1):
            acc = acc * du + np.asarray(derivs[j], dtype=float) / math.factorial(j)
        return acc

    def reciprocal(self) -> "Jet":
        u0 = np.asarray(self.value, dtype=float)
        derivs = []
        for k in range(self.order + 1):
            derivs.append(((-1.0) ** k) * math.factorial(k) / u0 ** (k + 1))
        return self.lift(derivs)

    def sqrt(self) -> "Jet":
        return self ** 0.5

    def exp(self) -> "Jet":
        e = np.exp(np.asarray(self.value, dtype=float))
        return self.lift([e] * (self.order + 1))

    def log(self) -> "Jet":
        u0 = np.asarray(self.value, dtype=float)
        derivs = [np.log(u0)]
        for k in range(1, self.order + 1):
            derivs.append(((-1.0) ** (k - 1)) * math.factorial(k - 1) / u0**k)
        return self.lift(derivs)

    def sin(self) -> "Jet":
        u0 = np.asarray(self.value, dtype=float)
        table = [np.sin(u0), np.cos(u0), -np.sin(u0), -np.cos(u0)]
        return self.lift([table[k % 4] for k in range(self.order + 1)])

    def cos(self) -> "Jet":
        u0 = np.asarray(self.value, dtype=float)
        table = [np.cos(u0), -np.sin(u0), -np.cos(u0), np.sin(u0)]
        return self.lift([table[k % 4] for k in range(self.order + 1)])

    # -- substitution into another ring -------------------------------------

    def substitute(self, disps: Sequence["Jet"]) -> "Jet":
        """Evaluate this polynomial at base + displacements.

        disps are jets in a common target ring with zero constant term, one
        per variable of this jet.  Returns the composite in the target ring.
        """
        if len(disps) != self.nvars:
            raise ValueError("need one displacement per variable")
        tgt = disps[0]
        order = min(self.order, min(d.order for d in disps))
        t = _tables(self.nvars, self.order)
        powers = []
        for d in disps:
            row = [None, d.truncate(order) if d.order > order else d]
            for k in range(2, order + 1):
                row.append(row[-1] * row[1])
            powers.append(row)

        batch_shapes = [self.batch] + [d.batch for d in disps]
        out_batch = np.broadcast_shapes(*batch_shapes)
        out_t = _tables(tgt.nvars, order)
        out = np.zeros((out_t.ncoef,) + out_batch)
        out[0] = out[0] + self.coeffs[0]
        for i, e in enumerate(t.exps):
            deg = sum(e)
            if deg == 0 or deg > order:
                continue
            term = None
            for axis, k in enumerate(e):
                if k == 0:
                    continue
                p = powers[axis][k]
                term = p if term is None else term * p
            c = self.coeffs[i]
            out[: out_t.block[order]] += _pad(term.coeffs, len(term.batch), len(out_batch)) * c
        return Jet(tgt.nvars, order, out)

    def __repr__(self):
        return f"Jet(nvars={self.nvars}, order={self.order}, value={self.value!r})"


def jet_seeds(point, order: int, nvars: int = 3) -> tuple[Jet, ...]:
    """Coordinate jets at a point; point components may be arrays (batch)."""
    if not 0 <= order <= MAX_ORDER:
        raise JetOrderError(f"order {order} outside [0, {MAX_ORDER}]")
    return tuple(Jet.variable(point[i], i, nvars, order) for i in range(nvars))


def atan2_jet(y: Jet, x: Jet) -> Jet:
    """atan2 of two 1-variable jets (continuous branch through the value)."""
    if y.nvars != 1:
        raise ValueError("atan2_jet is implemented for 1-variable jets")
    order = min(y.order, x.order)
    y, x = y.truncate(order), x.truncate(order)
    val = np.arctan2(y.value, x.value)
    if order == 0:
        return Jet.constant(val, 1, 0)
    q = (x * y.diff(0) - y * x.diff(0)) / (x * x + y * y)  # theta'
    batch = np.broadcast_shapes(y.batch, x.batch)
    coeffs = np.zeros((order + 1,) + batch)
    coeffs[0] = val
    for k in range(1, order + 1):
        coeffs[k] = q.coeffs[k - 1] / k
    return Jet(1, order, coeffs)


def invert_increasing_1d(s: Jet, newton_steps: int = 4) -> Jet:
    """Invert a 1-variable jet s(t) with s'(t0) != 0.

    Returns the jet of the displacement t - t0 as a function of the
    displacement sigma = s - s(t0), i.e. the compositional inverse.
    """
    if s.nvars != 1:
        raise ValueError("series inversion needs a 1-variable jet")
    order = s.order
    m = s.coeffs[1]
    sigma = Jet.variable(np.zeros(s.batch), 0, 1, order)
    d = sigma * (1.0 / m)
    # derivative kept in the same ring (top coefficient unknown but only
    # affects orders beyond the truncation thanks to Newton's convergence)
    sp_coeffs = np.zeros_like(s.coeffs)
    for k in range(order):
        sp_coeffs[k] = (k + 1) * s.coeffs[k + 1]
    sp = Jet(1, order, sp_coeffs)
    for _ in range(newton_steps):
        res = s.substitute([d]) - s.value - sigma
        if np.max(np.abs(res.coeffs)) == 0.0:
            break
        d = d - res * sp.substitute([d]).reciprocal()
    return d


# ---------------------------------------------------------------------------
# field wrappers: anything evaluable on ring elements


class ScalarField:
    """Scalar function of chart coordinates, evaluable on jets."""

    def at(self, coords):
        raise NotImplementedError

    def jet(self, p, order: int) -> Jet:
        return self.at(jet_seeds(p, order))

    def value(self, p) -> float:
        return float(self.at(tuple(np.asarray(c, dtype=float) for c in p)))


class FunctionScalarField(ScalarField):
    def __init__(self, fn: Callable):
        self._fn = fn

    def at(self, coords):
        return self._fn(*coords)


class VectorField:
    """Vector field on the chart; components evaluable on ring elements."""

    def at(self, coords):
        raise NotImplementedError

    def jets(self, p, order: int) -> tuple[Jet, Jet, Jet]:
        return tuple(self.at(jet_seeds(p, order)))

    def values(self, p) -> np.ndarray:
        comps = self.at(tuple(np.asarray(c, dtype=float) for c in p))
        return np.stack([np.asarray(c, dtype=float) + np.zeros(()) for c in comps])


def _ring_coerce(exemplar, value):
    """Promote plain numbers to the ring (and batch) of an exemplar element."""
    return exemplar * 0.0 + value


class FunctionVectorField(VectorField):
    def __init__(self, fn: Callable):
        self._fn = fn

    def at(self, coords):
        return tuple(_ring_coerce(coords[0], c) for c in self._fn(*coords))


class ConstantVectorField(VectorField):
    def __init__(self, vec):
        self.vec = np.asarray(vec, dtype=float)

    def at(self, coords):
        zero = coords[0] * 0.0
        return tuple(zero + self.vec[i] for i in range(3))


class ExpressionVectorField(VectorField):
    """Vector field whose components are parsed expression trees."""

    def __init__(self, exprs, variables=("x", "y", "z")):
        from .expressions import parse

        self.exprs = [parse(e) if isinstance(e, str) else e for e in exprs]
        self.variables = tuple(variables)

    def at(self, coords):
        env = dict(zip(self.variables, coords))
        return tuple(_ring_coerce(coords[0], e.eval(env)) for e in self.exprs)


# ---------------------------------------------------------------------------
# the public derivative oracle


def evaluate_jet(field: VectorField, p, order: int) -> tuple[Jet, Jet, Jet]:
    """Jet of a vector field at p; the supported oracle range is order 0..3."""
    if not 0 <= order <= 3:
        raise JetOrderError(f"order {order} out of range [0, 3]")
    return field.jets(p, order)


def lie_bracket(v: VectorField, w: VectorField, p) -> np.ndarray:
    """[V, W](p) = (DW)V - (DV)W in chart components."""
    vj = v.jets(p, 1)
    wj = w.jets(p, 1)
    vv = np.array([j.value for j in vj])
    wv = np.array([j.value for j in wj])
    dv = np.array([j.gradient() for j in vj])  # dv[k, i] = d_i V^k
    dw = np.array([j.gradient() for j in wj])
    return dw @ vv - dv @ wv


def directional_derivative(f: ScalarField, v: VectorField, p) -> float:
    """Gradient of f at p contracted with V(p)."""
    g = f.jet(p, 1).gradient()
    return float(g @ v.values(p))


def bracket_jets(vj, wj) -> tuple[Jet, Jet, Jet]:
    """Lie bracket of two jet vectors in a shared ring (drops one order)."""
    out = []
    for k in range(3):
        acc = None
        for i in range(3):
            term = vj[i] * wj[k].diff(i) - wj[i] * vj[k].diff(i)
            acc = term if acc is None else acc + term
        out.append(acc)
    return tuple(out)

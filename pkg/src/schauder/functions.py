"""Function handles: the calling convention and small adapters.

Every function handle in this package is vectorized over evaluation points:

* scalar-valued handles map an array of points of shape (k,) (or (k, d) for
  d > 1 domains) to values of shape (k,),
* vector-valued handles map the same points to values of shape (k, m).

``FunctionBundle`` pairs a handle with its derivative handles so bases whose
coefficient functionals differentiate (the C^k family, Schwartz seminorms)
can ask for exact derivatives instead of finite differences.
"""

import numpy as np

from .errors import InputError


class FunctionBundle:
    """A callable together with derivative handles of orders 1..len(derivatives).

    The bundle itself is callable and delegates to the order-zero handle.
    """

    def __init__(self, func, derivatives=(), name=None):
        self.func = func
        self.derivatives = tuple(derivatives)
        self.name = name

    def __call__(self, x):
        return self.func(x)

    @property
    def max_order(self):
        return len(self.derivatives)

    def derivative(self, order=1):
        """Handle for the derivative of the given order (0 returns func)."""
        if order == 0:
            return self.func
        if order < 0 or order > len(self.derivatives):
            raise InputError(
                f"derivative of order {order} not available "
                f"(bundle carries {len(self.derivatives)})"
            )
        return self.derivatives[order - 1]

    def __repr__(self):
        tag = self.name or "<anonymous>"
        return f"FunctionBundle({tag}, orders<= {self.max_order})"


def as_bundle(f, max_order=0):
    """Coerce ``f`` to a FunctionBundle with derivatives up to ``max_order``.

    Accepts an existing bundle, any object exposing ``derivative(order)``
    returning callables (piecewise polynomials, materialized partial sums of
    piecewise-polynomial terms), or a bare callable when no derivatives are
    required.
    """
    if isinstance(f, FunctionBundle):
        if f.max_order < max_order:
            raise InputError(
                f"bundle provides derivatives up to {f.max_order}, need {max_order}"
            )
        return f
    if max_order == 0:
        return FunctionBundle(f)
    deriv = getattr(f, "derivative", None)
    if deriv is None:
        raise InputError(
            "this operation needs derivative handles; pass a FunctionBundle "
            f"with derivatives up to order {max_order}"
        )
    return FunctionBundle(f, tuple(deriv(j) for j in range(1, max_order + 1)))


class SampledFunction:
    """Piecewise-linear interpolant of tabulated samples on an interval.

    Used by the command-line layer to accept measured data in place of a
    registry function.  Scalar tables give a scalar handle, (k, m) tables a
    vector handle.
    """

    def __init__(self, points, values):
        pts = np.asarray(points, dtype=float)
        vals = np.asarray(values, dtype=float)
        if pts.ndim != 1 or pts.size < 2:
            raise InputError("sampled function needs at least two sample points")
        if np.any(np.diff(pts) <= 0):
            raise InputError("sample points must be strictly increasing")
        if vals.shape[0] != pts.size:
            raise InputError(
                f"value table has {vals.shape[0]} rows for {pts.size} points"
            )
        if vals.ndim not in (1, 2):
            raise InputError("value table must be 1-D (scalar) or 2-D (vector)")
        self.points = pts
        self.values = vals

    @property
    def domain(self):
        return float(self.points[0]), float(self.points[-1])

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        lo, hi = self.domain
        if np.any(x < lo) or np.any(x > hi):
            raise InputError(f"evaluation outside sampled domain [{lo}, {hi}]")
        if self.values.ndim == 1:
            return np.interp(x, self.points, self.values)
        cols = [np.interp(x, self.points, self.values[:, i])
                for i in range(self.values.shape[1])]
        return np.stack(cols, axis=-1)


def central_difference_bundle(f, max_order, h=1e-5):
    """Wrap ``f`` with O(h^2) central-difference derivative handles.

    A command-line fallback for sampled or derivative-less functions used
    with bases that differentiate.  Accuracy is the usual second-order
    truncation plus h-division roundoff; exact handles are always preferred.
    """
    if max_order < 0:
        raise InputError("max_order must be >= 0")

    def diff(g):
        return lambda x, g=g: (g(np.asarray(x) + h) - g(np.asarray(x) - h)) / (2.0 * h)

    handles = []
    g = f
    for _ in range(max_order):
        g = diff(g)
        handles.append(g)
    return FunctionBundle(f, tuple(handles))

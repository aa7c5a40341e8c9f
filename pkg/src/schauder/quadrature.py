"""Deterministic quadrature with a fixed accumulation order.

Every integral in this package reduces to ``weighted_sum``: evaluate the
handle once on the whole node array, then accumulate ``acc += w_i * f(x_i)``
in ascending node order with an explicit loop.  Two consequences are load
bearing for the rest of the package:

* coordinate functionals commute with integration bit for bit -- component i
  of the vector accumulation performs exactly the IEEE operations the scalar
  accumulation of that component performs;
* repeated runs produce identical bytes (no pairwise/BLAS reassociation).

Node/weight tables come from numpy's Gauss-Legendre and Gauss-Hermite rules;
composition into panels, tensorization, and the bound checks are local.
"""

from dataclasses import dataclass

import numpy as np
from numpy.polynomial.hermite import hermgauss
from numpy.polynomial.legendre import leggauss

from .errors import InputError, NumericError

DEFAULT_PANELS = 64
DEFAULT_ORDER = 8

_leggauss_cache = {}
_hermgauss_cache = {}


def _leggauss(order):
    if order not in _leggauss_cache:
        if not isinstance(order, (int, np.integer)) or order < 1:
            raise InputError(f"quadrature order must be a positive integer, got {order!r}")
        _leggauss_cache[order] = leggauss(order)
    return _leggauss_cache[order]


def _hermgauss(m):
    if m not in _hermgauss_cache:
        if not isinstance(m, (int, np.integer)) or m < 1:
            raise InputError(f"Gauss-Hermite size must be a positive integer, got {m!r}")
        _hermgauss_cache[m] = hermgauss(m)
    return _hermgauss_cache[m]


@dataclass(frozen=True)
class QuadratureRule:
    """An immutable node/weight table tagged with its construction kind."""

    kind: str
    nodes: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        nodes = np.asarray(self.nodes)
        weights = np.asarray(self.weights, dtype=float)
        if weights.ndim != 1 or weights.size == 0:
            raise InputError("weights must be a nonempty 1-D array")
        if nodes.shape[0] != weights.shape[0]:
            raise InputError(
                f"{nodes.shape[0]} nodes vs {weights.shape[0]} weights"
            )
        if not (np.all(np.isfinite(weights)) and np.all(np.isfinite(nodes.real))):
            raise InputError("rule contains non-finite nodes or weights")
        nodes.flags.writeable = False
        weights.flags.writeable = False
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    def __len__(self):
        return self.weights.shape[0]


def weighted_sum(nodes, weights, f):
    """sum_i w_i f(x_i) accumulated in ascending node-index order.

    ``f`` is evaluated once on the full node array and must return one value
    row per node: shape (k,) for scalar integrands, (k, m) for vector ones.
    Non-finite samples raise ``NumericError`` carrying the first offending
    node.
    """
    nodes = np.asarray(nodes)
    weights = np.asarray(weights, dtype=float)
    npts = weights.shape[0]
    samples = np.asarray(f(nodes))
    if samples.shape[:1] != (npts,):
        raise InputError(
            f"handle returned shape {samples.shape} for {npts} nodes; "
            "expected (k,) or (k, m)"
        )
    if samples.ndim > 2:
        raise InputError(f"handle returned shape {samples.shape}; expected (k,) or (k, m)")
    if not np.issubdtype(samples.dtype, np.inexact):
        samples = samples.astype(float)
    finite = np.isfinite(samples)
    if not finite.all():
        bad = int(np.argwhere(~finite.reshape(npts, -1).all(axis=1))[0, 0])
        node = nodes[bad]
        node = node.tolist() if isinstance(node, np.ndarray) else complex(node) if np.iscomplexobj(nodes) else float(node)
        raise NumericError(f"non-finite sample at node {node!r}", node=node)
    acc = np.zeros(samples.shape[1:], dtype=samples.dtype)
    for i in range(npts):
        acc = acc + weights[i] * samples[i]
    if acc.ndim == 0:
        return acc[()]
    return acc


def integrate_rule(f, rule):
    """Apply a prebuilt rule to a handle."""
    return weighted_sum(rule.nodes, rule.weights, f)


# -- interval rules ----------------------------------------------------------


def gauss_legendre_rule(a, b, panels=DEFAULT_PANELS, order=DEFAULT_ORDER):
    """Composite Gauss-Legendre rule on [a, b]: ``panels`` equal panels.

    Nodes are strictly ascending across the whole interval; weights are
    positive.  Exact for polynomials of degree <= 2*order - 1 on each panel.
    """
    a, b = float(a), float(b)
    if not (np.isfinite(a) and np.isfinite(b)) or a >= b:
        raise InputError(f"bad interval [{a!r}, {b!r}]")
    if not isinstance(panels, (int, np.integer)) or panels < 1:
        raise InputError(f"panels must be a positive integer, got {panels!r}")
    base_x, base_w = _leggauss(order)
    width = (b - a) / panels
    nodes = np.empty(panels * order)
    weights = np.empty(panels * order)
    half = 0.5 * width
    for p in range(panels):
        left = a + p * width
        mid = left + half
        nodes[p * order:(p + 1) * order] = mid + half * base_x
        weights[p * order:(p + 1) * order] = half * base_w
    return QuadratureRule("gauss-legendre-composite", nodes, weights)


def integrate_interval(f, a, b, panels=DEFAULT_PANELS, order=DEFAULT_ORDER):
    """Integral of ``f`` over [a, b] by the composite Gauss-Legendre rule."""
    rule = gauss_legendre_rule(a, b, panels=panels, order=order)
    return weighted_sum(rule.nodes, rule.weights, f)


def box_rule(c, d, panels=DEFAULT_PANELS, order=DEFAULT_ORDER):
    """Tensor composite Gauss-Legendre rule on the box [-c, c]^d.

    For d == 1 nodes have shape (k,); otherwise (k, d) with lexicographic
    node order (last axis fastest).
    """
    if not isinstance(d, (int, np.integer)) or d < 1:
        raise InputError(f"box dimension must be a positive integer, got {d!r}")
    line = gauss_legendre_rule(-float(c), float(c), panels=panels, order=order)
    if d == 1:
        return line
    return tensor_rule(line, d)


def tensor_rule(line_rule, d):
    """Tensorize a 1-D rule to d dimensions with lexicographic node order."""
    grids = np.meshgrid(*([line_rule.nodes] * d), indexing="ij")
    nodes = np.stack([g.reshape(-1) for g in grids], axis=1)
    wgrids = np.meshgrid(*([line_rule.weights] * d), indexing="ij")
    weights = np.ones(nodes.shape[0])
    for g in wgrids:
        weights = weights * g.reshape(-1)
    return QuadratureRule(line_rule.kind + "-tensor", nodes, weights)


# -- Gauss-Hermite (weight e^{-|x|^2}) ---------------------------------------


def gauss_hermite_rule(m, d=1):
    """Gauss-Hermite rule: sum w_i g(x_i) ~ integral of g e^{-|x|^2}."""
    x, w = _hermgauss(m)
    line = QuadratureRule("gauss-hermite", x, w)
    if d == 1:
        return line
    return tensor_rule(line, d)


def integrate_gauss_hermite(g, m, d=1):
    """integral over R^d of g(x) e^{-|x|^2} dx by the size-m tensor rule."""
    rule = gauss_hermite_rule(m, d=d)
    return weighted_sum(rule.nodes, rule.weights, g)


# -- periodic rectangle rule -------------------------------------------------


def periodic_rule(n, d=1):
    """Uniform rectangle rule on [-pi, pi)^d with n points per axis.

    Exact for trigonometric polynomials of degree < n per axis, which is the
    aliasing guard behind Fourier coefficient accuracy.
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InputError(f"periodic rule size must be a positive integer, got {n!r}")
    if not isinstance(d, (int, np.integer)) or not 1 <= d <= 3:
        raise InputError(f"periodic rule supports d in 1..3, got {d!r}")
    x = -np.pi + 2.0 * np.pi * np.arange(n) / n
    w = np.full(n, 2.0 * np.pi / n)
    line = QuadratureRule("trapezoid-periodic", x, w)
    if d == 1:
        return line
    return tensor_rule(line, d)


def integrate_periodic(f, n, d=1):
    """Integral of ``f`` over [-pi, pi]^d by the uniform rectangle rule."""
    rule = periodic_rule(n, d=d)
    return weighted_sum(rule.nodes, rule.weights, f)


# -- the discrete integral bound ---------------------------------------------


@dataclass(frozen=True)
class IntegralBoundReport:
    """Per-seminorm comparison p(sum w_i f(x_i)) <= (sum w_i) * sup_i p(f(x_i))."""

    lhs: np.ndarray
    rhs: np.ndarray
    total_weight: float
    slack: float

    @property
    def passed(self):
        return bool(np.all(self.lhs <= self.rhs + self.slack))


def integral_bound_check(f, nodes, weights, space, slack=1e-12):
    """Check the triangle-inequality bound for a positive-weight rule.

    For each seminorm p of ``space``::

        p(sum_i w_i f(x_i))  <=  (sum_i w_i) * max_i p(f(x_i)) + slack

    Negative weights void the bound and raise ``InputError``.
    """
    weights = np.asarray(weights, dtype=float)
    if np.any(weights < 0):
        raise InputError("bound check requires nonnegative weights")
    integral = weighted_sum(nodes, weights, f)
    samples = np.asarray(f(np.asarray(nodes)))
    table = space.seminorm_table(samples)
    sup = np.max(table, axis=0)
    total = float(np.sum(weights))
    lhs = space.seminorm_values(np.atleast_1d(integral))
    return IntegralBoundReport(lhs=lhs, rhs=total * sup, total_weight=total,
                               slack=float(slack))

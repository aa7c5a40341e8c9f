"""Interval basis families: Haar system, Faber-Schauder hats, C^k iterated hats.

All three live on a compact interval and share the ``PiecewisePolynomial``
representation: hats are piecewise degree-1, the C^k elements are k-fold
exact antiderivatives of hats, and Haar partial sums report their dyadic
breakpoints so that L^p quadrature can split on the jumps.

Dyadic arithmetic note: the default dense point sequence is the dyadic one
(0, 1, 1/2, 1/4, 3/4, 1/8, ...).  All its points, hat slopes at those points,
and Haar jump locations are exactly representable, which is what makes the
coefficient recursions reproduce interpolation values without rounding noise.
"""

import math

import numpy as np

from .basis_core import BasisFamily
from .errors import InputError
from .functions import as_bundle
from .indexing import IndexSet
from .quadrature import gauss_legendre_rule, weighted_sum
from .value_space import ValueSpace

__all__ = [
    "PiecewisePolynomial",
    "DenseSequence",
    "haar_eval",
    "haar_constancy_intervals",
    "haar_coefficient",
    "hat_function",
    "schauder_hat",
    "hat_coefficient",
    "hat_coefficients",
    "antiderivative",
    "ck_basis_element",
    "ck_coefficient",
    "lp_error",
    "HaarBasis",
    "HatBasis",
    "CkBasis",
]


# ---------------------------------------------------------------------------
# piecewise polynomials
# ---------------------------------------------------------------------------


class PiecewisePolynomial:
    """Polynomial pieces on consecutive intervals of a breakpoint grid.

    Piece i covers [breakpoints[i], breakpoints[i+1]] and stores local
    monomial coefficients c so that the value at x is
    sum_p c[i, p] * (x - breakpoints[i])**p.  Addition, scalar multiple,
    derivative and antiderivative are closed and exact (no quadrature).
    """

    def __init__(self, breakpoints, coefficients):
        bp = np.asarray(breakpoints, dtype=float)
        if bp.ndim != 1 or bp.size < 2:
            raise InputError("need at least two breakpoints")
        if np.any(np.diff(bp) <= 0):
            raise InputError("breakpoints must be strictly increasing")
        co = np.atleast_2d(np.asarray(coefficients, dtype=float))
        if co.shape[0] != bp.size - 1:
            raise InputError(
                f"{co.shape[0]} coefficient rows for {bp.size - 1} pieces"
            )
        bp.flags.writeable = False
        co.flags.writeable = False
        self.breakpoints = bp
        self.coefficients = co

    @property
    def npieces(self):
        return self.breakpoints.size - 1

    @property
    def degree(self):
        return self.coefficients.shape[1] - 1

    @property
    def domain(self):
        return float(self.breakpoints[0]), float(self.breakpoints[-1])

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        scalar = x.ndim == 0
        pts = x[None] if scalar else x
        lo, hi = self.domain
        if pts.size and (pts.min() < lo or pts.max() > hi):
            raise InputError(f"evaluation outside domain [{lo}, {hi}]")
        piece = np.clip(
            np.searchsorted(self.breakpoints, pts, side="right") - 1,
            0, self.npieces - 1,
        )
        u = pts - self.breakpoints[piece]
        co = self.coefficients
        vals = co[piece, co.shape[1] - 1]
        for p in range(co.shape[1] - 2, -1, -1):
            vals = vals * u + co[piece, p]
        return vals[0] if scalar else vals

    def derivative(self, order=1):
        if order < 0:
            raise InputError("derivative order must be >= 0")
        out = self
        for _ in range(order):
            co = out.coefficients
            if co.shape[1] == 1:
                dco = np.zeros((out.npieces, 1))
            else:
                powers = np.arange(1, co.shape[1])
                dco = co[:, 1:] * powers[None, :]
            out = PiecewisePolynomial(out.breakpoints, dco)
        return out

    def antiderivative(self):
        """The antiderivative vanishing at the left end, pieced continuously."""
        co = self.coefficients
        powers = np.arange(1, co.shape[1] + 1, dtype=float)
        body = co / powers[None, :]
        newco = np.zeros((self.npieces, co.shape[1] + 1))
        newco[:, 1:] = body
        widths = np.diff(self.breakpoints)
        running = 0.0
        for i in range(self.npieces):
            newco[i, 0] = running
            u = widths[i]
            v = newco[i, newco.shape[1] - 1]
            for p in range(newco.shape[1] - 2, -1, -1):
                v = v * u + newco[i, p]
            running = v
        return PiecewisePolynomial(self.breakpoints, newco)

    # -- closed arithmetic ---------------------------------------------------

    def __mul__(self, a):
        return PiecewisePolynomial(self.breakpoints, self.coefficients * float(a))

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1.0

    def __add__(self, other):
        if not isinstance(other, PiecewisePolynomial):
            return NotImplemented
        if self.domain != other.domain:
            raise InputError("cannot add piecewise polynomials on different domains")
        bp = np.union1d(self.breakpoints, other.breakpoints)
        deg = max(self.degree, other.degree)
        co = np.zeros((bp.size - 1, deg + 1))
        for src in (self, other):
            for i in range(bp.size - 1):
                j = min(
                    np.searchsorted(src.breakpoints, bp[i], side="right") - 1,
                    src.npieces - 1,
                )
                shifted = _taylor_shift(src.coefficients[j], bp[i] - src.breakpoints[j])
                co[i, : shifted.size] += shifted
        return PiecewisePolynomial(bp, co)

    def __sub__(self, other):
        if not isinstance(other, PiecewisePolynomial):
            return NotImplemented
        return self + (-other)

    def is_continuous(self, tol=1e-12):
        for i in range(self.npieces - 1):
            left = _poly_at(self.coefficients[i],
                            self.breakpoints[i + 1] - self.breakpoints[i])
            right = self.coefficients[i + 1, 0]
            if abs(left - right) > tol:
                return False
        return True

    def to_json(self):
        return {
            "breakpoints": [float(b) for b in self.breakpoints],
            "pieces": [[float(c) for c in row] for row in self.coefficients],
        }

    @classmethod
    def from_json(cls, data):
        try:
            return cls(data["breakpoints"], data["pieces"])
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed piecewise polynomial payload: {exc}")

    def __repr__(self):
        lo, hi = self.domain
        return (
            f"PiecewisePolynomial([{lo}, {hi}], pieces={self.npieces}, "
            f"degree={self.degree})"
        )


def _poly_at(coeffs, u):
    v = coeffs[-1]
    for c in coeffs[-2::-1]:
        v = v * u + c
    return v


def _taylor_shift(coeffs, delta):
    """Re-center local coefficients: c(u + delta) expanded in powers of u."""
    if delta == 0.0:
        return np.asarray(coeffs, dtype=float)
    n = len(coeffs)
    out = np.zeros(n)
    for p, c in enumerate(coeffs):
        if c == 0.0:
            continue
        for j in range(p + 1):
            out[j] += c * math.comb(p, j) * delta ** (p - j)
    return out


def antiderivative(p):
    """Antiderivative of a piecewise polynomial, vanishing at the left end."""
    if not isinstance(p, PiecewisePolynomial):
        raise InputError("antiderivative expects a PiecewisePolynomial")
    return p.antiderivative()


# ---------------------------------------------------------------------------
# dense point sequences
# ---------------------------------------------------------------------------


class DenseSequence:
    """A sequence of distinct points t_0 = a, t_1 = b, t_2, t_3, ... in [a, b].

    The enumeration order matters: hat number n is the hat of the partition
    {t_0, ..., t_n} peaking at the newest point t_n.  Instances are immutable;
    the coefficient-recursion engine they cache is an implementation detail.
    """

    def __init__(self, points):
        pts = np.asarray(points, dtype=float)
        if pts.ndim != 1 or pts.size < 2:
            raise InputError("dense sequence needs at least the two endpoints")
        a, b = pts[0], pts[1]
        if not a < b:
            raise InputError("first two points must be the interval ends a < b")
        if np.any(pts < a) or np.any(pts > b):
            raise InputError("all points must lie in [a, b]")
        if np.unique(pts).size != pts.size:
            raise InputError("points must be pairwise distinct")
        pts.flags.writeable = False
        self.points = pts
        self._engine = _HatRecursionEngine(self)

    @property
    def a(self):
        return float(self.points[0])

    @property
    def b(self):
        return float(self.points[1])

    def __len__(self):
        return self.points.size

    def prefix_partition(self, n):
        """The sorted partition T_n = sort(t_0, ..., t_n)."""
        if not 1 <= n < self.points.size:
            raise InputError(f"partition index {n} out of range")
        return np.sort(self.points[: n + 1])

    @classmethod
    def dyadic(cls, levels=11, a=0.0, b=1.0):
        """0, 1, 1/2, 1/4, 3/4, 1/8, 3/8, ... down to the given level, mapped to [a, b]."""
        if levels < 1:
            raise InputError("need at least one level")
        pts = [0.0, 1.0]
        for lev in range(1, levels + 1):
            scale = 2.0 ** lev
            pts.extend((2 * j - 1) / scale for j in range(1, 2 ** (lev - 1) + 1))
        pts = np.asarray(pts)
        return cls(a + (b - a) * pts)

    def to_json(self):
        return [float(t) for t in self.points]


class _HatRecursionEngine:
    """Memoized coefficient recursion lambda_n(f) = f(t_n) - sum_{k<n} lambda_k(f) hat_k(t_n).

    Structure (each point's flanking neighbors at insertion time) is built
    once; per-function coefficient prefixes are cached so ascending sweeps
    cost O(1) amortized per index.  Skipping hats that vanish at t_n leaves
    the floating-point accumulation unchanged (the skipped terms are exact
    zeros), so this is the plain recursion, just faster.
    """

    _CACHE_LIMIT = 16

    def __init__(self, seq):
        self.seq = seq
        self.left = [None, None]
        self.right = [None, None]
        self._sorted = [seq.a, seq.b]
        self._built = 2
        self._coeff_cache = {}

    def _extend_structure(self, n):
        pts = self.seq.points
        while self._built <= n:
            i = self._built
            t = float(pts[i])
            pos = int(np.searchsorted(self._sorted, t))
            self.left.append(self._sorted[pos - 1])
            self.right.append(self._sorted[pos])
            self._sorted.insert(pos, t)
            self._built += 1

    def hat_values_at(self, i):
        """hat_k(t_i) for all k < i, dense array (exact zeros off support)."""
        self._extend_structure(i)
        pts = self.seq.points
        a, b = self.seq.a, self.seq.b
        t = float(pts[i])
        vals = np.zeros(i)
        if i > 0:
            vals[0] = (b - t) / (b - a)
        if i > 1:
            vals[1] = (t - a) / (b - a)
        for k in range(2, i):
            lk, rk = self.left[k], self.right[k]
            if lk < t < rk:
                peak = pts[k]
                if t <= peak:
                    vals[k] = (t - lk) / (peak - lk)
                else:
                    vals[k] = (rk - t) / (rk - peak)
        return vals

    def coefficients(self, f, n):
        """Coefficient prefix lambda_0..lambda_n of ``f`` (cached per handle)."""
        self._extend_structure(n)
        key = id(f)
        cached = self._coeff_cache.get(key)
        if cached is not None and cached[0] is f and len(cached[1]) > n:
            return cached[1][: n + 1]
        pts = self.seq.points[: n + 1]
        fv = np.asarray(f(pts))
        if fv.shape[:1] != (n + 1,):
            raise InputError(
                f"handle returned shape {fv.shape} for {n + 1} points"
            )
        if not np.all(np.isfinite(fv)):
            raise InputError("non-finite function values in coefficient recursion")
        coeffs = [fv[0], fv[1]] if n >= 1 else [fv[0]]
        for i in range(2, n + 1):
            hv = self.hat_values_at(i)
            acc = np.zeros_like(fv[0])
            for k in range(i):
                if hv[k] != 0.0:
                    acc = acc + coeffs[k] * hv[k]
            coeffs.append(fv[i] - acc)
        if len(self._coeff_cache) >= self._CACHE_LIMIT:
            self._coeff_cache.pop(next(iter(self._coeff_cache)))
        self._coeff_cache[key] = (f, coeffs)
        return coeffs[: n + 1]


# ---------------------------------------------------------------------------
# Haar system on [0, 1]
# ---------------------------------------------------------------------------


def _haar_split(n):
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InputError(f"Haar index must be a positive integer, got {n!r}")
    if n == 1:
        return None
    k = int(n - 1).bit_length() - 1
    j = int(n) - (1 << k)
    return k, j


def haar_constancy_intervals(n):
    """[(lo, hi, sign)] where the n-th Haar function is constant and nonzero."""
    split = _haar_split(n)
    if split is None:
        return [(0.0, 1.0, 1)]
    k, j = split
    denom = 2.0 ** (k + 1)
    lo = (2 * j - 2) / denom
    mid = (2 * j - 1) / denom
    hi = (2 * j) / denom
    return [(lo, mid, 1), (mid, hi, -1)]


def haar_eval(n, x):
    """The n-th Haar function on [0, 1] (half-open steps, h_n(1) = 0 for n >= 2)."""
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    pts = x[None] if scalar else x
    if pts.size and (pts.min() < 0.0 or pts.max() > 1.0):
        raise InputError("Haar functions are defined on [0, 1]")
    split = _haar_split(n)
    if split is None:
        vals = np.ones_like(pts)
    else:
        (lo, mid, _), (_, hi, _) = haar_constancy_intervals(n)
        vals = np.where(
            (lo <= pts) & (pts < mid), 1.0,
            np.where((mid <= pts) & (pts < hi), -1.0, 0.0),
        )
    return vals[0] if scalar else vals


def _haar_piece_panels(lo, hi):
    # panel edges align with dyadic jumps down to level 6 (enough for rank 64)
    level = int(round(-math.log2(hi - lo))) if hi - lo < 1.0 else 0
    return max(4, 2 ** max(0, 6 - level))


def haar_coefficient(f, n, panels=None, order=8):
    """The raw Haar integral  integral_0^1 f(x) h_n(x) dx.

    Computed piecewise on the constancy intervals so jump locations never sit
    inside a quadrature panel.  Note this is the plain integral; the Haar
    basis family normalizes by ||h_n||_2^2 to make the functionals
    biorthogonal (see ``HaarBasis``).
    """
    acc = None
    for lo, hi, sign in haar_constancy_intervals(n):
        p = panels if panels is not None else _haar_piece_panels(lo, hi)
        rule = gauss_legendre_rule(lo, hi, panels=p, order=order)
        piece = weighted_sum(rule.nodes, rule.weights, f)
        contrib = sign * np.asarray(piece)
        acc = contrib if acc is None else acc + contrib
    if np.ndim(acc) == 0:
        return acc[()] if isinstance(acc, np.ndarray) else acc
    return acc


class HaarBasis(BasisFamily):
    """The Haar system, enumerated from 1 in the classical level order.

    Elements are the unnormalized step functions; coefficient functionals
    are the L^2-normalized integrals lambda_n(f) = 2^k integral f h_n for
    n = 2^k + j (factor 1 for n = 1), which makes lambda_m(h_n) = delta_nm
    and rank-2^m partial sums exactly the dyadic cell averages.
    """

    name = "haar"
    field = "real"
    coefficient_tol = 1e-8
    default_truncation = 64

    def __init__(self, panels=None, order=8):
        self.index_set = IndexSet("linear", origin=1)
        self.panels = panels
        self.order = order

    def element(self, n):
        self.index_set.validate_member(int(n))

        def h(x, n=int(n)):
            return haar_eval(n, x)

        return h

    def coefficient(self, f, n):
        n = int(n)
        self.index_set.validate_member(n)
        raw = haar_coefficient(f, n, panels=self.panels, order=self.order)
        split = _haar_split(n)
        if split is None:
            return raw
        return raw * float(2 ** split[0])

    def sample_points(self):
        return np.linspace(0.0, 1.0, 1001)

    def segment_breakpoints(self, k):
        """Dyadic grid fine enough to isolate every jump and kink of rank-k sums."""
        k = max(int(k), 1)
        level = (int(k) - 1).bit_length() if k >= 2 else 0
        step_level = min(level + 2, 12)
        m = 2 ** step_level
        return np.arange(m + 1) / m

    def lp_error(self, f, g, p, rank, space=None):
        return lp_error(f, g, p, self.segment_breakpoints(rank), space=space)


# ---------------------------------------------------------------------------
# Faber-Schauder hats
# ---------------------------------------------------------------------------


def hat_function(partition, j):
    """The hat of a sorted partition peaking at node j (one-sided at the ends).

    Value 1 at node j, 0 at the neighboring nodes, affine between, zero
    elsewhere; returned as a PiecewisePolynomial covering the whole span.
    """
    T = np.asarray(partition, dtype=float)
    if T.ndim != 1 or T.size < 2:
        raise InputError("partition needs at least two nodes")
    if np.any(np.diff(T) <= 0):
        raise InputError("partition nodes must be strictly increasing")
    if not 0 <= j <= T.size - 1:
        raise InputError(f"node index {j} out of range")
    co = np.zeros((T.size - 1, 2))
    if j > 0:
        width = T[j] - T[j - 1]
        co[j - 1] = (0.0, 1.0 / width)
    if j < T.size - 1:
        width = T[j + 1] - T[j]
        co[j] = (1.0, -1.0 / width)
    return PiecewisePolynomial(T, co)


def schauder_hat(seq, n):
    """Hat number n of a dense sequence: the hat of T_n peaking at t_n.

    n = 0 and n = 1 are the one-sided boundary hats of the coarsest
    partition {a, b}.  The result is compact: zero pieces outside the hat's
    support instead of one piece per partition cell.
    """
    if not isinstance(seq, DenseSequence):
        raise InputError("schauder_hat expects a DenseSequence")
    if not 0 <= n < len(seq):
        raise InputError(f"hat index {n} out of range for this sequence")
    a, b = seq.a, seq.b
    if n == 0:
        return PiecewisePolynomial([a, b], [[1.0, -1.0 / (b - a)]])
    if n == 1:
        return PiecewisePolynomial([a, b], [[0.0, 1.0 / (b - a)]])
    engine = seq._engine
    engine._extend_structure(n)
    peak = float(seq.points[n])
    left, right = engine.left[n], engine.right[n]
    bps = [a]
    rows = []
    if left > a:
        bps.append(left)
        rows.append((0.0, 0.0))
    bps.append(peak)
    rows.append((0.0, 1.0 / (peak - left)))
    bps.append(right)
    rows.append((1.0, -1.0 / (right - peak)))
    if right < b:
        bps.append(b)
        rows.append((0.0, 0.0))
    return PiecewisePolynomial(bps, rows)


def hat_coefficients(seq, f, n):
    """The full coefficient prefix lambda_0(f), ..., lambda_n(f).

    lambda_0 = f(a), lambda_1 = f(b), and for n >= 2 the interpolation
    recursion lambda_n = f(t_n) - sum_{k<n} lambda_k hat_k(t_n), accumulated
    in ascending k.  Vector-valued handles get componentwise-identical
    arithmetic.
    """
    if not isinstance(seq, DenseSequence):
        raise InputError("hat_coefficients expects a DenseSequence")
    if not 0 <= n < len(seq):
        raise InputError(f"coefficient index {n} out of range for this sequence")
    return list(seq._engine.coefficients(f, n))


def hat_coefficient(seq, f, n):
    """lambda_n(f) for the hat family of ``seq``."""
    return hat_coefficients(seq, f, n)[n]


class HatBasis(BasisFamily):
    """Piecewise-linear interpolation system over a dense point sequence."""

    name = "hat"
    field = "real"
    coefficient_tol = 1e-12
    default_truncation = 64

    def __init__(self, seq=None):
        self.seq = seq if seq is not None else DenseSequence.dyadic()
        self.index_set = IndexSet("linear", origin=0)
        self._elements = {}

    def element(self, n):
        n = int(n)
        if n not in self._elements:
            self._elements[n] = schauder_hat(self.seq, n)
        return self._elements[n]

    def coefficient(self, f, n):
        return hat_coefficient(self.seq, f, int(n))

    def sample_points(self):
        a, b = self.seq.a, self.seq.b
        return np.linspace(a, b, 1001)

    def segment_breakpoints(self, k):
        return np.sort(self.seq.points[: int(k) + 1])

    def lp_error(self, f, g, p, rank, space=None):
        return lp_error(f, g, p, self.segment_breakpoints(rank), space=space)


# ---------------------------------------------------------------------------
# C^k interval basis: polynomials then k-fold antiderivatives of hats
# ---------------------------------------------------------------------------


def ck_basis_element(seq, k, n):
    """Element n of the C^k family on [a, b].

    For n < k: the monomial (x - a)^n / n!.  For n >= k: the k-fold
    antiderivative (from a) of hat number n - k, an exact piecewise
    polynomial of degree k + 1.
    """
    if k < 0:
        raise InputError("smoothness order k must be >= 0")
    if n < 0:
        raise InputError("element index must be >= 0")
    a, b = seq.a, seq.b
    if n < k:
        co = np.zeros(n + 1)
        co[n] = 1.0 / math.factorial(n)
        return PiecewisePolynomial([a, b], [co])
    pp = schauder_hat(seq, n - k)
    for _ in range(k):
        pp = pp.antiderivative()
    return pp


def ck_coefficient(seq, k, f, n):
    """Coefficient functional n of the C^k family.

    mu_n(f) = f^(n)(a) for n < k, and the hat coefficient
    lambda_{n-k}(f^(k)) otherwise.  ``f`` must provide exact derivative
    handles up to order k (a FunctionBundle, a PiecewisePolynomial, or a
    materialized sum of such terms).
    """
    if n < 0:
        raise InputError("coefficient index must be >= 0")
    needed = min(n, k) if n < k else k
    bundle = as_bundle(f, max_order=needed)
    if n < k:
        dn = bundle.derivative(n)
        return np.asarray(dn(np.array([seq.a])))[0]
    return hat_coefficient(seq, bundle.derivative(k), n - k)


class CkBasis(BasisFamily):
    """C^k functions on an interval: jets at a, then smoothed hats.

    The family's own topology controls derivatives up to order k, so error
    rows and distinctness witnesses stack derivative residuals.
    """

    name = "ck"
    field = "real"
    coefficient_tol = 1e-12
    default_truncation = 64

    def __init__(self, k=2, seq=None):
        if k < 0:
            raise InputError("smoothness order k must be >= 0")
        self.k = int(k)
        self.seq = seq if seq is not None else DenseSequence.dyadic()
        self.index_set = IndexSet("linear", origin=0)
        self._elements = {}

    def element(self, n):
        n = int(n)
        if n not in self._elements:
            self._elements[n] = ck_basis_element(self.seq, self.k, n)
        return self._elements[n]

    def coefficient(self, f, n):
        return ck_coefficient(self.seq, self.k, f, int(n))

    def sample_points(self):
        return np.linspace(self.seq.a, self.seq.b, 513)

    def residual_rows(self, f, g, pts):
        fb = as_bundle(f, max_order=self.k)
        gb = as_bundle(g, max_order=self.k)
        rows = []
        for order in range(self.k + 1):
            diff = np.asarray(fb.derivative(order)(pts)) - np.asarray(
                gb.derivative(order)(pts)
            )
            rows.append(diff[:, None] if diff.ndim == 1 else diff)
        return np.concatenate(rows, axis=0)


# ---------------------------------------------------------------------------
# L^p error on explicit segments
# ---------------------------------------------------------------------------


def lp_error(f, g, p, breakpoints, panels=2, order=8, space=None):
    """(integral of p_alpha(f - g)^p over each segment, summed)^(1/p).

    ``breakpoints`` split the domain so that the integrand is smooth on each
    segment (place them on jumps and kinks); within a segment a small
    composite Gauss-Legendre rule is exact for piecewise-polynomial
    residuals.  Returns a scalar for scalar handles without a space, else
    one value per seminorm of ``space``.
    """
    if p < 1:
        raise InputError("p must be >= 1")
    bps = np.asarray(breakpoints, dtype=float)
    if bps.ndim != 1 or bps.size < 2 or np.any(np.diff(bps) <= 0):
        raise InputError("breakpoints must be a strictly increasing 1-D array")
    sp = space if space is not None else ValueSpace(1)

    def integrand(pts):
        rows = np.asarray(f(pts)) - np.asarray(g(pts))
        table = sp.seminorm_table(rows if rows.ndim == 2 else rows[:, None])
        return table ** p

    acc = None
    for i in range(bps.size - 1):
        rule = gauss_legendre_rule(bps[i], bps[i + 1], panels=panels, order=order)
        piece = weighted_sum(rule.nodes, rule.weights, integrand)
        acc = piece if acc is None else acc + piece
    vals = np.maximum(np.asarray(acc), 0.0) ** (1.0 / p)
    if space is None:
        return float(vals[0])
    return vals

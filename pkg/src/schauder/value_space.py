"""Finite-dimensional value spaces with explicit seminorm families.

A ``ValueSpace`` models K^m (K real or complex) together with a finite family
of seminorms p_0, ..., p_{A-1} that jointly separate points.  Vectors are plain
1-D numpy arrays; the space object only validates and evaluates.  All
operations are pure and spaces are immutable after construction, so instances
can be shared freely across threads.

Supported seminorm kinds
------------------------
``sup``                     max_i |v_i|
``weighted-sup``            max_i w_i |v_i|          (w_i >= 0, given per axis)
``euclidean``               sqrt(sum_i |v_i|^2)
``coordinate-subset-sup``   max over {i : w_i > 0} of |v_i|
"""

from dataclasses import dataclass

import numpy as np

from .errors import InputError

SEMINORM_KINDS = ("sup", "weighted-sup", "euclidean", "coordinate-subset-sup")

_KIND_LABEL = {
    "sup": "sup",
    "weighted-sup": "wsup",
    "euclidean": "eucl",
    "coordinate-subset-sup": "csup",
}


@dataclass(frozen=True)
class SeminormSpec:
    """One member of a seminorm family: a kind plus optional per-axis weights."""

    kind: str
    weights: tuple = None

    def __post_init__(self):
        # weight shape depends on the space dimension and is checked in
        # validated(); the kind can and should fail fast
        if self.kind not in SEMINORM_KINDS:
            raise InputError(
                f"unknown seminorm kind {self.kind!r}; known: {', '.join(SEMINORM_KINDS)}"
            )

    def validated(self, dimension):
        if self.kind not in SEMINORM_KINDS:
            raise InputError(f"unknown seminorm kind {self.kind!r}")
        if self.kind in ("sup", "euclidean"):
            if self.weights is not None:
                raise InputError(f"seminorm kind {self.kind!r} takes no weights")
            return self
        if self.weights is None:
            raise InputError(f"seminorm kind {self.kind!r} requires weights")
        w = np.asarray(self.weights, dtype=float)
        if w.shape != (dimension,):
            raise InputError(
                f"weights must have length {dimension}, got shape {w.shape}"
            )
        if not np.all(np.isfinite(w)) or np.any(w < 0):
            raise InputError("seminorm weights must be finite and nonnegative")
        if self.kind == "coordinate-subset-sup" and not np.any(w > 0):
            raise InputError("coordinate-subset-sup needs at least one positive weight")
        return SeminormSpec(self.kind, tuple(float(x) for x in w))


class ValueSpace:
    """K^m with a separating finite family of seminorms.

    Parameters
    ----------
    dimension : int
        m >= 1.
    field : str
        ``"real"`` or ``"complex"``.
    seminorms : sequence of SeminormSpec, optional
        Defaults to the single sup seminorm.  The family must separate
        points: for every basis vector some member must be positive on it.
    """

    def __init__(self, dimension, field="real", seminorms=None):
        if not isinstance(dimension, (int, np.integer)) or dimension < 1:
            raise InputError(f"dimension must be a positive integer, got {dimension!r}")
        if field not in ("real", "complex"):
            raise InputError(f"field must be 'real' or 'complex', got {field!r}")
        if seminorms is None:
            seminorms = (SeminormSpec("sup"),)
        seminorms = tuple(s.validated(dimension) for s in seminorms)
        if not seminorms:
            raise InputError("seminorm family must be nonempty")
        self.dimension = int(dimension)
        self.field = field
        self.seminorms = seminorms
        self._check_separation()

    # -- construction helpers -------------------------------------------------

    @property
    def dtype(self):
        return np.complex128 if self.field == "complex" else np.float64

    def vector(self, coords):
        """Coerce ``coords`` to a validated vector of this space."""
        v = np.asarray(coords)
        if v.shape != (self.dimension,):
            raise InputError(
                f"expected {self.dimension} coordinates, got shape {v.shape}"
            )
        if self.field == "real":
            if np.iscomplexobj(v):
                if np.any(v.imag != 0):
                    raise InputError("complex coordinates in a real value space")
                v = v.real
            return v.astype(np.float64)
        return v.astype(np.complex128)

    def zero(self):
        return np.zeros(self.dimension, dtype=self.dtype)

    # -- seminorm evaluation --------------------------------------------------

    def seminorm(self, alpha, v):
        """Evaluate the alpha-th seminorm on vector ``v``."""
        if not 0 <= alpha < len(self.seminorms):
            raise InputError(f"seminorm index {alpha} out of range")
        v = np.asarray(v)
        if v.shape != (self.dimension,):
            raise InputError(
                f"vector has shape {v.shape}, space dimension is {self.dimension}"
            )
        return self._apply(self.seminorms[alpha], v)

    def seminorm_values(self, v):
        """All seminorms of ``v`` as a float array of length len(seminorms)."""
        v = np.asarray(v)
        if v.shape != (self.dimension,):
            raise InputError(
                f"vector has shape {v.shape}, space dimension is {self.dimension}"
            )
        return np.array([self._apply(s, v) for s in self.seminorms])

    def seminorm_labels(self):
        """Stable short labels, used for CSV headers and reports."""
        return [
            f"p{i}_{_KIND_LABEL[s.kind]}" for i, s in enumerate(self.seminorms)
        ]

    def seminorm_table(self, rows):
        """Seminorms of many vectors at once: (k, m) rows -> (k, A) table."""
        rows = np.asarray(rows)
        if rows.ndim == 1 and self.dimension == 1:
            rows = rows[:, None]
        if rows.ndim != 2 or rows.shape[1] != self.dimension:
            raise InputError(
                f"row table has shape {rows.shape}, space dimension is {self.dimension}"
            )
        a = np.abs(rows)
        cols = []
        for s in self.seminorms:
            if s.kind == "sup":
                cols.append(np.max(a, axis=1))
            elif s.kind == "weighted-sup":
                cols.append(np.max(np.asarray(s.weights)[None, :] * a, axis=1))
            elif s.kind == "euclidean":
                cols.append(np.sqrt(np.sum(a * a, axis=1)))
            else:
                mask = np.asarray(s.weights) > 0
                cols.append(np.max(a[:, mask], axis=1))
        return np.stack(cols, axis=1)

    @staticmethod
    def _apply(spec, v):
        a = np.abs(v)
        if spec.kind == "sup":
            return float(np.max(a))
        if spec.kind == "weighted-sup":
            return float(np.max(np.asarray(spec.weights) * a))
        if spec.kind == "euclidean":
            return float(np.sqrt(np.sum(a * a)))
        mask = np.asarray(spec.weights) > 0
        return float(np.max(a[mask]))

    def _check_separation(self):
        for i in range(self.dimension):
            e = np.zeros(self.dimension)
            e[i] = 1.0
            if all(self._apply(s, e) == 0.0 for s in self.seminorms):
                raise InputError(
                    f"seminorm family does not separate coordinate {i}"
                )

    def __repr__(self):
        kinds = ",".join(s.kind for s in self.seminorms)
        return f"ValueSpace(dim={self.dimension}, field={self.field}, [{kinds}])"


def axpy(a, x, y):
    """a*x + y for two vectors of equal shape."""
    x = np.asarray(x)
    y = np.asarray(y)
    if x.shape != y.shape:
        raise InputError(f"shape mismatch in axpy: {x.shape} vs {y.shape}")
    return a * x + y


def coordinate_functional(i, v):
    """The i-th coordinate functional e_i'(v) = v_i."""
    v = np.asarray(v)
    if v.ndim != 1:
        raise InputError(f"expected a vector, got shape {v.shape}")
    if not isinstance(i, (int, np.integer)) or not 0 <= i < v.shape[0]:
        raise InputError(f"coordinate index {i!r} out of range for length {v.shape[0]}")
    return v[i]

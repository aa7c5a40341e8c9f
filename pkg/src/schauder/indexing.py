"""Index sets and graded enumeration orders for basis families.

Three shapes of index set occur:

* ``linear``  -- an integer ray {origin, origin+1, ...} graded by n itself,
* ``multi``   -- d-tuples of nonnegative integers graded by the l1 sum,
* ``lattice`` -- d-tuples of signed integers graded by the Euclidean norm.

``up_to(k)`` enumerates all indices of grade <= k sorted by (grade, lex); that
order is the accumulation order of every partial sum in the package, so it is
part of the reproducibility contract.
"""

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError


@dataclass(frozen=True)
class IndexSet:
    kind: str  # 'linear' | 'multi' | 'lattice'
    dim: int = 1
    origin: int = 0

    def __post_init__(self):
        if self.kind not in ("linear", "multi", "lattice"):
            raise InputError(f"unknown index set kind {self.kind!r}")
        if self.dim < 1:
            raise InputError("index set dimension must be >= 1")
        if self.kind == "linear" and self.origin not in (0, 1):
            raise InputError("linear index origin must be 0 or 1")

    def _tuplize(self, n):
        if isinstance(n, (int, np.integer)) and self.dim == 1:
            return (int(n),)
        return n

    def contains(self, n):
        if self.kind == "linear":
            return isinstance(n, (int, np.integer)) and n >= self.origin
        n = self._tuplize(n)
        if not (isinstance(n, tuple) and len(n) == self.dim):
            return False
        if self.kind == "multi":
            return all(isinstance(c, (int, np.integer)) and c >= 0 for c in n)
        return all(isinstance(c, (int, np.integer)) for c in n)

    def grade(self, n):
        """The grading |n| used for truncation thresholds."""
        if self.kind == "linear":
            return float(n)
        n = self._tuplize(n)
        if self.kind == "multi":
            return float(sum(n))
        return math.sqrt(sum(c * c for c in n))

    def up_to(self, k):
        """All indices of grade <= k, sorted by (grade, lex)."""
        if k < 0:
            raise InputError("truncation threshold must be >= 0")
        if self.kind == "linear":
            return list(range(self.origin, int(math.floor(k)) + 1))
        bound = int(math.floor(k))
        if self.kind == "multi":
            out = [
                n
                for n in itertools.product(range(bound + 1), repeat=self.dim)
                if sum(n) <= k
            ]
        else:
            rng = range(-bound, bound + 1)
            out = [
                n
                for n in itertools.product(rng, repeat=self.dim)
                if sum(c * c for c in n) <= k * k
            ]
        out.sort(key=lambda n: (self.grade(n), n))
        return out

    def validate_member(self, n):
        if not self.contains(n):
            raise InputError(f"index {n!r} not in {self.kind} index set (dim {self.dim})")
        return n

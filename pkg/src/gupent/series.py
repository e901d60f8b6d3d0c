"""Truncated first-order series ``c0 + alpha*c1 + O(alpha**2)``.

Coefficients may be Python floats or numpy arrays; arithmetic is applied
elementwise and every product drops the ``alpha**2`` term.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

Number = Union[float, int, np.ndarray]


@dataclass(frozen=True)
class Series1:
    c0: Number
    c1: Number = 0.0

    @classmethod
    def constant(cls, value: Number) -> "Series1":
        return cls(value, 0.0 * value)

    @staticmethod
    def _coerce(other) -> "Series1":
        if isinstance(other, Series1):
            return other
        return Series1(other, 0.0)

    def __add__(self, other) -> "Series1":
        o = self._coerce(other)
        return Series1(self.c0 + o.c0, self.c1 + o.c1)

    __radd__ = __add__

    def __neg__(self) -> "Series1":
        return Series1(-self.c0, -self.c1)

    def __sub__(self, other) -> "Series1":
        o = self._coerce(other)
        return Series1(self.c0 - o.c0, self.c1 - o.c1)

    def __rsub__(self, other) -> "Series1":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Series1":
        o = self._coerce(other)
        return Series1(self.c0 * o.c0, self.c0 * o.c1 + self.c1 * o.c0)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Series1":
        o = self._coerce(other)
        if np.any(np.asarray(o.c0) == 0):
            raise ZeroDivisionError("series division needs a nonzero leading coefficient")
        c0 = self.c0 / o.c0
        return Series1(c0, (self.c1 - c0 * o.c1) / o.c0)

    def __rtruediv__(self, other) -> "Series1":
        return self._coerce(other) / self

    def __pow__(self, p: float) -> "Series1":
        """Real power; ``c0`` must be positive unless ``p`` is a nonnegative integer."""
        if not (float(p).is_integer() and p >= 0) and np.any(np.asarray(self.c0) <= 0):
            raise ValueError("non-integer power of a series needs c0 > 0")
        lead = self.c0 ** p
        return Series1(lead, p * self.c0 ** (p - 1) * self.c1 if p != 0 else 0.0 * self.c1)

    def log(self) -> "Series1":
        if np.any(np.asarray(self.c0) <= 0):
            raise ValueError("log of a series needs c0 > 0")
        return Series1(np.log(self.c0), self.c1 / self.c0)

    def exp(self) -> "Series1":
        lead = np.exp(self.c0)
        return Series1(lead, lead * self.c1)

    def ratio(self) -> Number:
        """Relative first-order coefficient ``c1/c0``."""
        return self.c1 / self.c0

    def evaluate(self, alpha: float) -> Number:
        """Numerical value of the truncated series at ``alpha``."""
        return self.c0 + alpha * self.c1

    def __repr__(self) -> str:
        return f"Series1(c0={self.c0!r}, c1={self.c1!r})"

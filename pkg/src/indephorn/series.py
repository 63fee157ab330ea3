"""Truncated multivariate power series on the coefficient box 0 <= m_i <= N,
with exact rational arithmetic: multiplication, inversion, rational powers.

All supports are non-negative, so every operation here is exact within the
box (no truncation error leaks back into retained coefficients).
"""

from __future__ import annotations

import itertools
import json
import math
from fractions import Fraction

import numpy as np

from .poly import MultiPoly, rat_to_str, grlex_key


def box_cells(nvars, order):
    """All exponent tuples of the box, in graded order."""
    cells = list(itertools.product(range(order + 1), repeat=nvars))
    cells.sort(key=grlex_key)
    return cells


class TruncatedSeries:
    """Coefficients on the box max-norm <= order; missing entries are zero."""

    __slots__ = ("nvars", "order", "coeffs")

    def __init__(self, nvars, order, coeffs=None):
        clean = {}
        for m, c in (coeffs or {}).items():
            m = tuple(int(e) for e in m)
            if len(m) != nvars:
                raise ValueError("exponent length mismatch")
            if any(e < 0 or e > order for e in m):
                continue
            if isinstance(c, float):
                raise TypeError("floating point coefficients are not allowed")
            c = Fraction(c)
            if c:
                clean[m] = c
        self.nvars = nvars
        self.order = order
        self.coeffs = clean

    @classmethod
    def one(cls, nvars, order):
        return cls(nvars, order, {(0,) * nvars: Fraction(1)})

    def _check(self, other):
        if self.nvars != other.nvars or self.order != other.order:
            raise ValueError("series shape mismatch")

    def coefficient(self, m):
        m = tuple(m)
        if len(m) != self.nvars or any(e < 0 or e > self.order for e in m):
            raise ValueError(f"exponent {m} outside the box")
        return self.coeffs.get(m, Fraction(0))

    def constant_term(self):
        return self.coeffs.get((0,) * self.nvars, Fraction(0))

    def diagonal(self):
        """Coefficients c_{(k,...,k)} for k = 0..order."""
        return [
            self.coeffs.get((k,) * self.nvars, Fraction(0))
            for k in range(self.order + 1)
        ]

    def unsigned(self):
        """Divide out the (-1)^{|m|} sign pattern."""
        return TruncatedSeries(
            self.nvars,
            self.order,
            {m: c if sum(m) % 2 == 0 else -c for m, c in self.coeffs.items()},
        )

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        coeffs = dict(self.coeffs)
        for m, c in other.coeffs.items():
            coeffs[m] = coeffs.get(m, Fraction(0)) + c
        return TruncatedSeries(self.nvars, self.order, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(
            self.nvars, self.order, {m: -c for m, c in self.coeffs.items()}
        )

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def _coerce(self, x):
        if isinstance(x, TruncatedSeries):
            return x
        return TruncatedSeries(
            self.nvars, self.order, {(0,) * self.nvars: Fraction(x)}
        )

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = Fraction(other)
            return TruncatedSeries(
                self.nvars, self.order, {m: c * v for m, v in self.coeffs.items()}
            )
        self._check(other)
        a, b = self, other
        if len(a.coeffs) < len(b.coeffs):
            a, b = b, a
        # shift-and-add over the support of the sparser factor, vectorized
        # on an object ndarray so dense-by-dense products stay affordable
        shape = (self.order + 1,) * self.nvars
        arr = np.zeros(shape, dtype=object)
        for m, c in a.coeffs.items():
            arr[m] = c
        out = np.zeros(shape, dtype=object)
        for t, c in b.coeffs.items():
            src = tuple(slice(0, self.order + 1 - e) for e in t)
            dst = tuple(slice(e, self.order + 1) for e in t)
            out[dst] += c * arr[src]
        coeffs = {}
        for m in zip(*np.nonzero(out)):
            coeffs[tuple(int(e) for e in m)] = out[m]
        return TruncatedSeries(self.nvars, self.order, coeffs)

    __rmul__ = __mul__

    def __pow__(self, k):
        """Integer power; negative k goes through inversion."""
        if k < 0:
            return self.invert() ** (-k)
        out = TruncatedSeries.one(self.nvars, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        return (
            isinstance(other, TruncatedSeries)
            and self.nvars == other.nvars
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.nvars, self.order, frozenset(self.coeffs.items())))

    def invert(self):
        """Multiplicative inverse on the box (constant term must be nonzero),
        by degree-graded back-substitution."""
        c0 = self.constant_term()
        if c0 == 0:
            raise ValueError("cannot invert a series with zero constant term")
        inv0 = 1 / c0
        supp = [(m, c) for m, c in self.coeffs.items() if any(m)]
        q = {(0,) * self.nvars: inv0}
        for m in box_cells(self.nvars, self.order):
            if not any(m):
                continue
            s = Fraction(0)
            for t, c in supp:
                r = tuple(a - b for a, b in zip(m, t))
                if any(e < 0 for e in r):
                    continue
                v = q.get(r)
                if v is not None:
                    s += c * v
            if s:
                q[m] = -inv0 * s
        return TruncatedSeries(self.nvars, self.order, q)

    def pow_rational(self, s):
        """self**s for rational s; constant term must be 1.

        Graded recurrence from p * d_i(q) = s * d_i(p) * q with q = p^s:
        each coefficient is solved from strictly smaller ones, exactly.
        """
        s = Fraction(s)
        if self.constant_term() != 1:
            raise ValueError("rational powers need constant term 1")
        supp = [(m, c) for m, c in self.coeffs.items() if any(m)]
        q = {(0,) * self.nvars: Fraction(1)}
        for m in box_cells(self.nvars, self.order):
            if not any(m):
                continue
            i = next(k for k, e in enumerate(m) if e > 0)
            acc = Fraction(0)
            for t, c in supp:
                r = tuple(a - b for a, b in zip(m, t))
                if any(e < 0 for e in r):
                    continue
                v = q.get(r)
                if v is not None:
                    acc += c * (m[i] - t[i] - s * t[i]) * v
            if acc:
                q[m] = -acc / m[i]
        return TruncatedSeries(self.nvars, self.order, q)

    def sorted_coeffs(self):
        return sorted(self.coeffs.items(), key=lambda kv: grlex_key(kv[0]))

    def __str__(self):
        from .poly import MultiPoly

        body = str(MultiPoly(self.nvars, self.coeffs)) if self.coeffs else "0"
        return f"{body} + O(box {self.order})"

    __repr__ = __str__

    def to_json(self, signed=True):
        return json.dumps(
            {
                "nvars": self.nvars,
                "N": self.order,
                "signed": signed,
                "terms": [
                    {"m": list(m), "c": rat_to_str(c)}
                    for m, c in self.sorted_coeffs()
                ],
            }
        )

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        return cls(
            data["nvars"],
            data["N"],
            {tuple(t["m"]): Fraction(t["c"]) for t in data["terms"]},
        )


def from_poly(p, order):
    """Restrict a MultiPoly to the coefficient box."""
    return TruncatedSeries(p.nvars, order, dict(p.terms))


def mul(a, b):
    return a * b


def invert(p, order):
    """Series inverse of a polynomial (or series) with nonzero constant term."""
    if isinstance(p, MultiPoly):
        p = from_poly(p, order)
    return p.invert()


def pow_neg_s(p, s, order=None):
    """p^{-s} as a truncated series, for rational s; constant term must be 1."""
    if isinstance(p, MultiPoly):
        if order is None:
            raise ValueError("order required when expanding a polynomial")
        p = from_poly(p, order)
    return p.pow_rational(-Fraction(s))


def sqrt_inv(p, order=None):
    """p^{-1/2} as a truncated series."""
    return pow_neg_s(p, Fraction(1, 2), order)


def binomial(x, m):
    """binom(x, m) as a polynomial in the top entry: x(x-1)...(x-m+1)/m!.

    x may be an int or Fraction; m must be a non-negative integer.
    """
    if m < 0:
        return Fraction(0)
    if isinstance(x, int):
        if x >= 0:
            return Fraction(math.comb(x, m))
        num = 1
        for t in range(m):
            num *= x - t
        return Fraction(num, math.factorial(m))
    x = Fraction(x)
    num = Fraction(1)
    for t in range(m):
        num *= x - t
    return num / math.factorial(m)

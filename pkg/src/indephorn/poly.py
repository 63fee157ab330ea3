"""Sparse multivariate polynomials over exact rationals.

Exponent vectors are tuples of non-negative ints; coefficients are
`fractions.Fraction` (never floats).  Canonical term order is graded
lexicographic.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .graph import enumerate_independent_sets


def _rat(x):
    if isinstance(x, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(x)


def rat_to_str(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def grlex_key(m):
    return (sum(m), tuple(-e for e in m))


class MultiPoly:
    """Polynomial in nvars variables, stored as {exponent tuple: coefficient}.

    Zero coefficients are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(int(e) for e in m)
            if len(m) != nvars:
                raise ValueError(f"exponent {m} has wrong length (nvars={nvars})")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            c = _rat(c)
            if c:
                clean[m] = c
        self.nvars = nvars
        self.terms = clean

    # constructors

    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {})

    @classmethod
    def one(cls, nvars):
        return cls.constant(nvars, 1)

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: _rat(c)})

    @classmethod
    def var(cls, nvars, i):
        """The variable x_i, 1-based."""
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} out of range")
        m = [0] * nvars
        m[i - 1] = 1
        return cls(nvars, {tuple(m): Fraction(1)})

    # arithmetic

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("nvars mismatch")

    @staticmethod
    def _coerce(nvars, x):
        if isinstance(x, MultiPoly):
            return x
        return MultiPoly.constant(nvars, x)

    def __add__(self, other):
        other = self._coerce(self.nvars, other)
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return MultiPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(self.nvars, other))

    def __rsub__(self, other):
        return self._coerce(self.nvars, other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = _rat(other)
            return MultiPoly(self.nvars, {m: c * v for m, v in self.terms.items()})
        self._check(other)
        terms = {}
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = tuple(e1 + e2 for e1, e2 in zip(m1, m2))
                terms[m] = terms.get(m, Fraction(0)) + c1 * c2
        return MultiPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = MultiPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.nvars, other)
        return (
            isinstance(other, MultiPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def coefficient(self, m):
        return self.terms.get(tuple(m), Fraction(0))

    def evaluate(self, point):
        """Exact value at a point of rationals."""
        if len(point) != self.nvars:
            raise ValueError("point has wrong length")
        pt = [_rat(x) for x in point]
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(pt, m):
                if e:
                    v *= x**e
            total += v
        return total

    def compose(self, args):
        """Substitute args[j] (MultiPoly or rational, all in a common ring)
        for the j-th variable."""
        if len(args) != self.nvars:
            raise ValueError("wrong number of substitution arguments")
        polys = [a for a in args if isinstance(a, MultiPoly)]
        # all-scalar substitution lands in the 0-variable constant ring
        nv = polys[0].nvars if polys else 0
        args = [MultiPoly._coerce(nv, a) for a in args]
        out = MultiPoly.zero(nv)
        for m, c in self.terms.items():
            term = MultiPoly.constant(nv, c)
            for a, e in zip(args, m):
                if e:
                    term = term * a**e
            out = out + term
        return out

    def partial(self, i):
        """Partial derivative with respect to x_i (1-based)."""
        terms = {}
        for m, c in self.terms.items():
            e = m[i - 1]
            if e:
                mm = list(m)
                mm[i - 1] = e - 1
                terms[tuple(mm)] = c * e
        return MultiPoly(self.nvars, terms)

    # presentation

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(m)
                if e
            )
            if not mono:
                parts.append(rat_to_str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{rat_to_str(c)}*{mono}")
        s = parts[0]
        for p in parts[1:]:
            s += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return s

    __repr__ = __str__

    def to_json(self):
        return json.dumps(
            {
                "nvars": self.nvars,
                "terms": [
                    {"m": list(m), "c": rat_to_str(c)} for m, c in self.sorted_terms()
                ],
            }
        )

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        return cls(
            data["nvars"],
            {tuple(t["m"]): Fraction(t["c"]) for t in data["terms"]},
        )


def independence_polynomial(g):
    """I_Gamma: the sum of squarefree monomials over independent sets of g."""
    terms = {}
    for s in enumerate_independent_sets(g):
        m = [0] * g.n
        for v in s:
            m[v - 1] = 1
        terms[tuple(m)] = Fraction(1)
    return MultiPoly(g.n, terms)


def fibonacci_poly(k):
    """Multivariate Fibonacci polynomial F_k in max(k-2, 0) variables.

    F_0 = 0, F_1 = 1, F_k = F_{k-1} + x_{k-2} F_{k-2}.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    nv = max(k - 2, 0)
    if k == 0:
        return MultiPoly.zero(nv)
    prev, cur = MultiPoly.zero(nv), MultiPoly.one(nv)  # F_0, F_1
    for j in range(2, k + 1):
        # j = 2 pairs x_0 with F_0 = 0, so the variable is never needed there
        step = cur if prev.is_zero() else cur + MultiPoly.var(nv, j - 2) * prev
        prev, cur = cur, step
    return cur

def fibonacci_poly_at(k, args):
    """F_k with its j-th variable substituted by args[j] (k-2 arguments)."""
    f = fibonacci_poly(k)
    if f.nvars == 0:
        if len(args) != 0:
            raise ValueError("F_k with k <= 2 takes no arguments")
        # constant in an empty ring; re-express in the callers' ring is on them
        return f
    if len(args) != f.nvars:
        raise ValueError(f"F_{k} takes {f.nvars} arguments, got {len(args)}")
    return f.compose(args)


def cycle_indep_poly(n):
    """I_n: independence polynomial of the cycle C_n, extended by
    I_1 = 1 + x_1 and I_2 = 1 + x_1 + x_2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n <= 2:
        out = MultiPoly.one(n)
        for i in range(1, n + 1):
            out = out + MultiPoly.var(n, i)
        return out
    from .graph import make_cycle

    return independence_polynomial(make_cycle(n))


def delta_poly(n):
    """I_n^2 - (-1)^n 4 x_1...x_n, the discriminant of the cycle system."""
    i_n = cycle_indep_poly(n)
    mono = MultiPoly(n, {(1,) * n: Fraction(4)})
    sign = -1 if n % 2 == 0 else 1
    return i_n * i_n + sign * mono


def homogenize(p, d):
    """Homogenize p to total degree d, prepending a new variable x_0."""
    if d < p.degree():
        raise ValueError(f"degree bound {d} below deg(p)={p.degree()}")
    terms = {}
    for m, c in p.terms.items():
        terms[(d - sum(m),) + m] = c
    return MultiPoly(p.nvars + 1, terms)


def gradient(p):
    """List of partial derivatives of p, one per variable."""
    return [p.partial(i) for i in range(1, p.nvars + 1)]

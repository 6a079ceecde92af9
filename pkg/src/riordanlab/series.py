"""Truncated formal power series with exact coefficients.

A Series stores exactly ``order`` coefficients c_0..c_{order-1} over one
field; every operation is exact through that order.  Orders are capped at
2..64, the intended scale for exact triangular-group work.
"""

from __future__ import annotations

from .errors import (
    BackendMismatch,
    InnerValuationZero,
    NotInvertible,
    NotValuationOne,
)
from .scalars import Field, Scalar

MIN_ORDER = 2
MAX_ORDER = 64

INFINITY = float("inf")  # valuation of the zero series


def check_order(n: int) -> None:
    if not MIN_ORDER <= n <= MAX_ORDER:
        raise ValueError(f"order must be in {MIN_ORDER}..{MAX_ORDER}, got {n}")


class Series:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        coeffs = tuple(coeffs)
        check_order(len(coeffs))
        for c in coeffs:
            if not isinstance(c, Scalar) or c.p != field.p:
                raise BackendMismatch(f"coefficient {c!r} does not belong to {field}")
        self.field = field
        self.coeffs = coeffs

    # -- constructors ----------------------------------------------------
    @classmethod
    def from_values(cls, field, order, values):
        """Build from ints/strings/Scalars, zero-padding up to `order`."""
        vals = [field.scalar(v) for v in values]
        if len(vals) > order:
            raise ValueError(f"{len(vals)} coefficients exceed order {order}")
        vals += [field.zero()] * (order - len(vals))
        return cls(field, vals)

    @classmethod
    def zero(cls, field, order):
        return cls(field, [field.zero()] * order)

    @classmethod
    def one(cls, field, order):
        return cls.constant(field, order, field.one())

    @classmethod
    def constant(cls, field, order, c):
        return cls(field, [field.scalar(c)] + [field.zero()] * (order - 1))

    @classmethod
    def identity(cls, field, order):
        """The series y, the identity for composition."""
        return cls.monomial(field, order, 1)

    @classmethod
    def monomial(cls, field, order, k, c=1):
        if not 0 <= k < order:
            raise ValueError(f"exponent {k} out of range for order {order}")
        coeffs = [field.zero()] * order
        coeffs[k] = field.scalar(c)
        return cls(field, coeffs)

    # -- basics ----------------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.coeffs)

    def coeff(self, n: int) -> Scalar:
        return self.coeffs[n]

    def valuation(self):
        """Least index with a nonzero coefficient; INFINITY if none.

        A result of INFINITY only means "zero through this order": nothing
        is known beyond the truncation.
        """
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return INFINITY

    def _check_same(self, other):
        if not isinstance(other, Series):
            raise BackendMismatch(f"expected Series, got {type(other).__name__}")
        if other.field != self.field or len(other.coeffs) != len(self.coeffs):
            raise BackendMismatch("series orders or fields differ")

    # -- ring operations -------------------------------------------------
    def __add__(self, other):
        self._check_same(other)
        return Series(self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check_same(other)
        return Series(self.field, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return Series(self.field, [-c for c in self.coeffs])

    def scale(self, c: Scalar):
        return Series(self.field, [c * a for a in self.coeffs])

    def __mul__(self, other):
        self._check_same(other)
        n = len(self.coeffs)
        a, b = self.coeffs, other.coeffs
        out = []
        for m in range(n):
            acc = a[0] * b[m]
            for i in range(1, m + 1):
                acc = acc + a[i] * b[m - i]
            out.append(acc)
        return Series(self.field, out)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers not supported; use invert()")
        out = Series.one(self.field, self.order)
        for _ in range(k):
            out = out * self
        return out

    def invert(self):
        """Multiplicative inverse; requires a unit constant term."""
        c = self.coeffs
        if not c[0]:
            raise NotInvertible("constant term vanishes")
        inv0 = c[0].inverse()
        out = [inv0]
        for m in range(1, len(c)):
            acc = c[1] * out[m - 1]
            for i in range(2, m + 1):
                acc = acc + c[i] * out[m - i]
            out.append(-(inv0 * acc))
        return Series(self.field, out)

    def __truediv__(self, other):
        return self * other.invert()

    # -- composition -----------------------------------------------------
    def compose(self, inner):
        """self(inner(y)), exact through the order; inner must kill constants."""
        self._check_same(inner)
        if inner.coeffs[0]:
            raise InnerValuationZero("inner series has nonzero constant term")
        acc = Series.constant(self.field, self.order, self.coeffs[-1])
        for c in reversed(self.coeffs[:-1]):
            acc = acc * inner
            acc = Series(self.field, (acc.coeffs[0] + c,) + acc.coeffs[1:])
        return acc

    def comp_inverse(self):
        """Compositional inverse of a valuation-1 series, by back-substitution."""
        if self.valuation() != 1:
            raise NotValuationOne("compositional inverse needs valuation exactly 1")
        field, n = self.field, self.order
        b1_inv = self.coeffs[1].inverse()
        g = [field.zero()] * n
        g[1] = b1_inv
        for m in range(2, n):
            # coefficient m of self(g) with g_m still 0 must be cancelled
            h = self.compose(Series(field, g))
            g[m] = -(b1_inv * h.coeffs[m])
        return Series(field, g)

    # -- plumbing ----------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coeffs)
        return f"Series[{body}; O(y^{self.order})]"

    def to_json(self):
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, field, data):
        return cls(field, [field.parse(s) for s in data])

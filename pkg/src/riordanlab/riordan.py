"""Weights, Riordan pairs, and the weighted Riordan group.

A weight is a sequence w_0 = 1, w_n != 0; its reciprocal series
W(t) = sum t^n / w_n drives the whole calculus.  A graded matrix A is
*Riordan for W* when its weighted column series C_k = sum_n a_{n,k} y^n / w_n
form a geometric progression C_k = alpha * beta^k / w_k; the pair
(alpha, beta) with v(alpha) = 0, v(beta) = 1 then determines A.

All verdicts here are "at order N": identities are asserted through
coefficient N-1 and say nothing beyond the truncation.  Matrices built
from a pair have exactly geometric columns, and the membership check,
group law and pair extraction are mutually exact on such matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BackendMismatch,
    InvalidWeight,
    NotInvertible,
    NotRiordan,
    NotValuationOne,
    NotValuationZero,
    RootOfUnity,
    ZeroLambda,
)
from .scalars import Field, Scalar
from .series import Series, check_order
from .triangular import TriMatrix


class Weight:
    """Denominator sequence w_0..w_{N-1} with cached reciprocals 1/w_n."""

    __slots__ = ("field", "w", "recip")

    def __init__(self, field: Field, denominators):
        w = tuple(field.scalar(x) for x in denominators)
        check_order(len(w))
        if w[0] != field.one():
            raise InvalidWeight(f"w[0] must be 1, got {w[0]}")
        for n, x in enumerate(w):
            if not x:
                raise InvalidWeight(f"w[{n}] = 0")
        self.field = field
        self.w = w
        self.recip = tuple(x.inverse() for x in w)

    # -- builtins ----------------------------------------------------------
    @classmethod
    def exponential(cls, field, order, lam):
        """w_n = lam^n * n!; the classical umbral calculus."""
        lam = field.scalar(lam)
        if not lam:
            raise ZeroLambda("lambda must be nonzero")
        if field.p is not None and order > field.p:
            raise NotInvertible(
                f"n! vanishes in GF({field.p}) before order {order}"
            )
        w, fact = [], field.one()
        for n in range(order):
            if n:
                fact = fact * field.scalar(n)
            w.append(lam ** n * fact)
        return cls(field, w)

    @classmethod
    def geometric(cls, field, order, lam):
        """w_n = lam^n; the power-reduction calculus."""
        lam = field.scalar(lam)
        if not lam:
            raise ZeroLambda("lambda must be nonzero")
        return cls(field, [lam ** n for n in range(order)])

    @classmethod
    def q_factorial(cls, field, order, lam, q):
        """w_n = (lam/(1-q))^n * prod_{j<=n} (1 - q^j); the q-umbral calculus.

        Needs q^j != 1 for 1 <= j < order, so every w_n is a unit.
        """
        lam, q = field.scalar(lam), field.scalar(q)
        if not lam:
            raise ZeroLambda("lambda must be nonzero")
        one = field.one()
        for j in range(1, order):
            if q ** j == one:
                raise RootOfUnity(f"q^{j} = 1")
        base = lam / (one - q)
        w, prod = [], one
        for n in range(order):
            if n:
                prod = prod * (one - q ** n)
            w.append(base ** n * prod)
        return cls(field, w)

    # -- basics ----------------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.w)

    def series(self) -> Series:
        """W(t) = sum t^n / w_n as a truncated series."""
        return Series(self.field, self.recip)

    def ratio(self, n: int) -> Scalar:
        """w_n / w_{n-1}, the subdiagonal of the weighted derivative."""
        return self.w[n] / self.w[n - 1]

    def rescale(self, lam) -> "Weight":
        """w_n -> lam^n * w_n; membership in the Riordan group is unchanged."""
        lam = self.field.scalar(lam)
        if not lam:
            raise ZeroLambda("lambda must be nonzero")
        return Weight(self.field, [lam ** n * x for n, x in enumerate(self.w)])

    def _check_same(self, other: "Weight"):
        if other.field != self.field or other.order != self.order:
            raise BackendMismatch("weight orders or fields differ")

    def __eq__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        return self.field == other.field and self.w == other.w

    def __hash__(self):
        return hash((self.field, self.w))

    def __repr__(self):
        return f"Weight[{', '.join(str(x) for x in self.w)}]"

    def to_json(self):
        return {"w": [str(x) for x in self.w]}

    @classmethod
    def from_json(cls, field, data):
        return cls(field, [field.parse(s) for s in data["w"]])


@dataclass(frozen=True)
class RiordanPair:
    """(alpha, beta) with v(alpha) = 0 and v(beta) = 1."""

    alpha: Series
    beta: Series

    def __post_init__(self):
        if self.alpha.valuation() != 0:
            raise NotValuationZero("alpha must have valuation 0")
        if self.beta.valuation() != 1:
            raise NotValuationOne("beta must have valuation 1")
        if self.alpha.field != self.beta.field or self.alpha.order != self.beta.order:
            raise BackendMismatch("alpha and beta must share field and order")

    @property
    def order(self) -> int:
        return self.alpha.order

    @property
    def field(self) -> Field:
        return self.alpha.field

    def to_json(self):
        return {"alpha": self.alpha.to_json(), "beta": self.beta.to_json()}

    @classmethod
    def from_json(cls, field, data):
        return cls(
            Series.from_json(field, data["alpha"]),
            Series.from_json(field, data["beta"]),
        )


def identity_pair(field: Field, order: int) -> RiordanPair:
    return RiordanPair(Series.one(field, order), Series.identity(field, order))


def column_series(A: TriMatrix, W: Weight, k: int) -> Series:
    """C_k(y) = sum_n a_{n,k} y^n / w_n; valuation k for graded A."""
    if k >= A.order:
        raise ValueError(f"column {k} out of range")
    return Series(
        A.field, [A.entry(n, k) * W.recip[n] for n in range(A.order)]
    )


def _scaled_columns(A: TriMatrix, W: Weight) -> list[Series]:
    # u_k = w_k * C_k; the membership identity is u_k^2 = u_{k-1} u_{k+1}
    return [column_series(A, W, k).scale(W.w[k]) for k in range(A.order)]


def is_riordan(A: TriMatrix, W: Weight) -> bool:
    """Definitional membership test, checked at order N.

    Verifies w_k^2 C_k^2 = w_{k-1} C_{k-1} w_{k+1} C_{k+1} for
    1 <= k <= N-2.  Total: never divides, works for any graded matrix.
    """
    if A.order != W.order:
        raise BackendMismatch("matrix and weight orders differ")
    if not A.is_graded():
        return False
    u = _scaled_columns(A, W)
    for k in range(1, A.order - 1):
        if u[k] * u[k] != u[k - 1] * u[k + 1]:
            return False
    return True


def pair_to_matrix(pair: RiordanPair, W: Weight) -> TriMatrix:
    """Matrix with columns C_k = alpha * beta^k / w_k (exactly geometric)."""
    if pair.order != W.order:
        raise BackendMismatch("pair and weight orders differ")
    n = W.order
    zero = pair.field.zero()
    rows = [[zero] * (i + 1) for i in range(n)]
    col = pair.alpha
    for k in range(n):
        # a_{i,k} = w_i [y^i](alpha beta^k) / w_k
        for i in range(k, n):
            rows[i][k] = W.w[i] * col.coeffs[i] * W.recip[k]
        if k + 1 < n:
            col = col * pair.beta
    return TriMatrix(pair.field, rows)


def _beta_quotient(A: TriMatrix, W: Weight) -> Series:
    """w_1 C_1 / C_0, the candidate beta of any graded matrix."""
    c0 = column_series(A, W, 0)
    c1 = column_series(A, W, 1)
    return (c1 * c0.invert()).scale(W.w[1])


def matrix_to_pair(A: TriMatrix, W: Weight) -> RiordanPair:
    """Extract (alpha, beta) = (C_0, w_1 C_1 / C_0) and verify it rebuilds A.

    Raises NotRiordan when the definitional identity fails, or when the
    columns are not exactly geometric at this order (possible for matrices
    whose deviation hides beyond the truncation).
    """
    if not is_riordan(A, W):
        raise NotRiordan("matrix fails the weighted column identity")
    pair = RiordanPair(column_series(A, W, 0), _beta_quotient(A, W))
    if pair_to_matrix(pair, W) != A:
        raise NotRiordan("columns are not exactly geometric at this order")
    return pair


def riordan_mul(a: RiordanPair, b: RiordanPair) -> RiordanPair:
    """Group law: (alpha, beta) * (gamma, delta) = (alpha*(gamma o beta), delta o beta).

    pair_to_matrix turns this into the matrix product, exactly at order N.
    """
    return RiordanPair(
        a.alpha * b.alpha.compose(a.beta),
        b.beta.compose(a.beta),
    )


def riordan_inv(a: RiordanPair) -> RiordanPair:
    """Group inverse (1/(alpha o beta_bar), beta_bar), beta_bar = beta^{<-1>}."""
    beta_bar = a.beta.comp_inverse()
    return RiordanPair(a.alpha.compose(beta_bar).invert(), beta_bar)


def generating_expansion(pair: RiordanPair, W: Weight) -> list[Series]:
    """Columns of alpha(y) * W(x beta(y)) expanded in powers of x.

    Column k is alpha * beta^k / w_k; it coincides with column_series of
    pair_to_matrix for every k.
    """
    cols = []
    col = pair.alpha
    for k in range(W.order):
        cols.append(col.scale(W.recip[k]))
        if k + 1 < W.order:
            col = col * pair.beta
    return cols


def change_weight(A: TriMatrix, W: Weight, W2: Weight) -> TriMatrix:
    """Conjugate by U = diag(w_n / w2_n): A -> U^{-1} A U.

    Sends the W-Riordan matrix of (alpha, beta) to the W2-Riordan matrix of
    the identical pair, and Appell to Appell.
    """
    W._check_same(W2)
    if A.order != W.order:
        raise BackendMismatch("matrix and weight orders differ")
    rows = []
    for n in range(A.order):
        left = W2.w[n] * W.recip[n]
        rows.append(
            [left * A.rows[n][k] * W.w[k] * W2.recip[k] for k in range(n + 1)]
        )
    return TriMatrix(A.field, rows)

"""When is an Appell matrix for one weight Riordan for another?

The governing invariant is the gamma sequence
gamma_k = w2_k w_{k+1} / (w2_{k+1} w_k).  Membership always holds when
gamma is a nonzero constant (a rescaled weight, any alpha), and in
characteristic 0 when gamma is a never-vanishing nonconstant linear
function of k and alpha = c0 * e^{hy}.  Whenever the linear coefficient
c_1 of alpha is nonzero these two cases are the only ones; membership is
nevertheless always decided by the direct column-identity check, and the
case labels are diagnostic only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BackendMismatch, CharP, ForbiddenLambda, NotValuationZero
from .operators import appell_from_alpha
from .riordan import Weight, is_riordan
from .scalars import Field, Scalar, extended_binomial, factorial_inv
from .series import Series


@dataclass(frozen=True)
class GammaSeq:
    """gamma_0..gamma_{N-2}; entries are nonzero for valid weight pairs."""

    values: tuple

    def __len__(self):
        return len(self.values)

    def to_json(self):
        return [str(v) for v in self.values]


def gamma_sequence(W: Weight, W2: Weight) -> GammaSeq:
    W._check_same(W2)
    vals = tuple(
        W2.w[k] * W.w[k + 1] * W2.recip[k + 1] * W.recip[k]
        for k in range(W.order - 1)
    )
    return GammaSeq(vals)


@dataclass(frozen=True)
class GammaShape:
    """Shape of a gamma sequence: 'constant', 'linear' (lam - sigma*k), or 'neither'."""

    kind: str
    lam: Scalar | None = None
    sigma: Scalar | None = None


def classify_gamma(gamma: GammaSeq) -> GammaShape:
    """Fit gamma_k = lam (constant) or lam - sigma*k with sigma != 0.

    The linear case is recognized only in characteristic 0; the fit uses
    the first two entries and verifies the rest exactly.
    """
    vals = gamma.values
    first = vals[0]
    if all(v == first for v in vals):
        return GammaShape("constant", lam=first)
    field = Field(first.p)
    if field.char != 0:
        return GammaShape("neither")
    lam = first
    sigma = vals[0] - vals[1]
    if not sigma:
        return GammaShape("neither")
    for k, v in enumerate(vals):
        if v != lam - sigma * field.scalar(k):
            return GammaShape("neither")
    return GammaShape("linear", lam=lam, sigma=sigma)


def is_exponential_alpha(alpha: Series):
    """Some (c0, h) with alpha = c0 * e^{hy} through this order, else None."""
    if alpha.valuation() != 0:
        raise NotValuationZero("alpha must have valuation 0")
    field = alpha.field
    if field.p is not None and field.p < alpha.order:
        raise CharP(f"needs l! invertible for l < {alpha.order}")
    c0 = alpha.coeffs[0]
    h = alpha.coeffs[1] / c0
    power = field.one()
    for l in range(1, alpha.order):
        power = power * h
        if alpha.coeffs[l] != c0 * power * factorial_inv(field, l):
            return None
    return c0, h


def tilde_weight_from_gamma(W: Weight, gamma: GammaSeq) -> Weight:
    """The unique second weight realizing a prescribed gamma sequence."""
    if len(gamma) != W.order - 1:
        raise BackendMismatch("gamma length must be order - 1")
    w2 = [W.field.one()]
    for k, g in enumerate(gamma.values):
        w2.append(w2[k] * W.w[k + 1] * W.recip[k] * g.inverse())
    return Weight(W.field, w2)


def exp_case_weights(field: Field, order: int, lam, sigma) -> Weight:
    """Weight of (1 + sigma*t)^(lam/sigma): 1/w2_k = sigma^k binom(lam/sigma, k).

    Requires characteristic 0, sigma != 0, and lam outside
    {0, sigma, ..., (order-2)*sigma} so that no denominator vanishes.
    """
    if field.char != 0:
        raise CharP("defined in characteristic 0 only")
    lam, sigma = field.scalar(lam), field.scalar(sigma)
    if not sigma:
        raise ForbiddenLambda("sigma must be nonzero")
    mu = lam / sigma
    for k in range(order - 1):
        if mu == field.scalar(k):
            raise ForbiddenLambda(f"lambda = {k} * sigma makes w[{k + 1}] vanish")
    w = [field.one()]
    for k in range(1, order):
        w.append((sigma ** k * extended_binomial(mu, k)).inverse())
    return Weight(field, w)


@dataclass(frozen=True)
class TwoWeightReport:
    """Membership verdict with its diagnostic case label.

    case is "I" (constant gamma), "II" (linear gamma with exponential
    alpha), "other" (member outside both cases, only possible when the
    linear coefficient of alpha vanishes), or None for non-members.
    """

    member: bool
    case: str | None
    gamma: GammaSeq

    def to_json(self):
        return {"member": self.member, "case": self.case, "gamma": self.gamma.to_json()}


def classify_membership(alpha: Series, W: Weight, W2: Weight) -> TwoWeightReport:
    """Decide whether the Appell matrix of alpha under W is Riordan under W2.

    The verdict is the direct column-identity check at this order; the
    label reports which of the two structural cases explains it.
    """
    a = appell_from_alpha(alpha, W)
    member = is_riordan(a, W2)
    gamma = gamma_sequence(W, W2)
    case = None
    if member:
        shape = classify_gamma(gamma)
        if shape.kind == "constant":
            case = "I"
        elif shape.kind == "linear" and is_exponential_alpha(alpha) is not None:
            case = "II"
        else:
            case = "other"
    return TwoWeightReport(member, case, gamma)

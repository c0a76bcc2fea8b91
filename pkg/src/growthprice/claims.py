"""Claim and market value types plus the elementary payoff statistics.

Claims come in two flavors: the two-outcome claim that every closed-form
pricing rule is stated for, and a finite discrete claim.  Supporting more
than two outcomes is an extension of this package (the closed forms only
cover two); the general solver and the statistics handle it uniformly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidClaim, InvalidMarket, NonPositivePayoff

#: Tolerance on |sum(probs) - 1|.  Normalization is validated, never
#: silently repaired: a claim that does not sum to one is a data error.
PROB_SUM_TOL = 1e-12


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise InvalidClaim(f"{name} must be finite, got {value}")
    return value


@dataclass(frozen=True)
class TwoPointClaim:
    """Payoff alpha with probability p, payoff beta with probability 1-p.

    Payoffs may be negative.  Degenerate p in {0, 1} is a valid claim;
    pricing operations that need 0 < p < 1 reject it themselves.
    """

    alpha: float
    beta: float
    p: float

    def __post_init__(self):
        _require_finite("alpha", self.alpha)
        _require_finite("beta", self.beta)
        if not 0.0 <= self.p <= 1.0:
            raise InvalidClaim(f"p must lie in [0, 1], got {self.p}")

    @property
    def q(self) -> float:
        return 1.0 - self.p

    def to_discrete(self) -> DiscreteClaim:
        return DiscreteClaim(((self.alpha, self.p), (self.beta, self.q)))


@dataclass(frozen=True)
class DiscreteClaim:
    """Finite list of (payoff, probability) outcomes.

    Probabilities must be nonnegative and sum to one within PROB_SUM_TOL.
    Duplicate payoffs are allowed and not merged; every statistic is a sum.
    """

    outcomes: tuple[tuple[float, float], ...]

    def __post_init__(self):
        outcomes = tuple(
            (_require_finite("payoff", h), _require_finite("prob", p))
            for h, p in self.outcomes
        )
        object.__setattr__(self, "outcomes", outcomes)
        if not outcomes:
            raise InvalidClaim("claim needs at least one outcome")
        total = math.fsum(p for _, p in outcomes)
        if any(p < 0.0 for _, p in outcomes):
            raise InvalidClaim("probabilities must be nonnegative")
        if abs(total - 1.0) > PROB_SUM_TOL:
            raise InvalidClaim(f"probabilities sum to {total!r}, not 1")

    @property
    def payoffs(self) -> np.ndarray:
        return np.array([h for h, _ in self.outcomes])

    @property
    def probs(self) -> np.ndarray:
        return np.array([p for _, p in self.outcomes])


@dataclass(frozen=True)
class Market:
    """Single-period market described by its riskless rate r."""

    r: float

    def __post_init__(self):
        _require_finite("r", self.r)
        if self.r <= -1.0:
            raise InvalidMarket(f"riskless rate must exceed -1, got {self.r}")

    @property
    def discount(self) -> float:
        return 1.0 / (1.0 + self.r)


@dataclass(frozen=True)
class BinomialAsset:
    """Single-step riskless/risky market {B0, S0, r, a, b, p}.

    The risky asset moves S0 -> S0(1+b) with probability p and
    S0 -> S0(1+a) with probability 1-p, and -1 < a < r < b must hold.
    """

    B0: float
    S0: float
    r: float
    a: float
    b: float
    p: float

    def __post_init__(self):
        for name in ("B0", "S0", "r", "a", "b", "p"):
            _require_finite(name, getattr(self, name))
        if self.B0 <= 0.0 or self.S0 <= 0.0:
            raise InvalidMarket("asset prices B0, S0 must be positive")
        if not (-1.0 < self.a < self.r < self.b):
            raise InvalidMarket(
                f"need -1 < a < r < b, got a={self.a}, r={self.r}, b={self.b}"
            )
        if not 0.0 < self.p < 1.0:
            raise InvalidMarket(f"up probability must be in (0, 1), got {self.p}")

    @property
    def q(self) -> float:
        return 1.0 - self.p

    @property
    def up_price(self) -> float:
        return self.S0 * (1.0 + self.b)

    @property
    def down_price(self) -> float:
        return self.S0 * (1.0 + self.a)

    def terminal_claim(self) -> TwoPointClaim:
        """The claim f = S1 (state-aligned: alpha is the up payoff)."""
        return TwoPointClaim(self.up_price, self.down_price, self.p)


Claim = TwoPointClaim | DiscreteClaim


def as_discrete(claim: Claim) -> DiscreteClaim:
    if isinstance(claim, TwoPointClaim):
        return claim.to_discrete()
    return claim


def expectation(claim: Claim) -> float:
    """sum p_i h_i."""
    c = as_discrete(claim)
    return float(np.dot(c.probs, c.payoffs))


def _positive_support(claim: Claim, what: str) -> tuple[np.ndarray, np.ndarray]:
    c = as_discrete(claim)
    h, p = c.payoffs, c.probs
    live = p > 0.0
    if np.any(h[live] <= 0.0):
        raise NonPositivePayoff(f"{what} needs every payoff with positive "
                                "probability to be > 0")
    return h[live], p[live]


def geometric_mean(claim: Claim) -> float:
    """exp(sum p_i log h_i); payoffs must be positive."""
    h, p = _positive_support(claim, "geometric mean")
    return float(np.exp(np.dot(p, np.log(h))))


def harmonic_mean(claim: Claim) -> float:
    """1 / sum(p_i / h_i); payoffs must be positive."""
    h, p = _positive_support(claim, "harmonic mean")
    return float(1.0 / np.dot(p, 1.0 / h))


# --- JSON schema -----------------------------------------------------------
#
# {"type": "two_point", "alpha": 12.0, "beta": 1.1, "p": 0.99}
# {"type": "discrete", "outcomes": [{"payoff": 2.7, "prob": 0.5}, ...]}
# market: {"r": 0.2}


def claim_from_dict(data: dict) -> Claim:
    try:
        kind = data["type"]
    except (TypeError, KeyError):
        raise InvalidClaim("claim object needs a 'type' field") from None
    try:
        if kind == "two_point":
            return TwoPointClaim(float(data["alpha"]), float(data["beta"]),
                                 float(data["p"]))
        if kind == "discrete":
            outcomes = tuple((float(o["payoff"]), float(o["prob"]))
                             for o in data["outcomes"])
            return DiscreteClaim(outcomes)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidClaim(f"malformed {kind} claim: {exc}") from None
    raise InvalidClaim(f"unknown claim type {kind!r}")


def claim_to_dict(claim: Claim) -> dict:
    if isinstance(claim, TwoPointClaim):
        return {"type": "two_point", "alpha": claim.alpha, "beta": claim.beta,
                "p": claim.p}
    return {"type": "discrete",
            "outcomes": [{"payoff": h, "prob": p} for h, p in claim.outcomes]}


def market_from_dict(data: dict) -> Market:
    try:
        return Market(float(data["r"]))
    except (TypeError, KeyError, ValueError) as exc:
        raise InvalidMarket(f"malformed market object: {exc}") from None

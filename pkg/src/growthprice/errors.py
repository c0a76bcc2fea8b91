"""Exception hierarchy shared by all pricing modules."""


class PricingError(Exception):
    """Base class for every error raised by this package."""


class InvalidClaim(PricingError):
    """Claim data violates a type invariant (probabilities, finiteness)."""


class InvalidMarket(PricingError):
    """Market parameters violate -1 < a < r < b or positivity constraints."""


class NonPositivePayoff(PricingError):
    """A statistic that needs strictly positive payoffs saw h <= 0."""


class NonPositiveExpectation(PricingError):
    """Geometric pricing requires E = sum p_i h_i > 0."""


class DegenerateProbability(PricingError):
    """p in {0, 1} reached a code path that needs 0 < p < 1."""


class PreconditionViolation(PricingError):
    """Input outside an operation's stated precondition."""


class DomainViolation(PricingError):
    """log argument h*z/u - z + 1 <= 0: z beyond the admissible region."""


class BracketFailure(PricingError):
    """Root finding could not locate a sign change on the search bracket."""


class NoSignChange(PricingError):
    """Bracketed solver was handed endpoints with f(lo)*f(hi) > 0."""


class MaxIterations(PricingError):
    """Iterative solver exhausted its iteration budget."""


class SingularJacobian(PricingError):
    """Newton step rejected: Jacobian condition estimate too large."""


class DomainExit(PricingError):
    """Damping could not pull a Newton iterate back into the feasible set."""


class QuadratureDomainViolation(PricingError):
    """log argument non-positive at a quadrature node (z too large)."""


class NewtonDivergence(PricingError):
    """The 2-D log-normal solver failed to converge."""


class CalibrationFailure(PricingError):
    """No drift offset in the search range satisfies the price floor."""


class NoCrossing(PricingError):
    """Brute-force oracle: max growth never reaches 1+r (no-solution case)."""

"""Binomial summaries for Monte Carlo rates."""

import math

from codedsts_core.exceptions import InvalidParameterError
from scipy import stats


def wilson_interval(successes: int, n: int, confidence: float = 0.95) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if n < 1:
        raise InvalidParameterError("n", n, "at least one trial is required")
    if not 0 <= successes <= n:
        raise InvalidParameterError("successes", successes, f"must lie in [0, {n}]")

    ci = stats.binomtest(int(successes), int(n)).proportion_ci(
        confidence_level=confidence, method="wilson"
    )
    p_hat = successes / n
    # bounds at k = 0 and k = n can miss p_hat by an ulp
    return max(0.0, min(float(ci.low), p_hat)), min(1.0, max(float(ci.high), p_hat))


def binomial_z(hits: int, n: int, p: float) -> float:
    """Standardized distance of an observed count from its Binomial(n, p) mean."""
    if n < 1:
        raise InvalidParameterError("n", n, "at least one sample is required")
    expected = n * p
    variance = n * p * (1.0 - p)
    if variance == 0.0:
        return 0.0 if hits == expected else math.inf
    return (hits - expected) / math.sqrt(variance)

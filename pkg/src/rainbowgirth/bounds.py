"""Parameter feasibility for the sampling arguments and the matching-only threshold."""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import bisect

# p = 1 - 2^-i and eps = xi = 2^-j, largest first
TAU_GRID = tuple(2.0**-i for i in range(1, 21))
EPS_GRID = tuple(2.0**-j for j in range(2, 21))

HEAVY_SCALE = 10**6


def _check_p(p: float) -> None:
    if not 0 < p < 1:
        raise ValueError(f"p must lie in (0, 1), got {p}")


def matching_rate(p: float) -> float:
    """Probability that a size-2 matching has an edge inside S, each vertex kept with rate p."""
    return 2 * p**2 - p**4


def eq1_lhs(alpha: float, p: float) -> float:
    """Expected rainbow edges per vertex when a fraction ``alpha`` of the classes are matchings.

    ``alpha (2p^2 - p^4) + (1 - alpha) p^2``; exceeding ``p`` means the
    sampled set expects more rainbow edges than vertices.
    """
    if not 0 <= alpha <= 1:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    _check_p(p)
    return alpha * matching_rate(p) + (1 - alpha) * p**2


def eq2_lhs(alpha: float, xi: float, epsilon: float, p: float) -> float:
    """``eq1_lhs`` with class fractions shrunk by ``xi`` and rates by ``1 - epsilon``."""
    _check_p(p)
    return (1 - epsilon) * ((alpha - xi) * matching_rate(p) + (1 - alpha - xi) * p**2)


def default_heavy_threshold(epsilon: float, n: int) -> int:
    return max(2, math.ceil(epsilon**2 * n / HEAVY_SCALE))


@dataclass(frozen=True)
class ParameterSet:
    """Constants of the sampling argument.

    ``c`` is a third of the margin ``eq2_lhs - p`` and ``beta = p + c``.
    ``heavy_threshold`` of None means "resolve per instance" with
    :func:`default_heavy_threshold`.
    """

    alpha: float
    xi: float
    epsilon: float
    p: float
    c: float
    beta: float
    heavy_threshold: int | None = None

    @classmethod
    def derive(cls, alpha: float, xi: float, epsilon: float, p: float, heavy_threshold: int | None = None):
        c = (eq2_lhs(alpha, xi, epsilon, p) - p) / 3
        return cls(alpha, xi, epsilon, p, c, p + c, heavy_threshold)

    @property
    def margin(self) -> float:
        return eq2_lhs(self.alpha, self.xi, self.epsilon, self.p) - self.p

    def threshold_for(self, n: int) -> int:
        if self.heavy_threshold is not None:
            return self.heavy_threshold
        return default_heavy_threshold(self.epsilon, n)

    def class_floor_ok(self) -> bool:
        """Both class-count fractions at least 1/40."""
        return min(self.alpha - self.xi, 1 - self.alpha - self.xi) >= 1 / 40

    def as_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "xi": self.xi,
            "epsilon": self.epsilon,
            "p": self.p,
            "c": self.c,
            "beta": self.beta,
            "margin": self.margin,
            "heavy_threshold": self.heavy_threshold,
        }


def feasible_params(
    alpha: float, xi_hint: float | None = None, heavy_threshold: int | None = None
) -> ParameterSet | None:
    """First grid point with ``eq2_lhs(alpha, xi, eps, p) > p``.

    Scans ``p = 1 - tau`` for ``tau`` in 1/2, 1/4, ..., 2^-20 and, for each
    ``p``, ``eps = xi`` in 1/4, 1/8, ..., 2^-20.  With ``xi_hint`` the
    ``eps = xi`` scan is replaced by that single value.  Returns None if no
    grid point works.
    """
    if alpha <= 0.5 or alpha > 1:
        raise ValueError(f"alpha must lie in (1/2, 1], got {alpha}")
    eps_grid = EPS_GRID if xi_hint is None else (xi_hint,)
    for tau in TAU_GRID:
        p = 1 - tau
        if p < 0.5 or eq1_lhs(alpha, p) <= p:
            continue
        for eps in eps_grid:
            if eq2_lhs(alpha, eps, eps, p) > p:
                return ParameterSet.derive(alpha, eps, eps, p, heavy_threshold)
    return None


def gamma_prime(gamma: float) -> float:
    """Fraction of vertices a random one-edge-per-matching choice is expected to touch, at most."""
    return 1 - 0.5 ** (4 * gamma)


@dataclass(frozen=True)
class GammaParams:
    gamma: float
    gamma_prime: float

    @classmethod
    def of(cls, gamma: float) -> "GammaParams":
        return cls(gamma, gamma_prime(gamma))

    @property
    def admissible(self) -> bool:
        return self.gamma_prime < self.gamma


def gamma_threshold() -> float:
    """Root of ``1 - 2^(-4 gamma) = gamma`` on (1/2, 1), by bisection to 1e-12."""
    return bisect(lambda x: gamma_prime(x) - x, 0.5, 1.0, xtol=1e-12, rtol=4 * 2.0**-52)


def appendix_gamma_ok(gamma: float) -> bool:
    if not 0 < gamma <= 1:
        raise ValueError(f"gamma must lie in (0, 1], got {gamma}")
    return gamma_prime(gamma) < gamma


def alpha_upper_reference() -> float:
    """3*sqrt(6)/8, the matching-fraction threshold of the earlier matching-only result."""
    return 3 * math.sqrt(6) / 8

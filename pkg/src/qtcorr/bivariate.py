"""Copula families, joint bivariate models, and seeded sampling.

Each copula exposes its CDF both directly and through ``excess(u, uc, v,
vc) = C(u, v) - u v`` where ``uc = 1 - u`` and ``vc = 1 - v`` are supplied
exactly.  The excess is the integrand weight of every dependence integral
in this package and vanishes linearly at the square's edges, so the
tail-exact form keeps deep-tail quadrature nodes meaningful where ``1 - u``
is no longer representable in floating point.

Sampling uses conditional inversion: U uniform, then V solved from the
conditional CDF (closed-form partial derivative, vectorized bisection).
The Gaussian family samples through the correlated-normal transform and
the dependence extremes set V = U or V = 1 - U.
"""

from __future__ import annotations

import math
import zlib
from dataclasses import dataclass

import numpy as np
from scipy import special as sp

from .distributions import Distribution, Reflected
from .errors import DomainError, UnsupportedOperationError
from .estimation import PairedSample

_UNIFORM_FLOOR = 1e-300  # keeps quantile transforms finite at u == 0
_BISECT_ITERS = 48  # 2**-48 < 1e-12 conditional-inversion tolerance


def child_rng(seed: int, tag: str) -> np.random.Generator:
    """Deterministic child stream derived from (seed, operation tag)."""
    key = zlib.crc32(tag.encode("utf-8"))
    entropy = int(seed) & ((1 << 64) - 1)
    return np.random.default_rng(np.random.SeedSequence(entropy, spawn_key=(key,)))


class Copula:
    """Bivariate dependence function on the unit square."""

    has_cdf = True

    @property
    def family(self) -> str:
        return type(self).__name__.lower()

    def excess(self, u, uc, v, vc):
        """C(u, v) - u v with exact complements uc = 1-u, vc = 1-v."""
        raise NotImplementedError

    def cdf(self, u, v):
        u = np.asarray(u, dtype=float)
        v = np.asarray(v, dtype=float)
        out = u * v + self.excess(u, 1.0 - u, v, 1.0 - v)
        out = np.clip(out, 0.0, 1.0)
        return float(out) if out.ndim == 0 else out

    def cond_cdf(self, u, v):
        """Conditional CDF of V given U = u (the partial derivative in u)."""
        raise UnsupportedOperationError(
            f"{self.family} copula does not expose a conditional CDF"
        )

    def sample(self, n: int, rng: np.random.Generator):
        """n dependent uniform pairs via conditional inversion."""
        if n < 1:
            raise DomainError("sample size must be at least 1")
        u = np.maximum(rng.random(n), _UNIFORM_FLOOR)
        w = np.maximum(rng.random(n), _UNIFORM_FLOOR)
        lo = np.zeros(n)
        hi = np.ones(n)
        for _ in range(_BISECT_ITERS):
            mid = 0.5 * (lo + hi)
            below = self.cond_cdf(u, mid) < w
            lo = np.where(below, mid, lo)
            hi = np.where(below, hi, mid)
        v = np.maximum(0.5 * (lo + hi), _UNIFORM_FLOOR)
        return u, v


@dataclass(frozen=True)
class Independence(Copula):
    def excess(self, u, uc, v, vc):
        return np.zeros(np.broadcast_shapes(np.shape(u), np.shape(v)))

    def cond_cdf(self, u, v):
        return np.broadcast_to(np.asarray(v, dtype=float), np.broadcast_shapes(np.shape(u), np.shape(v)))

    def sample(self, n, rng):
        u = np.maximum(rng.random(n), _UNIFORM_FLOOR)
        v = np.maximum(rng.random(n), _UNIFORM_FLOOR)
        return u, v


@dataclass(frozen=True)
class FGM(Copula):
    """Farlie-Gumbel-Morgenstern family, C = uv (1 + gamma (1-u)(1-v))."""

    gamma: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.gamma) and -1.0 <= self.gamma <= 1.0):
            raise DomainError(f"FGM requires gamma in [-1, 1], got {self.gamma}")

    def excess(self, u, uc, v, vc):
        return self.gamma * u * uc * v * vc

    def cond_cdf(self, u, v):
        return v * (1.0 + self.gamma * (1.0 - 2.0 * u) * (1.0 - v))


@dataclass(frozen=True)
class GumbelBarnett(Copula):
    """C = u + v - 1 + (1-u)(1-v) exp(-theta log(1-u) log(1-v)), theta in [0, 1]."""

    theta: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.theta) and 0.0 <= self.theta <= 1.0):
            raise DomainError(f"Gumbel-Barnett requires theta in [0, 1], got {self.theta}")

    def excess(self, u, uc, v, vc):
        # the excess vanishes on the whole boundary; guard the log corners
        boundary = (u <= 0.0) | (v <= 0.0) | (uc <= 0.0) | (vc <= 0.0)
        with np.errstate(invalid="ignore", divide="ignore"):
            core = uc * vc * np.expm1(-self.theta * np.log(uc) * np.log(vc))
        return np.where(boundary, 0.0, core)

    def cond_cdf(self, u, v):
        lv = np.log1p(-v)
        core = np.exp(-self.theta * np.log1p(-u) * lv)
        return 1.0 - (1.0 - v) * core * (1.0 - self.theta * lv)


@dataclass(frozen=True)
class AMH(Copula):
    """Ali-Mikhail-Haq family, C = uv / (1 - theta (1-u)(1-v)), theta in [-1, 1]."""

    theta: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.theta) and -1.0 <= self.theta <= 1.0):
            raise DomainError(f"AMH requires theta in [-1, 1], got {self.theta}")

    def _denom(self, u, v):
        # 1 - theta (1-u)(1-v), grouped to stay exact for tiny u, v
        return (1.0 - self.theta) + self.theta * (u + v - u * v)

    def excess(self, u, uc, v, vc):
        boundary = (u <= 0.0) | (v <= 0.0) | (uc <= 0.0) | (vc <= 0.0)
        with np.errstate(invalid="ignore"):
            core = self.theta * u * v * uc * vc / self._denom(u, v)
        return np.where(boundary, 0.0, core)

    def cond_cdf(self, u, v):
        d = self._denom(u, v)
        return v * (1.0 - self.theta * (1.0 - v)) / (d * d)


@dataclass(frozen=True)
class GaussianCopula(Copula):
    """Copula of a correlated bivariate normal; sampled, never integrated."""

    rho: float = 0.0
    has_cdf = False

    def __post_init__(self):
        if not (math.isfinite(self.rho) and -1.0 < self.rho < 1.0):
            raise DomainError(f"Gaussian copula requires rho in (-1, 1), got {self.rho}")

    def excess(self, u, uc, v, vc):
        raise UnsupportedOperationError(
            "the Gaussian copula CDF has no closed form here; use Monte Carlo"
        )

    def sample(self, n, rng):
        if n < 1:
            raise DomainError("sample size must be at least 1")
        z1 = rng.standard_normal(n)
        z2 = self.rho * z1 + math.sqrt(1.0 - self.rho**2) * rng.standard_normal(n)
        return sp.ndtr(z1), sp.ndtr(z2)


@dataclass(frozen=True)
class FrechetUpper(Copula):
    """Comonotone bound C = min(u, v)."""

    def excess(self, u, uc, v, vc):
        return np.minimum(uc, vc) - uc * vc

    def sample(self, n, rng):
        u = np.maximum(rng.random(n), _UNIFORM_FLOOR)
        return u, u


@dataclass(frozen=True)
class FrechetLower(Copula):
    """Countermonotone bound C = max(u + v - 1, 0)."""

    def excess(self, u, uc, v, vc):
        return -np.minimum(u * v, uc * vc)

    def sample(self, n, rng):
        u = np.maximum(rng.random(n), _UNIFORM_FLOOR)
        return u, np.maximum(1.0 - u, _UNIFORM_FLOOR)


@dataclass(frozen=True)
class _ReflectedU(Copula):
    """Copula of (1 - U, V); realizes the margin reflection x -> -x."""

    base: Copula = None  # type: ignore[assignment]

    @property
    def has_cdf(self):  # type: ignore[override]
        return self.base.has_cdf

    def excess(self, u, uc, v, vc):
        return -self.base.excess(uc, u, v, vc)

    def sample(self, n, rng):
        u, v = self.base.sample(n, rng)
        return np.maximum(1.0 - u, _UNIFORM_FLOOR), v


@dataclass(frozen=True)
class _ReflectedV(Copula):
    """Copula of (U, 1 - V)."""

    base: Copula = None  # type: ignore[assignment]

    @property
    def has_cdf(self):  # type: ignore[override]
        return self.base.has_cdf

    def excess(self, u, uc, v, vc):
        return -self.base.excess(u, uc, vc, v)

    def sample(self, n, rng):
        u, v = self.base.sample(n, rng)
        return u, np.maximum(1.0 - v, _UNIFORM_FLOOR)


@dataclass(frozen=True)
class BivariateModel:
    """A copula with two marginal laws; induces the joint CDF C(F(x), G(y))."""

    copula: Copula
    margin_x: Distribution
    margin_y: Distribution

    def joint_cdf(self, x, y):
        return self.copula.cdf(self.margin_x.cdf(x), self.margin_y.cdf(y))

    def sample(self, n: int, seed: int) -> PairedSample:
        """n paired observations; deterministic for a given seed."""
        rng = child_rng(seed, "bivariate.sample")
        u, v = self.copula.sample(n, rng)
        return PairedSample(self.margin_x.quantile(u), self.margin_y.quantile(v))


def reflect_x(model: BivariateModel) -> BivariateModel:
    """Model of (-X, Y)."""
    return BivariateModel(
        _ReflectedU(model.copula), Reflected(model.margin_x), model.margin_y
    )


def reflect_y(model: BivariateModel) -> BivariateModel:
    """Model of (X, -Y)."""
    return BivariateModel(
        _ReflectedV(model.copula), model.margin_x, Reflected(model.margin_y)
    )


# CLI copula grammar: independence | fgm:g | gb:t | amh:t | gaussian:r |
# frechet-upper | frechet-lower
_SIMPLE = {
    "independence": Independence,
    "frechet-upper": FrechetUpper,
    "frechet-lower": FrechetLower,
}
_PARAMETRIC = {
    "fgm": FGM,
    "gb": GumbelBarnett,
    "gumbel-barnett": GumbelBarnett,
    "amh": AMH,
    "gaussian": GaussianCopula,
}


def parse_copula(text: str) -> Copula:
    """Parse a copula spec string (case-insensitive)."""
    parts = [p.strip() for p in text.strip().lower().split(":")]
    name = parts[0]
    if name in _SIMPLE:
        if len(parts) > 1 and any(p != "" for p in parts[1:]):
            raise DomainError(f"{name!r} takes no parameter: {text!r}")
        return _SIMPLE[name]()
    if name in _PARAMETRIC:
        if len(parts) != 2:
            raise DomainError(f"{name!r} requires exactly one parameter: {text!r}")
        try:
            value = float(parts[1])
        except ValueError as exc:
            raise DomainError(f"non-numeric parameter {parts[1]!r} in {text!r}") from exc
        return _PARAMETRIC[name](value)
    raise DomainError(
        f"unknown copula {name!r}; expected one of "
        f"{sorted(set(_SIMPLE) | set(_PARAMETRIC))}"
    )

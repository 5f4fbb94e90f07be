"""Catalog of univariate continuous laws with CDF/quantile machinery.

Every law exposes the same small surface: ``cdf``, ``quantile`` (the
left-continuous generalized inverse), ``quantile_density`` (derivative of
the quantile function), ``mean`` and the rank-preserving map
:func:`q_transform`.  Quantile-side evaluation is tail-aware: the
``*_comp`` variants take the distance to 1 directly, so integrators can
work at depths where ``1 - p`` is no longer representable.

All instances are immutable; operations are pure and vectorized over
numpy arrays (scalars in, scalars out).
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np
from scipy import special as sp

from .errors import DomainError, UnsupportedOperationError
from .quadrature import unit_integral

_EULER_GAMMA = 0.5772156649015329


def _as_array(x) -> tuple[np.ndarray, bool]:
    arr = np.asarray(x, dtype=float)
    if np.any(np.isnan(arr)):
        raise DomainError("NaN is not a valid argument")
    return arr, arr.ndim == 0


def _ret(arr: np.ndarray, scalar: bool):
    return float(arr) if scalar else arr


class Distribution:
    """Base class; subclasses implement the law-specific pieces."""

    # (lower, upper) support ends; math.inf sentinels for unbounded laws.
    support: tuple[float, float] = (-math.inf, math.inf)
    symmetry_center: float | None = None

    @property
    def name(self) -> str:
        return type(self).__name__.lower()

    @property
    def params(self) -> tuple[float, ...]:
        out = []
        for field in dataclasses.fields(self):  # type: ignore[arg-type]
            value = getattr(self, field.name)
            if isinstance(value, (int, float)):
                out.append(float(value))
        return tuple(out)

    def cdf(self, x):
        arr, scalar = _as_array(x)
        lo, hi = self.support
        out = np.empty_like(arr)
        below = arr <= lo
        above = arr >= hi
        inside = ~(below | above)
        out[below] = 0.0
        out[above] = 1.0
        out[inside] = self._cdf(arr[inside])
        return _ret(np.clip(out, 0.0, 1.0), scalar)

    def quantile(self, p):
        arr, scalar = _as_array(p)
        if np.any(arr < 0.0) or np.any(arr > 1.0):
            raise DomainError(f"quantile requires p in [0, 1], got {p!r}")
        out = np.empty_like(arr)
        at0 = arr == 0.0
        at1 = arr == 1.0
        inside = ~(at0 | at1)
        out[at0] = self.support[0]
        out[at1] = self.support[1]
        out[inside] = self._quantile(arr[inside])
        return _ret(out, scalar)

    def quantile_comp(self, q):
        """quantile(1 - q), accurate for very small q."""
        arr, scalar = _as_array(q)
        if np.any(arr < 0.0) or np.any(arr > 1.0):
            raise DomainError(f"quantile_comp requires q in [0, 1], got {q!r}")
        out = np.empty_like(arr)
        at0 = arr == 0.0
        at1 = arr == 1.0
        inside = ~(at0 | at1)
        out[at0] = self.support[1]
        out[at1] = self.support[0]
        out[inside] = self._quantile_comp(arr[inside])
        return _ret(out, scalar)

    def quantile_density(self, p):
        arr, scalar = _as_array(p)
        if np.any(arr <= 0.0) or np.any(arr >= 1.0):
            raise DomainError("quantile_density is defined on the open interval (0, 1)")
        return _ret(self._quantile_density(arr), scalar)

    def quantile_density_comp(self, q):
        """quantile_density(1 - q), accurate for very small q."""
        arr, scalar = _as_array(q)
        if np.any(arr <= 0.0) or np.any(arr >= 1.0):
            raise DomainError("quantile_density_comp is defined on (0, 1)")
        return _ret(self._quantile_density_comp(arr), scalar)

    def mean(self) -> float:
        # Fallback for laws without a closed form: integrate the quantile.
        return unit_integral(
            lambda p, upper: (self.quantile_comp(p) if upper else self.quantile(p)),
            1e-10,
            1e-9,
        )

    def quantile_integral(self, p):
        """Partial quantile mass: integral of quantile(v) dv over [0, p]."""
        arr, scalar = _as_array(p)
        if np.any(arr < 0.0) or np.any(arr > 1.0):
            raise DomainError(f"quantile_integral requires p in [0, 1], got {p!r}")
        return _ret(self._quantile_integral(arr), scalar)

    def quantile_integral_comp(self, q):
        """Tail quantile mass: integral of quantile(v) dv over [1 - q, 1]."""
        arr, scalar = _as_array(q)
        if np.any(arr < 0.0) or np.any(arr > 1.0):
            raise DomainError(f"quantile_integral_comp requires q in [0, 1], got {q!r}")
        return _ret(self._quantile_integral_comp(arr), scalar)

    # -- law-specific hooks (arrays in, arrays out, interior points only) --

    def _cdf(self, x):
        raise NotImplementedError

    def _quantile(self, p):
        raise NotImplementedError

    def _quantile_comp(self, q):
        return self._quantile(1.0 - q)

    def _quantile_density(self, p):
        raise NotImplementedError

    def _quantile_density_comp(self, q):
        return self._quantile_density(1.0 - q)

    def _quantile_integral(self, p):
        raise UnsupportedOperationError(
            f"{self.name} does not provide a closed-form quantile integral"
        )

    def _quantile_integral_comp(self, q):
        raise UnsupportedOperationError(
            f"{self.name} does not provide a closed-form quantile integral"
        )


@dataclass(frozen=True)
class Uniform(Distribution):
    a: float = 0.0
    b: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b) and self.b > self.a):
            raise DomainError(f"Uniform requires a < b, got ({self.a}, {self.b})")
        object.__setattr__(self, "support", (self.a, self.b))
        object.__setattr__(self, "symmetry_center", 0.5 * (self.a + self.b))

    def _cdf(self, x):
        return (x - self.a) / (self.b - self.a)

    def _quantile(self, p):
        return self.a + (self.b - self.a) * p

    def _quantile_comp(self, q):
        return self.b - (self.b - self.a) * q

    def _quantile_density(self, p):
        return np.full_like(p, self.b - self.a)

    _quantile_density_comp = _quantile_density

    def _quantile_integral(self, p):
        return self.a * p + 0.5 * (self.b - self.a) * p * p

    def _quantile_integral_comp(self, q):
        return self.b * q - 0.5 * (self.b - self.a) * q * q

    def mean(self) -> float:
        return 0.5 * (self.a + self.b)


@dataclass(frozen=True)
class Exponential(Distribution):
    rate: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.rate) and self.rate > 0.0):
            raise DomainError(f"Exponential requires rate > 0, got {self.rate}")
        object.__setattr__(self, "support", (0.0, math.inf))

    def _cdf(self, x):
        return -np.expm1(-self.rate * x)

    def _quantile(self, p):
        return -np.log1p(-p) / self.rate

    def _quantile_comp(self, q):
        return -np.log(q) / self.rate

    def _quantile_density(self, p):
        return 1.0 / (self.rate * (1.0 - p))

    def _quantile_density_comp(self, q):
        return 1.0 / (self.rate * q)

    def _quantile_integral(self, p):
        with np.errstate(invalid="ignore", divide="ignore"):
            raw = (p + (1.0 - p) * np.log1p(-p)) / self.rate
        return np.where(p >= 1.0, 1.0 / self.rate, raw)

    def _quantile_integral_comp(self, q):
        with np.errstate(invalid="ignore", divide="ignore"):
            raw = q * (1.0 - np.log(q)) / self.rate
        return np.where(q <= 0.0, 0.0, raw)

    def mean(self) -> float:
        return 1.0 / self.rate


@dataclass(frozen=True)
class Logistic(Distribution):
    loc: float = 0.0
    scale: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.scale) and self.scale > 0.0):
            raise DomainError(f"Logistic requires scale > 0, got {self.scale}")
        object.__setattr__(self, "symmetry_center", self.loc)

    def _cdf(self, x):
        return sp.expit((x - self.loc) / self.scale)

    def _quantile(self, p):
        return self.loc + self.scale * (np.log(p) - np.log1p(-p))

    def _quantile_comp(self, q):
        return self.loc + self.scale * (np.log1p(-q) - np.log(q))

    def _quantile_density(self, p):
        return self.scale / (p * (1.0 - p))

    def _quantile_density_comp(self, q):
        return self.scale / (q * (1.0 - q))

    @staticmethod
    def _xlogx_pair(p):
        with np.errstate(invalid="ignore", divide="ignore"):
            raw = p * np.log(p) + (1.0 - p) * np.log1p(-p)
        return np.where((p <= 0.0) | (p >= 1.0), 0.0, raw)

    def _quantile_integral(self, p):
        return self.loc * p + self.scale * self._xlogx_pair(p)

    def _quantile_integral_comp(self, q):
        return self.loc * q - self.scale * self._xlogx_pair(q)

    def mean(self) -> float:
        return self.loc


@dataclass(frozen=True)
class Normal(Distribution):
    mu: float = 0.0
    sigma: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.sigma) and self.sigma > 0.0):
            raise DomainError(f"Normal requires sigma > 0, got {self.sigma}")
        object.__setattr__(self, "symmetry_center", self.mu)

    def _cdf(self, x):
        return sp.ndtr((x - self.mu) / self.sigma)

    def _quantile(self, p):
        return self.mu + self.sigma * sp.ndtri(p)

    def _quantile_comp(self, q):
        return self.mu - self.sigma * sp.ndtri(q)

    @staticmethod
    def _std_qd(z):
        return np.sqrt(2.0 * np.pi) * np.exp(0.5 * z * z)

    def _quantile_density(self, p):
        return self.sigma * self._std_qd(sp.ndtri(p))

    def _quantile_density_comp(self, q):
        return self.sigma * self._std_qd(sp.ndtri(q))

    @staticmethod
    def _std_pdf_at_quantile(p):
        with np.errstate(invalid="ignore", over="ignore"):
            z = sp.ndtri(p)
            raw = np.exp(-0.5 * z * z) / np.sqrt(2.0 * np.pi)
        return np.where((p <= 0.0) | (p >= 1.0), 0.0, raw)

    def _quantile_integral(self, p):
        return self.mu * p - self.sigma * self._std_pdf_at_quantile(p)

    def _quantile_integral_comp(self, q):
        return self.mu * q + self.sigma * self._std_pdf_at_quantile(q)

    def mean(self) -> float:
        return self.mu


@dataclass(frozen=True)
class Weibull(Distribution):
    """Weibull with CDF 1 - exp(-(x / scale) ** shape)."""

    scale: float = 1.0
    shape: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.scale) and self.scale > 0.0):
            raise DomainError(f"Weibull requires scale > 0, got {self.scale}")
        if not (math.isfinite(self.shape) and self.shape > 0.0):
            raise DomainError(f"Weibull requires shape > 0, got {self.shape}")
        object.__setattr__(self, "support", (0.0, math.inf))

    def _cdf(self, x):
        return -np.expm1(-((x / self.scale) ** self.shape))

    def _quantile(self, p):
        return self.scale * (-np.log1p(-p)) ** (1.0 / self.shape)

    def _quantile_comp(self, q):
        return self.scale * (-np.log(q)) ** (1.0 / self.shape)

    def _quantile_density(self, p):
        lam = -np.log1p(-p)
        return self.scale / self.shape * lam ** (1.0 / self.shape - 1.0) / (1.0 - p)

    def _quantile_density_comp(self, q):
        lam = -np.log(q)
        return self.scale / self.shape * lam ** (1.0 / self.shape - 1.0) / q

    def _quantile_integral(self, p):
        a = 1.0 + 1.0 / self.shape
        with np.errstate(divide="ignore"):
            x = -np.log1p(-p)
        return self.mean() * sp.gammainc(a, x)

    def _quantile_integral_comp(self, q):
        a = 1.0 + 1.0 / self.shape
        with np.errstate(divide="ignore"):
            x = -np.log(q)
        return self.mean() * sp.gammaincc(a, x)

    def mean(self) -> float:
        return self.scale * math.gamma(1.0 + 1.0 / self.shape)


@dataclass(frozen=True)
class Laplace(Distribution):
    loc: float = 0.0
    scale: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.scale) and self.scale > 0.0):
            raise DomainError(f"Laplace requires scale > 0, got {self.scale}")
        object.__setattr__(self, "symmetry_center", self.loc)

    def _cdf(self, x):
        z = (x - self.loc) / self.scale
        return np.where(z < 0.0, 0.5 * np.exp(z), 1.0 - 0.5 * np.exp(-z))

    def _quantile(self, p):
        low = np.log(2.0 * np.minimum(p, 0.5))
        high = -np.log(2.0 * np.minimum(1.0 - p, 0.5))
        return self.loc + self.scale * np.where(p < 0.5, low, high)

    def _quantile_comp(self, q):
        low = np.log(2.0 * np.minimum(q, 0.5))
        high = -np.log(2.0 * np.minimum(1.0 - q, 0.5))
        return self.loc - self.scale * np.where(q < 0.5, low, high)

    def _quantile_density(self, p):
        return self.scale / np.minimum(p, 1.0 - p)

    _quantile_density_comp = _quantile_density

    def _quantile_integral(self, p):
        with np.errstate(invalid="ignore", divide="ignore"):
            low = p * (np.log(2.0 * p) - 1.0)
            high = (1.0 - p) * (np.log(2.0 * (1.0 - p)) - 1.0)
        low = np.where(p <= 0.0, 0.0, low)
        high = np.where(p >= 1.0, 0.0, high)
        return self.loc * p + self.scale * np.where(p <= 0.5, low, high)

    def _quantile_integral_comp(self, q):
        with np.errstate(invalid="ignore", divide="ignore"):
            low = q * (1.0 - np.log(2.0 * q))
            high = -(1.0 - q) * (np.log(2.0 * (1.0 - q)) - 1.0)
        low = np.where(q <= 0.0, 0.0, low)
        high = np.where(q >= 1.0, 0.0, high)
        return self.loc * q + self.scale * np.where(q <= 0.5, low, high)

    def mean(self) -> float:
        return self.loc


@dataclass(frozen=True)
class Gumbel(Distribution):
    """Extreme-value law with CDF exp(-exp(-(x - loc) / scale))."""

    loc: float = 0.0
    scale: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.scale) and self.scale > 0.0):
            raise DomainError(f"Gumbel requires scale > 0, got {self.scale}")

    def _cdf(self, x):
        return np.exp(-np.exp(-(x - self.loc) / self.scale))

    def _quantile(self, p):
        return self.loc - self.scale * np.log(-np.log(p))

    def _quantile_comp(self, q):
        return self.loc - self.scale * np.log(-np.log1p(-q))

    def _quantile_density(self, p):
        return self.scale / (p * (-np.log(p)))

    def _quantile_density_comp(self, q):
        return self.scale / ((1.0 - q) * (-np.log1p(-q)))

    def _quantile_integral(self, p):
        with np.errstate(invalid="ignore", divide="ignore", over="ignore"):
            x = -np.log(p)
            raw = -p * np.log(x) - sp.exp1(x)
        raw = np.where(p <= 0.0, 0.0, raw)
        raw = np.where(p >= 1.0, _EULER_GAMMA, raw)
        return self.loc * p + self.scale * raw

    def _quantile_integral_comp(self, q):
        with np.errstate(invalid="ignore", divide="ignore", over="ignore"):
            x = -np.log1p(-q)
            raw = _EULER_GAMMA + (1.0 - q) * np.log(x) + sp.exp1(x)
        raw = np.where(q <= 0.0, 0.0, raw)
        raw = np.where(q >= 1.0, _EULER_GAMMA, raw)
        return self.loc * q + self.scale * raw

    def mean(self) -> float:
        return self.loc + self.scale * _EULER_GAMMA


@dataclass(frozen=True)
class Pareto(Distribution):
    """Pareto on (1, inf) with CDF 1 - x ** (-1 / (1 - nu)), 0 < nu < 1.

    The single weight parameter matches the extended-Gini convention: the
    tail index is 1 / (1 - nu), so the mean is 1 / nu and the variance is
    finite only for nu > 1/2.
    """

    nu: float = 0.5

    def __post_init__(self):
        if not (math.isfinite(self.nu) and 0.0 < self.nu < 1.0):
            raise DomainError(f"Pareto requires 0 < nu < 1, got {self.nu}")
        object.__setattr__(self, "support", (1.0, math.inf))

    def _cdf(self, x):
        return -np.expm1(np.log(x) / (self.nu - 1.0))

    def _quantile(self, p):
        return (1.0 - p) ** (self.nu - 1.0)

    def _quantile_comp(self, q):
        return q ** (self.nu - 1.0)

    def _quantile_density(self, p):
        return (1.0 - self.nu) * (1.0 - p) ** (self.nu - 2.0)

    def _quantile_density_comp(self, q):
        return (1.0 - self.nu) * q ** (self.nu - 2.0)

    def _quantile_integral(self, p):
        with np.errstate(divide="ignore"):
            return -np.expm1(self.nu * np.log1p(-p)) / self.nu

    def _quantile_integral_comp(self, q):
        return q**self.nu / self.nu

    def mean(self) -> float:
        return 1.0 / self.nu


@dataclass(frozen=True)
class Power(Distribution):
    """Power law on (0, 1) with CDF 1 - (1 - x) ** (1 / (nu - 1)), nu > 1."""

    nu: float = 2.0

    def __post_init__(self):
        if not (math.isfinite(self.nu) and self.nu > 1.0):
            raise DomainError(f"Power requires nu > 1, got {self.nu}")
        object.__setattr__(self, "support", (0.0, 1.0))

    def _cdf(self, x):
        return -np.expm1(np.log1p(-x) / (self.nu - 1.0))

    def _quantile(self, p):
        return -np.expm1((self.nu - 1.0) * np.log1p(-p))

    def _quantile_comp(self, q):
        return -np.expm1((self.nu - 1.0) * np.log(q))

    def _quantile_density(self, p):
        return (self.nu - 1.0) * (1.0 - p) ** (self.nu - 2.0)

    def _quantile_density_comp(self, q):
        return (self.nu - 1.0) * q ** (self.nu - 2.0)

    def _quantile_integral(self, p):
        with np.errstate(divide="ignore"):
            return p + np.expm1(self.nu * np.log1p(-p)) / self.nu

    def _quantile_integral_comp(self, q):
        return q - q**self.nu / self.nu

    def mean(self) -> float:
        return 1.0 - 1.0 / self.nu


class Empirical(Distribution):
    """Step CDF of a finite sample; quantiles land on order statistics."""

    def __init__(self, values):
        arr = np.sort(np.asarray(values, dtype=float))
        if arr.size < 1:
            raise DomainError("Empirical requires at least one observation")
        if not np.all(np.isfinite(arr)):
            raise DomainError("Empirical requires finite observations")
        self._values = arr
        self.support = (float(arr[0]), float(arr[-1]))

    @property
    def name(self) -> str:
        return "empirical"

    @property
    def params(self) -> tuple[float, ...]:
        return ()

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def n(self) -> int:
        return int(self._values.size)

    def is_degenerate(self) -> bool:
        return bool(self._values[0] == self._values[-1])

    def cdf(self, x):
        arr, scalar = _as_array(x)
        out = np.searchsorted(self._values, arr, side="right") / self.n
        return _ret(out.astype(float), scalar)

    def quantile(self, p):
        arr, scalar = _as_array(p)
        if np.any(arr < 0.0) or np.any(arr > 1.0):
            raise DomainError(f"quantile requires p in [0, 1], got {p!r}")
        # inf{x : F(x) >= p}: the ceil(p * n)-th order statistic, ties to the
        # smallest index.
        idx = np.ceil(arr * self.n).astype(int)
        idx = np.clip(idx, 1, self.n) - 1
        return _ret(self._values[idx], scalar)

    def quantile_comp(self, q):
        arr, scalar = _as_array(q)
        return _ret(np.asarray(self.quantile(1.0 - arr)), scalar)

    def quantile_density(self, p):
        raise DomainError("Empirical has a step CDF; quantile_density is undefined")

    quantile_density_comp = quantile_density

    def mean(self) -> float:
        return float(np.mean(self._values))


# ---------------------------------------------------------------------------
# Derived laws (monotone images of a base law)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Affine(Distribution):
    """Law of shift + scale * X for scale > 0."""

    base: Distribution = None  # type: ignore[assignment]
    shift: float = 0.0
    scale: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.scale) and self.scale > 0.0):
            raise DomainError(f"Affine requires scale > 0, got {self.scale}")
        lo, hi = self.base.support
        object.__setattr__(
            self, "support", (self.shift + self.scale * lo, self.shift + self.scale * hi)
        )
        c = self.base.symmetry_center
        if c is not None:
            object.__setattr__(self, "symmetry_center", self.shift + self.scale * c)

    def _cdf(self, x):
        return self.base.cdf((x - self.shift) / self.scale)

    def _quantile(self, p):
        return self.shift + self.scale * self.base.quantile(p)

    def _quantile_comp(self, q):
        return self.shift + self.scale * self.base.quantile_comp(q)

    def _quantile_density(self, p):
        return self.scale * self.base.quantile_density(p)

    def _quantile_density_comp(self, q):
        return self.scale * self.base.quantile_density_comp(q)

    def _quantile_integral(self, p):
        return self.shift * p + self.scale * self.base.quantile_integral(p)

    def _quantile_integral_comp(self, q):
        return self.shift * q + self.scale * self.base.quantile_integral_comp(q)

    def mean(self) -> float:
        return self.shift + self.scale * self.base.mean()


@dataclass(frozen=True)
class Reflected(Distribution):
    """Law of -X."""

    base: Distribution = None  # type: ignore[assignment]

    def __post_init__(self):
        lo, hi = self.base.support
        object.__setattr__(self, "support", (-hi, -lo))
        c = self.base.symmetry_center
        if c is not None:
            object.__setattr__(self, "symmetry_center", -c)

    def _cdf(self, x):
        # P(-X <= x) = 1 - F(-x) for continuous X.
        return 1.0 - self.base.cdf(-x)

    def _quantile(self, p):
        return -self.base.quantile_comp(p)

    def _quantile_comp(self, q):
        return -self.base.quantile(q)

    def _quantile_density(self, p):
        return self.base.quantile_density_comp(p)

    def _quantile_density_comp(self, q):
        return self.base.quantile_density(q)

    def _quantile_integral(self, p):
        return -self.base.quantile_integral_comp(p)

    def _quantile_integral_comp(self, q):
        return -self.base.quantile_integral(q)

    def mean(self) -> float:
        return -self.base.mean()


@dataclass(frozen=True)
class ExpTransformed(Distribution):
    """Law of exp(X); strictly increasing image of the base law."""

    base: Distribution = None  # type: ignore[assignment]

    def __post_init__(self):
        lo, hi = self.base.support
        object.__setattr__(
            self,
            "support",
            (
                math.exp(lo) if lo > -math.inf else 0.0,
                math.exp(hi) if hi < 709.0 else math.inf,
            ),
        )

    def _cdf(self, x):
        out = np.zeros_like(x)
        pos = x > 0.0
        out[pos] = self.base.cdf(np.log(x[pos]))
        return out

    def _quantile(self, p):
        return np.exp(self.base.quantile(p))

    def _quantile_comp(self, q):
        return np.exp(self.base.quantile_comp(q))

    def _quantile_density(self, p):
        return np.exp(self.base.quantile(p)) * self.base.quantile_density(p)

    def _quantile_density_comp(self, q):
        return np.exp(self.base.quantile_comp(q)) * self.base.quantile_density_comp(q)


def q_transform(f: Distribution, g: Distribution, x):
    """Rank-preserving map G^{-1}(F(x)); sends the law F onto the law G."""
    return g.quantile(f.cdf(x))


# ---------------------------------------------------------------------------
# CLI spec grammar: name:param1:param2, case-insensitive
# ---------------------------------------------------------------------------

_FACTORIES = {
    "uniform": (Uniform, 2),
    "exponential": (Exponential, 1),
    "exp": (Exponential, 1),
    "logistic": (Logistic, 2),
    "normal": (Normal, 2),
    "weibull": (Weibull, 2),
    "rayleigh": (lambda scale=1.0: Weibull(scale, 2.0), 1),
    "laplace": (Laplace, 2),
    "gumbel": (Gumbel, 2),
    "extreme-value": (Gumbel, 2),
    "pareto": (Pareto, 1),
    "power": (Power, 1),
}


def parse_distribution(text: str) -> Distribution:
    """Parse a ``name:param1:param2`` spec string into a Distribution."""
    parts = [p.strip() for p in text.strip().lower().split(":")]
    name = parts[0]
    if name not in _FACTORIES:
        raise DomainError(
            f"unknown distribution {name!r}; expected one of {sorted(set(_FACTORIES))}"
        )
    factory, max_args = _FACTORIES[name]
    raw = [p for p in parts[1:] if p != ""]
    if len(raw) > max_args:
        raise DomainError(f"too many parameters for {name!r}: {text!r}")
    args = []
    for tok in raw:
        try:
            args.append(float(tok))
        except ValueError as exc:
            raise DomainError(f"non-numeric parameter {tok!r} in {text!r}") from exc
    return factory(*args)

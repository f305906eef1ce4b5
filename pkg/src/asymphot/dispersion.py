"""Wavenumber conventions and linearized material dispersion.

All vacuum wavenumbers are in rad/um and lengths in um, so typical cavity
scales are O(10) and typical wavenumbers O(10).  Angular frequencies come out
in rad/s through the vacuum speed of light.

The material dispersion is a first-order expansion around a per-mode
reference wavenumber.  Two evaluation conventions are supported:

``standard``
    K(k) = n_ref * k_ref + n_group * (k - k_ref), the Taylor form whose slope
    is the group index.

``verbatim-paper``
    K(k) = n_ref * k + n_group * (k - k_ref).  Kept selectable because some
    published figures may have been produced with this variant; the two agree
    at the reference wavenumber, where phase matching is imposed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, DomainError

# vacuum speed of light in um/s (k [rad/um] * C_UM_PER_S = omega [rad/s])
C_UM_PER_S = 2.99792458e14

CONVENTIONS = ("standard", "verbatim-paper")


def _check_convention(convention: str) -> None:
    if convention not in CONVENTIONS:
        raise ConfigError(f"unknown dispersion convention {convention!r}; "
                          f"expected one of {CONVENTIONS}")


@dataclass(frozen=True)
class LinearDispersion:
    """Linearized dispersion of one mode: refractive index ``n_ref`` and group
    index ``n_group`` at the reference vacuum wavenumber ``k_ref`` (rad/um)."""

    n_ref: float
    n_group: float
    k_ref: float

    def __post_init__(self):
        for name in ("n_ref", "n_group", "k_ref"):
            v = getattr(self, name)
            if not np.isfinite(v) or v <= 0:
                raise ConfigError(f"LinearDispersion.{name} must be positive, got {v!r}")


def material_wavenumber(d: LinearDispersion, k, convention: str = "standard"):
    """Material wavenumber K(k) in rad/um for vacuum wavenumber ``k``.

    ``k`` may be a scalar or an ndarray; the result matches its shape.
    """
    _check_convention(convention)
    k = np.asarray(k, dtype=float)
    if np.any(k <= 0) or not np.all(np.isfinite(k)):
        raise DomainError("vacuum wavenumber must be positive and finite")
    if convention == "standard":
        K = d.n_ref * d.k_ref + d.n_group * (k - d.k_ref)
    else:
        K = d.n_ref * k + d.n_group * (k - d.k_ref)
    return float(K) if K.ndim == 0 else K


def angular_frequency(k):
    """Angular frequency omega = c*k in rad/s for vacuum wavenumber k (rad/um)."""
    k = np.asarray(k, dtype=float)
    if np.any(k <= 0) or not np.all(np.isfinite(k)):
        raise DomainError("vacuum wavenumber must be positive and finite")
    w = C_UM_PER_S * k
    return float(w) if w.ndim == 0 else w


@dataclass(frozen=True)
class ModeSet:
    """Per-mode dispersions for pump, signal and idler plus the (dispersionless)
    channel indices, and the evaluation convention used for K(k)."""

    pump: LinearDispersion
    signal: LinearDispersion
    idler: LinearDispersion
    channel_left_index: float = 1.0
    channel_right_index: float = 1.0
    convention: str = "standard"

    def __post_init__(self):
        if self.channel_left_index <= 0 or self.channel_right_index <= 0:
            raise ConfigError("channel indices must be positive")
        _check_convention(self.convention)

    def wavenumbers(self, k_signal, k_idler, k_pump):
        """K_signal, K_idler, K_pump at the given vacuum wavenumbers."""
        return (material_wavenumber(self.signal, k_signal, self.convention),
                material_wavenumber(self.idler, k_idler, self.convention),
                material_wavenumber(self.pump, k_pump, self.convention))


def spdc_modes(k_pump: float, n: tuple[float, float, float],
               n_group: tuple[float, float, float],
               convention: str = "standard") -> ModeSet:
    """ModeSet for SPDC: pump referenced at k_pump, signal and idler at k_pump/2.

    ``n`` and ``n_group`` are (pump, signal, idler) triples.
    """
    return ModeSet(
        pump=LinearDispersion(n[0], n_group[0], k_pump),
        signal=LinearDispersion(n[1], n_group[1], k_pump / 2),
        idler=LinearDispersion(n[2], n_group[2], k_pump / 2),
        convention=convention,
    )


def sfwm_modes(k_pump: float, n: tuple[float, float, float],
               n_group: tuple[float, float, float],
               convention: str = "standard") -> ModeSet:
    """ModeSet for SFWM: pump at k_pump, signal at k_pump/2, idler at 3*k_pump/2.

    The references follow energy conservation k_idler = 2*k_pump - k_signal for
    a signal generated at half the pump wavenumber.
    """
    return ModeSet(
        pump=LinearDispersion(n[0], n_group[0], k_pump),
        signal=LinearDispersion(n[1], n_group[1], k_pump / 2),
        idler=LinearDispersion(n[2], n_group[2], 3 * k_pump / 2),
        convention=convention,
    )


@dataclass(frozen=True)
class WavenumberGrid:
    """Uniform, strictly increasing grid of vacuum wavenumbers."""

    k_min: float
    k_max: float
    count: int
    values: np.ndarray

    @property
    def spacing(self) -> float:
        return (self.k_max - self.k_min) / (self.count - 1)


def build_grid(center: float, half_width: float, count: int) -> WavenumberGrid:
    """Uniform grid of ``count`` points on [center - half_width, center + half_width]."""
    if half_width <= 0:
        raise ConfigError(f"grid half_width must be positive, got {half_width!r}")
    if count < 2:
        raise ConfigError(f"grid count must be >= 2, got {count!r}")
    lo, hi = center - half_width, center + half_width
    values = np.linspace(lo, hi, count)
    return WavenumberGrid(k_min=lo, k_max=hi, count=count, values=values)

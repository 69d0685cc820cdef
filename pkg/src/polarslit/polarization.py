"""Jones-vector algebra over the {vertical, horizontal} basis.

A polarization state is a complex 2-vector (cV, cH). Linear polarizer axes
are measured from the vertical; a polarizer at theta and one at theta + pi
are the same device, so axes are stored reduced modulo pi.

Circular convention used throughout the package:
|L> = (|V> + i|H>)/sqrt(2) and |R> = (|V> - i|H>)/sqrt(2). Observable
outputs (intensities, coincidence tables) do not depend on this choice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

#: Absolute tolerance for algebraic identities on normalized quantities.
NORM_TOL = 1e-12

_SQRT_HALF = math.sqrt(0.5)


@dataclass(frozen=True)
class PolarizationState:
    """Complex amplitudes on the V/H basis.

    ``source_norm`` is the norm of the unnormalized amplitude pair this
    state was built from (1.0 for states constructed directly); it lets
    transmission figures be referred back to the source beam.
    """

    cV: complex
    cH: complex
    source_norm: float = 1.0

    @property
    def norm_sq(self) -> float:
        """|cV|^2 + |cH|^2."""
        return abs(self.cV) ** 2 + abs(self.cH) ** 2

    @property
    def is_normalized(self) -> bool:
        return abs(self.norm_sq - 1.0) <= NORM_TOL


@dataclass(frozen=True)
class PolarizerAxis:
    """Transmission axis of an ideal linear polarizer, radians from vertical."""

    theta: float

    def __post_init__(self):
        if not math.isfinite(self.theta):
            raise ValueError("polarizer angle must be finite")
        object.__setattr__(self, "theta", self.theta % math.pi)


def make_input_state(a: complex, b: complex) -> PolarizationState:
    """Normalized beam state from (possibly complex) V/H amplitudes.

    Returns (a, b)/norm with norm = sqrt(|a|^2 + |b|^2) and records that
    norm on the state. Raises ValueError for the null beam (0, 0).
    """
    a = complex(a)
    b = complex(b)
    norm = math.sqrt(abs(a) ** 2 + abs(b) ** 2)
    if norm == 0.0:
        raise ValueError("null beam: amplitudes (a, b) must not both be zero")
    return PolarizationState(a / norm, b / norm, source_norm=norm)


def rotated_basis(theta: float) -> tuple[PolarizationState, PolarizationState]:
    """Orthonormal linear basis rotated by theta from vertical.

    Returns the pair ((cos t, sin t), (-sin t, cos t)), i.e. the state along
    theta and the state along theta + pi/2.
    """
    if not math.isfinite(theta):
        raise ValueError("basis angle must be finite")
    c, s = math.cos(theta), math.sin(theta)
    return (
        PolarizationState(complex(c), complex(s)),
        PolarizationState(complex(-s), complex(c)),
    )


def express_in_basis(state: PolarizationState, theta: float) -> tuple[complex, complex]:
    """Components of ``state`` along the rotated pair (theta, theta + pi/2).

    Returns (cV cos t + cH sin t, -cV sin t + cH cos t); the squared
    magnitudes of the two components sum to the squared norm of ``state``,
    and the state is recovered by weighting the basis pair with them.
    """
    c, s = math.cos(theta), math.sin(theta)
    return (state.cV * c + state.cH * s, -state.cV * s + state.cH * c)


def project_polarizer(
    state: PolarizationState, axis: PolarizerAxis
) -> tuple[PolarizationState, float]:
    """Ideal linear polarizer: keep only the component along the axis.

    Returns the projected state and the transmitted fraction
    |<axis|state>|^2 (Malus's law for a normalized input).
    """
    c, s = math.cos(axis.theta), math.sin(axis.theta)
    amp = state.cV * c + state.cH * s
    projected = PolarizationState(amp * c, amp * s, source_norm=state.source_norm)
    return projected, abs(amp) ** 2


def circular_states() -> tuple[PolarizationState, PolarizationState]:
    """The circular pair (|L>, |R>) = ((1, i)/sqrt(2), (1, -i)/sqrt(2))."""
    return (
        PolarizationState(complex(_SQRT_HALF, 0.0), complex(0.0, _SQRT_HALF)),
        PolarizationState(complex(_SQRT_HALF, 0.0), complex(0.0, -_SQRT_HALF)),
    )


def inner(bra: PolarizationState, ket: PolarizationState) -> complex:
    """Hermitian inner product <bra|ket>."""
    return (
        complex(bra.cV).conjugate() * ket.cV
        + complex(bra.cH).conjugate() * ket.cH
    )

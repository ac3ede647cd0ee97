"""End-to-end verifiers for shared tiling complements across all spectra.

For a p-element rational base Gamma, the property under test says: every
finite family of integer sets A with (1/p)A a spectrum of Gamma admits one
common complement R + mZ tiling Z with every member.  Both entry points
run bounded searches and report honestly: a certificate is re-verified
before it is returned, and exhausting a bound yields an inconclusive
verdict, never a refutation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .intervals import (IntervalUnion, OmegaTilingCertificate, PeriodicSpectrum,
                        assemble_tiling, build_omega, fibers, spectral_verdict)
from .spectra import (FinitePointSet, IntSet, as_fraction, enumerate_spectra,
                      is_spectrum)
from .tilings import (PeriodicSet, SearchTimeout, find_common_complement,
                      is_tiling_of_Z)

VERIFIED = "verified-with-certificate"
INCONCLUSIVE = "inconclusive-no-complement-in-bounds"
NO_SPECTRA = "no-spectra-in-bounds"


class InvalidFamilyError(ValueError):
    """A family member is not a spectrum base for the given Gamma."""


@dataclass(frozen=True)
class UtcReport:
    """Outcome of one bounded common-complement verification."""

    p: int
    gamma: FinitePointSet
    n_max: int
    m_max: int
    spectra_found: tuple[IntSet, ...]
    verdict: str
    certificate: Optional[PeriodicSet]
    timing: float


@dataclass(frozen=True)
class RoundTripReport:
    """Outcome of the spectral-set-tiles round trip on one instance."""

    p: int
    gamma: FinitePointSet
    family: tuple[IntSet, ...]
    breakpoints: tuple[Fraction, ...]
    omega: IntervalUnion
    spectral_ok: bool
    projected_complement: Optional[PeriodicSet]
    omega_tiling: Optional[OmegaTilingCertificate]
    consistency: bool


def _validated_gamma(gamma, p: int) -> FinitePointSet:
    gamma = gamma if isinstance(gamma, FinitePointSet) else FinitePointSet.of(gamma)
    if len(gamma) != p:
        raise ValueError(f"base has {len(gamma)} elements, expected {p}")
    PeriodicSpectrum(gamma, p)
    return gamma


def utc_verify(p: int, gamma, n_max: int, m_max: int, *,
               time_budget: Optional[float] = None) -> UtcReport:
    """Enumerate every integer spectrum of Gamma within {0..n_max}, then
    search for one complement R + mZ (m <= m_max) tiling Z with all of them.

    The verdict is verified-with-certificate only after every family member
    has been re-checked against the certificate.  Exhausting m_max, or the
    optional wall-clock budget in seconds, gives an inconclusive verdict.
    """
    start = time.monotonic()
    gamma = _validated_gamma(gamma, p)
    deadline = start + time_budget if time_budget is not None else None
    family = enumerate_spectra(gamma, p, n_max)
    if not family:
        return UtcReport(p, gamma, n_max, m_max, (), NO_SPECTRA, None,
                         time.monotonic() - start)
    try:
        certificate = find_common_complement(family, m_max, deadline=deadline)
    except SearchTimeout:
        certificate = None
    if certificate is None:
        return UtcReport(p, gamma, n_max, m_max, tuple(family), INCONCLUSIVE,
                         None, time.monotonic() - start)
    for a in family:
        if not is_tiling_of_Z(a, certificate):
            raise AssertionError(
                f"certificate {certificate} failed re-verification on {tuple(a)}")
    return UtcReport(p, gamma, n_max, m_max, tuple(family), VERIFIED,
                     certificate, time.monotonic() - start)


def roundtrip(p: int, gamma, family, breakpoints, m_max: int, *,
              time_budget: Optional[float] = None) -> RoundTripReport:
    """Run one instance of the construction that turns a spectral family
    into a tiling of R.

    Checks that each (1/p)A_i is a spectrum of Gamma, builds the measure-one
    union omega from the breakpoints, confirms Gamma + pZ is a spectrum of
    omega, searches the fibers for a common complement within m_max, and on
    success assembles and exactly verifies the tiling of R by (1/p)(R + mZ).
    consistency is true only when every stage agrees.
    """
    start = time.monotonic()
    gamma = _validated_gamma(gamma, p)
    sets = tuple(a if isinstance(a, IntSet) else IntSet.of(a) for a in family)
    for i, a in enumerate(sets):
        scaled = FinitePointSet.of(Fraction(k, p) for k in a)
        if not is_spectrum(gamma, scaled):
            raise InvalidFamilyError(
                f"family member {i} = {tuple(a)} scaled by 1/{p} is not a "
                f"spectrum of the base")
    rs = tuple(as_fraction(r) for r in breakpoints)
    omega = build_omega(p, sets, rs)
    spectral_ok = spectral_verdict(omega, gamma, p)
    deadline = start + time_budget if time_budget is not None else None
    try:
        complement = find_common_complement(
            fibers(omega, p).fiber_family(), m_max, deadline=deadline)
    except SearchTimeout:
        complement = None
    certificate = None
    consistency = False
    if complement is not None:
        certificate = assemble_tiling(omega, p, complement.residues,
                                      complement.period)
        consistency = spectral_ok and all(
            is_tiling_of_Z(a, complement) for a in sets)
    return RoundTripReport(p, gamma, sets, rs, omega, spectral_ok,
                           complement, certificate, consistency)

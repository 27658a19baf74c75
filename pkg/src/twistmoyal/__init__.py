"""Exact first-order symbolic engine for a twisted Moyal product on the plane,
with oscillator ladder states, conformance suites and numeric cross-checks."""

from .algebra import (
    A,
    ABAR,
    OMEGA,
    OMEGABAR,
    ONE_ELEMENT,
    THETA,
    ZERO_ELEMENT,
    Monomial,
    NotAUnit,
    TwistedElement,
    derive,
    format_element,
    gaussian,
    invert_unit,
    limit_omega_zero,
    mirror,
    parse_element,
)
from .conformance import ENGINE_VERSION as __version__
from .scalars import Number
from .star import commutator_star, star_gen_left, star_gen_right, star_series
from .states import engine_energy, extract_eigenvalue, fundamental, ladder, printed_energy
from .suites import SuiteConfig, run_suite, spectrum_table

__all__ = [
    "A", "ABAR", "OMEGA", "OMEGABAR", "ONE_ELEMENT", "THETA", "ZERO_ELEMENT",
    "Monomial", "NotAUnit", "Number", "TwistedElement", "SuiteConfig",
    "commutator_star", "derive", "engine_energy", "extract_eigenvalue", "format_element",
    "fundamental", "gaussian", "invert_unit", "ladder", "limit_omega_zero", "mirror",
    "printed_energy", "parse_element", "run_suite", "spectrum_table", "star_gen_left",
    "star_gen_right", "star_series", "__version__",
]

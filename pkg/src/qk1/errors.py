"""Exception types shared across the package.

Plain division by zero raises the builtin ``ZeroDivisionError``; everything
else that can go wrong in the exact kernel or the pipelines gets a dedicated
type so callers can react precisely.
"""

from __future__ import annotations


class QK1Error(Exception):
    """Base class for package-specific errors."""


class NotRational(QK1Error):
    """A cyclotomic scalar with nonzero non-constant coordinates was coerced to Q."""


class IrreducibleDenominator(QK1Error):
    """A denominator factor does not split over the configured cyclotomic field."""


class NonzeroConstantTerm(QK1Error):
    """series_exp requires a series with zero constant term."""


class ConstantTermNotOne(QK1Error):
    """series_log requires a series with constant term one."""


class IndexBeyondCutoff(QK1Error):
    """A coefficient was requested past the truncation degree."""


class NoContraction(QK1Error):
    """Fixed-point iteration failed to increase the ideal order of differences."""


class TauMismatch(QK1Error):
    """The transformed input does not vanish at q = 1 for the supplied tau."""


class UnsupportedOrder(QK1Error):
    """Genus-1 data is only available up to the supported truncation order."""


class MissingCorrelatorData(QK1Error):
    """A correlator with more insertions than the stored table would be needed."""


class UnsupportedAtom(QK1Error):
    """The exponential substitution only covers pole multiplicities 1 and 2."""


class ParseError(QK1Error):
    """Malformed expression text; carries the byte offset of the failure."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class NonIntegerExponent(ParseError):
    """``^`` was applied with a non-integer exponent."""

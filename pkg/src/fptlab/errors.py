"""Exception hierarchy shared by all fptlab modules.

Every checked contract violation raises a subclass of FptlabError, so
callers (and the CLI exit-code mapping) can distinguish bad input,
violated preconditions, and exhausted resource guards.
"""

from __future__ import annotations


class FptlabError(Exception):
    """Base class for all errors raised by fptlab."""


# --- input / contract violations -------------------------------------------

class RingMismatch(FptlabError):
    """Operands live in different rings (or fields of different modulus)."""


class ZeroInverse(FptlabError):
    """Attempted to invert 0 in a prime field."""


class ZeroDenominator(FptlabError):
    """Attempted to build a rational with denominator 0."""


class QNotPowerOfP(FptlabError):
    """A bracket exponent q must be p^e with e >= 1."""


class ZeroDivisorArg(FptlabError):
    """Colon by the zero polynomial is undefined."""


class ZeroPolynomial(FptlabError):
    """The operation needs a nonzero polynomial."""


class NotInMaximalIdeal(FptlabError):
    """f has a nonzero constant term, so no power lands in a bracket power."""


class NotMonomialIdeal(FptlabError):
    """Radicality is only decided for monomial ideals."""


class NotSharplyFPure(FptlabError):
    """The minimal-compatible-ideal algorithm needs f^a outside m^[q]."""


class NonProperIdeal(FptlabError):
    """The operation needs a proper ideal."""


class InvalidParameter(FptlabError):
    """A numeric parameter is outside its admissible range."""


class ConstraintViolation(FptlabError):
    """A named family constraint failed; the message names the predicate."""


# --- resource guards --------------------------------------------------------

class ResourceGuard(FptlabError):
    """Base class for configurable size guards."""


class ExpansionTooLarge(ResourceGuard):
    """Multinomial expansion would enumerate too many index tuples."""


class MatrixTooLarge(ResourceGuard):
    """A dense exponent box q^n exceeds the configured cell limit."""


class NotStabilized(ResourceGuard):
    """An ascending chain did not visibly stabilize within s_max steps."""

    def __init__(self, s_max: int):
        super().__init__(f"chain not stabilized within s_max={s_max}; raise s_max")
        self.s_max = s_max


# --- parsing ----------------------------------------------------------------

class ParseError(FptlabError):
    """Polynomial text does not match the grammar; carries the position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariable(FptlabError):
    """Input uses a variable outside the declared variable list."""

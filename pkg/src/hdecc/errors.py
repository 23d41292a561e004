"""Exception hierarchy.

Every library error derives from :class:`HdeccError` and carries an
``exit_code`` used by the command line front-end.
"""


class HdeccError(Exception):
    exit_code = 1


class InvalidInput(HdeccError, ValueError):
    exit_code = 3


class InvalidPrime(InvalidInput):
    exit_code = 4


# field
class ModulusMismatch(HdeccError, ValueError):
    exit_code = 5


class NotInvertible(HdeccError, ZeroDivisionError):
    exit_code = 6


class NonResidue(HdeccError, ValueError):
    exit_code = 7


# curve
class DegenerateCurve(HdeccError, ValueError):
    """Raised when 4a^3 + 27b^2 vanishes mod p.

    ``index`` is the 1-based number of the projected curve that failed,
    or ``None`` for a standalone curve.
    """

    exit_code = 10

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class NotOnCurve(InvalidInput):
    exit_code = 11


class CurveMismatch(HdeccError, ValueError):
    exit_code = 12


class OrderTooLarge(HdeccError):
    exit_code = 13


class InvalidClaimedOrder(HdeccError, ValueError):
    exit_code = 14


# chain
class NoPointFound(HdeccError):
    exit_code = 15


class ChainCollapse(HdeccError):
    exit_code = 16


# key exchange
class InvalidOrder(HdeccError, ValueError):
    exit_code = 20


class KeyRangeViolation(HdeccError, ValueError):
    exit_code = 21


class SingularGenerator(HdeccError):
    exit_code = 22


# weierstrass
class BadCharacteristic(HdeccError, ValueError):
    exit_code = 25


class NotOnGeneralCurve(HdeccError, ValueError):
    exit_code = 26


# wire / peer
class Truncated(HdeccError):
    exit_code = 30


class Malformed(HdeccError, ValueError):
    exit_code = 31


class DigestMismatch(HdeccError):
    exit_code = 32


class ConnectionFailed(HdeccError):
    exit_code = 33


class ProtocolViolation(HdeccError):
    exit_code = 34

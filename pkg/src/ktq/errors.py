class KtqError(Exception):
    """Base class for errors raised by this package."""


class FormatError(KtqError):
    """Malformed input: bad table data, unparsable file, index out of range."""


class MathError(KtqError):
    """A mathematical precondition does not hold (e.g. the table is not a
    quasigroup, or an involutory operation is required)."""

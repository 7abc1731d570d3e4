class RuledFanoError(Exception):
    """Base class for all errors raised by ruledfano."""


class ParameterError(RuledFanoError, ValueError):
    """An input parameter is outside its allowed range."""


class ModelMismatchError(RuledFanoError, ValueError):
    """Two Chow ring elements belong to different threefolds X_c."""


class HomogeneityError(RuledFanoError, ValueError):
    """A class was required to be homogeneous of a given degree."""


class ExpressionError(RuledFanoError, ValueError):
    """Lexical or syntax error in a Chow ring expression.

    ``offset`` is the 1-based position of the offending byte; a premature end
    of input is reported at ``len(text) + 1``.
    """

    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class ConsistencyError(RuledFanoError, ArithmeticError):
    """An internal cross-check failed (e.g. a non-integral Euler characteristic)."""


class PresentationInconsistencyError(ConsistencyError):
    """A resolution chase disagreed with its Euler characteristic or Serre dual."""


class LedgerError(RuledFanoError):
    """Malformed ledger file (parse or schema error)."""

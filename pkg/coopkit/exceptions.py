from typing import Optional


class CoopkitError(Exception):
    """Base class for every error coopkit raises on bad input"""


class FormulaSyntaxError(CoopkitError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class ShapeError(CoopkitError):
    """Conclusion does not have the shape a transformation needs"""


class UnsupportedConnective(CoopkitError):
    """Formula uses a connective the model signature cannot interpret"""


class UnsupportedSymbol(CoopkitError):
    """Term uses a symbol the ambient does not provide (1 over Nonneg)"""


class UnsupportedAxiom(CoopkitError):
    def __init__(self, schema: str, path: str = ""):
        self.schema = schema
        self.path = path
        where = f" at node {path}" if path else ""
        super().__init__(f"axiom {schema}{where} is outside the hoop translation")


class BudgetExhausted(CoopkitError):
    """Search finished without a witness. Not a validity proof."""

    def __init__(self, budget: int, detail: Optional[str] = None):
        self.budget = budget
        message = f"nothing found within budget {budget}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class NotAHoop(CoopkitError):
    def __init__(self, failed_laws):
        self.failed_laws = list(failed_laws)
        super().__init__(f"algebra fails hoop laws: {', '.join(self.failed_laws)}")


class BaseMismatch(CoopkitError):
    """Envelope elements built over different base models"""


class InvalidModelError(CoopkitError):
    """Malformed algebra or model description"""


class ProofFormatError(CoopkitError):
    """Malformed proof file or proof tree"""


class ChainFormatError(CoopkitError):
    """Malformed equational chain file"""


class TranslationError(CoopkitError):
    """Proof translation produced a step that does not follow"""

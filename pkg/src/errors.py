"""Exception hierarchy for coxeterfold"""


class CoxeterError(ValueError):
    """Base class for all library errors"""


class ConfigurationError(CoxeterError):
    """Unknown type label, malformed table document or bad setting"""


class PreconditionError(CoxeterError):
    """An operation was called outside its domain"""


class FlavorError(CoxeterError):
    """A moment-graph query does not apply to this graph flavor"""


class ResourceError(CoxeterError):
    """An enumeration would exceed the configured cap"""


class ParseError(CoxeterError):
    """A word, root or chamber string could not be parsed"""

    def __init__(self, message: str, text: str = "", position: int = 0):
        super().__init__(f"{message} (at position {position} in {text!r})" if text else message)
        self.text = text
        self.position = position


class RenderError(CoxeterError):
    """Rendering requested for an unsupported type"""

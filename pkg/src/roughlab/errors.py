"""Exception hierarchy. Every error is a ValueError so callers can catch broadly."""


class RoughLabError(ValueError):
    pass


class DomainError(RoughLabError):
    """Unknown element, or operands living over different universes."""


class SizeLimitError(RoughLabError):
    pass


class InvalidBasisError(RoughLabError):
    pass


class ConfigurationError(RoughLabError):
    """Inconsistent combination of family / ideal / options."""


class ParseError(RoughLabError):
    pass


class PreconditionError(RoughLabError):
    pass

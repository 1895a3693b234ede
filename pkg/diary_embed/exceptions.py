class DiaryEmbedError(Exception):  # pragma: no cover
    """
    Base of every error raised by diary_embed.
    """

    def __init__(self, message: str = ''):
        super().__init__(message)
        self.message = message


class PreconditionError(DiaryEmbedError):  # pragma: no cover
    """
    Exception class
    Raised when the arguments of an operation violate its precondition.
    """

    def __init__(self, operation: str, reason: str):
        super().__init__(f'Precondition of {operation} violated: {reason}')
        self.operation = operation


class ConfigurationError(DiaryEmbedError):  # pragma: no cover
    """
    Exception class
    Raised when a configuration, a descriptor or a flag is invalid.
    """

    def __init__(self, reason: str):
        super().__init__(f'Invalid configuration: {reason}')


class UnknownServiceError(ConfigurationError):  # pragma: no cover
    """
    Exception class
    Raised when no plugin of the requested name is registered.
    """

    def __init__(self, service_type: str, name: str):
        super().__init__(f'No {service_type} of the name {name} is registered')
        self.service_type = service_type
        self.name = name


class AlphabetMismatchError(DiaryEmbedError):  # pragma: no cover
    """
    Exception class
    Raised when two diaries are combined over different input alphabets.
    """

    def __init__(self, left, right):
        super().__init__(f'Diaries read different alphabets: {sorted(left)} and {sorted(right)}')


class BallCapExceededError(DiaryEmbedError):  # pragma: no cover
    """
    Exception class
    Raised when a ball radius is above the cap or its size above the memory guard.
    """

    def __init__(self, radius: int, cap: int, reason: str = 'radius'):
        super().__init__(f'Ball of radius {radius} refused: {reason} above the cap of {cap}')
        self.radius = radius
        self.cap = cap


class BudgetExceededError(DiaryEmbedError):  # pragma: no cover
    """
    Exception class
    Raised when an enumeration grid holds more sentences than its budget allows.
    """

    def __init__(self, size: int, budget: int):
        super().__init__(f'Grid would enumerate {size} sentences, budget is {budget}')
        self.size = size
        self.budget = budget


class CodecError(DiaryEmbedError):  # pragma: no cover
    """
    Exception class
    Raised when a symbol has no code or a codec width is too small.
    """

    def __init__(self, reason: str):
        super().__init__(f'Codec error: {reason}')


class InvariantViolationError(DiaryEmbedError):  # pragma: no cover
    """
    Exception class
    Raised when a checked invariant fails at runtime.
    """

    def __init__(self, name: str, detail: str = ''):
        super().__init__(f'Invariant {name} violated. {detail}'.strip())
        self.name = name

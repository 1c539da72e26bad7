"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class ResourceError(RuntimeError):
    """An exhaustive computation was refused because it exceeds its size guard."""


class ReflectPushError(DomainError):
    """A reflect-push move violates one of its six hypotheses.

    ``hypothesis`` is the 1-based number of the failed hypothesis:
    1 downset, 2 packed box, 3 removal set, 4 reflection coordinates,
    5 insertion set, 6 weight-nondecreasing bijection.
    """

    def __init__(self, hypothesis: int, message: str):
        super().__init__(f"hypothesis {hypothesis}: {message}")
        self.hypothesis = hypothesis

"""Exception hierarchy shared by all analyzer stages."""


class FeatdebtError(Exception):
    """Base class for every structured analyzer error."""


class LexError(FeatdebtError):
    """Raised on unterminated strings/comments or illegal characters."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ParseError(FeatdebtError):
    """Raised when a file cannot be parsed at all (recovery is preferred)."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


class ModelError(FeatdebtError):
    """Referential-integrity or name-collision failure while linking units."""


class AmbiguityError(ModelError):
    """A simple name is importable from more than one on-demand package."""

    def __init__(self, name: str, candidates: list):
        super().__init__(
            f"ambiguous type name {name!r}: candidates {sorted(candidates)}"
        )
        self.name = name
        self.candidates = sorted(candidates)


class ConfigError(FeatdebtError):
    """Invalid or unknown configuration keys/values."""


class GitError(FeatdebtError):
    """A git invocation failed or the repository is unusable."""

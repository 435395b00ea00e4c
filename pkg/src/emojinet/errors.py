"""Exception hierarchy shared by every stage of the build."""

from __future__ import annotations


class EmojiNetError(Exception):
    """Base class for all package errors."""


class CodepointError(EmojiNetError, ValueError):
    """Raised when a codepoint string cannot be canonicalized."""

    def __init__(self, token: str, message: str | None = None):
        self.token = token
        super().__init__(message or f"cannot parse codepoint token {token!r}")


class ValidationError(EmojiNetError, ValueError):
    """An inventory entry violates a type invariant."""

    def __init__(self, unicode: str | None, field: str, message: str):
        self.unicode = unicode
        self.field = field
        super().__init__(f"{unicode or '<entry>'}: field {field!r}: {message}")


class SchemaError(EmojiNetError, ValueError):
    """A JSONL record does not match the schema of its resource."""

    def __init__(self, path, index: int, field: str | None, message: str):
        self.path = str(path)
        self.index = index
        self.field = field
        where = f"record {index}" + (f", field {field!r}" if field else "")
        super().__init__(f"{self.path}: {where}: {message}")


class DuplicateKeyError(EmojiNetError, ValueError):
    def __init__(self, path, index: int, key: str):
        self.path = str(path)
        self.index = index
        self.key = key
        super().__init__(f"{self.path}: record {index}: duplicate key {key!r}")


class ImageDecodeError(EmojiNetError):
    def __init__(self, path, message: str):
        self.path = str(path)
        super().__init__(f"{self.path}: {message}")


class SenseLookupError(EmojiNetError, KeyError):
    """A (lemma, pos) or sense id is absent from the lexicon."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class NoSensesError(EmojiNetError):
    def __init__(self, unicode: str):
        self.unicode = unicode
        super().__init__(f"{unicode} has no senses in the inventory")


class PipelineError(EmojiNetError):
    """Wraps the failure of one build stage."""

    def __init__(self, stage: str, cause: BaseException):
        self.stage = stage
        self.cause = cause
        super().__init__(f"[{stage}] {cause}")

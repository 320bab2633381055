"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class RelequivError(Exception):
    exit_code = 1


class ParseError(RelequivError):
    """Malformed input text. ``pos`` is a 0-based offset, ``line``/``col`` 1-based when known."""

    exit_code = 2

    def __init__(self, message, pos=None, line=None, col=None):
        self.pos = pos
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f" (line {line}, column {col})"
        elif pos is not None:
            where = f" (at position {pos})"
        super().__init__(message + where)


class SpecValidationError(ParseError):
    """Well-formed input that violates a named constraint."""


class GroupError(RelequivError):
    exit_code = 3


class ValidationError(RelequivError):
    """A computed object failed an independent completeness or consistency check."""

    exit_code = 4


class InternalError(RelequivError):
    exit_code = 5

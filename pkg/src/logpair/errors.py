"""Exception hierarchy.

Each class carries an ``error_kind`` string that the CLI reports verbatim, and
an ``exit_code``: 1 for malformed input, 2 when the mathematics refuses a
well-formed input.
"""

from __future__ import annotations


class LogPairError(Exception):
    error_kind = "LogPairError"
    exit_code = 2


class InputError(LogPairError, ValueError):
    error_kind = "InputError"
    exit_code = 1


class ParseError(InputError):
    error_kind = "ParseError"


class ZeroDenominator(InputError, ZeroDivisionError):
    error_kind = "ZeroDenominator"


class SchemaError(InputError):
    error_kind = "SchemaError"


class MalformedMatrix(InputError):
    error_kind = "MalformedMatrix"


class PreconditionViolated(LogPairError, ValueError):
    error_kind = "PreconditionViolated"


class NotSemistable(PreconditionViolated):
    error_kind = "NotSemistable"


class NotKlt(PreconditionViolated):
    error_kind = "NotKlt"


class WeightOutOfRange(PreconditionViolated):
    error_kind = "WeightOutOfRange"


class UnsupportedDimension(PreconditionViolated):
    error_kind = "UnsupportedDimension"

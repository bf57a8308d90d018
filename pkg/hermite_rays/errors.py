# The MIT License (MIT)
# Copyright (c) 2026 by the hermite-rays development team and contributors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy of
# this software and associated documentation files (the "Software"), to deal in
# the Software without restriction, including without limitation the rights to
# use, copy, modify, merge, publish, distribute, sublicense, and/or sell copies
# of the Software, and to permit persons to whom the Software is furnished to do
# so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

import math
import numbers
from typing import Optional

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3


class HermiteError(Exception):
    """
    Base error carrying the process exit code the CLI reports for it.
    """

    def __init__(self, exit_code: int, message: str, hint: Optional[str] = None):
        super().__init__(message)
        self.exit_code = exit_code
        self.hint = hint


class InvalidArgumentError(HermiteError):
    def __init__(self, message: str, hint: Optional[str] = None):
        super().__init__(EXIT_USAGE, message, hint=hint)


class DomainError(HermiteError):
    """
    An approximant was asked for a point outside the region it describes.
    The message names the valid region.
    """

    def __init__(self, message: str, hint: Optional[str] = None):
        super().__init__(EXIT_USAGE, message, hint=hint)


class NumericalFailureError(HermiteError):
    def __init__(self, message: str, hint: Optional[str] = None):
        super().__init__(EXIT_NUMERIC, message, hint=hint)


class OutputError(HermiteError):
    def __init__(self, message: str, hint: Optional[str] = None):
        super().__init__(EXIT_NUMERIC, message, hint=hint)


class CfgError(HermiteError):
    def __init__(self, message: str):
        super().__init__(EXIT_NUMERIC, message)


def raise_for_non_finite(name: str, value: float):
    try:
        finite = math.isfinite(value)
    except TypeError:
        raise InvalidArgumentError(f'{name} must be a real number, got {value!r}')
    if not finite:
        raise InvalidArgumentError(f'{name} must be finite, got {value!r}')


def raise_for_non_integer(name: str, value, minimum: Optional[int] = None):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise InvalidArgumentError(f'{name} must be an integer, got {value!r}')
    if minimum is not None and value < minimum:
        raise InvalidArgumentError(f'{name} must be greater than or equal to {minimum}, got {value}')

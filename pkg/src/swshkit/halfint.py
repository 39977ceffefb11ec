"""Exact half-integer arithmetic.

Angular momentum quantum numbers (s, l, m) can be integers or half-odd
integers.  Storing twice the value as a plain int keeps every add/subtract/
compare exact, which the Kronecker-delta branches elsewhere rely on; floats
enter only at evaluation time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering

from .errors import DomainError

_INT_TOKEN = re.compile(r"^[+-]?\d+$")
_HALF_TOKEN = re.compile(r"^([+-]?\d+)/2$")


@total_ordering
@dataclass(frozen=True)
class HalfInt:
    """A number n/2 with n a (signed) integer, stored as ``twice`` = n."""

    twice: int

    def __post_init__(self):
        if not isinstance(self.twice, int) or isinstance(self.twice, bool):
            raise DomainError(f"twice must be an int, got {self.twice!r}")

    @classmethod
    def from_int(cls, n: int) -> "HalfInt":
        return cls(2 * n)

    @classmethod
    def parse(cls, token: str) -> "HalfInt":
        """Parse 'n' or 'n/2' (n odd).  Decimal forms are rejected so a spin
        can never be silently rounded."""
        token = token.strip()
        if _INT_TOKEN.match(token):
            return cls(2 * int(token))
        m = _HALF_TOKEN.match(token)
        if m:
            n = int(m.group(1))
            if n % 2 == 0:
                raise DomainError(
                    f"half-integer token {token!r} must have an odd numerator"
                )
            return cls(n)
        raise DomainError(f"cannot parse {token!r} as an exact half-integer")

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def _coerce(self, other):
        if isinstance(other, HalfInt):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return HalfInt(2 * other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else HalfInt(self.twice + o.twice)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else HalfInt(self.twice - o.twice)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else HalfInt(o.twice - self.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __abs__(self) -> "HalfInt":
        return HalfInt(abs(self.twice))

    def __eq__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self.twice == o.twice

    def __lt__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self.twice < o.twice

    def __hash__(self):
        # 0.5 * twice is exact, so this matches hash() of equal ints/floats.
        return hash(self.twice * 0.5)

    def __float__(self) -> float:
        return self.twice * 0.5

    def __str__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self.twice})"


def as_half_int(value) -> HalfInt:
    """Accept HalfInt, int, or an exact token string."""
    if isinstance(value, HalfInt):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return HalfInt.from_int(value)
    if isinstance(value, str):
        return HalfInt.parse(value)
    raise DomainError(f"cannot interpret {value!r} as an exact half-integer")

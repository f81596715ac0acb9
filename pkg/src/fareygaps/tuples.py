"""Index tuples and their run-length string notation.

Everything downstream operates on finite tuples of positive integers
(k_1, ..., k_r).  On the command line and in JSON these are written in a
compressed run notation::

    item := INT | "(" list ")" "^" INT | INT "^" INT
    list := item ("," item)*

so ``"2,(4,1)^3,3,2^7,1"`` expands to ``(2, 4,1,4,1,4,1, 3, 2,2,2,2,2,2,2, 1)``.
Whitespace is ignored; values and repeat counts must be >= 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Tuple


class TupleSyntaxError(ValueError):
    """Raised when a tuple string does not match the run notation grammar."""


_TOKEN = re.compile(r"\d+|[(),^]")


def _tokenize(text: str) -> list[str]:
    stripped = re.sub(r"\s+", "", text)
    tokens = _TOKEN.findall(stripped)
    if "".join(tokens) != stripped:
        junk = re.sub(r"[\d(),^\s]", "", text)
        raise TupleSyntaxError(f"unexpected character(s) {junk!r} in tuple {text!r}")
    return tokens


@dataclass(frozen=True)
class TupleSpec:
    """An immutable index tuple, by value.

    The canonical internal form is the fully expanded sequence; the run
    notation is only a surface syntax.  Two specs parsed from different
    spellings of the same sequence compare equal.
    """

    indices: Tuple[int, ...]

    def __post_init__(self) -> None:
        for k in self.indices:
            if not isinstance(k, int) or k < 1:
                raise TupleSyntaxError(f"index values must be integers >= 1, got {k!r}")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_indices(cls, seq: Iterable[int]) -> "TupleSpec":
        return cls(tuple(int(k) for k in seq))

    @classmethod
    def parse(cls, text: str) -> "TupleSpec":
        """Parse run notation, e.g. ``"2,(1,4)^2,3"`` -> (2,1,4,1,4,3)."""
        tokens = _tokenize(text)
        if not tokens:
            raise TupleSyntaxError("empty tuple string")
        pos = 0

        def peek() -> str | None:
            return tokens[pos] if pos < len(tokens) else None

        def take(expected: str | None = None) -> str:
            nonlocal pos
            if pos >= len(tokens):
                raise TupleSyntaxError(f"unexpected end of tuple string {text!r}")
            tok = tokens[pos]
            if expected is not None and tok != expected:
                raise TupleSyntaxError(f"expected {expected!r}, found {tok!r} in {text!r}")
            pos += 1
            return tok

        def parse_count() -> int:
            take("^")
            tok = take()
            if not tok.isdigit():
                raise TupleSyntaxError(f"repeat count must be an integer, found {tok!r}")
            count = int(tok)
            if count < 1:
                raise TupleSyntaxError(f"repeat count must be >= 1, got {count}")
            return count

        def parse_item() -> list[int]:
            tok = peek()
            if tok == "(":
                take("(")
                inner = parse_list()
                take(")")
                return inner * parse_count()
            if tok is None or not tok.isdigit():
                raise TupleSyntaxError(f"expected an integer or '(', found {tok!r} in {text!r}")
            value = int(take())
            if value < 1:
                raise TupleSyntaxError(f"index values must be >= 1, got {value}")
            if peek() == "^":
                return [value] * parse_count()
            return [value]

        def parse_list() -> list[int]:
            items = parse_item()
            while peek() == ",":
                take(",")
                items.extend(parse_item())
            return items

        result = parse_list()
        if pos != len(tokens):
            raise TupleSyntaxError(f"trailing tokens {tokens[pos:]} in {text!r}")
        return cls(tuple(result))

    # -- views -------------------------------------------------------------

    @property
    def r(self) -> int:
        """Expanded length."""
        return len(self.indices)

    @property
    def runs(self) -> Tuple[Tuple[int, int], ...]:
        """Maximal runs of equal values as (value, count) pairs."""
        out: list[tuple[int, int]] = []
        for k in self.indices:
            if out and out[-1][0] == k:
                out[-1] = (k, out[-1][1] + 1)
            else:
                out.append((k, 1))
        return tuple(out)

    def expand(self) -> list[int]:
        return list(self.indices)

    def reversed(self) -> "TupleSpec":
        return TupleSpec(self.indices[::-1])

    def render(self) -> str:
        """Canonical run notation: single values bare, runs as ``v^n``."""
        return ",".join(str(v) if c == 1 else f"{v}^{c}" for v, c in self.runs)

    # -- dunder ------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __getitem__(self, i):
        return self.indices[i]

    def __str__(self) -> str:
        return self.render()

    def __add__(self, other: "TupleSpec | Sequence[int]") -> "TupleSpec":
        tail = other.indices if isinstance(other, TupleSpec) else tuple(int(k) for k in other)
        return TupleSpec(self.indices + tail)


def as_indices(t) -> Tuple[int, ...]:
    """Coerce a TupleSpec, string, or bare int sequence to a plain tuple."""
    if isinstance(t, TupleSpec):
        return t.indices
    if isinstance(t, str):
        return TupleSpec.parse(t).indices
    return TupleSpec.from_indices(t).indices

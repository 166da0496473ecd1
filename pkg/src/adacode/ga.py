"""Generalized adaptive coding with pluggable causal context rules.

Instead of a fixed-length suffix window, the context for each position comes
from an arbitrary rule. The rule only ever sees the symbols strictly before
the position it is asked about; that restriction is what makes greedy
decoding possible, since the decoder can recompute every context from what
it has already emitted. Symbols here are raw byte values, and lookups are
keyed by (symbol value, context of symbol values), so any code table can be
flattened into this representation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .codec import DecodeError, EncodeError
from .core import AdaptiveCodeError, CodeTable, Codeword, format_symbol
from .prefix import is_prefix_code

Symbols = tuple[int, ...]


def _format_values(values: Sequence[int]) -> str:
    if not values:
        return "~"
    return "".join(format_symbol(v) for v in values)


@dataclass(frozen=True)
class AdaptiveFunction:
    """Causal context rule: (1-based position, prior symbols) -> context.

    The rule is handed only the symbols strictly before the queried position,
    and its output may never exceed the declared max_context bound (None
    means unbounded).
    """

    rule: Callable[[int, Symbols], Symbols]
    max_context: int | None = None

    def __call__(self, position: int, prefix: Sequence[int]) -> Symbols:
        if position < 1:
            raise AdaptiveCodeError("positions are 1-based")
        ctx = tuple(self.rule(position, tuple(prefix)[: position - 1]))
        if self.max_context is not None and len(ctx) > self.max_context:
            raise AdaptiveCodeError(
                f"context rule produced {len(ctx)} symbols, "
                f"exceeding its declared bound {self.max_context}"
            )
        return ctx


def order_n_function(n: int) -> AdaptiveFunction:
    """The suffix-window rule of a fixed order: at position i the context is
    the last min(i-1, n) symbols."""
    if n < 1:
        raise AdaptiveCodeError("order must be at least 1")

    def rule(position: int, prefix: Symbols) -> Symbols:
        if position == 1:
            return ()
        if position <= n + 1:
            return prefix
        return prefix[-n:]

    return AdaptiveFunction(rule, max_context=n)


@dataclass(frozen=True)
class GACode:
    """A context rule plus a codeword lookup keyed by (symbol, context)."""

    function: AdaptiveFunction
    lookup: Mapping[tuple[int, Symbols], Codeword]
    _rows: dict[Symbols, dict[int, Codeword]] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        normalized: dict[tuple[int, Symbols], Codeword] = {}
        rows: dict[Symbols, dict[int, Codeword]] = {}
        for (symbol, raw_ctx), word in self.lookup.items():
            if not 0 <= symbol <= 255:
                raise AdaptiveCodeError(f"symbol {symbol!r} is not a byte value")
            ctx = tuple(raw_ctx)
            if not word or any(ch not in "01" for ch in word):
                raise AdaptiveCodeError(
                    f"codeword must be a nonempty string of 0/1 bits, got {word!r}"
                )
            normalized[(symbol, ctx)] = word
            rows.setdefault(ctx, {})[symbol] = word
        if not normalized:
            raise AdaptiveCodeError("lookup must define at least one codeword")
        object.__setattr__(self, "lookup", normalized)
        object.__setattr__(self, "_rows", rows)


def lookup_from_table(table: CodeTable) -> dict[tuple[int, Symbols], Codeword]:
    """Flatten a code table into a GA lookup keyed by symbol values."""
    values = table.alphabet.symbols
    out: dict[tuple[int, Symbols], Codeword] = {}
    for ctx, row in table.rows.items():
        ctx_values = tuple(values[i] for i in ctx)
        for index, word in enumerate(row):
            out[(values[index], ctx_values)] = word
    return out


def ga_encode(code: GACode, data: bytes) -> str:
    """Concatenated codewords of data under the code's context rule."""
    symbols = tuple(data)
    out: list[str] = []
    for i in range(1, len(symbols) + 1):
        ctx = code.function(i, symbols[: i - 1])
        word = code.lookup.get((symbols[i - 1], ctx))
        if word is None:
            raise EncodeError(
                f"no codeword for symbol {format_symbol(symbols[i - 1])} in "
                f"context '{_format_values(ctx)}' (position {i})",
                i,
            )
        out.append(word)
    return "".join(out)


def ga_decode(code: GACode, bits: str) -> bytes:
    """Greedy inverse of ga_encode. Each visited context row is checked to be
    a prefix code the first time it is used; other rows are never inspected."""
    if any(ch not in "01" for ch in bits):
        raise DecodeError("bit sequence must contain only 0 and 1")
    out = bytearray()
    checked: set[Symbols] = set()
    cursor = 0
    total = len(bits)
    while cursor < total:
        ctx = code.function(len(out) + 1, tuple(out))
        row = code._rows.get(ctx)
        if row is None:
            raise DecodeError(
                f"no codewords for context '{_format_values(ctx)}' "
                f"at bit offset {cursor}",
                cursor,
            )
        if ctx not in checked:
            if not is_prefix_code(row.values()):
                raise DecodeError(
                    f"non-prefix row at visited context '{_format_values(ctx)}'"
                )
            checked.add(ctx)
        match: int | None = None
        for symbol, word in row.items():
            if bits.startswith(word, cursor):
                match = symbol
                break
        if match is None:
            remaining = bits[cursor:]
            if any(word.startswith(remaining) for word in row.values()):
                raise DecodeError(f"truncated input at bit offset {cursor}", cursor)
            raise DecodeError(f"undecodable at bit offset {cursor}", cursor)
        out.append(match)
        cursor += len(row[match])
    return bytes(out)

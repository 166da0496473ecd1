"""Context-conditioned encoding and greedy prefix decoding.

Encoding walks the input once, emitting the codeword of each symbol under
the window of up to `order` preceding symbols. Decoding is greedy: because
every context row is required to be a prefix code, at most one codeword can
match the next bits, so the decoder walks a per-context binary trie and
consumes each bit exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    AdaptiveCodeError,
    CodeTable,
    Context,
    TableError,
    format_context,
    table_get,
)
from .prefix import is_prefix_code


class EncodeError(AdaptiveCodeError):
    """A symbol could not be encoded; carries its 1-based position."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class DecodeError(AdaptiveCodeError):
    """A bit sequence could not be decoded; carries the failing bit offset."""

    def __init__(self, message: str, bit_offset: int | None = None):
        super().__init__(message)
        self.bit_offset = bit_offset


@dataclass(frozen=True)
class DecodeTrace:
    """Decoder result: the output bytes, how many greedy iterations ran
    (always one per output symbol), and how many bits were consumed."""

    output: bytes
    iterations: int
    bits_consumed: int


def prefix_predicate(table: CodeTable) -> bool:
    """True if every context row present in the table is a prefix code.

    Sufficient for decodability, not necessary: a table can fail this check
    and still encode injectively. Such tables are refused by decode().
    """
    return all(is_prefix_code(row) for row in table.rows.values())


class IncrementalEncoder:
    """Streaming encoder. Feeding data in chunks yields exactly the bits of
    one-shot encoding, since only the trailing window carries between calls."""

    def __init__(self, table: CodeTable):
        self._table = table
        self._window: list[int] = []
        self._position = 0

    def feed(self, data: bytes) -> str:
        table = self._table
        alphabet = table.alphabet
        window = self._window
        order = table.order
        out: list[str] = []
        for byte in data:
            self._position += 1
            try:
                index = alphabet.index_of(byte)
                word = table_get(table, index, tuple(window))
            except TableError as exc:
                raise EncodeError(
                    f"{exc} (position {self._position})", self._position
                ) from exc
            out.append(word)
            window.append(index)
            if len(window) > order:
                del window[0]
        return "".join(out)


def encode(table: CodeTable, data: bytes) -> str:
    """Concatenated codewords of data, each conditioned on its preceding
    window of up to table.order symbols. Empty input encodes to ""."""
    return IncrementalEncoder(table).feed(data)


def _row_trie(row: tuple[str, ...]) -> dict:
    # Leaves carry the symbol index under the key "sym". A prefix-violating
    # row cannot reach here through decode(), which refuses such tables.
    root: dict = {}
    for symbol, word in enumerate(row):
        node = root
        for bit in word:
            if "sym" in node:
                raise DecodeError("ambiguous table")
            node = node.setdefault(bit, {})
        if node:
            raise DecodeError("ambiguous table")
        node["sym"] = symbol
    return root


def decode(table: CodeTable, bits: str, max_symbols: int | None = None) -> DecodeTrace:
    """Greedily decode a bit sequence produced by encode() with this table.

    Tables with prefix_predicate false are refused outright. When max_symbols
    is given, decoding stops after that many symbols and reports how many
    bits were consumed; otherwise the whole sequence must decode.
    """
    if any(ch not in "01" for ch in bits):
        raise DecodeError("bit sequence must contain only 0 and 1")
    if not prefix_predicate(table):
        raise DecodeError(
            "table has a context row that is not a prefix code; decoding refused"
        )
    tries: dict[Context, dict] = {}
    window: list[int] = []
    out_indices: list[int] = []
    total = len(bits)
    cursor = 0
    while cursor < total and (max_symbols is None or len(out_indices) < max_symbols):
        ctx = tuple(window)
        trie = tries.get(ctx)
        if trie is None:
            row = table.rows.get(ctx)
            if row is None:
                raise DecodeError(
                    f"no codeword row for context "
                    f"'{format_context(table.alphabet, ctx)}' at bit offset {cursor}",
                    cursor,
                )
            trie = tries[ctx] = _row_trie(row)
        start = cursor
        node = trie
        while "sym" not in node:
            if cursor >= total:
                raise DecodeError(f"truncated input at bit offset {start}", start)
            child = node.get(bits[cursor])
            if child is None:
                raise DecodeError(f"undecodable at bit offset {start}", start)
            node = child
            cursor += 1
        index = node["sym"]
        out_indices.append(index)
        window.append(index)
        if len(window) > table.order:
            del window[0]
    return DecodeTrace(table.alphabet.to_bytes(out_indices), len(out_indices), cursor)

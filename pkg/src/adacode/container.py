"""On-disk formats: MSB-first bit packing, the binary stream container, and
a line-oriented table text format.

Container layout, all integers big-endian:

    magic   4 bytes   b"ADC1"
    version 1 byte    0x01
    order   1 byte    table order, 1..255
    h       2 bytes   alphabet size
    alpha   h bytes   symbol values, strictly increasing
    s       8 bytes   number of source symbols in the payload
    mode    1 byte    0x00 implied order-1 table, 0x01 explicit table
    table   mode 0x01 only: one row per context, every context up to the
            order in canonical enumeration order (empty first, then by
            length, then lexicographic index order); each row holds h
            codewords, each codeword a length byte 1..255 followed by
            ceil(len/8) MSB-first bytes, zero-padded
    payload encoded bits, MSB-first, zero-padded to a byte boundary

Mode 0x00 stores no table; the reader rebuilds it with build_order1 from
the alphabet, which requires order 1 and at least two symbols. The payload
length in bits is not stored: the reader decodes exactly s symbols and
treats leftover bits as padding, which must be fewer than 8 and all zero.

The table text format is three whitespace-separated fields per line after
two header lines:

    order 2
    alphabet ab
    ~ a 0
    ~ b 1
    a a 0
    ...

`~` denotes the empty context. Symbols use the same escaping as everywhere
else: printable ASCII except backslash and tilde is literal, anything else
is \\xNN. Lines starting with # and blank lines are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .builder import build_order1
from .codec import decode
from .core import (
    AdaptiveCodeError,
    Alphabet,
    CodeTable,
    Codeword,
    Context,
    TableError,
    format_context,
    format_symbol,
    iter_contexts,
)

MAGIC = b"ADC1"
VERSION = 0x01
MODE_BUILDER = 0x00
MODE_EXPLICIT = 0x01


class ContainerError(AdaptiveCodeError):
    """Malformed or unreadable container bytes."""


@dataclass(frozen=True)
class PackedBits:
    """Bits packed MSB-first into bytes, final byte zero-padded."""

    data: bytes
    bit_count: int


def pack_bits(bits: str) -> PackedBits:
    if any(ch not in "01" for ch in bits):
        raise ContainerError("bit sequence must contain only 0 and 1")
    data = bytearray()
    for i in range(0, len(bits), 8):
        data.append(int(bits[i : i + 8].ljust(8, "0"), 2))
    return PackedBits(bytes(data), len(bits))


def unpack_bits(packed: PackedBits) -> str:
    if packed.bit_count < 0:
        raise ContainerError("bit count must be nonnegative")
    if packed.bit_count > 8 * len(packed.data):
        raise ContainerError("truncated bit payload: bit count exceeds available bytes")
    if packed.bit_count == 0:
        return ""
    return "".join(format(b, "08b") for b in packed.data)[: packed.bit_count]


@dataclass(frozen=True)
class ContainerContent:
    """Everything read_container recovers from a container."""

    table: CodeTable
    symbol_count: int
    payload_bits: str
    builder_mode: bool


def _check_container_alphabet(alphabet: Alphabet) -> None:
    values = alphabet.symbols
    if any(a >= b for a, b in zip(values, values[1:])):
        raise ContainerError("container alphabets must be strictly increasing byte values")


def _is_builder_table(table: CodeTable) -> bool:
    return (
        table.order == 1
        and table.alphabet.size >= 2
        and table == build_order1(table.alphabet)
    )


def write_container(
    table: CodeTable,
    symbol_count: int,
    payload_bits: str,
    builder_mode: bool | None = None,
) -> bytes:
    """Serialize a table and an encoded payload.

    builder_mode None picks mode 0x00 automatically when the table equals
    its alphabet's build_order1 result. Forcing True on any other table is
    an error; explicit mode requires a total table.
    """
    if symbol_count < 0 or symbol_count >= 1 << 64:
        raise ContainerError("symbol count out of range")
    if not 1 <= table.order <= 255:
        raise ContainerError("container order must be between 1 and 255")
    _check_container_alphabet(table.alphabet)
    if builder_mode is None:
        builder_mode = _is_builder_table(table)
    elif builder_mode and not _is_builder_table(table):
        raise ContainerError(
            "table is not the implied order-1 construction for its alphabet"
        )
    if not builder_mode and not table.is_total():
        raise ContainerError("explicit containers require a total table")

    h = table.alphabet.size
    out = bytearray()
    out += MAGIC
    out.append(VERSION)
    out.append(table.order)
    out += h.to_bytes(2, "big")
    out += bytes(table.alphabet.symbols)
    out += symbol_count.to_bytes(8, "big")
    out.append(MODE_BUILDER if builder_mode else MODE_EXPLICIT)
    if not builder_mode:
        for ctx in iter_contexts(h, table.order):
            for word in table.rows[ctx]:
                if len(word) > 255:
                    raise ContainerError("codeword longer than 255 bits")
                out.append(len(word))
                out += pack_bits(word).data
    out += pack_bits(payload_bits).data
    return bytes(out)


def read_container(data: bytes) -> ContainerContent:
    """Parse container bytes back into a table, symbol count, and payload."""
    cursor = 0

    def take(count: int) -> bytes:
        nonlocal cursor
        if cursor + count > len(data):
            raise ContainerError("truncated container")
        piece = data[cursor : cursor + count]
        cursor += count
        return piece

    if take(4) != MAGIC:
        raise ContainerError("bad magic: not a container")
    version = take(1)[0]
    if version != VERSION:
        raise ContainerError(f"unsupported container version {version}")
    order = take(1)[0]
    if order < 1:
        raise ContainerError("container order must be at least 1")
    h = int.from_bytes(take(2), "big")
    if h < 1:
        raise ContainerError("container alphabet must be nonempty")
    alphabet = Alphabet(tuple(take(h)))
    _check_container_alphabet(alphabet)
    symbol_count = int.from_bytes(take(8), "big")
    mode = take(1)[0]
    if mode == MODE_BUILDER:
        if order != 1 or h < 2:
            raise ContainerError("builder mode requires order 1 and at least two symbols")
        table = build_order1(alphabet)
    elif mode == MODE_EXPLICIT:
        rows: dict[Context, tuple[Codeword, ...]] = {}
        for ctx in iter_contexts(h, order):
            row = []
            for _ in range(h):
                length = take(1)[0]
                if length == 0:
                    raise ContainerError("codeword length 0")
                row.append(unpack_bits(PackedBits(take((length + 7) // 8), length)))
            rows[ctx] = tuple(row)
        table = CodeTable(alphabet=alphabet, order=order, rows=rows)
    else:
        raise ContainerError(f"unknown table mode {mode:#04x}")
    rest = data[cursor:]
    payload_bits = unpack_bits(PackedBits(rest, 8 * len(rest)))
    return ContainerContent(
        table=table,
        symbol_count=symbol_count,
        payload_bits=payload_bits,
        builder_mode=mode == MODE_BUILDER,
    )


def decode_payload(table: CodeTable, payload_bits: str, symbol_count: int) -> bytes:
    """Decode exactly symbol_count symbols and verify the leftover padding.

    Leftover bits after the last symbol must number fewer than 8 and all be
    zero; anything else is trailing garbage.
    """
    trace = decode(table, payload_bits, max_symbols=symbol_count)
    leftover = payload_bits[trace.bits_consumed :]
    if len(leftover) >= 8 or "1" in leftover:
        raise ContainerError(
            f"trailing garbage after encoded payload ({len(leftover)} bits left)"
        )
    return trace.output


def table_to_text(table: CodeTable) -> str:
    """Render a table in the line-oriented text format, rows in canonical
    context order."""
    lines = [
        f"order {table.order}",
        "alphabet " + "".join(format_symbol(v) for v in table.alphabet.symbols),
    ]
    for ctx in sorted(table.rows, key=lambda c: (len(c), c)):
        ctx_text = format_context(table.alphabet, ctx)
        for index, word in enumerate(table.rows[ctx]):
            lines.append(
                f"{ctx_text} {format_symbol(table.alphabet.symbols[index])} {word}"
            )
    return "\n".join(lines) + "\n"


def _parse_symbol_values(text: str, line_no: int) -> list[int]:
    values = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\\":
            if text[i + 1 : i + 2] != "x" or len(text) < i + 4:
                raise TableError(f"line {line_no}: bad escape in '{text}'")
            try:
                values.append(int(text[i + 2 : i + 4], 16))
            except ValueError:
                raise TableError(f"line {line_no}: bad escape in '{text}'") from None
            i += 4
        else:
            if ord(ch) > 255:
                raise TableError(f"line {line_no}: '{ch}' is not a single byte")
            values.append(ord(ch))
            i += 1
    return values


def table_from_text(text: str) -> CodeTable:
    """Parse the table text format. Errors carry 1-based line numbers."""
    entries: list[tuple[int, str]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            entries.append((line_no, line))
    if len(entries) < 2:
        raise TableError("table text needs an order line and an alphabet line")

    line_no, line = entries[0]
    fields = line.split()
    if len(fields) != 2 or fields[0] != "order":
        raise TableError(f"line {line_no}: expected 'order <n>'")
    try:
        order = int(fields[1])
    except ValueError:
        raise TableError(f"line {line_no}: expected 'order <n>'") from None
    if order < 1:
        raise TableError(f"line {line_no}: order must be at least 1")

    line_no, line = entries[1]
    fields = line.split()
    if len(fields) != 2 or fields[0] != "alphabet":
        raise TableError(f"line {line_no}: expected 'alphabet <symbols>'")
    values = _parse_symbol_values(fields[1], line_no)
    if len(set(values)) != len(values):
        raise TableError(f"line {line_no}: alphabet symbols must be distinct")
    alphabet = Alphabet(tuple(values))

    cells: dict[Context, dict[int, str]] = {}
    for line_no, line in entries[2:]:
        fields = line.split()
        if len(fields) != 3:
            raise TableError(
                f"line {line_no}: expected '<context> <symbol> <bits>', got '{line}'"
            )
        ctx_field, symbol_field, bits = fields
        if ctx_field == "~":
            ctx: Context = ()
        else:
            ctx_values = _parse_symbol_values(ctx_field, line_no)
            try:
                ctx = tuple(alphabet.index_of(v) for v in ctx_values)
            except TableError as exc:
                raise TableError(f"line {line_no}: {exc}") from None
        if len(ctx) > order:
            raise TableError(f"line {line_no}: context longer than order {order}")
        symbol_values = _parse_symbol_values(symbol_field, line_no)
        if len(symbol_values) != 1:
            raise TableError(f"line {line_no}: expected a single symbol, got '{symbol_field}'")
        try:
            symbol = alphabet.index_of(symbol_values[0])
        except TableError as exc:
            raise TableError(f"line {line_no}: {exc}") from None
        if not bits or any(ch not in "01" for ch in bits):
            raise TableError(f"line {line_no}: codeword must be nonempty bits, got '{bits}'")
        row = cells.setdefault(ctx, {})
        if symbol in row:
            raise TableError(
                f"line {line_no}: duplicate cell for context '{ctx_field}' "
                f"and symbol '{symbol_field}'"
            )
        row[symbol] = bits

    h = alphabet.size
    rows: dict[Context, tuple[Codeword, ...]] = {}
    for ctx, row in cells.items():
        if len(row) != h:
            raise TableError(
                f"incomplete row for context '{format_context(alphabet, ctx)}': "
                f"{len(row)} of {h} codewords"
            )
        rows[ctx] = tuple(row[i] for i in range(h))
    return CodeTable(alphabet=alphabet, order=order, rows=rows)

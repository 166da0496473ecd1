"""Order-1 table construction where repeating a symbol costs one bit.

Every symbol gets the codeword "0" in its own context (the diagonal), so a
run of length r costs r bits after its first symbol. All other cells carry
"1"-prefixed balanced codewords, built once from a Huffman code over the
non-leading symbols with equal weights. Each context row is a prefix code
with Kraft sum exactly 1.
"""

from __future__ import annotations

from .core import Alphabet, AdaptiveCodeError, CodeTable, Codeword, Context, EMPTY_CONTEXT
from .prefix import huffman_build


def build_order1(alphabet: Alphabet) -> CodeTable:
    """The order-1 table for an alphabet of at least two symbols.

    The first alphabet symbol is distinguished: its row reuses the balanced
    codeword of whichever context it appears in, and the empty-context row
    equals the first symbol's own context row.
    """
    h = alphabet.size
    if h < 2:
        raise AdaptiveCodeError("Builder requires at least two symbols")
    balanced = huffman_build([(i, 0) for i in range(1, h)]).codewords
    marked: dict[int, Codeword] = {i: "1" + balanced[i] for i in range(1, h)}
    lead_row = tuple(["0"] + [marked[i] for i in range(1, h)])
    rows: dict[Context, tuple[Codeword, ...]] = {
        EMPTY_CONTEXT: lead_row,
        (0,): lead_row,
    }
    for ctx in range(1, h):
        row = [marked[ctx]]
        row.extend("0" if i == ctx else marked[i] for i in range(1, h))
        rows[(ctx,)] = tuple(row)
    return CodeTable(alphabet=alphabet, order=1, rows=rows)

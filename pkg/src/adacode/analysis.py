"""Pair statistics and entropy/rate accounting for order-1 coding.

Two families of quantities are computed for a string. The classical Huffman
figures treat the string as a bag of symbols: entropy H and per-symbol rate
R, with H <= R <= H+1 guaranteed. The adaptive figures split the order-1
coder's cost into a run part (first codeword plus one bit per repeated
position) and a transition part estimated from how often each symbol is
entered from each predecessor. The adaptive entropy-vs-rate bound is
reported but never asserted, because the two sides do not share a unit.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import log2
from typing import Sequence

from .codec import encode
from .core import AdaptiveCodeError, CodeTable, EMPTY_CONTEXT, TableError, table_get
from .prefix import huffman_total_length


@dataclass(frozen=True)
class PairStats:
    """Repeated-symbol positions of a string, 1-based.

    pairs holds every i with w[i] == w[i+1]; prate is their count divided by
    the string length, kept exact.
    """

    pairs: frozenset[int]
    nrpairs: int
    prate: Fraction


@dataclass(frozen=True)
class AnalysisReport:
    """All per-string figures produced by compare_report."""

    length: int
    stats: PairStats
    eh: frozenset[int]
    encoded_bits: int
    r_a_literal: float
    huffman_total_bits: int
    huffman_rate: float
    huffman_entropy: float
    l_not_huffman: int
    l_huffman: float
    h_a: float


def _require_nonempty(w: bytes) -> None:
    if not w:
        raise AdaptiveCodeError("analysis requires a nonempty string")


def pair_stats(w: bytes) -> PairStats:
    """Positions (1-based) where a symbol repeats its predecessor's value."""
    _require_nonempty(w)
    pairs = frozenset(i for i in range(1, len(w)) if w[i - 1] == w[i])
    return PairStats(pairs=pairs, nrpairs=len(pairs), prate=Fraction(len(pairs), len(w)))


def eh_positions(w: bytes) -> frozenset[int]:
    """Positions (1-based, from 2) whose symbol differs from its predecessor.

    Together with the pair positions these cover 2..len(w) exactly once,
    shifted by one: i is a pair position iff i+1 is not in eh_positions.
    """
    _require_nonempty(w)
    return frozenset(i for i in range(2, len(w) + 1) if w[i - 1] != w[i - 2])


def _frequencies(w: bytes) -> list[tuple[int, int]]:
    return sorted(Counter(w).items())


def huffman_entropy(w: bytes) -> float:
    """Per-symbol entropy of the string's frequency distribution, in bits."""
    _require_nonempty(w)
    n = len(w)
    return sum(f * log2(n / f) for _, f in _frequencies(w)) / n


def huffman_rate(w: bytes) -> float:
    """Per-symbol cost of the canonical Huffman code built from the string's
    own frequencies."""
    _require_nonempty(w)
    return huffman_total_length(_frequencies(w)) / len(w)


def _require_order1(table: CodeTable) -> None:
    if table.order != 1:
        raise TableError("this analysis requires an order-1 table")


def l_not_huffman(w: bytes, table: CodeTable) -> int:
    """Bits spent outside transitions: the first codeword plus the codeword
    of every repeated position. For tables from build_order1 this is
    nrpairs(w) + len of the first symbol's empty-context codeword."""
    _require_nonempty(w)
    _require_order1(table)
    index_of = table.alphabet.index_of
    total = len(table_get(table, index_of(w[0]), EMPTY_CONTEXT))
    for i in pair_stats(w).pairs:
        total += len(table_get(table, index_of(w[i]), (index_of(w[i - 1]),)))
    return total


def l_huffman(w: bytes) -> float:
    """Estimated transition cost: for each position whose symbol differs from
    its predecessor, one bit plus the log-share of entering that symbol from
    that predecessor, averaged over the symbol's transition occurrences. The
    inner sum runs over distinct predecessor symbols."""
    _require_nonempty(w)
    eh = eh_positions(w)
    if not eh:
        return 0.0
    occurrences: dict[int, int] = {}
    predecessor_counts: dict[int, dict[int, int]] = {}
    for i in eh:
        symbol = w[i - 1]
        predecessor = w[i - 2]
        occurrences[symbol] = occurrences.get(symbol, 0) + 1
        per = predecessor_counts.setdefault(symbol, {})
        per[predecessor] = per.get(predecessor, 0) + 1
    share: dict[int, float] = {}
    for symbol, n_s in occurrences.items():
        inner = sum(
            f * (1.0 + log2(n_s / f)) for f in predecessor_counts[symbol].values()
        )
        share[symbol] = inner / n_s
    return sum(share[w[i - 1]] for i in eh)


def h_a(w: bytes, table: CodeTable) -> float:
    """Adaptive entropy estimate: run bits plus estimated transition bits."""
    return l_not_huffman(w, table) + l_huffman(w)


def r_a_literal(w: bytes, table: CodeTable) -> float:
    """Actual per-symbol rate of the order-1 adaptive coder on this string."""
    _require_nonempty(w)
    _require_order1(table)
    return len(encode(table, w)) / len(w)


def compare_report(w: bytes, table: CodeTable) -> AnalysisReport:
    """Every analysis figure for one string under one order-1 table."""
    _require_nonempty(w)
    _require_order1(table)
    stats = pair_stats(w)
    eh = eh_positions(w)
    bits = encode(table, w)
    run_bits = l_not_huffman(w, table)
    transition_bits = l_huffman(w)
    frequencies = _frequencies(w)
    huffman_bits = huffman_total_length(frequencies)
    n = len(w)
    return AnalysisReport(
        length=n,
        stats=stats,
        eh=eh,
        encoded_bits=len(bits),
        r_a_literal=len(bits) / n,
        huffman_total_bits=huffman_bits,
        huffman_rate=huffman_bits / n,
        huffman_entropy=huffman_entropy(w),
        l_not_huffman=run_bits,
        l_huffman=transition_bits,
        h_a=run_bits + transition_bits,
    )


CSV_COLUMNS = (
    "string-id",
    "length",
    "nrpairs",
    "prate",
    "adaptive_bits",
    "huffman_bits",
    "H",
    "R",
    "LNotHuffman",
    "LHuffman",
    "H_A",
    "R_A",
)


def _csv_row(name: str, r: AnalysisReport) -> list[str]:
    return [
        name,
        str(r.length),
        str(r.stats.nrpairs),
        f"{float(r.stats.prate):.6f}",
        str(r.encoded_bits),
        str(r.huffman_total_bits),
        f"{r.huffman_entropy:.6f}",
        f"{r.huffman_rate:.6f}",
        str(r.l_not_huffman),
        f"{r.l_huffman:.6f}",
        f"{r.h_a:.6f}",
        f"{r.r_a_literal:.6f}",
    ]


def render_csv(rows: Sequence[tuple[str, AnalysisReport]]) -> str:
    """CSV rendering, one line per (name, report) pair plus a header."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for name, report in rows:
        writer.writerow(_csv_row(name, report))
    return buffer.getvalue()


def winner(r: AnalysisReport) -> str:
    """Which coder used fewer bits on this string."""
    if r.encoded_bits < r.huffman_total_bits:
        return "adaptive"
    if r.encoded_bits > r.huffman_total_bits:
        return "huffman"
    return "tie"


def render_comparison(rows: Sequence[tuple[str, AnalysisReport]]) -> str:
    """Aligned text table with one row per input and a winner column."""
    header = list(CSV_COLUMNS) + ["winner"]
    body = [_csv_row(name, report) + [winner(report)] for name, report in rows]
    widths = [
        max(len(header[col]), *(len(row[col]) for row in body)) if body else len(header[col])
        for col in range(len(header))
    ]
    lines = []
    for row in [header] + body:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return "\n".join(lines) + "\n"


def _positions_text(positions: frozenset[int]) -> str:
    if len(positions) > 32:
        return f"({len(positions)} positions)"
    if not positions:
        return "{}"
    return "{" + ",".join(str(i) for i in sorted(positions)) + "}"


def render_stats(name: str, r: AnalysisReport) -> str:
    """Multi-line key/value rendering of one report, including the reported
    (never asserted) adaptive bound checks in both total and rate form."""
    huffman_ok = r.huffman_entropy <= r.huffman_rate <= r.huffman_entropy + 1.0
    totals_ok = r.h_a <= r.encoded_bits <= r.h_a + 1.0
    per_symbol = r.h_a / r.length
    rates_ok = per_symbol <= r.r_a_literal <= per_symbol + 1.0
    lines = [
        f"string-id: {name}",
        f"length: {r.length}",
        f"pairs: {_positions_text(r.stats.pairs)}",
        f"nrpairs: {r.stats.nrpairs}",
        f"prate: {float(r.stats.prate):.6f}",
        f"eh: {_positions_text(r.eh)}",
        f"adaptive_bits: {r.encoded_bits}",
        f"huffman_bits: {r.huffman_total_bits}",
        f"H: {r.huffman_entropy:.6f}",
        f"R: {r.huffman_rate:.6f}",
        f"LNotHuffman: {r.l_not_huffman}",
        f"LHuffman: {r.l_huffman:.6f}",
        f"H_A: {r.h_a:.6f}",
        f"R_A: {r.r_a_literal:.6f}",
        f"winner: {winner(r)}",
        f"huffman_bound_ok: {str(huffman_ok).lower()} (H <= R <= H+1)",
        f"adaptive_bound_totals_ok: {str(totals_ok).lower()} (H_A <= adaptive_bits <= H_A+1)",
        f"adaptive_bound_rates_ok: {str(rates_ok).lower()} (H_A/length <= R_A <= H_A/length+1)",
    ]
    return "\n".join(lines) + "\n"

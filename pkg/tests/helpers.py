"""Shared fixtures and independent oracles for the test suite.

The oracles deliberately avoid the library's own code paths: the Huffman
oracle enumerates Kraft-feasible length assignments, the decoder oracle
scans rows linearly instead of walking tries, and the transition-cost oracle
transliterates the defining formula position by position.
"""

from __future__ import annotations

import math
import random
from itertools import combinations_with_replacement

from adacode import Alphabet, CodeTable, iter_contexts


def example_order2_table() -> CodeTable:
    """Order-2 table over {a, b} whose context rows flip after a b."""
    flip = ("1", "0")
    keep = ("0", "1")
    return CodeTable(
        alphabet=Alphabet((ord("a"), ord("b"))),
        order=2,
        rows={
            (): keep,
            (0,): keep,
            (1,): keep,
            (0, 0): keep,
            (0, 1): keep,
            (1, 0): flip,
            (1, 1): flip,
        },
    )


def nonprefix_order2_table() -> CodeTable:
    """Order-2 table over {a, b} with one non-prefix row that still encodes
    injectively (the codeword sets overlap only in a decodable way)."""
    keep = ("0", "1")
    return CodeTable(
        alphabet=Alphabet((ord("a"), ord("b"))),
        order=2,
        rows={
            (): keep,
            (0,): ("0", "01"),
            (1,): keep,
            (0, 0): keep,
            (0, 1): keep,
            (1, 0): keep,
            (1, 1): keep,
        },
    )


def random_prefix_row(rng: random.Random, count: int) -> tuple[str, ...]:
    """A random complete prefix code with `count` words, shuffled."""
    words = [""]
    while len(words) < count:
        picked = words.pop(rng.randrange(len(words)))
        words.append(picked + "0")
        words.append(picked + "1")
    rng.shuffle(words)
    return tuple(words)


def random_table(rng: random.Random, order: int, size: int) -> CodeTable:
    """A random total table with prefix-code rows over `size` random bytes."""
    symbols = tuple(sorted(rng.sample(range(256), size)))
    rows = {
        ctx: random_prefix_row(rng, size) for ctx in iter_contexts(size, order)
    }
    return CodeTable(alphabet=Alphabet(symbols), order=order, rows=rows)


def random_string(rng: random.Random, alphabet: Alphabet, length: int) -> bytes:
    return bytes(rng.choice(alphabet.symbols) for _ in range(length))


def scan_decode(table: CodeTable, bits: str) -> tuple[bytes, int]:
    """Naive decoder oracle: linear scan of each context row per step.

    Returns (output, iterations). Raises AssertionError on ambiguity or
    failure, since oracle inputs are always valid encodings.
    """
    window: list[int] = []
    out: list[int] = []
    cursor = 0
    iterations = 0
    while cursor < len(bits):
        row = table.rows[tuple(window)]
        matches = [i for i, word in enumerate(row) if bits.startswith(word, cursor)]
        assert len(matches) == 1, f"expected exactly one match, got {matches}"
        index = matches[0]
        out.append(index)
        cursor += len(row[index])
        iterations += 1
        window.append(index)
        if len(window) > table.order:
            del window[0]
    return table.alphabet.to_bytes(out), iterations


def brute_force_huffman_total(frequencies: list[int]) -> int:
    """Minimum total weighted length over Kraft-feasible length assignments.

    Enumerates length multisets up to size-1 bits per word (enough for any
    optimal code) and pairs sorted frequencies with sorted lengths, which is
    optimal for a fixed multiset. A single symbol costs one bit per use.
    """
    count = len(frequencies)
    if count == 1:
        return frequencies[0]
    best = None
    longest = count - 1
    for multiset in combinations_with_replacement(range(1, longest + 1), count):
        if sum(2 ** (longest - length) for length in multiset) > 2 ** longest:
            continue
        total = sum(
            f * length
            for f, length in zip(sorted(frequencies, reverse=True), sorted(multiset))
        )
        if best is None or total < best:
            best = total
    assert best is not None
    return best


def literal_l_huffman(w: bytes) -> float:
    """Position-by-position transliteration of the transition-cost formula,
    inner sum over distinct predecessor symbols."""
    s = len(w)
    eh = [i for i in range(2, s + 1) if w[i - 1] != w[i - 2]]
    eh_set = set(eh)
    total = 0.0
    for i in eh:
        n_i = len([j for j in eh if w[j - 1] == w[i - 1]])
        predecessor_symbols = sorted(
            {w[j - 1] for j in range(1, s) if (j + 1) in eh_set and w[j] == w[i - 1]}
        )
        inner = 0.0
        for q in predecessor_symbols:
            f_q = len([j for j in eh if w[j - 1] == w[i - 1] and w[j - 2] == q])
            inner += f_q * (1.0 + math.log2(n_i / f_q))
        total += inner / n_i
    return total

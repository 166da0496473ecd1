"""Generalized coding layer: context rules, lookups, encode/decode."""

import random

import pytest
from hypothesis import given, strategies as st

from adacode import (
    AdaptiveCodeError,
    AdaptiveFunction,
    DecodeError,
    EncodeError,
    GACode,
    alphabet_from_bytes,
    decode,
    encode,
    ga_decode,
    ga_encode,
    lookup_from_table,
    order_n_function,
)
from adacode.builder import build_order1

from helpers import example_order2_table, random_string, random_table


def test_order_n_function_examples():
    f1 = order_n_function(1)
    assert f1(1, ()) == ()
    assert f1(2, (97,)) == (97,)
    assert f1(5, (1, 2, 3, 4)) == (4,)

    f2 = order_n_function(2)
    assert f2(1, ()) == ()
    assert f2(2, (97,)) == (97,)
    assert f2(3, (97, 98)) == (97, 98)
    assert f2(4, (97, 98, 99)) == (98, 99)


def test_order_n_function_window_length():
    rng = random.Random(5)
    for n in (1, 2, 3, 5):
        f = order_n_function(n)
        for _ in range(30):
            w = tuple(rng.randrange(256) for _ in range(rng.randint(1, 30)))
            i = rng.randint(1, len(w))
            ctx = f(i, w[: i - 1])
            assert len(ctx) == min(i - 1, n)
            assert ctx == w[max(0, i - 1 - n) : i - 1]


def test_order_n_function_rejects_bad_order():
    with pytest.raises(AdaptiveCodeError):
        order_n_function(0)


def test_adaptive_function_only_sees_prior_symbols():
    f = AdaptiveFunction(lambda i, prefix: prefix)
    # symbols at and after the queried position are sliced away before the
    # rule runs, so handing it the whole string changes nothing
    assert f(2, (1, 2, 3)) == (1,)
    assert f(1, (1, 2, 3)) == ()


def test_adaptive_function_positions_are_one_based():
    f = AdaptiveFunction(lambda i, prefix: ())
    with pytest.raises(AdaptiveCodeError):
        f(0, ())


def test_adaptive_function_enforces_declared_bound():
    f = AdaptiveFunction(lambda i, prefix: prefix, max_context=1)
    assert f(2, (7,)) == (7,)
    with pytest.raises(AdaptiveCodeError, match="bound"):
        f(3, (7, 8))


def test_ga_code_validation():
    f = order_n_function(1)
    with pytest.raises(AdaptiveCodeError):
        GACode(f, {})
    with pytest.raises(AdaptiveCodeError):
        GACode(f, {(256, ()): "0"})
    with pytest.raises(AdaptiveCodeError):
        GACode(f, {(97, ()): ""})
    with pytest.raises(AdaptiveCodeError):
        GACode(f, {(97, ()): "012"})


def test_lookup_from_table_builder_ab():
    t = build_order1(alphabet_from_bytes(b"ab"))
    lookup = lookup_from_table(t)
    assert lookup[(97, ())] == "0"
    assert lookup[(98, ())] == "10"
    assert lookup[(97, (97,))] == "0"
    assert lookup[(98, (97,))] == "10"
    assert lookup[(97, (98,))] == "10"
    assert lookup[(98, (98,))] == "0"
    assert len(lookup) == 6


def test_ga_encode_examples():
    t2 = example_order2_table()
    code = GACode(order_n_function(2), lookup_from_table(t2))
    assert ga_encode(code, b"abaa") == "0101"

    t1 = build_order1(alphabet_from_bytes(b"ab"))
    code1 = GACode(order_n_function(1), lookup_from_table(t1))
    assert ga_encode(code1, b"aa") == "00"
    assert ga_encode(code1, b"") == ""


def test_ga_encode_missing_entry():
    code = GACode(order_n_function(1), {(97, ()): "0", (97, (97,)): "0"})
    with pytest.raises(EncodeError) as err:
        ga_encode(code, b"ab")
    assert err.value.position == 2
    assert "context 'a'" in str(err.value)


def test_ga_decode_examples():
    t2 = example_order2_table()
    code = GACode(order_n_function(2), lookup_from_table(t2))
    assert ga_decode(code, "0101") == b"abaa"
    assert ga_decode(code, "") == b""


def test_ga_decode_rejects_bad_bits():
    t = build_order1(alphabet_from_bytes(b"ab"))
    code = GACode(order_n_function(1), lookup_from_table(t))
    with pytest.raises(DecodeError):
        ga_decode(code, "01x")


def test_ga_decode_checks_rows_lazily():
    lookup = {
        (97, ()): "0",
        (98, ()): "1",
        (97, (97,)): "0",
        (98, (97,)): "1",
        # this row is not a prefix code, but only matters if visited
        (97, (98,)): "0",
        (98, (98,)): "01",
    }
    code = GACode(order_n_function(1), lookup)
    assert ga_decode(code, "01") == b"ab"
    with pytest.raises(DecodeError, match="non-prefix row at visited context 'b'"):
        ga_decode(code, "010")


def test_ga_decode_missing_row():
    lookup = {
        (97, ()): "0",
        (98, ()): "1",
        (97, (97,)): "0",
        (98, (97,)): "1",
    }
    code = GACode(order_n_function(1), lookup)
    assert ga_decode(code, "01") == b"ab"
    with pytest.raises(DecodeError) as err:
        ga_decode(code, "011")
    assert err.value.bit_offset == 2
    assert "no codewords for context 'b'" in str(err.value)


def test_ga_decode_truncated_and_undecodable():
    code = GACode(
        AdaptiveFunction(lambda i, prefix: (), max_context=0),
        {(97, ()): "00", (98, ()): "01"},
    )
    with pytest.raises(DecodeError, match="truncated input at bit offset 0"):
        ga_decode(code, "0")
    with pytest.raises(DecodeError, match="undecodable at bit offset 0"):
        ga_decode(code, "1")


def test_ga_matches_table_codec():
    rng = random.Random(29)
    for _ in range(60):
        order = rng.randint(1, 3)
        table = random_table(rng, order, rng.randint(2, 5))
        code = GACode(order_n_function(order), lookup_from_table(table))
        w = random_string(rng, table.alphabet, rng.randint(0, 40))
        bits = encode(table, w)
        assert ga_encode(code, w) == bits
        assert ga_decode(code, bits) == w
        assert decode(table, bits).output == w


@given(st.lists(st.sampled_from([97, 98]), max_size=40).map(bytes))
def test_ga_roundtrip_order1(w):
    t = build_order1(alphabet_from_bytes(b"ab"))
    code = GACode(order_n_function(1), lookup_from_table(t))
    assert ga_decode(code, ga_encode(code, w)) == w

import pytest
from hypothesis import given

from pseudostandard import (
    DirectiveBiSeq,
    InvalidInputError,
    build_prefixes,
    generate_word,
    is_normalized,
    naive_normalize,
    normalize_binary,
    pseudopalindromic_prefixes,
)
from pseudostandard.words import BINARY

from conftest import binary


def B(delta, theta):
    return DirectiveBiSeq(delta, theta, BINARY)


def test_prefix_replacements():
    assert normalize_binary(B("01", "RR")).normalized == B("010", "RER")
    assert normalize_binary(B("0", "E")).normalized == B("01", "RE")
    assert normalize_binary(B("0011", "RREE")).normalized == B("00110", "RRERE")
    out = normalize_binary(B("0", "R"))
    assert out.notchanged and out.normalized == B("0", "R")


def test_b2_then_b3():
    out = normalize_binary(B("01", "EE"))
    assert out.normalized == B("0110", "RERE")
    assert [m.rule_id for m in out.trace] == ["B2", "B3"]
    out = normalize_binary(B("001", "REE"))
    assert out.normalized == B("00110", "RRERE")
    assert [m.rule_id for m in out.trace] == ["B2", "B3"]


def test_factor_replacement():
    out = normalize_binary(B("0010", "RREE"))
    assert [m.rule_id for m in out.trace] == ["BF"]
    assert out.normalized == B("00101", "RRERE")


def test_rejects_ternary():
    with pytest.raises(InvalidInputError):
        normalize_binary(DirectiveBiSeq("01", "RR"))


@given(binary(max_len=12))
def test_properties(bs):
    out = normalize_binary(bs)
    norm = out.normalized
    assert norm == naive_normalize(bs)
    assert is_normalized(norm)
    assert generate_word(norm) == generate_word(bs)
    assert normalize_binary(norm).notchanged
    lengths = [len(w) for w in build_prefixes(norm)]
    assert lengths == [r.length for r in pseudopalindromic_prefixes(generate_word(norm), BINARY)]
    assert out.notchanged == (norm == bs)

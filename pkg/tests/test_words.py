import pytest
from hypothesis import given
from hypothesis import strategies as st

from pseudostandard import (
    BINARY,
    TERNARY,
    Antimorphism,
    InvalidInputError,
    apply_antimorphism,
    is_theta_palindrome,
    longest_theta_pal_suffix,
    palindromic_closure,
    pseudopalindrome_types,
)

A = Antimorphism
ternary_words = st.text(alphabet="012", max_size=300)
ternary_thetas = st.sampled_from([A.R, A.E0, A.E1, A.E2])


def slow_closure(w, theta):
    # shortest theta-palindrome with prefix w, by trying every extension length
    for k in range(len(w) + 1):
        cand = w + apply_antimorphism(theta, w[:k])
        if is_theta_palindrome(cand, theta):
            return cand


def test_letter_images():
    assert apply_antimorphism(A.E0, "012") == "120"
    assert apply_antimorphism(A.E1, "012") == "012"[::-1].translate(str.maketrans("012", "210"))
    assert apply_antimorphism(A.E2, "0012") == "2011"
    assert apply_antimorphism(A.R, "0112") == "2110"
    assert apply_antimorphism(A.E, "0011") == "0011"


def test_known_pseudopalindromes():
    assert is_theta_palindrome("0112", A.E1)
    assert is_theta_palindrome("12010120", A.E2)
    assert is_theta_palindrome("01001101", A.E)
    assert pseudopalindrome_types("0") == {A.R, A.E0}
    assert pseudopalindrome_types("000") == {A.R, A.E0}
    assert pseudopalindrome_types("01") == {A.E2}
    assert pseudopalindrome_types("0102") == frozenset()
    assert pseudopalindrome_types("0110", BINARY) == {A.R}


def test_closure_golden():
    assert palindromic_closure("01011", A.R) == "01011010"
    assert palindromic_closure("01011", A.E0) == "0101122020"
    assert palindromic_closure("01201", A.E2) == "01201"
    assert palindromic_closure("", A.R) == ""


def test_longest_suffix():
    assert longest_theta_pal_suffix("01011", A.R) == "11"
    assert longest_theta_pal_suffix("01011", A.E0) == ""
    assert longest_theta_pal_suffix("01201", A.E2) == "01201"
    assert longest_theta_pal_suffix("012", A.E0) == "12"


def test_names_and_codes_both_parse():
    assert A("E1") is A.E1 and A("1") is A.E1 and A("R") is A.R
    assert A.exchange("2") is A.E2
    assert A.E0.fixed_letter == "0" and A.R.fixed_letter is None


def test_rejects_foreign_letters():
    with pytest.raises(InvalidInputError) as err:
        palindromic_closure("0130", A.R)
    assert err.value.position == 2
    with pytest.raises(InvalidInputError):
        apply_antimorphism(A.E, "012")
    with pytest.raises(InvalidInputError):
        pseudopalindrome_types("02", BINARY)
    with pytest.raises(ValueError):
        A("E3")


@given(ternary_words, ternary_thetas)
def test_involution(w, theta):
    assert apply_antimorphism(theta, apply_antimorphism(theta, w)) == w


@given(ternary_words, ternary_words, ternary_thetas)
def test_antimorphism(u, v, theta):
    assert apply_antimorphism(theta, u + v) == apply_antimorphism(theta, v) + apply_antimorphism(theta, u)


@given(st.text(alphabet="012", max_size=40), ternary_thetas)
def test_closure_matches_slow_search(w, theta):
    assert palindromic_closure(w, theta) == slow_closure(w, theta)


@given(ternary_words, ternary_thetas)
def test_closure_properties(w, theta):
    c = palindromic_closure(w, theta)
    assert c.startswith(w) and is_theta_palindrome(c, theta)
    assert palindromic_closure(c, theta) == c
    p = longest_theta_pal_suffix(w, theta)
    assert is_theta_palindrome(p, theta) and w.endswith(p)
    assert len(c) == 2 * len(w) - len(p)


@given(st.text(alphabet="01", min_size=97, max_size=400), st.sampled_from([A.R, A.E]))
def test_hashed_path_binary(w, theta):
    # long words take the hashed path; compare with a direct scan
    t = apply_antimorphism(theta, w)
    want = max(L for L in range(len(w) + 1) if w.endswith(t[:L]))
    assert len(longest_theta_pal_suffix(w, theta)) == want


@given(st.text(alphabet="012", max_size=30))
def test_two_types_only_for_unary(w):
    if w and len(pseudopalindrome_types(w)) > 1:
        assert len(set(w)) == 1


def test_alphabet_constants():
    assert TERNARY.letters == "012" and BINARY.antimorphisms == (A.R, A.E)

"""Composition algebra: worked-example values and structural invariants."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from compcodes.core import (
    Composition,
    PolyTerm,
    bivariate_poly,
    complement,
    composition_of,
    cumulative_weight,
    full_readout,
    length_class,
    sigma_from_weights,
    sigma_of_string,
)
from compcodes.errors import (
    InconsistentReadoutError,
    InvalidComplementError,
    MissingClassError,
)
from conftest import EXAMPLE_S, EXAMPLE_SIGMA, EXAMPLE_WEIGHTS

bitstrings = st.text(alphabet="01", min_size=1, max_size=14)


def test_composition_of_worked_example():
    assert composition_of(EXAMPLE_S, 1, 7) == Composition(4, 3)
    assert composition_of(EXAMPLE_S, 5, 5) == Composition(0, 1)
    assert composition_of(EXAMPLE_S, 1, 9) == Composition(4, 5)


def test_composition_of_rejects_bad_range():
    for i, j in ((0, 3), (3, 2), (1, 10)):
        with pytest.raises(ValueError):
            composition_of(EXAMPLE_S, i, j)


def test_length_class_worked_example():
    assert dict(length_class(EXAMPLE_S, 7).entries) == {
        Composition(4, 3): 1, Composition(3, 4): 1, Composition(2, 5): 1}
    assert dict(length_class(EXAMPLE_S, 3).entries) == {
        Composition(2, 1): 3, Composition(1, 2): 3, Composition(0, 3): 1}
    assert dict(length_class("01", 2).entries) == {Composition(1, 1): 1}


def test_full_readout_matches_reference_listing(example_readout):
    assert full_readout(EXAMPLE_S) == example_readout
    assert example_readout.total_entries() == 45


def test_full_readout_trivial_cases():
    r = full_readout("01")
    assert dict(r.classes[1]) == {Composition(1, 0): 1, Composition(0, 1): 1}
    assert dict(r.classes[2]) == {Composition(1, 1): 1}
    assert full_readout("110011010").total_entries() == 45


def test_cumulative_weight_worked_example(example_readout):
    assert cumulative_weight(example_readout, 7) == 12
    assert cumulative_weight(example_readout, 2) == 9
    assert cumulative_weight(example_readout, 3) == 12


def test_cumulative_weight_missing_class(example_readout):
    with pytest.raises(MissingClassError):
        cumulative_weight(example_readout.restrict({4}), 4)


def test_sigma_of_string_examples():
    assert sigma_of_string(EXAMPLE_S) == EXAMPLE_SIGMA
    assert sigma_of_string("01") == (1,)
    assert sigma_of_string("0011") == (1, 1)


def test_sigma_from_weights_examples():
    assert sigma_from_weights(EXAMPLE_WEIGHTS, 9) == EXAMPLE_SIGMA
    assert sigma_from_weights((1, 1), 2) == (1,)


def test_sigma_from_weights_detects_tampering():
    # lowering w_7 by one unit (a skew on class 7) breaks w_3 = w_7
    tampered = list(EXAMPLE_WEIGHTS)
    tampered[6] = 11
    with pytest.raises(InconsistentReadoutError):
        sigma_from_weights(tampered, 9)


def test_sigma_from_weights_detects_out_of_range():
    # impossible first-half weights: sigma_1 = 2*w_1 - w_2 escapes {0,1,2}
    with pytest.raises(InconsistentReadoutError):
        sigma_from_weights((5, 2, 12, 13, 14), 9)


def test_complement_worked_example():
    whole = Composition(4, 5)
    assert complement(whole, Composition(4, 3)) == Composition(0, 2)
    assert complement(whole, Composition(2, 5)) == Composition(2, 0)
    with pytest.raises(InvalidComplementError):
        complement(whole, whole)
    with pytest.raises(InvalidComplementError):
        complement(Composition(1, 1), Composition(0, 2))


def test_bivariate_poly_worked_example():
    # 1 + y + y^2 + xy^2 + xy^3 + x^2y^3 + x^2y^4 + x^3y^4 + x^4y^4 + x^5y^4
    expected = [(0, 0), (0, 1), (0, 2), (1, 2), (1, 3),
                (2, 3), (2, 4), (3, 4), (4, 4), (5, 4)]
    assert bivariate_poly(EXAMPLE_S) == tuple(PolyTerm(*t) for t in expected)
    assert bivariate_poly("1") == (PolyTerm(0, 0), PolyTerm(1, 0))
    assert bivariate_poly("0") == (PolyTerm(0, 0), PolyTerm(0, 1))


def exhaustive_strings(lengths):
    for n in lengths:
        for x in range(2 ** n):
            yield format(x, f"0{n}b")


def test_weight_symmetry_exhaustive():
    # w_k = w_{n-k+1} for every string up to length 10
    for s in exhaustive_strings(range(1, 11)):
        r = full_readout(s)
        for k in range(1, len(s) + 1):
            assert r.weight(k) == r.weight(len(s) - k + 1)


def test_weight_sigma_relation_exhaustive():
    # w_k = sum_{i<=k} i*sigma_i + k * sum_{i>k} sigma_i for k <= ceil(n/2)
    for s in exhaustive_strings(range(1, 11)):
        n = len(s)
        sigma = sigma_of_string(s)
        r = full_readout(s)
        m = (n + 1) // 2
        for k in range(1, m + 1):
            expect = (sum(i * sigma[i - 1] for i in range(1, k + 1))
                      + k * sum(sigma[i - 1] for i in range(k + 1, m + 1)))
            assert r.weight(k) == expect


@settings(max_examples=200)
@given(bitstrings)
def test_sigma_roundtrip(s):
    r = full_readout(s)
    weights = [r.weight(k) for k in range(1, len(s) + 1)]
    assert sigma_from_weights(weights, len(s)) == sigma_of_string(s)


@settings(max_examples=200)
@given(bitstrings)
def test_total_entry_count(s):
    n = len(s)
    assert full_readout(s).total_entries() == n * (n + 1) // 2


@settings(max_examples=200)
@given(bitstrings)
def test_readout_invariants(s):
    r = full_readout(s)
    assert r.is_full()
    assert not r.missing_classes()
    assert not r.oversized_classes()

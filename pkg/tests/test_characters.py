import itertools
import json
import math

import numpy as np
import pytest

from qeuler import (
    DomainError,
    NegativeArgument,
    NotOdd,
    Overflow,
    build_character_group,
    conv_power,
    eval_char,
)


def euler_phi(n):
    return sum(1 for m in range(n) if math.gcd(m, n) == 1) if n > 1 else 1


def brute_force_composition_sum(chi, r, m):
    """Exact oracle: enumerate all compositions of m into r nonnegative parts."""
    total = 0j
    for parts in itertools.product(range(m + 1), repeat=r):
        if sum(parts) == m:
            value = 1.0 + 0j
            for p in parts:
                value *= chi(p)
            total += value
    return total


def test_group_mod_one():
    group = build_character_group(1)
    assert len(group) == 1
    assert group[0](0) == 1
    assert group[0](7) == 1
    assert group.structure == []


def test_group_mod_three():
    group = build_character_group(3)
    assert len(group) == 2
    assert list(group[0].values) == [0, 1, 1]
    assert list(group[1].values) == [0, 1, -1]
    assert group[0].is_principal()


def test_group_mod_five_has_order_four_characters():
    group = build_character_group(5)
    assert len(group) == 4
    at_two = sorted((complex(chi(2)) for chi in group), key=lambda z: (z.real, z.imag))
    assert at_two == [-1, -1j, 1j, 1]
    # the two order-4 characters take exactly +-i at residue 2
    quartics = [chi for chi in group if chi(2) in (1j, -1j)]
    assert len(quartics) == 2


def test_group_construction_errors():
    with pytest.raises(NotOdd):
        build_character_group(4)
    with pytest.raises(Overflow):
        build_character_group(101, max_modulus=100)
    with pytest.raises(DomainError):
        build_character_group(0)


def test_eval_char_periodic_extension():
    chi = build_character_group(3)[1]
    assert eval_char(chi, 4) == 1  # 4 = 1 mod 3
    assert eval_char(chi, 6) == 0  # gcd(6, 3) > 1
    assert eval_char(build_character_group(1)[0], 0) == 1
    with pytest.raises(NegativeArgument):
        eval_char(chi, -1)


@pytest.mark.parametrize("d", range(1, 46, 2))
def test_group_properties(d):
    group = build_character_group(d)
    assert len(group) == euler_phi(d)
    for chi in group:
        values = chi.values
        # support and normalization
        for m in range(d):
            if math.gcd(m, d) > 1 and d > 1:
                assert values[m] == 0
            else:
                assert abs(abs(values[m]) - 1.0) <= 1e-12
                assert abs(values[m] ** len(group) - 1.0) <= 1e-9
        if d > 1:
            assert values[1] == 1
        # complete multiplicativity on residues
        for m in range(d):
            for n in range(d):
                lhs = values[m * n % d]
                assert abs(lhs - values[m] * values[n]) <= 1e-12
        # orthogonality for non-principal characters
        if not chi.is_principal():
            assert abs(np.sum(values)) <= 1e-12


@pytest.mark.parametrize("d", [9, 15, 45])
def test_group_closure_under_products(d):
    group = build_character_group(d)
    tables = [chi.values for chi in group]
    for chi_a, chi_b in itertools.product(group, repeat=2):
        product = chi_a.values * chi_b.values
        assert any(np.allclose(product, t, atol=1e-12) for t in tables)


def test_conv_power_trivial_cases():
    chi1 = build_character_group(1)[0]
    seq = conv_power(chi1, 2, 6)
    # compositions of m into 2 parts: m + 1 of them, all weight one
    assert np.allclose(seq.coeffs, np.arange(1, 7))
    assert seq.coeffs[3] == 4

    quad = build_character_group(3)[1]
    assert list(conv_power(quad, 1, 5).coeffs) == [0, 1, -1, 0, 1]


def test_conv_power_hand_enumerated_value():
    quad = build_character_group(3)[1]
    # chi(0)chi(3) + chi(1)chi(2) + chi(2)chi(1) + chi(3)chi(0) = -2
    assert conv_power(quad, 2, 5).coeffs[3] == -2


@pytest.mark.parametrize("d", [1, 3, 5])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_conv_power_matches_brute_force(d, r):
    M = 12
    for chi in build_character_group(d):
        seq = conv_power(chi, r, M)
        for m in range(M):
            oracle = brute_force_composition_sum(chi, r, m)
            assert abs(seq.coeffs[m] - oracle) <= 1e-12
            assert abs(seq.coeffs[m]) <= math.comb(m + r - 1, r - 1) + 1e-12


def test_conv_power_order_additivity():
    chi = build_character_group(5)[1]
    M = 20
    lhs = conv_power(chi, 3, M).coeffs
    c1 = conv_power(chi, 1, M).coeffs
    c2 = conv_power(chi, 2, M).coeffs
    rhs = np.convolve(c1, c2)[:M]
    assert np.allclose(lhs, rhs, atol=1e-12)


def test_conv_power_validation():
    chi = build_character_group(3)[0]
    with pytest.raises(DomainError):
        conv_power(chi, 0, 5)
    with pytest.raises(DomainError):
        conv_power(chi, 1, 0)


def test_character_json_round_trip():
    for chi in build_character_group(5):
        blob = json.dumps(chi.to_json_dict())
        parsed = json.loads(blob)
        assert parsed["d"] == 5
        assert parsed["label"] == chi.label
        values = [complex(re, im) for re, im in parsed["values"]]
        assert np.allclose(values, chi.values, atol=0)


def test_character_values_are_immutable():
    chi = build_character_group(3)[1]
    with pytest.raises(ValueError):
        chi.values[0] = 5.0

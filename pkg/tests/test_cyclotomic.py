"""Exact cyclotomic arithmetic: pinned values and ring/field laws."""

import json
import random
from fractions import Fraction
from math import lcm

import pytest

from stw.cyclotomic import CycloNumber, cyclotomic_polynomial, euler_phi, root_of_unity


def z(s, n):
    return root_of_unity(s, n)


def test_polynomial_and_totient_small_orders():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(5) == (1, 1, 1, 1, 1)
    assert cyclotomic_polynomial(11) == (1,) * 11
    # Phi_25 = x^20 + x^15 + x^10 + x^5 + 1
    expected_25 = tuple(1 if i % 5 == 0 else 0 for i in range(21))
    assert cyclotomic_polynomial(25) == expected_25
    assert euler_phi(275) == 200
    assert euler_phi(55) == 40


def test_roots_of_unity_basic_identities():
    assert z(0, 7) == 1
    assert z(1, 2) == -1
    assert z(5, 10) == -1
    assert z(3, 12) * z(9, 12) == 1
    assert z(1, 5) ** 5 == 1
    assert z(7, 11) == z(7 + 11, 11)
    # zeta_4 = i: i^2 = -1
    i = z(1, 4)
    assert i * i == -1


def test_vanishing_root_sums():
    for n in (2, 3, 5, 11, 25):
        total = CycloNumber.zero()
        for j in range(n):
            total = total + z(j, n)
        assert total.is_zero()
    # Partial geometric sum: 1 + zeta_25^5 + ... + zeta_25^20 = 0 (these are
    # the 5th roots of unity inside Q(zeta_25)).
    total = CycloNumber.zero()
    for j in range(5):
        total = total + z(5 * j, 25)
    assert total.is_zero()


def test_cross_order_equality():
    assert z(1, 5) == z(5, 25)
    assert z(2, 11) == z(10, 55)
    assert z(1, 5).lift(275) == z(55, 275)
    a = z(3, 5) + z(7, 11)
    assert a.lift(275) == a
    assert not (z(1, 5) == z(1, 11))


def test_rational_arithmetic_embeds():
    half = CycloNumber.from_rational(Fraction(1, 2))
    third = CycloNumber.from_rational(Fraction(1, 3))
    assert (half + third).as_fraction() == Fraction(5, 6)
    assert (half * third).as_fraction() == Fraction(1, 6)
    assert (half - half).is_zero()
    assert half.is_rational() and not z(1, 5).is_rational()
    assert (half * 2).is_integer()


def test_field_inverse_multiplies_back_to_one():
    # (1 + zeta_5)^(-1), checked only by multiplying back.
    v = 1 + z(1, 5)
    assert v * v.inverse() == 1
    w = Fraction(3, 7) * z(2, 11) - z(5, 11) + 2
    assert w * w.inverse() == 1
    u = z(3, 275) + z(100, 275)
    assert (u / u) == 1
    with pytest.raises(ZeroDivisionError):
        CycloNumber.zero().inverse()


def test_inverse_of_root_is_conjugate():
    for s, n in ((1, 5), (3, 11), (7, 25), (13, 275)):
        r = z(s, n)
        assert r.inverse() == r.conjugate()
        assert r * r.conjugate() == 1


def test_conjugation_is_a_ring_homomorphism():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.choice([5, 11, 25, 55])
        a = sum(
            (rng.randint(-3, 3) * z(rng.randrange(n), n) for _ in range(3)),
            CycloNumber.zero(),
        )
        b = sum(
            (rng.randint(-3, 3) * z(rng.randrange(n), n) for _ in range(3)),
            CycloNumber.zero(),
        )
        assert (a + b).conjugate() == a.conjugate() + b.conjugate()
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        assert a.conjugate().conjugate() == a


def test_ring_axioms_on_random_values():
    rng = random.Random(11)
    values = []
    for _ in range(8):
        n = rng.choice([1, 2, 5, 11, 25])
        v = sum(
            (rng.randint(-4, 4) * z(rng.randrange(n), n) for _ in range(2)),
            CycloNumber.from_rational(Fraction(rng.randint(-2, 2), rng.randint(1, 3))),
        )
        values.append(v)
    for a in values[:4]:
        for b in values[2:6]:
            for c in values[4:]:
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c
                assert a + b == b + a
                assert a * b == b * a


def test_power_matches_repeated_multiplication():
    v = 1 + z(2, 11)
    prod = CycloNumber.one()
    for k in range(6):
        assert v**k == prod
        prod = prod * v
    assert v**-2 == (v * v).inverse()


def test_float_approximation_respects_exact_values():
    v = z(1, 5) + z(4, 5)
    # 2*cos(2*pi/5) = (sqrt(5) - 1)/2
    assert abs(v.to_complex() - (5**0.5 - 1) / 2) < 1e-12
    assert abs(z(1, 275).to_complex() - complex(2.718281828**0j)) > 0  # smoke
    assert abs(z(137, 275).to_complex()) == pytest.approx(1.0, abs=1e-12)


def test_from_root_counts_matches_sum():
    counts = [0] * 275
    counts[3] = 5
    counts[270] = 2
    counts[0] = -1
    direct = 5 * z(3, 275) + 2 * z(270, 275) - 1
    assert CycloNumber.from_root_counts(275, counts) == direct


def test_json_round_trip_and_shape():
    v = Fraction(2, 3) * z(7, 25) - z(1, 25)
    data = v.to_json()
    assert data["order"] == 25
    assert len(data["coeffs"]) == euler_phi(25)
    assert all(isinstance(c, str) for c in data["coeffs"])
    assert len(data["approx"]) == 2
    again = CycloNumber.from_json(json.loads(json.dumps(data)))
    assert again == v


def test_canonical_key_is_stable_across_orders():
    n = lcm(5, 11)
    assert z(1, 5).canonical_key(n) == z(11, 55).canonical_key(n)
    assert z(1, 5).canonical_key(275) != z(2, 5).canonical_key(275)


def test_values_are_unhashable():
    with pytest.raises(TypeError):
        hash(z(1, 5))

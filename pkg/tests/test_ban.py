# coding: utf-8
# Standard Python libraries
from math import inf

# https://numpy.org/
import numpy as np
import numpy.testing as npt

# https://docs.pytest.org/
import pytest

# naipm imports
from naipm.ban import (Ban, get_length, set_length, using_length, lead_mon,
                       magnitude, compare, parse, format_literal)
from naipm.errors import BanSyntaxError

def assert_ban_close(actual, expected, rtol=1e-12, atol=1e-12):
    powers = range(max(actual.power, expected.power),
                   min(actual.power, expected.power) - actual.length, -1)
    npt.assert_allclose([actual.coefficient(p) for p in powers],
                        [expected.coefficient(p) for p in powers],
                        rtol=rtol, atol=atol)

def random_ban(rng, length=5):
    return Ban(rng.uniform(1.0, 2.0, size=length), power=int(rng.integers(-1, 2)),
               length=length)

class TestLiteral():

    def test_parse(self):
        value = Ban.parse('8+14n')
        assert value.power == 0
        assert value.coefficient(0) == 8.0
        assert value.coefficient(-1) == 14.0

    def test_parse_powers(self):
        value = parse('2.5a^2-3a+1')
        assert value.power == 2
        npt.assert_array_equal(value.coeffs, [2.5, -3.0, 1.0, 0.0, 0.0])

    def test_units_alone(self):
        assert Ban.parse('a') == Ban.alpha()
        assert Ban.parse('-n^2') == -Ban.eta(2)

    def test_format(self):
        assert Ban.parse('3a-2+0.5n').format() == '3.0a-2.0+0.5n'
        assert format_literal(Ban.zero()) == '0'
        assert Ban.parse('0.123456a').format(2) == '0.12a'

    @pytest.mark.parametrize('text', ['8+14n', '-a^2+1e-09n^2', '0.1a-3.25'])
    def test_format_parses_back(self, text):
        value = Ban.parse(text)
        assert Ban.parse(value.format()) == value

    def test_syntax_error_position(self):
        with pytest.raises(BanSyntaxError) as err:
            Ban.parse('3x')
        assert err.value.position == 1

    def test_syntax_error_is_value_error(self):
        with pytest.raises(ValueError):
            Ban.parse('')
        with pytest.raises(ValueError):
            Ban.parse('2^3')

    def test_literal_too_wide(self):
        with using_length(2):
            with pytest.raises(BanSyntaxError):
                Ban.parse('a+n')

class TestArithmetic():

    def test_alpha_times_sum(self):
        a = Ban.alpha()
        assert a * (a + 2) == Ban.parse('a^2+2a')

    def test_division(self):
        value = Ban.parse('-10a^2+16+42n^2') / Ban.parse('5a^2+7')
        assert value.power == 0
        assert value.coefficient(0) == pytest.approx(-2.0)
        assert value.coefficient(-2) == pytest.approx(6.0)
        assert abs(value.coefficient(-1)) < 1e-12
        assert abs(value.coefficient(-3)) < 1e-12

    def test_real_embedding(self):
        assert float(Ban(1.5) * 4 - 2) == 4.0
        assert float(Ban(3.0) / 2) == 1.5

    def test_truncation_absorbs(self):
        with using_length(3):
            assert Ban.alpha() + Ban.eta(2) == Ban.alpha()
            assert Ban.alpha() + Ban.eta(1) != Ban.alpha()

    def test_cancellation(self):
        value = Ban.parse('a+1') - Ban.alpha()
        assert value == Ban.one()
        assert (Ban.parse('a+1') - Ban.parse('a+1')).is_zero()

    def test_reciprocal(self):
        assert_ban_close(Ban.parse('2+n').reciprocal() * Ban.parse('2+n'), Ban.one())
        with pytest.raises(ZeroDivisionError):
            Ban.zero().reciprocal()

    def test_integer_power(self):
        assert Ban.parse('a+1') ** 2 == Ban.parse('a^2+2a+1')
        assert Ban.alpha() ** -1 == Ban.eta()
        with pytest.raises(ValueError):
            Ban.alpha() ** 0.5

    def test_sqrt_even(self):
        assert Ban.parse('4a^2+4a+1').sqrt_even() == Ban.parse('2a+1')
        with pytest.raises(ValueError):
            Ban.alpha().sqrt_even()
        with pytest.raises(ValueError):
            Ban(-4.0).sqrt_even()

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            Ban(1.0, length=3) + Ban(1.0, length=5)

    def test_unsupported_operand(self):
        with pytest.raises(TypeError):
            Ban.one() + [1.0]

    def test_field_laws(self):
        rng = np.random.default_rng(7)
        for i in range(10000):
            a, b, c = random_ban(rng), random_ban(rng), random_ban(rng)
            assert a + b == b + a
            assert_ban_close(a * b, b * a)
            assert_ban_close((a + b) + c, a + (b + c))
            assert_ban_close(a * (b + c), a * b + a * c, rtol=1e-10)
            assert_ban_close(a * a.reciprocal(), Ban.one(), rtol=1e-10, atol=1e-10)

class TestOrder():

    def test_infinitesimal_below_reals(self):
        assert Ban.eta() > 0
        assert Ban.eta() < 1e-300
        assert Ban.alpha() > 1e300
        assert -Ban.alpha() < -1e300

    def test_compare(self):
        assert compare(Ban.parse('1+n'), 1) == 1
        assert compare(Ban.parse('1-n'), 1) == -1
        assert compare(Ban.parse('2a'), Ban.parse('2a')) == 0

    def test_sort(self):
        values = [Ban.alpha(), Ban(1.0), Ban.eta(), Ban.zero(), -Ban.eta()]
        assert sorted(values) == [-Ban.eta(), Ban.zero(), Ban.eta(), Ban(1.0), Ban.alpha()]

    def test_min_max(self):
        assert min(Ban.parse('2+n'), Ban.parse('2+2n')) == Ban.parse('2+n')
        assert max(Ban.eta(), Ban.eta(2)) == Ban.eta()

    def test_abs_and_sign(self):
        assert abs(Ban.parse('-a+3')) == Ban.parse('a-3')
        assert Ban.parse('-n').sign() == -1
        assert Ban.zero().sign() == 0

class TestMonosemia():

    def test_lead_mon(self):
        assert lead_mon(Ban.parse('3a-2')) == Ban.parse('3a')
        assert Ban.zero().lead_mon().is_zero()

    def test_magnitude(self):
        assert magnitude(Ban.parse('-3a-2')) == Ban.alpha()
        assert Ban.parse('0.5n^2+n^3').magnitude() == Ban.eta(2)
        with pytest.raises(ValueError):
            Ban.zero().magnitude()

    def test_smallest_order(self):
        assert Ban.parse('a+2n').smallest_order() == Ban.eta()
        with pytest.raises(ValueError):
            Ban.zero().smallest_order()

    def test_coefficient_outside_window(self):
        value = Ban.parse('a+1')
        assert value.coefficient(3) == 0.0
        assert value.coefficient(-10) == 0.0

    def test_monosemia(self):
        assert list(Ban.parse('2a-n^2').monosemia()) == [(1, 2.0), (-2, -1.0)]

    def test_drop_negligible(self):
        assert Ban.parse('1+1e-12n').drop_negligible(Ban.one(), 1e-8) == Ban.one()
        assert Ban.parse('1+0.5n').drop_negligible(Ban.one(), 1e-8) == Ban.parse('1+0.5n')

    def test_drop_negligible_uses_higher_powers_only(self):
        value = Ban.parse('1e-12n')
        assert value.drop_negligible(Ban.one(), 1e-8).is_zero()
        assert value.drop_negligible(Ban.eta(2), 1e-8) == value

class TestConversions():

    def test_float(self):
        assert float(Ban.parse('2+3n')) == 2.0
        assert float(Ban.alpha()) == inf
        assert float(-Ban.alpha()) == -inf
        assert float(Ban.eta()) == 0.0

    def test_hash_matches_float(self):
        assert Ban(2.5) == 2.5
        assert hash(Ban(2.5)) == hash(2.5)
        assert len({Ban(1.0), Ban.one(), Ban.eta()}) == 2

    def test_bool(self):
        assert not Ban.zero()
        assert Ban.eta()

    def test_coerce(self):
        assert Ban.coerce('a') == Ban.alpha()
        assert Ban.coerce(3) == Ban(3.0)
        with pytest.raises(TypeError):
            Ban.coerce(None)

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            Ban(inf)

class TestLength():

    def test_default(self):
        assert get_length() == 5
        assert Ban.one().length == 5

    def test_using_length_restores(self):
        with using_length(3):
            assert get_length() == 3
            assert Ban.one().length == 3
        assert get_length() == 5

    def test_set_length_rejects(self):
        with pytest.raises(ValueError):
            set_length(0)
        assert get_length() == 5

    def test_explicit_length(self):
        value = Ban.parse('a+1+n', length=3)
        assert value.length == 3
        assert len(value.coeffs) == 3

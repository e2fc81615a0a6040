# coding: utf-8
# https://numpy.org/
import numpy as np
import numpy.testing as npt
from numpy.linalg import LinAlgError

# https://scipy.org/
import scipy.linalg

# https://docs.pytest.org/
import pytest

# naipm imports
from naipm.ban import Ban, using_length
from naipm.linalg import (BanVector, BanMatrix, mat_mul, transpose, hadamard, diag,
                          lu_solve, euclidean_norm)
from naipm.errors import SingularMatrixError
from naipm.fixtures import load_fixture

def widen(matrix, length):
    return BanMatrix([[Ban(e.coeffs, power=e.power, length=length) for e in row]
                      for row in matrix.entries], length=length)

def residual_power(matrix, inverse, length):
    """Highest power of A A^-1 - I evaluated with spare slots."""
    wide = length + 4
    with using_length(wide):
        residual = widen(matrix, wide) @ widen(inverse, wide) - BanMatrix.identity(matrix.rows, wide)
    powers = [e.power for e in residual.entries.flat if not e.is_zero()]
    return max(powers, default=-np.inf)

class TestBanVector():

    def test_constructors(self):
        assert BanVector.zeros(3).is_zero()
        assert BanVector.ones(2) == BanVector([1, 1])
        joined = BanVector.concat(BanVector([1, 2]), BanVector(['a']))
        assert joined.size == 3
        assert joined[2] == Ban.alpha()

    def test_slice_and_replace(self):
        v = BanVector([1, 2, 3])
        assert isinstance(v[1:], BanVector)
        assert v[1:] == BanVector([2, 3])
        w = v.replace(0, 'n')
        assert w[0] == Ban.eta()
        assert v[0] == Ban(1.0)

    def test_arithmetic(self):
        u = BanVector([1, 'a'])
        v = BanVector([2, 'n'])
        assert u + v == BanVector([3, 'a+n'])
        assert u - v == BanVector([-1, 'a-n'])
        assert -u == BanVector([-1, '-a'])
        assert u * 2 == BanVector([2, '2a'])
        assert 2 * u == u * 2
        assert u.dot(v) == Ban(3.0)
        assert u.sum() == Ban.parse('a+1')

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            BanVector([1, 2]) + BanVector([1])

    def test_magnitudes(self):
        v = BanVector(['n', '3a+1', 0])
        assert v.magnitude() == Ban.alpha()
        assert v.smallest_order() == Ban.eta()
        with pytest.raises(ValueError):
            BanVector.zeros(2).magnitude()

    def test_lead_mon(self):
        assert BanVector(['2a+1', '3-n']).lead_mon() == BanVector(['2a', 3])

    def test_to_float(self):
        npt.assert_array_equal(BanVector([1.5, 'a', 'n']).to_float(), [1.5, np.inf, 0.0])

    def test_unhashable(self):
        with pytest.raises(TypeError):
            hash(BanVector([1]))

class TestBanMatrix():

    def test_shape_and_transpose(self):
        m = BanMatrix([[1, 2, 3], [4, 5, 6]])
        assert m.shape == (2, 3)
        assert m.T.shape == (3, 2)
        assert transpose(m)[2, 0] == Ban(3.0)
        assert m.row(1) == BanVector([4, 5, 6])
        assert m.column(0) == BanVector([1, 4])

    def test_empty_with_shape(self):
        m = BanMatrix([], shape=(0, 3))
        assert m.shape == (0, 3)

    def test_block(self):
        eye = BanMatrix.identity(2)
        m = BanMatrix.block([[eye, BanMatrix.zeros(2, 1)], [BanMatrix.zeros(1, 2), BanMatrix([[7]])]])
        assert m.shape == (3, 3)
        assert m[2, 2] == Ban(7.0)
        assert m[0, 2].is_zero()

    def test_symmetric(self):
        assert BanMatrix([[1, 'n'], ['n', 2]]).is_symmetric()
        assert not BanMatrix([[1, 'n'], [0, 2]]).is_symmetric()
        assert not BanMatrix([[1, 2, 3]]).is_symmetric()

    def test_scalar_multiple(self):
        assert BanMatrix([[1, 2]]) * 'a' == BanMatrix([['a', '2a']])
        assert -BanMatrix([[1, 2]]) == BanMatrix([[-1, -2]])

    def test_magnitude(self):
        m = BanMatrix([['a', 0], ['n^2', 1]])
        assert m.magnitude() == Ban.alpha()
        assert m.smallest_order() == Ban.eta(2)

class TestProducts():

    def test_matches_numpy(self):
        rng = np.random.default_rng(1)
        a = rng.integers(-5, 6, size=(3, 4)).astype(float)
        b = rng.integers(-5, 6, size=(4, 2)).astype(float)
        v = rng.integers(-5, 6, size=4).astype(float)
        npt.assert_allclose((BanMatrix(a.tolist()) @ BanMatrix(b.tolist())).to_float(), a @ b)
        npt.assert_allclose(mat_mul(BanMatrix(a.tolist()), BanVector(v)).to_float(), a @ v)

    def test_infinite_entries(self):
        m = BanMatrix([['a', 1], [0, 'n']])
        assert m @ BanVector([1, 'a']) == BanVector(['2a', 1])

    def test_zero_inner_dimension(self):
        result = BanMatrix([], shape=(2, 0)) @ BanVector([])
        assert result == BanVector.zeros(2)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            BanMatrix([[1, 2]]) @ BanVector([1, 2, 3])

    def test_hadamard_and_diag(self):
        u = BanVector([2, 'a'])
        v = BanVector([3, 'n'])
        assert hadamard(u, v) == BanVector([6, 1])
        d = diag(u)
        assert d.shape == (2, 2)
        assert d[1, 1] == Ban.alpha()
        assert d[0, 1].is_zero()

    def test_euclidean_norm(self):
        assert euclidean_norm(BanVector([3, 4])) == Ban(5.0)
        assert euclidean_norm(BanVector(['a', 0])) == Ban.alpha()
        assert euclidean_norm(BanVector.zeros(3)).is_zero()

class TestLUSolve():

    def test_matches_float_oracle(self):
        rng = np.random.default_rng(3)
        for i in range(10):
            a = rng.normal(size=(4, 4)) + 4 * np.identity(4)
            d = rng.normal(size=4)
            x = lu_solve(BanMatrix(a.tolist()), BanVector(d)).to_float()
            npt.assert_allclose(x, scipy.linalg.solve(a, d), rtol=1e-8)

    def test_multiple_right_hand_sides(self):
        a = np.array([[4.0, 1.0], [2.0, 3.0]])
        inverse = lu_solve(BanMatrix(a.tolist()), BanMatrix.identity(2)).to_float()
        npt.assert_allclose(inverse, scipy.linalg.inv(a), rtol=1e-12)

    def test_non_archimedean_system(self):
        m = BanMatrix([['n^2-1', 1], [1, 'n^2-1']])
        x = lu_solve(m, BanVector.ones(2))
        for value in x:
            assert value.power == 2
            assert value.coefficient(2) == pytest.approx(1.0)

    def test_non_archimedean_system_short_length(self):
        with using_length(3):
            m = BanMatrix([['n^2-1', 1], [1, 'n^2-1']])
            x = lu_solve(m, BanVector.ones(2))
        assert x[0].lead_mon() == Ban.alpha(2, length=3)
        assert x[1].lead_mon() == Ban.alpha(2, length=3)

    def test_truncation_makes_singular(self):
        with using_length(3):
            wide = BanMatrix([['n^2-1', 1], [1, 'n^2-1']])

        # Two slots keep -1 and lose the eta^2 that made the matrix regular
        with using_length(2):
            m = BanMatrix([[Ban(e.coeffs, power=e.power, length=2) for e in row]
                           for row in wide.entries])
            assert m[0, 0] == Ban(-1.0)
            with pytest.raises(SingularMatrixError) as err:
                lu_solve(m, BanVector.ones(2))
        assert err.value.step == 1

    def test_singular_is_linalg_error(self):
        with pytest.raises(LinAlgError):
            lu_solve(BanMatrix([[1, 2], [2, 4]]), BanVector([1, 1]))

    def test_not_square(self):
        with pytest.raises(ValueError):
            lu_solve(BanMatrix([[1, 2, 3], [4, 5, 6]]), BanVector([1, 1]))

    def test_inversion_accuracy(self):
        with using_length(3):
            a3 = load_fixture('inversion', length=3)
            inverse3 = lu_solve(a3, BanMatrix.identity(3))
        with using_length(5):
            a5 = load_fixture('inversion', length=5)
            inverse5 = lu_solve(a5, BanMatrix.identity(3))

        assert inverse3[0, 0].coefficient(1) == pytest.approx(0.25, abs=1e-6)
        assert inverse3[0, 0].coefficient(-1) == pytest.approx(-0.125, abs=1e-6)

        short = residual_power(a3, inverse3, 3)
        long = residual_power(a5, inverse5, 5)
        assert short <= -1
        assert long < short

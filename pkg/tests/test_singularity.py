from collections import Counter
from fractions import Fraction as F

import pytest

from conftest import variables
from poleorder.errors import DomainError, NonIsolated, NotQuasiHomogeneous
from poleorder.polyalg import Polynomial
from poleorder.singularity import build_profile, detect_weights, jacobian_generators, milnor_number

x, y, z = variables(3)


def test_jacobian_generators():
    assert jacobian_generators(x**3 + y**3 + z**3) == [3 * x**2, 3 * y**2, 3 * z**2]
    assert jacobian_generators(x**2 + y**3 + z**5) == [2 * x, 3 * y**2, 5 * z**4]
    assert jacobian_generators(x * y * z) == [y * z, x * z, x * y]


def test_milnor_number_examples():
    assert milnor_number(x**3 + y**3 + z**3) == 8
    assert milnor_number(x**2 + y**3 + z**5) == 8
    with pytest.raises(NonIsolated):
        milnor_number(x**2 * y)


def test_milnor_number_domain():
    u, v = variables(2)
    with pytest.raises(DomainError):
        milnor_number(u**2 + v**3)
    with pytest.raises(DomainError):
        milnor_number(x**2 + y**2 + z**2 + 1)


def test_detect_weights_examples():
    assert detect_weights(x**3 + y**3 + z**3) == (F(1, 3),) * 3
    assert detect_weights(x**2 + y**3 + z**5) == (F(1, 2), F(1, 3), F(1, 5))
    assert detect_weights(x**4 + y**4 + z**4 + x * y * z) is None
    # underdetermined support
    assert detect_weights(x**2 * y + z**2) is None


def test_build_profile_examples():
    p = build_profile(x**3 + y**3 + z**3)
    assert p.mu == 8
    expected = sorted(F(a + b + c + 3, 3) for a in (0, 1) for b in (0, 1) for c in (0, 1))
    assert p.spectrum() == expected
    x4 = variables(4)
    q = build_profile(sum((v**2 for v in x4[1:]), x4[0] ** 2))
    assert q.mu == 1 and q.basis == ((0, 0, 0, 0),) and q.spectral[(0, 0, 0, 0)] == 2
    with pytest.raises(NotQuasiHomogeneous):
        build_profile(x**4 + y**4 + z**4 + x * y * z)


def test_build_profile_rejections():
    with pytest.raises(NonIsolated):
        build_profile(x**2 * y)
    with pytest.raises(DomainError):
        build_profile(x + y**2 + z**2)  # smooth at the origin
    with pytest.raises(DomainError):
        build_profile(Polynomial.zero(3))


def brieskorn_spectrum(a, b, c):
    return sorted(F(i, a) + F(j, b) + F(k, c)
                  for i in range(1, a) for j in range(1, b) for k in range(1, c))


@pytest.mark.parametrize("a,b,c", [(2, 3, 5), (3, 4, 5), (2, 2, 7), (4, 4, 4), (3, 5, 7)])
def test_brieskorn_pham_law(a, b, c):
    p = build_profile(x**a + y**b + z**c)
    assert p.mu == (a - 1) * (b - 1) * (c - 1)
    assert p.spectrum() == brieskorn_spectrum(a, b, c)


@pytest.mark.parametrize("f", [
    x**3 * y + y**3 * z + z**3 * x,
    x**2 * y + y**4 + z**3,
    x**3 + x * y**3 + z**2,
    x**3 + y**3 + z**3 + x * y * z,
])
def test_spectrum_symmetry_and_bounds(f):
    p = build_profile(f)
    n, sw = p.n, p.weight_sum
    values = p.spectrum()
    assert Counter(values) == Counter(n - s for s in values)
    assert values[0] == sw == p.spectral[(0, 0, 0)]
    assert values[-1] == n - sw
    assert len(values) == p.mu


def test_scaling_invariance():
    f = x**3 * y + y**3 * z + z**3 * x
    for c in (F(-2), F(3, 7)):
        assert milnor_number(f.scale(c)) == milnor_number(f)
        assert detect_weights(f.scale(c)) == detect_weights(f)

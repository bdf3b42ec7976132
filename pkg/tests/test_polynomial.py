"""
多项式核心测试：构造、求导、求值、交错求根、网格范数
"""
import math
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

# 添加项目根目录到Python路径
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.algebra.chebyshev import chebyshev_t, monic_chebyshev
from src.algebra.polynomial import (
    Polynomial,
    critical_points,
    derivative,
    evaluate,
    from_roots,
    root_residual_scale,
    sup_norm_grid,
)
from src.utils.errors import BracketingError, ParameterError
from tests.test_data import SQRT_HALF, get_triangle


def test_from_roots():
    """测试1：由根构造首一多项式"""
    f = from_roots([1, -0.5, -0.5])
    assert list(f.coefficients) == pytest.approx(get_triangle()["coefficients"], abs=1e-14)
    assert f.is_monic()

    assert list(from_roots([]).coefficients) == [1]
    assert list(from_roots([0, 0]).coefficients) == [0, 0, 1]


def test_from_roots_residual_bound():
    """n ≤ 32、根在 [-10, 10] 内：|f(r)| ≤ 1e-10·Π(|r| + |rᵢ|)"""
    assert root_residual_scale([1.0, -2.0], 3.0) == 20.0
    assert root_residual_scale([], 5.0) == 1.0

    rng = np.random.default_rng(32)
    for n in range(1, 33):
        for _ in range(10):
            roots = [float(r) for r in rng.uniform(-10.0, 10.0, size=n)]
            f = from_roots(roots)
            for r in roots:
                assert abs(evaluate(f, r)) <= 1e-10 * root_residual_scale(roots, r)


def test_from_roots_exact():
    """Fraction 根保持精确"""
    f = from_roots([Fraction(1), Fraction(-1, 2), Fraction(-1, 2)])
    assert f.is_exact
    assert f.coefficients == (Fraction(-1, 4), Fraction(-3, 4), Fraction(0), Fraction(1))


def test_trailing_zeros_trimmed():
    p = Polynomial([1, 2, 0, 0])
    assert p.degree == 1
    assert Polynomial().degree == -1
    assert Polynomial([0, 0]).is_zero()


def test_arithmetic():
    """加减乘、缩放、复合"""
    x = Polynomial([0, 1])
    one = Polynomial([1])
    assert (x + one) * (x - one) == Polynomial([-1, 0, 1])
    assert (x - x).is_zero()
    assert x.scale(3) == Polynomial([0, 3])
    assert x.shift(2) == Polynomial([0, 0, 0, 1])
    # (x+1)² 在 2x-1 处：(2x)² = 4x²
    square = (x + one) * (x + one)
    assert square.compose_affine(2, -1) == Polynomial([0, 0, 4])
    assert Polynomial([2, 4]).monic() == Polynomial([Fraction(1, 2), 1])
    with pytest.raises(ParameterError):
        Polynomial().monic()


def test_derivative():
    """测试2：逐项求导"""
    f = Polynomial([-0.25, -0.75, 0.0, 1.0])
    assert list(derivative(f).coefficients) == [-0.75, 0.0, 3.0]
    assert derivative(Polynomial([5])).is_zero()
    assert derivative(Polynomial([0, 0, 0, 1]), order=2) == Polynomial([0, 6])
    with pytest.raises(ParameterError):
        derivative(f, order=0)


def test_evaluate():
    """测试3：Horner 求值"""
    f = Polynomial([-0.25, -0.75, 0.0, 1.0])
    assert evaluate(f, 1) == 0
    assert evaluate(Polynomial(), 7) == 0
    assert f(2.0) == pytest.approx(8 - 1.5 - 0.25)


def test_evaluate_exact_at_float():
    """精确多项式在浮点点上只舍入一次"""
    value = evaluate(chebyshev_t(5), math.cos(0.3))
    assert isinstance(value, float)
    assert value == pytest.approx(math.cos(1.5), abs=1e-12)
    assert value == pytest.approx(0.0707372, abs=1e-7)


def test_evaluate_exact_at_complex():
    """复数点按高斯有理数精确计算"""
    value = evaluate(Polynomial([1, 0, 1]), 1j)
    assert value == 0
    value = evaluate(Polynomial([0, 1]), 0.5 + 0.25j)
    assert value == 0.5 + 0.25j


def test_critical_points_triangle():
    """测试4：二重根直接输出，其余在相邻两根之间二分"""
    crit = critical_points([1, -0.5, -0.5])
    assert crit == pytest.approx([-0.5, 0.5], abs=1e-12)


def test_critical_points_square():
    crit = critical_points([SQRT_HALF, -SQRT_HALF, -SQRT_HALF, SQRT_HALF])
    assert crit == pytest.approx([-SQRT_HALF, 0.0, SQRT_HALF], abs=1e-12)


def test_critical_points_simple():
    assert critical_points([-1, 1]) == pytest.approx([0.0], abs=1e-13)
    # f = x(x-1)(x-3)，f' = 3x² - 8x + 3
    expected = sorted([(8 - math.sqrt(28)) / 6, (8 + math.sqrt(28)) / 6])
    assert critical_points([3, 0, 1]) == pytest.approx(expected, abs=1e-12)


def test_critical_points_triple_root():
    """三重根在 f' 中是二重根"""
    crit = critical_points([0.0, 0.0, 0.0, 1.0])
    assert len(crit) == 3
    assert crit[:2] == [0.0, 0.0]
    assert crit[2] == pytest.approx(0.75, abs=1e-12)


def test_critical_points_interlace():
    """f' 的根都夹在 f 的相邻根之间"""
    roots = [-2.0, -1.5, 0.1, 0.2, 3.0, 7.0]
    crit = critical_points(roots)
    assert len(crit) == len(roots) - 1
    ordered = sorted(roots)
    for c, lo, hi in zip(crit, ordered, ordered[1:]):
        assert lo < c < hi
    reference = np.sort(np.polynomial.polynomial.polyroots(
        [float(c) for c in derivative(from_roots(roots)).coefficients]).real)
    assert crit == pytest.approx(list(reference), abs=1e-7)


def test_critical_points_permutation_invariant():
    """输入顺序不影响结果（含二重根）"""
    rng = np.random.default_rng(5)
    for n in range(2, 17):
        roots = [float(r) for r in rng.uniform(-5.0, 5.0, size=n)]
        roots.append(roots[0])
        expected = critical_points(roots)
        for _ in range(5):
            shuffled = [roots[i] for i in rng.permutation(len(roots))]
            assert critical_points(shuffled) == pytest.approx(expected, abs=1e-12)


def test_critical_points_errors():
    with pytest.raises(ParameterError):
        critical_points([1.0])
    with pytest.raises(ParameterError):
        critical_points([])


def test_bracketing_error_is_runtime_error():
    """BracketingError 同时是 RuntimeError，调用方可以按标准异常捕获"""
    err = BracketingError(0.0, 1.0)
    assert isinstance(err, RuntimeError)
    assert "0.0" in str(err)


def test_sup_norm_grid():
    """测试5：网格上的一致范数"""
    assert sup_norm_grid(monic_chebyshev(4), -1.0, 1.0, 10001) == pytest.approx(0.125, abs=1e-6)
    assert sup_norm_grid(Polynomial([0, 1]), -1.0, 1.0, 3) == 1.0
    assert sup_norm_grid(Polynomial([-2.5]), 3.0, 4.0, 11) == 2.5
    assert sup_norm_grid(Polynomial(), 0.0, 1.0, 2) == 0.0
    with pytest.raises(ParameterError):
        sup_norm_grid(Polynomial([1]), 1.0, 1.0, 10)
    with pytest.raises(ParameterError):
        sup_norm_grid(Polynomial([1]), 0.0, 1.0, 1)

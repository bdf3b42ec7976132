"""
切比雪夫多项式（第一类）与迪克森多项式

包含:
1. T_n 的精确构造（递推 / 棣莫弗公式两种方式）
2. 三角恒等式 T_n(cos y) = cos ny、迪克森恒等式 D_n(t+1/t) = tⁿ + t⁻ⁿ 的残差
3. 最小偏差性质的随机检验
4. T_m(1/2x) / T_{m-1}(1/2x) 的洛朗级数与卡特兰数
"""

import math
from fractions import Fraction
from functools import lru_cache
from typing import List

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict

from src.algebra.polynomial import Polynomial, evaluate, sup_norm_grid
from src.algebra.series import EvenPowerSeries, divide_series
from src.utils.errors import DomainError, ParameterError

# 扰动多项式的网格范数低于 s* - MINIMAX_SLACK 才算违反
MINIMAX_SLACK = 1e-9
_TRIAL_CHUNK = 128

_X = Polynomial([0, 1])


@lru_cache(maxsize=None)
def chebyshev_t(n: int) -> Polynomial:
    """
    T_n，递推 T_{n+1} = 2x·T_n - T_{n-1}，T_0 = 1，T_1 = x

    Args:
        n: 次数（≥0）

    Returns:
        整数系数（以Fraction存储）的精确多项式
    """
    if n < 0:
        raise ParameterError(f"n 必须 ≥ 0，当前: {n}")
    if n == 0:
        return Polynomial([1])
    if n == 1:
        return _X
    return chebyshev_t(n - 1).shift(1).scale(2) - chebyshev_t(n - 2)


def chebyshev_t_binomial(n: int) -> Polynomial:
    """
    由棣莫弗公式得到 T_n

    cos(ny) = Σ_{k偶} (-1)^{k/2}·C(n,k)·cos^{n-k}y·sin^k y，再代入 sin²y = 1 - x²

    Args:
        n: 次数（≥0）

    Returns:
        与 chebyshev_t(n) 相同的精确多项式
    """
    if n < 0:
        raise ParameterError(f"n 必须 ≥ 0，当前: {n}")
    one_minus_x2 = Polynomial([1, 0, -1])
    result = Polynomial()
    sin_power = Polynomial([1])
    for k in range(0, n + 1, 2):
        term = sin_power.shift(n - k).scale((-1) ** (k // 2) * math.comb(n, k))
        result = result + term
        sin_power = sin_power * one_minus_x2
    return result


def monic_chebyshev(n: int) -> Polynomial:
    """2^{1-n}·T_n（n ≥ 1）"""
    if n < 1:
        raise ParameterError(f"n 必须 ≥ 1，当前: {n}")
    return chebyshev_t(n).scale(Fraction(1, 2 ** (n - 1)))


def chebyshev_trig_residual(n: int, y: float) -> float:
    """
    |T_n(cos y) - cos(ny)|

    T_n 在 cos y 的二进制值上精确求值
    """
    return abs(evaluate(chebyshev_t(n), math.cos(y)) - math.cos(n * y))


@lru_cache(maxsize=None)
def dickson(n: int) -> Polynomial:
    """
    D_n(x) = 2·T_n(x/2)

    Args:
        n: 次数（≥1）

    Returns:
        首一、整数系数的精确多项式
    """
    if n < 1:
        raise ParameterError(f"n 必须 ≥ 1，当前: {n}")
    return chebyshev_t(n).compose_affine(Fraction(1, 2), 0).scale(2)


def dickson_identity_residual(n: int, t: complex) -> float:
    """
    |D_n(t + 1/t) - (tⁿ + t⁻ⁿ)|，复数运算

    Args:
        n: 次数
        t: 非零复数

    Returns:
        绝对残差
    """
    if t == 0:
        raise DomainError("t 不能为 0")
    t = complex(t)
    lhs = evaluate(dickson(n), t + 1 / t)
    rhs = t ** n + t ** (-n)
    return abs(lhs - rhs)


def _reciprocal_even_part(n: int) -> List[Fraction]:
    """
    T_n(1/2x) = x^{-n}·A(x²)，返回 A 的系数

    A 在 y^{(n-i)/2} 处的系数为 c_i / 2^i
    """
    coeffs = chebyshev_t(n).coefficients
    even = [Fraction(0)] * (n // 2 + 1)
    for i, c in enumerate(coeffs):
        if (n - i) % 2 == 0:
            even[(n - i) // 2] = c / 2 ** i
    return even


def laurent_ratio_series(m: int, order: int) -> EvenPowerSeries:
    """
    T_m(1/2x) / T_{m-1}(1/2x) = x^{-1}·Q(x²)，返回 Q 的前 order 项

    Args:
        m: ≥ 2
        order: 项数

    Returns:
        Q 的截断，Q[0] 恒为 1（即 1/x 的系数）
    """
    if m < 2:
        raise ParameterError(f"m 必须 ≥ 2，当前: {m}")
    numerator = _reciprocal_even_part(m)
    denominator = _reciprocal_even_part(m - 1)
    quotient = divide_series(numerator, denominator, order)
    return EvenPowerSeries(coefficients=tuple(quotient), truncation=order)


def catalan_ratio_coefficients(m: int, k: int) -> List[Fraction]:
    """
    洛朗级数中 x¹, x³, …, x^{2k-1} 的系数

    Args:
        m: ≥ 2
        k: 1 ≤ k ≤ m-1

    Returns:
        k 个精确有理数
    """
    if m < 2:
        raise ParameterError(f"m 必须 ≥ 2，当前: {m}")
    if not 1 <= k <= m - 1:
        raise ParameterError(f"项数必须在 [1, {m - 1}] 内，当前: {k}")
    series = laurent_ratio_series(m, k + 1)
    return list(series.coefficients[1:])


def catalan_numbers(k: int) -> List[int]:
    """
    前 k 个卡特兰数，c_{j+1} = Σ c_i·c_{j-i}，c_0 = 1
    """
    if k < 1:
        raise ParameterError(f"k 必须 ≥ 1，当前: {k}")
    numbers = [1]
    while len(numbers) < k:
        j = len(numbers) - 1
        numbers.append(sum(numbers[i] * numbers[j - i] for i in range(j + 1)))
    return numbers


def catalan_limit_errors(m: int, k: int) -> List[Fraction]:
    """
    每个系数到极限 -c_{j-1} 的精确距离

    x·C(x²) 是卡特兰生成函数，比值的极限是 1/x - x·C(x²)，所以系数趋向 -c_{j-1}
    """
    coefficients = catalan_ratio_coefficients(m, k)
    return [abs(q + c) for q, c in zip(coefficients, catalan_numbers(k))]


class MinimaxReport(BaseModel):
    """最小偏差检验的结果"""

    model_config = ConfigDict(frozen=True)

    n: int
    grid_points: int
    trials: int
    seed: int
    optimal_norm: float
    expected_norm: float
    min_perturbed_norm: float
    violations: int


def minimax_deviation_report(n: int,
                             grid_points: int = 10001,
                             trials: int = 1000,
                             seed: int = 0) -> MinimaxReport:
    """
    随机检验 2^{1-n}·T_n 在 [-1, 1] 上偏差最小

    流程:
    1. s* = 2^{1-n}·T_n 的网格范数
    2. 生成 trials 个扰动：加上次数 < n、系数均匀分布于 [-1,1] 的非零多项式
    3. 统计网格范数 < s* - MINIMAX_SLACK 的个数（应为0）

    Args:
        n: 次数（≥1）
        grid_points: 网格点数（≥1001）
        trials: 扰动次数（≥1）
        seed: 随机种子

    Returns:
        MinimaxReport
    """
    if n < 1:
        raise ParameterError(f"n 必须 ≥ 1，当前: {n}")
    if grid_points < 1001:
        raise ParameterError(f"网格点数必须 ≥ 1001，当前: {grid_points}")
    if trials < 1:
        raise ParameterError(f"trials 必须 ≥ 1，当前: {trials}")

    base = monic_chebyshev(n).to_float()
    optimal = sup_norm_grid(base, -1.0, 1.0, grid_points)

    rng = np.random.default_rng(seed)
    xs = np.linspace(-1.0, 1.0, grid_points)
    base_values = np.polynomial.polynomial.polyval(xs, list(base.coefficients))
    vander = np.polynomial.polynomial.polyvander(xs, n - 1)

    norms = []
    remaining = trials
    while remaining > 0:
        size = min(_TRIAL_CHUNK, remaining)
        perturbations = rng.uniform(-1.0, 1.0, size=(size, n))
        # 全零扰动概率为0，遇到就重抽
        zero_rows = ~np.any(perturbations != 0, axis=1)
        while zero_rows.any():
            perturbations[zero_rows] = rng.uniform(-1.0, 1.0, size=(int(zero_rows.sum()), n))
            zero_rows = ~np.any(perturbations != 0, axis=1)
        values = base_values[None, :] + perturbations @ vander.T
        norms.append(np.max(np.abs(values), axis=1))
        remaining -= size
    norms = np.concatenate(norms)

    violations = int(np.sum(norms < optimal - MINIMAX_SLACK))
    logger.debug(f"minimax n={n}: s*={optimal:.6g}, min={norms.min():.6g}, violations={violations}")
    return MinimaxReport(
        n=n,
        grid_points=grid_points,
        trials=trials,
        seed=seed,
        optimal_norm=optimal,
        expected_norm=2.0 ** (1 - n),
        min_perturbed_norm=float(norms.min()),
        violations=violations,
    )


# 测试代码
if __name__ == "__main__":
    for n in range(6):
        print(f"T_{n} = {[int(c) for c in chebyshev_t(n).coefficients]}")
    print(f"D_3 = {[int(c) for c in dickson(3).coefficients]}")
    print(f"m=40: {catalan_ratio_coefficients(40, 5)}")

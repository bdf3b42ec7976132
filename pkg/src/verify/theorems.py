"""
定理检验

每个 check_* 函数返回 CheckResult：
1. check_extreme_tangency - 最左/最右的 f' 根所在竖线与内切圆相切
2. check_circle_pairing - 每个与对角线相切的同心圆恰被两条竖线相切（n 为偶数时多一条过中心）
3. check_rotation_invariance - 旋转时除常数项外系数不变
4. check_vanishing_coefficients - 单位居中情形下 x^{n-1}, x^{n-3}, … 的系数为0
5. check_center_root - f^{(n-1)} 的根就是中心的投影
6. check_vertical_diagonal_tangency - 对角线竖直时的二重根就是 f' 的根，且落在对应圆的切线上
另外还有套件用到的闭式、对称和、切比雪夫/迪克森恒等式检验
"""

import math
from typing import Any, Dict, List

from loguru import logger

from src.algebra.chebyshev import chebyshev_trig_residual, dickson_identity_residual
from src.algebra.polynomial import critical_points, derivative
from src.geometry.models import RegularNgon, TangentCircleFamily
from src.geometry.ngon import (
    MAX_ENUMERATION_N,
    chebyshev_form,
    elementary_symmetric_sum,
    ngon_polynomial,
    projections,
    rotation_monomial_sum,
    squares_cross_sum,
)
from src.utils.errors import DegenerateError, ParameterError
from src.verify.models import CheckResult

DEFAULT_TOL = 1e-9
# 判定某条弦竖直：两端点投影之差
_VERTICAL_CHORD_TOL = 1e-9


def _parameters(g: RegularNgon) -> Dict[str, Any]:
    return {"n": g.n, "theta": g.theta, "R": g.radius, "x0": g.center_x}


def _coefficient_scale(g: RegularNgon, degree: int) -> float:
    # x^degree 系数的自然量级 max(1, |x0|+R)^{n-degree}
    return max(1.0, abs(g.center_x) + g.radius) ** (g.n - degree)


def tangent_circle_radii(g: RegularNgon) -> TangentCircleFamily:
    """
    与对角线相切的同心圆半径 R·cos(πd/n)，d = 1..⌊(n-1)/2⌋

    d=1 对应边（内切圆 ω），n 为偶数时另有一条过中心的竖线
    """
    count = (g.n - 1) // 2
    radii = tuple(g.radius * math.cos(math.pi * d / g.n) for d in range(1, count + 1))
    return TangentCircleFamily(radii=radii, has_center_line=g.n % 2 == 0)


def check_extreme_tangency(n: int,
                           theta: float,
                           radius: float = 1.0,
                           center_x: float = 0.0,
                           tol: float = DEFAULT_TOL) -> CheckResult:
    """
    最小、最大的临界点应为 x0 ∓ R·cos(π/n)
    """
    g = RegularNgon(n=n, radius=radius, theta=theta, center_x=center_x)
    crit = critical_points(projections(g))
    apothem = g.radius * math.cos(math.pi / g.n)
    residual = max(
        abs(crit[0] - (g.center_x - apothem)),
        abs(crit[-1] - (g.center_x + apothem)),
    )
    return CheckResult.judge("extreme_tangency", _parameters(g), residual, tol)


def check_circle_pairing(n: int,
                         theta: float,
                         radius: float = 1.0,
                         center_x: float = 0.0,
                         tol: float = DEFAULT_TOL) -> CheckResult:
    """
    {|c - x0|} 与 {每个半径两次} ∪ {0（n为偶数）} 排序后逐点比较
    """
    g = RegularNgon(n=n, radius=radius, theta=theta, center_x=center_x)
    crit = critical_points(projections(g))
    family = tangent_circle_radii(g)

    observed = sorted(abs(c - g.center_x) for c in crit)
    expected = sorted([r for r in family.radii for _ in range(2)]
                      + ([0.0] if family.has_center_line else []))
    params = _parameters(g)
    params.update(observed_count=len(observed), expected_count=len(expected))

    if len(observed) != len(expected):
        logger.warning(f"circle pairing cardinality mismatch: {len(observed)} vs {len(expected)}")
        return CheckResult.judge("circle_pairing", params, math.inf, tol,
                                 failure_kind="cardinality_mismatch")
    residual = max(abs(a - b) for a, b in zip(observed, expected))
    return CheckResult.judge("circle_pairing", params, residual, tol)


def check_rotation_invariance(n: int,
                              theta1: float,
                              theta2: float,
                              radius: float = 1.0,
                              center_x: float = 0.0,
                              tol: float = DEFAULT_TOL) -> CheckResult:
    """
    两个旋转角下 x¹..xⁿ 的系数之差（按 max(1,|x0|+R)^{n-k} 归一）

    常数项之差只记录不参与判定
    """
    g1 = RegularNgon(n=n, radius=radius, theta=theta1, center_x=center_x)
    g2 = RegularNgon(n=n, radius=radius, theta=theta2, center_x=center_x)
    f1, f2 = ngon_polynomial(g1), ngon_polynomial(g2)

    residual = max(
        abs(f1.coefficient(k) - f2.coefficient(k)) / _coefficient_scale(g1, k)
        for k in range(1, n + 1)
    )
    params = _parameters(g1)
    params.update(
        theta2=g2.theta,
        constant_term_delta=float(f2.coefficient(0) - f1.coefficient(0)),
    )
    return CheckResult.judge("rotation_invariance", params, residual, tol)


def check_vanishing_coefficients(n: int, theta: float, tol: float = 1e-10) -> CheckResult:
    """
    单位外接圆、中心在原点时 x^{n-1}, x^{n-3}, … 的系数为0（n 为奇数时不含常数项）
    """
    g = RegularNgon(n=n, theta=theta)
    f = ngon_polynomial(g)
    degrees = [d for d in range(n - 1, -1, -2) if d > 0]
    residual = max(abs(f.coefficient(d)) for d in degrees)
    params = _parameters(g)
    params["degrees"] = degrees
    return CheckResult.judge("vanishing_coefficients", params, residual, tol)


def check_center_root(n: int,
                      theta: float,
                      radius: float = 1.0,
                      center_x: float = 0.0,
                      tol: float = DEFAULT_TOL) -> CheckResult:
    """
    f^{(n-1)} 是一次多项式，其根 -c/斜率 应等于 x0
    """
    g = RegularNgon(n=n, radius=radius, theta=theta, center_x=center_x)
    high = derivative(ngon_polynomial(g), n - 1)
    slope = high.coefficient(1)
    if slope == 0:
        raise DegenerateError(f"f^({n - 1}) 的斜率为0")
    root = -high.coefficient(0) / slope
    params = _parameters(g)
    params["root"] = float(root)
    return CheckResult.judge("center_root", params, abs(root - g.center_x), tol)


def second_derivative_radii(n: int, theta: float) -> List[float]:
    """
    |f'' 的根|（单位居中情形），只输出数据，不做断言

    f' 的根由 critical_points 给出，再对它们用一次 critical_points 得到 f'' 的根
    """
    if n < 4:
        raise ParameterError(f"n 必须 ≥ 4，当前: {n}")
    g = RegularNgon(n=n, theta=theta)
    first = critical_points(projections(g))
    second = critical_points(first)
    return sorted(abs(r) for r in second)


def vertical_diagonal_angles(n: int, d: int) -> List[float]:
    """
    在 [0, 2π/n) 内使"相隔 d 步的弦"竖直的旋转角

    弦 (k, k+d) 竖直 ⇔ θ + π(2k+d)/n ≡ 0 (mod π)

    Args:
        n: 边数
        d: 1 ≤ d ≤ ⌊n/2⌋

    Returns:
        升序排列的旋转角
    """
    if n < 3:
        raise ParameterError(f"n 必须 ≥ 3，当前: {n}")
    if not 1 <= d <= n // 2:
        raise ParameterError(f"d 必须在 [1, {n // 2}] 内，当前: {d}")
    period = 2 * math.pi / n
    angles: List[float] = []
    for k in range(n):
        for turn in (0, 1):
            theta = RegularNgon(n=n, theta=turn * math.pi - math.pi * (2 * k + d) / n).theta
            if period - theta < 1e-12:
                theta = 0.0
            if all(abs(theta - a) > 1e-12 for a in angles):
                angles.append(theta)
    return sorted(angles)


def check_vertical_diagonal_tangency(n: int,
                                     d: int,
                                     radius: float = 1.0,
                                     center_x: float = 0.0,
                                     tol: float = DEFAULT_TOL) -> CheckResult:
    """
    在弦 (k, k+d) 竖直的每个旋转角下：
    1. 两端点投影重合（f 的二重根）
    2. 该二重根是 f' 的根
    3. 它到 x0 的距离等于 R·cos(πd/n)（竖线与 ω_d 相切）
    """
    target = radius * math.cos(math.pi * d / n)
    residual = 0.0
    params: Dict[str, Any] = {"n": n, "theta": None, "R": radius, "x0": center_x, "d": d}
    angles = vertical_diagonal_angles(n, d)
    params["angles"] = angles

    for theta in angles:
        g = RegularNgon(n=n, radius=radius, theta=theta, center_x=center_x)
        xs = projections(g)
        chords = [k for k in range(n)
                  if abs(xs[k] - xs[(k + d) % n]) <= _VERTICAL_CHORD_TOL * max(1.0, radius)]
        if not chords:
            return CheckResult.judge("vertical_diagonal_tangency", params, math.inf, tol,
                                     failure_kind="no_vertical_chord")
        crit = critical_points(xs)
        for k in chords:
            a, b = xs[k], xs[(k + d) % n]
            foot = 0.5 * (a + b)
            residual = max(
                residual,
                abs(a - b),
                min(abs(c - foot) for c in crit),
                abs(abs(foot - center_x) - target),
            )
    return CheckResult.judge("vertical_diagonal_tangency", params, residual, tol)


def check_closed_form(n: int,
                      theta: float,
                      radius: float = 1.0,
                      center_x: float = 0.0,
                      tol: float = 1e-10) -> CheckResult:
    """
    乘积形式与切比雪夫闭式逐系数比较（按 max(1,|x0|+R)^{n-k} 归一）
    """
    g = RegularNgon(n=n, radius=radius, theta=theta, center_x=center_x)
    product, closed = ngon_polynomial(g), chebyshev_form(g)
    residual = max(
        abs(product.coefficient(k) - closed.coefficient(k)) / _coefficient_scale(g, k)
        for k in range(n + 1)
    )
    return CheckResult.judge("closed_form", _parameters(g), residual, tol)


def check_symmetric_sums(n: int, theta: float, tol: float = 1e-10) -> CheckResult:
    """
    顶点对称和:
    - n ≤ 12: 所有 2j ≠ k 的 S，以及 k < n 的 e_k
    - n ≥ 4: Σ_{i≠j} a_i²·a_j
    """
    magnitudes: List[float] = []
    if n <= MAX_ENUMERATION_N:
        for k in range(1, n):
            magnitudes.append(abs(elementary_symmetric_sum(n, k, theta)))
            for j in range(k + 1):
                if 2 * j != k:
                    magnitudes.append(abs(rotation_monomial_sum(n, k, j, theta)))
    if n >= 4:
        magnitudes.append(abs(squares_cross_sum(n, theta)))
    params = {"n": n, "theta": theta, "R": 1.0, "x0": 0.0, "sums": len(magnitudes)}
    return CheckResult.judge("symmetric_sums", params, max(magnitudes, default=0.0), tol)


def check_chebyshev_identity(n: int, y: float, tol: float = 1e-10) -> CheckResult:
    """|T_n(cos y) - cos ny|"""
    params = {"n": n, "theta": None, "R": None, "x0": None, "y": y}
    return CheckResult.judge("chebyshev_identity", params, chebyshev_trig_residual(n, y), tol)


def check_dickson_identity(n: int, t: complex, tol: float = 1e-9) -> CheckResult:
    """|D_n(t+1/t) - (tⁿ+t⁻ⁿ)| / max(1, |tⁿ+t⁻ⁿ|)"""
    t = complex(t)
    scale = max(1.0, abs(t ** n + t ** (-n)))
    residual = dickson_identity_residual(n, t) / scale
    params = {"n": n, "theta": None, "R": None, "x0": None, "t": [t.real, t.imag]}
    return CheckResult.judge("dickson_identity", params, residual, tol)

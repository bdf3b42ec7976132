"""
正 n 边形模型

1. 顶点在 x 轴上的投影，以及以投影为根的首一多项式 f_t
2. f_t 的切比雪夫闭式 Rⁿ·2^{1-n}·[T_n((x-x0)/R) - cos(nθ)]
3. 单位圆顶点 a_1..a_n 上的对称和（旋转不变性证明中用到的和 S）
"""

import cmath
import math
from fractions import Fraction
from itertools import combinations
from typing import List, Sequence, Tuple

from src.algebra.chebyshev import chebyshev_t
from src.algebra.polynomial import Polynomial, from_roots
from src.geometry.models import RegularNgon, VertexConfiguration
from src.utils.errors import ParameterError

# 穷举对称和的 n 上限：C(12,6)·C(6,3) = 18480 项
MAX_ENUMERATION_N = 12
MAX_CROSS_SUM_N = 64


def vertex_configuration(n: int, theta: float = 0.0) -> VertexConfiguration:
    """
    单位圆上旋转 theta 的正 n 边形顶点

    Args:
        n: 边数（≥3）
        theta: 第一个顶点的辐角

    Returns:
        VertexConfiguration
    """
    if n < 3:
        raise ParameterError(f"n 必须 ≥ 3，当前: {n}")
    vertices = tuple(cmath.exp(1j * (theta + 2 * math.pi * k / n)) for k in range(n))
    return VertexConfiguration(vertices=vertices, beta=cmath.exp(2j * math.pi / n))


def projections(g: RegularNgon) -> List[float]:
    """
    顶点在 x 轴上的投影 x0 + R·cos(θ + 2πk/n)，按顶点顺序（不排序）
    """
    return [g.center_x + g.radius * math.cos(angle) for angle in g.vertex_angles()]


def vertices_xy(g: RegularNgon) -> List[Tuple[float, float]]:
    """顶点的平面坐标（绘图用）"""
    return [
        (g.center_x + g.radius * math.cos(angle), g.center_y + g.radius * math.sin(angle))
        for angle in g.vertex_angles()
    ]


def ngon_polynomial(g: RegularNgon) -> Polynomial:
    """以投影为根的首一 n 次多项式"""
    return from_roots(projections(g))


def chebyshev_form(g: RegularNgon) -> Polynomial:
    """
    闭式 Rⁿ·2^{1-n}·[T_n((x-x0)/R) - cos(nθ)]

    R、x0、cos(nθ) 的二进制值被精确展开，最后只舍入一次

    Args:
        g: 正 n 边形

    Returns:
        首一 n 次多项式（浮点系数）
    """
    n = g.n
    radius = Fraction(g.radius)
    shift = Fraction(g.center_x)
    constant = Fraction(math.cos(n * g.theta))

    inner = chebyshev_t(n).compose_affine(1 / radius, -shift / radius)
    closed = (inner - constant).scale(radius ** n / 2 ** (n - 1))
    return closed.to_float()


def _check_enumeration(n: int) -> None:
    if not 3 <= n <= MAX_ENUMERATION_N:
        raise ParameterError(f"穷举要求 3 ≤ n ≤ {MAX_ENUMERATION_N}，当前: {n}")


def _monomial_sum(vertices: Sequence[complex], k: int, j: int) -> complex:
    # 对 k 元子集 I 和其中的 j 元子集 J 求 Π_J a / Π_{I\J} a，|a| = 1 所以 1/a = conj(a)
    real_parts: List[float] = []
    imag_parts: List[float] = []
    for subset in combinations(range(len(vertices)), k):
        for upper in combinations(subset, j):
            upper_set = set(upper)
            term = 1 + 0j
            for i in subset:
                term *= vertices[i] if i in upper_set else vertices[i].conjugate()
            real_parts.append(term.real)
            imag_parts.append(term.imag)
    return complex(math.fsum(real_parts), math.fsum(imag_parts))


def rotation_monomial_sum(n: int, k: int, j: int, theta: float) -> complex:
    """
    t^m（m = 2j-k）前面的系数 S

    S 由所有 (a_{i1}…a_{ij}) / (a_{ij+1}…a_{ik}) 组成，共 C(n,k)·C(k,j) 项；
    m ≠ 0 时 S = 0

    Args:
        n: 边数（3 ≤ n ≤ 12）
        k: 1 ≤ k ≤ n-1
        j: 0 ≤ j ≤ k
        theta: 旋转角

    Returns:
        复数 S（补偿求和）
    """
    _check_enumeration(n)
    if not 1 <= k <= n - 1:
        raise ParameterError(f"k 必须在 [1, {n - 1}] 内，当前: {k}")
    if not 0 <= j <= k:
        raise ParameterError(f"j 必须在 [0, {k}] 内，当前: {j}")
    return _monomial_sum(vertex_configuration(n, theta).vertices, k, j)


def elementary_symmetric_sum(n: int, k: int, theta: float) -> complex:
    """
    e_k(a_1, …, a_n)

    k < n 时为0；k = n 时等于 (-1)^{n-1}·e^{inθ}
    """
    _check_enumeration(n)
    if not 1 <= k <= n:
        raise ParameterError(f"k 必须在 [1, {n}] 内，当前: {k}")
    return _monomial_sum(vertex_configuration(n, theta).vertices, k, k)


def squares_cross_sum(n: int, theta: float) -> complex:
    """
    Σ_{i≠j} a_i²·a_j，n > 3 时为0

    Args:
        n: 4 ≤ n ≤ 64
        theta: 旋转角
    """
    if not 4 <= n <= MAX_CROSS_SUM_N:
        raise ParameterError(f"要求 4 ≤ n ≤ {MAX_CROSS_SUM_N}，当前: {n}")
    vertices = vertex_configuration(n, theta).vertices
    terms = [
        vertices[i] ** 2 * vertices[j]
        for i in range(n)
        for j in range(n)
        if i != j
    ]
    return complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))


# 测试代码
if __name__ == "__main__":
    triangle = RegularNgon(n=3)
    print(f"投影: {projections(triangle)}")
    print(f"f = {ngon_polynomial(triangle)}")
    print(f"闭式 = {chebyshev_form(triangle)}")
    print(f"|S(5,3,1)| = {abs(rotation_monomial_sum(5, 3, 1, 0.7)):.3e}")

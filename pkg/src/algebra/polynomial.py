"""
稠密单变量多项式

系数按升幂存储（下标 i = x^i 的系数），零多项式是空序列。
支持两个系数域：
1. 精确有理数（fractions.Fraction）- 切比雪夫、迪克森多项式
2. 双精度浮点（float）- 正多边形投影构造出的多项式

导数的实根通过"交错"性质求出：f 的根已知，f' 的根一定夹在相邻两根之间
"""

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np
from loguru import logger

from src.utils.errors import BracketingError, ParameterError

Scalar = Union[Fraction, int, float, complex]

# 排序后相邻根之差不超过该值视为二重根
DOUBLE_ROOT_TOL = 1e-12
# 二分法参数
BISECTION_TOL = 1e-13
BISECTION_MAX_ITER = 200
# 区间端点的相对扰动（端点处 f'/f 为无穷大）
_ENDPOINT_PERTURBATIONS = (1e-12, 1e-9, 1e-6, 1e-3)


def _is_exact(value) -> bool:
    return isinstance(value, Rational) and not isinstance(value, bool)


class Polynomial:
    """
    不可变的稠密多项式

    特点:
    - 最高次系数非零（零多项式为空元组）
    - degree = len(coefficients) - 1，零多项式的次数为 -1
    - int 系数会被转成 Fraction，float 系数保持 float
    """

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Iterable[Scalar] = ()):
        """
        初始化

        Args:
            coefficients: 升幂排列的系数
        """
        coeffs = [Fraction(c) if isinstance(c, int) else c for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coefficients: Tuple[Scalar, ...] = tuple(coeffs)

    @property
    def coefficients(self) -> Tuple[Scalar, ...]:
        return self._coefficients

    @property
    def degree(self) -> int:
        return len(self._coefficients) - 1

    @property
    def leading(self) -> Scalar:
        """最高次系数（零多项式返回0）"""
        return self._coefficients[-1] if self._coefficients else 0

    @property
    def is_exact(self) -> bool:
        """是否在精确有理数域上"""
        return all(_is_exact(c) for c in self._coefficients)

    def is_zero(self) -> bool:
        return not self._coefficients

    def is_monic(self) -> bool:
        return bool(self._coefficients) and self.leading == 1

    def coefficient(self, i: int) -> Scalar:
        """x^i 的系数（超出次数返回0）"""
        if 0 <= i < len(self._coefficients):
            return self._coefficients[i]
        return 0

    # ---------- 系数域转换 ----------

    def to_float(self) -> "Polynomial":
        """转成浮点系数（每个有理数取最近的double）"""
        return Polynomial(float(c) for c in self._coefficients)

    def to_exact(self) -> "Polynomial":
        """转成精确系数（float 的二进制值精确转换）"""
        return Polynomial(c if _is_exact(c) else Fraction(c) for c in self._coefficients)

    # ---------- 算术 ----------

    def __add__(self, other) -> "Polynomial":
        other = _coerce(other)
        size = max(len(self._coefficients), len(other._coefficients))
        return Polynomial(self.coefficient(i) + other.coefficient(i) for i in range(size))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self._coefficients)

    def __sub__(self, other) -> "Polynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return _coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        result: List[Scalar] = [0] * (len(self._coefficients) + len(other._coefficients) - 1)
        for i, a in enumerate(self._coefficients):
            for j, b in enumerate(other._coefficients):
                result[i + j] += a * b
        return Polynomial(result)

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> "Polynomial":
        """乘以常数"""
        return Polynomial(c * factor for c in self._coefficients)

    def shift(self, k: int = 1) -> "Polynomial":
        """乘以 x^k"""
        if self.is_zero():
            return self
        return Polynomial([0] * k + list(self._coefficients))

    def monic(self) -> "Polynomial":
        """除以最高次系数"""
        if self.is_zero():
            raise ParameterError("零多项式无法首一化")
        lead = self.leading
        return Polynomial(c / lead for c in self._coefficients)

    def compose_affine(self, a: Scalar, b: Scalar) -> "Polynomial":
        """
        计算 p(a·x + b)

        Args:
            a: 一次项系数
            b: 常数项

        Returns:
            复合后的多项式（Horner方式展开）
        """
        inner = Polynomial([b, a])
        result = Polynomial()
        for c in reversed(self._coefficients):
            result = result * inner + Polynomial([c])
        return result

    # ---------- 其他 ----------

    def __call__(self, x: Scalar) -> Scalar:
        return evaluate(self, x)

    def __len__(self) -> int:
        return len(self._coefficients)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(self._coefficients)

    def __repr__(self) -> str:
        return f"Polynomial({list(self._coefficients)!r})"


def _coerce(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial([value])


def from_roots(roots: Sequence[Scalar]) -> Polynomial:
    """
    由根构造首一多项式 Π(x - r)

    Args:
        roots: 实根（允许重复，重复即重数）；Fraction 根保持精确

    Returns:
        次数为 len(roots) 的首一多项式，空输入返回常数1
    """
    values = [r if isinstance(r, Fraction) else float(r) for r in roots]
    exact = all(isinstance(r, Fraction) for r in values)
    coeffs: List[Scalar] = [Fraction(1) if exact else 1.0]
    for r in values:
        # 乘以 (x - r)
        nxt: List[Scalar] = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= r * c
        coeffs = nxt
    return Polynomial(coeffs)


def root_residual_scale(roots: Sequence[float], x: float) -> float:
    """
    from_roots(roots) 在 x 处求值的舍入误差尺度 Π(|x| + |r|)

    展开与 Horner 的误差都按 |r| 的初等对称多项式逐项放大，
    残差应与这个量而不是 max|系数| 比较
    """
    return math.prod(abs(x) + abs(float(r)) for r in roots)


def derivative(p: Polynomial, order: int = 1) -> Polynomial:
    """
    order 阶导数

    Args:
        p: 多项式
        order: 求导阶数（≥1）

    Returns:
        第 i 项系数 = p 的第 i+order 项系数 × (i+order)(i+order-1)…(i+1)
    """
    if order < 1:
        raise ParameterError(f"求导阶数必须 ≥ 1，当前: {order}")
    coeffs = p.coefficients
    return Polynomial(
        coeffs[i + order] * math.perm(i + order, order)
        for i in range(len(coeffs) - order)
    )


def evaluate(p: Polynomial, x: Scalar) -> Scalar:
    """
    Horner 求值

    精确系数的多项式在浮点（或复数）点上求值时，先把 x 的二进制值精确转成
    有理数（复数用高斯有理数），精确计算后只在最后舍入一次。

    Args:
        p: 多项式
        x: 求值点（有限的实数或复数）

    Returns:
        Σ cᵢ xⁱ
    """
    coeffs = p.coefficients
    if not coeffs:
        return 0
    if p.is_exact and not _is_exact(x):
        if isinstance(x, complex):
            return _horner_gaussian(coeffs, x)
        return float(_horner(coeffs, Fraction(x)))
    return _horner(coeffs, x)


def _horner(coeffs: Sequence[Scalar], x: Scalar) -> Scalar:
    acc: Scalar = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _horner_gaussian(coeffs: Sequence[Fraction], z: complex) -> complex:
    re, im = Fraction(z.real), Fraction(z.imag)
    acc_re, acc_im = Fraction(0), Fraction(0)
    for c in reversed(coeffs):
        acc_re, acc_im = acc_re * re - acc_im * im + c, acc_re * im + acc_im * re
    return complex(float(acc_re), float(acc_im))


def _group_roots(roots: Sequence[float]) -> List[Tuple[float, int]]:
    """排序后把相距 ≤ DOUBLE_ROOT_TOL 的根合并，返回 (根, 重数)"""
    groups: List[List[float]] = []
    for r in sorted(roots):
        if groups and abs(r - groups[-1][-1]) <= DOUBLE_ROOT_TOL:
            groups[-1].append(r)
        else:
            groups.append([r])
    return [(math.fsum(g) / len(g), len(g)) for g in groups]


def _log_derivative(x: float, grouped: Sequence[Tuple[float, int]]) -> float:
    # f'(x)/f(x) = Σ m/(x - r)，在两根之间与 f' 同零点且严格递减
    return math.fsum(m / (x - r) for r, m in grouped)


def _bisect_gap(lo: float, hi: float, grouped: Sequence[Tuple[float, int]]) -> float:
    """在相邻两个不同根 (lo, hi) 之间二分求 f' 的根"""
    width = hi - lo
    candidates = [(lo + eps * width, hi - eps * width) for eps in _ENDPOINT_PERTURBATIONS]
    # 区间只有几个ulp宽时，相对扰动会被舍入掉
    candidates.append((math.nextafter(lo, hi), math.nextafter(hi, lo)))
    for a, b in candidates:
        if not lo < a < b < hi:
            continue
        if _log_derivative(a, grouped) > 0 > _log_derivative(b, grouped):
            break
    else:
        raise BracketingError(lo, hi)

    iterations = 0
    while b - a > BISECTION_TOL and iterations < BISECTION_MAX_ITER:
        mid = 0.5 * (a + b)
        value = _log_derivative(mid, grouped)
        if value == 0:
            return mid
        if value > 0:
            a = mid
        else:
            b = mid
        iterations += 1
    logger.debug(f"bisection ({lo:.6g}, {hi:.6g}) -> {iterations} iterations")
    return 0.5 * (a + b)


def critical_points(f_roots: Sequence[float]) -> List[float]:
    """
    求 f' 的全部实根，f 是以 f_roots 为根的首一多项式

    流程:
    1. 排序并合并数值上重合的根
    2. 每个二重根直接就是 f' 的根
    3. 相邻不同根之间用二分法找唯一的 f' 根

    Args:
        f_roots: f 的 n ≥ 2 个实根

    Returns:
        升序排列的 n-1 个 f' 根
    """
    if len(f_roots) < 2:
        raise ParameterError(f"至少需要2个根，当前: {len(f_roots)}")
    grouped = _group_roots([float(r) for r in f_roots])

    result: List[float] = []
    for r, multiplicity in grouped:
        result.extend([r] * (multiplicity - 1))
    for (lo, _), (hi, _) in zip(grouped, grouped[1:]):
        result.append(_bisect_gap(lo, hi, grouped))
    return sorted(result)


def sup_norm_grid(p: Polynomial, a: float, b: float, grid_points: int) -> float:
    """
    等距网格上的 max|p(x)|

    Args:
        p: 多项式
        a, b: 区间端点（a < b）
        grid_points: 网格点数（含端点，≥2）

    Returns:
        网格上的一致范数
    """
    if not a < b:
        raise ParameterError(f"需要 a < b，当前: a={a}, b={b}")
    if grid_points < 2:
        raise ParameterError(f"网格点数必须 ≥ 2，当前: {grid_points}")
    if p.is_zero():
        return 0.0
    xs = np.linspace(a, b, grid_points)
    values = np.polynomial.polynomial.polyval(xs, [float(c) for c in p.coefficients])
    return float(np.max(np.abs(values)))


# 测试代码
if __name__ == "__main__":
    f = from_roots([1, -0.5, -0.5])
    print(f"f = {f}")
    print(f"f' = {derivative(f)}")
    print(f"f'的根: {critical_points([1, -0.5, -0.5])}")

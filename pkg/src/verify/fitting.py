"""
平行直线 → 正 n 边形的可行性求解

对每个旋转角 θ，把排好序的直线位置对排好序的 cos(θ + 2πk/n) 做线性最小二乘，
(x0, R) 有闭式解；残差只依赖 θ，先在 [0, 2π/n) 上取1024个网格点，再用黄金分割细化
"""

import math
from typing import Callable, Sequence, Tuple

import numpy as np
from loguru import logger

from src.geometry.models import RegularNgon
from src.utils.errors import ParameterError
from src.verify.models import FitResult

GRID_SIZE = 1024
REFINE_TOL = 1e-12

INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2


def golden_section_search(f: Callable[[float], float],
                          a: float,
                          b: float,
                          tol: float = REFINE_TOL) -> Tuple[float, float]:
    """
    黄金分割搜索

    f 在 [a, b] 内只有一个局部极小时，返回包含极小点、宽度 ≤ tol 的区间
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        return a, b

    # 达到精度所需的步数
    steps = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(steps - 1):
        if yc < yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)

    if yc < yd:
        return a, d
    return c, b


class _SortedProjectionModel:
    """固定排序后的直线位置，对给定 θ 求最优 (x0, R) 和平方残差和"""

    def __init__(self, lines: Sequence[float]):
        self.lines = np.sort(np.asarray(lines, dtype=float))
        self.n = len(self.lines)
        self.offsets = 2 * math.pi * np.arange(self.n) / self.n
        self._line_mean = float(self.lines.mean())
        self._line_dev = self.lines - self._line_mean

    def unit_projections(self, theta: float) -> np.ndarray:
        return np.sort(np.cos(theta + self.offsets))

    def solve(self, theta: float) -> Tuple[float, float, float]:
        """
        Returns:
            (x0, R, 平方残差和)
        """
        u = self.unit_projections(theta)
        u_mean = float(u.mean())
        u_dev = u - u_mean
        # 两个序列都升序，协方差非负，所以 R ≥ 0
        radius = float(u_dev @ self._line_dev) / float(u_dev @ u_dev)
        center = self._line_mean - radius * u_mean
        resid = self._line_dev - radius * u_dev
        return center, radius, float(resid @ resid)

    def loss(self, theta: float) -> float:
        return self.solve(theta)[2]


def _assignment(lines: Sequence[float], n: int, theta: float) -> Tuple[int, ...]:
    # 第 i 小的直线对应第 i 小的投影
    vertex_order = np.argsort(np.cos(theta + 2 * math.pi * np.arange(n) / n), kind="stable")
    line_order = np.argsort(np.asarray(lines, dtype=float), kind="stable")
    assignment = [0] * n
    for line_index, vertex_index in zip(line_order, vertex_order):
        assignment[int(line_index)] = int(vertex_index)
    return tuple(assignment)


def fit_regular_ngon(lines: Sequence[float], tol: float = 1e-8) -> FitResult:
    """
    寻找顶点分别落在给定竖直直线上的正 n 边形

    流程:
    1. θ 网格（1024点）上求闭式最小二乘
    2. 在最优网格点两侧一个步长内做黄金分割细化
    3. 均方根残差 ≤ tol·spread 且 R > 0 则判定可行

    Args:
        lines: n ≥ 3 条直线的 x 坐标
        tol: 相对容差（相对于直线的跨度）

    Returns:
        FitResult（θ 规范化到 [0, 2π/n)）
    """
    values = [float(v) for v in lines]
    n = len(values)
    if n < 3:
        raise ParameterError(f"至少需要3条直线，当前: {n}")
    if not all(math.isfinite(v) for v in values):
        raise ParameterError("直线位置必须是有限实数")
    spread = max(values) - min(values)
    if spread == 0:
        raise ParameterError("所有直线重合，问题退化")

    model = _SortedProjectionModel(values)
    period = 2 * math.pi / n
    step = period / GRID_SIZE
    grid = [i * step for i in range(GRID_SIZE)]
    losses = [model.loss(theta) for theta in grid]
    best = min(range(GRID_SIZE), key=losses.__getitem__)

    lo, hi = golden_section_search(model.loss, grid[best] - step, grid[best] + step)
    theta = 0.5 * (lo + hi)
    if losses[best] < model.loss(theta):
        theta = grid[best]

    center, radius, ss = model.solve(theta)
    rms = math.sqrt(ss / n)
    feasible = rms <= tol * spread and radius > 0
    canonical = RegularNgon(n=n, theta=theta).theta
    logger.debug(f"fit n={n}: theta={canonical:.12g}, R={radius:.12g}, rms={rms:.3e}, feasible={feasible}")

    return FitResult(
        feasible=feasible,
        center_x=center,
        radius=max(radius, 0.0),
        theta=canonical,
        residual=rms,
        assignment=_assignment(values, n, canonical),
    )

"""
几何数据模型（pydantic）
"""

import math
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator


class RegularNgon(BaseModel):
    """
    正 n 边形

    特点:
    - 外接圆半径 radius，中心 (center_x, center_y)
    - 旋转角 theta 规范化到 [0, 2π/n)（顶点集合的完整对称周期）
    - center_y 只在绘图时使用
    """

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    n: int = Field(ge=3)
    radius: float = Field(default=1.0, gt=0)
    theta: float = 0.0
    center_x: float = 0.0
    center_y: float = 0.0

    @field_validator("theta")
    @classmethod
    def _canonical_theta(cls, value: float, info: ValidationInfo) -> float:
        n = info.data.get("n")
        if n is None:
            return value
        period = 2 * math.pi / n
        canonical = math.fmod(value, period)
        if canonical < 0:
            canonical += period
        # fmod 可能给出恰好等于周期的值
        return 0.0 if canonical >= period else canonical

    @property
    def period(self) -> float:
        return 2 * math.pi / self.n

    def vertex_angles(self) -> Tuple[float, ...]:
        """逆时针编号，第一个顶点位于角度 theta"""
        return tuple(self.theta + 2 * math.pi * k / self.n for k in range(self.n))

    def __repr__(self) -> str:
        return (f"RegularNgon(n={self.n}, R={self.radius:g}, theta={self.theta:.6g}, "
                f"x0={self.center_x:g})")


class VertexConfiguration(BaseModel):
    """单位圆上的顶点 a_k = e^{i(θ + 2π(k-1)/n)} 与本原单位根 β = e^{2πi/n}"""

    model_config = ConfigDict(frozen=True)

    vertices: Tuple[complex, ...]
    beta: complex

    @property
    def n(self) -> int:
        return len(self.vertices)


class TangentCircleFamily(BaseModel):
    """
    与对角线相切的同心圆族

    radii[d-1] = R·cos(πd/n)，d = 1..⌊(n-1)/2⌋，严格递减；radii[0] 是内切圆半径
    """

    model_config = ConfigDict(frozen=True)

    radii: Tuple[float, ...]
    has_center_line: bool

    def __len__(self) -> int:
        return len(self.radii)

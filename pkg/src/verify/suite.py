"""
验证套件

对 [n_min, n_max] 中的每个 n、每个随机样本跑所有检验，结果按 (check, n, θ) 排序后写成JSON。
每种检验都是 BaseCheck 的子类，负责把随机参数映射到具体的 check_* 调用。
"""

import json
import math
import time
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.utils.errors import NgonError
from src.verify.models import CheckResult
from src.verify.theorems import (
    check_center_root,
    check_chebyshev_identity,
    check_circle_pairing,
    check_closed_form,
    check_dickson_identity,
    check_extreme_tangency,
    check_rotation_invariance,
    check_symmetric_sums,
    check_vanishing_coefficients,
    check_vertical_diagonal_tangency,
)

DEFAULT_N_MAX = 16
HARD_N_MAX = 32


class SuiteConfig(BaseModel):
    """验证套件配置"""

    model_config = ConfigDict(frozen=True)

    n_min: int = 3
    n_max: int = 8
    samples_per_n: int = Field(default=10, ge=1)
    seed: int = 0
    tolerance: float = Field(default=1e-9, gt=0)
    output_path: str = "report.json"

    @model_validator(mode="after")
    def _check_range(self) -> "SuiteConfig":
        if not 3 <= self.n_min <= self.n_max <= HARD_N_MAX:
            raise ValueError(
                f"需要 3 ≤ n_min ≤ n_max ≤ {HARD_N_MAX}，当前: {self.n_min}..{self.n_max}"
            )
        if self.n_max > DEFAULT_N_MAX:
            logger.warning(f"n_max={self.n_max} 超过 {DEFAULT_N_MAX}，运行时间会明显变长")
        return self


class ParameterDraw(BaseModel):
    """一次随机抽样的全部参数"""

    model_config = ConfigDict(frozen=True)

    sample: int
    theta: float
    theta2: float
    radius: float
    center_x: float
    y: float
    t: complex

    @classmethod
    def draw(cls, seed: int, n: int, sample: int) -> "ParameterDraw":
        # 每个 (seed, n, sample) 独立的生成器，结果与执行顺序无关
        rng = np.random.default_rng([seed, n, sample])
        theta, theta2 = rng.uniform(0.0, 2 * math.pi, size=2)
        radius = rng.uniform(0.1, 10.0)
        center_x = rng.uniform(-5.0, 5.0)
        y = rng.uniform(-10.0, 10.0)
        modulus = rng.uniform(0.5, 2.0)
        argument = rng.uniform(0.0, 2 * math.pi)
        return cls(
            sample=sample,
            theta=float(theta),
            theta2=float(theta2),
            radius=float(radius),
            center_x=float(center_x),
            y=float(y),
            t=complex(modulus * math.cos(argument), modulus * math.sin(argument)),
        )


class BaseCheck(ABC):
    """
    检验种类的抽象基类

    子类实现 run，把一次随机抽样变成一个 CheckResult
    """

    name: str = ""
    # 只对前 max_samples 个样本运行（None 表示全部）
    max_samples: Optional[int] = None
    # 容差上限，套件容差更宽时取这个值
    max_tolerance: Optional[float] = None

    def applies_to(self, n: int, sample: int) -> bool:
        return self.max_samples is None or sample < self.max_samples

    def tolerance(self, suite_tol: float) -> float:
        return suite_tol if self.max_tolerance is None else min(suite_tol, self.max_tolerance)

    @abstractmethod
    def run(self, n: int, p: ParameterDraw, tol: float) -> CheckResult:
        pass

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(name={self.name})"


class ExtremeTangencyCheck(BaseCheck):
    name = "extreme_tangency"

    def run(self, n, p, tol):
        return check_extreme_tangency(n, p.theta, p.radius, p.center_x, tol)


class CirclePairingCheck(BaseCheck):
    name = "circle_pairing"

    def run(self, n, p, tol):
        return check_circle_pairing(n, p.theta, p.radius, p.center_x, tol)


class RotationInvarianceCheck(BaseCheck):
    name = "rotation_invariance"

    def run(self, n, p, tol):
        return check_rotation_invariance(n, p.theta, p.theta2, p.radius, p.center_x, tol)


class VanishingCoefficientsCheck(BaseCheck):
    name = "vanishing_coefficients"
    max_tolerance = 1e-10

    def run(self, n, p, tol):
        return check_vanishing_coefficients(n, p.theta, tol)


class CenterRootCheck(BaseCheck):
    name = "center_root"

    def run(self, n, p, tol):
        return check_center_root(n, p.theta, p.radius, p.center_x, tol)


class ClosedFormCheck(BaseCheck):
    name = "closed_form"
    max_tolerance = 1e-10

    def run(self, n, p, tol):
        return check_closed_form(n, p.theta, p.radius, p.center_x, tol)


class SymmetricSumsCheck(BaseCheck):
    """n = 12 时一次要穷举 3^12 项，只跑前3个样本"""

    name = "symmetric_sums"
    max_samples = 3

    def run(self, n, p, tol):
        return check_symmetric_sums(n, p.theta, tol)


class VerticalDiagonalCheck(BaseCheck):
    name = "vertical_diagonal_tangency"

    def run(self, n, p, tol):
        d = 1 + p.sample % (n // 2)
        return check_vertical_diagonal_tangency(n, d, p.radius, p.center_x, tol)


class ChebyshevIdentityCheck(BaseCheck):
    name = "chebyshev_identity"
    max_tolerance = 1e-10

    def run(self, n, p, tol):
        return check_chebyshev_identity(n, p.y, tol)


class DicksonIdentityCheck(BaseCheck):
    name = "dickson_identity"

    def run(self, n, p, tol):
        return check_dickson_identity(n, p.t, tol)


def default_checks() -> List[BaseCheck]:
    return [
        ExtremeTangencyCheck(),
        CirclePairingCheck(),
        RotationInvarianceCheck(),
        VanishingCoefficientsCheck(),
        CenterRootCheck(),
        ClosedFormCheck(),
        SymmetricSumsCheck(),
        VerticalDiagonalCheck(),
        ChebyshevIdentityCheck(),
        DicksonIdentityCheck(),
    ]


class VerificationSuite:
    """
    验证套件

    特点:
    - 参数由 (seed, n, sample) 决定，两次相同配置的运行输出逐字节相同
    - 单项检验抛出的 NgonError 记为失败（残差 inf，failure_kind 为异常类名），不中断套件
    """

    def __init__(self, config: SuiteConfig, checks: Optional[Sequence[BaseCheck]] = None):
        """
        初始化

        Args:
            config: 套件配置
            checks: 检验列表（默认全部）
        """
        self.config = config
        self.checks = list(checks) if checks is not None else default_checks()

    def _run_one(self, check: BaseCheck, n: int, p: ParameterDraw) -> CheckResult:
        tol = check.tolerance(self.config.tolerance)
        try:
            return check.run(n, p, tol)
        except NgonError as e:
            logger.warning(f"{check.name} n={n} sample={p.sample} failed: {e}")
            params = {"n": n, "theta": p.theta, "R": p.radius, "x0": p.center_x,
                      "error": str(e)}
            return CheckResult.judge(check.name, params, math.inf, tol,
                                     failure_kind=type(e).__name__)

    def run(self) -> List[CheckResult]:
        """
        运行全部检验

        Returns:
            按 (check, n, θ) 排序的结果
        """
        results: List[CheckResult] = []
        start = time.time()
        for n in range(self.config.n_min, self.config.n_max + 1):
            for sample in range(self.config.samples_per_n):
                p = ParameterDraw.draw(self.config.seed, n, sample)
                for check in self.checks:
                    if check.applies_to(n, sample):
                        results.append(self._run_one(check, n, p))
            logger.info(f"n={n} done ({len(results)} results, {time.time() - start:.2f}s)")
        return sorted(results, key=CheckResult.sort_key)

    @staticmethod
    def get_stats(results: Sequence[CheckResult]) -> Dict:
        """
        按检验种类统计

        Returns:
            {check: {"total", "failed", "max_residual"}}
        """
        stats: Dict[str, Dict] = {}
        for r in results:
            entry = stats.setdefault(r.check_name, {"total": 0, "failed": 0, "max_residual": 0.0})
            entry["total"] += 1
            entry["failed"] += 0 if r.passed else 1
            entry["max_residual"] = max(entry["max_residual"], r.residual)
        return stats


def render_report(results: Sequence[CheckResult]) -> str:
    """JSON 数组（固定字段顺序，浮点数用最短往返表示）"""
    records = [r.to_record() for r in results]
    return json.dumps(records, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def write_report(results: Sequence[CheckResult], path: str) -> None:
    """写出 UTF-8 JSON 报告"""
    Path(path).write_text(render_report(results), encoding="utf-8")
    logger.info(f"report written: {path} ({len(results)} results)")

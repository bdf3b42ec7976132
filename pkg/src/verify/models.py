"""
检验结果的数据模型
"""

import math
from typing import Any, Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

# JSON 报告中的固定字段（顺序即输出顺序）
_RECORD_KEYS = ("n", "theta", "R", "x0")


class CheckResult(BaseModel):
    """
    单项检验结果

    passed ⇔ residual ≤ tolerance；无法比较（例如基数不一致）时
    residual 为 inf，并在 parameters["failure_kind"] 里标明原因
    """

    model_config = ConfigDict(frozen=True)

    check_name: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    residual: float = Field(ge=0)
    tolerance: float = Field(gt=0)
    passed: bool

    @classmethod
    def judge(cls,
              check_name: str,
              parameters: Dict[str, Any],
              residual: float,
              tolerance: float,
              failure_kind: Optional[str] = None) -> "CheckResult":
        """
        根据残差和容差构造结果

        Args:
            check_name: 检验名
            parameters: 参数
            residual: 残差（非负）
            tolerance: 容差（正）
            failure_kind: 非数值失败的类别

        Returns:
            CheckResult
        """
        params = dict(parameters)
        if failure_kind is None and math.isnan(residual):
            failure_kind = "not_a_number"
        if failure_kind is not None:
            params["failure_kind"] = failure_kind
            residual = math.inf
        return cls(
            check_name=check_name,
            parameters=params,
            residual=residual,
            tolerance=tolerance,
            passed=residual <= tolerance,
        )

    @property
    def failure_kind(self) -> Optional[str]:
        return self.parameters.get("failure_kind")

    def sort_key(self) -> Tuple:
        theta = self.parameters.get("theta")
        return (
            self.check_name,
            self.parameters.get("n", 0),
            theta if theta is not None else -1.0,
            repr(sorted(self.parameters.items())),
        )

    def to_record(self) -> Dict[str, Any]:
        """
        扁平的JSON记录 {check, n, theta, R, x0, residual, tolerance, pass, extra}

        inf 残差写成 null（类别在 extra.failure_kind 里）
        """
        extra = {k: v for k, v in sorted(self.parameters.items()) if k not in _RECORD_KEYS}
        return {
            "check": self.check_name,
            "n": self.parameters.get("n"),
            "theta": self.parameters.get("theta"),
            "R": self.parameters.get("R"),
            "x0": self.parameters.get("x0"),
            "residual": self.residual if math.isfinite(self.residual) else None,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "extra": extra,
        }

    def __repr__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"CheckResult({self.check_name}, {status}, residual={self.residual:.3e})"


class FitResult(BaseModel):
    """
    平行直线拟合正 n 边形的结果

    assignment[i] 是与第 i 条输入直线匹配的顶点编号
    """

    model_config = ConfigDict(frozen=True)

    feasible: bool
    center_x: float
    radius: float = Field(ge=0)
    theta: float
    residual: float = Field(ge=0)
    assignment: Tuple[int, ...]

    def to_record(self) -> Dict[str, Any]:
        return {
            "feasible": self.feasible,
            "x0": self.center_x,
            "R": self.radius,
            "theta": self.theta,
            "residual": self.residual,
            "assignment": list(self.assignment),
        }

"""
偶次幂级数（精确有理系数）与截断的级数除法
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.utils.errors import DegenerateError


class EvenPowerSeries(BaseModel):
    """
    Σ coefficients[j]·x^(2j) 的截断

    coefficients[0] 是常数项，truncation 记录已知的项数
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    coefficients: Tuple[Fraction, ...]
    truncation: int = Field(ge=0)

    @model_validator(mode="after")
    def _check_length(self) -> "EvenPowerSeries":
        if len(self.coefficients) != self.truncation:
            raise ValueError(
                f"系数个数({len(self.coefficients)})与截断长度({self.truncation})不一致"
            )
        return self

    def __getitem__(self, j: int) -> Fraction:
        return self.coefficients[j]

    def __len__(self) -> int:
        return self.truncation


def divide_series(numerator: Sequence[Fraction],
                  denominator: Sequence[Fraction],
                  order: int) -> List[Fraction]:
    """
    幂级数除法 A(y)/B(y)，保留前 order 项

    递推: q_j = (a_j - Σ_{i=1..j} b_i·q_{j-i}) / b_0

    Args:
        numerator: A 的系数（升幂，超出部分视为0）
        denominator: B 的系数
        order: 需要的项数

    Returns:
        商的前 order 个系数
    """
    if not denominator or denominator[0] == 0:
        raise DegenerateError("除数级数的常数项为0，无法做幂级数除法")

    def at(seq: Sequence[Fraction], i: int) -> Fraction:
        return Fraction(seq[i]) if i < len(seq) else Fraction(0)

    b0 = Fraction(denominator[0])
    quotient: List[Fraction] = []
    for j in range(order):
        acc = at(numerator, j)
        for i in range(1, j + 1):
            acc -= at(denominator, i) * quotient[j - i]
        quotient.append(acc / b0)
    return quotient

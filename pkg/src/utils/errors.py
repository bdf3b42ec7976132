"""
异常定义

所有模块抛出的异常都继承自 NgonError，方便CLI统一捕获
"""


class NgonError(Exception):
    """本项目所有异常的基类"""
    pass


class ParameterError(NgonError, ValueError):
    """参数不满足前置条件（k、j范围，n的上下界等）"""
    pass


class DomainError(NgonError, ValueError):
    """参数落在定义域之外（例如 t = 0）"""
    pass


class BracketingError(NgonError, RuntimeError):
    """区间内无法建立变号（根在数值上重合）"""

    def __init__(self, lo: float, hi: float, message: str = ""):
        self.lo = lo
        self.hi = hi
        super().__init__(message or f"无法在区间 [{lo!r}, {hi!r}] 内建立变号")


class DegenerateError(NgonError, ArithmeticError):
    """退化情形（斜率为0、级数常数项为0）"""
    pass

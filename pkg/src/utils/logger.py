"""
日志配置（loguru）
"""

import sys

from loguru import logger


def setup_logger(level: str = "WARNING", verbose: bool = False) -> None:
    """
    替换loguru默认的sink

    Args:
        level: 日志级别
        verbose: 是否输出调试信息（覆盖level为DEBUG）
    """
    logger.remove()
    logger.add(
        sys.stderr,
        level="DEBUG" if verbose else level.upper(),
        format="<green>{time:HH:mm:ss}</green> | <level>{level: <7}</level> | {name}:{function} - {message}",
        backtrace=verbose,
        diagnose=verbose,
    )

"""
全局配置

从 .env / 环境变量读取，种子（seed）永远不从环境变量读取
"""

import os
from functools import lru_cache
from typing import Literal

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, field_validator

LogLevel = Literal["TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"]


class Settings(BaseModel):
    """运行配置"""

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    log_level: LogLevel = "WARNING"
    report_dir: str = "."
    tolerance: float = Field(default=1e-9, gt=0)

    @field_validator("log_level", mode="before")
    @classmethod
    def _upper(cls, value):
        return value.upper() if isinstance(value, str) else value


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """
    读取配置（只读取一次）

    环境变量的值原样交给 pydantic 校验，非法值抛 ValidationError

    Returns:
        Settings实例
    """
    load_dotenv()
    return Settings(
        log_level=os.getenv("NGON_LOG_LEVEL", "WARNING"),
        report_dir=os.getenv("NGON_REPORT_DIR", "."),
        tolerance=os.getenv("NGON_TOLERANCE", "1e-9"),
    )

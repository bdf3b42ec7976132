"""
验证套件与配置测试
"""
import json
import math
import sys
from pathlib import Path

import pytest
from pydantic import ValidationError

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.config import Settings, get_settings
from src.utils.errors import DegenerateError
from src.verify.models import CheckResult
from src.verify.suite import (
    BaseCheck,
    ClosedFormCheck,
    ExtremeTangencyCheck,
    ParameterDraw,
    SuiteConfig,
    SymmetricSumsCheck,
    VanishingCoefficientsCheck,
    VerificationSuite,
    default_checks,
    render_report,
    write_report,
)


class AlwaysDegenerateCheck(BaseCheck):
    """总是抛出 NgonError 的检验"""

    name = "always_degenerate"

    def run(self, n, p, tol):
        raise DegenerateError("slope is zero")


def test_suite_config_bounds():
    """测试1：3 ≤ n_min ≤ n_max ≤ 32"""
    assert SuiteConfig().n_max == 8
    SuiteConfig(n_min=3, n_max=20)
    with pytest.raises(ValidationError):
        SuiteConfig(n_min=2, n_max=5)
    with pytest.raises(ValidationError):
        SuiteConfig(n_min=6, n_max=5)
    with pytest.raises(ValidationError):
        SuiteConfig(n_max=33)
    with pytest.raises(ValidationError):
        SuiteConfig(tolerance=0.0)


def test_parameter_draw_is_reproducible():
    """(seed, n, sample) 决定参数，与调用顺序无关"""
    a = ParameterDraw.draw(1, 5, 3)
    ParameterDraw.draw(1, 5, 0)
    b = ParameterDraw.draw(1, 5, 3)
    assert a == b
    assert ParameterDraw.draw(2, 5, 3) != a
    assert 0.1 <= a.radius <= 10.0
    assert -5.0 <= a.center_x <= 5.0
    assert 0.5 <= abs(a.t) <= 2.0


def test_default_checks():
    names = [check.name for check in default_checks()]
    assert len(names) == len(set(names)) == 10
    assert SymmetricSumsCheck().applies_to(8, 2)
    assert not SymmetricSumsCheck().applies_to(8, 3)
    assert ExtremeTangencyCheck().applies_to(8, 99)


def test_suite_run_sorted():
    """测试2：结果按 (check, n, θ) 排序"""
    config = SuiteConfig(n_min=3, n_max=4, samples_per_n=3, seed=5)
    results = VerificationSuite(config).run()
    keys = [r.sort_key() for r in results]
    assert keys == sorted(keys)
    assert all(r.passed for r in results)


def test_check_tolerance_cap():
    """闭式与系数为0两项检验的容差不超过 1e-10"""
    assert ClosedFormCheck().tolerance(1e-9) == 1e-10
    assert VanishingCoefficientsCheck().tolerance(1e-9) == 1e-10
    assert ClosedFormCheck().tolerance(1e-12) == 1e-12
    assert ExtremeTangencyCheck().tolerance(1e-9) == 1e-9

    config = SuiteConfig(n_min=5, n_max=6, samples_per_n=2, tolerance=1e-6)
    results = VerificationSuite(config, checks=[ClosedFormCheck(), ExtremeTangencyCheck()]).run()
    tolerances = {r.check_name: r.tolerance for r in results}
    assert tolerances == {"closed_form": 1e-10, "extreme_tangency": 1e-6}
    assert all(r.passed for r in results)


def test_suite_records_exceptions():
    """单项检验抛异常时记为失败，套件继续运行"""
    config = SuiteConfig(n_min=3, n_max=4, samples_per_n=2)
    suite = VerificationSuite(config, checks=[AlwaysDegenerateCheck(), ExtremeTangencyCheck()])
    results = suite.run()
    assert len(results) == 8

    failed = [r for r in results if not r.passed]
    assert len(failed) == 4
    assert all(r.failure_kind == "DegenerateError" for r in failed)
    assert all(math.isinf(r.residual) for r in failed)

    stats = VerificationSuite.get_stats(results)
    assert stats["always_degenerate"]["failed"] == 2 * 2
    assert stats["extreme_tangency"]["failed"] == 0


def test_render_report(tmp_path):
    """测试3：JSON 报告"""
    results = [
        CheckResult.judge("b_check", {"n": 4, "theta": 0.5, "R": 1.0, "x0": 0.0}, 1e-12, 1e-9),
        CheckResult.judge("a_check", {"n": 3, "theta": 0.1, "R": 2.0, "x0": 1.0, "root": 1.0},
                          math.inf, 1e-9, failure_kind="cardinality_mismatch"),
    ]
    text = render_report(results)
    assert text.endswith("\n")
    records = json.loads(text)
    assert records[0]["check"] == "b_check"
    assert records[0]["residual"] == 1e-12
    assert records[1]["residual"] is None
    assert records[1]["extra"] == {"failure_kind": "cardinality_mismatch", "root": 1.0}

    out = tmp_path / "report.json"
    write_report(results, str(out))
    assert out.read_text(encoding="utf-8") == text


def test_settings(monkeypatch):
    """环境变量覆盖默认配置"""
    get_settings.cache_clear()
    monkeypatch.setenv("NGON_TOLERANCE", "1e-7")
    monkeypatch.setenv("NGON_LOG_LEVEL", "DEBUG")
    settings = get_settings()
    assert settings.tolerance == 1e-7
    assert settings.log_level == "DEBUG"
    get_settings.cache_clear()

    with pytest.raises(ValidationError):
        Settings(tolerance=-1.0)
    with pytest.raises(ValidationError):
        Settings(tolerance=float("nan"))
    with pytest.raises(ValidationError):
        Settings(log_level="loud")
    assert Settings(log_level="info").log_level == "INFO"

"""
命令行入口

子命令:
  verify     跑验证套件，写 JSON 报告
  figure     画正 n 边形 + 同心圆 + 竖线 + f 的图像（SVG）
  fit        判断给定的竖直直线能否承载一个正 n 边形
  chebyshev  打印 T_n 与 D_n 的精确系数
  catalan    打印 T_m(1/2x)/T_{m-1}(1/2x) 的系数与卡特兰数的对照表

退出码: 0 成功；1 用法错误；2 检验失败 / 不可行；3 I/O 错误
"""

import argparse
import json
import re
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from loguru import logger
from pydantic import ValidationError

from src.algebra.chebyshev import (
    catalan_limit_errors,
    catalan_numbers,
    catalan_ratio_coefficients,
    chebyshev_t,
    dickson,
)
from src.config import get_settings
from src.render.svg import FigureSpec, write_figure
from src.utils.errors import NgonError, ParameterError
from src.utils.logger import setup_logger
from src.verify.fitting import fit_regular_ngon
from src.verify.suite import SuiteConfig, VerificationSuite, write_report

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILED = 2
EXIT_IO = 3

_RANGE_PATTERN = re.compile(r"^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+))?\s*$")


class _ArgumentParser(argparse.ArgumentParser):
    """用法错误抛出 ParameterError（统一退出码1），而不是直接 sys.exit(2)"""

    def error(self, message):
        raise ParameterError(f"{self.prog}: {message}")


def parse_n_range(text: str) -> Tuple[int, int]:
    """
    解析 "3..8" 或 "5"

    Returns:
        (n_min, n_max)
    """
    match = _RANGE_PATTERN.match(text)
    if not match:
        raise ParameterError(f"无法解析 n 的范围: {text!r}（格式 a..b）")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) is not None else lo
    return lo, hi


def parse_lines(text: str) -> List[float]:
    """解析逗号分隔的实数"""
    values = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            values.append(float(token))
        except ValueError:
            raise ParameterError(f"无法解析直线位置: {token!r}") from None
    return values


def _format_coefficients(coefficients: Sequence) -> str:
    # 精确系数都是整数
    return "[" + ", ".join(str(c.numerator) if c.denominator == 1 else str(c) for c in coefficients) + "]"


def cmd_verify(config: SuiteConfig) -> int:
    """
    运行验证套件并写报告

    Returns:
        0 全部通过；2 存在失败（报告照常写出）；写文件失败时抛 OSError
    """
    suite = VerificationSuite(config)
    results = suite.run()
    write_report(results, config.output_path)

    stats = VerificationSuite.get_stats(results)
    failed = sum(entry["failed"] for entry in stats.values())
    print(f"{'check':<28}{'total':>7}{'failed':>8}{'max residual':>16}")
    for name, entry in sorted(stats.items()):
        print(f"{name:<28}{entry['total']:>7}{entry['failed']:>8}{entry['max_residual']:>16.3e}")
    print(f"\n{len(results)} results, {failed} failed → {config.output_path}")
    return EXIT_OK if failed == 0 else EXIT_FAILED


def cmd_figure(spec: FigureSpec, output_path: str) -> int:
    write_figure(spec, output_path)
    print(output_path)
    return EXIT_OK


def cmd_fit(lines: Sequence[float], tol: float) -> int:
    """
    打印拟合结果（JSON）

    Returns:
        0 可行；2 不可行
    """
    result = fit_regular_ngon(lines, tol=tol)
    print(json.dumps(result.to_record(), ensure_ascii=False))
    return EXIT_OK if result.feasible else EXIT_FAILED


def cmd_chebyshev(n: int) -> int:
    """打印 T_n 与 D_n（升幂排列）"""
    if n < 1:
        raise ParameterError(f"n 必须 ≥ 1，当前: {n}")
    print(f"T_{n} = {_format_coefficients(chebyshev_t(n).coefficients)}")
    print(f"D_{n} = {_format_coefficients(dickson(n).coefficients)}")
    return EXIT_OK


def cmd_catalan(m: int, terms: int) -> int:
    """
    每个 x^{2j-1} 系数的精确值、小数值、极限 -c_{j-1}，以及 |q - (-c_{j-1})|
    """
    coefficients = catalan_ratio_coefficients(m, terms)
    targets = [-c for c in catalan_numbers(terms)]
    errors = catalan_limit_errors(m, terms)
    print(f"{'j':>3}  {'exact':>24}  {'decimal':>22}  {'target':>10}  {'error':>22}")
    for j, (q, target, err) in enumerate(zip(coefficients, targets, errors), start=1):
        print(f"{j:>3}  {str(q):>24}  {float(q):>22.15g}  {target:>10}  {float(err):>22.15g}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = _ArgumentParser(prog="ngon", description="正 n 边形投影多项式的验证工具")
    parser.add_argument("--verbose", action="store_true", help="输出调试日志和完整异常栈")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    verify = sub.add_parser("verify", help="运行验证套件")
    verify.add_argument("--n", default="3..8", help="n 的范围，例如 3..8")
    verify.add_argument("--samples", type=int, default=10, help="每个 n 的随机样本数")
    verify.add_argument("--seed", type=int, default=0, help="随机种子（默认0）")
    verify.add_argument("--tol", type=float, default=settings.tolerance, help="容差")
    verify.add_argument("--out", default=str(Path(settings.report_dir) / "report.json"),
                        help="JSON 报告路径")

    figure = sub.add_parser("figure", help="生成 SVG 插图")
    figure.add_argument("--n", type=int, required=True)
    figure.add_argument("--theta", type=float, default=0.0)
    figure.add_argument("--no-curve", action="store_true", help="不画 f 的图像")
    figure.add_argument("--no-circles", action="store_true")
    figure.add_argument("--no-lines", action="store_true")
    figure.add_argument("--width", type=int, default=600)
    figure.add_argument("--height", type=int, default=600)
    figure.add_argument("--out", default=None, help="默认 ngon-<n>.svg")

    fit = sub.add_parser("fit", help="竖直直线上的正 n 边形")
    fit.add_argument("--lines", required=True, help="逗号分隔的 x 坐标")
    fit.add_argument("--tol", type=float, default=1e-8, help="相对容差")

    cheb = sub.add_parser("chebyshev", help="打印 T_n 与 D_n 的系数")
    cheb.add_argument("--n", type=int, required=True)

    catalan = sub.add_parser("catalan", help="洛朗级数系数与卡特兰数")
    catalan.add_argument("--m", type=int, required=True)
    catalan.add_argument("--terms", type=int, required=True)
    return parser


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "verify":
        n_min, n_max = parse_n_range(args.n)
        config = SuiteConfig(
            n_min=n_min,
            n_max=n_max,
            samples_per_n=args.samples,
            seed=args.seed,
            tolerance=args.tol,
            output_path=args.out,
        )
        return cmd_verify(config)
    if args.command == "figure":
        spec = FigureSpec(
            n=args.n,
            theta=args.theta,
            show_polynomial_curve=not args.no_curve,
            show_circles=not args.no_circles,
            show_lines=not args.no_lines,
            width_px=args.width,
            height_px=args.height,
        )
        return cmd_figure(spec, args.out or f"ngon-{args.n}.svg")
    if args.command == "fit":
        return cmd_fit(parse_lines(args.lines), args.tol)
    if args.command == "chebyshev":
        return cmd_chebyshev(args.n)
    return cmd_catalan(args.m, args.terms)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    CLI 主函数

    Args:
        argv: 参数列表（默认 sys.argv[1:]）

    Returns:
        退出码
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    # 解析前就要配置好日志，解析本身也可能出错
    verbose = "--verbose" in argv
    setup_logger(verbose=verbose)
    try:
        # 环境变量非法时按用法错误处理
        setup_logger(get_settings().log_level, verbose=verbose)
        args = build_parser().parse_args(argv)
        return _dispatch(args)
    except (ParameterError, ValidationError) as e:
        if verbose:
            logger.exception("usage error")
        print(f"❌ 用法错误: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        if verbose:
            logger.exception("I/O error")
        print(f"❌ I/O 错误: {e}", file=sys.stderr)
        return EXIT_IO
    except NgonError as e:
        if verbose:
            logger.exception("computation failed")
        print(f"❌ 计算失败: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

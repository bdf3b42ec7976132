"""
生成三张插图

用法：
    python scripts/make_figures.py [输出目录]

- 正三角形：两条竖直切线穿过 f 的极值点
- 正方形：多出一条过中心的竖线
- 正五边形：两个同心圆，每个被两条竖线相切
"""
import sys
from pathlib import Path

# 添加项目根目录到路径
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.render.svg import FigureSpec, write_figure
from src.utils.logger import setup_logger

FIGURES = [
    ("triangle.svg", FigureSpec(n=3, theta=0.0)),
    ("square.svg", FigureSpec(n=4, theta=0.2)),
    ("pentagon.svg", FigureSpec(n=5, theta=0.3)),
]


def make_figures(output_dir: Path) -> None:
    """生成全部插图"""
    print("=" * 60)
    print("生成插图")
    print("=" * 60)

    output_dir.mkdir(parents=True, exist_ok=True)
    for filename, spec in FIGURES:
        path = output_dir / filename
        write_figure(spec, str(path))
        print(f"✅ n={spec.n}, θ={spec.theta}: {path}")


if __name__ == "__main__":
    setup_logger("INFO")
    make_figures(Path(sys.argv[1]) if len(sys.argv) > 1 else project_root / "figures")

"""
可视化验证报告
需要安装：pip install matplotlib

用法: python tests/visualize_results.py [report.json]
"""

import json
import sys
from collections import defaultdict

import matplotlib
import matplotlib.pyplot as plt

# 设置中文字体
matplotlib.rcParams['font.sans-serif'] = ['Arial Unicode MS', 'SimHei']
matplotlib.rcParams['axes.unicode_minus'] = False

# 残差为0时画在这个位置（对数刻度）
RESIDUAL_FLOOR = 1e-18


def load_results(filename="report.json"):
    """加载验证报告"""
    with open(filename, 'r', encoding='utf-8') as f:
        return json.load(f)


def plot_residual_ratio(records):
    """每种检验的 残差/容差，按 n 展开"""
    fig, ax = plt.subplots(figsize=(12, 6))

    by_check = defaultdict(list)
    for record in records:
        if record['residual'] is None:
            continue
        ratio = max(record['residual'], RESIDUAL_FLOOR) / record['tolerance']
        by_check[record['check']].append((record['n'], ratio))

    for check, points in sorted(by_check.items()):
        ns = [n for n, _ in points]
        ratios = [r for _, r in points]
        ax.scatter(ns, ratios, s=12, alpha=0.6, label=check)

    ax.axhline(1.0, color='red', linestyle='--', linewidth=1)
    ax.set_xlabel('n')
    ax.set_ylabel('残差 / 容差')
    ax.set_title('各检验的残差（红线以下为通过）')
    ax.set_yscale('log')
    ax.legend(fontsize=8)
    ax.grid(alpha=0.3)

    plt.tight_layout()
    plt.savefig('residual_ratio.png', dpi=300)
    print("残差图已保存: residual_ratio.png")


def plot_failures(records):
    """每种检验的失败次数"""
    fig, ax = plt.subplots(figsize=(12, 6))

    totals = defaultdict(int)
    failures = defaultdict(int)
    for record in records:
        totals[record['check']] += 1
        failures[record['check']] += 0 if record['pass'] else 1

    checks = sorted(totals)
    ax.bar(checks, [totals[c] for c in checks], label='总数', alpha=0.4)
    ax.bar(checks, [failures[c] for c in checks], label='失败', color='red')
    ax.set_ylabel('次数')
    ax.set_title('各检验的运行次数与失败次数')
    ax.set_xticks(range(len(checks)))
    ax.set_xticklabels(checks, rotation=30, ha='right')
    ax.legend()
    ax.grid(axis='y', alpha=0.3)

    plt.tight_layout()
    plt.savefig('failures.png', dpi=300)
    print("失败统计图已保存: failures.png")


def main():
    """主函数"""
    records = load_results(sys.argv[1] if len(sys.argv) > 1 else "report.json")

    print("正在生成可视化图表...")
    plot_residual_ratio(records)
    plot_failures(records)
    print("\n图表生成完成！")


if __name__ == "__main__":
    main()

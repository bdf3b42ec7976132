"""
性质测试（hypothesis）
"""
import math
import sys
from pathlib import Path

from hypothesis import given, settings
from hypothesis import strategies as st

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.algebra.polynomial import critical_points
from src.geometry.models import RegularNgon
from src.verify.theorems import (
    check_center_root,
    check_circle_pairing,
    check_closed_form,
    check_extreme_tangency,
    check_rotation_invariance,
)

thetas = st.floats(min_value=0.0, max_value=2 * math.pi, allow_nan=False)
radii = st.floats(min_value=0.1, max_value=10.0, allow_nan=False)
centers = st.floats(min_value=-5.0, max_value=5.0, allow_nan=False)
sides = st.integers(min_value=3, max_value=12)


@settings(max_examples=60, deadline=None)
@given(n=sides, theta=thetas, radius=radii, center_x=centers)
def test_tangency_theorems(n, theta, radius, center_x):
    """竖线与同心圆相切"""
    assert check_extreme_tangency(n, theta, radius, center_x).passed
    assert check_circle_pairing(n, theta, radius, center_x).passed


@settings(max_examples=60, deadline=None)
@given(n=sides, theta1=thetas, theta2=thetas, radius=radii, center_x=centers)
def test_rotation_only_moves_constant_term(n, theta1, theta2, radius, center_x):
    assert check_rotation_invariance(n, theta1, theta2, radius, center_x).passed


@settings(max_examples=60, deadline=None)
@given(n=sides, theta=thetas, radius=radii, center_x=centers)
def test_closed_form_and_center(n, theta, radius, center_x):
    assert check_closed_form(n, theta, radius, center_x, tol=1e-9).passed
    assert check_center_root(n, theta, radius, center_x).passed


@settings(max_examples=60, deadline=None)
@given(n=sides, theta=st.floats(min_value=-100.0, max_value=100.0, allow_nan=False))
def test_theta_canonical(n, theta):
    canonical = RegularNgon(n=n, theta=theta).theta
    assert 0 <= canonical < 2 * math.pi / n


@settings(max_examples=100, deadline=None)
@given(st.lists(st.floats(min_value=-100.0, max_value=100.0, allow_nan=False),
                min_size=2, max_size=12))
def test_critical_points_interlace(roots):
    """n 个根给出 n-1 个 f' 根，全部落在 [min, max] 内且有序"""
    crit = critical_points(roots)
    assert len(crit) == len(roots) - 1
    assert crit == sorted(crit)
    assert min(roots) - 1e-9 <= crit[0]
    assert crit[-1] <= max(roots) + 1e-9

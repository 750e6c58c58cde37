import pytest

from tuttekit.errors import WalkError
from tuttekit.gadgets import effective_weight
from tuttekit.rational import Rat
from tuttekit.walks import ShiftPoint, hyperbola_walk


def test_shift_point_consistency():
    p = ShiftPoint.from_qy(6, 2)
    assert p.x == 7 and p.alpha == 1
    with pytest.raises(ValueError):
        ShiftPoint(Rat(2), Rat(2), Rat(6), Rat(1))


def test_case1_walk_frozen():
    # q=6, base y=2 -> squared base y1=4, x1=3; T=5, pi=1/10
    plan, impl = hyperbola_walk(6, {"y1": 2}, Rat(5), Rat(1, 10))
    assert plan.m == 6
    assert plan.digits == [1, 0, 1, 0, 0, 1]
    assert plan.y_values[0] == 4
    assert plan.y_values[1] == Rat(7, 4)
    assert plan.y_final == Rat(5872, 1183)
    y = 1 + impl.effective_weight
    assert Rat(49, 10) <= y <= 5
    plan.validate()


def test_case1_negative_target_frozen():
    plan, impl = hyperbola_walk(6, {"y1": 2, "y3": -2}, Rat(-5), Rat(1, 10))
    y = 1 + impl.effective_weight
    assert Rat(-5) <= y <= Rat(-49, 10)
    assert plan.negative_wrap is not None
    assert y == Rat(-12943, 2600)


def test_case2_bootstrap_frozen():
    # q=-1 with y'_1=2 forces the bootstrap through y'_2=-1/2
    plan, impl = hyperbola_walk(-1, {"y1": 2, "y2": Rat(-1, 2)}, Rat(3), Rat(1, 10))
    boot = plan.bootstrap
    assert boot is not None
    assert boot["xi"] == Rat(1, 3)
    assert boot["jhat"] == 3
    assert boot["yhat"] == Rat(71, 98)
    assert boot["k"] == 4
    assert plan.x1 < -1
    y = 1 + impl.effective_weight
    assert Rat(29, 10) <= y <= 3


def test_walk_effective_weight_recomputes(rng):
    for q, base in [(6, {"y1": 2}), (7, {"y1": Rat(5, 2)})]:
        for _ in range(8):
            T = Rat(rng.randint(2, 40), rng.randint(1, 7))
            if T <= 1:
                continue
            pi = Rat(1, rng.choice([10, 100, 1000]))
            plan, impl = hyperbola_walk(q, base, T, pi)
            w, _ = effective_weight(impl.gadget, Rat(q))
            assert w == impl.effective_weight
            assert T - pi <= 1 + w <= T


def test_case2_random_targets(rng):
    base = {"y1": 2, "y2": Rat(-1, 2), "y3": -2}
    for _ in range(6):
        T = Rat(rng.randint(3, 20), 1) + Rat(1, rng.randint(2, 9))
        pi = Rat(1, rng.choice([50, 500]))
        plan, impl = hyperbola_walk(-1, base, T, pi)
        assert T - pi <= 1 + impl.effective_weight <= T


def test_negative_target_interval_side():
    plan, impl = hyperbola_walk(6, {"y1": 2, "y3": -2}, Rat(-100), Rat(1, 100))
    y = 1 + impl.effective_weight
    assert Rat(-100) <= y <= Rat(-100) + Rat(1, 100)


def test_walk_errors():
    with pytest.raises(WalkError):
        hyperbola_walk(6, {"y1": 2}, Rat(1, 2), Rat(1, 10))  # |T| <= 1
    with pytest.raises(WalkError):
        hyperbola_walk(6, {"y1": 2}, Rat(5), Rat(2))  # pi > 1
    with pytest.raises(WalkError):
        hyperbola_walk(6, {}, Rat(5), Rat(1, 10))  # missing base
    with pytest.raises(WalkError):
        hyperbola_walk(6, {"y1": 2}, Rat(-5), Rat(1, 10))  # no y3
    with pytest.raises(WalkError, match="unreachable"):
        hyperbola_walk(6, {"y1": 2, "y3": -2}, Rat(-3, 2), Rat(1, 100))
    with pytest.raises(WalkError):
        hyperbola_walk(3, {"y1": 2}, Rat(5), Rat(1, 10))  # q in [0,5]


def test_digits_are_exact_not_float():
    # a target engineered so naive float logs would round the digit wrong:
    # y_j^d == rem exactly at the boundary must be accepted (<=)
    plan, impl = hyperbola_walk(6, {"y1": 2}, Rat(4), Rat(1, 2))
    assert plan.digits[0] == 1  # 4^1 == T exactly
    assert 1 + impl.effective_weight == 4


def test_edge_growth_with_tolerance():
    sizes = []
    for exp in (2, 6, 20):
        pi = Rat(1, 10**exp)
        _, impl = hyperbola_walk(6, {"y1": 2}, Rat(5), pi)
        sizes.append(impl.gadget.edge_count())
    assert sizes[0] < sizes[1] < sizes[2]
    # quadratic-in-log(1/pi) cap (series-of-thickenings structure)
    for exp, size in zip((2, 6, 20), sizes):
        m_bound = 4 * (exp + 2) ** 2
        assert size <= 2 * m_bound * 8

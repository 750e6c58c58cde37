import pytest

from tuttekit.errors import PreconditionError
from tuttekit.gadgets import effective_weight
from tuttekit.params import implement_a, implement_b, implement_beta, param_set
from tuttekit.rational import Rat


def f_cubic(t):
    return t**3 + 3 * t**2


def test_case1_constants_q7():
    ps = param_set(7, 16, 18, 7)
    assert ps.case == "q>5"
    assert ps.chi == Rat(1, 3)
    assert ps.eta.is_point and ps.eta.lo == Rat(3, 4)
    assert ps.a_minus.lo == Rat(1, 2)
    assert ps.a_plus.hi == 7
    assert ps.b_minus == 7
    assert ps.b_plus == 3430
    assert ps.nu == 48 - 18 - 14 == 16
    assert ps.nu >= (5 * 16) // 8


def test_case2_enclosures_q_minus1():
    ps = param_set(-1, 16, 18, 7)
    assert ps.case == "q<0"
    assert Rat(53, 1000) < ps.eta.lo <= ps.eta.hi < Rat(55, 1000)
    assert Rat(103, 1000) < ps.ystar.lo <= ps.ystar.hi < Rat(105, 1000)
    assert ps.b_minus == Rat(1, 3)
    assert ps.b_plus == Rat(10, 3)
    # directed: the enclosed roots really straddle their equations
    g = lambda y: -y * (3 + y) ** 2
    assert g(ps.eta.lo) > Rat(-1, 2) > g(ps.eta.hi)
    assert g(ps.ystar.lo) > Rat(-1) > g(ps.ystar.hi)


def test_ledger_invariants_paper_grade():
    for q in (6, 7, 100, Rat(23, 4), -1, -2, Rat(-1, 3)):
        for n in (8, 16):
            ps = param_set(q, n, 9 * n // 8, 5 * n // 8)
            ps.validate()
            assert 0 < ps.delta < ps.eps < ps.chi <= 1
            assert ps.delta * 6 * ps.a_star.hi <= ps.eps * ps.eta.lo
            assert ps.L.hi <= 1 and ps.R >= 1


def test_relaxed_mode_budget():
    ps = param_set(6, 16, 18, 7, relaxed_eps=Rat(1, 10), relaxed_delta=Rat(1, 2**20))
    assert ps.relaxed and ps.eps == Rat(1, 10)
    with pytest.raises(PreconditionError):
        param_set(6, 16, 18, 7, relaxed_eps=Rat(1, 10), relaxed_delta=Rat(1, 100))
    with pytest.raises(PreconditionError):
        param_set(6, 16, 18, 7, relaxed_eps=Rat(1, 10))  # needs both


def test_shape_preconditions():
    for bad_q in (0, 3, 5, Rat(9, 2)):
        with pytest.raises(PreconditionError):
            param_set(bad_q, 16, 18, 7)
    with pytest.raises(PreconditionError):
        param_set(6, 16, 17, 7)  # m != (9/8) n
    with pytest.raises(PreconditionError):
        param_set(6, 16, 18, 11)  # K > (5/8) n


def test_implement_beta_examples():
    i1 = implement_beta(Rat(-1, 2), Rat(1, 100), q=6)
    assert i1.effective_weight == Rat(-127, 128)
    assert i1.gadget.k == 7
    i2 = implement_beta(-1, Rat(1, 100), q=6)
    assert i2.effective_weight == -1
    i3 = implement_beta(Rat(-3, 2), Rat(1, 100), q=-1)
    assert i3.effective_weight == Rat(-129, 128)
    assert abs(1 + i3.effective_weight) == Rat(1, 128) < Rat(1, 100)
    # minimality: k=6 would miss
    assert abs(1 + ((1 + Rat(-3, 2)) ** 6 - 1)) >= Rat(1, 100)


def test_implement_beta_preconditions():
    with pytest.raises(PreconditionError):
        implement_beta(Rat(-5, 2), Rat(1, 100), q=6)
    with pytest.raises(PreconditionError):
        implement_beta(Rat(-1, 2), Rat(1, 100))  # q required


def test_implement_a_case1():
    ps = param_set(6, 16, 18, 7, relaxed_eps=Rat(1, 10), relaxed_delta=Rat(1, 2**20))
    impl = implement_a(6, ps, {"y1": 2, "y3": -2})
    assert Rat(121, 100) < impl.target < Rat(243, 200)
    a = impl.effective_weight
    assert Rat(6) + Rat(1, 10) < f_cubic(a) <= Rat(6) + Rat(2, 10)
    assert impl.relaxed
    w, _ = effective_weight(impl.gadget, Rat(6))
    assert w == a


def test_implement_a_case2():
    ps = param_set(
        -1, 16, 18, 7, relaxed_eps=Rat(1, 10), relaxed_delta=Rat(1, 2**25)
    )
    impl = implement_a(-1, ps, {"y1": 2, "y2": Rat(-1, 2), "y3": -2})
    a = impl.effective_weight
    assert Rat(-1) + Rat(1, 10) < f_cubic(a) <= Rat(-1) + Rat(2, 10)
    assert a <= -(3 + ps.eta.lo)
    assert ps.a_minus.lo <= abs(a) <= ps.a_plus.hi


def test_implement_a_paper_grade_case1():
    ps = param_set(6, 16, 18, 7)
    impl = implement_a(6, ps, {"y1": 2, "y3": -2})
    a = impl.effective_weight
    assert Rat(6) + ps.eps < f_cubic(a) <= Rat(6) + 2 * ps.eps


def test_window_boundary_rejected():
    # the acceptance window is strict on the left: f(a) = q + eps fails
    ps = param_set(6, 16, 18, 7, relaxed_eps=Rat(1, 10), relaxed_delta=Rat(1, 2**20))
    q, eps = Rat(6), ps.eps
    a = Rat(121, 100)
    assert not (q + eps < q + eps <= q + 2 * eps)  # boundary predicate itself
    assert q + eps < f_cubic(a) <= q + 2 * eps  # sanity: interior point passes


def test_implement_b_case1():
    c = Rat(121, 100) ** 2 + 3 * Rat(121, 100) + 6
    assert c == Rat(110941, 10000)
    impl = implement_b(6, Rat(121, 100), Rat(1, 1000), {"y1": 2, "y3": -2})
    b = impl.effective_weight
    assert -c - Rat(1, 1000) <= b <= -c + Rat(1, 1000)
    assert 6 <= abs(b) <= 10 * 6**3
    assert c - 1 >= 6  # B- = q <= c - 1 for accepted a


def test_implement_b_delta_one():
    c = Rat(6, 5) ** 2 + 3 * Rat(6, 5) + 6
    assert c == Rat(276, 25)
    impl = implement_b(6, Rat(6, 5), 1, {"y1": 2, "y3": -2})
    assert -c - 1 <= impl.effective_weight <= -c + 1


def test_implement_b_case2():
    ps = param_set(
        -1, 16, 18, 7, relaxed_eps=Rat(1, 10), relaxed_delta=Rat(1, 2**25)
    )
    base = {"y1": 2, "y2": Rat(-1, 2), "y3": -2}
    a = implement_a(-1, ps, base).effective_weight
    c = a * a + 3 * a - 1
    assert -Rat(7, 3) <= c <= -Rat(2, 3)
    impl = implement_b(-1, a, Rat(1, 50), base)
    b = impl.effective_weight
    assert -c - Rat(1, 50) <= b <= -c + Rat(1, 50)
    assert Rat(1, 3) <= abs(b) <= Rat(10, 3)

"""Point classification and the grid map."""

import pytest

from tuttekit.classify import (
    MapRecord,
    PointClass,
    REGION_COLOURING_BRANCH,
    classify_point,
    map_region,
    records_to_tsv,
)
from tuttekit.errors import PreconditionError
from tuttekit.rational import Rat

HALF = Rat(1, 2)


@pytest.mark.parametrize(
    "x,y,exact,approx,token",
    [
        (Rat(2), Rat(2), "FP-easy", "exact-easy", "H1"),
        (Rat(0), Rat(-1), "FP-easy", "exact-easy", "H2"),
        (Rat(-2), Rat(-2), "#P-hard", "no-FPRAS(negQ-q>5)", "independent-set"),
        (Rat(-5), HALF, "#P-hard", "no-FPRAS(q=3-branch)", "3-colouring"),
        (Rat(-3), Rat(0), "#P-hard", "open", "open"),
    ],
)
def test_fixture_points(x, y, exact, approx, token):
    pc = classify_point(x, y)
    assert pc.exact_status == exact
    assert pc.approx_status == approx
    assert token in pc.citation


def test_special_points_easy():
    for x, y in [(1, 1), (-1, -1)]:
        pc = classify_point(Rat(x), Rat(y))
        assert pc.approx_status == "exact-easy"
        assert "special point" in pc.citation


def test_easy_set_boundaries():
    # q = 2 hyperbola passes through (3, 3/2); one step off it is hard
    assert classify_point(Rat(3), Rat(3, 2)).exact_status == "FP-easy"
    assert classify_point(Rat(3), Rat(5, 2)).exact_status == "#P-hard"
    assert classify_point(Rat(1), Rat(-1)).exact_status == "#P-hard"


def test_strip_points_carry_certificates():
    for x, y in [(Rat(3), Rat(-2)), (Rat(-2), Rat(3))]:
        pc = classify_point(x, y)
        assert pc.certificate is not None
        pc.certificate.validate()
        assert pc.region == pc.certificate.region


def test_colouring_branch_has_no_certificate():
    pc = classify_point(Rat(-5), HALF)
    assert pc.region == REGION_COLOURING_BRANCH
    assert pc.certificate is None


def test_grid_shape_and_census():
    records = map_region((Rat(-5), Rat(5)), (Rat(-5), Rat(5)), HALF)
    assert len(records) == 441
    census = {}
    for rec in records:
        key = rec.point_class.approx_status
        census[key] = census.get(key, 0) + 1
    assert census == {
        "open": 201,
        "no-FPRAS(negQ-q>5)": 90,
        "no-FPRAS(x>1&y<-1)": 64,
        "no-FPRAS(y>1&x<-1)": 64,
        "exact-easy": 16,
        "no-FPRAS(q=3-branch)": 6,
    }


def test_grid_row_major_order_and_q():
    records = map_region((Rat(0), Rat(1)), (Rat(0), Rat(1)), HALF)
    pts = [(rec.x, rec.y) for rec in records]
    assert pts == sorted(pts)  # x outer, y inner
    for rec in records:
        assert rec.q == (rec.x - 1) * (rec.y - 1)


def test_swap_symmetry():
    records = map_region((Rat(-5), Rat(5)), (Rat(-5), Rat(5)), Rat(1))
    by_point = {(rec.x, rec.y): rec.point_class for rec in records}
    swap = {
        "no-FPRAS(x>1&y<-1)": "no-FPRAS(y>1&x<-1)",
        "no-FPRAS(y>1&x<-1)": "no-FPRAS(x>1&y<-1)",
    }
    for (x, y), pc in by_point.items():
        mirror = by_point[(y, x)]
        assert mirror.exact_status == pc.exact_status
        assert mirror.approx_status == swap.get(
            pc.approx_status, pc.approx_status
        )


def test_hard_region_records_validate():
    records = map_region((Rat(-5), Rat(5)), (Rat(-5), Rat(5)), Rat(1))
    checked = 0
    for rec in records:
        pc = rec.point_class
        if pc.region in (None, REGION_COLOURING_BRANCH):
            continue
        if Rat(0) <= rec.q <= Rat(5):
            continue
        assert pc.certificate is not None
        pc.certificate.validate()
        checked += 1
    assert checked > 50


def test_tsv_deterministic():
    args = ((Rat(-2), Rat(2)), (Rat(-2), Rat(2)), HALF)
    first = records_to_tsv(map_region(*args))
    second = records_to_tsv(map_region(*args))
    assert first == second
    lines = first.splitlines()
    assert len(lines) == 81
    assert all(line.count("\t") == 5 for line in lines)
    assert first.endswith("\n")
    assert records_to_tsv([]) == ""


def test_map_rejects_bad_grids():
    with pytest.raises(PreconditionError):
        map_region((Rat(0), Rat(1)), (Rat(0), Rat(1)), Rat(0))
    with pytest.raises(PreconditionError):
        map_region((Rat(0), Rat(1)), (Rat(0), Rat(1)), Rat(-1, 2))
    with pytest.raises(PreconditionError):
        map_region((Rat(1), Rat(0)), (Rat(0), Rat(1)), Rat(1))


def test_point_class_guard_rails():
    with pytest.raises(ValueError):
        PointClass("easy", "open", "c")
    with pytest.raises(ValueError):
        PointClass("#P-hard", "exact-easy", "c")
    with pytest.raises(ValueError):
        PointClass("#P-hard", "no-FPRAS(bogus)", "c")
    pc = PointClass("#P-hard", "no-FPRAS(x>1&y<-1)", "c")
    assert pc.region == "x>1&y<-1"
    assert PointClass("#P-hard", "open", "c").region is None


def test_map_record_checks_q():
    pc = classify_point(Rat(3), Rat(3))
    with pytest.raises(ValueError):
        MapRecord(Rat(3), Rat(3), Rat(5), pc)

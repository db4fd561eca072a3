from fractions import Fraction
from pathlib import Path

import pytest

import legprod

FIXTURES = Path(__file__).resolve().parents[2] / "fixtures"


def test_whitney_products():
    w1 = legprod.whitney(1, 1)
    assert w1["chords"][0]["sign"] == -1
    assert w1["chords"][0]["action"] == Fraction(1)
    assert legprod.chord_sum_tb(w1) == -1
    assert legprod.product_tb(w1, legprod.whitney(2, 2)) == 2
    assert legprod.product_tb(legprod.whitney(1, 2), legprod.whitney(2, 1)) == 0
    assert legprod.product_tb(w1, legprod.whitney(4, Fraction(5, 2))) == -2


def test_perturbed_torus():
    chords, model = legprod.perturb_product(legprod.whitney(1, 1), legprod.whitney(1, 2))
    assert sorted(c["action"] for c in chords) == [1, 1, 1, 2, 2, 3]
    assert sum(c["sign"] for c in chords) == 0
    assert legprod.validate(model) == []
    assert legprod.chord_sum_tb(model) == 0


def test_errors_carry_kind():
    with pytest.raises(legprod.LegprodError) as info:
        legprod.product_tb(legprod.whitney(1, 1), legprod.whitney(2, 1))
    assert info.value.kind == "ActionCollision"
    with pytest.raises(legprod.LegprodError) as info:
        legprod.triple_tau(1, 2, 3)
    assert info.value.kind == "DegenerateTriple"
    with pytest.raises(legprod.LegprodError) as info:
        legprod.knot_fixture("r1_unknot", {"b1": 1, "b2": 1, "b3": 5})
    assert info.value.kind == "ConstraintViolated"


def test_fixture_triple_extremes():
    k1, _ = legprod.knot_fixture("stabilized_unknot", {"a1": 5, "a2": 5})
    k2, _ = legprod.knot_fixture("r1_unknot", {"b1": 10, "b2": 10, "b3": 3})
    k3, sys = legprod.knot_fixture("trefoil", {"c1": 10, "c2": 10, "c3": 3, "c4": 3, "c5": 3})
    assert legprod.triple_tb(k1, k2, k3) == -28
    assert legprod.triple_vs_iterated(k1, k2, k3) == (-28, -28, True)
    assert legprod.is_feasible(sys)


def test_family_and_frontspin():
    values = legprod.infinite_family_tb(
        legprod.whitney(1, 1), legprod.whitney(2, 2), "w", 3, 3, Fraction(3, 2), 1
    )
    assert values == [2, 4, 6, 8]
    assert legprod.chord_sum_tb(legprod.frontspin(legprod.whitney(2, 1))) == 0


def test_diagrams_and_feasibility():
    text = (FIXTURES / "trefoil.pd").read_text()
    assert legprod.diagram_signs(text) == [-1, -1, 1, 1, 1]
    assert legprod.diagram_tb(text) == 1
    assert len(legprod.diagram_faces(text)) == 7
    sys = legprod.area_constraints((FIXTURES / "r1_unknot.pd").read_text(), "b")
    point = legprod.sample_point(sys)
    assert point["b1"] > point["b3"] > 0 and point["b2"] > point["b3"]
    unit = {
        "vars": ["x"],
        "constraints": [
            {"lhs": {"x": 1}, "rel": ">", "rhs": 0},
            {"lhs": {"x": -1}, "rel": ">", "rhs": -1},
        ],
    }
    assert legprod.sample_point(unit) == {"x": Fraction(1, 2)}
    unit["constraints"].append({"lhs": {"x": 1}, "rel": ">", "rhs": 2})
    assert legprod.sample_point(unit) is None
    assert not legprod.is_feasible(unit)


def test_search_is_deterministic():
    fixtures = ["stabilized_unknot", "r1_unknot", "trefoil"]
    a = legprod.tb_range_search(fixtures, 40, 9)
    assert a == legprod.tb_range_search(fixtures, 40, 9)
    assert a["min_found"] == -28 and a["max_found"] == 24

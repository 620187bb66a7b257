"""Groupoid axioms, constructors, counting identities, JSON schema."""

import pytest

from grpd import groupoid as gpd
from grpd.errors import violation_rules


def test_trivial_group_valid():
    g = gpd.cyclic_group(1)
    assert gpd.validate(g) == []
    assert len(g.objects) == 1 and len(g.morphisms) == 1


def test_z2_z3_from_group():
    z2 = gpd.cyclic_group(2)
    assert gpd.validate(z2) == []
    assert len(z2.morphisms) == 2
    z3 = gpd.cyclic_group(3)
    assert gpd.validate(z3) == []
    assert len(z3.morphisms) == 3


def test_from_group_rejects_non_group():
    elems = ["a", "b"]
    table = {("a", "a"): "a", ("a", "b"): "a", ("b", "a"): "a", ("b", "b"): "a"}
    with pytest.raises(ValueError):
        gpd.from_group(elems, table)


def test_pair_groupoid_shapes():
    with pytest.raises(ValueError):
        gpd.pair_groupoid(0)
    g1 = gpd.pair_groupoid(1)
    assert gpd.validate(g1) == [] and len(g1.morphisms) == 1
    g2 = gpd.pair_groupoid(2)
    assert gpd.validate(g2) == [] and len(g2.morphisms) == 4
    g3 = gpd.pair_groupoid(3)
    assert gpd.validate(g3) == [] and len(g3.morphisms) == 9
    assert g2.dom["(1,2)"] == "2" and g2.cod["(1,2)"] == "1"
    assert g2.inverse["(1,2)"] == "(2,1)"
    assert g2.compose("(1,2)", "(2,1)") == "(1,1)"


def test_broken_inverse_detected():
    g = gpd.cyclic_group(3)
    broken = gpd.FiniteGroupoid(
        g.objects, g.morphisms, g.dom, g.cod,
        {m: m for m in g.morphisms},  # claims every element is its own inverse
        g._compose, g.identity,
    )
    rules = violation_rules(gpd.validate(broken))
    assert rules == {"inverse"}


def test_missing_compose_detected():
    g = gpd.pair_groupoid(2)
    partial = {k: v for k, v in g._compose.items() if k != ("(1,2)", "(2,1)")}
    broken = gpd.FiniteGroupoid(
        g.objects, g.morphisms, g.dom, g.cod, g.inverse, partial, g.identity
    )
    assert "compose" in violation_rules(gpd.validate(broken))


def test_components():
    g = gpd.pair_groupoid(3)
    assert gpd.connected_components(g) == [["1", "2", "3"]]
    two = gpd.disjoint_union(gpd.cyclic_group(2), gpd.cyclic_group(1))
    assert gpd.validate(two) == []
    comps = gpd.connected_components(two)
    assert len(comps) == 2
    # morphisms never cross components
    for m in two.morphisms:
        comp_of = {e: i for i, c in enumerate(comps) for e in c}
        assert comp_of[two.dom[m]] == comp_of[two.cod[m]]


def test_isotropy_and_hom_sets():
    g3 = gpd.pair_groupoid(3)
    for e in g3.objects:
        assert len(gpd.isotropy(g3, e).morphisms) == 1
    for e in g3.objects:
        for f in g3.objects:
            assert len(gpd.hom_set(g3, e, f).morphisms) == 1
    z2 = gpd.cyclic_group(2)
    iso = gpd.isotropy(z2, "*")
    assert len(iso.morphisms) == 2
    assert gpd.validate(iso) == []
    with pytest.raises(KeyError):
        gpd.hom_set(g3, "nope", "1")


def test_counting_identity():
    for g in (gpd.pair_groupoid(2), gpd.cyclic_group(3),
              gpd.disjoint_union(gpd.cyclic_group(2), gpd.cyclic_group(1))):
        report = gpd.is_finite_mor_criterion(g)
        assert bool(report)
        for (e, f), size in report.hom_sizes.items():
            if size:
                assert size == report.isotropy_sizes[e]


def test_inverse_involution():
    for g in (gpd.pair_groupoid(3), gpd.cyclic_group(4)):
        for m in g.morphisms:
            assert g.inverse[g.inverse[m]] == m


def test_validate_passes_on_constructors_exhaustively():
    for g in (gpd.cyclic_group(1), gpd.cyclic_group(2), gpd.cyclic_group(3),
              gpd.pair_groupoid(1), gpd.pair_groupoid(2), gpd.pair_groupoid(3),
              gpd.disjoint_union(gpd.pair_groupoid(2), gpd.cyclic_group(2))):
        assert gpd.validate(g) == []


def test_json_roundtrip_fixpoint():
    g = gpd.pair_groupoid(2)
    d1 = gpd.to_dict(g)
    d2 = gpd.to_dict(gpd.from_dict(d1))
    assert d1 == d2


def test_json_identity_inference():
    d = {
        "objects": ["e"],
        "morphisms": [{"id": "g", "dom": "e", "cod": "e", "inv": "g"}],
        "compose": [["g", "g", "id:e"], ["g", "id:e", "g"], ["id:e", "g", "g"],
                    ["id:e", "id:e", "id:e"]],
    }
    g = gpd.from_dict(d)
    assert "id:e" in g.morphisms
    assert g.identity["e"] == "id:e"
    assert gpd.validate(g) == []

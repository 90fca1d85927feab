from __future__ import annotations

import json

import pytest

from src.errors import ConfigurationError
from src.root_system import Root, RootSystem, build, dumps_table, export_table, load_tables, supported_types
from src.validators import validate_root_system


@pytest.mark.parametrize(
    "label, count, highest, h",
    [
        ("A1", 1, (1,), 2),
        ("A2", 3, (1, 1), 3),
        ("A3", 6, (1, 1, 1), 4),
        ("B2", 4, (2, 1), 4),
        ("B3", 9, (1, 2, 2), 6),
        ("C3", 9, (2, 2, 1), 6),
        ("G2", 6, (3, 2), 6),
    ],
)
def test_positive_roots_and_highest_root(label, count, highest, h):
    rs = build(label)
    assert len(rs.positive_roots) == count
    assert rs.highest_root.coeffs == highest
    assert rs.coxeter_number == h
    assert rs.highest_root.height == h - 1


def test_positive_roots_are_ordered_by_height(b2):
    assert [r.coeffs for r in b2.positive_roots] == [(1, 0), (0, 1), (1, 1), (2, 1)]


def test_simple_reflections_permute_the_other_positive_roots(g2):
    for i in (1, 2):
        alpha = g2.simple_root(i)
        images = {g2.reflect_root(i, r) for r in g2.positive_roots if r != alpha}
        assert all(r.is_positive for r in images)
        assert g2.reflect_root(i, alpha) == -alpha


def test_root_labels():
    assert Root((1, 1)).label == "a1+a2"
    assert Root((2, 1)).label == "2a1+a2"
    assert Root((-1, -1)).label == "-a1-a2"
    assert str(Root((3, 2))) == "3a1+2a2"


def test_zero_vector_is_rejected():
    with pytest.raises(ValueError):
        Root((0, 0))


def test_b2_alpha1_is_short(b2):
    assert b2.norm2(b2.simple_root(1)) < b2.norm2(b2.simple_root(2))
    assert b2.coroot_of(b2.highest_root) == (1, 1)
    assert b2.coroot_of(Root((1, 1))) == (1, 2)


def test_pairing_with_own_coroot_is_two(g2):
    for r in g2.positive_roots:
        assert g2.pair_coroot(r, g2.coroot_of(r)) == 2


def test_coxeter_matrix(a2, b2, g2):
    assert a2.coxeter_matrix_entry(1, 2) == 3
    assert b2.coxeter_matrix_entry(1, 2) == 4
    assert g2.coxeter_matrix_entry(2, 1) == 6
    assert g2.coxeter_matrix_entry(1, 1) == 1


def test_unknown_type_lists_supported_types():
    with pytest.raises(ConfigurationError) as info:
        build("E9")
    assert "A2" in str(info.value)


def test_type_labels_are_case_insensitive():
    assert build("b2") == build("B2")


def test_supported_types():
    assert {"A1", "A2", "A3", "B2", "B3", "C3", "G2"} <= set(supported_types())


def test_validation_catches_a_wrong_listing(a2):
    result = validate_root_system(a2, [[1, 0], [0, 1]])
    assert not result.success
    assert result.counterexample_count == 1


def test_non_square_cartan_matrix_is_rejected():
    with pytest.raises(ConfigurationError):
        RootSystem("X2", [[2, -1], [-1]])


def test_export_round_trip(tmp_path, g2):
    path = tmp_path / "tables.json"
    document = export_table(g2)
    document["types"]["G2X"] = document["types"].pop("G2")
    path.write_text(json.dumps(document))
    tables = load_tables(str(path))
    assert tables["G2X"]["cartan"] == [list(row) for row in g2.cartan]
    assert "A2" in tables
    assert json.loads(dumps_table(g2))["types"]["G2"]["coxeter_number"] == 6


def test_bad_table_document_is_rejected(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"format": "something-else", "version": 1, "types": {}}))
    with pytest.raises(ConfigurationError):
        load_tables(str(path))


@pytest.mark.parametrize(
    "label, d",
    [("A2", (1, 1)), ("B2", (1, 2)), ("G2", (1, 3)), ("B3", (2, 2, 1)), ("C3", (1, 1, 2))],
)
def test_symmetrizer_is_integral_and_symmetrizes(label, d):
    rs = build(label)
    assert rs.symmetrizer == d
    n = rs.rank
    for j in range(n):
        for k in range(n):
            assert rs.cartan[j][k] * d[k] == rs.cartan[k][j] * d[j]

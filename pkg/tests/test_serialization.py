from __future__ import annotations

import json

import pytest

from src.affine import identity, translation
from src.errors import ParseError, PreconditionError
from src.gallery import FoldingPattern, fold_set
from src.root_system import Root
from src.serialization import (
    alcove_from_dict,
    alcove_to_dict,
    dumps,
    gallery_from_dict,
    gallery_to_dict,
    loads_galleries,
    parse_affine_word,
    parse_folds,
    parse_orientation,
    parse_pattern,
    parse_root,
    parse_weyl_word,
)
from src.weyl import weyl_group


@pytest.mark.parametrize(
    "text, coeffs",
    [
        ("a1+a2", (1, 1)),
        ("2a1+a2", (2, 1)),
        ("-a2", (0, -1)),
        (" a1 + a2 ", (1, 1)),
        ("theta", (2, 1)),
        ("[1,1]", (1, 1)),
        ("1 0", (1, 0)),
    ],
)
def test_parse_root_in_b2(b2, text, coeffs):
    assert parse_root(b2, text) == Root(coeffs)


@pytest.mark.parametrize("text", ["a3", "a1 a2", "0,0", "2,1", "x", "1,1,1"])
def test_parse_root_rejects_bad_input(a2, text):
    with pytest.raises(ParseError):
        parse_root(a2, text)


def test_parse_error_reports_the_position(a2):
    with pytest.raises(ParseError) as info:
        parse_root(a2, "a1+a7")
    assert info.value.position == 4
    assert "a1+a7" in str(info.value)


def test_parse_pattern(b2):
    assert parse_pattern(b2, "theta;a2") == FoldingPattern((Root((2, 1)), Root((0, 1))))
    assert parse_pattern(b2, "a1") == FoldingPattern((Root((1, 0)),))


@pytest.mark.parametrize("text, position", [("-a1", 0), ("a1;-a2", 3), ("a1+a2;a2;-2a1-a2", 9)])
def test_parse_pattern_rejects_negative_roots(b2, text, position):
    with pytest.raises(ParseError) as info:
        parse_pattern(b2, text)
    assert info.value.position == position
    assert "positive" in str(info.value)


@pytest.mark.parametrize(
    "text, word",
    [("e", ()), ("", ()), ("s1s2", (1, 2)), ("s1 s2 s1", (1, 2, 1)), ("1,2", (1, 2)), ("2 1", (2, 1))],
)
def test_parse_weyl_word(a2, text, word):
    assert parse_weyl_word(a2, text) == weyl_group(a2).element(word)


def test_parse_weyl_word_special_names(a2):
    W = weyl_group(a2)
    assert parse_weyl_word(a2, "w0") == W.longest
    assert parse_weyl_word(a2, "ID") == W.identity
    assert parse_orientation(a2, "w0").direction == W.longest
    with pytest.raises(ParseError):
        parse_weyl_word(a2, "s3")
    with pytest.raises(ParseError):
        parse_weyl_word(a2, "t1")


def test_parse_affine_word(a2):
    assert parse_affine_word(a2, "s0 s1 s2") == (0, 1, 2)
    assert parse_affine_word(a2, "0,1") == (0, 1)
    assert parse_affine_word(a2, "e") == ()
    with pytest.raises(ParseError):
        parse_affine_word(a2, "s4")


def test_parse_folds():
    assert parse_folds("3,9") == (3, 9)
    assert parse_folds("9 3 3") == (3, 9)
    assert parse_folds("") == ()
    with pytest.raises(ParseError):
        parse_folds("3,x")


def test_alcove_codec(a2):
    a = translation(a2, (2, 1)) * identity(a2)
    data = alcove_to_dict(a)
    assert data["translation"] == [2, 1]
    assert data["chamber"] == "e"
    assert alcove_from_dict(a2, data) == a
    with pytest.raises(ParseError):
        alcove_from_dict(a2, {"translation": [1], "spherical": []})


def test_gallery_document(a2, a2_long_gallery):
    g = fold_set(a2_long_gallery, (3, 9))
    data = gallery_to_dict(g)
    assert data["type"] == "A2"
    assert data["folds"] == [3, 9]
    assert data["pattern"] == ["a1+a2", "a1"]
    assert data["walls"][0] == {"root": [1, 1], "label": "a1+a2", "level": 1}
    assert gallery_from_dict(a2, json.loads(dumps(data))) == g


def test_loads_accepts_single_lists_and_wrapped_documents(a2, a2_long_gallery):
    data = gallery_to_dict(a2_long_gallery)
    assert loads_galleries(a2, json.dumps(data)) == [a2_long_gallery]
    assert loads_galleries(a2, json.dumps([data, data])) == [a2_long_gallery] * 2
    assert loads_galleries(a2, json.dumps({"galleries": [data]})) == [a2_long_gallery]


def test_loads_rejects_bad_documents(a2, b2, b2_gallery):
    with pytest.raises(ParseError):
        loads_galleries(a2, "{not json")
    with pytest.raises(PreconditionError):
        loads_galleries(a2, json.dumps(gallery_to_dict(b2_gallery)))

from __future__ import annotations

from fractions import Fraction

import pytest

from src.affine import (
    Hyperplane,
    canonical_word,
    chamber_depth,
    chamber_of,
    count_reduced_words,
    distance,
    element_of_word,
    ell,
    enumerate_region,
    fundamental_wall,
    from_spherical,
    identity,
    in_deep_chamber,
    in_shrunken_chamber,
    interior_point,
    local_chamber_of,
    reduced_words,
    reflection_across,
    separating_wall,
    side,
    simple_affine_generators,
    strip_index,
    transform_wall,
    translation,
    wall_of_panel,
)
from src.errors import PreconditionError, ResourceError
from src.root_system import Point, Root
from src.weyl import weyl_group


def test_generators_are_involutions_of_length_one(b2):
    for s in simple_affine_generators(b2):
        assert s * s == identity(b2)
        assert ell(s) == 1


def test_s0_is_the_reflection_across_the_theta_wall(a2):
    s0 = simple_affine_generators(a2)[0]
    assert reflection_across(Hyperplane(a2.highest_root, 1), a2) == s0
    assert s0.translation == (1, 1)


def test_interior_point_of_the_fundamental_alcove(a2):
    assert interior_point(identity(a2)) == Point((Fraction(1, 3), Fraction(1, 3)))


def test_ell_of_the_theta_coroot_translation(a2):
    assert ell(translation(a2, (1, 1))) == 4


def test_walls_of_the_fundamental_alcove(a2):
    c = identity(a2)
    assert [wall_of_panel(c, s) for s in range(3)] == [fundamental_wall(a2, s) for s in range(3)]
    assert side(Hyperplane(Root((1, 0)), 0), c) == 1
    assert side(Hyperplane(a2.highest_root, 1), c) == -1


def test_reflection_fixes_its_wall(g2):
    for root in g2.positive_roots:
        h = Hyperplane(root, 2)
        r = reflection_across(h, g2)
        assert r * r == identity(g2)
        assert transform_wall(r, h) == h


def test_adjacent_alcoves_share_one_wall(a2):
    c = identity(a2)
    s1 = simple_affine_generators(a2)[1]
    assert separating_wall(c, s1) == Hyperplane(Root((1, 0)), 0)
    assert distance(c, s1) == 1
    with pytest.raises(PreconditionError):
        separating_wall(c, translation(a2, (1, 1)))


def test_strip_indices_of_a_translation(a2):
    x = translation(a2, (2, 2))
    assert strip_index(Root((1, 0)), x) == 2
    assert strip_index(Root((0, 1)), x) == 2
    assert strip_index(Root((1, 1)), x) == 4
    assert ell(x) == 8


def test_chamber_of_spherical_elements(b2):
    for w in weyl_group(b2).elements:
        assert chamber_of(from_spherical(w)) == w
        assert local_chamber_of(from_spherical(w), (0, 0)) == w


def test_local_chamber_at_a_translated_vertex(a2):
    W = weyl_group(a2)
    mu = (2, 1)
    for w in W.elements:
        a = translation(a2, mu) * from_spherical(w)
        assert local_chamber_of(a, mu) == w


def test_shrunken_and_deep_chambers(a2):
    W = weyl_group(a2)
    x = translation(a2, (2, 2))
    assert in_shrunken_chamber(x, W.identity, 2)
    assert not in_shrunken_chamber(x, W.identity, 3)
    assert chamber_depth(x, W.identity) == 2
    assert in_deep_chamber(x, W.identity, 2)
    assert not in_deep_chamber(x, W.identity, 3)
    assert chamber_depth(x, W.longest) == -1
    with pytest.raises(PreconditionError):
        in_deep_chamber(x, W.identity, -1)


def test_reduced_words_of_w0(a2):
    w0 = from_spherical(weyl_group(a2).longest)
    assert reduced_words(w0, cap=10) == [(1, 2, 1), (2, 1, 2)]
    assert canonical_word(w0) == (1, 2, 1)
    assert count_reduced_words(w0) == 2
    with pytest.raises(ResourceError):
        reduced_words(w0, cap=1)


def test_reduced_words_multiply_back(b2):
    x = element_of_word(b2, (0, 1, 2, 1, 0))
    for word in reduced_words(x, cap=200):
        assert element_of_word(b2, word) == x
        assert len(word) == ell(x)


def test_region_growth_in_a2(a2):
    assert len(enumerate_region(a2, 0)) == 1
    assert len(enumerate_region(a2, 1)) == 4
    assert len(enumerate_region(a2, 2)) == 10
    assert len(enumerate_region(a2, 3)) == 19


def test_region_words_are_canonical(b2):
    region = enumerate_region(b2, 4)
    for a in region:
        word = region.canonical_word(a)
        assert element_of_word(b2, word) == a
        assert len(word) == ell(a)
    assert identity(b2) in region
    assert translation(b2, (5, 5)) not in region


def test_region_splits_into_chambers(a2):
    region = enumerate_region(a2, 4)
    W = weyl_group(a2)
    assert sum(len(region.in_chamber(v)) for v in W.elements) == len(region)


def test_element_of_word_rejects_bad_generators(a2):
    with pytest.raises(PreconditionError):
        element_of_word(a2, (3,))

from __future__ import annotations

import pytest

from src.affine import Hyperplane, identity
from src.errors import PreconditionError
from src.gallery import fold_set, from_folds, from_word
from src.orientation import (
    WeylChamberOrientation,
    crossing_is_positive,
    fold_is_positive,
    gallery_is_positively_folded,
    sign,
)
from src.root_system import Root
from src.weyl import weyl_group


@pytest.fixture
def phi(a2):
    W = weyl_group(a2)
    return {"e": WeylChamberOrientation(W.identity), "w0": WeylChamberOrientation(W.longest)}


def test_label(phi):
    assert phi["w0"].label == "phi_s1s2s1"
    assert str(phi["e"]) == "phi_e"


def test_sign_at_the_fundamental_alcove(a2, phi):
    c = identity(a2)
    theta_wall = Hyperplane(Root((1, 1)), 1)
    assert sign(phi["w0"], theta_wall, c) == 1
    assert sign(phi["e"], theta_wall, c) == -1
    assert sign(phi["e"], Hyperplane(Root((1, 0)), 0), c) == 1


def test_single_fold_depends_on_the_orientation(a2, phi):
    g = from_folds(identity(a2), (1,), (1,))
    assert fold_is_positive(phi["e"], g, 1)
    assert not fold_is_positive(phi["w0"], g, 1)


def test_folding_every_step_at_the_origin(a2, phi):
    g = from_folds(identity(a2), (1, 2, 1), (1, 2, 3))
    assert g.end == identity(a2)
    assert gallery_is_positively_folded(phi["e"], g)
    assert not gallery_is_positively_folded(phi["w0"], g)


def test_crossings_of_the_long_gallery(a2_long_gallery, phi):
    g = a2_long_gallery
    assert all(crossing_is_positive(phi["w0"], g, i) for i in range(1, 9))
    assert not crossing_is_positive(phi["w0"], g, 9)


@pytest.mark.parametrize("folds, positive", [((3, 9), True), ((3,), True), ((9,), False)])
def test_folds_of_the_long_gallery(a2_long_gallery, phi, folds, positive):
    g = fold_set(a2_long_gallery, folds)
    assert gallery_is_positively_folded(phi["w0"], g) is positive


def test_folds_of_the_b2_gallery(b2, b2_gallery):
    w0 = WeylChamberOrientation(weyl_group(b2).longest)
    assert gallery_is_positively_folded(w0, fold_set(b2_gallery, (4, 5)))
    g = fold_set(b2_gallery, (1, 4, 5))
    assert not fold_is_positive(w0, g, 1)
    assert fold_is_positive(w0, g, 4)
    assert fold_is_positive(w0, g, 5)


def test_unfolded_gallery_is_trivially_positive(a2_long_gallery, phi):
    assert gallery_is_positively_folded(phi["e"], a2_long_gallery)


def test_step_kind_is_checked(a2, a2_long_gallery, phi):
    with pytest.raises(PreconditionError):
        fold_is_positive(phi["e"], a2_long_gallery, 1)
    folded = from_folds(identity(a2), (1,), (1,))
    with pytest.raises(PreconditionError):
        crossing_is_positive(phi["e"], folded, 1)


def test_crossing_sign_matches_the_unfolded_orientation(a2, phi):
    g = from_word(identity(a2), (0,))
    # c_f lies below H(theta, 1), the w0 side
    assert crossing_is_positive(phi["w0"], g, 1)
    assert not crossing_is_positive(phi["e"], g, 1)

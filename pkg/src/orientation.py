"""Weyl chamber orientations of the affine complex"""

from dataclasses import dataclass

from src.affine import Alcove, Hyperplane, side
from src.errors import PreconditionError
from src.gallery import Gallery
from src.weyl import WeylElement, chamber_side


@dataclass(frozen=True)
class WeylChamberOrientation:
    """phi_w: an alcove is positive at a wall iff it lies on the side of the wall facing C_w at infinity"""

    direction: WeylElement

    def sign(self, h: Hyperplane, a: Alcove) -> int:
        return 1 if side(h, a) == chamber_side(h.root, self.direction) else -1

    @property
    def label(self) -> str:
        return f"phi_{self.direction.name}"

    def __str__(self) -> str:
        return self.label


def sign(o: WeylChamberOrientation, h: Hyperplane, a: Alcove) -> int:
    return o.sign(h, a)


def crossing_is_positive(o: WeylChamberOrientation, g: Gallery, i: int) -> bool:
    """The crossing of step i goes from the positive to the negative side of its wall"""
    if g.is_folded_at(i):
        raise PreconditionError(f"step {i} is folded, not a crossing")
    return o.sign(g.wall(i), g.alcove(i - 1)) == 1


def fold_is_positive(o: WeylChamberOrientation, g: Gallery, i: int) -> bool:
    """The repeated alcove of fold i lies on the positive side of the fold wall"""
    if not g.is_folded_at(i):
        raise PreconditionError(f"step {i} is not folded")
    return o.sign(g.wall(i), g.alcove(i)) == 1


def gallery_is_positively_folded(o: WeylChamberOrientation, g: Gallery) -> bool:
    return all(fold_is_positive(o, g, i) for i in g.folds)

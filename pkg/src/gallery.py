"""Alcove galleries: construction, crossings, minimality, folding, patterns

A gallery is stored as its start alcove, its type word over 0..rank and its
alcove sequence. Step i (1-based) is folded iff alcove_i = alcove_{i-1};
unfolded steps satisfy alcove_i = alcove_{i-1} * s_{word[i]}. The panel of
step i is the type-word[i] panel of alcove_{i-1}, so for a folded step it is
the panel of the repeated alcove on the fold wall.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from src.affine import (
    Alcove,
    Hyperplane,
    distance,
    element_of_word,
    identity,
    reflection_across,
    separating_wall,
    simple_affine_generators,
    wall_of_panel,
)
from src.errors import PreconditionError
from src.root_system import Root, RootSystem
from src.weyl import weyl_group


@dataclass(frozen=True)
class Panel:
    """The type-generator panel of base, shared by base and base * s_generator"""

    base: Alcove
    generator: int

    @property
    def wall(self) -> Hyperplane:
        return wall_of_panel(self.base, self.generator)

    @property
    def alcoves(self) -> FrozenSet[Alcove]:
        return frozenset((self.base, self.base * simple_affine_generators(self.base.rs)[self.generator]))


@dataclass(frozen=True)
class FoldingPattern:
    """Parallelism classes of the fold walls, in gallery order"""

    roots: Tuple[Root, ...] = ()

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __getitem__(self, i):
        return self.roots[i]

    @property
    def label(self) -> str:
        return "(" + ", ".join(r.label for r in self.roots) + ")"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Gallery:
    start: Alcove
    word: Tuple[int, ...]
    alcoves: Tuple[Alcove, ...]

    @property
    def rs(self) -> RootSystem:
        return self.start.rs

    def __len__(self) -> int:
        """Step count"""
        return len(self.word)

    @property
    def alcove_count(self) -> int:
        return len(self.word) + 1

    @property
    def end(self) -> Alcove:
        return self.alcoves[-1] if self.alcoves else self.start

    def alcove(self, i: int) -> Alcove:
        """alcove_i for 0 <= i <= steps"""
        return self.start if i == 0 else self.alcoves[i - 1]

    def panel(self, i: int) -> Panel:
        self._check_index(i)
        return Panel(self.alcove(i - 1), self.word[i - 1])

    def wall(self, i: int) -> Hyperplane:
        """Supporting wall of the panel of step i"""
        self._check_index(i)
        return wall_of_panel(self.alcove(i - 1), self.word[i - 1])

    @property
    def steps(self) -> List[Tuple[Panel, Alcove]]:
        return [(self.panel(i), self.alcove(i)) for i in range(1, len(self.word) + 1)]

    def is_folded_at(self, i: int) -> bool:
        self._check_index(i)
        return self.alcove(i) == self.alcove(i - 1)

    @property
    def folds(self) -> Tuple[int, ...]:
        """F(gallery): indices of folded steps"""
        return tuple(i for i in range(1, len(self.word) + 1) if self.alcove(i) == self.alcove(i - 1))

    @property
    def is_unfolded(self) -> bool:
        return not self.folds

    def _check_index(self, i: int):
        if not 1 <= i <= len(self.word):
            raise PreconditionError(f"step index {i} out of range 1..{len(self.word)}")


def _build(start: Alcove, word: Sequence[int], folds: Iterable[int] = ()) -> Gallery:
    """The gallery of this type from start that is folded exactly at folds"""
    generators = simple_affine_generators(start.rs)
    folded = set(folds)
    current = start
    alcoves = []
    for i, s in enumerate(word, start=1):
        if not 0 <= s < len(generators):
            raise PreconditionError(f"generator index {s} out of range 0..{len(generators) - 1}")
        if i not in folded:
            current = current * generators[s]
        alcoves.append(current)
    return Gallery(start, tuple(word), tuple(alcoves))


def from_word(start: Alcove, word: Sequence[int]) -> Gallery:
    """Unfolded gallery of the given type from start"""
    return _build(start, word)


def from_folds(start: Alcove, word: Sequence[int], folds: Iterable[int]) -> Gallery:
    """Gallery determined by start, type and fold set"""
    folded = set(folds)
    if any(not 1 <= i <= len(word) for i in folded):
        raise PreconditionError(f"fold indices {sorted(folded)} out of range 1..{len(word)}")
    return _build(start, word, folded)


def from_walls(start: Alcove, walls: Sequence[Hyperplane]) -> Gallery:
    """
    Unfolded gallery crossing the given walls in order

    Args:
        start: Start alcove
        walls: Each wall must bound the alcove reached so far

    Returns:
        Gallery: The gallery whose i-th crossing is walls[i]
    """
    generators = simple_affine_generators(start.rs)
    current = start
    word = []
    for k, wall in enumerate(walls, start=1):
        for s in range(len(generators)):
            if wall_of_panel(current, s) == wall:
                word.append(s)
                current = current * generators[s]
                break
        else:
            raise PreconditionError(f"wall {k} ({wall}) does not bound alcove {current}")
    return from_word(start, word)


def unfold(g: Gallery) -> Gallery:
    return from_word(g.start, g.word)


def is_minimal(g: Gallery) -> bool:
    """Unfolded and as long as the number of walls separating start and end"""
    return g.is_unfolded and len(g) == distance(g.start, g.end)


def crossings(g: Gallery) -> List[Tuple[int, Hyperplane]]:
    """(step index, separating wall) for every unfolded step"""
    return [
        (i, separating_wall(g.alcove(i - 1), g.alcove(i)))
        for i in range(1, len(g) + 1)
        if g.alcove(i) != g.alcove(i - 1)
    ]


def fold_at(g: Gallery, i: int) -> Gallery:
    """Reflect every alcove from step i on across the wall of the i-th panel"""
    r = reflection_across(g.wall(i), g.rs)
    alcoves = g.alcoves[: i - 1] + tuple(r * a for a in g.alcoves[i - 1 :])
    return Gallery(g.start, g.word, alcoves)


def fold_set(g: Gallery, idxs: Iterable[int]) -> Gallery:
    """Fold at each index in increasing order"""
    for i in sorted(set(idxs)):
        g = fold_at(g, i)
    return g


def pattern_of(g: Gallery) -> FoldingPattern:
    return FoldingPattern(tuple(g.wall(i).root for i in g.folds))


def concatenate(g1: Gallery, g2: Gallery) -> Gallery:
    """
    g1 followed by g2 moved so that it starts at the end of g1

    g2 is transported by end(g1) * start(g2)^-1; for g2 starting at c_f and g1
    an unfolded gallery from c_f this is the element of g1's type word.
    """
    transport = g1.end * g2.start.inverse()
    return Gallery(
        g1.start,
        g1.word + g2.word,
        g1.alcoves + tuple(transport * a for a in g2.alcoves),
    )


def required_crossings(rs: RootSystem, pattern: Sequence[Root]) -> Tuple[Root, ...]:
    """
    Classes an unfolded gallery has to cross, in order, to fold into pattern

    The j-th entry is the positive root of s_{b1} ... s_{b(j-1)} (b_j).
    """
    W = weyl_group(rs)
    t = W.identity
    needed = []
    for beta in pattern:
        needed.append(t.apply_root(beta).positive())
        t = t * W.reflection(beta)
    return tuple(needed)


def apply_pattern_greedy(g: Gallery, pattern: Sequence[Root]) -> Optional[Gallery]:
    """Fold at the first crossing of each successive pattern class; None if one is missing"""
    if not g.is_unfolded:
        raise PreconditionError("greedy pattern application needs an unfolded gallery")
    position = 1
    for beta in pattern:
        for i in range(position, len(g) + 1):
            if g.wall(i).root == beta:
                g = fold_at(g, i)
                position = i + 1
                break
        else:
            return None
    return g


def trivial_gallery(rs: RootSystem) -> Gallery:
    return from_word(identity(rs), ())


def gallery_of_element(rs: RootSystem, word: Sequence[int]) -> Gallery:
    """Unfolded gallery of a word from c_f; its end is the element of the word"""
    g = from_word(identity(rs), word)
    assert g.end == element_of_word(rs, word)
    return g

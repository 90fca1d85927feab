"""The affine Weyl group, alcoves, walls, strips and chambers

An affine element (lambda, w) is the map x -> w(x) + lambda, with lambda in the
coroot lattice. Alcoves are identified with affine elements through
g -> g * c_f; the interior point of g * c_f is g(x0).

All side and strip tests are integer computations: for a positive root alpha,
pair(alpha, g(x0)) = height(w^-1 alpha) / h + <alpha, lambda>, and
0 < |height| < h.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from src.errors import PreconditionError, ResourceError
from src.logger import attach_to_log
from src.root_system import Point, Root, RootSystem
from src.weyl import WeylElement, WeylGroup, weyl_group

logger = attach_to_log(__name__)


@dataclass(frozen=True)
class AffineElement:
    """x -> spherical(x) + translation, translation over the simple coroots"""

    translation: Tuple[int, ...]
    spherical: WeylElement

    @property
    def group(self) -> WeylGroup:
        return self.spherical.group

    @property
    def rs(self) -> RootSystem:
        return self.spherical.group.rs

    def __mul__(self, other: "AffineElement") -> "AffineElement":
        moved = self.spherical.apply_coroot(other.translation)
        return AffineElement(
            tuple(a + b for a, b in zip(self.translation, moved)),
            self.spherical * other.spherical,
        )

    def inverse(self) -> "AffineElement":
        w_inv = self.spherical.inverse()
        return AffineElement(tuple(-c for c in w_inv.apply_coroot(self.translation)), w_inv)

    def apply(self, x: Point) -> Point:
        return self.spherical.apply_point(x) + self.rs.lattice_point(self.translation)

    def __str__(self) -> str:
        if any(self.translation):
            return f"t^{list(self.translation)} {self.spherical.name}"
        return self.spherical.name


# An alcove is the affine element g identifying g * c_f.
Alcove = AffineElement


@dataclass(frozen=True)
class Hyperplane:
    """H_{root, level}: the wall pair(root, x) = level, root positive"""

    root: Root
    level: int

    def __str__(self) -> str:
        return f"H({self.root.label},{self.level})"


def identity(rs: RootSystem) -> AffineElement:
    return AffineElement(tuple(0 for _ in range(rs.rank)), weyl_group(rs).identity)


def fundamental_alcove(rs: RootSystem) -> Alcove:
    return identity(rs)


def translation(rs: RootSystem, lam: Sequence[int]) -> AffineElement:
    """t^lambda"""
    return AffineElement(tuple(lam), weyl_group(rs).identity)


def from_spherical(w: WeylElement) -> AffineElement:
    return AffineElement(tuple(0 for _ in range(w.group.rs.rank)), w)


@lru_cache(maxsize=None)
def simple_affine_generators(rs: RootSystem) -> Tuple[AffineElement, ...]:
    """(s0, s1, ..., sn) with s0 = t^{theta^vee} s_theta"""
    W = weyl_group(rs)
    theta = rs.highest_root
    s0 = AffineElement(rs.coroot_of(theta), W.reflection(theta))
    return (s0,) + tuple(from_spherical(W.generator(i)) for i in range(1, rs.rank + 1))


def element_of_word(rs: RootSystem, word: Sequence[int], start: AffineElement = None) -> AffineElement:
    """start * s_{i1} * ... * s_{ik} over indices 0..rank"""
    generators = simple_affine_generators(rs)
    g = identity(rs) if start is None else start
    for i in word:
        if not 0 <= i <= rs.rank:
            raise PreconditionError(f"generator index {i} out of range 0..{rs.rank}")
        g = g * generators[i]
    return g


def reflection_across(h: Hyperplane, rs: RootSystem) -> AffineElement:
    """The affine reflection r_{alpha,k}(x) = s_alpha(x) + k alpha^vee"""
    coroot = rs.coroot_of(h.root)
    return AffineElement(tuple(h.level * c for c in coroot), weyl_group(rs).reflection(h.root))


def transform_wall(g: AffineElement, h: Hyperplane) -> Hyperplane:
    """The image g(H)"""
    image = g.spherical.apply_root(h.root)
    level = h.level + g.rs.pair_coroot(image, g.translation)
    if image.is_positive:
        return Hyperplane(image, level)
    return Hyperplane(-image, -level)


def fundamental_wall(rs: RootSystem, s: int) -> Hyperplane:
    """The wall of c_f fixed by the generator s"""
    if s == 0:
        return Hyperplane(rs.highest_root, 1)
    return Hyperplane(rs.simple_root(s), 0)


def wall_of_panel(a: Alcove, s: int) -> Hyperplane:
    """Supporting wall of the type-s panel of a, shared by a and a * s"""
    return transform_wall(a, fundamental_wall(a.rs, s))


# -- strips, sides and distances -----------------------------------------


def strip_indices(a: Alcove) -> Tuple[int, ...]:
    """floor(pair(beta_j, pt(a))) for every positive root, in positive_roots order"""
    rs = a.rs
    signs = a.group.sign_vector(a.spherical)
    return tuple(
        rs.pair_coroot_index(j, a.translation) - (0 if signs[j] > 0 else 1)
        for j in range(len(rs.positive_roots))
    )


def strip_index(alpha: Root, a: Alcove) -> int:
    """i with a inside the strip between H_{alpha,i} and H_{alpha,i+1}"""
    rs = a.rs
    j = rs.root_index(alpha)
    m = rs.pair_coroot_index(j, a.translation)
    return m if a.group.chamber_side_index(j, a.spherical) > 0 else m - 1


def side(h: Hyperplane, a: Alcove) -> int:
    """sign(pair(root, pt(a)) - level)"""
    return 1 if strip_index(h.root, a) >= h.level else -1


def interior_point(a: Alcove) -> Point:
    return a.apply(a.rs.fundamental_interior_point())


def ell(g: AffineElement) -> int:
    """Number of walls separating c_f and g * c_f"""
    return sum(abs(s) for s in strip_indices(g))


def distance(a: Alcove, b: Alcove) -> int:
    """Number of walls separating a and b"""
    return sum(abs(x - y) for x, y in zip(strip_indices(a), strip_indices(b)))


def separating_walls(a: Alcove, b: Alcove) -> List[Hyperplane]:
    walls = []
    for root, x, y in zip(a.rs.positive_roots, strip_indices(a), strip_indices(b)):
        lo, hi = min(x, y), max(x, y)
        walls.extend(Hyperplane(root, k) for k in range(lo + 1, hi + 1))
    return walls


def separating_wall(a: Alcove, b: Alcove) -> Hyperplane:
    """The unique wall between two adjacent alcoves"""
    walls = separating_walls(a, b)
    if len(walls) != 1:
        raise PreconditionError(f"alcoves {a} and {b} are not adjacent ({len(walls)} separating walls)")
    return walls[0]


# -- chambers -------------------------------------------------------------


def chamber_of(a: Alcove) -> WeylElement:
    """The v whose chamber C_v contains a"""
    return a.group.from_sign_vector(tuple(1 if s >= 0 else -1 for s in strip_indices(a)))


def local_chamber_of(a: Alcove, mu: Sequence[int]) -> WeylElement:
    """The v with a inside the local chamber C_{mu,v}"""
    rs = a.rs
    strips = strip_indices(a)
    return a.group.from_sign_vector(
        tuple(1 if s >= rs.pair_coroot_index(j, mu) else -1 for j, s in enumerate(strips))
    )


def in_local_chamber(a: Alcove, mu: Sequence[int], v: WeylElement) -> bool:
    return local_chamber_of(a, mu) == v


def _simple_images(v: WeylElement) -> List[Tuple[int, bool]]:
    """(index of the class of v(alpha_i), whether v(alpha_i) is positive) for each simple i"""
    rs = v.group.rs
    images = []
    for alpha in rs.simple_roots:
        image = v.apply_root(alpha)
        images.append((rs.root_index(image), image.is_positive))
    return images


def in_shrunken_chamber(a: Alcove, v: WeylElement, k: int) -> bool:
    """
    Membership in C_v + k * sum over {i : v(alpha_i) > 0} of v(omega_i^vee)

    pair(v(alpha_i), pt) > k where v(alpha_i) is positive, > 0 otherwise.
    """
    if k < 0:
        raise PreconditionError("shrink level must be non-negative")
    strips = strip_indices(a)
    for j, positive in _simple_images(v):
        if positive and strips[j] < k:
            return False
        if not positive and strips[j] > -1:
            return False
    return True


def chamber_depth(a: Alcove, v: WeylElement) -> int:
    """Largest k with pair(v(alpha_i), pt) > k for every simple i; -1 outside C_v"""
    strips = strip_indices(a)
    depth = min(strips[j] if positive else -strips[j] - 1 for j, positive in _simple_images(v))
    return max(depth, -1)


def in_deep_chamber(a: Alcove, v: WeylElement, k: int) -> bool:
    """Membership in v * (C_e + k * rho^vee): C_v pushed in by k along every wall"""
    if k < 0:
        raise PreconditionError("depth must be non-negative")
    return chamber_depth(a, v) >= k


# -- words and regions ----------------------------------------------------


def canonical_word(g: AffineElement) -> Tuple[int, ...]:
    """Lexicographically least reduced word, by peeling the smallest left descent"""
    generators = simple_affine_generators(g.rs)
    word = []
    current = g
    remaining = ell(current)
    while remaining:
        for s, gen in enumerate(generators):
            candidate = gen * current
            if ell(candidate) < remaining:
                word.append(s)
                current = candidate
                remaining -= 1
                break
    return tuple(word)


def count_reduced_words(g: AffineElement, _memo: Dict[AffineElement, int] = None) -> int:
    memo = {} if _memo is None else _memo
    generators = simple_affine_generators(g.rs)

    def count(x: AffineElement) -> int:
        if x in memo:
            return memo[x]
        length = ell(x)
        total = 1 if length == 0 else 0
        for gen in generators:
            y = x * gen
            if ell(y) < length:
                total += count(y)
        memo[x] = total
        return total

    return count(g)


def reduced_words(g: AffineElement, cap: int) -> List[Tuple[int, ...]]:
    """
    All reduced words of g in lexicographic order

    Args:
        g: Affine element
        cap: Maximum number of words; exceeding it raises ResourceError

    Returns:
        List of words over 0..rank
    """
    total = count_reduced_words(g)
    if total > cap:
        raise ResourceError(f"{g} has {total} reduced words, more than the cap of {cap}")
    generators = simple_affine_generators(g.rs)

    def words(x: AffineElement) -> List[Tuple[int, ...]]:
        length = ell(x)
        if length == 0:
            return [()]
        found = []
        for s, gen in enumerate(generators):
            y = x * gen
            if ell(y) < length:
                found.extend(prefix + (s,) for prefix in words(y))
        return found

    return sorted(words(g))


class Region:
    """Alcoves g * c_f with ell(g) <= radius, in breadth-first lexicographic order"""

    def __init__(self, rs: RootSystem, radius: int):
        self.rs = rs
        self.radius = radius
        self.alcoves: List[AffineElement] = []
        self.words: Dict[AffineElement, Tuple[int, ...]] = {}
        generators = simple_affine_generators(rs)
        start = identity(rs)
        self.alcoves.append(start)
        self.words[start] = ()
        layer = [start]
        for length in range(1, radius + 1):
            nxt = []
            for parent in layer:
                for s, gen in enumerate(generators):
                    child = parent * gen
                    if child in self.words or ell(child) != length:
                        continue
                    self.words[child] = self.words[parent] + (s,)
                    self.alcoves.append(child)
                    nxt.append(child)
            layer = nxt
        logger.info("region %s radius %d: %d alcoves", rs.type_label, radius, len(self.alcoves))

    def __iter__(self):
        return iter(self.alcoves)

    def __len__(self) -> int:
        return len(self.alcoves)

    def __contains__(self, a: Alcove) -> bool:
        return a in self.words

    def canonical_word(self, a: Alcove) -> Tuple[int, ...]:
        return self.words[a]

    def in_chamber(self, v: WeylElement) -> List[Alcove]:
        return [a for a in self.alcoves if chamber_of(a) == v]


def enumerate_region(rs: RootSystem, radius: int) -> Region:
    return Region(rs, radius)

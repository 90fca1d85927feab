"""The spherical Weyl group W0

Elements carry three integer matrices, one per coordinate system in use:
    action         on points (fundamental-coweight coordinates)
    root_action    on roots (simple-root coordinates)
    coroot_action  on coroot-lattice vectors (simple-coroot coordinates)
Edge labels and reflections use the left convention w = r_alpha * u.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from src.logger import attach_to_log
from src.root_system import Matrix, Point, Root, RootSystem

logger = attach_to_log(__name__)


def _identity(n: int) -> Matrix:
    return tuple(tuple(1 if j == k else 0 for k in range(n)) for j in range(n))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum(a[j][m] * b[m][k] for m in range(n)) for k in range(n)) for j in range(n))


def _matvec(a: Matrix, v: Sequence) -> tuple:
    return tuple(sum(a[j][k] * v[k] for k in range(len(v))) for j in range(len(a)))


@dataclass(frozen=True, eq=False)
class WeylElement:
    """An element of W0 with its canonical (lexicographically least) reduced word"""

    index: int
    word: Tuple[int, ...]
    action: Matrix
    root_action: Matrix
    coroot_action: Matrix
    group: "WeylGroup" = field(repr=False)

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.action == other.action

    def __hash__(self) -> int:
        return hash(self.action)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return self.group.multiply(self, other)

    def inverse(self) -> "WeylElement":
        return self.group.inverse(self)

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def label(self) -> str:
        """Word form 's1 s2 s1', or 'e' for the identity"""
        return " ".join(f"s{i}" for i in self.word) if self.word else "e"

    @property
    def name(self) -> str:
        """Compact form 's1s2s1'"""
        return self.label.replace(" ", "")

    def __str__(self) -> str:
        return self.name

    def apply_root(self, root: Root) -> Root:
        return Root(_matvec(self.root_action, root.coeffs))

    def apply_point(self, x: Point) -> Point:
        return Point(_matvec(self.action, x.coords))

    def apply_coroot(self, lam: Sequence[int]) -> Tuple[int, ...]:
        return _matvec(self.coroot_action, lam)


class WeylGroup:
    """W0 for one root system, enumerated once with multiplication and sign tables"""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        n = rs.rank
        A = rs.cartan
        ident = _identity(n)
        self._generators = []
        for i in range(n):
            action = tuple(tuple(ident[j][k] - (A[j][i] if k == i else 0) for k in range(n)) for j in range(n))
            root_action = tuple(tuple(ident[j][k] - (A[k][i] if j == i else 0) for k in range(n)) for j in range(n))
            coroot_action = tuple(tuple(ident[j][k] - (A[i][k] if j == i else 0) for k in range(n)) for j in range(n))
            self._generators.append((action, root_action, coroot_action))

        self.elements: List[WeylElement] = []
        self._by_action: Dict[Matrix, WeylElement] = {}
        self._enumerate(ident)
        self._mul = [[self._by_action[_matmul(u.action, w.action)].index for w in self.elements] for u in self.elements]
        self._inv = [row.index(0) for row in self._mul]

        roots = rs.positive_roots
        # _signs[w][j] = sign(pair(beta_j, w(x0))) = sign of height(w^-1 beta_j)
        self._signs: List[Tuple[int, ...]] = []
        for w in self.elements:
            w_inv = self.elements[self._inv[w.index]]
            self._signs.append(tuple(1 if sum(_matvec(w_inv.root_action, r.coeffs)) > 0 else -1 for r in roots))
        self._by_signs = {signs: w for signs, w in zip(self._signs, self.elements)}

        self._reflections: List[WeylElement] = []
        self._reflection_root: Dict[int, int] = {}
        for j, r in enumerate(roots):
            element = self._by_action[self._reflection_matrix(r)]
            self._reflections.append(element)
            self._reflection_root[element.index] = j
        logger.debug("enumerated W0 of %s: %d elements", rs.type_label, len(self.elements))

    def _enumerate(self, ident: Matrix) -> None:
        identity = WeylElement(0, (), ident, ident, ident, self)
        self.elements.append(identity)
        self._by_action[ident] = identity
        layer = [identity]
        while layer:
            nxt = []
            # parents in lexicographic order and generators ascending give lex-least words
            for parent in layer:
                for i, (act, ract, cact) in enumerate(self._generators, start=1):
                    action = _matmul(parent.action, act)
                    if action in self._by_action:
                        continue
                    element = WeylElement(
                        len(self.elements),
                        parent.word + (i,),
                        action,
                        _matmul(parent.root_action, ract),
                        _matmul(parent.coroot_action, cact),
                        self,
                    )
                    self.elements.append(element)
                    self._by_action[action] = element
                    nxt.append(element)
            layer = nxt

    def _reflection_matrix(self, root: Root) -> Matrix:
        n = self.rs.rank
        cw = self.rs.coweight_coords(self.rs.coroot_of(root))
        return tuple(tuple((1 if j == k else 0) - cw[j] * root.coeffs[k] for k in range(n)) for j in range(n))

    # -- group structure ------------------------------------------------

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    @property
    def order(self) -> int:
        return len(self.elements)

    def generator(self, i: int) -> WeylElement:
        """s_i for 1 <= i <= rank"""
        return self.element((i,))

    def multiply(self, u: WeylElement, w: WeylElement) -> WeylElement:
        return self.elements[self._mul[u.index][w.index]]

    def inverse(self, w: WeylElement) -> WeylElement:
        return self.elements[self._inv[w.index]]

    def element(self, word: Sequence[int]) -> WeylElement:
        """Product s_{i1} ... s_{ik} of a word over 1..rank"""
        result = self.identity
        for i in word:
            if not 1 <= i <= self.rs.rank:
                raise ValueError(f"generator index {i} out of range 1..{self.rs.rank}")
            result = result * self._generator_element(i)
        return result

    def _generator_element(self, i: int) -> WeylElement:
        return self._by_action[self._generators[i - 1][0]]

    def from_action(self, action: Matrix) -> WeylElement:
        return self._by_action[action]

    @property
    def longest(self) -> WeylElement:
        return self.elements[-1]

    # -- roots, reflections and chambers --------------------------------

    def reflection(self, root: Root) -> WeylElement:
        """r_alpha as a group element"""
        return self._reflections[self.rs.root_index(root)]

    def reflection_between(self, u: WeylElement, w: WeylElement) -> Optional[Root]:
        """The positive root alpha with w = r_alpha * u, if any"""
        j = self._reflection_root.get(self._mul[w.index][self._inv[u.index]])
        return None if j is None else self.rs.positive_roots[j]

    def chamber_side(self, alpha: Root, v: WeylElement) -> int:
        """sign(pair(alpha, v(x0))) for a positive root alpha"""
        return self._signs[v.index][self.rs.root_index(alpha)]

    def chamber_side_index(self, j: int, v: WeylElement) -> int:
        return self._signs[v.index][j]

    def sign_vector(self, v: WeylElement) -> Tuple[int, ...]:
        return self._signs[v.index]

    def from_sign_vector(self, signs: Sequence[int]) -> WeylElement:
        return self._by_signs[tuple(signs)]

    def length(self, w: WeylElement) -> int:
        """Inversion count: positive roots sent to negative roots"""
        return sum(1 for r in self.rs.positive_roots if not w.apply_root(r).is_positive)

    def distance(self, u: WeylElement, v: WeylElement) -> int:
        """l(u^-1 v): the number of walls H_{alpha,0} separating the chambers of u and v"""
        return (self.inverse(u) * v).length


@lru_cache(maxsize=None)
def weyl_group(rs: RootSystem) -> WeylGroup:
    return WeylGroup(rs)


def enumerate_elements(rs: RootSystem) -> List[WeylElement]:
    """All of W0, identity first, ordered by length then lexicographic word"""
    return list(weyl_group(rs).elements)


def longest_element(rs: RootSystem) -> WeylElement:
    return weyl_group(rs).longest


def length(w: WeylElement) -> int:
    return w.group.length(w)


def distance(u: WeylElement, v: WeylElement) -> int:
    return u.group.distance(u, v)


def reflection_between(u: WeylElement, w: WeylElement) -> Optional[Root]:
    return u.group.reflection_between(u, w)


def chamber_side(alpha: Root, v: WeylElement) -> int:
    return v.group.chamber_side(alpha, v)

"""Root systems: Cartan data, positive roots, coroots and the pairing

Conventions (used everywhere in the package):
    cartan[j][k] = <alpha_j, alpha_k^vee>
    roots are integer vectors over the simple roots
    points are rational vectors over the fundamental coweights, so that
    pair(alpha_i, x) = x[i]
    coroot-lattice vectors are integer vectors over the simple coroots
"""

import json
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import yaml

from src.config import TABLES_PATH
from src.errors import ConfigurationError
from src.logger import attach_to_log

logger = attach_to_log(__name__)

TABLE_FORMAT = "coxeterfold-root-systems"
TABLE_VERSION = 1
PACKAGED_TABLES = os.path.join(os.path.dirname(__file__), "data", "root_systems.json")

Matrix = Tuple[Tuple[int, ...], ...]

# Coxeter matrix entry m_ij from the product A[i][j] * A[j][i]
_COXETER_ORDER = {0: 2, 1: 3, 2: 4, 3: 6}


@dataclass(frozen=True)
class Root:
    """A root as an integer coefficient vector over the simple roots"""

    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if not any(self.coeffs):
            raise ValueError("the zero vector is not a root")

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coeffs))

    def positive(self) -> "Root":
        """The positive root of the same parallelism class"""
        return self if self.is_positive else -self

    @property
    def label(self) -> str:
        """Pretty form such as 'a1+a2' or '-2a1-a2'"""
        sign = "" if self.is_positive else "-"
        parts = []
        for i, c in enumerate(self.coeffs, start=1):
            c = abs(c)
            if c:
                parts.append(f"a{i}" if c == 1 else f"{c}a{i}")
        return sign + ("+" if sign == "" else "-").join(parts)

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Point:
    """A point of V in fundamental-coweight coordinates (exact rationals)"""

    coords: Tuple[Fraction, ...]

    def __add__(self, other: "Point") -> "Point":
        return Point(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Point") -> "Point":
        return Point(tuple(a - b for a, b in zip(self.coords, other.coords)))


def _symmetrizer(cartan: Matrix) -> Tuple[int, ...]:
    """Integers d_k with cartan[j][k] * d_k symmetric, i.e. d_k = |alpha_k|^2 / 2 up to scale"""
    n = len(cartan)
    d: List[Optional[Fraction]] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        j = stack.pop()
        for k in range(n):
            if k != j and cartan[j][k] != 0 and d[k] is None:
                d[k] = Fraction(cartan[k][j]) * d[j] / cartan[j][k]
                stack.append(k)
    if any(x is None for x in d):
        raise ConfigurationError("Cartan matrix is not irreducible (Dynkin diagram disconnected)")
    denominator = math.lcm(*(x.denominator for x in d))
    return tuple(int(x * denominator) for x in d)


def _root_sort_key(coeffs: Sequence[int]):
    return (sum(coeffs), tuple(-c for c in coeffs))


class RootSystem:
    """Immutable root data for one irreducible crystallographic type"""

    def __init__(self, type_label: str, cartan: Sequence[Sequence[int]]):
        self.type_label = type_label
        self.cartan: Matrix = tuple(tuple(int(v) for v in row) for row in cartan)
        self.rank = len(self.cartan)
        if any(len(row) != self.rank for row in self.cartan):
            raise ConfigurationError(f"{type_label}: Cartan matrix must be square")
        if any(self.cartan[i][i] != 2 for i in range(self.rank)):
            raise ConfigurationError(f"{type_label}: Cartan matrix must have 2 on the diagonal")
        self.symmetrizer = _symmetrizer(self.cartan)

        self.simple_roots: Tuple[Root, ...] = tuple(
            Root(tuple(1 if k == i else 0 for k in range(self.rank))) for i in range(self.rank)
        )
        self.positive_roots: Tuple[Root, ...] = self._close_under_reflections()
        self._index: Dict[Tuple[int, ...], int] = {r.coeffs: i for i, r in enumerate(self.positive_roots)}
        self.highest_root = max(self.positive_roots, key=lambda r: r.height)
        self.coxeter_number = self.highest_root.height + 1

        # rows P_j with <beta_j, lambda> = sum_k P_j[k] * lambda_k for lambda over simple coroots
        self._coroot_pairing = tuple(
            tuple(sum(r.coeffs[i] * self.cartan[i][k] for i in range(self.rank)) for k in range(self.rank))
            for r in self.positive_roots
        )

    # -- identity -------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, RootSystem) and (self.type_label, self.cartan) == (other.type_label, other.cartan)

    def __hash__(self) -> int:
        return hash((self.type_label, self.cartan))

    def __repr__(self) -> str:
        return f"RootSystem({self.type_label!r})"

    # -- roots ----------------------------------------------------------

    def _close_under_reflections(self) -> Tuple[Root, ...]:
        found = {r.coeffs for r in self.simple_roots}
        frontier = list(found)
        while frontier:
            nxt = []
            for coeffs in frontier:
                for i in range(self.rank):
                    image = self._reflect_coeffs(i, coeffs)
                    if all(c >= 0 for c in image) and image not in found:
                        found.add(image)
                        nxt.append(image)
            frontier = nxt
        return tuple(Root(c) for c in sorted(found, key=_root_sort_key))

    def _reflect_coeffs(self, i: int, coeffs: Sequence[int]) -> Tuple[int, ...]:
        pairing = sum(coeffs[k] * self.cartan[k][i] for k in range(self.rank))
        return tuple(c - pairing if k == i else c for k, c in enumerate(coeffs))

    def simple_root(self, i: int) -> Root:
        """alpha_i for 1 <= i <= rank"""
        return self.simple_roots[i - 1]

    def root_index(self, root: Root) -> int:
        """Position of the positive root of root's class in positive_roots"""
        try:
            return self._index[root.positive().coeffs]
        except KeyError:
            raise ValueError(f"{root} is not a root of {self.type_label}")

    def is_root(self, root: Root) -> bool:
        return root.positive().coeffs in self._index

    def reflect_root(self, i: int, beta: Root) -> Root:
        """s_i(beta) = beta - <beta, alpha_i^vee> alpha_i, for 1 <= i <= rank"""
        if not 1 <= i <= self.rank:
            raise ValueError(f"simple index {i} out of range 1..{self.rank}")
        return Root(self._reflect_coeffs(i - 1, beta.coeffs))

    def coxeter_matrix_entry(self, i: int, j: int) -> int:
        """m_ij for 1 <= i, j <= rank"""
        if i == j:
            return 1
        return _COXETER_ORDER[self.cartan[i - 1][j - 1] * self.cartan[j - 1][i - 1]]

    # -- coroots and pairings -------------------------------------------

    def norm2(self, root: Root) -> int:
        """(beta, beta) in the normalization where (alpha_k, alpha_k) = 2 d_k"""
        b = root.coeffs
        return sum(
            b[j] * b[k] * self.cartan[j][k] * self.symmetrizer[k]
            for j in range(self.rank)
            for k in range(self.rank)
        )

    def coroot_of(self, root: Root) -> Tuple[int, ...]:
        """beta^vee over the simple coroots"""
        norm = self.norm2(root)
        return tuple(2 * c * d // norm for c, d in zip(root.coeffs, self.symmetrizer))

    def coweight_coords(self, lam: Sequence[int]) -> Tuple[int, ...]:
        """Fundamental-coweight coordinates of a coroot-lattice vector"""
        return tuple(sum(self.cartan[j][k] * lam[k] for k in range(self.rank)) for j in range(self.rank))

    def pair(self, alpha: Root, x: Point) -> Fraction:
        return sum((c * v for c, v in zip(alpha.coeffs, x.coords)), Fraction(0))

    def pair_coroot(self, alpha: Root, lam: Sequence[int]) -> int:
        """<alpha, lambda> for lambda over the simple coroots"""
        if alpha.is_positive:
            row = self._coroot_pairing[self._index[alpha.coeffs]]
            return sum(p * l for p, l in zip(row, lam))
        return -self.pair_coroot(-alpha, lam)

    def pair_coroot_index(self, j: int, lam: Sequence[int]) -> int:
        """<beta_j, lambda> for the j-th positive root"""
        return sum(p * l for p, l in zip(self._coroot_pairing[j], lam))

    def lattice_point(self, lam: Sequence[int]) -> Point:
        return Point(tuple(Fraction(c) for c in self.coweight_coords(lam)))

    def fundamental_interior_point(self) -> Point:
        """x0 with every coweight coordinate 1/h; regular and inside the fundamental alcove"""
        return Point(tuple(Fraction(1, self.coxeter_number) for _ in range(self.rank)))

    def reflect_point(self, alpha: Root, x: Point) -> Point:
        """r_alpha(x) = x - pair(alpha, x) alpha^vee"""
        t = self.pair(alpha, x)
        cw = self.coweight_coords(self.coroot_of(alpha))
        return Point(tuple(v - t * c for v, c in zip(x.coords, cw)))

    def alcove_vertices(self) -> Tuple[Point, ...]:
        """Vertices of the fundamental alcove: 0 and omega_i^vee / c_i with theta = sum c_i alpha_i"""
        zero = Point(tuple(Fraction(0) for _ in range(self.rank)))
        vertices = [zero]
        for i, c in enumerate(self.highest_root.coeffs):
            vertices.append(Point(tuple(Fraction(1, c) if k == i else Fraction(0) for k in range(self.rank))))
        return tuple(vertices)


# -- tables ---------------------------------------------------------------


def _read_document(path: str) -> dict:
    with open(path, "r") as handle:
        # JSON is a subset of the YAML flow syntax
        document = yaml.safe_load(handle)
    if not isinstance(document, dict) or document.get("format") != TABLE_FORMAT:
        raise ConfigurationError(f"{path}: not a {TABLE_FORMAT} document")
    if document.get("version") != TABLE_VERSION:
        raise ConfigurationError(f"{path}: unsupported table version {document.get('version')!r}")
    return document


def load_tables(path: Optional[str] = None) -> Dict[str, dict]:
    """
    Load root-system tables

    Args:
        path: Extra table document; entries override the packaged ones

    Returns:
        Dict mapping type label to its table entry
    """
    tables = dict(_read_document(PACKAGED_TABLES)["types"])
    extra = path if path is not None else TABLES_PATH
    if extra and os.path.exists(extra):
        tables.update(_read_document(extra)["types"])
        logger.info("loaded extra root-system tables from %s", extra)
    return tables


def supported_types() -> List[str]:
    return sorted(load_tables())


@lru_cache(maxsize=None)
def build(type_label: str) -> RootSystem:
    """
    Build the root system for a type label

    Args:
        type_label: One of the supported labels, e.g. "A2", "B2", "G2"

    Returns:
        RootSystem: Validated root data
    """
    from src.validators import validate_root_system

    tables = load_tables()
    label = type_label.strip().upper()
    if label not in tables:
        raise ConfigurationError(f"Unknown type {type_label!r}; supported types: {', '.join(sorted(tables))}")
    entry = tables[label]
    rs = RootSystem(label, entry["cartan"])
    result = validate_root_system(rs, entry.get("positive_roots"))
    if not result.success:
        raise ConfigurationError(f"{label}: table fails validation: {'; '.join(result.messages())}")
    logger.debug("built %s with %d positive roots", label, len(rs.positive_roots))
    return rs


def export_table(rs: RootSystem) -> dict:
    """The versioned table document for one root system"""
    return {
        "format": TABLE_FORMAT,
        "version": TABLE_VERSION,
        "types": {
            rs.type_label: {
                "cartan": [list(row) for row in rs.cartan],
                "positive_roots": [list(r.coeffs) for r in rs.positive_roots],
                "highest_root": list(rs.highest_root.coeffs),
                "coxeter_number": rs.coxeter_number,
                "coroots": {r.label: list(rs.coroot_of(r)) for r in rs.positive_roots},
            }
        },
    }


def dumps_table(rs: RootSystem) -> str:
    return json.dumps(export_table(rs), indent=2)

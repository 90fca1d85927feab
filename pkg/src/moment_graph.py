"""Bruhat, modified and undirected moment graphs of W0

Vertices are the elements of W0; u and w = r_alpha * u are joined by an edge
labelled with the positive root alpha. The graphs are networkx graphs whose
edges carry the label under the "label" key.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import networkx as nx

from src.errors import FlavorError
from src.gallery import FoldingPattern
from src.logger import attach_to_log
from src.root_system import Root, RootSystem
from src.weyl import WeylElement, weyl_group

logger = attach_to_log(__name__)

PLAIN = "plain"
MODIFIED = "modified"
UNDIRECTED = "undirected"

Edge = Tuple[WeylElement, WeylElement, Root]


@dataclass(frozen=True)
class MomentGraph:
    rs: RootSystem
    flavor: str
    graph: nx.Graph = field(repr=False, compare=False)
    edges: Tuple[Edge, ...]
    minimal_direction: Optional[WeylElement] = None

    @property
    def vertices(self) -> List[WeylElement]:
        """W0 ordered by length, then lexicographic word"""
        return list(weyl_group(self.rs).elements)

    @property
    def is_directed(self) -> bool:
        return self.flavor != UNDIRECTED

    @property
    def name(self) -> str:
        if self.flavor == MODIFIED:
            return f"{self.rs.type_label}_modified_{self.minimal_direction.name}"
        return f"{self.rs.type_label}_{self.flavor}"

    def label(self, u: WeylElement, w: WeylElement) -> Root:
        return self.graph.edges[u, w]["label"]

    def labelled_edges(self) -> set:
        """Edges as (frozenset of endpoints, label), forgetting directions"""
        return {(frozenset((u, w)), alpha) for u, w, alpha in self.edges}


def _build(rs: RootSystem, flavor: str, points_to=None, minimal_direction=None) -> MomentGraph:
    W = weyl_group(rs)
    graph = nx.DiGraph() if points_to else nx.Graph()
    graph.add_nodes_from(W.elements)
    edges = []
    for u in W.elements:
        for alpha in rs.positive_roots:
            w = W.reflection(alpha) * u
            keep = points_to(alpha, u, w) if points_to else u.index < w.index
            if keep:
                graph.add_edge(u, w, label=alpha)
                edges.append((u, w, alpha))
    logger.debug("%s moment graph of %s: %d edges", flavor, rs.type_label, len(edges))
    return MomentGraph(rs, flavor, graph, tuple(edges), minimal_direction)


def bruhat_moment_graph(rs: RootSystem) -> MomentGraph:
    """Edge u -> r_alpha u whenever it increases length"""
    return _build(rs, PLAIN, lambda alpha, u, w: u.length < w.length)


def modified_moment_graph(rs: RootSystem, v: WeylElement) -> MomentGraph:
    """Edge u -> w when C_w lies on the same side of H_{alpha,0} as C_v"""
    W = weyl_group(rs)
    return _build(
        rs,
        MODIFIED,
        lambda alpha, u, w: W.chamber_side(alpha, w) == W.chamber_side(alpha, v),
        minimal_direction=v,
    )


def undirected_moment_graph(rs: RootSystem) -> MomentGraph:
    return _build(rs, UNDIRECTED)


def directed_paths_from(g: MomentGraph, v: WeylElement) -> List[FoldingPattern]:
    """
    Label sequences of all directed paths starting at v, the empty path included

    Args:
        g: A plain or modified moment graph
        v: Start vertex

    Returns:
        List of FoldingPattern in depth-first order, labels in positive-root order
    """
    if not g.is_directed:
        raise FlavorError("directed paths need a plain or modified moment graph")
    order = {alpha: j for j, alpha in enumerate(g.rs.positive_roots)}
    found = []

    def walk(u: WeylElement, labels: Tuple[Root, ...]):
        found.append(FoldingPattern(labels))
        out = sorted(g.graph.out_edges(u, data="label"), key=lambda e: order[e[2]])
        for _, w, alpha in out:
            walk(w, labels + (alpha,))

    walk(v, ())
    return found


def maximal_paths_from(g: MomentGraph, v: WeylElement) -> List[FoldingPattern]:
    """Label sequences of directed paths from v that end at a sink"""
    return [p for p in directed_paths_from(g, v) if not _extends(g, v, p)]


def _extends(g: MomentGraph, v: WeylElement, pattern: FoldingPattern) -> bool:
    u = walk_undirected(g, v, pattern)
    return g.graph.out_degree(u) > 0


def longest_path_length(g: MomentGraph, v: WeylElement) -> int:
    """Length of the longest directed path starting at v"""
    if not g.is_directed:
        raise FlavorError("path lengths need a plain or modified moment graph")
    reachable = nx.descendants(g.graph, v) | {v}
    return nx.dag_longest_path_length(g.graph.subgraph(reachable))


def has_path(g: MomentGraph, u: WeylElement, w: WeylElement) -> bool:
    return nx.has_path(g.graph, u, w)


def sources(g: MomentGraph) -> List[WeylElement]:
    if not g.is_directed:
        raise FlavorError("sources need a plain or modified moment graph")
    return [u for u in g.vertices if g.graph.in_degree(u) == 0]


def sinks(g: MomentGraph) -> List[WeylElement]:
    if not g.is_directed:
        raise FlavorError("sinks need a plain or modified moment graph")
    return [u for u in g.vertices if g.graph.out_degree(u) == 0]


def walk_undirected(g: MomentGraph, start: WeylElement, pattern) -> WeylElement:
    """Follow, from start, the incident edge carrying each successive label"""
    graph = g.graph.to_undirected(as_view=True) if g.is_directed else g.graph
    current = start
    for alpha in pattern:
        for _, nbr, label in graph.edges(current, data="label"):
            if label == alpha:
                current = nbr
                break
        else:
            raise FlavorError(f"no edge labelled {alpha} at {current}")
    return current


@dataclass
class RotationCertificate:
    """Outcome of comparing a modified moment graph with the Bruhat moment graph"""

    direction: WeylElement
    holds: bool
    same_undirected: bool
    vertex_map: Dict[WeylElement, WeylElement]
    label_map: Dict[Root, Root]
    source: Optional[WeylElement]
    failures: List[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.holds


def verify_modified_is_label_rotation(rs: RootSystem, v: WeylElement) -> RotationCertificate:
    """
    Certify modified(v) as a relabelled copy of the Bruhat moment graph

    The candidate isomorphism sends u to v w0 u and alpha to the positive root of
    v w0 (alpha). The certificate also records whether both graphs share the
    same undirected labelled edges and the unique source of modified(v).
    """
    W = weyl_group(rs)
    plain = bruhat_moment_graph(rs)
    modified = modified_moment_graph(rs, v)
    rotation = v * W.longest
    vertex_map = {u: rotation * u for u in W.elements}
    label_map = {alpha: rotation.apply_root(alpha).positive() for alpha in rs.positive_roots}

    failures = []
    for u, w, alpha in plain.edges:
        image = (vertex_map[u], vertex_map[w])
        if not modified.graph.has_edge(*image):
            failures.append(f"edge {u} -> {w} has no image {image[0]} -> {image[1]}")
        elif modified.label(*image) != label_map[alpha]:
            failures.append(f"edge {u} -> {w} maps to label {modified.label(*image)}, expected {label_map[alpha]}")
    if modified.graph.number_of_edges() != plain.graph.number_of_edges():
        failures.append("edge counts differ")
    if not nx.is_isomorphic(plain.graph, modified.graph):
        failures.append("underlying directed graphs are not isomorphic")

    same_undirected = plain.labelled_edges() == modified.labelled_edges()
    if not same_undirected:
        failures.append("undirected labelled edges differ")

    found = sources(modified)
    return RotationCertificate(
        direction=v,
        holds=not failures,
        same_undirected=same_undirected,
        vertex_map=vertex_map,
        label_map=label_map,
        source=found[0] if len(found) == 1 else None,
        failures=failures,
    )

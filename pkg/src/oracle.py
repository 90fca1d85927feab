"""Brute-force folding enumeration and the exhaustive checks built on it

Every check walks a finite region of alcoves g * c_f with ell(g) <= radius and
returns a VerificationResult; failures are collected as counterexamples, never
raised.
"""

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from src import config
from src.affine import (
    Alcove,
    Region,
    canonical_word,
    chamber_depth,
    chamber_of,
    count_reduced_words,
    distance,
    ell,
    enumerate_region,
    identity,
    in_deep_chamber,
    in_shrunken_chamber,
    local_chamber_of,
    reduced_words,
    simple_affine_generators,
    wall_of_panel,
)
from src.errors import PreconditionError, ResourceError
from src.gallery import (
    FoldingPattern,
    Gallery,
    apply_pattern_greedy,
    crossings,
    from_word,
    is_minimal,
    pattern_of,
    required_crossings,
)
from src.logger import attach_to_log
from src.moment_graph import (
    bruhat_moment_graph,
    directed_paths_from,
    has_path,
    longest_path_length,
    maximal_paths_from,
    modified_moment_graph,
    undirected_moment_graph,
    walk_undirected,
)
from src.orientation import WeylChamberOrientation, gallery_is_positively_folded
from src.root_system import RootSystem
from src.validators import VerificationResult
from src.weyl import WeylElement, weyl_group

logger = attach_to_log(__name__)


@dataclass(frozen=True)
class FoldingResult:
    folds: Tuple[int, ...]
    gallery: Gallery
    pattern: FoldingPattern
    positive: bool

    @property
    def end(self) -> Alcove:
        return self.gallery.end

    @property
    def direction(self) -> WeylElement:
        """Spherical direction of the end alcove"""
        return self.gallery.end.spherical


@dataclass
class FoldingReport:
    """All foldings of one unfolded gallery under one orientation"""

    base: Gallery
    orientation: WeylChamberOrientation
    results: List[FoldingResult] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.results)

    @property
    def positive_results(self) -> List[FoldingResult]:
        return [r for r in self.results if r.positive]

    @property
    def positive_patterns(self) -> Set[FoldingPattern]:
        return {r.pattern for r in self.results if r.positive}

    @property
    def end_alcoves(self) -> Set[Alcove]:
        return {r.end for r in self.results}

    @property
    def positive_ends(self) -> Set[Alcove]:
        return {r.end for r in self.results if r.positive}

    def max_positive_folds(self) -> int:
        return max((len(r.folds) for r in self.results if r.positive), default=0)


def _foldings(base: Gallery, o: WeylChamberOrientation) -> Iterator[FoldingResult]:
    """Depth-first over fold subsets, unfolded branch first; shares prefixes"""
    generators = simple_affine_generators(base.rs)
    word = base.word
    n = len(word)

    def walk(i, current, alcoves, folds, pattern, positive):
        if i == n:
            yield FoldingResult(folds, Gallery(base.start, word, alcoves), FoldingPattern(pattern), positive)
            return
        s = word[i]
        step = current * generators[s]
        yield from walk(i + 1, step, alcoves + (step,), folds, pattern, positive)
        wall = wall_of_panel(current, s)
        yield from walk(
            i + 1,
            current,
            alcoves + (current,),
            folds + (i + 1,),
            pattern + (wall.root,),
            positive and o.sign(wall, current) == 1,
        )

    yield from walk(0, base.start, (), (), (), True)


def _check_cap(g: Gallery, cap: Optional[int]):
    cap = config.FOLD_CAP if cap is None else cap
    if len(g) > cap:
        raise ResourceError(
            f"gallery of {len(g)} steps exceeds the fold cap of {cap}; use a smaller region or raise COXETER_FOLD_CAP"
        )


def enumerate_foldings(g: Gallery, o: WeylChamberOrientation, cap: Optional[int] = None) -> FoldingReport:
    """
    Fold a minimal gallery at every subset of its steps

    Args:
        g: Minimal gallery
        o: Orientation deciding positivity
        cap: Maximum step count, COXETER_FOLD_CAP by default

    Returns:
        FoldingReport: 2^steps results
    """
    if not is_minimal(g):
        raise PreconditionError("fold enumeration needs a minimal gallery")
    _check_cap(g, cap)
    return FoldingReport(g, o, list(_foldings(g, o)))


def shadow(rs: RootSystem, word: Sequence[int], o: WeylChamberOrientation, cap: Optional[int] = None) -> Set[Alcove]:
    """End alcoves of all positively folded galleries of this type from c_f"""
    g = from_word(identity(rs), word)
    _check_cap(g, cap)
    return {r.end for r in _foldings(g, o) if r.positive}


# -- shared helpers -------------------------------------------------------


@lru_cache(maxsize=16)
def _region(rs: RootSystem, radius: int) -> Region:
    return enumerate_region(rs, radius)


def _radius(rs: RootSystem, radius: Optional[int]) -> int:
    return config.default_radius(rs.rank) if radius is None else radius


def minimal_words(x: Alcove, cap: Optional[int] = None) -> List[Tuple[int, ...]]:
    """Every reduced word of x when there are at most cap of them, else only the canonical one"""
    cap = config.REDUCED_WORD_CAP if cap is None else cap
    if count_reduced_words(x) <= cap:
        return reduced_words(x, cap)
    return [canonical_word(x)]


def _predicted(rs: RootSystem, w: WeylElement) -> Dict[WeylElement, Set[FoldingPattern]]:
    graph = modified_moment_graph(rs, w)
    return {v: set(directed_paths_from(graph, v)) for v in weyl_group(rs).elements}


def _orientation(w: WeylElement) -> WeylChamberOrientation:
    return WeylChamberOrientation(w)


# -- realizability --------------------------------------------------------


def realizable_patterns(
    rs: RootSystem,
    x: Alcove,
    patterns: Iterable[Sequence],
    o: Optional[WeylChamberOrientation] = None,
) -> Dict[FoldingPattern, Gallery]:
    """
    Patterns that some minimal gallery from c_f to x can be folded into

    For each pattern the required crossing classes must occur, in order, among
    the crossings of one minimal gallery. A dynamic programme over the alcoves
    between c_f and x keeps, per alcove, the furthest progress through every
    pattern together with a word reaching it. The witness word is then folded
    greedily; with an orientation only positively folded witnesses count.

    Returns:
        Mapping of each realized pattern to a folded witness gallery
    """
    targets = [FoldingPattern(tuple(p)) for p in patterns]
    needed = [required_crossings(rs, p) for p in targets]
    generators = simple_affine_generators(rs)
    start = identity(rs)
    total = ell(x)

    # progress[a][k] = (matched prefix length of needed[k], word reaching a)
    progress: Dict[Alcove, List[Tuple[int, Tuple[int, ...]]]] = {start: [(0, ())] * len(targets)}
    layer = [start]
    for _ in range(total):
        nxt: Dict[Alcove, List[Tuple[int, Tuple[int, ...]]]] = {}
        for a in layer:
            remaining = distance(a, x)
            for s, gen in enumerate(generators):
                b = a * gen
                if distance(b, x) != remaining - 1:
                    continue
                crossed = wall_of_panel(a, s).root
                states = nxt.setdefault(b, [(-1, ())] * len(targets))
                for k, (matched, word) in enumerate(progress[a]):
                    gained = matched + (1 if matched < len(needed[k]) and needed[k][matched] == crossed else 0)
                    if gained > states[k][0]:
                        states[k] = (gained, word + (s,))
        progress.update(nxt)
        layer = list(nxt)

    realized = {}
    for k, pattern in enumerate(targets):
        matched, word = progress[x][k]
        if matched < len(needed[k]):
            continue
        witness = apply_pattern_greedy(from_word(start, word), pattern)
        if witness is None or pattern_of(witness) != pattern:
            continue
        if o is not None and not gallery_is_positively_folded(o, witness):
            continue
        realized[pattern] = witness
    return realized


def naive_subset(rs: RootSystem, w: WeylElement, v: WeylElement) -> int:
    """l_p: the longest directed path from v in modified(w)"""
    return longest_path_length(modified_moment_graph(rs, w), v)


def x_set(rs: RootSystem, w: WeylElement, v: WeylElement, radius: Optional[int] = None) -> Set[Alcove]:
    """Alcoves of C_v in the region where every maximal directed-path sequence from v is realized positively"""
    graph = modified_moment_graph(rs, w)
    wanted = maximal_paths_from(graph, v)
    o = _orientation(w)
    found = set()
    for x in _region(rs, _radius(rs, radius)).in_chamber(v):
        if len(realizable_patterns(rs, x, wanted, o)) == len(wanted):
            found.add(x)
    logger.info("x_set %s phi_%s C_%s: %d alcoves", rs.type_label, w.name, v.name, len(found))
    return found


def x_set_for_pattern(
    rs: RootSystem, w: WeylElement, v: WeylElement, pattern: Sequence, radius: Optional[int] = None
) -> Set[Alcove]:
    """Alcoves of C_v in the region where the single pattern is realized positively"""
    o = _orientation(w)
    return {
        x for x in _region(rs, _radius(rs, radius)).in_chamber(v) if realizable_patterns(rs, x, [pattern], o)
    }


def completeness_depths(rs: RootSystem, w: WeylElement, radius: Optional[int] = None) -> Dict[WeylElement, dict]:
    """
    Per chamber, the depth from which every region alcove realizes all sequences

    Returns:
        {v: {"depth": d, "l_p": longest path from v, "alcoves": n}}; d is one more
        than the deepest alcove that misses a sequence, 0 if none does
    """
    graph = modified_moment_graph(rs, w)
    o = _orientation(w)
    region = _region(rs, _radius(rs, radius))
    depths = {}
    for v in weyl_group(rs).elements:
        wanted = maximal_paths_from(graph, v)
        alcoves = region.in_chamber(v)
        missing = [x for x in alcoves if len(realizable_patterns(rs, x, wanted, o)) < len(wanted)]
        depths[v] = {
            "depth": 1 + max((chamber_depth(x, v) for x in missing), default=-1),
            "l_p": longest_path_length(graph, v),
            "alcoves": len(alcoves),
        }
    return depths


def bruhat_interval_via_folding(rs: RootSystem, w: WeylElement) -> List[WeylElement]:
    """End directions of all foldings of the gallery of w's canonical word, in W0 order"""
    g = from_word(identity(rs), w.word)
    ends = {r.direction for r in _foldings(g, _orientation(w))}
    return [u for u in weyl_group(rs).elements if u in ends]


# -- exhaustive checks ----------------------------------------------------


def check_pattern_theorem(
    rs: RootSystem, w: WeylElement, radius: Optional[int] = None, word_cap: Optional[int] = None
) -> VerificationResult:
    """
    Positive folding patterns against directed paths in modified(w)

    Soundness is checked for every minimal gallery considered: each realized
    positive pattern must be a directed-path sequence from the end chamber.
    Completeness is checked where the end alcove lies at depth l_p inside its
    chamber: every directed-path sequence must be realized by some minimal
    gallery. Prefix closure and the fold-count bound are checked on the way.
    """
    radius = _radius(rs, radius)
    result = VerificationResult("patterns", type=rs.type_label, orientation=w.name, radius=radius)
    o = _orientation(w)
    W = weyl_group(rs)
    graph = modified_moment_graph(rs, w)
    predicted = _predicted(rs, w)
    l_w0 = W.longest.length
    best = 0
    deepest_missing: Dict[WeylElement, int] = {}

    for x in _region(rs, radius):
        v = chamber_of(x)
        seen: Set[FoldingPattern] = set()
        for word in minimal_words(x, word_cap):
            report = enumerate_foldings(from_word(identity(rs), word), o)
            result.count("galleries")
            result.count("foldings", len(report))
            patterns = report.positive_patterns
            seen |= patterns
            for pattern in patterns - predicted[v]:
                result.add_counterexample(
                    f"{pattern} is realized positively on {word} but is not a path from {v}",
                    kind="soundness", alcove=str(x), word=list(word), pattern=pattern.label,
                )
            for pattern in patterns:
                if pattern.roots and FoldingPattern(pattern.roots[:-1]) not in patterns:
                    result.add_counterexample(f"{pattern} realized without its prefix on {word}", kind="prefix")
            best = max(best, report.max_positive_folds())

        missing = predicted[v] - seen
        if missing:
            missing -= set(realizable_patterns(rs, x, missing, o))
        if missing:
            deepest_missing[v] = max(deepest_missing.get(v, -1), chamber_depth(x, v))

        l_p = longest_path_length(graph, v)
        if in_deep_chamber(x, v, l_p):
            result.count("completeness alcoves")
            realized = realizable_patterns(rs, x, predicted[v], o)
            for pattern in sorted(predicted[v] - set(realized), key=lambda p: p.label):
                result.add_counterexample(
                    f"{pattern} is a path from {v} but no minimal gallery to {x} realizes it",
                    kind="completeness", alcove=str(x), pattern=pattern.label,
                )

    if best > l_w0:
        result.add_counterexample(f"{best} positive folds exceed l(w0) = {l_w0}", kind="fold-bound")
    result.details["max_positive_folds"] = best
    result.details["l_w0"] = l_w0
    depths = {}
    for v in W.elements:
        depth = 1 + deepest_missing.get(v, -1)
        l_p = longest_path_length(graph, v)
        depths[v.name] = {"depth": depth, "l_p": l_p}
        result.add_note(f"C_{v.name}: every sequence is realized from depth {depth} on (l_p = {l_p})")
    result.details["completeness_depths"] = depths
    logger.info("pattern theorem %s phi_%s: %d counterexamples", rs.type_label, w.name, result.counterexample_count)
    return result


def _all_words(rank: int, max_length: int) -> Iterator[Tuple[int, ...]]:
    for n in range(max_length + 1):
        yield from itertools.product(range(rank + 1), repeat=n)


def minimality_trichotomy(g: Gallery, o: WeylChamberOrientation) -> bool:
    """
    For every positive root alpha one of:
      m != 0 and all alpha-crossings in one direction;
      m = 0, C_u on the positive side of H_{alpha,0}, no alpha-crossing;
      m = 0, C_u on the negative side of H_{alpha,0}, exactly one alpha-crossing;
    with (lambda, u) the end of g and m = <alpha, lambda>
    """
    rs = g.rs
    end = g.end
    W = weyl_group(rs)
    by_class: Dict = {}
    for i, wall in crossings(g):
        by_class.setdefault(wall.root, []).append(o.sign(wall, g.alcove(i - 1)))
    for alpha in rs.positive_roots:
        m = rs.pair_coroot(alpha, end.translation)
        signs = by_class.get(alpha, [])
        if m != 0:
            ok = len(set(signs)) <= 1
        elif W.chamber_side(alpha, end.spherical) > 0:
            ok = not signs
        else:
            ok = len(signs) == 1
        if not ok:
            return False
    return True


def check_minimality_lemma(rs: RootSystem, w: WeylElement, max_length: int = 8) -> VerificationResult:
    """is_minimal against the per-root trichotomy for every affine word up to max_length"""
    result = VerificationResult("minimality", type=rs.type_label, orientation=w.name, max_length=max_length)
    o = _orientation(w)
    start = identity(rs)
    for word in _all_words(rs.rank, max_length):
        g = from_word(start, word)
        minimal = is_minimal(g)
        if minimal != minimality_trichotomy(g, o):
            result.add_counterexample(f"{list(word)}: minimal={minimal} disagrees with the trichotomy", word=list(word))
        result.count("minimal" if minimal else "non-minimal")
    return result


def _crossing_law(result: VerificationResult, g: Gallery, v: WeylElement, o: WeylChamberOrientation):
    """Crossing of class alpha is positive iff C_v and C_w lie on opposite sides of H_{alpha,0}"""
    W = weyl_group(g.rs)
    for i, wall in crossings(g):
        positive = o.sign(wall, g.alcove(i - 1)) == 1
        expected = W.chamber_side(wall.root, v) != W.chamber_side(wall.root, o.direction)
        if positive != expected:
            result.add_counterexample(
                f"step {i} of {list(g.word)} from {g.start} crosses {wall} {'positively' if positive else 'negatively'}",
                start=str(g.start), word=list(g.word), step=i,
            )
        result.count("crossings")


def check_crossing_direction(
    rs: RootSystem, w: WeylElement, radius: Optional[int] = None, word_cap: Optional[int] = None
) -> VerificationResult:
    """Crossing directions of minimal galleries from c_f against the chamber-side law"""
    radius = _radius(rs, radius)
    result = VerificationResult("crossings", type=rs.type_label, orientation=w.name, radius=radius)
    o = _orientation(w)
    for x in _region(rs, radius):
        v = chamber_of(x)
        for word in minimal_words(x, word_cap):
            _crossing_law(result, from_word(identity(rs), word), v, o)
            result.count("galleries")
    return result


def check_crossing_direction_translated(
    rs: RootSystem, w: WeylElement, radius: Optional[int] = None, samples: int = 100, seed: int = 0
) -> VerificationResult:
    """
    The same law for minimal galleries from y * c_f, y = t^mu u, to x

    The end chamber is the local chamber of x at the vertex mu. Pairs (y, z)
    are drawn from the region with a seeded generator and x = y z.
    """
    radius = _radius(rs, radius)
    result = VerificationResult(
        "crossings-translated", type=rs.type_label, orientation=w.name, radius=radius, samples=samples, seed=seed
    )
    o = _orientation(w)
    region = _region(rs, radius)
    rng = random.Random(seed)
    alcoves = region.alcoves
    for _ in range(samples):
        y = rng.choice(alcoves)
        z = rng.choice(alcoves)
        g = from_word(y, region.canonical_word(z))
        v = local_chamber_of(g.end, y.translation)
        _crossing_law(result, g, v, o)
        result.count("galleries")
    return result


def check_spherical_direction(
    rs: RootSystem, w: WeylElement, radius: Optional[int] = None, word_cap: Optional[int] = 1
) -> VerificationResult:
    """Spherical direction of every folded end against the undirected walk from the unfolded end"""
    radius = _radius(rs, radius)
    result = VerificationResult("direction", type=rs.type_label, orientation=w.name, radius=radius)
    o = _orientation(w)
    undirected = undirected_moment_graph(rs)
    for x in _region(rs, radius):
        for word in minimal_words(x, word_cap):
            for r in _foldings(from_word(identity(rs), word), o):
                walked = walk_undirected(undirected, x.spherical, r.pattern)
                if walked != r.direction:
                    result.add_counterexample(
                        f"folds {list(r.folds)} of {list(word)} end in direction {r.direction}, walk gives {walked}",
                        word=list(word), folds=list(r.folds),
                    )
                result.count("foldings")
    return result


def check_gallery_independence(
    rs: RootSystem, w: WeylElement, radius: Optional[int] = None, word_cap: Optional[int] = None
) -> VerificationResult:
    """
    Compare positive pattern sets across the reduced words of deep alcoves

    Alcoves at depth l_p in their chamber are considered; each difference
    between two minimal galleries to the same alcove is a counterexample.
    """
    radius = _radius(rs, radius)
    result = VerificationResult("independence", type=rs.type_label, orientation=w.name, radius=radius)
    o = _orientation(w)
    graph = modified_moment_graph(rs, w)
    for x in _region(rs, radius):
        v = chamber_of(x)
        if not in_deep_chamber(x, v, longest_path_length(graph, v)):
            continue
        words = minimal_words(x, word_cap)
        if len(words) < 2:
            continue
        result.count("alcoves")
        reference = enumerate_foldings(from_word(identity(rs), words[0]), o).positive_patterns
        for word in words[1:]:
            patterns = enumerate_foldings(from_word(identity(rs), word), o).positive_patterns
            if patterns != reference:
                diff = sorted(p.label for p in patterns ^ reference)
                result.add_counterexample(
                    f"{list(words[0])} and {list(word)} to {x} differ in {', '.join(diff)}",
                    alcove=str(x), words=[list(words[0]), list(word)], patterns=diff,
                )
    return result


def check_shrunken_chamber(rs: RootSystem, w: WeylElement, v: WeylElement, radius: Optional[int] = None) -> VerificationResult:
    """Region alcoves of the level-l_p shrunken chamber of C_v against x_set"""
    radius = _radius(rs, radius)
    level = naive_subset(rs, w, v)
    result = VerificationResult("xset", type=rs.type_label, orientation=w.name, chamber=v.name, radius=radius)
    found = x_set(rs, w, v, radius)
    shrunken = {x for x in _region(rs, radius).in_chamber(v) if in_shrunken_chamber(x, v, level)}
    for x in sorted(shrunken - found, key=str):
        result.add_counterexample(f"{x} lies in the level-{level} shrunken chamber but not in the X-set", alcove=str(x))
    result.details.update({"l_p": level, "x_set": len(found), "shrunken": len(shrunken)})
    return result


def check_bruhat_interval(rs: RootSystem) -> VerificationResult:
    """Subword ends of every w against reachability in the Bruhat moment graph"""
    result = VerificationResult("bruhat-interval", type=rs.type_label)
    plain = bruhat_moment_graph(rs)
    W = weyl_group(rs)
    for w in W.elements:
        ends = set(bruhat_interval_via_folding(rs, w))
        below = {u for u in W.elements if has_path(plain, u, w)}
        if ends != below:
            result.add_counterexample(f"folding ends of {w} differ from its lower interval", element=w.name)
        result.count("elements")
    return result


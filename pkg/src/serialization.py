"""Parsing of roots and words, and JSON codecs for alcoves, walls and galleries"""

import json
import re
from typing import List, Tuple

from src.affine import AffineElement, Alcove, Hyperplane, chamber_of
from src.errors import ParseError, PreconditionError
from src.gallery import FoldingPattern, Gallery, from_folds, pattern_of
from src.orientation import WeylChamberOrientation
from src.root_system import Root, RootSystem
from src.weyl import WeylElement, weyl_group

_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*a(\d+)\s*")
_GENERATOR = re.compile(r"s?(\d+)")


def parse_root(rs: RootSystem, text: str) -> Root:
    """
    Parse a root string

    Accepted forms: 'a1+a2', '2a1+a2', '-a2', 'theta', '[1,1]', '1,1', '1 1'
    """
    stripped = text.strip()
    if stripped.lower() == "theta":
        return rs.highest_root
    if "a" in stripped:
        coeffs = [0] * rs.rank
        position = 0
        while position < len(text):
            match = _TERM.match(text, position)
            if not match or match.end() == position:
                raise ParseError("expected a term like 'a1' or '2a3'", text, position)
            sign, count, index = match.groups()
            if position > 0 and not sign and text[:position].strip():
                raise ParseError("terms must be joined by '+' or '-'", text, position)
            i = int(index)
            if not 1 <= i <= rs.rank:
                raise ParseError(f"simple root index {i} out of range 1..{rs.rank}", text, match.start(3))
            coeffs[i - 1] += (-1 if sign == "-" else 1) * (int(count) if count else 1)
            position = match.end()
    else:
        parts = [p for p in re.split(r"[\s,]+", stripped.strip("[]()")) if p]
        try:
            coeffs = [int(p) for p in parts]
        except ValueError:
            raise ParseError("expected integer coefficients", text, 0)
        if len(coeffs) != rs.rank:
            raise ParseError(f"expected {rs.rank} coefficients, got {len(coeffs)}", text, 0)
    if not any(coeffs):
        raise ParseError("the zero vector is not a root", text, 0)
    root = Root(tuple(coeffs))
    if not rs.is_root(root):
        raise ParseError(f"{root.coeffs} is not a root of {rs.type_label}", text, 0)
    return root


def parse_pattern(rs: RootSystem, text: str) -> FoldingPattern:
    """
    Parse a folding pattern: positive roots separated by ';', e.g. 'a1+a2;a1'

    Pattern entries are parallelism classes, so negative roots are rejected.
    """
    roots = []
    position = 0
    for part in text.split(";"):
        root = parse_root(rs, part)
        if not root.is_positive:
            raise ParseError(f"pattern entries must be positive roots, got {root.label}", text, position)
        roots.append(root)
        position += len(part) + 1
    return FoldingPattern(tuple(roots))


def _generators(text: str, low: int, high: int) -> Tuple[int, ...]:
    """Generator indices from 's1 s2', 's1s2', '1 2' or '1,2'"""
    compact = text.strip()
    word = []
    position = 0
    while position < len(compact):
        if compact[position] in " ,;":
            position += 1
            continue
        match = _GENERATOR.match(compact, position)
        if not match:
            raise ParseError("expected a generator like 's1' or '1'", text, position)
        digits = match.group(1)
        # 's12' means s1 s2 when every index has one digit
        indices = [int(d) for d in digits] if compact[position] == "s" and high < 10 else [int(digits)]
        for i in indices:
            if not low <= i <= high:
                raise ParseError(f"generator {i} out of range {low}..{high}", text, match.start(1))
            word.append(i)
        position = match.end()
    return tuple(word)


def parse_weyl_word(rs: RootSystem, text: str) -> WeylElement:
    """A W0 element from 'e', 'w0' or a word over s1..sn"""
    W = weyl_group(rs)
    stripped = text.strip().lower()
    if stripped in ("", "e", "id"):
        return W.identity
    if stripped == "w0":
        return W.longest
    return W.element(_generators(stripped, 1, rs.rank))


def parse_affine_word(rs: RootSystem, text: str) -> Tuple[int, ...]:
    """A type word over s0..sn; '' and 'e' give the empty word"""
    stripped = text.strip().lower()
    if stripped in ("", "e"):
        return ()
    return _generators(stripped, 0, rs.rank)


def parse_folds(text: str) -> Tuple[int, ...]:
    """Fold indices from '3,9' or '3 9'"""
    parts = [p for p in re.split(r"[\s,]+", text.strip()) if p]
    folds = []
    for p in parts:
        if not p.isdigit():
            raise ParseError("fold indices must be positive integers", text, text.find(p))
        folds.append(int(p))
    return tuple(sorted(set(folds)))


def parse_orientation(rs: RootSystem, text: str) -> WeylChamberOrientation:
    return WeylChamberOrientation(parse_weyl_word(rs, text))


# -- JSON codecs ----------------------------------------------------------


def alcove_to_dict(a: Alcove) -> dict:
    return {
        "translation": list(a.translation),
        "spherical": list(a.spherical.word),
        "label": str(a),
        "chamber": chamber_of(a).name,
    }


def alcove_from_dict(rs: RootSystem, data: dict) -> Alcove:
    translation = tuple(int(c) for c in data["translation"])
    if len(translation) != rs.rank:
        raise ParseError(f"translation needs {rs.rank} coordinates")
    return AffineElement(translation, weyl_group(rs).element(data["spherical"]))


def hyperplane_to_dict(h: Hyperplane) -> dict:
    return {"root": list(h.root.coeffs), "label": h.root.label, "level": h.level}


def pattern_to_list(pattern: FoldingPattern) -> List[str]:
    return [r.label for r in pattern]


def gallery_to_dict(g: Gallery) -> dict:
    """Start, type, folds, walls, end and pattern; start/type/folds determine the gallery"""
    return {
        "type": g.rs.type_label,
        "start": alcove_to_dict(g.start),
        "word": list(g.word),
        "folds": list(g.folds),
        "walls": [hyperplane_to_dict(g.wall(i)) for i in range(1, len(g) + 1)],
        "end": alcove_to_dict(g.end),
        "pattern": pattern_to_list(pattern_of(g)),
    }


def gallery_from_dict(rs: RootSystem, data: dict) -> Gallery:
    if data.get("type", rs.type_label) != rs.type_label:
        raise PreconditionError(f"gallery of type {data['type']} read as {rs.type_label}")
    return from_folds(alcove_from_dict(rs, data["start"]), tuple(data["word"]), data.get("folds", ()))


def dumps(data, indent: int = 2) -> str:
    return json.dumps(data, indent=indent, sort_keys=False)


def loads_galleries(rs: RootSystem, text: str) -> List[Gallery]:
    """A JSON gallery or a list of them, optionally wrapped as {"galleries": [...]}"""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", text[:40], e.pos)
    if isinstance(data, dict) and "galleries" in data:
        data = data["galleries"]
    if isinstance(data, dict):
        data = [data]
    return [gallery_from_dict(rs, item) for item in data]

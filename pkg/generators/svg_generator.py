"""SVG rendering of rank-2 alcove tilings with galleries"""

import math
import os
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from src.affine import Alcove, Hyperplane, chamber_of, enumerate_region, in_shrunken_chamber, strip_indices
from src.errors import RenderError
from src.gallery import Gallery
from src.logger import attach_to_log
from src.orientation import WeylChamberOrientation
from src.root_system import Point, RootSystem
from src.weyl import WeylElement

logger = attach_to_log(__name__)

# Angle between alpha_1 and alpha_2 in degrees
EMBEDDING_ANGLES = {"A2": 120, "B2": 135, "G2": 150}

PIXELS_PER_UNIT = 60
MARGIN = 30
CHAMBER_FILLS = ("#f4f1de", "#e0ecf4", "#fde0dd", "#e5f5e0", "#f2e6f7", "#fff7bc", "#deebf7", "#fee6ce",
                 "#efedf5", "#e7e1ef", "#ece2f0", "#f7fcb9")
GALLERY_COLORS = ("#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


@dataclass
class RenderScene:
    """
    Exact geometry of a rank-2 window: polygons and walls in coweight
    coordinates, converted to pixels only when drawn
    """

    rs: RootSystem
    radius: int
    alcoves: List[Alcove]
    orientation: Optional[WeylChamberOrientation] = None
    galleries: List[Gallery] = field(default_factory=list)
    shrunken: Optional[Tuple[WeylElement, int]] = None

    def polygon(self, a: Alcove) -> List[Point]:
        return [a.apply(p) for p in self.rs.alcove_vertices()]

    def walls(self) -> List[Hyperplane]:
        """Every wall bounding some alcove of the window"""
        found = set()
        for a in self.alcoves:
            for root, strip in zip(self.rs.positive_roots, strip_indices(a)):
                found.add(Hyperplane(root, strip))
                found.add(Hyperplane(root, strip + 1))
        order = {r: j for j, r in enumerate(self.rs.positive_roots)}
        return sorted(found, key=lambda h: (order[h.root], h.level))

    def panel_midpoint(self, a: Alcove, s: int) -> Point:
        """Midpoint of the type-s panel: the alcove vertices other than vertex s"""
        vertices = [p for k, p in enumerate(self.rs.alcove_vertices()) if k != s]
        image = [a.apply(p) for p in vertices]
        return Point(tuple(sum(c) / len(image) for c in zip(*(p.coords for p in image))))

    def path(self, g: Gallery) -> Tuple[List[Point], List[Point]]:
        """Polyline through interior points and panel midpoints, and the fold points"""
        centre = self.rs.fundamental_interior_point()
        points = [g.start.apply(centre)]
        folds = []
        for i in range(1, len(g) + 1):
            mid = self.panel_midpoint(g.alcove(i - 1), g.word[i - 1])
            points.append(mid)
            points.append(g.alcove(i).apply(centre))
            if g.is_folded_at(i):
                folds.append(mid)
        return points, folds


def build_scene(
    rs: RootSystem,
    radius: int,
    orientation: Optional[WeylChamberOrientation] = None,
    galleries: Sequence[Gallery] = (),
    shrunken: Optional[Tuple[WeylElement, int]] = None,
) -> RenderScene:
    """The window is enumerate_region(rs, radius): every alcove with ell <= radius"""
    if rs.rank != 2:
        raise RenderError(f"only rank-2 types can be rendered, {rs.type_label} has rank {rs.rank}; use JSON output")
    if rs.type_label not in EMBEDDING_ANGLES:
        raise RenderError(f"no planar embedding for {rs.type_label}")
    return RenderScene(rs, radius, list(enumerate_region(rs, radius)), orientation, list(galleries), shrunken)


class _Embedding:
    """Euclidean plane with (alpha_i, p) equal to the i-th coweight coordinate of p"""

    def __init__(self, rs: RootSystem):
        angle = math.radians(EMBEDDING_ANGLES[rs.type_label])
        l1 = math.sqrt(2 * rs.symmetrizer[0])
        l2 = math.sqrt(2 * rs.symmetrizer[1])
        self.a1 = (l1, 0.0)
        self.a2 = (l2 * math.cos(angle), l2 * math.sin(angle))
        det = self.a1[0] * self.a2[1] - self.a1[1] * self.a2[0]
        # columns are the fundamental coweights
        self.w1 = (self.a2[1] / det, -self.a2[0] / det)
        self.w2 = (-self.a1[1] / det, self.a1[0] / det)

    def plane(self, x: Sequence[Fraction]) -> Tuple[float, float]:
        x1, x2 = float(x[0]), float(x[1])
        return (x1 * self.w1[0] + x2 * self.w2[0], x1 * self.w1[1] + x2 * self.w2[1])

    def normal(self, coeffs: Sequence[int]) -> Tuple[float, float]:
        return (coeffs[0] * self.a1[0] + coeffs[1] * self.a2[0], coeffs[0] * self.a1[1] + coeffs[1] * self.a2[1])


class SvgGenerator:
    """Generator for SVG drawings of a RenderScene"""

    def generate(self, scene: RenderScene, name: Optional[str] = None) -> Dict[str, str]:
        return {f"{name or scene.rs.type_label + '_alcoves'}.svg": self.render(scene)}

    def render(self, scene: RenderScene) -> str:
        emb = _Embedding(scene.rs)
        polygons = {a: [emb.plane(p.coords) for p in scene.polygon(a)] for a in scene.alcoves}
        xs = [x for poly in polygons.values() for x, _ in poly]
        ys = [y for poly in polygons.values() for _, y in poly]
        lo = (min(xs), min(ys))
        hi = (max(xs), max(ys))
        width = int((hi[0] - lo[0]) * PIXELS_PER_UNIT) + 2 * MARGIN
        height = int((hi[1] - lo[1]) * PIXELS_PER_UNIT) + 2 * MARGIN

        def px(q: Tuple[float, float]) -> Tuple[str, str]:
            x = MARGIN + (q[0] - lo[0]) * PIXELS_PER_UNIT
            y = height - MARGIN - (q[1] - lo[1]) * PIXELS_PER_UNIT
            return f"{x:.2f}", f"{y:.2f}"

        svg = ET.Element(
            "svg", xmlns="http://www.w3.org/2000/svg", version="1.1",
            width=f"{width}px", height=f"{height}px", viewBox=f"0 0 {width} {height}",
        )

        tiles = ET.SubElement(svg, "g", id="alcoves", stroke="#bbbbbb")
        for a in scene.alcoves:
            fill = CHAMBER_FILLS[chamber_of(a).index % len(CHAMBER_FILLS)]
            if scene.shrunken and in_shrunken_chamber(a, *scene.shrunken):
                fill = "#74c476"
            ET.SubElement(tiles, "path", d=self._loop([px(q) for q in polygons[a]]), fill=fill)

        walls = ET.SubElement(svg, "g", id="walls", stroke="#555555")
        for h in scene.walls():
            segment = self._clip(emb, h, lo, hi)
            if segment is None:
                continue
            start, end = segment
            ET.SubElement(walls, "path", d=self._line([px(start), px(end)]))
            if scene.orientation is not None:
                self._decorate(walls, emb, h, scene.orientation, end, px)

        for k, g in enumerate(scene.galleries):
            color = GALLERY_COLORS[k % len(GALLERY_COLORS)]
            points, folds = scene.path(g)
            group = ET.SubElement(svg, "g", id=f"gallery-{k + 1}", stroke=color, fill="none")
            group.set("stroke-width", "2")
            ET.SubElement(group, "path", d=self._line([px(emb.plane(p.coords)) for p in points]))
            for p in folds:
                cx, cy = px(emb.plane(p.coords))
                ET.SubElement(group, "circle", cx=cx, cy=cy, r="4", fill=color)

        return ET.tostring(svg, encoding="unicode") + "\n"

    @staticmethod
    def _line(points: List[Tuple[str, str]]) -> str:
        return "M" + "L".join(f"{x} {y}" for x, y in points)

    def _loop(self, points: List[Tuple[str, str]]) -> str:
        return self._line(points) + "z"

    @staticmethod
    def _clip(emb: _Embedding, h: Hyperplane, lo, hi):
        """The part of the wall inside the bounding box, or None"""
        n = emb.normal(h.root.coeffs)
        k = float(h.level)
        corners = [(lo[0], lo[1]), (hi[0], lo[1]), (hi[0], hi[1]), (lo[0], hi[1])]
        found = []
        for p, q in zip(corners, corners[1:] + corners[:1]):
            fp = n[0] * p[0] + n[1] * p[1] - k
            fq = n[0] * q[0] + n[1] * q[1] - k
            if fp == fq or fp * fq > 0:
                continue
            t = fp / (fp - fq)
            found.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
        if len(found) < 2:
            return None
        return found[0], found[-1]

    @staticmethod
    def _decorate(parent, emb: _Embedding, h: Hyperplane, o: WeylChamberOrientation, end, px):
        """'+' on the positive side of the wall near its end, '-' on the other"""
        n = emb.normal(h.root.coeffs)
        norm = math.hypot(*n)
        positive = o.direction.group.chamber_side(h.root, o.direction)
        offset = 0.12 / norm
        for mark, sign in (("+", positive), ("-", -positive)):
            x, y = px((end[0] + sign * offset * n[0], end[1] + sign * offset * n[1]))
            text = ET.SubElement(parent, "text", x=x, y=y, stroke="none", fill="#333333")
            text.set("font-size", "10")
            text.text = mark

    def save_outputs(self, files: Dict[str, str], output_dir: str) -> List[str]:
        os.makedirs(output_dir, exist_ok=True)
        written = []
        for filename, content in files.items():
            filepath = os.path.join(output_dir, filename)
            with open(filepath, "w") as f:
                f.write(content)
            logger.info("wrote %s", filepath)
            written.append(filepath)
        return written

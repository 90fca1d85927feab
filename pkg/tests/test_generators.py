from __future__ import annotations

import json
import xml.etree.ElementTree as ET

import pytest
import yaml

from generators.dot_generator import DotGenerator
from generators.report_generator import ReportGenerator, moment_graph_to_dict
from generators.svg_generator import SvgGenerator, build_scene
from src.errors import RenderError
from src.gallery import fold_set
from src.moment_graph import bruhat_moment_graph, modified_moment_graph
from src.orientation import WeylChamberOrientation
from src.root_system import build
from src.weyl import weyl_group

SVG = "{http://www.w3.org/2000/svg}"


def test_dot_groups_vertices_by_length(a2):
    text = DotGenerator().render(bruhat_moment_graph(a2))
    assert text.count("rank = same;") == 4
    assert '"s1s2" -> "s1s2s1" [label="a2"];' in text


def test_dot_files_are_named_after_the_graph(a2, tmp_path):
    generator = DotGenerator()
    graph = modified_moment_graph(a2, weyl_group(a2).element((1,)))
    files = generator.generate(graph)
    assert list(files) == ["A2_modified_s1.gv"]
    written = generator.save_outputs(files, str(tmp_path / "out"))
    assert (tmp_path / "out" / "A2_modified_s1.gv").read_text() == files["A2_modified_s1.gv"]
    assert len(written) == 1


def test_reports_in_both_formats(b2):
    data = moment_graph_to_dict(bruhat_moment_graph(b2))
    assert json.loads(ReportGenerator("json").render(data)) == data
    assert yaml.safe_load(ReportGenerator("yaml").render(data)) == data
    assert list(ReportGenerator("yaml").generate("graph", data)) == ["graph.yaml"]
    with pytest.raises(ValueError):
        ReportGenerator("xml")


def test_moment_graph_document(a2):
    data = moment_graph_to_dict(bruhat_moment_graph(a2))
    assert [n["name"] for n in data["nodes"]] == ["e", "s1", "s2", "s1s2", "s2s1", "s1s2s1"]
    assert data["minimal_direction"] is None


def test_svg_draws_every_alcove(a2):
    scene = build_scene(a2, 2, WeylChamberOrientation(weyl_group(a2).longest))
    root = ET.fromstring(SvgGenerator().render(scene))
    tiles = root.find(f"{SVG}g[@id='alcoves']")
    assert len(tiles) == 10
    assert root.find(f"{SVG}g[@id='walls']").findall(f"{SVG}text")


def test_svg_marks_folds(a2, a2_long_gallery):
    g = fold_set(a2_long_gallery, (3, 9))
    scene = build_scene(a2, 9, galleries=[g])
    points, folds = scene.path(g)
    assert len(points) == 2 * len(g) + 1
    assert len(folds) == 2
    root = ET.fromstring(SvgGenerator().render(scene))
    assert len(root.find(f"{SVG}g[@id='gallery-1']").findall(f"{SVG}circle")) == 2


def test_svg_shades_the_shrunken_chamber(a2):
    W = weyl_group(a2)
    text = SvgGenerator().render(build_scene(a2, 4, shrunken=(W.identity, 1)))
    assert "#74c476" in text


@pytest.mark.parametrize("label", ["A3", "B3"])
def test_only_rank_two_is_rendered(label):
    with pytest.raises(RenderError):
        build_scene(build(label), 2)

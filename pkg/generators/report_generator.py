"""JSON and YAML report generator"""

import json
import os
from typing import Dict, List

import yaml

from src.logger import attach_to_log
from src.moment_graph import MomentGraph

logger = attach_to_log(__name__)

FORMATS = ("json", "yaml")


class ReportGenerator:
    """Serializes command results as JSON or YAML documents"""

    def __init__(self, fmt: str = "json"):
        if fmt not in FORMATS:
            raise ValueError(f"unsupported report format {fmt!r}; choose one of {', '.join(FORMATS)}")
        self.fmt = fmt

    @property
    def extension(self) -> str:
        return "json" if self.fmt == "json" else "yaml"

    def render(self, data) -> str:
        if self.fmt == "json":
            return json.dumps(data, indent=2) + "\n"
        return yaml.safe_dump(data, sort_keys=False, default_flow_style=None)

    def generate(self, name: str, data) -> Dict[str, str]:
        return {f"{name}.{self.extension}": self.render(data)}

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


def moment_graph_to_dict(graph: MomentGraph) -> dict:
    """Adjacency document with vertices by length then lexicographic word"""
    return {
        "type": graph.rs.type_label,
        "flavor": graph.flavor,
        "minimal_direction": graph.minimal_direction.name if graph.minimal_direction else None,
        "nodes": [{"name": u.name, "word": list(u.word), "length": u.length} for u in graph.vertices],
        "edges": [
            {"tail": u.name, "head": w.name, "label": alpha.label, "root": list(alpha.coeffs)}
            for u, w, alpha in graph.edges
        ],
    }

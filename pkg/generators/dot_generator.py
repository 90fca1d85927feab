"""Moment graph DOT Generator"""

import os
from typing import Dict, List

from src.logger import attach_to_log
from src.moment_graph import MomentGraph

logger = attach_to_log(__name__)


class DotGenerator:
    """Generator for graphviz files of moment graphs"""

    def generate(self, graph: MomentGraph) -> Dict[str, str]:
        """
        Render a moment graph in DOT

        Vertices are grouped into one rank per length; directed flavors become
        a digraph, the undirected flavor a graph.

        Args:
            graph: Moment graph of any flavor

        Returns:
            Dict mapping filename to content
        """
        return {f"{graph.name}.gv": self.render(graph)}

    def render(self, graph: MomentGraph) -> str:
        lines: List[str] = []
        write_line = lines.append
        arrow = "->" if graph.is_directed else "--"
        write_line(f"{'digraph' if graph.is_directed else 'graph'} {graph.name} {{")
        write_line("\tgraph [rankdir=BT]")
        write_line("\tnode [shape=ellipse]")

        layers: Dict[int, list] = {}
        for u in graph.vertices:
            layers.setdefault(u.length, []).append(u)
        for length in sorted(layers):
            write_line("\t{")
            write_line("\t\trank = same;")
            for u in layers[length]:
                write_line(f'\t\t"{u.name}" [label="{u.name}"];')
            write_line("\t}")

        for u, w, alpha in graph.edges:
            write_line(f'\t"{u.name}" {arrow} "{w.name}" [label="{alpha.label}"];')
        write_line("}")
        return "\n".join(lines) + "\n"

    def save_outputs(self, files: Dict[str, str], output_dir: str) -> List[str]:
        """
        Save generated files

        Args:
            files: Dict mapping filename to content
            output_dir: Output directory path

        Returns:
            Paths written
        """
        os.makedirs(output_dir, exist_ok=True)
        written = []
        for filename, content in files.items():
            filepath = os.path.join(output_dir, filename)
            with open(filepath, "w") as f:
                f.write(content)
            logger.info("wrote %s", filepath)
            written.append(filepath)
        return written

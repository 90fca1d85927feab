#!/usr/bin/env python3
"""coxeterfold CLI - Folded galleries and moment graphs of affine Coxeter complexes"""

import click

from generators.dot_generator import DotGenerator
from generators.report_generator import ReportGenerator, moment_graph_to_dict
from generators.svg_generator import SvgGenerator, build_scene
from src import __version__
from src.affine import chamber_of, identity, in_shrunken_chamber
from src.config import DEFAULT_TYPE, OUTPUT_DIR, default_radius
from src.errors import CoxeterError
from src.gallery import from_folds, is_minimal, pattern_of, unfold
from src.logger import set_level
from src.moment_graph import (
    bruhat_moment_graph,
    directed_paths_from,
    maximal_paths_from,
    modified_moment_graph,
    undirected_moment_graph,
    walk_undirected,
)
from src.oracle import (
    check_bruhat_interval,
    check_crossing_direction,
    check_crossing_direction_translated,
    check_gallery_independence,
    check_minimality_lemma,
    check_pattern_theorem,
    check_shrunken_chamber,
    check_spherical_direction,
    naive_subset,
    shadow,
    x_set,
    x_set_for_pattern,
)
from src.orientation import fold_is_positive, gallery_is_positively_folded
from src.root_system import build, export_table
from src.serialization import (
    alcove_to_dict,
    gallery_to_dict,
    loads_galleries,
    parse_affine_word,
    parse_folds,
    parse_orientation,
    parse_pattern,
    parse_weyl_word,
    pattern_to_list,
)
from src.weyl import weyl_group

THEOREMS = (
    "patterns",
    "minimality",
    "crossings",
    "crossings-translated",
    "direction",
    "independence",
    "xset",
    "bruhat",
)

EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2


class Settings:
    """Global options shared by every subcommand"""

    def __init__(self, type_label, orientation, fmt, out):
        self.type_label = type_label
        self.orientation_text = orientation
        self.fmt = fmt
        self.out = out

    @property
    def rs(self):
        return build(self.type_label)

    @property
    def orientation(self):
        return parse_orientation(self.rs, self.orientation_text)


def _banner(title: str):
    click.echo("=" * 60)
    click.echo(f"🚀 coxeterfold - {title}")
    click.echo("=" * 60)


def _emit(settings: Settings, name: str, data, title: str):
    """Print the document, or save it under --out with a banner"""
    fmt = "json" if settings.fmt == "dot" else settings.fmt
    generator = ReportGenerator(fmt)
    files = generator.generate(name, data)
    if settings.out is None:
        click.echo(generator.render(data), nl=False)
        return
    _banner(title)
    for path in generator.save_outputs(files, settings.out):
        click.echo(f"✅ Generated: {path}")


def _fail(ctx: click.Context, error: Exception):
    click.echo(f"\n❌ Error: {error}", err=True)
    ctx.exit(EXIT_USAGE)


@click.group()
@click.version_option(version=__version__)
@click.option("--type", "type_label", default=DEFAULT_TYPE, show_default=True, help="Root system type (A1, A2, B2, G2, ...)")
@click.option("--orientation", default="w0", show_default=True, help="Direction w of the orientation phi_w: a word, 'e' or 'w0'")
@click.option("--format", "fmt", type=click.Choice(["json", "yaml", "dot"]), default="json", show_default=True)
@click.option("--out", default=None, help="Output directory; documents go to stdout when omitted")
@click.option("--save", is_flag=True, help=f"Save under --out, or {OUTPUT_DIR} when --out is omitted")
@click.option("--verbose", is_flag=True, help="Log progress at INFO level")
@click.pass_context
def cli(ctx, type_label, orientation, fmt, out, save, verbose):
    """
    🧮 coxeterfold - Folded galleries in affine Coxeter complexes

    Build moment graphs, fold galleries, compute positive folding patterns
    and run exhaustive checks over finite regions of alcoves.
    """
    if verbose:
        set_level("INFO")
    if save and out is None:
        out = OUTPUT_DIR
    ctx.obj = Settings(type_label, orientation, fmt, out)


@cli.command()
@click.pass_context
def roots(ctx):
    """
    Print the root-system table: Cartan matrix, positive roots, coroots

    Example:
        coxeterfold --type B2 roots
    """
    settings = ctx.obj
    try:
        rs = settings.rs
    except CoxeterError as e:
        _fail(ctx, e)
    _emit(settings, f"{rs.type_label}_roots", export_table(rs), f"{rs.type_label} root system")


@cli.command(name="moment-graph")
@click.option("--modified", default=None, help="Minimal element v of the modified moment graph (a W0 word)")
@click.option("--undirected", is_flag=True, help="Forget edge directions")
@click.pass_context
def moment_graph(ctx, modified, undirected):
    """
    Build the Bruhat, modified or undirected moment graph of W0

    Example:
        coxeterfold --type B2 --format dot moment-graph --modified s1
    """
    settings = ctx.obj
    try:
        rs = settings.rs
        if undirected:
            graph = undirected_moment_graph(rs)
        elif modified is not None:
            graph = modified_moment_graph(rs, parse_weyl_word(rs, modified))
        else:
            graph = bruhat_moment_graph(rs)
    except CoxeterError as e:
        _fail(ctx, e)

    if settings.fmt != "dot":
        _emit(settings, graph.name, moment_graph_to_dict(graph), "Moment graph")
        return
    generator = DotGenerator()
    if settings.out is None:
        click.echo(generator.render(graph), nl=False)
        return
    _banner("Moment graph")
    for path in generator.save_outputs(generator.generate(graph), settings.out):
        click.echo(f"✅ Generated: {path}")
    click.echo(f"\n💡 Render with: dot -Tpng -O {settings.out}/{graph.name}.gv")


@cli.command()
@click.option("--word", required=True, help="Type word over s0..sn, e.g. 's0 s1 s2'")
@click.option("--folds", default="", help="Fold indices, e.g. '3,9'")
@click.pass_context
def fold(ctx, word, folds):
    """
    Fold the gallery of a word from the fundamental alcove

    Example:
        coxeterfold --type A2 --orientation w0 fold --word "s0 s1 s2" --folds 2
    """
    settings = ctx.obj
    try:
        rs = settings.rs
        o = settings.orientation
        g = from_folds(identity(rs), parse_affine_word(rs, word), parse_folds(folds))
    except CoxeterError as e:
        _fail(ctx, e)

    base = unfold(g)
    if not is_minimal(base):
        click.echo("⚠️  WARNING: the word is not reduced; the unfolded gallery is not minimal", err=True)
    pattern = pattern_of(g)
    document = gallery_to_dict(g)
    document.update(
        {
            "orientation": o.direction.name,
            "fold_positivity": {str(i): fold_is_positive(o, g, i) for i in g.folds},
            "positively_folded": gallery_is_positively_folded(o, g),
            "minimal_base": is_minimal(base),
            "spherical_direction": g.end.spherical.name,
            "predicted_direction": walk_undirected(undirected_moment_graph(rs), base.end.spherical, pattern).name,
        }
    )
    _emit(settings, "gallery", document, "Folded gallery")


@cli.command()
@click.option("--chamber", default="e", show_default=True, help="Start vertex v as a W0 word")
@click.pass_context
def patterns(ctx, chamber):
    """
    List the directed-path label sequences from a chamber in modified(w)

    Example:
        coxeterfold --type A2 --orientation w0 patterns --chamber e
    """
    settings = ctx.obj
    try:
        rs = settings.rs
        o = settings.orientation
        v = parse_weyl_word(rs, chamber)
    except CoxeterError as e:
        _fail(ctx, e)

    graph = modified_moment_graph(rs, o.direction)
    by_length = {}
    for p in directed_paths_from(graph, v):
        by_length.setdefault(str(len(p)), []).append(pattern_to_list(p))
    document = {
        "type": rs.type_label,
        "orientation": o.direction.name,
        "chamber": v.name,
        "patterns": by_length,
        "maximal": [pattern_to_list(p) for p in maximal_paths_from(graph, v)],
    }
    _emit(settings, f"patterns_{v.name}", document, "Positive folding patterns")


@cli.command()
@click.option("--theorem", type=click.Choice(THEOREMS), required=True)
@click.option("--radius", type=int, default=None, help="Region radius (ell of the end alcoves)")
@click.option("--max-length", type=int, default=8, show_default=True, help="Word length for the minimality check")
@click.option("--samples", type=int, default=100, show_default=True, help="Pairs for the translated-start check")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--all-orientations", is_flag=True, help="Repeat for every direction w in W0")
@click.pass_context
def verify(ctx, theorem, radius, max_length, samples, seed, all_orientations):
    """
    Run an exhaustive check; exit code 1 when counterexamples are found

    Example:
        coxeterfold --type B2 verify --theorem patterns --radius 6 --all-orientations
    """
    settings = ctx.obj
    try:
        rs = settings.rs
        W = weyl_group(rs)
        directions = list(W.elements) if all_orientations else [settings.orientation.direction]
    except CoxeterError as e:
        _fail(ctx, e)
    radius = default_radius(rs.rank) if radius is None else radius

    results = []
    if theorem == "bruhat":
        directions = []
        results.append(check_bruhat_interval(rs))
    for w in directions:
        if theorem == "patterns":
            results.append(check_pattern_theorem(rs, w, radius))
        elif theorem == "minimality":
            results.append(check_minimality_lemma(rs, w, max_length))
        elif theorem == "crossings":
            results.append(check_crossing_direction(rs, w, radius))
        elif theorem == "crossings-translated":
            results.append(check_crossing_direction_translated(rs, w, radius, samples, seed))
        elif theorem == "direction":
            results.append(check_spherical_direction(rs, w, radius))
        elif theorem == "independence":
            results.append(check_gallery_independence(rs, w, radius))
        else:
            results.extend(check_shrunken_chamber(rs, w, v, radius) for v in W.elements)

    failures = sum(r.counterexample_count for r in results)
    document = {"theorem": theorem, "success": failures == 0, "results": [r.to_dict() for r in results]}
    _emit(settings, f"verify_{theorem}_{rs.type_label}", document, f"Verification: {theorem}")
    if settings.out is not None:
        status = "✅ SUCCESS! No counterexamples" if failures == 0 else f"❌ {failures} counterexamples"
        click.echo("\n" + status)
    if failures:
        ctx.exit(EXIT_COUNTEREXAMPLE)


@cli.command()
@click.option("--chamber", default="e", show_default=True, help="Chamber v as a W0 word")
@click.option("--radius", type=int, default=None)
@click.option("--pattern", default=None, help="Restrict to one pattern, roots separated by ';', e.g. 'a1;a1+a2'")
@click.pass_context
def xset(ctx, chamber, radius, pattern):
    """
    Alcoves of a chamber where every positive folding pattern can be applied

    Example:
        coxeterfold --type A2 --orientation w0 xset --chamber e --radius 10
    """
    settings = ctx.obj
    try:
        rs = settings.rs
        w = settings.orientation.direction
        v = parse_weyl_word(rs, chamber)
        wanted = parse_pattern(rs, pattern) if pattern else None
    except CoxeterError as e:
        _fail(ctx, e)
    radius = default_radius(rs.rank) if radius is None else radius

    found = x_set_for_pattern(rs, w, v, wanted, radius) if wanted else x_set(rs, w, v, radius)
    level = naive_subset(rs, w, v)
    alcoves = sorted(found, key=lambda a: (a.translation, a.spherical.index))
    document = {
        "type": rs.type_label,
        "orientation": w.name,
        "chamber": v.name,
        "radius": radius,
        "l_p": level,
        "count": len(alcoves),
        "inside_shrunken_chamber": sum(1 for a in alcoves if in_shrunken_chamber(a, v, level)),
        "alcoves": [alcove_to_dict(a) for a in alcoves],
    }
    _emit(settings, f"xset_{v.name}", document, "X-set")


@cli.command(name="shadow")
@click.option("--word", required=True, help="Type word over s0..sn")
@click.pass_context
def shadow_cmd(ctx, word):
    """
    End alcoves of all positively folded galleries of a type

    Example:
        coxeterfold --type A2 --orientation s1s2s1 shadow --word "s0 s1 s2"
    """
    settings = ctx.obj
    try:
        rs = settings.rs
        o = settings.orientation
        ends = shadow(rs, parse_affine_word(rs, word), o)
    except CoxeterError as e:
        _fail(ctx, e)
    alcoves = sorted(ends, key=lambda a: (a.translation, a.spherical.index))
    document = {
        "type": rs.type_label,
        "orientation": o.direction.name,
        "count": len(alcoves),
        "alcoves": [alcove_to_dict(a) for a in alcoves],
        "chambers": sorted({chamber_of(a).name for a in alcoves}),
    }
    _emit(settings, "shadow", document, "Shadow")


@cli.command()
@click.option("--radius", type=int, default=4, show_default=True,
              help="Draw the alcoves with ell <= radius, i.e. the region the checks walk, not a square window")
@click.option("--galleries", "galleries_path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="JSON file with galleries as written by 'fold'")
@click.option("--shrink", type=int, default=None, help="Shade the shrunken chamber of --chamber at this level")
@click.option("--chamber", default="e", show_default=True)
@click.pass_context
def render(ctx, radius, galleries_path, shrink, chamber):
    """
    Draw a rank-2 tiling with walls, orientation signs and galleries as SVG

    The drawn window is the ell-radius region around c_f, with the
    loaded galleries traced over it.

    Example:
        coxeterfold --type A2 --orientation w0 --out output render --radius 5 --shrink 3
    """
    settings = ctx.obj
    try:
        rs = settings.rs
        o = settings.orientation
        galleries = []
        if galleries_path:
            with open(galleries_path) as handle:
                galleries = loads_galleries(rs, handle.read())
        shrunken = (parse_weyl_word(rs, chamber), shrink) if shrink is not None else None
        scene = build_scene(rs, radius, o, galleries, shrunken)
    except CoxeterError as e:
        _fail(ctx, e)

    generator = SvgGenerator()
    if settings.out is None:
        click.echo(generator.render(scene), nl=False)
        return
    _banner("Render")
    for path in generator.save_outputs(generator.generate(scene), settings.out):
        click.echo(f"✅ Generated: {path}")


if __name__ == "__main__":
    cli()

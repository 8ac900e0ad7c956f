"""Command-line entry point: concepts, motifs, cover, explain, basis, scaling-dim."""
import argparse
import json
import logging
import sys

from ordinalmotifs.api.pipeline import (
    load_context, run_basis, run_cover, run_explain, run_family_curves, run_motifs,
    run_scaling_dimension, setup_config)
from ordinalmotifs.engine.data_encoder import DataEncoder
from ordinalmotifs.engine.exceptions import OrdinalMotifError
from ordinalmotifs.engine.motif_covering import HeuristicKind
from ordinalmotifs.engine.motif_enumerator import DEFAULT_CROWN_SIZE_CAP
from ordinalmotifs.engine.scale import FAMILY_ORDER, ScaleFamily, parse_scale_specs
from ordinalmotifs.engine.scaling_dimension import MAX_DIMENSION
from ordinalmotifs.utils.context_utils import FORMATS, serialize_context, write_context
from ordinalmotifs.utils.table_utils import (
    family_curves_frame, ratio_table, render_stats_table, write_csv)

logger = logging.getLogger("ordinalmotifs.cli")


def parse_families(text):
    return tuple(ScaleFamily.from_name(name) for name in text.split(",") if name.strip())


def parse_sizes(text):
    """A bare number applies to every family it fits; "crown=4,nominal=3" sets single families."""
    text = text.strip()
    if text.isdigit():
        n = int(text)
        return {family: n for family in FAMILY_ORDER if family is not ScaleFamily.CROWN or n >= 3}
    sizes = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        name, sep, value = part.partition("=")
        if not sep or not value.strip().isdigit():
            raise ValueError("size %r must look like family=n" % part)
        sizes[ScaleFamily.from_name(name)] = int(value)
    return sizes


def parse_k(text):
    if text == "all":
        return None
    k = int(text)
    if k < 0:
        raise ValueError("k must be >= 0")
    return k


def cmd_concepts(args):
    config = setup_config(transpose=args.transpose, clarify=args.clarify)
    context = load_context(args.path, config, args.format).context
    if args.json:
        return _dump(DataEncoder.encode_context_summary(context, args.list))
    print("objects: %d" % len(context.objects))
    print("attributes: %d" % len(context.attributes))
    print("extents: %d" % len(context.extents()))
    if args.list:
        for extent in context.extents():
            print("{%s}" % ", ".join(context.object_labels(extent)))


def cmd_motifs(args):
    config = _config(args)
    prepared = load_context(args.path, config, args.format)
    inventory = run_motifs(prepared.context, config)
    if args.json:
        return _dump(DataEncoder.encode_inventory(inventory, _labels(prepared)))
    print(render_stats_table(inventory.stats))


def cmd_cover(args):
    config = _config(args)
    prepared = load_context(args.path, config, args.format)
    heuristic = HeuristicKind.from_name(args.heuristic)
    _, steps = run_cover(prepared.context, config, args.k, heuristic)
    if args.coverage_csv:
        curves = {"selected": steps}
        if args.family_curves:
            curves.update(run_family_curves(prepared.context, config, heuristic, args.k))
        write_csv(family_curves_frame(curves), args.coverage_csv)
    if args.ratios_csv:
        write_csv(ratio_table(steps), args.ratios_csv)
    labels = _labels(prepared)
    if args.json:
        return _dump(DataEncoder.encode_covering(prepared.context, steps, heuristic, labels))
    total = len(prepared.context.extents())
    for step in steps:
        print("%d\t%s\t%d\t+%d\t%d/%d\t%s" % (
            step.step, "/".join(f.value for f in step.families), step.motif.size,
            step.new_extents, step.cumulative, total, ", ".join(labels[g] for g in step.motif.domain)))
    print("covered %d of %d extents" % (steps[-1].cumulative if steps else 0, total))


def cmd_explain(args):
    config = _config(args)
    prepared = load_context(args.path, config, args.format)
    doc = run_explain(prepared, config, args.k, HeuristicKind.from_name(args.heuristic))
    if args.json:
        return _dump(DataEncoder.encode_explanation(doc, _labels(prepared)))
    if doc.entries:
        print(doc.render_text())


def cmd_basis(args):
    config = _config(args)
    prepared = load_context(args.path, config, args.format)
    basis = run_basis(prepared.context, config, HeuristicKind.from_name(args.heuristic))
    if args.out:
        write_context(basis, args.out, args.out_format)
    else:
        sys.stdout.write(serialize_context(basis, args.out_format))


def cmd_scaling_dim(args):
    config = setup_config(transpose=args.transpose, clarify=args.clarify)
    prepared = load_context(args.path, config, args.format)
    specs = parse_scale_specs(args.scales)
    dimension = run_scaling_dimension(prepared.context, specs, args.max_d)
    if args.json:
        return _dump(DataEncoder.encode_scaling_dimension(dimension, specs, args.max_d))
    print(dimension if dimension is not None else "unknown > %d" % args.max_d)


def build_parser():
    parser = argparse.ArgumentParser(prog="ordinalmotifs", description=__doc__)
    commands = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("path", help="context file (.cxt or .csv)")
    common.add_argument("--format", choices=("auto",) + FORMATS, default="auto")
    common.add_argument("--transpose", action="store_true", help="swap objects and attributes")
    common.add_argument("--clarify", action="store_true", help="merge objects with identical rows")
    common.add_argument("--json", action="store_true", help="print a JSON document")
    common.add_argument("-v", "--verbose", action="count", default=0)

    motifs = argparse.ArgumentParser(add_help=False)
    motifs.add_argument("--families", type=parse_families, default=FAMILY_ORDER,
                        help="comma-separated scale families (default: all)")
    motifs.add_argument("--min-size", type=parse_sizes, default={}, help='"n" or "family=n,..."')
    motifs.add_argument("--max-size", type=parse_sizes, default={}, help='"n" or "family=n,..."')
    motifs.add_argument("--crown-cap", type=int, default=DEFAULT_CROWN_SIZE_CAP)
    pool = motifs.add_mutually_exclusive_group()
    pool.add_argument("--maximal-only", dest="maximal_only", action="store_true", default=True)
    pool.add_argument("--all-motifs", dest="maximal_only", action="store_false")

    greedy = argparse.ArgumentParser(add_help=False)
    greedy.add_argument("--heuristic", choices=[h.value for h in HeuristicKind], default="standard")

    concepts = commands.add_parser("concepts", parents=[common], help="count the extents")
    concepts.add_argument("--list", action="store_true", help="list every extent")
    concepts.set_defaults(handler=cmd_concepts)

    commands.add_parser("motifs", parents=[common, motifs], help="enumerate ordinal motifs") \
        .set_defaults(handler=cmd_motifs)

    cover = commands.add_parser("cover", parents=[common, motifs, greedy], help="greedy motif covering")
    cover.add_argument("--k", type=parse_k, default=10, help='number of steps or "all"')
    cover.add_argument("--coverage-csv", help="write the coverage curve")
    cover.add_argument("--family-curves", action="store_true",
                       help="add one single-family run per family to the coverage CSV")
    cover.add_argument("--ratios-csv", help="write family ratios per step")
    cover.set_defaults(handler=cmd_cover)

    explain = commands.add_parser("explain", parents=[common, motifs, greedy], help="textual explanations")
    explain.add_argument("--k", type=parse_k, default=10, help='number of steps or "all"')
    explain.set_defaults(handler=cmd_explain)

    basis = commands.add_parser("basis", parents=[common, motifs, greedy], help="ordinal motif basis")
    basis.add_argument("--out", help="output file (default: stdout)")
    basis.add_argument("--out-format", choices=FORMATS, default="burmeister")
    basis.set_defaults(handler=cmd_basis)

    dimension = commands.add_parser("scaling-dim", parents=[common], help="scaling dimension search")
    dimension.add_argument("--scales", required=True, help='e.g. "ordinal:1-3" or "nominal:2,ordinal:3"')
    dimension.add_argument("--max-d", type=int, default=3, choices=range(1, MAX_DIMENSION + 1))
    dimension.set_defaults(handler=cmd_scaling_dim)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        args.handler(args)
    except (OrdinalMotifError, OSError, ValueError) as e:
        logger.debug("command failed", exc_info=True)
        print("error: %s" % e, file=sys.stderr)
        return 1
    return 0


def _config(args):
    return setup_config(args.families, args.min_size, args.max_size, args.crown_cap,
                        args.maximal_only, args.transpose, args.clarify)


def _labels(prepared):
    return [prepared.clarification.label(g) for g in range(len(prepared.clarification))]


def _dump(document):
    print(json.dumps(document, ensure_ascii=False, indent=2))


if __name__ == "__main__":
    sys.exit(main())

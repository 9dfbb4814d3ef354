# shapesig.py
#
# Command line για shape signatures:
#   betti / cycles / nerve / signature / compare / render / triangulate / report
#
# Παραδείγματα:
#   python src/shapesig.py betti data/fixtures/fig2.cplx
#   python src/shapesig.py signature data/fixtures/fig2.cplx -o out/fig2_sig.json --eps 0.1
#   python src/shapesig.py compare out/tri_sig.json out/fig2_sig.json
#   python src/shapesig.py render data/fixtures/fig2.cplx -o out/fig2.svg --highlight all
#   python src/shapesig.py triangulate data/fixtures/square_two_holes.poly -o out/square.cplx
#
# Exit codes: 0 ok, 2 parse/validation error, 3 config mismatch στο compare.

import argparse
import json
import os
import sys

import pandas as pd

from complex_files import ComplexSyntaxError, read_complex, read_polygon, write_complex
from geometry import ArcTooShort, InvalidArc, NotSimple
from homology import NotACycle, contour_cycles, h1_basis, hole_boundaries
from nerve import (
    GroundSetTooLarge,
    UnknownNucleus,
    conjecture_report,
    homology_nerve,
    leader_cover,
    nerve_union_betti_report,
    shape_ground_set,
)
from render_complex import highlight_cycles, render_svg, write_svg
from signature import (
    ConfigMismatch,
    DistanceWeights,
    SignatureConfig,
    build_signature,
    distance_breakdown,
    signature_from_json,
    signature_to_json,
)
from simplicial_complex import ComplexError
from triangulate_polygon import PolygonError, triangulate_polygon

DEFAULT_CONFIG = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "config", "shapesig_defaults.json")

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CONFIG_MISMATCH = 3

# ό,τι σημαίνει "κακό input" -> exit 2
INPUT_ERRORS = (
    ComplexSyntaxError,
    ComplexError,
    PolygonError,
    NotACycle,
    NotSimple,
    ArcTooShort,
    InvalidArc,
    GroundSetTooLarge,
    UnknownNucleus,
    json.JSONDecodeError,
    KeyError,
    OSError,
)


# ---------- config ----------

def load_config(path: str | None) -> dict:
    """Defaults file as a dict; a missing default file means built-in defaults."""
    target = path or DEFAULT_CONFIG
    if not os.path.exists(target):
        if path:
            raise FileNotFoundError(f"Config file not found: {path}")
        return {}
    with open(target, "r", encoding="utf-8") as f:
        return json.load(f)


def signature_config(args, cfg: dict) -> SignatureConfig:
    """File values, then CLI flags on top."""
    d = dict(cfg)
    if getattr(args, "eps", None) is not None:
        d["epsilon"] = args.eps
    if getattr(args, "quant", None) is not None:
        d["quant_step"] = args.quant
    if getattr(args, "tau", None) is not None:
        d["tau"] = args.tau
    return SignatureConfig.from_dict(d)


def distance_weights(args, cfg: dict) -> DistanceWeights:
    if getattr(args, "weights", None):
        with open(args.weights, "r", encoding="utf-8") as f:
            return DistanceWeights.from_dict(json.load(f))
    return DistanceWeights.from_dict(cfg.get("weights", {}))


def _proximity(args, cfg):
    return signature_config(args, cfg).proximity


def _fmt_traversal(cycle) -> str:
    if cycle.traversal is None:
        return "(not simple)"
    loop = list(cycle.traversal) + [cycle.traversal[0]]
    return " -> ".join(f"v{v}" for v in loop)


def _cycle_table(cycles, labels) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "cycle": list(range(len(cycles))),
            "kind": labels,
            "traversal": [_fmt_traversal(c) for c in cycles],
            "edges": [" ".join(f"e{e}" for e in c.edge_ids) for c in cycles],
        }
    )


def _ground_labels(complex_, ground, hom):
    kinds = {}
    for c in contour_cycles(complex_):
        kinds[c.edge_ids] = "contour"
    for c in hole_boundaries(complex_):
        kinds[c.edge_ids] = "hole"
    for c in hom.h1_representatives:
        kinds[c.edge_ids] = "h1"
    return [kinds.get(c.edge_ids, "cycle") for c in ground]


# ---------- subcommands ----------

def cmd_betti(args, cfg) -> int:
    hom = h1_basis(read_complex(args.file))
    print(f"β0={hom.betti0} β1={hom.rankH1} rZ1={hom.rankZ1} rB1={hom.rankB1}")
    return EXIT_OK


def cmd_cycles(args, cfg) -> int:
    hom = h1_basis(read_complex(args.file))
    if not hom.h1_representatives:
        print("⚠️ No H1 generators (rank H1 = 0)")
        return EXIT_OK
    for k, c in enumerate(hom.h1_representatives):
        print(f"h1[{k}]: {_fmt_traversal(c)}")
    return EXIT_OK


def cmd_nerve(args, cfg) -> int:
    complex_ = read_complex(args.file)
    hom = h1_basis(complex_)
    ground = shape_ground_set(complex_, hom)
    print(f"🔎 Ground set: {len(ground)} cycles")
    print(_cycle_table(ground, _ground_labels(complex_, ground, hom)).to_string(index=False))

    nerve = homology_nerve(ground)
    print("\nHomology nerve, maximal faces:")
    for face in nerve.maximal_faces:
        print("  {" + ", ".join(str(i) for i in face) + "}")

    if args.descriptive:
        cover = leader_cover(complex_, ground, _proximity(args, cfg))
        rows = pd.DataFrame(
            {
                "nucleus": [c.nucleus for c in cover.clusters],
                "members": [" ".join(str(m) for m in c.members) for c in cover.clusters],
                "size": [len(c.members) for c in cover.clusters],
            }
        )
        print("\nDescriptive nerves:")
        print(rows.to_string(index=False))
        print(f"\nLeader closure: {len(cover.closure)} sets")
        if cover.capped:
            print(f"⚠️ Closure stopped at the cap of {cover.cap} sets")
    return EXIT_OK


def cmd_signature(args, cfg) -> int:
    complex_ = read_complex(args.file)
    sig = build_signature(complex_, signature_config(args, cfg))
    text = signature_to_json(sig)
    folder = os.path.dirname(args.out)
    if folder:
        os.makedirs(folder, exist_ok=True)
    with open(args.out, "w", encoding="utf-8") as f:
        f.write(text)
    print(f"✅ Saved: {args.out}")
    return EXIT_OK


def cmd_compare(args, cfg) -> int:
    with open(args.a, "r", encoding="utf-8") as f:
        sig_a = signature_from_json(f.read())
    with open(args.b, "r", encoding="utf-8") as f:
        sig_b = signature_from_json(f.read())
    df = distance_breakdown(sig_a, sig_b, distance_weights(args, cfg))
    print(df.to_string(index=False))
    print(f"distance={float(df['weighted'].sum()):.9g}")
    return EXIT_OK


def cmd_render(args, cfg) -> int:
    complex_ = read_complex(args.file)
    highlights = highlight_cycles(complex_, args.highlight) if args.highlight != "none" else []
    write_svg(args.out, render_svg(complex_, highlights))
    print(f"✅ Saved: {args.out}")
    return EXIT_OK


def cmd_triangulate(args, cfg) -> int:
    complex_ = triangulate_polygon(read_polygon(args.file))
    write_complex(args.out, complex_)
    print(
        f"✅ Saved: {args.out} "
        f"({len(complex_.vertices)} vertices, {len(complex_.edges)} edges, {len(complex_.triangles)} triangles)"
    )
    return EXIT_OK


def cmd_report(args, cfg) -> int:
    complex_ = read_complex(args.file)
    rep = conjecture_report(complex_, _proximity(args, cfg))
    print(f"🔎 {rep.message}")
    if rep.has_holes:
        checks = pd.DataFrame(
            {
                "check": [
                    "nerve_meets_hole",
                    "nerve_avoids_holes",
                    "descriptive_nerve_meets_hole",
                    "descriptive_nerve_avoids_holes",
                ],
            }
        )
        checks["found"] = [getattr(rep, name) for name in checks["check"]]
        checks["witness"] = [
            " ".join(str(i) for i in rep.witnesses[name]) if name in rep.witnesses else "-"
            for name in checks["check"]
        ]
        print(checks.to_string(index=False))

    ground = shape_ground_set(complex_)
    if ground:
        nu = nerve_union_betti_report(complex_, homology_nerve(ground))
        print(f"\nnerve (β0, β1) = {nu.nerve_betti}, union (β0, β1) = {nu.union_betti}")
        if nu.agree:
            print("✅ nerve and union agree")
        else:
            print(f"⚠️ nerve and union differ (β0 agree: {nu.betti0_agree})")
    return EXIT_OK


# ---------- Main ----------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Homology signatures of planar shapes covered by simplicial complexes."
    )
    parser.add_argument("--config", default=None, help="JSON defaults, π.χ. config/shapesig_defaults.json")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_tuning(p, quant_tau=False):
        p.add_argument("--eps", type=float, default=None, help="descriptive match tolerance (max-norm)")
        if quant_tau:
            p.add_argument("--quant", type=float, default=None, help="quantization step q, 0 = off")
            p.add_argument("--tau", type=float, default=None, help="uniform iso-curvature tolerance")

    p = sub.add_parser("betti", help="print β0 β1 rZ1 rB1")
    p.add_argument("file", help=".cplx file")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("cycles", help="print H1 representatives as vertex traversals")
    p.add_argument("file", help=".cplx file")
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("nerve", help="homology nerve (and descriptive nerves) of the ground set")
    p.add_argument("file", help=".cplx file")
    p.add_argument("--descriptive", action="store_true", help="also print descriptive nerves and Leader closure")
    with_tuning(p)
    p.set_defaults(func=cmd_nerve)

    p = sub.add_parser("signature", help="write the shape signature as JSON")
    p.add_argument("file", help=".cplx file")
    p.add_argument("-o", "--out", required=True, help="output JSON, π.χ. out/fig2_sig.json")
    with_tuning(p, quant_tau=True)
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser("compare", help="distance between two signature files")
    p.add_argument("a", help="signature JSON")
    p.add_argument("b", help="signature JSON")
    p.add_argument("--weights", default=None, help="JSON with ranks/cycles/nerve/unmatched weights")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("render", help="SVG drawing of the complex")
    p.add_argument("file", help=".cplx file")
    p.add_argument("-o", "--out", required=True, help="output SVG")
    p.add_argument("--highlight", choices=["none", "holes", "h1", "all"], default="holes")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("triangulate", help="ear-clip a .poly polygon with holes into a .cplx complex")
    p.add_argument("file", help=".poly file")
    p.add_argument("-o", "--out", required=True, help="output .cplx")
    p.set_defaults(func=cmd_triangulate)

    p = sub.add_parser("report", help="hole witnesses and nerve/union Betti comparison")
    p.add_argument("file", help=".cplx file")
    with_tuning(p)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        return args.func(args, cfg)
    except ConfigMismatch as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_CONFIG_MISMATCH
    except INPUT_ERRORS as e:
        print(f"❌ {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())

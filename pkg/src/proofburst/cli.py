"""Command-line interface.

Subcommands: validate, stats, gen, svg, serve.  Exit codes: 0 ok,
1 validation errors, 2 usage or I/O errors.  Diagnostics go to stdout
(they are the product of `validate`); usage errors to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path as FilePath

from .gen import GEN_KINDS, GenSpec, generate
from .gentzen import GentzenParams, layout_gentzen
from .metrics import ColorProfile, default_profile, load_profile, stats
from .proof import PathOutOfRange, node_at, parse_path
from .proofjson import ParseError, parse_proof, serialize_proof
from .sunburst import SunburstParams, layout_sunburst
from .svg import gentzen_to_svg, sunburst_to_svg
from .validate import Severity, validate_logic, validate_structure

PROFILE_ENV = "PROOFBURST_PROFILE"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="proofburst",
                                     description="LK proof explorer toolbox")
    sub = parser.add_subparsers(dest="command", required=True)

    p_val = sub.add_parser("validate", help="check a proof file, print diagnostics")
    p_val.add_argument("file")

    p_stats = sub.add_parser("stats", help="print proof statistics as JSON")
    p_stats.add_argument("file")

    p_gen = sub.add_parser("gen", help="generate a proof")
    p_gen.add_argument("--kind", required=True, choices=GEN_KINDS)
    p_gen.add_argument("--n", type=int, default=4,
                       help="size parameter (depth for balanced, cuts for cutcomb, "
                            "copies for replicated, node target for random)")
    p_gen.add_argument("--depth", type=int, default=2,
                       help="subproof depth for replicated")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("-o", "--output", default=None)

    p_svg = sub.add_parser("svg", help="render a proof to SVG")
    p_svg.add_argument("--view", required=True, choices=("sunburst", "gentzen"))
    p_svg.add_argument("--select", default=None, help="node path to highlight")
    p_svg.add_argument("--profile", default=None, help="color profile JSON file")
    p_svg.add_argument("--hide-formulas", action="store_true")
    p_svg.add_argument("file")
    p_svg.add_argument("-o", "--output", default=None)

    p_serve = sub.add_parser("serve", help="serve proofs over a local JSON API")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--dir", default=".", help="directory of *.json proof files")
    p_serve.add_argument("--host", default="127.0.0.1")

    return parser


def _read(path: str) -> str:
    return FilePath(path).read_text(encoding="utf-8")


def _write(path: str | None, text: str, stdout) -> None:
    if path is None:
        stdout.write(text)
        if not text.endswith("\n"):
            stdout.write("\n")
    else:
        FilePath(path).write_text(text, encoding="utf-8")


def _load_cli_profile(arg: str | None) -> ColorProfile:
    source = arg or os.environ.get(PROFILE_ENV)
    if source:
        return load_profile(_read(source))
    return default_profile()


def _cmd_validate(args, stdout) -> int:
    try:
        proof = parse_proof(_read(args.file))
    except ParseError as e:
        print(f"ParseError\t\t{e}", file=stdout)
        return 1
    diags = validate_structure(proof)
    if not any(d.severity is Severity.ERROR for d in diags):
        diags.extend(validate_logic(proof))
    for d in diags:
        print(str(d), file=stdout)
    return 1 if any(d.severity is Severity.ERROR for d in diags) else 0


def _cmd_stats(args, stdout) -> int:
    proof = parse_proof(_read(args.file))
    print(json.dumps(stats(proof).to_dict(), sort_keys=True), file=stdout)
    return 0


def _cmd_gen(args, stdout) -> int:
    spec = GenSpec(kind=args.kind, n=args.n, depth=args.depth, k=args.n, seed=args.seed)
    _write(args.output, serialize_proof(generate(spec)), stdout)
    return 0


def _cmd_svg(args, stdout) -> int:
    proof = parse_proof(_read(args.file))
    profile = _load_cli_profile(args.profile)
    selected = None
    if args.select is not None:
        selected = parse_path(args.select)
        node_at(proof, selected)  # PathOutOfRange -> exit 2
    if args.view == "sunburst":
        layout = layout_sunburst(proof, SunburstParams(radius=100.0, profile=profile))
        doc = sunburst_to_svg(layout, profile, selected)
    else:
        layout = layout_gentzen(proof, GentzenParams(hide_formulas=args.hide_formulas))
        doc = gentzen_to_svg(layout, selected=selected)
    _write(args.output, doc, stdout)
    return 0


def _cmd_serve(args, stdout) -> int:
    import uvicorn

    from .server import ProofRegistry, create_app

    registry = ProofRegistry()
    loaded = registry.load_directory(args.dir)
    profiles = registry.load_profiles(args.dir)
    env_profile = os.environ.get(PROFILE_ENV)
    if env_profile:
        prof = load_profile(_read(env_profile))
        profiles[prof.name] = prof
    ui_dir = os.environ.get("PROOFBURST_UI")
    if ui_dir is None and FilePath("frontend/dist").is_dir():
        ui_dir = "frontend/dist"
    print(f"loaded {loaded} proofs from {args.dir}", file=stdout)
    app = create_app(registry, profiles=profiles, ui_dir=ui_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0

    try:
        handler = {
            "validate": _cmd_validate,
            "stats": _cmd_stats,
            "gen": _cmd_gen,
            "svg": _cmd_svg,
            "serve": _cmd_serve,
        }[args.command]
        return handler(args, stdout)
    except ParseError as e:
        print(f"ParseError\t\t{e}", file=stdout)
        return 1
    except PathOutOfRange as e:
        print(f"error: {e}", file=stderr)
        return 2
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

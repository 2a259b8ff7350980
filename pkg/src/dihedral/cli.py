"""Command-line front end: ``dihedral <command> ...``."""

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import covers, defect, diagram, io, pipeline, seifert, shadows, trisect

EXIT_OK, EXIT_INPUT, EXIT_MATH = 0, 2, 3

COMMANDS = ("colorings", "charknots", "linking", "defect", "trisect", "euler",
            "triplane", "lift-shadow")


@dataclass
class PipelineConfig:
    command: str
    inputs: list = field(default_factory=list)
    p: int = 3
    fmt: str = "text"
    resolution: str = "left"
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise diagram.DiagramError(f"unknown command {self.command!r}")
        if self.p < 3 or self.p % 2 == 0:
            raise diagram.DiagramError("--p must be an odd integer >= 3")
        if self.fmt not in ("text", "json"):
            raise diagram.DiagramError(f"unknown format {self.fmt!r}")


# ------------------------------------------------------------------ output

def _plain(x):
    """Convert a report value into JSON-native data."""
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    return str(x)


def _scalar(x):
    if x is None:
        return "null"
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


def _text_lines(data, indent=0):
    pad = "  " * indent
    out = []
    for k, v in data.items():
        if isinstance(v, dict):
            if v:
                out.append(f"{pad}{k}:")
                out.extend(_text_lines(v, indent + 1))
            else:
                out.append(f"{pad}{k}: {{}}")
        elif isinstance(v, list) and v and all(isinstance(r, dict) for r in v):
            out.append(f"{pad}{k}:")
            for item in v:
                lines = _text_lines(item, indent + 2)
                first = lines[0][len(pad) + 4:] if lines else "{}"
                out.append(f"{pad}  - {first}")
                out.extend(lines[1:])
        elif isinstance(v, list) and v and all(isinstance(r, list) for r in v):
            out.append(f"{pad}{k}:")
            out.extend(f"{pad}  [{', '.join(_scalar(x) for x in r)}]" for r in v)
        elif isinstance(v, list):
            out.append(f"{pad}{k}: [{', '.join(_scalar(x) for x in v)}]")
        else:
            out.append(f"{pad}{k}: {_scalar(v)}")
    return out


def emit_report(report, fmt="text"):
    """Render a report (a dict or an object with ``as_dict``) deterministically."""
    if hasattr(report, "as_dict"):
        report = report.as_dict()
    data = _plain(report)
    if fmt == "json":
        return json.dumps(data, indent=2)
    return "\n".join(_text_lines(data))


# ---------------------------------------------------------------- commands

def resolve_input(name):
    """A path, or the name of a bundled fixture such as ``six_one.knot``."""
    path = Path(name)
    if path.exists():
        return path
    bundled = resources.files("dihedral") / "data" / name
    if bundled.is_file():
        return Path(str(bundled))
    raise diagram.DiagramError(f"no such file: {name}")


def _load_code(cfg):
    return diagram.code_from_sections(io.read_sections(resolve_input(cfg.inputs[0])))


def _cmd_colorings(cfg):
    code = _load_code(cfg)
    everything = diagram.enumerate_colorings(code, cfg.p)
    cols = [c for c in everything if c.nontrivial]
    check = diagram.validate_coloring(code, cfg.p) if max(code.alpha_c) <= cfg.p else None
    return {
        "p": cfg.p,
        "arcs": code.m,
        "count": len(everything),
        "nontrivial": len(cols),
        "classes": len(diagram.equivalence_classes(cols)),
        "file_coloring": ("valid" if check and check.valid else "invalid") + (
            "" if check is None or check.nontrivial else ", trivial"),
        "colorings": [list(c.colors) for c in cols],
    }


def _cmd_charknots(cfg):
    sections = io.read_sections(resolve_input(cfg.inputs[0]))
    prob = pipeline.problem_from_sections(sections)
    if prob.form is None:
        raise diagram.DiagramError("missing [seifert] section")
    Q = seifert.symmetrize(prob.form)
    knots = seifert.find_characteristic_knots(Q, cfg.p)
    return {
        "p": cfg.p,
        "symmetrized_form": Q,
        "determinant": diagram.determinant_from_form(Q),
        "characteristic_knots": [
            {"beta": list(b), "self_linking": seifert.self_linking(prob.form, b)} for b in knots],
    }


def _cmd_linking(cfg):
    prob = pipeline.load_problem(resolve_input(cfg.inputs[0]))
    out = {"p": cfg.p}
    if prob.code is not None and len(prob.code.curves) > 1:
        g = cfg.options.get("g") or prob.code.g_name
        names = [cfg.options["h"]] if cfg.options.get("h") else [
            n for n in prob.code.curves if n != g]
        out["computed"] = {
            f"{g} {h}": covers.linking_block(prob.code, g, h, cfg.p).as_lists() for h in names}
    if prob.blocks:
        out["supplied"] = {f"{u} {v}": [list(r) for r in B] for (u, v), B in prob.blocks.items()}
        out["transpose_pairing"] = {
            f"{u} {v}": "agree" if d is None else (
                "resolution change" if d[1] else "differ") for (u, v), d in
            defect.transpose_pairing(prob.blocks).items()}
    if len(out) == 1:
        raise diagram.DiagramError("no curves to link: need two [curve] sections or [block] data")
    return out


def _cmd_defect(cfg):
    prob = pipeline.load_problem(resolve_input(cfg.inputs[0]))
    return pipeline.run_defect(prob, cfg.p, cfg.resolution).as_dict()


def _ints_csv(text, what):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise diagram.DiagramError(f"{what} must be comma-separated integers") from None


def _cmd_trisect(cfg):
    o = cfg.options
    if o.get("b") is None or o.get("c") is None:
        raise diagram.DiagramError("trisect needs --b and --c")
    c = _ints_csv(o["c"], "--c")
    params = trisect.lift_trisection_params(cfg.p, o["b"], c, o.get("singular", False))
    return {
        "p": cfg.p,
        "b": o["b"],
        "c": list(c),
        "singular": bool(o.get("singular")),
        "trisection": str(params),
        "g": params.g,
        "k": list(params.k),
        "central_surface_euler": trisect.central_surface_euler(cfg.p, o["b"]),
    }


def _cmd_euler(cfg):
    o = cfg.options
    if o.get("chi_b") is None:
        raise diagram.DiagramError("euler needs --chi-b")
    data = trisect.EulerData(cfg.p, o["chi_b"], o.get("m") or 0)
    out = {"p": cfg.p, "chi_B": data.chi_B, "m": data.m, "chi_Y": trisect.euler_char_cover(data)}
    if o.get("genus") is not None:
        out["homotopy_cp2_possible"] = trisect.homotopy_cp2_constraint(cfg.p, o["genus"], data.m)
    return out


def _cmd_triplane(cfg):
    d = trisect.load_triplane(resolve_input(cfg.inputs[0]))
    rep = trisect.validate_triplane(d)
    closures = {}
    for r in rep.closures:
        entry = {"tangles": r.tangles, "components": r.components, "determinant": r.determinant,
                 "status": r.status, "colors_extend": r.coloring_valid}
        if r.knot is not None:
            entry["knot"] = r.knot
            entry["alexander"] = list(r.alexander)
        closures[r.name] = entry
    return {
        "p": d.p,
        "b": d.b,
        "closures": closures,
        "chi_B": rep.chi_B,
        "surface": rep.surface,
        "singular_points": rep.m,
        "trisection": str(rep.params) if rep.params else None,
        "chi_Y": trisect.euler_char_cover(trisect.EulerData(d.p, rep.chi_B, rep.m))
        if rep.surface == "sphere" else None,
        "notes": list(rep.notes),
    }


def _cmd_lift_shadow(cfg):
    o = cfg.options
    if not o.get("word_file"):
        raise diagram.DiagramError("lift-shadow needs --word-file")
    word = shadows.read_word_file(resolve_input(o["word_file"]))
    sheets = [o["start_sheet"]] if o.get("start_sheet") else [1, 2, 3]
    try:
        lifts = {str(s): shadows.lift_shadow_word(word, s) for s in sheets}
    except shadows.ShadowError as e:
        raise diagram.DiagramError(str(e)) from None
    return {
        "word": str(word),
        "length": len(word),
        "lifts": {s: {"word": str(w), "latex": w.latex()} for s, w in lifts.items()},
    }


HANDLERS = {
    "colorings": _cmd_colorings,
    "charknots": _cmd_charknots,
    "linking": _cmd_linking,
    "defect": _cmd_defect,
    "trisect": _cmd_trisect,
    "euler": _cmd_euler,
    "triplane": _cmd_triplane,
    "lift-shadow": _cmd_lift_shadow,
}

INPUT_ERRORS = (diagram.DiagramError, shadows.ShadowError, OSError)
MATH_ERRORS = (covers.CoverError, defect.DefectError, trisect.TrisectionError)


def run(cfg):
    """Returns (exit status, rendered report or error message)."""
    try:
        report = HANDLERS[cfg.command](cfg)
    except MATH_ERRORS as e:
        return EXIT_MATH, f"error: {e}"
    except INPUT_ERRORS as e:
        return EXIT_INPUT, f"error: {e}"
    return EXIT_OK, emit_report(report, cfg.fmt)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=3, help="odd prime order of the dihedral group")
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--resolution", choices=("left", "right"), default="left",
                        help="which ordering of an off-diagonal block to read")

    parser = argparse.ArgumentParser(prog="dihedral", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("colorings", "charknots", "defect", "triplane"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("file")
    sp = sub.add_parser("linking", parents=[common])
    sp.add_argument("file")
    sp.add_argument("--g", help="first curve (defaults to the first [curve])")
    sp.add_argument("--h", help="second curve (defaults to all others)")
    sp = sub.add_parser("trisect", parents=[common])
    sp.add_argument("--b", type=int, help="bridge number")
    sp.add_argument("--c", help="patch counts c1,c2,c3")
    sp.add_argument("--singular", action="store_true", help="the first sector is coned off")
    sp = sub.add_parser("euler", parents=[common])
    sp.add_argument("--chi-b", type=int, dest="chi_b", help="Euler characteristic of the branch surface")
    sp.add_argument("--m", type=int, default=0, help="number of cone points")
    sp.add_argument("--genus", type=int, help="surface genus, for the homotopy CP2 test")
    sp = sub.add_parser("lift-shadow", parents=[common])
    sp.add_argument("--word-file", dest="word_file")
    sp.add_argument("--start-sheet", dest="start_sheet", type=int, choices=(1, 2, 3))
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    opts = {k: v for k, v in vars(args).items()
            if k not in ("command", "file", "p", "json", "resolution")}
    try:
        cfg = PipelineConfig(args.command, [args.file] if getattr(args, "file", None) else [],
                             args.p, "json" if args.json else "text", args.resolution, opts)
    except diagram.DiagramError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    status, text = run(cfg)
    print(text, file=sys.stderr if status else sys.stdout)
    return status


if __name__ == "__main__":
    sys.exit(main())

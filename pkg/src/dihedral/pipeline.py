"""
Worked-example files and the full signature-defect computation.

A single file may hold every section: the diagram (``[alpha]``,
``[curve ...]``), the Seifert pairing (``[seifert]``), the characteristic
knot (``[beta]``), anchor paths (``[anchor <curve>]``), supplied linking
blocks (``[block <u> <v>]``) and kernel options (``[kernel]``).

Curve names ``beta_r`` and ``beta_l`` denote the two push-offs of the
characteristic knot; their anchor paths are gamma_r and gamma_l and
their linking block is the ``beta`` block.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import covers, defect, io, seifert
from .diagram import DiagramError, code_from_sections, validate_coloring

BETA_R, BETA_L = "beta_r", "beta_l"


@dataclass
class DefectProblem:
    code: object = None
    form: object = None
    beta: tuple = None
    beta_seifert: object = field(default_factory=seifert.SeifertForm.unknot)
    self_link: int = None
    anchors: dict = field(default_factory=dict)
    blocks: dict = field(default_factory=dict)
    omegas: tuple = ()
    c0: int = None


@dataclass
class DefectResult:
    p: int
    characteristic_knots: list
    beta: tuple
    self_link: int
    tl: seifert.TLSignatureProfile
    monodromies: dict
    selection: defect.KernelSelection
    blocks: dict
    kernel_matrix: list
    sigma_w: int
    report: defect.DefectReport
    verdict: defect.RibbonVerdict
    resolution: str
    inconsistent_blocks: dict = field(default_factory=dict)

    def as_dict(self):
        out = {
            "p": self.p,
            "characteristic_knots": [list(b) for b in self.characteristic_knots],
            "beta": list(self.beta) if self.beta is not None else None,
            "self_linking": self.self_link,
            "tristram_levine": list(self.tl.values),
            "monodromies": {k: {"perm": str(m), "value_at_c0": v}
                            for k, (m, v) in self.monodromies.items()},
            "kernel_selection": {k: list(v) for k, v in self.selection.pairs().items()},
            "resolution": self.resolution,
            "blocks": {f"{u} {v}": [list(r) for r in B] for (u, v), B in self.blocks.items()},
            "kernel_matrix": [list(r) for r in self.kernel_matrix],
            "sigma_w": self.sigma_w,
            "term_selflink": self.report.term_selflink,
            "term_tl": self.report.term_tl,
            "xi": self.report.xi,
            "abs_xi": abs(self.report.xi),
            "ribbon_check": str(self.verdict),
            "inconsistent_blocks": {f"{u} {v}": {"row_sums": list(r), "column_sums": list(c)}
                                    for (u, v), (r, c) in self.inconsistent_blocks.items()},
            "warnings": list(self.report.warnings),
        }
        return out


def _ints(tokens, what):
    try:
        return tuple(int(t) for t in tokens)
    except ValueError:
        raise DiagramError(f"invalid integer in {what}") from None


def problem_from_sections(sections):
    prob = DefectProblem()
    if ("alpha",) in sections:
        prob.code = code_from_sections(sections)
    if ("seifert",) in sections:
        L = io.matrix_tokens(io.require(sections[("seifert",)], "L", "seifert"))
        prob.form = seifert.SeifertForm(L)
    extra = sections.get(("seifert_data",), {})
    if "beta_self_linking" in extra:
        (prob.self_link,) = _ints(extra["beta_self_linking"], "beta_self_linking")
    beta = sections.get(("beta",), {})
    if beta.get("vector"):
        prob.beta = _ints(beta["vector"], "beta vector")
    bs = beta.get("seifert")
    if bs and bs != ["unknot"]:
        prob.beta_seifert = seifert.SeifertForm(io.matrix_tokens(bs))
    for key, sec in sections.items():
        if key[0] == "anchor":
            if len(key) != 2:
                raise DiagramError("anchor sections need exactly one curve name")
            name = key[1]
            if "arcs" in sec:
                prob.anchors[name] = defect.AnchorPath(name, _ints(sec["arcs"], f"anchor {name}"))
            elif "colors" in sec:
                prob.anchors[name] = defect.AnchorPath(
                    name, (), _ints(sec["colors"], f"anchor {name}"))
            else:
                raise DiagramError(f"[anchor {name}] needs 'arcs' or 'colors'")
        elif key[0] == "block":
            if len(key) != 3:
                raise DiagramError("block sections need two curve names")
            rows = io.matrix_tokens(io.require(sec, "rows", " ".join(key)))
            if len(rows) != 3 or any(len(r) != 3 for r in rows):
                raise DiagramError(f"[{' '.join(key)}] must be 3x3")
            prob.blocks[(key[1], key[2])] = rows
    kern = sections.get(("kernel",), {})
    prob.omegas = tuple(kern.get("omegas", ()))
    if kern.get("c0"):
        (prob.c0,) = _ints(kern["c0"], "c0")
    return prob


def load_problem(path):
    return problem_from_sections(io.read_sections(path))


def _kernel_name(curve):
    return defect.BETA if curve in (BETA_R, BETA_L) else curve


def diagram_blocks(code, p=3):
    """Blocks computable from the diagram: the first curve against every curve."""
    g = code.g_name
    out = {}
    for h in code.curves:
        if h == g:
            continue
        block = covers.linking_block(code, g, h, p)
        u, v = _kernel_name(g), _kernel_name(h)
        if u == v == defect.BETA and g == BETA_L:
            block = block.transpose()  # rows are lifts of beta_r
        out[(u, v)] = [list(r) for r in block.entries]
    return out


def run_defect(prob, p=3, resolution="left"):
    if p != 3:
        raise defect.DefectError("the kernel-curve signature is only available for p = 3")
    if prob.code is not None:
        check = validate_coloring(prob.code, p)
        if not check.valid:
            i, why = check.violations[0]
            raise DiagramError(f"invalid coloring at arc {i}: {why}")
        if not check.nontrivial:
            raise defect.DefectError("coloring trivial")
    # characteristic knot and its self-linking
    charknots = []
    beta = prob.beta
    if prob.form is not None:
        Q = seifert.symmetrize(prob.form)
        charknots = seifert.find_characteristic_knots(Q, p)
        if beta is None:
            if not charknots:
                raise defect.DefectError(f"no mod {p} characteristic knot")
            beta = charknots[0]
        ck = seifert.characteristic_knot(prob.form, beta, p, prob.beta_seifert)
        self_link = ck.self_linking
        if prob.self_link is not None and prob.self_link != self_link:
            raise DiagramError("stated self-linking disagrees with the Seifert pairing")
    elif prob.self_link is not None:
        self_link = prob.self_link
    else:
        raise DiagramError("need a [seifert] pairing or beta_self_linking")
    tl = seifert.tristram_levine(prob.beta_seifert, p)

    # anchor paths
    c0 = prob.c0
    if c0 is None:
        if prob.code is None:
            raise DiagramError("[kernel] c0 is required without a diagram")
        c0 = prob.code.alpha_c[0]
    role = {BETA_R: "gamma_r", BETA_L: "gamma_l"}
    monos = {}
    for name in list(prob.omegas) + [BETA_R, BETA_L]:
        if name not in prob.anchors:
            raise DiagramError(f"missing [anchor {name}]")
        mono = defect.monodromy(prob.anchors[name], prob.code, p)
        monos[role.get(name, name)] = mono
    sel = defect.select_kernel_curves(monos, c0, prob.omegas)

    blocks = dict(prob.blocks)
    if prob.code is not None and prob.code.curves:
        blocks.update(diagram_blocks(prob.code, p))
    km = defect.assemble_kernel_matrix(blocks, sel, resolution=resolution)
    sigma_w = defect.signature(km)
    report = defect.compute_defect(p, self_link, tl, sigma_w, km)
    verdict = defect.ribbon_obstruction_check(report.xi, p)
    shown = {k: (m, m.evaluate(c0)) for k, m in monos.items()}
    bad = defect.transfer_defects(blocks)
    return DefectResult(p, charknots, beta, self_link, tl, shown, sel, blocks, km,
                        sigma_w, report, verdict, resolution, bad)

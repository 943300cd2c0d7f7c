"""Command line: build graphs, compute and verify lambda, truncate, analyse, tabulate.

Exit codes: 0 success, 1 verification or agreement failure, 2 usage error,
3 refusal because a size cap or time budget was hit.
"""

from __future__ import annotations

import functools
import itertools
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import click
import numpy as np

from . import io
from .formulas import (
    ConstructionError,
    FormulaError,
    construct,
    construct_complete_multipartite,
    construct_fq_zpn,
    construct_zpn,
    construct_zpn_zqm,
    family_of,
    formula_value,
    lambda_beck_from_gamma,
    orient_pair,
)
from .formulas.families import Family
from .graph import INFINITE, CapExceeded, Graph, diameter, random_graph
from .l21.bounds import classical_bounds, lambda_via_path_cover, pinned_by_ledger
from .l21.labelling import Labelling, LabellingError, analyze, validate
from .l21.solver import SOLVER_CAP, LambdaReport, Method, lambda_exact
from .ring import RingSpecError, RingTooLarge, parse_ring_spec, prime_power
from .truncate import (
    LiftError,
    check_uniform_bipartite,
    diameter_relation_check,
    lift_from_truncation,
    partite_truncation,
)
from .zdg import PartiteStructure, PartitionError, gamma, gamma_beck

OK, FAILED, USAGE, REFUSED = 0, 1, 2, 3


@dataclass(frozen=True)
class RunConfig:
    max_vertices: int
    time_budget_ms: int | None
    fmt: str | None
    seed: int


class Exit(Exception):
    def __init__(self, code: int, message: str = ""):
        super().__init__(message)
        self.code = code


def _guard(fn):
    """Map library errors onto the exit-code contract."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except Exit as exc:
            if str(exc):
                click.echo(f"error: {exc}", err=True)
            sys.exit(exc.code)
        except (CapExceeded, RingTooLarge) as exc:
            click.echo(f"refused: {exc}", err=True)
            sys.exit(REFUSED)
        except (RingSpecError, io.FormatError, LabellingError, FormulaError,
                PartitionError, LiftError, FileNotFoundError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(USAGE)

    return wrapper


def _emit(cfg: RunConfig, data, *, human=None, allowed=("json", "human"), default="json"):
    fmt = cfg.fmt or default
    if fmt not in allowed:
        raise Exit(USAGE, f"--format {fmt} is not supported here (use one of {', '.join(allowed)})")
    if fmt == "human" and human is not None:
        click.echo(human(data))
    else:
        click.echo(json.dumps(data, indent=2, default=_jsonable))


def _jsonable(x):
    if x == INFINITE:
        return "inf"
    if isinstance(x, np.integer):
        return int(x)
    raise TypeError(f"cannot serialise {type(x).__name__}")


def _diam(d):
    return "inf" if d == INFINITE else d


# -- inputs --------------------------------------------------------------


def _input_options(fn):
    fn = click.option("--random", "random_", metavar="N:P",
                      help="Random G(n,p) graph drawn with --seed.")(fn)
    fn = click.option("--graph", "graph_path", type=click.Path(dir_okay=False),
                      help="Graph JSON file.")(fn)
    fn = click.option("--beck", is_flag=True, help="Use Beck's graph on all ring elements.")(fn)
    fn = click.option("--ring", help="Ring such as Z8, F4xZ9, Z2xZ2xZ2.")(fn)
    return fn


@dataclass
class Source:
    graph: Graph
    parts: PartiteStructure | None
    spec: object | None
    beck: bool


def _load(cfg: RunConfig, ring, beck, graph_path, random_) -> Source:
    given = [x for x in (ring, graph_path, random_) if x]
    if len(given) != 1:
        raise click.UsageError("give exactly one of --ring, --graph, --random")
    if beck and not ring:
        raise click.UsageError("--beck needs --ring")
    if ring:
        spec = parse_ring_spec(ring)
        if beck:
            return Source(gamma_beck(spec), None, spec, True)
        g, parts = gamma(spec)
        return Source(g, parts, spec, False)
    if graph_path:
        g = io.load_graph(graph_path)
        parts = PartiteStructure.from_parts(g.parts) if g.parts is not None else None
        return Source(g, parts, None, False)
    try:
        n_text, p_text = random_.split(":")
        n, p = int(n_text), float(p_text)
    except ValueError:
        raise click.UsageError(f"--random expects N:P, got {random_!r}") from None
    if n < 0 or not 0 <= p <= 1:
        raise click.UsageError("--random needs N >= 0 and 0 <= P <= 1")
    return Source(random_graph(n, p, np.random.default_rng(cfg.seed)), None, None, False)


def parse_values(text: str) -> list[int]:
    """``"2,3,5"``, ``"2..4"`` or a mix such as ``"2,4..6"``."""
    out: list[int] = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        if ".." in piece:
            lo, hi = piece.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(piece))
    if not out:
        raise ValueError(f"empty value list {text!r}")
    return out


def _values(text: str | None, name: str) -> list[int]:
    if text is None:
        raise click.UsageError(f"--{name} is required for this family")
    try:
        return parse_values(text)
    except ValueError as exc:
        raise click.UsageError(f"--{name}: {exc}") from None


# -- group ---------------------------------------------------------------


@click.group()
@click.option("--max-vertices", type=click.IntRange(min=1), default=SOLVER_CAP, show_default=True,
              help="Largest graph the exact solver accepts.")
@click.option("--time-budget-ms", type=click.IntRange(min=1), default=None,
              help="Wall-clock budget for the exact solver.")
@click.option("--format", "fmt", type=click.Choice(["json", "dot", "tsv", "human"]), default=None)
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for --random graphs.")
@click.version_option(package_name="artifact")
@click.pass_context
def main(ctx, max_vertices, time_budget_ms, fmt, seed):
    """Zero-divisor graphs and L(2,1)-labellings."""
    ctx.obj = RunConfig(max_vertices, time_budget_ms, fmt, seed)


# -- build ---------------------------------------------------------------


@main.command()
@click.option("--ring", required=True)
@click.option("--beck", is_flag=True)
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False), help="Also write DOT here.")
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Write JSON here instead of stdout.")
@click.pass_obj
@_guard
def build(cfg: RunConfig, ring, beck, dot_path, output):
    """Build the zero-divisor graph of a ring."""
    spec = parse_ring_spec(ring)
    g = gamma_beck(spec) if beck else gamma(spec)[0]
    if dot_path:
        Path(dot_path).write_text(io.to_dot(g))
    if output:
        io.write_json(io.graph_to_json(g), output)
        return
    if cfg.fmt == "dot":
        click.echo(io.to_dot(g), nl=False)
        return
    _emit(cfg, io.graph_to_json(g), human=lambda d: _human_graph(g))


def _human_graph(g: Graph) -> str:
    return f"{g.ring or 'graph'}: {g.n} vertices, {len(g.edges())} edges, diameter {_diam(diameter(g))}"


# -- lambda --------------------------------------------------------------


def _align(source: Graph, target: Graph) -> list[int]:
    """index map source vertex -> target vertex, matching element labels."""
    index = {lab: v for v, lab in enumerate(target.labels)}
    out = []
    for lab in source.labels:
        if lab not in index:
            lab = "(" + ",".join(reversed(lab.strip("()").split(","))) + ")"
        out.append(index[lab])
    return out


def _exact(cfg: RunConfig, g: Graph) -> LambdaReport:
    return lambda_exact(g, max_vertices=cfg.max_vertices, time_budget_ms=cfg.time_budget_ms)


def _lambda_formula(src: Source) -> LambdaReport:
    if src.spec is None:
        raise FormulaError("--method formula needs --ring")
    if src.beck:
        fam = family_of(src.spec)
        k = formula_value(fam)
        g, _ = gamma(src.spec)
        lam = lambda_beck_from_gamma(k, src.spec.order, g.n, diameter(g))
        notes = [f"Gamma family {fam.name}{fam.params}: lambda = {k}",
                 f"Beck shift: k + |R| - |Z*(R)| + 1 = {lam}"]
    else:
        fam = family_of(src.spec)
        lam = formula_value(fam)
        notes = [f"family {fam.name}{fam.params}" + (f", case {fam.case}" if fam.case else "")]
    notes.append("closed form; not certified by search")
    return LambdaReport(lam, None, Method.FORMULA, False, notes=notes)


def _lambda_construct(src: Source, strategy: str) -> tuple[LambdaReport, list]:
    if src.spec is None or src.beck:
        raise FormulaError("--method construct needs --ring without --beck")
    fam = family_of(src.spec)
    try:
        c = construct(fam, strategy)
    except ConstructionError as exc:
        raise Exit(FAILED, str(exc)) from None
    where = _align(c.graph, src.graph)
    labels = [0] * src.graph.n
    for v, x in zip(where, c.labelling.labels):
        labels[v] = x
    witness = Labelling.of(labels)
    if validate(src.graph, witness):
        raise Exit(FAILED, "constructed labelling does not validate on the built graph")
    notes = [f"family {fam.name}{fam.params}, formula {c.formula}, Delta+1 = {c.lower}"]
    if c.formula_refuted:
        notes.append("the closed form is not lambda for this instance")
    rep = LambdaReport(c.span, witness, Method.CONSTRUCTION, c.span == c.lower, lower=c.lower,
                       uppers={"construction": c.span}, notes=notes)
    return rep, [d.to_json() for d in c.discrepancies]


def _lambda_lift(cfg: RunConfig, src: Source) -> LambdaReport:
    g, parts = src.graph, src.parts
    if parts is None:
        raise LiftError("--method lift needs a partite structure (ring input or graph parts)")
    if not check_uniform_bipartite(g, parts):
        raise LiftError("classes are not pairwise complete-or-empty; lift does not apply")
    d = diameter(g)
    if d == 1:
        rep = _exact(cfg, g)
        rep.method = Method.LIFT
        rep.notes.append("complete graph: lambda(K_n) = 2n - 2 used instead of the lift")
        return rep
    t = partite_truncation(g, parts).truncated
    inner = _exact(cfg, t)
    if not inner.optimal:
        raise CapExceeded("exact solve of the truncated graph ran out of budget")
    out = lift_from_truncation(g, parts, inner.witness, inner.lam)
    rep = LambdaReport(out.lam, out.witness, Method.LIFT, False, uppers={"lift witness": out.witness.span})
    rep.notes.append(f"truncated graph: {t.n} vertices, lambda {inner.lam}, diameter {_diam(d)}")
    rep.notes.append(f"representative classes: {list(out.representatives.chosen)}")
    return rep


@main.command("lambda")
@_input_options
@click.option("--method", type=click.Choice(["exact", "formula", "construct", "path-cover", "lift"]),
              default="exact", show_default=True)
@click.option("--strategy", type=click.Choice(["layered", "first-fit"]), default="layered", show_default=True,
              help="W-block strategy for the Z_{p^n} x Z_{q^m} construction.")
@click.pass_obj
@_guard
def lambda_cmd(cfg: RunConfig, ring, beck, graph_path, random_, method, strategy):
    """Compute lambda by one method and print a report."""
    src = _load(cfg, ring, beck, graph_path, random_)
    extra = {}
    if method == "exact":
        rep = _exact(cfg, src.graph)
    elif method == "path-cover":
        rep = lambda_via_path_cover(src.graph)
    elif method == "formula":
        rep = _lambda_formula(src)
    elif method == "construct":
        rep, extra["discrepancies"] = _lambda_construct(src, strategy)
    else:
        rep = _lambda_lift(cfg, src)
    if rep.witness is not None and validate(src.graph, rep.witness):
        raise Exit(FAILED, "witness failed validation")
    data = rep.to_json() | extra
    _emit(cfg, data, human=_human_lambda)
    if method == "exact" and not rep.optimal:
        raise Exit(REFUSED, "time budget exhausted; reported value is an upper bound")


def _human_lambda(d: dict) -> str:
    lines = [f"lambda = {d['lambda']} ({d['method']}, {'optimal' if d['optimal'] else 'not certified'})"]
    if d.get("witness"):
        lines.append("witness: " + " ".join(map(str, d["witness"]["labels"])))
    lines.extend(f"note: {n}" for n in d["notes"])
    lines.extend(f"discrepancy: {x['item']} stated {x['stated']} used {x['used']}"
                 for x in d.get("discrepancies", []))
    return "\n".join(lines)


# -- verify --------------------------------------------------------------


@main.command()
@click.option("--graph", "graph_path", required=True, type=click.Path(dir_okay=False))
@click.option("--labelling", "labelling_path", required=True, type=click.Path(dir_okay=False))
@click.pass_obj
@_guard
def verify(cfg: RunConfig, graph_path, labelling_path):
    """Check an L(2,1)-labelling; exit 1 on any violation."""
    g = io.load_graph(graph_path)
    f = io.load_labelling(labelling_path)
    bad = validate(g, f)
    data = {"valid": not bad, "span": f.span,
            "violations": [{"u": v.u, "v": v.v, "rule": v.rule} for v in bad]}
    _emit(cfg, data, human=lambda d: "valid" if d["valid"] else "\n".join(
        f"violation ({x['u']},{x['v']}): {x['rule']}" for x in d["violations"]))
    if bad:
        raise Exit(FAILED)


# -- truncate ------------------------------------------------------------


@main.command()
@_input_options
@click.option("--require-uniform", is_flag=True, help="Exit 1 unless classes are complete-or-empty pairwise.")
@click.pass_obj
@_guard
def truncate(cfg: RunConfig, ring, beck, graph_path, random_, require_uniform):
    """Contract each partite class to one vertex."""
    src = _load(cfg, ring, beck, graph_path, random_)
    if src.parts is None:
        raise PartitionError("input has no partite classes (graph vertices need 'part' ids)")
    result = partite_truncation(src.graph, src.parts)
    uniform = check_uniform_bipartite(src.graph, src.parts)
    data = result.to_json() | {"uniform": uniform, "split": src.parts.split}
    if cfg.fmt == "dot":
        click.echo(io.to_dot(result.truncated, "T"), nl=False)
    else:
        _emit(cfg, data, human=lambda d: (
            f"{len(d['sizes'])} classes, sizes {d['sizes']}, uniform {d['uniform']}\n"
            + _human_graph(result.truncated)))
    if require_uniform and not uniform:
        raise Exit(FAILED, "classes are not pairwise complete-or-empty")


# -- analyze -------------------------------------------------------------


@main.command("analyze")
@_input_options
@click.option("--labelling", "labelling_path", type=click.Path(dir_okay=False),
              help="Also report holes, multiplicities and gaps of this labelling.")
@click.pass_obj
@_guard
def analyze_cmd(cfg: RunConfig, ring, beck, graph_path, random_, labelling_path):
    """Diameter, clique/independence/chromatic numbers, lambda bounds, holes."""
    src = _load(cfg, ring, beck, graph_path, random_)
    g = src.graph
    ledger = classical_bounds(g)
    data = {"vertices": g.n, "edges": len(g.edges()), "connected": g.is_connected(),
            "diameter": _diam(diameter(g)), "bounds": ledger.to_json(),
            "pinned_lambda": pinned_by_ledger(ledger)}
    try:
        data["path_cover"] = lambda_via_path_cover(g).to_json()
    except CapExceeded as exc:
        data["path_cover"] = None
        data["bounds"]["refused"]["path_cover"] = str(exc)
    if src.parts is not None and g.is_connected() and check_uniform_bipartite(g, src.parts):
        data["truncation_diameter"] = diameter_relation_check(g, src.parts).to_json()
    code = OK
    if labelling_path:
        f = io.load_labelling(labelling_path)
        bad = validate(g, f)
        if bad:
            data["violations"] = [{"u": v.u, "v": v.v, "rule": v.rule} for v in bad]
            code = FAILED
        else:
            data["holes"] = analyze(g, f, check=False).to_json()
    _emit(cfg, data, human=_human_analysis)
    if code:
        raise Exit(code, "labelling is not a valid L(2,1)-labelling")


def _human_analysis(d: dict) -> str:
    b = d["bounds"]
    lines = [f"{d['vertices']} vertices, {d['edges']} edges, diameter {d['diameter']}",
             f"omega {b['omega']}  alpha {b['alpha']}  chi {b['chi']}  max degree {b['max_degree']}",
             f"lower {b['lower']}  upper {b['upper']}"]
    if d["pinned_lambda"] is not None:
        lines.append(f"lambda pinned by bounds: {d['pinned_lambda']}")
    if d.get("path_cover"):
        pc = d["path_cover"]
        lines.append(f"path cover: lambda {'=' if pc['optimal'] else '<='} {pc['lambda']}")
    for k, v in b["refused"].items():
        lines.append(f"refused {k}: {v}")
    if "holes" in d:
        h = d["holes"]
        lines.append(f"holes {h['holes']}  multiplicities {h['multiplicities']}  gaps {h['gaps']}")
    return "\n".join(lines)


# -- table ---------------------------------------------------------------

COLUMNS = ("family", "params", "case", "formula", "span", "valid", "exact", "agree", "discrepancies")


def _instances(family, p, n, q, m, sizes_upto, max_order):
    if family == "zpn":
        for a, k in itertools.product(_values(p, "p"), _values(n, "n")):
            if a**k <= max_order:
                yield Family("zpn", (a, k))
    elif family == "zpn-zqm":
        seen = set()
        for a, k, b, j in itertools.product(_values(p, "p"), _values(n, "n"),
                                            _values(q, "q"), _values(m, "m")):
            key = orient_pair(a, k, b, j)
            if key not in seen and a**k * b**j <= max_order:
                seen.add(key)
                yield Family("zpn-zqm", key)
    elif family == "fq-zpn":
        for c, a, k in itertools.product(_values(q, "q"), _values(p, "p"), _values(n, "n")):
            if c * a**k <= max_order:
                yield Family("fq-zpn", (c, a, k))
    else:
        caps = _values(sizes_upto, "sizes-upto")
        seen = set()
        for sizes in itertools.product(*(range(1, c + 1) for c in caps)):
            key = tuple(sorted(sizes))
            if key not in seen:
                seen.add(key)
                yield Family("multipartite", key)


def table_row(cfg: RunConfig, fam: Family, strategy: str, exact: bool) -> dict:
    builders = {"zpn": construct_zpn, "fq-zpn": construct_fq_zpn,
                "multipartite": lambda *s: construct_complete_multipartite(s)}
    if fam.name == "zpn-zqm":
        c = construct_zpn_zqm(*fam.params, strategy=strategy)
    else:
        c = builders[fam.name](*fam.params)
    row = {"family": fam.name, "params": ",".join(map(str, fam.params)), "case": fam.case,
           "formula": c.formula, "span": c.span, "valid": not validate(c.graph, c.labelling),
           "exact": None, "discrepancies": len(c.discrepancies), "vertices": c.graph.n}
    if exact and c.graph.n <= cfg.max_vertices:
        rep = _exact(cfg, c.graph)
        if rep.optimal:
            row["exact"] = rep.lam
    row["agree"] = row["valid"] and c.span == c.formula and row["exact"] in (None, c.formula)
    return row


def _tsv(rows) -> str:
    def cell(x):
        if x is None:
            return "-"
        if isinstance(x, bool):
            return "yes" if x else "no"
        return str(x)

    lines = ["\t".join(COLUMNS)]
    lines.extend("\t".join(cell(r[c]) for c in COLUMNS) for r in rows)
    return "\n".join(lines)


@main.command()
@click.option("--family", required=True, type=click.Choice(["zpn", "zpn-zqm", "fq-zpn", "multipartite"]))
@click.option("--p")
@click.option("--n")
@click.option("--q")
@click.option("--m")
@click.option("--sizes-upto", help="Per-part size caps for complete multipartite graphs, e.g. 4,4,4.")
@click.option("--strategy", type=click.Choice(["layered", "first-fit"]), default="layered", show_default=True)
@click.option("--exact/--no-exact", default=True, show_default=True,
              help="Also run the exact solver on graphs within --max-vertices.")
@click.option("--max-order", type=click.IntRange(min=1), default=100_000, show_default=True,
              help="Skip rings larger than this.")
@click.option("--figure", type=click.Path(dir_okay=False), help="Write a plot of the table here.")
@click.pass_obj
@_guard
def table(cfg: RunConfig, family, p, n, q, m, sizes_upto, strategy, exact, max_order, figure):
    """Closed form, constructed span and exact lambda over a parameter grid."""
    if family == "fq-zpn":
        bad = [x for x in _values(q, "q") if prime_power(x) is None]
        if bad:
            raise click.UsageError(f"--q values must be prime powers: {bad}")
    rows = []
    for fam in _instances(family, p, n, q, m, sizes_upto, max_order):
        try:
            rows.append(table_row(cfg, fam, strategy, exact))
        except ConstructionError as exc:
            rows.append({"family": fam.name, "params": ",".join(map(str, fam.params)),
                         "case": fam.case, "formula": None, "span": None, "valid": False,
                         "exact": None, "agree": False, "discrepancies": len(exc.discrepancies)})
    if figure:
        from .plotting import plot_table

        plot_table([r for r in rows if r["span"] is not None], figure, title=family)
    fmt = cfg.fmt or "tsv"
    if fmt == "dot":
        raise Exit(USAGE, "--format dot is not supported by table")
    click.echo(json.dumps(rows, indent=2) if fmt == "json" else _tsv(rows))
    if not all(r["agree"] for r in rows):
        raise Exit(FAILED, f"{sum(not r['agree'] for r in rows)} of {len(rows)} rows disagree")


if __name__ == "__main__":
    main()

"""Command-line interface.

One executable, seven subcommands: ``nu`` (exact proportions), ``region``
(index-region polygons), ``enumerate`` (degenerate sets), ``tree``
(subtree expansion), ``scan`` (empirical Farey tallies), ``verify``
(reference-table suites) and ``table`` (regenerate the proportion table
as CSV).  Exact rationals always serialize as "p/q" strings; decimals
only appear in explicitly decimal columns.

Exit codes: 0 success, 1 verification failure, 2 argument/validation
error.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from . import __version__
from .enumeration import CongruenceSpec, build_tree, degenerate_set
from .geometry import region
from .proportions import nu_closed_form, nu_from_enumeration, sig_round
from .scan import ScanConfig
from .scan import scan as scan_period
from .tuples import TupleSpec, TupleSyntaxError
from .verify import DEFAULT_SEED, SUITES, run_suites


def _fail(message: str) -> "click.UsageError":
    return click.UsageError(message)


def _parse_tuple(text: str) -> TupleSpec:
    try:
        return TupleSpec.parse(text)
    except TupleSyntaxError as e:
        raise _fail(str(e))


def _congruence(D: int, c0: int) -> CongruenceSpec:
    try:
        return CongruenceSpec(D, c0, (c0 + 1) % D)
    except ValueError as e:
        raise _fail(str(e))


@click.group()
@click.version_option(__version__, prog_name="fareygaps")
def main() -> None:
    """Exact gap statistics of Farey fractions in arithmetic progressions."""


# ---------------------------------------------------------------------------
# nu
# ---------------------------------------------------------------------------

@main.command("nu")
@click.option("--r", "r", type=int, required=True, help="Gap size.")
@click.option("--D", "D", type=int, default=3, show_default=True,
              help="Denominator modulus.")
@click.option("--c0", type=int, default=0, show_default=True,
              help="Denominator residue.")
@click.option("--route", type=click.Choice(["enum", "closed", "both"]),
              default="both", show_default=True)
@click.option("--digits", type=int, default=15, show_default=True,
              help="Significant digits in the decimal column.")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]),
              default="json", show_default=True)
def nu_cmd(r: int, D: int, c0: int, route: str, digits: int, fmt: str) -> None:
    """The limiting proportion of size-r gaps, exactly."""
    if r < 1:
        raise _fail("need --r >= 1")
    try:
        if route == "enum":
            results = [nu_from_enumeration(r, D, c0)]
        elif route == "closed":
            results = [nu_closed_form(r, D, c0)]
        else:
            results = [nu_from_enumeration(r, D, c0), nu_closed_form(r, D, c0)]
    except ValueError as e:
        raise _fail(str(e))
    if len(results) == 2 and results[0].value != results[1].value:
        click.echo("route disagreement:", err=True)
        for res in results:
            click.echo(f"  {res.route}: {res.value.render()}", err=True)
        sys.exit(1)
    if fmt == "json":
        doc = results[0].as_json(digits)
        if route == "both":
            doc["route"] = "both"
            doc["agree"] = True
        click.echo(json.dumps(doc))
    else:
        for res in results:
            click.echo(f"nu({r}; {D}, {c0}) = {res.value.render()} "
                       f"= {res.numeric(digits)}  [{res.route}]")


# ---------------------------------------------------------------------------
# region
# ---------------------------------------------------------------------------

@main.command("region")
@click.option("--tuple", "tuple_text", required=True,
              help='Index tuple, e.g. "2,4,1" or "2,(4,1)^3".')
@click.option("--svg", "svg_path", type=click.Path(dir_okay=False),
              default=None, help="Also write an SVG picture here.")
@click.option("--format", "fmt", type=click.Choice(["json", "text", "svg"]),
              default="json", show_default=True)
def region_cmd(tuple_text: str, svg_path: str, fmt: str) -> None:
    """Vertices and exact area of one index region."""
    t = _parse_tuple(tuple_text)
    reg = region(t)
    if svg_path:
        with open(svg_path, "w") as fp:
            fp.write(reg.to_svg())
    if fmt == "json":
        click.echo(json.dumps(reg.to_json(t)))
    elif fmt == "svg":
        click.echo(reg.to_svg())
    else:
        status = "empty" if reg.empty else f"area {reg.area}"
        click.echo(f"T({t.render()}): {status}")
        for v in reg.vertices:
            click.echo(f"  ({v.x}, {v.y})")


# ---------------------------------------------------------------------------
# enumerate
# ---------------------------------------------------------------------------

@main.command("enumerate")
@click.option("--r", "r", type=int, required=True, help="Gap size.")
@click.option("--D", "D", type=int, default=3, show_default=True)
@click.option("--c0", type=int, default=0, show_default=True)
@click.option("--c1", type=int, default=None,
              help="Entry residue (default: smallest admissible).")
@click.option("--k-max", type=int, default=None,
              help="Bound the search instead of closing slot families.")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]),
              default="json", show_default=True)
def enumerate_cmd(r: int, D: int, c0: int, c1, k_max, fmt: str) -> None:
    """The degenerate index tuples behind nu(r): finite part and families."""
    if r < 1:
        raise _fail("need --r >= 1")
    try:
        c = (CongruenceSpec(D, c0, c1) if c1 is not None
             else _congruence(D, c0))
        ds = degenerate_set(r, c, k_max=k_max)
    except ValueError as e:
        raise _fail(str(e))
    if fmt == "json":
        click.echo(json.dumps(ds.as_json()))
        return
    click.echo(f"degenerate tuples at r={r}, D={D}, c0={c0}, c1={c.c1}"
               + (f" (entries <= {k_max})" if k_max else ""))
    for t in ds.finite:
        click.echo(f"  {TupleSpec.from_indices(t).render()}")
    for fam in ds.families:
        click.echo(f"  {fam.template()}  k = {fam.progression()}, "
                   f"k >= {fam.k_min};  {fam.area_rule()}")


# ---------------------------------------------------------------------------
# tree
# ---------------------------------------------------------------------------

@main.command("tree")
@click.option("--seed", "seed_text", required=True,
              help='Live seed tuple, e.g. "2,4".')
@click.option("--depth", type=int, required=True, help="Expansion depth.")
@click.option("--D", "D", type=int, default=3, show_default=True)
@click.option("--c0", type=int, default=0, show_default=True)
@click.option("--max-index", type=int, default=None,
              help="Cap child indices (needed when a family opens up).")
@click.option("--format", "fmt",
              type=click.Choice(["text", "json", "dot", "svg"]),
              default="text", show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False),
              default=None, help="Write to a file instead of stdout.")
def tree_cmd(seed_text: str, depth: int, D: int, c0: int, max_index,
             fmt: str, out_path) -> None:
    """Expand the index-tuple tree under a live seed."""
    t = _parse_tuple(seed_text)
    try:
        tree = build_tree(t.indices, _congruence(D, c0), depth,
                          max_index=max_index)
    except ValueError as e:
        raise _fail(str(e))
    if fmt == "dot":
        text = tree.to_dot()
    elif fmt == "svg":
        text = tree.to_svg()
    elif fmt == "json":
        text = json.dumps({
            "seed": TupleSpec.from_indices(tree.seed).render(),
            "depth": tree.depth,
            "nodes": [{
                "tuple": node.label(),
                "status": node.status,
                "area": str(node.area),
                "children": len(node.children),
            } for node in tree.nodes()],
        })
    else:
        lines = []
        base = len(tree.seed)
        for node in tree.nodes():
            indent = "  " * (node.depth - base)
            mark = {"live": "", "degenerate": "  [degenerate]",
                    "rejected": "  [rejected]"}[node.status]
            lines.append(f"{indent}{node.label()}  area {node.area}{mark}")
        text = "\n".join(lines)
    if out_path:
        with open(out_path, "w") as fp:
            fp.write(text + "\n")
    else:
        click.echo(text)


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------

@main.command("scan")
@click.option("--Q", "Q", type=int, required=True, help="Farey order.")
@click.option("--D", "D", type=int, default=3, show_default=True)
@click.option("--c0", type=int, default=0, show_default=True)
@click.option("--rmax", type=int, default=200, show_default=True,
              help="Histogram cutoff; longer gaps pool into overflow.")
@click.option("--backend", type=click.Choice(["numba", "python"]),
              default=None, help="Force a scan backend.")
@click.option("--progress/--no-progress", default=True, show_default=True,
              help="Progress percentage on stderr.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="csv", show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False),
              default=None, help="Write to a file instead of stdout.")
def scan_cmd(Q: int, D: int, c0: int, rmax: int, backend, progress: bool,
             fmt: str, out_path) -> None:
    """Scan one period of the Farey sequence and tally coloured gaps."""
    try:
        cfg = ScanConfig(Q, D, c0, rmax)
    except ValueError as e:
        raise _fail(str(e))
    h = scan_period(cfg, backend=backend, progress=progress)
    if fmt == "json":
        text = json.dumps(h.as_json())
        if out_path:
            with open(out_path, "w") as fp:
                fp.write(text + "\n")
        else:
            click.echo(text)
    else:
        if out_path:
            with open(out_path, "w") as fp:
                h.write_csv(fp)
        else:
            h.write_csv(sys.stdout)


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

@main.command("verify")
@click.option("--suite", "suites", multiple=True,
              type=click.Choice(sorted(SUITES)),
              help="Suite to run (repeatable; default: all).")
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True,
              help="Seed for the randomized checks.")
@click.option("--threads", type=int, default=None,
              help="Run suites concurrently (default: FAREYGAPS_THREADS).")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]),
              default="text", show_default=True)
def verify_cmd(suites, seed: int, threads, fmt: str) -> None:
    """Recompute reference tables and report per-check results."""
    names = list(suites) or None
    results = run_suites(names, seed=seed, threads=threads)
    failures = [r for r in results if not r.ok]
    if fmt == "json":
        click.echo(json.dumps([{
            "suite": r.suite, "name": r.name, "ok": r.ok, "detail": r.detail,
        } for r in results]))
    else:
        for r in results:
            click.echo(r.line())
        click.echo(f"{len(results) - len(failures)}/{len(results)} checks passed")
    if failures:
        sys.exit(1)


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

@main.command("table")
@click.option("--r-min", type=int, default=8, show_default=True)
@click.option("--r-max", type=int, default=80, show_default=True)
@click.option("--D", "D", type=int, default=3, show_default=True)
@click.option("--digits", type=int, default=15, show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False),
              default=None, help="Write to a file instead of stdout.")
def table_cmd(r_min: int, r_max: int, D: int, digits: int, out_path) -> None:
    """Regenerate the proportion table (CSV: r, exact, decimal)."""
    if not 1 <= r_min <= r_max:
        raise _fail("need 1 <= --r-min <= --r-max")
    lines = ["r,exact,decimal"]
    try:
        for r in range(r_min, r_max + 1):
            res = nu_closed_form(r, D)
            exact = (str(res.value.as_rational()) if res.value.is_rational
                     else res.value.render())
            lines.append(f"{r},{exact},{sig_round(res.value, digits)}")
    except ValueError as e:
        raise _fail(str(e))
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as fp:
            fp.write(text)
    else:
        click.echo(text, nl=False)


if __name__ == "__main__":
    main()

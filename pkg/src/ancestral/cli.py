"""Command-line front end.

Exit codes: 0 success, 1 negative domain verdict (rejected knowledge,
FALSE audit, unrealizable sample), 2 usage or parse errors.
"""

import json
import sys

import click

from . import simulate as sim
from .essential import (
    add_bg_knowledge,
    mag_to_essential,
    parse_knowledge,
    verify_completeness,
)
from .graph import GraphError, parse_pmg, render_pmg
from .jointree import NoSuchMag, sample_mag
from .oracle import mec, restrict
from .rules import trace_jsonl


def _read_graph(path):
    try:
        with open(path) as fh:
            return parse_pmg(fh.read())
    except OSError as e:
        raise click.ClickException(str(e))
    except GraphError as e:
        click.echo("%s: %s" % (path, e), err=True)
        sys.exit(2)


def _read_pieces(path, g):
    try:
        with open(path) as fh:
            return parse_knowledge(fh.read(), g)
    except OSError as e:
        raise click.ClickException(str(e))
    except GraphError as e:
        click.echo("%s: %s" % (path, e), err=True)
        sys.exit(2)


@click.group()
def main():
    """Equivalence classes of ancestral graphs under expert knowledge."""


@main.command()
@click.argument("mag", type=click.Path(exists=True))
def mag2eag(mag):
    """Print the class representation of a MAG."""
    m = _read_graph(mag)
    try:
        click.echo(render_pmg(mag_to_essential(m)), nl=False)
    except GraphError as e:
        click.echo(str(e), err=True)
        sys.exit(2)


@main.command()
@click.argument("eag", type=click.Path(exists=True))
@click.argument("knowledge", type=click.Path(exists=True))
@click.option("--trace", is_flag=True, help="append the orientation trace")
def addbg(eag, knowledge, trace):
    """Fold a knowledge file into a class representation."""
    g = _read_graph(eag)
    pieces = _read_pieces(knowledge, g)
    res = add_bg_knowledge(g, pieces)
    if not res.ok:
        click.echo(
            json.dumps(
                {
                    "failed": str(res.failed),
                    "index": res.failed_index,
                    "reason": res.reason,
                }
            )
        )
        sys.exit(1)
    click.echo(render_pmg(res.graph), nl=False)
    if trace:
        click.echo(trace_jsonl(res.trace), nl=False)


@main.command()
@click.argument("eag", type=click.Path(exists=True))
@click.argument("knowledge", type=click.Path(exists=True))
@click.option("--report", "with_report", is_flag=True,
              help="also print the audit report as JSON")
def verify(eag, knowledge, with_report):
    """Fold knowledge in, audit the result, print TRUE or FALSE."""
    g = _read_graph(eag)
    pieces = _read_pieces(knowledge, g)
    res = add_bg_knowledge(g, pieces)
    if not res.ok:
        click.echo("FAIL: %s" % res.reason)
        sys.exit(1)
    verdict, report = verify_completeness(
        g, res.graph, pieces, with_report=True
    )
    click.echo("TRUE" if verdict else "FALSE")
    if with_report:
        click.echo(json.dumps(report))
    sys.exit(0 if verdict else 1)


@main.command("mec")
@click.argument("action", type=click.Choice(["count", "enumerate"]))
@click.argument("mag", type=click.Path(exists=True))
@click.option("--restrict", "restrict_path", type=click.Path(exists=True),
              help="knowledge file narrowing the class")
def mec_cmd(action, mag, restrict_path):
    """Count or list the equivalence class of a MAG."""
    m = _read_graph(mag)
    pieces = _read_pieces(restrict_path, m) if restrict_path else []
    try:
        members = restrict(mec(m), pieces)
    except GraphError as e:
        click.echo(str(e), err=True)
        sys.exit(2)
    if action == "count":
        click.echo(str(len(members)))
        return
    click.echo("\n".join(render_pmg(g) for g in members), nl=False)


@main.command("sample-mag")
@click.argument("eag", type=click.Path(exists=True))
@click.option("--edge", required=True, help="edge as X,Y")
@click.option("--mark", required=True,
              type=click.Choice(["dir", "rev", "bidir"]))
def sample_mag_cmd(eag, edge, mark):
    """Print one class member with the chosen edge orientation."""
    g = _read_graph(eag)
    if edge.count(",") != 1:
        click.echo("--edge expects X,Y", err=True)
        sys.exit(2)
    x, y = (part.strip() for part in edge.split(","))
    try:
        click.echo(render_pmg(sample_mag(g, x, y, mark)), nl=False)
    except NoSuchMag as e:
        click.echo("no such member: %s" % e)
        sys.exit(1)
    except GraphError as e:
        click.echo(str(e), err=True)
        sys.exit(2)


@main.command()
@click.option("--n", required=True, type=int)
@click.option("--p", required=True, type=float)
@click.option("--reveal", required=True, type=int,
              help="percent of circle marks to reveal")
@click.option("--trials", required=True, type=int)
@click.option("--seed", required=True, type=int)
@click.option("--out", required=True, type=click.Path(),
              help="output directory for results.jsonl and summary.csv")
@click.option("--workers", default=1, type=int, show_default=True)
def simulate(n, p, reveal, trials, seed, out, workers):
    """Run trials, append records, rewrite the summary."""
    import os

    try:
        records = sim.run_trials(n, p, reveal, trials, seed, workers)
    except ValueError as e:
        click.echo(str(e), err=True)
        sys.exit(2)
    os.makedirs(out, exist_ok=True)
    results = os.path.join(out, "results.jsonl")
    sim.append_records(results, records)
    rows = sim.summarize(sim.load_records(results))
    sim.write_summary_csv(os.path.join(out, "summary.csv"), rows)
    for row in rows:
        click.echo(json.dumps(row))


@main.command()
@click.option("--port", default=8000, type=int, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
def serve(port, host):
    """Serve the HTTP session API."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()

"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 parse error,
3 infinite-dimensional algebra, 4 cap exceeded, 5 precondition violated.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .algebra import load_algebra, one_point_extension, serialize_algebra
from .catalog import build_catalog
from .config import Config
from .dags import hasse_to_dag, to_dot
from .errors import (AlgebraFormatError, CapExceededError, InfiniteDimensionalError,
                     InvariantViolation, PreconditionError)
from .tilting import pair_to_dict
from .verify import (CLAIMS, Enumeration, ExtensionContext, reports_to_json,
                     reproduce_tables, run_claims)
from .util import write_text_atomic

EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_INFINITE = 3
EXIT_CAP = 4
EXIT_PRECONDITION = 5


def _run(body):
    try:
        return body()
    except AlgebraFormatError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    except InfiniteDimensionalError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INFINITE)
    except CapExceededError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_CAP)
    except PreconditionError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PRECONDITION)
    except InvariantViolation as exc:
        click.echo(f"internal check failed: {exc}", err=True)
        sys.exit(EXIT_VERIFY)


@click.group()
@click.option("--cap-cliques", type=int, default=1_000_000, envvar="TAUTILT_CAP_CLIQUES",
              show_default=True, help="Abort enumeration past this many search nodes.")
@click.option("--cap-catalog", type=int, default=0, envvar="TAUTILT_CAP_CATALOG",
              show_default=True, help="Catalog closure cap; 0 means 10*n^2.")
@click.option("--jobs", type=int, default=1, envvar="TAUTILT_JOBS", show_default=True,
              help="Worker threads for batch Hom computations.")
@click.option("--out-dir", type=click.Path(path_type=Path), default=Path("."),
              show_default=True, help="Directory for report and failure artifacts.")
@click.pass_context
def main(ctx, cap_cliques, cap_catalog, jobs, out_dir):
    """Support tau-tilting computations over monomial bound quiver algebras."""
    try:
        ctx.obj = Config(cap_cliques=cap_cliques, cap_catalog=cap_catalog,
                         out_dir=out_dir, jobs=jobs)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PRECONDITION)


@main.command()
@click.argument("file", type=click.Path(exists=True, path_type=Path))
def validate(file):
    """Parse, normalize and size-check an algebra file."""
    def body():
        algebra = load_algebra(file)
        click.echo(f"dim {algebra.dimension}")
        click.echo(f"paths {len(algebra.path_basis)}")
    _run(body)


@main.command(name="enumerate")
@click.argument("file", type=click.Path(exists=True, path_type=Path))
@click.option("--kind", type=click.Choice(["stau", "tau", "tilt"]), default="stau",
              show_default=True)
@click.pass_obj
def enumerate_cmd(config, file, kind):
    """List modules of the requested kind; the final line carries the count."""
    def body():
        algebra = load_algebra(file)
        enum = Enumeration(algebra, config)
        if kind == "stau":
            items = [pair_to_dict(p) for p in enum.pairs]
        elif kind == "tau":
            items = [{"summands": list(m)} for m in enum.tau_tilt()]
        else:
            items = [{"summands": list(m)} for m in enum.tilt()]
        for item in items:
            click.echo(json.dumps(item, sort_keys=True))
        click.echo(f"count {len(items)}")
    _run(body)


@main.command(name="hasse")
@click.argument("file", type=click.Path(exists=True, path_type=Path))
@click.option("--dot", "dot_path", type=click.Path(path_type=Path), default=None,
              help="Write the quiver as DOT to this path.")
@click.pass_obj
def hasse_cmd(config, file, dot_path):
    """Build the left-mutation quiver and report its size."""
    def body():
        algebra = load_algebra(file)
        enum = Enumeration(algebra, config)
        h = enum.hasse()
        if dot_path is not None:
            write_text_atomic(dot_path, to_dot(hasse_to_dag(h)))
        click.echo(f"vertices {len(h.pairs)} arrows {len(h.arrows)}")
    _run(body)


@main.command()
@click.argument("file", type=click.Path(exists=True, path_type=Path))
@click.option("--source", "source_vertex", required=True, help="Source vertex to extend at.")
@click.option("--out", "out_path", type=click.Path(path_type=Path), required=True)
def extend(file, source_vertex, out_path):
    """Write the one-point extension at a source vertex to a new algebra file."""
    def body():
        algebra = load_algebra(file)
        extended, new_vertex = one_point_extension(algebra, source_vertex)
        write_text_atomic(out_path, serialize_algebra(extended))
        click.echo(f"new vertex {new_vertex}")
    _run(body)


@main.command()
@click.argument("file", type=click.Path(exists=True, path_type=Path))
@click.option("--source", "source_vertex", required=True, help="Source vertex to extend at.")
@click.option("--claims", default=",".join(CLAIMS), show_default=True,
              help="Comma-separated claim list.")
@click.option("--report", "report_path", type=click.Path(path_type=Path), default=None,
              help="Report file (default: out-dir/verify_report.json).")
@click.pass_obj
def verify(config, file, source_vertex, claims, report_path):
    """Run the selected claim verifiers on the extension context of FILE."""
    def body():
        algebra = load_algebra(file)
        wanted = tuple(c.strip() for c in claims.split(",") if c.strip())
        unknown = [c for c in wanted if c not in CLAIMS]
        if unknown:
            raise PreconditionError(f"unknown claims: {', '.join(unknown)}")
        ctx = ExtensionContext(algebra, source_vertex, config)
        explicit_tilting = "tilting-transfer" in wanted and claims != ",".join(CLAIMS)
        reports = run_claims(ctx, wanted, dot_dir=config.out_dir,
                             skip_tilting_at_sink=not explicit_tilting)
        for rep in reports:
            line = f"{rep.claim}: {rep.status}"
            if rep.counts:
                line += " " + json.dumps(rep.counts, sort_keys=True)
            click.echo(line)
            if rep.detail:
                click.echo(f"  {rep.detail}")
        path = report_path or (config.out_dir / "verify_report.json")
        write_text_atomic(path, reports_to_json(reports))
        if any(r.status == "fail" for r in reports):
            sys.exit(EXIT_VERIFY)
    _run(body)


@main.command()
@click.option("--nA", "n_a", type=int, default=10, show_default=True)
@click.option("--nD", "n_d", type=int, default=10, show_default=True)
@click.pass_obj
def tables(config, n_a, n_d):
    """Reproduce both family tables and diff them against the reported values."""
    def body():
        result = reproduce_tables(n_a, n_d, config)
        click.echo(result.render(), nl=False)
        warnings = sum(1 for d in result.discrepancies if d.corroborated)
        click.echo(f"warnings {warnings}")
        if result.hard_failures:
            click.echo(f"hard failures {result.hard_failures}", err=True)
            sys.exit(EXIT_VERIFY)
    _run(body)


@main.command()
@click.argument("file", type=click.Path(exists=True, path_type=Path))
@click.pass_obj
def catalog(config, file):
    """Dump the indecomposable catalog with dimension vectors."""
    def body():
        algebra = load_algebra(file)
        cat = build_catalog(algebra, cap=config.cap_catalog, jobs=config.jobs)
        for line in cat.dump_lines():
            click.echo(line)
        click.echo(f"count {cat.size}")
    _run(body)


if __name__ == "__main__":
    main()

"""Command-line interface.

Subcommands: ``invariants``, ``transform``, ``moves``, ``realize``,
``census``, ``verify``.  All output is byte-deterministic for a fixed
command line and seed.  Exit codes: 0 success, 1 input error, 2 property
violation.

The environment variable ``OWPOLY_MAX_N`` (default 4) caps the chord count
accepted by enumeration-driven commands.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from . import census as census_mod
from .gauss import GaussCodeError, GaussDiagram, parse, serialize
from .invariants import report
from .laurent import PolySyntaxError, format_poly, parse_poly, poly_to_map
from .moves import walk_trace
from .realize import RealizationError, plan, realize
from .transforms import connected_sum, delete_chord, inverse, mirror
from .verify import SUITES, run_suite

EXIT_INPUT_ERROR = 1
EXIT_VIOLATION = 2


def _max_n() -> int:
    raw = os.environ.get("OWPOLY_MAX_N", "4")
    try:
        return int(raw)
    except ValueError:
        raise click.ClickException(f"OWPOLY_MAX_N must be an integer, got {raw!r}")


def _load_code(code_or_file: str, from_file: bool) -> str:
    if from_file:
        try:
            return Path(code_or_file).read_text().strip()
        except OSError as exc:
            click.echo(f"error: cannot read {code_or_file}: {exc}", err=True)
            sys.exit(EXIT_INPUT_ERROR)
    return code_or_file


def _parse_or_die(code: str) -> GaussDiagram:
    try:
        return parse(code)
    except GaussCodeError as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        sys.exit(EXIT_INPUT_ERROR)


@click.group()
@click.version_option(package_name="owpoly")
def cli() -> None:
    """Odd writhe polynomial invariants of virtual knots from Gauss codes."""


@cli.command("invariants")
@click.argument("code")
@click.option("--file", "from_file", is_flag=True,
              help="Treat CODE as a path to a file holding the Gauss code.")
def cmd_invariants(code: str, from_file: bool) -> None:
    """Print the full invariant report of a Gauss code as JSON."""
    d = _parse_or_die(_load_code(code, from_file))
    click.echo(json.dumps(report(d).to_dict(), indent=2))


@cli.command("transform")
@click.argument("code")
@click.option("--op", required=True,
              type=click.Choice(["inverse", "mirror", "sum", "delete"]))
@click.option("--with", "other_code", default=None,
              help="Second operand Gauss code (sum).")
@click.option("--arc", type=int, default=0, show_default=True,
              help="Splice arc in the first operand (sum).")
@click.option("--arc2", type=int, default=0, show_default=True,
              help="Splice arc in the second operand (sum).")
@click.option("--chord", type=int, default=None, help="Chord id (delete).")
def cmd_transform(code: str, op: str, other_code: str | None, arc: int,
                  arc2: int, chord: int | None) -> None:
    """Apply a diagram operator and print the resulting Gauss code."""
    d = _parse_or_die(code)
    try:
        if op == "inverse":
            out = inverse(d)
        elif op == "mirror":
            out = mirror(d)
        elif op == "sum":
            if other_code is None:
                raise click.UsageError("--op sum requires --with CODE")
            out = connected_sum(d, arc, _parse_or_die(other_code), arc2)
        else:
            if chord is None:
                raise click.UsageError("--op delete requires --chord ID")
            out = delete_chord(d, chord)
    except GaussCodeError as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        sys.exit(EXIT_INPUT_ERROR)
    click.echo(out.canonical_code)


@cli.command("moves")
@click.argument("code", default="")
@click.option("--walk", "steps", type=int, default=200, show_default=True,
              help="Number of random moves to apply.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--assert-invariance", is_flag=True,
              help="Exit 2 if any step changes f, J, degree, or flags.")
def cmd_moves(code: str, steps: int, seed: int, assert_invariance: bool) -> None:
    """Random move walk; one JSON object per step on stdout."""
    from .verify import invariant_fingerprint

    d = _parse_or_die(code)
    fingerprint = invariant_fingerprint(d)
    for step, move, current in walk_trace(d, steps, seed):
        got = invariant_fingerprint(current)
        click.echo(json.dumps({
            "step": step,
            "move": move.to_dict(),
            "gauss_code": serialize(current),
            "f": poly_to_map(got[0]),
        }))
        if assert_invariance and got != fingerprint:
            click.echo(f"violation at step {step}: f changed to "
                       f"{format_poly(got[0])}", err=True)
            sys.exit(EXIT_VIOLATION)


@cli.command("realize")
@click.argument("polynomial")
@click.option("--plan-only", is_flag=True, help="Print the block plan only.")
def cmd_realize(polynomial: str, plan_only: bool) -> None:
    """Build a virtual knot with the given odd writhe polynomial.

    POLYNOMIAL uses the canonical text form, e.g. "t^4-2t^2+1".
    """
    try:
        target = parse_poly(polynomial)
    except PolySyntaxError as exc:
        click.echo(f"error: PolySyntaxError: {exc}", err=True)
        sys.exit(EXIT_INPUT_ERROR)
    try:
        if plan_only:
            p = plan(target)
            click.echo(json.dumps({
                "l_blocks": [{"k": b.k, "count": b.count, "variant": b.variant}
                             for b in p.l_blocks],
                "m_count": p.m_count,
                "n_count": p.n_count,
                "residual_t2": p.residual_t2,
                "residual_t0": p.residual_t0,
            }, indent=2))
            return
        d = realize(target)
    except RealizationError as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        sys.exit(EXIT_INPUT_ERROR)
    click.echo(d.canonical_code)
    click.echo(json.dumps(report(d).to_dict(), indent=2))


@cli.command("census")
@click.argument("n", type=int)
@click.option("--out", "-o", "out_path", type=click.Path(), default=None,
              help="Output file (default stdout).")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]),
              default="json", show_default=True)
def cmd_census(n: int, out_path: str | None, fmt: str) -> None:
    """Write one record per n-chord diagram, in canonical-code order."""
    cap = _max_n()
    if n < 0 or n > cap:
        click.echo(f"error: n must be in 0..{cap} (set OWPOLY_MAX_N to raise "
                   f"the cap)", err=True)
        sys.exit(EXIT_INPUT_ERROR)
    records = list(census_mod.census(n))
    writer = census_mod.write_json if fmt == "json" else census_mod.write_csv
    if out_path is None:
        writer(records, sys.stdout)
    else:
        with open(out_path, "w") as fp:
            writer(records, fp)
        click.echo(f"wrote {len(records)} records to {out_path}", err=True)


@cli.command("verify")
@click.argument("suite", type=click.Choice(sorted(SUITES)))
@click.option("--iterations", type=int, default=None,
              help="Randomized check count (suite-specific default).")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--exhaustive", type=int, default=None,
              help="Exhaustive chord-count bound where applicable.")
def cmd_verify(suite: str, iterations: int | None, seed: int,
               exhaustive: int | None) -> None:
    """Run a named property suite; exit 2 on any violation."""
    if exhaustive is not None and exhaustive > _max_n():
        click.echo(f"error: --exhaustive capped at {_max_n()} "
                   f"(set OWPOLY_MAX_N to raise)", err=True)
        sys.exit(EXIT_INPUT_ERROR)
    result = run_suite(suite, iterations=iterations, seed=seed,
                       exhaustive=exhaustive)
    click.echo(result.summary())
    for line in result.violations:
        click.echo(f"  {line}", err=True)
    if not result.passed:
        sys.exit(EXIT_VIOLATION)


def main() -> None:
    cli()


if __name__ == "__main__":
    main()

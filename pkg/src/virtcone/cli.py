"""Command-line entry point.

Runs .vc scripts in-process by default; with --server it posts the script to
a running service instead and prints the response.  Exit codes: 0 success,
1 engine error, 2 parse error.
"""

from __future__ import annotations

import dataclasses
import sys

import click

from .context import Budget, Context
from .errors import ParseError, VirtconeError
from .lang import parse
from .runner import format_human, format_machine, run


@click.command()
@click.argument("script", type=click.Path(exists=True, dir_okay=False),
                required=False)
@click.option("--seed", type=int, default=0, show_default=True,
              help="Master seed for all generic draws.")
@click.option("--redraws", type=int, default=2, show_default=True,
              help="Independent generic redraws that must agree.")
@click.option("--order", type=click.Choice(["grevlex", "lex"]),
              default="grevlex", show_default=True,
              help="Monomial order for reported ideal generators.")
@click.option("--format", "fmt", type=click.Choice(["human", "machine"]),
              default="human", show_default=True)
@click.option("--budget", type=int, default=None,
              help="Maximum polynomial degree before aborting.")
@click.option("--no-saturate", is_flag=True,
              help="Diagnostic: skip saturation when taking flat limits.")
@click.option("--attest-containment", is_flag=True,
              help="Accept twist bundles not matching the generator degrees.")
@click.option("--server", type=str, default=None,
              help="Run the script on a service at this base URL.")
def main(script, seed, redraws, order, fmt, budget, no_saturate,
         attest_containment, server):
    """Compute Segre and virtual classes for a .vc script (default: stdin)."""
    if script is None:
        source = sys.stdin.read()
    else:
        with open(script, encoding="utf-8") as fh:
            source = fh.read()

    if server is not None:
        _run_remote(server, source, seed, redraws, fmt, no_saturate,
                    attest_containment)
        return

    b = Budget()
    if budget is not None:
        b = dataclasses.replace(b, max_degree=budget)
    ctx = Context(seed=seed, redraws=redraws, budget=b)
    try:
        ast = parse(source)
    except ParseError as e:
        click.echo(f"parse error: {e}", err=True)
        sys.exit(2)
    try:
        records = run(ast, ctx, saturate_limits=not no_saturate,
                      attest_containment=attest_containment)
    except VirtconeError as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(1)
    text = (format_machine if fmt == "machine" else format_human)(records, ctx)
    click.echo(text, nl=False)


def _run_remote(server, source, seed, redraws, fmt, no_saturate,
                attest_containment):
    import httpx

    payload = {
        "source": source,
        "seed": seed,
        "redraws": redraws,
        "format": fmt,
        "saturate_limits": not no_saturate,
        "attest_containment": attest_containment,
    }
    resp = httpx.post(server.rstrip("/") + "/run", json=payload, timeout=600.0)
    body = resp.json()
    if resp.status_code != 200:
        click.echo(f"error: {body.get('detail', resp.text)}", err=True)
        sys.exit(2 if resp.status_code == 422 else 1)
    if body.get("error"):
        click.echo(f"error: {body['error']}", err=True)
        sys.exit(body.get("exit_code", 1))
    click.echo(body["output"], nl=False)


if __name__ == "__main__":
    main()

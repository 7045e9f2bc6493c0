"""
Quandle Commands

List, show, validate and compare finite quandles.
"""

from pathlib import Path
from typing import Optional

import typer
from rich.panel import Panel
from rich.table import Table

from quandle_lab.cli.common import (
    EXIT_VALIDATION,
    console,
    emit_json,
    fail,
    format_option,
    handle_errors,
    load_quandle,
    output_format,
)
from quandle_lab.models.documents import QuandleDocument
from quandle_lab.quandle.catalog import builtin_quandles
from quandle_lab.quandle.core import Quandle
from quandle_lab.quandle.homs import is_isomorphic
from quandle_lab.utils.logger import get_logger

app = typer.Typer(help="Quandle catalog and validation commands")
logger = get_logger(__name__)


def _summary(name: str, quandle: Quandle) -> dict:
    return {
        "name": name,
        "n": quandle.n,
        "involutory": quandle.is_involutory(),
        "trivial": all(quandle.op[a][b] == a for a in quandle.elements for b in quandle.elements),
    }


@app.command("list")
def list_quandles(ctx: typer.Context, format: Optional[str] = format_option) -> None:
    """List built-in quandles"""
    with handle_errors():
        rows = [_summary(name, q) for name, q in builtin_quandles().items()]

    if output_format(ctx, format) == "json":
        emit_json(rows)
        return

    table = Table(title="Built-in Quandles", show_header=True, header_style="bold magenta")
    table.add_column("Name", style="cyan")
    table.add_column("Order", justify="right", style="green")
    table.add_column("Involutory", justify="center")
    table.add_column("Trivial", justify="center")
    for row in rows:
        table.add_row(
            row["name"],
            str(row["n"]),
            "[green]yes[/green]" if row["involutory"] else "no",
            "[green]yes[/green]" if row["trivial"] else "no",
        )
    console.print(table)
    console.print("[dim]Also accepted: T<n>, R<n>, Alex(n;h), Conj(S<k>,j), Conj(Z<n>,j)[/dim]")


@app.command("show")
def show_quandle(
    ctx: typer.Context,
    name: str = typer.Argument(..., help="Catalog name or quandle JSON file"),
    format: Optional[str] = format_option,
) -> None:
    """Show the operation table of a quandle"""
    with handle_errors():
        quandle = load_quandle(name)

    if output_format(ctx, format) == "json":
        emit_json(QuandleDocument.from_quandle(quandle).model_dump(exclude_defaults=True))
        return

    table = Table(title=f"{quandle.name or name} (a∗b)", show_header=True)
    table.add_column("∗", style="bold cyan", justify="right")
    for b in quandle.elements:
        table.add_column(quandle.label(b), justify="right")
    for a in quandle.elements:
        cells = [quandle.label(quandle.op[a][b]) for b in quandle.elements]
        table.add_row(quandle.label(a), *cells)
    console.print(table)


@app.command("check")
def check_quandle(
    file: Path = typer.Argument(..., help="Quandle JSON document {\"n\", \"op\"}"),
    allow_rack: bool = typer.Option(False, "--allow-rack", help="Accept racks (axioms II, III)"),
) -> None:
    """Validate an operation table against the quandle axioms"""
    with handle_errors():
        quandle = load_quandle(str(file), allow_rack=allow_rack)

    kind = "rack" if quandle.is_rack else "quandle"
    console.print(
        Panel(
            f"[green]✓ Valid {kind}[/green]\n\n"
            f"Order: {quandle.n}\n"
            f"Involutory: {'yes' if quandle.is_involutory() else 'no'}",
            title=str(file),
            border_style="green",
        )
    )


@app.command("iso")
def isomorphism(
    first: str = typer.Argument(..., help="Catalog name or quandle JSON file"),
    second: str = typer.Argument(..., help="Catalog name or quandle JSON file"),
) -> None:
    """Decide whether two quandles are isomorphic"""
    with handle_errors():
        source, target = load_quandle(first), load_quandle(second)
        hom = is_isomorphic(source, target)

    if hom is None:
        fail(f"{first} and {second} are not isomorphic", EXIT_VALIDATION)
        return
    images = ", ".join(f"{source.label(a)}→{target.label(hom(a))}" for a in source.elements)
    console.print(f"[green]✓ Isomorphic[/green]: {images}")

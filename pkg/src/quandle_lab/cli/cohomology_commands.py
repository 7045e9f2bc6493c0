"""
Cohomology Commands

Compute (co)homology groups of finite quandles and test cochains.
"""

from typing import Optional

import typer
from rich.panel import Panel
from rich.table import Table

from quandle_lab.algebra.group_ring import AbelianCyclicCoefficients
from quandle_lab.cli.common import (
    EXIT_VALIDATION,
    console,
    emit_json,
    fail,
    format_option,
    get_lab_config,
    handle_errors,
    load_cocycle,
    load_quandle,
    output_format,
    parse_coefficients,
)
from quandle_lab.cohomology.cochains import is_cocycle
from quandle_lab.cohomology.groups import cohomology, homology, rational_dimension
from quandle_lab.cohomology.witness import coboundary_witness
from quandle_lab.models.documents import CohomologyReport

app = typer.Typer(help="Quandle cohomology commands")

quandle_option = typer.Option(..., "--quandle", "-q", help="Catalog name or quandle JSON file")
degree_option = typer.Option(..., "--degree", "-k", min=1, help="Cohomology degree")
theory_option = typer.Option("Q", "--theory", "-t", help="R (rack), D (degenerate) or Q (quandle)")


def _print_report(report: CohomologyReport, title: str) -> None:
    lines = [f"[bold]{report.group}[/bold]"]
    if report.summands:
        lines.append(f"Summands: {report.summands}")
    console.print(Panel("\n".join(lines), title=title, border_style="blue"))
    if report.representatives:
        table = Table(title="Representatives", show_header=True, header_style="bold magenta")
        table.add_column("Summand", justify="right", style="cyan")
        table.add_column("Cocycle")
        for order, cochain in zip(report.summands, report.representatives):
            values = cochain.get("values") or {}
            terms = " ".join(f"{v:+d}χ{k}" for k, v in values.items())  # type: ignore[union-attr]
            table.add_row("Z" if order == 0 else f"Z{order}", terms)
        console.print(table)


@app.command("group")
def cohomology_group(
    ctx: typer.Context,
    quandle: str = quandle_option,
    degree: int = degree_option,
    theory: str = theory_option,
    coeff: Optional[str] = typer.Option(None, "--coeff", "-A", help="Z, Zm, or Q for rational"),
    variant: str = typer.Option("standard", "--variant", help="standard or restricted"),
    representatives: bool = typer.Option(
        False, "--representatives", "-r", help="Include generating cocycles"
    ),
    format: Optional[str] = format_option,
) -> None:
    """Compute H^k(X; A) as a sum of cyclic groups"""
    label = coeff or get_lab_config(ctx).default_coefficients
    with handle_errors():
        source = load_quandle(quandle)
        if label.upper() == "Q":
            dimension = rational_dimension(source, degree, theory)
            report = CohomologyReport(
                quandle=source.name or quandle,
                degree=degree,
                theory=theory.upper(),
                coeff="Q",
                group="0" if dimension == 0 else " ⊕ ".join(["Q"] * dimension),
                summands=[0] * dimension,
            )
        else:
            group = cohomology(
                source, degree, theory, AbelianCyclicCoefficients.parse(label), variant
            )
            report = CohomologyReport.from_cohomology(group, representatives)

    if output_format(ctx, format) == "json":
        emit_json(report.model_dump(exclude_none=True))
        return
    _print_report(report, f"H^{degree}_{report.theory}({report.quandle}; {report.coeff})")


@app.command("homology")
def homology_group(
    ctx: typer.Context,
    quandle: str = quandle_option,
    degree: int = degree_option,
    theory: str = theory_option,
    format: Optional[str] = format_option,
) -> None:
    """Compute integral homology H_k(X; Z)"""
    with handle_errors():
        group = homology(load_quandle(quandle), degree, theory)
        report = CohomologyReport.from_homology(group)

    if output_format(ctx, format) == "json":
        emit_json(report.model_dump(exclude_none=True))
        return
    _print_report(report, f"H_{degree}^{report.theory}({report.quandle}; Z)")


@app.command("check")
def check_cocycle(
    quandle: str = quandle_option,
    cocycle: str = typer.Option(..., "--cocycle", "-c", help="Built-in, chi(...) or JSON file"),
    coeff: Optional[str] = typer.Option(None, "--coeff", "-A", help="Coefficient group"),
) -> None:
    """Test the cocycle condition and look for a coboundary witness"""
    with handle_errors():
        source = load_quandle(quandle)
        cochain = load_cocycle(cocycle, source, parse_coefficients(coeff))
        closed = is_cocycle(cochain, source)
        witness = coboundary_witness(cochain, source) if closed else None

    if not closed:
        message = f"{cocycle} is not a {cochain.degree}-cocycle over {cochain.coefficients}"
        fail(message, EXIT_VALIDATION)
        return
    if witness is None:
        console.print(
            f"[green]✓ Cocycle[/green] with a nonzero class over {cochain.coefficients}"
        )
    else:
        console.print(f"[yellow]Coboundary[/yellow]: δ({witness}) = {cochain}")

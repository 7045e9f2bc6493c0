"""
Invariant Commands

Cocycle state sums of braid closures and of surface braids, and the
triple-point linking closed form.
"""

import time
from pathlib import Path
from typing import Dict, Optional

import typer
from rich.panel import Panel

from quandle_lab.algebra.group_ring import GroupRingElement
from quandle_lab.cli.common import (
    EXIT_USAGE,
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
from quandle_lab.knots.braids import resolve_braid
from quandle_lab.knots.coloring import state_sum
from quandle_lab.models.documents import InvariantReport, PresentationDocument
from quandle_lab.surfaces.presentation import SurfaceBraidPresentation, surface_state_sum
from quandle_lab.surfaces.presets import resolve_preset
from quandle_lab.surfaces.triple_linking import (
    TripleLinkingData,
    solve_ab,
    three_component_oracle,
    validate_triple_linking,
)
from quandle_lab.utils.io import read_document, write_json
from quandle_lab.utils.logger import get_logger

app = typer.Typer(help="State-sum invariant commands")
logger = get_logger(__name__)

quandle_option = typer.Option(..., "--quandle", "-q", help="Catalog name or quandle JSON file")
cocycle_option = typer.Option(..., "--cocycle", "-c", help="Built-in, chi(...) or JSON file")
coeff_option = typer.Option(None, "--coeff", "-A", help="Override the cocycle's coefficients")
threads_option = typer.Option(None, "--threads", "-j", min=1, help="Worker threads")
timing_option = typer.Option(False, "--timing", help="Record elapsed seconds in the report")
output_option = typer.Option(None, "--output", "-o", help="Write the JSON report to a file")


def _finish(
    ctx: typer.Context,
    report: InvariantReport,
    output: Optional[Path],
    format: Optional[str],
) -> None:
    data = report.model_dump(exclude_none=True)
    if output is not None:
        write_json(data, output)
    if output_format(ctx, format) == "json":
        emit_json(data)
        return
    lines = [
        f"[bold]{report.display}[/bold]",
        "",
        f"Quandle: {report.quandle}",
        f"Cocycle: {report.cocycle} over {report.coeff}",
        f"Colorings: {report.colorings}",
    ]
    if report.elapsed_seconds is not None:
        lines.append(f"Elapsed: {report.elapsed_seconds:.3f}s")
    if output is not None:
        lines.append(f"[dim]Report written to {output}[/dim]")
    console.print(Panel("\n".join(lines), title=report.input, border_style="blue"))


@app.command("knot")
def knot_invariant(
    ctx: typer.Context,
    braid: str = typer.Option(..., "--braid", "-b", help='Letters like "1 1 1" or a name (3_1)'),
    strands: Optional[int] = typer.Option(None, "--strands", "-s", min=1, help="Strand count"),
    quandle: str = quandle_option,
    cocycle: str = cocycle_option,
    coeff: Optional[str] = coeff_option,
    threads: Optional[int] = threads_option,
    timing: bool = timing_option,
    output: Optional[Path] = output_option,
    format: Optional[str] = format_option,
) -> None:
    """2-cocycle state sum of a braid closure"""
    workers = threads or get_lab_config(ctx).threads
    with handle_errors():
        word = resolve_braid(braid, strands)
        source = load_quandle(quandle)
        weight = load_cocycle(cocycle, source, parse_coefficients(coeff))
        start = time.perf_counter()
        value = state_sum(word, source, weight, workers)
        elapsed = time.perf_counter() - start
        report = InvariantReport.build(
            f"braid {word}", source, cocycle, value, elapsed if timing else None
        )
    _finish(ctx, report, output, format)


def _load_presentation(
    preset: Optional[str], presentation: Optional[Path]
) -> SurfaceBraidPresentation:
    if (preset is None) == (presentation is None):
        fail("Give exactly one of --preset or --presentation", EXIT_USAGE)
    if preset is not None:
        return resolve_preset(preset)
    assert presentation is not None
    document = PresentationDocument.model_validate(read_document(presentation, "presentation"))
    return document.to_presentation(name=presentation.stem)


@app.command("surface")
def surface_invariant(
    ctx: typer.Context,
    preset: Optional[str] = typer.Option(None, "--preset", "-p", help="Built-in surface braid"),
    presentation: Optional[Path] = typer.Option(
        None, "--presentation", "-P", help="Surface-braid JSON document"
    ),
    quandle: str = quandle_option,
    cocycle: str = cocycle_option,
    coeff: Optional[str] = coeff_option,
    threads: Optional[int] = threads_option,
    timing: bool = timing_option,
    output: Optional[Path] = output_option,
    format: Optional[str] = format_option,
) -> None:
    """3-cocycle state sum of a surface braid"""
    workers = threads or get_lab_config(ctx).threads
    with handle_errors():
        surface = _load_presentation(preset, presentation)
        source = load_quandle(quandle)
        weight = load_cocycle(cocycle, source, parse_coefficients(coeff))
        start = time.perf_counter()
        value = surface_state_sum(surface, source, weight, workers)
        elapsed = time.perf_counter() - start
        report = InvariantReport.build(
            surface.name or "surface", source, cocycle, value, elapsed if timing else None
        )
    _finish(ctx, report, output, format)


@app.command("triple-linking")
def triple_linking(
    ctx: typer.Context,
    file: Path = typer.Argument(..., help='Triple linking JSON {"n": 3, "values": {"1,2,3": 1}}'),
    format: Optional[str] = format_option,
) -> None:
    """Validate triple-point linking numbers and evaluate the T3 closed form"""
    with handle_errors():
        data = TripleLinkingData.from_json(read_document(file, "triple_linking"))
    if not validate_triple_linking(data):
        fail("T(i,j,i) = 0 or T(i,j,k) - T(i,k,j) + T(k,i,j) = 0 is violated", EXIT_VALIDATION)
    solved = solve_ab(data)
    value: Optional[GroupRingElement] = three_component_oracle(*solved) if solved else None

    if output_format(ctx, format) == "json":
        result: Dict[str, object] = {"valid": True, "ab": list(solved) if solved else None}
        if value is not None:
            result["invariant"] = value.to_json()
        emit_json(result)
        return
    console.print("[green]✓ Consistent triple linking numbers[/green]")
    if solved and value is not None:
        console.print(f"(a, b) = {solved}; Φ over T3 = [bold]{value}[/bold]")

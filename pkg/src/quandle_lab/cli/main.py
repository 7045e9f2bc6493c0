"""
Quandle Lab - Main CLI Entry Point

Command-line interface for quandle cohomology and cocycle invariants.
"""

from pathlib import Path
from typing import Optional

import click
import typer
from rich.panel import Panel
from rich.table import Table

from quandle_lab import __version__
from quandle_lab.cli import (
    cohomology_commands,
    config_commands,
    invariant_commands,
    quandle_commands,
)
from quandle_lab.cli.common import (
    EXIT_MISMATCH,
    EXIT_USAGE,
    console,
    fail,
    get_lab_config,
)
from quandle_lab.models.config import LabConfig
from quandle_lab.reproduction import RowStatus, render_report, run_acceptance
from quandle_lab.utils.config_loader import get_config_loader
from quandle_lab.utils.logger import get_logger, setup_logging

# Create main Typer app
app = typer.Typer(
    name="quandle-lab",
    help="Quandle Lab - quandle cohomology and cocycle state-sum invariants",
    no_args_is_help=True,
    add_completion=False,
)

logger = get_logger(__name__)

REPORT_NAME = "reproduce.md"

# Global options
verbose_option = typer.Option(False, "--verbose", "-v", help="Enable debug logging")
log_file_option = typer.Option(None, "--log-file", help="Also write the log to this file")
config_path_option = typer.Option(
    None,
    "--config",
    "-c",
    help="Path to configuration file",
    envvar="QUANDLE_LAB_CONFIG",
)


@app.callback()
def main_callback(
    ctx: typer.Context,
    verbose: bool = verbose_option,
    log_file: Optional[Path] = log_file_option,
    config: Optional[Path] = config_path_option,
) -> None:
    """
    Quandle Lab

    Compute rack, degenerate and quandle (co)homology of finite quandles and
    evaluate cocycle invariants of braid closures and surface braids.
    """
    try:
        lab_config = get_config_loader(config).load()
    except ValueError as e:
        setup_logging(level="WARNING")
        fail(str(e), EXIT_USAGE)
        return

    # Setup logging
    log_level = "DEBUG" if verbose else lab_config.log_level
    setup_logging(level=log_level, log_file=log_file or lab_config.log_file)

    # Store config in context for subcommands
    ctx.obj = {"config_path": config, "config": lab_config, "verbose": verbose}


@app.command()
def version() -> None:
    """Show version information"""
    console.print(
        Panel(
            f"[bold]Quandle Lab[/bold]\n"
            f"Version: {__version__}\n"
            f"Python Package: quandle-lab",
            title="Version Info",
            border_style="blue",
        )
    )


@app.command()
def reproduce(
    ctx: typer.Context,
    report: Optional[Path] = typer.Option(None, "--report", help="Write a markdown report"),
    save: bool = typer.Option(
        False, "--save", help="Write the report to reports_dir from the configuration"
    ),
    threads: Optional[int] = typer.Option(None, "--threads", "-j", min=1, help="Worker threads"),
) -> None:
    """Recompute every published value and print PASS/FAIL per row"""
    config: LabConfig = get_lab_config(ctx)
    with console.status("Running acceptance rows..."):
        results = run_acceptance(threads or config.threads)
    if report is None and save:
        report = config.reports_dir / REPORT_NAME

    table = Table(title="Acceptance", show_header=True, header_style="bold magenta")
    table.add_column("Status", justify="center", width=6)
    table.add_column("Area", style="cyan")
    table.add_column("Check")
    table.add_column("Expected", style="green")
    table.add_column("Actual")
    for row in results:
        status = "[green]PASS[/green]" if row.status is RowStatus.PASS else "[red]FAIL[/red]"
        actual = row.actual if row.passed else f"[red]{row.actual}[/red]"
        table.add_row(status, row.category, row.check_name, row.expected, actual)
    console.print(table)

    if report is not None:
        render_report(results, report)
        console.print(f"[dim]Report written to {report}[/dim]")

    failed = [row for row in results if not row.passed]
    if failed:
        console.print(f"[red]✗ {len(failed)} of {len(results)} rows failed[/red]")
        raise typer.Exit(code=EXIT_MISMATCH)
    console.print(f"[green]✓ All {len(results)} rows passed[/green]")


# Register command groups
app.add_typer(quandle_commands.app, name="quandle", help="Quandle catalog and validation")
app.add_typer(cohomology_commands.app, name="cohomology", help="(Co)homology groups and cocycles")
app.add_typer(invariant_commands.app, name="invariant", help="State-sum invariants")
app.add_typer(config_commands.app, name="config", help="Configuration management")


# Entry point for console script
def cli_main() -> None:
    """Main CLI entry point; click usage errors exit with 1"""
    try:
        code = app(standalone_mode=False)
    except click.exceptions.Abort:
        console.print("\n[yellow]Operation cancelled by user[/yellow]")
        raise SystemExit(EXIT_USAGE)
    except click.ClickException as e:
        e.show()
        raise SystemExit(EXIT_USAGE)
    except typer.Exit as e:
        raise SystemExit(e.exit_code)
    raise SystemExit(code if isinstance(code, int) else 0)


if __name__ == "__main__":
    cli_main()

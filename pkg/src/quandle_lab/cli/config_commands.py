"""
Configuration Management Commands

Commands for managing quandle-lab configuration.
"""

from pathlib import Path
from typing import Optional

import typer
import yaml
from rich import print_json
from rich.panel import Panel

from quandle_lab.cli.common import EXIT_USAGE, console, fail, handle_errors
from quandle_lab.utils.config_loader import get_config_loader
from quandle_lab.utils.logger import get_logger

app = typer.Typer(help="Configuration management commands")
logger = get_logger(__name__)


def _config_path(ctx: typer.Context) -> Optional[Path]:
    return (ctx.obj or {}).get("config_path")


@app.command("init")
def init_config(
    ctx: typer.Context,
    force: bool = typer.Option(False, "--force", help="Overwrite existing configuration"),
) -> None:
    """Initialize configuration file with defaults"""
    loader = get_config_loader(_config_path(ctx))

    if loader.config_path.exists() and not force:
        console.print(f"[yellow]Configuration already exists at {loader.config_path}[/yellow]")
        console.print("Use --force to overwrite")
        raise typer.Exit(code=EXIT_USAGE)

    with handle_errors():
        path = loader.create_default(force=force)
    console.print(
        Panel(
            f"[green]✓ Configuration initialized successfully[/green]\n\n"
            f"Location: {path}\n\n"
            f"Environment overrides:\n"
            f"  QUANDLE_LAB_THREADS, QUANDLE_LAB_LOG_LEVEL, QUANDLE_LAB_CONFIG",
            title="Configuration Initialized",
            border_style="green",
        )
    )


@app.command("show")
def show_config(
    ctx: typer.Context,
    format: str = typer.Option("yaml", "--format", "-f", help="Output format (yaml, json)"),
) -> None:
    """Show the effective configuration"""
    with handle_errors():
        config = get_config_loader(_config_path(ctx)).load()
    config_dict = config.model_dump(mode="json", exclude_none=True)

    if format == "json":
        print_json(data=config_dict)
    elif format == "yaml":
        console.print(yaml.safe_dump(config_dict, default_flow_style=False, sort_keys=False))
    else:
        fail(f"Unknown format '{format}' (expected yaml or json)", EXIT_USAGE)


@app.command("path")
def config_path(ctx: typer.Context) -> None:
    """Print the configuration file location"""
    loader = get_config_loader(_config_path(ctx))
    state = "exists" if loader.config_path.exists() else "not created; defaults apply"
    console.print(f"{loader.config_path} [dim]({state})[/dim]")

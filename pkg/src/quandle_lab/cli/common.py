"""
Shared CLI Helpers

Context access, input resolution and error reporting used by every
command group.
"""

from contextlib import contextmanager
from pathlib import Path
from typing import Any, Iterator, Optional

import typer
from rich.console import Console

from quandle_lab.algebra.group_ring import AbelianCyclicCoefficients
from quandle_lab.cohomology.builtins import resolve_cocycle
from quandle_lab.cohomology.cochains import Cochain, check_elements
from quandle_lab.exceptions import CocycleError, QuandleAxiomError
from quandle_lab.models.config import LabConfig
from quandle_lab.models.documents import CochainDocument, QuandleDocument
from quandle_lab.quandle.catalog import resolve_quandle
from quandle_lab.quandle.core import Quandle
from quandle_lab.utils.io import dump_json, read_document
from quandle_lab.utils.logger import get_logger

console = Console()
logger = get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_MISMATCH = 3

format_option = typer.Option(None, "--format", "-f", help="Output format (text, json)")


def get_lab_config(ctx: typer.Context) -> LabConfig:
    """Configuration stored by the main callback, or defaults"""
    obj = ctx.obj or {}
    config = obj.get("config")
    return config if isinstance(config, LabConfig) else LabConfig()


def output_format(ctx: typer.Context, requested: Optional[str]) -> str:
    chosen = (requested or get_lab_config(ctx).output_format).lower()
    if chosen not in ("text", "json"):
        fail(f"Unknown output format '{chosen}' (expected text or json)", EXIT_USAGE)
    return chosen


def fail(message: str, code: int) -> None:
    """Print an error and exit with the given code"""
    console.print(f"[red]Error: {message}[/red]")
    raise typer.Exit(code=code)


@contextmanager
def handle_errors() -> Iterator[None]:
    """
    Map domain errors onto exit codes

    Axiom and cocycle failures exit with 2; any other ValueError (unknown
    names, malformed input, schema violations) exits with 1.
    """
    try:
        yield
    except (QuandleAxiomError, CocycleError) as e:
        logger.debug("Validation failure", exc_info=True)
        fail(str(e), EXIT_VALIDATION)
    except (ValueError, FileExistsError) as e:
        logger.debug("Usage error", exc_info=True)
        fail(str(e), EXIT_USAGE)


def parse_coefficients(label: Optional[str]) -> Optional[AbelianCyclicCoefficients]:
    return AbelianCyclicCoefficients.parse(label) if label else None


def load_quandle(name_or_path: str, allow_rack: bool = False) -> Quandle:
    """A catalog name, or a path to a quandle JSON document"""
    path = Path(name_or_path)
    if path.suffix == ".json" or path.is_file():
        document = QuandleDocument.model_validate(read_document(path, "quandle"))
        if not document.name:
            document.name = path.stem
        return document.to_quandle(allow_rack=allow_rack)
    return resolve_quandle(name_or_path)


def load_cocycle(
    name_or_path: str, quandle: Quandle, coefficients: Optional[AbelianCyclicCoefficients]
) -> Cochain:
    """
    A cochain JSON file, a built-in name or a chi(...) expression

    A coefficient override re-reads the values in the requested group.
    """
    path = Path(name_or_path)
    if path.suffix == ".json" or path.is_file():
        cochain = CochainDocument.model_validate(read_document(path, "cochain")).to_cochain()
        if coefficients is not None and coefficients != cochain.coefficients:
            cochain = cochain.with_coefficients(coefficients)
        check_elements(cochain, quandle)
        return cochain
    return resolve_cocycle(name_or_path, quandle, coefficients)


def emit_json(data: Any) -> None:
    """Plain stdout JSON, no rich markup or wrapping"""
    typer.echo(dump_json(data))

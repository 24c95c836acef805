"""clutterbetti: click interface to the clutter SDK."""

import functools
import json as _json
import logging
import sys
from pathlib import Path

import click

from clutter_sdk import (
    EXIT_USAGE,
    ClutterError,
    EngineConfig,
    FieldSpec,
    SearchResult,
)

from .fixtures import FIXTURE_PREFIX, FixtureCatalog
from .formats import Subject, parse_subject


class ReportedError(click.ClickException):
    """A ClutterError surfaced through click with its exit-status category."""

    def __init__(self, error: ClutterError):
        super().__init__(str(error))
        self.exit_code = error.code


def reported(f):
    """Re-raise ClutterError from a command as ReportedError."""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except ClutterError as e:
            raise ReportedError(e) from e

    return wrapper


class Session:
    """Per-invocation state: engine limits, output mode and the lazy fixture catalog."""

    def __init__(self, config: EngineConfig = EngineConfig(), use_json: bool = False):
        self.config = config
        self.use_json = use_json
        self._catalog = None

    @property
    def catalog(self) -> FixtureCatalog:
        if self._catalog is None:
            self._catalog = FixtureCatalog.load()
        return self._catalog

    def read(self, source: str, complex_hint: bool = False) -> Subject:
        """Load ``fixtures:NAME``, ``-`` (stdin) or a file path."""
        if source.startswith(FIXTURE_PREFIX):
            return self.catalog.get(source).subject
        if source == "-":
            text = click.get_text_stream("stdin").read()
        else:
            path = Path(source)
            if not path.is_file():
                raise click.BadParameter(f"no such file or fixture: {source}")
            text = path.read_text(encoding="utf-8")
        return parse_subject(text, complex_hint)

    def read_complex(self, source: str) -> Subject:
        return self.read(source, complex_hint=True)


def output(data, label=None):
    """Print result in human-readable or JSON format."""
    use_json = click.get_current_context().find_object(Session).use_json
    if use_json:
        click.echo(_json.dumps(data, indent=2, default=str))
    elif isinstance(data, dict):
        for k, v in data.items():
            click.echo(f"{k}: {v}")
    elif label:
        click.echo(f"{label}: {data}")
    else:
        click.echo(data)


def finish(result: SearchResult, report: dict):
    """Print a search report and exit with the outcome's status."""
    report = {"outcome": result.outcome.value, **report}
    if not result.found:
        report["reason"] = result.reason
    report["states"] = result.states
    output(report)
    if result.outcome.exit_code:
        click.get_current_context().exit(result.outcome.exit_code)


class FieldType(click.ParamType):
    """Coefficients: q, gf:p or z."""

    name = "field"

    def convert(self, value, param, ctx):
        if isinstance(value, FieldSpec):
            return value
        try:
            return FieldSpec.parse(value)
        except ClutterError as e:
            self.fail(e.message, param, ctx)


FIELD = FieldType()

pass_session = click.make_pass_decorator(Session)


@click.group()
@click.option("--json", "use_json", is_flag=True, help="Output as JSON")
@click.option("--debug", is_flag=True, help="Log engine traces to stderr")
@click.option("--max-n", type=click.IntRange(min=1), default=16, show_default=True,
              help="Largest ground set for full Betti tables")
@click.option("--budget", type=click.IntRange(min=1), default=10**6, show_default=True,
              help="State budget for searches and collapses")
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True,
              help="Processes for Betti-table assembly")
@click.version_option(package_name="clutter-cli")
@click.pass_context
def cli(ctx, use_json, debug, max_n, budget, workers):
    """Betti numbers and simplicial removals of uniform clutters.

    INPUT arguments are a file path, '-' for stdin, or fixtures:NAME.
    Exit status: 0 found/verified, 1 refuted/failed, 2 usage or parse
    error, 3 budget exhausted.
    """
    if debug:
        logging.basicConfig(
            level=logging.DEBUG,
            format="%(asctime)s.%(msecs)03d [%(name)s] %(levelname)s: %(message)s",
            datefmt="%H:%M:%S",
        )
    config = EngineConfig(
        max_n=max_n, search_budget=budget, collapse_budget=budget, workers=workers
    )
    ctx.obj = Session(config, use_json)


def main():
    """Entry point."""
    try:
        status = cli(standalone_mode=False)
    except click.exceptions.Abort:
        pass
    except ClutterError as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(e.code)
    except click.UsageError as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_USAGE)
    except click.ClickException as e:
        e.show()
        sys.exit(e.exit_code)
    # ctx.exit() returns its status when not standalone
    if isinstance(status, int):
        sys.exit(status)


# Import commands to register them on the cli group
from . import commands  # noqa: E402, F401

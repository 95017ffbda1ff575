from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, List, Optional

import click
import typer
from colorama import Fore, Style

from tastePath.core.config import settings
from tastePath.core.di import setup_injector
from tastePath.core.exceptions import TastePathError
from tastePath.core.run_config import RunConfig
from tastePath.logger import get_logger, set_level
from tastePath.models.manifest import StageManifest
from tastePath.services.interfaces import IPipelineService

logger = get_logger("tastePath.cli")

app = typer.Typer(
    name="tastePath",
    help="Pathlet learning on musical-genre listening trajectories.",
    add_completion=False,
    no_args_is_help=True,
)


def _fail(error: TastePathError) -> typer.Exit:
    typer.echo(f"{Fore.RED}error: {error}{Style.RESET_ALL}", err=True)
    return typer.Exit(code=error.exit_code)


@contextmanager
def _handled() -> Iterator[None]:
    """Turn library errors into one red line and their exit code"""
    try:
        yield
    except TastePathError as e:
        raise _fail(e) from e


def _service(ctx: typer.Context) -> IPipelineService:
    return ctx.obj.get(IPipelineService)


def _report(manifest: StageManifest) -> None:
    typer.echo(f"{manifest.stage}: {len(manifest.outputs)} artifacts")
    for name in manifest.outputs:
        typer.echo(f"  {name}")


@app.callback()
def main_callback(
    ctx: typer.Context,
    config: Path = typer.Option(
        Path(settings.DEFAULT_CONFIG_PATH), "--config", "-c", help="Run configuration (YAML)."
    ),
    threads: int = typer.Option(settings.THREADS, "--threads", min=1, help="Cap on worker threads."),
    output_dir: Optional[Path] = typer.Option(None, "--output-dir", help="Override the configured output directory."),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log at DEBUG level."),
):
    if verbose:
        set_level("DEBUG")
    with _handled():
        run_config = RunConfig.load(config)
        if output_dir is not None:
            run_config = run_config.with_output_dir(output_dir)
        ctx.obj = setup_injector(run_config, threads)
    logger.debug(f"config {config}, output under {run_config.output_dir}, {threads} threads")


@app.command()
def ingest(ctx: typer.Context):
    """Load events into the allocation tensor, co-listening table and candidate sets."""
    with _handled():
        _report(_service(ctx).ingest())


@app.command()
def trajectories(ctx: typer.Context):
    """Sample rank trajectories for dictionary learning and pair embeddings."""
    with _handled():
        _report(_service(ctx).trajectories())


@app.command()
def mine(ctx: typer.Context):
    """Mine the most frequent contiguous sub-paths as candidate pathlets."""
    with _handled():
        _report(_service(ctx).mine())


@app.command()
def learn(ctx: typer.Context):
    """Fit the sparse code and select the pathlet dictionary."""
    with _handled():
        _report(_service(ctx).learn())


@app.command()
def embed(
    ctx: typer.Context,
    per_pair: Optional[int] = typer.Option(
        None, "--per-pair", min=1, help="Trajectories averaged per pair (default: sampling.embed_per_pair)."
    ),
):
    """Embed every candidate pair over the learned dictionary."""
    with _handled():
        _report(_service(ctx).embed(per_pair))


@app.command()
def predict(ctx: typer.Context):
    """Train the classifiers and write the Popularity, NMF, Previous and Plug-Previous predictions."""
    with _handled():
        _report(_service(ctx).predict())


@app.command()
def evaluate(
    ctx: typer.Context,
    oracle: bool = typer.Option(False, "--oracle", help="Score the target window against itself."),
):
    """Score every model: ATV, plus-minus AUC and new-classes AUC."""
    with _handled():
        reports = _service(ctx).evaluate(oracle)
    typer.echo(f"{'model':<14} {'ATV':>8} {'+/- AUC':>8} {'new AUC':>8} {'users':>7}")
    for r in reports:
        cells = [r.plus_minus_auc, r.new_classes_auc]
        aucs = " ".join(f"{c:>8.4f}" if c is not None else f"{'-':>8}" for c in cells)
        mark = " *" if r.shifted else ""
        typer.echo(f"{r.model:<14} {r.atv:>8.4f} {aucs} {r.n_users_evaluated:>7}{mark}")
    if any(r.shifted for r in reports):
        typer.echo("* AUCs computed with the one-window shift")


@app.command()
def analyze(ctx: typer.Context):
    """Variation decomposition, pathlet profiles, correlations and genre graphs."""
    with _handled():
        _report(_service(ctx).analyze())


@app.command()
def sweep(ctx: typer.Context):
    """Cover ratio and code sparsity across the sparsity-weight grid."""
    with _handled():
        _report(_service(ctx).sweep())


@app.command()
def synth(ctx: typer.Context):
    """Generate a planted-pathlet corpus and report how many pathlets are recovered."""
    with _handled():
        report = _service(ctx).synth()
    typer.echo(f"recovery score {report.score:.4f} ({len(report.recovered)}/{report.n_planted})")


def main(argv: Optional[List[str]] = None) -> int:
    """Run the CLI and return its exit code; usage errors map to 1"""
    try:
        result = app(args=argv, prog_name="tastePath", standalone_mode=False)
    except click.exceptions.UsageError as e:
        e.show()
        return 1
    except click.exceptions.Abort:
        return 1
    except click.exceptions.Exit as e:
        return e.exit_code
    except TastePathError as e:
        _fail(e)
        return e.exit_code
    return result if isinstance(result, int) else 0

"""CLI application for chordcolor using Typer."""

import json
import logging
import sys
import time
from pathlib import Path
from typing import Annotated, Any, TypeVar

import typer

from chordcolor.bench import BenchRecord, run_bench, summarize
from chordcolor.bookembed import embed3
from chordcolor.config import ConfigError, OutputFormat, RunConfig, load_run_config
from chordcolor.formats import (
    InputParseError,
    parse_coloring,
    parse_instance,
    parse_ordered_graph,
    serialize_coloring,
    serialize_instance,
    serialize_ordered_graph,
)
from chordcolor.generators import ListDensity, gen_ordered_graph, gen_random
from chordcolor.instance import coloring_problems
from chordcolor.oracle import BudgetExceeded, oracle_solve
from chordcolor.render import render_svg
from chordcolor.result import SolveResult
from chordcolor.solver import solve as solve_instance

EXIT_YES = 0
EXIT_NO = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3


T = TypeVar("T")

app = typer.Typer(
    name="chordcolor",
    help="List 3-coloring of circle graphs and 3-page book embeddings.",
)

ConfigOption = Annotated[
    str | None,
    typer.Option("--config", "-c", help="Run configuration file (YAML/JSON)"),
]
ThresholdOption = Annotated[
    int | None,
    typer.Option("--base-threshold", help="Brute-force instances up to this size"),
]
FormatOption = Annotated[
    OutputFormat | None,
    typer.Option("--format", "-f", help="Output format: text, jsonl or svg"),
]
VerboseOption = Annotated[
    bool,
    typer.Option("--verbose", "-v", help="Log solver progress to stderr"),
]
OutputOption = Annotated[
    str | None,
    typer.Option("--output", "-o", help="Write to this file instead of stdout"),
]


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _load_config(config: str | None) -> RunConfig:
    return load_run_config(config) if config else RunConfig()


def _pick(flag: T | None, configured: T) -> T:
    """The command-line value when one was given, else the configured one."""
    return configured if flag is None else flag


def _fail(message: str, exc: Exception, code: int = EXIT_INPUT_ERROR) -> typer.Exit:
    typer.echo(f"✗ {message}: {exc}", err=True)
    return typer.Exit(code=code)


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
        typer.echo(f"✓ Wrote {output}", err=True)
    else:
        typer.echo(text, nl=not text.endswith("\n"))


def _echo_result(result: SolveResult, fmt: OutputFormat, wall_seconds: float) -> None:
    if fmt is OutputFormat.JSONL:
        record = result.to_dict()
        record["wall_seconds"] = wall_seconds
        typer.echo(json.dumps(record))
        return
    stats = result.stats
    if result.is_yes:
        typer.echo("✓ yes")
        assert result.coloring is not None
        typer.echo(serialize_coloring(result.coloring), nl=False)
    else:
        typer.echo("✗ no")
    typer.echo(
        f"nodes={stats.nodes} depth={stats.depth} "
        f"brute_force={stats.brute_force_calls} wall={wall_seconds:.3f}s",
        err=True,
    )


def _verdict_code(result: SolveResult) -> int:
    return EXIT_YES if result.is_yes else EXIT_NO


@app.command()
def solve(
    path: Annotated[str, typer.Argument(help="Chord instance file")],
    base_threshold: ThresholdOption = None,
    output_format: FormatOption = None,
    split_components: Annotated[
        bool | None,
        typer.Option(
            "--split-components/--no-split-components",
            help="Solve crossing-graph components independently",
        ),
    ] = None,
    config: ConfigOption = None,
    verbose: VerboseOption = False,
) -> None:
    """Decide a list 3-coloring instance and print a witness coloring."""
    _configure_logging(verbose)
    try:
        run = _load_config(config)
        instance = parse_instance(Path(path).read_bytes())
        started = time.perf_counter()
        result = solve_instance(
            instance,
            base_threshold=_pick(base_threshold, run.base_threshold),
            split_components=(
                run.split_components if split_components is None else split_components
            ),
        )
        elapsed = time.perf_counter() - started
    except (InputParseError, ConfigError) as e:
        raise _fail("Input error", e) from e
    except (FileNotFoundError, ValueError) as e:
        raise _fail("Error", e) from e

    fmt = _pick(output_format, run.output_format)
    if fmt is OutputFormat.SVG:
        typer.echo(render_svg(instance, result.coloring), nl=False)
    else:
        _echo_result(result, fmt, elapsed)
    raise typer.Exit(code=_verdict_code(result))


@app.command()
def oracle(
    path: Annotated[str, typer.Argument(help="Chord instance file")],
    budget: Annotated[
        int | None,
        typer.Option("--budget", help="Give up after this many search nodes"),
    ] = None,
    output_format: FormatOption = None,
    config: ConfigOption = None,
    verbose: VerboseOption = False,
) -> None:
    """Decide an instance with the independent backtracking oracle."""
    _configure_logging(verbose)
    try:
        run = _load_config(config)
        instance = parse_instance(Path(path).read_bytes())
        started = time.perf_counter()
        result = oracle_solve(instance, budget=_pick(budget, run.budget))
        elapsed = time.perf_counter() - started
    except BudgetExceeded as e:
        raise _fail("Budget exceeded", e, EXIT_BUDGET) from e
    except (InputParseError, ConfigError) as e:
        raise _fail("Input error", e) from e
    except (FileNotFoundError, ValueError) as e:
        raise _fail("Error", e) from e

    _echo_result(result, _pick(output_format, run.output_format), elapsed)
    raise typer.Exit(code=_verdict_code(result))


@app.command()
def embed(
    path: Annotated[str, typer.Argument(help="Ordered graph file")],
    base_threshold: ThresholdOption = None,
    output_format: FormatOption = None,
    config: ConfigOption = None,
    verbose: VerboseOption = False,
) -> None:
    """Find a 3-page book embedding respecting the given vertex order."""
    _configure_logging(verbose)
    try:
        run = _load_config(config)
        graph = parse_ordered_graph(Path(path).read_bytes())
        threshold = _pick(base_threshold, run.base_threshold)
        pages = embed3(graph, base_threshold=threshold)
    except (InputParseError, ConfigError) as e:
        raise _fail("Input error", e) from e
    except (FileNotFoundError, ValueError) as e:
        raise _fail("Error", e) from e

    if _pick(output_format, run.output_format) is OutputFormat.JSONL:
        typer.echo(
            json.dumps(
                {
                    "verdict": "no" if pages is None else "yes",
                    "pages": None if pages is None else list(pages.pages),
                }
            )
        )
    elif pages is None:
        typer.echo("✗ no 3-page embedding in this vertex order")
    else:
        typer.echo("✓ yes")
        for index, (u, v) in enumerate(graph.edges):
            typer.echo(f"edge {u} {v} -> page {pages.page_of(index)}")
    raise typer.Exit(code=EXIT_NO if pages is None else EXIT_YES)


@app.command()
def gen(
    n: Annotated[int, typer.Option("--n", help="Number of chords (or vertices)")],
    seed: Annotated[int, typer.Option("--seed", help="Random seed")] = 0,
    density: Annotated[
        ListDensity,
        typer.Option("--density", help="Color list policy: full, drop-one, mixed"),
    ] = ListDensity.FULL,
    drop_probability: Annotated[
        float,
        typer.Option("--drop-probability", help="Drop chance for drop-one lists"),
    ] = 0.5,
    edges: Annotated[
        int | None,
        typer.Option("--edges", help="Generate an ordered graph with this many edges"),
    ] = None,
    output: OutputOption = None,
) -> None:
    """Generate a seeded random instance (or ordered graph with --edges)."""
    try:
        if edges is None:
            text = serialize_instance(gen_random(n, seed, density, drop_probability))
        else:
            text = serialize_ordered_graph(gen_ordered_graph(n, edges, seed))
    except ValueError as e:
        raise _fail("Error", e) from e
    _emit(text, output)


@app.command()
def render(
    path: Annotated[str, typer.Argument(help="Chord instance file")],
    coloring: Annotated[
        str | None,
        typer.Option("--coloring", help="Coloring file ('<vertex> <R|G|B>' lines)"),
    ] = None,
    solve_first: Annotated[
        bool,
        typer.Option("--solve", help="Color with the solver's answer"),
    ] = False,
    base_threshold: ThresholdOption = None,
    output: OutputOption = None,
    config: ConfigOption = None,
) -> None:
    """Draw the chord diagram as SVG, optionally colored."""
    try:
        run = _load_config(config)
        instance = parse_instance(Path(path).read_bytes())
        colors = None
        if coloring:
            colors = parse_coloring(Path(coloring).read_bytes())
            problems = coloring_problems(instance, colors)
            if problems:
                typer.echo(f"✗ Coloring is not valid: {problems[0]}", err=True)
        elif solve_first:
            colors = solve_instance(
                instance, base_threshold=_pick(base_threshold, run.base_threshold)
            ).coloring
    except (InputParseError, ConfigError) as e:
        raise _fail("Input error", e) from e
    except (FileNotFoundError, ValueError) as e:
        raise _fail("Error", e) from e
    _emit(render_svg(instance, colors), output)


@app.command()
def bench(
    sizes: Annotated[
        str | None,
        typer.Option("--sizes", help="Comma-separated instance sizes"),
    ] = None,
    trials: Annotated[int | None, typer.Option("--trials")] = None,
    seed: Annotated[int | None, typer.Option("--seed")] = None,
    density: Annotated[ListDensity | None, typer.Option("--density")] = None,
    check_oracle: Annotated[
        bool | None,
        typer.Option("--check-oracle/--no-check-oracle", help="Compare with oracle"),
    ] = None,
    streams: Annotated[
        bool,
        typer.Option("--streams", help="With jsonl, also emit one line per stream"),
    ] = False,
    base_threshold: ThresholdOption = None,
    output_format: FormatOption = None,
    config: ConfigOption = None,
    verbose: VerboseOption = False,
) -> None:
    """Solve seeded random instances and report per-size effort."""
    _configure_logging(verbose)
    records: list[BenchRecord] = []
    try:
        run = _load_config(config)
        jsonl = _pick(output_format, run.output_format) is OutputFormat.JSONL
        size_list = (
            [int(s) for s in sizes.split(",") if s.strip()] if sizes else run.sizes
        )

        def echo_stream(record: dict[str, Any]) -> None:
            typer.echo(json.dumps({"record": "stream", **record}))

        for record in run_bench(
            size_list,
            _pick(trials, run.trials),
            _pick(seed, run.seed),
            _pick(density, run.density),
            drop_probability=run.drop_probability,
            base_threshold=_pick(base_threshold, run.base_threshold),
            check_oracle=_pick(check_oracle, run.check_oracle),
            stream_sink=echo_stream if jsonl and streams else None,
        ):
            records.append(record)
            if jsonl:
                typer.echo(record.to_json())
    except ConfigError as e:
        raise _fail("Input error", e) from e
    except (FileNotFoundError, ValueError) as e:
        raise _fail("Error", e) from e

    if not jsonl:
        for size, row in summarize(records).items():
            agreement = row["oracle_agreement"]
            typer.echo(
                f"n={size}: {row['yes']}/{row['count']} yes, "
                f"median nodes {row['median_nodes']}, "
                f"median wall {row['median_wall_seconds']:.4f}s"
                + ("" if agreement is None else f", oracle agreement {agreement:.0%}")
            )
    if any(r.oracle_agrees is False for r in records):
        typer.echo("✗ Oracle disagreement detected", err=True)
        raise typer.Exit(code=EXIT_NO)


@app.command()
def info() -> None:
    """Display information about chordcolor."""
    from chordcolor import __version__

    typer.echo(f"chordcolor version {__version__}")
    typer.echo("List 3-coloring of circle graphs and 3-page book embeddings.")


def main() -> None:
    """Entry point for the CLI application."""
    app()


if __name__ == "__main__":
    main()

"""Command-line interface: benchmark sweeps, circuit execution, optimization."""

from __future__ import annotations

import csv
import json
import sys
from pathlib import Path

import click
import numpy as np

from . import config
from .bench import BenchConfig, TimingReport, run_benchmark
from .optimizer import optimize_heavy, optimize_light
from .serialize import CircuitFormatError, dump_circuit, load_circuit
from .state import StateVector

_CSV_FIELDS = ["family", "num_qubits", "strategy", "repeats", "min", "median",
               "mean", "opt_time", "gates_before", "gates_after", "error"]


def _parse_range(text: str) -> tuple[int, ...]:
    """Parse "4", "4-8", or "4,6,8" into a qubit-count tuple."""
    values: list[int] = []
    for part in text.split(","):
        if "-" in part.lstrip("-"):
            lo, hi = part.split("-", 1)
            values.extend(range(int(lo), int(hi) + 1))
        else:
            values.append(int(part))
    return tuple(values)


def _write_report(report: TimingReport, output: Path, fmt: str) -> None:
    if fmt == "json":
        output.write_text(json.dumps(report.to_dict(), indent=1))
    else:
        with open(output, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=_CSV_FIELDS)
            writer.writeheader()
            for point in report.results:
                row = point.to_dict()
                writer.writerow({k: row[k] for k in _CSV_FIELDS})


def _render_figure(report: TimingReport, figure_path: Path) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    points = [p for p in report.results if p.times]
    if not points:
        return
    fig, ax = plt.subplots(figsize=(6, 4))
    xs = [p.num_qubits for p in points]
    ax.plot(xs, [p.median_time for p in points], "o-", label="median run time")
    ax.plot(xs, [p.min_time for p in points], "s--", label="min run time")
    if any(p.opt_time > 0 for p in points):
        ax.plot(xs, [p.median_time + p.opt_time for p in points], "^:",
                label="median + opt time")
    ax.set_xlabel("qubits")
    ax.set_ylabel("seconds")
    ax.set_yscale("log")
    strategy = points[0].strategy
    ax.set_title(f"{points[0].family} ({strategy})")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(figure_path, dpi=120)
    plt.close(fig)


def _fail(message: str) -> None:
    click.echo(json.dumps({"error": message}), err=True)
    sys.exit(1)


@click.group()
@click.option("--threads", type=int, default=None,
              help="Worker threads for kernel loops (also QSIM_NUM_THREADS).")
def main(threads):
    """State-vector circuit simulator benchmark harness."""
    if threads is not None:
        config.set_num_threads(threads)


@main.command()
@click.option("--family", type=click.Choice(["cz-ladder", "cz-ladder-commuting",
                                             "cnot-ring"]), default="cz-ladder")
@click.option("--nqubits", default="4-10", help="Qubit counts: N, LO-HI, or comma list.")
@click.option("--depth", type=int, default=5)
@click.option("--repeats", type=int, default=3)
@click.option("--opt", type=click.Choice(["none", "light", "heavy"]), default="none")
@click.option("--block-size", type=int, default=2)
@click.option("--seed", type=int, default=1)
@click.option("--output", type=click.Path(path_type=Path), default=Path("report.json"))
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
@click.option("--plot/--no-plot", default=False,
              help="Render a timing figure next to the report.")
def bench(family, nqubits, depth, repeats, opt, block_size, seed, output, fmt, plot):
    """Generate benchmark circuits and record timed simulations."""
    try:
        cfg = BenchConfig(family=family, nqubits=_parse_range(nqubits), depth=depth,
                          repeats=repeats, optimization=opt, block_size=block_size,
                          seed=seed)
    except ValueError as exc:
        _fail(str(exc))
    report = run_benchmark(cfg)
    _write_report(report, output, fmt)
    if plot:
        figure_path = output.with_suffix(".png")
        _render_figure(report, figure_path)
        click.echo(f"figure written to {figure_path}")
    for point in report.results:
        if point.error:
            click.echo(f"n={point.num_qubits}: {point.error}")
        else:
            click.echo(f"n={point.num_qubits}: min={point.min_time:.6f}s "
                       f"median={point.median_time:.6f}s gates "
                       f"{point.gates_before}->{point.gates_after}")
    click.echo(f"report written to {output}")


@main.command()
@click.argument("circuit_file", type=click.Path(exists=True, path_type=Path))
@click.option("--seed", type=int, default=None, help="Seed for maps and sampling.")
@click.option("--samples", type=int, default=0,
              help="Emit this many Z-basis samples instead of amplitudes.")
@click.option("--output", type=click.Path(path_type=Path), default=None)
def run(circuit_file, seed, samples, output):
    """Execute a circuit JSON file on the zero state and dump the result."""
    try:
        circuit = load_circuit(circuit_file)
    except (CircuitFormatError, json.JSONDecodeError) as exc:
        _fail(f"cannot load circuit: {exc}")
    state = StateVector(circuit.num_qubits)
    circuit.update_state(state, rng=np.random.default_rng(seed))
    document = {"num_qubits": circuit.num_qubits}
    if samples > 0:
        document["samples"] = state.sampling(samples, seed=seed)
    else:
        document["amplitudes"] = [[float(a.real), float(a.imag)]
                                  for a in state.amplitudes]
        document["classical_registers"] = list(state.classical_registers)
    text = json.dumps(document, indent=1)
    if output:
        output.write_text(text)
        click.echo(f"result written to {output}")
    else:
        click.echo(text)


@main.command()
@click.argument("circuit_file", type=click.Path(exists=True, path_type=Path))
@click.option("--opt", type=click.Choice(["light", "heavy"]), default="light")
@click.option("--block-size", type=int, default=2)
@click.option("--output", type=click.Path(path_type=Path), required=True)
def optimize(circuit_file, opt, block_size, output):
    """Apply a fusion pass to a circuit file and write the optimized circuit."""
    try:
        circuit = load_circuit(circuit_file)
    except (CircuitFormatError, json.JSONDecodeError) as exc:
        _fail(f"cannot load circuit: {exc}")
    before = circuit.get_gate_count()
    if opt == "light":
        optimize_light(circuit)
    else:
        optimize_heavy(circuit, block_size)
    dump_circuit(circuit, output)
    click.echo(f"gates {before} -> {circuit.get_gate_count()}; written to {output}")


if __name__ == "__main__":
    main()

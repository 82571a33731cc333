"""Subcommand bodies. Each returns the text to print; ``main`` handles I/O."""

import json
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from magnons.cli.config import OutputFormat, RunConfig, RunMode
from magnons.concurrence import concurrence_fraction, concurrence_numeric, concurrence_oracle
from magnons.density import all_pairs, reduced_density_fast, reduced_density_oracle
from magnons.entangled_graphs import EdgeClass, EntangledGraph, GraphMode, build_graph, graph_equal
from magnons.errors import InvalidInputError, MagnonError
from magnons.rs import parse_word, rs_insert_word, two_line_notation
from magnons.states import OneMagnonState, build_state, embed_full, gram_matrix
from magnons.tableaux import StandardYoungTableau, one_magnon_tableaux
from magnons.workflow import run_verification

AGREEMENT_TOLERANCE = 1e-9
DENSITY_TOLERANCE = 1e-12


def _dump(items: List[Dict[str, Any]]) -> str:
    payload: Any = items[0] if len(items) == 1 else items
    return json.dumps(payload, ensure_ascii=False)


def _require_format(output: OutputFormat, allowed: Tuple[OutputFormat, ...], command: str) -> None:
    if output not in allowed:
        names = ", ".join(f.value for f in allowed)
        raise InvalidInputError(f"{command} supports --format {names}, not {output.value}")


def _verify_state(state: OneMagnonState, cap: int) -> None:
    """Cross-check one basis state against the Gram matrix and the partial-trace oracle."""
    n = state.n
    position = one_magnon_tableaux(n).index(state.label)
    if np.max(np.abs(gram_matrix(n)[position] - np.eye(n)[position])) > DENSITY_TOLERANCE:
        raise MagnonError(f"{state.describe()} is not orthonormal to the rest of the basis")
    full = embed_full(state, cap=cap)
    for j, k in all_pairs(n):
        fast = reduced_density_fast(state, j, k)
        oracle = reduced_density_oracle(full, j, k, cap=cap)
        if np.max(np.abs(fast.matrix - oracle.matrix)) > DENSITY_TOLERANCE:
            raise MagnonError(f"{state.describe()} ({j},{k}): fast density disagrees with the oracle")


def cmd_state(config: RunConfig) -> str:
    """Print each selected basis state as a signed combination of node kets."""
    _require_format(config.output, (OutputFormat.TEXT, OutputFormat.JSON), "state")
    states = [build_state(config.n, label) for label in config.labels()]
    if config.mode is RunMode.VERIFY:
        for state in states:
            _verify_state(state, config.cap)
    if config.mode is RunMode.NUMERIC:
        states = [OneMagnonState(n=s.n, amplitudes=s.amplitudes, label=s.label) for s in states]

    if config.output is OutputFormat.JSON:
        return _dump([s.to_dict() for s in states])
    return "\n".join(f"|{s.label.inline()}⟩ = {s.render()}" for s in states)


def cmd_rs(text: str, output: OutputFormat = OutputFormat.TEXT, two_line: bool = False) -> str:
    """Trace Schensted insertion of a binary configuration step by step."""
    output = OutputFormat(output)
    _require_format(output, (OutputFormat.TEXT, OutputFormat.JSON), "rs")
    pair = rs_insert_word(parse_word(text), keep_trace=True)
    if output is OutputFormat.JSON:
        return pair.to_json()
    trace = pair.format_trace()
    if two_line and pair.word:
        return f"{two_line_notation(pair.word)}\n{trace}"
    return trace


def _graph_for(config: RunConfig, label: StandardYoungTableau) -> EntangledGraph:
    if config.mode is RunMode.NUMERIC:
        return build_graph(config.n, label, GraphMode.NUMERIC)
    graph = build_graph(config.n, label, GraphMode.CLOSED_FORM)
    if config.mode is RunMode.VERIFY:
        _verify_state(build_state(config.n, label), config.cap)
        numeric = build_graph(config.n, label, GraphMode.NUMERIC)
        if not graph_equal(graph, numeric, AGREEMENT_TOLERANCE):
            raise MagnonError(f"{label.inline()}: closed-form and numeric graphs differ")
    return graph


def cmd_graph(config: RunConfig) -> str:
    """Emit the entangled graph of each selected label as text, JSON or DOT."""
    graphs = [_graph_for(config, label) for label in config.labels()]
    if config.output is OutputFormat.JSON:
        return _dump([g.to_dict() for g in graphs])
    if config.output is OutputFormat.DOT:
        return "\n".join(g.to_dot() for g in graphs)
    return "\n\n".join(g.render() for g in graphs)


def _max_delta(n: int, label: StandardYoungTableau, oracle: bool) -> float:
    """Largest |closed form - pipeline| concurrence over all pairs."""
    state = build_state(n, label)
    worst = 0.0
    for j, k in all_pairs(n):
        rho = reduced_density_fast(state, j, k)
        closed = float(concurrence_fraction(n, label, j, k))
        worst = max(worst, abs(closed - concurrence_numeric(rho).value))
        if oracle:
            worst = max(worst, abs(closed - concurrence_oracle(rho).value))
    return worst


def _weight_cells(graph: EntangledGraph) -> List[Dict[str, Any]]:
    cells = []
    for edge_class, edge in sorted(graph.class_weights().items(), key=lambda item: item[0].value):
        name = "C" if edge_class is EdgeClass.UNIFORM else edge_class.value
        cells.append({"class": name, "exact": str(edge.exact), "float": edge.weight})
    return cells


def cmd_table(config: RunConfig) -> str:
    """One row per label: edge count, class weights exact and float, max |delta| column.

    Hook labels come first in order of their second-row entry, then the row label.
    """
    _require_format(config.output, (OutputFormat.TEXT, OutputFormat.JSON), "table")
    labels = config.labels()
    if len(labels) == config.n:
        labels = labels[1:] + labels[:1]
    oracle = config.mode is RunMode.VERIFY

    rows = []
    for label in labels:
        graph = build_graph(config.n, label, GraphMode.CLOSED_FORM)
        rows.append(
            {
                "label": label.inline(),
                "edges": len(graph.edges),
                "weights": _weight_cells(graph),
                "max_delta": _max_delta(config.n, label, oracle),
            }
        )

    if config.output is OutputFormat.JSON:
        return json.dumps({"n": config.n, "rows": rows}, ensure_ascii=False)

    width = max(len(r["label"]) for r in rows)
    lines = [f"Entangled graphs for N={config.n}", f"{'label':<{width}}  edges  weights  max|Δ|"]
    for r in rows:
        weights = ", ".join(f"{w['class']}={w['exact']} ({w['float']:.10g})" for w in r["weights"])
        lines.append(f"{r['label']:<{width}}  {r['edges']:>5}  {weights}  {r['max_delta']:.1e}")
    return "\n".join(lines)


def cmd_verify(
    n_max: int,
    cap: Optional[int] = None,
    output: OutputFormat = OutputFormat.TEXT,
    checks: Optional[List[str]] = None,
    progress_callback: Optional[Callable[[str, str], None]] = None,
) -> Tuple[str, bool]:
    """Run the verification graph; return the report and whether every check passed."""
    output = OutputFormat(output)
    _require_format(output, (OutputFormat.TEXT, OutputFormat.JSON), "verify")
    report = run_verification(
        n_max, cap=cap, checks=checks, progress_callback=progress_callback
    )
    text = report.to_json() if output is OutputFormat.JSON else report.format()
    return text, report.passed

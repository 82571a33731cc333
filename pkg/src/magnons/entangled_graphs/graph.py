"""Entangled graphs of one-magnon Schur-Weyl states.

Vertices are the N qubits; an edge joins two qubits whose pairwise
concurrence is nonzero and carries that concurrence as its weight. For the
hook label with second-row entry s the graph is complete on 1..s, node s is
special (class C2 edges), the others are bound among themselves with the
smaller C1 weight, and nodes s+1..N are isolated. The row label gives the
complete graph with one uniform weight 2/N.
"""

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from magnons.concurrence import concurrence_fraction, concurrence_numeric
from magnons.config import env
from magnons.density import all_pairs, reduced_density_fast
from magnons.errors import InvalidInputError, MagnonError
from magnons.rs import Word, classify_all_configurations, format_word
from magnons.states import build_state, validate_label
from magnons.tableaux import StandardYoungTableau

logger = logging.getLogger(__name__)

EDGE_THRESHOLD = 1e-9
WEIGHT_TOLERANCE = 1e-9


class EdgeClass(str, Enum):
    C1 = "C1"
    C2 = "C2"
    UNIFORM = "UNIFORM"


class GraphMode(str, Enum):
    CLOSED_FORM = "closed_form"
    NUMERIC = "numeric"


DOT_STYLES = {EdgeClass.C1: "solid", EdgeClass.C2: "dashed", EdgeClass.UNIFORM: "solid"}


@dataclass(frozen=True)
class Edge:
    j: int
    k: int
    weight: float
    edge_class: EdgeClass
    exact: Optional[Fraction] = None

    @property
    def weight_text(self) -> str:
        return str(self.exact) if self.exact is not None else f"{self.weight:.10g}"

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "j": self.j,
            "k": self.k,
            "weight": self.weight,
            "class": self.edge_class.value,
        }
        if self.exact is not None:
            data["exact"] = str(self.exact)
        return data


@dataclass(frozen=True)
class EntangledGraph:
    """Weighted simple graph on vertices 1..n with classified edges."""

    n: int
    edges: Tuple[Edge, ...]
    label: Optional[StandardYoungTableau] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.edges, key=lambda e: (e.j, e.k)))
        object.__setattr__(self, "edges", ordered)
        seen = set()
        for edge in ordered:
            if not 1 <= edge.j < edge.k <= self.n:
                raise MagnonError(f"Edge ({edge.j}, {edge.k}) is not j < k within 1..{self.n}")
            if (edge.j, edge.k) in seen:
                raise MagnonError(f"Duplicate edge ({edge.j}, {edge.k})")
            seen.add((edge.j, edge.k))
            if not 0.0 < edge.weight <= 1.0 + WEIGHT_TOLERANCE:
                raise MagnonError(f"Edge ({edge.j}, {edge.k}) weight {edge.weight!r} outside (0, 1]")
        for edge_class in (EdgeClass.C1, EdgeClass.C2):
            weights = [e.weight for e in ordered if e.edge_class is edge_class]
            if weights and max(weights) - min(weights) > WEIGHT_TOLERANCE:
                raise MagnonError(f"{edge_class.value} edges carry different weights: {weights}")

    def edge(self, j: int, k: int) -> Optional[Edge]:
        a, b = min(j, k), max(j, k)
        return next((e for e in self.edges if (e.j, e.k) == (a, b)), None)

    def isolated_vertices(self) -> List[int]:
        touched = {v for e in self.edges for v in (e.j, e.k)}
        return [v for v in range(1, self.n + 1) if v not in touched]

    def class_weights(self) -> Dict[EdgeClass, Edge]:
        """One representative edge per class present."""
        found: Dict[EdgeClass, Edge] = {}
        for edge in self.edges:
            found.setdefault(edge.edge_class, edge)
        return found

    def relabeled(self, mapping: Dict[int, int]) -> "EntangledGraph":
        """Apply a vertex permutation given as ``old -> new`` (unmapped vertices stay)."""
        moved = []
        for e in self.edges:
            a, b = mapping.get(e.j, e.j), mapping.get(e.k, e.k)
            moved.append(Edge(min(a, b), max(a, b), e.weight, e.edge_class, e.exact))
        return EntangledGraph(n=self.n, edges=tuple(moved), label=self.label)

    def title(self) -> str:
        return self.label.inline() if self.label is not None else f"N={self.n}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "label": self.label.to_dict() if self.label is not None else None,
            "edges": [e.to_dict() for e in self.edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dot(self) -> str:
        """Graphviz rendering: C1 solid, C2 dashed, edge labels are the weights."""
        lines = [f'graph "{self.title()}" {{', "  node [shape=circle];"]
        lines.extend(f"  {v};" for v in range(1, self.n + 1))
        for e in self.edges:
            lines.append(
                f'  {e.j} -- {e.k} [label="{e.weight_text}", '
                f'class="{e.edge_class.value}", style={DOT_STYLES[e.edge_class]}];'
            )
        lines.append("}")
        return "\n".join(lines)

    def render(self) -> str:
        lines = [f"{self.title()}  N={self.n}"]
        for e in self.edges:
            lines.append(f"  {e.j} -- {e.k}  {e.edge_class.value:<7} {e.weight_text}")
        isolated = self.isolated_vertices()
        lines.append(f"  isolated: {', '.join(map(str, isolated)) if isolated else 'none'}")
        return "\n".join(lines)


def _closed_form_class(label: StandardYoungTableau, k: int) -> EdgeClass:
    s = label.second_row_entry
    if s is None:
        return EdgeClass.UNIFORM
    return EdgeClass.C2 if k == s else EdgeClass.C1


def _two_means(values: Sequence[float]) -> Tuple[List[float], List[float]]:
    """Split distinct weights into a low and a high cluster (1-D two-means)."""
    low_center, high_center = min(values), max(values)
    low: List[float] = []
    high: List[float] = []
    for _ in range(100):
        low = [v for v in values if abs(v - low_center) <= abs(v - high_center)]
        high = [v for v in values if abs(v - low_center) > abs(v - high_center)]
        new_low = sum(low) / len(low)
        new_high = sum(high) / len(high) if high else high_center
        if abs(new_low - low_center) <= WEIGHT_TOLERANCE and abs(new_high - high_center) <= WEIGHT_TOLERANCE:
            break
        low_center, high_center = new_low, new_high
    return low, high


def classify_weights(n: int, weighted: Dict[Tuple[int, int], float]) -> Dict[Tuple[int, int], EdgeClass]:
    """Tag numeric edges by clustering their weights, without looking at any label.

    A single weight spread over the complete graph on all N vertices is
    UNIFORM; otherwise the heavier cluster is C2 and the lighter C1.
    """
    if not weighted:
        return {}
    distinct: List[float] = []
    for w in sorted(weighted.values()):
        if not distinct or w - distinct[-1] > WEIGHT_TOLERANCE:
            distinct.append(w)
    if len(distinct) == 1:
        complete = len(weighted) == n * (n - 1) // 2
        uniform = EdgeClass.UNIFORM if complete else EdgeClass.C2
        return {pair: uniform for pair in weighted}
    _, high = _two_means(distinct)
    threshold = min(high)
    return {
        pair: EdgeClass.C2 if w >= threshold - WEIGHT_TOLERANCE else EdgeClass.C1
        for pair, w in weighted.items()
    }


def _build_closed_form(n: int, label: StandardYoungTableau) -> EntangledGraph:
    edges = []
    for j, k in all_pairs(n):
        exact = concurrence_fraction(n, label, j, k)
        if exact:
            edges.append(Edge(j, k, float(exact), _closed_form_class(label, k), exact))
    return EntangledGraph(n=n, edges=tuple(edges), label=label)


def _build_numeric(n: int, label: StandardYoungTableau) -> EntangledGraph:
    state = build_state(n, label)
    weighted: Dict[Tuple[int, int], float] = {}
    for j, k in all_pairs(n):
        value = concurrence_numeric(reduced_density_fast(state, j, k)).value
        if value > EDGE_THRESHOLD:
            weighted[(j, k)] = value
    classes = classify_weights(n, weighted)
    edges = tuple(Edge(j, k, w, classes[(j, k)]) for (j, k), w in weighted.items())
    return EntangledGraph(n=n, edges=edges, label=label)


def build_graph(
    n: int, label: StandardYoungTableau, mode: GraphMode = GraphMode.CLOSED_FORM
) -> EntangledGraph:
    """Entangled graph of |label>, from closed forms or from the concurrence pipeline.

    Raises:
        InvalidLabelError: If ``label`` is not a one-magnon label for ``n``.
    """
    validate_label(n, label)
    mode = GraphMode(mode)
    if mode is GraphMode.CLOSED_FORM:
        return _build_closed_form(n, label)
    return _build_numeric(n, label)


def graph_equal(a: EntangledGraph, b: EntangledGraph, tol: float = WEIGHT_TOLERANCE) -> bool:
    """Same vertex count, same edge set, weights within ``tol``.

    Class tags are annotations and do not take part in the comparison.
    """
    if a.n != b.n or len(a.edges) != len(b.edges):
        return False
    for ea, eb in zip(a.edges, b.edges):
        if (ea.j, ea.k) != (eb.j, eb.k) or abs(ea.weight - eb.weight) > tol:
            return False
    return True


@dataclass(frozen=True)
class GraphEntry:
    """One row of the combinatorial classification: configuration, label, graph."""

    word: Word
    label: StandardYoungTableau
    graph: EntangledGraph

    def to_dict(self) -> Dict[str, Any]:
        return {"configuration": format_word(self.word), **self.graph.to_dict()}


def enumerate_graphs(
    n: int, mode: GraphMode = GraphMode.CLOSED_FORM, max_workers: Optional[int] = None
) -> List[GraphEntry]:
    """Classify every one-magnon configuration by RS and draw the graph of its label.

    Entries are ordered by the node carrying the spin deviation.
    """
    classification = classify_all_configurations(n, max_workers=max_workers)
    words = list(classification)
    with ThreadPoolExecutor(max_workers=max_workers or env.max_workers) as executor:
        graphs = list(executor.map(lambda w: build_graph(n, classification[w], mode), words))
    logger.debug("Enumerated %d entangled graphs for N=%d", len(graphs), n)
    return [GraphEntry(word=w, label=classification[w], graph=g) for w, g in zip(words, graphs)]


def parse_mode(text: str) -> GraphMode:
    aliases = {"closed": GraphMode.CLOSED_FORM, "closed_form": GraphMode.CLOSED_FORM, "numeric": GraphMode.NUMERIC}
    try:
        return aliases[text]
    except KeyError:
        raise InvalidInputError(f"Unknown graph mode {text!r}") from None

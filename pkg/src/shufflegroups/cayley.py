"""Cayley graphs of small shuffle groups, exported as Graphviz DOT."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ResourceLimitError
from .group import bfs_enumerate
from .perm import Perm

__all__ = ["DEFAULT_VERTEX_CAP", "CayleyGraph", "build", "to_dot", "edge_color"]

DEFAULT_VERTEX_CAP = 5000


@dataclass(frozen=True)
class CayleyGraph:
    """Vertices are deck arrangements, listed in BFS discovery order.

    ``arrangements[v][j]`` is the card at position ``j`` after applying the
    group element to the sorted deck ``0..N-1``.  Edge ``(u, v, label)``
    means shuffle ``label`` turns arrangement ``u`` into arrangement ``v``.
    """

    arrangements: list[tuple[int, ...]]
    elements: list[Perm]
    edges: list[tuple[int, int, str]]
    generator_labels: list[str]

    @property
    def num_vertices(self) -> int:
        return len(self.arrangements)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def undirected_skeleton(self) -> set[frozenset[int]]:
        """Simple undirected edges with loops dropped."""
        return {frozenset((u, v)) for u, v, _ in self.edges if u != v}


def build(generators: list[tuple[str, Perm]], cap: int = DEFAULT_VERTEX_CAP) -> CayleyGraph:
    """Cayley graph of ``<generators>`` with edges ``g -> g * s``."""
    enum = bfs_enumerate(generators, cap=cap)
    if not enum.complete:
        raise ResourceLimitError(f"group has more than {cap} elements; too large to export")
    labels = [label for label, _ in enum.generator_labels]
    gens = [g for _, g in enum.generator_labels]
    elements = list(enum.elements)
    arrangements = []
    for g in elements:
        arr = [0] * g.degree
        for card, pos in enumerate(g.dest.tolist()):
            arr[pos] = card
        arrangements.append(tuple(arr))
    edges = []
    for u, g in enumerate(elements):
        for label, s in zip(labels, gens):
            edges.append((u, enum.index(g * s), label))
    return CayleyGraph(arrangements, elements, edges, labels)


def edge_color(label: str) -> str:
    if label.startswith("O"):
        return "red"
    if label.startswith("I"):
        return "blue"
    return "black"


def to_dot(g: CayleyGraph, name: str = "cayley") -> str:
    names = [",".join(map(str, a)) for a in g.arrangements]
    lines = [f"digraph {name} {{"]
    lines += [f'  "{v}";' for v in names]
    lines += [
        f'  "{names[u]}" -> "{names[v]}" [label="{label}", color={edge_color(label)}];'
        for u, v, label in g.edges
    ]
    lines.append("}")
    return "\n".join(lines) + "\n"

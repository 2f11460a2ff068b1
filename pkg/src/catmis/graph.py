"""Undirected labeled trees and the line-oriented edge-list format.

Vertex labels are opaque non-empty tokens without whitespace. Edge-list
text has one edge per line ("u v"), '#' comments, and blank lines are
ignored. Multi-edges are rejected as parse errors; cycles and
disconnected inputs are rejected as non-trees.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .errors import (
    EmptyInputError,
    NotATreeError,
    ParseError,
    UnknownVertexError,
)

__all__ = ["Tree", "parse_edge_list", "serialize_edge_list"]


def _check_label(label: str) -> str:
    if not label or any(ch.isspace() for ch in label):
        raise ParseError(f"invalid vertex label: {label!r}")
    return label


class Tree:
    """Immutable undirected tree over string labels.

    Construction validates the tree invariants: no self-loops, no
    duplicate edges, |edges| == |vertices| - 1, and connectivity.
    """

    __slots__ = ("_adj",)

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str]]):
        adj: dict[str, set[str]] = {_check_label(v): set() for v in vertices}
        if not adj:
            raise EmptyInputError("tree has no vertices")
        seen: set[tuple[str, str]] = set()
        for u, v in edges:
            if u not in adj or v not in adj:
                raise UnknownVertexError(f"edge ({u}, {v}) mentions unknown vertex")
            if u == v:
                raise NotATreeError(f"self-loop at {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ParseError(f"duplicate edge {key[0]} {key[1]}")
            seen.add(key)
            adj[u].add(v)
            adj[v].add(u)
        if len(seen) != len(adj) - 1:
            raise NotATreeError(
                f"{len(adj)} vertices need {len(adj) - 1} edges, got {len(seen)}"
            )
        # edge count is right, so connectivity also rules out cycles
        root = next(iter(adj))
        reached = {root}
        queue = deque([root])
        while queue:
            for w in adj[queue.popleft()]:
                if w not in reached:
                    reached.add(w)
                    queue.append(w)
        if len(reached) != len(adj):
            raise NotATreeError("graph is disconnected")
        object.__setattr__(self, "_adj", {v: frozenset(ns) for v, ns in adj.items()})

    def __setattr__(self, name, value):
        raise AttributeError("Tree is immutable")

    @property
    def vertices(self) -> frozenset[str]:
        return frozenset(self._adj)

    @property
    def edges(self) -> frozenset[tuple[str, str]]:
        return frozenset(
            (u, v) for u, ns in self._adj.items() for v in ns if u < v
        )

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, label: str) -> bool:
        return label in self._adj

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(frozenset(self._adj))

    def __repr__(self) -> str:
        return f"Tree({len(self._adj)} vertices)"

    def neighbors(self, v: str) -> frozenset[str]:
        """Adjacency set of `v`; raises UnknownVertexError for foreign labels."""
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex: {v}") from None

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))


def parse_edge_list(text: str) -> Tree:
    """Parse edge-list text into a Tree.

    Each non-blank, non-comment line must hold exactly two
    whitespace-separated labels. Raises ParseError, EmptyInputError, or
    NotATreeError.
    """
    edges: list[tuple[str, str]] = []
    vertices: dict[str, None] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(
                f"line {lineno}: expected two labels, got {len(tokens)}"
            )
        u, v = tokens
        vertices.setdefault(u)
        vertices.setdefault(v)
        edges.append((u, v))
    if not vertices:
        raise EmptyInputError("no edges in input")
    return Tree(vertices, edges)


def serialize_edge_list(t: Tree) -> str:
    """Deterministic edge-list text: sorted 'u v' lines, LF line ends."""
    lines = [f"{u} {v}" for u, v in sorted(t.edges)]
    return "\n".join(lines) + "\n" if lines else ""

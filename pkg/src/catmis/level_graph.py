"""Layered DAG whose source-sink paths biject with the maximal independent sets.

One level per backbone stage. Each level holds at most five vertices,
one per admissible stage-set shape, tagged with a type 1..4 describing
the status of the backbone vertex (1: in the set, 2: a hair neighbor is
in the set, 3: covered from the previous stage, 4: covered from the
next stage). Edges run only between consecutive levels and only for
compatible type pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .caterpillar import CaterpillarDecomposition

__all__ = ["LevelVertex", "LevelGraph", "build", "count_paths", "export_dot",
           "ALLOWED_TYPE_PAIRS", "KIND_ORDER"]

KIND_ORDER = "psqrtu"

_KIND_TYPE = {"p": 1, "s": 2, "q": 2, "r": 2, "t": 3, "u": 4}
_KIND_INDEX = {"p": 1, "s": 1, "q": 1, "r": 2, "t": 1, "u": 1}

# compatible (type at level i, type at level i+1) transitions
ALLOWED_TYPE_PAIRS = frozenset(
    {(1, 2), (1, 3), (2, 1), (2, 2), (2, 4), (3, 1), (3, 2), (3, 4), (4, 1)}
)


@dataclass(frozen=True)
class LevelVertex:
    """A vertex of the level graph; named kind+level, e.g. p1, s2."""

    level: int
    kind: str

    def __post_init__(self):
        if self.kind not in _KIND_TYPE:
            raise ValueError(f"unknown kind: {self.kind!r}")
        if self.level < 1:
            raise ValueError(f"level must be >= 1, got {self.level}")

    @property
    def type(self) -> int:
        return _KIND_TYPE[self.kind]

    @property
    def index(self) -> int:
        return _KIND_INDEX[self.kind]

    @property
    def name(self) -> str:
        return f"{self.kind}{self.level}"

    def sort_key(self) -> tuple[int, int]:
        return (self.level, KIND_ORDER.index(self.kind))


def _level_kinds(t_code: int, level: int, k: int) -> list[str]:
    """Vertex kinds present at a level, in kind order."""
    kinds = ["p"]
    if t_code == 1:
        kinds.append("s")
    elif t_code == 2:
        kinds.append("s")
    elif t_code == 3:
        kinds.extend(("q", "r"))
    if t_code in (0, 2):
        if level >= 2:
            kinds.append("t")
        if level <= k - 1:
            kinds.append("u")
    return kinds


class LevelGraph:
    """Immutable level graph; construct via build()."""

    __slots__ = (
        "k", "vertices", "levels", "succ", "pred",
        "reaches_sink", "from_source",
        "_index", "_succ_pruned", "_source_indices",
    )

    def __init__(self, k: int, levels: tuple[tuple[LevelVertex, ...], ...],
                 succ: dict[LevelVertex, tuple[LevelVertex, ...]]):
        self.k = k
        self.levels = levels
        self.vertices = tuple(v for lvl in levels for v in lvl)
        self.succ = succ
        pred: dict[LevelVertex, list[LevelVertex]] = {v: [] for v in self.vertices}
        for a, bs in succ.items():
            for b in bs:
                pred[b].append(a)
        self.pred = {v: tuple(ps) for v, ps in pred.items()}

        reaches: dict[LevelVertex, bool] = {}
        for v in levels[-1]:
            reaches[v] = True
        for lvl in reversed(levels[:-1]):
            for v in lvl:
                reaches[v] = any(reaches[w] for w in succ[v])
        self.reaches_sink = reaches

        reached: dict[LevelVertex, bool] = {}
        for v in levels[0]:
            reached[v] = True
        for lvl in levels[1:]:
            for v in lvl:
                reached[v] = any(reached[w] for w in self.pred[v])
        self.from_source = reached

        # int-indexed successor lists restricted to sink-reaching targets,
        # used by the hot enumeration loop
        index = {v: i for i, v in enumerate(self.vertices)}
        self._index = index
        self._succ_pruned = tuple(
            tuple(index[w] for w in succ[v] if reaches[w]) for v in self.vertices
        )
        self._source_indices = tuple(
            index[v] for v in levels[0] if reaches[v]
        )

    def level(self, i: int) -> tuple[LevelVertex, ...]:
        """Vertices at level i (1-based), in kind order."""
        return self.levels[i - 1]

    def edges(self):
        for a in self.vertices:
            for b in self.succ[a]:
                yield (a, b)

    def edge_count(self) -> int:
        return sum(len(bs) for bs in self.succ.values())

    def on_some_path(self, v: LevelVertex) -> bool:
        """True iff v lies on at least one source-sink path."""
        return self.reaches_sink[v] and self.from_source[v]

    def sources(self) -> tuple[LevelVertex, ...]:
        return self.levels[0]

    def sinks(self) -> tuple[LevelVertex, ...]:
        return self.levels[-1]


def build(d: CaterpillarDecomposition) -> LevelGraph:
    """Build the level graph of a normalized decomposition."""
    if not d.is_normalized():
        raise ValueError("decomposition must be normalized (at most one pendant per stage)")
    k = d.k
    codes = d.t_codes()
    levels = tuple(
        tuple(LevelVertex(i, kind) for kind in _level_kinds(codes[i - 1], i, k))
        for i in range(1, k + 1)
    )
    succ: dict[LevelVertex, tuple[LevelVertex, ...]] = {}
    for i, lvl in enumerate(levels):
        nxt = levels[i + 1] if i + 1 < k else ()
        for a in lvl:
            succ[a] = tuple(b for b in nxt if (a.type, b.type) in ALLOWED_TYPE_PAIRS)
    return LevelGraph(k, levels, succ)


def count_paths(L: LevelGraph) -> int:
    """Exact number of source-sink paths (arbitrary precision)."""
    ways: dict[LevelVertex, int] = {v: 1 for v in L.levels[0]}
    for lvl in L.levels[1:]:
        for v in lvl:
            ways[v] = sum(ways[p] for p in L.pred[v])
    return sum(ways[v] for v in L.levels[-1])


def export_dot(L: LevelGraph) -> str:
    """Deterministic DOT rendering; vertices off every source-sink path
    are drawn dashed."""
    lines = ["digraph levelgraph {", "  rankdir=LR;"]
    for i, lvl in enumerate(L.levels, start=1):
        members = "; ".join(v.name for v in lvl)
        lines.append(f"  {{ rank=same; {members}; }}")
    for v in L.vertices:
        if not L.on_some_path(v):
            lines.append(f"  {v.name} [style=dashed];")
    for a in L.vertices:
        for b in L.succ[a]:
            lines.append(f"  {a.name} -> {b.name};")
    lines.append("}")
    return "\n".join(lines) + "\n"

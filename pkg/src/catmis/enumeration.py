"""Streaming enumeration of maximal independent sets via level-graph paths.

Each source-sink path of the level graph is mapped back to a maximal
independent set by taking, per level, the stage set encoded by the
path's vertex and uniting across levels. Enumeration is a depth-first
walk restricted to sink-reaching vertices, so every step extends some
complete path and the total work stays linear in the output.
"""

from __future__ import annotations

from typing import Iterator

from .caterpillar import CaterpillarDecomposition, expand_set, normalize
from .errors import IllegalKindError, UnknownVertexError
from .graph import Tree
from .level_graph import LevelGraph, LevelVertex, build

__all__ = [
    "reconstruct_stage",
    "iter_path_indices",
    "iter_paths",
    "enumerate_mis",
    "enumerate_instance",
    "verify_mis",
]

_LEGAL_CODES = {
    "p": (0, 1, 2, 3),
    "s": (1, 2),
    "q": (3,),
    "r": (3,),
    "t": (0, 2),
    "u": (0, 2),
}


def reconstruct_stage(w: LevelVertex, d: CaterpillarDecomposition) -> frozenset[str]:
    """Stage set encoded by path vertex `w`, as labels of `d`'s stage.

    Raises IllegalKindError if `w`'s kind cannot occur for the stage's
    hair profile (which would mean a corrupted level graph).
    """
    profile = d.stages[w.level - 1]
    code = profile.t_code
    if code not in _LEGAL_CODES[w.kind]:
        raise IllegalKindError(
            f"{w.name} cannot occur at a stage with profile code {code}"
        )
    v = d.backbone[w.level - 1]
    names = d.names[w.level - 1]
    if w.type == 1:
        if code in (2, 3):
            return frozenset((v, names.long_hair[1]))
        return frozenset((v,))
    if w.type in (3, 4):
        if code == 2:
            return frozenset((names.long_hair[1],))
        return frozenset()
    # type 2
    if code == 1:
        return frozenset((names.pendants[0],))
    if code == 2:
        return frozenset((names.long_hair[0],))
    if w.index == 1:
        return frozenset((names.pendants[0], names.long_hair[0]))
    return frozenset((names.pendants[0], names.long_hair[1]))


def iter_path_indices(L: LevelGraph) -> Iterator[list[int]]:
    """Depth-first stream of source-sink paths as vertex indices.

    Sources and successors are visited in kind order (p, s, q, r, t, u).
    Yields the live path list for speed: callers must copy it if they
    keep a reference past the next iteration.
    """
    succ = L._succ_pruned
    k = L.k
    path: list[int] = []
    append = path.append
    pop = path.pop
    stack = [iter(L._source_indices)]
    push_frame = stack.append
    pop_frame = stack.pop
    while stack:
        descended = False
        for v in stack[-1]:
            append(v)
            if len(path) == k:
                yield path
                pop()
            else:
                push_frame(iter(succ[v]))
                descended = True
                break
        if not descended:
            pop_frame()
            if path:
                pop()


def iter_paths(L: LevelGraph) -> Iterator[tuple[LevelVertex, ...]]:
    """Like iter_path_indices, but yields tuples of LevelVertex."""
    order = L.vertices
    for path in iter_path_indices(L):
        yield tuple(order[i] for i in path)


def enumerate_mis(L: LevelGraph, d: CaterpillarDecomposition, *,
                  expand: bool = False,
                  limit: int | None = None) -> Iterator[frozenset[str]]:
    """Stream every maximal independent set of `d`'s tree exactly once.

    `L` must be the level graph built from normalize(d). With `expand`,
    stage representatives are widened back to the full original pendant
    lists; otherwise sets use the normalized instance's labels. Stops
    after `limit` sets if given.
    """
    if limit is not None and limit <= 0:
        return
    norm, expansion = normalize(d)
    if L.k != norm.k:
        raise ValueError("level graph does not match the decomposition")
    stage_sets = []
    for v in L.vertices:
        members = reconstruct_stage(v, norm)
        if expand:
            members = expand_set(members, norm, expansion)
        stage_sets.append(members)
    emitted = 0
    union = frozenset().union
    for path in iter_path_indices(L):
        yield union(*(stage_sets[i] for i in path))
        emitted += 1
        if limit is not None and emitted >= limit:
            return


def enumerate_instance(d: CaterpillarDecomposition, *,
                       expand: bool = False,
                       limit: int | None = None) -> Iterator[frozenset[str]]:
    """Convenience: normalize, build the level graph, and enumerate."""
    norm, _ = normalize(d)
    yield from enumerate_mis(build(norm), d, expand=expand, limit=limit)


def verify_mis(t: Tree, members: frozenset[str] | set[str]) -> bool:
    """True iff `members` is an independent set covering every vertex."""
    for v in members:
        if t.neighbors(v) & members:
            return False
    for v in t.vertices:
        if v not in members and not t.neighbors(v) & members:
            return False
    return True

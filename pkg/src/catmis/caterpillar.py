"""Canonical instance model for caterpillar trees with hairs of length <= 2.

An instance is a backbone path v_1..v_k where stage i may carry any
number of length-1 hairs (pendant edges) and at most one length-2 hair
(a 2-vertex path). Stage profiles are encoded 0..3: 0 bare, 1 only
length-1 hairs, 2 only the length-2 hair, 3 both.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .errors import (
    InvalidKError,
    NotGeneralizedCaterpillarError,
    ParseError,
)
from .graph import Tree

__all__ = [
    "StageProfile",
    "StageNames",
    "CaterpillarDecomposition",
    "ExpansionMap",
    "recognize",
    "normalize",
    "expand_set",
    "parse_spec",
    "serialize_spec",
    "gen_random",
    "to_tree",
]

# trim order for backbone candidates: (drop from front, drop from back)
_TRIM_ORDER = ((0, 0), (0, 1), (1, 0), (1, 1), (0, 2), (2, 0), (1, 2), (2, 1), (2, 2))


@dataclass(frozen=True)
class StageProfile:
    """Hair counts at one backbone stage."""

    ones: int  # number of length-1 hairs
    two: bool  # length-2 hair present

    def __post_init__(self):
        if self.ones < 0:
            raise ValueError(f"negative hair count: {self.ones}")

    @property
    def t_code(self) -> int:
        """Profile code: 0 bare, 1 short only, 2 long only, 3 both."""
        if self.ones == 0:
            return 2 if self.two else 0
        return 3 if self.two else 1


@dataclass(frozen=True)
class StageNames:
    """Labels of the hair vertices at one stage.

    `pendants` are the tips of the length-1 hairs (sorted); `long_hair`
    is the (inner, tip) pair of the length-2 hair, if present.
    """

    pendants: tuple[str, ...] = ()
    long_hair: tuple[str, str] | None = None


# per stage, the full list of original length-1 pendants (before normalization)
ExpansionMap = tuple[tuple[str, ...], ...]


@dataclass(frozen=True)
class CaterpillarDecomposition:
    """A backbone path plus per-stage hair profiles and vertex names."""

    backbone: tuple[str, ...]
    stages: tuple[StageProfile, ...]
    names: tuple[StageNames, ...]

    def __post_init__(self):
        k = len(self.backbone)
        if k < 1:
            raise InvalidKError("backbone must have at least one vertex")
        if not (len(self.stages) == len(self.names) == k):
            raise ValueError("stages and names must match backbone length")
        seen: set[str] = set()
        for label in self.all_labels():
            if label in seen:
                raise ValueError(f"duplicate label: {label}")
            seen.add(label)
        for profile, names in zip(self.stages, self.names):
            if profile.ones != len(names.pendants):
                raise ValueError("pendant names disagree with profile")
            if profile.two != (names.long_hair is not None):
                raise ValueError("long-hair name disagrees with profile")

    @property
    def k(self) -> int:
        return len(self.backbone)

    def t_codes(self) -> tuple[int, ...]:
        return tuple(p.t_code for p in self.stages)

    def all_labels(self):
        for i, v in enumerate(self.backbone):
            yield v
            yield from self.names[i].pendants
            if self.names[i].long_hair is not None:
                yield from self.names[i].long_hair

    def vertex_count(self) -> int:
        return sum(1 for _ in self.all_labels())

    def is_normalized(self) -> bool:
        return all(p.ones <= 1 for p in self.stages)


def to_tree(d: CaterpillarDecomposition) -> Tree:
    """Materialize the decomposition as a Tree."""
    edges: list[tuple[str, str]] = []
    for i in range(d.k - 1):
        edges.append((d.backbone[i], d.backbone[i + 1]))
    for v, names in zip(d.backbone, d.names):
        for h in names.pendants:
            edges.append((v, h))
        if names.long_hair is not None:
            inner, tip = names.long_hair
            edges.append((v, inner))
            edges.append((inner, tip))
    return Tree(d.all_labels(), edges)


def _bfs_farthest(t: Tree, start: str) -> tuple[str, dict[str, str]]:
    """Farthest vertex from start (lexicographic tie-break) and BFS parents."""
    parent: dict[str, str] = {start: start}
    dist = {start: 0}
    queue = deque([start])
    best, best_dist = start, 0
    while queue:
        v = queue.popleft()
        for w in sorted(t.neighbors(v)):
            if w not in parent:
                parent[w] = v
                dist[w] = dist[v] + 1
                if dist[w] > best_dist or (dist[w] == best_dist and w < best):
                    best, best_dist = w, dist[w]
                queue.append(w)
    return best, parent


def _diameter_path(t: Tree) -> list[str]:
    a, _ = _bfs_farthest(t, min(t.vertices))
    b, parent = _bfs_farthest(t, a)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()  # runs a .. b
    return path


def _try_backbone(t: Tree, backbone: list[str]) -> CaterpillarDecomposition | None:
    """Validate a backbone candidate and build its decomposition, or None.

    Every off-backbone component must be a single pendant or a 2-vertex
    path hanging off one backbone vertex, with at most one 2-vertex path
    per stage.
    """
    on_backbone = set(backbone)
    stages: list[StageProfile] = []
    names: list[StageNames] = []
    covered = 0
    for v in backbone:
        pendants: list[str] = []
        long_hair: tuple[str, str] | None = None
        for w in sorted(t.neighbors(v)):
            if w in on_backbone:
                continue
            rest = t.neighbors(w) - {v}
            if not rest:
                pendants.append(w)
                covered += 1
            elif len(rest) == 1:
                (x,) = rest
                if x in on_backbone or t.neighbors(x) != {w}:
                    return None  # component longer or branched
                if long_hair is not None:
                    return None  # second length-2 hair at this stage
                long_hair = (w, x)
                covered += 2
            else:
                return None  # branching right at the attachment vertex
        stages.append(StageProfile(len(pendants), long_hair is not None))
        names.append(StageNames(tuple(pendants), long_hair))
    if covered != len(t) - len(backbone):
        return None  # some component attaches to no backbone vertex
    return CaterpillarDecomposition(tuple(backbone), tuple(stages), tuple(names))


def recognize(t: Tree) -> CaterpillarDecomposition:
    """Recognize a tree as a caterpillar with hairs of length <= 2.

    Deterministic: computes a diameter path by double BFS (lexicographic
    tie-breaking), then tries the nine candidates obtained by trimming
    up to two vertices from each end, in a fixed order, accepting the
    first valid one. Raises NotGeneralizedCaterpillarError otherwise.
    """
    diam = _diameter_path(t)
    for front, back in _TRIM_ORDER:
        candidate = diam[front : len(diam) - back]
        if not candidate:
            continue
        d = _try_backbone(t, candidate)
        if d is not None:
            return d
    raise NotGeneralizedCaterpillarError(
        "tree has a hair longer than two or two long hairs at one stage"
    )


def normalize(d: CaterpillarDecomposition) -> tuple[CaterpillarDecomposition, ExpansionMap]:
    """Collapse multiple length-1 hairs per stage to one representative.

    The representative is the lexicographically least pendant. The
    returned expansion map lists, per stage, the original pendants so
    enumerated sets can be expanded back: a representative stands for
    all pendants of its stage.
    """
    expansion: list[tuple[str, ...]] = []
    stages: list[StageProfile] = []
    names: list[StageNames] = []
    for profile, stage_names in zip(d.stages, d.names):
        expansion.append(stage_names.pendants)
        if profile.ones > 1:
            keep = (min(stage_names.pendants),)
            stages.append(StageProfile(1, profile.two))
            names.append(StageNames(keep, stage_names.long_hair))
        else:
            stages.append(profile)
            names.append(stage_names)
    norm = CaterpillarDecomposition(d.backbone, tuple(stages), tuple(names))
    return norm, tuple(expansion)


def expand_set(members: frozenset[str], norm: CaterpillarDecomposition,
               expansion: ExpansionMap) -> frozenset[str]:
    """Replace stage representatives by the full original pendant lists."""
    extra: list[str] = []
    for stage_names, pendants in zip(norm.names, expansion):
        if stage_names.pendants and stage_names.pendants[0] in members:
            extra.extend(pendants)
    return members | frozenset(extra)


def _synthesized(profiles: list[StageProfile]) -> CaterpillarDecomposition:
    """Decomposition over generated labels v{i}, h{i}_{j}, l{i}, m{i}."""
    backbone = tuple(f"v{i}" for i in range(1, len(profiles) + 1))
    names = []
    for i, p in enumerate(profiles, start=1):
        pendants = tuple(f"h{i}_{j}" for j in range(1, p.ones + 1))
        long_hair = (f"l{i}", f"m{i}") if p.two else None
        names.append(StageNames(pendants, long_hair))
    return CaterpillarDecomposition(backbone, tuple(profiles), tuple(names))


def parse_spec(text: str) -> CaterpillarDecomposition:
    """Parse instance-spec text: line 1 is k, then k lines "ones two"."""
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty instance spec")
    try:
        k = int(lines[0])
    except ValueError:
        raise ParseError(f"expected integer on first line, got {lines[0]!r}") from None
    if k < 1:
        raise InvalidKError(f"need k >= 1, got {k}")
    if len(lines) != k + 1:
        raise ParseError(f"expected {k} stage lines, got {len(lines) - 1}")
    profiles: list[StageProfile] = []
    for lineno, line in enumerate(lines[1:], start=2):
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected 'ones two'")
        try:
            ones, two = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"line {lineno}: expected integers") from None
        if ones < 0 or two not in (0, 1):
            raise ParseError(f"line {lineno}: need ones >= 0 and two in {{0,1}}")
        profiles.append(StageProfile(ones, bool(two)))
    return _synthesized(profiles)


def serialize_spec(d: CaterpillarDecomposition) -> str:
    """Canonical instance-spec text (round-trips with parse_spec)."""
    lines = [str(d.k)]
    lines.extend(f"{p.ones} {1 if p.two else 0}" for p in d.stages)
    return "\n".join(lines) + "\n"


def gen_random(k: int, max_ones: int, p_two: float, seed: int) -> CaterpillarDecomposition:
    """Random instance: ones ~ uniform{0..max_ones}, two ~ Bernoulli(p_two).

    Deterministic for a given seed on every platform.
    """
    if k < 1:
        raise InvalidKError(f"need k >= 1, got {k}")
    if max_ones < 0:
        raise ValueError(f"need max_ones >= 0, got {max_ones}")
    if not 0.0 <= p_two <= 1.0:
        raise ValueError(f"need 0 <= p_two <= 1, got {p_two}")
    rng = random.Random(seed)
    profiles = [
        StageProfile(rng.randint(0, max_ones), rng.random() < p_two)
        for _ in range(k)
    ]
    return _synthesized(profiles)

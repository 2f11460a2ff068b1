"""Brute-force ground truth: scan all 2^n vertex subsets of a tree.

Kept deliberately independent of the level-graph machinery so the two
routes cannot share a bug. The scan is exhaustive (every subset is
tested for independence and coverage); it is vectorized in fixed-size
chunks purely for speed.
"""

from __future__ import annotations

import numpy as np

from .errors import TooLargeError
from .graph import Tree

__all__ = ["MAX_ORACLE_VERTICES", "oracle_enumerate"]

MAX_ORACLE_VERTICES = 30

_CHUNK = 1 << 20


def oracle_enumerate(t: Tree) -> list[frozenset[str]]:
    """All maximal independent sets of `t`, canonically sorted.

    Raises TooLargeError above MAX_ORACLE_VERTICES vertices.
    """
    labels = sorted(t.vertices)
    n = len(labels)
    if n > MAX_ORACLE_VERTICES:
        raise TooLargeError(f"{n} vertices exceed the oracle guard of {MAX_ORACLE_VERTICES}")
    position = {v: i for i, v in enumerate(labels)}
    edge_masks = []
    closed_masks = []
    for i, v in enumerate(labels):
        closed = 1 << i
        for w in t.neighbors(v):
            j = position[w]
            closed |= 1 << j
            if i < j:
                edge_masks.append((1 << i) | (1 << j))
        closed_masks.append(closed)

    hits: list[np.ndarray] = []
    total = 1 << n
    for lo in range(0, total, _CHUNK):
        masks = np.arange(lo, min(lo + _CHUNK, total), dtype=np.int64)
        keep = np.ones(masks.shape, dtype=bool)
        for em in edge_masks:
            keep &= (masks & em) != em  # not both endpoints of an edge
        for cm in closed_masks:
            keep &= (masks & cm) != 0  # every closed neighborhood is hit
        hits.append(masks[keep])

    family = []
    for mask in np.concatenate(hits).tolist():
        family.append(frozenset(labels[i] for i in range(n) if mask >> i & 1))
    return sorted(family, key=lambda s: tuple(sorted(s)))

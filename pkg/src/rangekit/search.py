"""Decoder symbol-identification strategies.

Every strategy answers the same question: given a code value c in
[0, totalCount), find the symbol index i with hk[i] <= c < hk[i+1].
The linear-model strategies operate on the raw boundary array ``hk``
(K+1 entries) and return ``(symbol, iterations)`` so callers can collect
iteration statistics; the binary-indexed strategy works on a FenwickModel
and additionally returns the symbol's lower boundary, which the decoder
needs anyway.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fenwick_model import FenwickModel

#: Stable strategy identifiers for the CLI and CSV output.
STRATEGIES = ("lin-fwd", "lin-bwd", "log", "log2", "exp", "tree", "table", "bi")

NO_CHILD = -1


def linear_backward(c: int, hk) -> tuple[int, int]:
    """Scan boundaries from the top down; K - i probes."""
    i = len(hk) - 2
    probes = 1
    while c < hk[i]:
        i -= 1
        probes += 1
    return i, probes


def linear_forward(c: int, hk) -> tuple[int, int]:
    """Scan boundaries from the bottom up; i + 1 probes."""
    i = 1
    while c >= hk[i]:
        i += 1
    return i - 1, i


def logarithmic(c: int, hk) -> tuple[int, int]:
    """Plain bisection over the boundary array; <= ceil(log2 K)+1 iterations."""
    bottom = 0
    top = len(hk) - 1
    iters = 0
    while True:
        iters += 1
        i = (top + bottom) >> 1
        if c < hk[i]:
            top = i
        else:
            bottom = i + 1
        if top == bottom:
            return bottom - 1, iters


def best_split(hk, bottom: int, top: int) -> int:
    """Boundary index inside (bottom, top) that best halves the count mass.

    Ties break toward the smaller index so tree construction is
    deterministic.
    """
    if top - bottom < 2:
        raise ValueError("range has no interior boundary")
    ref = hk[top] + hk[bottom]
    best_j = bottom + 1
    best = abs(2 * hk[best_j] - ref)
    for j in range(bottom + 2, top):
        d = abs(2 * hk[j] - ref)
        if d < best:
            best = d
            best_j = j
    return best_j


@dataclass
class SearchTree:
    """Static binary search tree over symbol indices (child arrays + root)."""
    left: list[int]
    right: list[int]
    root: int


def build_search_tree(hk) -> SearchTree:
    """Recursively split at the most count-balanced boundary.

    Built iteratively (explicit work stack) because a heavily skewed
    distribution can produce a tree as deep as K.
    """
    k = len(hk) - 1
    left = [NO_CHILD] * k
    right = [NO_CHILD] * k

    def node_for(bottom, top):
        # symbols bottom..top-1; single symbols become leaves
        if top - bottom == 1:
            return bottom
        return best_split(hk, bottom, top)

    root = node_for(0, k)
    stack = [(root, 0, k)]
    while stack:
        j, bottom, top = stack.pop()
        if top - bottom == 1:
            continue
        lc = node_for(bottom, j)
        left[j] = lc
        stack.append((lc, bottom, j))
        if j + 1 < top:
            rc = node_for(j + 1, top)
            right[j] = rc
            stack.append((rc, j + 1, top))
    return SearchTree(left, right, root)


def tree_search(c: int, hk, tree: SearchTree) -> tuple[int, int]:
    """Follow the prepared child arrays; static models only.

    A tree built for stale boundaries silently returns wrong symbols, so
    adaptive coders must not use it.
    """
    i = tree.root
    left = tree.left
    right = tree.right
    iters = 0
    while True:
        iters += 1
        if c < hk[i]:
            i = left[i]
        elif c < hk[i + 1]:
            return i, iters
        else:
            i = right[i]


def determine_initial_split(hk) -> int:
    """Smallest boundary reaching half the total, nudged to the better neighbour."""
    k = len(hk) - 1
    total = hk[k]
    if total < 1:
        raise ValueError("empty model")
    i_mid = 0
    while 2 * hk[i_mid] < total:
        i_mid += 1
    if hk[i_mid] > total - hk[i_mid - 1]:
        i_mid -= 1
    return i_mid


def adapt_initial_split(k: int, i_mid: int, sym: int) -> int:
    """Move the initial split one step after decoding symbol ``sym``.

    Note the branch direction: i_mid < sym decrements.  Clamped to [0, k].
    """
    if i_mid < sym:
        if i_mid > 0:
            i_mid -= 1
    else:
        if i_mid < k:
            i_mid += 1
    return i_mid


def log2_search(c: int, hk, i_mid: int) -> tuple[int, int]:
    """Bisection whose first probe lands at ``i_mid`` instead of K/2."""
    bottom = 0
    top = len(hk) - 1
    i = i_mid
    iters = 0
    while True:
        iters += 1
        if c < hk[i]:
            top = i
        else:
            bottom = i + 1
        i = (top + bottom) >> 1
        if top == bottom:
            return bottom - 1, iters


def exponential(c: int, hk) -> tuple[int, int]:
    """Galloping range pre-selection followed by bisection.

    The doubling phase may overshoot K when K is not a power of two; the
    top bound is clamped before the bisection phase.
    """
    k = len(hk) - 1
    top = 1
    iters = 0
    while top < k and hk[top] <= c:
        top <<= 1
        iters += 1
    bottom = top >> 1
    if top > k:
        top = k
    while True:
        iters += 1
        i = (top + bottom) >> 1
        if c < hk[i]:
            top = i
        else:
            bottom = i + 1
        if top == bottom:
            return bottom - 1, iters


class LookupTable:
    """Direct code-value-to-symbol mapping; O(1) lookup, O(K) update.

    Symbol i occupies h[i] consecutive slots.  After an adaptive increment
    the table grows by one slot, so it must be allocated generously up
    front when counts can keep growing.
    """

    __slots__ = ("t",)

    def __init__(self, t: list[int]):
        self.t = t

    @classmethod
    def create(cls, counts) -> "LookupTable":
        if sum(counts) == 0:
            raise ValueError("cannot build lookup table for empty model")
        t: list[int] = []
        for i, h in enumerate(counts):
            if h > 0:  # zero-count symbols own no code values
                t.extend([i] * h)
        return cls(t)

    def lookup(self, c: int) -> int:
        return self.t[c]

    def update(self, hk, sym: int) -> list[int]:
        """Repair the table after the count of ``sym`` was incremented.

        ``hk`` must already reflect the increment.  Exactly one slot per
        symbol index >= sym moves (the last slot of each run), at most
        K - sym writes.  Returns the written positions.
        """
        k = len(hk) - 1
        t = self.t
        written = []
        i = sym
        while True:
            idx = hk[i + 1] - 1
            if idx == len(t):
                t.append(i)
            else:
                t[idx] = i
            written.append(idx)
            i += 1
            if i == k:
                break
        return written


def binary_indexed(c: int, model: FenwickModel) -> tuple[int, int, int]:
    """Power-of-two descent over the hierarchical array.

    Returns ``(symbol, lower_bound, iterations)`` where ``lower_bound``
    equals ``model.cum(symbol)``; the accumulated subtractions are exactly
    the symbol's cumulative count, which saves the decoder a second query.
    Always log2(topLevIdx)+1 iterations.
    """
    v = model.v
    k = model.k
    step = model.top_lev_idx
    bottom = 0
    low = 0
    iters = 0
    while step:
        iters += 1
        test = bottom + step
        # bounds test first: the probe may overrun when K is not a power of two
        if test <= k and c >= v[test]:
            bottom = test
            c -= v[bottom]
            low += v[bottom]
        step >>= 1
    return bottom, low, iters

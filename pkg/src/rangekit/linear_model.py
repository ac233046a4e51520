"""Order-0 frequency model with an explicit cumulative-count array.

The model keeps the per-symbol counts and their exclusive prefix sums side
by side, so a cumulative count is a single array read and an update is a
linear sweep over the tail of the prefix-sum array.
"""

from __future__ import annotations

MAX_TOTALCOUNT = 1 << 20


class LinearModel:
    """Symbol counts plus their exclusive prefix sums.

    The prefix-sum array ``hk`` has K+1 entries: ``hk[0]`` is always 0,
    ``hk[i+1] == hk[i] + h[i]`` and ``hk[K]`` equals ``total_count``.
    ``hk[i]`` is the lower interval boundary of symbol i.

    In adaptive mode every count stays >= 1 so no subinterval collapses;
    static models may carry zero counts for symbols known to be absent.
    """

    __slots__ = (
        "k", "h", "hk", "total_count", "adaptive",
        "update_accesses", "rescale_accesses",
    )

    def __init__(self, counts, adaptive: bool = True):
        counts = list(counts)
        if not counts:
            raise ValueError("alphabet must contain at least one symbol")
        if any(c < 0 for c in counts):
            raise ValueError("counts must be non-negative")
        if adaptive and any(c == 0 for c in counts):
            raise ValueError("adaptive mode requires every count >= 1")
        total = sum(counts)
        if total > MAX_TOTALCOUNT:
            raise OverflowError(
                f"total count {total} exceeds MAX_TOTALCOUNT={MAX_TOTALCOUNT}; "
                "caller must pre-normalize"
            )
        self.k = len(counts)
        self.h = counts
        hk = [0] * (self.k + 1)
        s = 0
        for i, c in enumerate(counts):
            s += c
            hk[i + 1] = s
        self.hk = hk
        self.total_count = total
        self.adaptive = adaptive
        # instrumentation: one tick per statement touching h/hk
        self.update_accesses = 0
        self.rescale_accesses = 0

    @classmethod
    def flat(cls, k: int) -> "LinearModel":
        """Adaptive starting point: every symbol gets a count of one."""
        if k < 1:
            raise ValueError("invalid alphabet size")
        return cls([1] * k)

    def cum(self, i: int) -> int:
        """Cumulative count ``hk[i]`` for a boundary index 0..K."""
        return self.hk[i]

    def count(self, sym: int) -> int:
        return self.h[sym]

    def update(self, sym: int) -> bool:
        """Increment the count of ``sym``; returns True if a rescale fired.

        All boundaries above the symbol move up by one, so the cost is
        K - sym writes.  When the total has reached MAX_TOTALCOUNT the
        model is rescaled before the increment.
        """
        if not self.adaptive:
            raise ValueError("static model cannot be updated")
        rescaled = False
        if self.total_count >= MAX_TOTALCOUNT:
            self.rescale()
            rescaled = True
        self.h[sym] += 1
        hk = self.hk
        for j in range(sym + 1, self.k + 1):
            hk[j] += 1
        self.update_accesses += self.k - sym + 1
        self.total_count += 1
        return rescaled

    def rescale(self) -> None:
        """Halve every count (rounding up, so counts never reach zero)."""
        h = self.h
        for i in range(self.k):
            h[i] -= h[i] >> 1
        s = 0
        hk = self.hk
        for i in range(self.k):
            s += h[i]
            hk[i + 1] = s
        self.rescale_accesses += 3 * self.k
        self.total_count = s

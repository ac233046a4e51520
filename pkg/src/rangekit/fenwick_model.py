"""Binary-indexed (Fenwick) cumulative-count model.

Cumulative counts are stored implicitly in a hierarchical array ``v``:
each entry covers a power-of-two span and a cumulative count is the sum
of ``v`` along the chain obtained by repeatedly clearing the lowest set
bit.  Queries and updates are O(log K) instead of O(K).

Two rescaling procedures are provided.  The original one halves each
symbol count and pushes the correction through the update chain; the
cheaper single-pass variant halves the ``v`` entries directly, clamping
even-index entries so every implied count stays >= 1.  The two variants
round differently and are NOT interchangeable mid-stream.
"""

from __future__ import annotations

from .linear_model import MAX_TOTALCOUNT


def top_level_index(k: int) -> int:
    """Root probe position: half of the smallest power of two > k."""
    if k < 1:
        raise ValueError("invalid alphabet size")
    return 1 << (k.bit_length() - 1)


def forward_step(i: int) -> int:
    """Lowest set bit of i; the stride to the next entry on the update chain."""
    return i & -i


def parent_index(i: int) -> int:
    """i with its lowest set bit cleared; the next entry on the query chain."""
    return i & (i - 1)


class FenwickModel:
    """Hierarchical cumulative-count array with O(log K) query/update.

    ``v`` has K+1 slots; slot 0 is permanently 0 (the lower boundary of
    symbol 0 never moves).  ``total_count`` mirrors the full prefix sum so
    the top of the array never has to be queried.

    Instrumentation counters tick once per statement that reads or writes
    ``v`` (repeated reads of the same slot inside one statement coalesce),
    split by operation kind so the bench harness can report update and
    rescale work separately.
    """

    __slots__ = (
        "k", "v", "total_count", "top_lev_idx", "adaptive", "rescale_variant",
        "query_accesses", "update_accesses", "rescale_accesses",
    )

    def __init__(self, counts, adaptive: bool = True, rescale_variant: str = "orig"):
        counts = list(counts)
        if not counts:
            raise ValueError("alphabet must contain at least one symbol")
        if any(c < 0 for c in counts):
            raise ValueError("counts must be non-negative")
        if adaptive and any(c == 0 for c in counts):
            raise ValueError("adaptive mode requires every count >= 1")
        if rescale_variant not in ("orig", "new"):
            raise ValueError(f"unknown rescale variant: {rescale_variant!r}")
        total = sum(counts)
        if total > MAX_TOTALCOUNT:
            raise OverflowError(
                f"total count {total} exceeds MAX_TOTALCOUNT={MAX_TOTALCOUNT}"
            )
        self.k = len(counts)
        self.v = [0] * (self.k + 1)
        self.total_count = total
        self.top_lev_idx = top_level_index(self.k)
        self.adaptive = adaptive
        self.rescale_variant = rescale_variant
        self.query_accesses = 0
        self.update_accesses = 0
        self.rescale_accesses = 0
        # one canonical mutation path: K generalized chain additions
        for sym, c in enumerate(counts):
            if c:
                self._add(sym, c)

    @classmethod
    def flat(cls, k: int, rescale_variant: str = "orig") -> "FenwickModel":
        return cls([1] * k, rescale_variant=rescale_variant)

    def _add(self, sym: int, delta: int) -> None:
        i = sym + 1
        v = self.v
        k = self.k
        while i <= k:
            v[i] += delta
            i += i & -i

    def cum(self, i: int) -> int:
        """Cumulative count ``h_k[i]``: sum of v along the parent chain."""
        if not 0 <= i <= self.k:
            raise IndexError("boundary index out of range")
        s = 0
        v = self.v
        n = 0
        while i > 0:
            s += v[i]
            i &= i - 1
            n += 1
        self.query_accesses += n
        return s

    def count(self, sym: int) -> int:
        """Single count ``h[sym]`` via the predecessor-subtraction walk."""
        i = sym + 1
        v = self.v
        h = v[i]
        n = 1
        parent = i & (i - 1)
        i -= 1
        while parent != i:
            h -= v[i]
            n += 1
            i &= i - 1
        self.query_accesses += n
        return h

    def update(self, sym: int) -> bool:
        """Increment the count of ``sym``; returns True if a rescale fired."""
        if not self.adaptive:
            raise ValueError("static model cannot be updated")
        rescaled = False
        if self.total_count >= MAX_TOTALCOUNT:
            self.rescale()
            rescaled = True
        i = sym + 1
        v = self.v
        k = self.k
        n = 0
        while i <= k:
            v[i] += 1
            n += 1
            i += i & -i
        self.update_accesses += n
        self.total_count += 1
        return rescaled

    def rescale(self) -> None:
        if self.rescale_variant == "new":
            self.rescale_new()
        else:
            self.rescale_orig()

    def rescale_orig(self) -> None:
        """Per-symbol rescale: every count goes from h to ceil(h/2).

        For each symbol the count is derived, halved, and the halving is
        subtracted along the whole update chain, so the cost grows with
        K log K.  Bit-identical to LinearModel.rescale.
        """
        v = self.v
        k = self.k
        acc = 0
        for sym in range(k):
            # inline count derivation so the access tally covers it
            i = sym + 1
            h = v[i]
            acc += 1
            parent = i & (i - 1)
            i -= 1
            while parent != i:
                h -= v[i]
                acc += 1
                i &= i - 1
            h >>= 1
            i = sym + 1
            while i <= k:
                v[i] -= h
                acc += 1
                i += i & -i
        s = 0
        i = k
        while i > 0:
            s += v[i]
            acc += 1
            i &= i - 1
        self.total_count = s
        self.rescale_accesses += acc

    def rescale_new(self) -> None:
        """Single ascending pass that halves the v entries in place.

        Odd slots hold a bare count and halve independently.  An even slot
        must stay strictly above the sum of its already-halved lower
        siblings (otherwise an implied count would drop to zero), so the
        halved value is clamped from below.  Rounds differently from
        rescale_orig; streams must stick to one variant.
        """
        v = self.v
        k = self.k
        acc = 0
        for i in range(1, k + 1):
            if i & 1:
                v[i] -= v[i] >> 1
                acc += 1
            else:
                test_val = v[i] - (v[i] >> 1)
                acc += 1
                j = i - 1
                compare_val = 0
                m = i
                while True:
                    compare_val += v[j]
                    acc += 1
                    j &= j - 1
                    m >>= 1
                    if m & 1:
                        break
                v[i] = max(compare_val + 1, test_val)
                acc += 1
        s = 0
        i = k
        while i > 0:
            s += v[i]
            acc += 1
            i &= i - 1
        self.total_count = s
        self.rescale_accesses += acc

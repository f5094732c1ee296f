"""Frequency-hop sequence sets and the exact Hamming-correlation engine.

Symbols are dense integer indices 0..v-1.  Alphabets produced by the
product extension keep their factor structure for display, flattened as
index = left_coordinate * old_size + old_index (left factor major).

Correlation values are exact integer hit counts, computed by direct
counting per (pair, shift).  The in-phase autocorrelation peak N is kept
in the profile table but excluded from the reported maxima; the
crosscorrelation maximum ranges over all shifts including zero.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Alphabet:
    """Symbol universe of size `size`; `factors` records product structure.

    Empty factors means a plain alphabet.  For a product alphabet the
    leftmost factor is the newest extension coordinate and the factor
    product must equal size.
    """

    size: int
    factors: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.size, int) or isinstance(self.size, bool) or self.size < 1:
            raise ValueError(f"alphabet size must be a positive integer, got {self.size!r}")
        object.__setattr__(self, "factors", tuple(self.factors))
        prod = 1
        for f in self.factors:
            if not isinstance(f, int) or isinstance(f, bool) or f < 1:
                raise ValueError(f"alphabet factors must be positive integers, got {f!r}")
            prod *= f
        if self.factors and prod != self.size:
            raise ValueError(f"factor product {prod} != alphabet size {self.size}")

    @property
    def kind(self) -> str:
        return "product" if self.factors else "plain"


@dataclass(frozen=True)
class Fhs:
    """One hopping sequence: a length-N tuple of symbol indices."""

    symbols: tuple[int, ...]
    alphabet: Alphabet

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if len(self.symbols) < 1:
            raise ValueError("a sequence must have at least one symbol")
        for t, s in enumerate(self.symbols):
            if not isinstance(s, int) or isinstance(s, bool) or not 0 <= s < self.alphabet.size:
                raise ValueError(
                    f"position {t}: symbol {s!r} out of range for alphabet size {self.alphabet.size}"
                )

    @property
    def length(self) -> int:
        return len(self.symbols)


@dataclass(frozen=True)
class FhsSet:
    """M sequences of one common length over one common alphabet."""

    sequences: tuple[Fhs, ...]
    label: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "sequences", tuple(self.sequences))
        if not self.sequences:
            raise ValueError("a sequence set must contain at least one sequence")
        first = self.sequences[0]
        for i, seq in enumerate(self.sequences):
            if seq.length != first.length:
                raise ValueError(
                    f"sequence {i} has length {seq.length}, expected {first.length}"
                )
            if seq.alphabet != first.alphabet:
                raise ValueError(f"sequence {i} uses a different alphabet")

    @property
    def num_sequences(self) -> int:
        return len(self.sequences)

    @property
    def length(self) -> int:
        return self.sequences[0].length

    @property
    def alphabet(self) -> Alphabet:
        return self.sequences[0].alphabet

    def symbol_rows(self) -> list[tuple[int, ...]]:
        return [seq.symbols for seq in self.sequences]


def fhs_set_from_rows(rows, alphabet_size: int, factors: tuple[int, ...] = (),
                      label: str | None = None) -> FhsSet:
    """Convenience constructor from plain integer rows."""
    alph = Alphabet(alphabet_size, factors)
    return FhsSet(tuple(Fhs(tuple(row), alph) for row in rows), label=label)


@dataclass(frozen=True)
class CorrelationProfile:
    """Full Hamming-correlation table with its nontrivial maxima.

    table[(i, j)] for i <= j holds the N correlation counts of the pair
    over all cyclic shifts.  h_auto excludes the in-phase peak at shift 0;
    h_cross includes shift 0.  With a single sequence h_cross is 0.
    """

    h_auto: int
    h_cross: int
    length: int
    table: dict

    @property
    def h_max(self) -> int:
        return max(self.h_auto, self.h_cross)


@dataclass(frozen=True)
class OccurrenceMap:
    """Per symbol, the (sequence, position) sites where it occurs.

    Sites are in row-major order (sequence index major).  multiplicity is
    the largest site count over all symbols.
    """

    positions: tuple[tuple[tuple[int, int], ...], ...]
    multiplicity: int


def worker_count() -> int:
    """Parallelism cap from FHS_THREADS (default 1, serial)."""
    raw = os.environ.get("FHS_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def hamming_correlation(x: Fhs, y: Fhs, shift: int) -> int:
    """Number of positions where x agrees with y cyclically shifted by `shift`."""
    if x.length != y.length:
        raise ValueError(f"length mismatch: {x.length} vs {y.length}")
    if x.alphabet != y.alphabet:
        raise ValueError("sequences use different alphabets")
    n = x.length
    if not 0 <= shift < n:
        raise ValueError(f"shift {shift} out of range 0..{n - 1}")
    ys = y.symbols
    return sum(1 for t, a in enumerate(x.symbols) if a == ys[(t + shift) % n])


def pair_correlation_vector(x_row, y_row) -> np.ndarray:
    """Exact correlation counts of one pair at every shift, by direct counting.

    Shift blocks are sized to keep the comparison window within a few MB.
    """
    a = np.asarray(x_row, dtype=np.int64)
    b = np.asarray(y_row, dtype=np.int64)
    n = a.size
    bb = np.concatenate([b, b])
    out = np.empty(n, dtype=np.int64)
    block = max(1, (1 << 22) // max(1, n))
    windows = np.lib.stride_tricks.sliding_window_view(bb, n)
    for s0 in range(0, n, block):
        s1 = min(n, s0 + block)
        out[s0:s1] = (windows[s0:s1] == a[None, :]).sum(axis=1)
    return out


def correlation_profile(s: FhsSet) -> CorrelationProfile:
    """Exhaustive correlation table over all pairs i <= j and all shifts."""
    rows = [np.asarray(r, dtype=np.int64) for r in s.symbol_rows()]
    m = s.num_sequences
    n = s.length
    pairs = [(i, j) for i in range(m) for j in range(i, m)]

    def compute(pair):
        i, j = pair
        return pair, pair_correlation_vector(rows[i], rows[j])

    workers = worker_count()
    if workers > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(compute, pairs))
    else:
        results = [compute(p) for p in pairs]

    table = {}
    h_auto = 0
    h_cross = 0
    for (i, j), vec in results:
        table[(i, j)] = tuple(int(v) for v in vec)
        if i == j:
            if n > 1:
                h_auto = max(h_auto, int(vec[1:].max()))
        else:
            h_cross = max(h_cross, int(vec.max()))
    return CorrelationProfile(h_auto=h_auto, h_cross=h_cross, length=n, table=table)


def occurrence_map(s: FhsSet) -> OccurrenceMap:
    """All occurrence sites of every symbol, row-major, plus the multiplicity."""
    sites: list[list[tuple[int, int]]] = [[] for _ in range(s.alphabet.size)]
    for i, seq in enumerate(s.sequences):
        for t, sym in enumerate(seq.symbols):
            sites[sym].append((i, t))
    mult = max(len(lst) for lst in sites)
    return OccurrenceMap(
        positions=tuple(tuple(lst) for lst in sites),
        multiplicity=mult,
    )

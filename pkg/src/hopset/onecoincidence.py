"""One-coincidence sequence families and their exact verification.

A one-coincidence set has maximum autocorrelation 0 at every nontrivial
shift and maximum crosscorrelation at most 1 over all shifts.  Three
generators are provided:

  dilation   p-1 sequences (i * g^j mod q) of length q over Z_q,
             each a permutation of Z_q fixing 0
  translate  p sequences (g^i + j mod q) of length (p-1)p^(a-1) over Z_q
  field      q sequences (g^i + j) of length q-1 over GF(q), with field
             addition and elements numbered by the canonical table order

verify_one_coincidence computes the exact (h_auto, h_cross) maxima.  The
generic route enumerates every coincidence of every pair at every shift.
Two certificate routes handle the large structured families within the
time budget: they first prove, elementwise against the actual data, that
the input is a common-translate or a linear-dilation family, and then
derive every correlation count exactly from the certified form.  All
routes agree exactly and are cross-checked in the test suite.
"""

from __future__ import annotations

import functools

import numpy as np

from .numtheory import PrimePower, gf_construct, primitive_root_mod_prime_power


class OneCoincidenceSet:
    """Verified one-coincidence family over Z_modulus (or a field's indices).

    The primary representation is an integer matrix (one sequence per
    row); `sequences` materializes the tuple form on first use.  The
    constructor verifies the defining property unless a generator already
    verified the exact matrix it passes in.
    """

    __slots__ = ("modulus", "kind", "p", "a", "generator", "_matrix", "_rows")

    def __init__(self, sequences, modulus: int, kind: str, p: int, a: int,
                 generator: int, _preverified_matrix: np.ndarray | None = None):
        self.modulus = modulus
        self.kind = kind
        self.p = p
        self.a = a
        self.generator = generator
        self._rows = None
        if _preverified_matrix is not None:
            mat = _preverified_matrix
        else:
            mat, _ = _as_matrix(sequences, modulus)
            h_auto, h_cross = verify_one_coincidence(mat, modulus)
            if h_auto != 0 or h_cross > 1:
                raise ValueError(
                    f"not a one-coincidence set: h_auto={h_auto}, h_cross={h_cross}"
                )
            # h_cross <= 1 already rules out duplicate rows of length >= 2
            if mat.shape[1] == 1 and np.unique(mat[:, 0]).size != mat.shape[0]:
                raise ValueError("one-coincidence sequences must be pairwise distinct")
        mat.setflags(write=False)
        self._matrix = mat

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def sequences(self) -> tuple[tuple[int, ...], ...]:
        if self._rows is None:
            self._rows = tuple(map(tuple, self._matrix.tolist()))
        return self._rows

    @property
    def size(self) -> int:
        return self._matrix.shape[0]

    @property
    def length(self) -> int:
        return self._matrix.shape[1]

    def _key(self):
        return (self.modulus, self.kind, self.p, self.a, self.generator,
                self._matrix.shape, self._matrix.tobytes())

    def __eq__(self, other):
        if not isinstance(other, OneCoincidenceSet):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (f"OneCoincidenceSet(kind={self.kind!r}, p={self.p}, a={self.a}, "
                f"g={self.generator}, {self.size} sequences of length {self.length} "
                f"over Z_{self.modulus})")


def _verified_family(mat: np.ndarray, modulus: int, kind: str, p: int, a: int,
                     generator: int) -> OneCoincidenceSet:
    h_auto, h_cross = verify_one_coincidence(mat, modulus)
    if h_auto != 0 or h_cross > 1:
        raise ValueError(f"generated {kind} family failed verification: "
                         f"h_auto={h_auto}, h_cross={h_cross}")
    if mat.shape[1] == 1 and np.unique(mat[:, 0]).size != mat.shape[0]:
        raise ValueError(f"generated {kind} family has duplicate sequences")
    return OneCoincidenceSet(None, modulus, kind, p, a, generator,
                             _preverified_matrix=mat)


def _dtype_for(q: int):
    return np.int32 if q <= np.iinfo(np.int32).max // 2 else np.int64


def gen_dilation_set(pp: PrimePower) -> OneCoincidenceSet:
    """The p-1 dilations (0*g^j, 1*g^j, ..., (q-1)*g^j) mod q, j = 0..p-2."""
    if pp.p == 2:
        raise ValueError("dilation family needs an odd prime base")
    q = pp.q
    g = primitive_root_mod_prime_power(pp)
    dtype = _dtype_for(q)
    # row_j[i] = i*g^j mod q; each row is the g-fold gather of the previous
    row1 = (np.arange(q, dtype=np.int64) * g % q).astype(dtype)
    mat = np.empty((pp.p - 1, q), dtype=dtype)
    mat[0] = np.arange(q, dtype=dtype)
    for j in range(1, pp.p - 1):
        mat[j] = row1[mat[j - 1]]
    return _verified_family(mat, q, "dilation", pp.p, pp.a, g)


def gen_translate_set(pp: PrimePower) -> OneCoincidenceSet:
    """The p translates (g^0 + j, ..., g^(d-1) + j) mod q, d = (p-1)p^(a-1)."""
    if pp.p == 2:
        raise ValueError("translate family needs an odd prime base")
    q = pp.q
    g = primitive_root_mod_prime_power(pp)
    d = (pp.p - 1) * pp.p ** (pp.a - 1)
    dtype = _dtype_for(q)
    powers = np.empty(d, dtype=dtype)
    acc = 1
    for i in range(d):
        powers[i] = acc
        acc = acc * g % q
    raw = powers[None, :] + np.arange(pp.p, dtype=dtype)[:, None]
    mat = np.where(raw >= q, raw - q, raw)
    return _verified_family(mat, q, "translate", pp.p, pp.a, g)


def gen_field_set(pp: PrimePower) -> OneCoincidenceSet:
    """The q field translates (g^i + j) of length q-1, j over all of GF(q)."""
    q = pp.q
    table = gf_construct(pp)
    powers = [table.power_of_primitive(i) for i in range(q - 1)]
    rows = tuple(tuple(table.add(e, j) for e in powers) for j in range(q))
    return OneCoincidenceSet(rows, q, "field", pp.p, pp.a, table.primitive_element)


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


def _as_matrix(sequences, modulus: int | None) -> tuple[np.ndarray, int]:
    if isinstance(sequences, np.ndarray):
        if sequences.ndim != 2 or sequences.size == 0:
            raise ValueError("expected a nonempty 2-d sequence matrix")
        if not np.issubdtype(sequences.dtype, np.integer):
            raise ValueError("sequence matrix must be integer-valued")
        mat = sequences
    else:
        rows = [tuple(r) for r in sequences]
        if not rows:
            raise ValueError("empty sequence set")
        n = len(rows[0])
        if n < 1:
            raise ValueError("sequences must be nonempty")
        for i, r in enumerate(rows):
            if len(r) != n:
                raise ValueError(f"ragged input: sequence {i} has length {len(r)}, expected {n}")
        mat = np.array(rows, dtype=np.int64)
    if mat.min() < 0:
        raise ValueError("symbols must be non-negative")
    if modulus is None:
        modulus = int(mat.max()) + 1
    elif mat.max() >= modulus:
        raise ValueError(f"symbol {int(mat.max())} out of range for modulus {modulus}")
    return mat, modulus


def _verify_generic(mat: np.ndarray, n: int) -> tuple[int, int]:
    """Per-pair enumeration of every coincidence, bucketed by shift."""
    l = mat.shape[0]
    mat = mat.astype(np.int64, copy=False)
    pos: list[dict[int, np.ndarray]] = []
    for j in range(l):
        by_symbol: dict[int, np.ndarray] = {}
        for sym in np.unique(mat[j]):
            by_symbol[int(sym)] = np.flatnonzero(mat[j] == sym)
        pos.append(by_symbol)

    def pair_vector(ja: int, jb: int) -> np.ndarray:
        chunks = []
        for sym, pa in pos[ja].items():
            pb = pos[jb].get(sym)
            if pb is not None:
                # hit at shift (s - t) mod n for every t in pa, s in pb
                chunks.append((pb[None, :] - pa[:, None]).ravel())
        if not chunks:
            return np.zeros(n, dtype=np.int64)
        diffs = np.concatenate(chunks) % n
        return np.bincount(diffs, minlength=n)

    h_auto = 0
    h_cross = 0
    for ja in range(l):
        vec = pair_vector(ja, ja)
        if n > 1:
            h_auto = max(h_auto, int(vec[1:].max()))
        for jb in range(ja + 1, l):
            h_cross = max(h_cross, int(pair_vector(ja, jb).max()))
    return h_auto, h_cross


def _verify_translate_certificate(mat: np.ndarray, n: int, m: int) -> tuple[int, int] | None:
    """Exact maxima when every row is row0 plus a constant (mod m).

    Entries are already in [0, m), so row j is a translate of row 0 by
    off_j exactly when every elementwise difference is off_j or off_j - m.
    The correlation of rows (j1, j2) at shift t then equals the number of
    positions i with row0[i] - row0[i+t] = off_j2 - off_j1 (mod m), so one
    histogram pass per shift over row0's differences covers every pair.
    """
    l = mat.shape[0]
    if l < 2:
        return None
    offsets = mat[:, 0] - mat[0, 0]
    offsets = np.where(offsets < 0, offsets + m, offsets)
    if n > 1:  # cheap single-column probe before the full scan
        d1 = mat[:, 1] - mat[0, 1]
        d1 = np.where(d1 < 0, d1 + m, d1)
        if not np.array_equal(d1, offsets):
            return None
    diff = mat - mat[0]
    if not np.array_equal(np.where(diff < 0, diff + m, diff), offsets[:, None]):
        return None
    pair_deltas = offsets[None, :] - offsets[:, None]
    pair_deltas = np.where(pair_deltas < 0, pair_deltas + m, pair_deltas)
    cross_deltas = np.unique(pair_deltas[~np.eye(l, dtype=bool)])
    base = mat[0]
    h_auto = 0
    h_cross = 0
    doubled = np.concatenate([base, base])
    for t in range(n):
        d = base - doubled[t:t + n]
        hist = np.bincount(np.where(d < 0, d + m, d), minlength=m)
        if t > 0:
            h_auto = max(h_auto, int(hist[0]))
        h_cross = max(h_cross, int(hist[cross_deltas].max()))
    return h_auto, h_cross


def _verify_linear_certificate(mat: np.ndarray, n: int, m: int) -> tuple[int, int] | None:
    """Exact maxima when every row is (i * c_j mod m) with c_j a unit, n = m.

    With entries in [0, m) and mat[:,0] = 0, the linear form holds exactly
    when consecutive column differences are everywhere c_j or c_j - m.
    Certified rows are permutations, so nontrivial autocorrelations are 0.
    The pair (j1, j2) has w = gcd(c_j1 - c_j2, m) coincidences at shifts
    divisible by w and none elsewhere (w = m for duplicate rows), so the
    cross maximum is the largest such gcd over all pairs.
    """
    l = mat.shape[0]
    if l < 2 or n != m or n < 2:
        return None
    if mat[:, 0].any():
        return None
    coeffs = mat[:, 1]
    step = mat[:, 1:] - mat[:, :-1]
    if not np.logical_or(step == coeffs[:, None], step == coeffs[:, None] - m).all():
        return None
    if not (np.gcd(coeffs.astype(np.int64), m) == 1).all():
        return None
    delta = coeffs[None, :].astype(np.int64) - coeffs[:, None]
    delta[delta < 0] += m
    w = np.gcd(delta, m)
    np.fill_diagonal(w, 0)
    return 0, int(w.max())


def verify_one_coincidence(sequences, modulus: int | None = None) -> tuple[int, int]:
    """Exact (h_auto, h_cross) maxima of a sequence set over Z_modulus.

    h_auto ranges over nontrivial shifts only; h_cross over all shifts
    including zero.  A single sequence reports h_cross = 0.
    """
    if isinstance(sequences, OneCoincidenceSet):
        if modulus is None:
            modulus = sequences.modulus
        sequences = sequences.matrix
    mat, m = _as_matrix(sequences, modulus)
    n = mat.shape[1]
    result = _verify_linear_certificate(mat, n, m)
    if result is None:
        result = _verify_translate_certificate(mat, n, m)
    if result is None:
        result = _verify_generic(mat, n)
    return result


@functools.lru_cache(maxsize=16)
def correlation_table(ocs: OneCoincidenceSet) -> np.ndarray:
    """Full (size x size x length) correlation count table of a family."""
    mat = ocs.matrix.astype(np.int64, copy=False)
    l, n = mat.shape
    pos: list[dict[int, np.ndarray]] = []
    for j in range(l):
        pos.append({int(s): np.flatnonzero(mat[j] == s) for s in np.unique(mat[j])})
    out = np.zeros((l, l, n), dtype=np.int64)
    for ja in range(l):
        for jb in range(ja, l):
            chunks = []
            for sym, pa in pos[ja].items():
                pb = pos[jb].get(sym)
                if pb is not None:
                    chunks.append((pb[None, :] - pa[:, None]).ravel())
            if chunks:
                vec = np.bincount(np.concatenate(chunks) % n, minlength=n)
            else:
                vec = np.zeros(n, dtype=np.int64)
            out[ja, jb] = vec
            if ja != jb:
                # symmetry: H_{b,a}(t) = H_{a,b}(n - t mod n)
                out[jb, ja] = np.roll(vec[::-1], 1)
    return out

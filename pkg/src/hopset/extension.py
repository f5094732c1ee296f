"""Product extension of hopping-sequence sets by one-coincidence families.

An extension pairs every symbol occurrence x_i(t2) with one auxiliary
sequence, chosen by an occurrence labeling w: distinct occurrences of the
same symbol must get distinct labels.  The extended sequence is the n x N
array of pairs (e_{w_i(t2)}(t1), x_i(t2)) read row by row, over the
product alphabet of size m*v flattened as pair_value * v + old_value.

The extended correlation at shift tau = N*tau1 + tau2 decomposes by
column: a column that wraps past the row boundary contributes its
auxiliary correlation at shift tau1 + 1 instead of tau1 (the wrap carries
one extra row step).  decomposed_correlation implements the exact form
and must agree with direct counting on the extended sequences for every
pair and every shift; the test suite enforces that identity.

With a one-coincidence family and a valid labeling, the extension
preserves the correlation maximum of the base set exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bounds import (
    extended_bound_as_written,
    peng_fan_bound,
)
from .core import Alphabet, Fhs, FhsSet, correlation_profile, occurrence_map
from .numtheory import UINT64_MAX, PrimePower
from .onecoincidence import (
    OneCoincidenceSet,
    correlation_table,
    gen_dilation_set,
    gen_field_set,
    gen_translate_set,
)

STEP_KINDS = ("dilation", "translate", "field")

_GENERATORS = {
    "dilation": gen_dilation_set,
    "translate": gen_translate_set,
    "field": gen_field_set,
}


@dataclass(frozen=True)
class Labeling:
    """Per-position auxiliary-sequence indices, one row per sequence.

    capacity is the number of distinct labels the assignment may use;
    a valid labeling is injective on the occurrence set of every symbol.
    """

    values: tuple[tuple[int, ...], ...]
    capacity: int

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(tuple(row) for row in self.values))


@dataclass(frozen=True)
class LabelingVerdict:
    ok: bool
    message: str = ""
    symbol: int | None = None
    positions: tuple[tuple[int, int], ...] = ()


def cumulative_labeling(s: FhsSet) -> Labeling:
    """Label every occurrence by its 0-based prior-occurrence count.

    Counting is row-major over the whole set, so the labels of any one
    symbol are 0, 1, 2, ... in order of appearance, which is injective per
    symbol by construction.  The capacity equals the set's multiplicity.
    """
    counts = [0] * s.alphabet.size
    rows = []
    for seq in s.sequences:
        row = []
        for sym in seq.symbols:
            row.append(counts[sym])
            counts[sym] += 1
        rows.append(tuple(row))
    return Labeling(values=tuple(rows), capacity=max(counts))


def validate_labeling(s: FhsSet, labeling: Labeling,
                      capacity: int | None = None) -> LabelingVerdict:
    """Check shape, range, and per-symbol injectivity of a labeling."""
    cap = labeling.capacity if capacity is None else capacity
    if len(labeling.values) != s.num_sequences:
        return LabelingVerdict(False, f"labeling has {len(labeling.values)} rows, "
                                      f"set has {s.num_sequences} sequences")
    seen: dict[tuple[int, int], tuple[int, int]] = {}
    for i, (seq, row) in enumerate(zip(s.sequences, labeling.values)):
        if len(row) != s.length:
            return LabelingVerdict(False, f"labeling row {i} has length {len(row)}, "
                                          f"expected {s.length}")
        for t, label in enumerate(row):
            if not isinstance(label, int) or isinstance(label, bool) or not 0 <= label < cap:
                return LabelingVerdict(False, f"label {label!r} at ({i}, {t}) out of "
                                              f"range 0..{cap - 1}")
            key = (seq.symbols[t], label)
            if key in seen:
                prev = seen[key]
                return LabelingVerdict(
                    False,
                    f"symbol {seq.symbols[t]}: occurrences {prev} and {(i, t)} share label {label}",
                    symbol=seq.symbols[t],
                    positions=(prev, (i, t)),
                )
            seen[key] = (i, t)
    return LabelingVerdict(True)


def extend_once(s: FhsSet, ocs: OneCoincidenceSet,
                labeling: Labeling | None = None) -> FhsSet:
    """One product-extension step; defaults to the cumulative labeling."""
    if labeling is None:
        labeling = cumulative_labeling(s)
    verdict = validate_labeling(s, labeling)
    if not verdict.ok:
        raise ValueError(f"invalid labeling: {verdict.message}")
    if labeling.capacity > ocs.size:
        raise ValueError(
            f"labeling needs {labeling.capacity} auxiliary sequences, family has {ocs.size}"
        )
    n = ocs.length
    big_n = s.length
    v = s.alphabet.size
    if n * big_n > UINT64_MAX or ocs.modulus * v > UINT64_MAX:
        raise ValueError("extended parameters exceed the 64-bit range")
    old_factors = s.alphabet.factors if s.alphabet.factors else (v,)
    alphabet = Alphabet(size=ocs.modulus * v, factors=(ocs.modulus,) + old_factors)
    e_rows = ocs.matrix
    out = []
    for seq, lab_row in zip(s.sequences, labeling.values):
        cols = e_rows[list(lab_row)]          # (N, n): column t2 is e_{w(t2)}
        x = np.asarray(seq.symbols, dtype=np.int64)
        flat = (cols.T * v + x[None, :]).ravel()   # row-major read of the n x N array
        out.append(Fhs(tuple(int(u) for u in flat), alphabet))
    label = f"{s.label} *{ocs.kind}({PrimePower(ocs.p, ocs.a)})" if s.label else None
    return FhsSet(tuple(out), label=label)


def decomposed_correlation(s: FhsSet, ocs: OneCoincidenceSet, labeling: Labeling,
                           i: int, j: int, shift: int) -> int:
    """Extended-pair correlation at `shift`, from base symbols and the family table.

    shift splits as tau1 = shift // N, tau2 = shift mod N.  Columns that
    wrap (t2 + tau2 >= N) see the auxiliary shift tau1 + 1 mod n.  Equals
    hamming_correlation on the extend_once output at the same shift.
    """
    big_n = s.length
    n = ocs.length
    if not 0 <= shift < n * big_n:
        raise ValueError(f"shift {shift} out of range 0..{n * big_n - 1}")
    tau1, tau2 = divmod(shift, big_n)
    table = correlation_table(ocs)
    xi = s.sequences[i].symbols
    xj = s.sequences[j].symbols
    wi = labeling.values[i]
    wj = labeling.values[j]
    total = 0
    for t2 in range(big_n):
        t2s = t2 + tau2
        carry = 1 if t2s >= big_n else 0
        t2s -= big_n if carry else 0
        if xi[t2] == xj[t2s]:
            total += int(table[wi[t2], wj[t2s], (tau1 + carry) % n])
    return total


@dataclass(frozen=True)
class ExtensionStep:
    """One planned extension step with its feasibility verdict."""

    kind: str
    p: int
    a: int
    feasible: bool
    reason: str
    predicted: tuple[int, int, int, int]   # (length, alphabet size, h_max, set size)
    bound_preserved_predicted: bool


@dataclass(frozen=True)
class ExtensionPlan:
    steps: tuple[ExtensionStep, ...]
    feasible: bool
    base_params: tuple[int, int, int, int]
    final_params: tuple[int, int, int, int]
    final_bound: int
    warnings: tuple[str, ...]


def _step_shape(kind: str, pp: PrimePower) -> tuple[int, int, int]:
    """(required multiplicity limit, added length factor, added alphabet factor)."""
    if kind == "dilation":
        return pp.p - 1, pp.q, pp.q
    if kind == "translate":
        return pp.p, (pp.p - 1) * pp.p ** (pp.a - 1), pp.q
    if kind == "field":
        return pp.q, pp.q - 1, pp.q
    raise ValueError(f"unknown step kind {kind!r}; expected one of {STEP_KINDS}")


def plan_recursive_extension(s: FhsSet, requests) -> ExtensionPlan:
    """Feasibility-check a chain of extension steps and predict the outcome.

    requests is a sequence of (kind, p, a) triples.  The multiplicity used
    for each step is the base set's: dilation steps keep it exactly and
    the other kinds never increase it, so the check is conservative.
    extend_recursive re-checks each step against the actual intermediate.
    """
    mult = occurrence_map(s).multiplicity
    lam = correlation_profile(s).h_max
    m = s.num_sequences
    cur_n, cur_v = s.length, s.alphabet.size
    base_params = (cur_n, cur_v, lam, m)
    steps = []
    warnings = []
    prev_p = None
    all_ok = True
    for kind, p, a in requests:
        pp = PrimePower(p, a)
        if kind not in STEP_KINDS:
            raise ValueError(f"unknown step kind {kind!r}; expected one of {STEP_KINDS}")
        if kind in ("dilation", "translate") and p == 2:
            feasible, reason = False, f"{kind} family needs an odd prime, got p=2"
            limit, len_factor, alph_factor = 0, 1, 1
        else:
            limit, len_factor, alph_factor = _step_shape(kind, pp)
            if mult <= limit:
                feasible, reason = True, f"m={mult} <= {limit}"
            else:
                feasible, reason = False, f"m={mult} > {limit}"
        if feasible:
            if kind == "dilation":
                preserved = extended_bound_as_written(cur_n, cur_v, m, pp.q, pp.q) \
                    == peng_fan_bound(cur_n, cur_v, m)
            else:
                d = len_factor
                preserved = extended_bound_as_written(cur_n, cur_v, m, d, pp.q) \
                    == peng_fan_bound(cur_n, cur_v, m)
            if prev_p is not None and p <= prev_p:
                warnings.append(
                    f"step primes not strictly ascending ({prev_p} then {p}); "
                    f"per-step conditions still hold"
                )
            prev_p = p
            cur_n *= len_factor
            cur_v *= alph_factor
            if cur_n > UINT64_MAX or cur_v > UINT64_MAX:
                raise ValueError("planned parameters exceed the 64-bit range")
        else:
            preserved = False
            all_ok = False
        steps.append(ExtensionStep(kind, p, a, feasible, reason,
                                   (cur_n, cur_v, lam, m), preserved))
    final_params = (cur_n, cur_v, lam, m)
    return ExtensionPlan(
        steps=tuple(steps),
        feasible=all_ok,
        base_params=base_params,
        final_params=final_params,
        final_bound=peng_fan_bound(cur_n, cur_v, m),
        warnings=tuple(warnings),
    )


def extend_recursive(s: FhsSet, plan: ExtensionPlan) -> FhsSet:
    """Apply an accepted plan, regenerating the family and labeling per step.

    Each step's multiplicity condition is re-verified against the actual
    intermediate set before extending.
    """
    if not plan.feasible:
        bad = next(st for st in plan.steps if not st.feasible)
        raise ValueError(f"plan rejected: step {bad.kind}({bad.p},{bad.a}): {bad.reason}")
    cur = s
    for st in plan.steps:
        pp = PrimePower(st.p, st.a)
        limit, _, _ = _step_shape(st.kind, pp)
        mult = occurrence_map(cur).multiplicity
        if mult > limit:
            raise ValueError(
                f"step {st.kind}({pp}): intermediate multiplicity {mult} > {limit}"
            )
        family = _GENERATORS[st.kind](pp)
        cur = extend_once(cur, family, cumulative_labeling(cur))
    return cur

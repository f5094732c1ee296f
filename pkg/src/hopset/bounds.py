"""Optimality bounds for hopping sequences and sequence sets.

The set-level lower bound (Peng-Fan) on the maximum Hamming correlation
of M length-N sequences over v slots is

    ceil((M*N - v) * N / ((M*N - 1) * v))

and a set meeting it with equality is optimal.  The single-sequence
bound (Lempel-Greenberger, standard literature form) on the maximum
autocorrelation is

    ceil((N - e) * (N + e - v) / (v * (N - 1))),  e = N mod v.

All arithmetic is exact integer; a non-positive numerator clamps a bound
to 0 (the bound is vacuous there).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Fhs, FhsSet, CorrelationProfile, correlation_profile


def _ceil_div(num: int, den: int) -> int:
    # non-negative operands only
    return (num + den - 1) // den


def peng_fan_bound(length: int, alphabet_size: int, num_sequences: int) -> int:
    """Lower bound on the maximum Hamming correlation of a sequence set."""
    n, v, m = length, alphabet_size, num_sequences
    for name, val in (("length", n), ("alphabet size", v), ("set size", m)):
        if not isinstance(val, int) or isinstance(val, bool) or val < 1:
            raise ValueError(f"{name} must be a positive integer, got {val!r}")
    num = (m * n - v) * n
    if num <= 0:
        return 0
    return _ceil_div(num, (m * n - 1) * v)


def lempel_greenberger_bound(length: int, alphabet_size: int) -> int:
    """Lower bound on the maximum autocorrelation of a single sequence."""
    n, v = length, alphabet_size
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise ValueError(f"length must be an integer >= 2, got {n!r}")
    if not isinstance(v, int) or isinstance(v, bool) or v < 1:
        raise ValueError(f"alphabet size must be a positive integer, got {v!r}")
    eps = n % v
    num = (n - eps) * (n + eps - v)
    if num <= 0:
        return 0
    return _ceil_div(num, v * (n - 1))


@dataclass(frozen=True)
class OptimalityReport:
    """Achieved correlation maximum versus the applicable lower bound."""

    achieved: int
    bound: int
    optimal: bool
    bound_name: str
    parameters: tuple[int, ...]


def is_optimal_set(s: FhsSet, profile: CorrelationProfile | None = None) -> OptimalityReport:
    """Compare the exhaustive correlation maximum of a set to the Peng-Fan bound."""
    if profile is None:
        profile = correlation_profile(s)
    n, v, m = s.length, s.alphabet.size, s.num_sequences
    bound = peng_fan_bound(n, v, m)
    achieved = profile.h_max
    return OptimalityReport(
        achieved=achieved,
        bound=bound,
        optimal=achieved == bound,
        bound_name="Peng-Fan",
        parameters=(n, v, m),
    )


def is_optimal_fhs(x: Fhs) -> OptimalityReport:
    """Compare a single sequence's autocorrelation maximum to the LG bound."""
    profile = correlation_profile(FhsSet((x,)))
    bound = lempel_greenberger_bound(x.length, x.alphabet.size)
    return OptimalityReport(
        achieved=profile.h_auto,
        bound=bound,
        optimal=profile.h_auto == bound,
        bound_name="LG (standard form)",
        parameters=(x.length, x.alphabet.size),
    )


def extended_bound_as_written(length: int, alphabet_size: int, num_sequences: int,
                              d: int, q: int) -> int:
    """The extension-step bound expression, evaluated exactly as displayed:

        ceil((d*N*M - v) * d*N / ((q*N*M - 1) * q*v))

    This is the predictor the step conditions compare against; verdicts on
    actual sets always use peng_fan_bound on the final parameters instead.
    """
    n, v, m = length, alphabet_size, num_sequences
    num = (d * n * m - v) * d * n
    if num <= 0:
        return 0
    return _ceil_div(num, (q * n * m - 1) * q * v)


def dilation_step_bound_condition(length: int, alphabet_size: int, num_sequences: int,
                                  q1: int) -> bool:
    """Whether a length/alphabet scaling by q1 leaves the written bound unchanged."""
    base = peng_fan_bound(length, alphabet_size, num_sequences)
    return base == extended_bound_as_written(length, alphabet_size, num_sequences, q1, q1)


def translate_step_bound_condition(length: int, alphabet_size: int, num_sequences: int,
                                   p: int, a: int) -> bool:
    """Whether a (d, q) = ((p-1)p^(a-1), p^a) step leaves the written bound unchanged."""
    d = (p - 1) * p ** (a - 1)
    q = p**a
    base = peng_fan_bound(length, alphabet_size, num_sequences)
    return base == extended_bound_as_written(length, alphabet_size, num_sequences, d, q)

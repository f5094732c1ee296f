"""Exact integer, modular, and small finite-field arithmetic.

Everything here is deterministic and exact: primality by trial division,
primitive roots by exhaustive order testing, and GF(p^a) built from the
first irreducible polynomial in a fixed enumeration order.  Determinism
matters because generated sequence families must be reproducible from
their (p, a, g) header alone.

Scale is "desk scale": moduli up to a few million, field orders up to a
few thousand.  Inputs whose derived values would not fit in an unsigned
64-bit word are rejected outright rather than silently accepted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

UINT64_MAX = 2**64 - 1


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (desk scale)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


@dataclass(frozen=True)
class PrimePower:
    """A value q = p^a with p prime and a >= 1."""

    p: int
    a: int

    def __post_init__(self):
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise ValueError(f"p must be an integer, got {self.p!r}")
        if not isinstance(self.a, int) or isinstance(self.a, bool):
            raise ValueError(f"a must be an integer, got {self.a!r}")
        if self.a < 1:
            raise ValueError(f"exponent must be >= 1, got {self.a}")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.p**self.a > UINT64_MAX:
            raise ValueError(f"{self.p}^{self.a} exceeds the 64-bit range")

    @property
    def q(self) -> int:
        return self.p**self.a

    def __str__(self) -> str:
        return f"{self.p}" if self.a == 1 else f"{self.p}^{self.a}"


def least_prime_factor(n: int) -> int:
    """Smallest prime dividing n, for n >= 2."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise ValueError(f"least_prime_factor needs an integer >= 2, got {n!r}")
    if n % 2 == 0:
        return 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return f
        f += 2
    return n


def factor_prime_powers(n: int) -> list[PrimePower]:
    """Factor n >= 2 into prime powers, sorted by ascending prime.

    The product of the returned q values reconstructs n exactly.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise ValueError(f"factor_prime_powers needs an integer >= 2, got {n!r}")
    out = []
    rest = n
    while rest > 1:
        p = least_prime_factor(rest)
        a = 0
        while rest % p == 0:
            rest //= p
            a += 1
        out.append(PrimePower(p, a))
    return out


def euler_phi(n: int) -> int:
    """Euler totient via prime-power factorization."""
    if n == 1:
        return 1
    phi = 1
    for pp in factor_prime_powers(n):
        phi *= (pp.p - 1) * pp.p ** (pp.a - 1)
    return phi


def multiplicative_order(g: int, m: int) -> int:
    """Least d > 0 with g^d = 1 (mod m); requires gcd(g, m) = 1."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    g = g % m
    if math.gcd(g, m) != 1:
        raise ValueError(f"gcd({g}, {m}) != 1, multiplicative order undefined")
    # Start from phi(m) and strip prime factors while the power stays 1.
    order = euler_phi(m)
    for pp in factor_prime_powers(order) if order > 1 else []:
        for _ in range(pp.a):
            if pow(g, order // pp.p, m) == 1:
                order //= pp.p
            else:
                break
    return order


def primitive_root_mod_prime_power(pp: PrimePower) -> int:
    """Primitive root modulo p^a for odd p (and the trivial p=2, a=1 case).

    Returns the smallest primitive root g' mod p when it already has full
    order mod p^a, otherwise g' + p.  The order of the result is verified
    explicitly rather than assumed.
    """
    p, a, q = pp.p, pp.a, pp.q
    if p == 2:
        if a == 1:
            return 1
        raise ValueError("the units mod 2^a (a >= 2) are not cyclic; p must be odd")
    base = None
    for cand in range(2, p):
        if multiplicative_order(cand, p) == p - 1:
            base = cand
            break
    if base is None:
        raise ValueError(f"no primitive root mod {p} (not prime?)")
    if a == 1:
        return base
    target = (p - 1) * p ** (a - 1)
    if multiplicative_order(base, q) == target:
        return base
    g = base + p
    if multiplicative_order(g, q) != target:
        raise ValueError(f"neither {base} nor {g} has full order mod {q}")
    return g


# ---------------------------------------------------------------------------
# GF(p^a) with log/antilog tables.
#
# Elements are numbered 0..q-1 by their coefficient digits in base p:
# the element c0 + c1*x + ... + c_{a-1}*x^{a-1} has index sum(c_i * p^i).
# For a = 1 the index of an element is its residue.
# ---------------------------------------------------------------------------


def _poly_divmod(num: list[int], den: list[int], p: int) -> tuple[list[int], list[int]]:
    """Quotient and remainder of polynomial division over Z_p (ascending coeffs)."""
    num = list(num)
    dden = len(den) - 1
    inv_lead = pow(den[-1], -1, p)
    quot = [0] * max(1, len(num) - dden)
    while len(num) - 1 >= dden and any(num):
        shift = len(num) - 1 - dden
        factor = num[-1] * inv_lead % p
        if factor:
            quot[shift] = factor
            for i, c in enumerate(den):
                num[shift + i] = (num[shift + i] - factor * c) % p
        num.pop()
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quot, num


def _poly_is_irreducible(coeffs: list[int], p: int) -> bool:
    """Exhaustive check: no monic divisor of degree 1..deg/2 divides coeffs."""
    deg = len(coeffs) - 1
    for d in range(1, deg // 2 + 1):
        for k in range(p**d):
            den = [k // p**i % p for i in range(d)] + [1]
            _, rem = _poly_divmod(coeffs, den, p)
            if rem == [0]:
                return False
    return True


@dataclass(frozen=True)
class FieldElementTable:
    """GF(p^a) realized as log/antilog tables over canonically numbered elements.

    antilog[i] is the index of g^i for the primitive element g; it lists
    every nonzero element exactly once.  log is the inverse map, with
    log[0] = -1 as a sentinel.
    """

    p: int
    a: int
    modulus_poly: tuple[int, ...]
    primitive_element: int
    antilog: tuple[int, ...]
    log: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.a

    def _digits(self, u: int) -> list[int]:
        return [u // self.p**i % self.p for i in range(self.a)]

    def add(self, u: int, v: int) -> int:
        """Field addition (digitwise mod p on the canonical numbering)."""
        p = self.p
        return sum((du + dv) % p * p**i for i, (du, dv) in enumerate(zip(self._digits(u), self._digits(v))))

    def neg(self, u: int) -> int:
        p = self.p
        return sum((-d) % p * p**i for i, d in enumerate(self._digits(u)))

    def mul(self, u: int, v: int) -> int:
        """Field multiplication through the log tables."""
        if u == 0 or v == 0:
            return 0
        n = self.q - 1
        return self.antilog[(self.log[u] + self.log[v]) % n]

    def power_of_primitive(self, i: int) -> int:
        """g^i as an element index (i taken mod q-1)."""
        return self.antilog[i % (self.q - 1)]


def _poly_mul_mod(u: list[int], v: list[int], modulus: list[int], p: int) -> list[int]:
    prod = [0] * (len(u) + len(v) - 1)
    for i, cu in enumerate(u):
        if cu:
            for j, cv in enumerate(v):
                prod[i + j] = (prod[i + j] + cu * cv) % p
    _, rem = _poly_divmod(prod, modulus, p)
    return rem


def gf_construct(pp: PrimePower) -> FieldElementTable:
    """Build GF(p^a) deterministically.

    The modulus is the first irreducible monic polynomial of degree a in
    the fixed enumeration (non-leading coefficients read as base-p digits
    of an increasing counter); the primitive element is the smallest
    element index with full multiplicative order.  For a = 1 this reduces
    to plain modular arithmetic with the "x - 0" modulus convention.
    """
    p, a, q = pp.p, pp.a, pp.q
    if a == 1:
        g = primitive_root_mod_prime_power(pp)
        antilog = []
        acc = 1
        for _ in range(q - 1):
            antilog.append(acc)
            acc = acc * g % q
        log = [-1] * q
        for i, e in enumerate(antilog):
            log[e] = i
        return FieldElementTable(p, a, (0, 1), g, tuple(antilog), tuple(log))

    modulus = None
    for k in range(q):
        coeffs = [k // p**i % p for i in range(a)] + [1]
        if _poly_is_irreducible(coeffs, p):
            modulus = coeffs
            break
    if modulus is None:
        raise ValueError(f"no irreducible polynomial of degree {a} over Z_{p} found")

    def mul_idx(u: int, v: int) -> int:
        du = [u // p**i % p for i in range(a)]
        dv = [v // p**i % p for i in range(a)]
        rem = _poly_mul_mod(du, dv, modulus, p)
        return sum(c * p**i for i, c in enumerate(rem))

    primitive = None
    antilog: list[int] = []
    for cand in range(2, q):
        powers = [1]
        acc = cand
        while acc != 1:
            powers.append(acc)
            acc = mul_idx(acc, cand)
            if len(powers) > q:
                raise ValueError("multiplication table is inconsistent")
        if len(powers) == q - 1:
            primitive = cand
            antilog = powers
            break
    if primitive is None:
        raise ValueError(f"no primitive element found for GF({q})")
    log = [-1] * q
    for i, e in enumerate(antilog):
        log[e] = i
    return FieldElementTable(p, a, tuple(modulus), primitive, tuple(antilog), tuple(log))

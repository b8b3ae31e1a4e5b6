"""Primitive roots of an odd prime, backed by factoring p - 1.

A multiplicative generator mod p has full period p - 1 exactly when its
multiplier is a primitive root, and the order test behind that fact
needs the distinct primes dividing p - 1.  Trial division is plenty at
desk scale.  Roots come in inverse pairs (g, g^-1), the fact behind the
exact-mean identity for cycle inversions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import _kernels
from .modarith import MAX_MODULUS, OddPrime, is_prime, prime_value

__all__ = [
    "Factorization",
    "PrimitiveRootSet",
    "euler_phi",
    "factorize",
    "inverse_pairs",
    "is_primitive_root",
    "primitive_roots",
    "smallest_primitive_root",
]


@dataclass(frozen=True)
class Factorization:
    """Complete prime factorization n = prod(q**e), primes ascending."""

    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        product = 1
        last = 1
        for q, e in self.pairs:
            if q <= last or not is_prime(q):
                raise ValueError(f"bad factor list for {self.n}: {self.pairs}")
            if e < 1:
                raise ValueError(f"exponent must be positive, got {q}**{e}")
            last = q
            product *= q**e
        if product != self.n:
            raise ValueError(
                f"factors {self.pairs} multiply to {product}, not {self.n}"
            )

    @property
    def primes(self) -> tuple[int, ...]:
        """The distinct primes, ascending."""
        return tuple(q for q, _ in self.pairs)


def factorize(n: int) -> Factorization:
    """Prime factorization by trial division, O(sqrt n)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n >= MAX_MODULUS:
        raise ValueError(f"n must be below 2**63, got {n}")
    original = n
    pairs = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            pairs.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        pairs.append((n, 1))
    return Factorization(original, tuple(pairs))


def euler_phi(n: int) -> int:
    """Euler's totient via the factorization product formula."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return 1
    phi = 1
    for q, e in factorize(n).pairs:
        phi *= q ** (e - 1) * (q - 1)
    return phi


@lru_cache(maxsize=4096)
def _cofactor_exponents(p: int) -> tuple[int, ...]:
    """(p-1)/q for each distinct prime q dividing p - 1."""
    return tuple((p - 1) // q for q in factorize(p - 1).primes)


def is_primitive_root(g: int, p: int | OddPrime) -> bool:
    """Order test: g generates [1, p-1] iff no g**((p-1)/q) equals 1."""
    p = prime_value(p)
    if not 1 <= g < p:
        raise ValueError(f"g must lie in [1, {p - 1}], got {g}")
    return all(pow(g, e, p) != 1 for e in _cofactor_exponents(p))


@dataclass(frozen=True)
class PrimitiveRootSet:
    """All primitive roots of p, ascending; there are phi(p-1) of them."""

    p: int
    roots: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __contains__(self, g) -> bool:
        return g in self.roots


def primitive_roots(p: int | OddPrime) -> PrimitiveRootSet:
    """Every residue passing the order test, by scanning [2, p-1].

    The scan is deliberate: it keeps the phi(p-1) cardinality invariant
    an empirical fact rather than a construction artifact.
    """
    p = prime_value(p)
    exponents = list(_cofactor_exponents(p))
    roots = _kernels.primitive_root_scan(p, exponents)
    return PrimitiveRootSet(p, tuple(roots))


def smallest_primitive_root(p: int | OddPrime) -> int:
    """The least primitive root of p (candidates from 2 upward)."""
    p = prime_value(p)
    for g in range(2, p):
        if is_primitive_root(g, p):
            return g
    raise RuntimeError(f"no primitive root found for prime {p}")


def inverse_pairs(p: int | OddPrime) -> list[tuple[int, int]]:
    """The primitive roots of p grouped into {g, g^-1} pairs.

    Each pair is reported (smaller, larger).  A root can only be its own
    inverse when g**2 = 1, i.e. g = p - 1, which is a primitive root
    just for p = 3; that singleton is reported as (2, 2).
    """
    p = prime_value(p)
    roots = primitive_roots(p).roots
    root_set = set(roots)
    pairs = []
    seen = set()
    for g in roots:
        if g in seen:
            continue
        g_inv = pow(g, p - 2, p)
        if g_inv not in root_set:
            raise RuntimeError(
                f"inverse {g_inv} of primitive root {g} mod {p} is not a root"
            )
        seen.add(g)
        seen.add(g_inv)
        pairs.append((g, g_inv) if g <= g_inv else (g_inv, g))
    return pairs

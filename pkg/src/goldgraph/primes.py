"""Prime sieve, deterministic 64-bit primality and odd-set constructors."""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

# Bases 2..37 are deterministic for every n < 3.3 * 10**24, which covers 64 bits.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_U64_MAX = (1 << 64) - 1


class PrimeSieve:
    """Bit-packed Eratosthenes sieve over ``[0, bound]``.

    Immutable after construction. Queries above ``bound`` raise ``ValueError``
    rather than guessing; rebuild with a larger bound instead.
    """

    __slots__ = ("bound", "_bits", "_primes", "_set")

    def __init__(self, bound: int):
        if bound < 2:
            raise ValueError(f"sieve bound must be >= 2, got {bound}")
        flags = np.ones(bound + 1, dtype=bool)
        flags[:2] = False
        for p in range(2, math.isqrt(bound) + 1):
            if flags[p]:
                flags[p * p :: p] = False
        self.bound = bound
        self._bits = np.packbits(flags)
        self._primes = np.flatnonzero(flags)
        self._bits.setflags(write=False)
        self._primes.setflags(write=False)
        self._set = None

    def __contains__(self, n: int) -> bool:
        return self.is_prime(n)

    def is_prime(self, n: int) -> bool:
        if n < 0:
            return False
        if n > self.bound:
            raise ValueError(f"{n} exceeds sieve bound {self.bound}")
        return bool((self._bits[n >> 3] >> (7 - (n & 7))) & 1)

    def flags(self) -> np.ndarray:
        """Unpacked boolean view, index ``i`` true iff ``i`` is prime."""
        return np.unpackbits(self._bits, count=self.bound + 1).astype(bool)

    def primes(self, upto: int | None = None) -> list[int]:
        if upto is None:
            return self._primes.tolist()
        if upto > self.bound:
            raise ValueError(f"{upto} exceeds sieve bound {self.bound}")
        return self._primes[: self.count(upto)].tolist()

    def prime_set(self) -> frozenset:
        if self._set is None:
            self._set = frozenset(self._primes.tolist())
        return self._set

    def count(self, upto: int) -> int:
        """pi(upto), the number of primes <= upto."""
        if upto > self.bound:
            raise ValueError(f"{upto} exceeds sieve bound {self.bound}")
        return int(np.searchsorted(self._primes, upto, side="right"))

    def __repr__(self) -> str:
        return f"PrimeSieve(bound={self.bound})"


def build_sieve(bound: int) -> PrimeSieve:
    return PrimeSieve(bound)


def is_prime_64(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all ``0 <= n < 2**64``."""
    if n < 0 or n > _U64_MAX:
        raise ValueError(f"{n} outside the 64-bit range")
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class OddSet:
    """A finite, sorted set of positive odd integers.

    ``kind`` records how the set was produced (``explicit``, ``progression``,
    ``odd-primes`` or ``odd-primes-with-one``); ``params`` holds the
    constructor arguments for progression and prime sets.
    """

    elements: tuple[int, ...]
    kind: str = "explicit"
    params: dict = field(default_factory=dict, compare=False)
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        elems = tuple(sorted(set(self.elements)))
        for e in elems:
            if e < 1 or e % 2 == 0:
                raise ValueError(f"odd set element {e} is not a positive odd integer")
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "_members", frozenset(elems))

    @classmethod
    def of(cls, values: Iterable[int]) -> "OddSet":
        return cls(tuple(values))

    def __contains__(self, n: int) -> bool:
        return n in self._members

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def max(self) -> int:
        return self.elements[-1] if self.elements else 0

    def upto(self, bound: int) -> "OddSet":
        cut = self.elements[: bisect_right(self.elements, bound)]
        return OddSet(cut, self.kind, dict(self.params))


def odd_primes_upto(bound: int, include_one: bool = False, sieve: PrimeSieve | None = None) -> OddSet:
    if bound < 3:
        raise ValueError(f"bound must be >= 3, got {bound}")
    if sieve is None or sieve.bound < bound:
        sieve = PrimeSieve(bound)
    elems = sieve.primes(bound)[1:]
    kind = "odd-primes"
    if include_one:
        elems = [1] + elems
        kind = "odd-primes-with-one"
    return OddSet(tuple(elems), kind, {"bound": bound})


def arithmetic_odd_set(a: int, b: int, bound: int, k_start: int = 1) -> OddSet:
    """Odd set ``{a*k + b : k >= k_start, a*k + b <= bound}``.

    ``k_start`` defaults to 1 so that ``b`` itself is excluded; pass 0 for
    the convention in which the natural numbers include zero.
    """
    if a < 2 or a % 2:
        raise ValueError(f"a must be an even integer >= 2, got {a}")
    if b < 1 or b % 2 == 0:
        raise ValueError(f"b must be an odd integer >= 1, got {b}")
    if k_start not in (0, 1):
        raise ValueError("k_start must be 0 or 1")
    if bound < b:
        raise ValueError(f"bound {bound} is below b={b}")
    elems = tuple(range(a * k_start + b, bound + 1, a))
    return OddSet(elems, "progression", {"a": a, "b": b, "k_start": k_start, "bound": bound})

"""Elementary integer arithmetic: Kronecker symbol, primality, sieving,
squarefree and fundamental-discriminant tests, modular square roots.

Everything here is exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional

import numpy as np

from .errors import CapacityError, ValidationError

# Segmented sieve limits: a PrimeRange may span at most SEGMENT_SIZE * MAX_SEGMENTS.
SEGMENT_SIZE = 1 << 18
MAX_SEGMENTS = 1 << 14
MAX_INT64 = (1 << 63) - 1

# Deterministic Miller-Rabin for n < 3.3e24, which covers the 64-bit range.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_SMALL_PRIME_LIMIT = 1 << 20


def isqrt(n: int) -> int:
    """Floor of the square root of ``n`` (exact)."""
    if n < 0:
        raise ValidationError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def _icbrt(n: int) -> int:
    r = int(round(n ** (1.0 / 3.0)))
    while r * r * r > n:
        r -= 1
    while (r + 1) ** 3 <= n:
        r += 1
    return r


@lru_cache(maxsize=1)
def _small_prime_flags() -> bytearray:
    flags = bytearray(_SMALL_PRIME_LIMIT)
    for p in _base_primes(_SMALL_PRIME_LIMIT - 1).tolist():
        flags[p] = 1
    return flags


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test, exact for all 64-bit n.

    Small n are answered from a sieve table.
    """
    if n < _SMALL_PRIME_LIMIT:
        return n >= 2 and _small_prime_flags()[n] == 1
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
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


@lru_cache(maxsize=32)
def _base_primes(limit: int) -> np.ndarray:
    """All primes <= limit by a plain sieve."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    mask[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if mask[p]:
            mask[p * p :: 2 * p] = False
    return np.flatnonzero(mask).astype(np.int64)


def is_squarefree(n: int) -> bool:
    """True iff no prime square divides ``n``.

    Trial division by primes up to the cube root of n; whatever survives has
    at most two prime factors, so it is non-squarefree only if it is a square.
    """
    if n < 1:
        raise ValidationError(f"is_squarefree needs n >= 1, got {n}")
    m = n
    for q in _base_primes(max(2, _icbrt(n))).tolist():
        if q * q * q > n:
            break
        if m % q == 0:
            m //= q
            if m % q == 0:
                return False
    return m == 1 or not is_square(m)


def is_fundamental(d: int) -> bool:
    """True iff -d is a fundamental discriminant (d > 0)."""
    if d < 3:
        return False
    r = d % 4
    if r == 3:
        return is_squarefree(d)
    if r == 0:
        k = d // 4
        return k % 4 in (1, 2) and is_squarefree(k)
    return False


class FundamentalDiscriminant(int):
    """A positive integer d such that -d is a fundamental discriminant."""

    def __new__(cls, d: int) -> "FundamentalDiscriminant":
        if isinstance(d, FundamentalDiscriminant):
            return d
        if isinstance(d, bool) or not isinstance(d, (int, np.integer)):
            raise ValidationError(f"discriminant must be an integer, got {d!r}")
        d = int(d)
        if d > MAX_INT64:
            raise ValidationError(f"d={d} exceeds the 64-bit range")
        if not is_fundamental(d):
            raise ValidationError(
                f"-{d} is not a fundamental discriminant: need d = 3 mod 4 squarefree, "
                "or d = 4k with k squarefree and k = 1, 2 mod 4"
            )
        return super().__new__(cls, d)

    def __repr__(self) -> str:
        return f"FundamentalDiscriminant({int(self)})"


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n), extending the Jacobi symbol to all integers n."""
    if n == 0:
        if a == 0:
            raise ValidationError("kronecker(0, 0) is undefined")
        return 1 if abs(a) == 1 else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -1
    v = (n & -n).bit_length() - 1
    if v:
        if a % 2 == 0:
            return 0
        n >>= v
        if v & 1 and a % 8 in (3, 5):
            sign = -sign
    # Jacobi symbol (a|n), n odd positive
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def chi(d: int, m: int) -> int:
    """The quadratic character of discriminant -d evaluated at m."""
    return kronecker(-d, m)


def sqrt_mod(a: int, p: int) -> Optional[int]:
    """Square root of a modulo an odd prime p, or None for a non-residue.

    Returns the smaller of the two roots r, p - r.
    """
    if p < 3 or p % 2 == 0:
        raise ValidationError(f"sqrt_mod needs an odd prime modulus, got {p}")
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        # Tonelli-Shanks, smallest non-residue as generator
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m = s
        c = pow(z, q, p)
        t = pow(a, q, p)
        r = pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m = i
            c = b * b % p
            t = t * c % p
            r = r * b % p
    return min(r, p - r)


@dataclass(frozen=True)
class PrimeRange:
    """Half-open range [lo, hi) of integers to sieve."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo < 0 or self.hi < self.lo:
            raise ValidationError(f"bad prime range [{self.lo}, {self.hi})")
        if self.hi > MAX_INT64:
            raise ValidationError("prime range exceeds the 64-bit range")
        if self.hi - self.lo > SEGMENT_SIZE * MAX_SEGMENTS:
            raise CapacityError(
                f"range width {self.hi - self.lo} exceeds "
                f"{SEGMENT_SIZE} * {MAX_SEGMENTS}"
            )


def _sieve_segment(lo: int, hi: int) -> np.ndarray:
    """Primes in [lo, hi) as an int64 array; hi - lo should be a segment or less."""
    lo = max(lo, 2)
    if hi <= lo:
        return np.zeros(0, dtype=np.int64)
    mask = np.ones(hi - lo, dtype=bool)
    for q in _base_primes(math.isqrt(hi - 1)).tolist():
        start = max(q * q, -(-lo // q) * q)
        if start >= hi:
            continue
        mask[start - lo :: q] = False
    return np.flatnonzero(mask).astype(np.int64) + lo


def iter_prime_segments(lo: int, hi: int, segment: int = SEGMENT_SIZE) -> Iterator[np.ndarray]:
    """Yield arrays of the primes in [lo, hi), one sieve segment at a time."""
    start = lo
    while start < hi:
        stop = min(hi, start + segment)
        yield _sieve_segment(start, stop)
        start = stop


def sieve_primes(rng: PrimeRange) -> List[int]:
    """All primes p with rng.lo <= p < rng.hi, ascending."""
    out: List[int] = []
    for seg in iter_prime_segments(rng.lo, rng.hi):
        out.extend(seg.tolist())
    return out


def squarefree_mask(n: int) -> np.ndarray:
    """Boolean array s with s[k] true iff k is squarefree, for 0 <= k <= n."""
    mask = np.ones(n + 1, dtype=bool)
    mask[0] = False
    for q in _base_primes(math.isqrt(n)).tolist():
        mask[q * q :: q * q] = False
    return mask


def fundamental_mask(n: int) -> np.ndarray:
    """Boolean array f with f[d] true iff -d is a fundamental discriminant, d <= n."""
    sf = squarefree_mask(n)
    out = np.zeros(n + 1, dtype=bool)
    out[3::4] = sf[3::4]
    k = np.arange(n // 4 + 1)
    ok = sf[: n // 4 + 1] & np.isin(k % 4, (1, 2))
    out[0 : 4 * len(k) : 4] = ok
    return out

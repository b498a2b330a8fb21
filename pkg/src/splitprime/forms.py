"""Positive-definite binary quadratic forms of discriminant -d.

A rational prime p splits completely in the Hilbert class field of
Q(sqrt(-d)) exactly when p splits in Q(sqrt(-d)) into principal primes,
i.e. when the principal form of discriminant -d represents p. Both tests
below decide that without ever constructing the class field.
"""

from __future__ import annotations

import math
from typing import List, NamedTuple, Optional

import numpy as np

from .arith import FundamentalDiscriminant, chi, is_prime, sqrt_mod
from .errors import ValidationError


class BinaryQuadraticForm(NamedTuple):
    """The form a*x^2 + b*x*y + c*y^2."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def d(self) -> int:
        """-discriminant, positive for definite forms."""
        return 4 * self.a * self.c - self.b * self.b

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"


class RepresentationWitness(NamedTuple):
    x: int
    y: int
    value: int


def _check_form(f: BinaryQuadraticForm) -> None:
    if f.a <= 0 or f.discriminant >= 0:
        raise ValidationError(f"{f} is not positive definite")


def principal_form(d: int) -> BinaryQuadraticForm:
    """Reduced representative of the identity class of discriminant -d."""
    d = FundamentalDiscriminant(d)
    if d % 4 == 0:
        return BinaryQuadraticForm(1, 0, d // 4)
    return BinaryQuadraticForm(1, 1, (d + 1) // 4)


def is_reduced(f: BinaryQuadraticForm) -> bool:
    a, b, c = f
    if not abs(b) <= a <= c:
        return False
    if abs(b) == a or a == c:
        return b >= 0
    return True


def reduce(f: BinaryQuadraticForm) -> BinaryQuadraticForm:
    """The unique reduced form properly equivalent to ``f``."""
    f = BinaryQuadraticForm(*f)
    _check_form(f)
    a, b, c = f
    while True:
        if not -a < b <= a:
            r = (a - b) // (2 * a)
            c = a * r * r + b * r + c
            b = b + 2 * r * a
        if a > c or (a == c and b < 0):
            a, b, c = c, -b, a
            continue
        return BinaryQuadraticForm(a, b, c)


def reduced_forms(d: int) -> List[BinaryQuadraticForm]:
    """All reduced forms of discriminant -d, sorted by (a, b, c).

    Enumerates b >= 0 of the parity of d with 3*b^2 <= d and splits
    (b^2 + d)/4 = a*c with b <= a <= c; the sign of b is then restored
    except on the boundary |b| = a or a = c.
    """
    d = FundamentalDiscriminant(d)
    bmax = math.isqrt(d // 3)
    amax = math.isqrt((bmax * bmax + d) // 4)
    b = np.arange(d % 2, bmax + 1, 2, dtype=np.int64)
    a = np.arange(1, amax + 1, dtype=np.int64)
    n = (b * b + d) // 4
    N = n[None, :]
    A = a[:, None]
    hit = (A >= b[None, :]) & (N % A == 0) & (A * A <= N)
    ia, ib = np.nonzero(hit)
    forms = []
    for av, bv, nv in zip(a[ia].tolist(), b[ib].tolist(), n[ib].tolist()):
        cv = nv // av
        forms.append(BinaryQuadraticForm(av, bv, cv))
        if 0 < bv < av < cv:
            forms.append(BinaryQuadraticForm(av, -bv, cv))
    forms.sort()
    if __debug__:
        for f in forms:
            assert math.gcd(f.a, f.b, f.c) == 1, f"non-primitive form {f} for d={d}"
    return forms


def class_number(d: int) -> int:
    """h(-d), the number of reduced forms of discriminant -d."""
    return len(reduced_forms(d))


def _witness(d: int, p: int) -> Optional[RepresentationWitness]:
    # No validation: callers guarantee d fundamental, p prime, p not dividing d.
    if d % 4 == 0:
        k = d // 4
        for y in range(1, math.isqrt(p // k) + 1):
            r = p - k * y * y
            x = math.isqrt(r)
            if x * x == r:
                return RepresentationWitness(x, y, p)
        return None
    four_p = 4 * p
    for y in range(1, math.isqrt(four_p // d) + 1):
        r = four_p - d * y * y
        u = math.isqrt(r)
        if u * u == r and (u - y) % 2 == 0:
            return RepresentationWitness((u - y) // 2, y, p)
    return None


def represents_prime_principally(d: int, p: int) -> Optional[RepresentationWitness]:
    """A witness (x, y) with principal_form(d)(x, y) == p, or None.

    The witness has minimal y >= 1; x is then fixed by the search.
    """
    d = FundamentalDiscriminant(d)
    if not is_prime(p):
        raise ValidationError(f"{p} is not prime")
    if d % p == 0:
        raise ValidationError(f"{p} divides {d} (ramified)")
    return _witness(d, p)


def splits_completely(d: int, p: int) -> bool:
    """Does the prime p split completely in the Hilbert class field of Q(sqrt(-d))?

    ``p`` is assumed prime and is not checked.
    """
    d = FundamentalDiscriminant(d)
    if d % p == 0 or chi(d, p) != 1:
        return False
    return _witness(d, p) is not None


def splits_completely_via_reduction(d: int, p: int) -> bool:
    """Same question as :func:`splits_completely`, answered by reducing a
    form of leading coefficient p and comparing with the principal form.
    """
    d = FundamentalDiscriminant(d)
    if p % 2 == 0 or not is_prime(p):
        raise ValidationError(f"{p} is not an odd prime")
    if d % p == 0:
        raise ValidationError(f"{p} is ramified in discriminant -{d}")
    if chi(d, p) != 1:
        raise ValidationError(f"{p} is inert in discriminant -{d}")
    b = sqrt_mod(-d, p)
    if (b - d) % 2:
        b = p - b
    c = (b * b + d) // (4 * p)
    return reduce(BinaryQuadraticForm(p, b, c)) == principal_form(d)

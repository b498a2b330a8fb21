"""Search drivers: least completely split prime, largest discriminant per
class number, the extreme-value scan, and assembly of the reference table.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Literal, MutableMapping, Optional, Sequence, Tuple

import numpy as np

from . import analytic
from .arith import FundamentalDiscriminant, chi, fundamental_mask, iter_prime_segments
from .errors import CapacityError, SearchLimitError, ValidationError
from .forms import (
    RepresentationWitness,
    _witness,
    class_number,
    principal_form,
    splits_completely,
)
from .table1 import BY_H

SCAN_LIMIT = 10**7
DEFAULT_SCAN_BOUND = 20000
CEILING_FACTOR = 100
CHUNKS_PER_WORKER = 4


class InvariantError(RuntimeError):
    """A proved property failed to hold; indicates a bug, not bad input."""


class MissingDiscriminantError(LookupError):
    pass


@dataclass(frozen=True)
class SplitPrimeRecord:
    d: int
    h: int
    p: int
    witness: RepresentationWitness
    ratio: float
    verified_no_smaller: Optional[bool] = None


@dataclass(frozen=True)
class ScanRecord:
    kind: Literal["max-disc-per-h", "min-x-statistic"]
    key: int
    d: int
    value: float


def resolve_workers(workers: int) -> int:
    if workers < 0:
        raise ValidationError(f"worker count must be >= 0, got {workers}")
    return workers or os.cpu_count() or 1


def cached_class_number(d: int, cache: Optional[MutableMapping[int, int]] = None) -> int:
    if cache is not None and d in cache:
        return cache[d]
    h = class_number(d)
    if cache is not None:
        cache[d] = h
    return h


# -- least split prime -------------------------------------------------------


def smallest_split_prime(
    d: int,
    paranoid: bool = False,
    ceiling: Optional[int] = None,
    h: Optional[int] = None,
) -> SplitPrimeRecord:
    """Least prime splitting completely in the Hilbert class field of Q(sqrt(-d)).

    Such a prime is the norm of a principal prime, hence at least d/4, so
    the search starts there. With ``paranoid`` every prime below d/4 is
    also checked and shown not to split.
    """
    d = FundamentalDiscriminant(d)
    if d <= 16:
        raise ValidationError(f"smallest_split_prime needs d > 16, got {d}")
    if h is None:
        h = class_number(d)
    if ceiling is None:
        ceiling = CEILING_FACTOR * d
    start = -(-d // 4)
    found = None
    for seg in iter_prime_segments(start, ceiling):
        for p in seg.tolist():
            if d % p and chi(d, p) == 1:
                w = _witness(d, p)
                if w is not None:
                    found = w
                    break
        if found is not None:
            break
    if found is None:
        raise SearchLimitError(f"no split prime for d={d} below {ceiling}")
    verified = None
    if paranoid:
        for seg in iter_prime_segments(2, start):
            for q in seg.tolist():
                if splits_completely(d, q):
                    raise InvariantError(f"prime {q} < d/4 splits completely for d={d}")
        verified = True
    return SplitPrimeRecord(
        d=int(d),
        h=h,
        p=found.value,
        witness=found,
        ratio=analytic.ratio(found.value, d, h),
        verified_no_smaller=verified,
    )


# -- bulk class numbers --------------------------------------------------------


def _count_reduced_forms(lo: int, hi: int) -> np.ndarray:
    """Number of reduced forms of discriminant -d for every d in [lo, hi).

    Runs over (a, b) with 0 <= b <= a; for fixed (a, b) the discriminants
    4ac - b^2, c >= a, form a progression of step 4a, so each pair is one
    strided add. Non-primitive forms are counted too, which is harmless at
    fundamental d.
    """
    counts = np.zeros(hi - lo, dtype=np.int32)
    if hi <= lo:
        return counts
    amax = math.isqrt((hi - 1) // 3)
    for a in range(1, amax + 1):
        step = 4 * a
        for b in range(a + 1):
            bb = b * b
            cmin = max(a, -(-(lo + bb) // step))
            d0 = step * cmin - bb
            if d0 >= hi:
                continue
            if 0 < b < a:
                counts[d0 - lo :: step] += 2
                if cmin == a:
                    counts[d0 - lo] -= 1
            else:
                counts[d0 - lo :: step] += 1
    return counts


def _chunks(lo: int, hi: int, n: int) -> List[Tuple[int, int]]:
    edges = np.linspace(lo, hi, n + 1).astype(np.int64).tolist()
    return [(a, b) for a, b in zip(edges[:-1], edges[1:]) if b > a]


def class_numbers_in_range(
    lo: int,
    hi: int,
    workers: int = 1,
    cache: Optional[MutableMapping[int, int]] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """(d, h) arrays over every fundamental d with lo <= d <= hi, ascending."""
    if hi > SCAN_LIMIT:
        raise CapacityError(f"scan bound {hi} exceeds the scan limit {SCAN_LIMIT}")
    lo = max(lo, 3)
    if hi < lo:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    ds = np.flatnonzero(fundamental_mask(hi)[lo:]).astype(np.int64) + lo
    if cache is not None and all(d in cache for d in ds.tolist()):
        return ds, np.array([cache[d] for d in ds.tolist()], dtype=np.int64)
    n = resolve_workers(workers)
    if n == 1:
        counts = _count_reduced_forms(lo, hi + 1)
    else:
        parts = _chunks(lo, hi + 1, n * CHUNKS_PER_WORKER)
        with ProcessPoolExecutor(max_workers=n) as pool:
            counts = np.concatenate(list(pool.map(_count_reduced_forms, *zip(*parts))))
    hs = counts[ds - lo].astype(np.int64)
    if cache is not None:
        for d, h in zip(ds.tolist(), hs.tolist()):
            cache[d] = h
    return ds, hs


def max_discriminant_for_class_number(
    h: int,
    bound: int = DEFAULT_SCAN_BOUND,
    workers: int = 1,
    cache: Optional[MutableMapping[int, int]] = None,
) -> Optional[int]:
    """Largest fundamental d <= bound with class number h, or None."""
    if h < 1:
        raise ValidationError(f"class number must be >= 1, got {h}")
    ds, hs = class_numbers_in_range(3, bound, workers, cache)
    hits = ds[hs == h]
    return int(hits[-1]) if hits.size else None


def max_discriminants(
    hmax: int,
    bound: int = DEFAULT_SCAN_BOUND,
    workers: int = 1,
    cache: Optional[MutableMapping[int, int]] = None,
) -> List[ScanRecord]:
    """Largest fundamental d <= bound for each class number 1..hmax that occurs."""
    ds, hs = class_numbers_in_range(3, bound, workers, cache)
    out = []
    for h in range(1, hmax + 1):
        hits = ds[hs == h]
        if hits.size:
            d = int(hits[-1])
            x = analytic.x_statistic(d, h) if d >= 16 else float("nan")
            out.append(ScanRecord("max-disc-per-h", h, d, x))
    return out


def x_statistics(ds: np.ndarray, hs: np.ndarray) -> np.ndarray:
    """Vectorized pi*h/sqrt(d) * log log d."""
    d = ds.astype(np.float64)
    return analytic.PI * hs / np.sqrt(d) * np.log(np.log(d))


def scan_min_x(
    bound: int,
    workers: int = 1,
    cache: Optional[MutableMapping[int, int]] = None,
) -> List[ScanRecord]:
    """Running minima of the x statistic over fundamental d in [16, bound].

    Each record strictly improves on the previous one; the last is the
    minimum over the whole range.
    """
    if bound < 16:
        raise ValidationError(f"scan bound must be >= 16, got {bound}")
    ds, hs = class_numbers_in_range(16, bound, workers, cache)
    xs = x_statistics(ds, hs)
    out: List[ScanRecord] = []
    best = math.inf
    for i in range(len(xs)):
        if xs[i] < best:
            best = float(xs[i])
            out.append(ScanRecord("min-x-statistic", int(hs[i]), int(ds[i]), best))
    return out


# -- reference table -----------------------------------------------------------


def _table_row(args: Tuple[int, int, bool]) -> SplitPrimeRecord:
    d, h, paranoid = args
    return smallest_split_prime(d, paranoid=paranoid, h=h)


def build_table(
    hmax: int,
    source: Literal["fixture", "scan"] = "fixture",
    bound: int = DEFAULT_SCAN_BOUND,
    workers: int = 1,
    paranoid: bool = False,
    cache: Optional[MutableMapping[int, int]] = None,
) -> List[SplitPrimeRecord]:
    """One freshly computed record per class number 1..hmax.

    With ``source="fixture"`` the discriminants come from the embedded
    reference table; with ``source="scan"`` they are the largest fundamental
    d <= bound of each class number. Class numbers, primes, witnesses and
    ratios are always recomputed.
    """
    if hmax < 1:
        raise ValidationError(f"hmax must be >= 1, got {hmax}")
    if source == "fixture":
        if hmax > len(BY_H):
            raise ValidationError(f"fixture has rows for h <= {len(BY_H)} only")
        ds = [BY_H[h].d for h in range(1, hmax + 1)]
        hs = [cached_class_number(d, cache) for d in ds]
    elif source == "scan":
        recs = {r.key: r.d for r in max_discriminants(hmax, bound, workers, cache)}
        missing = [h for h in range(1, hmax + 1) if h not in recs]
        if missing:
            raise MissingDiscriminantError(
                f"no fundamental d <= {bound} with class number in {missing}"
            )
        ds = [recs[h] for h in range(1, hmax + 1)]
        hs = [class_number(d) for d in ds]
        for h, hd in enumerate(hs, 1):
            if h != hd:
                raise InvariantError(f"sieve gave h={h} for d={ds[h - 1]}, forms give {hd}")
    else:
        raise ValidationError(f"unknown d source {source!r}")
    jobs = [(d, h, paranoid) for d, h in zip(ds, hs)]
    n = min(resolve_workers(workers), len(jobs))
    if n == 1:
        return [_table_row(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=n) as pool:
        return list(pool.map(_table_row, jobs))


def check_record(rec: SplitPrimeRecord) -> Sequence[str]:
    """Problems with a record's certificate; empty when it is sound."""
    problems = []
    d, p, w = rec.d, rec.p, rec.witness
    if 4 * p < d:
        problems.append(f"p={p} below d/4")
    if chi(d, p) != 1:
        problems.append(f"chi({d}, {p}) != 1")
    if principal_form(d)(w.x, w.y) != p:
        problems.append(f"witness {tuple(w)} does not evaluate to p")
    return problems

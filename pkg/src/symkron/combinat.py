"""Integer partitions, compositions, dominance order, and tableau counting.

Conventions used across the package:

* A partition is a weakly decreasing tuple of positive integers; zero parts
  are never stored.  A composition is a tuple of nonnegative integers whose
  length and zero parts are both meaningful.
* Partitions of ``d`` are listed in reverse lexicographic order, ``(d)``
  first and ``(1, ..., 1)`` last.  This total order refines the dominance
  order, which keeps tableau-count matrices unit upper triangular.
* Compositions of ``d`` into ``n`` parts are listed lexicographically
  descending, ``(d, 0, ..., 0)`` first.

All values are immutable and all functions are pure; the memoized tables
are write-once and safe to share between threads.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DegreeMismatchError


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        t = tuple(int(p) for p in parts)
        for i, p in enumerate(t):
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {t}")
            if i and t[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing, got {t}")
        return tuple.__new__(cls, t)

    @property
    def degree(self) -> int:
        return sum(self)


class Composition(tuple):
    """Tuple of nonnegative integers; zero parts are kept."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Composition":
        t = tuple(int(p) for p in parts)
        for p in t:
            if p < 0:
                raise ValueError(f"composition parts must be nonnegative, got {t}")
        return tuple.__new__(cls, t)

    @property
    def degree(self) -> int:
        return sum(self)


def sort_to_partition(parts: Iterable[int]) -> Partition:
    """Drop zero parts and sort the rest weakly decreasing."""
    c = Composition(parts)
    return Partition(sorted((p for p in c if p > 0), reverse=True))


def enumerate_compositions(n: int, d: int) -> list[Composition]:
    """All compositions of ``d`` into ``n`` ordered parts, lex descending."""
    if n < 0 or d < 0:
        raise ValueError("n and d must be nonnegative")
    if n == 0:
        return [Composition()] if d == 0 else []
    out: list[Composition] = []

    def fill(prefix: tuple[int, ...], k: int, rem: int) -> None:
        if k == 1:
            out.append(Composition(prefix + (rem,)))
            return
        for v in range(rem, -1, -1):
            fill(prefix + (v,), k - 1, rem - v)

    fill((), n, d)
    return out


@lru_cache(maxsize=None)
def enumerate_partitions(d: int) -> tuple[Partition, ...]:
    """All partitions of ``d`` in reverse lexicographic order."""
    if d < 0:
        raise ValueError("d must be nonnegative")

    def gen(rem: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, cap), 0, -1):
            for rest in gen(rem - first, first):
                yield (first,) + rest

    return tuple(Partition(p) for p in gen(d, d))


def conjugate(lam: Iterable[int]) -> Partition:
    """Transpose of the Young diagram: part j counts rows of length >= j."""
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def dominance_leq(mu: Iterable[int], lam: Iterable[int]) -> bool:
    """True iff every prefix sum of ``mu`` is at most the one of ``lam``."""
    mu = Partition(mu)
    lam = Partition(lam)
    if mu.degree != lam.degree:
        raise DegreeMismatchError(
            f"dominance compares partitions of equal degree, got {mu.degree} and {lam.degree}"
        )
    total_mu = 0
    total_lam = 0
    for i in range(max(len(mu), len(lam))):
        total_mu += mu[i] if i < len(mu) else 0
        total_lam += lam[i] if i < len(lam) else 0
        if total_mu > total_lam:
            return False
    return True


def count_ssyt(shape: Iterable[int], content: Iterable[int]) -> int:
    """Number of semistandard tableaux of the given shape and content.

    Fillings place ``content[k-1]`` copies of the entry ``k`` so that rows
    weakly increase and columns strictly increase.  Computed by peeling the
    horizontal strip occupied by the largest entry, memoized on the
    remaining (shape, content) pair.
    """
    shape = Partition(shape)
    content = Composition(content)
    if shape.degree != content.degree:
        raise DegreeMismatchError(
            f"shape has degree {shape.degree} but content has degree {content.degree}"
        )
    return _count_fillings(tuple(shape), tuple(content))


@lru_cache(maxsize=None)
def _count_fillings(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    if not content:
        return 1 if not shape else 0
    size = content[-1]
    rest = content[:-1]
    return sum(_count_fillings(inner, rest) for inner in _strip_removals(shape, size))


def _strip_removals(shape: tuple[int, ...], size: int) -> list[tuple[int, ...]]:
    """Shapes left after removing a horizontal strip of ``size`` boxes.

    Row ``i`` keeps between ``shape[i+1]`` and ``shape[i]`` boxes so that no
    two removed boxes share a column and the result is again a partition.
    """
    n = len(shape)
    out: list[tuple[int, ...]] = []

    def walk(i: int, removed: int, prefix: tuple[int, ...]) -> None:
        if removed > size:
            return
        if i == n:
            if removed == size:
                out.append(tuple(p for p in prefix if p))
            return
        lo = shape[i + 1] if i + 1 < n else 0
        for keep in range(shape[i], lo - 1, -1):
            walk(i + 1, removed + shape[i] - keep, prefix + (keep,))

    walk(0, 0, ())
    return out


@lru_cache(maxsize=None)
def count_standard_tableaux(lam: Partition) -> int:
    """Number of standard tableaux of the given shape."""
    lam = Partition(lam)
    return count_ssyt(lam, (1,) * lam.degree)


def multinomial(d: int, parts: Iterable[int]) -> int:
    """d! divided by the factorials of the parts; the parts must sum to d."""
    parts = tuple(parts)
    if any(p < 0 for p in parts) or sum(parts) != d:
        raise ValueError(f"parts {parts} do not decompose {d}")
    out = math.factorial(d)
    for p in parts:
        out //= math.factorial(p)
    return out


def format_parts(parts: Iterable[int]) -> str:
    """Render a partition or composition as comma-separated integers.

    The empty sequence renders as ``[]``.
    """
    parts = tuple(parts)
    return ",".join(str(p) for p in parts) if parts else "[]"


def parse_parts(text: str) -> tuple[int, ...]:
    """Inverse of :func:`format_parts`; accepts ``[]`` or an empty string."""
    s = text.strip()
    if s in ("", "[]"):
        return ()
    try:
        return tuple(int(tok) for tok in s.split(","))
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None

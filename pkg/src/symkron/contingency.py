"""Nonnegative integer matrices with prescribed margins.

These matrices index the decomposition of a tensor product of permutation
modules: every matrix with row sums ``lam`` and column sums ``mu``
contributes one transitive summand, whose class is the matrix read
row-major as a composition and sorted to a partition.

Enumeration order is canonical and documented: matrices are produced in
lexicographically descending order of their row-major entry vector, so
output is byte-stable across runs.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .combinat import Composition, Partition, sort_to_partition
from .errors import DegreeMismatchError


@dataclass(frozen=True)
class ContingencyMatrix:
    """Matrix of nonnegative integers with fixed row and column sums."""

    rows: tuple[tuple[int, ...], ...]
    row_sums: Composition
    col_sums: Composition

    def __post_init__(self):
        n = len(self.col_sums)
        if len(self.rows) != len(self.row_sums):
            raise ValueError("row count does not match row_sums")
        for i, row in enumerate(self.rows):
            if len(row) != n:
                raise ValueError("column count does not match col_sums")
            if sum(row) != self.row_sums[i]:
                raise ValueError(f"row {i} sums to {sum(row)}, expected {self.row_sums[i]}")
        for j in range(n):
            col = sum(row[j] for row in self.rows)
            if col != self.col_sums[j]:
                raise ValueError(f"column {j} sums to {col}, expected {self.col_sums[j]}")

    def as_composition(self) -> Composition:
        """Row-major reading of the entries."""
        return Composition(v for row in self.rows for v in row)

    def transpose(self) -> "ContingencyMatrix":
        flipped = tuple(zip(*self.rows)) if self.rows else ((),) * len(self.col_sums)
        if not self.rows:
            flipped = tuple(() for _ in self.col_sums)
        return ContingencyMatrix(flipped, self.col_sums, self.row_sums)

    def to_json_dict(self) -> dict:
        return {
            "rows": [list(row) for row in self.rows],
            "row_sums": list(self.row_sums),
            "col_sums": list(self.col_sums),
        }


def _check_degrees(lam: Iterable[int], mu: Iterable[int]) -> tuple[Composition, Composition]:
    lam = Composition(lam)
    mu = Composition(mu)
    if lam.degree != mu.degree:
        raise DegreeMismatchError(
            f"margins have different totals: {lam.degree} and {mu.degree}"
        )
    return lam, mu


def _bounded_compositions(total: int, caps: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Compositions of ``total`` with entry ``j`` at most ``caps[j]``, lex descending."""
    n = len(caps)
    suffix = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        suffix[k] = suffix[k + 1] + caps[k]

    def walk(k: int, rem: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if k == n:
            if rem == 0:
                yield prefix
            return
        hi = min(caps[k], rem)
        lo = max(0, rem - suffix[k + 1])
        for v in range(hi, lo - 1, -1):
            yield from walk(k + 1, rem - v, prefix + (v,))

    return walk(0, total, ())


def contingency_matrices(lam: Iterable[int], mu: Iterable[int]) -> list[ContingencyMatrix]:
    """All matrices with row sums ``lam`` and column sums ``mu``.

    Rows are generated one at a time as bounded compositions of the row sum,
    the bounds being the remaining column budgets.
    """
    lam, mu = _check_degrees(lam, mu)
    out: list[ContingencyMatrix] = []

    def fill(i: int, budgets: tuple[int, ...], acc: tuple[tuple[int, ...], ...]) -> None:
        if i == len(lam):
            out.append(ContingencyMatrix(acc, lam, mu))
            return
        for row in _bounded_compositions(lam[i], budgets):
            fill(i + 1, tuple(b - r for b, r in zip(budgets, row)), acc + (row,))

    fill(0, tuple(mu), ())
    return out


def decompose_permutation_tensor(lam: Iterable[int], mu: Iterable[int]) -> dict[Partition, int]:
    """Multiset of transitive classes in the tensor product of two permutation modules.

    Each margin matrix contributes its row-major composition, sorted to a
    partition; the result maps each class to its multiplicity, keys in
    canonical partition order.
    """
    counts = Counter(
        sort_to_partition(m.as_composition()) for m in contingency_matrices(lam, mu)
    )
    return {p: counts[p] for p in sorted(counts, reverse=True)}


def hom_dimension(lam: Iterable[int], mu: Iterable[int]) -> int:
    """Number of matrices with the given margins, without materializing them.

    Counts row by row; the count from a partially filled matrix depends only
    on the multiset of remaining column budgets, which keeps the memo table
    small.
    """
    lam, mu = _check_degrees(lam, mu)
    return _count_tables(tuple(lam), tuple(sorted(mu, reverse=True)))


@lru_cache(maxsize=None)
def _count_tables(row_sums: tuple[int, ...], budgets: tuple[int, ...]) -> int:
    if not row_sums:
        return 1
    total = 0
    for row in _bounded_compositions(row_sums[0], budgets):
        rest = tuple(sorted((b - r for b, r in zip(budgets, row)), reverse=True))
        total += _count_tables(row_sums[1:], rest)
    return total

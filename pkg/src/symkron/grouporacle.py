"""Brute-force symmetric group layer: the independent verifier.

Everything here is computed from first principles on explicit tuples and
permutations, so it can cross-check the structural rules implemented in
:mod:`symkron.contingency` and :mod:`symkron.kronecker`:

* permutation modules are spanned by tuples with a prescribed multiplicity
  of each value, acted on by place permutation from the right;
* tensor products of two such modules are decomposed by enumerating the
  orbits of basis pairs, and each orbit is checked against the value-overlap
  matrix classification instead of assuming it;
* characters are evaluated on one representative per cycle type, and the
  irreducible characters are recovered from the permutation characters with
  the inverse tableau-count matrix.

Permutation convention: a permutation of degree d is a tuple of 1-based
images, composition is ``(sigma tau)(t) = sigma(tau(t))``, and the place
action on tuples is ``act(sigma, i)[t] = i[sigma(t)]``, which makes
``act(tau, act(sigma, i)) == act(compose(sigma, tau), i)``.

Orbit enumeration and rank computation refuse inputs beyond configurable
caps (environment overrides ``SYMKRON_MAX_PAIRS`` and ``SYMKRON_MAX_GROUP``);
this layer exists for desk-scale verification, not production counting.
"""

from __future__ import annotations

import itertools
import math
import os
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from . import symfunc
from .combinat import (
    Composition,
    Partition,
    conjugate,
    enumerate_partitions,
    multinomial,
    sort_to_partition,
)
from .errors import BudgetExceededError, DegreeMismatchError, InternalConsistencyError

MAX_ORBIT_PAIRS = int(os.environ.get("SYMKRON_MAX_PAIRS", "200000"))
MAX_GROUP_ORDER = int(os.environ.get("SYMKRON_MAX_GROUP", str(math.factorial(8))))

IndexTuple = tuple[int, ...]
Perm = tuple[int, ...]


# -- permutations ------------------------------------------------------------


def identity_perm(d: int) -> Perm:
    return tuple(range(1, d + 1))


def compose(sigma: Perm, tau: Perm) -> Perm:
    """Product with ``(sigma tau)(t) = sigma(tau(t))``."""
    return tuple(sigma[t - 1] for t in tau)


def perm_sign(sigma: Perm) -> int:
    seen = [False] * len(sigma)
    sign = 1
    for start in range(len(sigma)):
        if seen[start]:
            continue
        length = 0
        t = start
        while not seen[t]:
            seen[t] = True
            t = sigma[t] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def cycle_type(sigma: Perm) -> Partition:
    seen = [False] * len(sigma)
    lengths = []
    for start in range(len(sigma)):
        if seen[start]:
            continue
        length = 0
        t = start
        while not seen[t]:
            seen[t] = True
            t = sigma[t] - 1
            length += 1
        lengths.append(length)
    return Partition(sorted(lengths, reverse=True))


def representative_permutation(rho: Iterable[int]) -> Perm:
    """Canonical element of a conjugacy class: decreasing cycles on consecutive points."""
    rho = Partition(rho)
    images = []
    start = 1
    for length in rho:
        images.extend(range(start + 1, start + length))
        images.append(start)
        start += length
    return tuple(images)


def act(sigma: Perm, i: IndexTuple) -> IndexTuple:
    """Right place permutation: position t receives the entry at sigma(t)."""
    if len(sigma) != len(i):
        raise DegreeMismatchError(
            f"permutation degree {len(sigma)} does not match tuple length {len(i)}"
        )
    return tuple(i[s - 1] for s in sigma)


# -- permutation module bases ------------------------------------------------


def enumerate_tuples(lam: Iterable[int]) -> list[IndexTuple]:
    """All tuples with ``lam[l-1]`` entries equal to ``l``, lexicographic order."""
    lam = Composition(lam)
    counts = [(value, count) for value, count in enumerate(lam, start=1) if count]
    out: list[IndexTuple] = []
    prefix: list[int] = []

    def walk(remaining: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for k, (value, count) in enumerate(counts):
            if count:
                counts[k] = (value, count - 1)
                prefix.append(value)
                walk(remaining - 1)
                prefix.pop()
                counts[k] = (value, count)

    walk(lam.degree)
    return out


def _overlap_matrix(i: IndexTuple, j: IndexTuple, m: int, n: int) -> tuple[tuple[int, ...], ...]:
    """Entry (s, t) counts positions carrying value s+1 in ``i`` and t+1 in ``j``."""
    mat = [[0] * n for _ in range(m)]
    for a, b in zip(i, j):
        mat[a - 1][b - 1] += 1
    return tuple(tuple(row) for row in mat)


def tensor_orbit_decompose(
    lam: Iterable[int], mu: Iterable[int], *, max_pairs: int | None = None
) -> dict[Partition, int]:
    """Decompose a tensor product of permutation modules by explicit orbits.

    The basis of the product is the set of tuple pairs; orbits under the
    simultaneous place action are closed under adjacent transpositions.  For
    every orbit this verifies, rather than assumes, that all members share
    one value-overlap matrix and that the orbit size is the multinomial of
    that matrix; the orbit's class is the matrix read row-major and sorted.
    """
    lam = Composition(lam)
    mu = Composition(mu)
    if lam.degree != mu.degree:
        raise DegreeMismatchError(
            f"margins have different totals: {lam.degree} and {mu.degree}"
        )
    d = lam.degree
    cap = MAX_ORBIT_PAIRS if max_pairs is None else max_pairs
    n_pairs = multinomial(d, lam) * multinomial(d, mu)
    if n_pairs > cap:
        raise BudgetExceededError(
            f"{n_pairs} basis pairs exceed the cap of {cap}"
        )
    left = enumerate_tuples(lam)
    right = enumerate_tuples(mu)
    m, n = len(lam), len(mu)
    # Adjacent transpositions generate the whole group.
    gens = []
    for k in range(d - 1):
        images = list(range(1, d + 1))
        images[k], images[k + 1] = images[k + 1], images[k]
        gens.append(tuple(images))

    seen: set[tuple[IndexTuple, IndexTuple]] = set()
    classes: Counter[Partition] = Counter()
    for i0 in left:
        for j0 in right:
            start = (i0, j0)
            if start in seen:
                continue
            orbit = {start}
            frontier = deque([start])
            while frontier:
                i, j = frontier.popleft()
                for g in gens:
                    nxt = (act(g, i), act(g, j))
                    if nxt not in orbit:
                        orbit.add(nxt)
                        frontier.append(nxt)
            seen |= orbit
            overlap = _overlap_matrix(i0, j0, m, n)
            for i, j in orbit:
                if _overlap_matrix(i, j, m, n) != overlap:
                    raise InternalConsistencyError(
                        "orbit members disagree on the overlap matrix"
                    )
            flat = Composition(v for row in overlap for v in row)
            if len(orbit) != multinomial(d, flat):
                raise InternalConsistencyError(
                    f"orbit size {len(orbit)} differs from multinomial of {tuple(flat)}"
                )
            classes[sort_to_partition(flat)] += 1
    return {p: classes[p] for p in sorted(classes, reverse=True)}


# -- characters ----------------------------------------------------------------


class CharacterVector:
    """Class function on the degree-d symmetric group, indexed by cycle type."""

    __slots__ = ("degree", "values")

    def __init__(self, degree: int, values: Mapping[Iterable[int], int]):
        cycle_types = enumerate_partitions(degree)
        vals = {Partition(k): v for k, v in values.items()}
        if set(vals) != set(cycle_types):
            raise ValueError("values must cover every cycle type exactly once")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "values", {rho: vals[rho] for rho in cycle_types})

    def __setattr__(self, name, value):
        raise AttributeError("CharacterVector is immutable")

    def __call__(self, rho: Iterable[int]):
        return self.values[Partition(rho)]

    __getitem__ = __call__

    def items(self):
        return self.values.items()

    def __eq__(self, other) -> bool:
        if not isinstance(other, CharacterVector):
            return NotImplemented
        return self.degree == other.degree and self.values == other.values

    __hash__ = None

    def __mul__(self, other: "CharacterVector") -> "CharacterVector":
        if self.degree != other.degree:
            raise DegreeMismatchError("pointwise product needs equal degrees")
        return CharacterVector(
            self.degree, {rho: v * other.values[rho] for rho, v in self.values.items()}
        )

    def __repr__(self) -> str:
        body = ", ".join(f"{tuple(r)}: {v}" for r, v in self.values.items())
        return f"CharacterVector(degree={self.degree}, {{{body}}})"


@dataclass(frozen=True, eq=True)
class CycleTypeData:
    """Class sizes and centralizer orders for every cycle type of one degree."""

    degree: int
    class_size: dict
    centralizer_order: dict


@lru_cache(maxsize=None)
def cycle_type_data(d: int) -> CycleTypeData:
    class_size = {}
    centralizer = {}
    for rho in enumerate_partitions(d):
        mult = Counter(rho)
        z = 1
        for k, m in mult.items():
            z *= k**m * math.factorial(m)
        centralizer[rho] = z
        class_size[rho] = math.factorial(d) // z
    if sum(class_size.values()) != math.factorial(d):
        raise InternalConsistencyError("class sizes do not partition the group")
    return CycleTypeData(d, class_size, centralizer)


@lru_cache(maxsize=None)
def _perm_char(lam: Composition) -> CharacterVector:
    d = lam.degree
    tuples = enumerate_tuples(lam)
    values = {}
    for rho in enumerate_partitions(d):
        rep = representative_permutation(rho)
        values[rho] = sum(1 for t in tuples if act(rep, t) == t)
    return CharacterVector(d, values)


def permutation_character(lam: Iterable[int]) -> CharacterVector:
    """Character of the permutation module: fixed basis tuples per cycle type."""
    return _perm_char(Composition(lam))


def character_scalar_product(phi: CharacterVector, psi: CharacterVector) -> Fraction:
    """Group-averaged pairing, summed per cycle type with class sizes.

    Characters of a symmetric group are constant on inverse pairs, so the
    usual inverse in the second slot drops out.
    """
    if phi.degree != psi.degree:
        raise DegreeMismatchError("scalar product needs equal degrees")
    d = phi.degree
    data = cycle_type_data(d)
    total = sum(
        Fraction(data.class_size[rho]) * phi(rho) * psi(rho)
        for rho in enumerate_partitions(d)
    )
    return total / math.factorial(d)


@lru_cache(maxsize=None)
def character_table(d: int) -> tuple[tuple[int, ...], ...]:
    """Irreducible characters, rows and columns in canonical partition order.

    Row ``lam`` is recovered by applying the inverse tableau-count matrix to
    the permutation characters, which decompose as nonnegative sums of the
    irreducibles with tableau-count multiplicities.
    """
    parts = enumerate_partitions(d)
    table = symfunc.build_kostka_table(d)
    perm_rows = [[_perm_char(Composition(mu))(rho) for rho in parts] for mu in parts]
    out = []
    for li, lam in enumerate(parts):
        row = []
        for rj in range(len(parts)):
            val = sum(
                table.inverse[mi][li] * perm_rows[mi][rj] for mi in range(len(parts))
            )
            row.append(val)
        out.append(tuple(row))
    return tuple(out)


def specht_character(lam: Iterable[int]) -> CharacterVector:
    """Irreducible character attached to a partition."""
    lam = Partition(lam)
    parts = enumerate_partitions(lam.degree)
    row = character_table(lam.degree)[parts.index(lam)]
    return CharacterVector(lam.degree, dict(zip(parts, row)))


def characteristic_map(phi: CharacterVector) -> symfunc.SymFunc:
    """Image of a class function in the power-sum basis.

    The coefficient of the power sum at a cycle type is the character value
    divided by the centralizer order.
    """
    data = cycle_type_data(phi.degree)
    terms = {
        rho: Fraction(value, data.centralizer_order[rho]) for rho, value in phi.items()
    }
    return symfunc.SymFunc("p", phi.degree, terms)


# -- explicit Specht generators -----------------------------------------------


def _column_word(lam: Partition) -> IndexTuple:
    """Tuple whose consecutive blocks run 1..c for the conjugate part sizes c."""
    out: list[int] = []
    for c in conjugate(lam):
        out.extend(range(1, c + 1))
    return tuple(out)


def _young_subgroup_signed(block_sizes: tuple[int, ...], d: int):
    """Yield (permutation, sign) over the direct product of block permutations."""
    offsets = []
    start = 0
    for size in block_sizes:
        offsets.append((start, size))
        start += size
    pools = [list(itertools.permutations(range(size))) for _, size in offsets]
    for choice in itertools.product(*pools):
        images = list(range(1, d + 1))
        sign = 1
        for (start, size), local in zip(offsets, choice):
            for t in range(size):
                images[start + t] = start + local[t] + 1
            sign *= perm_sign(tuple(x + 1 for x in local))
        yield tuple(images), sign


def specht_generator_rank(lam: Iterable[int], *, max_group: int | None = None) -> int:
    """Rank of the span of the orbit of the signed column-symmetrized tuple.

    Builds the alternating sum over the column Young subgroup applied to the
    column word, pushes it around by every group element, and row reduces
    over exact rationals.
    """
    lam = Partition(lam)
    d = lam.degree
    cap = MAX_GROUP_ORDER if max_group is None else max_group
    if math.factorial(d) > cap:
        raise BudgetExceededError(f"group order {math.factorial(d)} exceeds the cap of {cap}")
    base = _column_word(lam)
    generator: dict[IndexTuple, int] = {}
    for sigma, sign in _young_subgroup_signed(tuple(conjugate(lam)), d):
        moved = act(sigma, base)
        generator[moved] = generator.get(moved, 0) + sign
    generator = {t: c for t, c in generator.items() if c}

    vectors = []
    seen: set[frozenset] = set()
    for pi in itertools.permutations(range(1, d + 1)):
        moved = {act(pi, t): c for t, c in generator.items()}
        anchor = min(moved)
        if moved[anchor] < 0:
            moved = {t: -c for t, c in moved.items()}
        key = frozenset(moved.items())
        if key not in seen:
            seen.add(key)
            vectors.append(moved)
    return _rational_rank(vectors)


def _rational_rank(vectors: list[dict[IndexTuple, int]]) -> int:
    """Rank of sparse rational row vectors by incremental elimination."""
    pivots: dict[IndexTuple, dict[IndexTuple, Fraction]] = {}
    rank = 0
    for vec in vectors:
        row = {c: Fraction(v) for c, v in vec.items() if v}
        while row:
            col = min(row)
            if col in pivots:
                factor = row[col]
                for c, v in pivots[col].items():
                    nv = row.get(c, Fraction(0)) - factor * v
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
            else:
                factor = row[col]
                pivots[col] = {c: v / factor for c, v in row.items()}
                rank += 1
                break
    return rank

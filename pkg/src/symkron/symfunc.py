"""Degree-graded symmetric functions over exact rationals.

Five classical bases are supported: monomial ``m``, elementary ``e``,
complete ``h``, power sum ``p``, and Schur ``s``.  Every conversion is
routed through the Schur basis:

* ``h -> s`` by the tableau-count (Kostka) matrix, ``s -> h`` by the
  shape-determinant expansion in complete functions;
* ``m <-> s`` by the Kostka matrix and its exact integer inverse;
* ``e -> s`` by expanding each ``e_k`` as the single-column determinant and
  multiplying in the ``h`` basis, ``s -> e`` by inverting the resulting
  integer matrix once per degree;
* ``p <-> s`` by the symmetric-group character table.

Coefficients are `fractions.Fraction` throughout; integrality is asserted
where the theory demands it instead of being assumed.  SymFunc values are
immutable; per-degree tables are built once and then only read.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .combinat import Partition, conjugate, count_ssyt, enumerate_partitions
from .errors import DegreeMismatchError, InternalConsistencyError

BASES = ("m", "e", "h", "p", "s")


class SymFunc:
    """Basis-tagged sparse rational combination of partitions of one degree.

    Zero coefficients are never stored.  Instances are immutable; all
    arithmetic returns new values.
    """

    __slots__ = ("basis", "degree", "terms")

    def __init__(self, basis: str, degree: int, terms: Mapping[Iterable[int], Fraction | int]):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}, expected one of {BASES}")
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        clean: dict[Partition, Fraction] = {}
        for lam, coeff in terms.items():
            lam = Partition(lam)
            if lam.degree != degree:
                raise DegreeMismatchError(
                    f"term {tuple(lam)} has degree {lam.degree}, expected {degree}"
                )
            c = Fraction(coeff)
            if c:
                clean[lam] = c
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SymFunc is immutable")

    def coeff(self, lam: Iterable[int]) -> Fraction:
        return self.terms.get(Partition(lam), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[Partition, Fraction]]:
        """Terms in canonical partition order."""
        return [(lam, self.terms[lam]) for lam in sorted(self.terms, reverse=True)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        return (
            self.basis == other.basis
            and self.degree == other.degree
            and self.terms == other.terms
        )

    __hash__ = None

    def _check_compatible(self, other: "SymFunc") -> None:
        if self.basis != other.basis:
            raise ValueError(f"mixed bases {self.basis!r} and {other.basis!r}; convert first")
        if self.degree != other.degree:
            raise DegreeMismatchError(
                f"mixed degrees {self.degree} and {other.degree}"
            )

    def __add__(self, other: "SymFunc") -> "SymFunc":
        self._check_compatible(other)
        acc = dict(self.terms)
        for lam, c in other.terms.items():
            acc[lam] = acc.get(lam, Fraction(0)) + c
        return SymFunc(self.basis, self.degree, acc)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def __neg__(self) -> "SymFunc":
        return SymFunc(self.basis, self.degree, {l: -c for l, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, factor) -> "SymFunc":
        c = Fraction(factor)
        return SymFunc(self.basis, self.degree, {l: c * v for l, v in self.terms.items()})

    def render(self) -> str:
        """Canonical text form, e.g. ``s[2,1] + 2*s[1,1,1]``; zero is ``0``."""
        if not self.terms:
            return "0"
        pieces = []
        for i, (lam, c) in enumerate(self.sorted_terms()):
            atom = f"{self.basis}[{','.join(str(p) for p in lam)}]"
            mag = abs(c)
            body = atom if mag == 1 else f"{mag}*{atom}"
            if i == 0:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" {'-' if c < 0 else '+'} {body}")
        return "".join(pieces)

    __str__ = render

    def __repr__(self) -> str:
        return f"SymFunc({self.render()})"

    def to_json_dict(self) -> dict:
        return {
            "basis": self.basis,
            "degree": self.degree,
            "terms": [
                {"partition": list(lam), "coeff": str(c)} for lam, c in self.sorted_terms()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> "SymFunc":
        terms = {tuple(t["partition"]): Fraction(t["coeff"]) for t in data["terms"]}
        return cls(data["basis"], data["degree"], terms)

    @classmethod
    def from_json(cls, text: str) -> "SymFunc":
        return cls.from_json_dict(json.loads(text))


def basis_element(basis: str, lam: Iterable[int]) -> SymFunc:
    """The single-term function ``1 * lam`` in the given basis."""
    lam = Partition(lam)
    return SymFunc(basis, lam.degree, {lam: Fraction(1)})


class KostkaTable:
    """Tableau-count transition matrix at one degree, with exact inverse.

    Rows and columns are indexed by the canonical partition list; the matrix
    is unit upper triangular in that order and its inverse has integer
    entries.
    """

    def __init__(self, degree: int):
        parts = enumerate_partitions(degree)
        n = len(parts)
        index = {p: i for i, p in enumerate(parts)}
        matrix = [[count_ssyt(l, m) for m in parts] for l in parts]
        for i in range(n):
            if matrix[i][i] != 1:
                raise InternalConsistencyError("tableau-count matrix is not unitriangular")
            for j in range(i):
                if matrix[i][j] != 0:
                    raise InternalConsistencyError("tableau-count matrix is not triangular")
        # Back substitution; entries stay integers because the diagonal is 1.
        inverse = [[0] * n for _ in range(n)]
        for i in range(n - 1, -1, -1):
            inverse[i][i] = 1
            for j in range(i + 1, n):
                inverse[i][j] = -sum(matrix[i][k] * inverse[k][j] for k in range(i + 1, j + 1))
        for i in range(n):
            for j in range(n):
                check = sum(matrix[i][k] * inverse[k][j] for k in range(n))
                if check != (1 if i == j else 0):
                    raise InternalConsistencyError("tableau-count inverse failed to verify")
        self.degree = degree
        self.partitions = parts
        self.index = index
        self.matrix = matrix
        self.inverse = inverse

    def kostka(self, lam: Iterable[int], mu: Iterable[int]) -> int:
        return self.matrix[self.index[Partition(lam)]][self.index[Partition(mu)]]

    def inverse_kostka(self, lam: Iterable[int], mu: Iterable[int]) -> int:
        return self.inverse[self.index[Partition(lam)]][self.index[Partition(mu)]]


@lru_cache(maxsize=None)
def build_kostka_table(d: int) -> KostkaTable:
    return KostkaTable(d)


def _parity(perm: tuple[int, ...]) -> int:
    """Sign of a permutation of 0..n-1 given as a tuple of images."""
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        t = start
        while not seen[t]:
            seen[t] = True
            t = perm[t]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def _det_expansion(parts: tuple[int, ...]) -> dict[Partition, int]:
    """Signed expansion of ``det(x_{parts[i] - i + j})`` with x_0 = 1, x_{<0} = 0.

    Each permutation contributes its sign on the sorted tuple of positive
    indices; the result maps partitions to integer coefficients.
    """
    n = len(parts)
    acc: dict[Partition, int] = {}
    for perm in itertools.permutations(range(n)):
        idx = [parts[i] - i + perm[i] for i in range(n)]
        if any(k < 0 for k in idx):
            continue
        key = Partition(sorted((k for k in idx if k > 0), reverse=True))
        acc[key] = acc.get(key, 0) + _parity(perm)
    return {k: v for k, v in acc.items() if v}


def jacobi_trudi(lam: Iterable[int]) -> SymFunc:
    """Schur function as the signed determinant expansion in the h basis."""
    lam = Partition(lam)
    return SymFunc("h", lam.degree, _det_expansion(tuple(lam)))


def jacobi_trudi_dual(lam: Iterable[int]) -> SymFunc:
    """Schur function as the conjugate-shape determinant in the e basis."""
    lam = Partition(lam)
    return SymFunc("e", lam.degree, _det_expansion(tuple(conjugate(lam))))


# ---------------------------------------------------------------------------
# Single-element conversion tables.  Each helper returns a dict mapping
# partitions to coefficients; callers must treat the returned dicts as
# read-only since they are cached.


def _hmul(a: dict[Partition, int], b: dict[Partition, int]) -> dict[Partition, int]:
    """Product of two h-basis expansions: concatenate and sort the indices."""
    out: dict[Partition, int] = {}
    for lam, x in a.items():
        for mu, y in b.items():
            key = Partition(sorted(lam + mu, reverse=True))
            out[key] = out.get(key, 0) + x * y
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _e_single_to_h(k: int) -> dict[Partition, int]:
    # e_k equals the Schur function of a single column of height k.
    return _det_expansion((1,) * k)


@lru_cache(maxsize=None)
def _e_elem_to_h(mu: Partition) -> dict[Partition, int]:
    acc: dict[Partition, int] = {Partition(): 1}
    for k in mu:
        acc = _hmul(acc, _e_single_to_h(k))
    return acc


@lru_cache(maxsize=None)
def _h_elem_to_s(lam: Partition) -> dict[Partition, int]:
    table = build_kostka_table(lam.degree)
    col = table.index[lam]
    return {
        nu: table.matrix[i][col]
        for i, nu in enumerate(table.partitions)
        if table.matrix[i][col]
    }


@lru_cache(maxsize=None)
def _e_elem_to_s(mu: Partition) -> dict[Partition, int]:
    acc: dict[Partition, int] = {}
    for lam, c in _e_elem_to_h(mu).items():
        for nu, k in _h_elem_to_s(lam).items():
            acc[nu] = acc.get(nu, 0) + c * k
    return {k: v for k, v in acc.items() if v}


@lru_cache(maxsize=None)
def _m_elem_to_s(mu: Partition) -> dict[Partition, int]:
    table = build_kostka_table(mu.degree)
    row = table.index[mu]
    return {
        lam: table.inverse[row][j]
        for j, lam in enumerate(table.partitions)
        if table.inverse[row][j]
    }


@lru_cache(maxsize=None)
def _s_elem_to_m(lam: Partition) -> dict[Partition, int]:
    table = build_kostka_table(lam.degree)
    row = table.index[lam]
    return {
        mu: table.matrix[row][j]
        for j, mu in enumerate(table.partitions)
        if table.matrix[row][j]
    }


@lru_cache(maxsize=None)
def _s_to_e_matrix(d: int) -> tuple[tuple[int, ...], ...]:
    """Inverse of the (integer) matrix expanding e elements in the s basis."""
    parts = enumerate_partitions(d)
    n = len(parts)
    index = {p: i for i, p in enumerate(parts)}
    mat = [[Fraction(0)] * n for _ in range(n)]
    for j, mu in enumerate(parts):
        for nu, c in _e_elem_to_s(mu).items():
            mat[index[nu]][j] = Fraction(c)
    # Gauss-Jordan over exact rationals.
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if mat[r][col]), None)
        if pivot is None:
            raise InternalConsistencyError("e-to-s matrix is singular")
        mat[col], mat[pivot] = mat[pivot], mat[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        f = mat[col][col]
        mat[col] = [v / f for v in mat[col]]
        inv[col] = [v / f for v in inv[col]]
        for r in range(n):
            if r != col and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[col])]
                inv[r] = [a - f * b for a, b in zip(inv[r], inv[col])]
    out = []
    for row in inv:
        ints = []
        for v in row:
            if v.denominator != 1:
                raise InternalConsistencyError("s-to-e coefficients must be integers")
            ints.append(int(v))
        out.append(tuple(ints))
    return tuple(out)


@lru_cache(maxsize=None)
def _s_elem_to_e(nu: Partition) -> dict[Partition, int]:
    parts = enumerate_partitions(nu.degree)
    index = {p: i for i, p in enumerate(parts)}
    inv = _s_to_e_matrix(nu.degree)
    col = index[nu]
    return {mu: inv[i][col] for i, mu in enumerate(parts) if inv[i][col]}


def _char_entry(d: int):
    from . import grouporacle

    return grouporacle.character_table(d), enumerate_partitions(d)


@lru_cache(maxsize=None)
def _p_elem_to_s(rho: Partition) -> dict[Partition, int]:
    table, parts = _char_entry(rho.degree)
    index = {p: i for i, p in enumerate(parts)}
    col = index[rho]
    return {lam: table[i][col] for i, lam in enumerate(parts) if table[i][col]}


@lru_cache(maxsize=None)
def _s_elem_to_p(lam: Partition) -> dict[Partition, Fraction]:
    from . import grouporacle

    table, parts = _char_entry(lam.degree)
    data = grouporacle.cycle_type_data(lam.degree)
    index = {p: i for i, p in enumerate(parts)}
    row = index[lam]
    out = {}
    for j, rho in enumerate(parts):
        if table[row][j]:
            out[rho] = Fraction(table[row][j], data.centralizer_order[rho])
    return out


_TO_S = {"m": _m_elem_to_s, "e": _e_elem_to_s, "h": _h_elem_to_s, "p": _p_elem_to_s}
_FROM_S = {
    "m": _s_elem_to_m,
    "e": _s_elem_to_e,
    "h": lambda lam: _det_expansion(tuple(lam)),
    "p": _s_elem_to_p,
}


def convert(f: SymFunc, target: str) -> SymFunc:
    """The same symmetric function expressed in the target basis."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}, expected one of {BASES}")
    if target == f.basis:
        return f
    if f.basis == "s":
        mid = {lam: Fraction(c) for lam, c in f.terms.items()}
    else:
        to_s = _TO_S[f.basis]
        mid = {}
        for lam, c in f.terms.items():
            for nu, x in to_s(lam).items():
                mid[nu] = mid.get(nu, Fraction(0)) + c * x
    if target == "s":
        return SymFunc("s", f.degree, mid)
    from_s = _FROM_S[target]
    out: dict[Partition, Fraction] = {}
    for nu, c in mid.items():
        if not c:
            continue
        for lam, x in from_s(nu).items():
            out[lam] = out.get(lam, Fraction(0)) + c * x
    return SymFunc(target, f.degree, out)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Graded ring product, returned in the basis of ``f``.

    Both factors are expanded in the h basis, where the product just
    concatenates and sorts partition indices.
    """
    fh = convert(f, "h")
    gh = convert(g, "h")
    acc: dict[Partition, Fraction] = {}
    for lam, a in fh.terms.items():
        for mu, b in gh.terms.items():
            key = Partition(sorted(lam + mu, reverse=True))
            acc[key] = acc.get(key, Fraction(0)) + a * b
    return convert(SymFunc("h", f.degree + g.degree, acc), f.basis)


def scalar_product(f: SymFunc, g: SymFunc) -> Fraction:
    """Bilinear pairing in which the h and m bases are dual.

    Functions of different degrees pair to zero.
    """
    if f.degree != g.degree:
        return Fraction(0)
    fh = convert(f, "h")
    gm = convert(g, "m")
    total = Fraction(0)
    for lam in fh.terms.keys() & gm.terms.keys():
        total += fh.terms[lam] * gm.terms[lam]
    return total

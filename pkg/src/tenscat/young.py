"""Young diagram combinatorics and a Schur polynomial oracle.

Diagrams are ordered graded by size, then decreasing lexicographically on
their rows; :func:`diagram_key` is the sort key used for every
deterministic listing in the package.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple

from .errors import DomainError, InternalConsistencyError, check_bound

MAX_PARTITION_SIZE = 30
MAX_SYT_SIZE = 25
MAX_ORACLE_SIZE = 8


class YoungDiagram(tuple):
    """Weakly decreasing tuple of positive row lengths.

    Trailing zeros are dropped on construction; any other zero, negative or
    increasing entry is rejected.
    """

    def __new__(cls, rows: Iterable[int] = ()):
        if type(rows) is cls:
            return rows
        rows = list(rows)
        while rows and rows[-1] == 0:
            rows.pop()
        for r in rows:
            if isinstance(r, bool) or not isinstance(r, int):
                raise DomainError(f"row lengths must be integers, got {r!r}")
            if r < 1:
                raise DomainError(f"row lengths must be positive, got {rows}")
        for a, b in zip(rows, rows[1:]):
            if a < b:
                raise DomainError(f"rows must be weakly decreasing, got {rows}")
        return super().__new__(cls, rows)

    @property
    def rows(self) -> Tuple[int, ...]:
        return tuple(self)

    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> "YoungDiagram":
        return conjugate(self)

    def row(self, i: int) -> int:
        """Length of row ``i`` (0-based); rows past the end have length 0."""
        return self[i] if i < len(self) else 0

    def __str__(self) -> str:
        return "[" + ",".join(str(r) for r in self) + "]"

    def __repr__(self) -> str:
        return f"YoungDiagram({str(self)})"


EMPTY = YoungDiagram()


def diagram_key(d: YoungDiagram) -> Tuple[int, Tuple[int, ...]]:
    return (sum(d), tuple(-r for r in d))


def size(d: YoungDiagram) -> int:
    return sum(d)


def conjugate(d: YoungDiagram) -> YoungDiagram:
    return _conjugate_cached(YoungDiagram(d))


@lru_cache(maxsize=4096)
def _conjugate_cached(d: YoungDiagram) -> YoungDiagram:
    if not d:
        return EMPTY
    return YoungDiagram(sum(1 for r in d if r > c) for c in range(d[0]))


def contains(outer: YoungDiagram, inner: YoungDiagram) -> bool:
    """True iff ``inner`` fits inside ``outer`` row by row."""
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def partitions_of(n: int, *, max_size: int = MAX_PARTITION_SIZE) -> List[YoungDiagram]:
    """All partitions of ``n`` in decreasing lexicographic order."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    check_bound("n", n, max_size)
    return list(_partitions_cached(n))


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> Tuple[YoungDiagram, ...]:
    return tuple(YoungDiagram(p) for p in _partitions(n, n))


def _partitions(n: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def hook_lengths(d: YoungDiagram) -> List[int]:
    conj = conjugate(d)
    return [
        (d[r] - c - 1) + (conj[c] - r - 1) + 1
        for r in range(len(d))
        for c in range(d[r])
    ]


def syt_count(d: YoungDiagram, *, max_size: int = MAX_SYT_SIZE) -> int:
    """Number of standard Young tableaux of shape ``d`` (hook length formula)."""
    n = sum(d)
    check_bound("|d|", n, max_size)
    # Python ints are unbounded, so the exact quotient is safe at any size.
    return math.factorial(n) // math.prod(hook_lengths(d))


class MonomialPoly:
    """Polynomial in a fixed number of variables with integer coefficients.

    Terms map exponent tuples (length ``nvars``) to nonzero coefficients.
    Instances are treated as immutable; arithmetic returns new objects.
    """

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Tuple[int, ...], int] = ()):
        self.nvars = nvars
        clean: Dict[Tuple[int, ...], int] = {}
        for exp, c in dict(terms).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise DomainError(f"exponent {exp} does not have {nvars} entries")
            if c:
                clean[exp] = c
        self._terms = clean

    @property
    def terms(self) -> Dict[Tuple[int, ...], int]:
        return dict(self._terms)

    def coefficient(self, exp: Tuple[int, ...]) -> int:
        return self._terms.get(tuple(exp), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def _check(self, other: "MonomialPoly") -> None:
        if self.nvars != other.nvars:
            raise DomainError("polynomials have different variable counts")

    def __add__(self, other: "MonomialPoly") -> "MonomialPoly":
        self._check(other)
        out = dict(self._terms)
        for exp, c in other._terms.items():
            out[exp] = out.get(exp, 0) + c
        return MonomialPoly(self.nvars, out)

    def __sub__(self, other: "MonomialPoly") -> "MonomialPoly":
        return self + other.scale(-1)

    def scale(self, k: int) -> "MonomialPoly":
        return MonomialPoly(self.nvars, {e: k * c for e, c in self._terms.items()})

    def __mul__(self, other: "MonomialPoly") -> "MonomialPoly":
        self._check(other)
        out: Dict[Tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MonomialPoly(self.nvars, out)

    def leading_term(self) -> Tuple[Tuple[int, ...], int]:
        """Lexicographically largest exponent and its coefficient."""
        if not self._terms:
            raise DomainError("zero polynomial has no leading term")
        exp = max(self._terms)
        return exp, self._terms[exp]

    def swap_variables(self, i: int, j: int) -> "MonomialPoly":
        def swap(e):
            e = list(e)
            e[i], e[j] = e[j], e[i]
            return tuple(e)

        return MonomialPoly(self.nvars, {swap(e): c for e, c in self._terms.items()})

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp in sorted(self._terms, reverse=True):
            mono = "*".join(
                f"x{v + 1}" + (f"^{a}" if a > 1 else "") for v, a in enumerate(exp) if a
            )
            parts.append(f"{self._terms[exp]}*{mono}" if mono else str(self._terms[exp]))
        return " + ".join(parts)


def _semistandard_fillings(d: YoungDiagram, k: int) -> Iterator[Dict[Tuple[int, int], int]]:
    cells = [(r, c) for r in range(len(d)) for c in range(d[r])]
    grid: Dict[Tuple[int, int], int] = {}

    def rec(idx):
        if idx == len(cells):
            yield grid
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = grid[(r, c - 1)]
        if r > 0:
            lo = max(lo, grid[(r - 1, c)] + 1)
        for e in range(lo, k + 1):
            grid[(r, c)] = e
            yield from rec(idx + 1)
        grid.pop((r, c), None)

    yield from rec(0)


def schur_in_vars(d: YoungDiagram, k: int, *, max_size: int = MAX_ORACLE_SIZE) -> MonomialPoly:
    """Schur polynomial s_d(x_1..x_k) by semistandard tableau enumeration."""
    d = YoungDiagram(d)
    if k < 1:
        raise DomainError(f"need at least one variable, got k={k}")
    if k < len(d):
        raise DomainError(f"k={k} is smaller than the {len(d)} rows of {d}")
    check_bound("|d|", sum(d), max_size)
    return _schur_cached(d, k)


@lru_cache(maxsize=None)
def _schur_cached(d: YoungDiagram, k: int) -> MonomialPoly:
    terms: Dict[Tuple[int, ...], int] = {}
    for grid in _semistandard_fillings(d, k):
        exp = [0] * k
        for e in grid.values():
            exp[e - 1] += 1
        key = tuple(exp)
        terms[key] = terms.get(key, 0) + 1
    return MonomialPoly(k, terms)


def schur_product_expand(
    a: YoungDiagram, b: YoungDiagram, k: int, *, max_size: int = MAX_ORACLE_SIZE
) -> Dict[YoungDiagram, int]:
    """Expand s_a * s_b in the Schur basis on k variables.

    Works by repeatedly peeling off the lexicographically largest monomial,
    which for a symmetric polynomial is the leading term of a unique s_lambda.
    """
    a, b = YoungDiagram(a), YoungDiagram(b)
    n = sum(a) + sum(b)
    if k < n:
        raise DomainError(f"need k >= |a|+|b| = {n}, got k={k}")
    check_bound("|a|+|b|", n, max_size)
    remainder = schur_in_vars(a, k, max_size=max_size) * schur_in_vars(b, k, max_size=max_size)
    result: Dict[YoungDiagram, int] = {}
    while remainder:
        exp, coeff = remainder.leading_term()
        if coeff <= 0 or any(x < y for x, y in zip(exp, exp[1:])):
            raise InternalConsistencyError(
                f"elimination stalled at exponent {exp} with coefficient {coeff}"
            )
        lam = YoungDiagram(exp)
        if lam in result:
            raise InternalConsistencyError(f"{lam} reappeared during elimination")
        result[lam] = coeff
        remainder = remainder - schur_in_vars(lam, k, max_size=max_size).scale(coeff)
    return dict(sorted(result.items(), key=lambda kv: diagram_key(kv[0])))

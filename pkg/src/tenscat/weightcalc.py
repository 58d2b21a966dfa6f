"""Weight multiplicities of truncated mixed tensors.

The truncated module has p covariant slots with basis indices in 1..i and
q dual slots with indices in 1..j.  A basis tensor with covariant indices
a_s and dual indices b_t has weight sum eps_{a_s} - sum eps_{b_t}.
"""

from __future__ import annotations

import math
from collections.abc import Mapping
from typing import Dict, Iterable, Iterator, Tuple, Union

from .errors import DomainError, check_bound

MAX_SLOTS = 5
MAX_INDEX = 8


class Weight:
    """Finitely supported integer combination of the coordinate weights eps_j."""

    __slots__ = ("_items",)

    def __init__(self, coeffs: Union[Mapping, Iterable[Tuple[int, int]]] = ()):
        items = dict(coeffs.items() if isinstance(coeffs, Mapping) else coeffs)
        for j, n in items.items():
            if not isinstance(j, int) or j < 1:
                raise DomainError(f"weight indices must be positive integers, got {j!r}")
            if not isinstance(n, int):
                raise DomainError(f"weight coefficients must be integers, got {n!r}")
        self._items = tuple(sorted((j, n) for j, n in items.items() if n))

    @classmethod
    def epsilon(cls, j: int) -> "Weight":
        return cls({j: 1})

    def __getitem__(self, j: int) -> int:
        return dict(self._items).get(j, 0)

    def items(self) -> Tuple[Tuple[int, int], ...]:
        return self._items

    def support(self) -> Tuple[int, ...]:
        return tuple(j for j, _ in self._items)

    def total(self) -> int:
        return sum(n for _, n in self._items)

    def __add__(self, other: "Weight") -> "Weight":
        out = dict(self._items)
        for j, n in other._items:
            out[j] = out.get(j, 0) + n
        return Weight(out)

    def __neg__(self) -> "Weight":
        return Weight({j: -n for j, n in self._items})

    def __sub__(self, other: "Weight") -> "Weight":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Weight):
            return NotImplemented
        return self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def __bool__(self) -> bool:
        return bool(self._items)

    def text(self) -> str:
        """Canonical wire form, e.g. ``1:1,3:-1``; zero is ``""``."""
        return ",".join(f"{j}:{n}" for j, n in self._items)

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"Weight({self.text()!r})"


def _check(p, q, i, j):
    for name, value in (("p", p), ("q", q), ("i", i), ("j", j)):
        if value < 0:
            raise DomainError(f"{name} must be nonnegative, got {value}")


def _contents(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Compositions of ``total`` into ``parts`` nonnegative entries."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in _contents(total - first, parts - 1):
            yield (first,) + rest


def _multinomial(counts: Iterable[int]) -> int:
    counts = list(counts)
    out = math.factorial(sum(counts))
    for c in counts:
        out //= math.factorial(c)
    return out


def weight_multiplicity(
    p: int, q: int, i: int, j: int, chi: Weight,
    *, max_slots: int = MAX_SLOTS, max_index: int = MAX_INDEX,
) -> int:
    """Number of basis tensors of weight ``chi``.

    Counted by content: for each dual content d, the covariant content is
    forced to chi + d, and each pair contributes a product of multinomials.
    """
    _check(p, q, i, j)
    check_bound("p", p, max_slots)
    check_bound("q", q, max_slots)
    check_bound("i", i, max_index)
    check_bound("j", j, max_index)
    width = max([i, j, *chi.support()])
    target = [chi[k] for k in range(1, width + 1)]
    total = 0
    for d in _contents(q, j):
        c = list(target)
        for k, x in enumerate(d):
            c[k] += x
        if any(x < 0 for x in c) or any(c[i:]) or sum(c) != p:
            continue
        total += _multinomial(c[:i]) * _multinomial(d)
    return total


def weight_support_check(p: int, q: int, i: int, chi: Weight) -> bool:
    """Necessary conditions for ``chi`` to occur in V_i^{(x)p} (x) (V^{(x)q})*."""
    for k, n in chi.items():
        upper = p if k <= i else 0
        if not -q <= n <= upper:
            return False
    return chi.total() == p - q


def enumerate_weights(
    p: int, q: int, i: int, j: int,
    *, max_slots: int = MAX_SLOTS, max_index: int = MAX_INDEX,
) -> Dict[Weight, int]:
    """Full multiplicity map, sorted by the weight text form."""
    _check(p, q, i, j)
    check_bound("p", p, max_slots)
    check_bound("q", q, max_slots)
    check_bound("i", i, max_index)
    check_bound("j", j, max_index)
    covariant = {c: _multinomial(c) for c in _contents(p, i)}
    dual = {d: _multinomial(d) for d in _contents(q, j)}
    out: Dict[Weight, int] = {}
    for c, mc in covariant.items():
        pos = {k + 1: x for k, x in enumerate(c) if x}
        for d, md in dual.items():
            coeffs = dict(pos)
            for k, x in enumerate(d):
                if x:
                    coeffs[k + 1] = coeffs.get(k + 1, 0) - x
            w = Weight(coeffs)
            out[w] = out.get(w, 0) + mc * md
    return dict(sorted(out.items(), key=lambda kv: kv[0].text()))


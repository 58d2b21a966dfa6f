"""Contraction diagrams: the basis of Hom between mixed tensor objects.

A diagram from shape (p, q) to (p - k, q - k) pairs k covariant slots with
k contravariant slots, then routes the remaining slots bijectively onto the
target.  Slots are 1-based.  ``v_map[r]`` is the target slot of the r-th
uncontracted covariant source slot in increasing order; ``dual_map``
likewise for contravariant slots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations, product
from typing import Dict, List, NamedTuple, Optional, Tuple

from .errors import DomainError, check_bound

MAX_SLOTS = 6


class TensorShape(NamedTuple):
    p: int
    q: int

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


class TensorMonomial(NamedTuple):
    """Basis tensor: indices of v_a on covariant slots, v_b* on dual slots."""

    v: Tuple[int, ...]
    dual: Tuple[int, ...]


@dataclass(frozen=True, order=True)
class ContractionDiagram:
    source: TensorShape
    target: TensorShape
    contractions: Tuple[Tuple[int, int], ...]
    v_map: Tuple[int, ...]
    dual_map: Tuple[int, ...]

    def __post_init__(self):
        src, tgt = TensorShape(*self.source), TensorShape(*self.target)
        object.__setattr__(self, "source", src)
        object.__setattr__(self, "target", tgt)
        pairs = tuple(sorted(tuple(pair) for pair in self.contractions))
        object.__setattr__(self, "contractions", pairs)
        object.__setattr__(self, "v_map", tuple(self.v_map))
        object.__setattr__(self, "dual_map", tuple(self.dual_map))

        if min(src + tgt) < 0:
            raise DomainError("shapes must be nonnegative")
        k = len(pairs)
        if tgt != (src.p - k, src.q - k):
            raise DomainError(f"{k} contractions cannot map {src} to {tgt}")
        vs = [a for a, _ in pairs]
        ds = [b for _, b in pairs]
        if len(set(vs)) != k or len(set(ds)) != k:
            raise DomainError("contracted slots must be pairwise distinct")
        if not all(1 <= a <= src.p for a in vs) or not all(1 <= b <= src.q for b in ds):
            raise DomainError("contraction slot out of range")
        if sorted(self.v_map) != list(range(1, tgt.p + 1)):
            raise DomainError(f"v_map {self.v_map} is not a bijection onto 1..{tgt.p}")
        if sorted(self.dual_map) != list(range(1, tgt.q + 1)):
            raise DomainError(f"dual_map {self.dual_map} is not a bijection onto 1..{tgt.q}")

    @cached_property
    def free_v(self) -> Tuple[int, ...]:
        used = {a for a, _ in self.contractions}
        return tuple(a for a in range(1, self.source.p + 1) if a not in used)

    @cached_property
    def free_dual(self) -> Tuple[int, ...]:
        used = {b for _, b in self.contractions}
        return tuple(b for b in range(1, self.source.q + 1) if b not in used)

    @cached_property
    def _v_route(self) -> Dict[int, int]:
        return dict(zip(self.free_v, self.v_map))

    @cached_property
    def _dual_route(self) -> Dict[int, int]:
        return dict(zip(self.free_dual, self.dual_map))

    def v_target(self, slot: int) -> Optional[int]:
        """Target of covariant source slot, or None if it is contracted."""
        return self._v_route.get(slot)

    def dual_target(self, slot: int) -> Optional[int]:
        return self._dual_route.get(slot)

    def to_json(self) -> dict:
        return {
            "src": [self.source.p, self.source.q],
            "tgt": [self.target.p, self.target.q],
            "contract": [[a, b] for a, b in self.contractions],
            "vmap": list(self.v_map),
            "dmap": list(self.dual_map),
        }

    @classmethod
    def from_json(cls, doc: dict) -> "ContractionDiagram":
        return cls(
            TensorShape(*doc["src"]),
            TensorShape(*doc["tgt"]),
            tuple(tuple(pair) for pair in doc["contract"]),
            tuple(doc["vmap"]),
            tuple(doc["dmap"]),
        )


def identity(shape: TensorShape) -> ContractionDiagram:
    p, q = shape
    return ContractionDiagram(
        TensorShape(p, q), TensorShape(p, q), (), tuple(range(1, p + 1)), tuple(range(1, q + 1))
    )


def _degree(src: TensorShape, tgt: TensorShape) -> Optional[int]:
    k = src[0] - tgt[0]
    if k < 0 or src[1] - tgt[1] != k or tgt[0] < 0 or tgt[1] < 0:
        return None
    return k


def _check_shapes(src, tgt, max_slots):
    for x in (*src, *tgt):
        if x < 0:
            raise DomainError(f"slot counts must be nonnegative, got {src} -> {tgt}")
        check_bound("slot count", x, max_slots)


def hom_dim(src: TensorShape, tgt: TensorShape, *, max_slots: int = MAX_SLOTS) -> int:
    _check_shapes(src, tgt, max_slots)
    k = _degree(src, tgt)
    if k is None:
        return 0
    p, q = src
    return (
        math.comb(p, k) * math.comb(q, k) * math.factorial(k)
        * math.factorial(p - k) * math.factorial(q - k)
    )


def enumerate_basis(
    src: TensorShape, tgt: TensorShape, *, max_slots: int = MAX_SLOTS
) -> List[ContractionDiagram]:
    """Every contraction diagram src -> tgt, sorted by (contractions, v_map, dual_map)."""
    _check_shapes(src, tgt, max_slots)
    src, tgt = TensorShape(*src), TensorShape(*tgt)
    k = _degree(src, tgt)
    if k is None:
        return []
    out = []
    for vs in combinations(range(1, src.p + 1), k):
        for ds in permutations(range(1, src.q + 1), k):
            pairs = tuple(zip(vs, ds))
            for vmap in permutations(range(1, tgt.p + 1)):
                for dmap in permutations(range(1, tgt.q + 1)):
                    out.append(ContractionDiagram(src, tgt, pairs, vmap, dmap))
    out.sort()
    return out


def compose(outer: ContractionDiagram, inner: ContractionDiagram) -> ContractionDiagram:
    """The diagram of ``outer`` after ``inner``."""
    if inner.target != outer.source:
        raise DomainError(f"cannot compose: {inner.target} != {outer.source}")
    v_back = {t: s for s, t in inner._v_route.items()}
    d_back = {t: s for s, t in inner._dual_route.items()}
    pairs = list(inner.contractions)
    pairs.extend((v_back[a], d_back[b]) for a, b in outer.contractions)
    free_v = [a for a in inner.free_v if outer.v_target(inner.v_target(a)) is not None]
    free_d = [b for b in inner.free_dual if outer.dual_target(inner.dual_target(b)) is not None]
    return ContractionDiagram(
        inner.source,
        outer.target,
        tuple(pairs),
        tuple(outer.v_target(inner.v_target(a)) for a in free_v),
        tuple(outer.dual_target(inner.dual_target(b)) for b in free_d),
    )


def evaluate(d: ContractionDiagram, m: TensorMonomial) -> Optional[TensorMonomial]:
    """Apply ``d`` to a basis tensor.

    Returns the image monomial (coefficient 1), or None when some contracted
    pair carries different indices and the image is zero.
    """
    m = TensorMonomial(tuple(m[0]), tuple(m[1]))
    if len(m.v) != d.source.p or len(m.dual) != d.source.q:
        raise DomainError(f"monomial {m} does not fit shape {d.source}")
    if any(not isinstance(x, int) or x < 1 for x in m.v + m.dual):
        raise DomainError(f"basis indices must be positive integers, got {m}")
    for a, b in d.contractions:
        if m.v[a - 1] != m.dual[b - 1]:
            return None
    v = [0] * d.target.p
    for slot, t in d._v_route.items():
        v[t - 1] = m.v[slot - 1]
    dual = [0] * d.target.q
    for slot, t in d._dual_route.items():
        dual[t - 1] = m.dual[slot - 1]
    return TensorMonomial(tuple(v), tuple(dual))


def monomials(shape: TensorShape, alphabet: int) -> List[TensorMonomial]:
    """All basis tensors of ``shape`` with indices in 1..alphabet."""
    letters = range(1, alphabet + 1)
    return [
        TensorMonomial(v, dual)
        for v in product(letters, repeat=shape[0])
        for dual in product(letters, repeat=shape[1])
    ]


def induced_map(d: ContractionDiagram, alphabet: int) -> Tuple[Optional[TensorMonomial], ...]:
    """Images of every monomial over ``alphabet``, in a fixed order."""
    return tuple(evaluate(d, m) for m in monomials(d.source, alphabet))

"""Label arithmetic for simples, projectives and their filtrations.

A simple object is named by a pair of Young diagrams ``(lam, mu)``; the
same pair names its projective cover ``S_lam(V) (x)! S^_mu(V**)``.  All
answers here reduce to sums of products of LR coefficients.
"""

from __future__ import annotations

from collections.abc import Mapping
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple

from .errors import DomainError, check_bound
from .lrcalc import MAX_LR_SIZE, LRCache, lr_coeff, lr_expand_pair, skew_expansion
from .young import (
    EMPTY,
    YoungDiagram,
    conjugate,
    diagram_key,
    partitions_of,
    syt_count,
)

MAX_MIXED_DEGREE = 6


class SimpleLabel(NamedTuple):
    lam: YoungDiagram
    mu: YoungDiagram

    @classmethod
    def of(cls, lam: Iterable[int] = (), mu: Iterable[int] = ()) -> "SimpleLabel":
        return cls(YoungDiagram(lam), YoungDiagram(mu))

    def __str__(self) -> str:
        return f"({self.lam},{self.mu})"


TRIVIAL = SimpleLabel(EMPTY, EMPTY)


def label_key(label: SimpleLabel):
    return (diagram_key(label.lam), diagram_key(label.mu))


class LabelMultiset(Mapping):
    """Finite multiset of simple labels; zero multiplicities are dropped.

    Iteration follows the label order ``(|lam|, lam, |mu|, mu)``.
    """

    def __init__(self, entries: Optional[Mapping] = None):
        data: Dict[SimpleLabel, int] = {}
        for label, m in dict(entries or {}).items():
            if m < 0:
                raise DomainError(f"negative multiplicity {m} for {label}")
            if m:
                label = SimpleLabel(YoungDiagram(label[0]), YoungDiagram(label[1]))
                data[label] = data.get(label, 0) + m
        self._data = dict(sorted(data.items(), key=lambda kv: label_key(kv[0])))

    def __getitem__(self, label) -> int:
        return self._data[label]

    def get(self, label, default=0):
        return self._data.get(label, default)

    def __iter__(self) -> Iterator[SimpleLabel]:
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __eq__(self, other) -> bool:
        if isinstance(other, Mapping):
            return self._data == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._data.items()))

    def __add__(self, other: "LabelMultiset") -> "LabelMultiset":
        out = dict(self._data)
        for k, v in other.items():
            out[k] = out.get(k, 0) + v
        return LabelMultiset(out)

    def scaled(self, k: int) -> "LabelMultiset":
        return LabelMultiset({lab: k * m for lab, m in self._data.items()})

    def total(self) -> int:
        return sum(self._data.values())

    def __repr__(self) -> str:
        inner = ", ".join(f"{lab}: {m}" for lab, m in self._data.items())
        return f"LabelMultiset({{{inner}}})"


FiltrationLayers = Tuple[LabelMultiset, ...]


def radical_layers(
    lam: YoungDiagram,
    mu: YoungDiagram,
    *,
    max_size: int = MAX_LR_SIZE,
    cache: Optional[LRCache] = None,
) -> FiltrationLayers:
    """Radical layers of the projective P_{lam,mu}.

    Layer i sends (nu, kappa) to sum over |gamma| = i of
    N^lam_{nu,gamma} * N^mu_{kappa,gamma}.
    """
    lam, mu = YoungDiagram(lam), YoungDiagram(mu)
    check_bound("|lambda|", sum(lam), max_size)
    check_bound("|mu|", sum(mu), max_size)
    layers: List[LabelMultiset] = []
    for i in range(min(sum(lam), sum(mu)) + 1):
        layer: Dict[SimpleLabel, int] = {}
        for gamma in partitions_of(i, max_size=max(i, max_size)):
            left = skew_expansion(lam, gamma, max_size=max_size, cache=cache)
            if not left:
                continue
            right = skew_expansion(mu, gamma, max_size=max_size, cache=cache)
            for nu, a in left.items():
                for kappa, b in right.items():
                    key = SimpleLabel(nu, kappa)
                    layer[key] = layer.get(key, 0) + a * b
        layers.append(LabelMultiset(layer))
    while layers and not layers[-1]:
        layers.pop()
    return tuple(layers)


def ext_dim(
    src: SimpleLabel,
    tgt: SimpleLabel,
    i: int,
    *,
    max_size: int = MAX_LR_SIZE,
    cache: Optional[LRCache] = None,
) -> int:
    """dim Ext^i(V^_src, V^_tgt) = sum_{|gamma|=i} N^lam_{nu,gamma} N^{mu'}_{kappa',gamma}.

    ``src`` supplies (lam, mu) and ``tgt`` supplies (nu, kappa); primes are
    conjugate diagrams.
    """
    if i < 0:
        raise DomainError(f"Ext degree must be nonnegative, got {i}")
    lam, mu = YoungDiagram(src[0]), YoungDiagram(src[1])
    nu, kappa = YoungDiagram(tgt[0]), YoungDiagram(tgt[1])
    for name, d in (("|lambda|", lam), ("|mu|", mu), ("|nu|", nu), ("|kappa|", kappa)):
        check_bound(name, sum(d), max_size)
    if sum(nu) != sum(lam) - i or sum(kappa) != sum(mu) - i:
        return 0
    mu_c, kappa_c = conjugate(mu), conjugate(kappa)
    total = 0
    for gamma in partitions_of(i, max_size=max(i, max_size)):
        a = lr_coeff(lam, nu, gamma, max_size=max_size, cache=cache)
        if a:
            total += a * lr_coeff(mu_c, kappa_c, gamma, max_size=max_size, cache=cache)
    return total


def jh_projective(
    lam: YoungDiagram,
    mu: YoungDiagram,
    *,
    max_size: int = MAX_LR_SIZE,
    cache: Optional[LRCache] = None,
) -> LabelMultiset:
    """Jordan-Hoelder multiplicities of P_{lam,mu}: the sum of its radical layers."""
    out = LabelMultiset()
    for layer in radical_layers(lam, mu, max_size=max_size, cache=cache):
        out = out + layer
    return out


def jh_mixed_tensor(
    p: int,
    q: int,
    *,
    max_degree: int = MAX_MIXED_DEGREE,
    cache: Optional[LRCache] = None,
) -> LabelMultiset:
    """Jordan-Hoelder multiplicities of the mixed tensor with p and q slots.

    Uses the Schur-Weyl splitting V^{p,q} = sum d_lam d_mu P_{lam,mu}, where
    d is the number of standard tableaux.
    """
    if p < 0 or q < 0:
        raise DomainError(f"slot counts must be nonnegative, got ({p},{q})")
    check_bound("p", p, max_degree)
    check_bound("q", q, max_degree)
    out = LabelMultiset()
    for lam in partitions_of(p):
        for mu in partitions_of(q):
            mult = syt_count(lam) * syt_count(mu)
            out = out + jh_projective(lam, mu, cache=cache).scaled(mult)
    return out


def dual_label(label: SimpleLabel) -> SimpleLabel:
    """Swap the covariant and contravariant diagrams."""
    return SimpleLabel(YoungDiagram(label[1]), YoungDiagram(label[0]))


def tensor_projectives(
    a: SimpleLabel,
    b: SimpleLabel,
    *,
    max_size: int = MAX_LR_SIZE,
    cache: Optional[LRCache] = None,
) -> LabelMultiset:
    """Decompose P_a (x)! P_b into indecomposable projectives."""
    left = lr_expand_pair(a[0], b[0], max_size=max_size, cache=cache)
    right = lr_expand_pair(a[1], b[1], max_size=max_size, cache=cache)
    return LabelMultiset(
        {SimpleLabel(s, t): x * y for s, x in left.items() for t, y in right.items()}
    )


def labels_up_to(max_boxes: int) -> List[SimpleLabel]:
    """All labels whose two diagrams each have at most ``max_boxes`` boxes."""
    diagrams = [d for n in range(max_boxes + 1) for d in partitions_of(n)]
    return [SimpleLabel(l, m) for l in diagrams for m in diagrams]

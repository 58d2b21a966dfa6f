import pytest

from tenscat.category import (
    TRIVIAL,
    LabelMultiset,
    SimpleLabel,
    dual_label,
    ext_dim,
    jh_mixed_tensor,
    jh_projective,
    labels_up_to,
    radical_layers,
    tensor_projectives,
)
from tenscat.errors import DomainError, ResourceBoundError
from tenscat.young import EMPTY, YoungDiagram, conjugate, partitions_of, schur_product_expand, syt_count

D = YoungDiagram
L = SimpleLabel.of
UP_TO_4 = [d for n in range(5) for d in partitions_of(n)]


def oracle_layers(lam, mu):
    """Radical layers with every LR coefficient read off the Schur oracle."""
    def n(outer, a, b):
        k = max(sum(outer), 1)
        return schur_product_expand(a, b, k).get(outer, 0)

    layers = []
    for i in range(min(sum(lam), sum(mu)) + 1):
        layer = {}
        for gamma in partitions_of(i):
            for nu in partitions_of(sum(lam) - i):
                for kappa in partitions_of(sum(mu) - i):
                    m = n(lam, nu, gamma) * n(mu, kappa, gamma)
                    if m:
                        key = SimpleLabel(nu, kappa)
                        layer[key] = layer.get(key, 0) + m
        layers.append(LabelMultiset(layer))
    while layers and not layers[-1]:
        layers.pop()
    return tuple(layers)


def test_gl_length_two():
    assert radical_layers(D([1]), D([1])) == (
        LabelMultiset({L([1], [1]): 1}),
        LabelMultiset({TRIVIAL: 1}),
    )


def test_radical_examples():
    for lam in UP_TO_4:
        assert radical_layers(lam, EMPTY) == (LabelMultiset({SimpleLabel(lam, EMPTY): 1}),)
    assert radical_layers(D([2]), D([1])) == (
        LabelMultiset({L([2], [1]): 1}),
        LabelMultiset({L([1], []): 1}),
    )


def test_radical_matches_schur_oracle():
    small = [d for n in range(4) for d in partitions_of(n)]
    for lam in small:
        for mu in small:
            assert radical_layers(lam, mu) == oracle_layers(lam, mu)


def test_radical_structure_exhaustive():
    for lam in UP_TO_4:
        for mu in UP_TO_4:
            layers = radical_layers(lam, mu)
            assert layers[0] == LabelMultiset({SimpleLabel(lam, mu): 1})
            assert len(layers) <= 1 + min(sum(lam), sum(mu))
            for i, layer in enumerate(layers):
                assert layer, "no empty layer below a nonempty one"
                for nu, kappa in layer:
                    assert (sum(nu), sum(kappa)) == (sum(lam) - i, sum(mu) - i)


def test_layers_stop_when_no_common_gamma():
    # gamma must fit in both [1,1] and [2]; only sizes 0 and 1 do
    assert len(radical_layers(D([1, 1]), D([2]))) == 2


def test_ext_examples():
    for lab in labels_up_to(2):
        assert ext_dim(lab, lab, 0) == 1
    assert ext_dim(L([1], [1]), TRIVIAL, 1) == 1
    for lab in labels_up_to(2):
        for i in range(1, 4):
            assert ext_dim(TRIVIAL, lab, i) == 0
    with pytest.raises(DomainError):
        ext_dim(TRIVIAL, TRIVIAL, -1)
    with pytest.raises(ResourceBoundError):
        ext_dim(SimpleLabel(D([21]), EMPTY), TRIVIAL, 0)


def test_ext_zero_is_kronecker_delta():
    labels = labels_up_to(3)
    for a in labels:
        for b in labels:
            assert ext_dim(a, b, 0) == (1 if a == b else 0)


def test_ext_agrees_with_radical_layers():
    labels = labels_up_to(3)
    for src in labels:
        lam, mu = src
        layers = radical_layers(lam, conjugate(mu))
        for tgt in labels:
            nu, kappa = tgt
            for i in range(4):
                expected = layers[i].get(SimpleLabel(nu, conjugate(kappa)), 0) if i < len(layers) else 0
                assert ext_dim(src, tgt, i) == expected


def test_ext_uses_conjugates_on_the_dual_side():
    # Ext^1(V^_{[1],[2]}, V^_{[],[1]}): gamma = [1] fits [1] and [2]' = [1,1]
    assert ext_dim(L([1], [2]), L([], [1]), 1) == 1
    assert ext_dim(L([2], [2]), TRIVIAL, 2) == 0
    assert ext_dim(L([2], [1, 1]), TRIVIAL, 2) == 1


def test_jh_projective_examples():
    gl = jh_projective(D([1]), D([1]))
    assert gl == LabelMultiset({L([1], [1]): 1, TRIVIAL: 1})
    assert gl.total() == 2
    assert jh_projective(D([3, 1]), EMPTY) == LabelMultiset({L([3, 1], []): 1})
    assert jh_projective(D([1, 1]), D([1])) == LabelMultiset({L([1, 1], [1]): 1, L([1], []): 1})


def test_jh_projective_is_sum_of_layers():
    for lam in UP_TO_4[:6]:
        for mu in UP_TO_4[:6]:
            total = sum(layer.total() for layer in radical_layers(lam, mu))
            assert jh_projective(lam, mu).total() == total


def test_jh_mixed_examples():
    assert jh_mixed_tensor(1, 0) == LabelMultiset({L([1], []): 1})
    assert jh_mixed_tensor(1, 1) == LabelMultiset({L([1], [1]): 1, TRIVIAL: 1})
    assert jh_mixed_tensor(2, 0) == LabelMultiset({L([2], []): 1, L([1, 1], []): 1})
    assert jh_mixed_tensor(0, 0) == LabelMultiset({TRIVIAL: 1})
    with pytest.raises(ResourceBoundError):
        jh_mixed_tensor(7, 0)


@pytest.mark.parametrize("p, q", [(p, q) for p in range(4) for q in range(4)])
def test_jh_mixed_total_mass(p, q):
    expected = sum(
        syt_count(lam) * syt_count(mu) * jh_projective(lam, mu).total()
        for lam in partitions_of(p)
        for mu in partitions_of(q)
    )
    assert jh_mixed_tensor(p, q).total() == expected


@pytest.mark.parametrize("p", range(7))
def test_jh_mixed_covariant_only(p):
    ms = jh_mixed_tensor(p, 0)
    assert ms.total() == sum(syt_count(lam) for lam in partitions_of(p))
    assert all(mu == EMPTY for _, mu in ms)


def test_jh_mixed_two_two():
    assert jh_mixed_tensor(2, 2) == LabelMultiset({
        TRIVIAL: 2,
        L([1], [1]): 4,
        L([2], [2]): 1,
        L([2], [1, 1]): 1,
        L([1, 1], [2]): 1,
        L([1, 1], [1, 1]): 1,
    })


def test_dual_label():
    assert dual_label(TRIVIAL) == TRIVIAL
    assert dual_label(L([1], [])) == L([], [1])
    assert dual_label(L([2, 1], [1])) == L([1], [2, 1])
    for lab in labels_up_to(3):
        assert dual_label(dual_label(lab)) == lab


def test_tensor_examples():
    for lab in labels_up_to(2):
        assert tensor_projectives(lab, TRIVIAL) == LabelMultiset({lab: 1})
        assert tensor_projectives(TRIVIAL, lab) == LabelMultiset({lab: 1})
    assert tensor_projectives(L([1], []), L([1], [])) == LabelMultiset({L([2], []): 1, L([1, 1], []): 1})
    assert tensor_projectives(L([1], []), L([], [1])) == LabelMultiset({L([1], [1]): 1})


def _tensor_multiset(ms, c):
    out = LabelMultiset()
    for lab, m in ms.items():
        out = out + tensor_projectives(lab, c).scaled(m)
    return out


def test_tensor_commutative_and_associative():
    labels = labels_up_to(2)
    for a in labels:
        for b in labels:
            assert tensor_projectives(a, b) == tensor_projectives(b, a)
    for a in labels:
        for b in labels:
            ab = tensor_projectives(a, b)
            for c in labels:
                left = _tensor_multiset(ab, c)
                right = LabelMultiset()
                for lab, m in tensor_projectives(b, c).items():
                    right = right + tensor_projectives(a, lab).scaled(m)
                assert left == right


def test_label_multiset_drops_zeros_and_sorts():
    ms = LabelMultiset({L([1], []): 0, L([2], []): 1, TRIVIAL: 3})
    assert list(ms) == [TRIVIAL, L([2], [])]
    assert len(ms) == 2
    with pytest.raises(DomainError):
        LabelMultiset({TRIVIAL: -1})

import math
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from biosumm.classify import (
    Leaf, Split, build_saliency_lexicons, gain_ratio, saliency_features, svm_objective, svm_predict, svm_train,
    tree_predict, tree_train,
)
from biosumm.classify.svm import _xy
from biosumm.corpus import BinaryLabel, BioCategory, LabeledSentence
from biosumm.textproc import segment_sentences

BIO, NONE = BinaryLabel.BIO2, BinaryLabel.NONE2


def sent(text):
    return segment_sentences(text)[0]


# ---- saliency

def test_saliency_fractions():
    s = sent("cancer chemotherapy hope the")
    f = saliency_features(s, {"cancer", "chemotherapy"}, set())
    assert (f.bio_fraction, f.nonbio_fraction) == (0.5, 0.0)
    assert saliency_features(s, {"zzz"}, {"yyy"}).as_tuple() == (0.0, 0.0)
    assert saliency_features(s, {"cancer", "chemotherapy", "hope", "the"}, set()).as_tuple() == (1.0, 0.0)
    assert saliency_features((), {"a"}, set()).as_tuple() == (0.0, 0.0)


def test_saliency_overlap_rejected():
    with pytest.raises(ValueError):
        saliency_features(sent("a b"), {"a"}, {"a"})


def _ls(text, *labels):
    return LabeledSentence(sent(text), labels)


def test_lexicon_rules():
    train = [_ls(f"promoted {i} times", BioCategory.WORK) for i in range(5)]
    train += [_ls("rain fell", BioCategory.NONE), _ls("rain again", BioCategory.WORK),
              _ls("snow fell", BioCategory.NONE), _ls("snow fell", BioCategory.NONE)]
    bio, nonbio = build_saliency_lexicons(train, min_count=3, purity=0.8)
    assert "promot" in bio
    assert "rain" not in bio and "rain" not in nonbio  # 2 occurrences only
    assert "fell" in nonbio
    assert "snow" not in bio | nonbio  # 2 occurrences only
    # exactly half biographical: in neither
    half = [_ls("mixed word", BioCategory.WORK), _ls("mixed word", BioCategory.WORK),
            _ls("mixed it", BioCategory.NONE), _ls("mixed it", BioCategory.NONE)]
    bio, nonbio = build_saliency_lexicons(half, min_count=3, purity=0.8)
    assert "mix" not in bio | nonbio
    assert not bio & nonbio


# ---- svm

def clusters(seed=0, n=60):
    rng = np.random.default_rng(seed)
    data = [((0.8 + rng.normal(0, 0.05), abs(0.05 + rng.normal(0, 0.03))), BIO) for _ in range(n)]
    data += [((abs(0.02 + rng.normal(0, 0.02)), 0.6 + rng.normal(0, 0.05)), NONE) for _ in range(n)]
    return data


def test_svm_separable_perfect():
    data = clusters()
    model = svm_train(data, reg=1e-2, epochs=100, seed=1)
    assert all(svm_predict(model, x) is y for x, y in data)


def test_svm_label_swap_negates():
    data = clusters(2)
    swapped = [(x, NONE if y is BIO else BIO) for x, y in data]
    a = svm_train(data, 1e-2, 50, 5)
    b = svm_train(swapped, 1e-2, 50, 5)
    assert b.weights == (-a.weights[0], -a.weights[1]) and b.bias == -a.bias
    for x, _ in data:
        assert np.sign(a.decision(x)) == -np.sign(b.decision(x))


def test_svm_deterministic():
    data = clusters(3)
    assert svm_train(data, 1e-2, 30, 9) == svm_train(data, 1e-2, 30, 9)


def test_svm_boundary_is_none():
    data = clusters(4)
    model = svm_train(data, 1e-2, 20, 0)
    w0, w1 = model.weights
    x = (1.0, -(model.bias + w0) / w1)  # on the hyperplane up to rounding
    assert model.decision(x) == pytest.approx(0, abs=1e-12)
    from biosumm.classify import LinearSvmModel
    exact = LinearSvmModel((1.0, -1.0), 0.0, 1e-2, 1, 0)
    assert svm_predict(exact, (0.3, 0.3)) is NONE
    assert svm_predict(exact, (0.4, 0.3)) is BIO


def test_svm_more_epochs_same_predictions():
    data = clusters(5)
    short = svm_train(data, 1e-2, 200, 0)
    long = svm_train(data, 1e-2, 400, 0)
    assert [svm_predict(short, x) for x, _ in data] == [svm_predict(long, x) for x, _ in data]


@pytest.mark.parametrize("reg", [1e-1, 1e-2, 1e-3])
def test_svm_averaged_objective_nonincreasing_at_checkpoints(reg):
    data = clusters(6) + [((0.5, 0.3), NONE), ((0.3, 0.5), BIO)]  # not separable
    model = svm_train(data, reg, 200, 0)
    checkpoints = model.history[9::10]
    # averaging makes the descent near-monotone; allow float-level wobble
    assert all(b <= a * (1 + 1e-5) for a, b in zip(checkpoints, checkpoints[1:]))
    assert model.history[-1] <= model.history[0]
    x, y = _xy(data)
    assert model.history[-1] == pytest.approx(
        svm_objective(np.array([*model.weights, model.bias]), x, y, reg), rel=1e-12)


def test_svm_needs_both_labels():
    with pytest.raises(ValueError):
        svm_train([((0.1, 0.2), BIO)] * 3)


# ---- tree

def entropy(ys):
    n = len(ys)
    return -sum(ys.count(v) / n * math.log2(ys.count(v) / n) for v in set(ys)) if n else 0.0


def oracle_best_split(data):
    """Exhaustive gain-ratio search over all candidate midpoints."""
    ys = [y for _, y in data]
    best = None
    for f in (0, 1):
        vals = sorted({x[f] for x, _ in data})
        for a, b in zip(vals, vals[1:]):
            thr = (a + b) / 2
            left = [y for x, y in data if x[f] < thr]
            right = [y for x, y in data if x[f] >= thr]
            n = len(ys)
            gain = entropy(ys) - len(left) / n * entropy(left) - len(right) / n * entropy(right)
            split = entropy(["L"] * len(left) + ["R"] * len(right))
            if best is None or gain / split > best[0] + 1e-12:
                best = (gain / split, f, thr)
    return best


def test_tree_pure_is_leaf():
    model = tree_train([((0.1, 0.2), BIO), ((0.5, 0.9), BIO)])
    assert model.root == Leaf(BIO)
    assert tree_predict(model, (100, -3)) is BIO


def test_tree_threshold_separable():
    data = [((v, 0.1), BIO) for v in (0.6, 0.7, 0.9)] + [((v, 0.1), NONE) for v in (0.1, 0.2, 0.4)]
    model = tree_train(data, max_depth=3)
    assert isinstance(model.root, Split) and model.depth() == 1
    assert model.root.feature == 0 and 0.4 < model.root.threshold < 0.6
    assert oracle_best_split(data)[1:] == (model.root.feature, model.root.threshold)


def test_gain_ratio_perfect_balanced_split():
    ys = [BIO, BIO, NONE, NONE]
    assert gain_ratio(ys, [True, True, False, False]) == pytest.approx(1.0)


def test_tree_threshold_equality_goes_right():
    model = tree_train([((0.0, 0), NONE), ((1.0, 0), BIO)])
    assert model.root.threshold == 0.5
    assert tree_predict(model, (0.5, 0)) is BIO
    assert tree_predict(model, (0.4999, 0)) is NONE


def test_tree_majority_tie_is_none():
    model = tree_train([((0.5, 0.5), BIO), ((0.5, 0.5), NONE)])
    assert model.root == Leaf(NONE)


points = st.lists(
    st.tuples(st.tuples(st.sampled_from([0.0, 0.1, 0.25, 0.5, 0.75, 1.0]),
                        st.sampled_from([0.0, 0.2, 0.4, 0.6])),
              st.sampled_from([BIO, NONE])),
    min_size=1, max_size=25,
)


@settings(max_examples=150)
@given(points)
def test_tree_root_matches_oracle(data):
    model = tree_train(data, max_depth=1)
    best = oracle_best_split(data)
    if isinstance(model.root, Split):
        assert best is not None
        assert (model.root.feature, model.root.threshold) == (best[1], best[2])


def brute_force_path(node, x):
    if isinstance(node, Leaf):
        return node.label
    return brute_force_path(node.left if x[node.feature] < node.threshold else node.right, x)


@settings(max_examples=150)
@given(points)
def test_tree_fits_consistent_data(data):
    seen = {}
    consistent = [(x, seen.setdefault(x, y)) for x, y in data]
    model = tree_train(consistent, max_depth=None, min_leaf=1)
    for x, y in consistent:
        assert tree_predict(model, x) is y is brute_force_path(model.root, x)


def test_tree_xor_fits():
    data = [((0, 0), BIO), ((1, 1), BIO), ((0, 1), NONE), ((1, 0), NONE)]
    model = tree_train(data)
    assert all(tree_predict(model, x) is y for x, y in data)


def test_tree_depth_limit():
    rng = random.Random(0)
    data = [((rng.random(), rng.random()), rng.choice([BIO, NONE])) for _ in range(200)]
    assert tree_train(data, max_depth=3).depth() <= 3

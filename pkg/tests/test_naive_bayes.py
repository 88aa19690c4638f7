import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from biosumm.classify import (
    UNK, FeatureConfig, FeatureError, TaskKind, extract_features, nb_classify, nb_train,
)
from biosumm.corpus import BinaryLabel, BioCategory
from biosumm.textproc import Token, segment_sentences, tokenize


def brute_force_scores(data, labels, fv):
    """Direct log of P(S in C) * prod_j P(F_j | S in C)^w_j from raw counts."""
    vocab = {f for x, _ in data for f in x}
    n = len(data)
    out = {}
    for c in labels:
        rows = [x for x, y in data if y == c]
        prior = (len(rows) + 1) / (n + len(labels))
        total = sum(w for x in rows for w in x.values())
        prod = prior
        for f, w in fv.items():
            count = sum(x.get(f, 0) for x in rows) if f in vocab else 0
            prod *= ((count + 1) / (total + len(vocab) + 1)) ** w
        out[c] = math.log(prod)
    return out


# ---- features

def test_unigram_counts():
    assert extract_features("the cat the") == {"the": 2, "cat": 1}


def test_bigram_counts():
    assert extract_features("a b c", FeatureConfig("bigram")) == {"a_b": 1, "b_c": 1}


def test_stem_features():
    assert extract_features("Nations running", FeatureConfig("stem")) == {"nation": 1, "runn": 1}
    assert FeatureConfig("stem_unigram") == FeatureConfig("stem")


def test_hypernym_expansion(tmp_path):
    lex = tmp_path / "hyper.tsv"
    lex.write_text("won\ttriumph\n", encoding="utf-8")
    fv = extract_features("won", FeatureConfig("unigram", hypernym_lexicon=str(lex), hypernym_weight=0.1))
    assert fv == {"won": 1, "triumph": 0.1}


def test_hypernym_weight_scales_with_count(tmp_path):
    lex = tmp_path / "hyper.tsv"
    lex.write_text("won\ttriumph\nwon\tsuccess\n", encoding="utf-8")
    fv = extract_features("won it, won again", FeatureConfig(hypernym_lexicon=str(lex), hypernym_weight=0.25))
    assert fv["triumph"] == fv["success"] == 0.5


def test_pos_features():
    toks = [Token("He", "he", "PRP"), Token("won", "won", "VBD")]
    assert extract_features(toks, FeatureConfig(pos_augmented=True)) == {"he/PRP": 1, "won/VBD": 1}
    assert extract_features(toks, FeatureConfig("bigram", pos_augmented=True)) == {"he/PRP_won/VBD": 1}


def test_feature_errors(tmp_path):
    with pytest.raises(FeatureError):
        extract_features("no tags", FeatureConfig(pos_augmented=True))
    with pytest.raises(FeatureError):
        extract_features("x", FeatureConfig(hypernym_lexicon=str(tmp_path / "missing.tsv")))
    with pytest.raises(ValueError):
        FeatureConfig("bigram", hypernym_lexicon="x")


# ---- training

def test_prior_single_instance():
    model = nb_train([({"ran": 1}, BioCategory.WORK)], TaskKind.TEN)
    assert model.priors[BioCategory.WORK] == pytest.approx(2 / 11, abs=1e-15)
    assert model.priors[BioCategory.BIO] == pytest.approx(1 / 11, abs=1e-15)


def test_identical_distributions_give_equal_tables():
    data = [({"a": 2, "b": 1}, BinaryLabel.BIO2), ({"a": 2, "b": 1}, BinaryLabel.NONE2)]
    model = nb_train(data, TaskKind.TWO)
    assert model.likelihoods[BinaryLabel.BIO2] == model.likelihoods[BinaryLabel.NONE2]


def test_single_label_data_wins_prior():
    model = nb_train([({"x": 1}, BioCategory.SCANDAL)] * 3, TaskKind.TEN)
    assert max(model.priors, key=model.priors.get) is BioCategory.SCANDAL
    assert nb_classify(model, {"x": 1})[0] is BioCategory.SCANDAL
    # unseen words favour labels with fewer tokens: (1/5)^4 * 4/13 < (1/2)^4 * 1/13
    assert nb_classify(model, {"anything": 4})[0] is BioCategory.BIO


def test_multilabel_expands_one_instance_per_label():
    model = nb_train([({"x": 1}, (BioCategory.WORK, BioCategory.FAME))], TaskKind.TEN)
    assert model.priors[BioCategory.WORK] == model.priors[BioCategory.FAME] == pytest.approx(2 / 12)


def test_train_errors():
    with pytest.raises(ValueError):
        nb_train([], TaskKind.TEN)
    with pytest.raises(ValueError):
        nb_train([({"x": 1}, BinaryLabel.BIO2)], TaskKind.TEN)


def test_empty_features_argmax_prior():
    data = [({"a": 1}, BinaryLabel.NONE2), ({"b": 1}, BinaryLabel.NONE2), ({"c": 1}, BinaryLabel.BIO2)]
    model = nb_train(data, TaskKind.TWO)
    label, scores = nb_classify(model, {})
    assert label is BinaryLabel.NONE2
    assert scores[BinaryLabel.NONE2] == pytest.approx(math.log(3 / 5))


def test_cancer_example_by_hand():
    data = [(extract_features("cancer chemotherapy"), BinaryLabel.BIO2),
            (extract_features("stock market"), BinaryLabel.NONE2)]
    model = nb_train(data, TaskKind.TWO)
    label, scores = nb_classify(model, extract_features("cancer treatment"))
    # both labels: prior 2/4, denominator 2 + 4 + 1 = 7
    assert scores[BinaryLabel.BIO2] == pytest.approx(math.log(0.5 * (2 / 7) * (1 / 7)), abs=1e-12)
    assert scores[BinaryLabel.NONE2] == pytest.approx(math.log(0.5 * (1 / 7) * (1 / 7)), abs=1e-12)
    assert label is BinaryLabel.BIO2


def test_tie_broken_by_label_order():
    data = [({"a": 1}, BioCategory.WORK), ({"a": 1}, BioCategory.FAME)]
    model = nb_train(data, TaskKind.TEN)
    assert nb_classify(model, {"a": 1})[0] is BioCategory.FAME


feature_vec = st.dictionaries(st.sampled_from("abcdefg"), st.integers(1, 4), max_size=5)


@given(st.lists(st.tuples(feature_vec, st.sampled_from(list(BioCategory))), min_size=1, max_size=30))
def test_normalization_invariants(data):
    model = nb_train(data, TaskKind.TEN)
    assert math.fsum(model.priors.values()) == pytest.approx(1, abs=1e-9)
    for c in TaskKind.TEN.labels:
        table = model.likelihoods[c]
        assert set(table) == set(model.vocab) | {UNK}
        assert math.fsum(table.values()) == pytest.approx(1, abs=1e-9)
        assert all(p > 0 for p in table.values())


@settings(max_examples=200)
@given(
    st.lists(st.tuples(feature_vec, st.sampled_from(list(BinaryLabel))), min_size=1, max_size=20),
    feature_vec,
)
def test_brute_force_oracle(data, fv):
    model = nb_train(data, TaskKind.TWO)
    label, scores = nb_classify(model, fv)
    expected = brute_force_scores(data, TaskKind.TWO.labels, fv)
    for c in TaskKind.TWO.labels:
        assert scores[c] == pytest.approx(expected[c], abs=1e-12)
    assert label is max(TaskKind.TWO.labels, key=lambda c: (scores[c], -TaskKind.TWO.labels.index(c)))


def test_argmax_invariant_under_score_shift():
    rng = random.Random(3)
    data = [({w: 1 for w in rng.sample("abcdefgh", 3)}, rng.choice(list(BioCategory))) for _ in range(40)]
    model = nb_train(data, TaskKind.TEN)
    for _ in range(50):
        fv = {w: rng.randint(1, 3) for w in rng.sample("abcdefghij", 3)}
        label, scores = nb_classify(model, fv)
        shifted = {c: s + 17.5 for c, s in scores.items()}
        assert max(TaskKind.TEN.labels, key=lambda c: (shifted[c], -TaskKind.TEN.labels.index(c))) is label


def test_duplicated_training_set():
    rng = random.Random(11)
    vocab = [f"w{i}" for i in range(30)]
    cats = [BioCategory.WORK, BioCategory.BIO, BioCategory.NONE]
    topic = {c: vocab[i * 10:(i + 1) * 10] for i, c in enumerate(cats)}
    data = []
    for _ in range(60):
        c = rng.choices(cats, weights=[5, 3, 2])[0]
        words = rng.choices(topic[c], k=5) + rng.choices(vocab, k=2)
        data.append(({w: words.count(w) for w in set(words)}, c))
    single = nb_train(data, TaskKind.TEN)
    double = nb_train(data + data, TaskKind.TEN)
    counts = {c: sum(1 for _, y in data if y is c) for c in TaskKind.TEN.labels}
    for c in TaskKind.TEN.labels:
        freq = counts[c] / len(data)
        assert abs(double.priors[c] - freq) <= abs(single.priors[c] - freq)
    agree = 0
    for _ in range(500):
        words = rng.choices(vocab, k=6)
        fv = {w: words.count(w) for w in set(words)}
        agree += nb_classify(single, fv)[0] is nb_classify(double, fv)[0]
    assert agree / 500 >= 0.95


def test_sentence_features_match_text_features():
    s = segment_sentences("Armstrong underwent chemotherapy.")[0]
    assert extract_features(s) == extract_features(tokenize(s.text)) == extract_features(s.text)

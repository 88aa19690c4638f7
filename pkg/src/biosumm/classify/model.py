"""Trained sentence classifier bundle and its text model-file format.

File layout (tab-separated fields, one record per line)::

    BIOSUMM-MODEL  1  task=two  method=nb  features=unigram  pos=0  ...
    PRIOR  <label>  <p>
    LIK    <label>  <feature>  <p>
    BIOLEX <stem>              (two-class only)
    NONBIOLEX <stem>
    SVM    <w0>  <w1>  <bias>  <reg>  <epochs>  <seed>
    TREE   <pre-order node list>
    END    <record count>

Floats are written with ``repr`` so a load/save round trip is exact.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from ..corpus import AnnotatedDocument, BinaryLabel, LabeledSentence
from ..textproc import Sentence
from .features import FeatureConfig, TaskKind, extract_features, training_units
from .naive_bayes import UNK, NaiveBayesModel, nb_classify, nb_train
from .saliency import build_saliency_lexicons, saliency_features
from .svm import LinearSvmModel, svm_predict, svm_train
from .tree import DecisionTreeModel, Leaf, Split, tree_predict, tree_train

MAGIC = "BIOSUMM-MODEL"
VERSION = "1"
METHODS = ("nb", "svm", "tree")


class ModelFormatError(ValueError):
    pass


@dataclass
class BioClassifier:
    """Naive Bayes plus, for the two-class task, saliency-based SVM and tree."""

    task: TaskKind
    features: FeatureConfig
    nb: NaiveBayesModel
    method: str = "nb"
    unit: str = "sentence"
    bio_lexicon: frozenset = frozenset()
    nonbio_lexicon: frozenset = frozenset()
    svm: Optional[LinearSvmModel] = None
    tree: Optional[DecisionTreeModel] = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown classifier method {self.method!r}")
        if self.method != "nb" and self.task is not TaskKind.TWO:
            raise ValueError("SVM and tree classifiers exist for the two-class task only")

    def predict(self, sentence: Sentence, method: Optional[str] = None):
        method = method or self.method
        if method == "nb":
            return nb_classify(self.nb, extract_features(sentence, self.features))[0]
        x = saliency_features(sentence, self.bio_lexicon, self.nonbio_lexicon).as_tuple()
        if method == "svm":
            return svm_predict(self.svm, x)
        return tree_predict(self.tree, x)

    def is_biographical(self, sentence: Sentence) -> bool:
        return self.predict(sentence) != self.task.negative


def train_classifier(
    docs: Sequence[AnnotatedDocument],
    task: TaskKind,
    features: FeatureConfig = FeatureConfig(),
    unit: str = "sentence",
    method: str = "nb",
    seed: int = 0,
    svm_reg: float = 1e-2,
    svm_epochs: int = 200,
    tree_max_depth: Optional[int] = 8,
    tree_min_leaf: int = 2,
    lexicon_min_count: int = 3,
    lexicon_purity: float = 0.8,
) -> BioClassifier:
    data = [(extract_features(tokens, features), task.project(labels))
            for tokens, labels in training_units(docs, unit)]
    nb = nb_train(data, task)
    clf = BioClassifier(task, features, nb, method, unit)
    if task is TaskKind.TWO:
        labeled = [ls for doc in docs for ls in doc.labeled_sentences()]
        fit_saliency_models(clf, labeled, seed, svm_reg, svm_epochs, tree_max_depth, tree_min_leaf,
                            lexicon_min_count, lexicon_purity)
    return clf


def fit_saliency_models(clf: BioClassifier, labeled: Sequence[LabeledSentence], seed=0, svm_reg=1e-2,
                        svm_epochs=200, tree_max_depth=8, tree_min_leaf=2, min_count=3, purity=0.8):
    clf.bio_lexicon, clf.nonbio_lexicon = build_saliency_lexicons(labeled, min_count, purity)
    points = [
        (saliency_features(ls.sentence, clf.bio_lexicon, clf.nonbio_lexicon).as_tuple(),
         TaskKind.TWO.project(ls.labels)[0])
        for ls in labeled
    ]
    if len({y for _, y in points}) == 2:
        clf.svm = svm_train(points, svm_reg, svm_epochs, seed)
    elif clf.method == "svm":
        raise ValueError("SVM training needs both labels present")
    clf.tree = tree_train(points, tree_max_depth, tree_min_leaf)


def _tree_tokens(node) -> list[str]:
    if isinstance(node, Leaf):
        return [f"L:{node.label.value}"]
    return [f"S:{node.feature}:{node.threshold!r}", *_tree_tokens(node.left), *_tree_tokens(node.right)]


def _parse_tree(tokens: list[str]):
    it = iter(tokens)

    def build():
        tok = next(it)
        kind, _, rest = tok.partition(":")
        if kind == "L":
            return Leaf(BinaryLabel(rest))
        f, thr = rest.split(":")
        left = build()
        return Split(int(f), float(thr), left, build())

    root = build()
    if next(it, None) is not None:
        raise ModelFormatError("trailing tree nodes")
    return root


def dumps(clf: BioClassifier) -> str:
    f = clf.features
    header = [MAGIC, VERSION, f"task={clf.task.value}", f"method={clf.method}", f"unit={clf.unit}",
              f"features={f.mode}", f"pos={int(f.pos_augmented)}", f"hypernyms={f.hypernym_lexicon or '-'}",
              f"hypernym_weight={f.hypernym_weight!r}"]
    header += [f"{k}={v}" for k, v in sorted(clf.meta.items())]
    records = ["\t".join(header)]
    labels = clf.task.labels
    records += [f"PRIOR\t{c.value}\t{clf.nb.priors[c]!r}" for c in labels]
    for c in labels:
        table = clf.nb.likelihoods[c]
        records += [f"LIK\t{c.value}\t{feat}\t{table[feat]!r}" for feat in sorted(clf.nb.vocab)]
        records.append(f"LIK\t{c.value}\t{UNK}\t{table[UNK]!r}")
    records += [f"BIOLEX\t{s}" for s in sorted(clf.bio_lexicon)]
    records += [f"NONBIOLEX\t{s}" for s in sorted(clf.nonbio_lexicon)]
    if clf.svm is not None:
        m = clf.svm
        records.append(f"SVM\t{m.weights[0]!r}\t{m.weights[1]!r}\t{m.bias!r}\t{m.reg!r}\t{m.epochs}\t{m.seed}")
    if clf.tree is not None:
        t = clf.tree
        depth = "-" if t.max_depth is None else t.max_depth
        records.append(f"TREE\t{depth}\t{t.min_leaf}\t" + " ".join(_tree_tokens(t.root)))
    records.append(f"END\t{len(records) - 1}")
    return "\n".join(records) + "\n"


def save_model(clf: BioClassifier, path: str | Path) -> None:
    Path(path).write_text(dumps(clf), encoding="utf-8")


def loads(text: str) -> BioClassifier:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ModelFormatError("empty model file")
    header = lines[0].split("\t")
    if header[:1] != [MAGIC]:
        raise ModelFormatError("not a model file (bad magic)")
    if header[1:2] != [VERSION]:
        raise ModelFormatError(f"unsupported model version {header[1:2]}")
    try:
        opts = dict(h.split("=", 1) for h in header[2:])
        task = TaskKind(opts.pop("task"))
        method = opts.pop("method")
        unit = opts.pop("unit")
        hyper = opts.pop("hypernyms")
        features = FeatureConfig(opts.pop("features"), opts.pop("pos") == "1",
                                 None if hyper == "-" else hyper, float(opts.pop("hypernym_weight")))
    except (KeyError, ValueError) as exc:
        raise ModelFormatError(f"bad model header: {exc}") from exc
    if lines[-1].split("\t")[0] != "END" or lines[-1] != f"END\t{len(lines) - 2}":
        raise ModelFormatError("truncated or corrupt model file (END record missing or wrong count)")

    priors, likelihoods = {}, {c: {} for c in task.labels}
    bio, nonbio, svm, tree = set(), set(), None, None
    try:
        for lineno, line in enumerate(lines[1:-1], 2):
            rec = line.split("\t")
            kind = rec[0]
            if kind == "PRIOR" and len(rec) == 3:
                priors[task.parse_label(rec[1])] = float(rec[2])
            elif kind == "LIK" and len(rec) == 4:
                likelihoods[task.parse_label(rec[1])][rec[2]] = float(rec[3])
            elif kind == "BIOLEX" and len(rec) == 2:
                bio.add(rec[1])
            elif kind == "NONBIOLEX" and len(rec) == 2:
                nonbio.add(rec[1])
            elif kind == "SVM" and len(rec) == 7:
                svm = LinearSvmModel((float(rec[1]), float(rec[2])), float(rec[3]), float(rec[4]),
                                     int(rec[5]), int(rec[6]))
            elif kind == "TREE" and len(rec) == 4:
                depth = None if rec[1] == "-" else int(rec[1])
                tree = DecisionTreeModel(_parse_tree(rec[3].split(" ")), depth, int(rec[2]))
            else:
                raise ModelFormatError(f"line {lineno}: unrecognized record {kind!r}")
    except (ValueError, StopIteration) as exc:
        if isinstance(exc, ModelFormatError):
            raise
        raise ModelFormatError(f"corrupt model record: {exc}") from exc

    if set(priors) != set(task.labels) or not math.isclose(sum(priors.values()), 1.0, abs_tol=1e-9):
        raise ModelFormatError("prior table is incomplete or does not sum to 1")
    vocab = None
    for c, table in likelihoods.items():
        if UNK not in table or not math.isclose(math.fsum(table.values()), 1.0, abs_tol=1e-9):
            raise ModelFormatError(f"likelihood table for {c.value} is incomplete or does not sum to 1")
        feats = frozenset(table) - {UNK}
        if vocab is not None and feats != vocab:
            raise ModelFormatError("likelihood tables disagree on the vocabulary")
        vocab = feats
    nb = NaiveBayesModel(task, priors, likelihoods, vocab)
    return BioClassifier(task, features, nb, method, unit, frozenset(bio), frozenset(nonbio), svm, tree, opts)


def load_model(path: str | Path) -> BioClassifier:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ModelFormatError(f"{path}: not UTF-8 text") from exc
    return loads(text)

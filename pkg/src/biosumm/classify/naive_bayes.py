"""Multinomial Naive Bayes over sparse sentence features, add-one smoothed."""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .features import TaskKind

UNK = "<UNK>"


@dataclass
class NaiveBayesModel:
    task: TaskKind
    priors: dict  # label -> P(S in C)
    likelihoods: dict  # label -> {feature: P(F | S in C)}, including UNK
    vocab: frozenset
    _log_lik: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self._log_lik = {c: {f: math.log(p) for f, p in table.items()} for c, table in self.likelihoods.items()}

    def log_prior(self, label) -> float:
        return math.log(self.priors[label])

    def likelihood(self, label, feature: str) -> float:
        table = self.likelihoods[label]
        return table[feature] if feature in self.vocab else table[UNK]

    def log_likelihood(self, label, feature: str) -> float:
        table = self._log_lik[label]
        return table[feature] if feature in self.vocab else table[UNK]


def _expand(data: Iterable[tuple[Mapping[str, float], object]]):
    for fv, gold in data:
        labels = gold if isinstance(gold, (tuple, list, set, frozenset)) else (gold,)
        for label in labels:
            yield fv, label


def nb_train(data: Sequence[tuple[Mapping[str, float], object]], task: TaskKind) -> NaiveBayesModel:
    """Train on ``(features, label)`` pairs; a tuple of labels adds one instance per label."""
    instances = list(_expand(data))
    if not instances:
        raise ValueError("cannot train on empty data")
    labels = task.labels
    label_set = set(labels)
    doc_counts = {c: 0 for c in labels}
    feat_counts = {c: defaultdict(float) for c in labels}
    token_totals = {c: 0.0 for c in labels}
    vocab: set[str] = set()
    for fv, label in instances:
        if label not in label_set:
            raise ValueError(f"label {label!r} is outside the {task.value}-class label space")
        doc_counts[label] += 1
        for f, w in fv.items():
            feat_counts[label][f] += w
            token_totals[label] += w
            vocab.add(f)

    n, k, v = len(instances), len(labels), len(vocab)
    priors = {c: (doc_counts[c] + 1) / (n + k) for c in labels}
    likelihoods = {}
    for c in labels:
        denom = token_totals[c] + v + 1
        counts = feat_counts[c]
        table = {f: (counts.get(f, 0.0) + 1) / denom for f in sorted(vocab)}
        table[UNK] = 1 / denom
        likelihoods[c] = table
    return NaiveBayesModel(task, priors, likelihoods, frozenset(vocab))


def nb_classify(model: NaiveBayesModel, fv: Mapping[str, float]):
    """Return ``(argmax label, {label: log score})``.

    Ties go to the label listed first in the task's label order.
    """
    scores = {}
    for c in model.task.labels:
        score = model.log_prior(c)
        for f, w in fv.items():
            score += w * model.log_likelihood(c, f)
        scores[c] = score
    best = None
    for c in model.task.labels:
        if best is None or scores[c] > scores[best]:
            best = c
    return best, scores

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .features import TaskKind


@dataclass(frozen=True)
class EvalResult:
    accuracy: float
    per_label: dict  # label -> (precision, recall)
    n: int


def evaluate_classifier(pred: Sequence, gold: Sequence[Sequence], relaxed: bool = True) -> EvalResult:
    """Score predictions against gold label sets.

    Strict mode counts a hit only for the primary (first-annotated) gold
    label; relaxed mode accepts any gold label.
    """
    if len(pred) != len(gold):
        raise ValueError(f"{len(pred)} predictions for {len(gold)} gold entries")
    hits = 0
    predicted, relevant, correct = {}, {}, {}
    for p, g in zip(pred, gold):
        g = tuple(g)
        if not g:
            raise ValueError("gold label sets must be non-empty")
        accepted = g if relaxed else g[:1]
        hit = p in accepted
        hits += hit
        predicted[p] = predicted.get(p, 0) + 1
        for label in accepted:
            relevant[label] = relevant.get(label, 0) + 1
        if hit:
            correct[p] = correct.get(p, 0) + 1
    per_label = {}
    for label in dict.fromkeys([*predicted, *relevant]):
        c = correct.get(label, 0)
        per_label[label] = (
            c / predicted[label] if predicted.get(label) else 0.0,
            c / relevant[label] if relevant.get(label) else 0.0,
        )
    return EvalResult(hits / len(pred) if pred else 0.0, per_label, len(pred))


def random_baseline(n: int, task: TaskKind, seed: int) -> list:
    """Uniform i.i.d. labels over the task's label space."""
    if n < 0:
        raise ValueError("n must be non-negative")
    labels = task.labels
    picks = np.random.default_rng(seed).integers(0, len(labels), size=n)
    return [labels[i] for i in picks]

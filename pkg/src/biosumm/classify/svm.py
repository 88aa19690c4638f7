"""Linear SVM on the two saliency features, trained by Pegasos-style
sub-gradient descent on the L2-regularized hinge loss.

The bias is learned as the weight of a constant feature and is regularized
with the rest. The returned model is the running average of the iterates,
which is what makes the objective settle monotonically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ..corpus import BinaryLabel


@dataclass(frozen=True)
class LinearSvmModel:
    weights: tuple[float, float]
    bias: float
    reg: float
    epochs: int
    seed: int
    history: tuple[float, ...] = field(default=(), compare=False)

    def decision(self, x) -> float:
        return self.weights[0] * x[0] + self.weights[1] * x[1] + self.bias


def _xy(data):
    x = np.array([[f[0], f[1], 1.0] for f, _ in data], dtype=float)
    y = np.array([1.0 if BinaryLabel(lbl) is BinaryLabel.BIO2 else -1.0 for _, lbl in data])
    return x, y


def svm_objective(w: np.ndarray, x: np.ndarray, y: np.ndarray, reg: float) -> float:
    hinge = np.maximum(0.0, 1.0 - y * (x @ w))
    return 0.5 * reg * float(w @ w) + float(hinge.mean())


def svm_train(data: Sequence, reg: float = 1e-3, epochs: int = 200, seed: int = 0) -> LinearSvmModel:
    """``data`` is a sequence of ``(SaliencyFeatures or 2-tuple, label)`` pairs."""
    if reg <= 0 or epochs < 1:
        raise ValueError("reg must be positive and epochs at least 1")
    x, y = _xy(data)
    if len(set(y.tolist())) < 2:
        raise ValueError("SVM training needs both labels present")
    rng = np.random.default_rng(seed)
    radius = 1.0 / math.sqrt(reg)
    rows = x.tolist()
    labels = y.tolist()
    w0 = w1 = w2 = 0.0
    a0 = a1 = a2 = 0.0
    t = 0
    history = []
    for _ in range(epochs):
        for i in rng.permutation(len(labels)).tolist():
            t += 1
            eta = 1.0 / (reg * t)
            (x0, x1, x2), yi = rows[i], labels[i]
            violated = yi * (w0 * x0 + w1 * x1 + w2 * x2) < 1.0
            shrink = 1.0 - eta * reg
            w0, w1, w2 = w0 * shrink, w1 * shrink, w2 * shrink
            if violated:
                step = eta * yi
                w0, w1, w2 = w0 + step * x0, w1 + step * x1, w2 + step * x2
            norm = math.sqrt(w0 * w0 + w1 * w1 + w2 * w2)
            if norm > radius:
                scale = radius / norm
                w0, w1, w2 = w0 * scale, w1 * scale, w2 * scale
            a0 += (w0 - a0) / t
            a1 += (w1 - a1) / t
            a2 += (w2 - a2) / t
        history.append(svm_objective(np.array([a0, a1, a2]), x, y, reg))
    avg = (a0, a1, a2)
    return LinearSvmModel((float(avg[0]), float(avg[1])), float(avg[2]), reg, epochs, seed, tuple(history))


def svm_predict(model: LinearSvmModel, x) -> BinaryLabel:
    """Points on the boundary fall to ``none2``."""
    return BinaryLabel.BIO2 if model.decision(x) > 0 else BinaryLabel.NONE2

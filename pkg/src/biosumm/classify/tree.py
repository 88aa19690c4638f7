"""Binary decision tree on continuous features, split by gain ratio (C4.5 criterion).

No pruning or windowing.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from ..corpus import BinaryLabel


@dataclass(frozen=True)
class Leaf:
    label: BinaryLabel


@dataclass(frozen=True)
class Split:
    feature: int
    threshold: float
    left: "Node"  # x[feature] < threshold
    right: "Node"


Node = Union[Leaf, Split]


@dataclass(frozen=True)
class DecisionTreeModel:
    root: Node
    max_depth: Optional[int]
    min_leaf: int

    def depth(self) -> int:
        def d(node):
            return 0 if isinstance(node, Leaf) else 1 + max(d(node.left), d(node.right))
        return d(self.root)


def entropy(labels: Sequence) -> float:
    n = len(labels)
    if n == 0:
        return 0.0
    return -sum(c / n * math.log2(c / n) for c in Counter(labels).values())


def gain_ratio(labels: Sequence, goes_left: Sequence[bool]) -> float:
    left = [y for y, g in zip(labels, goes_left) if g]
    right = [y for y, g in zip(labels, goes_left) if not g]
    n = len(labels)
    if not left or not right:
        return 0.0
    gain = entropy(labels) - len(left) / n * entropy(left) - len(right) / n * entropy(right)
    split_info = entropy([True] * len(left) + [False] * len(right))
    return gain / split_info


def _majority(labels) -> BinaryLabel:
    counts = Counter(labels)
    bio, none = counts[BinaryLabel.BIO2], counts[BinaryLabel.NONE2]
    return BinaryLabel.BIO2 if bio > none else BinaryLabel.NONE2


def candidate_thresholds(values: Sequence[float]) -> list[float]:
    distinct = sorted(set(values))
    return [(a + b) / 2 for a, b in zip(distinct, distinct[1:])]


def _entropy_counts(pos: int, n: int) -> float:
    if pos == 0 or pos == n:
        return 0.0
    p = pos / n
    return -(p * math.log2(p) + (1 - p) * math.log2(1 - p))


def _best_split(xs, ys, min_leaf):
    # Sorted sweep; equivalent to gain_ratio() at every candidate midpoint.
    n = len(ys)
    is_bio = [y is BinaryLabel.BIO2 for y in ys]
    total_pos = sum(is_bio)
    base = _entropy_counts(total_pos, n)
    best = None  # (ratio, feature, threshold)
    for f in (0, 1):
        order = sorted(range(n), key=lambda i: xs[i][f])
        left_pos = 0
        for k in range(1, n):
            left_pos += is_bio[order[k - 1]]
            lo, hi = xs[order[k - 1]][f], xs[order[k]][f]
            if lo == hi or k < min_leaf or n - k < min_leaf:
                continue
            gain = base - k / n * _entropy_counts(left_pos, k) - (n - k) / n * _entropy_counts(total_pos - left_pos, n - k)
            ratio = gain / _entropy_counts(k, n)
            if best is None or ratio > best[0] + 1e-12:
                best = (ratio, f, (lo + hi) / 2)
    return best


def tree_train(data: Sequence, max_depth: Optional[int] = None, min_leaf: int = 1) -> DecisionTreeModel:
    """``data`` is a sequence of ``(2-feature point, label)`` pairs."""
    if not data:
        raise ValueError("cannot train a tree on empty data")
    xs = [(float(x[0]), float(x[1])) for x, _ in data]
    ys = [BinaryLabel(y) for _, y in data]

    def grow(xs, ys, depth):
        if len(set(ys)) == 1 or (max_depth is not None and depth >= max_depth) or len(ys) < 2 * min_leaf:
            return Leaf(_majority(ys))
        best = _best_split(xs, ys, min_leaf)
        if best is None:
            return Leaf(_majority(ys))
        _, f, thr = best
        left = [i for i, x in enumerate(xs) if x[f] < thr]
        right = [i for i, x in enumerate(xs) if x[f] >= thr]
        return Split(
            f, thr,
            grow([xs[i] for i in left], [ys[i] for i in left], depth + 1),
            grow([xs[i] for i in right], [ys[i] for i in right], depth + 1),
        )

    return DecisionTreeModel(grow(xs, ys, 0), max_depth, min_leaf)


def tree_predict(model: DecisionTreeModel, x) -> BinaryLabel:
    node = model.root
    while isinstance(node, Split):
        node = node.left if x[node.feature] < node.threshold else node.right
    return node.label

"""Uniform random-label baseline over a seed sweep, for both label spaces."""
import argparse

import numpy as np

from biosumm.classify import TaskKind, evaluate_classifier, random_baseline
from biosumm.synthetic import separable_corpus


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=10_000)
    ap.add_argument("--seeds", type=int, default=10)
    args = ap.parse_args()
    _, test = separable_corpus(n_train=0, n_test=args.n, seed=1)
    for task in (TaskKind.TEN, TaskKind.TWO):
        gold = [task.project(ls.labels) if task is TaskKind.TWO else ls.labels for ls in test]
        accs = [evaluate_classifier(random_baseline(args.n, task, s), gold).accuracy for s in range(args.seeds)]
        print(f"{task.value}\tmean={np.mean(accs):.4f}\tsd={np.std(accs):.4f}\tmin={min(accs):.4f}\tmax={max(accs):.4f}")


if __name__ == "__main__":
    main()

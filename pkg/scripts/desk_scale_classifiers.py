"""Train all classifiers on a generated separable corpus and report test accuracy."""
import argparse

from biosumm.classify import (
    FeatureConfig, TaskKind, build_saliency_lexicons, evaluate_classifier, extract_features, nb_classify, nb_train,
    saliency_features, svm_predict, svm_train, tree_predict, tree_train,
)
from biosumm.synthetic import separable_corpus


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--train", type=int, default=1000)
    ap.add_argument("--test", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--multi-label-rate", type=float, default=0.0)
    args = ap.parse_args()
    train, test = separable_corpus(args.train, args.test, args.seed, multi_label_rate=args.multi_label_rate)

    for mode in ("unigram", "bigram", "stem"):
        cfg = FeatureConfig(mode)
        for task in (TaskKind.TEN, TaskKind.TWO):
            nb = nb_train([(extract_features(ls.sentence, cfg), task.project(ls.labels)) for ls in train], task)
            pred = [nb_classify(nb, extract_features(ls.sentence, cfg))[0] for ls in test]
            gold = [task.project(ls.labels) for ls in test]
            strict = evaluate_classifier(pred, gold, relaxed=False).accuracy
            relaxed = evaluate_classifier(pred, gold, relaxed=True).accuracy
            print(f"nb\t{mode}\t{task.value}\tstrict={strict:.4f}\trelaxed={relaxed:.4f}")

    bio, nonbio = build_saliency_lexicons(train)
    tr = [(saliency_features(ls.sentence, bio, nonbio).as_tuple(), TaskKind.TWO.project(ls.labels)[0]) for ls in train]
    te = [(saliency_features(ls.sentence, bio, nonbio).as_tuple(), TaskKind.TWO.project(ls.labels)[0]) for ls in test]
    gold = [(y,) for _, y in te]
    svm = svm_train(tr, reg=1e-2, epochs=200, seed=args.seed)
    tree = tree_train(tr, max_depth=8, min_leaf=2)
    print(f"svm\tsaliency\ttwo\taccuracy={evaluate_classifier([svm_predict(svm, x) for x, _ in te], gold).accuracy:.4f}")
    print(f"tree\tsaliency\ttwo\taccuracy={evaluate_classifier([tree_predict(tree, x) for x, _ in te], gold).accuracy:.4f}"
          f"\tdepth={tree.depth()}")


if __name__ == "__main__":
    main()

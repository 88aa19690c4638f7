"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 input/format error, 3 internal
invariant violation. Errors are reported on stderr as a single line
``biosumm: error[<kind>]: <message>``.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from collections import Counter
from pathlib import Path

from . import __version__
from .classify import (
    FeatureError, ModelFormatError, evaluate_classifier, load_model, save_model, train_classifier,
)
from .config import ConfigError, RunConfig, resolve
from .corpus import AnnotationError, corpus_stats, load_corpus, split_corpus
from .extract import (
    SummaryConfig, TermStats, WorldStatsError, dump_world_stats, load_documents, load_world_stats, summarize,
)
from .rouge import score_directories
from .textproc import PersonName, load_stopwords, tokenize

log = logging.getLogger("biosumm")

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_run_options(p: argparse.ArgumentParser, *names: str) -> None:
    opts = {
        "task": lambda: p.add_argument("--task", choices=["ten", "two"], default=None),
        "features": lambda: p.add_argument("--features", choices=["unigram", "bigram", "stem", "stem_unigram"], default=None),
        "pos": lambda: p.add_argument("--pos", action="store_true", default=None,
                                      help="suffix features with POS tags from <file>.pos sidecars"),
        "hypernyms": lambda: p.add_argument("--hypernyms", metavar="PATH", default=None),
        "budget": lambda: p.add_argument("--budget", type=int, metavar="N", default=None, help="bytes (default 665)"),
        "pool_k": lambda: p.add_argument("--pool-k", type=int, metavar="N", default=None),
        "seed": lambda: p.add_argument("--seed", type=int, metavar="N", default=None),
        "world": lambda: p.add_argument("--world", metavar="PATH", default=None),
        "model": lambda: p.add_argument("--model", metavar="PATH", default=None),
        "stopwords": lambda: p.add_argument("--stopwords", metavar="PATH", default=None),
    }
    for name in names:
        opts[name]()
    p.add_argument("--config", metavar="PATH", default=None, help="key=value settings file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="biosumm", description="Multi-document biography summarization toolkit.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("corpus-stats", help="span counts per biographical category")
    p.add_argument("corpus_dirs", nargs="+", metavar="CORPUS_DIR")

    p = sub.add_parser("train", help="train sentence classifiers on an annotated corpus")
    p.add_argument("corpus_dir")
    _add_run_options(p, "task", "features", "pos", "hypernyms", "seed", "model")
    p.add_argument("--unit", choices=["sentence", "phrase"], default=None)
    p.add_argument("--classifier", choices=["nb", "svm", "tree"], default=None)
    p.add_argument("--train-fraction", type=float, default=None,
                   help="share of documents used for training; 1 trains on everything")
    p.add_argument("--hypernym-weight", type=float, default=None)

    p = sub.add_parser("build-world-stats", help="count stems over plain-text files")
    p.add_argument("text_dirs", nargs="+", metavar="TEXT_DIR")
    p.add_argument("--out", metavar="PATH", default=None, help="output file (default: stdout)")

    p = sub.add_parser("summarize", help="answer 'who is X?' from a document set")
    p.add_argument("docs_dir")
    p.add_argument("--person", required=True, help='full name, e.g. "Lance Armstrong"')
    _add_run_options(p, "budget", "pool_k", "seed", "world", "model", "stopwords")
    p.add_argument("--classifier", choices=["nb", "svm", "tree"], default=None)
    p.add_argument("--min-similarity", type=float, default=None)
    p.add_argument("--sidecar", metavar="PATH", default=None, help="write per-sentence provenance as JSON")

    p = sub.add_parser("rouge", help="batch ROUGE scoring with a bootstrap CI")
    p.add_argument("candidates_dir")
    p.add_argument("references_dir")
    p.add_argument("--metric", choices=["L", "N"], default="L")
    p.add_argument("-n", type=int, default=1, help="n-gram order for --metric N")
    p.add_argument("--resamples", type=int, default=None)
    _add_run_options(p, "seed")
    return parser


def _config(args) -> RunConfig:
    values = {k: v for k, v in vars(args).items() if k != "config"}
    return resolve(values, args.config)


def _require_dir(path: str) -> Path:
    p = Path(path)
    if not p.is_dir():
        raise FileNotFoundError(f"not a directory: {path}")
    return p


def cmd_corpus_stats(args, out) -> None:
    stats = None
    for d in args.corpus_dirs:
        s = corpus_stats(load_corpus(_require_dir(d)))
        stats = s if stats is None else stats + s
    out.write(stats.to_tsv())


def cmd_train(args, out) -> None:
    cfg = _config(args)
    if cfg.model is None:
        raise UsageError("train needs --model PATH for the output model file")
    cfg.check_files("hypernyms")
    docs = load_corpus(_require_dir(args.corpus_dir))
    if not docs:
        raise ValueError(f"no documents in {args.corpus_dir}")
    if cfg.train_fraction >= 1:
        train, test = docs, []
    else:
        train, test = split_corpus(docs, cfg.train_fraction, cfg.seed)
    clf = train_classifier(train, cfg.task_kind, cfg.feature_config(), cfg.unit, cfg.classifier, cfg.seed)
    clf.meta = {"seed": cfg.seed, "train_docs": len(train), "test_docs": len(test)}
    save_model(clf, cfg.model)
    out.write(f"model\t{cfg.model}\ntrain_docs\t{len(train)}\ntest_docs\t{len(test)}\n")
    if test:
        labeled = [ls for d in test for ls in d.labeled_sentences()]
        gold = [cfg.task_kind.project(ls.labels) for ls in labeled]
        pred = [clf.predict(ls.sentence) for ls in labeled]
        for relaxed in (False, True):
            res = evaluate_classifier(pred, gold, relaxed=relaxed)
            out.write(f"{'relaxed' if relaxed else 'strict'}_accuracy\t{res.accuracy:.4f}\n")
        out.write(f"test_sentences\t{len(labeled)}\n")


def cmd_build_world_stats(args, out) -> None:
    counts = Counter()
    for d in args.text_dirs:
        for path in sorted(p for p in _require_dir(d).rglob("*") if p.is_file() and not p.name.startswith(".")):
            text = path.read_text(encoding="utf-8", errors="replace")
            counts.update(t.stem for t in tokenize(text))
    text = dump_world_stats(TermStats(dict(counts), sum(counts.values())))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        out.write(text)


def cmd_summarize(args, out) -> None:
    cfg = _config(args)
    if cfg.world is None:
        raise FileNotFoundError("summarize needs --world PATH (see build-world-stats)")
    cfg.check_files("world", "model", "stopwords")
    world = load_world_stats(cfg.world)
    clf = None
    if cfg.model is not None:
        clf = load_model(cfg.model)
        if args.classifier is not None:
            clf.method = args.classifier
    else:
        log.warning("no --model given; using name-filtered sentences only")
    docs = load_documents(_require_dir(args.docs_dir))
    if not docs:
        raise ValueError(f"no documents in {args.docs_dir}")
    summary = summarize(
        docs, PersonName.parse(args.person), clf, world,
        SummaryConfig(cfg.budget, cfg.pool_k, cfg.min_similarity, load_stopwords(cfg.stopwords)),
    )
    out.write(summary.text + "\n")
    if args.sidecar:
        payload = {
            "person": summary.person.full,
            "status": summary.status,
            "total_bytes": summary.total_bytes,
            "byte_budget": summary.byte_budget,
            "truncated": summary.truncated,
            "sentences": summary.sidecar(),
            "config": cfg.as_dict(),
        }
        Path(args.sidecar).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def cmd_rouge(args, out) -> None:
    cfg = _config(args)
    result = score_directories(_require_dir(args.candidates_dir), _require_dir(args.references_dir),
                               args.metric, args.n, cfg.resamples, cfg.seed)
    for stem in result.skipped:
        print(f"biosumm: warning: no reference for {stem}; skipped", file=sys.stderr)
    out.write(result.to_tsv())


COMMANDS = {
    "corpus-stats": cmd_corpus_stats,
    "train": cmd_train,
    "build-world-stats": cmd_build_world_stats,
    "summarize": cmd_summarize,
    "rouge": cmd_rouge,
}


def _fail(kind: str, message, code: int) -> int:
    text = " ".join(str(message).split())
    print(f"biosumm: error[{kind}]: {text}", file=sys.stderr)
    return code


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return _fail("usage", exc, EXIT_USAGE)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="biosumm: %(levelname)s: %(message)s")
    try:
        COMMANDS[args.command](args, out)
    except UsageError as exc:
        return _fail("usage", exc, EXIT_USAGE)
    except ConfigError as exc:
        return _fail("config", exc, EXIT_USAGE)
    except (AnnotationError, ModelFormatError, WorldStatsError, FeatureError) as exc:
        return _fail("format", exc, EXIT_INPUT)
    except (OSError, UnicodeDecodeError, ValueError) as exc:
        return _fail("input", exc, EXIT_INPUT)
    except AssertionError as exc:
        return _fail("internal", exc or "invariant violated", EXIT_INTERNAL)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

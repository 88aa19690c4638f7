"""End-to-end run on the bundled fictional-person fixture, scored against its reference."""
import argparse
from pathlib import Path

from biosumm.classify import TaskKind, train_classifier
from biosumm.corpus import load_corpus
from biosumm.extract import SummaryConfig, TermStats, load_documents, summarize
from biosumm.rouge import rouge_l
from biosumm.textproc import PersonName, segment_sentences

FIXTURE = Path(__file__).resolve().parents[1] / "src" / "biosumm" / "data" / "fixture"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--budget", type=int, default=665)
    ap.add_argument("--no-model", action="store_true", help="name filter only")
    args = ap.parse_args()
    world = TermStats.from_stems(t.stem for f in sorted((FIXTURE / "world").iterdir())
                                 for s in segment_sentences(f.read_text(encoding="utf-8")) for t in s.tokens)
    clf = None if args.no_model else train_classifier(load_corpus(FIXTURE / "corpus"), TaskKind.TWO, unit="phrase")
    summary = summarize(load_documents(FIXTURE / "docs"), PersonName.parse("Ottilie Brandvold"), clf, world,
                        SummaryConfig(byte_budget=args.budget))
    print(summary.text)
    print(f"\n{summary.total_bytes} bytes, {len(summary.sentences)} sentences, truncated={summary.truncated}")
    score = rouge_l(summary.text, [(FIXTURE / "reference.txt").read_text(encoding="utf-8")])
    print(f"ROUGE-L P={score.precision:.4f} R={score.recall:.4f} F={score.f_measure:.4f}")


if __name__ == "__main__":
    main()

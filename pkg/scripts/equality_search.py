"""Tabulate how often each bound is attained under each random model.

Exploratory only: the necessary condition for equality is known, a
sufficient one is not, so attained instances are logged for inspection.
"""
import argparse
from collections import Counter

from sharpbound.formats import serialize
from sharpbound.harness import TrialConfig, equality_case_search


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--show", type=int, default=2, help="instances printed per kind")
    args = ap.parse_args()

    for model in ("gnp", "random-regular", "bipartite-semiregular", "digraph-gnp",
                  "nonneg-matrix"):
        cfg = TrialConfig(model, size_range=(2, args.max_n), density=0.5,
                          trials=args.trials, seed=args.seed)
        found = equality_case_search(cfg)
        tally = Counter(getattr(k, "value", k) for _, k, _ in found)
        print(f"{model}: {dict(sorted(tally.items())) or 'no attained bounds'}")
        shown = Counter()
        for inst, kind, gap in found:
            key = getattr(kind, "value", kind)
            if shown[key] < args.show:
                shown[key] += 1
                print(f"    {key} gap={gap:.2e}: " + serialize(inst).replace("\n", " | ")[:100])


if __name__ == "__main__":
    main()

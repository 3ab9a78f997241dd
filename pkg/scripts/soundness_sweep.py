"""Run the soundness properties over every generator model and print a summary.

    python scripts/soundness_sweep.py --trials 500 --seed 1 --out sweep.json
"""
import argparse
import json
import time

from sharpbound.harness import MODELS, SOUNDNESS, TrialConfig, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--max-n", type=int, default=20)
    ap.add_argument("--out", help="write the full JSON results here")
    args = ap.parse_args()

    results = {}
    for model in MODELS:
        lo = 2 if model in ("gnp", "digraph-gnp") else 1
        cfg = TrialConfig(model, size_range=(lo, args.max_n), density=0.4,
                          trials=args.trials, seed=args.seed)
        start = time.perf_counter()
        res = run_suite(cfg, SOUNDNESS + ("equality-necessary", "specialization"))
        elapsed = time.perf_counter() - start
        results[model] = res.to_dict()
        passed = sum(c["pass"] for c in res.counts.values())
        print(f"{model:22s} pass={passed:6d} fail={res.fail_count:3d}  {elapsed:6.1f}s")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(results, fh, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()

"""Check the regularity characterisations on all connected graphs up to n vertices."""
import argparse
import time

from sharpbound.harness import exhaustive_check


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()

    start = time.perf_counter()
    res = exhaustive_check(args.max_n)
    print(f"graphs per n: {res.graphs_per_n}  (total {res.total})")
    print(f"attained (graph, kind) pairs: {res.equality_cases}")
    for check, bad in res.discrepancies.items():
        print(f"  {check:26s} discrepancies={len(bad)}")
        for text in bad[:3]:
            print("    " + text.replace("\n", " | "))
    print(f"{'ok' if res.ok else 'FAILED'} in {time.perf_counter() - start:.1f}s")
    raise SystemExit(0 if res.ok else 1)


if __name__ == "__main__":
    main()

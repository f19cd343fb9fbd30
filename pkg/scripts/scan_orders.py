"""Summarize which orders survive the necessary conditions for POS groups."""
import argparse
from collections import Counter

from posgroups.feasibility import conjecture_probe, feasibility_report, scan


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=10**5)
    ap.add_argument("--probe", type=int, default=10**6, help="bound for the p-1 closed search from 42")
    ap.add_argument("--show", type=int, default=40, help="feasible orders to list")
    args = ap.parse_args()

    reports = scan(1, args.max)
    realized = Counter((r.realized_by or "none").split(":")[0] for r in reports)
    print(f"feasible orders <= {args.max}: {len(reports)}")
    for family, count in sorted(realized.items()):
        print(f"  realized by {family:<8} {count}")
    print("first:", " ".join(str(r.n) for r in reports[: args.show]))

    even = range(2, min(args.max, 10**5) + 1, 2)
    failures = Counter(rule for n in even for rule in feasibility_report(n).failed_rules)
    print("rule failures among even n <= min(max, 1e5):", dict(sorted(failures.items())))

    print(f"p-1 closed candidates from 42 up to {args.probe}: {conjecture_probe(args.probe)}")


if __name__ == "__main__":
    main()

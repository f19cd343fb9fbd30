"""Print predicted and enumerated order tables for the constructed POS families."""
import argparse
import time

from posgroups import order_spectrum, pos_verdict
from posgroups.constructions import build_c2a_m21, build_c6_c7, build_remark_p5, build_theorem32

DEFAULT_THM32 = [(3, 2, 1), (3, 3, 2), (5, 2, 1), (5, 3, 2), (17, 4, 1)]
DEFAULT_REMARK = [(2, 1), (3, 1), (4, 2)]


def show(label, group, table):
    t0 = time.perf_counter()
    spectrum = order_spectrum(group)
    elapsed = time.perf_counter() - t0
    verdict = pos_verdict(spectrum, group.cardinality)
    status = "match" if table is None or spectrum == table else "MISMATCH"
    print(f"{label}  |G| = {group.cardinality}  POS = {verdict.is_pos}  {status}  ({elapsed:.2f}s)")
    for order, count in spectrum:
        print(f"  {order:>8}  {count:>8}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--thm32", nargs=3, type=int, action="append", metavar=("P", "ALPHA", "BETA"))
    ap.add_argument("--remark", nargs=2, type=int, action="append", metavar=("ALPHA", "BETA"))
    ap.add_argument("--c2a", type=int, default=3, help="largest a for C_{2^a} x M21")
    args = ap.parse_args()

    for p, a, b in args.thm32 or DEFAULT_THM32:
        group, table = build_theorem32(p, a, b)
        show(group.label, group, table)
    for a, b in args.remark or DEFAULT_REMARK:
        group, table = build_remark_p5(a, b)
        show(group.label, group, table)
    group, table = build_c6_c7()
    show(group.label, group, table)
    for a in range(1, args.c2a + 1):
        group = build_c2a_m21(a)
        show(group.label, group, None)


if __name__ == "__main__":
    main()

"""Sweep mate candidates and compare the unit/counit form with the hom-square form.

Prints one row per family: candidates, how many pass, and whether the two
forms ever disagree.
"""
import argparse
import time

from fincat.adjoint import check_mate_hom_square, check_mate_unit_counit
from fincat.category import cyclic_table, standard_category
from fincat.fixtures import all_galois_adjunctions, klein, mate_candidates, monoid_mate_candidates


def families(max_chain):
    chain = lambda n: standard_category("chain", n)
    for n in range(1, max_chain):
        yield f"chain{n}-chain{n + 1}", mate_candidates(all_galois_adjunctions(chain(n), chain(n + 1)))
    yield "z2", monoid_mate_candidates(standard_category("z2"))
    yield "z3", monoid_mate_candidates(standard_category("monoid", cyclic_table(3)))
    yield "z4", monoid_mate_candidates(standard_category("monoid", cyclic_table(4)))
    yield "klein", monoid_mate_candidates(klein())


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-chain", type=int, default=4)
    args = ap.parse_args()
    print(f"{'family':<16}{'candidates':>11}{'pass':>7}{'disagree':>10}{'secs':>7}")
    bad = 0
    for name, cands in families(args.max_chain):
        t0 = time.perf_counter()
        a = [check_mate_unit_counit(m).passed for m in cands]
        b = [check_mate_hom_square(m).passed for m in cands]
        dis = sum(x != y for x, y in zip(a, b))
        bad += dis
        print(f"{name:<16}{len(cands):>11}{sum(a):>7}{dis:>10}{time.perf_counter() - t0:>7.2f}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()

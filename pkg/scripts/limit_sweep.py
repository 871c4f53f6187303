"""Compare the products-and-equalizers limit with the brute-force cone search.

Every diagram of every small shape into each fixture category is tried; a
mismatch in either direction is printed and makes the exit status 1.
"""
import argparse

from fincat.fixtures import limit_categories, limit_shapes
from fincat.limits import brute_force_limit, compare_limits, limit_from_products_equalizers
from fincat.transfor import enumerate_functors


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cap", type=int, default=20000, help="functor enumeration cap per pair")
    args = ap.parse_args()
    failures = 0
    for cname, C in limit_categories().items():
        for sname, J in limit_shapes().items():
            Ds = enumerate_functors(J, C, cap=args.cap)
            ok = 0
            for D in Ds:
                built, oracle = limit_from_products_equalizers(D), brute_force_limit(D)
                if oracle is not None and compare_limits(built, oracle).passed and compare_limits(oracle, built).passed:
                    ok += 1
                else:
                    failures += 1
                    print(f"  mismatch: {sname} -> {cname} obj_map={D.obj_map}")
            print(f"{cname:<20}{sname:<20}{ok:>6}/{len(Ds)}")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()

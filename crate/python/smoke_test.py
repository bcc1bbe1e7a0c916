"""Smoke test for the `turan` extension module.

Build and run from the workspace root:

    cargo build -p turan-py --release
    cp target/release/libturan.so python/turan.so
    python3 python/smoke_test.py
"""

import json
import math
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import turan


def main():
    assert turan.mu_closed(7, 3, 2) == turan.mu_oracle(7, 3, 2)
    assert turan.weighted_gap_sum(32, 2) > 0
    big = turan.binomial(200, 100)
    assert big == math.comb(200, 100)

    x = turan.CyclicSubset(10, [7, 1, 4])
    assert x.elements == [1, 4, 7]
    gaps, h = x.gap_profile()
    assert sum(gaps) == 10 - 3 and h == max(gaps)

    fam = turan.build_family(12, 3, 0)
    stats = turan.family_size_stats(12, 3)
    assert len(fam) == stats["sizes"][0]
    num, den = turan.averaging_bound(12, 3)
    assert (num, den) == stats["mean"]

    rep = turan.witness_verify(12, 3, 0)
    assert rep["failures"] == [], rep["summary"]
    rep = turan.is_turan_family(12, 3, 4, fam)
    assert rep["failures"] == [], rep["summary"]
    rep = turan.is_turan_family(8, 3, 4, [[0, 1, 2]])
    assert rep["failures"], "a single triple cannot cover every 4-subset of Z_8"

    assert abs(turan.c0(5) - 0.12703785407817305) < 1e-9
    assert abs(turan.tau_integral(10.0) - 1.9299223485880865) < 1e-8
    assert turan.bound_frankl_rodl(32, 4) > turan.theorem1_coefficient(4)

    table = json.loads(turan.render_table("list2", k_min=2, k_max=4, format="json"))
    assert [r[0] for r in table["rows"]] == [2, 3, 4]

    try:
        turan.build_family(40, 20, 0, cap=1000)
    except turan.GuardError:
        pass
    else:
        raise AssertionError("size guard did not trip")

    try:
        turan.c1(1)
    except ValueError:
        pass
    else:
        raise AssertionError("c1(1) should be a domain error")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Smoke test for the ibn_ezra_py extension module.

Build and stage the module first:

    cargo build --release -p ibn-ezra-py
    cp target/release/libibn_ezra_py.so python/ibn_ezra_py.so

then run: python3 python/smoke_test.py
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import ibn_ezra_py as ie


def main() -> None:
    assert ie.sum_one_to(20) == 210
    assert ie.binomial(7, 4) == 35
    assert ie.binomial(7, 2) == 21
    assert ie.binomial(12, 5, strategy="eq2-direct") == 792
    assert ie.binomial_pascal(10, 5) == 252
    # Exact past 64 bits.
    assert ie.binomial_pascal(100, 50) == 100891344545564193334812497256

    trace = ie.binomial_trace(7, 4)
    assert trace.splitlines()[0] == "C(7,4) = 35 via HockeyStick"

    census = ie.conjunction_census()
    assert census["total"] == 120
    assert census["per_size"][2] == 21
    assert census["planets"][0] == "Sun"

    order = ie.elimination_order(30, 9)
    assert sorted(order) == list(range(1, 31))
    assert order[0] == 9

    labels = ie.arrangement(30, 15, 9)
    assert labels.count("Bad") == 15
    doomed = set(order[:15])
    assert {i + 1 for i, l in enumerate(labels) if l == "Bad"} == doomed
    assert ie.find_step(30, sorted(doomed), step_limit=20) == 9

    assert ie.square(13) == 169
    assert "13² = 144 + 24 + 1 = 169 (PlusOne)" in ie.square_trace(13)
    assert ie.multiply(8, 6) == 48
    assert ie.multiply(7, 6) == 42

    try:
        ie.binomial(3, 5)
    except ValueError:
        pass
    else:
        raise AssertionError("k > n should raise")

    print("smoke test passed")


if __name__ == "__main__":
    main()

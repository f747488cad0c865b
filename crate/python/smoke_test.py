#!/usr/bin/env python3
"""Smoke test for the richelt_py extension module.

Run after `pip install -e crates/richelt-py --no-build-isolation`:

    python3 python/smoke_test.py
"""

import richelt_py as rp


def main():
    # classification
    p = rp.Parabolic("A", blocks=[2, 3, 2])
    assert p.is_nice()
    assert p.lie_type == "A6"

    bad = rp.Parabolic("A", blocks=[2, 1, 3])
    assert not bad.is_nice()

    # the sp_6 flag (1,1,2,1,1) is unimodal yet not nice; the oracle agrees
    sp6 = rp.Parabolic("C", blocks=[1, 1, 2, 1, 1])
    assert not sp6.is_nice()
    assert sp6.generic_centralizer_dim() == 7 > sp6.levi_dim() == 5

    # construction + exact verification
    borel = rp.Parabolic("C", blocks=[1, 2, 1])
    report = borel.construct()
    assert report["support"] == ["[1,0]"], report
    v = borel.verify()
    assert v["richardson"]
    assert v["centralizer_direct"] == v["centralizer_formula"] == borel.levi_dim()

    # tuple selector round trip
    q = rp.Parabolic("C3", tuple=[0, 1, 0])
    assert q.blocks == [2, 2, 2]
    assert q.tuple() == [0, 1, 0]

    # support structure: a (*)-form exhibits a subtracting pair
    star = rp.Parabolic("B", blocks=[1, 2, 5, 2, 1])
    s = star.support()
    assert s["star_form"] and s["subtracting_pair"] is not None
    plain = rp.Parabolic("D", blocks=[2, 3, 3, 2]).support()
    assert plain["simple_system"] and plain["factors"] == ["A3"]

    # enumeration is deterministic and verified
    nice = rp.enumerate_nice("B3")
    assert all(x.verify()["richardson"] for x in nice)

    # exceptional table row and the G2 search
    row = rp.verify_exceptional("F4:0001")
    assert row["pass"] and row["levi_dim"] == 22

    found = rp.search_simple_support("G2:10", cutoff=10_000)
    assert found["found"] is None and not found["cutoff_hit"]

    print("smoke test: OK")


if __name__ == "__main__":
    main()

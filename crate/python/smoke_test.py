"""Smoke test for the dibchrom extension.

Build and stage the module first:

    cargo build -p dib-py --features extension-module --release
    cp target/release/libdibchrom.so python/dibchrom.so
    python3 python/smoke_test.py
"""

import dibchrom as dc


def main():
    t5 = dc.Digraph.family("transitive:n=5")
    assert t5.order == 5 and t5.size == 10
    assert dc.dib(t5) == 3

    k4 = dc.Digraph.family("complete:n=4")
    out = dc.solve(k4, "dib")
    assert out["value"] == 4
    assert dc.audit(k4, out["witness"])["is_b_coloring"]

    c3 = dc.Digraph(3, [(0, 1), (1, 2), (2, 0)])
    assert dc.dc(c3) == 2 and dc.dac(c3) == 2
    assert c3.to_digraph6() == "&BP_"
    assert dc.canonical_form(c3) == dc.canonical_form(c3.converse())
    assert dc.b_coloring(c3, 3) is None

    digon = dc.Digraph.from_digraph6("&AW")
    assert not dc.audit(digon, [0, 0])["acyclic"]

    d, coloring, method = dc.construct("transitive:n=6")
    assert coloring == [0, 1, 2, 2, 1, 0] and method == "transitive_pairs"

    c12 = dc.Digraph.family("cycle:n=12")
    col = dc.spread_basis_coloring(c12, [0, 6], [3, 9])
    assert max(col) + 1 == 2 and dc.audit(c12, col)["is_b_coloring"]

    report = dc.bounds(dc.Digraph.family("circulant:n=7,J=1+2+3"))
    assert report["t"] == 4

    assert len(dc.enumerate_regular(3, 2)) == 1
    scan = dc.conjecture_scan(4)
    assert all(c["within_expected"] for c in scan)

    sweep = dc.property_sweep(3, ["eq1_chain", "thm2_ng"])
    assert all(not r["counterexamples"] for r in sweep)

    try:
        dc.dib(dc.Digraph(0))
    except dc.DibError as e:
        assert "empty_digraph" in str(e)
    else:
        raise AssertionError("expected DibError on the empty digraph")

    try:
        dc.property_sweep(3, ["nope"])
    except ValueError:
        pass
    else:
        raise AssertionError("unknown property accepted")

    print("dibchrom smoke test: ok")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Smoke tests for the python bindings."""

import sys

import ms0


def main():
    failures = []

    def check(cond, label):
        if not cond:
            failures.append(label)

    u24 = ms0.uniform(2, 4)
    check(u24.rank() == 2, "uniform rank")
    check(len(u24.circuits()) == 4, "uniform circuits")

    fano = ms0.pg2(2)
    check(len(fano.elements) == 7 and fano.rank() == 3, "fano shape")
    check(not fano.is_independent(["0:0:1", "0:1:0", "0:1:1"]),
          "fano line is dependent")

    f = ms0.parse("exists X1. Ind(X1) & Sing(X1)")
    check(f.is_sentence(), "sentence")
    check(ms0.evaluate(u24, f), "evaluate")
    i1, i2, i3 = ms0.axiom_sentences()
    check(all(ms0.evaluate(fano, s) for s in (i1, i2, i3)),
          "axioms hold on pg2(2)")

    g = ms0.gamma(3, 17, 3)
    d = ms0.delta(3, 17, 3)
    check(len(g.edges) == 13 and len(d.edges) == 20, "construction sizes")
    h = ms0.glue(g, d)
    check(len(h.edges) == 28 and len(h.vertices) == 8, "glued shape")
    check(g.is_balanced("u1", ["x1", "x2", "x3", "x"]), "balanced cycle")

    amal = ms0.amalgam(g.frame_matroid(), d.frame_matroid())
    check(amal.rank() == 8, "amalgam rank")
    check(not amal.is_independent(["a", "b", "x"]), "line dependence")

    sat, witness = ms0.alcove_solve(3, 4, 0)
    check(not sat, "(3,4) unsatisfiable over the integers")
    sat, witness = ms0.alcove_solve(3, 3, 16)
    check(sat and witness["alpha_1"] == 1, "(3,3) satisfiable at order 16")

    b = ms0.bounds(1)
    check(b["g1"][0] == "12" and b["f1"] == "4096" and b["g2"][0] == "102",
          "counting bounds")

    blocks, _ = ms0.partition([u24, u24.relabel_with_suffix("_b")], 1)
    check(blocks == 1, "identical matroids share a block")

    check(ms0.compatible_sentence(u24, ms0.uniform(1, 2),
                                  "exists X1. Ind(X1) & Sing(X1)", 1),
          "compatibility")

    m = ms0.matroid_from_json(u24.to_json())
    check(m.rank() == 2, "json round trip")

    try:
        ms0.pg2(4)
        failures.append("pg2(4) should raise")
    except ms0.InputError:
        pass

    if failures:
        print("FAILURES:", failures)
        return 1
    print("python smoke tests passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())

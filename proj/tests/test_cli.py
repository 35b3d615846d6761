#!/usr/bin/env python3
"""End-to-end checks of the ms0 command line tool."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

MS0 = sys.argv[1]
FAILURES = []


def run(*args, expect=0):
    proc = subprocess.run([MS0, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        FAILURES.append(
            f"{args}: exit {proc.returncode} (wanted {expect})\n"
            f"stderr: {proc.stderr}")
    return proc


def check(cond, label):
    if not cond:
        FAILURES.append(label)


def main():
    tmp = Path(tempfile.mkdtemp(prefix="ms0cli"))

    # gen: uniform / pg2 / gamma / delta / glue
    run("gen", "uniform", "--r", "2", "--n", "4", "--out",
        str(tmp / "u24.json"))
    run("gen", "pg2", "--q", "2", "--out", str(tmp / "fano.json"))
    fano = json.loads((tmp / "fano.json").read_text())
    check(len(fano["elements"]) == 7, "pg2(2) has 7 elements")
    check(fano["def"]["kind"] == "matrix", "pg2 is matrix-backed")

    run("gen", "gamma", "--s", "3", "--p", "17", "--alpha", "3", "--out",
        str(tmp / "gamma.json"))
    gamma = json.loads((tmp / "gamma.json").read_text())
    check(len(gamma["edges"]) == 13, "gamma has 13 edges")
    run("gen", "delta", "--t", "3", "--p", "17", "--alpha", "3", "--out",
        str(tmp / "delta.json"))
    delta = json.loads((tmp / "delta.json").read_text())
    check(len(delta["edges"]) == 20, "delta has 20 edges")
    run("gen", "glue", "--s", "3", "--t", "3", "--p", "17", "--alpha", "3",
        "--out", str(tmp / "glued.json"))
    glued = json.loads((tmp / "glued.json").read_text())
    check(len(glued["edges"]) == 28, "glued graph has 28 edges")
    shared = {e["id"] for e in gamma["edges"]} & {e["id"]
                                                  for e in delta["edges"]}
    check(shared == {"a", "b", "x", "y", "z"}, "shared boundary")

    # the order precondition is reported as an input error (exit 2)
    bad = run("gen", "delta", "--t", "3", "--p", "17", "--alpha", "16",
              "--out", str(tmp / "nope.json"), expect=2)
    check("2t(t-1)" in bad.stderr, "delta error cites the order bound")

    # check: valid formula and a formation violation
    (tmp / "good.fml").write_text("exists X1. Ind(X1) & Sing(X1)\n")
    report = json.loads(run("check", str(tmp / "good.fml")).stdout)
    check(report["verdicts"]["k"] == 1, "one variable")
    (tmp / "bad.fml").write_text("exists X1. Ind(X2)\n")
    run("check", str(tmp / "bad.fml"), expect=2)
    (tmp / "max.fml").write_text("exists X1. Max(X1)\n")
    report = json.loads(run("check", str(tmp / "max.fml")).stdout)
    check(report["verdicts"]["k"] == 4, "Max adds three expansion variables")

    # eval: axioms on the fano plane; budget refusal
    (tmp / "i1.fml").write_text("exists X1. Ind(X1)\n")
    report = json.loads(
        run("eval", str(tmp / "fano.json"), str(tmp / "i1.fml")).stdout)
    check(report["verdicts"]["value"] is True, "I1 holds on pg2(2)")
    refused = run("--budget", "4", "eval", str(tmp / "fano.json"),
                  str(tmp / "i1.fml"), expect=3)
    check("budget" in refused.stderr, "budget refusal is explicit")

    # a corrupted family is evaluated, not rejected: the axioms fail on it
    corrupt = {"elements": ["e1", "e2"],
               "def": {"kind": "independent_sets",
                       "sets": [[], ["e1", "e2"]]}}
    (tmp / "corrupt.json").write_text(json.dumps(corrupt))
    (tmp / "i2.fml").write_text(
        "forall X1. forall X2. Ind(X1) & X2 <= X1 -> Ind(X2)\n")
    report = json.loads(
        run("eval", str(tmp / "corrupt.json"), str(tmp / "i2.fml")).stdout)
    check(report["verdicts"]["value"] is False,
          "downward closure fails on the corrupted family")

    # verify: a named check passes (exit 0); alcove over a small range
    run("verify", "bounds")
    run("verify", "alcove", "--s", "3", "--t", "4", "--orders", "1..40")

    # partition: relabelled copies of one matroid fall in one block
    u24b = json.loads((tmp / "u24.json").read_text())
    u24b["elements"] = [e + "_b" for e in u24b["elements"]]
    u24b["def"]["sets"] = [[e + "_b" for e in s]
                           for s in u24b["def"]["sets"]]
    (tmp / "u24b.json").write_text(json.dumps(u24b))
    report = json.loads(
        run("partition", str(tmp / "u24.json"), str(tmp / "u24b.json"),
            "--k", "1").stdout)
    check(report["verdicts"]["blocks"] == 1, "identical matroids: one block")
    check(report["verdicts"]["bound"] == "4096", "f1(1) = 4096")

    # tree: deterministic dump
    a = run("tree", str(tmp / "u24.json"), "--k", "1").stdout
    b = run("tree", str(tmp / "u24.json"), "--k", "1").stdout
    check(json.loads(a)["verdicts"]["tree"] ==
          json.loads(b)["verdicts"]["tree"], "tree dump is deterministic")

    # represent: D(G, sigma) as a matrix-backed matroid
    report = json.loads(run("represent", str(tmp / "gamma.json")).stdout)
    matroid = report["verdicts"]["matroid"]
    check(matroid["def"]["kind"] == "matrix", "represent emits a matrix")
    check(matroid["def"]["p"] == 17, "over the right field")
    check(len(matroid["elements"]) == 13, "one column per edge")

    # amalgam generation from two matroid files
    line1 = {"elements": ["p", "q", "c"],
             "def": {"kind": "matrix", "p": 7,
                     "rows": [[1, 0, 1], [0, 1, 1]]}}
    line2 = {"elements": ["p", "q", "d"],
             "def": {"kind": "matrix", "p": 7,
                     "rows": [[1, 0, 1], [0, 1, 2]]}}
    (tmp / "m1.json").write_text(json.dumps(line1))
    (tmp / "m2.json").write_text(json.dumps(line2))
    run("gen", "amalgam", "--m1", str(tmp / "m1.json"), "--m2",
        str(tmp / "m2.json"), "--out", str(tmp / "amal.json"))
    amal = json.loads((tmp / "amal.json").read_text())
    check(amal["elements"] == ["p", "q", "c", "d"], "amalgam ground order")

    # unknown verify name
    run("verify", "nonsense", expect=2)

    if FAILURES:
        print("FAILURES:")
        for f in FAILURES:
            print(" -", f)
        return 1
    print("cli checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""End-to-end checks for the vknot command line tool.

Each case runs the binary, checks the exit code, validates every JSON line
against its schema and compares stdout with a golden file. Run with --update
to rewrite the golden files after an intentional output change.
"""

import argparse
import json
import pathlib
import subprocess
import sys

import jsonschema

TREFOIL = "O1+ U2+ O3+ U1+ O2+ U3+"
LONG_TREFOIL = "long: " + TREFOIL

# name, arguments, schema, expected exit code
CASES = [
    ("kh_unknot", ["kh", "--code", ""], "kh", 0),
    ("kh_trefoil", ["kh", "--code", TREFOIL], "kh", 0),
    ("kh_over_cap", ["--cap-chords", "2", "kh", "--code", TREFOIL], "kh", 2),
    ("eval_corpus", ["eval", "--input", "{data}/corpus.txt"], "eval", 0),
    ("eval_v21_long", ["eval", "--code", LONG_TREFOIL, "--v21"], "eval", 0),
    ("eval_arrow_poly", ["eval", "--input", "{data}/corpus.txt", "--arrow-poly", "{data}/v21.json"], "eval", 0),
    ("gpv_sum", ["gpv-sum", "--invariant", "v21", "--chords", "1,2,3", "--code", LONG_TREFOIL], "sum", 0),
    ("f_sum", ["f-sum", "--invariant", "v21", "--slots", "0,6",
               "--code", "long: O1+ O2+ U1+ U2+ O3- O4+ U3- U4+"], "sum", 0),
    ("ntrivial_gpv", ["ntrivial", "--input", "{data}/brunnian_long.txt",
                      "--families", "{data}/families_gpv.json"], "ntrivial", 0),
    ("ntrivial_f", ["ntrivial", "--input", "{data}/brunnian_long_f.txt",
                    "--families", "{data}/families_f.json"], "ntrivial", 0),
    ("trivialize_vt", ["trivialize", "--code", "O1+ O2+ U1+ U2+"], "trivialize", 0),
    ("braid_word", ["braid", "--word", "s1 s1"], "braid", 0),
    ("braid_scan", ["braid", "--gens", "{data}/generators_sample.json", "--scan", "1:4"], "braid", 2),
    ("states_trefoil", ["states", "--code", TREFOIL], "states", 0),
]


def run(binary, args, data):
    argv = [binary, "--format", "json"] + [a.replace("{data}", str(data)) for a in args]
    return subprocess.run(argv, capture_output=True, text=True, timeout=600)


def lines(stdout):
    return [json.loads(line) for line in stdout.splitlines() if line.strip()]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--binary", required=True)
    ap.add_argument("--root", required=True, type=pathlib.Path)
    ap.add_argument("--update", action="store_true")
    opts = ap.parse_args()

    data = opts.root / "data"
    golden = opts.root / "tests" / "golden"
    schemas = {p.stem: json.loads(p.read_text()) for p in (opts.root / "schemas").glob("*.json")}
    failures = []

    def check(ok, what):
        if not ok:
            failures.append(what)

    results = {}
    for name, args, schema, code in CASES:
        res = run(opts.binary, args, data)
        results[name] = res
        check(res.returncode == code, f"{name}: exit {res.returncode}, expected {code}\n{res.stderr}")
        try:
            rows = lines(res.stdout)
        except json.JSONDecodeError as e:
            check(False, f"{name}: output is not JSON lines ({e})")
            continue
        check(bool(rows), f"{name}: no output")
        for row in rows:
            try:
                jsonschema.validate(row, schemas[schema])
            except jsonschema.ValidationError as e:
                check(False, f"{name}: schema {schema}: {e.message}")
        path = golden / f"{name}.jsonl"
        if opts.update:
            golden.mkdir(parents=True, exist_ok=True)
            path.write_text(res.stdout)
        else:
            check(path.exists() and path.read_text() == res.stdout, f"{name}: differs from {path.name}")

    # Worked examples with known answers.
    unknot = lines(results["kh_unknot"].stdout)[0]
    check(unknot["euler_check"] == "ok", "unknot euler check")
    check(sorted((c["i"], c["j"], c["dim"]) for c in unknot["table"]) == [(0, -1, 1), (0, 1, 1)], "unknot table")
    check(lines(results["eval_v21_long"].stdout)[0]["v21"] == 1, "v21 of the long trefoil")
    check(lines(results["gpv_sum"].stdout)[0]["value"] == 0, "gpv sum over chords 1,2,3")
    check(lines(results["trivialize_vt"].stdout)[0]["found"], "virtual trefoil trivializes")
    for name in ("ntrivial_gpv", "ntrivial_f"):
        check(lines(results[name].stdout)[0]["aggregate"] == "certified", f"{name} aggregate")

    # Input errors exit 1.
    for args in (["bogus"], ["kh", "--code", "O1+ U9+"], ["eval", "--input", "/nonexistent"]):
        res = subprocess.run([opts.binary] + args, capture_output=True, text=True)
        check(res.returncode == 1, f"{args}: exit {res.returncode}, expected 1")

    for f in failures:
        print("FAIL", f)
    print(f"{len(CASES)} cases, {len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

"""End-to-end checks of the nary-ell binary: exit codes, JSON schema, text output."""

import json
import os
import subprocess
import sys

import jsonschema

BIN, SCHEMA = sys.argv[1], sys.argv[2]
validator = jsonschema.Draft202012Validator(json.load(open(SCHEMA)))
failures = []


def run(args, env=None):
    full_env = dict(os.environ, **(env or {}))
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=full_env)


def expect(cond, what):
    if not cond:
        failures.append(what)


def json_of(args, env=None):
    p = run([*args, "--format", "json"], env)
    expect(p.returncode == 0, f"{args}: exit {p.returncode}: {p.stderr}")
    if p.returncode != 0:
        return None
    doc = json.loads(p.stdout)
    errors = list(validator.iter_errors(doc))
    expect(not errors, f"{args}: schema: {errors[:1]}")
    return doc


cases = [
    ["primes", "--n", "2", "--bound", "13"],
    ["primes", "--n", "4", "--bound", "11"],
    ["primes", "--n", "2", "--bound", "1"],
    ["factor", "--n", "4", "--a", "-7", "--all"],
    ["factor", "--n", "2", "--a", "-9"],
    ["factor", "--n", "3", "--a", "-98765432109876543210"],
    ["classgroup", "--n", "4"],
    ["classgroup", "--n", "2"],
    ["classgroup", "--n", "5"],
    ["dirichlet", "--n", "2", "--bound", "100"],
    ["dirichlet", "--n", "4", "--bound", "100"],
    ["dirichlet", "--n", "2", "--bound", "2"],
    ["euclid", "--n", "2", "--seeds=1"],
    ["euclid", "--n", "2", "--seeds=1,2"],
    ["euclid", "--n", "2"],
    ["axioms", "--n", "3", "--mod", "11"],
    ["axioms", "--n", "2", "--mod", "9"],
    ["axioms", "--n", "2", "--mod", "2"],
    ["axioms", "--n", "4", "--mod", "31", "--seed", "7"],
    ["table", "--n", "4"],
    ["table", "--n", "2"],
    ["table", "--n", "5"],
]
docs = {}
for args in cases:
    docs[" ".join(args)] = json_of(args)
    text = run(args)
    expect(text.returncode == 0 and text.stdout.strip(), f"{args}: text output")

d = docs["primes --n 2 --bound 13"]
expect([r["prime"] for r in d["data"]["rows"]] == ["2", "5", "7", "11", "13"], "primes n=2")
d = docs["primes --n 2 --bound 1"]
expect(d["data"]["rows"] == [], "primes bound 1")
d = docs["factor --n 4 --a -7 --all"]
expect(len(d["data"]["factorizations"]) == 2, "factor --all n=4")
d = docs["classgroup --n 4"]
expect(d["data"]["order"] == 2 and d["data"]["classes"] == ["1", "2"], "classgroup n=4")
d = docs["dirichlet --n 4 --bound 100"]
expect(d["data"]["sieve_count"] == 10 and d["data"]["equal"], "dirichlet n=4")
d = docs["euclid --n 2 --seeds=1"]
expect(d["data"]["case"] == "m_zero" and d["data"]["new_irreducible"] == "2", "euclid [1]")
d = docs["euclid --n 2"]
expect(d["data"]["case"] == "empty_list" and d["data"]["new_irreducible"] == "1", "euclid []")
for key in ["axioms --n 3 --mod 11", "axioms --n 2 --mod 9", "axioms --n 2 --mod 2"]:
    expect(docs[key]["data"]["all_pass"] and docs[key]["seed"] is None, key)
d = docs["axioms --n 4 --mod 31 --seed 7"]
expect(d["seed"] == 7 and not d["data"]["exhaustive"], "sampled axioms record the seed")

# Thread count does not change output.
a = run(["dirichlet", "--n", "6", "--bound", "300000", "--format", "json"], {"NARY_ELL_THREADS": "1"})
b = run(["dirichlet", "--n", "6", "--bound", "300000", "--format", "json"], {"NARY_ELL_THREADS": "3"})
expect(a.returncode == 0 and a.stdout == b.stdout, "thread count changes dirichlet output")

usage = [
    [],
    ["primes"],
    ["primes", "--n", "1", "--bound", "10"],
    ["primes", "--n", "2"],
    ["factor", "--n", "2", "--a", "abc"],
    ["axioms", "--n", "2", "--mod", "1"],
    ["table", "--n", "2", "--format", "xml"],
    ["nosuch", "--n", "2"],
]
for args in usage:
    p = run(args)
    expect(p.returncode == 2, f"{args}: expected usage exit 2, got {p.returncode}")

domain = [
    ["factor", "--n", "2", "--a", "0"],
    ["euclid", "--n", "2", "--seeds=1,0"],
]
for args in domain:
    p = run(args)
    expect(p.returncode == 3, f"{args}: expected domain exit 3, got {p.returncode}")
    expect(p.stderr.strip() != "", f"{args}: no error message")

for f in failures:
    print("FAIL:", f)
print(f"{len(cases) + len(usage) + len(domain)} invocations, {len(failures)} failures")
sys.exit(1 if failures else 0)

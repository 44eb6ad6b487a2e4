"""CLI contract checks: schema validity of specs and reports, exit codes, determinism."""

import json
import os
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

ROOT = pathlib.Path(sys.argv[2])
CLI = sys.argv[1]
SCHEMAS = ROOT / "schemas"
SPECS = ROOT / "specs"

failures = []


def load(path):
    return json.loads(pathlib.Path(path).read_text())


spec_schema = load(SCHEMAS / "spec.schema.json")
report_schema = load(SCHEMAS / "report.schema.json")
morphism_schema = load(SCHEMAS / "morphism.schema.json")
registry = Registry().with_resources(
    [
        (spec_schema["$id"], Resource.from_contents(spec_schema)),
        ("https://simphil.invalid/schemas/morphism/spec.schema.json", Resource.from_contents(spec_schema)),
    ]
)
spec_validator = jsonschema.Draft202012Validator(spec_schema, registry=registry)
report_validator = jsonschema.Draft202012Validator(report_schema, registry=registry)
morphism_validator = jsonschema.Draft202012Validator(morphism_schema, registry=registry)


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def run(args, stdin=None, env=None):
    e = dict(os.environ)
    e.pop("SIMPHIL_SEED", None)
    if env:
        e.update(env)
    return subprocess.run([CLI] + args, input=stdin, capture_output=True, text=True, env=e)


def report(args, expect=0, **kw):
    p = run(args, **kw)
    check(p.returncode == expect, f"exit {expect}: {' '.join(args)} (got {p.returncode}; {p.stderr.strip()})")
    if p.returncode in (0, 3) and p.stdout.strip():
        doc = json.loads(p.stdout)
        errors = [e.message for e in report_validator.iter_errors(doc)]
        check(not errors, f"report schema: {' '.join(args)} {errors[:2]}")
        return doc
    return None


for spec in sorted(SPECS.glob("*.json")):
    errors = [e.message for e in spec_validator.iter_errors(load(spec))]
    check(not errors, f"spec schema: {spec.name} {errors[:2]}")
for m in sorted((SPECS / "morphisms").glob("*.json")):
    errors = [e.message for e in morphism_validator.iter_errors(load(m))]
    check(not errors, f"morphism schema: {m.name} {errors[:2]}")

torus = str(SPECS / "torus.json")
z2 = str(SPECS / "nerve_z2.json")
z3 = str(SPECS / "nerve_z3.json")

for cmd in (["validate"], ["census"], ["defects"], ["perfectness"], ["encode"], ["qsim", "grover"], ["qsim", "count"], ["qsim", "qpe"]):
    report(cmd + [z2])

doc = report(["betti", torus, "--method", "exact", "--method", "hodge", "--method", "normalized", "--method", "qsim", "--seed", "7"])
if doc:
    table = [d["values"][0]["value"] for d in doc["results"]["degrees"][:3]]
    check(table == [1, 2, 1], f"torus betti table {table}")
    check(all(d["agree"] for d in doc["results"]["degrees"][:3]), "torus methods agree below N")

doc = report(["perfectness", z3])
check(doc is not None and doc["results"]["class"] == "perfect", "Z3 nerve is perfect")
doc = report(["encode", str(SPECS / "simplex3.json"), "--scheme", "complex"])
check(doc is not None and doc["results"]["verification"]["ok"], "complex encoding verified")
doc = report(["circuit", str(SPECS / "nerve_z4.json"), "--from-morphism", str(SPECS / "morphisms" / "z4_to_z2.json")])
check(doc is not None and doc["results"]["validation"]["ok"], "circuit validated")
report(["census", torus, "--timing"])

a = run(["qsim", "qpe", torus, "--seed", "42"]).stdout
b = run(["qsim", "qpe", torus, "--seed", "42"]).stdout
c = run(["qsim", "qpe", torus], env={"SIMPHIL_SEED": "42"}).stdout
d = run(["qsim", "qpe", torus, "--seed", "43"]).stdout
check(a == b and len(a) > 0, "qpe reports byte-identical for a fixed seed")
check(a == c, "SIMPHIL_SEED supplies the default seed")
check(a != d, "a different seed changes the shot histogram")
check(run(["census", torus, "--timing"]).stdout != "" and "timing" not in run(["census", torus]).stdout, "timing only on request")

# input errors
report(["census", "-"], expect=2, stdin='{"kind":"nerve_group","group":{"table":[[0,1],[1,1]]},"truncation":2}')
p = run(["census", "-"], stdin='{"kind":"nerve_group","group":{"family":"cyclic","order":2},"truncation":"x"}')
check(p.returncode == 2 and "/truncation" in p.stderr, "schema error names the JSON pointer")
p = run(["census", "-"], stdin='{"kind":"nerve_category","category":{"objects":["a"],"morphisms":[{"name":"1","source":"a","target":"a"},'
        '{"name":"f","source":"a","target":"a"}],"identities":["1"],"compose":[["1","1","1"],["1","f","f"],["f","1","1"],["f","f","f"]]},"truncation":2}')
check(p.returncode == 2 and "/category/compose" in p.stderr, f"broken compose table names the law: {p.stderr.strip()}")
bad = '{"kind":"explicit","truncation":2,"cells":[[{"name":"v"},{"name":"w"}],[{"name":"a","faces":["v","w"]}],[{"name":"t","faces":["a","a","a"]}]]}'
p = run(["census", "-"], stdin=bad)
check(p.returncode == 2 and "face-face" in p.stderr, "invalid set refused with the violated relation")
report(["validate", "-"], expect=2, stdin=bad)
report(["encode", str(SPECS / "simplex3.json"), "--scheme", "nerve"], expect=2)
report(["qsim", "qpe", torus, "--clock-bits", "1"], expect=2)
report(["perfectness", str(SPECS / "point.json"), "--scan-depth", "5"], expect=2)
report(["census", str(SPECS / "does_not_exist.json")], expect=2)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)

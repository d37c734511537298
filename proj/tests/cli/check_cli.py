"""CLI contract: schemas, exit codes, determinism and the documented examples."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

CLI = sys.argv[1]
ROOT = pathlib.Path(sys.argv[2])
SCHEMAS = ROOT / "schemas"
DATA = ROOT / "tests" / "data"

registry = Registry()
schemas = {}
for path in SCHEMAS.glob("*.schema.json"):
    doc = json.loads(path.read_text())
    schemas[path.name[: -len(".schema.json")]] = doc
    registry = registry.with_resource(path.name, Resource.from_contents(doc))

failures = []


def run(*args):
    p = subprocess.run([CLI, *args], capture_output=True, text=True, timeout=300)
    return p.returncode, p.stdout


def check(cond, what):
    if not cond:
        failures.append(what)


def validate(report, schema):
    try:
        jsonschema.Draft202012Validator(schemas[schema], registry=registry).validate(report)
    except jsonschema.ValidationError as e:
        failures.append(f"{schema}: {e.message}")


def report(*args, code=0):
    rc, out = run(*args)
    check(rc == code, f"{args}: exit {rc}, wanted {code}")
    rc2, out2 = run(*args)
    check(out == out2 and rc == rc2, f"{args}: output differs between runs")
    j = json.loads(out)
    validate(j, "error" if "error" in j else j["command"])
    return j


# documented examples
rc, dot = run("spine", "--family", "Q(1,1,2)", "--format", "dot")
check(rc == 0 and dot.startswith("graph "), "dot output is an undirected graph")
check(sum(1 for line in dot.splitlines() if line.strip().startswith("v") and "[label=\"(" in line) == 4, "Q spine has 4 vertices")
check('label="r_1"' in dot, "edges are labelled r_x")
j = report("classify", "--family", "A(1|0)")
check((j["type"], j["parity_type"]) == ("Fin", "I"), "A(1|0) classifies as Fin I")
j = report("imaginary", "--family", "Q(2,2,2)", "--root", "δ")
check(j["imaginary"] is True, "δ is imaginary for Q(2,2,2)")

# every command validates
for args in [
    ("spine", "--family", "C(3)"),
    ("skeleton", "--family", "B(1|1)"),
    ("spine", "--family", "C(3)^(1)", "--max-vertices", "20"),
    ("roots", "--family", "C(3)^(1)", "--max-height", "6"),
    ("classify", "--family", "Q+(1,2,3)"),
    ("bases", "--family", "A(1|0)"),
    ("bases", "--family", "C(3)^(1)", "--subset", "1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,1", "--max-height", "12"),
    ("spd", "--family", "A(1|1)"),
    ("spd", "--family", "C(3)^(1)", "--max-vertices", "40"),
    ("skd", "--family", "C(3)", "--max-vertices", "100"),
    ("oracle-check", "--family", "D(2|1)"),
    ("export", "--list"),
    ("export", "--family", "Q+(1,1,2)"),
]:
    report(*args)

# truncation is not an error
j = report("spine", "--family", "C(3)^(1)", "--max-vertices", "10")
check(j["graph"]["status"] == "truncated", "truncated exploration reports its status")

# domain errors exit 1 with the error name, invalid invocations exit 2
j = report("roots", "--family", "Z(1)", code=1)
check(j["error"] == "InvalidParameters", "unknown family is InvalidParameters")
j = report("bases", "--family", "C(3)^(1)", "--max-vertices", "30", code=1)
check(j["error"] == "InfiniteSystem", "bases on an infinite system is InfiniteSystem")
check(run("spine")[0] == 2, "missing input exits 2")
check(run("frobnicate")[0] == 2, "unknown verb exits 2")
check(run("spine", "--family", "C(3)", "--max-vertices", "0")[0] == 2, "nonpositive bound exits 2")

# datum JSON round-trips byte for byte, including algebraic fields
for name in ["Q+(1,1,2)", "S(1|2;b)", "G3_1", "PiSInfinite(t)"]:
    exported = report("export", "--family", name)
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
        json.dump(exported["datum"], f)
    again = report("export", "--input", f.name)
    check(again["datum"] == exported["datum"], f"{name}: datum round-trip")
    validate(exported["datum"], "datum")

# user-supplied q_n data
for n, order in [(3, 1), (4, 2), (5, 1)]:
    j = report("spd", "--input", str(DATA / f"q{n}_2.json"))
    check(j["order"] == order, f"q_{n}: Sp^D order {j['order']}, wanted {order}")

for f in failures:
    print("FAIL", f)
print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)

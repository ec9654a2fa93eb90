"""Runs the zpm binary and checks exit codes, the JSON schema, and that the
text, JSON and CSV renderings carry the same numbers."""

import csv
import io
import json
import subprocess
import sys

import jsonschema

ZPM, SCHEMA = sys.argv[1], sys.argv[2]
failures = []


def run(*args):
    return subprocess.run([ZPM, *args], capture_output=True, text=True)


def expect(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL:", what)


with open(SCHEMA) as f:
    schema = json.load(f)

# (arguments, numbers worth comparing across formats)
commands = [
    ["constants", "--method", "trig"],
    ["freq-check", "--k", "2", "--kp", "1"],
    ["dipole", "--alpha", "1", "--alpha0", "1", "--gamma", "1"],
    ["dipole", "--alpha", "1e-29", "--alpha0", "1e-29", "--hbar-omega0-eV", "10"],
    ["predict", "feigel"],
    ["predict", "me-sphere", "--material", "fegao3.json", "--a-um", "1", "--constants", "trig"],
    ["predict", "moving-sphere", "--material", "fegao3.json", "--constants", "trig"],
    ["predict", "magneto-chiral", "--material", "chiral_example.json", "--B", "0", "0", "1e4"],
    ["empty-vacuum"],
]

for args in commands:
    js = run(*args, "--format", "json")
    expect(js.returncode == 0, f"{args}: exit {js.returncode}: {js.stderr}")
    if js.returncode != 0:
        continue
    report = json.loads(js.stdout)
    try:
        jsonschema.validate(report, schema)
    except jsonschema.ValidationError as e:
        expect(False, f"{args}: schema: {e.message}")
    expect(json.loads(json.dumps(report)) == report, f"{args}: JSON round trip")

    rows = {r["name"]: r["value"] for r in report["results"]}
    text = run(*args, "--format", "text").stdout
    for line in text.splitlines():
        line = line.strip()
        if " = " in line and not line.startswith("warning"):
            name, rest = line.split(" = ", 1)
            value = float(rest.split()[0])
            expect(name in rows and rows[name] == value, f"{args}: text {name} differs")
    table = csv.DictReader(io.StringIO(run(*args, "--format", "csv").stdout))
    expect(table.fieldnames == ["name", "value", "error", "method"], f"{args}: csv header")
    for row in table:
        expect(float(row["value"]) == rows[row["name"]], f"{args}: csv {row['name']} differs")

# spec examples
report = json.loads(run("dipole", "--alpha", "1", "--alpha0", "1", "--gamma", "1", "--format", "json").stdout)
rows = {r["name"]: r["value"] for r in report["results"]}
hbar, c0 = 1.054571817e-34, 299792458.0
expect(abs(rows["mass_shift_kg"] + hbar * rows["omega0_rad_s"] / c0**2) <= 1e-12 * abs(rows["mass_shift_kg"]),
       "dipole mass shift equals -hbar omega0 / c0^2")
expect(report["warnings"], "broad dipole line carries a warning")

text = run("predict", "me-sphere", "--material", "fegao3.json", "--a-um", "1", "--constants", "trig").stdout
speed = [float(l.split(" = ")[1].split()[0]) for l in text.splitlines() if l.strip().startswith("speed_m_s")]
expect(len(speed) == 1 and 1e-21 < speed[0] < 1e-19, "me-sphere text speed about 1e-20 m/s")

report = json.loads(run("predict", "magneto-chiral", "--material", "chiral_example.json", "--format", "json").stdout)
expect(report["inputs"]["macroscopic_model_probably_wrong"] is True, "magneto-chiral caveat flag")

# exit codes
expect(run().returncode == 2, "no subcommand exits 2")
expect(run("bogus").returncode == 2, "unknown subcommand exits 2")
expect(run("constants", "--frobnicate").returncode == 2, "unknown flag exits 2")
expect(run("freq-check", "--k", "-1").returncode == 2, "nonpositive k exits 2")
expect(run("dipole", "--alpha", "1", "--alpha0", "2", "--gamma", "1").returncode == 2, "alpha0 > alpha exits 2")
expect(run("predict", "me-sphere", "--material", "/no/such/file.json").returncode == 2, "missing material exits 2")
expect(run("eta", "--eps-schedule", "0.05,0.1").returncode == 2, "ascending schedule exits 2")
r = run("eta", "--eps-schedule", "0.2,0.199", "--constants", "trig")
expect(r.returncode == 3, f"non-extrapolatable schedule exits 3 (got {r.returncode})")
expect("usage" in run("bogus").stderr.lower() or "help" in run("bogus").stderr.lower(), "usage on stderr")

print("cli checks:", "FAILED" if failures else "passed")
sys.exit(1 if failures else 0)

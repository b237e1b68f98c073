#!/usr/bin/env python3
"""End-to-end checks of the command-line interface and its exit-code contract."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

BIN = sys.argv[1]

failures = []


def run(*args, stdin=None):
    return subprocess.run([BIN, *args], capture_output=True, text=True, input=stdin)


def check(name, cond):
    status = "ok" if cond else "FAIL"
    print(f"{status:4} {name}")
    if not cond:
        failures.append(name)


def hardy_form_json():
    terms = [
        {"settings": [1, 0], "outcomes": [0, 0], "coef": 1},
        {"settings": [0, 1], "outcomes": [0, 0], "coef": 1},
        {"settings": [1, 1], "outcomes": [1, 1], "coef": 1},
        {"settings": [0, 0], "outcomes": [0, 0], "coef": -1},
    ]
    return {"scenario": {"parties": 2, "settings": 2}, "constant": 0, "terms": terms}


def uniform_marginals_json():
    tables = []
    for a in range(2):
        for b in range(2):
            probs = {f"{A}{B}": {"num": 1, "den": 4} for A in range(2) for B in range(2)}
            tables.append({"settings": [a, b], "probs": probs})
    return {"scenario": {"parties": 2, "settings": 2}, "tables": tables}


def main():
    tmp = Path(tempfile.mkdtemp(prefix="bellgrid_cli_"))

    form_file = tmp / "hardy.json"
    form_file.write_text(json.dumps(hardy_form_json()))

    r = run("certify", str(form_file))
    check("certify proven form exits 0", r.returncode == 0)
    check("certify prints a proven verdict", '"verdict": "proven"' in r.stdout)

    bad = hardy_form_json()
    bad["terms"] = [
        {"settings": [0, 0], "outcomes": [0, 0], "coef": 1},
        {"settings": [1, 1], "outcomes": [0, 0], "coef": -1},
    ]
    bad_file = tmp / "bad.json"
    bad_file.write_text(json.dumps(bad))
    r = run("certify", str(bad_file))
    check("certify refuted form exits 1", r.returncode == 1)
    check("refutation carries a witness cell", "witness_cell" in r.stdout)

    trunc = tmp / "trunc.json"
    trunc.write_text(json.dumps(hardy_form_json())[:40])
    r = run("certify", str(trunc))
    check("certify truncated file exits 2", r.returncode == 2)
    check("truncated file yields a diagnostic", "error:" in r.stderr)

    r = run("catalog", "hardy64")
    lines = [l for l in r.stdout.splitlines() if l.strip()]
    check("catalog hardy64 emits 64 forms", r.returncode == 0 and len(lines) == 64)
    check("all hardy64 verdicts proven",
          all(json.loads(l)["verdict"] == "proven" for l in lines))

    r = run("catalog", "chsh")
    check("catalog chsh emits 8 branches",
          r.returncode == 0 and len(r.stdout.splitlines()) == 8)

    r = run("catalog", "nhardy:4")
    check("catalog nhardy:4 emits one proven form",
          r.returncode == 0 and json.loads(r.stdout)["verdict"] == "proven")

    r = run("catalog", "nonsense")
    check("unknown family exits 2", r.returncode == 2)

    deduce = {
        "scenario": {"parties": 2, "settings": 2},
        "zeros": [
            {"settings": [1, 0], "outcomes": [0, 0]},
            {"settings": [0, 1], "outcomes": [0, 0]},
            {"settings": [1, 1], "outcomes": [1, 1]},
        ],
        "target": {"settings": [0, 0], "outcomes": [0, 0]},
    }
    ded_file = tmp / "deduce.json"
    ded_file.write_text(json.dumps(deduce))
    r = run("deduce", str(ded_file))
    check("deduce cover exits 0", r.returncode == 0 and '"deducible": true' in r.stdout)

    deduce["zeros"] = deduce["zeros"][:1]
    ded_file.write_text(json.dumps(deduce))
    r = run("deduce", str(ded_file))
    check("deduce non-cover exits 1", r.returncode == 1)

    marg_file = tmp / "uniform_marginals.json"
    marg_file.write_text(json.dumps(uniform_marginals_json()))
    r = run("membership", str(marg_file))
    check("membership of uniform marginals exits 0",
          r.returncode == 0 and '"verdict": "feasible"' in r.stdout)

    r = run("render", "--form", str(form_file), "--ascii")
    check("render text shows the target legend", r.returncode == 0 and "[target]" in r.stdout)
    r2 = run("render", "--form", str(form_file), "--ascii")
    check("render output is byte-stable", r.stdout == r2.stdout)

    r = run("render", "--marginal",
            json.dumps({"scenario": {"parties": 2, "settings": 2},
                        "settings": [0, 0], "outcomes": [0, 0]}),
            "--format", "svg")
    check("render svg emits svg", r.returncode == 0 and r.stdout.startswith("<svg"))

    rt = 2 ** -0.5
    state_file = tmp / "singlet.json"
    state_file.write_text(json.dumps([[0, 0], [-rt, 0], [rt, 0], [0, 0]]))
    axes_file = tmp / "axes.json"
    axes_file.write_text(json.dumps(
        {"axes": [[{"theta": 0.7, "phi": 0.0}], [{"theta": 0.7, "phi": 0.0}]]}))
    r = run("quantum-eval", "--state", str(state_file), "--axes", str(axes_file),
            "--scenario", json.dumps({"parties": 2, "settings": 1}))
    check("quantum-eval emits marginals", r.returncode == 0 and "marginals" in r.stdout)
    probs = json.loads(r.stdout)["marginals"]["tables"][0]["probs"]
    check("same-axis singlet anticorrelates", abs(probs["00"]) < 1e-9 and abs(probs["01"] - 0.5) < 1e-9)

    chsh_axes = tmp / "chsh_axes.json"
    pi = 3.141592653589793
    chsh_axes.write_text(json.dumps({"axes": [
        [{"theta": 0.0, "phi": 0.0}, {"theta": pi / 2, "phi": 0.0}],
        [{"theta": pi / 4, "phi": 0.0}, {"theta": 3 * pi / 4, "phi": 0.0}],
    ]}))
    r = run("catalog", "chsh")
    branches = [json.loads(l) for l in r.stdout.splitlines()]
    chsh_file = tmp / "chsh.json"
    chsh_file.write_text(json.dumps(branches[0]))
    r = run("quantum-eval", "--state", str(state_file), "--axes", str(chsh_axes),
            "--form", str(chsh_file))
    check("quantum-eval evaluates a form", r.returncode in (0, 1) and '"value"' in r.stdout)

    r = run("scan", "--form", str(chsh_file), "--state", state_file.as_posix(),
            "--grid-steps", "4")
    check("scan reports a best value", r.returncode in (0, 1) and "best_value" in r.stdout)

    print()
    if failures:
        print("FAILED:", ", ".join(failures))
        return 1
    print("all cli checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Runs the command-line tool and checks exit codes, reports and the schema."""
import json
import subprocess
import sys

import jsonschema

tool, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as fh:
    validator = jsonschema.Draft202012Validator(json.load(fh))

failures = []


def run(*args):
    proc = subprocess.run([tool, *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def check(label, cond):
    print(("PASS " if cond else "FAIL ") + label)
    if not cond:
        failures.append(label)


def report(*args, code=0):
    rc, out, _ = run(*args, "--json")
    check(f"exit {code}: {' '.join(args)}", rc == code)
    doc = json.loads(out)
    errors = list(validator.iter_errors(doc))
    check(f"schema: {' '.join(args)}", not errors)
    for e in errors[:3]:
        print("   ", e.message)
    return doc


doc = report("analyze", "--field", "Q", "(x+1)^4/x^3")
cv = doc["critical_values"]
check("ell 3", cv["ell"] == 3)
check("one simple critical value 256/27",
      cv["simple_count"] == 1 and any(f["root"] == "256/27" and f["multiplicity"] == 1 for f in cv["factors"]))
check("verdict unknown without oracle", doc["verdict"]["kind"] == "Unknown" and doc["oracle"]["status"] == "unused")

doc = report("fq", "--p", "3", "x^2")
check("fq zero divisor", doc["class"] == "ZeroDivisor" and doc["witness"]["psi"] == "x^2+2*x")

doc = report("analyze", "--field", "Q", "x^4+x")
check("x^4+x simple critical values",
      doc["verdict"]["kind"] == "PrimeBySimpleCriticalValues" and doc["verdict"]["count"] == 3 and doc["verdict"]["d"] == 2)
check("x^4+x disc coefficients", doc["critical_values"]["coefficients"] == ["-27", "0", "0", "-256"])

doc = report("analyze", "x^9/(x^2+1)")
check("ord infinity certificate", doc["verdict"]["kind"] == "PrimeByOrdInfinity" and doc["verdict"]["p"] == 7)

doc = report("analyze", "--oracle-budget", "1000", "x^4+x^2")
check("oracle witness", doc["verdict"]["kind"] == "CompositeWitness" and doc["oracle"]["status"] == "witness")

doc = report("decompose", "--field", "F5", "x^4+x")
check("exhaustive absence", doc["oracle"]["status"] == "exhausted" and doc["outer"] is None)

doc = report("decompose", "--oracle-budget", "2", "--field", "F5", "x^4+x")
check("budget exhausted", doc["oracle"]["status"] == "budget_exhausted")

doc = report("decompose", "(x^4+1)^3*(x^4+x^2+2)/(x^2+1)^4")
check("degree 16 witness", doc["outer"] == "x^4+x^3" and doc["inner"] == "(x^4+1)/(x^2+1)")

doc = report("resultant", "(x+1)^4/x^3")
check("resultant coefficients", doc["critical_values"]["coefficients"] == ["0", "0", "0", "256", "-27"])

doc = report("analyze", "--field", "F5", "x^10+x^5")
check("degenerate derivative reported", doc["critical_values"]["source"] == "degenerate")

doc = report("analyze", "--timing", "x^4+x")
check("timing present on request", isinstance(doc["timing_ms"], (int, float)))

doc = report("analyze", "x^+1", code=2)
check("parse error position", doc["error"]["kind"] == "parse" and doc["error"]["position"] == 2)
doc = report("analyze", "1/(x-x)", code=3)
check("division by zero is a precondition error", doc["error"]["kind"] == "precondition")
doc = report("analyze", "x+1", code=3)
report("analyze", "--field", "F4", "x^2", code=3)
report("fq", "x^2", code=3)
report("fq", "--p", "3", "1/x", code=3)
report("analyze", "--oracle-budget", "0", "x^4", code=1)

rc, out, err = run("analyze", "x^+1")
check("text errors go to stderr", rc == 2 and out == "" and "position 2" in err)
rc, out, _ = run("analyze", "(x+1)^4/x^3")
check("text report", rc == 0 and "256/27" in out)
rc, _, _ = run("bogus")
check("unknown subcommand", rc == 1)

first = run("analyze", "--json", "--oracle-budget", "500", "(x^4+1)^3*(x^4+x^2+2)/(x^2+1)^4")
second = run("analyze", "--json", "--oracle-budget", "500", "(x^4+1)^3*(x^4+x^2+2)/(x^2+1)^4")
check("deterministic output", first == second)

sys.exit(1 if failures else 0)

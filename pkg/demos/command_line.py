"""
Driving the command line from Python
====================================
"""

import json
import subprocess
import sys

matrix = json.dumps({"entries": [[2, 2, 2, 1], [3, 3, 3, 2]]})


def run(*args):
    proc = subprocess.run([sys.executable, "-m", "detschemes", *args], input=matrix,
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


code, out, _ = run("analyze", "-", "--n", "5", "--json")
report = json.loads(out)
print(code, report["h_vector"], report["degree"], report["regularity"])

code, out, _ = run("ag", "-", "--n", "5", "--m", "15")
print(out)

# m below the bound: exit status 3
code, _, err = run("ag", "-", "--n", "5", "--m", "3")
print(code, err.strip())

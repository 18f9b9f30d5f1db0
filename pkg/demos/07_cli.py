"""Driving the command line front end with a problem file."""

import json
import subprocess
import sys
import tempfile

problem = {"preset": "GL2", "polytope": {"vertices": [["0", "0"], ["1", "0"], ["0", "1"], ["1", "1"]]}}
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
    json.dump(problem, fh)

for argv in (["check", "--format", "table"], ["ih", "--format", "table", "--check-scaling", "2"]):
    cmd = [sys.executable, "-m", "reductive_ih", *argv, fh.name]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    print("$ reductive-ih", " ".join(argv), "problem.json   (exit", proc.returncode, ")")
    print(proc.stdout)

out = subprocess.run([sys.executable, "-m", "reductive_ih", "oracle", "--cross-check", "-"],
                     input=json.dumps({"polytope": {"vertices": [["1", "0", "0"], ["-1", "0", "0"], ["0", "1", "0"],
                                                                 ["0", "-1", "0"], ["0", "0", "1"], ["0", "0", "-1"]]}}),
                     capture_output=True, text=True)
print("$ reductive-ih oracle --cross-check - < octahedron.json")
print(out.stdout)

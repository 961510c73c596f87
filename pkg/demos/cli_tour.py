#!/usr/bin/env python3
"""The same pipeline through the command line: write a lattice file, measure
it, extract the family, and project.  Each step shells out exactly as a user
would; files land in a temporary directory."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path


def run(*argv):
    cmd = [sys.executable, "-m", "eqlat.cli", *argv]
    print(f"$ eqlat {' '.join(argv)}")
    proc = subprocess.run(cmd, capture_output=True, text=True)
    for line in (proc.stdout + proc.stderr).splitlines():
        print(f"  {line}")
    print()
    return proc


with tempfile.TemporaryDirectory() as tmp:
    e8 = str(Path(tmp) / "e8.json")
    run("make", "--family", "E", "--dim", "8", "--out", e8)
    run("min", e8)
    run("shell", e8, "--norm", "2")
    run("equi", e8)
    run("project", e8, "--v", "1,0,0,0,0,0,0,0", "--rescale", "2",
        "--out", str(Path(tmp) / "p.json"))
    run("min", str(Path(tmp) / "p.json"))
    run("report", "--suite", "roots")

    print("the equi report as JSON, reformatted")
    proc = run("--json", "equi", e8)
    doc = json.loads(proc.stdout)
    print(json.dumps({k: doc[k] for k in ("source", "t", "rank", "alpha")}, indent=2))

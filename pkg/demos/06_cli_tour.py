"""The command-line interface, driven by the JSON documents in docs/examples.

Each run reads one problem document and prints a short table; --json adds
a deterministic machine-readable report.
"""
import subprocess
import sys
from pathlib import Path

EX = Path(__file__).resolve().parent.parent / "docs" / "examples"

RUNS = [
    ["verify", "--input", EX / "xy.json"],
    ["verify", "--input", EX / "xy_corrupted.json"],
    ["ext", "--input", EX / "xy.json", "--window=-3..3"],
    ["ext", "--input", EX / "cubic_cone.json"],
    ["milnor", "--input", EX / "milnor.json"],
    ["segal", "--input", EX / "segal.json"],
    ["degenerate", "--input", EX / "rees.json"],
]

for args in RUNS:
    cmd = [sys.executable, "-m", "mfcat.cli", *map(str, args)]
    print("$ mfcat", " ".join(str(a).replace(str(EX.parent.parent) + "/", "") for a in args))
    proc = subprocess.run(cmd, capture_output=True, text=True)
    print(proc.stdout.rstrip() or proc.stderr.rstrip())
    print(f"(exit {proc.returncode})\n")

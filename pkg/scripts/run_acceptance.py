"""Run the acceptance suite and print only the per-criterion summary."""
import pathlib
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent

proc = subprocess.run([sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", str(ROOT / "tests" / "test_acceptance.py")],
                      cwd=ROOT, capture_output=True, text=True)
lines = proc.stdout.splitlines()
start = next((i for i, l in enumerate(lines) if "acceptance criteria" in l), None)
print("\n".join(lines[start:] if start is not None else lines[-20:]))
sys.exit(proc.returncode)

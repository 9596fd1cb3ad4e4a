"""Run one case and print every check it makes.

    python3 demos/walkthrough_case.py 1
"""
import sys

from exceptional_z3.cli import to_markdown
from exceptional_z3.verify import run_case

cid = int(sys.argv[1]) if len(sys.argv) > 1 else 1
report = run_case(cid, samples=4, seed=0)
print(to_markdown(report))
print(f"expected dim {report.expected_dim}, computed dim {report.computed_dim}")

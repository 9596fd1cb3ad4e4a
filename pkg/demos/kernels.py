"""Kernel elements as listed next to the corrected ones, for two embeddings."""
from exceptional_z3.verify import run_lemma

for lid in ("lemma-4.8.2", "lemma-4.13.3"):
    report = run_lemma(lid, samples=2, seed=0)
    print(lid)
    for c in report.checks:
        if "kernel" in c.name:
            print(f"  {'pass' if c.passed else 'FAIL'}  {c.name}: {c.detail}")

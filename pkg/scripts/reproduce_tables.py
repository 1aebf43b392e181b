"""Print both dimension tables, exit nonzero if a finite cell deviates.

    python scripts/reproduce_tables.py [--max-degree N] [--format table|csv|json]
"""
import argparse
import sys

from h8nichols.cli import main

if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-degree", default="8")
    ap.add_argument("--format", default="table")
    a = ap.parse_args()
    codes = []
    for cmd in ("table2", "table3"):
        print(f"== {cmd}", flush=True)
        codes.append(main(["--format", a.format, cmd, "--max-degree", a.max_degree]))
    sys.exit(max(codes))

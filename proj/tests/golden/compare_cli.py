#!/usr/bin/env python3
"""Checks that the CLI catalog and the case expansion list the same tuples.

Usage: compare_cli.py AQMDS_BINARY Q [Q ...]
"""

import csv
import io
import os
import subprocess
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
from classification_cases import cases  # noqa: E402


def cli_tuples(binary, q):
    out = subprocess.run([binary, "enumerate", "--q", str(q), "--format", "csv"],
                         check=True, capture_output=True, text=True).stdout
    rows = csv.DictReader(io.StringIO(out))
    return sorted((int(r["n"]), int(r["j"]), int(r["dz"]), int(r["dx"])) for r in rows)


def main(argv):
    binary, qs = argv[0], [int(x) for x in argv[1:]]
    bad = 0
    for q in qs:
        want = cases(q)
        got = cli_tuples(binary, q)
        if want != got:
            missing = sorted(set(want) - set(got))
            extra = sorted(set(got) - set(want))
            print(f"q={q}: missing {missing[:5]} extra {extra[:5]}")
            bad += 1
        else:
            print(f"q={q}: {len(got)} tuples agree")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))

#!/usr/bin/env python3
"""Expands the pure CSS AQMDS classification case by case.

Each family is written out literally as a set of (n, k, j) with
{dz, dx} = {n - k - j + 1, k + 1}; the union is deduplicated on
(n, j, dz, dx). Lengths are bounded by q+1 (odd q) or q+2 (even q).

Usage:
    classification_cases.py Q [Q ...]        print "q count" lines
    classification_cases.py --tuples Q       print "n,j,dz,dx" lines, sorted
    classification_cases.py --check FILE     compare "q count" lines in FILE
"""

import sys


def prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            m, r = 0, q
            while r % p == 0:
                r //= p
                m += 1
            return (p, m) if r == 1 else None
    return None


def cases(q):
    pm = prime_power(q)
    if pm is None:
        raise ValueError(f"{q} is not a prime power")
    p, m = pm
    top = q + 1 if q % 2 else q + 2
    out = set()

    def add(n, k, j):
        if k < 1 or j < 0:
            return
        a, b = n - k - j + 1, k + 1
        out.add((n, j, max(a, b), min(a, b)))

    for n in range(2, top + 1):
        # trivial codes on both sides
        for k in {1, n - 1}:
            for j in {0, n - k}:
                add(n, k, j)
        # dx = 2 from a full-weight codeword
        if q == 2 and n % 2 == 0:
            add(n, 1, n - 2)
        if q >= 3:
            add(n, 1, n - 2)
        # nested GRS
        if q >= 3 and n <= q:
            for k in range(1, n):
                for j in range(0, n - k + 1):
                    add(n, k, j)
        # extended GRS, j != 1
        if q >= 3 and n == q + 1:
            for k in range(1, n):
                for j in [0] + list(range(2, n - k + 1)):
                    add(n, k, j)
        # j = 1 at length q+1
        if p == 2 and n == q + 1:
            for k in (2, q - 2):
                add(n, k, 1)
        # length q+2
        if p == 2 and m >= 2 and n == q + 2:
            for j in (2, q - 2):
                add(n, 1, j)
            for j in (0, q - 4, q - 1):
                add(n, 3, j)
            for j in (0, 3):
                add(n, q - 1, j)
    return sorted(out)


def main(argv):
    if len(argv) >= 2 and argv[0] == "--tuples":
        for t in cases(int(argv[1])):
            print(",".join(map(str, t)))
        return 0
    if len(argv) == 2 and argv[0] == "--check":
        bad = 0
        with open(argv[1]) as fh:
            for line in fh:
                line = line.split("#")[0].strip()
                if not line:
                    continue
                q, count = map(int, line.split())
                got = len(cases(q))
                if got != count:
                    print(f"q={q}: expected {count}, expanded {got}")
                    bad += 1
        print("ok" if bad == 0 else f"{bad} mismatches")
        return 1 if bad else 0
    for q in map(int, argv):
        print(q, len(cases(q)))
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))

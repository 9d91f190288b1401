#!/usr/bin/env python3
"""Write b-file fixtures for A002324 and A096936 by direct lattice-point counting.

A002324(n) = #{(x, y): x^2 + xy + y^2 = n} / 6
A096936(n) = #{(x, y): x^2 + 3y^2 = n} / 2

Usage: gen_bfiles.py OUT_DIR [N]
"""
import math
import sys


def count(a, b, c, n):
    # every y with a solution satisfies (4ac - b^2) y^2 <= 4an
    disc = 4 * a * c - b * b
    ymax = math.isqrt(4 * a * n // disc)
    total = 0
    for y in range(-ymax, ymax + 1):
        xmax = math.isqrt(4 * c * n // disc) + 1
        for x in range(-xmax, xmax + 1):
            if a * x * x + b * x * y + c * y * y == n:
                total += 1
    return total


def write(path, name, values):
    with open(path, "w") as f:
        f.write(f"# {name}: generated by lattice-point enumeration (scripts/gen_bfiles.py)\n")
        for n, v in enumerate(values, start=1):
            f.write(f"{n} {v}\n")


def main():
    out = sys.argv[1]
    limit = int(sys.argv[2]) if len(sys.argv) > 2 else 10000
    a2 = []
    a9 = []
    for n in range(1, limit + 1):
        r111 = count(1, 1, 1, n)
        r103 = count(1, 0, 3, n)
        assert r111 % 6 == 0 and r103 % 2 == 0
        a2.append(r111 // 6)
        a9.append(r103 // 2)
    write(f"{out}/b002324.txt", "A002324", a2)
    write(f"{out}/b096936.txt", "A096936", a9)


if __name__ == "__main__":
    main()

"""Generates tests/data/tate_oracle.csv with PARI/GP as an independent reference.

Columns: A,B,conductor,disc_min,f2,v2,f3,v3. Curves are reduced short models
(no prime p with p^4 | A and p^6 | B); half are random, half are weighted
toward high powers of 2 and 3 so every Kodaira type at p = 2, 3 shows up.
"""
import csv
import random
import sys

import cypari

pari = cypari.pari


def reduced(a, b):
    if 4 * a**3 + 27 * b**2 == 0:
        return False
    for p in (2, 3, 5, 7, 11, 13):
        if a % p**4 == 0 and b % p**6 == 0:
            return False
    return True


def local(E, p):
    f = int(pari.elllocalred(E, p)[0])
    return f


def main(path, count, seed):
    rng = random.Random(seed)
    rows = []
    seen = set()
    while len(rows) < count:
        if len(rows) % 2 == 0:
            a = rng.randint(-1000, 1000)
            b = rng.randint(-10000, 10000)
        else:
            a = rng.choice([-1, 1]) * 2 ** rng.randint(0, 8) * 3 ** rng.randint(0, 6) * rng.randint(0, 30)
            b = rng.choice([-1, 1]) * 2 ** rng.randint(0, 12) * 3 ** rng.randint(0, 9) * rng.randint(0, 30)
        if (a, b) in seen or not reduced(a, b):
            continue
        # Reject curves with a prime p >= 17 and p^4 | A, p^6 | B.
        g = pari.gcd(a, b)
        if g != 0 and any(a % int(p) ** 4 == 0 and b % int(p) ** 6 == 0 for p in pari.factor(g)[0]):
            continue
        seen.add((a, b))
        E = pari.ellinit([a, b])
        gr = pari.ellglobalred(E)
        N = int(gr[0])
        u = gr[1][0]
        disc = int(E.disc())
        dmin = disc // int(u) ** 12
        v2 = int(pari.valuation(dmin, 2))
        v3 = int(pari.valuation(dmin, 3))
        rows.append((a, b, N, dmin, local(E, 2), v2, local(E, 3), v3))
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["A", "B", "conductor", "disc_min", "f2", "v2", "f3", "v3"])
        w.writerows(rows)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tate_oracle.csv",
         int(sys.argv[2]) if len(sys.argv) > 2 else 2000,
         int(sys.argv[3]) if len(sys.argv) > 3 else 20240611)

"""Point counts #E(F_p) at the first three good primes p >= 5, computed with PARI (ellap).

Input CSV columns: G,A,B. Output CSV columns: G,A,B,p,count.
"""
import csv
import sys

import cypari

pari = cypari.pari


def main():
    src, dst = sys.argv[1], sys.argv[2]
    with open(src) as f, open(dst, "w", newline="") as g:
        out = csv.writer(g)
        out.writerow(["G", "A", "B", "p", "count"])
        for row in csv.DictReader(f):
            A, B = int(row["A"]), int(row["B"])
            E = pari.ellinit([A, B])
            disc = int(E.disc())
            found = 0
            p = 5
            while found < 3:
                if pari.isprime(p) and disc % p != 0:
                    out.writerow([row["G"], A, B, p, p + 1 - int(pari.ellap(E, p))])
                    found += 1
                p += 2


if __name__ == "__main__":
    main()

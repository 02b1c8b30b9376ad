#!/usr/bin/env python3
"""Kostka-Foulkes polynomials for partitions of 4, by every GL_n route.

Run: python demos/kostka_routes.py
"""

from kfoulkes.kostka import METHODS, kostka
from kfoulkes.tableaux import charge, enumerate_tableaux, partitions

N = 4
parts = list(partitions(N))
routes = [m for m in METHODS if m != "kl"]

print(f"K_(lam,mu)(t) for |lam| = |mu| = {N} (rows lam, columns mu)\n")
for lam in parts:
    for mu in parts:
        vals = {m: kostka(None, lam, mu, m, n=N) for m in routes}
        if len(set(vals.values())) != 1:
            raise SystemExit(f"routes disagree at {lam}, {mu}: {vals}")
        k = vals["charge"]
        if k:
            print(f"  lam={str(lam):14s} mu={str(mu):14s} {k}")

# where the charge polynomial comes from: one tableau per term
lam, mu = (3, 1), (2, 1, 1)
print(f"\ntableaux of shape {lam}, weight {mu}:")
for T in enumerate_tableaux(lam, mu):
    print(f"  {T.to_json()}  reading word {''.join(map(str, T.reading_word()))}  charge {charge(T)}")
print(f"sum of t^charge = {kostka(None, lam, mu, 'charge')}")

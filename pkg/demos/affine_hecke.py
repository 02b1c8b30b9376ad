#!/usr/bin/env python3
"""The affine Hecke side of the story in type C2.

Double cosets W t_lam W, the spherical straightening rule, the Satake
check, and Kostka-Foulkes polynomials read off Kazhdan-Lusztig polynomials.

Run: python demos/affine_hecke.py
"""

from kfoulkes.affine_weyl import AffineElement, double_coset
from kfoulkes.hecke import coset_sum_check, kl_polynomials_below, satake_check, straighten_M
from kfoulkes.kostka import kostka_via_base_change, kostka_via_kl
from kfoulkes.root_data import build_root_system

rs = build_root_system("C2")
print(f"{rs.name}: positive roots {[list(a) for a in rs.positive_roots]}  W_0(t) = {rs.poincare_polynomial()}")

lam = (0, 2)
m, n, members = double_coset(rs, lam)
print(f"\nlam = {list(lam)}: l(t_lam) = {AffineElement.translation(rs, lam).length}, "
      f"l(m_lam) = {m.length}, l(n_lam) = {n.length}, |W t_lam W| = {len(members)}")
print(f"  W_lam(t) = {rs.stabilizer_poincare(lam)}")

# M_(s_1 mu) for mu = (d, 0): the first cases of the straightening rule
print("\nstraightening M_(s_1 mu), t = q^-2:")
for d in range(5):
    mu = (d, 0)
    print(f"  d={d}: M_{list(rs.reflect(mu, 0))} = {straighten_M(rs, rs.reflect(mu, 0))}")

print("\nSatake and double-coset sum checks:")
for w in [(1, 0), (0, 1), (0, 2)]:
    print(f"  {list(w)}: satake {satake_check(rs, w)}  coset sum {coset_sum_check(rs, w)}")

# K_(lam, mu)(t) = t^<lam - mu, rho^vee> P_(x, n_lam)(t^-1) for x in W t_mu W
print(f"\nKL polynomials below n_lam ({len(kl_polynomials_below(n))} elements), and the rescaled values:")
for mu in sorted(rs.dominant_weights_below(lam), reverse=True):
    print(f"  mu={list(mu)}:  KL route {kostka_via_kl(rs, lam, mu)}   base change {kostka_via_base_change(rs, lam, mu)}")

#!/usr/bin/env python3
"""Hall-Littlewood polynomials P_lam(x;t) between Schur (t=0) and monomial (t=1).

Run: python demos/hall_littlewood.py
"""

from kfoulkes.polyring import inner_product_t
from kfoulkes.root_data import build_root_system
from kfoulkes.symfunc import expand_in, hall_littlewood, hall_littlewood_gram_schmidt, monomial, schur

rs = build_root_system("G2")
lam = (0, 1)  # the adjoint weight of G2 (alpha_1 short)
p = hall_littlewood(rs, lam)

print(f"P_{list(lam)} in {rs.name}")
for basis in ("schur", "monomial"):
    exp = expand_in(rs, basis, p)
    print(f"  {basis:9s}", "  ".join(f"{list(mu)}: {c}" for mu, c in sorted(exp.terms.items(), reverse=True)))



def at(f, value):
    return {mu: c(value) for mu, c in f.items() if c(value)}


print("\nspecializations:")
print("  P_lam(x;0) == s_lam:", at(p, 0) == at(schur(rs, lam), 0))
print("  P_lam(x;1) == m_lam:", at(p, 1) == at(monomial(rs, lam), 0))
print("  coefficient of x^0 at t=0 and t=1:", p.coeff(rs.zero())(0), p.coeff(rs.zero())(1))

# orthogonality and Gram-Schmidt against the t-inner product
print("\nW_lam(t) <P_lam, P_mu>_t:")
for a in [(0, 0), (1, 0), (0, 1)]:
    row = [(rs.stabilizer_poincare(a) * inner_product_t(rs, hall_littlewood(rs, a), hall_littlewood(rs, b), 8)).truncate(8)
           for b in [(0, 0), (1, 0), (0, 1)]]
    print(f"  {list(a)}: {', '.join(map(str, row))}")
print("\nGram-Schmidt from monomials reproduces P_lam:", hall_littlewood_gram_schmidt(rs, lam) == p)

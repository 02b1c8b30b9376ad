"""Kostka-Foulkes polynomials K_{lam mu}(t) by five independent routes."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .polyring import LaurentPoly, inner_product_t, partition_function
from .root_data import RootSystem, Weight, _add, _sub, gl
from .symfunc import BasisExpansion, hall_littlewood, hall_littlewood_schur, order_key, schur, straighten_schur
from .tableaux import charge, enumerate_tableaux, partition, partitions

METHODS = ("charge", "bc", "pf", "ip", "kl", "raising")


@dataclass
class KostkaResult:
    lam: Weight
    mu: Weight
    polynomial: LaurentPoly
    method: str

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "mu": list(self.mu), "method": self.method,
                "polynomial": self.polynomial.to_json()}


def _check_dominant(rs: RootSystem, *weights: Sequence[int]) -> None:
    for w in weights:
        if not rs.is_dominant(w):
            raise ValueError(f"{list(w)} is not dominant in {rs.name}")


# base change

@lru_cache(maxsize=1024)
def kostka_row(rs: RootSystem, lam: Weight) -> dict[Weight, LaurentPoly]:
    """All K_{lam nu}: back-substitute s_lam against the unitriangular P_nu (Schur coordinates)."""
    lam = tuple(lam)
    _check_dominant(rs, lam)
    below = sorted(rs.dominant_weights_below(lam), key=lambda m: order_key(rs, m), reverse=True)
    rem = {lam: LaurentPoly.const(1)}
    out: dict[Weight, LaurentPoly] = {}
    for nu in below:
        c = rem.pop(nu, LaurentPoly())
        if c.is_zero():
            continue
        out[nu] = c
        for kappa, d in hall_littlewood_schur(rs, nu).terms.items():
            if kappa == nu:
                continue
            v = rem.get(kappa, LaurentPoly()) - c * d
            if v.is_zero():
                rem.pop(kappa, None)
            else:
                rem[kappa] = v
    if any(not v.is_zero() for v in rem.values()):
        raise AssertionError("back-substitution left a remainder")
    return out


def kostka_via_base_change(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> LaurentPoly:
    lam, mu = tuple(lam), tuple(mu)
    _check_dominant(rs, lam, mu)
    return kostka_row(rs, lam).get(mu, LaurentPoly())


# partition function

def kostka_via_partition_function(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> LaurentPoly:
    """sum over W of (-1)^l(w) F(w(lam+rho) - (mu+rho); t)."""
    lam, mu = tuple(lam), tuple(mu)
    _check_dominant(rs, lam, mu)
    lr, mr = _add(lam, rs.rho), _add(mu, rs.rho)
    total = LaurentPoly()
    for w in rs.elements():
        f = partition_function(rs, _sub(w.act(lr), mr))
        if f:
            total = total - f if w.length % 2 else total + f
    return total


# inner product

def kostka_via_inner_product(rs: RootSystem, lam: Sequence[int], mu: Sequence[int],
                             height_bound: int | None = None) -> LaurentPoly:
    """W_mu(t) <s_lam, P_mu>_t, checked by doubling the truncation bound."""
    lam, mu = tuple(lam), tuple(mu)
    _check_dominant(rs, lam, mu)
    if not rs.dominance_leq(mu, lam):
        deg = 0
    else:
        deg = rs.two_rho_check_pairing(_sub(lam, mu)) // 2
    h = height_bound if height_bound is not None else deg + 2
    if h < deg:
        raise ValueError(f"height_bound {h} is below the degree bound {deg}")
    s, p, wm = schur(rs, lam), hall_littlewood(rs, mu), rs.stabilizer_poincare(mu)
    a = (wm * inner_product_t(rs, s, p, h)).truncate(h)
    b = (wm * inner_product_t(rs, s, p, 2 * h)).truncate(2 * h)
    if a != b:
        raise ArithmeticError(f"height_bound {h} is not sound: doubling changed the result")
    return a


def kostka_harmonic(rs: RootSystem, lam: Sequence[int], height_bound: int | None = None) -> LaurentPoly:
    """K_{lam,0}(t) = W_0(t) <s_lam, s_0>_t."""
    return kostka_via_inner_product(rs, lam, rs.zero(), height_bound)


# Kazhdan-Lusztig

def kostka_via_kl(rs: RootSystem, lam: Sequence[int], mu: Sequence[int], cutoff: int | None = None) -> LaurentPoly:
    """t^<lam-mu, rho^vee> P_{x, n_lam}(t^-1), for every x in W t_mu W (all must agree)."""
    from .hecke import kl_polynomials_below

    lam, mu = tuple(lam), tuple(mu)
    _check_dominant(rs, lam, mu)
    from .affine_weyl import double_coset, n_element

    n_lam = n_element(rs, lam)
    if not rs.in_root_lattice(_sub(lam, mu)):
        return LaurentPoly()
    polys = kl_polynomials_below(n_lam, cutoff)
    _, _, members = double_coset(rs, mu)
    shift = rs.rho_check_pairing(_sub(lam, mu))
    seen: set[LaurentPoly] = set()
    for x, _ in members:
        p = polys.get(x)
        if p is None:
            k = LaurentPoly()
        else:
            k = p.bar().shift(shift)
        seen.add(k)
    if len(seen) != 1:
        raise AssertionError(f"KL route depends on the coset representative: {seen}")
    return seen.pop()


# type A routes

def _gl_args(lam: Sequence[int], mu: Sequence[int], n: int | None):
    lam, mu = partition(lam), partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{list(lam)}| != |{list(mu)}|")
    n = max(len(lam), len(mu), 1) if n is None else n
    if len(lam) > n or len(mu) > n:
        raise ValueError(f"partitions need at most {n} parts")
    pad = lambda p: tuple(p) + (0,) * (n - len(p))
    return pad(lam), pad(mu), n


def kostka_via_charge(lam: Sequence[int], mu: Sequence[int]) -> LaurentPoly:
    """sum of t^charge(T) over column-strict T of shape lam and weight mu."""
    lam, mu = partition(lam), partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{list(lam)}| != |{list(mu)}|")
    out: dict[int, int] = {}
    for T in enumerate_tableaux(lam, mu):
        c = charge(T)
        out[c] = out.get(c, 0) + 1
    return LaurentPoly(out)


def _forward_expansion(mu: Weight, n: int) -> dict[Weight, LaurentPoly]:
    """Coefficients of R^gamma in prod_{i<j} 1/(1 - t R_ij), pruned to gamma that can straighten to a partition."""
    # the first i entries of mu + gamma + delta sum to at most those of lam + delta,
    # so the i-th prefix sum of gamma is at most |mu| - (mu_1 + ... + mu_i)
    k = sum(mu)
    cap = [k - sum(mu[: i + 1]) for i in range(n - 1)]

    def ok(g: Weight) -> bool:
        s = 0
        for i in range(n - 1):
            s += g[i]
            if s > cap[i]:
                return False
        return True

    acc = {(0,) * n: LaurentPoly.const(1)}
    for i in range(n):
        for j in range(i + 1, n):
            root = tuple(1 if m == i else -1 if m == j else 0 for m in range(n))
            new: dict[Weight, LaurentPoly] = {}
            for g, c in acc.items():
                r, cur = 0, g
                while ok(cur):
                    v = new.get(cur, LaurentPoly()) + c.shift(r)
                    new[cur] = v
                    r += 1
                    cur = _add(cur, root)
            acc = new
    return acc


def raising_operator_expand(mu: Sequence[int], n: int | None = None) -> BasisExpansion:
    """Q_mu in the Schur basis of GL_n, restricted to partition indices."""
    mu = partition(mu)
    n = max(len(mu), 1) if n is None else n
    return _raising(tuple(mu) + (0,) * (n - len(mu)), n)


@lru_cache(maxsize=1024)
def _raising(mu: Weight, n: int) -> BasisExpansion:
    rs = gl(n)
    out: dict[Weight, LaurentPoly] = {}
    for g, c in _forward_expansion(mu, n).items():
        sign, lam = straighten_schur(rs, _add(mu, g))
        if sign and lam[-1] >= 0:
            out[lam] = out.get(lam, LaurentPoly()) + (c if sign > 0 else -c)
    return BasisExpansion("schur", out)


def kostka_via_raising(lam: Sequence[int], mu: Sequence[int], n: int | None = None) -> LaurentPoly:
    lam, mu, n = _gl_args(lam, mu, n)
    return raising_operator_expand(mu, n).coeff(lam)


def kostka(rs: RootSystem | None, lam: Sequence[int], mu: Sequence[int], method: str,
           n: int | None = None, height_bound: int | None = None, cutoff: int | None = None) -> LaurentPoly:
    """Dispatch by method name; GL_n partitions are padded to n parts."""
    if method == "charge":
        return kostka_via_charge(lam, mu)
    if method == "raising":
        return kostka_via_raising(lam, mu, n)
    if rs is None or rs.is_gl:
        lam, mu, n = _gl_args(lam, mu, n if rs is None else rs.dim)
        rs = gl(n)
    if method == "bc":
        return kostka_via_base_change(rs, lam, mu)
    if method == "pf":
        return kostka_via_partition_function(rs, lam, mu)
    if method == "ip":
        return kostka_via_inner_product(rs, lam, mu, height_bound)
    if method == "kl":
        if rs.is_gl:
            raise ValueError("the KL route is implemented for Cartan types, not GL_n")
        return kostka_via_kl(rs, lam, mu, cutoff)
    raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")


def applicable_methods(rs: RootSystem | None) -> tuple[str, ...]:
    if rs is None or rs.is_gl:
        return ("charge", "bc", "pf", "raising", "ip")
    return ("bc", "pf", "ip", "kl")


def classical_kostka(lam: Sequence[int], mu: Sequence[int]) -> int:
    return len(enumerate_tableaux(lam, mu))


def gl_corpus(max_size: int, max_n: int) -> list[tuple[Weight, Weight, int]]:
    """(lam, mu, n) with |lam| = |mu| <= max_size and at most n <= max_n parts."""
    out = []
    for k in range(max_size + 1):
        ps = list(partitions(k))
        for n in range(1, max_n + 1):
            fit = [p for p in ps if len(p) <= n]
            for lam in fit:
                for mu in fit:
                    out.append((lam, mu, n))
    return out

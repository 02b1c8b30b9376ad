"""W-invariant bases of K[P]: monomial, alternating, Schur and Hall-Littlewood."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .polyring import GroupAlgebraElement, LaurentPoly, inner_product_t
from .root_data import RootSystem, Weight, _add, _sub

BASES = ("monomial", "schur", "hall-littlewood")


class BasisExpansion:
    """Sum of c_lam(t) b_lam over dominant lam for one of the three bases."""

    def __init__(self, basis: str, terms: Mapping[Weight, LaurentPoly | int] | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.terms: dict[Weight, LaurentPoly] = {}
        for lam, c in (terms or {}).items():
            c = c if isinstance(c, LaurentPoly) else LaurentPoly.const(c)
            if not c.is_zero():
                self.terms[tuple(lam)] = c

    def coeff(self, lam: Iterable[int]) -> LaurentPoly:
        return self.terms.get(tuple(lam), LaurentPoly())

    def __eq__(self, other):
        return isinstance(other, BasisExpansion) and self.basis == other.basis and self.terms == other.terms

    __hash__ = None

    def to_group_algebra(self, rs: RootSystem) -> GroupAlgebraElement:
        basis_fn = {"monomial": monomial, "schur": schur, "hall-littlewood": hall_littlewood}[self.basis]
        out = GroupAlgebraElement()
        for lam, c in self.terms.items():
            out = out + basis_fn(rs, lam).scale(c)
        return out

    def to_json(self) -> dict:
        return {"basis": self.basis,
                "terms": [[list(lam), c.to_json()] for lam, c in sorted(self.terms.items(), reverse=True)]}

    @classmethod
    def from_json(cls, data) -> "BasisExpansion":
        return cls(data["basis"], {tuple(lam): LaurentPoly.from_json(c) for lam, c in data["terms"]})

    def __repr__(self):
        body = " + ".join(f"({c}){self.basis[0]}{list(lam)}" for lam, c in sorted(self.terms.items(), reverse=True))
        return f"BasisExpansion({body or '0'})"


def _sign(rs: RootSystem, nu: Sequence[int]) -> int:
    neg = sum(1 for cv in rs.coroots if sum(a * b for a, b in zip(nu, cv)) < 0)
    return -1 if neg % 2 else 1


@lru_cache(maxsize=4096)
def monomial(rs: RootSystem, mu: Weight) -> GroupAlgebraElement:
    """m_mu = sum of x^gamma over the orbit W mu."""
    return GroupAlgebraElement({g: 1 for g in rs.orbit(tuple(mu))})


@lru_cache(maxsize=4096)
def alternating(rs: RootSystem, mu: Weight) -> GroupAlgebraElement:
    """a_mu = sum over W of (-1)^l(w) x^(w mu); zero when mu lies on a wall."""
    mu = tuple(mu)
    if not rs.is_regular(mu):
        return GroupAlgebraElement()
    s0 = _sign(rs, mu)
    return GroupAlgebraElement({nu: s0 * _sign(rs, nu) for nu in rs.orbit(mu)})


@lru_cache(maxsize=64)
def weyl_denominator(rs: RootSystem) -> GroupAlgebraElement:
    """x^rho prod_{a>0} (1 - x^-a)."""
    one = GroupAlgebraElement.one(rs.dim)
    out = GroupAlgebraElement.monomial(rs.rho)
    for a in rs.positive_roots:
        out = out * (one - GroupAlgebraElement.monomial(tuple(-x for x in a)))
    return out


def order_key(rs: RootSystem, mu: Sequence[int]) -> tuple:
    """Translation-invariant total order refining dominance."""
    return (rs.two_rho_check_pairing(mu),) + tuple(mu)


def divide_exact(rs: RootSystem, f: GroupAlgebraElement, g: GroupAlgebraElement) -> GroupAlgebraElement:
    """f / g by leading-term long division; raises if g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero element")
    key = lambda m: order_key(rs, m)
    g_lead = max(g.support(), key=key)
    g_low = min(g.support(), key=key)
    gc = g.coeff(g_lead)
    rem = dict(f.items())
    if not rem:
        return GroupAlgebraElement()
    f_low = key(min(rem, key=key))
    floor = tuple(a - b for a, b in zip(f_low, key(g_low)))
    quot: dict[Weight, LaurentPoly] = {}
    while rem:
        lead = max(rem, key=key)
        mu = _sub(lead, g_lead)
        if key(mu) < floor:
            raise ArithmeticError("not divisible: remainder below the quotient floor")
        c = rem[lead].exact_div(gc)
        quot[mu] = c
        for nu, d in g.items():
            w = _add(mu, nu)
            v = rem.get(w, LaurentPoly()) - c * d
            if v.is_zero():
                rem.pop(w, None)
            else:
                rem[w] = v
    return GroupAlgebraElement(quot)


@lru_cache(maxsize=4096)
def schur(rs: RootSystem, lam: Weight) -> GroupAlgebraElement:
    """s_lam = a_{lam+rho} / a_rho (exact long division)."""
    lam = tuple(lam)
    if not rs.is_dominant(lam):
        raise ValueError(f"{list(lam)} is not dominant")
    return divide_exact(rs, alternating(rs, _add(lam, rs.rho)), weyl_denominator(rs))


def straighten_schur(rs: RootSystem, mu: Sequence[int]) -> tuple[int, Weight | None]:
    """s_mu = sign * s_lam with lam = w o mu dominant; (0, None) if mu + rho is singular."""
    nu = _add(mu, rs.rho)
    if not rs.is_regular(nu):
        return 0, None
    dom, w = rs.dominant_representative(nu)
    return (-1 if w.length % 2 else 1), _sub(dom, rs.rho)


def _subset_sums(rs: RootSystem) -> dict[Weight, LaurentPoly]:
    """sum over E in R+ of (-t)^|E| x^(alpha_E), grouped by alpha_E."""
    acc = {rs.zero(): LaurentPoly.const(1)}
    mt = LaurentPoly.monomial(1, -1)
    for a in rs.positive_roots:
        new = dict(acc)
        for g, c in acc.items():
            k = _add(g, a)
            v = new.get(k, LaurentPoly()) + c * mt
            if v.is_zero():
                new.pop(k, None)
            else:
                new[k] = v
        acc = new
    return acc


_SUBSET_CACHE: dict[str, dict] = {}


@lru_cache(maxsize=4096)
def hall_littlewood_schur(rs: RootSystem, lam: Weight) -> BasisExpansion:
    """P_lam in the Schur basis: W_lam(t)^-1 sum_E (-t)^|E| s_{lam - alpha_E}."""
    lam = tuple(lam)
    if not rs.is_dominant(lam):
        raise ValueError(f"P_mu is only built for dominant mu; {list(lam)} is not dominant")
    sums = _SUBSET_CACHE.get(rs.name)
    if sums is None:
        sums = _SUBSET_CACHE[rs.name] = _subset_sums(rs)
    acc: dict[Weight, LaurentPoly] = {}
    for g, c in sums.items():
        sign, dom = straighten_schur(rs, _sub(lam, g))
        if sign:
            acc[dom] = acc.get(dom, LaurentPoly()) + (c if sign > 0 else -c)
    wl = rs.stabilizer_poincare(lam)
    out = {}
    for mu, c in acc.items():
        if not c.is_zero():
            out[mu] = c.exact_div(wl)
    if out.get(lam) != 1:
        raise AssertionError("leading Schur coefficient of P_lam is not 1")
    return BasisExpansion("schur", out)


@lru_cache(maxsize=4096)
def hall_littlewood(rs: RootSystem, lam: Weight) -> GroupAlgebraElement:
    """P_lam(x; t) as an element of K[P]."""
    return hall_littlewood_schur(rs, tuple(lam)).to_group_algebra(rs)


def _budget(rs: RootSystem, f: GroupAlgebraElement) -> int:
    dom = [m for m in f.support() if rs.is_dominant(m)]
    maxima = [m for m in dom if not any(o != m and rs.dominance_leq(m, o) for o in dom)]
    below: set[Weight] = set()
    for m in maxima:
        below.update(rs.dominant_weights_below(m))
    return len(below)


def expand_in(rs: RootSystem, basis: str, f: GroupAlgebraElement) -> BasisExpansion:
    """Expand a W-invariant f in one of the bases by leading-term subtraction."""
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}")
    if not f.is_invariant(rs):
        raise ValueError("input is not W-invariant")
    basis_fn = {"monomial": monomial, "schur": schur, "hall-littlewood": hall_littlewood}[basis]
    budget = _budget(rs, f)
    out: dict[Weight, LaurentPoly] = {}
    rem = f
    steps = 0
    while not rem.is_zero():
        steps += 1
        if steps > budget:
            raise RuntimeError("expansion did not terminate within its step budget")
        lead = max(rem.support(), key=lambda m: order_key(rs, m))
        c = rem.coeff(lead)
        out[lead] = c
        rem = rem - basis_fn(rs, lead).scale(c)
    return BasisExpansion(basis, out)


_GS_CACHE: dict = {}


def _series_div(a: LaurentPoly, b: LaurentPoly, h: int) -> LaurentPoly:
    return (a * b.series_inverse(h)).truncate(h)


def _gram_schmidt(rs: RootSystem, lam: Weight, h: int) -> GroupAlgebraElement:
    key = (rs.name, lam, h)
    hit = _GS_CACHE.get(key)
    if hit is not None:
        return hit
    m = monomial(rs, lam)
    out = m
    for nu in rs.dominant_weights_below(lam):
        if nu == lam:
            continue
        p_nu = _gram_schmidt(rs, nu, h)
        num = inner_product_t(rs, m, p_nu, h)
        den = inner_product_t(rs, p_nu, p_nu, h)
        c = -_series_div(num, den, h)
        if not c.is_zero():
            out = out + p_nu.scale(c)
    _GS_CACHE[key] = out
    return out


def hall_littlewood_gram_schmidt(rs: RootSystem, lam: Sequence[int], height_bound: int = 8) -> GroupAlgebraElement:
    """P_lam by Gram-Schmidt against the t-inner product; checked by doubling the bound."""
    lam = tuple(lam)
    if not rs.is_dominant(lam):
        raise ValueError(f"{list(lam)} is not dominant")
    a = _gram_schmidt(rs, lam, height_bound)
    b = _gram_schmidt(rs, lam, 2 * height_bound)
    if a != b:
        raise ArithmeticError(f"height bound {height_bound} is not sound: doubling changed the result")
    return a

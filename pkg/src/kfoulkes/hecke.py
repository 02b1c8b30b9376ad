"""The affine Hecke algebra over Z[q, q^-1].

Two bases are supported.  In the affine-T basis a key is an
:class:`AffineElement` x and the term is T_x; products are reduced with the
quadratic relation T_i^2 = (q - q^-1) T_i + 1 and T_g T_y = T_{gy} for g of
length zero.  In the Bernstein basis a key is (mu, v) and the term is
x^mu T_v with v in the finite Weyl group.

Spherical computations use t = q^-2 and the elements
M_mu = 1_0 x^mu 1_0; Kazhdan-Lusztig polynomials are reported in t = q^2.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .affine_weyl import (AffineElement, CutoffExceeded, affine_generators, double_coset, length_cutoff,
                          lower_interval, n_element)
from .polyring import GroupAlgebraElement, LaurentPoly, RationalFunction, t_from_q
from .root_data import RootSystem, WeylElement, Weight, _add, _sub
from .symfunc import hall_littlewood, schur

Q = LaurentPoly.gen("q")
ONE = LaurentPoly.const(1, "q")
QQ = LaurentPoly({1: 1, -1: -1}, "q")  # q - q^-1

BASES = ("affine-T", "bernstein")


class BasisMismatch(ValueError):
    pass


class NotABarMatrix(ValueError):
    pass


def _coeff(c):
    if isinstance(c, int):
        return LaurentPoly.const(c, "q")
    if isinstance(c, LaurentPoly):
        if not c.is_constant() and c.var != "q":
            raise ValueError(f"Hecke coefficients are polynomials in q, got one in {c.var}")
        return c if c.var == "q" else LaurentPoly(dict(c.items()), "q")
    if isinstance(c, RationalFunction):
        return c
    raise TypeError(f"unsupported coefficient {c!r}")


def _accumulate(out: dict, key, c) -> None:
    v = out.get(key)
    v = c if v is None else v + c
    if v.is_zero():
        out.pop(key, None)
    else:
        out[key] = v


class HeckeElement:
    """Finite sum of basis terms with coefficients in Z[q, q^-1] or Q(q)."""

    __slots__ = ("rs", "basis", "terms")

    def __init__(self, rs: RootSystem, basis: str, terms: Mapping | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.rs = rs
        self.basis = basis
        self.terms: dict = {}
        for k, c in (terms or {}).items():
            c = _coeff(c)
            if not c.is_zero():
                self.terms[k] = c

    # constructors
    @classmethod
    def zero(cls, rs: RootSystem, basis: str = "affine-T") -> "HeckeElement":
        return cls(rs, basis)

    @classmethod
    def one(cls, rs: RootSystem, basis: str = "affine-T") -> "HeckeElement":
        if basis == "affine-T":
            return cls(rs, basis, {AffineElement.identity(rs): 1})
        return cls(rs, basis, {(rs.zero(), rs.identity()): 1})

    def _check(self, other: "HeckeElement") -> None:
        if not isinstance(other, HeckeElement):
            raise TypeError("expected a HeckeElement")
        if other.basis != self.basis:
            raise BasisMismatch(f"cannot combine {self.basis} and {other.basis} elements")
        if other.rs != self.rs:
            raise ValueError("elements of different Hecke algebras")

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, key):
        return self.terms.get(key, LaurentPoly({}, "q"))

    def support(self) -> list:
        return list(self.terms)

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(out, k, c)
        return HeckeElement(self.rs, self.basis, out)

    def __neg__(self):
        return HeckeElement(self.rs, self.basis, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "HeckeElement":
        c = _coeff(c)
        return HeckeElement(self.rs, self.basis, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly, RationalFunction)):
            return self.scale(other)
        return hecke_multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly, RationalFunction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        if other.basis != self.basis or other.rs != self.rs:
            return False
        if set(self.terms) != set(other.terms):
            return False
        return all(_coeff_eq(c, other.terms[k]) for k, c in self.terms.items())

    __hash__ = None

    def map_coeffs(self, f) -> "HeckeElement":
        return HeckeElement(self.rs, self.basis, {k: f(c) for k, c in self.terms.items()})

    def bar(self) -> "HeckeElement":
        return bar_involution(self)

    def max_length(self) -> int:
        if self.basis != "affine-T":
            raise BasisMismatch("lengths are defined for affine-T keys")
        return max((x.length for x in self.terms), default=0)

    def to_json(self) -> dict:
        terms = []
        for k, c in self.terms.items():
            key = k.to_json() if self.basis == "affine-T" else {"x": list(k[0]), "w": [i + 1 for i in k[1].word]}
            terms.append([key, _coeff_json(c)])
        terms.sort(key=lambda p: str(p[0]))
        return {"basis": self.basis, "root_system": self.rs.name, "terms": terms}

    @classmethod
    def from_json(cls, rs: RootSystem, data) -> "HeckeElement":
        basis = data["basis"]
        out = {}
        for key, c in data["terms"]:
            if basis == "affine-T":
                k = AffineElement.from_json(rs, key)
            else:
                k = (rs.check_weight(key["x"]), rs.element(i - 1 for i in key["w"]))
            out[k] = _coeff_from_json(c)
        return cls(rs, basis, out)

    def __repr__(self):
        if not self.terms:
            return "HeckeElement(0)"
        parts = []
        for k, c in sorted(self.terms.items(), key=lambda p: _sort_key(self.basis, p[0])):
            if self.basis == "affine-T":
                parts.append(f"({c}) T[{k!r}]")
            else:
                parts.append(f"({c}) x^{list(k[0])} T[{k[1]!r}]")
        return "HeckeElement(" + " + ".join(parts) + ")"


def _sort_key(basis: str, k):
    if basis == "affine-T":
        return (k.length, k.reduced_word()[0], k.lam)
    return (k[1].length, k[0], k[1].word)


def _coeff_eq(a, b) -> bool:
    if isinstance(a, RationalFunction) or isinstance(b, RationalFunction):
        return RationalFunction.lift(a) == RationalFunction.lift(b)
    return a == b


def _coeff_json(c):
    if isinstance(c, RationalFunction):
        return {"num": c.num.to_json(), "den": c.den.to_json()}
    return c.to_json()


def _coeff_from_json(data):
    if "num" in data:
        return RationalFunction(LaurentPoly.from_json(data["num"]), LaurentPoly.from_json(data["den"]))
    return LaurentPoly.from_json(data)


# affine-T basis

def T(x: AffineElement) -> HeckeElement:
    return HeckeElement(x.rs, "affine-T", {x: 1})


def T_generator(rs: RootSystem, j: int) -> HeckeElement:
    """T_{s_j}; j = 0 is the affine node, j >= 1 the finite simple reflection s_j."""
    return T(affine_generators(rs)[j])


def _left_generator(j: int, terms: dict, rs: RootSystem) -> dict:
    s = affine_generators(rs)[j]
    out: dict = {}
    for y, c in terms.items():
        sy = s * y
        if sy.length > y.length:
            _accumulate(out, sy, c)
        else:
            _accumulate(out, y, c * QQ)
            _accumulate(out, sy, c)
    return out


def _left_element(x: AffineElement, terms: dict) -> dict:
    word, g = x.reduced_word()
    if not g.is_identity():
        terms = {g * y: c for y, c in terms.items()}
    for j in reversed(word):
        terms = _left_generator(j, terms, x.rs)
    return terms


def _multiply_T(a: HeckeElement, b: HeckeElement, cutoff: int) -> HeckeElement:
    for h in (a, b):
        if h.max_length() > cutoff:
            raise CutoffExceeded(f"affine length {h.max_length()} exceeds cutoff {cutoff}")
    out: dict = {}
    for x, c in a.terms.items():
        for y, d in _left_element(x, b.terms).items():
            _accumulate(out, y, c * d)
    res = HeckeElement(a.rs, "affine-T", out)
    if res.max_length() > cutoff:
        raise CutoffExceeded(f"product reaches affine length {res.max_length()}, above the cutoff {cutoff}")
    return res


_BAR_CACHE: dict = {}


def _bar_T(x: AffineElement) -> dict:
    """bar(T_x) = T_{x^-1}^-1 = (T_{i_1} - (q - q^-1)) bar(T_{x'}) with x = s_{i_1} x'."""
    hit = _BAR_CACHE.get(x)
    if hit is not None:
        return hit
    word, g = x.reduced_word()
    if not word:
        out = {x: ONE}
    else:
        j = word[0]
        rest = affine_generators(x.rs)[j] * x
        inner = _bar_T(rest)
        out = _left_generator(j, inner, x.rs)
        for y, c in inner.items():
            _accumulate(out, y, -QQ * c)
    _BAR_CACHE[x] = out
    return out


def bar_involution(a: HeckeElement, cutoff: int | None = None) -> HeckeElement:
    """q -> q^-1 and T_w -> T_{w^-1}^-1 (affine-T basis only)."""
    if a.basis != "affine-T":
        raise BasisMismatch("the bar involution is implemented on the affine-T basis")
    cutoff = length_cutoff() if cutoff is None else cutoff
    if a.max_length() > cutoff:
        raise CutoffExceeded(f"affine length {a.max_length()} exceeds cutoff {cutoff}")
    out: dict = {}
    for x, c in a.terms.items():
        cb = c.bar()
        for y, d in _bar_T(x).items():
            _accumulate(out, y, cb * d)
    return HeckeElement(a.rs, "affine-T", out)


def T_inverse(x: AffineElement) -> HeckeElement:
    """T_x^-1 = bar(T_{x^-1})."""
    return bar_involution(T(x.inverse()))


def x_power(rs: RootSystem, mu: Sequence[int]) -> HeckeElement:
    """x^mu in the affine-T basis: T_{t_a} T_{t_b}^-1 with a - b = mu, a and b dominant."""
    mu = tuple(mu)
    if rs.is_dominant(mu):
        return T(AffineElement.translation(rs, mu))
    b = rs.zero()
    for i in range(rs.rank):
        k = -rs.simple_pairing(mu, i)
        if k > 0:
            b = _add(b, tuple(k * x for x in rs.fundamental_weights[i]))
    a = _add(mu, b)
    return T(AffineElement.translation(rs, a)) * T_inverse(AffineElement.translation(rs, b))


# Bernstein basis

def bernstein_x(rs: RootSystem, mu: Sequence[int]) -> HeckeElement:
    return HeckeElement(rs, "bernstein", {(tuple(mu), rs.identity()): 1})


def bernstein_T(rs: RootSystem, w: WeylElement | int) -> HeckeElement:
    """T_w, or T_{s_i} when w is a 0-based simple index."""
    if isinstance(w, int):
        w = rs.simple_reflection(w)
    return HeckeElement(rs, "bernstein", {(rs.zero(), w): 1})


def bernstein_quotient(rs: RootSystem, mu: Sequence[int], i: int) -> dict[Weight, int]:
    """(x^mu - x^{s_i mu}) / (1 - x^-a_i) as a finite geometric sum."""
    mu = tuple(mu)
    d = rs.simple_pairing(mu, i)
    a = rs.simple_roots[i]
    if d == 0:
        return {}
    if d > 0:
        return {_sub(mu, tuple(j * x for x in a)): 1 for j in range(d)}
    top = rs.reflect(mu, i)
    return {_sub(top, tuple(j * x for x in a)): -1 for j in range(-d)}


def _bern_left_T(i: int, terms: dict, rs: RootSystem) -> dict:
    """T_i x^mu T_v = x^{s_i mu} T_i T_v + (q - q^-1) D_i(mu) T_v."""
    s = rs.simple_reflection(i)
    out: dict = {}
    for (mu, v), c in terms.items():
        smu = rs.reflect(mu, i)
        sv = s * v
        if sv.length > v.length:
            _accumulate(out, (smu, sv), c)
        else:
            _accumulate(out, (smu, v), c * QQ)
            _accumulate(out, (smu, sv), c)
        for nu, e in bernstein_quotient(rs, mu, i).items():
            _accumulate(out, (nu, v), c * QQ * e)
    return out


def _multiply_bernstein(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    rs = a.rs
    out: dict = {}
    for (mu, v), c in a.terms.items():
        cur = b.terms
        for i in reversed(v.word):
            cur = _bern_left_T(i, cur, rs)
        for (nu, u), d in cur.items():
            _accumulate(out, (_add(mu, nu), u), c * d)
    return HeckeElement(rs, "bernstein", out)


def hecke_multiply(a: HeckeElement, b: HeckeElement, cutoff: int | None = None) -> HeckeElement:
    a._check(b)
    if a.basis == "affine-T":
        return _multiply_T(a, b, length_cutoff() if cutoff is None else cutoff)
    return _multiply_bernstein(a, b)


def from_group_algebra(rs: RootSystem, f: GroupAlgebraElement) -> HeckeElement:
    """f in K[P] as sum of c_mu x^mu in the Bernstein basis (integer or q coefficients)."""
    e = rs.identity()
    return HeckeElement(rs, "bernstein", {(mu, e): c for mu, c in f.items()})


def bernstein_to_T(a: HeckeElement) -> HeckeElement:
    """Rewrite a Bernstein-basis element in the affine-T basis."""
    if a.basis != "bernstein":
        raise BasisMismatch("expected a Bernstein-basis element")
    rs = a.rs
    out = HeckeElement(rs, "affine-T")
    for (mu, v), c in a.terms.items():
        out = out + (x_power(rs, mu) * T(AffineElement.finite(v))).scale(c)
    return out


# symmetrizers

def _poincare_q(rs: RootSystem, power: int) -> LaurentPoly:
    return rs.poincare_polynomial().substitute_power(power, "q")


def symmetrizer_sum(rs: RootSystem) -> HeckeElement:
    """sum over W of q^l(w) T_w (no normalization)."""
    return HeckeElement(rs, "affine-T", {AffineElement.finite(w): Q ** w.length for w in rs.elements()})


def one_0(rs: RootSystem) -> HeckeElement:
    """1_0 = W_0(q^2)^-1 sum_w q^l(w) T_w."""
    return symmetrizer_sum(rs).scale(RationalFunction(ONE, _poincare_q(rs, 2)))


def epsilon_0(rs: RootSystem) -> HeckeElement:
    """eps_0 = W_0(q^-2)^-1 sum_w (-q)^-l(w) T_w."""
    mq = LaurentPoly({-1: -1}, "q")
    s = HeckeElement(rs, "affine-T", {AffineElement.finite(w): mq ** w.length for w in rs.elements()})
    return s.scale(RationalFunction(ONE, _poincare_q(rs, -2)))


# Kazhdan-Lusztig basis

def bar_matrix(elements: Sequence[AffineElement]) -> dict:
    """a_{uz} with bar(T_z) = sum_u a_{uz} T_u, restricted to a lower-closed set."""
    inside = set(elements)
    A: dict = {}
    for z in elements:
        for u, c in _bar_T(z).items():
            if u not in inside:
                raise NotABarMatrix(f"bar(T_z) leaves the element set at {u!r}")
            A[(u, z)] = c
    return A


def _check_bar_matrix(elements: Sequence, A: Mapping) -> None:
    pos = {x: k for k, x in enumerate(elements)}
    cols: dict = {}
    for (u, z), c in A.items():
        if u not in pos or z not in pos:
            raise NotABarMatrix("not a bar matrix: index outside the poset")
        if c.is_zero():
            continue
        if pos[u] > pos[z] or (u == z and c != 1):
            raise NotABarMatrix("not a bar matrix: A is not unitriangular")
        cols.setdefault(z, {})[u] = c
    for z in elements:
        if cols.get(z, {}).get(z) != 1:
            raise NotABarMatrix("not a bar matrix: A is not unitriangular")
    # (A Abar)_{u v} = sum_z a_{uz} bar(a_{zv})
    for v in elements:
        acc: dict = {}
        for z, c in cols[v].items():
            cb = c.bar()
            for u, d in cols[z].items():
                _accumulate(acc, u, d * cb)
        if acc != {v: 1}:
            raise NotABarMatrix("not a bar matrix: A Abar is not the identity")


def _solve_column(elements: Sequence, cols: Mapping, w) -> dict:
    pos = {x: k for k, x in enumerate(elements)}
    rows: dict = {}
    for z, col in cols.items():
        for u, c in col.items():
            rows.setdefault(u, {})[z] = c
    p = {w: ONE}
    for u in sorted((x for x in elements if pos[x] < pos[w]), key=lambda x: -pos[x]):
        f = LaurentPoly({}, "q")
        for z, a in rows.get(u, {}).items():
            if z != u and z in p:
                f = f + a * p[z].bar()
        if f != -f.bar():
            raise ArithmeticError("KL recursion produced f with bar(f) != -f")
        neg = f.negative_part()
        if not neg.is_zero():
            p[u] = neg
    return p


def kl_basis(elements: Sequence, A: Mapping, check: bool = True) -> dict:
    """p_{vw} for all v, w in a lower-closed poset listed in a linear extension of its order.

    A maps (u, z) to a_{uz}.  Returns the nonzero entries keyed (v, w); p_{ww} = 1
    and p_{vw} lies in q^-1 Z[q^-1] for v < w.
    """
    elements = list(elements)
    if check:
        _check_bar_matrix(elements, A)
    cols: dict = {}
    for (u, z), c in A.items():
        if not c.is_zero():
            cols.setdefault(z, {})[u] = c
    out = {}
    for w in elements:
        for v, c in _solve_column(elements, cols, w).items():
            out[(v, w)] = c
    return out


@lru_cache(maxsize=256)
def _kl_column(y: AffineElement, check: bool) -> tuple:
    elements = lower_interval(y, cutoff=10 ** 9)
    A = bar_matrix(elements)
    if check:
        _check_bar_matrix(elements, A)
    cols: dict = {}
    for (u, z), c in A.items():
        cols.setdefault(z, {})[u] = c
    return tuple(_solve_column(elements, cols, y).items())


def kl_p_below(y: AffineElement, cutoff: int | None = None, check: bool = True) -> dict:
    """{x: p_{x,y}(q)} for x <= y with p_{x,y} nonzero."""
    cutoff = length_cutoff() if cutoff is None else cutoff
    if y.length > cutoff:
        raise CutoffExceeded(f"affine length {y.length} exceeds cutoff {cutoff}")
    return dict(_kl_column(y, check))


def kl_polynomials_below(y: AffineElement, cutoff: int | None = None, check: bool = True) -> dict:
    """{x: P_{x,y}(t)} in t = q^2, via p_{x,y} = q^-(l(y) - l(x)) P_{x,y}(q^2)."""
    out = {}
    for x, p in kl_p_below(y, cutoff, check).items():
        out[x] = t_from_q(p.shift(y.length - x.length), 2)
    return out


def kl_element(y: AffineElement, cutoff: int | None = None) -> HeckeElement:
    """C'_y = sum_x p_{x,y} T_x."""
    return HeckeElement(y.rs, "affine-T", kl_p_below(y, cutoff))


def kl_to_json(y: AffineElement, polys: Mapping) -> list:
    return [[x.to_json(), y.to_json(), p.to_json()] for x, p in
            sorted(polys.items(), key=lambda kv: _sort_key("affine-T", kv[0]))]


# spherical calculus (t = q^-2)

class SphericalElement:
    """sum of c_lam(t) M_lam over dominant lam, with M_lam = 1_0 x^lam 1_0 and t = q^-2."""

    __slots__ = ("rs", "terms")

    def __init__(self, rs: RootSystem, terms: Mapping | None = None):
        self.rs = rs
        self.terms: dict[Weight, LaurentPoly] = {}
        for lam, c in (terms or {}).items():
            lam = tuple(lam)
            if not rs.is_dominant(lam):
                raise ValueError(f"{list(lam)} is not dominant")
            c = c if isinstance(c, LaurentPoly) else LaurentPoly.const(c)
            if not c.is_zero():
                self.terms[lam] = c

    def __add__(self, other: "SphericalElement") -> "SphericalElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(out, k, c)
        return SphericalElement(self.rs, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "SphericalElement":
        return SphericalElement(self.rs, {k: v * c for k, v in self.terms.items()})

    def coeff(self, lam) -> LaurentPoly:
        return self.terms.get(tuple(lam), LaurentPoly())

    def __eq__(self, other):
        if isinstance(other, SphericalElement):
            return self.rs == other.rs and self.terms == other.terms
        return NotImplemented

    __hash__ = None

    def to_json(self) -> dict:
        return {"root_system": self.rs.name,
                "terms": [[list(k), c.to_json()] for k, c in sorted(self.terms.items(), reverse=True)]}

    def __repr__(self):
        body = " + ".join(f"({c})M{list(k)}" for k, c in sorted(self.terms.items(), reverse=True))
        return f"SphericalElement({body or '0'})"


_T = LaurentPoly.gen("t")


@lru_cache(maxsize=None)
def _straighten(rs: RootSystem, mu: Weight) -> tuple:
    if rs.is_dominant(mu):
        return ((mu, LaurentPoly.const(1)),)
    i = next(i for i in range(rs.rank) if rs.simple_pairing(mu, i) < 0)
    nu = rs.reflect(mu, i)
    d = rs.simple_pairing(nu, i)
    a = rs.simple_roots[i]
    down = lambda j: _sub(nu, tuple(j * x for x in a))
    # M_{s_i nu} = t M_nu + sum_{1 <= j < d/2} (t^2 - 1) t^(j-1) M_{nu - j a}
    #              + [d even] (t - 1) t^(d/2 - 1) M_{nu - (d/2) a}
    parts = [(nu, _T)]
    for j in range(1, (d + 1) // 2):
        parts.append((down(j), (_T * _T - 1) * _T ** (j - 1)))
    if d % 2 == 0:
        parts.append((down(d // 2), (_T - 1) * _T ** (d // 2 - 1)))
    out: dict = {}
    for gamma, c in parts:
        for lam, e in _straighten(rs, gamma):
            _accumulate(out, lam, c * e)
    return tuple(out.items())


def straighten_M(rs: RootSystem, mu: Sequence[int]) -> SphericalElement:
    """M_mu in the basis {M_lam : lam dominant}, crossing the lowest-index violated wall first."""
    return SphericalElement(rs, dict(_straighten(rs, rs.check_weight(mu))))


def spherical_of(rs: RootSystem, f: GroupAlgebraElement) -> SphericalElement:
    """f 1_0 = 1_0 f 1_0 = sum_gamma f_gamma M_gamma for W-invariant f (t coefficients)."""
    out = SphericalElement(rs)
    for gamma, c in f.items():
        out = out + straighten_M(rs, gamma).scale(c)
    return out


def spherical_from_hl(rs: RootSystem, lam: Sequence[int]) -> SphericalElement:
    """(W_lam(t) / W_0(t)) P_lam(x; t) 1_0 with t = q^-2; raises ArithmeticError if inexact."""
    lam = tuple(lam)
    s = spherical_of(rs, hall_littlewood(rs, lam)).scale(rs.stabilizer_poincare(lam))
    w0 = rs.poincare_polynomial()
    return SphericalElement(rs, {k: c.exact_div(w0) for k, c in s.terms.items()})


def satake_check(rs: RootSystem, lam: Sequence[int]) -> bool:
    lam = tuple(lam)
    try:
        return spherical_from_hl(rs, lam) == SphericalElement(rs, {lam: 1})
    except ArithmeticError:
        return False


def M_element(rs: RootSystem, lam: Sequence[int], cutoff: int | None = None) -> HeckeElement:
    """M_lam = 1_0 T_{t_lam} 1_0 for dominant lam, with rational coefficients."""
    lam = tuple(lam)
    if not rs.is_dominant(lam):
        raise ValueError(f"{list(lam)} is not dominant")
    e = one_0(rs)
    return hecke_multiply(hecke_multiply(e, x_power(rs, lam), cutoff), e, cutoff)


def spherical_to_hecke(s: SphericalElement, cutoff: int | None = None) -> HeckeElement:
    rs = s.rs
    out = HeckeElement(rs, "affine-T")
    for lam, c in s.terms.items():
        cq = c.substitute_power(-2, "q")
        out = out + M_element(rs, lam, cutoff).scale(cq)
    return out


def coset_sum_check(rs: RootSystem, lam: Sequence[int], cutoff: int | None = None) -> bool:
    """q^-l(w0) W_0(q^2) (W_0(q^-2) / W_lam(q^-2)) M_lam = sum_{x in W t_lam W} q^(l(x) - l(n_lam)) T_x."""
    lam = tuple(lam)
    w0 = rs.longest_element
    scale = (RationalFunction(Q ** (-w0.length) * _poincare_q(rs, 2) * _poincare_q(rs, -2))
             / RationalFunction(rs.stabilizer_poincare(lam).substitute_power(-2, "q")))
    lhs = M_element(rs, lam, cutoff).scale(scale)
    _, n, members = double_coset(rs, lam)
    rhs = HeckeElement(rs, "affine-T", {x: Q ** (length - n.length) for x, length in members})
    return lhs == rhs


def schur_spherical_T(rs: RootSystem, lam: Sequence[int], cutoff: int | None = None) -> HeckeElement:
    """q^-l(w0) W_0(q^2) s_lam 1_0 in the affine-T basis."""
    lam = tuple(lam)
    w0 = rs.longest_element
    s = spherical_of(rs, schur(rs, lam))
    scale = RationalFunction(Q ** (-w0.length) * _poincare_q(rs, 2))
    return spherical_to_hecke(s, cutoff).scale(scale)


def kl_schur_check(rs: RootSystem, lam: Sequence[int], cutoff: int | None = None) -> bool:
    """q^-l(w0) W_0(q^2) s_lam 1_0 equals the KL basis element C'_{n_lam}."""
    lam = tuple(lam)
    return schur_spherical_T(rs, lam, cutoff) == kl_element(n_element(rs, lam), cutoff)


def center_check(rs: RootSystem, f: GroupAlgebraElement, probes: Iterable[HeckeElement] | None = None) -> bool:
    """True when f (as sum of c x^mu in the Bernstein basis) commutes with every probe."""
    h = from_group_algebra(rs, f)
    if probes is None:
        probes = [bernstein_T(rs, i) for i in range(rs.rank)]
        basis = rs.fundamental_weights if not rs.is_gl else [
            tuple(int(j == k) for j in range(rs.dim)) for k in range(rs.dim)]
        probes += [bernstein_x(rs, om) for om in basis]
    return all(h * p == p * h for p in probes)

"""Exact coefficient rings and the group algebra K[P].

Everything here is integer arithmetic.  ``LaurentPoly`` is a sparse
univariate Laurent polynomial tagged with its variable name ("t" or "q");
``RationalFunction`` is a plain numerator/denominator pair used where the
Hecke symmetrizers force a division; ``GroupAlgebraElement`` maps weights
(integer tuples) to ``LaurentPoly`` coefficients.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Callable, Iterable, Iterator, Mapping

if TYPE_CHECKING:  # pragma: no cover
    from .root_data import RootSystem, WeylElement

Weight = tuple[int, ...]


class LaurentPoly:
    """Sparse Laurent polynomial in one variable with integer coefficients."""

    __slots__ = ("var", "_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None, var: str = "t"):
        self.var = var
        self._c = {e: c for e, c in (coeffs or {}).items() if c}
        self._hash = None

    # constructors
    @classmethod
    def const(cls, c: int, var: str = "t") -> "LaurentPoly":
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, e: int, c: int = 1, var: str = "t") -> "LaurentPoly":
        return cls({e: c}, var)

    @classmethod
    def gen(cls, var: str = "t") -> "LaurentPoly":
        return cls({1: 1}, var)

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int], var: str = "t", low: int = 0) -> "LaurentPoly":
        return cls({low + i: c for i, c in enumerate(coeffs)}, var)

    # basic views
    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._c.items()))

    def coeff(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_constant(self) -> bool:
        return all(e == 0 for e in self._c)

    def degree(self) -> int:
        if not self._c:
            raise ValueError("degree of zero polynomial")
        return max(self._c)

    def low_degree(self) -> int:
        if not self._c:
            raise ValueError("low degree of zero polynomial")
        return min(self._c)

    def coefficients(self) -> list[int]:
        """Dense coefficient list from degree 0 up (polynomials only)."""
        if not self._c:
            return []
        if self.low_degree() < 0:
            raise ValueError("negative exponents present")
        return [self._c.get(e, 0) for e in range(self.degree() + 1)]

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._c.values())

    # coercion
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.var != self.var and not (other.is_constant() or self.is_constant()):
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other}, self.var)
        return NotImplemented

    def _var_with(self, other: "LaurentPoly") -> str:
        if self.is_constant() and not other.is_constant():
            return other.var
        return self.var

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self._var_with(other))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._c.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out, self._var_with(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._c) == 1:
                (e, c), = self._c.items()
                if c in (1, -1):
                    return LaurentPoly({e * k: c ** (-k)}, self.var)
            raise ValueError("only monomial units can be inverted")
        out = LaurentPoly.const(1, self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        if isinstance(other, LaurentPoly):
            if self._c != other._c:
                return False
            return self.var == other.var or self.is_constant()
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            tag = None if self.is_constant() else self.var
            self._hash = hash((tag, frozenset(self._c.items())))
        return self._hash

    def __call__(self, value):
        """Evaluate at an int, Fraction or another LaurentPoly."""
        if isinstance(value, LaurentPoly):
            out = LaurentPoly({}, value.var)
            for e, c in self._c.items():
                out = out + c * value ** e
            return out
        total = 0
        for e, c in self._c.items():
            total += c * (Fraction(value) ** e if e < 0 else value ** e)
        return total

    # substitutions
    def substitute_power(self, k: int, var: str | None = None) -> "LaurentPoly":
        """x^e -> y^(k e)."""
        return LaurentPoly({k * e: c for e, c in self._c.items()}, var or self.var)

    def bar(self) -> "LaurentPoly":
        return self.substitute_power(-1)

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: c for e, c in self._c.items()}, self.var)

    def truncate(self, max_degree: int) -> "LaurentPoly":
        return LaurentPoly({e: c for e, c in self._c.items() if e <= max_degree}, self.var)

    def negative_part(self) -> "LaurentPoly":
        return LaurentPoly({e: c for e, c in self._c.items() if e < 0}, self.var)

    # division
    def divmod_exact(self, other: "LaurentPoly | int") -> tuple["LaurentPoly", bool]:
        """Return (quotient, exact?) for Laurent division by ``other``."""
        other = self._coerce(other)
        if not other._c:
            raise ZeroDivisionError("division by zero polynomial")
        if not self._c:
            return LaurentPoly({}, self.var), True
        ma, mb = self.low_degree(), other.low_degree()
        a = {e - ma: c for e, c in self._c.items()}
        b = {e - mb: c for e, c in other._c.items()}
        db = max(b)
        lead = b[db]
        quot: dict[int, int] = {}
        while a:
            da = max(a)
            if da < db:
                return LaurentPoly(quot, self._var_with(other)).shift(ma - mb), False
            c = a[da]
            if c % lead:
                return LaurentPoly(quot, self._var_with(other)).shift(ma - mb), False
            k = c // lead
            quot[da - db] = k
            for e, cb in b.items():
                ee = e + da - db
                v = a.get(ee, 0) - k * cb
                if v:
                    a[ee] = v
                else:
                    a.pop(ee, None)
        return LaurentPoly(quot, self._var_with(other)).shift(ma - mb), True

    def exact_div(self, other: "LaurentPoly | int") -> "LaurentPoly":
        q, ok = self.divmod_exact(other)
        if not ok:
            raise ArithmeticError(f"({self}) is not divisible by ({other})")
        return q

    def series_inverse(self, max_degree: int) -> "LaurentPoly":
        """Power series inverse modulo var^(max_degree+1); needs unit constant term."""
        if self._c and self.low_degree() < 0:
            raise ValueError("series inverse needs a power series")
        c0 = self.coeff(0)
        if c0 not in (1, -1):
            raise ArithmeticError("constant term is not a unit")
        inv = {0: c0}
        for n in range(1, max_degree + 1):
            s = 0
            for e, c in self._c.items():
                if 0 < e <= n:
                    s += c * inv.get(n - e, 0)
            inv[n] = -s * c0
        return LaurentPoly(inv, self.var)

    # io
    def to_json(self) -> dict:
        return {"var": self.var, "terms": [[e, c] for e, c in self.items()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in data["terms"]}, data.get("var", "t"))

    def __repr__(self):
        return f"LaurentPoly({str(self)!r}, var={self.var!r})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                mono = ""
            elif e == 1:
                mono = self.var
            else:
                mono = f"{self.var}^{e}"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def poly(coeffs: Mapping[int, int] | Iterable[int], var: str = "t") -> LaurentPoly:
    """Shorthand: ``poly([1, 1])`` is 1 + t, ``poly({-1: 1}, "q")`` is q^-1."""
    if isinstance(coeffs, Mapping):
        return LaurentPoly(coeffs, var)
    return LaurentPoly.from_coefficients(coeffs, var)


def t_from_q(p: LaurentPoly, power: int) -> LaurentPoly:
    """Rewrite a q-polynomial in t where t = q**power (power is 2 or -2)."""
    out = {}
    for e, c in p.items():
        if e % power:
            raise ValueError(f"{p} is not a polynomial in q^{power}")
        out[e // power] = c
    return LaurentPoly(out, "t")


def q_from_t(p: LaurentPoly, power: int) -> LaurentPoly:
    """Rewrite a t-polynomial in q where t = q**power."""
    return p.substitute_power(power, "q")


class RationalFunction:
    """Quotient num/den of Laurent polynomials in one variable.

    Denominators are normalized to a genuine polynomial with nonzero
    constant term and positive leading coefficient.  Exact division is
    attempted after each operation; no gcd is taken.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, var: str = "q"):
        num = num if isinstance(num, LaurentPoly) else LaurentPoly.const(num, var)
        den = den if isinstance(den, LaurentPoly) else LaurentPoly.const(den, num.var)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        m = den.low_degree()
        den = den.shift(-m)
        num = num.shift(-m)
        if den.coeff(den.degree()) < 0:
            num, den = -num, -den
        if not den.is_constant() or den.coeff(0) != 1:
            quot, ok = num.divmod_exact(den)
            if ok:
                num, den = quot, LaurentPoly.const(1, num.var)
        self.num = num
        self.den = den

    @staticmethod
    def lift(x, var: str = "q") -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        return RationalFunction(x, 1, var)

    def is_polynomial(self) -> bool:
        return self.den == 1

    def as_poly(self) -> LaurentPoly:
        if not self.is_polynomial():
            raise ArithmeticError(f"{self} is not a Laurent polynomial")
        return self.num

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, other):
        if not isinstance(other, (RationalFunction, LaurentPoly, int)):
            return NotImplemented
        other = RationalFunction.lift(other, self.num.var)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalFunction.lift(other, self.num.var))

    def __rsub__(self, other):
        return RationalFunction.lift(other, self.num.var) + (-self)

    def __mul__(self, other):
        if not isinstance(other, (RationalFunction, LaurentPoly, int)):
            return NotImplemented
        other = RationalFunction.lift(other, self.num.var)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalFunction.lift(other, self.num.var)
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RationalFunction.lift(other, self.num.var) / self

    def __eq__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            other = RationalFunction.lift(other, self.num.var)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def bar(self) -> "RationalFunction":
        return RationalFunction(self.num.bar(), self.den.bar())

    def __repr__(self):
        if self.is_polynomial():
            return f"RationalFunction({self.num})"
        return f"RationalFunction(({self.num}) / ({self.den}))"

    __str__ = __repr__


Coeff = LaurentPoly


def _as_coeff(c, var: str = "t") -> LaurentPoly:
    if isinstance(c, LaurentPoly):
        return c
    if isinstance(c, int):
        return LaurentPoly.const(c, var)
    raise TypeError(f"unsupported coefficient {c!r}")


class GroupAlgebraElement:
    """Finite sum of c_mu(t) x^mu with mu an integer weight tuple."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Weight, LaurentPoly | int] | None = None):
        out = {}
        for mu, c in (terms or {}).items():
            c = _as_coeff(c)
            if not c.is_zero():
                out[tuple(mu)] = c
        self._terms = out

    @classmethod
    def monomial(cls, mu: Iterable[int], c: LaurentPoly | int = 1) -> "GroupAlgebraElement":
        return cls({tuple(mu): c})

    @classmethod
    def one(cls, dim: int) -> "GroupAlgebraElement":
        return cls({(0,) * dim: 1})

    def items(self):
        return self._terms.items()

    def support(self) -> list[Weight]:
        return list(self._terms)

    def coeff(self, mu: Iterable[int]) -> LaurentPoly:
        return self._terms.get(tuple(mu), LaurentPoly())

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __add__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        out = dict(self._terms)
        for mu, c in other._terms.items():
            out[mu] = out[mu] + c if mu in out else c
        return GroupAlgebraElement(out)

    def __neg__(self):
        return GroupAlgebraElement({mu: -c for mu, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> "GroupAlgebraElement":
        c = _as_coeff(c)
        return GroupAlgebraElement({mu: c * v for mu, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        # accumulate raw exponent dicts; LaurentPoly objects are built once at the end
        vs = {c.var for c in itertools.chain(self._terms.values(), other._terms.values()) if not c.is_constant()}
        if len(vs) > 1:
            raise ValueError(f"variable mismatch: {sorted(vs)}")
        var = vs.pop() if vs else "t"
        right = [(nu, list(d._c.items())) for nu, d in other._terms.items()]
        out: dict[Weight, dict[int, int]] = {}
        for mu, c in self._terms.items():
            left = list(c._c.items())
            for nu, ds in right:
                acc = out.setdefault(tuple(a + b for a, b in zip(mu, nu)), {})
                for e1, c1 in left:
                    for e2, c2 in ds:
                        e = e1 + e2
                        acc[e] = acc.get(e, 0) + c1 * c2
        return GroupAlgebraElement({k: LaurentPoly(v, var) for k, v in out.items()})

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def map_coeffs(self, f: Callable[[LaurentPoly], LaurentPoly]) -> "GroupAlgebraElement":
        return GroupAlgebraElement({mu: f(c) for mu, c in self._terms.items()})

    def specialize(self, value: int) -> "GroupAlgebraElement":
        """Evaluate every coefficient at t = value."""
        return GroupAlgebraElement({mu: int(c(value)) for mu, c in self._terms.items()})

    def bar(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement({tuple(-a for a in mu): c for mu, c in self._terms.items()})

    def w_action(self, w: "WeylElement") -> "GroupAlgebraElement":
        return GroupAlgebraElement({w.act(mu): c for mu, c in self._terms.items()})

    def constant_term(self) -> LaurentPoly:
        for mu, c in self._terms.items():
            if not any(mu):
                return c
        return LaurentPoly()

    def is_invariant(self, rs: "RootSystem") -> bool:
        return all(self.w_action(s) == self for s in rs.simple_reflections())

    def to_json(self) -> list:
        return [[list(mu), c.to_json()] for mu, c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data) -> "GroupAlgebraElement":
        return cls({tuple(mu): LaurentPoly.from_json(c) for mu, c in data})

    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"({c})x^{list(mu)}" for mu, c in sorted(self._terms.items()))


def w_action(w: "WeylElement", f: GroupAlgebraElement) -> GroupAlgebraElement:
    return f.w_action(w)


def bar(f: GroupAlgebraElement) -> GroupAlgebraElement:
    return f.bar()


def constant_term(f: GroupAlgebraElement) -> LaurentPoly:
    return f.constant_term()


# inner products


def _pair_kernel_series(h: int) -> list[LaurentPoly]:
    """Coefficients c_k (k = 0..h+1) of (1-y)(1-1/y)/((1-ty)(1-t/y)) mod t^(h+1).

    The series is symmetric in k -> -k; c_0 = 2/(1+t) and
    c_k = -t^(k-1)(1-t)/(1+t) for k >= 1.
    """
    inv = LaurentPoly.from_coefficients([1, 1]).series_inverse(h)
    c0 = (2 * inv).truncate(h)
    tail = (LaurentPoly.from_coefficients([1, -1]) * inv).truncate(h)
    out = [c0]
    for k in range(1, h + 2):
        out.append((-tail.shift(k - 1)).truncate(h))
    return out


@lru_cache(maxsize=64)
def _kernel(rs: "RootSystem", h: int) -> dict[Weight, LaurentPoly]:
    """prod over R of (1-x^a)/(1-t x^a), exact modulo t^(h+1)."""
    series = _pair_kernel_series(h)
    zero = (0,) * rs.dim
    kernel: dict[Weight, LaurentPoly] = {zero: LaurentPoly.const(1)}
    for alpha in rs.positive_roots:
        factor = {}
        for k, c in enumerate(series):
            if c.is_zero():
                continue
            for sgn in ((1,) if k == 0 else (1, -1)):
                factor[tuple(sgn * k * a for a in alpha)] = c
        new: dict[Weight, LaurentPoly] = {}
        for mu, c in kernel.items():
            lo = c.low_degree()
            for nu, d in factor.items():
                if lo + d.low_degree() > h:
                    continue
                key = tuple(a + b for a, b in zip(mu, nu))
                v = (c * d).truncate(h)
                if key in new:
                    v = new[key] + v
                if v.is_zero():
                    new.pop(key, None)
                else:
                    new[key] = v
        kernel = new
    return kernel


def inner_product_t(rs: "RootSystem", f: GroupAlgebraElement, g: GroupAlgebraElement,
                    height_bound: int = 16) -> LaurentPoly:
    """The t-form (1/|W|)[f g-bar prod_R (1-x^a)/(1-t x^a)]_1.

    The value is a power series in t; the result is exact through degree
    ``height_bound`` and truncated there.  For W-invariant f and g the
    two-sided kernel is replaced by the one-sided one:
    (1/|W|)[phi prod_R ...]_1 = W_0(t)^-1 [phi prod_{a>0} (1-x^a)/(1-t x^a)]_1,
    which follows from sum_w w(prod_{a>0} (1-t x^-a)/(1-x^-a)) = W_0(t).
    """
    h = height_bound
    prod = f * g.bar()
    if f.is_invariant(rs) and g.is_invariant(rs):
        total = LaurentPoly()
        for mu, c in prod.items():
            k = positive_kernel(rs, tuple(-a for a in mu))
            if k:
                total = total + c * k
        return (total * rs.poincare_polynomial().series_inverse(h)).truncate(h)
    kernel = _kernel(rs, h)
    total = LaurentPoly()
    for mu, c in prod.items():
        k = kernel.get(tuple(-a for a in mu))
        if k is not None:
            total = total + (c * k).truncate(h)
    return total.exact_div(rs.weyl_order())


def inner_product_0(rs: "RootSystem", f: GroupAlgebraElement, g: GroupAlgebraElement) -> RationalFunction:
    """(1/|W|)[f g-bar prod_R (1-x^a)]_1."""
    dim = rs.dim
    k = GroupAlgebraElement.one(dim)
    for a in rs.positive_roots:
        k = k * (GroupAlgebraElement.one(dim) - GroupAlgebraElement.monomial(a))
        k = k * (GroupAlgebraElement.one(dim) - GroupAlgebraElement.monomial(tuple(-x for x in a)))
    return RationalFunction((f * g.bar() * k).constant_term(), rs.weyl_order())


def inner_product_1(rs: "RootSystem", f: GroupAlgebraElement, g: GroupAlgebraElement) -> RationalFunction:
    """(1/|W|)[f g-bar]_1."""
    return RationalFunction((f * g.bar()).constant_term(), rs.weyl_order())


# q-analogue of Kostant's partition function

_PF_CACHE: dict = {}


def partition_function(rs: "RootSystem", gamma: Iterable[int],
                       order: Iterable[int] | None = None) -> LaurentPoly:
    """Coefficient of x^gamma in prod_{a>0} 1/(1 - t x^a).

    ``gamma`` is a lattice vector; ``order`` permutes the positive roots
    used by the dynamic programme (the answer does not depend on it).
    """
    coords = rs.root_coordinates(tuple(gamma))
    if coords is None or any(c.denominator != 1 or c < 0 for c in coords):
        return LaurentPoly()
    roots = [rs.positive_root_coords[i] for i in (order or range(len(rs.positive_roots)))]
    key = (rs.name, tuple(roots))
    memo = _PF_CACHE.setdefault(key, {})
    return _pf(roots, len(roots), tuple(int(c) for c in coords), memo)


def positive_kernel(rs: "RootSystem", gamma: Iterable[int]) -> LaurentPoly:
    """Coefficient of x^gamma in prod_{a>0} (1 - x^a)/(1 - t x^a), a polynomial in t."""
    coords = rs.root_coordinates(tuple(gamma))
    if coords is None or any(c.denominator != 1 or c < 0 for c in coords):
        return LaurentPoly()
    roots = tuple(rs.positive_root_coords)
    memo = _PK_CACHE.setdefault((rs.name, roots), {})
    return _pk(roots, len(roots), tuple(int(c) for c in coords), memo)


_PK_CACHE: dict = {}


def _pk(roots, k, gamma, memo) -> LaurentPoly:
    # (1 - x^a)/(1 - t x^a) = 1 + sum_{r >= 1} (t^r - t^(r-1)) x^(r a)
    if not any(gamma):
        return LaurentPoly.const(1)
    if k == 0:
        return LaurentPoly()
    hit = memo.get((k, gamma))
    if hit is not None:
        return hit
    alpha = roots[k - 1]
    total = _pk(roots, k - 1, gamma, memo)
    r = 1
    cur = tuple(c - a for c, a in zip(gamma, alpha))
    while all(c >= 0 for c in cur):
        sub = _pk(roots, k - 1, cur, memo)
        if sub:
            total = total + sub * LaurentPoly({r: 1, r - 1: -1})
        r += 1
        cur = tuple(c - a for c, a in zip(cur, alpha))
    memo[(k, gamma)] = total
    return total


def _pf(roots, k, gamma, memo) -> LaurentPoly:
    if not any(gamma):
        return LaurentPoly.const(1)
    if k == 0:
        return LaurentPoly()
    hit = memo.get((k, gamma))
    if hit is not None:
        return hit
    alpha = roots[k - 1]
    total = LaurentPoly()
    r = 0
    cur = gamma
    while all(c >= 0 for c in cur):
        sub = _pf(roots, k - 1, cur, memo)
        if sub:
            total = total + sub.shift(r)
        r += 1
        cur = tuple(c - a for c, a in zip(cur, alpha))
    memo[(k, gamma)] = total
    return total

"""Extended affine Weyl group W~ = {w t_lam : w in W, lam in P}.

Elements are stored in the normal form (w, lam) meaning w t_lam, so
t_lam w = w t_{w^-1 lam}.  The affine simple reflection is
s_0 = t_phi s_phi, where phi is the positive root whose coroot is the
highest coroot; the fundamental alcove is cut out by <x, a_i^vee> > 0 and
<x, phi^vee> < 1.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .root_data import RootSystem, WeylElement, Weight, _add, _sub, _dot

DEFAULT_LENGTH_CUTOFF = 14


class CutoffExceeded(RuntimeError):
    pass


def length_cutoff() -> int:
    return int(os.environ.get("KOSTKA_LENGTH_CUTOFF", DEFAULT_LENGTH_CUTOFF))


class AffineElement:
    __slots__ = ("w", "lam", "_length", "_reduced")

    def __init__(self, w: WeylElement, lam: Sequence[int]):
        if w.rs.is_gl:
            raise ValueError("affine Weyl groups are built on Cartan-type root systems, not GL_n")
        self.w = w
        self.lam = tuple(lam)
        self._length = None
        self._reduced = None

    @property
    def rs(self) -> RootSystem:
        return self.w.rs

    @classmethod
    def translation(cls, rs: RootSystem, lam: Sequence[int]) -> "AffineElement":
        return cls(rs.identity(), lam)

    @classmethod
    def finite(cls, w: WeylElement) -> "AffineElement":
        return cls(w, w.rs.zero())

    @classmethod
    def identity(cls, rs: RootSystem) -> "AffineElement":
        return cls(rs.identity(), rs.zero())

    def key(self):
        return (self.w.key, self.lam)

    def __eq__(self, other):
        return isinstance(other, AffineElement) and other.rs is self.rs and other.key() == self.key()

    def __hash__(self):
        return hash(self.key())

    def __mul__(self, other: "AffineElement") -> "AffineElement":
        # (w t_lam)(v t_mu) = wv t_{v^-1 lam + mu}
        v = other.w
        return AffineElement(self.w * v, _add(v.inverse().act(self.lam), other.lam))

    def inverse(self) -> "AffineElement":
        return AffineElement(self.w.inverse(), tuple(-x for x in self.w.act(self.lam)))

    def is_identity(self) -> bool:
        return self.w.is_identity() and not any(self.lam)

    @property
    def length(self) -> int:
        """sum over a > 0 of |<lam, a^vee> + chi(w a)|, chi = 1 on negative roots."""
        if self._length is None:
            rs, total = self.rs, 0
            for k, a in enumerate(rs.positive_roots):
                chi = 0 if rs.is_positive_root(self.w.act(a)) else 1
                total += abs(_dot(self.lam, rs.coroots[k]) + chi)
            self._length = total
        return self._length

    def act(self, x: Sequence) -> tuple:
        """(w t_lam)(x) = w(x + lam) on points (Fractions allowed)."""
        y = tuple(a + b for a, b in zip(x, self.lam))
        cols = self.w.matrix
        out = [0] * len(y)
        for c, col in zip(y, cols):
            for j, m in enumerate(col):
                out[j] += c * m
        return tuple(out)

    def in_affine_weyl(self) -> bool:
        """True when the translation part lies in the root lattice."""
        return self.rs.in_root_lattice(self.lam)

    def reduced_word(self) -> tuple[tuple[int, ...], "AffineElement"]:
        """(i_1..i_p, g) with self = s_{i_1} ... s_{i_p} g and l(g) = 0."""
        if self._reduced is None:
            rs = self.rs
            gens = affine_generators(rs)
            word, cur = [], self
            while cur.length > 0:
                for i, s in enumerate(gens):
                    nxt = s * cur
                    if nxt.length < cur.length:
                        word.append(i)
                        cur = nxt
                        break
                else:  # pragma: no cover
                    raise AssertionError("no descent found for element of positive length")
            self._reduced = (tuple(word), cur)
        return self._reduced

    def omega_part(self) -> "AffineElement":
        return self.reduced_word()[1]

    def to_json(self) -> dict:
        return {"w": [i + 1 for i in self.w.word], "t": list(self.lam)}

    @classmethod
    def from_json(cls, rs: RootSystem, data) -> "AffineElement":
        return cls(rs.element(i - 1 for i in data["w"]), rs.check_weight(data["t"]))

    def __repr__(self):
        word, g = self.reduced_word()
        body = "".join(f"s{i}" for i in word) or "1"
        if not g.is_identity():
            body += f"*g{list(g.lam)}"
        return f"AffineElement({body})"


def aff_multiply(x: AffineElement, y: AffineElement) -> AffineElement:
    return x * y


def aff_length(x: AffineElement) -> int:
    return x.length


@lru_cache(maxsize=None)
def affine_generators(rs: RootSystem) -> tuple[AffineElement, ...]:
    """(s_0, s_1, ..., s_n) as affine elements."""
    phi = rs.phi
    s_phi = rs.reflection(rs.highest_root)
    s0 = AffineElement.translation(rs, phi) * AffineElement.finite(s_phi)
    return (s0,) + tuple(AffineElement.finite(s) for s in rs.simple_reflections())


def affine_reflection(rs: RootSystem, alpha: int, k: int) -> AffineElement:
    """Reflection in the hyperplane <x, alpha^vee> = k, i.e. t_{k alpha} s_alpha."""
    a = rs.positive_roots[alpha]
    return AffineElement.translation(rs, tuple(k * x for x in a)) * AffineElement.finite(rs.reflection(alpha))


def element_from_word(rs: RootSystem, word: Iterable[int], g: AffineElement | None = None) -> AffineElement:
    gens = affine_generators(rs)
    out = AffineElement.identity(rs)
    for i in word:
        out = out * gens[i]
    return out * g if g is not None else out


def phi_check_coefficients(rs: RootSystem) -> list[int]:
    """c_i with phi^vee = sum c_i a_i^vee."""
    cv = rs.coroots[rs.highest_root]
    if rs.is_gl:
        raise ValueError("not defined in GL_n mode")
    return list(cv)


def omega_elements(rs: RootSystem) -> list[AffineElement]:
    """The length-zero elements: the identity and g_i = t_{w_i} w_i w_0 for c_i = 1."""
    out = [AffineElement.identity(rs)]
    w0 = rs.longest_element
    for i, c in enumerate(phi_check_coefficients(rs)):
        if c == 1:
            om = rs.fundamental_weights[i]
            wi = rs.longest_in_stabilizer(om)
            out.append(AffineElement.translation(rs, om) * AffineElement.finite(wi * w0))
    return out


def n_element(rs: RootSystem, lam: Sequence[int]) -> AffineElement:
    """n_lam = t_{w0 lam} w0, the longest element of W t_lam W."""
    w0 = rs.longest_element
    return AffineElement.translation(rs, w0.act(lam)) * AffineElement.finite(w0)


def m_element(rs: RootSystem, lam: Sequence[int]) -> AffineElement:
    """m_lam = t_lam w_lam w0, the shortest element of W t_lam W."""
    w = rs.longest_in_stabilizer(lam) * rs.longest_element
    return AffineElement.translation(rs, lam) * AffineElement.finite(w)


def double_coset(rs: RootSystem, lam: Sequence[int]):
    """(m_lam, n_lam, [(x, l(x))]) for the double coset W t_lam W."""
    lam = tuple(lam)
    if not rs.is_dominant(lam):
        raise ValueError(f"{list(lam)} is not dominant")
    t = AffineElement.translation(rs, lam)
    els = rs.elements()
    members = {}
    for u in els:
        ut = AffineElement.finite(u) * t
        for v in els:
            x = ut * AffineElement.finite(v)
            members[x] = x.length
    ordered = sorted(members.items(), key=lambda p: (p[1], p[0].w.word, p[0].lam))
    return m_element(rs, lam), n_element(rs, lam), ordered


def bruhat_leq(x: AffineElement, y: AffineElement, cutoff: int | None = None) -> bool:
    """Bruhat order; elements in different Omega-cosets are incomparable."""
    cutoff = length_cutoff() if cutoff is None else cutoff
    if y.length > cutoff:
        raise CutoffExceeded(f"affine length {y.length} exceeds cutoff {cutoff}")
    if x.omega_part() != y.omega_part():
        return False
    return _bruhat(x, y)


def _bruhat(x: AffineElement, y: AffineElement) -> bool:
    if x.length > y.length:
        return False
    if x.length == y.length:
        return x == y
    word, _ = y.reduced_word()
    s = affine_generators(y.rs)[word[0]]
    sy = s * y
    sx = s * x
    if sx.length < x.length:
        return _bruhat(sx, sy)
    return _bruhat(x, sy)


def lower_interval(y: AffineElement, cutoff: int | None = None) -> list[AffineElement]:
    """All x <= y, via products of subwords of one reduced word of y."""
    cutoff = length_cutoff() if cutoff is None else cutoff
    if y.length > cutoff:
        raise CutoffExceeded(f"affine length {y.length} exceeds cutoff {cutoff}")
    word, g = y.reduced_word()
    gens = affine_generators(y.rs)
    current = {g}
    for i in reversed(word):
        s = gens[i]
        current |= {s * z for z in current}
    return sorted(current, key=lambda z: (z.length, z.reduced_word()[0]))


def separating_hyperplanes(x: AffineElement) -> int:
    """Count hyperplanes <., a^vee> = k separating A from x^{-1} A (rational geometry)."""
    rs = x.rs
    h = max(rs.pairing(rs.rho, k) for k in range(len(rs.positive_roots)))
    a = tuple(Fraction(c, h + 1) for c in rs.rho)
    b = x.inverse().act(a)
    count = 0
    for cv in rs.coroots:
        lo, hi = sorted((_dot(a, cv), _dot(b, cv)))
        # integers strictly between; the points are never on a wall
        count += len(range(int(_floor(lo)) + 1, int(_ceil(hi))))
    return count


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)

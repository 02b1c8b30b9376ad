"""Root systems of types A, B, C, D, G2 and the GL_n lattice, with Weyl groups.

Two coordinate conventions share one class.  For a Cartan type the lattice
is P in fundamental-weight coordinates, so <lam, a_i^vee> is lam[i].  In
GL_n mode the lattice is Z^n, roots are e_i - e_j, and rho is replaced by
delta = (n-1, ..., 1, 0), which pairs to 1 with every simple coroot just
like rho does.

Coroots are stored as integer functionals, so every pairing is a dot
product.
"""

from __future__ import annotations

import os
from collections import deque
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .polyring import LaurentPoly

Weight = tuple[int, ...]

DEFAULT_RANK_GUARD = 6


class UnsupportedRootSystem(ValueError):
    pass


class TooLarge(RuntimeError):
    pass


def rank_guard() -> int:
    return int(os.environ.get("KOSTKA_RANK_GUARD", DEFAULT_RANK_GUARD))


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _sub(a: Sequence[int], b: Sequence[int]) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def _add(a: Sequence[int], b: Sequence[int]) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def _scale(k: int, a: Sequence[int]) -> Weight:
    return tuple(k * x for x in a)


def _simple_roots_eps(cartan_type: str, rank: int) -> list[list[int]]:
    n = rank
    if cartan_type == "A":
        if n < 1:
            raise UnsupportedRootSystem(f"unsupported: A{n}")
        return [[1 if k == i else -1 if k == i + 1 else 0 for k in range(n + 1)] for i in range(n)]
    if cartan_type in ("B", "C", "D"):
        if (cartan_type in "BC" and n < 2) or (cartan_type == "D" and n < 3):
            raise UnsupportedRootSystem(f"unsupported: {cartan_type}{n}")
        first = {"B": [1] + [0] * (n - 1), "C": [2] + [0] * (n - 1),
                 "D": [1, 1] + [0] * (n - 2)}[cartan_type]
        rest = [[-1 if k == i - 1 else 1 if k == i else 0 for k in range(n)] for i in range(1, n)]
        return [first] + rest
    if cartan_type == "G":
        if n != 2:
            raise UnsupportedRootSystem(f"unsupported: G{n}")
        return [[1, -1, 0], [-2, 1, 1]]
    raise UnsupportedRootSystem(f"unsupported cartan type {cartan_type!r}")


class RootSystem:
    """Immutable root datum; build with :func:`build_root_system` or :func:`gl`."""

    def __init__(self, name: str, cartan_type: str, rank: int, dim: int,
                 cartan_matrix: list[list[int]], simple_roots: list[Weight],
                 positive_roots: list[Weight], positive_root_coords: list[Weight],
                 coroots: list[Weight], rho: Weight, highest_root: int,
                 fundamental_weights: list[Weight]):
        self.name = name
        self.cartan_type = cartan_type
        self.rank = rank
        self.dim = dim
        self.cartan_matrix = tuple(tuple(r) for r in cartan_matrix)
        self.simple_roots = tuple(simple_roots)
        self.positive_roots = tuple(positive_roots)
        self.positive_root_coords = tuple(positive_root_coords)
        self.coroots = tuple(coroots)
        self.simple_coroots = self.coroots[:rank]
        self.rho = rho
        self.highest_root = highest_root
        self.fundamental_weights = tuple(fundamental_weights)
        self.two_rho_check = tuple(sum(c[k] for c in self.coroots) for k in range(dim))
        self._root_index = {a: i for i, a in enumerate(self.positive_roots)}
        self._elements: dict[Weight, WeylElement] = {}

    @property
    def is_gl(self) -> bool:
        return self.cartan_type == "GL"

    def __repr__(self):
        return f"RootSystem({self.name})"

    def __eq__(self, other):
        return isinstance(other, RootSystem) and other.name == self.name

    def __hash__(self):
        return hash(self.name)

    # pairings
    def pairing(self, lam: Sequence[int], alpha: int) -> int:
        """<lam, alpha^vee> for the positive root with index ``alpha``."""
        if not 0 <= alpha < len(self.positive_roots):
            raise IndexError(f"no positive root with index {alpha}")
        return _dot(lam, self.coroots[alpha])

    def simple_pairing(self, lam: Sequence[int], i: int) -> int:
        return _dot(lam, self.simple_coroots[i])

    def pair_coroot(self, lam: Sequence[int], root: Sequence[int]) -> int:
        """<lam, beta^vee> for any root beta (positive or negative)."""
        root = tuple(root)
        if root in self._root_index:
            return _dot(lam, self.coroots[self._root_index[root]])
        neg = tuple(-a for a in root)
        if neg in self._root_index:
            return -_dot(lam, self.coroots[self._root_index[neg]])
        raise ValueError(f"{root} is not a root")

    def two_rho_check_pairing(self, lam: Sequence[int]) -> int:
        return _dot(lam, self.two_rho_check)

    def rho_check_pairing(self, lam: Sequence[int]) -> int:
        v = self.two_rho_check_pairing(lam)
        if v % 2:
            raise ValueError(f"<{list(lam)}, rho^vee> is half-integral")
        return v // 2

    def root_index(self, root: Sequence[int]) -> int:
        return self._root_index[tuple(root)]

    def is_positive_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self._root_index

    def is_root(self, v: Sequence[int]) -> bool:
        v = tuple(v)
        return v in self._root_index or tuple(-a for a in v) in self._root_index

    @property
    def phi(self) -> Weight:
        return self.positive_roots[self.highest_root]

    def zero(self) -> Weight:
        return (0,) * self.dim

    # lattice helpers
    def check_weight(self, lam: Iterable[int]) -> Weight:
        lam = tuple(int(x) for x in lam)
        if len(lam) != self.dim:
            raise ValueError(f"weight {list(lam)} has length {len(lam)}, expected {self.dim} for {self.name}")
        return lam

    def root_coordinates(self, v: Sequence[int]) -> tuple[Fraction, ...] | None:
        """Coordinates of v in the simple roots, or None if v is outside their span."""
        v = tuple(v)
        if self.is_gl:
            if sum(v) != 0:
                return None
            out, s = [], 0
            for x in v[:-1]:
                s += x
                out.append(Fraction(s))
            return tuple(out)
        return tuple(sum(Fraction(v[j]) * self._cartan_inverse[j][i] for j in range(self.rank))
                     for i in range(self.rank))

    @cached_property
    def _cartan_inverse(self) -> list[list[Fraction]]:
        # simple root i has fundamental coordinates A[i]; solve v = c A for c
        n = self.rank
        m = [[Fraction(self.cartan_matrix[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
             for i in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if m[r][col] != 0)
            m[col], m[piv] = m[piv], m[col]
            p = m[col][col]
            m[col] = [x / p for x in m[col]]
            for r in range(n):
                if r != col and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [a - f * b for a, b in zip(m[r], m[col])]
        inv = [row[n:] for row in m]
        # rows of inv give (A^{-1})_{ij}; v = c A  =>  c = v A^{-1}
        return inv

    def in_root_lattice(self, v: Sequence[int]) -> bool:
        c = self.root_coordinates(v)
        return c is not None and all(x.denominator == 1 for x in c)

    def from_root_coordinates(self, c: Sequence[int]) -> Weight:
        out = self.zero()
        for ci, a in zip(c, self.simple_roots):
            out = _add(out, _scale(ci, a))
        return out

    def is_dominant(self, lam: Sequence[int]) -> bool:
        return all(self.simple_pairing(lam, i) >= 0 for i in range(self.rank))

    def is_regular(self, lam: Sequence[int]) -> bool:
        return all(_dot(lam, c) != 0 for c in self.coroots)

    def reflect(self, lam: Sequence[int], i: int) -> Weight:
        """s_i(lam) = lam - <lam, a_i^vee> a_i."""
        d = self.simple_pairing(lam, i)
        return _sub(lam, _scale(d, self.simple_roots[i])) if d else tuple(lam)

    def reflect_root(self, lam: Sequence[int], alpha: int) -> Weight:
        d = self.pairing(lam, alpha)
        return _sub(lam, _scale(d, self.positive_roots[alpha]))

    # Weyl group
    def identity(self) -> "WeylElement":
        return self.element_from_key(self.rho)

    def element_from_key(self, key: Sequence[int]) -> "WeylElement":
        key = tuple(key)
        el = self._elements.get(key)
        if el is None:
            el = WeylElement(self, key)
            self._elements[key] = el
        return el

    def element(self, word: Iterable[int]) -> "WeylElement":
        key = self.rho
        for i in reversed(list(word)):
            if not 0 <= i < self.rank:
                raise IndexError(f"no simple reflection s_{i + 1} in {self.name}")
            key = self.reflect(key, i)
        return self.element_from_key(key)

    def simple_reflection(self, i: int) -> "WeylElement":
        return self.element([i])

    def simple_reflections(self) -> list["WeylElement"]:
        return [self.simple_reflection(i) for i in range(self.rank)]

    def reflection(self, alpha: int) -> "WeylElement":
        return self.element_from_key(self.reflect_root(self.rho, alpha))

    def weyl_order(self) -> int:
        return self.poincare_polynomial()(1)

    def _guard(self):
        if self.rank > rank_guard():
            raise TooLarge(f"rank {self.rank} of {self.name} exceeds rank guard {rank_guard()}"
                           " (set KOSTKA_RANK_GUARD to raise it)")

    @cached_property
    def _all_elements(self) -> tuple["WeylElement", ...]:
        self._guard()
        seen = {self.rho}
        queue = deque([self.rho])
        while queue:
            key = queue.popleft()
            for i in range(self.rank):
                k2 = self.reflect(key, i)
                if k2 not in seen:
                    seen.add(k2)
                    queue.append(k2)
        els = [self.element_from_key(k) for k in seen]
        els.sort(key=lambda w: (w.length, w.word))
        return tuple(els)

    def elements(self) -> tuple["WeylElement", ...]:
        return self._all_elements

    @cached_property
    def longest_element(self) -> "WeylElement":
        return self.element_from_key(tuple(-x for x in self.rho)) if not self.is_gl else \
            self.element_from_key(tuple(reversed(self.rho)))

    def poincare_polynomial(self, generators: Iterable[int] | None = None) -> LaurentPoly:
        """Sum of t^l(w) over the parabolic subgroup generated by ``generators``."""
        gens = list(range(self.rank)) if generators is None else list(generators)
        if generators is None and self.rank > rank_guard():
            self._guard()
        seen = {self.rho}
        queue = deque([self.rho])
        while queue:
            key = queue.popleft()
            for i in gens:
                k2 = self.reflect(key, i)
                if k2 not in seen:
                    seen.add(k2)
                    queue.append(k2)
        out: dict[int, int] = {}
        for key in seen:
            le = self.element_from_key(key).length
            out[le] = out.get(le, 0) + 1
        return LaurentPoly(out, "t")

    def stabilizer_generators(self, lam: Sequence[int]) -> list[int]:
        if not self.is_dominant(lam):
            raise ValueError("stabilizer generators need a dominant weight")
        return [i for i in range(self.rank) if self.simple_pairing(lam, i) == 0]

    def stabilizer_poincare(self, lam: Sequence[int]) -> LaurentPoly:
        """W_lam(t) = sum over the stabilizer of lam of t^l(w)."""
        lam = tuple(lam)
        if self.is_dominant(lam):
            return self.poincare_polynomial(self.stabilizer_generators(lam))
        out: dict[int, int] = {}
        for w in self.elements():
            if w.act(lam) == lam:
                out[w.length] = out.get(w.length, 0) + 1
        return LaurentPoly(out, "t")

    def longest_in_stabilizer(self, lam: Sequence[int]) -> "WeylElement":
        gens = self.stabilizer_generators(lam)
        key = self.rho
        # walk down the parabolic chamber until every generator is a descent
        changed = True
        while changed:
            changed = False
            for i in gens:
                if self.simple_pairing(key, i) > 0:
                    key = self.reflect(key, i)
                    changed = True
        return self.element_from_key(key)

    def orbit(self, lam: Sequence[int]) -> set[Weight]:
        lam = tuple(lam)
        seen = {lam}
        queue = deque([lam])
        while queue:
            mu = queue.popleft()
            for i in range(self.rank):
                nu = self.reflect(mu, i)
                if nu not in seen:
                    seen.add(nu)
                    queue.append(nu)
        return seen

    def orbit_and_stabilizer(self, lam: Sequence[int]) -> tuple[set[Weight], LaurentPoly]:
        self._guard()
        orb = self.orbit(lam)
        stab = self.stabilizer_poincare(lam)
        if len(orb) * stab(1) != self.weyl_order():
            raise AssertionError("orbit-stabilizer count mismatch")
        return orb, stab

    def dominant_representative(self, lam: Sequence[int]) -> tuple[Weight, "WeylElement"]:
        """(lam+, w) with lam+ dominant, w lam+ = lam and w of minimal length."""
        lam = tuple(lam)
        word: list[int] = []
        cur = lam
        while True:
            i = next((i for i in range(self.rank) if self.simple_pairing(cur, i) < 0), None)
            if i is None:
                break
            cur = self.reflect(cur, i)
            word.append(i)
        return cur, self.element(word)

    def dominance_leq(self, mu: Sequence[int], lam: Sequence[int]) -> bool:
        """mu <= lam iff lam - mu is a nonnegative integer combination of simple roots."""
        c = self.root_coordinates(_sub(lam, mu))
        return c is not None and all(x.denominator == 1 and x >= 0 for x in c)

    def dominant_weights_below(self, lam: Sequence[int]) -> list[Weight]:
        """All dominant mu <= lam, sorted by decreasing <mu, 2 rho^vee>."""
        lam = tuple(lam)
        if not self.is_dominant(lam):
            raise ValueError(f"{list(lam)} is not dominant")
        seen = {lam}
        queue = deque([lam])
        while queue:
            mu = queue.popleft()
            for a in self.positive_roots:
                nu = _sub(mu, a)
                if nu not in seen and self.is_dominant(nu):
                    seen.add(nu)
                    queue.append(nu)
        return sorted(seen, key=lambda m: (-self.two_rho_check_pairing(m), tuple(-x for x in m)))

    def dot_act(self, w: "WeylElement", lam: Sequence[int]) -> Weight:
        return _sub(w.act(_add(lam, self.rho)), self.rho)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "cartan_matrix": [list(r) for r in self.cartan_matrix],
            "positive_roots": [
                {"weight": list(a), "simple": list(c), "coroot": list(cv)}
                for a, c, cv in zip(self.positive_roots, self.positive_root_coords, self.coroots)
            ],
            "rho": list(self.rho),
            "highest_root": self.highest_root,
            "weyl_order": self.weyl_order() if self.rank <= rank_guard() else None,
        }


class WeylElement:
    """Element w of W, keyed by w(rho) (rho is regular, so the key is faithful)."""

    __slots__ = ("rs", "key", "_word", "_matrix", "__weakref__")

    def __init__(self, rs: RootSystem, key: Weight):
        self.rs = rs
        self.key = key
        self._word = None
        self._matrix = None

    @property
    def word(self) -> tuple[int, ...]:
        """Lexicographically least reduced word (0-based simple indices)."""
        if self._word is None:
            rs, key, word = self.rs, self.key, []
            while True:
                i = next((i for i in range(rs.rank) if rs.simple_pairing(key, i) < 0), None)
                if i is None:
                    break
                word.append(i)
                key = rs.reflect(key, i)
            if key != rs.rho:
                raise AssertionError("key is not in the W-orbit of rho")
            self._word = tuple(word)
        return self._word

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Columns are images of the lattice basis vectors."""
        if self._matrix is None:
            cols = []
            for k in range(self.rs.dim):
                v = tuple(int(j == k) for j in range(self.rs.dim))
                for i in reversed(self.word):
                    v = self.rs.reflect(v, i)
                cols.append(v)
            self._matrix = tuple(cols)
        return self._matrix

    def act(self, lam: Sequence[int]) -> Weight:
        out = [0] * self.rs.dim
        for x, col in zip(lam, self.matrix):
            if x:
                for j, c in enumerate(col):
                    out[j] += x * c
        return tuple(out)

    def dot_act(self, lam: Sequence[int]) -> Weight:
        return self.rs.dot_act(self, lam)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if other.rs is not self.rs:
            raise ValueError("elements of different Weyl groups")
        return self.rs.element_from_key(self.act(other.key))

    def inverse(self) -> "WeylElement":
        return self.rs.element(reversed(self.word))

    def is_identity(self) -> bool:
        return self.key == self.rs.rho

    def inversion_set(self) -> set[Weight]:
        """R(w) = {a > 0 : w a < 0}."""
        return {a for a in self.rs.positive_roots if not self.rs.is_positive_root(self.act(a))}

    def inversion_set_from_word(self) -> list[Weight]:
        """a_{i_p}, s_{i_p} a_{i_{p-1}}, ... along the reduced word."""
        out = []
        word = self.word
        for k in range(len(word) - 1, -1, -1):
            v = self.rs.simple_roots[word[k]]
            for j in range(k + 1, len(word)):
                v = self.rs.reflect(v, word[j])
            out.append(v)
        return out

    def left_descents(self) -> list[int]:
        return [i for i in range(self.rs.rank) if self.rs.simple_pairing(self.key, i) < 0]

    def __eq__(self, other):
        return isinstance(other, WeylElement) and other.rs is self.rs and other.key == self.key

    def __hash__(self):
        return hash((self.rs.name, self.key))

    def __repr__(self):
        if not self.word:
            return "WeylElement(id)"
        return "WeylElement(" + "".join(f"s{i + 1}" for i in self.word) + ")"


def _positive_roots(cartan: list[list[int]]) -> list[Weight]:
    """Positive roots in simple-root coordinates, closed under simple reflections."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        c = queue.popleft()
        for j in range(n):
            d = sum(c[i] * cartan[i][j] for i in range(n))
            new = tuple(c[k] - (d if k == j else 0) for k in range(n))
            if any(x > 0 for x in new) and new not in seen:
                if any(x < 0 for x in new):
                    raise AssertionError("root with mixed signs")
                seen.add(new)
                queue.append(new)
    return sorted(seen, key=lambda c: (sum(c), tuple(-x for x in c)))


_CACHE: dict[str, RootSystem] = {}


def build_root_system(cartan_type: str, rank: int | None = None) -> RootSystem:
    """Reduced irreducible root system; also accepts names like "C2" or "G2"."""
    if rank is None:
        cartan_type, rank = parse_name(cartan_type)
    cartan_type = cartan_type.upper()
    if cartan_type == "G2":
        cartan_type = "G"
    if cartan_type == "GL":
        return gl(rank)
    name = f"{cartan_type}{rank}"
    if name in _CACHE:
        return _CACHE[name]
    eps = _simple_roots_eps(cartan_type, rank)
    n = rank
    gram = [[_dot(eps[i], eps[j]) for j in range(n)] for i in range(n)]
    cartan = [[2 * gram[i][j] // gram[j][j] for j in range(n)] for i in range(n)]
    roots_c = _positive_roots(cartan)
    simple_first = sorted(roots_c, key=lambda c: (sum(c) != 1, sum(c), tuple(-x for x in c)))
    pos_fund, coroots = [], []
    for c in simple_first:
        pos_fund.append(tuple(sum(c[i] * cartan[i][j] for i in range(n)) for j in range(n)))
        norm = sum(c[i] * c[j] * gram[i][j] for i in range(n) for j in range(n))
        coroots.append(tuple(c[i] * gram[i][i] // norm for i in range(n)))
    rho = (1,) * n
    heights = [_dot(rho, cv) for cv in coroots]
    hi = max(range(len(heights)), key=lambda k: heights[k])
    rs = RootSystem(name, "G" if cartan_type == "G" else cartan_type, n, n, cartan,
                    [pos_fund[i] for i in range(n)], pos_fund, simple_first, coroots, rho, hi,
                    [tuple(int(i == j) for j in range(n)) for i in range(n)])
    _CACHE[name] = rs
    return rs


def gl(n: int) -> RootSystem:
    """GL_n: lattice Z^n, roots e_i - e_j, delta = (n-1, ..., 0) in place of rho."""
    if n < 1:
        raise UnsupportedRootSystem(f"unsupported: GL{n}")
    name = f"GL{n}"
    if name in _CACHE:
        return _CACHE[name]
    e = [tuple(int(i == k) for k in range(n)) for i in range(n)]
    pairs = [(i, i + 1) for i in range(n - 1)]
    pairs += sorted(((i, j) for i in range(n) for j in range(i + 2, n)), key=lambda p: (p[1] - p[0], p[0]))
    roots = [_sub(e[i], e[j]) for i, j in pairs]
    coords = [tuple(int(i <= k < j) for k in range(n - 1)) for i, j in pairs]
    cartan = [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(n - 1)] for i in range(n - 1)]
    rho = tuple(range(n - 1, -1, -1))
    hi = len(roots) - 1 if roots else -1
    fund = [tuple(int(k <= i) for k in range(n)) for i in range(n - 1)]
    rs = RootSystem(name, "GL", n - 1, n, cartan, roots[: n - 1], roots, coords, list(roots), rho, hi, fund)
    _CACHE[name] = rs
    return rs


def parse_name(name: str) -> tuple[str, int]:
    name = name.strip().upper()
    head = name.rstrip("0123456789")
    tail = name[len(head):]
    if not head or not tail:
        raise UnsupportedRootSystem(f"unsupported root system name {name!r}")
    return head, int(tail)


def root_system(name: str) -> RootSystem:
    return build_root_system(name)


def pairing(rs: RootSystem, lam: Sequence[int], alpha: int) -> int:
    return rs.pairing(lam, alpha)


def act(w: WeylElement, lam: Sequence[int]) -> Weight:
    return w.act(lam)


def dot_act(w: WeylElement, lam: Sequence[int]) -> Weight:
    return w.dot_act(lam)


def inversion_set(w: WeylElement) -> set[Weight]:
    return w.inversion_set()


def length(w: WeylElement) -> int:
    return w.length


def orbit_and_stabilizer(rs: RootSystem, mu: Sequence[int]):
    return rs.orbit_and_stabilizer(mu)


def dominance_leq(rs: RootSystem, mu: Sequence[int], lam: Sequence[int]) -> bool:
    return rs.dominance_leq(mu, lam)


def dominant_representative(rs: RootSystem, lam: Sequence[int]):
    return rs.dominant_representative(lam)

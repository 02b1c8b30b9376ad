"""Column-strict tableaux, insertion, jeu de taquin, Pieri bijections and charge.

Tableaux are in English notation: row 0 on top, rows weakly increase,
columns strictly increase downward.  Reading words list the rows from the
bottom row up, each row left to right.
"""

from __future__ import annotations

import random
from typing import Callable, Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Box = tuple[int, int]


def partition(parts: Iterable[int]) -> Partition:
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"{list(p)} is not a partition")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def partitions(n: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""
    max_part = n if max_part is None else max_part
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, None if max_parts is None else max_parts - 1, first):
            yield (first,) + rest


class Tableau:
    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]] = (), check: bool = True):
        self.rows = tuple(tuple(int(x) for x in r) for r in rows if len(r))
        if check:
            self._validate()

    def _validate(self):
        rows = self.rows
        for i, r in enumerate(rows):
            if any(x < 1 for x in r):
                raise ValueError("entries must be positive integers")
            if any(r[j] > r[j + 1] for j in range(len(r) - 1)):
                raise ValueError(f"row {i} is not weakly increasing")
            if i and len(r) > len(rows[i - 1]):
                raise ValueError("rows do not form a partition shape")
            if i and any(rows[i - 1][j] >= r[j] for j in range(len(r))):
                raise ValueError(f"column strictness fails between rows {i - 1} and {i}")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def weight(self, n: int | None = None) -> tuple[int, ...]:
        return word_weight(self.reading_word(), n)

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for r in reversed(self.rows) for x in r)

    def entries(self) -> list[int]:
        return [x for r in self.rows for x in r]

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Tableau({[list(r) for r in self.rows]})"

    def to_json(self) -> list:
        return [list(r) for r in self.rows]

    def __mul__(self, other: "Tableau") -> "Tableau":
        return plactic_product(self, other)


def shape(T: Tableau) -> Partition:
    return T.shape


def weight(T: Tableau, n: int | None = None) -> tuple[int, ...]:
    return T.weight(n)


def word_weight(word: Iterable[int], n: int | None = None) -> tuple[int, ...]:
    word = list(word)
    n = max(word, default=0) if n is None else n
    out = [0] * n
    for x in word:
        out[x - 1] += 1
    return tuple(out)


def parse_word(s: str) -> tuple[int, ...]:
    s = s.strip()
    if "," in s or " " in s:
        return tuple(int(x) for x in s.replace(",", " ").split())
    return tuple(int(c) for c in s)


# insertion

def row_insert(T: Tableau, x: int) -> tuple[Tableau, list[Box]]:
    """Row insertion T <- x; returns the tableau and the bumping path."""
    rows = [list(r) for r in T.rows]
    path: list[Box] = []
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            path.append((r, 0))
            break
        row = rows[r]
        j = next((j for j, y in enumerate(row) if y > x), None)
        if j is None:
            row.append(x)
            path.append((r, len(row) - 1))
            break
        row[j], x = x, row[j]
        path.append((r, j))
        r += 1
    return Tableau(rows, check=False), path


def row_uninsert(T: Tableau, box: Box) -> tuple[Tableau, int]:
    """Inverse of row insertion, starting from the corner ``box``."""
    rows = [list(r) for r in T.rows]
    r, c = box
    if c != len(rows[r]) - 1 or (r + 1 < len(rows) and len(rows[r + 1]) > c):
        raise ValueError(f"{box} is not a corner")
    y = rows[r].pop()
    for i in range(r - 1, -1, -1):
        row = rows[i]
        j = max(j for j, z in enumerate(row) if z < y)
        row[j], y = y, row[j]
    return Tableau(rows, check=False), y


def column_insert(x: int, T: Tableau) -> Tableau:
    """Column insertion x -> T (the tableau of the word x followed by word(T))."""
    rows = [list(r) for r in T.rows]
    c = 0
    while True:
        col = [rows[i][c] for i in range(len(rows)) if len(rows[i]) > c]
        i = next((i for i, y in enumerate(col) if y >= x), None)
        if i is None:
            i = len(col)
            if i == len(rows):
                rows.append([])
            rows[i].append(x)
            return Tableau(rows, check=False)
        rows[i][c], x = x, rows[i][c]
        c += 1


def column_uninsert(T: Tableau, box: Box) -> tuple[Tableau, int]:
    """Inverse of column insertion, starting from the corner ``box``."""
    rows = [list(r) for r in T.rows]
    r, c = box
    if c != len(rows[r]) - 1 or (r + 1 < len(rows) and len(rows[r + 1]) > c):
        raise ValueError(f"{box} is not a corner")
    y = rows[r].pop()
    if not rows[r]:
        rows.pop()
    for cc in range(c - 1, -1, -1):
        col = [i for i in range(len(rows)) if len(rows[i]) > cc]
        i = max(i for i in col if rows[i][cc] <= y)
        rows[i][cc], y = y, rows[i][cc]
    return Tableau(rows, check=False), y


def word_to_tableau(word: Iterable[int]) -> Tableau:
    T = Tableau()
    for x in word:
        T, _ = row_insert(T, x)
    return T


def plactic_product(T1: Tableau, T2: Tableau) -> Tableau:
    """T1 * T2: row-insert the reading word of T2 into T1."""
    T = T1
    for x in T2.reading_word():
        T, _ = row_insert(T, x)
    return T


def plactic_product_column(T1: Tableau, T2: Tableau) -> Tableau:
    """Same product computed by column-inserting word(T1) right to left into T2."""
    T = T2
    for x in reversed(T1.reading_word()):
        T = column_insert(x, T)
    return T


# jeu de taquin

SkewFilling = list[list[int | None]]


def validate_skew(filling: Sequence[Sequence[int | None]]) -> None:
    rows = [list(r) for r in filling]
    inner = [sum(1 for x in r if x is None) for r in rows]
    for i, r in enumerate(rows):
        k = inner[i]
        if any(x is None for x in r[k:]) or any(x is not None for x in r[:k]):
            raise ValueError("inner boxes must be left-justified")
        if i and (len(r) > len(rows[i - 1]) or k > inner[i - 1]):
            raise ValueError("not a skew shape")
        vals = r[k:]
        if any(vals[j] > vals[j + 1] for j in range(len(vals) - 1)):
            raise ValueError(f"row {i} is not weakly increasing")
        if i:
            above = rows[i - 1]
            for j in range(k, len(r)):
                if above[j] is not None and above[j] >= r[j]:
                    raise ValueError("column strictness fails")


def inner_corners(rows: SkewFilling) -> list[Box]:
    out = []
    for i, r in enumerate(rows):
        k = sum(1 for x in r if x is None)
        if k == 0:
            continue
        below = sum(1 for x in rows[i + 1] if x is None) if i + 1 < len(rows) else 0
        if below < k:
            out.append((i, k - 1))
    return out


def _slide(rows: SkewFilling, box: Box) -> None:
    i, j = box
    while True:
        right = rows[i][j + 1] if j + 1 < len(rows[i]) else None
        down = rows[i + 1][j] if i + 1 < len(rows) and j < len(rows[i + 1]) else None
        if right is None and down is None:
            rows[i].pop(j)
            if not rows[i]:
                rows.pop(i)
            return
        if down is not None and (right is None or down <= right):
            rows[i][j] = down
            i += 1
        else:
            rows[i][j] = right
            j += 1


def jeu_de_taquin(filling: Sequence[Sequence[int | None]],
                  choose: Callable[[list[Box]], Box] | None = None) -> Tableau:
    """Rectify a skew filling (None marks inner boxes).

    By default the inner corner with the largest row index slides first;
    ``choose`` can pick any other inner corner at each step.
    """
    validate_skew(filling)
    rows = [list(r) for r in filling]
    while True:
        corners = inner_corners(rows)
        if not corners:
            break
        box = choose(corners) if choose else max(corners)
        _slide(rows, box)
    return Tableau(rows)


def random_order(rng: random.Random) -> Callable[[list[Box]], Box]:
    return lambda corners: rng.choice(corners)


def skew_product_filling(T1: Tableau, T2: Tableau) -> SkewFilling:
    """T1 in the lower left, T2 in the upper right: rectifies to T1 * T2."""
    w = len(T1.rows[0]) if T1.rows else 0
    rows: SkewFilling = [[None] * w + list(r) for r in T2.rows]
    rows += [list(r) for r in T1.rows]
    return rows


# horizontal strips and Pieri

def horizontal_strips(gamma: Iterable[int], r: int) -> list[Partition]:
    """All lam containing gamma with lam/gamma a horizontal strip of size r."""
    gamma = partition(gamma)
    g = list(gamma) + [0]
    out: list[Partition] = []

    def rec(i: int, left: int, acc: list[int]):
        if i == len(g):
            if left == 0:
                out.append(partition(acc))
            return
        hi = g[i] + left if i == 0 else min(g[i - 1], g[i] + left)
        for v in range(g[i], hi + 1):
            rec(i + 1, left - (v - g[i]), acc + [v])

    rec(0, r, [])
    return sorted(out, reverse=True)


def is_horizontal_strip(lam: Sequence[int], gamma: Sequence[int]) -> bool:
    lam, gamma = list(lam), list(gamma)
    n = max(len(lam), len(gamma)) + 1
    lam += [0] * (n - len(lam))
    gamma += [0] * (n - len(gamma))
    return all(lam[i] >= gamma[i] for i in range(n)) and all(gamma[i] >= lam[i + 1] for i in range(n - 1))


def _new_boxes(lam: Partition, gamma: Partition) -> list[Box]:
    g = list(gamma) + [0] * (len(lam) - len(gamma))
    return [(i, j) for i in range(len(lam)) for j in range(g[i], lam[i])]


def pieri_right(T: Tableau, u: Sequence[int]) -> Tableau:
    """T * u for a weakly increasing row u."""
    if any(u[i] > u[i + 1] for i in range(len(u) - 1)):
        raise ValueError("u must be weakly increasing")
    for x in u:
        T, _ = row_insert(T, x)
    return T


def pieri_right_inverse(P: Tableau, gamma: Sequence[int]) -> tuple[Tableau, tuple[int, ...]]:
    """Undo T * u given shp(T) = gamma: uninsert the strip right to left."""
    gamma = partition(gamma)
    boxes = sorted(_new_boxes(P.shape, gamma), key=lambda b: -b[1])
    u = []
    for box in boxes:
        P, x = row_uninsert(P, box)
        u.append(x)
    return P, tuple(reversed(u))


def pieri_left(v: Sequence[int], T: Tableau) -> Tableau:
    """v * T for a weakly increasing row v (column insertion, last letter first)."""
    if any(v[i] > v[i + 1] for i in range(len(v) - 1)):
        raise ValueError("v must be weakly increasing")
    for x in reversed(v):
        T = column_insert(x, T)
    return T


def pieri_left_inverse(P: Tableau, gamma: Sequence[int]) -> tuple[tuple[int, ...], Tableau]:
    """Undo v * T given shp(T) = gamma: uninsert the strip right to left."""
    gamma = partition(gamma)
    boxes = sorted(_new_boxes(P.shape, gamma), key=lambda b: -b[1])
    v = []
    for box in boxes:
        P, x = column_uninsert(P, box)
        v.append(x)
    return tuple(v), P


# enumeration

def enumerate_tableaux(lam: Iterable[int], mu: Iterable[int]) -> list[Tableau]:
    """Column-strict tableaux of shape lam and weight mu (mu any composition)."""
    lam = partition(lam)
    mu = tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{list(lam)}| != |{list(mu)}|")
    out: list[Tableau] = []

    def rec(k: int, gamma: Partition, rows: list[list[int]]):
        if k == len(mu):
            if gamma == lam:
                out.append(Tableau(rows, check=False))
            return
        for nxt in horizontal_strips(gamma, mu[k]):
            if len(nxt) > len(lam) or any(a > b for a, b in zip(nxt, lam)):
                continue
            new_rows = [list(r) for r in rows] + [[] for _ in range(len(nxt) - len(rows))]
            for i, j in _new_boxes(nxt, gamma):
                new_rows[i].append(k + 1)
            rec(k + 1, nxt, new_rows)

    rec(0, (), [])
    return out


def tableaux_of_shape(lam: Iterable[int], n: int) -> list[Tableau]:
    """All column-strict tableaux of shape lam with entries in 1..n."""
    lam = partition(lam)
    out: list[Tableau] = []

    def rec(k: int, gamma: Partition, rows: list[list[int]]):
        if gamma == lam:
            out.append(Tableau(rows, check=False))
            return
        if k == n:
            return
        for r in range(sum(lam) - sum(gamma) + 1):
            for nxt in horizontal_strips(gamma, r):
                if len(nxt) > len(lam) or any(a > b for a, b in zip(nxt, lam)):
                    continue
                new_rows = [list(x) for x in rows] + [[] for _ in range(len(nxt) - len(rows))]
                for i, j in _new_boxes(nxt, gamma):
                    new_rows[i].append(k + 1)
                rec(k + 1, nxt, new_rows)

    rec(0, (), [])
    return out


# charge

def _shifted_word(word: Sequence[int]) -> tuple[int, ...]:
    """Relabel so the smallest letter is 1; the weight must then be a partition."""
    if not word:
        return ()
    low = min(word)
    w = tuple(x - low + 1 for x in word)
    wt = word_weight(w)
    if any(wt[i] < wt[i + 1] for i in range(len(wt) - 1)) or 0 in wt:
        raise ValueError(f"weight {list(word_weight(word))} is not a partition after shifting")
    return w


def charge_word(word: Sequence[int]) -> int:
    """Charge of a word of partition weight (after shifting the alphabet)."""
    letters = list(_shifted_word(tuple(word)))
    pos = list(range(len(letters)))
    total = 0
    while letters:
        n = len(letters)
        taken: list[int] = []
        # rightmost 1
        p = max(i for i in range(n) if letters[i] == 1)
        taken.append(p)
        index = 0
        k = 1
        while True:
            k += 1
            cands = [i for i in range(n) if letters[i] == k and i not in taken]
            if not cands:
                break
            left = [i for i in cands if i < p]
            if left:
                p = max(left)
            else:
                p = max(cands)
                index += 1
            taken.append(p)
            total += index
        keep = [i for i in range(n) if i not in set(taken)]
        letters = [letters[i] for i in keep]
        pos = [pos[i] for i in keep]
    return total


def charge(T: Tableau) -> int:
    return charge_word(T.reading_word())


def in_dominant_block(wt: Sequence[int], i: int) -> bool:
    """Membership of a weight in B(P)_{>=i}: mu_1..mu_{i-1} = 0 and mu_i >= mu_{i+1} >= ..."""
    wt = list(wt)
    if any(wt[k] for k in range(min(i - 1, len(wt)))):
        return False
    tail = wt[i - 1:]
    return all(tail[k] >= tail[k + 1] for k in range(len(tail) - 1))


def kostka_number(lam: Iterable[int], mu: Iterable[int]) -> int:
    return len(enumerate_tableaux(lam, mu))

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kfoulkes.affine_weyl import (AffineElement, CutoffExceeded, affine_generators, affine_reflection,
                                  bruhat_leq, double_coset, element_from_word, lower_interval, m_element,
                                  n_element, omega_elements, separating_hyperplanes)
from kfoulkes.polyring import LaurentPoly
from kfoulkes.root_data import build_root_system, gl

t = LaurentPoly.gen()
TYPES = ["A1", "A2", "B2", "C2", "G2", "A3", "C3"]


def _rs(name):
    return build_root_system(name)


def test_generators_are_involutions_of_length_one():
    for name in TYPES:
        rs = _rs(name)
        e = AffineElement.identity(rs)
        for s in affine_generators(rs):
            assert s.length == 1 and s * s == e


def _order(x, limit=12):
    e, y = AffineElement.identity(x.rs), x
    for k in range(1, limit + 1):
        if y == e:
            return k
        y = y * x
    return None


@pytest.mark.parametrize("name,expected", [
    ("A1", {(0, 1): None}),
    ("A2", {(0, 1): 3, (0, 2): 3, (1, 2): 3}),
    ("C2", {(0, 1): 4, (0, 2): 2, (1, 2): 4}),
    ("G2", {(0, 1): 3, (0, 2): 2, (1, 2): 6}),
])
def test_affine_coxeter_matrix(name, expected):
    rs = _rs(name)
    g = affine_generators(rs)
    for (i, j), m in expected.items():
        assert _order(g[i] * g[j]) == m


def test_s0_is_the_affine_reflection_in_phi():
    for name in TYPES:
        rs = _rs(name)
        assert affine_reflection(rs, rs.highest_root, 1) == affine_generators(rs)[0]
        assert rs.pairing(rs.phi, rs.highest_root) == 2


def test_c2_phi_is_short():
    rs = _rs("C2")
    assert rs.phi == (1, 0)
    assert rs.positive_root_coords[rs.highest_root] == (1, 1)


@pytest.mark.parametrize("name,size", [("A1", 2), ("A2", 3), ("A3", 4), ("B2", 2), ("C2", 2), ("C3", 2), ("G2", 1)])
def test_omega(name, size):
    rs = _rs(name)
    om = omega_elements(rs)
    assert len(om) == size
    gens = affine_generators(rs)
    for g in om:
        assert g.length == 0
        # conjugation by a length-zero element permutes the generators
        for s in gens:
            assert g * s * g.inverse() in gens
    cosets = {rs.in_root_lattice(g.lam) for g in om}
    assert True in cosets


def test_translation_lengths():
    for name in TYPES:
        rs = _rs(name)
        for lam in itertools.product(range(3), repeat=rs.rank):
            assert AffineElement.translation(rs, lam).length == rs.two_rho_check_pairing(lam)


def test_c2_double_coset_lengths():
    rs = _rs("C2")
    m, n, members = double_coset(rs, (0, 2))
    assert (AffineElement.translation(rs, (0, 2)).length, m.length, n.length) == (6, 3, 10)
    assert len(members) == 32
    assert members[0][0] == m and members[-1][0] == n


@pytest.mark.parametrize("name", ["A1", "A2", "C2", "G2"])
def test_double_coset_structure(name):
    rs = _rs(name)
    w0 = rs.longest_element.length
    for lam in itertools.product(range(3), repeat=rs.rank):
        m, n, members = double_coset(rs, lam)
        lt = rs.two_rho_check_pairing(lam)
        wl = rs.longest_in_stabilizer(lam).length
        assert n.length == lt + w0
        assert m.length == lt - w0 + wl
        assert min(l for _, l in members) == m.length and max(l for _, l in members) == n.length
        assert sum(1 for _, l in members if l == n.length) == 1
        stab = rs.stabilizer_poincare(lam)
        poin = LaurentPoly({})
        for _, l in members:
            poin = poin + t ** l
        assert poin == (rs.poincare_polynomial() ** 2).exact_div(stab).shift(m.length)


def test_reduced_words_round_trip():
    for name in ["A1", "A2", "C2", "G2"]:
        rs = _rs(name)
        for w in rs.elements():
            for lam in itertools.product(range(-2, 3), repeat=rs.rank):
                x = AffineElement(w, lam)
                word, g = x.reduced_word()
                assert len(word) == x.length and g.length == 0
                assert element_from_word(rs, word, g) == x


def test_length_counts_separating_hyperplanes():
    for name in ["A1", "A2", "B2", "C2", "G2", "A3"]:
        rs = _rs(name)
        for w in rs.elements():
            for lam in itertools.product(range(-2, 3), repeat=rs.rank):
                x = AffineElement(w, lam)
                assert separating_hyperplanes(x) == x.length


def test_a1_interval():
    rs = _rs("A1")
    s0, s1 = affine_generators(rs)
    y = s0 * s1 * s0
    got = lower_interval(y)
    assert len(got) == 6
    assert set(got) == {AffineElement.identity(rs), s0, s1, s0 * s1, s1 * s0, y}


def test_bruhat_matches_interval():
    rs = _rs("C2")
    pool = {}
    for w in rs.elements():
        for lam in itertools.product(range(-1, 2), repeat=2):
            x = AffineElement(w, lam)
            if x.length <= 5:
                pool[x] = None
    pool = list(pool)
    for y in pool:
        below = set(lower_interval(y))
        for x in pool:
            assert bruhat_leq(x, y) == (x in below)


def test_cutoff(monkeypatch):
    rs = _rs("C2")
    big = n_element(rs, (2, 0))
    with pytest.raises(CutoffExceeded):
        lower_interval(big, cutoff=5)
    monkeypatch.setenv("KOSTKA_LENGTH_CUTOFF", "3")
    with pytest.raises(CutoffExceeded):
        bruhat_leq(AffineElement.identity(rs), big)


def test_gl_is_rejected():
    rs = gl(2)
    with pytest.raises(ValueError):
        AffineElement.identity(rs)


def test_m_and_n_in_coset():
    rs = _rs("G2")
    for lam in [(1, 0), (0, 1), (1, 1)]:
        m, n, members = double_coset(rs, lam)
        els = {x for x, _ in members}
        assert m in els and n in els
        assert m == m_element(rs, lam) and n == n_element(rs, lam)


def test_json_round_trip():
    rs = _rs("C2")
    x = AffineElement(rs.element([0, 1]), (2, -1))
    assert x.to_json() == {"w": [1, 2], "t": [2, -1]}
    assert AffineElement.from_json(rs, x.to_json()) == x


@st.composite
def affine_pairs(draw):
    rs = _rs(draw(st.sampled_from(["A1", "A2", "C2", "G2"])))
    els = rs.elements()
    coords = st.lists(st.integers(-3, 3), min_size=rs.rank, max_size=rs.rank)
    x = AffineElement(draw(st.sampled_from(els)), draw(coords))
    y = AffineElement(draw(st.sampled_from(els)), draw(coords))
    p = tuple(Fraction(draw(st.integers(-20, 20)), 7) for _ in range(rs.rank))
    return rs, x, y, p


@given(affine_pairs())
def test_action_and_products(data):
    rs, x, y, p = data
    assert (x * y).act(p) == x.act(y.act(p))
    assert x.inverse().act(x.act(p)) == p
    assert (x * y).length <= x.length + y.length
    assert x.inverse().length == x.length


@given(affine_pairs())
def test_descents_change_length_by_one(data):
    rs, x, _, _ = data
    for s in affine_generators(rs):
        assert abs((s * x).length - x.length) == 1
        assert abs((x * s).length - x.length) == 1

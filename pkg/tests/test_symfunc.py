import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kfoulkes.polyring import GroupAlgebraElement, LaurentPoly
from kfoulkes.root_data import build_root_system, gl
from kfoulkes.symfunc import (BasisExpansion, alternating, divide_exact, expand_in, hall_littlewood,
                              hall_littlewood_gram_schmidt, hall_littlewood_schur, monomial, schur,
                              straighten_schur, weyl_denominator)

t = LaurentPoly.gen()


def _dim(rs, lam):
    out = Fraction(1)
    for k in range(len(rs.positive_roots)):
        out *= Fraction(rs.pairing(tuple(a + b for a, b in zip(lam, rs.rho)), k), rs.pairing(rs.rho, k))
    return out


def _value_at_one(f):
    return sum(int(c(1)) for _, c in f.items())


# node 1 is the end of the diagram carrying the odd root length in B, C and G2
@pytest.mark.parametrize("name,lam,dim", [
    ("A2", (1, 1), 8), ("A2", (2, 0), 6), ("C2", (1, 0), 5), ("C2", (0, 1), 4), ("B2", (1, 0), 4),
    ("G2", (1, 0), 7), ("G2", (0, 1), 14), ("B3", (1, 0, 0), 8), ("B3", (0, 0, 1), 7),
    ("C3", (0, 0, 1), 6), ("A3", (0, 1, 0), 6)])
def test_schur_dimensions(name, lam, dim):
    rs = build_root_system(name)
    assert _value_at_one(schur(rs, lam)) == dim


@pytest.mark.parametrize("name", ["A2", "B2", "C2", "G2", "A3", "C3"])
def test_weyl_dimension_formula(name):
    rs = build_root_system(name)
    for lam in itertools.product(range(2), repeat=rs.rank):
        s = schur(rs, lam)
        assert s.is_invariant(rs)
        assert _value_at_one(s) == _dim(rs, lam)
        assert s * weyl_denominator(rs) == alternating(rs, tuple(a + b for a, b in zip(lam, rs.rho)))


def test_gl3_schur_in_monomials():
    rs = gl(3)
    s = schur(rs, (2, 1, 0))
    assert expand_in(rs, "monomial", s) == BasisExpansion("monomial", {(2, 1, 0): 1, (1, 1, 1): 2})


def test_gl2_hall_littlewood():
    rs = gl(2)
    assert hall_littlewood(rs, (1, 1)) == monomial(rs, (1, 1))
    assert hall_littlewood(rs, (2, 0)) == monomial(rs, (2, 0)) + monomial(rs, (1, 1)).scale(1 - t)
    assert hall_littlewood_schur(rs, (2, 0)) == BasisExpansion("schur", {(2, 0): 1, (1, 1): -t})


def test_gl3_hall_littlewood_schur():
    rs = gl(3)
    # P_(111) = s_(111); P_(21) = s_(21) - (t + t^2) s_(111) / (1 + t) ... computed against charge
    p = hall_littlewood_schur(rs, (1, 1, 1))
    assert p == BasisExpansion("schur", {(1, 1, 1): 1})
    p21 = hall_littlewood_schur(rs, (2, 1, 0))
    assert p21.coeff((2, 1, 0)) == 1 and p21.coeff((1, 1, 1)) == -t - t ** 2
    # ... so that s_(21) = P_(21) + (t + t^2) P_(111)


def test_straighten_schur():
    rs = gl(2)
    assert straighten_schur(rs, (1, 2)) == (0, None)
    assert straighten_schur(rs, (0, 2)) == (-1, (1, 1))
    assert straighten_schur(rs, (3, 1)) == (1, (3, 1))
    a2 = build_root_system("A2")
    assert straighten_schur(a2, (-1, 0)) == (0, None)


def test_nondominant_rejected():
    rs = build_root_system("C2")
    with pytest.raises(ValueError):
        hall_littlewood(rs, (-1, 1))
    with pytest.raises(ValueError):
        schur(rs, (1, -1))
    with pytest.raises(ValueError):
        expand_in(rs, "schur", GroupAlgebraElement({(1, 0): 1}))
    with pytest.raises(ValueError):
        BasisExpansion("elementary")


def test_divide_exact():
    rs = build_root_system("A1")
    a = GroupAlgebraElement({(1,): 1, (-1,): -1})
    f = a * GroupAlgebraElement({(2,): 1, (0,): 3})
    assert divide_exact(rs, f, a) == GroupAlgebraElement({(2,): 1, (0,): 3})
    with pytest.raises(ArithmeticError):
        divide_exact(rs, GroupAlgebraElement({(0,): 1}), a)


@pytest.mark.parametrize("name", ["A2", "C2", "G2", "B3"])
def test_hall_littlewood_specializations(name):
    rs = build_root_system(name)
    for lam in itertools.product(range(2), repeat=rs.rank):
        p = hall_littlewood(rs, lam)
        assert p.is_invariant(rs)
        assert p.map_coeffs(lambda c: LaurentPoly.const(c(0))) == schur(rs, lam)
        assert p.specialize(1) == monomial(rs, lam)
        mono = expand_in(rs, "monomial", p)
        assert mono.coeff(lam) == 1
        assert all(rs.dominance_leq(mu, lam) for mu in mono.terms)


@pytest.mark.parametrize("rs", [gl(3), build_root_system("A2"), build_root_system("C2")])
def test_gram_schmidt_agrees(rs):
    lams = [(2, 1, 0), (1, 1, 1), (3, 0, 0)] if rs.is_gl else [(1, 1), (2, 0), (0, 2)]
    for lam in lams:
        assert hall_littlewood_gram_schmidt(rs, lam, 6) == hall_littlewood(rs, lam)


def test_expansion_json():
    e = BasisExpansion("schur", {(2, 0): 1, (1, 1): -t})
    assert BasisExpansion.from_json(e.to_json()) == e
    assert e.to_json()["terms"][0][0] == [2, 0]


@given(st.sampled_from(["A2", "C2", "G2"]), st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2),
                                                                 st.integers(-2, 2)), max_size=3),
       st.sampled_from(["monomial", "schur", "hall-littlewood"]))
def test_expand_round_trip(name, terms, basis):
    rs = build_root_system(name)
    f = GroupAlgebraElement()
    for a, b, c in terms:
        f = f + schur(rs, (a, b)).scale(c * (1 + t))
    e = expand_in(rs, basis, f)
    assert e.to_group_algebra(rs) == f

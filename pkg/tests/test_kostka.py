import itertools

import pytest

from kfoulkes.kostka import (KostkaResult, applicable_methods, classical_kostka, gl_corpus, kostka,
                             kostka_harmonic, kostka_row, kostka_via_base_change, kostka_via_charge,
                             kostka_via_inner_product, kostka_via_kl, kostka_via_partition_function,
                             kostka_via_raising, raising_operator_expand)
from kfoulkes.polyring import LaurentPoly
from kfoulkes.root_data import build_root_system, gl
from kfoulkes.symfunc import schur
from kfoulkes.tableaux import partitions

t = LaurentPoly.gen()

# K_{lam mu}(t) for |lam| = 4 in the charge convention
TABLE_4 = {
    ((4,), (4,)): 1,
    ((4,), (3, 1)): t,
    ((4,), (2, 2)): t ** 2,
    ((4,), (2, 1, 1)): t ** 3,
    ((4,), (1, 1, 1, 1)): t ** 6,
    ((3, 1), (3, 1)): 1,
    ((3, 1), (2, 2)): t,
    ((3, 1), (2, 1, 1)): t + t ** 2,
    ((3, 1), (1, 1, 1, 1)): t ** 3 + t ** 4 + t ** 5,
    ((2, 2), (2, 2)): 1,
    ((2, 2), (2, 1, 1)): t,
    ((2, 2), (1, 1, 1, 1)): t ** 2 + t ** 4,
    ((2, 1, 1), (2, 1, 1)): 1,
    ((2, 1, 1), (1, 1, 1, 1)): t + t ** 2 + t ** 3,
    ((1, 1, 1, 1), (1, 1, 1, 1)): 1,
}


def _n(p):
    return sum(i * x for i, x in enumerate(p))


@pytest.mark.parametrize("method", ["charge", "bc", "pf", "raising", "ip"])
def test_size_four_table(method):
    for lam in partitions(4):
        for mu in partitions(4):
            expected = TABLE_4.get((lam, mu), 0)
            assert kostka(None, lam, mu, method, n=4) == expected


def test_small_examples():
    assert kostka_via_charge((2, 1), (1, 1, 1)) == t + t ** 2
    assert kostka_via_raising((2, 1), (1, 1, 1)) == t + t ** 2
    assert kostka_via_base_change(gl(3), (2, 1, 0), (1, 1, 1)) == t + t ** 2
    assert kostka(None, (2,), (2,), "pf", n=2) == 1
    assert kostka_via_charge((3,), (1, 1, 1)) == t ** 3


def test_gl_structural_properties():
    for lam, mu, n in gl_corpus(5, 4):
        k = kostka_via_charge(lam, mu)
        assert k(1) == classical_kostka(lam, mu)
        if k:
            assert k.degree() == _n(mu) - _n(lam) and k.coeff(k.degree()) == 1
            assert gl(n).dominance_leq(tuple(mu) + (0,) * (n - len(mu)), tuple(lam) + (0,) * (n - len(lam)))
        if lam == mu:
            assert k == 1


def test_raising_expansion():
    e = raising_operator_expand((1, 1, 1), 3)
    assert e.coeff((3, 0, 0)) == t ** 3 and e.coeff((2, 1, 0)) == t + t ** 2 and e.coeff((1, 1, 1)) == 1
    assert len(e.terms) == 3


@pytest.mark.parametrize("method", ["bc", "pf", "ip", "kl"])
def test_c2_values(method):
    rs = build_root_system("C2")
    assert kostka(rs, (0, 2), (0, 0), method) == t + t ** 3
    assert kostka(rs, (2, 0), (0, 0), method) == t ** 2 + t ** 4
    assert kostka(rs, (1, 1), (0, 1), method) == t + t ** 2
    assert kostka(rs, (0, 1), (0, 1), method) == 1
    assert kostka(rs, (0, 1), (1, 0), method) == 0


def _highest_root(rs):
    k = max(range(len(rs.positive_roots)), key=lambda i: sum(rs.positive_root_coords[i]))
    return rs.positive_roots[k]


@pytest.mark.parametrize("name,exponents", [
    ("A2", [1, 2]), ("C2", [1, 3]), ("B2", [1, 3]), ("G2", [1, 5]),
    ("A3", [1, 2, 3]), ("B3", [1, 3, 5]), ("C3", [1, 3, 5]), ("D4", [1, 3, 3, 5]),
])
def test_adjoint_zero_weight_gives_exponents(name, exponents):
    rs = build_root_system(name)
    adjoint = _highest_root(rs)
    expected = sum((t ** e for e in exponents), LaurentPoly())
    assert kostka_via_partition_function(rs, adjoint, rs.zero()) == expected
    assert kostka_harmonic(rs, adjoint) == expected


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "C3"])
def test_value_at_one_is_weight_multiplicity(name):
    rs = build_root_system(name)
    for lam in itertools.product(range(2), repeat=rs.rank):
        s = schur(rs, lam)
        row = kostka_row(rs, lam)
        for mu in rs.dominant_weights_below(lam):
            assert row.get(mu, LaurentPoly())(1) == s.coeff(mu)(1)
            assert row.get(mu, LaurentPoly()).is_nonnegative()


@pytest.mark.parametrize("name", ["A2", "C2", "G2"])
def test_cartan_routes_agree(name):
    rs = build_root_system(name)
    for lam in itertools.product(range(3), repeat=2):
        if rs.two_rho_check_pairing(lam) > 12:
            continue
        for mu in rs.dominant_weights_below(lam):
            bc = kostka_via_base_change(rs, lam, mu)
            assert kostka_via_partition_function(rs, lam, mu) == bc
            assert kostka_via_inner_product(rs, lam, mu) == bc


@pytest.mark.parametrize("name,lams", [("A1", [(k,) for k in range(6)]), ("A2", [(1, 1), (2, 0), (3, 0)]),
                                       ("C2", [(1, 0), (0, 1), (1, 1), (0, 2)]), ("G2", [(1, 0)])])
def test_kl_route(name, lams):
    rs = build_root_system(name)
    for lam in lams:
        for mu in rs.dominant_weights_below(lam):
            assert kostka_via_kl(rs, lam, mu) == kostka_via_base_change(rs, lam, mu)


def test_kl_route_outside_root_lattice():
    rs = build_root_system("A2")
    assert kostka_via_kl(rs, (1, 0), (0, 0)) == 0


def test_errors():
    rs = build_root_system("C2")
    with pytest.raises(ValueError, match="not dominant"):
        kostka_via_base_change(rs, (1, -1), (0, 0))
    with pytest.raises(ValueError, match="unknown method"):
        kostka(rs, (1, 0), (1, 0), "magic")
    with pytest.raises(ValueError, match="size mismatch"):
        kostka_via_charge((2,), (1,))
    with pytest.raises(ValueError, match="Cartan"):
        kostka(gl(2), (2, 0), (1, 1), "kl")
    with pytest.raises(ValueError, match="at most"):
        kostka(None, (1, 1, 1), (1, 1, 1), "bc", n=2)
    with pytest.raises(ValueError, match="degree bound"):
        kostka_via_inner_product(rs, (0, 2), (0, 0), height_bound=1)


def test_applicable_methods_and_json():
    assert applicable_methods(None) == ("charge", "bc", "pf", "raising", "ip")
    assert applicable_methods(build_root_system("G2")) == ("bc", "pf", "ip", "kl")
    r = KostkaResult((2, 1), (1, 1, 1), t + t ** 2, "charge")
    assert r.to_json() == {"lambda": [2, 1], "mu": [1, 1, 1], "method": "charge",
                           "polynomial": {"var": "t", "terms": [[1, 1], [2, 1]]}}


def test_gl_corpus():
    corpus = gl_corpus(3, 2)
    assert ((2, 1), (1, 1, 1), 3) not in corpus
    assert ((2, 1), (2, 1), 2) in corpus
    assert all(sum(l) == sum(m) for l, m, _ in corpus)

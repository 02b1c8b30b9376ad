"""Exact computations with Kostka-Foulkes and Hall-Littlewood polynomials.

Root systems, the extended affine Weyl group, the affine Hecke algebra with
its Kazhdan-Lusztig basis, Weyl characters and Hall-Littlewood polynomials,
tableau combinatorics, and several independent routes to K_{lam mu}(t).
"""

from .affine_weyl import (AffineElement, CutoffExceeded, aff_length, aff_multiply, affine_generators,
                          bruhat_leq, double_coset, lower_interval, m_element, n_element, omega_elements)
from .hecke import (HeckeElement, SphericalElement, bar_involution, center_check, epsilon_0, hecke_multiply,
                    kl_basis, kl_element, kl_polynomials_below, coset_sum_check, one_0, satake_check,
                    spherical_from_hl, straighten_M, kl_schur_check)
from .kostka import (METHODS, KostkaResult, kostka_harmonic, kostka_via_base_change, kostka_via_charge,
                     kostka_via_inner_product, kostka_via_kl, kostka_via_partition_function, kostka_via_raising,
                     raising_operator_expand)
from .polyring import (GroupAlgebraElement, LaurentPoly, RationalFunction, constant_term, inner_product_t,
                       partition_function, poly)
from .root_data import (RootSystem, TooLarge, UnsupportedRootSystem, WeylElement, build_root_system, gl,
                        root_system)
from .symfunc import (BasisExpansion, alternating, expand_in, hall_littlewood, hall_littlewood_gram_schmidt,
                      monomial, schur, straighten_schur, weyl_denominator)
from .tableaux import (Tableau, charge, column_insert, enumerate_tableaux, horizontal_strips, jeu_de_taquin,
                       pieri_left, pieri_left_inverse, pieri_right, pieri_right_inverse, plactic_product,
                       row_insert, word_to_tableau)

__version__ = "0.1.0"

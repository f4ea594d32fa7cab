"""SL3 extensions of 2x2 matrices over commutative rings, the statements
equivalent to simple extendability, and finite checks of ring classes."""
from __future__ import annotations

from .classes import CLASS_NAMES, classify, check_class, revalidate_counterexample
from .extend import (BudgetExhausted, ExtWitness, NotSimplyExtendable, NotUnimodular,
                     assemble_extension, companion_test_matrix, ex11_certificate,
                     extend_via_reduction, find_simple_extension, lift_det_zero, nu_enumerate,
                     pell_simple_extendable, simple_extension_pr5, simple_extension_snf, smith2,
                     universal_matrix)
from .finite import FiniteRing, finite_ring
from .matrix import Mat2, Mat3, det2, det3, parse_matrix, sigma, theta
from .poly import Poly
from .rings import (Integers, ModN, PolyZ3, Product, Quadratic, RingError, Undecided,
                    Unsupported, parse_element, parse_ring)
from .statements import check_all, check_statement, revalidate, verify_th8_chain
from .witnesses import c9_extension, c14_witness, cr3_witness, th5_8_witness

__version__ = "0.1.0"

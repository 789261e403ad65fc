"""
Exact multigraded generating functions of two-row plane partitions.

Three independent routes compute the same rational functions: the
multigraded rational recursion (``recursion``), a unimodular triangulation
of the order cone (``conegeom``) and MacMahon's Omega operator (``omega``).
Brute-force enumeration (``enumeration``) is the oracle for all of them.
"""

from .conegeom import gf_via_triangulation, linear_extensions, rays_Uk, triangulation
from .enumeration import enumerate_pp, oracle_series
from .multipoly import Polynomial, VariableContext, parse
from .omega import ap_step, omega_eliminate, p22_via_omega
from .ratgf import FactoredDenominator, FactoredGF, gf_clear_to, gf_reduce, gf_series
from .recursion import compute_Q, compute_Qtilde, denominator_Dk, numerator, specialize_single_y

__version__ = "0.1.0"

__all__ = [
    "FactoredDenominator",
    "FactoredGF",
    "Polynomial",
    "VariableContext",
    "ap_step",
    "compute_Q",
    "compute_Qtilde",
    "denominator_Dk",
    "enumerate_pp",
    "gf_clear_to",
    "gf_reduce",
    "gf_series",
    "gf_via_triangulation",
    "linear_extensions",
    "numerator",
    "omega_eliminate",
    "oracle_series",
    "p22_via_omega",
    "parse",
    "rays_Uk",
    "specialize_single_y",
    "triangulation",
]

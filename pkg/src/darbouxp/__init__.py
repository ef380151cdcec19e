"""Invariant hypersurfaces and first integrals of polynomial vector fields over F_p."""
from .derivation import (
    VectorField,
    apply,
    canonical_family,
    dependency_locus,
    divergence,
    lie_bracket,
    pth_power,
)
from .errors import *  # noqa: F401,F403
from .forms import DiffForm, contract, exterior_d, lie_derivative, wedge
from .invariants import (
    AnalysisReport,
    InvarianceVerdict,
    InvolutivityReport,
    Outcome,
    analyze,
    first_integral_2d,
    fundamental_identity_check,
    invariant_part,
    involutivity,
    is_invariant,
)
from .oracle import SearchBound, enumerate_invariant_hypersurfaces, first_integral_kernel
from .parsing import parse_polynomial
from .poly import (
    Polynomial,
    RingContext,
    divide_exact,
    gcd,
    integrate_term,
    partial_derivative,
    pth_root,
    squarefree_part,
)
from .scalar import FieldElement, PrimeModulus, field_arith, make_modulus

__version__ = "0.1.0"

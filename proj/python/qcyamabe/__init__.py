"""Numerical audit of the Yamabe problem on the quaternionic Heisenberg group."""

from ._core import (
    ScalarField,
    best_constant_report,
    bubble_denominator,
    cayley_forward,
    cayley_inverse,
    complex_structures,
    constant,
    dilate,
    dilation,
    fs_quotient,
    group_inv,
    group_mul,
    h_family,
    horizontal_gradient,
    horizontal_hessian,
    integrate_biradial,
    kelvin,
    minimize_quotient,
    pde_residual,
    q_matrix,
    q_spectrum,
    quadratic_form_audit,
    quat_inv,
    quat_mul,
    run_suite,
    scale,
    scal_deformed,
    sigma,
    sub_laplacian,
    suite_names,
    torsion_T0_deformed,
    translate,
    U_deformed,
    ubar,
    v_field,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

"""halfjac: division by 2 on Jacobians of odd-degree hyperelliptic curves.

Given y^2 = f(x) with f monic of odd degree 2g+1 splitting over F_q, the
package computes the Mumford representations of all 2^{2g} halves of a curve
point from closed-form formulas in elementary symmetric functions of square
roots, cross-checks every result against an independent Cantor group law,
and ships brute-force verifiers for the structural torsion statements the
formulas rest on.
"""

from . import errors
from .field import (
    FieldElement,
    FiniteField,
    ff_make,
    field_spec,
    is_square,
    parse_element,
    parse_field_spec,
    quadratic_extension,
    sqrt,
)
from .poly import (
    NEG_INFINITY,
    Polynomial,
    from_roots,
    gcd_xgcd,
    roots_in_field,
    symmetric_functions,
)
from .jacobian import (
    CurvePoint,
    HyperellipticCurve,
    MumfordDivisor,
    add,
    curve_from_coeffs,
    curve_make,
    curve_spec,
    double,
    embed_point,
    enumerate_points,
    enumerate_theta,
    mumford_from_json,
    mumford_to_json,
    mumford_validate,
    neg,
    order,
    parse_curve_spec,
    scalar_mul,
    two_torsion_classes,
    weil_cap,
)
from .halving import (
    HalfLift,
    SignVector,
    half_from_signs,
    halve_point,
    lift_to_sqrt_field,
    recover_signs,
    sqrt_choices,
)
from .theorems import (
    DEFAULT_CONFIG,
    TheoremReport,
    check_notheta,
    check_order_2g_plus_1,
    check_small_order_absence,
    check_two_torsion_halving,
    matrix_curves,
    run_battery,
)

__all__ = [
    "errors",
    "FieldElement",
    "FiniteField",
    "ff_make",
    "field_spec",
    "is_square",
    "parse_element",
    "parse_field_spec",
    "quadratic_extension",
    "sqrt",
    "NEG_INFINITY",
    "Polynomial",
    "from_roots",
    "gcd_xgcd",
    "roots_in_field",
    "symmetric_functions",
    "CurvePoint",
    "HyperellipticCurve",
    "MumfordDivisor",
    "add",
    "curve_from_coeffs",
    "curve_make",
    "curve_spec",
    "double",
    "embed_point",
    "enumerate_points",
    "enumerate_theta",
    "mumford_from_json",
    "mumford_to_json",
    "mumford_validate",
    "neg",
    "order",
    "parse_curve_spec",
    "scalar_mul",
    "two_torsion_classes",
    "weil_cap",
    "HalfLift",
    "SignVector",
    "half_from_signs",
    "halve_point",
    "lift_to_sqrt_field",
    "recover_signs",
    "sqrt_choices",
    "DEFAULT_CONFIG",
    "TheoremReport",
    "check_notheta",
    "check_order_2g_plus_1",
    "check_small_order_absence",
    "check_two_torsion_halving",
    "matrix_curves",
    "run_battery",
]

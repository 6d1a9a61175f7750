"""Exact Cauchy-Harish-Chandra transfer of discrete series characters."""

from ._core import (
    InvalidParameter,
    SingularPoint,
    cauchy_circle_integral,
    circle_quadrature,
    ds_evaluate,
    ds_numerator,
    equal_up_to_constant,
    omega_constant,
    tau,
    theta_parameter,
    theta_signature,
    transfer_bruteforce,
    transfer_closed_form,
    validate,
    verify,
)

__all__ = [
    "InvalidParameter",
    "SingularPoint",
    "cauchy_circle_integral",
    "circle_quadrature",
    "ds_evaluate",
    "ds_numerator",
    "equal_up_to_constant",
    "omega_constant",
    "tau",
    "theta_parameter",
    "theta_signature",
    "transfer_bruteforce",
    "transfer_closed_form",
    "validate",
    "verify",
]

"""Derivatives and fractional integrals of Bessel functions with respect to the order.

The main entry points are :func:`deriv` for ``∂ⁿ/∂νⁿ C_ν(t)``,
:func:`frac_eval` for the Riemann-Liouville integral over the order, and
:func:`tail_j` / :func:`tail_i` for ``∫_ν^∞ C_μ(t) dμ``, where ``C`` is one of
J, Y, I, K.  All of them evaluate one-dimensional integral representations
with the double-exponential rules in :mod:`besselnu.quadrature`.
"""

from .bessel import (BesselKind, EvalPoint, bessel, i_int, i_series, j_int, j_series, k_combo,
                     k_int, y_combo, y_int)
from .complexmath import (GammaParams, c_pow_principal, digamma, gamma_reg_lower, gamma_star,
                          principal_log)
from .derivatives import (DerivRequest, deriv, di_dnu_apelblat, di_dnu_series, dj_dnu_apelblat,
                          dj_dnu_series, kernel_f1, kernel_f2, kernel_f3, kernel_f4, value_at_zero)
from .errors import (AccuracyWarning, BesselDomainError, NonConvergenceError, OverflowRiskWarning,
                     QuadratureError)
from .fractional import (FracRequest, frac_eval, frac_int_exp, frac_k_imag, frac_value_at_zero,
                         order_quadrature_oracle, riemann_liouville_oracle)
from .quadrature import QuadConfig, QuadResult, exp_sinh, sinh_sinh, tanh_sinh
from .tails import tail_i, tail_j, tail_oracle

__version__ = "0.1.0"

__all__ = [
    "AccuracyWarning",
    "BesselDomainError",
    "BesselKind",
    "DerivRequest",
    "EvalPoint",
    "FracRequest",
    "GammaParams",
    "NonConvergenceError",
    "OverflowRiskWarning",
    "QuadConfig",
    "QuadResult",
    "QuadratureError",
    "bessel",
    "c_pow_principal",
    "deriv",
    "di_dnu_apelblat",
    "di_dnu_series",
    "digamma",
    "dj_dnu_apelblat",
    "dj_dnu_series",
    "exp_sinh",
    "frac_eval",
    "frac_int_exp",
    "frac_k_imag",
    "frac_value_at_zero",
    "gamma_reg_lower",
    "gamma_star",
    "i_int",
    "i_series",
    "j_int",
    "j_series",
    "k_combo",
    "k_int",
    "kernel_f1",
    "kernel_f2",
    "kernel_f3",
    "kernel_f4",
    "order_quadrature_oracle",
    "principal_log",
    "riemann_liouville_oracle",
    "sinh_sinh",
    "tail_i",
    "tail_j",
    "tail_oracle",
    "tanh_sinh",
    "value_at_zero",
    "y_combo",
    "y_int",
]

"""Equilibrium points of the Riesz potential generated by unit charges at the
vertices of a regular n-gon inscribed in the unit circle."""

from .charges import (
    ChargeConfiguration,
    DomainTag,
    PolarPoint,
    RieszExponent,
    bisector_angles,
    regular_polygon,
    vertex_angles,
)
from .errors import DomainError, InconsistencyError
from .experiments import (
    ContinuationResult,
    CrossValidation,
    SweepRecord,
    continuation_beta1,
    cross_validate,
    sweep_beta,
    sweep_n,
)
from .potential import (
    bisector_derivative,
    bisector_potential,
    bisector_second_derivative,
    closed_form_beta1,
    potential_direct,
    potential_gradient,
    potential_hessian,
    v_closed_form,
    v_derivative,
)
from .solver import (
    EquilibriumPoint,
    EquilibriumSet,
    Kind,
    SolverOptions,
    apothem_bound,
    bounds,
    enumerate_equilibria,
    find_bisector_equilibria,
    lower_bound,
    pn_polynomial,
    pn_roots_in_unit_interval,
    small_beta_bound,
)
from .specfun import (
    QuadratureRule,
    beta_function,
    build_rule,
    fourier_coefficient,
    gauss_2f1,
    integral_potential,
    j_derivative,
    j_integral,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

"""Exact computations in partition, half-partition and quasi-partition algebras."""

from .exactnum import EvalAtZero, LaurentPoly, Rational, lp_add, lp_eval, lp_mul
from .diagram import (
    AlgebraContext,
    Diagram,
    Half,
    SetPartitionDiagram,
    Tilde,
    Whole,
    compose,
    enumerate_diagrams,
    factor_standard,
    generator,
    propagating_number,
    tensor,
)
from .algebra import (
    AlgebraElement,
    BarBasisElement,
    QPElement,
    algebra_dim,
    bar,
    bar_closed_form,
    pa_mul,
    pi_projector,
    qp_basis,
    qp_mul,
    tilde,
)

__all__ = [
    "EvalAtZero", "LaurentPoly", "Rational", "lp_add", "lp_eval", "lp_mul",
    "AlgebraContext", "Diagram", "Half", "SetPartitionDiagram", "Tilde", "Whole", "compose", "enumerate_diagrams",
    "factor_standard", "generator", "propagating_number", "tensor",
    "AlgebraElement", "BarBasisElement", "QPElement", "algebra_dim", "bar", "bar_closed_form",
    "pa_mul", "pi_projector", "qp_basis", "qp_mul", "tilde",
]

"""The discrimination instance, POVM validity, and success probabilities.

The task: a two-qubit system is secretly prepared either in the pure
product state rho0 = |00><00| or in the rank-2 separable mixture
rho1 = (|++><++| + |--><--|)/2, and a three-outcome measurement must
identify the state without error, declaring outcome 2 on failure.
Unambiguous discrimination requires Tr(F0 rho1) = Tr(F1 rho0) = 0; the
success probabilities are gamma_j = Tr(F_j rho_j).

Several POVM elements may share a label (an LOCC protocol maps many
leaves onto one outcome), so all gamma computations sum by label.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .operator_core import (
    HermitianOp,
    IDENTITY4,
    matrix_from_json,
    matrix_to_json,
    min_eigenvalue,
    spectral_norm,
)
from .symmetry import SymForm, symform_to_matrix

VALID_LABELS = (0, 1, 2)
DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Instance:
    """A pair of hypothesis states, both positive with unit trace."""

    rho0: HermitianOp
    rho1: HermitianOp

    def __post_init__(self):
        for name, rho in (("rho0", self.rho0), ("rho1", self.rho1)):
            if rho.dim != 4:
                raise ValueError(f"{name} must be a two-qubit state")
            if min_eigenvalue(rho) < -DEFAULT_TOL:
                raise ValueError(f"{name} is not positive")
            if abs(rho.trace() - 1.0) > DEFAULT_TOL:
                raise ValueError(f"{name} does not have unit trace")


def default_instance() -> Instance:
    """rho0 = |00><00| = [1,0,0;0], rho1 = (1/4)[1,1,1;1]."""
    rho0 = symform_to_matrix(SymForm(1.0, 0.0, 0.0, 0.0))
    rho1 = symform_to_matrix(SymForm(0.25, 0.25, 0.25, 0.25))
    return Instance(rho0=rho0, rho1=rho1)


def is_default_instance(inst: Instance, tol: float = 1e-12) -> bool:
    d = default_instance()
    return inst.rho0.allclose(d.rho0, tol) and inst.rho1.allclose(d.rho1, tol)


class Povm:
    """Ordered list of labeled elements; labels in {0, 1, 2} may repeat.

    The constructor checks structure only (labels, dimensions,
    Hermiticity is enforced by HermitianOp).  Positivity and completeness
    are checked by :func:`validate_povm`, which reports rather than
    raises so that invalid POVMs can be diagnosed.
    """

    __slots__ = ("elements",)

    def __init__(self, elements):
        elems = tuple((int(label), op) for label, op in elements)
        if not elems:
            raise ValueError("POVM needs at least one element")
        for label, op in elems:
            if label not in VALID_LABELS:
                raise ValueError(f"POVM label must be 0, 1 or 2, got {label}")
            if op.dim != 4:
                raise ValueError("POVM elements must be two-qubit operators")
        object.__setattr__(self, "elements", elems)

    def __setattr__(self, name, value):
        raise AttributeError("Povm is immutable")

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def label_sum(self, label: int) -> HermitianOp:
        """Sum of all elements carrying the given label."""
        total = np.zeros((4, 4), dtype=np.complex128)
        for lab, op in self.elements:
            if lab == label:
                total = total + op.mat
        return HermitianOp(total)

    def to_json(self) -> dict:
        return {
            "elements": [
                {"label": label, "matrix": matrix_to_json(op)} for label, op in self.elements
            ]
        }

    @classmethod
    def from_json(cls, data: dict) -> "Povm":
        if not isinstance(data, dict) or "elements" not in data:
            raise ValueError("POVM JSON must be an object with an 'elements' list")
        return cls(
            (entry["label"], matrix_from_json(entry["matrix"], expected_dim=4))
            for entry in data["elements"]
        )


@dataclass(frozen=True)
class PovmReport:
    element_margins: tuple[float, ...]
    completeness_residual: float
    tol: float
    passed: bool

    def to_json(self) -> dict:
        return {
            "element_margins": list(self.element_margins),
            "completeness_residual": self.completeness_residual,
            "tol": self.tol,
            "passed": self.passed,
        }


def validate_povm(povm: Povm, tol: float = DEFAULT_TOL) -> PovmReport:
    """Positivity margin per element and the completeness residual ||sum F - 1||_max."""
    margins = []
    total = np.zeros((4, 4), dtype=np.complex128)
    for _, op in povm:
        margins.append(min_eigenvalue(op))
        total = total + op.mat
    residual = float(np.max(np.abs(total - IDENTITY4.mat)))
    scale = max(1.0, max(spectral_norm(op) for _, op in povm))
    passed = residual <= tol and all(m >= -tol * scale for m in margins)
    return PovmReport(tuple(margins), residual, tol, passed)


@dataclass(frozen=True)
class UdReport:
    tr_f0_rho1: float
    tr_f1_rho0: float
    tol: float
    passed: bool

    def to_json(self) -> dict:
        return {
            "tr_f0_rho1": self.tr_f0_rho1,
            "tr_f1_rho0": self.tr_f1_rho0,
            "tol": self.tol,
            "passed": self.passed,
        }


def _pair_trace(a: HermitianOp, b: HermitianOp) -> float:
    return float(np.trace(a.mat @ b.mat).real)


def ud_constraints(povm: Povm, inst: Instance, tol: float = DEFAULT_TOL) -> UdReport:
    """Check Tr(F0 rho1) = Tr(F1 rho0) = 0, summed over like-labeled elements."""
    t01 = _pair_trace(povm.label_sum(0), inst.rho1)
    t10 = _pair_trace(povm.label_sum(1), inst.rho0)
    return UdReport(t01, t10, tol, passed=(t01 <= tol and t10 <= tol))


@dataclass(frozen=True)
class SuccessPair:
    gamma0: float
    gamma1: float

    def __post_init__(self):
        for name, g in (("gamma0", self.gamma0), ("gamma1", self.gamma1)):
            if not -1e-9 <= g <= 1.0 + 1e-9:
                raise ValueError(f"{name} = {g} is outside [0, 1]")


def success_probs(povm: Povm, inst: Instance) -> SuccessPair:
    """gamma_j = sum over elements labeled j of Tr(element rho_j)."""
    g0 = _pair_trace(povm.label_sum(0), inst.rho0)
    g1 = _pair_trace(povm.label_sum(1), inst.rho1)
    # Exact zeros often round to tiny negatives; clamp inside the invariant.
    return SuccessPair(max(g0, 0.0), max(g1, 0.0))


@dataclass(frozen=True)
class Priors:
    eta0: float
    eta1: float

    def __post_init__(self):
        if self.eta0 < 0.0 or self.eta1 < 0.0 or abs(self.eta0 + self.eta1 - 1.0) > 1e-12:
            raise ValueError("priors must be nonnegative and sum to 1")

    @classmethod
    def from_eta0(cls, eta0: float) -> "Priors":
        return cls(eta0, 1.0 - eta0)


_GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0


def averaged_rate(curve, priors: Priors, grid_step: float = 1e-3,
                  lo: float = 0.0, hi: float = 0.5) -> tuple[float, float]:
    """Maximize eta0*gamma + eta1*curve(gamma) over [lo, hi].

    Grid scan at ``grid_step`` followed by golden-section refinement to
    1e-10 in gamma.  Returns (argmax, maximum).
    """
    if grid_step <= 0.0:
        raise ValueError("grid_step must be positive")

    def objective(g):
        return priors.eta0 * g + priors.eta1 * curve(g)

    n = max(2, int(round((hi - lo) / grid_step)) + 1)
    grid = np.linspace(lo, hi, n)
    values = [objective(g) for g in grid]
    best = int(np.argmax(values))

    a = grid[max(best - 1, 0)]
    b = grid[min(best + 1, n - 1)]
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = objective(c), objective(d)
    while b - a > 1e-10:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = objective(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = objective(d)
    gamma_star = 0.5 * (a + b)
    value = objective(gamma_star)
    if values[best] > value:
        gamma_star, value = float(grid[best]), values[best]
    return float(gamma_star), float(value)

"""Symmetry maps of the discrimination instance and the X-shaped canonical form.

Both hypothesis states are invariant under four commuting-on-average maps:
qubit swap, simultaneous phase flip, global transpose, and partial
transpose.  Averaging over the group they generate projects any Hermitian
two-qubit operator onto an X-shaped matrix with four real parameters,

    [a, b, c; mu]  =  [[a, 0, 0, mu],
                       [0, c, mu, 0],
                       [0, mu, c, 0],
                       [mu, 0, 0, b]],

which is positive iff a >= 0, b >= 0, a*b >= mu^2 and c >= |mu|.  The
averaging preserves every trace pairing with the (invariant) hypothesis
states, so it never changes measured success probabilities.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .operator_core import HermitianOp, partial_transpose

X_PATTERN_TOL = 1e-12

# Parity of each basis label |00>, |01>, |10>, |11| under bit sum.
_PHASE_SIGNS = np.array([1.0, -1.0, -1.0, 1.0])
_PHASE_MASK = np.outer(_PHASE_SIGNS, _PHASE_SIGNS)


class SymmetryMap(enum.Enum):
    SWAP = "swap"
    PHASE_FLIP = "phase_flip"
    TRANSPOSE = "transpose"
    PARTIAL_TRANSPOSE = "partial_transpose"


def apply_symmetry(map_id: SymmetryMap, op: HermitianOp) -> HermitianOp:
    """Apply one of the four symmetry maps to a two-qubit operator."""
    if op.dim != 4:
        raise ValueError("symmetry maps act on two-qubit operators")
    if map_id is SymmetryMap.SWAP:
        t = op.mat.reshape(2, 2, 2, 2)
        return HermitianOp(np.transpose(t, (1, 0, 3, 2)).reshape(4, 4))
    if map_id is SymmetryMap.PHASE_FLIP:
        return HermitianOp(op.mat * _PHASE_MASK)
    if map_id is SymmetryMap.TRANSPOSE:
        return HermitianOp(op.mat.T)
    if map_id is SymmetryMap.PARTIAL_TRANSPOSE:
        return partial_transpose(op)
    raise ValueError(f"unknown symmetry map {map_id!r}")


@dataclass(frozen=True)
class SymForm:
    """The four real parameters [a, b, c; mu] of a symmetrized operator."""

    a: float
    b: float
    c: float
    mu: float

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "mu": self.mu}

    @classmethod
    def from_json(cls, data: dict) -> "SymForm":
        return cls(float(data["a"]), float(data["b"]), float(data["c"]), float(data["mu"]))


def symmetrize(op: HermitianOp) -> SymForm:
    """Project onto the X-shaped form by sequential averaging over the four maps.

    The averaged matrix must vanish off the X pattern; this is verified to
    ``X_PATTERN_TOL`` as a built-in self-check of the averaging order.
    """
    if op.dim != 4:
        raise ValueError("symmetrize acts on two-qubit operators")
    acc = op
    for m in SymmetryMap:
        acc = HermitianOp(0.5 * (acc.mat + apply_symmetry(m, acc).mat))
    mat = acc.mat
    off_x = mat.copy()
    for i, j in ((0, 0), (1, 1), (2, 2), (3, 3), (0, 3), (3, 0), (1, 2), (2, 1)):
        off_x[i, j] = 0.0
    resid = float(np.max(np.abs(off_x)))
    imag = float(np.max(np.abs(mat.imag)))
    if resid > X_PATTERN_TOL or imag > X_PATTERN_TOL:
        raise RuntimeError(f"symmetrized matrix is not X-shaped (residual {max(resid, imag):.3e})")
    return SymForm(
        a=float(mat[0, 0].real),
        b=float(mat[3, 3].real),
        c=float(mat[1, 1].real),
        mu=float(mat[0, 3].real),
    )


def symform_to_matrix(s: SymForm) -> HermitianOp:
    m = np.zeros((4, 4))
    m[0, 0] = s.a
    m[1, 1] = m[2, 2] = s.c
    m[3, 3] = s.b
    m[0, 3] = m[3, 0] = m[1, 2] = m[2, 1] = s.mu
    return HermitianOp(m)


def symform_eigenvalues(s: SymForm) -> tuple[float, float, float, float]:
    """Closed-form spectrum from the two 2x2 blocks of the X shape."""
    half = 0.5 * (s.a + s.b)
    rad = float(np.hypot(0.5 * (s.a - s.b), s.mu))
    return (half - rad, half + rad, s.c - s.mu, s.c + s.mu)


def symform_is_positive(s: SymForm, tol: float = 1e-12) -> bool:
    """Closed-form positivity: a >= 0, b >= 0, a*b >= mu^2, c >= |mu|.

    Evaluated with additive tolerance ``tol``; agrees with the spectral
    test on the reconstructed matrix.
    """
    return (
        s.a >= -tol
        and s.b >= -tol
        and s.a * s.b >= s.mu * s.mu - tol
        and s.c >= abs(s.mu) - tol
    )

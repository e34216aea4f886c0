"""Exact Hermitian operator algebra on one and two qubits.

Everything in this package lives on the fixed product basis
``|00>, |01>, |10>, |11>`` (row-major, Alice's bit first).  Operators are
dense complex Hermitian matrices of dimension 2 or 4.  Positivity is
decided spectrally, and separability of a positive two-qubit operator is
decided by the Peres-Horodecki partial-transpose criterion, which is
necessary *and* sufficient for 2x2 systems (rescale a positive operator
to unit trace: separability and PPT-ness are both scale invariant).
"""

from __future__ import annotations

import math

import numpy as np

HERMITICITY_TOL = 1e-12
POSITIVITY_TOL = 1e-9


class NotPositive(ValueError):
    """An operator that was required to be positive semidefinite is not."""


class HermitianOp:
    """Immutable complex Hermitian matrix of dimension 2 or 4.

    The constructor verifies Hermiticity to ``HERMITICITY_TOL``, then
    stores the exactly hermitized matrix ``(M + M^dagger)/2`` (this
    zeroes the imaginary part of the diagonal), write-protected.
    """

    __slots__ = ("mat",)

    def __init__(self, mat):
        m = np.array(mat, dtype=np.complex128)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] not in (2, 4):
            raise ValueError(f"expected a 2x2 or 4x4 matrix, got shape {m.shape}")
        if not np.all(np.isfinite(m.view(np.float64))):
            raise ValueError("matrix entries must be finite")
        dev = np.max(np.abs(m - m.conj().T))
        scale = max(1.0, float(np.max(np.abs(m))))
        if dev > HERMITICITY_TOL * scale:
            raise ValueError(f"matrix is not Hermitian (deviation {dev:.3e})")
        m = 0.5 * (m + m.conj().T)
        m.flags.writeable = False
        object.__setattr__(self, "mat", m)

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def trace(self) -> float:
        return float(np.trace(self.mat).real)

    def __add__(self, other):
        return HermitianOp(self.mat + other.mat)

    def __sub__(self, other):
        return HermitianOp(self.mat - other.mat)

    def __rmul__(self, scalar):
        return HermitianOp(float(scalar) * self.mat)

    def __neg__(self):
        return HermitianOp(-self.mat)

    def __setattr__(self, name, value):
        raise AttributeError("HermitianOp is immutable")

    def __repr__(self):
        return f"HermitianOp(dim={self.dim})"

    def allclose(self, other, tol=1e-12) -> bool:
        return bool(np.max(np.abs(self.mat - other.mat)) <= tol)


def identity(dim: int) -> HermitianOp:
    return HermitianOp(np.eye(dim))


def zero(dim: int) -> HermitianOp:
    return HermitianOp(np.zeros((dim, dim)))


def projector(vec) -> HermitianOp:
    """Rank-1 projector |v><v| / <v|v> onto a nonzero state vector."""
    v = np.asarray(vec, dtype=np.complex128)
    n = np.vdot(v, v).real
    if n <= 0.0:
        raise ValueError("cannot project onto the zero vector")
    return HermitianOp(np.outer(v, v.conj()) / n)


IDENTITY2 = identity(2)
IDENTITY4 = identity(4)
P0 = projector([1.0, 0.0])
P1 = projector([0.0, 1.0])
P_PLUS = projector([1.0, 1.0])
P_MINUS = projector([1.0, -1.0])


class ProductOp:
    """A positive product operator A (x) B on the two-qubit system."""

    __slots__ = ("alice", "bob")

    def __init__(self, alice: HermitianOp, bob: HermitianOp):
        if alice.dim != 2 or bob.dim != 2:
            raise ValueError("product factors must be single-qubit operators")
        object.__setattr__(self, "alice", alice)
        object.__setattr__(self, "bob", bob)

    def __setattr__(self, name, value):
        raise AttributeError("ProductOp is immutable")

    def to_op(self) -> HermitianOp:
        return tensor(self.alice, self.bob)


def tensor(a: HermitianOp, b: HermitianOp) -> HermitianOp:
    """Kronecker product in the fixed basis order: <ij|a(x)b|kl> = a[i,k] b[j,l]."""
    if a.dim != 2 or b.dim != 2:
        raise ValueError("tensor expects two single-qubit operators")
    return HermitianOp(np.kron(a.mat, b.mat))


def eigenvalues(op: HermitianOp) -> np.ndarray:
    """All eigenvalues, ascending.  Closed form for dim 2, LAPACK for dim 4."""
    if op.dim == 2:
        m = op.mat
        half_tr = 0.5 * (m[0, 0].real + m[1, 1].real)
        rad = math.hypot(0.5 * (m[0, 0].real - m[1, 1].real), abs(m[0, 1]))
        return np.array([half_tr - rad, half_tr + rad])
    return np.linalg.eigvalsh(op.mat)


def min_eigenvalue(op: HermitianOp) -> float:
    return float(eigenvalues(op)[0])


def spectral_norm(op: HermitianOp) -> float:
    ev = eigenvalues(op)
    return float(max(abs(ev[0]), abs(ev[-1])))


def is_positive(op: HermitianOp, tol: float = POSITIVITY_TOL) -> bool:
    """True iff the smallest eigenvalue is >= -tol * max(1, spectral norm)."""
    ev = eigenvalues(op)
    scale = max(1.0, abs(float(ev[0])), abs(float(ev[-1])))
    return float(ev[0]) >= -tol * scale

def partial_transpose(op: HermitianOp) -> HermitianOp:
    """Transpose Bob's indices only: result[(i,j),(k,l)] = input[(i,l),(k,j)]."""
    if op.dim != 4:
        raise ValueError("partial transpose is defined on two-qubit operators")
    t = op.mat.reshape(2, 2, 2, 2)
    return HermitianOp(np.transpose(t, (0, 3, 2, 1)).reshape(4, 4))


def is_ppt_separable(op: HermitianOp, tol: float = POSITIVITY_TOL) -> bool:
    """Separability test for a positive two-qubit operator (PPT criterion).

    Raises:
        NotPositive: if ``op`` itself fails the positivity check, which
            signals a malformed POVM element rather than entanglement.
    """
    if not is_positive(op, tol):
        raise NotPositive(f"operator is not positive (min eig {min_eigenvalue(op):.3e})")
    return is_positive(partial_transpose(op), tol)


# ---------------------------------------------------------------------------
# JSON matrix encoding: dim x dim array of [re, im] pairs, row-major.

def matrix_to_json(op: HermitianOp) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in op.mat]


def matrix_from_json(data, expected_dim: int | None = None) -> HermitianOp:
    arr = np.asarray(data, dtype=np.float64)
    if arr.ndim != 3 or arr.shape[0] != arr.shape[1] or arr.shape[2] != 2:
        raise ValueError("matrix JSON must be a dim x dim array of [re, im] pairs")
    if expected_dim is not None and arr.shape[0] != expected_dim:
        raise ValueError(f"expected a {expected_dim}x{expected_dim} matrix, got {arr.shape[0]}")
    return HermitianOp(arr[:, :, 0] + 1j * arr[:, :, 1])

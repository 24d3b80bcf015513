"""Numerical Hom and Ext dimensions from explicit matrices.

This module is the ground truth the lattice formulas are measured
against: every dimension is the kernel dimension of an explicitly
assembled linear system, decided by singular values against a relative
threshold.

For a domain module V (action written on the right of the unknown) and a
codomain module W, a 1-cocycle is determined by its values (D_X, D_Y) on
the two generators, and the group relation cuts out the cocycle space:

* relation A^2 = B^3 (braid case): one block of equations

      D_X A_V + A_W D_X  =  D_Y B_V^2 + B_W D_Y B_V + B_W^2 D_Y,

* relations A^2 = B^3 = 1 (quotient case): both sides vanish separately,
  giving two independent blocks.

Coboundaries are the image of F -> (A_W F - F A_V, B_W F - F B_V), whose
kernel is exactly the space of intertwiners, so

    dim Ext^1 = dim(cocycles) - (n_V n_W - dim Hom).

All systems are expressed through Kronecker products acting on row-major
flattened unknowns: vec(P F Q) = kron(P, Q^T) vec(F).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import B3, GAMMA
from .errors import ToleranceAmbiguity


@dataclass(frozen=True)
class ToleranceConfig:
    """Rank thresholds: singular values above rel_tol * sigma_max count,
    and a matrix whose largest singular value falls below abs_floor is
    the zero map."""

    rel_tol: float = 1e-8
    abs_floor: float = 1e-12

    def __post_init__(self):
        if not (0.0 < self.abs_floor < self.rel_tol < 1.0):
            raise ValueError(
                f"need 0 < abs_floor < rel_tol < 1, got "
                f"abs_floor={self.abs_floor}, rel_tol={self.rel_tol}"
            )


DEFAULT_TOL = ToleranceConfig()


def _rank_flagged(M: np.ndarray, tol: ToleranceConfig) -> tuple[int, bool]:
    """(numerical rank, ambiguity flag).  Ambiguous means some singular
    value lies within a factor 10 of the threshold, so the rank would
    move under a modest change of tolerance."""
    rows, cols = M.shape
    if rows == 0 or cols == 0:
        return 0, False
    sing = np.linalg.svd(M, compute_uv=False)
    smax = float(sing[0])
    if smax < tol.abs_floor:
        return 0, False
    threshold = tol.rel_tol * smax
    rank = int(np.sum(sing > threshold))
    ambiguous = bool(np.any((sing > threshold / 10.0) & (sing < threshold * 10.0)))
    return rank, ambiguous


def numeric_rank(M: np.ndarray, tol: ToleranceConfig = DEFAULT_TOL) -> int:
    """Numerical rank by singular values."""
    rank, _ = _rank_flagged(np.asarray(M, dtype=complex), tol)
    return rank


def numeric_kernel_dim(M: np.ndarray, tol: ToleranceConfig = DEFAULT_TOL) -> int:
    """Kernel dimension: #columns minus numerical rank.  An empty
    constraint block (0 rows) leaves everything free."""
    M = np.asarray(M, dtype=complex)
    rank, _ = _rank_flagged(M, tol)
    return M.shape[1] - rank


def _kernel_dim_checked(M: np.ndarray, tol: ToleranceConfig) -> int:
    rank, ambiguous = _rank_flagged(M, tol)
    if ambiguous:
        raise ToleranceAmbiguity(
            "singular value within a factor 10 of the rank threshold; "
            "re-randomize the instances"
        )
    return M.shape[1] - rank


def commutant_matrix(V, W) -> np.ndarray:
    """System whose kernel is {F : F A_V = A_W F, F B_V = B_W F},
    F flattened row-major as an (n_W x n_V) unknown."""
    iv = np.eye(V.n)
    iw = np.eye(W.n)
    rows = [
        np.kron(iw, V.A.T) - np.kron(W.A, iv),
        np.kron(iw, V.B.T) - np.kron(W.B, iv),
    ]
    return np.vstack(rows)


def hom_dim_numeric(V, W, group_kind: str = B3,
                    tol: ToleranceConfig = DEFAULT_TOL) -> int:
    """Dimension of the intertwiner space Hom(V, W).

    The linear condition is the same for both relation kinds; the kind
    argument only enforces that quotient-case Hom is asked of matrix
    pairs tagged as satisfying A^2 = B^3 = 1.
    """
    _check_kinds(V, W, group_kind)
    return numeric_kernel_dim(commutant_matrix(V, W), tol)


def cocycle_matrix(V, W, group_kind: str) -> np.ndarray:
    """Constraint matrix on the stacked unknowns (D_X, D_Y), each an
    (n_W x n_V) block flattened row-major."""
    iv = np.eye(V.n)
    iw = np.eye(W.n)
    bv2 = V.B @ V.B
    bw2 = W.B @ W.B
    block_x = np.kron(iw, V.A.T) + np.kron(W.A, iv)
    block_y = np.kron(iw, bv2.T) + np.kron(W.B, V.B.T) + np.kron(bw2, iv)
    if group_kind == B3:
        return np.hstack([block_x, -block_y])
    if group_kind == GAMMA:
        zero = np.zeros_like(block_x)
        return np.block([[block_x, zero], [zero, block_y]])
    raise ValueError(f"unknown group kind {group_kind!r}")


def cocycle_dim_numeric(V, W, group_kind: str = B3,
                        tol: ToleranceConfig = DEFAULT_TOL) -> int:
    """Dimension of the cocycle space Z(V, W)."""
    _check_kinds(V, W, group_kind)
    return numeric_kernel_dim(cocycle_matrix(V, W, group_kind), tol)


def boundary_dim_numeric(V, W, tol: ToleranceConfig = DEFAULT_TOL) -> int:
    """Dimension of the coboundary space B(V, W), computed as the rank
    of the boundary map itself.  Must equal n_V n_W - dim Hom(V, W) by
    rank-nullity; tests assert both routes agree."""
    iv = np.eye(V.n)
    iw = np.eye(W.n)
    rows = [
        np.kron(W.A, iv) - np.kron(iw, V.A.T),
        np.kron(W.B, iv) - np.kron(iw, V.B.T),
    ]
    return numeric_rank(np.vstack(rows), tol)


def ext_dim_numeric(V, W, group_kind: str = B3,
                    tol: ToleranceConfig = DEFAULT_TOL) -> int:
    """dim Ext^1(V, W) = dim Z - dim B from explicit matrices.

    Raises ToleranceAmbiguity when a singular value of either system
    falls within a factor 10 of its rank threshold.
    """
    _check_kinds(V, W, group_kind)
    z_dim = _kernel_dim_checked(cocycle_matrix(V, W, group_kind), tol)
    hom = _kernel_dim_checked(commutant_matrix(V, W), tol)
    b_dim = V.n * W.n - hom
    return z_dim - b_dim


def _check_kinds(V, W, group_kind: str) -> None:
    if group_kind == GAMMA:
        for rep in (V, W):
            if rep.relation_kind != GAMMA:
                raise ValueError(
                    "quotient-case computation needs matrix pairs with "
                    f"A^2 = B^3 = 1, got relation kind {rep.relation_kind!r}"
                )
    elif group_kind != B3:
        raise ValueError(f"unknown group kind {group_kind!r}")

from typing import Tuple, Union

import numpy as np
import scipy.sparse as sp

from tastePath.core.exceptions import ShapeError

Matrix = Union[np.ndarray, sp.spmatrix]


def as_dense(M: Matrix) -> np.ndarray:
    return M.toarray() if sp.issparse(M) else np.asarray(M, dtype=np.float64)


def check_shapes(P_mat: Matrix, D0_mat: Matrix, alpha: np.ndarray) -> None:
    """P is |E| x |P|, D0 is |E| x |D0|, alpha is |D0| x |P|"""
    if P_mat.shape[0] != D0_mat.shape[0]:
        raise ShapeError(f"P has {P_mat.shape[0]} edge rows but D0 has {D0_mat.shape[0]}")
    expected = (D0_mat.shape[1], P_mat.shape[1])
    if alpha.shape != expected:
        raise ShapeError(f"alpha must be {expected}, got {alpha.shape}")


def residual(P_dense: np.ndarray, D0_mat: Matrix, alpha: np.ndarray) -> np.ndarray:
    return np.asarray(D0_mat @ alpha) - P_dense


def loss(P_mat: Matrix, D0_mat: Matrix, alpha: np.ndarray, lambda_: float) -> float:
    """1/2 ||P - D0 alpha||_F^2 + lambda ||alpha||_1"""
    check_shapes(P_mat, D0_mat, alpha)
    R = residual(as_dense(P_mat), D0_mat, alpha)
    return float(0.5 * np.sum(R * R) + lambda_ * np.abs(alpha).sum())


def grad_smooth(P_mat: Matrix, D0_mat: Matrix, alpha: np.ndarray) -> np.ndarray:
    """D0^T (D0 alpha - P), the gradient of the reconstruction term"""
    check_shapes(P_mat, D0_mat, alpha)
    return np.asarray(D0_mat.T @ residual(as_dense(P_mat), D0_mat, alpha))


class PrecomputedObjective:
    """
    Objective and subgradient over a fixed (P, D0) pair, with D0^T P and ||P||^2
    computed once. The l1 subgradient is +lambda on the non-negative box.

    D0^T D0 alpha is applied as D0^T (D0 alpha): |E| is far smaller than |D0|, and the
    dense |D0| x |D0| Gram matrix is never built.
    """

    def __init__(self, P_mat: Matrix, D0_mat: Matrix):
        P_dense = as_dense(P_mat)
        self.D0 = D0_mat
        self.cross = np.asarray(D0_mat.T @ P_dense)
        self.p_sq = float(np.sum(P_dense * P_dense))

    def __call__(self, alpha: np.ndarray, lambda_: float) -> Tuple[float, np.ndarray]:
        DA = np.asarray(self.D0 @ alpha)
        smooth = 0.5 * self.p_sq - float(np.sum(self.cross * alpha)) + 0.5 * float(np.sum(DA * DA))
        value = max(smooth, 0.0) + lambda_ * float(alpha.sum())
        grad = np.asarray(self.D0.T @ DA) - self.cross + lambda_
        return value, grad

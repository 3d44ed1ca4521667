"""Pure-NumPy convolution kernels (im2col + BLAS matmul)."""

from __future__ import annotations

import numpy as np


def _pad(x: np.ndarray, p: int) -> np.ndarray:
    if p == 0:
        return x
    return np.pad(x, ((0, 0), (0, 0), (p, p), (p, p)))


def out_dim(n: int, k: int, stride: int, pad: int) -> int:
    return (n + 2 * pad - k) // stride + 1


def _windows(xp: np.ndarray, kh: int, kw: int, stride: int, oh: int, ow: int) -> np.ndarray:
    n, c, _, _ = xp.shape
    sn, sc, sh, sw = xp.strides
    return np.lib.stride_tricks.as_strided(
        xp, (n, c, kh, kw, oh, ow), (sn, sc, sh, sw, sh * stride, sw * stride)
    )


def _col_matrix(x: np.ndarray, kh: int, kw: int, stride: int, pad: int, oh: int, ow: int) -> np.ndarray:
    xp = _pad(x, pad)
    cols = _windows(xp, kh, kw, stride, oh, ow)
    n, c = x.shape[0], x.shape[1]
    return np.ascontiguousarray(cols.transpose(0, 4, 5, 1, 2, 3)).reshape(n * oh * ow, c * kh * kw)


def conv2d_forward(x: np.ndarray, w: np.ndarray, b: np.ndarray, stride: int, pad: int) -> np.ndarray:
    n, _, h, wd = x.shape
    co, _, kh, kw = w.shape
    oh, ow = out_dim(h, kh, stride, pad), out_dim(wd, kw, stride, pad)
    mat = _col_matrix(x, kh, kw, stride, pad, oh, ow)
    out = mat @ w.reshape(co, -1).T
    out += b
    return np.ascontiguousarray(out.reshape(n, oh, ow, co).transpose(0, 3, 1, 2))


def conv2d_grad_input(g: np.ndarray, w: np.ndarray, stride: int, pad: int, h: int, wd: int) -> np.ndarray:
    n, co, oh, ow = g.shape
    _, ci, kh, kw = w.shape
    gm = np.ascontiguousarray(g.transpose(0, 2, 3, 1)).reshape(n * oh * ow, co)
    gcol = (gm @ w.reshape(co, -1)).reshape(n, oh, ow, ci, kh, kw)
    gcol = gcol.transpose(0, 3, 4, 5, 1, 2)
    dxp = np.zeros((n, ci, h + 2 * pad, wd + 2 * pad), dtype=g.dtype)
    for i in range(kh):
        hi = i + (oh - 1) * stride + 1
        for j in range(kw):
            wj = j + (ow - 1) * stride + 1
            dxp[:, :, i:hi:stride, j:wj:stride] += gcol[:, :, i, j]
    if pad:
        return np.ascontiguousarray(dxp[:, :, pad : pad + h, pad : pad + wd])
    return dxp


def conv2d_grad_weights(g: np.ndarray, x: np.ndarray, kh: int, kw: int, stride: int, pad: int) -> np.ndarray:
    n, co, oh, ow = g.shape
    c = x.shape[1]
    mat = _col_matrix(x, kh, kw, stride, pad, oh, ow)
    gm = np.ascontiguousarray(g.transpose(0, 2, 3, 1)).reshape(n * oh * ow, co)
    return (gm.T @ mat).reshape(co, c, kh, kw)

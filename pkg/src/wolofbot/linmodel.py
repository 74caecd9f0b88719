"""Multinomial logistic regression on dense feature matrices.

Shared by the intent classifier and the learned dialogue policy. Training
is plain seeded mini-batch gradient descent from zero-initialized weights,
so identical (data, config) always reproduce bit-identical parameters.
"""

from __future__ import annotations

import numpy as np


def softmax(logits: np.ndarray) -> np.ndarray:
    """Row-wise softmax, shift-stabilized."""
    z = logits - logits.max(axis=-1, keepdims=True)
    e = np.exp(z)
    return e / e.sum(axis=-1, keepdims=True)


def loss_and_grad(
    weights: np.ndarray,
    bias: np.ndarray,
    x: np.ndarray,
    y: np.ndarray,
    l2: float = 0.0,
) -> tuple[float, np.ndarray, np.ndarray]:
    """Mean cross-entropy (+ L2 on weights) and its analytic gradients.

    weights: (C, D), bias: (C,), x: (N, D), y: (N,) int class indices.
    """
    n = x.shape[0]
    probs = softmax(x @ weights.T + bias)
    loss = -float(np.mean(np.log(probs[np.arange(n), y]))) + 0.5 * l2 * float(np.sum(weights**2))
    g = probs.copy()
    g[np.arange(n), y] -= 1.0
    grad_w = g.T @ x / n + l2 * weights
    grad_b = g.mean(axis=0)
    return loss, grad_w, grad_b


def fit(
    x: np.ndarray,
    y: np.ndarray,
    n_classes: int,
    epochs: int = 150,
    lr: float = 0.5,
    l2: float = 1e-3,
    batch_size: int = 8,
    seed: int = 13,
) -> tuple[np.ndarray, np.ndarray]:
    """Train softmax regression; returns (weights, bias)."""
    n, d = x.shape
    weights = np.zeros((n_classes, d))
    bias = np.zeros(n_classes)
    rng = np.random.default_rng(seed)
    for _ in range(epochs):
        order = rng.permutation(n)
        for start in range(0, n, batch_size):
            idx = order[start : start + batch_size]
            _, gw, gb = loss_and_grad(weights, bias, x[idx], y[idx], l2)
            weights -= lr * gw
            bias -= lr * gb
    return weights, bias


def numeric_grad(
    weights: np.ndarray,
    bias: np.ndarray,
    x: np.ndarray,
    y: np.ndarray,
    l2: float = 0.0,
    h: float = 1e-5,
) -> tuple[np.ndarray, np.ndarray]:
    """Central finite-difference gradients of the same loss (test oracle)."""

    def loss_at(w: np.ndarray, b: np.ndarray) -> float:
        return loss_and_grad(w, b, x, y, l2)[0]

    gw = np.zeros_like(weights)
    for i in range(weights.shape[0]):
        for j in range(weights.shape[1]):
            wp, wm = weights.copy(), weights.copy()
            wp[i, j] += h
            wm[i, j] -= h
            gw[i, j] = (loss_at(wp, bias) - loss_at(wm, bias)) / (2 * h)
    gb = np.zeros_like(bias)
    for i in range(bias.shape[0]):
        bp, bm = bias.copy(), bias.copy()
        bp[i] += h
        bm[i] -= h
        gb[i] = (loss_at(weights, bp) - loss_at(weights, bm)) / (2 * h)
    return gw, gb

"""Hand-written reference data used by several test modules."""

from __future__ import annotations

import numpy as np


def unit(n, *idx):
    v = np.zeros(n, dtype=np.int64)
    for i in idx:
        v[i] += 1
    return v


def tau_basis_images(r):
    """The closed formulas for tau on the basis e_0..e_r (valid for r >= 4)."""
    n = r + 1
    rho = np.ones(n, dtype=np.int64)
    images = {
        0: unit(n, 1, 2),
        1: unit(n, 0, 2),
        r - 1: -rho + unit(n, r),
        r: -rho + unit(n, r - 1),
        r - 2: rho,
    }
    for k in range(2, r - 2):
        images[k] = unit(n, k + 1)
    return images


def tensor_rule(kind, k, ell):
    """Closed tensor rules for L (x) V with V = rho_1 + tau_1, as a multiset of labels.

    tau_0 and tau_l are reducible and are replaced by rho_0 + rho_1 and
    rho_2 + rho_3.
    """
    def tau(j):
        if j == 0:
            return ["rho0", "rho1"]
        if j == ell:
            return ["rho2", "rho3"]
        return [f"tau{j}"]

    if kind == "rho":
        partner = {0: 1, 1: 0, 2: 3, 3: 2}[k]
        # rho_k (x) tau_1 is tau_1 for k = 0, 1 and tau_{l-1} for k = 2, 3
        return [f"rho{partner}"] + (tau(1) if k in (0, 1) else tau(ell - 1))
    # tau_k (x) rho_1 = tau_k, tau_k (x) tau_1 = tau_{k-1} + tau_{k+1}
    return [f"tau{k}"] + tau(k - 1) + tau(k + 1)

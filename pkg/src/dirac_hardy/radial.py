"""One-dimensional mode problems on truncated logarithmic grids.

Each angular mode reduces the weighted Dirac energy to a radial quadratic
form.  Substituting c(r) = r^g w(log r), with g = (b+2-n)/2 the ground-state
power, turns the mode's Rayleigh quotient into the constant-coefficient
Dirichlet problem

    ( integral |w'(t)|^2 + (k+g)^2 |w|^2 dt ) / ( integral |w|^2 dt )

on t in [-T, T].  Its minimum has the closed form (k+g)^2 + (pi/(2T))^2 up to
O(h^2) discretization error, which makes sharpness a quantitative convergence
statement: the discrete minimum decreases strictly in T and converges to the
mode coefficient from above.

Discretization is second-order central differences with Dirichlet ends and a
trapezoid (diagonal) mass matrix, so the pencil is symmetric tridiagonal and
the smallest generalized eigenvalue is found by bisection on the exact
Sturm-sequence inertia count, followed by inverse iteration for the vector.
Everything here is deterministic; no random starts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_banded

from .constants import (
    RemainderWeights,
    ckn_constant,
    ground_state_power,
    hardy_constant,
    is_admissible := None,  # placeholder removed below
)

# the import trick above is invalid python; real imports follow

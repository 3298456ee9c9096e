"""Hermitian anticommuting generator matrices in arbitrary dimension.

``build_generators(n)`` returns matrices sigma_1..sigma_n satisfying

    sigma_i sigma_j + sigma_j sigma_i = 2 delta_ij I,   sigma_i = sigma_i^*,

with entries restricted to {0, +-1, +-i}.  Entries are Gaussian integers
stored exactly, so the relation checks in :func:`verify_clifford` are exact
integer computations, not tolerance tests.

Construction: the three Pauli matrices seed the low dimensions (n = 2 uses
the first two, n = 3 all three, n = 1 the 1x1 matrix [1]); higher dimensions
are built by recursive tensor doubling, which doubles the spinor size when
stepping from even n to n+1 and reuses it when stepping from odd n to n+1.
The resulting spinor dimension is m = 2^ceil(n/2) for n >= 4.  Every result
downstream depends only on the anticommutation relations, not on this basis
choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

import numpy as np

from .exact import pair_add, pair_dagger, pair_eye, pair_matmul, pair_max_abs, pair_scale, to_int_pair
from .report import CaseRecord, VerificationReport

PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)


@dataclass(frozen=True, eq=False)
class CliffordRep:
    """An exact set of n Hermitian anticommuting generators of size m x m."""

    n: int
    m: int
    generators: tuple[np.ndarray, ...]


def spinor_dimension(n: int) -> int:
    """Spinor size used by :func:`build_generators`.

    2^ceil(n/2) in general; n = 1 and n = 3 use the smaller canonical
    representations (the scalar 1 and the Pauli triple).
    """
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    return {1: 1, 2: 2, 3: 2}.get(n, 2 ** ceil(n / 2))


def build_generators(n: int) -> CliffordRep:
    """Deterministically construct the generator set for dimension n."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    if n == 1:
        gens = [np.array([[1.0 + 0j]])]
    elif n == 2:
        gens = [PAULI_X.copy(), PAULI_Y.copy()]
    elif n == 3:
        gens = [PAULI_X.copy(), PAULI_Y.copy(), PAULI_Z.copy()]
    else:
        prev = build_generators(n - 1).generators
        mp = prev[0].shape[0]
        if spinor_dimension(n) == 2 * mp:
            eye = np.eye(mp, dtype=np.complex128)
            gens = [np.kron(PAULI_X, g) for g in prev]
            gens.append(np.kron(PAULI_Z, eye))
        else:
            eye = np.eye(mp // 2, dtype=np.complex128)
            gens = [g.copy() for g in prev]
            gens.append(np.kron(PAULI_Y, eye))
    for g in gens:
        g.flags.writeable = False
    return CliffordRep(n=n, m=gens[0].shape[0], generators=tuple(gens))


def verify_clifford(rep: CliffordRep) -> VerificationReport:
    """Check the anticommutation relations and Hermiticity exactly.

    The reported deviations are maxima of exact integer differences; a valid
    representation yields exactly zero for both.
    """
    pairs = [to_int_pair(g) for g in rep.generators]
    anti_dev = 0
    for i in range(rep.n):
        for j in range(i, rep.n):
            acc = pair_add(pair_matmul(pairs[i], pairs[j]), pair_matmul(pairs[j], pairs[i]))
            expected = pair_eye(rep.m, 2 if i == j else 0)
            diff = pair_add(acc, pair_scale(expected, -1))
            anti_dev = max(anti_dev, pair_max_abs(diff))
    herm_dev = 0
    for p in pairs:
        diff = pair_add(p, pair_scale(pair_dagger(p), -1))
        herm_dev = max(herm_dev, pair_max_abs(diff))
    cases = [
        CaseRecord(
            name="anticommutator",
            inputs={"n": rep.n, "m": rep.m},
            computed={"max_deviation": anti_dev},
            oracle={"expected": 0},
            margin=float(anti_dev),
            tolerance=0.0,
            passed=anti_dev == 0,
        ),
        CaseRecord(
            name="hermiticity",
            inputs={"n": rep.n, "m": rep.m},
            computed={"max_deviation": herm_dev},
            oracle={"expected": 0},
            margin=float(herm_dev),
            tolerance=0.0,
            passed=herm_dev == 0,
        ),
    ]
    return VerificationReport(command="verify-clifford", cases=cases)


def coordinate_matrix(rep: CliffordRep, x) -> np.ndarray:
    """Unnormalized sum x_i sigma_i; exact for integer coordinates."""
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (rep.n,):
        raise ValueError(f"point must have {rep.n} coordinates")
    out = np.zeros((rep.m, rep.m), dtype=np.complex128)
    for xi, g in zip(x, rep.generators):
        out += xi * g
    return out


def radial_projection(rep: CliffordRep, x) -> np.ndarray:
    """The unit-direction matrix (x/|x|) . sigma; its square is the identity."""
    x = np.asarray(x, dtype=np.float64)
    norm = float(np.linalg.norm(x))
    if norm == 0.0:
        raise ValueError("radial projection is undefined at the origin")
    return coordinate_matrix(rep, x / norm)


def rep_to_json(rep: CliffordRep) -> dict:
    """JSON-friendly dump: entries as [re, im] integer pairs."""
    gens = []
    for g in rep.generators:
        re, im = to_int_pair(g)
        gens.append([[[int(re[i, j]), int(im[i, j])] for j in range(rep.m)] for i in range(rep.m)])
    return {"n": rep.n, "m": rep.m, "generators": gens}


def rep_from_json(data: dict) -> CliffordRep:
    n, m = int(data["n"]), int(data["m"])
    gens = []
    for entry in data["generators"]:
        mat = np.array([[complex(c[0], c[1]) for c in row] for row in entry], dtype=np.complex128)
        mat.flags.writeable = False
        gens.append(mat)
    if len(gens) != n or any(g.shape != (m, m) for g in gens):
        raise ValueError("inconsistent generator dump")
    return CliffordRep(n=n, m=m, generators=tuple(gens))

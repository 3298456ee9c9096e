"""Exact arithmetic: rational-complex scalars and Gaussian-integer matrix pairs.

The operator identities certified by this package are polynomial statements
with Gaussian-integer data, so they are checked by exact computation rather
than floating-point tolerances.  Scalars are pairs of ``fractions.Fraction``;
matrices with Gaussian-integer entries travel as (real, imag) int64 arrays,
which keeps matrix products exact and fast.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

import numpy as np


class QC:
    """Complex scalar with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    def __add__(self, other):
        other = _coerce(other)
        return QC(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return QC(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return QC(-self.re, -self.im)

    def __mul__(self, other):
        other = _coerce(other)
        return QC(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by zero QC scalar")
        return QC(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def conjugate(self):
        return QC(self.re, -self.im)

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (QC, int, Fraction)):
            other = _coerce(other)
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        if self.im == 0:
            return f"QC({self.re})"
        return f"QC({self.re}, {self.im})"

    def to_complex(self):
        return complex(self.re, self.im)


QC_ZERO = QC(0)
QC_ONE = QC(1)
QC_I = QC(0, 1)


def _coerce(x):
    if isinstance(x, QC):
        return x
    if isinstance(x, (int, Fraction)):
        return QC(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to QC")


def qc_from_exact_complex(z: complex) -> QC:
    """Convert a complex float whose parts are exact integers."""
    re, im = z.real, z.imag
    if re != int(re) or im != int(im):
        raise ValueError(f"entry {z!r} is not a Gaussian integer")
    return QC(int(re), int(im))


# ---------------------------------------------------------------------------
# Exact linear algebra over QC (small dense systems only).

def nullspace(rows: list[list[QC]]) -> list[list[QC]]:
    """Exact kernel basis of the matrix given by ``rows``.

    Deterministic first-nonzero pivoting; basis vectors are scaled to
    coprime Gaussian-integer entries with a sign-normalized leading entry.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    mat = [list(row) for row in rows]
    nrows = len(mat)
    pivot_cols: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if not mat[i][c].is_zero()), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = QC_ONE / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(nrows):
            if i != r and not mat[i][c].is_zero():
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivot_cols.append(c)
        r += 1
        if r == nrows:
            break
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        vec = [QC_ZERO] * ncols
        vec[fc] = QC_ONE
        for i, pc in enumerate(pivot_cols):
            vec[pc] = -mat[i][fc]
        basis.append(_integerize(vec))
    return basis


def _integerize(vec: list[QC]) -> list[QC]:
    """Scale to coprime Gaussian-integer entries, leading entry positive."""
    dens = [x.re.denominator for x in vec] + [x.im.denominator for x in vec]
    scale = lcm(*dens) if dens else 1
    ints = [(int(x.re * scale), int(x.im * scale)) for x in vec]
    g = 0
    for a, b in ints:
        g = gcd(g, gcd(abs(a), abs(b)))
    if g > 1:
        ints = [(a // g, b // g) for a, b in ints]
    lead = next(((a, b) for a, b in ints if a or b), (1, 0))
    if lead[0] < 0 or (lead[0] == 0 and lead[1] < 0):
        ints = [(-a, -b) for a, b in ints]
    return [QC(a, b) for a, b in ints]


# ---------------------------------------------------------------------------
# Gaussian-integer matrices as (real, imag) int64 pairs.

IntPair = tuple[np.ndarray, np.ndarray]


def to_int_pair(mat: np.ndarray) -> IntPair:
    """Split a complex matrix with Gaussian-integer entries into int64 parts."""
    re = np.rint(mat.real)
    im = np.rint(mat.imag)
    if not (np.array_equal(re, mat.real) and np.array_equal(im, mat.imag)):
        raise ValueError("matrix entries are not Gaussian integers")
    return re.astype(np.int64), im.astype(np.int64)


def pair_matmul(a: IntPair, b: IntPair) -> IntPair:
    ar, ai = a
    br, bi = b
    return ar @ br - ai @ bi, ar @ bi + ai @ br


def pair_add(a: IntPair, b: IntPair) -> IntPair:
    return a[0] + b[0], a[1] + b[1]


def pair_scale(a: IntPair, s: int) -> IntPair:
    return s * a[0], s * a[1]

def pair_dagger(a: IntPair) -> IntPair:
    return a[0].T.copy(), -a[1].T.copy()


def pair_eye(m: int, scale: int = 1) -> IntPair:
    return scale * np.eye(m, dtype=np.int64), np.zeros((m, m), dtype=np.int64)


def pair_max_abs(a: IntPair) -> int:
    if a[0].size == 0:
        return 0
    return int(max(np.abs(a[0]).max(), np.abs(a[1]).max()))


def pair_to_complex(a: IntPair) -> np.ndarray:
    return a[0].astype(np.complex128) + 1j * a[1].astype(np.complex128)

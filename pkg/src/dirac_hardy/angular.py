"""Exact polynomial-spinor calculus and the angular operator's spectrum.

Spinor-valued polynomials with exact rational-complex coefficients are the
substrate on which the first-order operator identities are certified:

* ``apply_dirac``     -- sum_i sigma_i d/dx_i, the square root of the Laplacian
* ``apply_angular``   -- sum_{j<k} sigma_j sigma_k (x_j d_k - x_k d_j), the
  tangential (angular) operator commuting with radial scaling
* ``verify_polar_identity``    -- |x|^2 (dirac p) == (x.sigma)(x.grad p + angular p)
* ``verify_beltrami_relation`` -- angular^2 - (n-2) angular == -(sphere Laplacian)

All four run in exact arithmetic; their pass criteria are exact equality.
``spectrum_bruteforce`` diagonalizes the angular operator on each space of
homogeneous spinors by exact kernel extraction over an integer candidate
window, certifying completeness by matching total multiplicity against the
space dimension.  The eigenvalues always form a subset of the admissible mode
set: all integers except 1..n-2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .clifford import CliffordRep
from .exact import QC, QC_ONE, QC_ZERO, nullspace, pair_to_complex, to_int_pair, qc_from_exact_complex
from .report import CaseRecord, VerificationReport

BASIS_SIZE_LIMIT = 2000


@lru_cache(maxsize=None)
def multi_indices(n: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """All exponent tuples of length n summing to ``degree``, lexicographic."""
    if n == 1:
        return ((degree,),)
    out = []
    for first in range(degree, -1, -1):
        for rest in multi_indices(n - 1, degree - first):
            out.append((first,) + rest)
    return tuple(out)


def _matrix_triples(mat: np.ndarray):
    """Nonzero entries of a Gaussian-integer matrix as (row, col, QC)."""
    triples = []
    m = mat.shape[0]
    for i in range(m):
        for j in range(m):
            z = mat[i, j]
            if z != 0:
                triples.append((i, j, qc_from_exact_complex(complex(z))))
    return triples


class PolySpinor:
    """Spinor-valued polynomial with exact rational-complex coefficients.

    ``terms`` maps exponent tuples to length-m coefficient vectors; zero
    vectors are never stored, so equality of two spinors is equality of the
    dictionaries.
    """

    __slots__ = ("n", "m", "terms")

    def __init__(self, n: int, m: int, terms: dict[tuple[int, ...], tuple[QC, ...]]):
        self.n = n
        self.m = m
        self.terms = terms

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int, m: int) -> "PolySpinor":
        return cls(n, m, {})

    @classmethod
    def monomial(cls, n: int, m: int, alpha: tuple[int, ...], component: int, coeff=1) -> "PolySpinor":
        coeff = coeff if isinstance(coeff, QC) else QC(coeff)
        if coeff.is_zero():
            return cls.zero(n, m)
        vec = tuple(coeff if c == component else QC_ZERO for c in range(m))
        return cls(n, m, {tuple(alpha): vec})

    @classmethod
    def from_terms(cls, n: int, m: int, raw: dict) -> "PolySpinor":
        terms = {}
        for alpha, vec in raw.items():
            vec = tuple(v if isinstance(v, QC) else QC(v) for v in vec)
            if any(not v.is_zero() for v in vec):
                terms[tuple(alpha)] = vec
        return cls(n, m, terms)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Max total degree; -1 for the zero spinor."""
        if not self.terms:
            return -1
        return max(sum(a) for a in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(a) for a in self.terms}
        return len(degs) <= 1

    def __eq__(self, other):
        if not isinstance(other, PolySpinor):
            return NotImplemented
        return self.n == other.n and self.m == other.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.m, frozenset(self.terms.items())))

    def __repr__(self):
        return f"PolySpinor(n={self.n}, m={self.m}, nterms={len(self.terms)})"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "PolySpinor") -> "PolySpinor":
        self._check(other)
        terms = dict(self.terms)
        for alpha, vec in other.terms.items():
            if alpha in terms:
                merged = tuple(a + b for a, b in zip(terms[alpha], vec))
                if any(not v.is_zero() for v in merged):
                    terms[alpha] = merged
                else:
                    del terms[alpha]
            else:
                terms[alpha] = vec
        return PolySpinor(self.n, self.m, terms)

    def __sub__(self, other: "PolySpinor") -> "PolySpinor":
        return self + other.scaled(QC(-1))

    def scaled(self, c) -> "PolySpinor":
        c = c if isinstance(c, QC) else QC(c)
        if c.is_zero():
            return PolySpinor.zero(self.n, self.m)
        return PolySpinor(self.n, self.m, {a: tuple(c * v for v in vec) for a, vec in self.terms.items()})

    def diff(self, i: int) -> "PolySpinor":
        terms = {}
        for alpha, vec in self.terms.items():
            if alpha[i] == 0:
                continue
            new = list(alpha)
            new[i] -= 1
            factor = QC(alpha[i])
            key = tuple(new)
            add = tuple(factor * v for v in vec)
            if key in terms:
                merged = tuple(a + b for a, b in zip(terms[key], add))
                if any(not v.is_zero() for v in merged):
                    terms[key] = merged
                else:
                    del terms[key]
            else:
                terms[key] = add
        return PolySpinor(self.n, self.m, terms)

    def times_coordinate(self, i: int) -> "PolySpinor":
        terms = {}
        for alpha, vec in self.terms.items():
            new = list(alpha)
            new[i] += 1
            terms[tuple(new)] = vec
        return PolySpinor(self.n, self.m, terms)

    def times_radius_sq(self) -> "PolySpinor":
        out = PolySpinor.zero(self.n, self.m)
        for i in range(self.n):
            out = out + self.times_coordinate(i).times_coordinate(i)
        return out

    def apply_matrix(self, triples) -> "PolySpinor":
        """Left-multiply every coefficient vector by the matrix given as triples."""
        terms = {}
        for alpha, vec in self.terms.items():
            out = [QC_ZERO] * self.m
            for i, j, c in triples:
                if not vec[j].is_zero():
                    out[i] = out[i] + c * vec[j]
            if any(not v.is_zero() for v in out):
                terms[alpha] = tuple(out)
        return PolySpinor(self.n, self.m, terms)

    # -- numeric evaluation --------------------------------------------------

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        """Evaluate at an array of points with shape (P, n); returns (P, m)."""
        points = np.asarray(points, dtype=np.float64)
        return self.evaluate_mesh([points[:, i] for i in range(self.n)])

    def evaluate_mesh(self, coords) -> np.ndarray:
        """Evaluate on broadcast coordinate arrays; returns shape + (m,)."""
        shape = np.shape(coords[0])
        out = np.zeros(shape + (self.m,), dtype=np.complex128)
        for alpha, vec in self.terms.items():
            mono = np.ones(shape, dtype=np.float64)
            for i, a in enumerate(alpha):
                if a:
                    mono = mono * coords[i] ** a
            for c, v in enumerate(vec):
                if not v.is_zero():
                    out[..., c] += mono * v.to_complex()
        return out

    def _check(self, other: "PolySpinor") -> None:
        if self.n != other.n or self.m != other.m:
            raise ValueError("dimension mismatch between polynomial spinors")


def _check_dims(rep: CliffordRep, p: PolySpinor) -> None:
    if rep.n != p.n or rep.m != p.m:
        raise ValueError(
            f"representation (n={rep.n}, m={rep.m}) does not match spinor (n={p.n}, m={p.m})"
        )


def _generator_triples(rep: CliffordRep):
    return [_matrix_triples(g) for g in rep.generators]


def _pair_product_triples(rep: CliffordRep):
    out = {}
    for j in range(rep.n):
        for k in range(j + 1, rep.n):
            out[(j, k)] = _matrix_triples(rep.generators[j] @ rep.generators[k])
    return out


def apply_dirac(rep: CliffordRep, p: PolySpinor) -> PolySpinor:
    """sum_i sigma_i (d p / dx_i), computed exactly."""
    _check_dims(rep, p)
    out = PolySpinor.zero(p.n, p.m)
    for i, triples in enumerate(_generator_triples(rep)):
        out = out + p.diff(i).apply_matrix(triples)
    return out


def apply_angular(rep: CliffordRep, p: PolySpinor) -> PolySpinor:
    """sum_{j<k} sigma_j sigma_k (x_j d_k - x_k d_j) p; degree-preserving."""
    _check_dims(rep, p)
    out = PolySpinor.zero(p.n, p.m)
    for (j, k), triples in _pair_product_triples(rep).items():
        rot = p.diff(k).times_coordinate(j) - p.diff(j).times_coordinate(k)
        out = out + rot.apply_matrix(triples)
    return out


def apply_euler(p: PolySpinor) -> PolySpinor:
    """sum_i x_i d_i p; multiplies each homogeneous part by its degree."""
    out = PolySpinor.zero(p.n, p.m)
    for i in range(p.n):
        out = out + p.diff(i).times_coordinate(i)
    return out


def laplacian(p: PolySpinor) -> PolySpinor:
    out = PolySpinor.zero(p.n, p.m)
    for i in range(p.n):
        out = out + p.diff(i).diff(i)
    return out


def verify_polar_identity(rep: CliffordRep, p: PolySpinor) -> VerificationReport:
    """Exact check of |x|^2 (dirac p) == (x.sigma)(euler p + angular p).

    Both sides are multiplied by |x|^2 to clear the 1/|x| in the polar
    factorization; requires a homogeneous input so that radial powers are
    tracked polynomially.
    """
    _check_dims(rep, p)
    if not p.is_homogeneous():
        raise ValueError("polar identity check requires a homogeneous spinor")
    lhs = apply_dirac(rep, p).times_radius_sq()
    inner = apply_euler(p) + apply_angular(rep, p)
    gens = _generator_triples(rep)
    rhs = PolySpinor.zero(p.n, p.m)
    for i in range(p.n):
        rhs = rhs + inner.apply_matrix(gens[i]).times_coordinate(i)
    diff = lhs - rhs
    mismatches = len(diff.terms)
    case = CaseRecord(
        name="polar-identity",
        inputs={"n": p.n, "m": p.m, "degree": p.degree()},
        computed={"mismatched_monomials": mismatches},
        oracle={"expected": 0},
        margin=float(mismatches),
        tolerance=0.0,
        passed=mismatches == 0,
    )
    return VerificationReport(command="verify-polar-identity", cases=[case])


def _degree_basis(n: int, m: int, degree: int):
    alphas = multi_indices(n, degree)
    size = len(alphas) * m
    if size > BASIS_SIZE_LIMIT:
        raise ValueError(f"degree-{degree} spinor basis has size {size} > {BASIS_SIZE_LIMIT}")
    return alphas, size


def _operator_matrix(op, n: int, m: int, degree: int) -> np.ndarray:
    """Integer-pair matrix of a degree-preserving exact operator."""
    alphas, size = _degree_basis(n, m, degree)
    index = {a: i for i, a in enumerate(alphas)}
    re = np.zeros((size, size), dtype=np.int64)
    im = np.zeros((size, size), dtype=np.int64)
    for ai, alpha in enumerate(alphas):
        for comp in range(m):
            col = ai * m + comp
            q = op(PolySpinor.monomial(n, m, alpha, comp))
            for beta, vec in q.terms.items():
                bi = index[beta]
                for c, v in enumerate(vec):
                    if v.is_zero():
                        continue
                    if v.re.denominator != 1 or v.im.denominator != 1:
                        raise AssertionError("operator matrix entry is not a Gaussian integer")
                    re[bi * m + c, col] = int(v.re)
                    im[bi * m + c, col] = int(v.im)
    return re, im


def verify_beltrami_relation(rep: CliffordRep, degree: int) -> VerificationReport:
    """Exact matrix identity angular^2 - (n-2) angular + sphere_laplacian == 0.

    On homogeneous degree-d functions the sphere Laplacian is realized through
    the Euler identity as |x|^2 Delta - d(d+n-2).
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    n, m = rep.n, rep.m
    lre, lim = _operator_matrix(lambda p: apply_angular(rep, p), n, m, degree)
    sre, sim = _operator_matrix(lambda p: laplacian(p).times_radius_sq(), n, m, degree)
    shift = degree * (degree + n - 2)
    sre = sre - shift * np.eye(sre.shape[0], dtype=np.int64)
    # angular^2 - (n-2) angular + (|x|^2 Delta - d(d+n-2))
    rr = lre @ lre - lim @ lim - (n - 2) * lre + sre
    ri = lre @ lim + lim @ lre - (n - 2) * lim + sim
    dev = int(max(np.abs(rr).max(), np.abs(ri).max())) if rr.size else 0
    case = CaseRecord(
        name="beltrami-relation",
        inputs={"n": n, "m": m, "degree": degree, "basis_size": rr.shape[0]},
        computed={"max_deviation": dev},
        oracle={"expected": 0},
        margin=float(dev),
        tolerance=0.0,
        passed=dev == 0,
    )
    return VerificationReport(command="verify-beltrami-relation", cases=[case])


def admissible_spectrum(n: int, k_lo: int, k_hi: int) -> list[int]:
    """Integers in [k_lo, k_hi] outside the excluded band 1..n-2, sorted."""
    if k_lo > k_hi:
        raise ValueError("empty eigenvalue window")
    excluded = set(range(1, n - 1))
    return [k for k in range(k_lo, k_hi + 1) if k not in excluded]


def is_admissible_mode(n: int, k: int) -> bool:
    return not (1 <= k <= n - 2)


@dataclass(frozen=True)
class SpectrumEntry:
    eigenvalue: int
    multiplicity: int
    degrees: tuple[int, ...]
    basis: tuple[PolySpinor, ...]


@dataclass(frozen=True)
class AngularSpectrum:
    """Eigenvalues and exact eigenbases of the angular operator, by degree."""

    n: int
    m: int
    degree_cap: int
    entries: tuple[SpectrumEntry, ...]
    degree_dims: tuple[int, ...]

    def eigenvalues(self) -> list[int]:
        return [e.eigenvalue for e in self.entries]

    def entry(self, k: int) -> SpectrumEntry:
        for e in self.entries:
            if e.eigenvalue == k:
                return e
        raise KeyError(f"eigenvalue {k} not present up to degree {self.degree_cap}")

    def multiplicity(self, k: int) -> int:
        return self.entry(k).multiplicity

    def basis_for(self, k: int) -> tuple[PolySpinor, ...]:
        return self.entry(k).basis

    def to_json(self, include_basis: bool = False) -> dict:
        entries = []
        for e in self.entries:
            item = {
                "eigenvalue": e.eigenvalue,
                "multiplicity": e.multiplicity,
                "degrees": list(e.degrees),
            }
            if include_basis:
                item["basis"] = [
                    {
                        "degree": p.degree(),
                        "terms": [
                            {
                                "exponents": list(alpha),
                                "coefficients": [[str(v.re), str(v.im)] for v in vec],
                            }
                            for alpha, vec in sorted(p.terms.items())
                        ],
                    }
                    for p in e.basis
                ]
            entries.append(item)
        return {
            "n": self.n,
            "m": self.m,
            "degree_cap": self.degree_cap,
            "degree_dimensions": list(self.degree_dims),
            "entries": entries,
        }


def spectrum_bruteforce(rep: CliffordRep, degree_cap: int) -> AngularSpectrum:
    """Diagonalize the angular operator on homogeneous spinors of degree <= cap.

    For each degree the integer candidate window [-d-n, d+n] is scanned and
    the exact kernel of (angular - k) extracted; the summed kernel dimensions
    must exhaust the space, which certifies that no eigenvalue was missed.
    """
    if degree_cap < 0:
        raise ValueError("degree cap must be >= 0")
    n, m = rep.n, rep.m
    found: dict[int, list[PolySpinor]] = {}
    found_degrees: dict[int, list[int]] = {}
    dims = []
    for degree in range(degree_cap + 1):
        alphas, size = _degree_basis(n, m, degree)
        dims.append(size)
        lre, lim = _operator_matrix(lambda p: apply_angular(rep, p), n, m, degree)
        total = 0
        for k in range(-degree - n, degree + n + 1):
            rows = []
            for i in range(size):
                row = [QC(int(lre[i, j]), int(lim[i, j])) for j in range(size)]
                row[i] = row[i] - QC(k)
                rows.append(row)
            kernel = nullspace(rows)
            if not kernel:
                continue
            if not is_admissible_mode(n, k):
                raise AssertionError(f"eigenvalue {k} lies in the excluded band for n={n}")
            for vec in kernel:
                terms = {}
                for ai, alpha in enumerate(alphas):
                    coeffs = tuple(vec[ai * m + c] for c in range(m))
                    if any(not v.is_zero() for v in coeffs):
                        terms[alpha] = coeffs
                p = PolySpinor(n, m, terms)
                if apply_angular(rep, p) != p.scaled(QC(k)):
                    raise AssertionError("kernel vector fails the exact eigenvector check")
                found.setdefault(k, []).append(p)
                found_degrees.setdefault(k, []).append(degree)
            total += len(kernel)
        if total != size:
            raise AssertionError(
                f"completeness certificate failed at degree {degree}: {total} != {size}"
            )
    entries = tuple(
        SpectrumEntry(
            eigenvalue=k,
            multiplicity=len(found[k]),
            degrees=tuple(found_degrees[k]),
            basis=tuple(found[k]),
        )
        for k in sorted(found)
    )
    return AngularSpectrum(n=n, m=m, degree_cap=degree_cap, entries=entries, degree_dims=tuple(dims))


# ---------------------------------------------------------------------------
# Sphere quadrature and mode projection (n in {2, 3}).


@dataclass(frozen=True, eq=False)
class SphereGrid:
    n: int
    nodes: np.ndarray    # (M, n) unit vectors
    weights: np.ndarray  # (M,) positive, summing to the sphere area


def sphere_grid(n: int, exactness_degree: int) -> SphereGrid:
    """Quadrature exact for polynomial integrands up to ``exactness_degree``.

    n = 2 uses the uniform trapezoid rule on the circle; n = 3 a product of
    Gauss-Legendre in the polar cosine and uniform azimuthal angles.
    """
    if n == 2:
        count = 2 * exactness_degree + 8
        theta = 2.0 * np.pi * np.arange(count) / count
        nodes = np.stack([np.cos(theta), np.sin(theta)], axis=1)
        weights = np.full(count, 2.0 * np.pi / count)
        return SphereGrid(n=2, nodes=nodes, weights=weights)
    if n == 3:
        nz = exactness_degree // 2 + 4
        nphi = 2 * exactness_degree + 8
        z, wz = np.polynomial.legendre.leggauss(nz)
        phi = 2.0 * np.pi * np.arange(nphi) / nphi
        wphi = 2.0 * np.pi / nphi
        rho = np.sqrt(1.0 - z**2)
        nodes = np.stack(
            [
                np.outer(rho, np.cos(phi)).ravel(),
                np.outer(rho, np.sin(phi)).ravel(),
                np.outer(z, np.ones_like(phi)).ravel(),
            ],
            axis=1,
        )
        weights = np.outer(wz, np.full_like(phi, wphi)).ravel()
        return SphereGrid(n=3, nodes=nodes, weights=weights)
    raise ValueError("sphere grids are provided for n in {2, 3} only")


@dataclass(eq=False)
class ModeBasis:
    """Quadrature-orthonormalized eigenbasis of one angular mode."""

    eigenvalue: int
    grid: SphereGrid
    functions: np.ndarray  # (A, M, m)
    condition: float
    kept: int
    dropped: int


def orthonormal_mode_basis(
    spectrum: AngularSpectrum, grid: SphereGrid, k: int, drop_tol: float = 1e-9
) -> ModeBasis:
    """Orthonormalize the exact eigenvectors of mode k on the sphere grid.

    Eigenvectors from different homogeneity degrees can restrict to the same
    sphere function; Gram directions below ``drop_tol`` (relative) are dropped
    and the retained condition number reported.
    """
    basis = spectrum.basis_for(k)
    raw = np.stack([p.evaluate(grid.nodes) for p in basis])  # (J, M, m)
    weighted = raw * grid.weights[None, :, None]
    gram = np.einsum("jkc,lkc->jl", np.conj(weighted), raw)
    vals, vecs = np.linalg.eigh((gram + gram.conj().T) / 2.0)
    vmax = float(vals.max())
    keep = vals > drop_tol * vmax
    kept_vals = vals[keep]
    white = vecs[:, keep] / np.sqrt(kept_vals)[None, :]
    functions = np.einsum("ja,jkc->akc", white, raw)
    condition = float(vmax / kept_vals.min())
    return ModeBasis(
        eigenvalue=k,
        grid=grid,
        functions=functions,
        condition=condition,
        kept=int(keep.sum()),
        dropped=int((~keep).sum()),
    )


def mode_project(
    spectrum: AngularSpectrum,
    grid: SphereGrid,
    values: np.ndarray,
    k: int,
    drop_tol: float = 1e-9,
) -> tuple[np.ndarray, ModeBasis]:
    """Project sphere samples onto mode k.

    ``values`` has shape (R, M, m): the field sampled at R radii times the
    grid nodes.  Returns the (R, A) coefficient array in the orthonormalized
    mode basis together with the basis object.
    """
    mb = orthonormal_mode_basis(spectrum, grid, k, drop_tol=drop_tol)
    values = np.asarray(values, dtype=np.complex128)
    if values.ndim != 3 or values.shape[1] != grid.nodes.shape[0] or values.shape[2] != spectrum.m:
        raise ValueError("values must have shape (radii, grid nodes, spinor components)")
    coeffs = np.einsum("akc,k,rkc->ra", np.conj(mb.functions), grid.weights, values)
    return coeffs, mb

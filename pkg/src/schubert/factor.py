"""Ordered factorization engines and cell parametrization maps.

Every special unitary matrix has a unique factorization into
pseudo-rotations whose axis min-indices strictly increase; the tuple of
those indices (entries 1 dropped into a leading correction factor) is the
Schubert symbol of the matrix and names its Schubert cell.  The symmetric
and skew-symmetric Cartan models carry analogous unique factorizations:
half-angle real-axis factors applied by iterated Cartan conjugation, and
quaternionic pairs ``(A, sigma(A*))`` peeled off two at a time.

The ``schubert_map*`` functions are the forward cell parametrizations;
together with the factorization engines they form the round-trip oracles
used throughout the test suite.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from . import cohom
from .errors import (
    ConvergenceFailure,
    DimensionMismatch,
    InvalidSymbol,
    NotInFiber,
    NotInModel,
    PreconditionViolated,
    RealAxisExtractionFailure,
    StructureViolation,
    UnsupportedClass,
)
from .numlin import (
    as_square_matrix,
    check_unitary,
    haar_sample,
    hermitian_inner,
    jn,
    unitary_eigenspaces,
)
from .rotor import (
    TAU,
    PseudoRotation,
    apply,
    canonical_axis,
    check_class,
    in_cartan_model,
    jmul,
    min_index,
    sigma,
)
from .tolerances import DEFAULT_TOL, ToleranceConfig, in_gray_zone


def validate_symbol_entries(entries: Sequence[int], ambient: int, klass: str) -> tuple[int, ...]:
    check_class(klass)
    out = tuple(int(m) for m in entries)
    if any(b <= a for a, b in zip(out, out[1:])):
        raise InvalidSymbol(f"entries must strictly increase, got {out}")
    if out and out[0] < 2:
        raise InvalidSymbol(f"entries must exceed 1, got {out}")
    top = ambient if klass in ("general", "symmetric") else ambient // 2
    if klass == "skew" and ambient % 2 != 0:
        raise InvalidSymbol("skew symbols need an even ambient dimension")
    if out and out[-1] > top:
        raise InvalidSymbol(f"entry {out[-1]} exceeds the bound {top}")
    return out


@dataclass(frozen=True)
class SchubertSymbol:
    """Strictly increasing tuple of indices naming a Schubert cell.

    ``ambient`` is the matrix dimension (2n for the skew class, whose
    entries are bounded by n).
    """

    entries: tuple[int, ...]
    ambient: int
    klass: str = "general"

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "entries", validate_symbol_entries(self.entries, self.ambient, self.klass)
        )

    @property
    def length(self) -> int:
        return len(self.entries)

    @property
    def weight(self) -> int:
        return sum(self.entries)

    def dim(self) -> int:
        return cohom.cell_dim(self.entries, self.klass)

    def __str__(self) -> str:
        return "(" + ",".join(str(m) for m in self.entries) + ")"


@dataclass(frozen=True)
class OrderedFactorization:
    """A product of pseudo-rotations with monotone min-indices.

    ``factors`` holds the symbol-carrying rotations in product order;
    ``correction`` is the optional min-index-1 factor (leading for
    increasing order, trailing for decreasing).  For the symmetric class
    the factors are the half-angle rotations C_j and the matrix is
    ``P P^T`` for P the plain product; for the skew class they are the
    quaternionic half factors and the matrix is ``P sigma(P*)``.
    """

    klass: str
    order: str
    ambient: int
    factors: tuple[PseudoRotation, ...]
    correction: Optional[PseudoRotation] = None
    residual: float = 0.0
    boundary_ambiguous: bool = False

    def all_factors(self) -> list[PseudoRotation]:
        """Factors in product order, correction included."""
        flat = list(self.factors)
        if self.correction is not None:
            flat = flat + [self.correction] if self.order == "decreasing" else [self.correction] + flat
        return flat

    def left_product(self) -> np.ndarray:
        out = np.eye(self.ambient, dtype=np.complex128)
        for f in self.all_factors():
            out = out @ f.matrix()
        return out

    def matrix(self) -> np.ndarray:
        p = self.left_product()
        if self.klass == "general":
            return p
        if self.klass == "symmetric":
            return p @ p.T
        return p @ sigma(p.conj().T, "skew")

    def min_indices(self, tol: ToleranceConfig = DEFAULT_TOL) -> tuple[int, ...]:
        return tuple(f.min_index(tol) for f in self.factors)

    def symbol(self, tol: ToleranceConfig = DEFAULT_TOL) -> SchubertSymbol:
        mins = sorted(self.min_indices(tol))
        if self.klass == "skew":
            entries = tuple((m + 1) // 2 for m in mins)
        else:
            entries = tuple(m for m in mins if m > 1)
        return SchubertSymbol(entries, self.ambient, self.klass)


def _check_su(b, tol: ToleranceConfig) -> np.ndarray:
    b = check_unitary(b, tol)
    det = complex(np.linalg.det(b))
    if abs(det - 1.0) > 100 * tol.tol_residual:
        raise NotInFiber(f"det = {det:.6g}, expected 1")
    return b


def _tail_gray(axis: np.ndarray, k: int, tol: ToleranceConfig) -> bool:
    """Gray-zone check for the min-index decision of a unit axis.

    The operative zero threshold for axis coordinates is the snapping
    threshold of ``canonical_axis``, so ambiguity is measured around that;
    the span is narrower than for angles because the snap already absorbs
    the expected near-boundary contamination.
    """
    mags = np.abs(axis)
    if in_gray_zone(mags[k - 1], tol.axis_snap, span=4.0):
        return True
    return bool(np.any([in_gray_zone(m, tol.axis_snap, span=4.0) for m in mags[k:]]))


def flag_adapted_basis(
    basis: np.ndarray, tol: ToleranceConfig = DEFAULT_TOL
) -> tuple[list[np.ndarray], bool]:
    """Orthonormal basis of span(columns) with strictly increasing min-indices.

    Repeatedly reduces each vector against the already placed one with the
    same min-index, which realizes the intersection of the space with the
    smallest flag subspace meeting it; a final Gram-Schmidt pass in
    ascending min-index order restores orthonormality without disturbing
    the indices.
    """
    placed: dict[int, np.ndarray] = {}
    gray = False
    for i in range(basis.shape[1]):
        w = np.array(basis[:, i], dtype=np.complex128)
        while True:
            nrm = float(np.linalg.norm(w))
            if nrm <= tol.tol_zero:
                raise ConvergenceFailure("flag adaptation lost a basis vector")
            w = w / nrm
            k = min_index(w, tol)
            gray = gray or _tail_gray(w, k, tol)
            if k not in placed:
                placed[k] = w
                break
            w = w - (w[k - 1] / placed[k][k - 1]) * placed[k]
    axes: list[np.ndarray] = []
    for k in sorted(placed):
        w = placed[k]
        for prev in axes:
            w = w - hermitian_inner(w, prev) * prev
        w = w / np.linalg.norm(w)
        axes.append(w)
    return [canonical_axis(w, tol) for w in axes], gray


def _initial_factors(
    b: np.ndarray, tol: ToleranceConfig, seed: int
) -> tuple[list[PseudoRotation], bool]:
    """Commuting eigen-factorization sorted by min-index."""
    clusters, gray = unitary_eigenspaces(b, tol, seed)
    factors: list[PseudoRotation] = []
    for cl in clusters:
        axes, g = flag_adapted_basis(cl.basis, tol)
        gray = gray or g
        factors.extend(PseudoRotation(cl.angle, ax) for ax in axes)
    factors.sort(key=lambda f: (f.min_index(tol), f.theta))
    return factors, gray


def _ordered_rewrite(
    factors: list[PseudoRotation], n: int, tol: ToleranceConfig
) -> list[PseudoRotation]:
    """Whitehead bubble pass: rewrite until min-indices strictly increase.

    Each same-index rewrite strictly lowers the index sum, and between such
    events the rewrites only reduce inversions of a fixed multiset, so the
    budget n*k^2 bounds the work for well-posed inputs.
    """
    from .rotor import whitehead_interchange

    work = list(factors)
    mins = [f.min_index(tol) for f in work]
    budget = n * max(1, len(work)) ** 2 + 16
    used = 0
    while True:
        j = -1
        for i in range(len(work) - 1):
            if mins[i] >= mins[i + 1]:
                j = i
        if j < 0:
            return work
        used += 1
        if used > budget:
            raise ConvergenceFailure(f"interchange budget {budget} exhausted")
        first, second, _ = whitehead_interchange(work[j], work[j + 1], tol)
        repl = [f for f in (first, second) if f is not None and not f.is_identity(tol)]
        work[j : j + 2] = repl
        mins[j : j + 2] = [f.min_index(tol) for f in repl]


def _split_correction(
    work: list[PseudoRotation], tol: ToleranceConfig
) -> tuple[Optional[PseudoRotation], list[PseudoRotation]]:
    if work and work[0].min_index(tol) == 1:
        e1 = np.zeros(work[0].n, dtype=np.complex128)
        e1[0] = 1.0
        return PseudoRotation(work[0].theta, e1), work[1:]
    return None, work


def _angle_gray(factors: Sequence[PseudoRotation], tol: ToleranceConfig) -> bool:
    return any(in_gray_zone(f.theta, tol.tol_angle) for f in factors)


def factorize_su(
    b, tol: ToleranceConfig = DEFAULT_TOL, seed: int = 0
) -> OrderedFactorization:
    """Unique increasing ordered factorization of a special unitary matrix.

    Eigen-factors (identity eigenvalues dropped) are flag-adapted within
    each eigenspace and then reordered by Whitehead interchanges until the
    min-indices strictly increase; a min-index-1 factor is folded into the
    leading correction and excluded from the Schubert symbol.
    """
    b = _check_su(b, tol)
    n = b.shape[0]
    initial, gray = _initial_factors(b, tol, seed)
    work = _ordered_rewrite(initial, n, tol)
    mins = [f.min_index(tol) for f in work]
    if any(y <= x for x, y in zip(mins, mins[1:])):
        raise ConvergenceFailure(f"rewrite left non-monotone indices {mins}")
    gray = gray or _angle_gray(work, tol)
    correction, factors = _split_correction(work, tol)
    fact = OrderedFactorization(
        klass="general",
        order="increasing",
        ambient=n,
        factors=tuple(factors),
        correction=correction,
        boundary_ambiguous=gray,
    )
    residual = float(np.linalg.norm(fact.matrix() - b))
    if residual > tol.structure * n:
        raise ConvergenceFailure(f"reconstruction residual {residual:.3g} too large")
    return replace(fact, residual=residual)


def factorize_decreasing(
    b, tol: ToleranceConfig = DEFAULT_TOL, seed: int = 0
) -> OrderedFactorization:
    """Ordered factorization with decreasing min-indices.

    Obtained by factorizing B^-1 in increasing order and inverting each
    factor; the min-index-1 factor, when present, stays explicit at the
    right end of the product.
    """
    b = _check_su(b, tol)
    inc = factorize_su(b.conj().T, tol, seed)
    flat = inc.all_factors()
    dec = tuple(PseudoRotation(-f.theta, f.axis) for f in reversed(flat))
    fact = OrderedFactorization(
        klass="general",
        order="decreasing",
        ambient=inc.ambient,
        factors=dec,
        correction=None,
        boundary_ambiguous=inc.boundary_ambiguous,
    )
    residual = float(np.linalg.norm(fact.matrix() - b))
    return replace(fact, residual=residual)


def reverse_order(
    f: OrderedFactorization, tol: ToleranceConfig = DEFAULT_TOL
) -> OrderedFactorization:
    """Convert a general factorization between increasing and decreasing
    order, keeping the product and the min-index multiset fixed.

    Increasing to decreasing uses
    ``B_i = A_1 ... A_(i-1) A_i A_(i-1)^-1 ... A_1^-1``; the opposite
    direction inverts that conjugation chain.
    """
    if f.klass != "general":
        raise UnsupportedClass("order reversal applies to the general class")
    if f.order == "increasing":
        asc = f.all_factors()
        out: list[PseudoRotation] = []
        for i, a in enumerate(asc):
            y = a.axis
            for j in range(i - 1, -1, -1):
                y = apply(asc[j], y)
            out.append(PseudoRotation(a.theta, y))
        fact = OrderedFactorization(
            klass="general",
            order="decreasing",
            ambient=f.ambient,
            factors=tuple(reversed(out)),
            correction=None,
            boundary_ambiguous=f.boundary_ambiguous,
        )
    else:
        asc = list(reversed(f.all_factors()))
        out = []
        for i, bfac in enumerate(asc):
            y = bfac.axis
            for j in range(i - 1, -1, -1):
                y = apply(asc[j].inverse(), y)
            out.append(PseudoRotation(bfac.theta, y))
        correction, factors = _split_correction(out, tol)
        fact = OrderedFactorization(
            klass="general",
            order="increasing",
            ambient=f.ambient,
            factors=tuple(factors),
            correction=correction,
            boundary_ambiguous=f.boundary_ambiguous,
        )
    residual = float(np.linalg.norm(fact.matrix() - f.matrix()))
    return replace(fact, residual=residual)


@dataclass(frozen=True)
class InvarianceReport:
    """The four symbols of B, B^-1, conj(B), B^T and their agreement."""

    original: SchubertSymbol
    inverse: SchubertSymbol
    conjugate: SchubertSymbol
    transpose: SchubertSymbol

    @property
    def equal(self) -> bool:
        e = self.original.entries
        return all(s.entries == e for s in (self.inverse, self.conjugate, self.transpose))


def symbol_invariance_check(
    b, tol: ToleranceConfig = DEFAULT_TOL, seed: int = 0
) -> InvarianceReport:
    b = _check_su(b, tol)
    return InvarianceReport(
        original=factorize_su(b, tol, seed).symbol(tol),
        inverse=factorize_su(b.conj().T, tol, seed).symbol(tol),
        conjugate=factorize_su(np.conj(b), tol, seed).symbol(tol),
        transpose=factorize_su(b.T, tol, seed).symbol(tol),
    )


def _real_axis(x: np.ndarray, tol: ToleranceConfig) -> np.ndarray:
    """Strip the global phase (relative to the largest coordinate) and check
    the axis is real; returns the unit real vector with positive min-index
    coordinate."""
    i = int(np.argmax(np.abs(x)))
    y = x * (np.conj(x[i]) / abs(x[i]))
    if float(np.linalg.norm(y.imag)) > tol.tol_residual * 100:
        raise RealAxisExtractionFailure(
            f"imaginary residual {np.linalg.norm(y.imag):.3g} on a symmetric-model axis"
        )
    r = y.real / np.linalg.norm(y.real)
    k = min_index(r.astype(np.complex128), tol)
    if r[k - 1] < 0:
        r = -r
    return r.astype(np.complex128)


def factorize_symmetric(
    b, tol: ToleranceConfig = DEFAULT_TOL, seed: int = 0
) -> OrderedFactorization:
    """Ordered symmetric factorization ``B = C_1 ... C_k C_k ... C_1`` of a
    symmetric special unitary matrix by half-angle real-axis rotations.

    Works down the decreasing factorization: the lowest factor must be a
    real-axis rotation; its half-angle square root is split off by Cartan
    conjugation and the remaining factors are conjugated in place.
    """
    b = as_square_matrix(b)
    if not in_cartan_model(b, "symmetric", tol):
        raise NotInModel("matrix is not symmetric unitary with det 1")
    dec = factorize_decreasing(b, tol, seed)
    work = list(reversed(dec.factors))
    halves: list[PseudoRotation] = []
    for i in range(len(work)):
        a1 = work[i]
        c = PseudoRotation(a1.theta / 2.0, _real_axis(a1.axis, tol))
        halves.append(c)
        cinv = c.inverse()
        for j in range(i + 1, len(work)):
            work[j] = PseudoRotation(work[j].theta, apply(cinv, work[j].axis))
    correction, factors = _split_correction(halves, tol)
    fact = OrderedFactorization(
        klass="symmetric",
        order="increasing",
        ambient=b.shape[0],
        factors=tuple(factors),
        correction=correction,
        boundary_ambiguous=dec.boundary_ambiguous,
    )
    residual = float(np.linalg.norm(fact.matrix() - b))
    if residual > tol.structure * b.shape[0]:
        raise ConvergenceFailure(f"symmetric reconstruction residual {residual:.3g}")
    return replace(fact, residual=residual)


def factorize_skew(
    b, tol: ToleranceConfig = DEFAULT_TOL, seed: int = 0
) -> OrderedFactorization:
    """Ordered skew-symmetric factorization of a skew Cartan model element
    ``B = A_1 ... A_r sigma(A_r*) ... sigma(A_1*)``.

    The decreasing factorization must split into quaternionic pairs: an
    even factor count, lowest min-index odd, its partner one higher and
    equal to ``sigma(A_1*)``.  Pairs are peeled off by Cartan conjugation;
    the partner is recomputed as ``sigma(A_1*)`` rather than trusted from
    the factorization.  Symbol entries are the half-indices (m+1)/2 of the
    emitted factors, the (1,2) correction pair excluded.
    """
    b = as_square_matrix(b)
    if not in_cartan_model(b, "skew", tol):
        raise NotInModel("matrix is not in the skew Cartan model")
    dec = factorize_decreasing(b, tol, seed)
    work = list(reversed(dec.factors))
    if len(work) % 2 != 0:
        raise StructureViolation(f"odd factor count {len(work)}")
    halves: list[PseudoRotation] = []
    while work:
        a1 = work[0]
        m1 = a1.min_index(tol)
        if m1 % 2 == 0:
            raise StructureViolation(f"lowest min-index {m1} is even")
        a2 = work[1]
        if a2.min_index(tol) != m1 + 1:
            raise StructureViolation(
                f"pair indices ({m1}, {a2.min_index(tol)}) are not consecutive"
            )
        partner = PseudoRotation(a1.theta, jmul(a1.axis))
        gap = float(np.linalg.norm(a2.matrix() - partner.matrix()))
        if gap > tol.structure:
            raise StructureViolation(f"j-partner deviates by {gap:.3g}")
        halves.append(a1)
        a1inv = a1.inverse()
        work = [PseudoRotation(f.theta, apply(a1inv, f.axis)) for f in work[2:]]
    correction, factors = _split_correction(halves, tol)
    fact = OrderedFactorization(
        klass="skew",
        order="increasing",
        ambient=b.shape[0],
        factors=tuple(factors),
        correction=correction,
        boundary_ambiguous=dec.boundary_ambiguous,
    )
    residual = float(np.linalg.norm(fact.matrix() - b))
    if residual > tol.structure * b.shape[0]:
        raise ConvergenceFailure(f"skew reconstruction residual {residual:.3g}")
    return replace(fact, residual=residual)


def _e1(n: int) -> np.ndarray:
    v = np.zeros(n, dtype=np.complex128)
    v[0] = 1.0
    return v


def _pad_line(line, m: int, n: int, tol: ToleranceConfig) -> np.ndarray:
    v = np.asarray(line, dtype=np.complex128)
    if v.ndim != 1:
        raise DimensionMismatch("cell line must be a vector")
    if len(v) == m:
        v = np.concatenate([v, np.zeros(n - m, dtype=np.complex128)])
    elif len(v) == n:
        if min_index(v, tol) > m:
            raise DimensionMismatch(f"line is not inside C^{m}")
    else:
        raise DimensionMismatch(f"line length {len(v)} matches neither {m} nor {n}")
    nrm = float(np.linalg.norm(v))
    if nrm <= tol.tol_zero:
        raise DimensionMismatch("cell line is zero")
    return v / nrm


def schubert_map(
    symbol: SchubertSymbol, params, tol: ToleranceConfig = DEFAULT_TOL
) -> np.ndarray:
    """Forward parametrization of a general Schubert cell.

    ``A_(-2 pi T, e_1) prod_j A_(2 pi t_j, L_j)`` for T the sum of the t_j
    and L_j a line inside C^(m_j); lands in SU_n, and in the open cell of
    ``symbol`` for interior parameters (t_j in (0,1), positive m_j-th
    coordinate).
    """
    if symbol.klass != "general":
        raise UnsupportedClass("schubert_map needs a general-class symbol")
    if len(params) != symbol.length:
        raise InvalidSymbol(f"expected {symbol.length} parameters, got {len(params)}")
    n = symbol.ambient
    out = np.eye(n, dtype=np.complex128)
    total = 0.0
    mats = []
    for m, (t, line) in zip(symbol.entries, params):
        total += float(t)
        v = _pad_line(line, m, n, tol)
        mats.append(PseudoRotation(TAU * float(t), v).matrix())
    out = PseudoRotation(-TAU * total, _e1(n)).matrix()
    for mat in mats:
        out = out @ mat
    return out


def schubert_map_sy(
    symbol: SchubertSymbol, params, tol: ToleranceConfig = DEFAULT_TOL
) -> np.ndarray:
    """Forward parametrization of a symmetric Schubert cell: the Cartan
    conjugate of the identity by ``A_(-pi T, e_1) prod_j A_(pi t_j, L_j)``
    with real lines L_j inside R^(m_j)."""
    if symbol.klass != "symmetric":
        raise UnsupportedClass("schubert_map_sy needs a symmetric-class symbol")
    if len(params) != symbol.length:
        raise InvalidSymbol(f"expected {symbol.length} parameters, got {len(params)}")
    n = symbol.ambient
    total = 0.0
    mats = []
    for m, (t, line) in zip(symbol.entries, params):
        total += float(t)
        v = _pad_line(line, m, n, tol)
        if float(np.linalg.norm(v.imag)) > tol.tol_zero * 100:
            raise PreconditionViolated("symmetric cells need real lines")
        mats.append(PseudoRotation(np.pi * float(t), v).matrix())
    psi = PseudoRotation(-np.pi * total, _e1(n)).matrix()
    for mat in mats:
        psi = psi @ mat
    return psi @ psi.T


def schubert_map_sk(
    symbol: SchubertSymbol, params, tol: ToleranceConfig = DEFAULT_TOL
) -> np.ndarray:
    """Forward parametrization of a skew Schubert cell inside the Cartan
    model on C^(2n).

    The product ``A_(-2 pi T, e_1) prod_j A_(2 pi t_j, L_j)
    prod_rev_j A_(2 pi t_j, j L_j) A_(-2 pi T, j e_1)`` with lines L_j
    inside C^(2 m_j - 1) is the Cartan conjugate of the identity, hence in
    the model; interior parameters land in the open cell of ``symbol``.
    """
    if symbol.klass != "skew":
        raise UnsupportedClass("schubert_map_sk needs a skew-class symbol")
    if len(params) != symbol.length:
        raise InvalidSymbol(f"expected {symbol.length} parameters, got {len(params)}")
    n = symbol.ambient
    total = 0.0
    rots: list[PseudoRotation] = []
    for m, (t, line) in zip(symbol.entries, params):
        total += float(t)
        v = _pad_line(line, 2 * m - 1, n, tol)
        rots.append(PseudoRotation(TAU * float(t), v))
    lead = PseudoRotation(-TAU * total, _e1(n))
    out = lead.matrix()
    for r in rots:
        out = out @ r.matrix()
    for r in reversed(rots):
        out = out @ PseudoRotation(r.theta, jmul(r.axis)).matrix()
    out = out @ PseudoRotation(lead.theta, jmul(lead.axis)).matrix()
    return out


def sample_interior_params(symbol: SchubertSymbol, seed=0) -> list[tuple[float, np.ndarray]]:
    """Seeded interior parameters for the cell of ``symbol``: angles away
    from the cone points and lines with a comfortably positive chart
    coordinate."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    params: list[tuple[float, np.ndarray]] = []
    for m in symbol.entries:
        t = float(rng.uniform(0.15, 0.85))
        if symbol.klass == "symmetric":
            v = rng.standard_normal(m).astype(np.complex128)
        elif symbol.klass == "skew":
            d = 2 * m - 1
            v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        else:
            v = rng.standard_normal(m) + 1j * rng.standard_normal(m)
        v[-1] = abs(float(rng.standard_normal())) + 0.3
        v = v / np.linalg.norm(v)
        params.append((t, v))
    return params


def cell_sample(
    symbol: SchubertSymbol, seed=0, tol: ToleranceConfig = DEFAULT_TOL
) -> np.ndarray:
    """Seeded element of the open cell of ``symbol`` (compact model)."""
    params = sample_interior_params(symbol, seed)
    if symbol.klass == "symmetric":
        return schubert_map_sy(symbol, params, tol)
    if symbol.klass == "skew":
        return schubert_map_sk(symbol, params, tol)
    return schubert_map(symbol, params, tol)


def cartan_model_sample(n: int, klass: str, seed=0) -> np.ndarray:
    """Seeded element of the compact Cartan model: a Haar special unitary,
    or its Cartan conjugate of the identity (``U U^T`` respectively
    ``U J U^T J^-1``)."""
    check_class(klass)
    u = haar_sample(n, "special_unitary", seed)
    if klass == "general":
        return u
    if klass == "symmetric":
        return u @ u.T
    if n % 2 != 0:
        raise DimensionMismatch("the skew model needs an even dimension")
    j = jn(n // 2)
    return u @ j @ u.T @ (-j)


def embed(
    f: OrderedFactorization, n_new: int, tol: ToleranceConfig = DEFAULT_TOL
) -> OrderedFactorization:
    """Include a factorization in the next tower level by padding axes with
    zeros; the symbol is unchanged."""
    step = 2 if f.klass == "skew" else 1
    if n_new != f.ambient + step:
        raise DimensionMismatch(
            f"target dimension must be {f.ambient + step} for class {f.klass}"
        )

    def pad(rot: PseudoRotation) -> PseudoRotation:
        ax = np.concatenate([rot.axis, np.zeros(n_new - f.ambient, dtype=np.complex128)])
        return PseudoRotation(rot.theta, ax)

    return OrderedFactorization(
        klass=f.klass,
        order=f.order,
        ambient=n_new,
        factors=tuple(pad(r) for r in f.factors),
        correction=None if f.correction is None else pad(f.correction),
        residual=f.residual,
        boundary_ambiguous=f.boundary_ambiguous,
    )

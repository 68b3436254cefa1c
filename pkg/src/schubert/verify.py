"""Seeded invariant suites behind ``cmd_verify``.

Each suite distills the documented invariants of one module into seeded
batch checks returning :class:`CheckResult` rows; the CLI aggregates them
deterministically, so identical flags and seed give byte-identical output.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import cohom
from .factor import (
    SchubertSymbol,
    cartan_model_sample,
    cell_sample,
    factorize_decreasing,
    factorize_skew,
    factorize_su,
    factorize_symmetric,
    symbol_invariance_check,
)
from .milnor import (
    closure_product_check,
    dressing_sample,
    fiber_sample,
    identify,
    sol_invariance_check,
)
from .numlin import haar_sample, hermitian_inner, jn, pfaffian
from .rotor import PseudoRotation, jmul, product_matrix, whitehead_interchange
from .tolerances import DEFAULT_TOL, ToleranceConfig

SUITES = ("rotor", "factor", "milnor", "cohom", "all")


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str


def _random_axis(rng: np.random.Generator, n: int) -> np.ndarray:
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return v / np.linalg.norm(v)


def _sym_entries(rng: np.random.Generator, n: int) -> tuple[int, ...]:
    return tuple(m for m in range(2, n + 1) if rng.uniform() < 0.5)


def suite_rotor(n: int, trials: int, seed: int, tol: ToleranceConfig = DEFAULT_TOL):
    rng = np.random.default_rng(seed)
    out = []

    worst_u = worst_d = 0.0
    for _ in range(trials):
        dim = int(rng.integers(2, n + 1))
        rot = PseudoRotation(rng.uniform(-np.pi, np.pi), _random_axis(rng, dim))
        m = rot.matrix()
        worst_u = max(worst_u, np.linalg.norm(m @ m.conj().T - np.eye(dim)))
        worst_d = max(worst_d, abs(np.linalg.det(m) - np.exp(1j * rot.theta)))
    out.append(CheckResult(
        "rotor", "matrix-unitary-det", worst_u <= 1e-12 * n and worst_d <= 1e-11,
        f"max unitary residual {worst_u:.3g}, max det error {worst_d:.3g}"))

    worst = 0.0
    contract_ok = True
    for _ in range(trials):
        dim = int(rng.integers(2, n + 1))
        m = int(rng.integers(2, dim + 1))
        pick = lambda: np.concatenate([_random_axis(rng, m), np.zeros(dim - m)])
        a = PseudoRotation(rng.uniform(0.3, 2.8), pick())
        b = PseudoRotation(rng.uniform(0.3, 2.8), pick())
        if a.min_index(tol) < b.min_index(tol):
            a, b = b, a
        first, second, tag = whitehead_interchange(a, b, tol)
        got = product_matrix([f for f in (first, second) if f is not None], dim)
        want = a.matrix() @ b.matrix()
        worst = max(worst, np.linalg.norm(got - want))
        if tag == "case2" and first is not None and second is not None:
            mm = a.min_index(tol)
            contract_ok = (contract_ok and first.min_index(tol) <= mm - 1
                           and second.min_index(tol) == mm)
    out.append(CheckResult(
        "rotor", "whitehead-product-law", worst <= 1e-10 and contract_ok,
        f"max product deviation {worst:.3g}"))

    worst_c = worst_h = 0.0
    for _ in range(trials):
        half = int(rng.integers(1, max(2, n // 2) + 1))
        dim = 2 * half
        x = _random_axis(rng, dim)
        theta = rng.uniform(0.3, 2.8)
        a, b = PseudoRotation(theta, x), PseudoRotation(theta, jmul(x))
        worst_c = max(worst_c, np.linalg.norm(a.matrix() @ b.matrix() - b.matrix() @ a.matrix()))
        prod = a.matrix() @ b.matrix()
        v = _random_axis(rng, dim)
        worst_h = max(worst_h, np.linalg.norm(prod @ jmul(v) - jmul(prod.conj().T @ v)))
    out.append(CheckResult(
        "rotor", "hrotation-commute-hstar", worst_c <= 1e-12 * n and worst_h <= 1e-10,
        f"max commutator {worst_c:.3g}, max H*-linearity defect {worst_h:.3g}"))

    worst = 0.0
    for _ in range(trials):
        half = int(rng.integers(1, max(2, n // 2) + 1))
        x, y = _random_axis(rng, 2 * half), _random_axis(rng, 2 * half)
        worst = max(worst, abs(hermitian_inner(jmul(x), jmul(y)) - np.conj(hermitian_inner(x, y))))
    out.append(CheckResult(
        "rotor", "jmul-inner-conjugation", worst <= 1e-12,
        f"max defect {worst:.3g}"))

    worst = 0.0
    for _ in range(trials):
        half = max(2, n // 2)
        dim = 2 * half
        m = int(rng.integers(2, dim + 1))
        ax = lambda: np.concatenate([_random_axis(rng, m), np.zeros(dim - m)])
        a = PseudoRotation(rng.uniform(0.3, 2.8), ax())
        b = PseudoRotation(rng.uniform(0.3, 2.8), ax())
        if a.min_index(tol) < b.min_index(tol):
            a, b = b, a
        first, second, _ = whitehead_interchange(a, b, tol)
        outs = [f for f in (first, second) if f is not None]
        lhs = product_matrix(
            [PseudoRotation(b.theta, jmul(b.axis)), PseudoRotation(a.theta, jmul(a.axis))], dim)
        rhs = product_matrix([PseudoRotation(f.theta, jmul(f.axis)) for f in reversed(outs)], dim)
        worst = max(worst, np.linalg.norm(lhs - rhs))
    out.append(CheckResult(
        "rotor", "j-twisted-interchange", worst <= 1e-10,
        f"max defect {worst:.3g}"))
    return out


def _fiber_dims(n: int, klass: str) -> list[int]:
    dims = list(range(2, n + 1))
    if klass == "skew":
        dims = [d for d in dims if d % 2 == 0 and d >= 4]
    return dims


def suite_factor(n: int, trials: int, seed: int, tol: ToleranceConfig = DEFAULT_TOL):
    rng = np.random.default_rng(seed)
    out = []

    for klass, engine in (
        ("general", factorize_su),
        ("symmetric", factorize_symmetric),
        ("skew", factorize_skew),
    ):
        worst = 0.0
        mono_ok = True
        for dim in _fiber_dims(n, klass):
            for _ in range(trials):
                b = cartan_model_sample(dim, klass, rng)
                fact = engine(b, tol)
                worst = max(worst, np.linalg.norm(fact.matrix() - b))
                mins = fact.min_indices(tol)
                mono_ok = mono_ok and all(x < y for x, y in zip(mins, mins[1:]))
                mono_ok = mono_ok and all(abs(f.theta) >= tol.tol_angle for f in fact.factors)
        ok = worst <= 1e-8 * n and mono_ok
        out.append(CheckResult(
            "factor", f"reconstruction-{klass}", ok, f"max residual {worst:.3g}"))

    bad = 0
    for _ in range(trials):
        dim = int(rng.integers(2, min(n, 5) + 1))
        if not symbol_invariance_check(haar_sample(dim, "special_unitary", rng), tol).equal:
            bad += 1
    out.append(CheckResult(
        "factor", "symbol-invariance-quadruple", bad == 0, f"{bad} mismatches"))

    mism = 0
    total = 0
    for klass in ("general", "symmetric", "skew"):
        top = min(n, 6) if klass != "skew" else min(max(n // 2, 2), 3)
        for entries in cohom.enumerate_symbols(top, klass):
            ambient = top if klass != "skew" else 2 * top
            sym = SchubertSymbol(entries, ambient, klass)
            for _ in range(3):
                point = cell_sample(sym, rng, tol)
                engine = {"general": factorize_su, "symmetric": factorize_symmetric,
                          "skew": factorize_skew}[klass]
                total += 1
                if engine(point, tol).symbol(tol).entries != entries:
                    mism += 1
    out.append(CheckResult(
        "factor", "cell-map-round-trip", mism == 0, f"{mism}/{total} mismatches"))

    bad = 0
    for _ in range(trials):
        half = int(rng.integers(2, max(2, n // 2) + 1))
        dim = 2 * half
        model = cartan_model_sample(dim, "skew", rng)
        fact = factorize_skew(model, tol)
        dec = factorize_decreasing(model, tol)
        mins = sorted(dec.min_indices(tol))
        pair_ok = len(mins) % 2 == 0 and all(
            mins[2 * i] % 2 == 1 and mins[2 * i + 1] == mins[2 * i] + 1
            for i in range(len(mins) // 2))
        paired = tuple(x for m in fact.symbol(tol).entries for x in (2 * m - 1, 2 * m))
        su_sym = factorize_su(model, tol).symbol(tol).entries
        sym_ok = su_sym in (paired, (2,) + paired)
        if not (pair_ok and sym_ok):
            bad += 1
    out.append(CheckResult(
        "factor", "skew-structure-law", bad == 0, f"{bad} violations"))

    dims_ok = True
    for entries in cohom.enumerate_symbols(min(n, 8), "general"):
        dims_ok = dims_ok and cohom.cell_dim(entries, "general") == 2 * sum(entries) - len(entries)
        dims_ok = dims_ok and cohom.cell_dim(entries, "symmetric") == sum(entries)
        dims_ok = dims_ok and cohom.cell_dim(entries, "skew") == 4 * sum(entries) - 3 * len(entries)
    out.append(CheckResult("factor", "cell-dimension-formulas", dims_ok, "exact"))
    return out


def suite_milnor(n: int, trials: int, seed: int, tol: ToleranceConfig = DEFAULT_TOL):
    rng = np.random.default_rng(seed)
    out = []

    for klass, cls_tag in (("general", "sl"), ("symmetric", "sym_fiber"), ("skew", "skew_fiber")):
        worst = 0.0
        for dim in _fiber_dims(n, klass):
            for _ in range(trials):
                b = haar_sample(dim, cls_tag, rng)
                cid = identify(b, klass, tol)
                worst = max(worst, cid.residual / max(1.0, np.linalg.norm(b)))
        out.append(CheckResult(
            "milnor", f"identification-reconstruction-{klass}", worst <= 1e-8,
            f"max relative residual {worst:.3g}"))

    bad = 0
    for klass, cls_tag in (("general", "sl"), ("symmetric", "sym_fiber"), ("skew", "skew_fiber")):
        dims = _fiber_dims(min(n, 5), klass) or [4]
        for _ in range(trials):
            dim = dims[int(rng.integers(0, len(dims)))]
            b = haar_sample(dim, cls_tag, rng)
            e = dressing_sample(dim, klass, rng)
            if not sol_invariance_check(b, e, klass, tol).equal:
                bad += 1
    out.append(CheckResult("milnor", "solvable-action-invariance", bad == 0, f"{bad} mismatches"))

    mism = 0
    total = 0
    for klass in ("general", "symmetric", "skew"):
        top = min(n, 4) if klass != "skew" else 2
        for entries in cohom.enumerate_symbols(top, klass):
            ambient = top if klass != "skew" else 2 * top
            sym = SchubertSymbol(entries, ambient, klass)
            for _ in range(2):
                b = fiber_sample(sym, rng, dress=True, tol=tol)
                total += 1
                if identify(b, klass, tol).symbol.entries != entries:
                    mism += 1
    out.append(CheckResult(
        "milnor", "planted-cell-recovery", mism == 0, f"{mism}/{total} mismatches"))

    bad = 0
    for _ in range(trials):
        dim = int(rng.integers(2, min(n, 5) + 1))
        b = cartan_model_sample(dim, "symmetric", rng)
        sy = factorize_symmetric(b, tol).symbol(tol).entries
        su = factorize_su(b, tol).symbol(tol).entries
        if sy != su:
            bad += 1
    out.append(CheckResult(
        "milnor", "symmetric-symbol-cross-engine", bad == 0, f"{bad} mismatches"))
    return out


def suite_cohom(n: int, trials: int, seed: int, tol: ToleranceConfig = DEFAULT_TOL):
    rng = np.random.default_rng(seed)
    out = []
    top = max(3, min(n, 10))

    betti_ok = True
    for klass, ring in (("general", "Z"), ("symmetric", "Z2"), ("skew", "Z")):
        for nn in range(2, top + 1):
            betti_ok = betti_ok and cohom.betti_table(nn, klass, ring) == cohom.poincare_polynomial(nn, klass)
    out.append(CheckResult("cohom", "betti-vs-poincare", betti_ok, f"n up to {top}"))

    co_ok = True
    for nn in range(2, min(top, 7) + 1):
        for entries in cohom.enumerate_symbols(nn):
            delta = cohom.coproduct(entries)
            strip = {}
            for (a, b), c in delta.terms.items():
                if b == ():
                    strip[a] = strip.get(a, 0) + c
            co_ok = co_ok and strip == {entries: 1}
            left = {}
            for (a, b), c in delta.terms.items():
                for (a1, a2), c1 in cohom.coproduct(a).terms.items():
                    left[(a1, a2, b)] = left.get((a1, a2, b), 0) + c * c1
            right = {}
            for (a, b), c in delta.terms.items():
                for (b1, b2), c1 in cohom.coproduct(b).terms.items():
                    right[(a, b1, b2)] = right.get((a, b1, b2), 0) + c * c1
            co_ok = co_ok and {k: v for k, v in left.items() if v} == {k: v for k, v in right.items() if v}
    out.append(CheckResult("cohom", "coproduct-counit-coassoc", co_ok, "exact"))

    mult_ok = True
    for nn in range(2, min(top, 6) + 1):
        for entries in cohom.enumerate_symbols(nn):
            mult_ok = mult_ok and cohom.coproduct_via_primitives(entries) == cohom.coproduct(entries).terms
    out.append(CheckResult("cohom", "coproduct-multiplicativity", mult_ok, "exact"))

    pair_ok = True
    for nn in range(2, min(top, 8) + 1):
        symbols = cohom.enumerate_symbols(nn)
        by_len: dict[int, list] = {}
        for s in symbols:
            by_len.setdefault(len(s), []).append(s)
        for r, rows in by_len.items():
            cols = by_len.get(nn - 1 - r, [])
            for a in rows:
                hits = 0
                for b in cols:
                    v1 = cohom.intersection_pairing(a, b, nn)
                    v2 = cohom.intersection_pairing_via_cup(a, b, nn)
                    pair_ok = pair_ok and v1 == v2
                    if v1 != 0:
                        hits += 1
                        pair_ok = pair_ok and v1 in (1, -1)
                pair_ok = pair_ok and hits == 1
    out.append(CheckResult("cohom", "perfect-pairing-dual-route", pair_ok, "exact"))

    eps_ok = True
    for _ in range(max(trials, 50)):
        a = _sym_entries(rng, top)
        rest = tuple(m for m in range(2, top + 1) if m not in a)
        b = tuple(m for m in rest if rng.uniform() < 0.5)
        if not a or not b:
            continue
        eps_ok = eps_ok and cohom.epsilon(a, b) * cohom.epsilon(b, a) == (-1) ** (len(a) * len(b))
    out.append(CheckResult("cohom", "epsilon-bilinearity", eps_ok, "exact"))

    deg_ok = True
    for entries in cohom.enumerate_symbols(top):
        dual = cohom.kronecker_dual(entries)
        (mono, _), = dual.terms.items() if dual.terms else (((), 1),)
        deg_ok = deg_ok and cohom.cell_dim(mono) == cohom.cell_dim(entries)
    out.append(CheckResult("cohom", "dual-degree-bookkeeping", deg_ok, "exact"))

    closure_ok = True
    for _ in range(min(trials, 10)):
        nn = int(rng.integers(3, max(4, min(n, 5) + 1)))
        pool = list(range(2, nn + 1))
        a = (pool[int(rng.integers(0, len(pool)))],)
        rest = [m for m in pool if m not in a]
        b = (rest[int(rng.integers(0, len(rest)))],) if rest else a
        closure_ok = closure_ok and closure_product_check(a, b, nn, int(rng.integers(0, 2**31)), tol).passed
    out.append(CheckResult("cohom", "closure-product-sampled", closure_ok, "numeric"))

    pf_ok = True
    worst = 0.0
    for _ in range(trials):
        half = int(rng.integers(1, max(1, n // 2) + 1))
        dim = 2 * half
        g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        b = g - g.T
        c = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        lhs = pfaffian(c.T @ b @ c, tol)
        rhs = np.linalg.det(c) * pfaffian(b, tol)
        err = abs(lhs - rhs) / max(1.0, abs(rhs))
        worst = max(worst, err)
        pf_ok = pf_ok and err <= 1e-8
    pf_ok = pf_ok and pfaffian(jn(max(1, n // 2)), tol) == 1.0
    out.append(CheckResult("cohom", "pfaffian-transformation-law", pf_ok,
                           f"max relative error {worst:.3g}"))
    return out


def run_suites(suite: str, n: int, trials: int, seed: int,
               tol: ToleranceConfig = DEFAULT_TOL) -> list[CheckResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    names = ("rotor", "factor", "milnor", "cohom") if suite == "all" else (suite,)
    table = {"rotor": suite_rotor, "factor": suite_factor,
             "milnor": suite_milnor, "cohom": suite_cohom}
    out: list[CheckResult] = []
    for name in names:
        out.extend(table[name](n, trials, seed, tol))
    return out

"""Exact Schubert-cycle / cohomology dictionary.

Symbol enumeration and cell dimensions, exterior algebras on odd
generators over Z and Z/2Z, the merge sign epsilon and the binomial sign
beta, Kronecker and Poincare duals, the Hopf coproduct, homology products,
intersection pairings, and the Poincare-polynomial cross-check data.  All
arithmetic in this module is exact integer arithmetic; symbols are plain
strictly increasing tuples of ints > 1.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .errors import (
    InvalidSymbol,
    NotDisjoint,
    PreconditionViolated,
    UnsupportedClass,
    UnsupportedCoefficients,
)

CLASSES = ("general", "symmetric", "skew")
RINGS = ("Z", "Z2")

Monomial = tuple[int, ...]


def _check_entries(m) -> Monomial:
    t = tuple(int(x) for x in m)
    if any(b <= a for a, b in zip(t, t[1:])) or (t and t[0] < 2):
        raise InvalidSymbol(f"not a strictly increasing tuple of ints > 1: {t}")
    return t


def generator_degree(m: int, klass: str = "general") -> int:
    """Degree of the generator labelled m: 2m-1 / m / 4m-3 by class."""
    if klass == "general":
        return 2 * m - 1
    if klass == "symmetric":
        return m
    if klass == "skew":
        return 4 * m - 3
    raise UnsupportedClass(f"unknown class {klass!r}")


def cell_dim(m, klass: str = "general") -> int:
    """Real dimension of the Schubert cell of the symbol: the sum of the
    generator degrees (2|m| - l, |m|, 4|m| - 3l by class)."""
    t = _check_entries(m)
    return sum(generator_degree(x, klass) for x in t)


def enumerate_symbols(n: int, klass: str = "general") -> list[Monomial]:
    """All 2^(n-1) strictly increasing tuples with entries in (1, n].

    For the skew class the bound n is half the ambient dimension 2n.
    """
    if klass not in CLASSES:
        raise UnsupportedClass(f"unknown class {klass!r}")
    if n < 1:
        raise InvalidSymbol("need n >= 1")
    out: list[Monomial] = []
    for r in range(0, n):
        out.extend(itertools.combinations(range(2, n + 1), r))
    return sorted(out, key=lambda t: (len(t), t))


def beta(m) -> int:
    """Sign exponent binomial(l(m), 2)."""
    t = _check_entries(m)
    return math.comb(len(t), 2)


def epsilon(m, mp) -> int:
    """Sign of the permutation merging the disjoint symbols (m, m') into
    increasing order, computed as the parity of merge inversions."""
    a, b = _check_entries(m), _check_entries(mp)
    if set(a) & set(b):
        raise NotDisjoint(f"{a} and {b} share entries")
    inversions = sum(1 for x in a for y in b if x > y)
    return -1 if inversions % 2 else 1


def merge_symbols(m, mp) -> Monomial:
    a, b = _check_entries(m), _check_entries(mp)
    if set(a) & set(b):
        raise NotDisjoint(f"{a} and {b} share entries")
    return tuple(sorted(a + b))


@dataclass(frozen=True)
class ExtElement:
    """Integer (or Z/2Z) combination of exterior monomials in odd
    generators; terms map strictly increasing generator tuples to nonzero
    coefficients."""

    terms: dict[Monomial, int] = field(default_factory=dict)
    ring: str = "Z"

    def __post_init__(self) -> None:
        if self.ring not in RINGS:
            raise UnsupportedCoefficients(f"unknown ring {self.ring!r}")
        clean: dict[Monomial, int] = {}
        for mono, coef in self.terms.items():
            mono = _check_entries(mono)
            c = int(coef) % 2 if self.ring == "Z2" else int(coef)
            if c:
                clean[mono] = c
        object.__setattr__(self, "terms", clean)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono) -> int:
        return self.terms.get(_check_entries(mono), 0)

    def __add__(self, other: "ExtElement") -> "ExtElement":
        if self.ring != other.ring:
            raise UnsupportedCoefficients("ring mismatch")
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            terms[mono] = terms.get(mono, 0) + c
        return ExtElement(terms, self.ring)

    def scale(self, c: int) -> "ExtElement":
        return ExtElement({m: c * v for m, v in self.terms.items()}, self.ring)

    def __str__(self) -> str:
        return format_element(self)


def ext_unit(ring: str = "Z") -> ExtElement:
    return ExtElement({(): 1}, ring)


def ext_monomial(m, coef: int = 1, ring: str = "Z") -> ExtElement:
    return ExtElement({_check_entries(m): coef}, ring)


def _merge_sign(a: Monomial, b: Monomial) -> tuple[Monomial, int]:
    if set(a) & set(b):
        return (), 0
    inversions = sum(1 for x in a for y in b if x > y)
    return tuple(sorted(a + b)), (-1 if inversions % 2 else 1)


def ext_mul(a: ExtElement, b: ExtElement) -> ExtElement:
    """Graded-commutative product: odd generators square to zero and
    anticommute over Z; over Z/2Z the signs vanish."""
    if a.ring != b.ring:
        raise UnsupportedCoefficients("ring mismatch")
    terms: dict[Monomial, int] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            mono, sign = _merge_sign(ma, mb)
            if sign == 0:
                continue
            terms[mono] = terms.get(mono, 0) + sign * ca * cb
    return ExtElement(terms, a.ring)


def _term_str(mono: Monomial, coef: int, lead: bool) -> str:
    body = "1" if not mono else "".join(f"e({m})" for m in mono)
    mag = abs(coef)
    coefs = "" if mag == 1 else f"{mag}*"
    if lead:
        return ("-" if coef < 0 else "") + coefs + body
    return (" - " if coef < 0 else " + ") + coefs + body


def format_element(e: ExtElement) -> str:
    if e.is_zero():
        return "0"
    out = []
    for i, mono in enumerate(sorted(e.terms, key=lambda t: (len(t), t))):
        out.append(_term_str(mono, e.terms[mono], i == 0))
    return "".join(out)


@dataclass(frozen=True)
class TensorElement:
    """Integer combination of monomial tensor pairs (coproduct values)."""

    terms: dict[tuple[Monomial, Monomial], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for (a, b), c in self.terms.items():
            key = (_check_entries(a), _check_entries(b))
            if int(c):
                clean[key] = int(c)
        object.__setattr__(self, "terms", clean)

    def __add__(self, other: "TensorElement") -> "TensorElement":
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + c
        return TensorElement(terms)

    def scale(self, c: int) -> "TensorElement":
        return TensorElement({k: c * v for k, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda k: (len(k[0]), k[0], k[1]))
        out = []
        for i, (a, b) in enumerate(keys):
            c = self.terms[(a, b)]
            body_a = "1" if not a else "".join(f"e({m})" for m in a)
            body_b = "1" if not b else "".join(f"e({m})" for m in b)
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            sign = ("-" if c < 0 else "") if i == 0 else (" - " if c < 0 else " + ")
            out.append(f"{sign}{mag}{body_a}x{body_b}")
        return "".join(out)


def tensor_mul(a: TensorElement, b: TensorElement) -> TensorElement:
    """Product on the tensor square with the Koszul sign: interchanging two
    odd-degree monomials of lengths p and q contributes (-1)^(p q)."""
    terms: dict[tuple[Monomial, Monomial], int] = {}
    for (a1, a2), ca in a.terms.items():
        for (b1, b2), cb in b.terms.items():
            left, s1 = _merge_sign(a1, b1)
            if s1 == 0:
                continue
            right, s2 = _merge_sign(a2, b2)
            if s2 == 0:
                continue
            koszul = -1 if (len(a2) * len(b1)) % 2 else 1
            key = (left, right)
            terms[key] = terms.get(key, 0) + koszul * s1 * s2 * ca * cb
    return TensorElement(terms)


def kronecker_dual(m, klass: str = "general", assume_conjecture: bool = False) -> ExtElement:
    """Kronecker dual of the Schubert cycle of m:
    ``(-1)^beta(m) e_(m_1) ... e_(m_r)``.

    Established for the general class; for the symmetric and skew classes
    the identification is conjectural and refused unless
    ``assume_conjecture`` is set (then the unsigned monomial is returned,
    over Z/2Z in the symmetric case).
    """
    t = _check_entries(m)
    if klass == "general":
        return ext_monomial(t, (-1) ** beta(t), "Z")
    if klass in ("symmetric", "skew"):
        if not assume_conjecture:
            raise UnsupportedClass(
                f"the {klass} Kronecker-dual monomial identification is conjectural; "
                "pass assume_conjecture=True to compute it anyway"
            )
        return ext_monomial(t, 1, "Z2" if klass == "symmetric" else "Z")
    raise UnsupportedClass(f"unknown class {klass!r}")


def coproduct(m) -> TensorElement:
    """Hopf coproduct of the dual class of m:
    sum over ordered disjoint splittings (m', m'') of m of
    ``(-1)^(l(m') l(m'')) epsilon_(m', m'') e_(m') x e_(m'')``."""
    t = _check_entries(m)
    terms: dict[tuple[Monomial, Monomial], int] = {}
    k = len(t)
    for r in range(0, k + 1):
        for left in itertools.combinations(t, r):
            right = tuple(x for x in t if x not in left)
            sign = (-1) ** (len(left) * len(right)) * epsilon(left, right)
            terms[(left, right)] = sign
    return TensorElement(terms)


def coproduct_via_primitives(m) -> dict[tuple[Monomial, Monomial], int]:
    """Coproduct computed through the algebra structure instead of the
    splitting formula: expand ``(-1)^beta(m) prod_j coproduct((m_j))`` with
    the Koszul sign rule and convert each monomial tensor factor back to
    the dual basis (``prod_(j in m') e_(j) = (-1)^beta(m') e_(m')``)."""
    t = _check_entries(m)
    prod = TensorElement({((), ()): 1})
    for entry in t:
        prod = tensor_mul(prod, coproduct((entry,)))
    out: dict[tuple[Monomial, Monomial], int] = {}
    for (a, b), c in prod.terms.items():
        sign = (-1) ** (beta(t) + beta(a) + beta(b))
        key = (a, b)
        val = out.get(key, 0) + sign * c
        if val:
            out[key] = val
        else:
            out.pop(key, None)
    return out


def homology_product(m, mp):
    """Pontryagin product of Schubert classes: ``epsilon * merged`` for
    disjoint symbols, None (the zero class) when they overlap."""
    a, b = _check_entries(m), _check_entries(mp)
    if set(a) & set(b):
        return None
    return epsilon(a, b), merge_symbols(a, b)


def full_symbol(n: int) -> Monomial:
    if n < 2:
        raise InvalidSymbol("need n >= 2")
    return tuple(range(2, n + 1))


def complement_symbol(m, n: int) -> Monomial:
    t = _check_entries(m)
    full = set(full_symbol(n))
    if not set(t) <= full:
        raise InvalidSymbol(f"{t} is not contained in (2..{n})")
    return tuple(sorted(full - set(t)))


def poincare_dual(m, n: int) -> ExtElement:
    """Poincare dual of the Schubert class of m in ambient n:
    ``(-1)^(beta(n-full) + beta(m)) epsilon_(m, m')`` times the monomial on
    the ordered complement m' of m in (2..n)."""
    t = _check_entries(m)
    comp = complement_symbol(t, n)
    nn = full_symbol(n)
    sign = (-1) ** (beta(nn) + beta(t)) * epsilon(t, comp)
    return ext_monomial(comp, sign, "Z")


def intersection_pairing(m, mp, n: int) -> int:
    """Intersection number of the Schubert cycles of m and m' in ambient n.

    Requires complementary lengths l(m) + l(m') = n - 1; nonzero only when
    m' is the ordered complement of m, where it equals
    ``(-1)^(beta(n) + beta(m) + beta(m')) epsilon_(m, m')``.
    """
    a, b = _check_entries(m), _check_entries(mp)
    if len(a) + len(b) != n - 1:
        raise PreconditionViolated(
            f"lengths {len(a)} + {len(b)} != {n - 1}; the pairing needs complementary degrees"
        )
    if b != complement_symbol(a, n):
        return 0
    nn = full_symbol(n)
    return (-1) ** (beta(nn) + beta(a) + beta(b)) * epsilon(a, b)


def intersection_pairing_via_cup(m, mp, n: int) -> int:
    """The same pairing through the dual route: cup the Kronecker duals and
    read off the coefficient against the top-class orientation."""
    a, b = _check_entries(m), _check_entries(mp)
    if len(a) + len(b) != n - 1:
        raise PreconditionViolated("the pairing needs complementary degrees")
    prod = ext_mul(kronecker_dual(a), kronecker_dual(b))
    nn = full_symbol(n)
    c = prod.coefficient(nn)
    return c * ((-1) ** beta(nn))


def betti_table(n: int, klass: str = "general", ring: str = "Z") -> dict[int, int]:
    """Per-degree ranks of the Schubert-cycle homology basis: the number of
    symbols of each cell dimension.

    The symmetric class carries only Z/2Z fundamental classes, so it
    requires ``ring="Z2"``.
    """
    if ring not in RINGS:
        raise UnsupportedCoefficients(f"unknown ring {ring!r}")
    if klass == "symmetric" and ring != "Z2":
        raise UnsupportedCoefficients("symmetric Schubert cycles only carry Z/2Z classes")
    table: dict[int, int] = {}
    for sym in enumerate_symbols(n, klass):
        d = cell_dim(sym, klass)
        table[d] = table.get(d, 0) + 1
    return dict(sorted(table.items()))


def expand_product(degrees) -> dict[int, int]:
    """Coefficients of prod_j (1 + t^d_j), expanded by convolution."""
    poly = {0: 1}
    for d in degrees:
        nxt = dict(poly)
        for deg, c in poly.items():
            nxt[deg + d] = nxt.get(deg + d, 0) + c
        poly = nxt
    return dict(sorted(poly.items()))


def generator_degrees(n: int, klass: str = "general") -> list[int]:
    """Degrees of the exterior generators for ambient n: 3,5,..,2n-1 /
    2,3,..,n / 5,9,..,4n-3 by class."""
    if klass not in CLASSES:
        raise UnsupportedClass(f"unknown class {klass!r}")
    return [generator_degree(m, klass) for m in range(2, n + 1)]


def poincare_polynomial(n: int, klass: str = "general") -> dict[int, int]:
    """Independent expansion of the exterior-algebra Poincare polynomial."""
    return expand_product(generator_degrees(n, klass))


def sym_char0_poincare(m: int) -> dict[int, int]:
    """Poincare polynomial of the symmetric-fiber cohomology over a field
    of characteristic zero.

    Odd m: exterior generators of degrees 5, 9, ..., 2m-1.  Even m: degrees
    5, 9, ..., 2m-3 times the rank-2 factor {1, e_m}.
    """
    if m < 2:
        raise InvalidSymbol("need m >= 2")
    if m % 2 == 1:
        degrees = list(range(5, 2 * m, 4))
        return expand_product(degrees)
    degrees = list(range(5, 2 * m - 2, 4))
    return expand_product(degrees + [m])


def stiefel_poincare(m: int, n: int) -> dict[int, int]:
    """Integer cohomology Poincare polynomial of the complement of the
    singular m x n matrices (m > n): odd degrees 2(m-n)+1, ..., 2m-1."""
    if not (m > n >= 1):
        raise InvalidSymbol(f"need m > n >= 1, got ({m}, {n})")
    degrees = [2 * (m - n) + 2 * j - 1 for j in range(1, n + 1)]
    return expand_product(degrees)


def poly_str(poly: dict[int, int]) -> str:
    """Render a polynomial in t with ascending degrees."""
    if not poly:
        return "0"
    parts = []
    for deg in sorted(poly):
        c = poly[deg]
        if c == 0:
            continue
        if deg == 0:
            parts.append(str(c))
        else:
            coef = "" if c == 1 else f"{c}*"
            parts.append(f"{coef}t^{deg}")
    return " + ".join(parts) if parts else "0"

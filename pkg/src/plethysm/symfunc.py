"""Sparse exact polynomials and the brute-force plethysm oracle.

The oracle expands the full character of the plethysm as a polynomial
in a handful of variables and reads Schur multiplicities off with the
Vandermonde trick.  It is deliberately independent of the lattice
point counters so the two can check each other.
"""

from functools import cache
from itertools import combinations
from math import factorial, comb

from .core import (
    Partition,
    as_partition,
    cycle_stats,
    hook_lengths,
    partitions_at_most,
    partitions_of,
    permutations_signed,
    weight,
)
from .characters import character_table


class SparsePoly:
    """Multivariate polynomial with big-integer coefficients.

    Terms map fixed-length exponent tuples to nonzero coefficients.
    Instances are treated as immutable; arithmetic returns new objects.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def constant(cls, nvars: int, value: int) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: value} if value else {})

    def coeff(self, expo: tuple[int, ...]) -> int:
        return self.terms.get(expo, 0)

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return SparsePoly(self.nvars, terms)

    def __mul__(self, other):
        if isinstance(other, int):
            return SparsePoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return SparsePoly(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparsePoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __repr__(self):
        return "SparsePoly(%d vars, %d terms)" % (self.nvars, len(self.terms))


def _compositions(total: int, nparts: int):
    """All nonnegative integer vectors of the given length summing to total."""
    if nparts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, nparts - 1):
            yield (first,) + rest


def complete_h(k: int, nvars: int, a: int = 1) -> SparsePoly:
    """Complete symmetric polynomial of degree k in x_1^a, ..., x_nvars^a."""
    if k < 0:
        return SparsePoly(nvars)
    terms = {tuple(a * e for e in expo): 1 for expo in _compositions(k, nvars)}
    return SparsePoly(nvars, terms)


def elementary_e(k: int, nvars: int, a: int = 1) -> SparsePoly:
    """Elementary symmetric polynomial of degree k in x_1^a, ..., x_nvars^a.

    Zero when k > nvars, since no square-free monomial exists.
    """
    if k < 0 or k > nvars:
        return SparsePoly(nvars)
    terms = {}
    for subset in combinations(range(nvars), k):
        expo = [0] * nvars
        for v in subset:
            expo[v] = a
        terms[tuple(expo)] = 1
    return SparsePoly(nvars, terms)


@cache
def psi_alpha_inner(alpha: Partition, k: int, nvars: int, inner: str = "sym") -> SparsePoly:
    """Product over the parts of alpha of h_k(x^part) (sym) or e_k(x^part) (wedge).

    This is the power-sum plethysm of the inner character: substituting
    a-th powers of the variables realises composition with psi_a.
    """
    alpha = as_partition(alpha)
    base = complete_h if inner == "sym" else elementary_e
    if inner not in ("sym", "wedge"):
        raise ValueError("inner must be 'sym' or 'wedge'")
    poly = SparsePoly.constant(nvars, 1)
    for part in alpha:
        poly = poly * base(k, nvars, part)
    return poly


def schur_coefficient(poly: SparsePoly, lam: Partition) -> int:
    """Multiplicity of the Schur polynomial s_lam in a symmetric polynomial.

    Reads the coefficient of x^(lam + staircase) in discriminant * poly,
    with the discriminant kept as a signed permutation sum.  The caller
    guarantees poly is symmetric and homogeneous of degree |lam|.
    """
    lam = as_partition(lam)
    n = poly.nvars
    if len(lam) > n:
        raise ValueError("lambda has more parts than the polynomial has variables")
    padded = lam + (0,) * (n - len(lam))
    total = 0
    for pi, sign in permutations_signed(n):
        key = tuple(padded[i] - (i + 1) + pi[i] for i in range(n))
        if any(e < 0 for e in key):
            continue
        total += sign * poly.coeff(key)
    return total


def oracle_plethysm(
    mu: Partition, k: int, nvars: int | None = None, inner: str = "sym"
) -> dict[Partition, int]:
    """Brute-force decomposition of the mu-plethysm of S^k (or wedge^k).

    Accumulates chi_mu(alpha) * D_alpha * (psi_alpha of the inner
    character) over all alpha of |mu|, divides by |mu|! once, and
    Schur-decomposes.  Reports every lambda with at most nvars parts
    that has nonzero multiplicity; nvars >= |mu| covers the symmetric
    case completely.
    """
    mu = as_partition(mu)
    if k < 0:
        raise ValueError("k must be nonnegative")
    d = weight(mu)
    if nvars is None:
        nvars = max(d, 1)
    table = character_table(d)
    numerator = SparsePoly(nvars)
    for alpha in partitions_of(d):
        coeff = table[(mu, alpha)] * cycle_stats(alpha).D
        if coeff:
            numerator = numerator + psi_alpha_inner(alpha, k, nvars, inner) * coeff
    dfact = factorial(d)
    out: dict[Partition, int] = {}
    for lam in partitions_at_most(d * k, nvars):
        raw = schur_coefficient(numerator, lam)
        mult, rem = divmod(raw, dfact)
        if rem:
            raise ArithmeticError(
                "non-integral multiplicity for lambda=%r: %d/%d" % (lam, raw, dfact)
            )
        if mult:
            out[lam] = mult
    return out


def schur_dim(lam: Partition, n: int) -> int:
    """Dimension of the irreducible GL(n) representation of highest weight lam.

    Hook content formula; zero when lam has more than n parts.
    """
    lam = as_partition(lam)
    if len(lam) > n:
        return 0
    num = 1
    den = 1
    hooks = hook_lengths(lam)
    for i in range(len(lam)):
        for j in range(lam[i]):
            num *= n + j - i
            den *= hooks[i][j]
    dim, rem = divmod(num, den)
    assert rem == 0
    return dim


def binomial(n: int, k: int) -> int:
    return comb(n, k)

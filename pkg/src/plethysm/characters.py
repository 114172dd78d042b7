"""Irreducible characters of symmetric groups, exactly.

The primary path reads a character value off as a monomial coefficient
of the discriminant times a power-sum product, expanded as a sparse
polynomial in length(mu) variables.  An independent border-strip
(Murnaghan-Nakayama) recursion is kept as a cross-check oracle.
"""

from functools import cache
from math import factorial, prod

from .core import (
    Partition,
    as_partition,
    conjugate,
    cycle_stats,
    hook_lengths,
    partitions_of,
    permutations_signed,
    weight,
)


def _psi_product(rho: Partition, nvars: int) -> dict[tuple[int, ...], int]:
    """Expansion of prod_i (x_1^rho_i + ... + x_nvars^rho_i) as exponent -> coeff."""
    terms = {(0,) * nvars: 1}
    for p in rho:
        new: dict[tuple[int, ...], int] = {}
        for expo, c in terms.items():
            for v in range(nvars):
                key = expo[:v] + (expo[v] + p,) + expo[v + 1:]
                new[key] = new.get(key, 0) + c
        terms = new
    return terms


@cache
def character_value(mu: Partition, rho: Partition) -> int:
    """Value of the character chi_mu on any permutation of cycle type rho.

    Extracted as the coefficient of x_1^(mu_1+n-1) ... x_n^(mu_n) in the
    product of the discriminant with the power sums of rho, where
    n = length(mu).  The discriminant is kept as a signed permutation
    sum (Vandermonde expansion), so only n! coefficient lookups occur.
    """
    mu = as_partition(mu)
    rho = as_partition(rho)
    if weight(mu) != weight(rho):
        raise ValueError(
            "weight mismatch: |mu|=%d, |rho|=%d" % (weight(mu), weight(rho))
        )
    n = len(mu)
    if n == 0:
        return 1
    psi = _psi_product(rho, n)
    total = 0
    for pi, sign in permutations_signed(n):
        # coefficient of x_i^(mu_i + n - i) in Delta*psi, Vandermonde term pi
        key = tuple(mu[i] - (i + 1) + pi[i] for i in range(n))
        if any(e < 0 for e in key):
            continue
        total += sign * psi.get(key, 0)
    return total


def _remove_border_strips(lam: Partition, size: int):
    """All ways to remove a border strip of the given size from lam.

    Works on the beta numbers lam_i + (m - 1 - i): removing a strip is
    subtracting `size` from one beta number while keeping them distinct.
    Yields (smaller partition, sign), sign = (-1)^(strip height).
    """
    m = len(lam)
    beta = [lam[i] + (m - 1 - i) for i in range(m)]
    taken = set(beta)
    for i, b in enumerate(beta):
        nb = b - size
        if nb < 0 or nb in taken:
            continue
        crossed = sum(1 for other in beta if nb < other < b)
        new_beta = sorted((x for x in beta if x != b), reverse=True)
        new_beta.append(nb)
        new_beta.sort(reverse=True)
        parts = [new_beta[j] - (m - 1 - j) for j in range(m)]
        yield as_partition(parts), (-1 if crossed % 2 else 1)


@cache
def _mn(lam: Partition, rho: Partition) -> int:
    if not rho:
        return 1 if not lam else 0
    size, rest = rho[0], rho[1:]
    return sum(sign * _mn(sub, rest) for sub, sign in _remove_border_strips(lam, size))


def character_value_mn(mu: Partition, rho: Partition) -> int:
    """Murnaghan-Nakayama evaluation of chi_mu(rho); independent of the
    polynomial route and used to cross-check it."""
    mu = as_partition(mu)
    rho = as_partition(rho)
    if weight(mu) != weight(rho):
        raise ValueError(
            "weight mismatch: |mu|=%d, |rho|=%d" % (weight(mu), weight(rho))
        )
    return _mn(mu, rho)


@cache
def dimension(mu: Partition) -> int:
    """Dimension of the irreducible S_d representation mu (hook lengths).

    Agrees with character_value(mu, (1,...,1)); the tests assert this.
    """
    mu = as_partition(mu)
    d = weight(mu)
    denom = prod(h for row in hook_lengths(mu) for h in row)
    dim, rem = divmod(factorial(d), denom)
    assert rem == 0
    return dim


@cache
def character_table(d: int) -> dict[tuple[Partition, Partition], int]:
    """Full character table of S_d as (mu, rho) -> chi_mu(rho).

    Memoized per degree; the master formula queries every alpha of d
    repeatedly.  Building is idempotent, so a rebuild race is harmless.
    """
    table = {}
    for mu in partitions_of(d):
        for rho in partitions_of(d):
            table[(mu, rho)] = character_value(mu, rho)
    return table


def check_orthogonality(d: int) -> bool:
    """Row orthogonality sum_rho D_rho chi_mu chi_nu = d! [mu == nu], exactly."""
    table = character_table(d)
    parts = partitions_of(d)
    dfact = factorial(d)
    counts = {rho: cycle_stats(rho).D for rho in parts}
    for mu in parts:
        for nu in parts:
            s = sum(counts[rho] * table[(mu, rho)] * table[(nu, rho)] for rho in parts)
            if s != (dfact if mu == nu else 0):
                return False
    return True


def transpose_twist_holds(d: int) -> bool:
    """chi_{mu'}(rho) = sgn(rho) chi_mu(rho) for all mu, rho of weight d."""
    table = character_table(d)
    for mu in partitions_of(d):
        muc = conjugate(mu)
        for rho in partitions_of(d):
            sgn = -1 if (d - len(rho)) % 2 else 1
            if table[(muc, rho)] != sgn * table[(mu, rho)]:
                return False
    return True

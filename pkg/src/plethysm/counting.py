"""Exact lattice point counters.

Two independent implementations count matrices with fixed row sums and
weighted column sums: a direct depth-first enumeration and a dynamic
program over remaining-column-sum states.  A separate enumerator counts
integer points of the Pieri chain polytope, and an exact rational
simplex computes affine hull dimensions.
"""

from fractions import Fraction
from functools import cache
from math import gcd

from .core import Partition, as_partition, weight


def _row_values(k: int, bounds: tuple[int, ...]):
    """Vectors v with sum(v) = k and 0 <= v_j <= bounds_j, lexicographic."""
    m = len(bounds)
    suffix_cap = [0] * (m + 1)
    for j in range(m - 1, -1, -1):
        suffix_cap[j] = suffix_cap[j + 1] + bounds[j]
    out = []
    row = [0] * m

    def rec(j, remaining):
        if j == m:
            if remaining == 0:
                out.append(tuple(row))
            return
        if remaining > suffix_cap[j]:
            return
        lo = max(0, remaining - suffix_cap[j + 1])
        hi = min(bounds[j], remaining)
        for v in range(lo, hi + 1):
            row[j] = v
            rec(j + 1, remaining - v)
        row[j] = 0

    rec(0, k)
    return out


def _feasible(alpha, k, colsums) -> bool:
    if k < 0 or any(c < 0 for c in colsums):
        return False
    return sum(colsums) == k * sum(alpha)


def _divisibility_ok(colsums, g) -> bool:
    # any filling of the remaining rows puts multiples of gcd(alpha_rest)
    # into every column
    return g <= 1 or all(c % g == 0 for c in colsums)


def count_matrices(
    alpha: Partition, k: int, colsums: tuple[int, ...], binary: bool = False
) -> int:
    """Number of matrices over the rows of alpha with the given column data.

    Counts a x m matrices (a = len(alpha), m = len(colsums)) with
    nonnegative integer entries (or 0/1 entries when binary) such that
    every row sums to k and sum_i alpha_i M[i][j] = colsums[j].

    Total function: infeasible data, including negative column sums,
    counts zero.  Direct enumeration with pruning; cross-checked against
    count_matrices_dp.
    """
    alpha = as_partition(alpha)
    colsums = tuple(int(c) for c in colsums)
    if not _feasible(alpha, k, colsums):
        return 0
    gcds = _suffix_gcds(alpha)

    def rec(i, cols):
        if i == len(alpha):
            return 1 if all(c == 0 for c in cols) else 0
        if not _divisibility_ok(cols, gcds[i]):
            return 0
        w = alpha[i]
        bounds = tuple(min(c // w, 1) if binary else c // w for c in cols)
        total = 0
        for row in _row_values(k, bounds):
            total += rec(i + 1, tuple(c - w * v for c, v in zip(cols, row)))
        return total

    return rec(0, colsums)


def _suffix_gcds(alpha: Partition) -> list[int]:
    out = [0] * (len(alpha) + 1)
    for i in range(len(alpha) - 1, -1, -1):
        out[i] = gcd(out[i + 1], alpha[i])
    return out


@cache
def count_matrices_dp(
    alpha: Partition, k: int, colsums: tuple[int, ...], binary: bool = False
) -> int:
    """Same contract as count_matrices, via a row-by-row dynamic program.

    States are remaining column sums; rows are processed in the given
    (descending) order so the heaviest weights prune first.  Intended
    for the large-k queries the direct counter cannot reach.
    """
    alpha = as_partition(alpha)
    colsums = tuple(int(c) for c in colsums)
    if not _feasible(alpha, k, colsums):
        return 0
    gcds = _suffix_gcds(alpha)
    states: dict[tuple[int, ...], int] = {colsums: 1}
    for i, w in enumerate(alpha):
        new_states: dict[tuple[int, ...], int] = {}
        for cols, ways in states.items():
            bounds = tuple(min(c // w, 1) if binary else c // w for c in cols)
            for row in _row_values(k, bounds):
                nxt = tuple(c - w * v for c, v in zip(cols, row))
                if not _divisibility_ok(nxt, gcds[i + 1]):
                    continue
                new_states[nxt] = new_states.get(nxt, 0) + ways
        states = new_states
        if not states:
            return 0
    zero = (0,) * len(colsums)
    return states.get(zero, 0)


def pieri_chain_count(k: int, d: int, lam: Partition) -> int:
    """Multiplicity of lam in the d-th tensor power of S^k.

    Counts chains of d horizontal-strip additions of size k starting
    from the single row (k) and ending at lam; equivalently the integer
    points of the chain polytope sliced by the row sums lam.
    """
    lam = as_partition(lam)
    if d < 1:
        raise ValueError("d must be positive")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if weight(lam) != d * k:
        raise ValueError("weight mismatch: |lambda|=%d, need %d" % (weight(lam), d * k))
    if len(lam) > d:
        return 0
    target = lam + (0,) * (d - len(lam))

    def strips(shape, step):
        # all shapes reachable from `shape` by adding a horizontal k-strip,
        # staying under the target rows
        rows = len(shape)
        results = []
        new = [0] * (rows + 1)

        def rec(i, remaining):
            if i == rows + 1:
                if remaining == 0:
                    results.append(tuple(p for p in new if p))
                return
            old = shape[i] if i < rows else 0
            above = shape[i - 1] if i >= 1 else None
            hi = min(target[i] if i < d else 0, old + remaining)
            if above is not None:
                hi = min(hi, above)
            lo = old
            # rows below i cannot absorb more than their own headroom
            for v in range(hi, lo - 1, -1):
                new[i] = v
                rec(i + 1, remaining - (v - old))
            new[i] = 0

        rec(0, k)
        return results

    current = {(k,) if k else (): 1}
    if k and target[0] < k:
        return 0
    for step in range(1, d):
        nxt: dict[tuple[int, ...], int] = {}
        for shape, ways in current.items():
            for s in strips(shape, step):
                nxt[s] = nxt.get(s, 0) + ways
        current = nxt
        if not current:
            return 0
    return current.get(as_partition(target), 0)


# ---------------------------------------------------------------------------
# Exact rational simplex, used only for affine hull dimensions.


def _simplex_min(A, b, c):
    """min c.x subject to A x = b, x >= 0; exact Fractions, Bland's rule.

    Returns the optimal value, or None when infeasible.  The polytopes
    handled here are bounded, so unboundedness is not expected.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    rows = [[Fraction(v) for v in row] for row in A]
    rhs = [Fraction(v) for v in b]
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]

    # phase 1: artificial variables
    total = n + m
    tab = [rows[i] + [Fraction(int(i == j)) for j in range(m)] + [rhs[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    cost = [Fraction(0)] * n + [Fraction(1)] * m

    def solve(cost_vec, allowed):
        while True:
            # reduced costs via the basic solution's dual
            z = [Fraction(0)] * (total + 1)
            for i, bi in enumerate(basis):
                cb = cost_vec[bi]
                if cb:
                    for j in range(total + 1):
                        z[j] += cb * tab[i][j]
            enter = -1
            for j in range(total):
                if j in allowed and cost_vec[j] - z[j] < 0:
                    enter = j
                    break
            if enter < 0:
                return z[total]
            leave = -1
            best = None
            for i in range(m):
                if tab[i][enter] > 0:
                    ratio = tab[i][total] / tab[i][enter]
                    if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[leave]
                    ):
                        best = ratio
                        leave = i
            if leave < 0:
                raise ArithmeticError("unbounded linear program")
            piv = tab[leave][enter]
            tab[leave] = [v / piv for v in tab[leave]]
            for i in range(m):
                if i != leave and tab[i][enter]:
                    f = tab[i][enter]
                    tab[i] = [v - f * w for v, w in zip(tab[i], tab[leave])]
            basis[leave] = enter

    allowed = set(range(total))
    if solve(cost, allowed) != 0:
        return None
    # drive leftover artificial variables out of the basis where possible
    for i in range(m):
        if basis[i] >= n:
            for j in range(n):
                if tab[i][j] != 0:
                    piv = tab[i][j]
                    tab[i] = [v / piv for v in tab[i]]
                    for r in range(m):
                        if r != i and tab[r][j]:
                            f = tab[r][j]
                            tab[r] = [v - f * w for v, w in zip(tab[r], tab[i])]
                    basis[i] = j
                    break
    allowed = set(range(n))
    cost2 = [Fraction(v) for v in c] + [Fraction(0)] * m
    return solve(cost2, allowed)


def _pieri_system(k: int, d: int, lam: Partition):
    """Equality and slack structure of the sliced chain polytope.

    Variables: chain entries x[i][j] for steps j = 1..d-1 and rows
    i = 1..j+1, then one slack per chain inequality.  Returns (A, b,
    n_entries) with all variables constrained nonnegative.
    """
    target = lam + (0,) * (d - len(lam))
    index = {}
    for j in range(1, d):
        for i in range(1, j + 2):
            index[(i, j)] = len(index)
    nx = len(index)
    rows = []
    rhs = []
    # step sums
    for j in range(1, d):
        row = [0] * nx
        for i in range(1, j + 2):
            row[index[(i, j)]] = 1
        rows.append(row)
        rhs.append(k)
    # row sums; row 1 already holds k from step 0
    for i in range(1, d + 1):
        row = [0] * nx
        for j in range(max(i - 1, 1), d):
            if (i, j) in index:
                row[index[(i, j)]] = 1
        rows.append(row)
        rhs.append(target[i - 1] - (k if i == 1 else 0))
    # chain inequalities sum_{l<=j} x[i][l] <= sum_{l<=j-1} x[i-1][l]
    ineqs = []
    for j in range(1, d):
        for i in range(2, j + 2):
            row = [0] * nx
            const = 0
            for l in range(1, j + 1):
                if (i, l) in index:
                    row[index[(i, l)]] -= 1
            for l in range(1, j):
                if (i - 1, l) in index:
                    row[index[(i - 1, l)]] += 1
            if i - 1 == 1:
                const += k  # x[1][0] = k
            ineqs.append((row, const))
    nslack = len(ineqs)
    A = []
    b = []
    for row, r in zip(rows, rhs):
        A.append(row + [0] * nslack)
        b.append(r)
    for s, (row, const) in enumerate(ineqs):
        slack_row = row + [0] * nslack
        slack_row[nx + s] = -1
        A.append(slack_row)
        b.append(-const)
    return A, b, nx + nslack


def _rank(rows) -> int:
    mat = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(mat)):
            if mat[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = mat[rank][col]
        mat[rank] = [v / inv for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [v - f * w for v, w in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def pieri_polytope_dim(k: int, d: int, lam: Partition) -> int | None:
    """Dimension of the affine hull of the sliced chain polytope.

    Detects the implicit equalities (coordinates pinned to zero on the
    whole polytope) with exact linear programs, then returns the
    nullity of the tight constraint system.  Returns None for the empty
    polytope.
    """
    lam = as_partition(lam)
    if weight(lam) != d * k:
        raise ValueError("weight mismatch: |lambda|=%d, need %d" % (weight(lam), d * k))
    if len(lam) > d:
        return None
    A, b, nvar = _pieri_system(k, d, lam)
    feasible = _simplex_min(A, b, [0] * nvar)
    if feasible is None:
        return None
    tight = []
    for v in range(nvar):
        cost = [0] * nvar
        cost[v] = -1  # maximize coordinate v
        top = _simplex_min(A, b, cost)
        if top == 0:
            row = [0] * nvar
            row[v] = 1
            tight.append(row)
    return nvar - _rank(A + tight)

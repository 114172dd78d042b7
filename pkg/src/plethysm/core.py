"""Partitions, permutations and cycle statistics.

Partitions are plain tuples of weakly decreasing positive integers,
without trailing zeros, so they can be used directly as dict keys.
The empty partition is ``()``.  Helpers that need a fixed number of
parts pad with zeros at the call site.
"""

from functools import cache
from dataclasses import dataclass
from itertools import permutations
from math import factorial, prod

Partition = tuple[int, ...]


def as_partition(parts) -> Partition:
    """Normalize an iterable of nonnegative integers to a partition.

    Trailing zeros are stripped; raises ValueError if the remaining
    entries are not weakly decreasing positive integers.
    """
    t = tuple(int(p) for p in parts)
    while t and t[-1] == 0:
        t = t[:-1]
    for i, p in enumerate(t):
        if p <= 0:
            raise ValueError("partition parts must be positive, got %r" % (t,))
        if i > 0 and t[i - 1] < p:
            raise ValueError("partition parts must be weakly decreasing, got %r" % (t,))
    return t


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated partition string, e.g. "31,3,2,2,2".

    The empty string denotes the empty partition.
    """
    text = text.strip()
    if not text:
        return ()
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise ValueError("malformed partition string: %r" % text) from None
    return as_partition(parts)


def format_partition(lam: Partition) -> str:
    """Inverse of parse_partition; the empty partition prints as ""."""
    return ",".join(str(p) for p in lam)


def weight(lam: Partition) -> int:
    return sum(lam)


@cache
def partitions_of(d: int) -> tuple[Partition, ...]:
    """All partitions of d in reverse-lexicographic order: (d) first, (1,..,1) last."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    if d == 0:
        return ((),)
    out = []

    def extend(prefix, remaining, largest):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(largest, remaining), 0, -1):
            prefix.append(part)
            extend(prefix, remaining - part, part)
            prefix.pop()

    extend([], d, d)
    return tuple(out)


def partitions_at_most(d: int, max_parts: int):
    """Partitions of d with at most max_parts parts, reverse-lexicographic."""
    return tuple(p for p in partitions_of(d) if len(p) <= max_parts)


def partitions_max_part(d: int, bound: int):
    """Partitions of d whose parts are all <= bound."""
    return tuple(p for p in partitions_of(d) if not p or p[0] <= bound)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram (column lengths)."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


@dataclass(frozen=True)
class CycleStats:
    """Cycle-type data of a conjugacy class of S_d.

    m maps a part size to its multiplicity, z is the centralizer order
    prod i^m_i * m_i!, and D = d!/z is the number of permutations of
    this cycle type.
    """

    m: dict[int, int]
    z: int
    D: int


def cycle_stats(rho: Partition) -> CycleStats:
    m: dict[int, int] = {}
    for p in rho:
        m[p] = m.get(p, 0) + 1
    z = prod(i ** mi * factorial(mi) for i, mi in m.items())
    D = factorial(weight(rho)) // z
    return CycleStats(m=m, z=z, D=D)


def sign_of_class(rho: Partition) -> int:
    """Sign of any permutation of cycle type rho: (-1)^(d - number of cycles)."""
    return -1 if (weight(rho) - len(rho)) % 2 else 1


def permutations_signed(n: int):
    """All permutations of {1..n} with their signs, in lexicographic order.

    Yields (pi, sign) where pi is a tuple of images, pi[i] = pi(i+1).
    n = 0 yields the single empty permutation with sign +1.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []
    for pi in permutations(range(1, n + 1)):
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if pi[i] > pi[j]
        )
        out.append((pi, -1 if inversions % 2 else 1))
    return out


def hook_lengths(lam: Partition):
    """Hook length of every cell of the diagram, row by row."""
    conj = conjugate(lam)
    return [
        [lam[i] - j + conj[j] - i - 1 for j in range(lam[i])]
        for i in range(len(lam))
    ]

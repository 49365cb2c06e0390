"""Partitions, border-strip addition, and exact Schur-basis expansions.

Partitions are tuples of weakly decreasing positive ints.  A Schur
expansion is a sparse map from partitions to nonzero integer
coefficients, all of one degree.

The engine applies a power-sum factor p_d to a whole expansion at once
by adding every border strip of size d to every term with the sign
(-1)^height.  Iterating d = const from the empty partition yields the
expansion of p_d^(n/d); its coefficient at lambda is the symmetric group
character chi^lambda evaluated on the class with n/d cycles of length d.

Strips are added in the beta-number (first-column hook) encoding: with
L = rows + d beads beta_i = lambda_i + L - 1 - i, adding a border strip
of size d moves one bead up by d onto a free slot, and the sign counts
the beads jumped over.  Each addition is O(rows + d).

Major-index distributions come from the q-analog hook length formula;
the polynomial division is performed exactly over the integers and any
nonzero remainder raises InternalConsistencyError.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from typing import Iterator, Mapping

from .config import DEFAULT_CAPS
from .errors import CapExceeded, InternalConsistencyError

__all__ = [
    "Partition",
    "is_partition",
    "partitions_of",
    "partition_list",
    "conjugate",
    "hook_lengths",
    "syt_count",
    "SchurExpansion",
    "multiply_by_power_sum",
    "power_sum_rectangle_expansion",
    "MajDistribution",
    "maj_distribution",
]

Partition = tuple[int, ...]


def is_partition(parts) -> bool:
    """True for a tuple of weakly decreasing positive integers (or ())."""
    if not isinstance(parts, tuple):
        return False
    last = None
    for x in parts:
        if not isinstance(x, int) or x < 1:
            return False
        if last is not None and x > last:
            return False
        last = x
    return True


def _require_partition(parts) -> Partition:
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts!r}")
    return parts


def _partitions_desc(n: int) -> Iterator[Partition]:
    # Reverse lexicographic: (n) first, (1,...,1) last.
    if n == 0:
        yield ()
        return
    a = [n]
    while True:
        yield tuple(a)
        j = len(a) - 1
        ones = 0
        while j >= 0 and a[j] == 1:
            ones += 1
            j -= 1
        if j < 0:
            return
        a[j] -= 1
        rem = ones + 1
        del a[j + 1 :]
        while rem > a[j]:
            a.append(a[j])
            rem -= a[j]
        if rem:
            a.append(rem)


def partitions_of(n: int, *, cap: int | None = None) -> Iterator[Partition]:
    """Stream the partitions of n in reverse lexicographic order."""
    limit = DEFAULT_CAPS.schur_degree if cap is None else cap
    if n < 0:
        raise ValueError(f"partitions_of requires n >= 0, got {n}")
    if n > limit:
        raise CapExceeded(f"partitions_of(n={n}) exceeds the degree cap {limit}")
    return _partitions_desc(n)


@lru_cache(maxsize=None)
def partition_list(n: int) -> tuple[Partition, ...]:
    """Cached tuple of all partitions of n, reverse lexicographic."""
    return tuple(_partitions_desc(n))


def conjugate(shape: Partition) -> Partition:
    """Transpose of the Young diagram."""
    _require_partition(shape)
    if not shape:
        return ()
    out = []
    for j in range(shape[0]):
        out.append(sum(1 for part in shape if part > j))
    return tuple(out)


def hook_lengths(shape: Partition) -> tuple[int, ...]:
    """Hook lengths of all cells, row by row."""
    _require_partition(shape)
    conj = conjugate(shape)
    hooks = []
    for i, row in enumerate(shape):
        for j in range(row):
            hooks.append(row - j + conj[j] - i - 1)
    return tuple(hooks)


def syt_count(shape: Partition) -> int:
    """Number of standard Young tableaux, by the hook length formula."""
    n = sum(shape)
    prod = 1
    for h in hook_lengths(shape):
        prod *= h
    count, rem = divmod(factorial(n), prod)
    if rem:
        raise InternalConsistencyError(f"hook product does not divide {n}! for {shape}")
    return count


@dataclass(eq=True)
class SchurExpansion:
    """Sparse integer combination of Schur functions of one degree.

    Zero coefficients are never stored.
    """

    n: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {lam: c for lam, c in self.terms.items() if c}

    def coefficient(self, shape: Partition) -> int:
        return self.terms.get(shape, 0)

    def items_desc(self) -> list[tuple[Partition, int]]:
        """Terms sorted by partition, reverse lexicographic."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __len__(self) -> int:
        return len(self.terms)


def _add_cell_targets(mu: Partition) -> list[Partition]:
    # d = 1: addable corners, all with sign +1.
    targets = []
    for i, part in enumerate(mu):
        if i == 0 or part < mu[i - 1]:
            targets.append(mu[:i] + (part + 1,) + mu[i + 1 :])
    targets.append(mu + (1,))
    return targets


def _addable_strips(mu: Partition, d: int) -> list[tuple[Partition, int]]:
    """All (lambda, sign) with lambda/mu a border strip of size d."""
    rows = len(mu)
    length = rows + d
    beta = [mu[i] + length - 1 - i for i in range(rows)]
    beta.extend(range(length - 1 - rows, -1, -1))
    beta_set = set(beta)
    out = []
    for i in range(length):
        target = beta[i] + d
        if target in beta_set:
            continue
        crossed = 0
        j = i - 1
        while j >= 0 and beta[j] < target:
            crossed += 1
            j -= 1
        pos = i - crossed
        new_beta = beta[:pos] + [target] + beta[pos:i] + beta[i + 1 :]
        parts = []
        for t, b in enumerate(new_beta):
            part = b - (length - 1 - t)
            if part == 0:
                break
            parts.append(part)
        out.append((tuple(parts), -1 if crossed & 1 else 1))
    return out


def _multiply_terms(terms: Mapping[Partition, int], d: int) -> dict:
    out: dict = {}
    if d == 1:
        for mu, c in terms.items():
            for lam in _add_cell_targets(mu):
                out[lam] = out.get(lam, 0) + c
    else:
        for mu, c in terms.items():
            for lam, sign in _addable_strips(mu, d):
                out[lam] = out.get(lam, 0) + (c if sign > 0 else -c)
    return {lam: c for lam, c in out.items() if c}


def multiply_by_power_sum(expansion: SchurExpansion, d: int) -> SchurExpansion:
    """Schur expansion of p_d times the given expansion."""
    if d < 1:
        raise ValueError(f"power-sum index must be >= 1, got {d}")
    return SchurExpansion(expansion.n + d, _multiply_terms(expansion.terms, d))


# Cached chain of p_d^k expansions keyed (d, k).  Fills are idempotent, so
# concurrent computation is wasteful but safe; setdefault keeps one winner.
_CHAIN: dict[tuple[int, int], Mapping[Partition, int]] = {}


def _power_chain(d: int, k: int) -> Mapping[Partition, int]:
    if k == 0:
        return {(): 1}
    cached = _CHAIN.get((d, k))
    if cached is not None:
        return cached
    j = k - 1
    while j > 0 and (d, j) not in _CHAIN:
        j -= 1
    terms = _CHAIN[(d, j)] if j > 0 else {(): 1}
    for level in range(j + 1, k + 1):
        terms = _CHAIN.setdefault((d, level), _multiply_terms(terms, d))
    return terms


def _rectangle_terms(n: int, d: int) -> Mapping[Partition, int]:
    # Internal, read-only view; callers must not mutate.
    if d < 1 or n < 0 or n % d != 0:
        raise ValueError(f"need d >= 1 and d | n, got n={n}, d={d}")
    return _power_chain(d, n // d)


def power_sum_rectangle_expansion(n: int, d: int, *, cap: int | None = None) -> SchurExpansion:
    """Schur expansion of p_d^(n/d) for d | n.

    The coefficient of s_lambda is chi^lambda on the class d^(n/d).
    """
    limit = DEFAULT_CAPS.schur_degree if cap is None else cap
    if n > limit:
        raise CapExceeded(f"degree {n} exceeds the expansion cap {limit}")
    return SchurExpansion(n, dict(_rectangle_terms(n, d)))


def _qint_mul(poly: list[int], k: int) -> list[int]:
    # Multiply by [k]_q = 1 + q + ... + q^(k-1) with a sliding window.
    out = [0] * (len(poly) + k - 1)
    window = 0
    for i in range(len(out)):
        if i < len(poly):
            window += poly[i]
        if i - k >= 0:
            window -= poly[i - k]
        out[i] = window
    return out


def _qint_div_exact(poly: list[int], h: int) -> list[int]:
    # Long division by the monic [h]_q; nonzero remainder is a bug.
    if h == 1:
        return list(poly)
    rem = list(poly)
    deg = len(rem) - 1
    quot = [0] * (deg - h + 2)
    for i in range(deg, h - 2, -1):
        c = rem[i]
        if c:
            quot[i - h + 1] = c
            for t in range(i - h + 1, i + 1):
                rem[t] -= c
    if any(rem[: h - 1]):
        raise InternalConsistencyError("q-hook division left a nonzero remainder")
    return quot


@dataclass(frozen=True)
class MajDistribution:
    """Counts of standard Young tableaux by major index modulo n.

    counts maps each residue class r in {1, ..., n} to the number of SYT
    of the shape with maj congruent to r mod n; the class of 0 is keyed
    by n itself.
    """

    shape: Partition
    modulus: int
    counts: dict

    def count(self, r: int) -> int:
        if r < 1:
            raise ValueError(f"residue label must be >= 1, got {r}")
        return self.counts[(r - 1) % self.modulus + 1]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def maj_distribution(shape: Partition, *, cap: int | None = None) -> MajDistribution:
    """Major-index generating counts via the q-analog hook length formula.

    The generating polynomial is q^b(shape) * [n]_q! / prod [h]_q over
    hooks h, with b(shape) = sum (i-1) * shape_i; coefficients are binned
    modulo n.
    """
    _require_partition(shape)
    n = sum(shape)
    limit = DEFAULT_CAPS.maj_degree if cap is None else cap
    if n < 1:
        raise ValueError("maj_distribution requires a nonempty shape")
    if n > limit:
        raise CapExceeded(f"|shape| = {n} exceeds the maj cap {limit}")
    poly = [1]
    for k in range(2, n + 1):
        poly = _qint_mul(poly, k)
    for h in hook_lengths(shape):
        poly = _qint_div_exact(poly, h)
    shift = sum(i * part for i, part in enumerate(shape))
    counts = {r: 0 for r in range(1, n + 1)}
    for j, c in enumerate(poly):
        if c:
            counts[(j + shift - 1) % n + 1] += c
    return MajDistribution(shape, n, counts)

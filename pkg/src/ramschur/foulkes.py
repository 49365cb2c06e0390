"""Foulkes characters and the weighted power-sum family R(n, u).

R(n, u) is the symmetric function sum over d | n of
c_d(n/d)^u * p_d^(n/d), with the convention x^0 = 1 for every x
including 0, so R(n, 0) is the characteristic of the regular action on
necklaces refined by all divisors.

The Foulkes character with label r decomposes as
ell(n, r) = (1/n) * sum over d | n of c_d(r) * p_d^(n/d); its Schur
multiplicity at lambda counts SYT of shape lambda with major index
congruent to r mod n.  It depends on r only through m = gcd(n, r) and
is cached by that canonical key.

In the ell basis, R(n, u) = sum over k | n of Y_u[n, n/k] * ell(n, k)
where Y_u[n, k] = sum over d | n of c_k(n/d) * c_d(n/d)^u.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt
from typing import Mapping, Optional

from .arith import divisors, factorize, ramanujan_sum
from .config import DEFAULT_CAPS
from .errors import CapExceeded, InternalConsistencyError
from .ramat import row_sum_fgk
from .symfunc import (
    Partition,
    SchurExpansion,
    _rectangle_terms,
    partition_list,
)

__all__ = [
    "foulkes_schur_multiplicities",
    "y_coefficient",
    "StructuralY",
    "y_coefficient_structural",
    "y_coefficient_structural_detail",
    "EllExpansion",
    "rnu_ell_expansion",
    "rnu_schur_expansion",
    "trivial_multiplicity",
    "sign_multiplicity",
    "PositivityVerdict",
    "check_positivity",
    "RejectionReason",
    "quick_reject",
    "ScalarDivisibility",
    "scalar_divisibility_check",
    "MultiplicityReport",
    "multiplicity_report",
    "SwansonViolation",
    "swanson_vanishing_check",
]


def _schur_limit(cap: int | None) -> int:
    return DEFAULT_CAPS.schur_degree if cap is None else cap


def _check_degree(n: int, cap: int | None) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    limit = _schur_limit(cap)
    if n > limit:
        raise CapExceeded(f"n = {n} exceeds the expansion cap {limit}")


@lru_cache(maxsize=None)
def _ell_terms(n: int, m: int) -> Mapping[Partition, int]:
    # m = gcd(n, r) is the canonical label; read-only result.
    acc: dict = {}
    for d in divisors(n):
        w = ramanujan_sum(d, m)
        if w == 0:
            continue
        for lam, chi in _rectangle_terms(n, d).items():
            acc[lam] = acc.get(lam, 0) + w * chi
    out = {}
    for lam, v in acc.items():
        if v == 0:
            continue
        q, rem = divmod(v, n)
        if rem:
            raise InternalConsistencyError(
                f"character sum not divisible by n at n={n}, m={m}, shape={lam}"
            )
        out[lam] = q
    return out


def foulkes_schur_multiplicities(n: int, r: int, *, cap: int | None = None) -> SchurExpansion:
    """Schur multiplicities of the Foulkes character ell(n, r).

    r is normalized to the canonical divisor gcd(n, r); every
    coefficient is an exact integer, with inexact division reported as
    InternalConsistencyError.
    """
    _check_degree(n, cap)
    if r < 1 or r > n:
        raise ValueError(f"label r must satisfy 1 <= r <= n, got r={r}")
    return SchurExpansion(n, dict(_ell_terms(n, gcd(n, r))))


def y_coefficient(n: int, k: int, u: int) -> int:
    """Y_u[n, k] = sum over d | n of c_k(n/d) * c_d(n/d)^u, exactly.

    Uses the convention x^0 = 1 for all x, including x = 0.
    """
    if n < 1 or k < 1 or n % k != 0:
        raise ValueError(f"need k | n, got n={n}, k={k}")
    if u < 0:
        raise ValueError(f"u must be >= 0, got {u}")
    total = 0
    for d in divisors(n):
        q = n // d
        total += ramanujan_sum(k, q) * ramanujan_sum(d, q) ** u
    return total


@dataclass(frozen=True)
class StructuralY:
    """Block-product evaluation of Y_u[n, k].

    fallback_blocks lists the prime-power blocks q^a (a >= 2) that had no
    closed form for the given u and were evaluated by direct summation.
    """

    n: int
    k: int
    u: int
    value: int
    fallback_blocks: tuple[int, ...]

    @property
    def fully_structural(self) -> bool:
        return not self.fallback_blocks


def y_coefficient_structural_detail(n: int, k: int, u: int) -> StructuralY:
    """Evaluate Y_u[n, k] multiplicatively over coprime blocks of n.

    The square-free part of n forms one block: there Y is n_block on the
    full divisor for odd u and a row sum of the Ramanujan matrix for
    even u.  Prime-power blocks q^a with a >= 2 have closed forms for
    u <= 1 (odd a: concentrated at k = q^((a+1)/2); even a = 2t:
    q^t * phi(q^i) for k = q^i with i <= t); for u >= 2 those blocks fall
    back to direct summation and are flagged.
    """
    if n < 1 or k < 1 or n % k != 0:
        raise ValueError(f"need k | n, got n={n}, k={k}")
    if u < 0:
        raise ValueError(f"u must be >= 0, got {u}")
    value = 1
    fallback = []
    squarefree_n = 1
    squarefree_k = 1
    for p, a in factorize(n).factors:
        kp = 1
        kk = k
        while kk % p == 0:
            kk //= p
            kp *= p
        if a == 1:
            squarefree_n *= p
            squarefree_k *= kp
            continue
        block = p**a
        if u == 0:
            value *= row_sum_fgk(block, kp)
        elif u == 1:
            if a % 2 == 1:
                mid = p ** ((a + 1) // 2)
                value *= block if kp == mid else 0
            else:
                t = a // 2
                i = 0
                q = kp
                while q > 1:
                    q //= p
                    i += 1
                if i <= t:
                    phi = 1 if kp == 1 else (p - 1) * (kp // p)
                    value *= p**t * phi
                else:
                    value *= 0
        else:
            fallback.append(block)
            value *= y_coefficient(block, kp, u)
    if squarefree_n > 1 or n == 1:
        if u % 2 == 1:
            value *= squarefree_n if squarefree_k == squarefree_n else 0
        else:
            value *= row_sum_fgk(squarefree_n, squarefree_k)
    return StructuralY(n, k, u, value, tuple(fallback))


def y_coefficient_structural(n: int, k: int, u: int) -> int:
    return y_coefficient_structural_detail(n, k, u).value


@dataclass(eq=True)
class EllExpansion:
    """Integer combination of Foulkes characters ell(n, k) over k | n.

    Zero coefficients are not stored; coefficient() returns 0 for them.
    """

    n: int
    coeffs: dict

    def coefficient(self, k: int) -> int:
        return self.coeffs.get(k, 0)

    def items_asc(self) -> list[tuple[int, int]]:
        return sorted(self.coeffs.items())


def rnu_ell_expansion(n: int, u: int) -> EllExpansion:
    """R(n, u) in the Foulkes basis: coefficient of ell(n, k) is Y_u[n, n/k]."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if u < 0:
        raise ValueError(f"u must be >= 0, got {u}")
    coeffs = {}
    for k in divisors(n):
        y = y_coefficient(n, n // k, u)
        if y:
            coeffs[k] = y
    return EllExpansion(n, coeffs)


def _diagonal_weights(n: int, u: int) -> dict[int, int]:
    return {d: ramanujan_sum(d, n // d) ** u for d in divisors(n)}


def rnu_schur_expansion(n: int, u: int, *, cap: int | None = None) -> SchurExpansion:
    """Schur expansion of R(n, u), exactly."""
    _check_degree(n, cap)
    if u < 0:
        raise ValueError(f"u must be >= 0, got {u}")
    acc: dict = {}
    for d, w in _diagonal_weights(n, u).items():
        if w == 0:
            continue
        for lam, chi in _rectangle_terms(n, d).items():
            acc[lam] = acc.get(lam, 0) + w * chi
    return SchurExpansion(n, acc)


def trivial_multiplicity(n: int, u: int) -> int:
    """Coefficient of s_(n) in R(n, u): sum of c_d(n/d)^u over d | n."""
    if n < 1 or u < 0:
        raise ValueError(f"need n >= 1 and u >= 0, got n={n}, u={u}")
    return sum(w for w in _diagonal_weights(n, u).values())


def sign_multiplicity(n: int, u: int) -> int:
    """Coefficient of s_(1^n) in R(n, u): sum of c_d(n/d)^u * (-1)^(n - n/d)."""
    if n < 1 or u < 0:
        raise ValueError(f"need n >= 1 and u >= 0, got n={n}, u={u}")
    total = 0
    for d, w in _diagonal_weights(n, u).items():
        total += w if (n - n // d) % 2 == 0 else -w
    return total


@dataclass(frozen=True)
class PositivityVerdict:
    """Outcome of the two-stage Schur positivity check.

    ell_nonneg reports whether every coefficient in the Foulkes basis is
    nonnegative (which forces Schur positivity); witness carries the
    first negative Schur coefficient in reverse lexicographic order when
    the answer is negative.
    """

    n: int
    u: int
    schur_positive: bool
    witness: Optional[tuple[Partition, int]]
    ell_nonneg: bool


def check_positivity(n: int, u: int, *, cap: int | None = None) -> PositivityVerdict:
    """Decide whether R(n, u) is Schur positive.

    Fast path: if all ell-basis coefficients are nonnegative the answer
    is yes without expanding.  Otherwise the full Schur expansion is
    scanned.
    """
    _check_degree(n, cap)
    if u < 0:
        raise ValueError(f"u must be >= 0, got {u}")
    ys = [y_coefficient(n, k, u) for k in divisors(n)]
    if min(ys) >= 0:
        return PositivityVerdict(n, u, True, None, True)
    expansion = rnu_schur_expansion(n, u, cap=cap)
    if all(c >= 0 for c in expansion.terms.values()):
        return PositivityVerdict(n, u, True, None, False)
    witness = None
    for lam in partition_list(n):
        c = expansion.terms.get(lam, 0)
        if c < 0:
            witness = (lam, c)
            break
    return PositivityVerdict(n, u, False, witness, False)


@dataclass(frozen=True)
class RejectionReason:
    """A corner multiplicity outside [0, n], certifying non-positivity."""

    n: int
    u: int
    which: str  # "trivial" or "sign"
    value: int

    def __str__(self) -> str:
        return (
            f"R({self.n},{self.u}) is not Schur positive: {self.which} "
            f"multiplicity {self.value} is outside [0, {self.n}]"
        )


def quick_reject(n: int, u: int) -> Optional[RejectionReason]:
    """Cheap necessary conditions for Schur positivity.

    The trivial multiplicity t and the sign-weighted multiplicity s must
    both lie in [0, n] (the hook coefficients at (n-1,1) and (2,1^(n-2))
    are n - t and n - s).  Returns a reason when one fails, else None.
    A None answer decides nothing.
    """
    t = trivial_multiplicity(n, u)
    if t < 0 or t > n:
        return RejectionReason(n, u, "trivial", t)
    s = sign_multiplicity(n, u)
    if s < 0 or s > n:
        return RejectionReason(n, u, "sign", s)
    return None


@dataclass(frozen=True)
class ScalarDivisibility:
    """n_odd * isqrt(n_even) divides every Schur coefficient of R(n, 1).

    n_odd collects the prime powers of n with odd exponent, n_even those
    with even exponent.
    """

    n: int
    odd_part: int
    even_part: int
    scalar: int
    divides: bool


def scalar_divisibility_check(n: int, *, cap: int | None = None) -> ScalarDivisibility:
    _check_degree(n, cap)
    odd_part = 1
    even_part = 1
    for p, a in factorize(n).factors:
        if a % 2 == 1:
            odd_part *= p**a
        else:
            even_part *= p**a
    scalar = odd_part * isqrt(even_part)
    expansion = rnu_schur_expansion(n, 1, cap=cap)
    divides = all(c % scalar == 0 and c >= 0 for c in expansion.terms.values())
    return ScalarDivisibility(n, odd_part, even_part, scalar, divides)


@dataclass(frozen=True)
class MultiplicityReport:
    """Closed-form corner multiplicities of R(n, u).

    restriction_regular_copies is n for u <= 1 (where the restriction to
    the subgroup fixing one point is that many regular representations)
    and None otherwise.
    """

    n: int
    u: int
    trivial: int
    sign: int
    hook_n_minus_1_1: int
    hook_2_ones: int
    restriction_regular_copies: Optional[int]


def multiplicity_report(n: int, u: int) -> MultiplicityReport:
    if n < 2:
        raise ValueError(f"multiplicity_report requires n >= 2, got {n}")
    t = trivial_multiplicity(n, u)
    s = sign_multiplicity(n, u)
    return MultiplicityReport(
        n=n,
        u=u,
        trivial=t,
        sign=s,
        hook_n_minus_1_1=n - t,
        hook_2_ones=n - s,
        restriction_regular_copies=n if u <= 1 else None,
    )


@dataclass(frozen=True)
class SwansonViolation:
    """Mismatch between a computed zero multiplicity and the predicted set."""

    shape: Partition
    r: int
    multiplicity: int
    expected_zero: bool


def _predicted_zero_set(n: int) -> set[tuple[Partition, int]]:
    zeros: set[tuple[Partition, int]] = set()
    row = (n,)
    for r in range(1, n):
        zeros.add((row, r))
    ones = (1,) * n
    if n % 2 == 1:
        for r in range(1, n):
            zeros.add((ones, r))
    else:
        for r in range(1, n + 1):
            if r != n // 2:
                zeros.add((ones, r))
    if n >= 2:
        hook = (n - 1, 1) if n > 2 else (1, 1)
        zeros.add((hook, n))
        cohook = (2,) + (1,) * (n - 2)
        zeros.add((cohook, n if n % 2 == 1 else n // 2))
    if n == 4:
        zeros.update({((2, 2), 1), ((2, 2), 3)})
    if n == 6:
        zeros.update({((2, 2, 2), 1), ((2, 2, 2), 5), ((3, 3), 2), ((3, 3), 4)})
    return zeros


def swanson_vanishing_check(n: int, *, cap: int | None = None) -> list[SwansonViolation]:
    """Compare actual zero Foulkes multiplicities with the predicted set.

    Returns one violation per (shape, r) where they disagree; an empty
    list means the classification holds at n.
    """
    if n < 2:
        raise ValueError(f"swanson_vanishing_check requires n >= 2, got {n}")
    limit = DEFAULT_CAPS.maj_degree if cap is None else cap
    if n > limit:
        raise CapExceeded(f"n = {n} exceeds the oracle cap {limit}")
    predicted = _predicted_zero_set(n)
    violations = []
    for r in range(1, n + 1):
        mults = _ell_terms(n, gcd(n, r))
        for lam in partition_list(n):
            mult = mults.get(lam, 0)
            expected = (lam, r) in predicted
            if (mult == 0) != expected:
                violations.append(SwansonViolation(lam, r, mult, expected))
    return violations

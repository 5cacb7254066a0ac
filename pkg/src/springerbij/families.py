"""Enumerators, validators and counting oracles for the combinatorial families.

The six families share one counting story: snakes, weakly increasing
3-dimensional permutations, rc-invariant alternating permutations and labeled
ballot paths are all counted by the Springer numbers; Laguerre histories are
counted by n!; alternating permutations by the Euler numbers. Enumeration is
by backtracking with family-specific pruning, and every enumerator emits its
objects in strictly increasing order of their canonical text.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Iterator, Sequence

from . import permcore
from .paths import LabeledBallotPath, LaguerreHistory, count_lbp_dp, format_path


@dataclasses.dataclass(frozen=True)
class ThreeWIP:
    """A pair of equal-length permutations whose columnwise maxima weakly increase."""

    sigma: tuple[int, ...]
    pi: tuple[int, ...]


def is_wip3(sigma: Sequence[int], pi: Sequence[int]) -> bool:
    if len(sigma) != len(pi):
        return False
    if not (permcore.is_permutation(sigma) and permcore.is_permutation(pi)):
        return False
    maxima = [max(a, b) for a, b in zip(sigma, pi)]
    return all(maxima[i] <= maxima[i + 1] for i in range(len(maxima) - 1))


def validate_wip3(sigma: Sequence[int], pi: Sequence[int]) -> ThreeWIP:
    if not is_wip3(sigma, pi):
        raise ValueError("columnwise maxima are not weakly increasing over two permutations")
    return ThreeWIP(tuple(sigma), tuple(pi))


def format_wip3(wip: ThreeWIP) -> str:
    """Both rows in permutation format, joined by ' / '."""
    return permcore.format_perm(wip.sigma) + " / " + permcore.format_perm(wip.pi)


def parse_wip3(text: str) -> ThreeWIP:
    head, sep, tail = text.partition("/")
    if not sep:
        raise ValueError(f"expected 'sigma / pi' in {text!r}")
    return validate_wip3(permcore.parse_perm(head), permcore.parse_perm(tail))


# ---------------------------------------------------------------------------
# sequence oracles

@dataclasses.dataclass(frozen=True)
class SpringerTable:
    """Springer numbers S_0..S_m with a tag recording how they were computed."""

    values: tuple[int, ...]
    method: str  # "egf" | "dp" | "enumeration"


# k-th derivative of cos - sin at 0, by k mod 4
_COS_MINUS_SIN = (1, -1, -1, 1)
# k-th derivative of cos at 0 and of 1 + sin at 0, by k mod 4
_COS = (1, 0, -1, 0)
_ONE_PLUS_SIN = (0, 1, 0, -1)


def springer_egf(m: int) -> SpringerTable:
    """S_0..S_m from the reciprocal of cos - sin, as exact integers.

    The product rule for exponential generating functions turns
    (cos - sin) * S = 1 into S_n = -sum_{k=1..n} C(n,k) c_k S_{n-k} with
    c_k the k-th derivative of cos - sin at 0.

    >>> springer_egf(6).values
    (1, 1, 3, 11, 57, 361, 2763)
    """
    values = [1]
    for n in range(1, m + 1):
        acc = 0
        for k in range(1, n + 1):
            acc += math.comb(n, k) * _COS_MINUS_SIN[k % 4] * values[n - k]
        values.append(-acc)
    return SpringerTable(tuple(values), "egf")


def springer_dp(m: int) -> SpringerTable:
    """S_0..S_m via the weighted ballot-path dynamic program (independent oracle)."""
    return SpringerTable(tuple(count_lbp_dp(n) for n in range(m + 1)), "dp")


def springer_enumeration(m: int) -> SpringerTable:
    """S_0..S_m by brute-force snake counting (desk-scale only)."""
    return SpringerTable(
        tuple(sum(1 for _ in _gen_snakes(n)) for n in range(m + 1)), "enumeration"
    )


def euler_sequence(m: int) -> tuple[int, ...]:
    """E_0..E_m from (tan + sec) * cos = 1 + sin, as exact integers.

    >>> euler_sequence(6)
    (1, 1, 1, 2, 5, 16, 61)
    """
    values = [1]
    for n in range(1, m + 1):
        rhs = _ONE_PLUS_SIN[n % 4]
        acc = sum(
            math.comb(n, k) * _COS[k % 4] * values[n - k] for k in range(1, n + 1)
        )
        values.append(rhs - acc)
    return tuple(values)


# ---------------------------------------------------------------------------
# raw backtracking generators (unspecified order; used for counting)

def _gen_alternating(n: int) -> Iterator[tuple[int, ...]]:
    prefix: list[int] = []
    used = [False] * (n + 1)

    def rec():
        i = len(prefix)
        if i == n:
            yield tuple(prefix)
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            if i > 0:
                if (i - 1) % 2 == 0:
                    if prefix[-1] < v:
                        continue
                elif prefix[-1] > v:
                    continue
            used[v] = True
            prefix.append(v)
            yield from rec()
            prefix.pop()
            used[v] = False

    return rec()


def _gen_snakes(n: int) -> Iterator[tuple[int, ...]]:
    prefix: list[int] = []
    used = [False] * (n + 1)

    def fits(i: int, v: int) -> bool:
        if i == 0:
            return v > 0
        if (i - 1) % 2 == 0:
            return prefix[-1] > v
        return prefix[-1] < v

    def rec():
        i = len(prefix)
        if i == n:
            yield tuple(prefix)
            return
        for a in range(1, n + 1):
            if used[a]:
                continue
            for v in (a, -a):
                if not fits(i, v):
                    continue
                used[a] = True
                prefix.append(v)
                yield from rec()
                prefix.pop()
                used[a] = False

    return rec()


def _gen_rcalt(n: int) -> Iterator[tuple[int, ...]]:
    # Only the first half is free: position i pairs with 2n+1-i and the
    # mirrored entries sum to 2n+1, which also transports the down-up test.
    size = 2 * n
    half: list[int] = []
    used = [False] * (size + 1)

    def fits(i: int, v: int) -> bool:
        if i > 0:
            if (i - 1) % 2 == 0:
                if half[-1] <= v:
                    return False
            elif half[-1] >= v:
                return False
        if i == n - 1:
            # down-up across the middle forces p[n] > n for odd n, p[n] <= n for even
            return (2 * v > size + 1) if n % 2 else (2 * v < size + 1)
        return True

    def rec():
        i = len(half)
        if i == n:
            yield tuple(half) + tuple(size + 1 - v for v in reversed(half))
            return
        for v in range(1, size + 1):
            if used[v] or not fits(i, v):
                continue
            used[v] = used[size + 1 - v] = True
            half.append(v)
            yield from rec()
            half.pop()
            used[v] = used[size + 1 - v] = False

    return rec()


def _gen_wip3(n: int) -> Iterator[ThreeWIP]:
    top: list[int] = []
    bot: list[int] = []
    used_top = [False] * (n + 1)
    used_bot = [False] * (n + 1)

    def rec(cur_max: int):
        i = len(top)
        if i == n:
            yield ThreeWIP(tuple(top), tuple(bot))
            return
        for a in range(1, n + 1):
            if used_top[a]:
                continue
            for b in range(1, n + 1):
                if used_bot[b] or max(a, b) < cur_max:
                    continue
                used_top[a] = used_bot[b] = True
                top.append(a)
                bot.append(b)
                yield from rec(max(a, b))
                top.pop()
                bot.pop()
                used_top[a] = used_bot[b] = False

    return rec(0)


def _gen_lbp(n: int) -> Iterator[LabeledBallotPath]:
    steps: list[str] = []
    weights: list[int] = []

    def rec(h: int):
        if len(steps) == n:
            yield LabeledBallotPath("".join(steps), tuple(weights))
            return
        for s, nh in (("U", h + 1), ("D", h - 1)):
            if nh < 0:
                continue
            cap = h if s == "U" else h - 1
            steps.append(s)
            for w in range(cap + 1):
                weights.append(w)
                yield from rec(nh)
                weights.pop()
            steps.pop()

    return rec(0)


def _gen_laguerre(n: int) -> Iterator[LaguerreHistory]:
    steps: list[str] = []
    weights: list[int] = []

    def rec(h: int):
        remaining = n - len(steps)
        if remaining == 0:
            if h == 0:
                yield LaguerreHistory("".join(steps), tuple(weights))
            return
        if h > remaining:
            return
        for s in "UDHT":
            nh = h + {"U": 1, "D": -1}.get(s, 0)
            if nh < 0 or nh > remaining - 1:
                continue
            cap = h if s in ("U", "H") else h - 1
            if cap < 0:
                continue
            steps.append(s)
            for w in range(cap + 1):
                weights.append(w)
                yield from rec(nh)
                weights.pop()
            steps.pop()

    return rec(0)


# ---------------------------------------------------------------------------
# public enumerators (canonical text order) and the family registry

def enumerate_snakes(n: int) -> Iterator[tuple[int, ...]]:
    """All snakes of length n, in increasing text order; there are S_n of them."""
    return iter(sorted(_gen_snakes(n), key=permcore.format_signed))


def enumerate_wip3(n: int) -> Iterator[ThreeWIP]:
    """All weakly increasing 3-dimensional permutations of length n (S_n many)."""
    return iter(sorted(_gen_wip3(n), key=format_wip3))


def enumerate_rcalt(n: int) -> Iterator[tuple[int, ...]]:
    """All rc-invariant alternating permutations of length 2n (S_n many)."""
    return iter(sorted(_gen_rcalt(n), key=permcore.format_perm))


def enumerate_lbp(n: int) -> Iterator[LabeledBallotPath]:
    """All labeled ballot paths of length n (S_n many)."""
    return iter(sorted(_gen_lbp(n), key=format_path))


def enumerate_laguerre(n: int) -> Iterator[LaguerreHistory]:
    """All restricted Laguerre histories of length n (n! many)."""
    return iter(sorted(_gen_laguerre(n), key=format_path))


def enumerate_alternating(n: int) -> Iterator[tuple[int, ...]]:
    """All down-up alternating permutations of length n (E_n many)."""
    return iter(sorted(_gen_alternating(n), key=permcore.format_perm))


@dataclasses.dataclass(frozen=True)
class Family:
    enumerate: object  # n -> iterator, canonical order
    generate: object   # n -> iterator, unspecified order (cheaper for counting)
    render: object     # object -> canonical text
    oracle: object     # n -> count, closed form


FAMILIES: dict[str, Family] = {
    "snakes": Family(
        enumerate_snakes, _gen_snakes, permcore.format_signed,
        lambda n: springer_egf(n).values[n],
    ),
    "wip3": Family(
        enumerate_wip3, _gen_wip3, format_wip3,
        lambda n: springer_egf(n).values[n],
    ),
    "rcalt": Family(
        enumerate_rcalt, _gen_rcalt, permcore.format_perm,
        lambda n: springer_egf(n).values[n],
    ),
    "lbp": Family(enumerate_lbp, _gen_lbp, format_path, count_lbp_dp),
    "laguerre": Family(enumerate_laguerre, _gen_laguerre, format_path, math.factorial),
    "altperm": Family(
        enumerate_alternating, _gen_alternating, permcore.format_perm,
        lambda n: euler_sequence(n)[n],
    ),
}

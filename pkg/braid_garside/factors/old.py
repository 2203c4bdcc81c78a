"""
Canonical factors of the Artin presentation: permutation braids.

A permutation braid is a positive braid in which every pair of strands crosses at most
once, so it is determined by where each strand ends. `PermFactor.perm` is the one-line
tuple (a_1, ..., a_n): the strand starting at position i ends at position a_i. Products
compose left to right, (x·y)(i) = y(x(i)), and the letter length is the number of
inversions.
"""
import functools
import itertools
import math
import re
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple

DEFAULT_ENUMERATION_CAP = 8


class EnumerationCapExceeded(ValueError):
    """Enumerating all canonical factors would be too large"""


@dataclass(frozen=True, order=True)
class PermFactor:
    n: int
    perm: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(1, self.n + 1)):
            raise ValueError(f"{self.perm} is not a permutation of 1..{self.n}")

    @functools.cached_property
    def inverse_perm(self) -> Tuple[int, ...]:
        inv = [0] * self.n
        for i, a in enumerate(self.perm, start=1):
            inv[a - 1] = i
        return tuple(inv)

    @functools.cached_property
    def length(self) -> int:
        return sum(
            1 for i, j in itertools.combinations(range(self.n), 2) if self.perm[i] > self.perm[j]
        )

    def __str__(self) -> str:
        return format_factor(self)


def identity_old(n: int) -> PermFactor:
    return PermFactor(n, tuple(range(1, n + 1)))


def delta_old(n: int) -> PermFactor:
    """The half twist Δ, i.e. the order reversing permutation"""
    if n < 2:
        raise ValueError(f"braid index must be at least 2, got {n}")
    return PermFactor(n, tuple(range(n, 0, -1)))


def generator_old(n: int, i: int) -> PermFactor:
    """σ_i as a factor"""
    perm = list(range(1, n + 1))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return PermFactor(n, tuple(perm))


def _compose(a: PermFactor, b: PermFactor) -> Tuple[int, ...]:
    return tuple(b.perm[x - 1] for x in a.perm)


def factor_product(a: PermFactor, b: PermFactor) -> Optional[PermFactor]:
    """Product a·b when it is again a permutation braid

    Returns:
        PermFactor, or `None` when some pair of strands would cross twice (outside Q).
    """
    if a.n != b.n:
        raise ValueError(f"factors of B_{a.n} and B_{b.n} cannot be multiplied")
    product = PermFactor(a.n, _compose(a, b))
    if product.length != a.length + b.length:
        return None
    return product


def complement_old(a: PermFactor) -> PermFactor:
    """The unique Ā in Q with Ā·a = Δ"""
    n = a.n
    return PermFactor(n, tuple(a.inverse_perm[n - i] for i in range(1, n + 1)))


def right_complement_old(a: PermFactor) -> PermFactor:
    """The unique a* in Q with a·a* = Δ"""
    n = a.n
    return PermFactor(n, tuple(n + 1 - a.inverse_perm[i - 1] for i in range(1, n + 1)))


def tau_old(a: PermFactor, power: int) -> PermFactor:
    """τ^power(a) with τ(σ_i) = σ_{n-i}; τ is an involution"""
    if power % 2 == 0:
        return a
    n = a.n
    return PermFactor(n, tuple(n + 1 - a.perm[n - i] for i in range(1, n + 1)))


def left_descents(a: PermFactor) -> FrozenSet[int]:
    """Generators σ_i that left-divide a (strands starting at i, i+1 cross)"""
    return frozenset(i for i in range(1, a.n) if a.perm[i - 1] > a.perm[i])


def right_descents(a: PermFactor) -> FrozenSet[int]:
    """Generators σ_i that right-divide a (strands ending at i, i+1 cross)"""
    inv = a.inverse_perm
    return frozenset(i for i in range(1, a.n) if inv[i - 1] > inv[i])


@functools.lru_cache(maxsize=None)
def left_meet_head(p_head: PermFactor, p_next: PermFactor) -> Tuple[PermFactor, PermFactor]:
    """Local left-greedy step on the pair (p_head, p_next)

    Moves generators from the front of `p_next` onto the back of `p_head` while a
    generator in the left descent set of the second factor is missing from the right
    descent set of the first.

    Returns:
        (head, rest): head is the maximal head of p_head·p_next and head·rest equals it.
    """
    if p_head.n != p_next.n:
        raise ValueError(f"factors of B_{p_head.n} and B_{p_next.n} cannot be multiplied")
    head, rest = list(p_head.perm), list(p_next.perm)
    while True:
        x, y = PermFactor(p_head.n, tuple(head)), PermFactor(p_head.n, tuple(rest))
        movable = left_descents(y) - right_descents(x)
        if not movable:
            return x, y
        s = min(movable)
        # x·σ_s swaps the values s, s+1; σ_s⁻¹·y swaps the positions s, s+1
        head = [s + 1 if v == s else s if v == s + 1 else v for v in head]
        rest[s - 1], rest[s] = rest[s], rest[s - 1]


def word_old(a: PermFactor) -> List[int]:
    """Lexicographically smallest reduced word of a, as Artin indices"""
    letters = []
    perm = list(a.perm)
    while True:
        descents = [i for i in range(1, a.n) if perm[i - 1] > perm[i]]
        if not descents:
            return letters
        i = descents[0]
        letters.append(i)
        perm[i - 1], perm[i] = perm[i], perm[i - 1]


@functools.lru_cache(maxsize=None)
def _all_perm_factors(n: int) -> Tuple[PermFactor, ...]:
    return tuple(PermFactor(n, p) for p in itertools.permutations(range(1, n + 1)))


def enumerate_q_old(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Tuple[PermFactor, ...]:
    """All n! permutation braids of B_n

    Raises:
        EnumerationCapExceeded: if n is larger than `cap`.
    """
    if n > cap:
        raise EnumerationCapExceeded(
            f"enumerating Q_old({n}) means {math.factorial(n)} factors; cap is n <= {cap}"
        )
    return _all_perm_factors(n)


def format_factor(a: PermFactor) -> str:
    return "(" + ",".join(str(v) for v in a.perm) + ")"


_PERM_TEXT = re.compile(r"^\(\s*\d+(\s*,\s*\d+)*\s*\)$")


def parse_factor(text: str) -> PermFactor:
    """Reads one-line notation such as `(3,1,2)`"""
    text = text.strip()
    if not _PERM_TEXT.match(text):
        raise ValueError(f"{text!r} is not a permutation in one-line notation")
    perm = tuple(int(v) for v in text[1:-1].split(","))
    return PermFactor(len(perm), perm)

"""
Canonical factors of the band-generator presentation: non-crossing partitions.

A factor is stored as a block-assignment array, `labels[i-1]` being the block of element
i with blocks numbered by their minimum element, so equal factors compare equal.

For the group arithmetic a factor acts on {1..n} through its permutation: each block
{i_1 < ... < i_m} is the ascending cycle i_1 -> i_2 -> ... -> i_m -> i_1, and δ is
i -> i+1 (mod n). Products compose left to right, (x·y)(i) = y(x(i)). A permutation is a
factor exactly when it is a union of ascending cycles over a non-crossing partition; a
product of factors stays in Q when, in addition, letter lengths add up.
"""
import functools
import itertools
import re
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .old import EnumerationCapExceeded

DEFAULT_ENUMERATION_CAP = 12


def _labels_from_blocks(n: int, blocks: Iterable[Iterable[int]]) -> Tuple[int, ...]:
    owner = [-1] * n
    ordered = sorted((sorted(block) for block in blocks if block), key=lambda b: b[0])
    for label, block in enumerate(ordered):
        for v in block:
            if not 1 <= v <= n or owner[v - 1] != -1:
                raise ValueError(f"{ordered} is not a partition of 1..{n}")
            owner[v - 1] = label
    # missing elements are singletons; relabel by minimum element
    next_label = len(ordered)
    for i in range(n):
        if owner[i] == -1:
            owner[i] = next_label
            next_label += 1
    return _canonical(owner)


def _canonical(owner: Sequence[int]) -> Tuple[int, ...]:
    relabel = {}
    for label in owner:
        if label not in relabel:
            relabel[label] = len(relabel)
    return tuple(relabel[label] for label in owner)


def _is_noncrossing(labels: Sequence[int]) -> bool:
    lo, hi = {}, {}
    for i, label in enumerate(labels):
        lo.setdefault(label, i)
        hi[label] = i
    last_seen = {}
    for y, label in enumerate(labels):
        x = last_seen.get(label)
        if x is not None:
            # everything strictly between two consecutive members stays between them
            for z in range(x + 1, y):
                other = labels[z]
                if lo[other] < x or hi[other] > y:
                    return False
        last_seen[label] = y
    return True


@dataclass(frozen=True, order=True)
class BandFactor:
    n: int
    labels: Tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != self.n or tuple(self.labels) != _canonical(self.labels):
            raise ValueError(f"{self.labels} is not a canonical block assignment of 1..{self.n}")
        if not _is_noncrossing(self.labels):
            raise ValueError(f"{self.blocks} is a crossing partition")

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "BandFactor":
        return cls(n, _labels_from_blocks(n, blocks))

    @functools.cached_property
    def blocks(self) -> Tuple[Tuple[int, ...], ...]:
        grouped = [[] for _ in range(max(self.labels, default=-1) + 1)]
        for i, label in enumerate(self.labels, start=1):
            grouped[label].append(i)
        return tuple(tuple(block) for block in grouped)

    @functools.cached_property
    def perm(self) -> Tuple[int, ...]:
        perm = [0] * self.n
        for block in self.blocks:
            for a, b in zip(block, block[1:] + block[:1]):
                perm[a - 1] = b
        return tuple(perm)

    @functools.cached_property
    def inverse_perm(self) -> Tuple[int, ...]:
        inv = [0] * self.n
        for i, a in enumerate(self.perm, start=1):
            inv[a - 1] = i
        return tuple(inv)

    @property
    def length(self) -> int:
        return self.n - len(self.blocks)

    def __str__(self) -> str:
        return format_factor(self)


def _from_perm(n: int, perm: Sequence[int]) -> Optional[BandFactor]:
    """The factor acting as `perm`, or None if perm is not below δ"""
    owner = [-1] * n
    label = 0
    for start in range(1, n + 1):
        if owner[start - 1] != -1:
            continue
        v = start
        while True:
            owner[v - 1] = label
            w = perm[v - 1]
            if w == start:
                break
            if w < v:
                # cycles must climb from their minimum and wrap exactly once
                return None
            v = w
        label += 1
    labels = _canonical(owner)
    if not _is_noncrossing(labels):
        return None
    return BandFactor(n, labels)


def identity_new(n: int) -> BandFactor:
    return BandFactor(n, tuple(range(n)))


def delta_new(n: int) -> BandFactor:
    """The (1/n)-twist δ: the single-block partition"""
    if n < 2:
        raise ValueError(f"braid index must be at least 2, got {n}")
    return BandFactor(n, (0,) * n)


def generator_new(n: int, t: int, s: int) -> BandFactor:
    """a_ts as a factor: the partition with the single nontrivial block {s, t}"""
    return BandFactor.from_blocks(n, [(s, t)])


def cycle_factor(n: int, t: int, s: int) -> BandFactor:
    """[t:s] = a_{t(t-1)}···a_{(s+1)s}: the single nontrivial block {s, ..., t}"""
    return BandFactor.from_blocks(n, [range(s, t + 1)])


def factor_product_new(a: BandFactor, b: BandFactor) -> Optional[BandFactor]:
    """Product a·b when it lies in Q_new, else `None`"""
    if a.n != b.n:
        raise ValueError(f"factors of B_{a.n} and B_{b.n} cannot be multiplied")
    if a.length + b.length > a.n - 1:
        return None
    product = _from_perm(a.n, tuple(b.perm[x - 1] for x in a.perm))
    if product is None or product.length != a.length + b.length:
        return None
    return product


def _delta_shift(n: int, v: int, power: int = 1) -> int:
    return (v - 1 + power) % n + 1


def complement_new(a: BandFactor) -> BandFactor:
    """The unique Ā with Ā·a = δ (Kreweras complement)"""
    n = a.n
    perm = tuple(a.inverse_perm[_delta_shift(n, i) - 1] for i in range(1, n + 1))
    return _from_perm(n, perm)


def right_complement_new(a: BandFactor) -> BandFactor:
    """The unique a* with a·a* = δ"""
    n = a.n
    perm = tuple(_delta_shift(n, a.inverse_perm[i - 1]) for i in range(1, n + 1))
    return _from_perm(n, perm)


def tau_new(a: BandFactor, power: int) -> BandFactor:
    """τ^power(a): every block element v moves to v + power (mod n); τ^n is the identity"""
    power %= a.n
    if power == 0:
        return a
    return BandFactor.from_blocks(
        a.n, [[_delta_shift(a.n, v, power) for v in block] for block in a.blocks]
    )


def meet_new(a: BandFactor, b: BandFactor) -> BandFactor:
    """Left gcd in Q_new: the common refinement of the two partitions"""
    return BandFactor(a.n, _canonical(list(zip(a.labels, b.labels))))


@functools.lru_cache(maxsize=None)
def left_meet_head_new(p_head: BandFactor, p_next: BandFactor) -> Tuple[BandFactor, BandFactor]:
    """Local left-greedy step on the pair (p_head, p_next)

    The part of `p_next` that `p_head` can absorb is the meet of `p_next` with the right
    complement of `p_head`.

    Returns:
        (head, rest) with head·rest = p_head·p_next and head maximal.
    """
    if p_head.n != p_next.n:
        raise ValueError(f"factors of B_{p_head.n} and B_{p_next.n} cannot be multiplied")
    m = meet_new(right_complement_new(p_head), p_next)
    if m.length == 0:
        return p_head, p_next
    head = factor_product_new(p_head, m)
    rest = _from_perm(p_head.n, tuple(p_next.perm[x - 1] for x in m.inverse_perm))
    return head, rest


def word_new(a: BandFactor) -> List[Tuple[int, int]]:
    """Band generators of a, each block written as its descending cycle"""
    return [
        (block[j], block[j - 1]) for block in a.blocks for j in range(len(block) - 1, 0, -1)
    ]


@functools.lru_cache(maxsize=None)
def _noncrossing_blocks(lo: int, hi: int) -> Tuple[Tuple[Tuple[int, ...], ...], ...]:
    """All non-crossing partitions of the interval lo..hi, as tuples of blocks"""
    if lo > hi:
        return ((),)
    rest = list(range(lo + 1, hi + 1))
    partitions = []
    for size in range(len(rest) + 1):
        for chosen in itertools.combinations(rest, size):
            block = (lo,) + chosen
            # gaps between consecutive members, and the tail after the last one
            bounds = list(block) + [hi + 1]
            gaps = [_noncrossing_blocks(a + 1, b - 1) for a, b in zip(bounds, bounds[1:])]
            for parts in itertools.product(*gaps):
                partitions.append((block,) + tuple(b for part in parts for b in part))
    return tuple(partitions)


@functools.lru_cache(maxsize=None)
def _all_band_factors(n: int) -> Tuple[BandFactor, ...]:
    return tuple(sorted(BandFactor.from_blocks(n, p) for p in _noncrossing_blocks(1, n)))


def enumerate_q_new(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Tuple[BandFactor, ...]:
    """All Catalan(n) non-crossing partitions of 1..n

    Raises:
        EnumerationCapExceeded: if n is larger than `cap`.
    """
    if n > cap:
        raise EnumerationCapExceeded(f"enumerating Q_new({n}) exceeds the cap n <= {cap}")
    return _all_band_factors(n)


def _is_interval(block: Sequence[int]) -> bool:
    return block[-1] - block[0] == len(block) - 1


def format_factor(a: BandFactor) -> str:
    """Bracket shorthand `[5:3]` when every nontrivial block is an interval,
    explicit block sets such as `{1,3}{2}` otherwise; `e` for the identity."""
    nontrivial = [block for block in a.blocks if len(block) > 1]
    if not nontrivial:
        return "e"
    if all(_is_interval(block) for block in nontrivial):
        return "".join(f"[{block[-1]}:{block[0]}]" for block in nontrivial)
    return "".join("{" + ",".join(str(v) for v in block) + "}" for block in a.blocks)


_BRACKET = re.compile(r"\[(\d+):(\d+)\]")
_BRACE = re.compile(r"\{([\d,\s]+)\}")


def parse_factor(text: str, n: int) -> BandFactor:
    """Reads `e`, bracket shorthand (`[3:1][5:4]`) or block sets (`{1,3}{2}`)"""
    text = text.strip()
    if text == "e":
        return identity_new(n)
    if text.startswith("["):
        if _BRACKET.sub("", text).strip():
            raise ValueError(f"{text!r} is not bracket shorthand")
        blocks = []
        for t, s in _BRACKET.findall(text):
            t, s = int(t), int(s)
            if not n >= t > s >= 1:
                raise ValueError(f"[{t}:{s}] is not a block of 1..{n}")
            blocks.append(range(s, t + 1))
        return BandFactor.from_blocks(n, blocks)
    if _BRACE.sub("", text).strip():
        raise ValueError(f"{text!r} is not a block-set partition")
    blocks = [[int(v) for v in body.split(",")] for body in _BRACE.findall(text)]
    return BandFactor.from_blocks(n, blocks)

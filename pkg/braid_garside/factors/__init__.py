"""
Canonical factors (the set Q of left divisors of the fundamental braid) for both presentations.

`get_algebra(n, presentation)` returns the factor arithmetic the normal form engine runs on:
permutation braids for the Artin presentation, non-crossing partitions for the band-generator
presentation. Both share one operation surface, `FactorAlgebra`.
"""
import abc
import functools
from typing import List, Optional, Tuple, Union

from ..words import Letter, Presentation
from . import new, old
from .new import BandFactor
from .old import EnumerationCapExceeded, PermFactor

CanonicalFactor = Union[PermFactor, BandFactor]


class FactorAlgebra(abc.ABC):
    """Garside arithmetic on the canonical factors of B_n"""

    presentation: Presentation

    def __init__(self, n: int):
        if n < 2:
            raise ValueError(f"braid index must be at least 2, got {n}")
        self.n = n

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n})"

    @property
    @abc.abstractmethod
    def delta_length(self) -> int:
        """Letter length |D| of the fundamental braid"""

    @abc.abstractmethod
    def identity(self) -> CanonicalFactor:
        ...

    @abc.abstractmethod
    def delta(self) -> CanonicalFactor:
        ...

    @abc.abstractmethod
    def generator(self, gen: Tuple[int, ...]) -> CanonicalFactor:
        """Lifts the letter payload `(i,)` or `(t, s)` to a factor"""

    @abc.abstractmethod
    def product(self, a: CanonicalFactor, b: CanonicalFactor) -> Optional[CanonicalFactor]:
        """a·b if it lies in Q, else `None`"""

    @abc.abstractmethod
    def complement(self, a: CanonicalFactor) -> CanonicalFactor:
        """Ā with Ā·a = D"""

    @abc.abstractmethod
    def right_complement(self, a: CanonicalFactor) -> CanonicalFactor:
        """a* with a·a* = D"""

    @abc.abstractmethod
    def tau(self, a: CanonicalFactor, power: int) -> CanonicalFactor:
        """τ^power(a) where τ(x) = D⁻¹xD"""

    @abc.abstractmethod
    def left_meet_head(
        self, p_head: CanonicalFactor, p_next: CanonicalFactor
    ) -> Tuple[CanonicalFactor, CanonicalFactor]:
        ...

    @abc.abstractmethod
    def enumerate(self, cap: Optional[int] = None) -> Tuple[CanonicalFactor, ...]:
        ...

    @abc.abstractmethod
    def generators(self, a: CanonicalFactor) -> List[Tuple[int, ...]]:
        """Letter payloads of the word expansion of a"""

    @abc.abstractmethod
    def format(self, a: CanonicalFactor) -> str:
        ...

    @abc.abstractmethod
    def parse(self, text: str) -> CanonicalFactor:
        ...

    def word(self, a: CanonicalFactor) -> List[Letter]:
        return [Letter(gen) for gen in self.generators(a)]

    def letter_length(self, a: CanonicalFactor) -> int:
        return a.length

    def is_identity(self, a: CanonicalFactor) -> bool:
        return a.length == 0

    def is_delta(self, a: CanonicalFactor) -> bool:
        return a.length == self.delta_length


class PermAlgebra(FactorAlgebra):
    presentation = Presentation.OLD

    @property
    def delta_length(self) -> int:
        return self.n * (self.n - 1) // 2

    def identity(self) -> PermFactor:
        return old.identity_old(self.n)

    def delta(self) -> PermFactor:
        return old.delta_old(self.n)

    def generator(self, gen: Tuple[int, ...]) -> PermFactor:
        (i,) = gen
        return old.generator_old(self.n, i)

    def product(self, a, b):
        return old.factor_product(a, b)

    def complement(self, a):
        return old.complement_old(a)

    def right_complement(self, a):
        return old.right_complement_old(a)

    def tau(self, a, power):
        return old.tau_old(a, power)

    def left_meet_head(self, p_head, p_next):
        return old.left_meet_head(p_head, p_next)

    def enumerate(self, cap=None):
        return old.enumerate_q_old(self.n, old.DEFAULT_ENUMERATION_CAP if cap is None else cap)

    def generators(self, a):
        return [(i,) for i in old.word_old(a)]

    def format(self, a):
        return old.format_factor(a)

    def parse(self, text):
        a = old.parse_factor(text)
        if a.n != self.n:
            raise ValueError(f"{text!r} is a factor of B_{a.n}, expected B_{self.n}")
        return a


class BandAlgebra(FactorAlgebra):
    presentation = Presentation.NEW

    @property
    def delta_length(self) -> int:
        return self.n - 1

    def identity(self) -> BandFactor:
        return new.identity_new(self.n)

    def delta(self) -> BandFactor:
        return new.delta_new(self.n)

    def generator(self, gen: Tuple[int, ...]) -> BandFactor:
        t, s = gen
        return new.generator_new(self.n, t, s)

    def product(self, a, b):
        return new.factor_product_new(a, b)

    def complement(self, a):
        return new.complement_new(a)

    def right_complement(self, a):
        return new.right_complement_new(a)

    def tau(self, a, power):
        return new.tau_new(a, power)

    def left_meet_head(self, p_head, p_next):
        return new.left_meet_head_new(p_head, p_next)

    def enumerate(self, cap=None):
        return new.enumerate_q_new(self.n, new.DEFAULT_ENUMERATION_CAP if cap is None else cap)

    def generators(self, a):
        return new.word_new(a)

    def format(self, a):
        return new.format_factor(a)

    def parse(self, text):
        return new.parse_factor(text, self.n)


@functools.lru_cache(maxsize=None)
def get_algebra(n: int, presentation: Presentation) -> FactorAlgebra:
    """Factor arithmetic of B_n in the given presentation (cached per (n, presentation))"""
    presentation = Presentation(presentation)
    if presentation is Presentation.OLD:
        return PermAlgebra(n)
    return BandAlgebra(n)


__all__ = [
    "BandAlgebra",
    "BandFactor",
    "CanonicalFactor",
    "EnumerationCapExceeded",
    "FactorAlgebra",
    "PermAlgebra",
    "PermFactor",
    "get_algebra",
]

"""
Left-greedy normal forms D^u A_1···A_k.

Every braid has a unique normal form with u an integer and the A_i canonical factors other
than e and D such that each adjacent pair (A_i, A_{i+1}) is left-greedy, i.e. A_i already
absorbed everything of A_{i+1} it could while staying in Q. Normal forms are compared
structurally, which solves the word problem.
"""
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from . import words
from .factors import CanonicalFactor, FactorAlgebra, get_algebra
from .words import BraidWord, Letter, Presentation, PresentationMismatch


@dataclass(frozen=True)
class NormalForm:
    n: int
    presentation: Presentation
    u: int
    factors: Tuple[CanonicalFactor, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "presentation", Presentation(self.presentation))
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def algebra(self) -> FactorAlgebra:
        return get_algebra(self.n, self.presentation)

    @property
    def k(self) -> int:
        """canonical length"""
        return len(self.factors)

    @property
    def inf(self) -> int:
        return self.u

    @property
    def sup(self) -> int:
        return self.u + len(self.factors)

    def __str__(self) -> str:
        return to_text(self)


def _push_deltas_left(
    algebra: FactorAlgebra, items: Sequence[Tuple[int, Optional[CanonicalFactor]]]
) -> Tuple[int, List[CanonicalFactor]]:
    """Rewrites a product of items D^shift·factor as D^u·G_1···G_m

    A factor passes a power of D on its right through `a·D^p = D^p·τ^p(a)`.
    """
    power = 0
    pushed = []
    for shift, factor in reversed(items):
        if factor is not None:
            pushed.append(algebra.tau(factor, power))
        power += shift
    pushed.reverse()
    return power, pushed


def normalize_factors(
    n: int, presentation: Presentation, u: int, factors: Iterable[CanonicalFactor]
) -> NormalForm:
    """Normal form of D^u·F_1···F_m for arbitrary canonical factors F_i

    Each factor is appended to the already left-greedy prefix and combed backwards with the
    local greedy step until a pair is left unchanged.
    """
    algebra = get_algebra(n, presentation)
    chain: List[CanonicalFactor] = []
    for factor in factors:
        if algebra.is_identity(factor):
            continue
        chain.append(factor)
        for j in range(len(chain) - 1, 0, -1):
            head, rest = algebra.left_meet_head(chain[j - 1], chain[j])
            if head == chain[j - 1]:
                break
            chain[j - 1], chain[j] = head, rest

    while chain and algebra.is_identity(chain[-1]):
        chain.pop()
    leading = 0
    while leading < len(chain) and algebra.is_delta(chain[leading]):
        leading += 1
    return NormalForm(n, algebra.presentation, u + leading, tuple(chain[leading:]))


def _letter_item(algebra: FactorAlgebra, letter: Letter) -> Tuple[int, CanonicalFactor]:
    factor = algebra.generator(letter.gen)
    if letter.sign > 0:
        return 0, factor
    # x⁻¹ = D⁻¹·x̄
    return -1, algebra.complement(factor)


def normalize(w: BraidWord) -> NormalForm:
    """Unique normal form of the element represented by w

    Args:
        w (BraidWord): any word, negative letters allowed.

    Returns:
        NormalForm
    """
    algebra = get_algebra(w.n, w.presentation)
    u, factors = _push_deltas_left(algebra, [_letter_item(algebra, l) for l in w.letters])
    return normalize_factors(w.n, w.presentation, u, factors)


def check_compatible(a, b):
    if a.n != b.n or Presentation(a.presentation) is not Presentation(b.presentation):
        raise PresentationMismatch(
            f"B_{a.n} ({Presentation(a.presentation).value}) and "
            f"B_{b.n} ({Presentation(b.presentation).value}) do not match"
        )


def equal(v: BraidWord, w: BraidWord) -> bool:
    """Word problem: do v and w represent the same braid?

    Raises:
        PresentationMismatch: if the words live in different groups or presentations.
    """
    check_compatible(v, w)
    return normalize(v) == normalize(w)


def inf(nf: NormalForm) -> int:
    return nf.inf


def sup(nf: NormalForm) -> int:
    return nf.sup


def power_of_delta(nf: NormalForm, power: int, side: str = "left") -> NormalForm:
    """Multiplies by D^power

    Args:
        nf (NormalForm): normal form.
        power (int): exponent of D, may be negative.
        side (str, optional): `left` for D^power·nf, `right` for nf·D^power. Defaults to `left`.

    Returns:
        NormalForm: inf and sup are both shifted by `power`.
    """
    if side == "left":
        return NormalForm(nf.n, nf.presentation, nf.u + power, nf.factors)
    if side == "right":
        algebra = nf.algebra
        return NormalForm(
            nf.n, nf.presentation, nf.u + power, tuple(algebra.tau(a, power) for a in nf.factors)
        )
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def positive_part_check(w: BraidWord) -> bool:
    """True iff w represents a positive braid (W >= e)"""
    return normalize(w).inf >= 0


def to_word(nf: NormalForm) -> BraidWord:
    """A word for nf: the D power expanded, then every factor's word"""
    algebra = nf.algebra
    delta = words.delta_word(nf.n, nf.presentation)
    letters = list(words.power(delta, nf.u).letters)
    for factor in nf.factors:
        letters.extend(algebra.word(factor))
    return words.from_letters(nf.n, nf.presentation, letters)


def inverse(nf: NormalForm) -> NormalForm:
    # (D^u A_1···A_k)⁻¹ = D⁻¹Ā_k···D⁻¹Ā_1·D^-u
    algebra = nf.algebra
    items = [(-1, algebra.complement(a)) for a in reversed(nf.factors)]
    items.append((-nf.u, None))
    u, factors = _push_deltas_left(algebra, items)
    return normalize_factors(nf.n, nf.presentation, u, factors)


def multiply(a: NormalForm, b: NormalForm) -> NormalForm:
    check_compatible(a, b)
    items = [(a.u, None)] + [(0, f) for f in a.factors]
    items += [(b.u, None)] + [(0, f) for f in b.factors]
    u, factors = _push_deltas_left(a.algebra, items)
    return normalize_factors(a.n, a.presentation, u, factors)


def conjugate_by_factor(nf: NormalForm, a: CanonicalFactor) -> NormalForm:
    """Normal form of a·nf·a⁻¹ for a canonical factor a"""
    algebra = nf.algebra
    items = [(0, a), (nf.u, None)] + [(0, f) for f in nf.factors]
    items.append((-1, algebra.complement(a)))
    u, factors = _push_deltas_left(algebra, items)
    return normalize_factors(nf.n, nf.presentation, u, factors)


def is_left_greedy(nf: NormalForm) -> bool:
    """Checks the normal form conditions directly: factors in Q minus {e, D}, pairs greedy"""
    algebra = nf.algebra
    if any(algebra.is_identity(a) or algebra.is_delta(a) for a in nf.factors):
        return False
    return all(
        algebra.left_meet_head(a, b) == (a, b) for a, b in zip(nf.factors, nf.factors[1:])
    )


def exponent_sum(nf: NormalForm) -> int:
    algebra = nf.algebra
    return nf.u * algebra.delta_length + sum(algebra.letter_length(a) for a in nf.factors)


def normal_forms_of_length(
    n: int, presentation: Presentation, k: int, u: int = 0, cap: Optional[int] = None
) -> Iterator[NormalForm]:
    """All normal forms D^u A_1···A_k with exactly k factors

    Yields:
        NormalForm: in lexicographic order of the factor sequence.
    """
    algebra = get_algebra(n, presentation)
    proper = [
        a for a in algebra.enumerate(cap) if not (algebra.is_identity(a) or algebra.is_delta(a))
    ]

    def extend(chain):
        if len(chain) == k:
            yield NormalForm(n, algebra.presentation, u, tuple(chain))
            return
        for a in proper:
            if chain and algebra.left_meet_head(chain[-1], a) != (chain[-1], a):
                continue
            yield from extend(chain + [a])

    yield from extend([])


def to_text(nf: NormalForm) -> str:
    """`D^u | F1 | ... | Fk`, just `D^u` when there are no factors"""
    algebra = nf.algebra
    return " | ".join(itertools.chain([f"D^{nf.u}"], (algebra.format(a) for a in nf.factors)))


def to_json(nf: NormalForm) -> dict:
    algebra = nf.algebra
    return {
        "n": nf.n,
        "presentation": nf.presentation.value,
        "u": nf.u,
        "factors": [algebra.format(a) for a in nf.factors],
    }

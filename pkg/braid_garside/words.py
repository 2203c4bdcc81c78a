"""
Braid words in the Artin ("old") and band-generator ("new") presentations.

A word is a plain sequence of signed generator letters over a fixed braid index `n`.
Words are what the user types and what the package prints; every algebraic question
about the element a word represents goes through `braid_garside.normalform`.

Token grammar (whitespace separated):

- old: `i` or `-i` with `1 <= i <= n-1`, meaning σ_i or σ_i⁻¹
- new: `t.s` or `-t.s` with `n >= t > s >= 1`, meaning a_ts or a_ts⁻¹, and the shorthand
  `[t:s]` for the descending cycle a_{t(t-1)}···a_{(s+1)s} (`-[t:s]` is its inverse)
"""
import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, List, Tuple


class WordSyntaxError(ValueError):
    """A token does not match the grammar of the presentation"""


class IndexOutOfRange(ValueError):
    """A letter does not exist in B_n"""


class PresentationMismatch(ValueError):
    """Two words live in different braid groups or presentations"""


class Presentation(str, enum.Enum):
    OLD = "old"
    NEW = "new"

    @property
    def other(self) -> "Presentation":
        return Presentation.NEW if self is Presentation.OLD else Presentation.OLD


@dataclass(frozen=True)
class Letter:
    """A generator raised to ±1.

    `gen` is `(i,)` for σ_i and `(t, s)` for a_ts.
    """

    gen: Tuple[int, ...]
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {self.sign}")

    def inverse(self) -> "Letter":
        return Letter(self.gen, -self.sign)

    @property
    def token(self) -> str:
        body = ".".join(str(i) for i in self.gen)
        return body if self.sign > 0 else "-" + body


@dataclass(frozen=True)
class BraidWord:
    n: int
    presentation: Presentation
    letters: Tuple[Letter, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.n < 2:
            raise IndexOutOfRange(f"braid index must be at least 2, got {self.n}")
        object.__setattr__(self, "presentation", Presentation(self.presentation))
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            _check_letter(letter, self.n, self.presentation)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return serialize(self)


def _check_letter(letter: Letter, n: int, presentation: Presentation):
    if presentation is Presentation.OLD:
        if len(letter.gen) != 1:
            raise WordSyntaxError(f"old presentation letters take one index, got {letter.gen}")
        (i,) = letter.gen
        if not 1 <= i <= n - 1:
            raise IndexOutOfRange(f"sigma_{i} does not exist in B_{n}")
    else:
        if len(letter.gen) != 2:
            raise WordSyntaxError(f"band generators take two indices, got {letter.gen}")
        t, s = letter.gen
        if not n >= t > s >= 1:
            raise IndexOutOfRange(f"a_{t}{s} does not exist in B_{n} (need n >= t > s >= 1)")


_OLD_TOKEN = re.compile(r"^(-?)(\d+)$")
_NEW_TOKEN = re.compile(r"^(-?)(\d+)\.(\d+)$")
_CYCLE_TOKEN = re.compile(r"^(-?)\[(\d+):(\d+)\]$")


def descending_cycle(t: int, s: int) -> List[Tuple[int, int]]:
    """Band generators of the shorthand [t:s], i.e. a_{t(t-1)} ... a_{(s+1)s}"""
    return [(j, j - 1) for j in range(t, s, -1)]


_TOKENS = re.compile(r"-?\[[^\]]*\]|[^\s\[\]]+|\S")


def _tokenize(text: str) -> List[str]:
    # brackets may be glued together, as in "[2:1][5:3]"
    return _TOKENS.findall(text)


def parse(text: str, n: int, presentation: Presentation) -> BraidWord:
    """Parses whitespace separated tokens into a word

    Args:
        text (str): token text, e.g. `"1 -2 1"` or `"2.1 [5:3]"`.
        n (int): braid index.
        presentation (Presentation): `old` or `new`.

    Raises:
        WordSyntaxError: if a token does not match the grammar.
        IndexOutOfRange: if a letter does not exist in B_n.

    Returns:
        BraidWord
    """
    presentation = Presentation(presentation)
    if n < 2:
        raise IndexOutOfRange(f"braid index must be at least 2, got {n}")
    letters = []
    for token in _tokenize(text):
        if presentation is Presentation.OLD:
            match = _OLD_TOKEN.match(token)
            if match is None:
                raise WordSyntaxError(f"bad token {token!r} for the old presentation")
            sign = -1 if match.group(1) else 1
            letters.append(Letter((int(match.group(2)),), sign))
            continue

        match = _NEW_TOKEN.match(token)
        if match is not None:
            sign = -1 if match.group(1) else 1
            letters.append(Letter((int(match.group(2)), int(match.group(3))), sign))
            continue
        match = _CYCLE_TOKEN.match(token)
        if match is None:
            raise WordSyntaxError(f"bad token {token!r} for the new presentation")
        t, s = int(match.group(2)), int(match.group(3))
        if not n >= t > s >= 1:
            raise IndexOutOfRange(f"[{t}:{s}] does not exist in B_{n}")
        cycle = [Letter(gen) for gen in descending_cycle(t, s)]
        if match.group(1):
            cycle = [letter.inverse() for letter in reversed(cycle)]
        letters.extend(cycle)

    return BraidWord(n, presentation, tuple(letters))


def serialize(w: BraidWord) -> str:
    """Canonical token text, single spaces, explicit `t.s` tokens"""
    return " ".join(letter.token for letter in w.letters)


def from_letters(n: int, presentation: Presentation, letters: Iterable[Letter]) -> BraidWord:
    return BraidWord(n, Presentation(presentation), tuple(letters))


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, w.presentation, tuple(l.inverse() for l in reversed(w.letters)))


def concat(v: BraidWord, w: BraidWord) -> BraidWord:
    if v.n != w.n or v.presentation is not w.presentation:
        raise PresentationMismatch(
            f"cannot concatenate a word of B_{v.n} ({v.presentation.value}) "
            f"with a word of B_{w.n} ({w.presentation.value})"
        )
    return BraidWord(v.n, v.presentation, v.letters + w.letters)


def power(w: BraidWord, exponent: int) -> BraidWord:
    base = w if exponent >= 0 else inverse(w)
    return BraidWord(w.n, w.presentation, base.letters * abs(exponent))


def exponent_sum(w: BraidWord) -> int:
    return sum(letter.sign for letter in w.letters)


def delta_word(n: int, presentation: Presentation) -> BraidWord:
    """Positive word of the fundamental braid

    Δ = (σ_1···σ_{n-1})(σ_1···σ_{n-2})···(σ_1σ_2)σ_1 in the old presentation,
    δ = a_{n(n-1)}···a_{21} in the new one.
    """
    presentation = Presentation(presentation)
    if presentation is Presentation.OLD:
        gens = [(i,) for top in range(n - 1, 0, -1) for i in range(1, top + 1)]
    else:
        gens = descending_cycle(n, 1)
    return BraidWord(n, presentation, tuple(Letter(gen) for gen in gens))


def _band_to_artin(letter: Letter) -> List[Letter]:
    # a_ts = (σ_{t-1}···σ_{s+1}) σ_s (σ_{s+1}⁻¹···σ_{t-1}⁻¹)
    t, s = letter.gen
    left = [Letter((i,)) for i in range(t - 1, s, -1)]
    right = [Letter((i,), -1) for i in range(s + 1, t)]
    return left + [Letter((s,), letter.sign)] + right


def convert(w: BraidWord, target: Presentation) -> BraidWord:
    """Rewrites a word in the other presentation

    σ_i becomes a_{(i+1)i}; a_ts becomes its conjugate form in the Artin generators.
    The result represents the same element of B_n.
    """
    target = Presentation(target)
    if target is w.presentation:
        return w
    if target is Presentation.NEW:
        letters = [Letter((l.gen[0] + 1, l.gen[0]), l.sign) for l in w.letters]
    else:
        letters = [x for l in w.letters for x in _band_to_artin(l)]
    return BraidWord(w.n, target, tuple(letters))

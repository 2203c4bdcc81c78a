"""
Worked-example braids whose infimum needs many cyclings to go up.

- `golden_word`: a₂₁a₅₄a₄₃a₃₂ in B₅ (band generators), cycled three times into δ.
- `new_family(n)`: [2:1][n:2] in B_n needs n-2 = |δ|-1 cyclings, so the bound is sharp.
- `old_family_b(k)`, `old_family_c(k)`: two-factor permutation braids in B_{2k+1} needing
  2k and 4k-5 cyclings.
- `SHARP_BOUNDS`: braid groups where the first increase comes sooner than |D|-1 cyclings,
  checked exhaustively on short positive normal forms.
"""
import logging
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from ..conjugacy import cycle, cycling_bound, cycling_profile
from ..factors import get_algebra
from ..factors.old import PermFactor
from ..normalform import (
    NormalForm,
    normal_forms_of_length,
    normalize,
    normalize_factors,
    to_text,
    to_word,
)
from ..stores import BoundCheckResult, ReproduceResult
from ..words import Presentation, parse, serialize

log = logging.getLogger(__name__)

GOLDEN_WORD = "2.1 5.4 4.3 3.2"

# name, n, presentation, longest canonical length checked, cycling bound
SHARP_BOUNDS = (
    ("b3-bound", 3, Presentation.OLD, 4, 1),
    ("b4-bound", 4, Presentation.OLD, 3, 2),
)

GOLDEN_CHAIN = (
    "D^0 | [2:1][5:3] | [3:2]",
    "D^0 | [3:1][5:4] | [4:3]",
    "D^0 | [4:1] | [5:4]",
    "D^1",
)


@dataclass(frozen=True)
class ReproduceCase:
    family: str
    nf: NormalForm
    expected_cyclings: int


def golden_word():
    return parse(GOLDEN_WORD, 5, Presentation.NEW)


def new_family(n: int) -> NormalForm:
    """[2:1][n:2] in B_n, n >= 3"""
    if n < 3:
        raise ValueError(f"the family starts at n = 3, got {n}")
    return normalize(parse(f"[2:1] [{n}:2]", n, Presentation.NEW))


def old_family_b(k: int) -> NormalForm:
    """(2k+1, 2k, ..., 3, 1, 2)(1, ..., k, k+2, ..., 2k+1, k+1) in B_{2k+1}"""
    n = 2 * k + 1
    first = tuple(range(n, 2, -1)) + (1, 2)
    second = tuple(range(1, k + 1)) + tuple(range(k + 2, n + 1)) + (k + 1,)
    factors = [PermFactor(n, first), PermFactor(n, second)]
    return normalize_factors(n, Presentation.OLD, 0, factors)


def old_family_c(k: int) -> NormalForm:
    """(2k+1, ..., k+3, k+1, k+2, k, ..., 1)(3, ..., k+1, 1, k+2, ..., 2k, 2, 2k+1) in B_{2k+1}

    Degenerate for k = 2, where the product is Δ times a single factor.
    """
    n = 2 * k + 1
    first = tuple(range(n, k + 2, -1)) + (k + 1, k + 2) + tuple(range(k, 0, -1))
    second = tuple(range(3, k + 2)) + (1,) + tuple(range(k + 2, 2 * k + 1)) + (2, n)
    factors = [PermFactor(n, first), PermFactor(n, second)]
    return normalize_factors(n, Presentation.OLD, 0, factors)


def golden_chain() -> Tuple[NormalForm, ...]:
    """The normal form of the golden word and its first three cyclings"""
    chain = [normalize(golden_word())]
    for _ in range(3):
        chain.append(cycle(chain[-1]))
    return tuple(chain)


def generate_cases() -> Iterator[ReproduceCase]:
    """Yields every worked example with the number of cyclings its infimum needs"""
    yield ReproduceCase("golden", normalize(golden_word()), 3)
    for n in range(3, 11):
        yield ReproduceCase("new", new_family(n), n - 2)
    for k in range(2, 5):
        yield ReproduceCase("old-b", old_family_b(k), 2 * k)
    for k in range(3, 5):
        yield ReproduceCase("old-c", old_family_c(k), 4 * k - 5)


def first_increase(nf: NormalForm, horizon: Optional[int] = None) -> Optional[int]:
    """Number of cyclings until the infimum first goes up, `None` if it does not

    Args:
        nf (NormalForm): starting normal form.
        horizon (int, optional): how many cyclings to try. Defaults to |D|-1.
    """
    if horizon is None:
        return next((step for step, inf in cycling_profile(nf) if inf > nf.inf), None)
    current = nf
    for step in range(1, horizon + 1):
        current = cycle(current)
        if current.inf > nf.inf:
            return step
    return None


def run_case(case: ReproduceCase) -> ReproduceResult:
    observed = first_increase(case.nf)
    passed = observed == case.expected_cyclings
    if not passed:
        log.warning(
            f"{case.family} B_{case.nf.n}: expected {case.expected_cyclings} cyclings, "
            f"observed {observed}"
        )
    return {
        "family": case.family,
        "presentation": case.nf.presentation.value,
        "n": case.nf.n,
        "word": serialize(to_word(case.nf)),
        "expected_cyclings": case.expected_cyclings,
        "observed_cyclings": observed,
        "passed": passed,
    }


def bound_violation(nf: NormalForm, horizon_factor: int = 3) -> Optional[int]:
    """Checks that the first infimum increase needs at most |D|-1 cyclings

    Cycles well past the bound; returns the offending step count when the first increase
    comes later than |D|-1 cyclings, else `None`.
    """
    bound = cycling_bound(nf)
    step = first_increase(nf, horizon=horizon_factor * (bound + 1))
    if step is not None and step > bound:
        return step
    return None


def exhaustive_bound_check(
    name: str,
    n: int,
    presentation: Presentation,
    max_length: int,
    bound: int,
    horizon_factor: int = 3,
) -> BoundCheckResult:
    """Checks a cycling bound sharper than |D|-1 on every positive normal form D^0 A_1···A_k
    with 1 <= k <= max_length

    Args:
        name (str): label of the check.
        n (int): braid index.
        presentation (Presentation): `old` or `new`.
        max_length (int): longest canonical length enumerated.
        bound (int): claimed number of cyclings within which the infimum goes up, if ever.
        horizon_factor (int, optional): cycles up to `horizon_factor` times |D|. Defaults to 3.

    Returns:
        BoundCheckResult: `worst` is the latest first increase seen. The check passes when
        no increase comes later than `bound` and some increase comes exactly at `bound`.
    """
    presentation = Presentation(presentation)
    horizon = horizon_factor * get_algebra(n, presentation).delta_length
    checked = worst = violations = 0
    for k in range(1, max_length + 1):
        for nf in normal_forms_of_length(n, presentation, k):
            checked += 1
            step = first_increase(nf, horizon=horizon)
            if step is None:
                continue
            worst = max(worst, step)
            if step > bound:
                violations += 1
                log.warning(f"{name}: inf of {to_text(nf)} first goes up after {step} cyclings")
    return {
        "name": name,
        "presentation": presentation.value,
        "n": n,
        "max_length": max_length,
        "bound": bound,
        "checked": checked,
        "worst": worst,
        "violations": violations,
        "passed": violations == 0 and worst == bound,
    }


def generate_bound_checks() -> Iterator[BoundCheckResult]:
    for name, n, presentation, max_length, bound in SHARP_BOUNDS:
        yield exhaustive_bound_check(name, n, presentation, max_length, bound)

"""
Cycling, decycling and super summit sets.

The infimum and supremum of a single normal form depend on the chosen conjugate. Iterated
cycling raises the infimum to its maximum over the conjugacy class, iterated decycling lowers
the supremum to its minimum, and if |D|-1 consecutive cyclings (decyclings) bring no change,
the extremal value has been reached. The conjugates realizing both extremes form the super
summit set, a finite set that is closed under conjugation by canonical factors and thus
decides the conjugacy problem.
"""
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, List, Optional, Tuple

from .normalform import (
    NormalForm,
    check_compatible,
    exponent_sum,
    normalize,
    normalize_factors,
    to_text,
)
from .stores import InvariantReport
from .stores.sss_async import DEFAULT_SSS_CAP, close_super_summit_set
from .words import BraidWord, serialize

log = logging.getLogger(__name__)


class SSSCapExceeded(RuntimeError):
    """The super summit set has more members than allowed"""

    def __init__(self, message: str, partial_count: int):
        super().__init__(message)
        self.partial_count = partial_count


class SSSClosureError(RuntimeError):
    """Conjugating some super summit set members failed, so the set is incomplete"""

    def __init__(self, message: str, partial_count: int, failed: int):
        super().__init__(message)
        self.partial_count = partial_count
        self.failed = failed


@dataclass(frozen=True)
class SuperSummitSet:
    inf_max: int
    sup_min: int
    members: Tuple[NormalForm, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[NormalForm]:
        return iter(self.members)

    def __contains__(self, nf) -> bool:
        return nf in self.members


@dataclass(frozen=True)
class ClassInvariants:
    n: int
    presentation: str
    inf_max: int
    sup_min: int
    exponent_sum: int
    geodesic_length: int
    sss_size: int
    orbit_sizes: Tuple[int, ...]


def cycle(nf: NormalForm) -> NormalForm:
    """c(D^u A_1···A_k) = D^u A_2···A_k τ^-u(A_1), renormalized; identity when k = 0"""
    if not nf.factors:
        return nf
    algebra = nf.algebra
    moved = list(nf.factors[1:]) + [algebra.tau(nf.factors[0], -nf.u)]
    return normalize_factors(nf.n, nf.presentation, nf.u, moved)


def decycle(nf: NormalForm) -> NormalForm:
    """d(D^u A_1···A_k) = D^u τ^u(A_k) A_1···A_{k-1}, renormalized; identity when k = 0"""
    if not nf.factors:
        return nf
    algebra = nf.algebra
    moved = [algebra.tau(nf.factors[-1], nf.u)] + list(nf.factors[:-1])
    return normalize_factors(nf.n, nf.presentation, nf.u, moved)


def cycling_bound(nf: NormalForm) -> int:
    """|D| - 1: consecutive cyclings without an increase that certify a maximal inf"""
    return nf.algebra.delta_length - 1


def maximize_inf(nf: NormalForm) -> NormalForm:
    """Conjugate of nf with maximal infimum in its conjugacy class

    Cycles until |D|-1 consecutive cyclings leave the infimum unchanged; the counter starts
    over after every increase.

    Returns:
        NormalForm: the cycled conjugate at the last increase, `nf` itself if there was none.
    """
    bound = cycling_bound(nf)
    best = current = nf
    steps = 0
    while steps < bound and current.factors:
        current = cycle(current)
        steps += 1
        if current.inf > best.inf:
            log.debug(f"inf raised to {current.inf} after {steps} cyclings")
            best = current
            steps = 0
    return best


def minimize_sup(nf: NormalForm) -> NormalForm:
    """Conjugate of nf with minimal supremum, by the decycling loop of `maximize_inf`"""
    bound = cycling_bound(nf)
    best = current = nf
    steps = 0
    while steps < bound and current.factors:
        current = decycle(current)
        steps += 1
        if current.sup < best.sup:
            log.debug(f"sup lowered to {current.sup} after {steps} decyclings")
            best = current
            steps = 0
    return best


def sss_representative(nf: NormalForm) -> NormalForm:
    """A member of the super summit set of nf"""
    current = nf
    while True:
        extremal = minimize_sup(maximize_inf(current))
        if extremal == current:
            return current
        current = extremal


def sss_enumerate(
    nf: NormalForm,
    cap: int = DEFAULT_SSS_CAP,
    factor_cap: Optional[int] = None,
    nb_workers: int = 8,
    batch_size: int = 16,
    loglevel: str = "WARNING",
    error_log_path: Optional[Path] = None,
) -> SuperSummitSet:
    """The full super summit set of the conjugacy class of nf

    Args:
        nf (NormalForm): any element of the class.
        cap (int, optional): Maximum number of members. Defaults to 100000.
        factor_cap (int, optional): Largest braid index whose canonical factors may be
            enumerated. Defaults to the presentation's own cap.
        nb_workers (int, optional): Closure workers. Defaults to 8.
        batch_size (int, optional): Closure queue batch size. Defaults to 16.
        loglevel (str, optional): Level of the `sss_closure` logger. Defaults to `WARNING`.
        error_log_path (Path, optional): Writes closure errors to file. Defaults to None.

    Raises:
        SSSCapExceeded: if the set has more than `cap` members.
        SSSClosureError: if conjugating a member failed; the set would be incomplete.
        EnumerationCapExceeded: if the canonical factors of B_n are too many to enumerate.

    Returns:
        SuperSummitSet
    """
    start = sss_representative(nf)
    members, stats = close_super_summit_set(
        start,
        inf_max=start.inf,
        sup_min=start.sup,
        cap=cap,
        factor_cap=factor_cap,
        nb_workers=nb_workers,
        batch_size=batch_size,
        loglevel=loglevel,
        error_log_path=error_log_path,
    )
    if stats["capped"]:
        raise SSSCapExceeded(
            f"super summit set of {to_text(start)} has more than {cap} members",
            partial_count=len(members),
        )
    if stats["failed"]:
        raise SSSClosureError(
            f"closing the super summit set of {to_text(start)} failed for "
            f"{stats['failed']} members",
            partial_count=len(members),
            failed=stats["failed"],
        )
    return SuperSummitSet(start.inf, start.sup, tuple(members))


def are_conjugate(v: BraidWord, w: BraidWord, cap: int = DEFAULT_SSS_CAP) -> bool:
    """Conjugacy problem for two words of the same group and presentation

    Raises:
        PresentationMismatch: if the words live in different groups or presentations.
        SSSCapExceeded: if the super summit set is too large.
        SSSClosureError: if the super summit set closure failed.
    """
    check_compatible(v, w)
    nv, nw = normalize(v), normalize(w)
    if exponent_sum(nv) != exponent_sum(nw):
        return False
    rv, rw = sss_representative(nv), sss_representative(nw)
    if (rv.inf, rv.sup) != (rw.inf, rw.sup):
        return False
    if rv == rw:
        return True
    return rv in sss_enumerate(rw, cap=cap)


def _geodesic(u: int, k: int) -> int:
    return max(k + u, -u, k)


def geodesic_length(nf: NormalForm) -> int:
    """Length of nf as a shortest product of factors from Q and their inverses"""
    return _geodesic(nf.u, nf.k)


def geodesic_length_class(nf: NormalForm) -> int:
    """max(k+u, -u, k) with u = inf_max and k = sup_min - inf_max of the conjugacy class"""
    return geodesic_length(sss_representative(nf))


def cycling_profile(nf: NormalForm) -> List[Tuple[int, int]]:
    """(step, inf) after each cycling, up to the first increase or |D|-1 steps"""
    profile = []
    current = nf
    if not nf.factors:
        return profile
    for step in range(1, cycling_bound(nf) + 1):
        current = cycle(current)
        profile.append((step, current.inf))
        if current.inf > nf.inf:
            break
    return profile


def decycling_profile(nf: NormalForm) -> List[Tuple[int, int]]:
    """(step, sup) after each decycling, up to the first decrease or |D|-1 steps"""
    profile = []
    current = nf
    if not nf.factors:
        return profile
    for step in range(1, cycling_bound(nf) + 1):
        current = decycle(current)
        profile.append((step, current.sup))
        if current.sup < nf.sup:
            break
    return profile


def sss_orbits(sss: SuperSummitSet) -> List[int]:
    """Sizes of the orbits of the super summit set under cycling and decycling

    Orbits are the connected components of the graph with edges X -> c(X) and X -> d(X).
    """
    members = list(sss.members)
    index = {nf: i for i, nf in enumerate(members)}
    parent = list(range(len(members)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, nf in enumerate(members):
        for image in (cycle(nf), decycle(nf)):
            j = index.get(image)
            if j is None:
                log.warning(f"{to_text(image)} left the super summit set")
                continue
            parent[find(i)] = find(j)

    sizes = {}
    for i in range(len(members)):
        root = find(i)
        sizes[root] = sizes.get(root, 0) + 1
    return sorted(sizes.values())


def length_counts(nf: NormalForm) -> Tuple[int, ...]:
    """(k_1, ..., k_{|D|-1}): how many factors have letter length 1, ..., |D|-1"""
    algebra = nf.algebra
    counts = [0] * cycling_bound(nf)
    for a in nf.factors:
        counts[algebra.letter_length(a) - 1] += 1
    return tuple(counts)


def class_invariants(nf: NormalForm, cap: int = DEFAULT_SSS_CAP, **kwargs) -> ClassInvariants:
    """All class invariants of the conjugacy class of nf

    Args:
        nf (NormalForm): any element of the class.
        cap (int, optional): super summit set cap. Defaults to 100000.
        **kwargs: passed on to `sss_enumerate`.

    Returns:
        ClassInvariants
    """
    sss = sss_enumerate(nf, cap=cap, **kwargs)
    return ClassInvariants(
        n=nf.n,
        presentation=nf.presentation.value,
        inf_max=sss.inf_max,
        sup_min=sss.sup_min,
        exponent_sum=exponent_sum(nf),
        geodesic_length=_geodesic(sss.inf_max, sss.sup_min - sss.inf_max),
        sss_size=len(sss),
        orbit_sizes=tuple(sss_orbits(sss)),
    )


def to_report(inv: ClassInvariants, word: Optional[BraidWord] = None) -> InvariantReport:
    return {
        "n": inv.n,
        "presentation": inv.presentation,
        "word": None if word is None else serialize(word),
        "inf": inv.inf_max,
        "sup": inv.sup_min,
        "exponent_sum": inv.exponent_sum,
        "geodesic_length": inv.geodesic_length,
        "sss_size": inv.sss_size,
        "orbit_sizes": list(inv.orbit_sizes),
    }

"""
Report records and the super summit set closure.
"""
from typing import List, Optional, TypedDict


class InvariantReport(TypedDict):
    """Conjugacy class invariants as emitted by `braid-garside inv --json`"""

    n: int
    presentation: str
    word: Optional[str]
    inf: int
    sup: int
    exponent_sum: int
    geodesic_length: int
    sss_size: int
    orbit_sizes: List[int]


class ReproduceResult(TypedDict):
    """One case of the worked-example reproduction"""

    family: str
    presentation: str
    n: int
    word: str
    expected_cyclings: int
    observed_cyclings: Optional[int]
    passed: bool


class BoundCheckResult(TypedDict):
    """An exhaustive check of a cycling bound over short positive normal forms"""

    name: str
    presentation: str
    n: int
    max_length: int
    bound: int
    checked: int
    worst: int
    violations: int
    passed: bool

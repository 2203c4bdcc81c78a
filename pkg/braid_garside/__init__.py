"""
__braid-garside__ computes Garside normal forms of braids and the conjugacy invariants built
on them.

Braids are entered as words in either the Artin generators σ_i ("old" presentation) or the
band generators a_ts ("new" presentation). Every word has a unique left-greedy normal form
D^u A_1···A_k, which solves the word problem. Cycling and decycling move a braid inside its
conjugacy class until its infimum u and supremum u+k are extremal; the conjugates where both
extremes are reached form the super summit set, which decides the conjugacy problem and yields
class invariants such as the geodesic length.

This is the python package API documentation.
"""

from . import conjugacy, normalform, words
from .factors import get_algebra
from .generators import families, random_words
from .stores import BoundCheckResult, InvariantReport, ReproduceResult, export, sss_async

"""Exact Schur expansions of chromatic symmetric functions.

Coefficients are computed three independent ways (signed rim hook tabloid
sums, grouped tabloid/stable-partition sums, and Kostka inversion of the
monomial expansion), and the package ships batch suites that verify the
recurrences and positivity statements these coefficients satisfy.
"""

from .coeffvec import MONOMIAL, SCHUR, CoefficientVector
from .coefficients import (
    GROUPED,
    METHODS,
    ORACLE,
    TABLOID,
    chromatic_monomial_expansion,
    f_coefficient,
    is_schur_positive,
    schur_coefficient,
    schur_expansion,
    xi,
)
from .graphs import (
    PENDANT_FIRST,
    PENDANT_LAST,
    LabeledGraph,
    complete_graph,
    generalized_net,
    generalized_spider,
    is_claw_free,
    count_semi_ordered_stable_partitions,
    path_graph,
    star_graph,
    with_disjoint_path,
)
from .partitions import (
    UNDEFINED,
    partitions_of,
    sort_to_partition,
    strip_trailing_ones,
)
from .tableaux import kostka_number, monomial_to_schur, schur_to_monomial
from .tabloids import (
    RimHook,
    SrhGTabloid,
    SrhTabloid,
    split_head_tail,
    srh_g_tabloids,
    srh_tabloids,
    tabloids_with_bottom_vertex,
)

__version__ = "0.1.0"

__all__ = [
    "CoefficientVector",
    "GROUPED",
    "LabeledGraph",
    "METHODS",
    "MONOMIAL",
    "ORACLE",
    "PENDANT_FIRST",
    "PENDANT_LAST",
    "RimHook",
    "SCHUR",
    "SrhGTabloid",
    "SrhTabloid",
    "TABLOID",
    "UNDEFINED",
    "chromatic_monomial_expansion",
    "complete_graph",
    "count_semi_ordered_stable_partitions",
    "f_coefficient",
    "generalized_net",
    "generalized_spider",
    "is_claw_free",
    "is_schur_positive",
    "kostka_number",
    "monomial_to_schur",
    "partitions_of",
    "path_graph",
    "schur_coefficient",
    "schur_expansion",
    "schur_to_monomial",
    "sort_to_partition",
    "split_head_tail",
    "srh_g_tabloids",
    "srh_tabloids",
    "star_graph",
    "strip_trailing_ones",
    "tabloids_with_bottom_vertex",
    "with_disjoint_path",
    "xi",
]

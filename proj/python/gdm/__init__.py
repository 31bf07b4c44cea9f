"""Group distance magic labelings of graphs, C++ core with python bindings.

The heavy lifting lives in the compiled module; this package re-exports it.
"""

from ._gdm import (  # noqa: F401
    AbelianGroup,
    ClassicSearchReport,
    ClassicVerdict,
    ConstructionOutcome,
    GdmArgumentError,
    Graph,
    GroupSearchReport,
    GroupVerdict,
    InternalCheckError,
    PairSumSystem,
    PreconditionError,
    ScanResult,
    WindmillCertificate,
    add,
    blanket_degree_class,
    circulant,
    complete,
    complete_bipartite,
    cycle,
    degree_class,
    dutch_windmill,
    empty_graph,
    enumerate_elements,
    enumerate_groups,
    eulerian_odd_all_groups,
    label_c4_any_group,
    label_c4_cyclic_two_part,
    label_c4_klein,
    label_composition,
    label_kpq_c4,
    lexicographic_product,
    neg,
    no_group_exists,
    parse_group,
    random_graph,
    reduce_c4_product,
    scalar_mul,
    scan_kmn_c4,
    search_classic_dm,
    search_group_dm,
    solve_pair_sum,
    sum_all,
    verify_classic,
    verify_group,
    weight_group,
    windmill_certificate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

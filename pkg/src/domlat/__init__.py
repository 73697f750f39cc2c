"""Dominance-order partition lattices, their irreducible elements and
standard formal contexts."""

from .partitions import (
    ColumnOneShape,
    Partition,
    ShapeKind,
    Sons,
    Transition,
    classify_at_column_one,
    conjugate,
    covers,
    direct_reachable,
    dominance_leq,
    down_arrow,
    father,
    format_partition,
    height_difference,
    make_partition,
    parse_partition,
    prefix_sums,
    sons,
)
from .lattice import (
    HasseDiagram,
    build_hasse,
    enumerate_partitions,
    find_pentagon,
    is_chain,
    is_distributive,
    join,
    meet,
    to_dot,
)
from .irreducibles import (
    IrreducibleLayer,
    IrreducibleType,
    LayerOverlapError,
    classify_irreducible,
    count_closed,
    count_recursive,
    exceptional_sets,
    irreducible_son,
    join_irreducibles,
    meet_irreducibles,
    next_layer,
)
from .fca import (
    Concept,
    FormalContext,
    concept_lattice_isomorphic,
    concept_leq,
    concept_lines,
    derive_down,
    derive_up,
    enumerate_concepts,
    export_csv,
    export_cxt,
    import_cxt,
    standard_context,
)
from .oracles import (
    PartitionCountTable,
    brute_join_irreducibles,
    brute_meet,
    partition_count,
    partition_count_table,
)

__all__ = [
    "ColumnOneShape",
    "Concept",
    "FormalContext",
    "HasseDiagram",
    "IrreducibleLayer",
    "IrreducibleType",
    "LayerOverlapError",
    "Partition",
    "PartitionCountTable",
    "ShapeKind",
    "Sons",
    "Transition",
    "brute_join_irreducibles",
    "brute_meet",
    "build_hasse",
    "classify_at_column_one",
    "classify_irreducible",
    "concept_lattice_isomorphic",
    "concept_leq",
    "concept_lines",
    "conjugate",
    "count_closed",
    "count_recursive",
    "covers",
    "derive_down",
    "derive_up",
    "direct_reachable",
    "dominance_leq",
    "down_arrow",
    "enumerate_concepts",
    "enumerate_partitions",
    "exceptional_sets",
    "export_csv",
    "export_cxt",
    "father",
    "find_pentagon",
    "format_partition",
    "height_difference",
    "import_cxt",
    "irreducible_son",
    "is_chain",
    "is_distributive",
    "join",
    "join_irreducibles",
    "make_partition",
    "meet",
    "meet_irreducibles",
    "next_layer",
    "parse_partition",
    "partition_count",
    "partition_count_table",
    "prefix_sums",
    "sons",
    "standard_context",
    "to_dot",
]

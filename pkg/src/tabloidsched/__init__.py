"""Young tableaux and tabloids for n-task-n-processor assignments.

The package is split by concern:

``tableau``      partitions, permutations, tableaux, tabloids and the S_n action
``assignment``   assignment tableaux, standard assignment tabloids, term encoding
``schedule``     task graphs, processor systems, schedule evaluation and search
``vectorspace``  k-assignments vectors, characters, functionals, dual transforms
``retrieval``    tf-idf weighting and cosine ranking of assignment documents
``cli``          the ``tabloidsched`` command
"""

from .assignment import (
    AssignmentTableau,
    GeneralizedAssignmentTableau,
    ProcessorTableau,
    StandardAssignmentTabloid,
    TaskTableau,
    assignment_set,
    assignments_in_tabloid,
    canonical_assignment_tabloid,
    decode,
    encode,
    enumerate_standard_tabloids,
    make_assignment_tableau,
    make_generalized,
    to_standard,
)
from .errors import (
    CapacityError,
    CycleError,
    InvalidArgumentError,
    InvalidFillingError,
    ParseError,
    RowRateError,
    ShapeError,
    SingularMatrixError,
    TabloidError,
    ZeroVectorError,
)
from .retrieval import (
    Corpus,
    RankedResult,
    WeightVector,
    average_turnaround,
    cosine_similarity,
    idf,
    parse_corpus,
    parse_query,
    rank,
    tfidf_weights,
)
from .schedule import (
    ProcessorSystem,
    Schedule,
    TaskGraph,
    communication_cost,
    computation_cost,
    evaluate,
    k_copies_totals,
    optimize,
    parse_processors,
    parse_task_graph,
)
from .tableau import (
    Partition,
    Permutation,
    Tableau,
    Tabloid,
    act_on_tableau,
    act_on_tabloid,
    canonicalize,
    compose,
    cycle_type,
    enumerate_tabloids,
    inverse,
    parse_permutation,
    partitions_of,
    row_equivalent,
    sign,
    young_subgroup_order,
)
from .vectorspace import (
    CharacterTable,
    Functional,
    KVector,
    act,
    apply_matrix,
    basis_keys,
    character,
    character_table,
    dimension,
    dual_transform,
    inner_product,
    pair,
    parse_functional,
    parse_vector,
    turnaround_functional,
)

__version__ = "0.1.0"

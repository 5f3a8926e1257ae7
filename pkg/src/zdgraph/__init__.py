"""Zero-divisor graphs of finite commutative semigroups with zero."""
from .analysis import (
    CliqueCertificate,
    ComplementationVerdict,
    IsomorphismResult,
    ReducedGraph,
    clique_number,
    complementation_verdict,
    graph_of_power_set,
    isomorphic,
    orthogonal,
    orthogonal_partners,
    reduce,
)
from .caps import Caps
from .errors import (
    MalformedTable,
    NoVertices,
    NotAssociative,
    NotCommutative,
    ParseError,
    SameVertex,
    SizeLimitExceeded,
    UnknownVertex,
    ValidationError,
    ZDGError,
    ZeroNotAbsorbing,
)
from .graph import (
    Graph,
    Neighborhood,
    ZeroDivisorGraph,
    build_graph,
    neighborhood,
    to_dot,
    to_json,
    zero_divisor_vertices,
)
from .paper_check import PaperVerification, counterexample, verify_paper
from .semigroup import (
    ElementRef,
    Semigroup,
    direct_product,
    load,
    null_semigroup,
    parse_semigroup,
    power_set_semigroup,
    save,
    serialize,
    validate,
    zn_multiplicative,
)
from .verifier import (
    AnalysisReport,
    Conjecture,
    ConjectureCheck,
    ConjectureWitness,
    analyze,
    check_conjecture_1,
    check_conjecture_2,
    replay,
    search,
)

__version__ = "0.1.0"

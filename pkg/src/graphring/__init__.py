"""graphring: exact arithmetic in the ring of finite simple graphs.

The join of graphs acts as addition and the Zykov product as
multiplication; the clique number is additive and multiplicative over
these, which yields a Grothendieck group of signed graphs, a norm, and a
ring of graph fractions with exact rational norms.
"""

from .canonical import canonical_graph, canonical_key, is_isomorphic
from .errors import (
    CliqueZeroDivisionError,
    ExprSyntaxError,
    ExprTypeError,
    FormatError,
    GraphRingError,
    InputError,
    ResourceBudgetError,
)
from .exprlang import eval_text, evaluate, parse, to_expression
from .graphs import (
    Graph,
    complement,
    complete,
    connected_components,
    cycle,
    disjoint_union,
    edgeless,
    erdos_renyi,
    from_edges,
    induced_subgraph,
    is_connected,
    join,
    join_all,
    join_factors,
    normalize,
    octahedron,
    path,
    permute,
    sphere0,
    strong_product,
    unit_sphere,
    wheel,
    zero_graph,
    zykov_product,
)
from .invariants import (
    DEFAULT_CLIQUE_BUDGET,
    Polynomial,
    RationalFunction,
    clique_number,
    ds_member,
    euler_characteristic,
    f_function,
    f_vector,
    genus,
)
from .primes import (
    MAX_CATALOG_ORDER,
    MultiplicativeVerdict,
    all_graphs_up_to,
    graphs_of_order,
    is_additive_prime,
    is_multiplicative_prime,
    multiplicative_factorizations,
)
from .quotients import GraphFraction
from .sequences import (
    FibReport,
    FibStep,
    fibonacci_report,
    fibonacci_sequence,
    golden_ratio_proxy,
)
from .serialize import (
    decode_graph6,
    encode_graph6,
    export_dot,
    export_edge_list,
    parse_edge_list,
)
from .signed import SignedGraph, additive_factorize, signed_f_function

__version__ = "0.1.0"

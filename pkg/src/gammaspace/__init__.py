"""Operations on finite topological spaces: gamma-interior and closure,
operation classes, separation axioms and exhaustive implication checks."""

from .finset import (
    Topology,
    closure,
    enumerate_topologies,
    interior,
    subspace_topology,
    validate_topology,
)
from .gammatop import (
    Convention,
    finite_intersection_characterization,
    gamma_closure,
    gamma_interior,
    gamma_open_family,
    is_gamma0_compact,
    is_gamma_closed,
    minimal_closure_subcover,
)
from .operations import (
    ClIntCl,
    Closure,
    Explicit,
    Identity,
    IfContains,
    IntClosure,
    OperationTable,
    Space,
    build_operation,
    is_open_operation,
    is_regular_operation,
    is_strictly_regular_operation,
    make_space,
    validate_operation,
)
from .separation import (
    ClosedMode,
    is_gamma_T1,
    is_gamma_T2,
    is_gammas_normal,
    is_gammas_regular,
)
from .subspace import TraceConvention, gamma_open_trace_family, induced_operation
from .verdict import Verdict

__version__ = "0.1.0"

__all__ = [
    "Topology",
    "closure",
    "enumerate_topologies",
    "interior",
    "subspace_topology",
    "validate_topology",
    "Convention",
    "finite_intersection_characterization",
    "gamma_closure",
    "gamma_interior",
    "gamma_open_family",
    "is_gamma0_compact",
    "is_gamma_closed",
    "minimal_closure_subcover",
    "ClIntCl",
    "Closure",
    "Explicit",
    "Identity",
    "IfContains",
    "IntClosure",
    "OperationTable",
    "Space",
    "build_operation",
    "is_open_operation",
    "is_regular_operation",
    "is_strictly_regular_operation",
    "make_space",
    "validate_operation",
    "ClosedMode",
    "is_gamma_T1",
    "is_gamma_T2",
    "is_gammas_normal",
    "is_gammas_regular",
    "TraceConvention",
    "gamma_open_trace_family",
    "induced_operation",
    "Verdict",
]

"""Exact energy barriers for hypergraph product codes on desk-scale instances.

The package builds CSS product codes from two classical parity-check
matrices, finds exact energy barriers by exhaustive bottleneck path search
over the full state space, and mechanically checks the structural claims
about those barriers (stabilizer bounds, canonical operator barriers, the
product barrier formula) on small concrete instances.
"""

from .errors import (
    CapExceeded,
    DimensionMismatch,
    EmptyMatrix,
    HgpBarrierError,
    InconsistentDegrees,
    IndexOutOfRange,
    NoLogicals,
    NoTarget,
    NotACodeword,
    NotAStabilizer,
    NotElementary,
    OutsideNormalizer,
    ParseError,
    ShapeMismatch,
    TrivialOperator,
)
from .f2core import BitMatrix, BitVec, kernel_basis, rank, rref
from .codes import (
    ClassicalCode,
    CodeParams,
    emit_alist,
    emit_dense,
    hamming_7_4,
    open_repetition,
    parse_alist,
    parse_auto,
    parse_dense,
    random_ldpc,
    ring_repetition,
)
from .hgp import HgpCode, QuantumParams, build_hgp, css_check, hgp_parameters, qubit_index
from .logicals import (
    CanonicalXOp,
    CanonicalZOp,
    PauliClass,
    PauliVec,
    canonical_x_basis,
    canonical_z_basis,
    classify,
    compose_canonical,
    compose_canonical_x,
    enumerate_x_logicals,
    enumerate_z_logicals,
)
from .barrier import (
    BarrierResult,
    MinimaxTable,
    PathRecord,
    bottleneck_search,
    classical_barrier,
    classical_table,
    normalizer_barrier,
    pauli_barrier_general,
    quantum_barrier,
    sector_table,
    stabilizer_path,
    sweep_path_for_canonical,
    validate_path,
)
from .deform import (
    DeformSpec,
    collapse_columns,
    column_index_set,
    deform_path,
    deform_pauli,
    deformation_trace,
    find_activating_codeword,
    weight_reduction_gap,
)
from .verify import VerifyReport, run_all, run_claim

__version__ = "0.1.0"

"""lazforge: construction and exhaustive certification of low-ambiguity-zone
sequence sets built from locally perfect nonlinear functions."""

from .ambiguity import (
    AFGrid,
    AFWitness,
    ThetaReport,
    af_grid,
    af_row,
    aperiodic_af,
    delta_k,
    periodic_af,
    structural_af,
    theta_max,
)
from .bounds import (
    BoundReport,
    aperiodic_lower_bound,
    asymptotic_rho,
    classify_regime,
    optimality_factor,
    periodic_lower_bound,
)
from .construct import (
    LazParams,
    build_a_matrix,
    build_laz_set,
    deinterleave,
    interleave,
    power_map_params,
    predicted_params,
)
from .errors import PreconditionError
from .hgen import (
    HMatrix,
    HReport,
    bjorck_shifts,
    dft_submatrix,
    hmatrix_from_set,
    legendre_shifts,
    make_hmatrix,
    msequence_shifts,
    supported_orders,
    verify_h_constraints,
)
from .lpnf import (
    LocalZone,
    ZFunc,
    diff_table,
    is_lpnf,
    is_pnf,
    lpnf_zone_for,
    nonlinearity_measure,
    nonlinearity_witness,
    power_lpnf,
    quad_lpnf,
)
from .seqcore import (
    Phase,
    SequenceSet,
    UnimodSequence,
    Zone,
    cyclic_shift,
    equal_up_to_shift,
    load_sequence_set,
    phase_mul,
    save_sequence_set,
)
from .verify import (
    DistinctReport,
    LazCertificate,
    TableCheck,
    certify_laz,
    cyclic_distinct,
    empirical_zone,
    reproduce_table,
)

__version__ = "0.1.0"

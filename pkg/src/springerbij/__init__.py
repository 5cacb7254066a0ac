"""Four families counted by the Springer numbers, the explicit bijections
linking them, and independent counting oracles that cross-check everything
by exhaustion at desk scale.
"""

from .bijections import (
    PhiTrace,
    fz,
    fz_inverse,
    lbp_to_rcalt,
    lbp_to_snake,
    phi,
    phi_inverse,
    phi_inverse_trace,
    phi_step1,
    phi_step1_inverse,
    phi_trace,
    psi,
    psi_inverse,
    rcalt_to_lbp,
    snake_to_lbp,
)
from .families import (
    FAMILIES,
    SpringerTable,
    ThreeWIP,
    enumerate_alternating,
    enumerate_laguerre,
    enumerate_lbp,
    enumerate_rcalt,
    enumerate_snakes,
    enumerate_wip3,
    euler_sequence,
    format_wip3,
    is_wip3,
    parse_wip3,
    springer_dp,
    springer_egf,
    springer_enumeration,
    validate_wip3,
)
from .paths import (
    LabeledBallotPath,
    LaguerreHistory,
    count_lbp_dp,
    extend_to_rc_fixed,
    format_path,
    halve_rc_fixed,
    height_profile,
    history_rc,
    parse_labeled_ballot,
    parse_laguerre,
    validate_labeled_ballot,
    validate_laguerre,
    wbar,
)
from .permcore import (
    CycleForm,
    MarkedPermutation,
    count_pat_2_31_at,
    count_pat_31_2_at,
    cycle_peaks,
    foata,
    foata_inverse,
    format_cycle_form,
    format_marked,
    format_perm,
    format_signed,
    invert,
    is_alternating,
    is_permutation,
    is_signed_permutation,
    is_snake,
    left_peaks,
    parse_perm,
    parse_signed,
    reverse_complement,
    right_valleys,
    standard_cycle_form,
)

__version__ = "0.1.0"

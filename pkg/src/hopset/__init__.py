"""Frequency-hopping sequence sets: construction, extension, verification."""

from .bounds import (
    OptimalityReport,
    dilation_step_bound_condition,
    is_optimal_fhs,
    is_optimal_set,
    lempel_greenberger_bound,
    peng_fan_bound,
    translate_step_bound_condition,
)
from .catalog import (
    BUILTIN_NAMES,
    SequenceSetFile,
    builtin,
    load_labeling,
    load_set,
    read_file,
    save_labeling,
    save_ocs,
    save_set,
    write_file,
)
from .core import (
    Alphabet,
    CorrelationProfile,
    Fhs,
    FhsSet,
    OccurrenceMap,
    correlation_profile,
    fhs_set_from_rows,
    hamming_correlation,
    occurrence_map,
)
from .extension import (
    ExtensionPlan,
    ExtensionStep,
    Labeling,
    LabelingVerdict,
    cumulative_labeling,
    decomposed_correlation,
    extend_once,
    extend_recursive,
    plan_recursive_extension,
    validate_labeling,
)
from .numtheory import (
    FieldElementTable,
    PrimePower,
    factor_prime_powers,
    gf_construct,
    least_prime_factor,
    multiplicative_order,
    primitive_root_mod_prime_power,
)
from .onecoincidence import (
    OneCoincidenceSet,
    gen_dilation_set,
    gen_field_set,
    gen_translate_set,
    verify_one_coincidence,
)

__version__ = "0.1.0"

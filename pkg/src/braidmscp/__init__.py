"""Simultaneous conjugacy search in braid groups via minimal conjugator sets."""

from .braid import (
    BraidWord,
    SimpleElement,
    delta,
    enumerate_simples,
    exponent_sum,
    generator_simple,
    identity_simple,
    join,
    left_complement_simple,
    meet,
    right_complement,
    simple_divides,
    simple_from_positive_word,
    simple_product,
    simple_to_word,
    tau,
    word_concat,
    word_from_text,
    word_inverse,
    word_to_text,
)
from .errors import (
    BoundExceeded,
    BraidError,
    CountMismatch,
    IndexOutOfRange,
    InstanceFormatError,
    InstanceSyntaxError,
    InvalidParams,
    LengthMismatch,
    NegativeLetter,
    NotInFloor,
    NotPositive,
    NotSimple,
    StrandMismatch,
    VerificationFailed,
)
from .harness import AttackReport, GenParams, batch_stats, gen_instance, run_attack
from .instance_io import (
    InstanceFile,
    counters_report,
    export_graph,
    instance_from_json,
    instance_to_json,
    parse_instance,
    write_instance,
)
from .normal_form import (
    NormalForm,
    conjugate,
    inf_sup,
    invert,
    lcm_complement,
    multiply,
    nf_key,
    nf_of_simple,
    nf_to_word,
    normalize,
    simple_prefix_of_positive,
    strand_permutation,
    validate_normal_form,
)
from .solver import (
    DEFAULT_NODE_CAP,
    BraidTuple,
    ConjugatorResult,
    Outcome,
    SearchCounters,
    SummitGraph,
    SummitNode,
    conjugate_tuple,
    conjugation_keeps_floor,
    inf_vector,
    meets_floor,
    minimal_conjugator,
    minimal_conjugator_set,
    solve_mscp,
    summit_search,
    tuple_from_words,
    tuple_key,
    verify_conjugator,
)

__version__ = "0.1.0"

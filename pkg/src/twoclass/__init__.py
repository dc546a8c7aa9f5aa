"""2-class groups of real quadratic fields and the first layer of their
cyclotomic Z2-extensions: genus theory, Redei-Reichardt counts, Kuroda's
class number formula, congruence/symbol classifiers, and an independent
class-group oracle built on indefinite binary quadratic forms."""

from .arith import (
    FactoredSquarefree,
    ResidueClass,
    crt,
    factor_squarefree,
    hilbert_symbol,
    is_prime,
    kronecker,
    squarefree_range,
    two_power_residue_test,
)
from .biquad import (
    BiquadField,
    BiquadNumber,
    biquad_field,
    first_layer_rank,
    hasse_unit_index,
    is_square_in_K1,
    kuroda_order,
    ramified_place_count,
    structure_from_rank_and_order,
)
from .classify import (
    PredictionReport,
    SymbolSpec,
    find_prime_tuple,
    predict,
    prime_tuples_up_to,
    shape_of,
    spec_for_ppqq_condition,
    spec_for_qqqq_condition,
    stable_rank_type,
    structure_condition_ppqq,
    structure_condition_qqqq,
    verify_against_oracle,
)
from .forms import (
    Abelian2Group,
    FormClassGroup,
    IndefiniteForm,
    compose,
    narrow_class_group,
    ordinary_class_group,
    reduce_form,
    reduced_forms,
    two_sylow,
)
from .genus import (
    GenusField,
    genus_field,
    genus_fixed_order,
    genus_rank,
    narrow_genus_field,
    narrow_genus_rank,
    prime_discriminants,
    starred_prime,
)
from .quadfield import (
    FundamentalUnit,
    QuadInteger,
    QuadraticField,
    discriminant,
    fundamental_unit,
    is_square_in_K,
    minus_one_is_norm,
    quadratic_field,
    splitting_in,
    unit_norm,
)
from .redei import (
    Decomposition,
    elementary_transfer_applies,
    narrow_two_elementary,
    s1_decompositions,
    s2_decompositions,
)

__version__ = "0.1.0"

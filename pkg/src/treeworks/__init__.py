"""Workbench for groups acting simply transitively on products of two trees.

A group of this kind is encoded by a finite datum: two letter alphabets with
involutions and a set of squares closed under the natural symmetries.  The
package validates data, computes ball actions, classifies the closures of the
two tree projections, enumerates data up to equivalence, and certifies
virtual-simplicity indices by coset enumeration.
"""

from .action import (
    BallAction,
    ball_paths,
    fill_rectangle,
    letters_on_ball,
    local_action_permutation,
    sphere_paths,
    word_action_on_ball,
)
from .census import (
    CensusRow,
    census,
    census_classes,
    enumerate_data,
    predict_possible_projections,
    projection_census,
    projection_label,
    verdict,
    write_census_csv,
    write_classes_jsonl,
)
from .classify import (
    ClassifyError,
    GroupDescriptor,
    LabelledGraph,
    ProjectionReport,
    SignMatrix,
    alpha,
    alpha_inverse,
    build_graph,
    burger_mozes_bound,
    burger_mozes_nondiscrete,
    classify_projection,
    detect_K_and_X,
    possibly_irreducible,
    s_values,
    solve_affine_gf2,
)
from .datum import (
    CanonicalForm,
    DatumError,
    DatumSpec,
    DatumSyntaxError,
    Quad,
    ValidationReport,
    canonical_form,
    encode,
    equivalent,
    format_datum,
    involution,
    is_torsion_free,
    mirror,
    parse_datum,
    relabelings,
    validate,
    vertex_fixing_automorphisms,
)
from .present import (
    GAMMA45_WITNESSES,
    LimitExceeded,
    Presentation,
    QuotientReport,
    coset_enumerate,
    gamma33,
    gamma44,
    gamma45,
    gamma66,
    gamma_2n2n1,
    gamma_64n,
    named_family,
    parse_word,
    presentation_of,
    quotient_report,
    simple_index,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

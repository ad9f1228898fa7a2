"""Finite quandles, pointed quandles and coloring invariants of knotoids and linkoids."""
from .caps import Caps, default_caps
from .census import canonical_table, census_up_to, count_labeled, enumerate_quandles
from .coloring import (
    CountingMatrix,
    count_colorings,
    counting_invariant,
    counting_matrix,
    counting_matrix_by_entry,
    enumerate_colorings,
    evaluate_word,
    iter_colorings,
    matrix_report,
    pointed_counting_invariant,
    pointed_profile,
)
from .diagrams import (
    Arc,
    ArcLayout,
    Component,
    LinkoidDiagram,
    Passage,
    apply_omega_minus,
    apply_r1,
    apply_r2,
    derive_arcs,
    fundamental_presentation,
    parse_diagram,
    render_diagram,
)
from .errors import QuandloidError
from .fixtures import load_diagram, load_presentation, named_quandle
from .pointed import (
    UNBOUNDED,
    EqualityPattern,
    PointedQuandle,
    analyze_pointed,
    d_n,
    d_n_burnside,
    equality_pattern,
    is_n_homogeneous,
    is_two_point_homogeneous,
    is_uniform,
    orbit_classes,
    partition_count,
    pointed_isomorphic,
    sk_equivalent,
)
from .presentation import (
    QuandlePresentation,
    QuandleWord,
    add_closure_relation,
    omega_minus_presentation,
    parse_presentation,
    render_presentation,
    tietze_eliminate,
    word,
)
from .quandle import (
    FiniteQuandle,
    GroupOfPermutations,
    algebraic_components,
    are_isomorphic,
    automorphism_group,
    inner_group,
    is_connected,
    is_cyclic_type,
    is_faithful,
    is_homogeneous,
    make_dihedral,
    make_tetrahedron,
    make_trivial,
    make_v3,
    validate_table,
)

__version__ = "0.1.0"

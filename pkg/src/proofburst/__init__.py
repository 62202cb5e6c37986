"""proofburst: a sequent-calculus (LK) proof explorer.

Proofs are immutable trees of rule-labeled inferences.  The package
parses and validates a JSON interchange format, lays proofs out both as
a sunburst disc (structure-first, weight-proportional) and as a
classical Gentzen tree, traces formula-occurrence ancestry, exports
deterministic SVG, and serves it all over a local JSON API.
"""

from .ancestry import ancestors, cut_ancestors, direct_parents
from .formulas import (
    All,
    And,
    Atom,
    Ex,
    Formula,
    Fun,
    Imp,
    Neg,
    Or,
    Term,
    Var,
    alpha_eq,
    format_formula,
    format_term,
    free_vars,
    substitute,
)
from .gen import (
    GenSpec,
    XorShift64Star,
    gen_balanced,
    gen_chain,
    gen_cut_comb,
    gen_random,
    gen_replicated,
    generate,
)
from .gentzen import (
    GentzenLayout,
    GentzenParams,
    InferenceLine,
    NodeBox,
    PathNotFound,
    TextSpan,
    bounds_of,
    highlight_occurrences,
    layout_gentzen,
    render_sequent,
)
from .metrics import (
    ColorGroup,
    ColorProfile,
    INFERENCE_COUNT,
    Stats,
    WeightMetric,
    classify,
    default_profile,
    load_profile,
    rule_weighted,
    stats,
    weight,
)
from .proof import (
    AuxOcc,
    InferenceNode,
    InvalidOcc,
    OccRef,
    Path,
    PathOutOfRange,
    PrinOcc,
    Proof,
    Rule,
    Sequent,
    Side,
    as_path,
    iter_nodes,
    max_depth,
    node_at,
    other_rule,
    parse_path,
    path_str,
    rule,
    rule_arity,
    seq,
    structurally_equal,
    subtree_size,
)
from .proofjson import FORMAT_NAME, ParseError, parse_proof, serialize_proof
from .sunburst import (
    Sector,
    SunburstLayout,
    SunburstParams,
    ZoomLayout,
    focus_subproof,
    hit_test,
    layout_sunburst,
    layout_zoom,
)
from .svg import gentzen_to_svg, sunburst_to_svg
from .validate import (
    ALL_CODES,
    Diagnostic,
    Severity,
    validate,
    validate_logic,
    validate_structure,
)

__version__ = "0.1.0"

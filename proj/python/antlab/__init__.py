"""n-state ant simulator and invariant toolkit (compiled core)."""

from ._antlab import (  # noqa: F401
    HighwayReport,
    RuleString,
    Universe,
    detect_highway,
    detect_symmetries,
    diagonals_graph,
    from_code,
    has_even_run_length,
    home_return_times,
    is_cold,
    is_hot,
    load_snapshot,
    parse_rule_string,
    principal_contour,
    recurrent_symmetry_candidates,
    render_states_ppm,
    render_truchet_svg,
    run_structure,
    save_snapshot,
    sweep,
    symmetry_scan,
    trace_contour,
    twice_visited_cells,
    unboundedness_probe,
    verify_lemma1,
    verify_lemma2,
)

__all__ = [name for name in dir() if not name.startswith("_")]

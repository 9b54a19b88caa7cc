"""Firefighter game on graphs: exact simulation, strategy verification,
random-separation solvers, reductions and a brute-force oracle."""

from .errors import BudgetExceededError, FirefighterError, InputError, InvalidStrategyError, NotUnicyclicError, ParseError
from .game import GameOutcome, Scenario, Strategy, outcome_value, parse_strategy, simulate, strategy_value
from .graph import CycleInfo, Graph, bfs_distances, find_unique_cycle, merge_vertices, neighbors_set
from .io import format_graph, load_fixture, load_graph, parse_graph_file, parse_graph_text
from .oracle import brute_force_burnt_decision, brute_force_optimal
from .reductions import expand_values, merge_sources, reduce_multi_step, subdivide_weighted
from .solvers import (
    EXHAUSTIVE,
    RANDOMIZED,
    UNIVERSAL,
    Color,
    SolveResult,
    TrialBudget,
    min_bfs_burning_tree,
    solve_at_most_k_burnt,
    solve_exactly_k_burnt,
    solve_max_k_protection_bounded_degree,
    solve_max_k_step_protection,
    solve_tree_max_k,
    solve_tree_plus_b,
    solve_unicyclic_max_k,
    transform_case1,
    transform_case2,
    transform_case3,
)
from .universal import UniversalFamily, build_universal_set, derandomized_colorings, is_universal
from .verify import order_and_verify, order_and_verify_multi

__version__ = "0.1.0"

"""Random-separation solvers for the firefighter problem."""

from .bounded import min_bfs_burning_tree, solve_max_k_protection_bounded_degree, solve_max_k_step_protection
from .burnt import solve_at_most_k_burnt, solve_exactly_k_burnt
from .coloring import EXHAUSTIVE, RANDOMIZED, UNIVERSAL, Color, SolveResult, TrialBudget
from .tree import solve_tree_max_k
from .unicyclic import (
    TreeCase,
    solve_tree_plus_b,
    solve_unicyclic_max_k,
    transform_case1,
    transform_case2,
    transform_case3,
)

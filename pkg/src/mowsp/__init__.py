"""Multi-objective weighted shortest paths: the Standard Algorithm, IDAQ,
a Pareto oracle, instance generators and file tooling."""
from .core import (TAG_NAMES, EdgeRecord, LambdaSet, Mog, PathRecord, ValidationReport, as_lambda_set,
                   check_instance, dominates, edge_cost, extend_path, path_cost, path_from_nodes,
                   validate_mog, weakly_dominates)
from .errors import (FormatError, GenerationError, InputError, LogicError, MowspError, ResourceError,
                     StateError, VerificationError)
from .heap import AddressableHeap, heap_delete, heap_insert, heap_is_empty, heap_pop_min
from .dijkstra import ShortestPathTree, shortest_path_tree
from .solution import SolutionSet, cost_table
from .stats import SolverStats
from .standard import solve_standard
from .idaq import AdaptiveQueue, IdaqSolver, IdaqState, build_sets, is_relevant, solve_idaq
from .oracle import ParetoFront, StructureDiagnostics, oracle_optimal_costs, pareto_fronts, structure_diagnostics
from .benchgen import (CORRELATED, TABLE1_LITERAL, TABLE1_TUNED, UNCORRELATED, CoeffRegime, WaxmanParams,
                       assign_random_objectives, gen_lambdas, gen_waxman, random_tagged_graph,
                       synth_geo_objectives, waxman_instance)
from .io import (VerifyReport, export_geojson, instance_digest, read_graph, read_lambdas, read_solution,
                 solution_document, verify_solutions, write_graph, write_lambdas, write_solution)
from .bench import BenchConfig, BenchReport, run_bench
from .cli import cli_main

__version__ = "0.1.0"

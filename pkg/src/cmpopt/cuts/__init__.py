"""Cut-comparison queries on hidden graphs."""
from .graph import HiddenGraph, mask_of, members, stoer_wagner
from .mincut import MinCutResult, min_cut, ni_mincut_marginal
from .oracle import CutOracle
from .primitives import (CutPrimitives, extract_edges, first_neighbor, is_isolated,
                         majority_test, median_sets, neighbors_in_set, tipping_point)
from .reconstruct import reconstruct_graph
from .sampling import VertexPartition, sample_percolation, sample_uniform_edges
from .sparsifier import SparsifierConfig, build_sparsifier
from .weighted import weighted_mincut_fewclasses

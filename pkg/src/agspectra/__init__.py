"""Arithmetic-geometric (AG) weighted adjacency spectra of unicyclic graphs."""

from .canon import canonical_form, canonical_labeling
from .closed_form import PolyFamily, eval_poly, largest_root, lemma4_bound, lemma7_threshold, zheng_upper_bound
from .enumerate import enumerate_bicyclic, enumerate_unicyclic, enumerate_unicyclic_with_max_degree
from .graph import Family, Graph, build_family, from_graph6, max_degree, to_graph6
from .spectral import Spectrum, char_poly, full_spectrum, spectral_radius
from .weights import Scheme, ag_index, ag_matrix, abc_index, edge_weight, first_zagreb, randic_index, weighted_adjacency

__all__ = [
    "Family", "Graph", "PolyFamily", "Scheme", "Spectrum",
    "abc_index", "ag_index", "ag_matrix", "build_family", "canonical_form", "canonical_labeling",
    "char_poly", "edge_weight", "enumerate_bicyclic", "enumerate_unicyclic",
    "enumerate_unicyclic_with_max_degree", "eval_poly", "first_zagreb", "from_graph6",
    "full_spectrum", "largest_root", "lemma4_bound", "lemma7_threshold", "max_degree",
    "randic_index", "spectral_radius", "to_graph6", "weighted_adjacency", "zheng_upper_bound",
]

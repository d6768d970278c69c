"""Separating-intersection analysis for graph products of primary cyclic
groups: detect separating pairs and triples in a labelled graph, build the
partial-conjugation generating set, classify the outer automorphism group,
and cross-check everything against an exact word-rewriting oracle."""

from .graphs import (GraphError, LabelledGraph, UnknownVertexError, center,
                     components, from_dot, from_json, from_json_dict,
                     is_connected, link, load_graph, make_graph, star,
                     star_cut_points, to_dot, to_json, to_json_dict)
from .harness import CounterexampleReport, EnumSpec, enumerate_graphs, run_suite
from .outer import (CommutationPresentation, DisconnectedStructure,
                    GeneratorSetP0, OutClass, OutKind, PartialConjugation,
                    build_p0, classify, commutes, disconnected_structure,
                    partial_conjugations, presentation)
from .sils import (Fsil, SharedComponentError, Sil, Stil, enumerate_fsils,
                   enumerate_sils, enumerate_stils, is_sil,
                   shared_sil_component)
from .words import (EPSILON, Automorphism0, WordError, apply,
                    apply_automorphism, commutator, commutator_power_probe,
                    compose, equals, identity_automorphism, invert,
                    is_inner_with, make_word, multiply, parse_word_literal,
                    pc_automorphism, reduce, search_inner)

__version__ = "0.1.0"

"""Matrix groups over finite fields and small permutation groups."""

from .data import GeneratorSet, matrices_from_lists, order120_subgroups
from .groups import (MODELS, GroupFingerprint, GroupModel, derived_subgroup, find_isomorphism,
                     fingerprint, generating_set, is_A5xC2, is_perfect, model_a5, model_a5xc2,
                     model_psl2_8, model_s5, sl2_f8_generators)
from .matrix import MatrixFq, MatrixGroupHandle, closure, element_order, field_of_order, group_closure
from .module import (CentralizerResult, CommutantBasis, ModuleDecomposition, blowup_embedding,
                     centralizer, commutant_basis, find_submodule, fixed_space, module_decompose,
                     multiplication_matrix, primitive_polynomial, singer_element, spin)
from .perm import Permutation, an_class_splits, partitions, perm_order_spectrum
from .scan import count_elements_of_order, gl2_rank2_subgroups_meet_center

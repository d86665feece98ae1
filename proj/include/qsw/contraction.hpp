#pragma once

// Contraction q -> 1 through the singular change of basis
// X' = g X, g = 1 + h/(q-1) E_13, for presentations and matrices.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsw/algebra.hpp"
#include "qsw/calculus.hpp"
#include "qsw/linalg.hpp"

namespace qsw {

/// h/(q-1).
Scalar kappa();
/// The 3x3 change of basis, rows and columns ordered xi, x, eta.
MatrixRF contraction_g();
MatrixRF C_q();
/// (A^st)_ij = (-1)^{(p_i + p_j) p_j} A_ji with index parities odd, even, odd.
MatrixRF supertranspose(const MatrixRF& a);
/// X^st C X = sum_ij (-1)^{p_i} X_i C_ij X_j over xi, x, eta.
Element bilinear_form(const Presentation& p, const MatrixRF& C);

struct ContractionMap {
  std::string target;
  std::vector<Generator> target_generators;
  std::vector<Element> images;  // one per source generator, over target_generators
};

/// Maps for the three families: superspace (xi' = xi + k eta), exterior
/// algebra (y' = y + k z) and Weyl algebra (xi' as above and
/// @eta' = @eta - k @xi, the inverse transpose on partials).
std::optional<ContractionMap> registered_contraction(const Presentation& source);

/// Limit at s = 1 of the span of `elements` as a subspace: every element
/// is rescaled by a power of (s-1), and dependent leading parts are combined
/// and rescaled again until the leading parts are independent.
std::vector<Element> limit_span(const std::vector<Element>& elements);

/// Substitutes the primed generators into the relations (free algebra).
std::vector<Element> substitute_relations(const Presentation& source, const ContractionMap& cm);
PresentationPtr contract_presentation(const Presentation& source, const ContractionMap& cm);

/// Leading part at s = 1 of a single substituted element.
Element contract_element(const Element& e);

enum class MatrixContraction { congruence, conjugation_tensor };
/// lim g^st M g, or lim (g (x) g)^{-1} M (g (x) g). Throws PoleError naming
/// the entry.
MatrixRF contract_matrix(const MatrixRF& m, MatrixContraction mode);

/// Every source relation, substituted and contracted on its own, reduces to
/// zero in the contracted presentation.
std::vector<CalculusCheck> contraction_commutes_with_reduction(const Presentation& source,
                                                               const ContractionMap& cm,
                                                               const Presentation& contracted);

std::vector<CalculusCheck> h_supersphere_checks(const Presentation& sph);

struct LieReport {
  std::vector<CalculusCheck> identities;  // supersymmetry and Jacobi
  std::vector<CalculusCheck> closure;     // part of [a, b] outside the span of generators
};
LieReport lie_superalgebra_checks(const Presentation& p);

/// Entries of g T g^{-1} over the nine free symbols.
std::vector<std::vector<Element>> similarity_transformed_T();
/// The six-generator relations pushed through t' = g T g^{-1} and contracted
/// as a subspace; expressed over the generators of `group`.
PresentationPtr similarity_transform_group(const Presentation& group, const std::string& name = "osp-h-candidate");

/// @_i X_j relation of the printed Weyl presentation against the matrix
/// instantiation, one per index pair.
std::vector<CalculusCheck> compare_compact_form(const Presentation& printed_weyl, const MatrixRF& B);
/// sum_{k,l} P^{lk}_{ij} @_k @_l in the given Weyl presentation, per (i,j).
std::vector<CalculusCheck> partial_projector_relations(const Presentation& weyl, const MatrixRF& P);

/// Hatted operators of the h-Heisenberg superalgebra by name:
/// x, xi, eta, px, pxi, peta.
using OperatorDefs = std::map<std::string, Element>;
OperatorDefs default_heisenberg_operators(const Presentation& weyl_h);
using HeisenbergCheck = ElementCheck;
std::vector<HeisenbergCheck> heisenberg_h_verify(const Presentation& weyl_h, const OperatorDefs& ops);

}  // namespace qsw

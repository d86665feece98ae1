#pragma once

// Coproduct, counit and coactions of the 3x3 quantum supermatrix on the
// superspace, with the covariance and classical-limit checks built on them.

#include <array>
#include <string>
#include <vector>

#include "qsw/algebra.hpp"
#include "qsw/tensor.hpp"

namespace qsw {

enum class Side { left, right };

/// Parity of matrix row/column k (0-based): the pattern odd, even, odd.
inline int index_parity(int k) { return k == 1 ? 0 : 1; }
/// Generator index of t_ij in the free nine-symbol presentation.
inline int t_index(int i, int j) { return 3 * i + j; }

/// delta_L(X_i) = sum_k t_ik (x) X_k, or delta_R(X_i) = sum_k X_k (x) t_ki.
CoMap coaction(const PresentationPtr& space, const PresentationPtr& free_t, Side side);
/// delta'_R(X) = X (x) T^st.
CoMap supertransposed_right_coaction(const PresentationPtr& space, const PresentationPtr& free_t);
CoMap coproduct(const PresentationPtr& free_t);
CoMap counit(const PresentationPtr& free_t);

/// Imposes every defining relation of `space` on the transformed coordinates
/// and collects the coefficient of each normal coordinate word, an element
/// of the free algebra on the nine t_ij.
std::vector<Element> derive_covariance_relations(const PresentationPtr& space, const PresentationPtr& free_t,
                                                 Side side);

/// a, b, c, d, alpha, delta into the free nine-symbol algebra.
Morphism group_into_free(const PresentationPtr& group, const PresentationPtr& free_t);

/// Supercommutative algebra on a, b, c, d, alpha, delta; with `unimodular`
/// also ad = 1 + bc + alpha*delta.
PresentationPtr classical_group(bool unimodular);
/// Free symbols to the classical algebra at s = 1, with
/// gamma = a*delta - c*alpha, e = 1 - alpha*delta, beta = b*delta - d*alpha.
Morphism classical_substitution(const PresentationPtr& free_t, const PresentationPtr& classical);

/// Applies a morphism to one leg; its scalar map acts on every coefficient.
TensorElement map_leg(const TensorElement& t, std::size_t leg, const Morphism& m);

/// The two expressions of the quantum superdeterminant.
std::array<Element, 2> superdeterminant(const Presentation& group);

/// Antipode on degree-one elements of the free nine-symbol algebra, from the
/// inverse matrix.
Element antipode_linear(const Presentation& free_t, const Element& e);

using ElementMatrix = std::vector<std::vector<Element>>;
ElementMatrix multiply(const Presentation& p, const ElementMatrix& a, const ElementMatrix& b);
/// (A^st)_ij = (-1)^{(p_i + p_j) p_j} A_ji with index parities odd, even, odd.
ElementMatrix supertranspose(const ElementMatrix& a);

/// T with the classical gamma, e, beta, and the inverse matrix at q = 1, both
/// in `classical`.
ElementMatrix classical_T(const Presentation& classical);
ElementMatrix classical_T_inverse(const Presentation& classical);

/// (Delta (x) id) Delta = (id (x) Delta) Delta and both counit laws, per t_ij.
std::vector<TensorCheck> coproduct_axioms(const PresentationPtr& free_t);
/// (id (x) delta_L) delta_L = (Delta (x) id) delta_L and (eps (x) id) delta_L = id
/// per coordinate; the mirrored laws for the right coaction.
std::vector<TensorCheck> coaction_axioms(const PresentationPtr& space, const PresentationPtr& free_t, Side side);

/// [e, g] for every generator g, labelled by the generator name.
std::vector<ElementCheck> central_residues(const Presentation& p, const Element& e);

/// delta(e) - 1 (x) e (left) or delta(e) - e (x) 1 (right), with the group
/// leg sent to `classical` through classical_substitution and s = 1.
TensorElement classical_coinvariance_residue(const PresentationPtr& space, const PresentationPtr& free_t,
                                             const PresentationPtr& classical, const Element& e, Side side);

/// T T^{-1} - D I entry-wise and T^st C T - D C, D = ad - bc - alpha*delta,
/// computed in `classical`.
std::vector<ElementCheck> classical_inverse_checks(const Presentation& classical);

}  // namespace qsw

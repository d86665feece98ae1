#pragma once

// First-order differential calculus on the superspace: the exterior
// derivative on the forms presentation, the polynomial action of partial
// derivatives and the consistency checks tying them together.

#include <string>
#include <vector>

#include "qsw/algebra.hpp"
#include "qsw/linalg.hpp"
#include "qsw/tensor.hpp"

namespace qsw {

/// Coordinates X and differentials d(X) in one presentation whose normal
/// words carry every differential to the left of every coordinate.
struct Calculus {
  PresentationPtr base;
  PresentationPtr forms;
  std::vector<int> coord;  // base generator -> forms generator
  std::vector<int> diff;   // base generator -> forms generator of d(X)
};

Calculus make_calculus(PresentationPtr base, PresentationPtr forms);

/// Rewrites letters by generator name; throws if a name is missing.
Element transport(const Presentation& from, const Presentation& to, const Element& e);

/// Graded Leibniz extension of d(X) on words of the forms presentation,
/// d(d(X)) = 0, normal-formed. Throws on letters that are neither.
Element apply_d(const Calculus& c, const Element& e);

using CalculusCheck = ElementCheck;

/// d of every base relation, d of every mixed and form relation, and d^2 on
/// every normal base monomial up to max_degree.
std::vector<CalculusCheck> verify_calculus_consistency(const Calculus& c, std::size_t max_degree = 3);

/// d_i(f) read off as the coefficient of d(X_i) in d f (result in base).
Element derivative_by_forms(const Calculus& c, const std::string& coordinate, const Element& f);
/// d_i(f) as the partial-free part of @X_i * f in a Weyl presentation
/// (f and result in base).
Element derivative_by_weyl(const Presentation& weyl, const Presentation& base, const std::string& coordinate,
                           const Element& f);

struct StrategyComparison {
  std::string label;
  Element by_forms;
  Element by_weyl;
  bool ok() const { return by_forms == by_weyl; }
};
std::vector<StrategyComparison> compare_derivative_strategies(const Calculus& c, const Presentation& weyl,
                                                              std::size_t max_degree);

/// r = s^{-1} xi eta + x^2 - s eta xi in the given presentation.
Element supersphere(const Presentation& p);

/// d(X) r - q^{-2} r d(X) for every coordinate, and the three partial
/// derivative relations of r.
std::vector<CalculusCheck> supersphere_derivative_relations(const Calculus& c, const Presentation& weyl);

/// s -> 1/s, x -> i x, xi <-> eta, d(x) -> i d(x), d(xi) <-> d(eta), applied
/// to the coordinate/differential and differential/differential relations;
/// the coordinate relations are kept.
PresentationPtr build_gamma_minus(const Presentation& gamma_plus, const std::string& name = "gamma-minus");

/// Coordinate relations, partial/partial relations and
/// @_i X_j = delta_ij + sum_{k,l} B^{jk}_{il} X_l @_k, with (i,j) ranging
/// over xi, x, eta. Generators and weights are taken from `weyl`.
std::vector<Element> compact_derivative_relations(const Presentation& weyl, const MatrixRF& B);
PresentationPtr weyl_from_matrix(const Presentation& weyl, const MatrixRF& B, const std::string& name);

/// Delta_L(X) = sum t_ik (x) X_k, Delta_L(dX_i) = sum (-1)^{p(t_ik)} t_ik (x) dX_k.
CoMap forms_coaction(const Calculus& c, const PresentationPtr& free_t);

using CovarianceCheck = TensorCheck;
/// Counit law on generators, then every forms relation pushed through
/// Delta_L and evaluated at s = 1 in the supercommutative classical algebras.
std::vector<CovarianceCheck> verify_d_covariance(const Calculus& c, const PresentationPtr& free_t);

}  // namespace qsw

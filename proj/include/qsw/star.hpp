#pragma once

// Conjugate-linear involutions on presented superalgebras.

#include <string>
#include <vector>

#include "qsw/algebra.hpp"
#include "qsw/scalar.hpp"
#include "qsw/tensor.hpp"

namespace qsw {

/// graded: (uv)* = (-1)^{p(u)p(v)} v* u*, (g*)* = (-1)^{p(g)} g.
/// plain:  (uv)* = v* u*,                 (g*)* = g.
enum class StarConvention { graded, plain };

struct StarStructure {
  std::string name;
  PresentationPtr presentation;
  ConjugationSpec conj = ConjugationSpec::real_q();
  StarConvention convention = StarConvention::graded;
  std::vector<Element> images;  // one per generator, normal-ordered
};

Element apply_star(const StarStructure& st, const Element& e);
/// Leg-wise star: (a (x) b)* = a* (x) b*.
TensorElement apply_star(const std::vector<const StarStructure*>& legs, const TensorElement& t);

using StarCheck = ElementCheck;

/// Square law on every generator followed by invariance of every defining
/// relation.
std::vector<StarCheck> verify_star_algebra(const StarStructure& st);

/// Hermiticity residue a* - a.
Element hermiticity_residue(const StarStructure& st, const Element& a);

/// Evaluates text in the dictionary's presentation, reading every starred
/// symbol g^* as the image of g; normal form.
Element translate_starred(const StarStructure& dictionary, const std::string& text);

struct OscillatorReport {
  Element value;     // aa* - q^2 a*a after eliminating aa* and a*a
  Element rescaled;  // the same after a, b -> (1-q^2)^{1/2} a, b
};
/// Works in a presentation on a^*, b^*, alpha^*, alpha, b, a whose relations
/// include bb* = b*b and the alpha alpha* exchange relation. The rescaling
/// factor only enters squared, as 1 - q^2.
OscillatorReport q_oscillator(const Presentation& starred);

/// Delta(g*) - [Delta(g)]* with the star applied leg-wise, per generator of
/// the free nine-symbol algebra.
std::vector<TensorCheck> star_coproduct_checks(const StarStructure& free_star);
/// eps(g*) - conj(eps(g)).
std::vector<ElementCheck> star_counit_checks(const StarStructure& free_star);
/// S(S(g*)*) - (-1)^{p(g)} g.
std::vector<ElementCheck> double_antipode_checks(const StarStructure& free_star);
/// [c(X)]* - c(X*) per coordinate X; the legs of c carry the stars in order.
std::vector<TensorCheck> star_comodule_checks(const CoMap& c, const std::vector<const StarStructure*>& leg_stars,
                                              const StarStructure& space_star);

}  // namespace qsw

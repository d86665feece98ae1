#pragma once

#include <random>

#include "qsw/algebra.hpp"
#include "qsw/catalog.hpp"

namespace qsw::test {

inline const Catalog& catalog() {
  static const Catalog c = Catalog::load(Catalog::default_path());
  return c;
}

inline PresentationPtr pres(const std::string& name) { return catalog().presentation(name); }

inline Scalar small_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3), e(0, 2);
  Scalar v = Scalar(c(rng)) + Scalar::s().pow(e(rng)) * Scalar(c(rng));
  if (v.is_zero()) v = Scalar(1);
  return v;
}

/// Unreduced combination of short random words.
inline Element random_element(const Presentation& p, std::mt19937& rng, std::size_t max_len = 3, int terms = 3) {
  std::uniform_int_distribution<int> len(0, int(max_len)), g(0, int(p.size()) - 1);
  Element e;
  for (int t = 0; t < terms; ++t) {
    Word w;
    int n = len(rng);
    for (int k = 0; k < n; ++k) w.push_back(char(g(rng)));
    e.add(w, small_scalar(rng));
  }
  return e;
}

/// Random element of a single parity.
inline Element random_homogeneous(const Presentation& p, std::mt19937& rng, int parity, std::size_t max_len = 3) {
  for (;;) {
    Element e = random_element(p, rng, max_len, 1);
    if (e.is_zero()) continue;
    if (p.parity(e) == parity) return e;
  }
}

}  // namespace qsw::test

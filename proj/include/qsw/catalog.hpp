#pragma once

// Declarative catalog files (*.qsw). A file declares one presentation or one
// star structure:
//
//   presentation NAME
//   gen NAME even|odd ORDER [weight W]
//   rule EXPR = EXPR
//
//   star-structure NAME
//   presentation NAME
//   convention graded|plain
//   conjugation i=EXPR s=EXPR h=EXPR
//   star NAME = EXPR
//
// '#' starts a comment.

#include <filesystem>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>

#include "qsw/algebra.hpp"
#include "qsw/star.hpp"

namespace qsw {

class CatalogError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

PresentationPtr parse_presentation_text(const std::string& text, const std::string& origin = "<text>");
std::string presentation_to_text(const Presentation& p);

class Catalog {
public:
  Catalog() = default;
  static Catalog load(const std::filesystem::path& dir);
  /// QSW_CATALOG if set, else the compiled-in default.
  static std::filesystem::path default_path();

  void add(PresentationPtr p);
  void add(StarStructure s);
  bool has_presentation(const std::string& name) const { return presentations_.count(name) > 0; }
  PresentationPtr presentation(const std::string& name) const;
  const StarStructure& star(const std::string& name) const;
  const std::map<std::string, PresentationPtr>& presentations() const { return presentations_; }
  const std::map<std::string, StarStructure>& stars() const { return stars_; }

private:
  std::map<std::string, PresentationPtr> presentations_;
  std::map<std::string, StarStructure> stars_;
};

}  // namespace qsw

#include "qsw/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef QSW_DEFAULT_CATALOG
#define QSW_DEFAULT_CATALOG "catalog"
#endif

namespace qsw {

namespace {

struct Line {
  std::size_t number;
  std::string keyword;
  std::string rest;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    raw = trim(raw);
    if (raw.empty()) continue;
    auto sp = raw.find_first_of(" \t");
    Line l{n, raw.substr(0, sp), sp == std::string::npos ? "" : trim(raw.substr(sp))};
    out.push_back(l);
  }
  return out;
}

[[noreturn]] void fail(const std::string& origin, std::size_t line, const std::string& msg) {
  throw CatalogError(origin + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> words_of(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::pair<Expr, Expr> parse_equation(const std::string& s, const std::string& origin, std::size_t line) {
  auto eq = s.find('=');
  if (eq == std::string::npos || s.find('=', eq + 1) != std::string::npos)
    fail(origin, line, "expected exactly one '='");
  try {
    return {parse_expr(s.substr(0, eq)), parse_expr(s.substr(eq + 1))};
  } catch (const ParseError& e) {
    fail(origin, line, e.what());
  }
}

ConjugationSpec parse_conjugation(const std::string& rest, const std::string& origin, std::size_t line) {
  if (rest == "real_q") return ConjugationSpec::real_q();
  if (rest == "unimodular_q") return ConjugationSpec::unimodular_q();
  if (rest == "unimodular_q_imaginary_h") return ConjugationSpec::unimodular_q_imaginary_h();
  Scalar i = -Scalar::i(), s = Scalar::s(), h = Scalar::h();
  for (const auto& w : words_of(rest)) {
    auto eq = w.find('=');
    if (eq == std::string::npos) fail(origin, line, "expected key=value in conjugation");
    std::string key = w.substr(0, eq);
    Scalar v;
    try {
      v = parse_scalar(w.substr(eq + 1));
    } catch (const std::exception& e) {
      fail(origin, line, e.what());
    }
    if (key == "i") i = v;
    else if (key == "s") s = v;
    else if (key == "h") h = v;
    else fail(origin, line, "unknown conjugation key '" + key + "'");
  }
  try {
    return ConjugationSpec(i, s, h);
  } catch (const std::exception& e) {
    fail(origin, line, e.what());
  }
}

StarStructure parse_star_text(const std::vector<Line>& lines, const Catalog& cat, const std::string& origin) {
  StarStructure st;
  std::vector<std::pair<std::size_t, std::string>> defs;
  for (const auto& l : lines) {
    if (l.keyword == "star-structure") st.name = l.rest;
    else if (l.keyword == "presentation") {
      if (!cat.has_presentation(l.rest)) fail(origin, l.number, "unknown presentation '" + l.rest + "'");
      st.presentation = cat.presentation(l.rest);
    } else if (l.keyword == "convention") {
      if (l.rest == "graded") st.convention = StarConvention::graded;
      else if (l.rest == "plain") st.convention = StarConvention::plain;
      else fail(origin, l.number, "convention must be graded or plain");
    } else if (l.keyword == "conjugation") st.conj = parse_conjugation(l.rest, origin, l.number);
    else if (l.keyword == "star") defs.emplace_back(l.number, l.rest);
    else fail(origin, l.number, "unknown directive '" + l.keyword + "'");
  }
  if (st.name.empty()) fail(origin, 1, "missing star-structure name");
  if (!st.presentation) fail(origin, 1, "missing presentation");
  const Presentation& p = *st.presentation;
  st.images.assign(p.size(), Element());
  std::vector<bool> seen(p.size(), false);
  for (const auto& [n, text] : defs) {
    auto [lhs, rhs] = parse_equation(text, origin, n);
    if (lhs.kind != Expr::Kind::symbol) fail(origin, n, "left side of a star image must be a generator");
    auto idx = p.index_of(lhs.symbol.text());
    if (!idx) fail(origin, n, "undeclared generator '" + lhs.symbol.text() + "'");
    try {
      st.images[std::size_t(*idx)] = p.normal_form(p.from_expr(rhs));
    } catch (const std::exception& e) {
      fail(origin, n, e.what());
    }
    seen[std::size_t(*idx)] = true;
  }
  for (std::size_t k = 0; k < p.size(); ++k)
    if (!seen[k]) fail(origin, 1, "no star image for generator '" + p.generators()[k].name + "'");
  return st;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

PresentationPtr parse_presentation_text(const std::string& text, const std::string& origin) {
  auto lines = split_lines(text);
  std::string name;
  struct GenDecl {
    Generator g;
    long order;
    std::size_t line;
  };
  std::vector<GenDecl> gens;
  std::vector<std::pair<std::size_t, std::string>> rules;
  for (const auto& l : lines) {
    if (l.keyword == "presentation") name = l.rest;
    else if (l.keyword == "gen") {
      auto w = words_of(l.rest);
      if (w.size() != 3 && w.size() != 5) fail(origin, l.number, "expected: gen NAME even|odd ORDER [weight W]");
      GenDecl d{{w[0], 0, 1}, 0, l.number};
      if (w[1] == "odd") d.g.parity = 1;
      else if (w[1] != "even") fail(origin, l.number, "parity must be even or odd");
      try {
        d.order = std::stol(w[2]);
        if (w.size() == 5) {
          if (w[3] != "weight") fail(origin, l.number, "expected 'weight'");
          d.g.weight = std::stoi(w[4]);
        }
      } catch (const std::logic_error&) {
        fail(origin, l.number, "bad number");
      }
      Symbol::from_text(d.g.name);
      gens.push_back(d);
    } else if (l.keyword == "rule") rules.emplace_back(l.number, l.rest);
    else fail(origin, l.number, "unknown directive '" + l.keyword + "'");
  }
  if (name.empty()) throw CatalogError(origin + ": missing presentation name");
  std::stable_sort(gens.begin(), gens.end(), [](const GenDecl& a, const GenDecl& b) { return a.order < b.order; });
  std::vector<Generator> gv;
  for (const auto& d : gens) {
    for (const auto& g : gv)
      if (g.name == d.g.name) fail(origin, d.line, "duplicate generator '" + g.name + "'");
    gv.push_back(d.g);
  }
  // a free presentation resolves symbols for the relations
  Presentation free(name, gv, {});
  std::vector<Element> rels;
  for (const auto& [n, text] : rules) {
    auto [lhs, rhs] = parse_equation(text, origin, n);
    try {
      rels.push_back(free.from_expr(lhs) - free.from_expr(rhs));
    } catch (const std::exception& e) {
      fail(origin, n, e.what());
    }
  }
  try {
    return std::make_shared<const Presentation>(name, gv, rels);
  } catch (const std::exception& e) {
    throw CatalogError(origin + ": " + e.what());
  }
}

std::string presentation_to_text(const Presentation& p) {
  std::string out = "presentation " + p.name() + "\n";
  for (std::size_t k = 0; k < p.size(); ++k) {
    const auto& g = p.generators()[k];
    out += "gen " + g.name + (g.parity ? " odd " : " even ") + std::to_string(k);
    if (g.weight != 1) out += " weight " + std::to_string(g.weight);
    out += "\n";
  }
  for (const auto& r : p.rules()) out += "rule " + p.format_word(r.lhs) + " = " + p.format(r.rhs) + "\n";
  return out;
}

std::filesystem::path Catalog::default_path() {
  if (const char* env = std::getenv("QSW_CATALOG"); env && *env) return env;
  return QSW_DEFAULT_CATALOG;
}

Catalog Catalog::load(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw CatalogError("catalog directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".qsw") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  Catalog cat;
  std::vector<std::pair<std::string, std::vector<Line>>> star_files;
  for (const auto& f : files) {
    std::string text = read_file(f);
    auto lines = split_lines(text);
    if (lines.empty()) continue;
    if (lines.front().keyword == "star-structure") star_files.emplace_back(f.string(), lines);
    else cat.add(parse_presentation_text(text, f.string()));
  }
  for (const auto& [origin, lines] : star_files) cat.add(parse_star_text(lines, cat, origin));
  return cat;
}

void Catalog::add(PresentationPtr p) { presentations_[p->name()] = std::move(p); }
void Catalog::add(StarStructure s) { stars_[s.name] = std::move(s); }

PresentationPtr Catalog::presentation(const std::string& name) const {
  auto it = presentations_.find(name);
  if (it == presentations_.end()) throw CatalogError("unknown presentation '" + name + "'");
  return it->second;
}

const StarStructure& Catalog::star(const std::string& name) const {
  auto it = stars_.find(name);
  if (it == stars_.end()) throw CatalogError("unknown star structure '" + name + "'");
  return it->second;
}

}  // namespace qsw

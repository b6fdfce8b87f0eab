#include "incgrade/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "incgrade/corpus.hpp"
#include "incgrade/errors.hpp"

namespace incgrade {

namespace {

template <class T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("malformed ") + what);
  }
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::vector<Pair> pairs_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of index pairs");
  std::vector<Pair> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw InputError(std::string(what) + " entries must be [lower, upper] index pairs");
    out.emplace_back(e[0].get<Index>(), e[1].get<Index>());
  }
  return out;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Json poset_to_json(const Poset& p) {
  Json covers = Json::array();
  for (const auto& [x, y] : p.covers()) covers.push_back({x, y});
  return Json{{"elements", p.labels()}, {"covers", covers}};
}

Poset poset_from_json(const Json& j) {
  auto labels = get_as<std::vector<std::string>>(require(j, "elements"), "poset elements");
  const bool has_covers = j.contains("covers"), has_relation = j.contains("relation");
  if (has_covers == has_relation) throw InputError("a poset needs exactly one of \"covers\" or \"relation\"");
  const auto pairs = pairs_from_json(has_covers ? j["covers"] : j["relation"], has_covers ? "covers" : "relation");
  return Poset::from_relation(std::move(labels), pairs);
}

Poset load_poset(std::string_view ref) {
  const std::string path(ref);
  if (std::filesystem::is_regular_file(path)) return poset_from_json(read_json_file(path));
  std::string name = path;
  if (name.size() > 5 && name.ends_with(".json")) name.resize(name.size() - 5);
  name = std::filesystem::path(name).filename().string();
  if (is_corpus_name(name)) return corpus_poset(name);
  throw InputError("'" + path + "' is neither a poset file nor a corpus poset");
}

PosetRef resolve_poset_ref(const Json& ref) {
  if (ref.is_string()) return make_poset_ref(load_poset(ref.get<std::string>()));
  if (ref.is_object()) return make_poset_ref(poset_from_json(ref));
  throw InputError("\"poset\" must be a poset object, a file path, or a corpus name");
}

Json entries_to_json(const IncidenceFunction& f) {
  Json entries = Json::array();
  for (const auto& [key, v] : f.entries()) entries.push_back({key.first, key.second, to_string(v)});
  return entries;
}

Json incidence_to_json(const IncidenceFunction& f) {
  return Json{{"poset", poset_to_json(f.poset())}, {"entries", entries_to_json(f)}};
}

IncidenceFunction entries_from_json(const Json& entries, const PosetRef& p) {
  if (!entries.is_array()) throw InputError("\"entries\" must be an array");
  IncidenceFunction f(p);
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw InputError("function entries must be [x, y, \"num/den\"]");
    const Index x = e[0].get<Index>(), y = e[1].get<Index>();
    if (x >= p->size() || y >= p->size()) throw InputError("function entry index out of range");
    const Rational v = e[2].is_string() ? parse_rational(e[2].get<std::string>())
                       : e[2].is_number_integer() ? Rational(e[2].get<long>())
                                                  : throw InputError("function values must be rational strings");
    if (sgn(v) != 0 && !p->leq(x, y))
      throw InputError("function entry at non-comparable pair (" + p->label(x) + "," + p->label(y) + ")");
    f.add(x, y, v);
  }
  return f;
}

IncidenceFunction incidence_from_json(const Json& j) {
  return entries_from_json(require(j, "entries"), resolve_poset_ref(require(j, "poset")));
}

Json morphism_to_json(const AlgebraMorphism& phi) {
  Json images = Json::array();
  for (const auto& [key, img] : phi.images())
    images.push_back(Json{{"pair", {key.first, key.second}}, {"entries", entries_to_json(img)}});
  return Json{{"poset", poset_to_json(phi.poset())}, {"images", images}};
}

AlgebraMorphism morphism_from_json(const Json& j) {
  const PosetRef p = resolve_poset_ref(require(j, "poset"));
  AlgebraMorphism phi(p);
  const Json& images = require(j, "images");
  if (!images.is_array()) throw InputError("\"images\" must be an array");
  for (const auto& item : images) {
    const auto pair = pairs_from_json(Json::array({require(item, "pair")}), "pair").front();
    if (pair.first >= p->size() || pair.second >= p->size() || !p->leq(pair.first, pair.second))
      throw InputError("morphism image given for a pair that is not a basis element");
    phi.set_image(pair.first, pair.second, entries_from_json(require(item, "entries"), p));
  }
  return phi;
}

Json group_to_json(const FiniteGroup& g) {
  try {
    if (group_from_spec(g.spec()) == g) return g.spec();
  } catch (const Error&) {
  }
  Json table = Json::array();
  for (GroupElement a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (GroupElement b = 0; b < g.order(); ++b) row.push_back(g.multiply(a, b));
    table.push_back(row);
  }
  return Json{{"name", g.spec()}, {"elements", g.names()}, {"table", table}};
}

GroupRef group_from_json_value(const Json& j) {
  if (j.is_string()) return make_group_ref(group_from_spec(j.get<std::string>()));
  if (j.is_object()) return make_group_ref(group_from_spec(j.dump()));
  throw InputError("\"group\" must be a spec string or a Cayley table object");
}

Json names_to_json(const FiniteGroup& g, std::span<const GroupElement> elements) {
  Json out = Json::array();
  for (GroupElement e : elements) out.push_back(g.name(e));
  return out;
}

Json grading_to_json(const GradingMap& theta) {
  return Json{{"group", group_to_json(theta.group())}, {"theta", names_to_json(theta.group(), theta.values())}};
}

GradingMap grading_from_json(const Json& j, const PosetRef& p) {
  const GroupRef g = group_from_json_value(require(j, "group"));
  std::vector<GroupElement> theta;
  for (const auto& name : get_as<std::vector<std::string>>(require(j, "theta"), "theta"))
    theta.push_back(g->parse_element(name));
  return GradingMap(p, g, std::move(theta));
}

Json polynomial_to_json(const MultilinearPolynomial& phi) {
  Json terms = Json::array();
  for (const auto& [perm, coeff] : phi.terms()) {
    Json one_based = Json::array();
    for (std::size_t i : perm) one_based.push_back(i + 1);
    terms.push_back(Json{{"perm", one_based}, {"coeff", to_string(coeff)}});
  }
  return Json{{"multidegree", names_to_json(phi.group(), phi.multidegree())}, {"terms", terms}};
}

MultilinearPolynomial polynomial_from_json(const Json& j, const GroupRef& g) {
  Multidegree md;
  for (const auto& name : get_as<std::vector<std::string>>(require(j, "multidegree"), "multidegree"))
    md.push_back(g->parse_element(name));
  MultilinearPolynomial phi(g, md);
  const Json& terms = require(j, "terms");
  if (!terms.is_array()) throw InputError("\"terms\" must be an array");
  for (const auto& t : terms) {
    Permutation perm;
    for (std::size_t i : get_as<std::vector<std::size_t>>(require(t, "perm"), "perm")) {
      if (i == 0) throw InputError("\"perm\" entries are 1-based");
      perm.push_back(i - 1);
    }
    const Json& c = require(t, "coeff");
    phi.add_term(perm, c.is_string() ? parse_rational(c.get<std::string>()) : Rational(get_as<long>(c, "coeff")));
  }
  return phi;
}

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (const auto& v : m.row(r)) row.push_back(to_string(v));
    rows.push_back(row);
  }
  return rows;
}

Json slice_to_json(const IdentitySlice& slice, const FiniteGroup& g) {
  Json monomials = Json::array();
  for (const auto& perm : lex_permutations(slice.multidegree.size())) {
    std::string word;
    for (std::size_t i : perm) word += "x" + std::to_string(i + 1);
    monomials.push_back(word);
  }
  return Json{{"multidegree", names_to_json(g, slice.multidegree)},
              {"dimension", slice.dimension()},
              {"monomials", monomials},
              {"basis", matrix_to_json(slice.basis)},
              {"evaluation_rank", slice.evaluation_rank},
              {"substitutions", slice.substitutions}};
}

}  // namespace incgrade

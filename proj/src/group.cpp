#include "incgrade/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include <json.hpp>

#include "incgrade/errors.hpp"

namespace incgrade {

FiniteGroup FiniteGroup::from_table(std::string spec, std::vector<std::string> names,
                                    std::vector<std::vector<GroupElement>> table) {
  const std::size_t m = names.size();
  if (m == 0) throw InvalidGroupError("group has no elements");
  {
    std::set<std::string> seen;
    for (const auto& n : names)
      if (!seen.insert(n).second) throw InvalidGroupError("duplicate element name '" + n + "'");
  }
  if (table.size() != m) throw InvalidGroupError("closure: Cayley table must have one row per element");
  FiniteGroup g;
  g.spec_ = std::move(spec);
  g.names_ = std::move(names);
  g.table_.reserve(m * m);
  for (const auto& row : table) {
    if (row.size() != m) throw InvalidGroupError("closure: Cayley table row has the wrong length");
    for (GroupElement v : row) {
      if (v >= m) throw InvalidGroupError("closure: product outside the group");
      g.table_.push_back(v);
    }
  }
  for (GroupElement a = 0; a < m; ++a)
    for (GroupElement b = 0; b < m; ++b)
      for (GroupElement c = 0; c < m; ++c)
        if (g.multiply(g.multiply(a, b), c) != g.multiply(a, g.multiply(b, c)))
          throw InvalidGroupError("associativity fails for (" + g.names_[a] + "," + g.names_[b] + "," +
                                  g.names_[c] + ")");
  std::optional<GroupElement> e;
  for (GroupElement c = 0; c < m && !e; ++c) {
    bool ok = true;
    for (GroupElement a = 0; a < m && ok; ++a) ok = g.multiply(c, a) == a && g.multiply(a, c) == a;
    if (ok) e = c;
  }
  if (!e) throw InvalidGroupError("identity: no two-sided identity element");
  g.identity_ = *e;
  g.inverse_.assign(m, m);
  for (GroupElement a = 0; a < m; ++a) {
    for (GroupElement b = 0; b < m; ++b)
      if (g.multiply(a, b) == *e && g.multiply(b, a) == *e) {
        g.inverse_[a] = b;
        break;
      }
    if (g.inverse_[a] == m) throw InvalidGroupError("inverses: '" + g.names_[a] + "' has no inverse");
  }
  return g;
}

std::optional<GroupElement> FiniteGroup::find(std::string_view name) const {
  for (GroupElement g = 0; g < names_.size(); ++g)
    if (names_[g] == name) return g;
  return std::nullopt;
}

GroupElement FiniteGroup::parse_element(std::string_view name) const {
  if (auto g = find(name)) return *g;
  throw InputError("'" + std::string(name) + "' is not an element of " + spec_);
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw InvalidGroupError("C0 is not a group");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k)
    names.push_back(k == 0 ? "1" : k == 1 ? "h" : "h^" + std::to_string(k));
  std::vector<std::vector<GroupElement>> table(n, std::vector<GroupElement>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return FiniteGroup::from_table("C" + std::to_string(n), std::move(names), std::move(table));
}

namespace {

std::string cycle_name(const std::vector<std::size_t>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "1" : out;
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0 || n > 4) throw InvalidGroupError("S<n> is supported for 1 <= n <= 4");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t m = perms.size();
  std::vector<std::string> names;
  for (const auto& q : perms) names.push_back(cycle_name(q));
  std::vector<std::vector<GroupElement>> table(m, std::vector<GroupElement>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = static_cast<GroupElement>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup::from_table("S" + std::to_string(n), std::move(names), std::move(table));
}

FiniteGroup direct_product(const std::vector<FiniteGroup>& factors) {
  if (factors.empty()) throw InvalidGroupError("empty direct product");
  std::size_t m = 1;
  for (const auto& f : factors) m *= f.order();
  auto digits = [&](std::size_t code) {
    std::vector<GroupElement> d(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      d[i] = code % factors[i].order();
      code /= factors[i].order();
    }
    return d;
  };
  auto encode = [&](const std::vector<GroupElement>& d) {
    std::size_t code = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) code = code * factors[i].order() + d[i];
    return code;
  };
  std::vector<std::string> names;
  std::string spec;
  for (std::size_t i = 0; i < factors.size(); ++i) spec += (i ? "x" : "") + factors[i].spec();
  for (std::size_t code = 0; code < m; ++code) {
    const auto d = digits(code);
    std::string name = "(";
    for (std::size_t i = 0; i < d.size(); ++i) name += (i ? "," : "") + factors[i].name(d[i]);
    names.push_back(name + ")");
  }
  std::vector<std::vector<GroupElement>> table(m, std::vector<GroupElement>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      auto da = digits(a);
      const auto db = digits(b);
      for (std::size_t i = 0; i < da.size(); ++i) da[i] = factors[i].multiply(da[i], db[i]);
      table[a][b] = encode(da);
    }
  return FiniteGroup::from_table(spec, std::move(names), std::move(table));
}

namespace {

FiniteGroup atom_from_spec(const std::string& s) {
  if (s.size() >= 2 && (s[0] == 'C' || s[0] == 'S') &&
      std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    const std::size_t n = std::stoul(s.substr(1));
    return s[0] == 'C' ? cyclic_group(n) : symmetric_group(n);
  }
  throw InvalidGroupError("unrecognised group spec '" + s + "' (expected C<n>, S<n>, AxB or a JSON table)");
}

FiniteGroup group_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidGroupError(std::string("group table is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("elements") || !j.contains("table"))
    throw InvalidGroupError("group table JSON needs \"elements\" and \"table\"");
  std::vector<std::string> names;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw InvalidGroupError("group element names must be strings");
    names.push_back(e.get<std::string>());
  }
  std::vector<std::vector<GroupElement>> table;
  for (const auto& row : j["table"]) {
    if (!row.is_array()) throw InvalidGroupError("closure: Cayley table rows must be arrays");
    std::vector<GroupElement> r;
    for (const auto& v : row) {
      if (v.is_number_unsigned()) {
        r.push_back(v.get<GroupElement>());
      } else if (v.is_string()) {
        auto it = std::find(names.begin(), names.end(), v.get<std::string>());
        if (it == names.end()) throw InvalidGroupError("closure: unknown element '" + v.get<std::string>() + "'");
        r.push_back(static_cast<GroupElement>(it - names.begin()));
      } else {
        throw InvalidGroupError("closure: table entries must be indices or names");
      }
    }
    table.push_back(std::move(r));
  }
  std::string spec = j.value("name", std::string("table"));
  return FiniteGroup::from_table(std::move(spec), std::move(names), std::move(table));
}

}  // namespace

FiniteGroup group_from_spec(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw InvalidGroupError("empty group spec");
  if (s.front() == '{') return group_from_json(s);
  std::vector<FiniteGroup> factors;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find('x', start);
    factors.push_back(atom_from_spec(trim(std::string_view(s).substr(start, pos - start))));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return factors.size() == 1 ? std::move(factors.front()) : direct_product(factors);
}

std::vector<std::string> split_top_level(std::string_view csv) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= csv.size(); ++i) {
    if (i == csv.size() || (csv[i] == ',' && depth == 0)) {
      out.push_back(trim(csv.substr(start, i - start)));
      start = i + 1;
    } else if (csv[i] == '(' || csv[i] == '[') {
      ++depth;
    } else if (csv[i] == ')' || csv[i] == ']') {
      --depth;
    }
  }
  if (out.size() == 1 && out.front().empty()) out.clear();
  return out;
}

}  // namespace incgrade

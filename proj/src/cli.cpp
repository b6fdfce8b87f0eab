#include "incgrade/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "incgrade/corpus.hpp"
#include "incgrade/errors.hpp"
#include "incgrade/random.hpp"

namespace incgrade {

Json RunReport::to_json() const {
  Json j{{"command", command}, {"inputs", inputs}, {"results", results}, {"version", version}};
  if (timing_ms) j["timing_ms"] = *timing_ms;
  return j;
}

RunReport RunReport::from_json(const Json& j) {
  RunReport r;
  try {
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.results = j.at("results");
    r.version = j.at("version").get<std::string>();
    if (j.contains("timing_ms")) r.timing_ms = j.at("timing_ms").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed run report: ") + e.what());
  }
  return r;
}

std::uint64_t enumeration_budget_from_env() {
  const char* v = std::getenv("INCGRADE_MAX_BUDGET");
  if (!v || !*v) return kDefaultEnumerationBudget;
  try {
    std::size_t used = 0;
    const unsigned long long b = std::stoull(v, &used);
    if (used != std::string(v).size() || b == 0) throw std::invalid_argument(v);
    return b;
  } catch (const std::exception&) {
    throw InputError(std::string("INCGRADE_MAX_BUDGET must be a positive integer, got '") + v + "'");
  }
}

namespace {

struct Options {
  std::string poset, group, theta, mu, multidegree, morphism;
  std::string format = "table";
  std::size_t max_degree = 3;
  bool max_degree_given = false;
  std::size_t cap = kDefaultDegreeCap;
  bool verify = false;
  bool timing = false;
  std::optional<std::uint64_t> seed;
};

struct Context {
  const Options& opts;
  RunReport& report;
  std::uint64_t budget;
};

using Handler = std::function<int(Context&)>;

// ---- input helpers ----

PosetRef need_poset(Context& c) {
  if (c.opts.poset.empty()) throw InputError("--poset is required");
  c.report.inputs["poset"] = c.opts.poset;
  return make_poset_ref(load_poset(c.opts.poset));
}

GroupRef need_group(Context& c) {
  if (c.opts.group.empty()) throw InputError("--group is required");
  c.report.inputs["group"] = c.opts.group;
  std::string spec = c.opts.group;
  if (std::filesystem::is_regular_file(spec)) {
    std::ifstream in(spec);
    std::stringstream ss;
    ss << in.rdbuf();
    spec = ss.str();
  }
  return make_group_ref(group_from_spec(spec));
}

GradingMap need_grading(Context& c, const PosetRef& p, const GroupRef& g, const std::string& csv, const char* flag) {
  if (csv.empty()) throw InputError(std::string(flag) + " is required");
  c.report.inputs[std::string(flag).substr(2)] = csv;
  return GradingMap::parse(p, g, csv);
}

Multidegree parse_multidegree(const FiniteGroup& g, const std::string& csv) {
  Multidegree md;
  for (const auto& name : split_top_level(csv)) md.push_back(g.parse_element(name));
  if (md.empty()) throw InputError("--multidegree must name at least one group element");
  return md;
}

Json labels_of(const Poset& p, std::span<const Index> indices) {
  Json out = Json::array();
  for (Index i : indices) out.push_back(p.label(i));
  return out;
}

Json pair_labels(const Poset& p, const Pair& pr) { return Json::array({p.label(pr.first), p.label(pr.second)}); }

Json labelled_entries(const IncidenceFunction& f) {
  Json out = Json::array();
  for (const auto& [key, v] : f.entries())
    out.push_back(Json::array({f.poset().label(key.first), f.poset().label(key.second), to_string(v)}));
  return out;
}

Json chains_json(const Poset& p, const std::vector<Chain>& chains) {
  Json out = Json::array();
  for (const auto& ch : chains) out.push_back(labels_of(p, ch.indices));
  return out;
}

Json automorphism_json(const Poset& p, const PosetAutomorphism& s) { return labels_of(p, s.images()); }

// ---- poset commands ----

int cmd_validate(Context& c) {
  const PosetRef p = need_poset(c);
  Json covers = Json::array();
  for (const auto& pr : p->covers()) covers.push_back(pair_labels(*p, pr));
  c.report.results = {{"valid", true},
                      {"size", p->size()},
                      {"elements", p->labels()},
                      {"covers", covers},
                      {"comparable_pairs", p->comparable_pairs().size()}};
  return kExitOk;
}

int cmd_chains(Context& c) {
  const PosetRef p = need_poset(c);
  const auto chains = maximal_chains(*p);
  c.report.results = {{"chains", chains_json(*p, chains)}, {"count", chains.size()}};
  return kExitOk;
}

int cmd_components(Context& c) {
  const PosetRef p = need_poset(c);
  Json comps = Json::array();
  const auto components = connected_components(*p);
  for (const auto& comp : components) comps.push_back(labels_of(*p, comp));
  c.report.results = {{"components", comps}, {"count", components.size()}};
  return kExitOk;
}

int cmd_bound(Context& c) {
  const PosetRef p = need_poset(c);
  c.report.results = {{"bound", bound(*p)}};
  return kExitOk;
}

int cmd_aut(Context& c) {
  const PosetRef p = need_poset(c);
  Json auts = Json::array();
  const auto all = automorphisms(*p);
  for (const auto& s : all) auts.push_back(automorphism_json(*p, s));
  c.report.results = {{"automorphisms", auts}, {"order", all.size()}};
  return kExitOk;
}

int cmd_chain_transitive(Context& c) {
  const PosetRef p = need_poset(c);
  const auto t = is_chain_transitive(*p);
  c.report.results = {{"transitive", t.transitive},
                      {"chains", chains_json(*p, t.chains)},
                      {"automorphism_order", t.automorphisms.size()},
                      {"witness", t.transitive ? Json(t.witness) : Json(nullptr)},
                      {"unreachable", t.unreachable ? Json::array({t.unreachable->first, t.unreachable->second})
                                                    : Json(nullptr)}};
  return kExitOk;
}

// ---- algebra commands ----

int cmd_mobius(Context& c) {
  const PosetRef p = need_poset(c);
  const IncidenceFunction z = zeta(p);
  const IncidenceFunction mu = invert(z);
  const bool verified = z * mu == delta(p) && mu * z == delta(p);
  c.report.results = {{"mobius", labelled_entries(mu)}, {"verified", verified}};
  return verified ? kExitOk : kExitAssertionFailed;
}

int cmd_decompose(Context& c) {
  std::optional<AlgebraMorphism> phi;
  std::optional<PosetAutomorphism> planted;
  if (!c.opts.morphism.empty()) {
    c.report.inputs["morphism"] = c.opts.morphism;
    phi = morphism_from_json(read_json_file(c.opts.morphism));
  } else if (c.opts.seed) {
    const PosetRef p = need_poset(c);
    c.report.inputs["seed"] = *c.opts.seed;
    Rng rng(*c.opts.seed);
    planted = random_automorphism(*p, rng);
    const auto r = random_invertible(p, rng);
    const auto s = random_multiplicative(p, rng);
    phi = compose(inner_auto(r), compose(mult_auto(s), induced_auto(p, *planted)));
  } else {
    throw InputError("decompose needs --morphism FILE, or --poset with --seed for a random composite");
  }
  const Decomposition d = decompose_automorphism(*phi);
  const Poset& p = phi->poset();
  const bool verified = recompose(d) == *phi && (!planted || *planted == d.sigma);
  c.report.results = {{"sigma", automorphism_json(p, d.sigma)},
                      {"r", labelled_entries(d.r)},
                      {"s", labelled_entries(d.s)},
                      {"verified", verified}};
  if (planted) c.report.results["planted_sigma"] = automorphism_json(p, *planted);
  return verified ? kExitOk : kExitAssertionFailed;
}

// ---- grading commands ----

int cmd_grade(Context& c) {
  const PosetRef p = need_poset(c);
  const GroupRef g = need_group(c);
  const GradingMap theta = need_grading(c, p, g, c.opts.theta, "--theta");
  Json pairs = Json::array();
  for (const auto& pr : p->comparable_pairs())
    pairs.push_back({{"pair", pair_labels(*p, pr)}, {"degree", g->name(grade_of_pair(theta, pr.first, pr.second))}});
  Json components = Json::array();
  for (const auto& comp : homogeneous_components(theta)) {
    if (comp.basis.empty()) continue;
    Json basis = Json::array();
    for (const auto& pr : comp.basis) basis.push_back(pair_labels(*p, pr));
    components.push_back({{"degree", g->name(comp.degree)}, {"basis", basis}});
  }
  const auto sup = support(theta);
  c.report.results = {{"theta", names_to_json(*g, theta.values())},
                      {"support", names_to_json(*g, sup)},
                      {"pairs", pairs},
                      {"components", components}};
  return kExitOk;
}

int cmd_count(Context& c) {
  const PosetRef p = need_poset(c);
  const GroupRef g = need_group(c);
  c.report.inputs["verify"] = c.opts.verify;
  const CountReport r = count_distinct_gradings(*p, *g, c.opts.verify, c.budget);
  c.report.results = {{"n", p->size()},
                      {"k", connected_components(*p).size()},
                      {"group_order", g->order()},
                      {"formula", r.formula}};
  if (c.opts.verify) {
    c.report.results["verified"] = r.verified;
    c.report.results["orbit_count"] = r.orbit_count;
    c.report.results["signature_count"] = r.signature_count;
    c.report.results["maps_enumerated"] = r.maps_enumerated;
  }
  return !c.opts.verify || r.verified ? kExitOk : kExitAssertionFailed;
}

int cmd_classify(Context& c) {
  const PosetRef p = need_poset(c);
  const GroupRef g = need_group(c);
  const Classification cl = classify_gradings(p, g, c.budget);
  Json reps = Json::array();
  for (const auto& r : cl.representatives) reps.push_back(names_to_json(*g, r.values()));
  c.report.results = {{"classes", cl.representatives.size()},
                      {"representatives", reps},
                      {"class_sizes", cl.class_sizes},
                      {"maps_enumerated", cl.maps_enumerated},
                      {"burnside", cl.burnside_count},
                      {"burnside_agrees", cl.burnside_agrees}};
  return cl.burnside_agrees ? kExitOk : kExitAssertionFailed;
}

int cmd_equiv(Context& c) {
  const PosetRef p = need_poset(c);
  const GroupRef g = need_group(c);
  const GradingMap theta = need_grading(c, p, g, c.opts.theta, "--theta");
  const GradingMap mu = need_grading(c, p, g, c.opts.mu, "--mu");
  const auto w = equivalent(theta, mu);
  Json witness = nullptr;
  if (w) witness = {{"shifts", names_to_json(*g, w->shifts)}, {"sigma", automorphism_json(*p, w->sigma)}};
  c.report.results = {{"equivalent", w.has_value()}, {"witness", witness}};
  return kExitOk;
}

// ---- identity commands ----

std::size_t degree_limit(Context& c) {
  c.report.inputs["max_degree"] = c.opts.max_degree;
  return c.opts.max_degree;
}

int cmd_slice(Context& c) {
  const PosetRef p = need_poset(c);
  const GroupRef g = need_group(c);
  const GradingMap theta = need_grading(c, p, g, c.opts.theta, "--theta");
  if (c.opts.multidegree.empty()) throw InputError("--multidegree is required");
  c.report.inputs["multidegree"] = c.opts.multidegree;
  const IdentitySlice slice = identity_slice(theta, parse_multidegree(*g, c.opts.multidegree), c.opts.cap);
  c.report.results = slice_to_json(slice, *g);
  return kExitOk;
}

int cmd_compare(Context& c) {
  const PosetRef p = need_poset(c);
  const GroupRef g = need_group(c);
  const GradingMap theta = need_grading(c, p, g, c.opts.theta, "--theta");
  const GradingMap mu = need_grading(c, p, g, c.opts.mu, "--mu");
  const SliceComparison cmp = slices_equal_upto(theta, mu, degree_limit(c), c.opts.cap);
  c.report.results = {{"equal", cmp.equal},
                      {"first_difference", cmp.first_difference ? names_to_json(*g, *cmp.first_difference)
                                                                : Json(nullptr)},
                      {"multidegrees_compared", cmp.multidegrees_compared}};
  return kExitOk;
}

int cmd_verify_reduction(Context& c) {
  const PosetRef p = need_poset(c);
  const GroupRef g = need_group(c);
  const GradingMap theta = need_grading(c, p, g, c.opts.theta, "--theta");
  std::vector<Multidegree> cases;
  if (!c.opts.multidegree.empty()) {
    c.report.inputs["multidegree"] = c.opts.multidegree;
    cases.push_back(parse_multidegree(*g, c.opts.multidegree));
  } else {
    std::set<GroupElement> letters{g->identity()};
    for (GroupElement e : support(theta)) letters.insert(e);
    const std::vector<GroupElement> alphabet(letters.begin(), letters.end());
    cases = multidegrees_over(alphabet, degree_limit(c));
  }
  bool all = true;
  Json rows = Json::array();
  for (const auto& md : cases) {
    const ChainReductionReport r = verify_chain_reduction(theta, md, c.opts.cap);
    all = all && r.holds && r.contained_in_chains;
    rows.push_back({{"multidegree", names_to_json(*g, md)},
                    {"holds", r.holds},
                    {"contained_in_chains", r.contained_in_chains},
                    {"whole_dimension", r.whole_dimension},
                    {"intersection_dimension", r.intersection_dimension},
                    {"chain_dimensions", r.chain_dimensions}});
  }
  c.report.results = {{"holds", all}, {"cases", rows}};
  return all ? kExitOk : kExitAssertionFailed;
}

int cmd_monomials(Context& c) {
  const PosetRef p = need_poset(c);
  const GroupRef g = need_group(c);
  const GradingMap theta = need_grading(c, p, g, c.opts.theta, "--theta");
  Json ids = Json::array();
  const auto found = monomial_identities(theta, degree_limit(c), c.opts.cap);
  for (const auto& md : found) ids.push_back(names_to_json(*g, md));
  c.report.results = {{"identities", ids}, {"count", found.size()}};
  return kExitOk;
}

int cmd_transitivity(Context& c) {
  const PosetRef p = need_poset(c);
  const GroupRef g = need_group(c);
  const std::size_t d = c.opts.max_degree_given ? c.opts.max_degree : bound(*p);
  c.report.inputs["max_degree"] = d;
  const TransitivityCheckReport r = chain_transitivity_identity_check(p, g, d, c.budget, c.opts.cap);
  Json findings = Json::array();
  for (const auto& u : r.unseparated)
    findings.push_back({{"first", names_to_json(*g, r.representatives[u.first].values())},
                        {"second", names_to_json(*g, r.representatives[u.second].values())},
                        {"separated_by_slices", u.separated_by_slices},
                        {"slice_difference", u.slice_difference ? names_to_json(*g, *u.slice_difference)
                                                                : Json(nullptr)}});
  c.report.results = {{"chain_transitive", r.chain_transitive},
                      {"max_degree", r.max_degree},
                      {"classes", r.representatives.size()},
                      {"pairs_checked", r.pairs_checked},
                      {"separated_by_monomials", r.separated_by_monomials},
                      {"unseparated_by_monomials", findings},
                      {"counterexamples", r.counterexamples()}};
  return r.counterexamples() == 0 ? kExitOk : kExitAssertionFailed;
}

// ---- output ----

std::string compact(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render_table(const RunReport& r, std::ostream& out) {
  const Json& res = r.results;
  if (r.command == "equiv") {
    if (res["equivalent"].get<bool>())
      out << "equivalent: shifts " << compact(res["witness"]["shifts"]) << ", sigma "
          << compact(res["witness"]["sigma"]) << "\n";
    else
      out << "not equivalent\n";
    return;
  }
  if (r.command == "chains") {
    out << res["count"].get<std::size_t>() << " maximal chain(s)\n";
    for (const auto& ch : res["chains"]) {
      std::string line;
      for (const auto& l : ch) line += (line.empty() ? "" : " < ") + l.get<std::string>();
      out << "  " << line << "\n";
    }
    return;
  }
  std::size_t width = 0;
  for (const auto& [key, v] : res.items()) width = std::max(width, key.size());
  for (const auto& [key, v] : res.items()) {
    out << key << std::string(width - key.size() + 2, ' ');
    if (v.is_array() && !v.empty() && v.front().is_array() && v.size() > 1) {
      out << "\n";
      for (const auto& row : v) out << "  " << compact(row) << "\n";
    } else {
      out << compact(v) << "\n";
    }
  }
}

const std::map<std::string, std::pair<Handler, std::string>>& commands() {
  static const std::map<std::string, std::pair<Handler, std::string>> table = {
      {"validate", {cmd_validate, "Validate a poset file and print its Hasse diagram"}},
      {"chains", {cmd_chains, "List the maximal chains"}},
      {"components", {cmd_components, "List the connected components"}},
      {"bound", {cmd_bound, "Length of a longest chain"}},
      {"aut", {cmd_aut, "List the poset automorphisms"}},
      {"chain-transitive", {cmd_chain_transitive, "Does Aut(P) act transitively on the maximal chains?"}},
      {"mobius", {cmd_mobius, "Invert zeta in the incidence algebra"}},
      {"decompose", {cmd_decompose, "Factor an algebra automorphism as inner * multiplicative * induced"}},
      {"grade", {cmd_grade, "Degrees and homogeneous components of an elementary grading"}},
      {"count", {cmd_count, "Number of distinct elementary gradings"}},
      {"classify", {cmd_classify, "Representatives of the inequivalent elementary gradings"}},
      {"equiv", {cmd_equiv, "Decide whether two grading maps give isomorphic graded algebras"}},
      {"slice", {cmd_slice, "Multilinear graded identities of one multidegree"}},
      {"compare-identities", {cmd_compare, "Compare identity slices of two gradings up to a degree"}},
      {"verify-reduction", {cmd_verify_reduction, "Check identities against the intersection over maximal chains"}},
      {"monomials", {cmd_monomials, "Monomial graded identities up to a degree"}},
      {"transitivity-check", {cmd_transitivity, "Check that inequivalent gradings have different identities"}},
  };
  return table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Elementary group gradings on incidence algebras of finite posets", "incgrade"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  for (const auto& [name, entry] : commands()) {
    CLI::App* sub = app.add_subcommand(name, entry.second);
    sub->add_option("--poset", opts.poset, "Poset JSON file or corpus name");
    sub->add_option("--group", opts.group, "Group spec (C3, S3, C2xC2) or Cayley table JSON");
    sub->add_option("--theta", opts.theta, "Grading map as comma-separated group elements");
    sub->add_option("--mu", opts.mu, "Second grading map");
    sub->add_option("--multidegree", opts.multidegree, "Comma-separated degrees of x1..xm");
    sub->add_option("--morphism", opts.morphism, "Algebra morphism JSON file");
    sub->add_option("--max-degree", opts.max_degree, "Largest identity degree to examine")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cap", opts.cap, "Hard limit on identity degree")->check(CLI::PositiveNumber);
    sub->add_flag("--verify", opts.verify, "Cross-check by brute-force enumeration");
    sub->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--seed", opts.seed, "Seed for randomized commands");
    sub->add_flag("--timing", opts.timing, "Include wall-clock time in the report");
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  opts.max_degree_given = sub->count("--max-degree") > 0;

  RunReport report;
  report.command = name;
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    Context ctx{opts, report, enumeration_budget_from_env()};
    code = commands().at(name).first(ctx);
  } catch (const Error& e) {
    err << "incgrade " << name << ": " << e.what() << "\n";
    return kExitInputError;
  }
  if (opts.timing)
    report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (opts.format == "json")
    out << report.to_json().dump(2) << "\n";
  else
    render_table(report, out);
  return code;
}

}  // namespace incgrade

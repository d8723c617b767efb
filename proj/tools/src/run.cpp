#include "wonderful_cli/run.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "wonderful/divergence.hpp"
#include "wonderful/error.hpp"
#include "wonderful/graph_io.hpp"
#include "wonderful/hodge.hpp"
#include "wonderful/json.hpp"
#include "wonderful/kclass.hpp"
#include "wonderful/strata.hpp"

namespace wonderful::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, Command>& command_table() {
  static const std::map<std::string, Command> table = {
      {"validate", Command::Validate},     {"building-set", Command::BuildingSet},
      {"nests", Command::Nests},           {"class", Command::Class},
      {"conf-class", Command::ConfClass},  {"c-class", Command::CClass},
      {"hodge", Command::Hodge},           {"euler", Command::Euler},
      {"divergence", Command::Divergence}, {"strata", Command::Strata},
      {"identities", Command::Identities},
  };
  return table;
}

std::string command_name(Command c) {
  for (const auto& [name, cmd] : command_table()) {
    if (cmd == c) return name;
  }
  return "unknown";
}

enum class TargetKindCli { Symbolic, Projective, Affine, Custom };

struct CliTarget {
  TargetKindCli kind = TargetKindCli::Symbolic;
  int dim = 0;
  std::string name;
  HodgePolynomial custom;
};

CliTarget parse_target(const std::string& spec, int d) {
  CliTarget t;
  t.name = spec;
  if (spec == "symbolic") return t;
  if (spec.rfind("custom:", 0) == 0) {
    const std::string path = spec.substr(7);
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read target file '" + path + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("invalid target JSON: ") + e.what());
    }
    t.kind = TargetKindCli::Custom;
    t.custom = hodge_from_json(j);
    return t;
  }
  if (spec.size() >= 2 && (spec[0] == 'P' || spec[0] == 'A')) {
    t.kind = spec[0] == 'P' ? TargetKindCli::Projective : TargetKindCli::Affine;
    const std::string rest = spec.substr(1);
    if (rest == "d") {
      t.dim = d;
    } else {
      try {
        std::size_t used = 0;
        t.dim = std::stoi(rest, &used);
        if (used != rest.size() || t.dim < 0) throw std::invalid_argument(rest);
      } catch (const std::exception&) {
        throw UsageError("unknown target '" + spec + "'");
      }
    }
    t.name = std::string(1, spec[0]) + std::to_string(t.dim);
    return t;
  }
  throw UsageError("unknown target '" + spec + "' (expected symbolic, Pd, Ad or custom:<path>)");
}

HodgePolynomial hodge_of(const CliTarget& t, int d) {
  switch (t.kind) {
    case TargetKindCli::Projective: return hodge_projective(t.dim);
    case TargetKindCli::Affine: return hodge_affine(t.dim);
    case TargetKindCli::Custom: return t.custom;
    case TargetKindCli::Symbolic: break;
  }
  return hodge_projective(d);
}

std::string set_text(const Graph& g, VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int label : g.to_labels(s)) {
    if (!first) out += ",";
    out += std::to_string(label);
    first = false;
  }
  return out + "}";
}

void write_json(std::ostream& out, json body) {
  body["schema"] = kSchemaVersion;
  out << body.dump(2) << "\n";
}

class Runner {
 public:
  Runner(const RunConfig& config, std::ostream& out) : config_(config), out_(out) {
    options_.budget = config.budget;
  }

  void execute() {
    check_combinations();
    loaded_ = load_graph(config_.graph_source);
    switch (config_.command) {
      case Command::Validate: return validate();
      case Command::BuildingSet: return building();
      case Command::Nests: return nests();
      case Command::Class: return klass();
      case Command::ConfClass: return conf();
      case Command::CClass: return cclass();
      case Command::Hodge: return hodge(false);
      case Command::Euler: return hodge(true);
      case Command::Divergence: return divergence();
      case Command::Strata: return strata();
      case Command::Identities: return identities();
    }
  }

 private:
  const Graph& g() const { return loaded_.graph; }
  bool json_mode() const { return config_.format == Format::Json; }

  void check_combinations() {
    if (config_.d < 1) throw UsageError("--dim must be at least 1");
    if (config_.format == Format::Dot && config_.command != Command::Strata) {
      throw UsageError("dot output is only available for strata");
    }
    const bool custom = config_.target.rfind("custom:", 0) == 0;
    if (custom && config_.command != Command::Hodge && config_.command != Command::Euler) {
      throw UsageError("custom targets are only valid for hodge and euler");
    }
    target_ = parse_target(config_.target, config_.d);
  }

  json header() const {
    json h = {{"command", command_name(config_.command)}, {"d", config_.d}, {"graph", to_json(g())}};
    if (loaded_.potentials) h["potentials"] = *loaded_.potentials;
    return h;
  }

  void text_header() const {
    out_ << "command: " << command_name(config_.command) << "\n";
    out_ << "graph: |V| = " << g().vertex_count() << ", |E| = " << g().edge_count() << "\n";
    out_ << "d = " << config_.d << "\n";
  }

  KPolynomial specialize(const KPolynomial& p) const {
    switch (target_.kind) {
      case TargetKindCli::Projective:
        return specialize_target(p, Target{TargetKind::Projective, target_.dim});
      case TargetKindCli::Affine:
        return specialize_target(p, Target{TargetKind::Affine, target_.dim});
      default:
        return p;
    }
  }

  void validate() {
    const ComponentStats stats = component_stats(g());
    std::vector<VertexSet> blocks;
    VertexSet cuts;
    if (g().edge_count() > 0) {
      BlockDecomposition bd = block_decomposition(g());
      for (const auto& b : bd.blocks) blocks.push_back(b.vertices());
      cuts = bd.cut_vertices;
    }
    const bool biconnected = g().edge_count() > 0 && is_biconnected(SubgraphRef::whole(g()));
    if (json_mode()) {
      json j = header();
      json bl = json::array();
      for (VertexSet b : blocks) bl.push_back(vertex_set_json(g(), b));
      j["b0"] = stats.b0;
      j["b1"] = stats.b1;
      j["biconnected"] = biconnected;
      j["blocks"] = std::move(bl);
      j["cut_vertices"] = vertex_set_json(g(), cuts);
      return write_json(out_, std::move(j));
    }
    text_header();
    out_ << "valid: yes\n";
    out_ << "b0 = " << stats.b0 << ", b1 = " << stats.b1 << "\n";
    out_ << "biconnected: " << (biconnected ? "yes" : "no") << "\n";
    out_ << "blocks:";
    for (VertexSet b : blocks) out_ << " " << set_text(g(), b);
    out_ << "\ncut vertices: " << set_text(g(), cuts) << "\n";
  }

  void building() {
    const BuildingSet b = building_set(g());
    if (json_mode()) {
      json j = header();
      json el = json::array();
      for (VertexSet s : b.elements()) el.push_back(vertex_set_json(g(), s));
      j["count"] = b.size();
      j["elements"] = std::move(el);
      return write_json(out_, std::move(j));
    }
    text_header();
    out_ << "building set: " << b.size() << " elements\n";
    for (VertexSet s : b.elements()) out_ << "  " << set_text(g(), s) << "\n";
  }

  void nests() {
    const BuildingSet b = building_set(g());
    const NestEnumeration e = enumerate_nests(b, options_);
    if (json_mode()) {
      json j = header();
      json list = json::array();
      for (const Nest& n : e.nests) list.push_back(nest_json(g(), n));
      j["count"] = e.nests.size();
      j["nests"] = std::move(list);
      if (config_.literal_prop3) j["literal_pairwise_count"] = e.pairwise_family_count;
      return write_json(out_, std::move(j));
    }
    text_header();
    out_ << "nests: " << e.nests.size() << "\n";
    for (const Nest& n : e.nests) out_ << "  " << nest_label(g(), n) << "\n";
    if (config_.literal_prop3) {
      out_ << "literal pairwise criterion (diagnostic): " << e.pairwise_family_count
           << " families\n";
    }
  }

  void klass() {
    const ClassReport r = wonderful_class(g(), config_.d, options_);
    KPolynomial value = r.wonderful_class;
    if (target_.kind == TargetKindCli::Projective || target_.kind == TargetKindCli::Affine) {
      value = specialize_target(r, Target{target_.kind == TargetKindCli::Projective
                                              ? TargetKind::Projective
                                              : TargetKind::Affine,
                                          target_.dim});
    }
    if (json_mode()) {
      json j = header();
      json terms = json::array();
      for (const NestTerm& t : r.per_nest_terms) {
        terms.push_back({{"nest", nest_json(g(), t.nest)}, {"term", to_json(t.term)}});
      }
      j["target"] = target_.name;
      j["class"] = to_json(value);
      j["symbolic_class"] = to_json(r.wonderful_class);
      j["conf_class"] = to_json(r.conf_class);
      j["per_nest_terms"] = std::move(terms);
      return write_json(out_, std::move(j));
    }
    text_header();
    out_ << "target: " << target_.name << "\n";
    out_ << "class: " << value.to_string() << "\n";
    if (target_.kind != TargetKindCli::Symbolic) {
      out_ << "symbolic class: " << r.wonderful_class.to_string() << "\n";
    }
    out_ << "conf class: " << r.conf_class.to_string() << "\n";
    out_ << "per-nest terms (" << r.per_nest_terms.size() << "):\n";
    for (const NestTerm& t : r.per_nest_terms) {
      out_ << "  " << nest_label(g(), t.nest) << ": " << t.term.to_string() << "\n";
    }
  }

  void conf() {
    const KPolynomial c = conf_class(g(), options_);
    const KPolynomial value = specialize(c);
    if (json_mode()) {
      json j = header();
      j["target"] = target_.name;
      j["class"] = to_json(value);
      return write_json(out_, std::move(j));
    }
    text_header();
    out_ << "target: " << target_.name << "\n";
    out_ << "conf class: " << value.to_string() << "\n";
  }

  void cclass() {
    const KPolynomial c = c_class(g(), config_.d, options_);
    if (json_mode()) {
      json j = header();
      j["class"] = to_json(c);
      return write_json(out_, std::move(j));
    }
    text_header();
    out_ << "c class: " << c.to_string() << "\n";
  }

  void hodge(bool euler_only) {
    const HodgePolynomial eX = hodge_of(target_, config_.d);
    const std::string name = target_.kind == TargetKindCli::Symbolic
                                 ? "P" + std::to_string(config_.d)
                                 : target_.name;
    const HodgePolynomial h = wonderful_hodge(g(), config_.d, eX, options_);
    const HodgePolynomial conf_h = realize_hodge(conf_class(g(), options_), eX);
    if (json_mode()) {
      json j = header();
      j["target"] = name;
      j["target_hodge"] = to_json(eX);
      if (!euler_only) {
        j["hodge"] = to_json(h);
        j["conf_hodge"] = to_json(conf_h);
      }
      j["euler"] = euler_characteristic(h).str();
      j["conf_euler"] = euler_characteristic(conf_h).str();
      return write_json(out_, std::move(j));
    }
    text_header();
    out_ << "target: " << name << " (e = " << eX.to_string() << ")\n";
    if (!euler_only) {
      out_ << "hodge: " << h.to_string() << "\n";
      out_ << "conf hodge: " << conf_h.to_string() << "\n";
    }
    out_ << "euler: " << euler_characteristic(h).str() << "\n";
    out_ << "conf euler: " << euler_characteristic(conf_h).str() << "\n";
  }

  void divergence() {
    const DivergenceReport r = classify_divergence(g(), config_.d);
    const PoleProfile p = pole_orders(g(), config_.d);
    const ResidueProfile res = residue_profile(g(), config_.d);
    if (json_mode()) {
      json j = header();
      j["divergence"] = to_json(g(), r);
      j["pole_orders"] = to_json(g(), p);
      j["residue"] = to_json(g(), res);
      return write_json(out_, std::move(j));
    }
    text_header();
    out_ << "verdict: " << verdict_name(r.verdict) << "\n";
    out_ << "primitive: " << (r.primitive ? "true" : "false") << "\n";
    out_ << "superficial degree: " << r.superficial_degree << "\n";
    out_ << "propagator exponent: " << r.propagator_exponent.num;
    if (!r.propagator_exponent.is_integer()) out_ << "/" << r.propagator_exponent.den;
    out_ << "\n";
    if (r.has_worse_subdivergence) out_ << "worse subdivergence: yes\n";
    out_ << "divergent subgraphs:";
    for (VertexSet s : r.divergent_subgraphs) out_ << " " << set_text(g(), s);
    out_ << "\ndivergent building-set elements:";
    for (VertexSet s : r.divergent_building_elements) out_ << " " << set_text(g(), s);
    out_ << "\npole orders:\n";
    for (const PoleEntry& e : p.entries) {
      out_ << "  " << set_text(g(), e.element) << ": " << e.order;
      if (e.is_pole()) {
        out_ << " (pole)\n";
      } else {
        out_ << " (regular, zero of order " << e.zero_order() << ")\n";
      }
    }
    out_ << "log elements:";
    for (VertexSet s : res.log_elements) out_ << " " << set_text(g(), s);
    out_ << "\nlog elements form a nest: " << (res.log_elements_form_nest ? "yes" : "no") << "\n";
    if (res.form_degree) out_ << "residue form degree: " << *res.form_degree << "\n";
    for (const FiltrationEntry& f : res.filtrations) {
      out_ << "hodge filtration " << set_text(g(), f.element) << ": order " << f.pole_order
           << ", index (" << f.index.first << ", " << f.index.second << ")\n";
    }
    if (loaded_.potentials) out_ << "potentials: " << loaded_.potentials->dump() << "\n";
  }

  void strata() {
    const Stratification s = stratification(g(), config_.d, options_);
    const DimensionAudit audit = dimension_audit(g(), config_.d, options_);
    if (config_.format == Format::Dot) {
      out_ << "// d = " << config_.d << "\n" << to_dot(g(), s);
      return;
    }
    if (json_mode()) {
      json j = header();
      j["stratification"] = to_json(g(), s);
      j["dimension_audit_passed"] = audit.all_passed();
      return write_json(out_, std::move(j));
    }
    text_header();
    out_ << "strata: " << s.strata.size() << "\n";
    for (std::size_t i = 0; i < s.strata.size(); ++i) {
      const StratumDescriptor& st = s.strata[i];
      out_ << "  [" << i << "] " << stratum_label(g(), st) << ": dim " << st.total_dim
           << " = base " << st.base_dim;
      for (const FiberDescriptor& f : st.fibers) out_ << " + " << f.screen_space_dim;
      out_ << "\n";
    }
    out_ << "covers:";
    for (auto [a, b] : s.poset.covers) out_ << " " << a << "->" << b;
    out_ << "\ndimension audit: " << (audit.all_passed() ? "pass" : "FAIL") << "\n";
  }

  template <class Poly>
  void identity_lines(const IdentityReport<Poly>& r, const char* prefix) {
    for (const auto& c : r.checks) {
      if (!c.required && !config_.literal_lemma14) continue;
      out_ << "  " << prefix << c.identity << " [" << variant_label(c.variant) << "] " << c.scope
           << ": " << (c.passed() ? "pass" : "FAIL");
      if (!c.passed()) out_ << " (rhs - lhs = " << c.discrepancy().to_string() << ")";
      out_ << "\n";
    }
  }

  static std::string variant_label(IdentityVariant v) {
    switch (v) {
      case IdentityVariant::SupportIndexed: return "corrected (support-indexed)";
      case IdentityVariant::NestIndexed: return "literal (paper)";
      case IdentityVariant::Exact: break;
    }
    return "exact";
  }

  template <class Poly>
  json identity_json(IdentityReport<Poly> r) {
    if (!config_.literal_lemma14) {
      std::erase_if(r.checks, [](const auto& c) { return !c.required; });
    }
    json j = to_json(g(), r);
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
      j["checks"][i]["label"] = variant_label(r.checks[i].variant);
    }
    return j;
  }

  void identities() {
    const IdentityReport<KPolynomial> k = verify_identities(g(), config_.d, options_);
    std::optional<IdentityReport<HodgePolynomial>> h;
    if (target_.kind != TargetKindCli::Symbolic) {
      h = verify_hodge_identity(g(), config_.d, hodge_of(target_, config_.d), options_);
    }
    const bool ok = k.required_passed() && (!h || h->required_passed());
    if (json_mode()) {
      json j = header();
      j["target"] = target_.name;
      j["required_passed"] = ok;
      j["grothendieck"] = identity_json(k);
      if (h) j["hodge"] = identity_json(*h);
      return write_json(out_, std::move(j));
    }
    text_header();
    out_ << "target: " << target_.name << "\n";
    out_ << "required identities: " << (ok ? "pass" : "FAIL") << "\n";
    identity_lines(k, "");
    if (h) identity_lines(*h, "hodge ");
  }

  const RunConfig& config_;
  std::ostream& out_;
  EnumerationOptions options_;
  LoadedGraph loaded_;
  CliTarget target_;
};

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Runner(config, out).execute();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    if (config.format == Format::Json) {
      write_json(out, {{"error", {{"code", e.name()}, {"message", e.what()}}}});
    } else {
      err << "error: " << e.name() << ": " << e.what() << "\n";
    }
    return kExitDomainError;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
               std::optional<std::string> env_budget) {
  RunConfig config;
  if (env_budget) {
    try {
      config.budget = std::stoull(*env_budget);
    } catch (const std::exception&) {
      err << "usage error: WONDERFUL_BUDGET must be a positive integer\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Invariants of graph configuration spaces and their wonderful compactifications",
               "wonderful"};
  app.require_subcommand(1, 1);
  std::string format = "text";
  std::optional<std::uint64_t> budget;
  app.add_option("--graph", config.graph_source, "Graph file (JSON or edge list) or builtin:<family>")
      ->required();
  app.add_option("--dim,-d", config.d, "Dimension d of the target variety")->capture_default_str();
  app.add_option("--target", config.target, "symbolic, Pd, Ad, P<n>, A<n> or custom:<path>")
      ->capture_default_str();
  app.add_option("--format", format, "text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  app.add_option("--budget", budget, "Enumeration budget (default 2^22 or WONDERFUL_BUDGET)");
  app.add_flag("--literal-prop3", config.literal_prop3,
               "Also report the count of families passing the pairwise-only nest criterion");
  app.add_flag("--literal-lemma14", config.literal_lemma14,
               "Also report the identities with sums over all nests");
  static const std::map<Command, const char*> descriptions = {
      {Command::Validate, "Check the graph and report components, blocks and cut vertices"},
      {Command::BuildingSet, "List the induced biconnected subgraphs"},
      {Command::Nests, "List the nests of the building set"},
      {Command::Class, "Class of the wonderful compactification"},
      {Command::ConfClass, "Class of the configuration space"},
      {Command::CClass, "Configuration class modulo translations and homotheties"},
      {Command::Hodge, "Hodge-Deligne polynomial for a concrete target"},
      {Command::Euler, "Euler characteristics for a concrete target"},
      {Command::Divergence, "Power counting, pole orders and residue data"},
      {Command::Strata, "Boundary strata, their dimensions and incidence poset"},
      {Command::Identities, "Evaluate the class identities on this graph"},
  };
  for (const auto& [name, cmd] : command_table()) {
    app.add_subcommand(name, descriptions.at(cmd))->fallthrough();
  }

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  config.command = command_table().at(app.get_subcommands().front()->get_name());
  config.format = format == "json" ? Format::Json : format == "dot" ? Format::Dot : Format::Text;
  if (budget) config.budget = *budget;
  if (config.budget == 0) {
    err << "usage error: the budget must be positive\n";
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace wonderful::cli

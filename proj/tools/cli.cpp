#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "multidesign/catalog.hpp"
#include "multidesign/constructions.hpp"
#include "multidesign/design_io.hpp"
#include "multidesign/errors.hpp"
#include "multidesign/feasibility.hpp"
#include "multidesign/search.hpp"
#include "multidesign/verifier.hpp"

namespace multidesign::cli {

namespace {

using nlohmann::json;

// Used when a search host has more vertices than the unbudgeted limit.
constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json edges_json(const EdgeList& edges) {
  json arr = json::array();
  for (const Edge& e : edges) arr.push_back({e.lo, e.hi});
  return arr;
}

json counts_json(const std::vector<BlockCounts>& v) {
  json arr = json::array();
  for (const auto& c : v) arr.push_back({{"hexagons", c.hexagons}, {"prisms", c.prisms}});
  return arr;
}

json feasibility_json(const FeasibilityReport& r) {
  json deg = json::array();
  for (const auto& s : r.degree_solutions) deg.push_back({{"p", s.hexagons}, {"q", s.prisms}});
  return {{"n", r.n},
          {"decomposition_exists", r.decomposition_exists},
          {"min_leave", r.min_leave},
          {"min_padding", r.min_padding},
          {"block_solutions", counts_json(r.block_solutions)},
          {"degree_solutions", deg},
          {"notes", r.notes}};
}

std::string feasibility_text(const FeasibilityReport& r) {
  std::ostringstream os;
  os << "n = " << r.n << "\n";
  os << "decomposition exists: " << (r.decomposition_exists ? "yes" : "no") << "\n";
  os << "minimum leave: " << r.min_leave << "\n";
  os << "minimum padding: " << r.min_padding << "\n";
  os << "(x, y) with 6x + 9y = " << complete_edge_count(r.n) << ":";
  if (r.block_solutions.empty()) os << " none";
  for (const auto& c : r.block_solutions) os << " (" << c.hexagons << "," << c.prisms << ")";
  os << "\n(p, q) with 2p + 3q = " << (r.n - 1) << ":";
  for (const auto& s : r.degree_solutions) os << " (" << s.hexagons << "," << s.prisms << ")";
  os << "\n";
  for (const auto& note : r.notes) os << "note: " << note << "\n";
  return os.str();
}

json verification_json(const VerificationReport& r) {
  json failures = json::array();
  for (const Finding& f : r.failures) {
    json item{{"code", to_string(f.code)}, {"message", f.message}, {"edges", edges_json(f.edges)}};
    if (f.block_index) item["block"] = *f.block_index;
    failures.push_back(item);
  }
  json inc = json::array();
  for (const auto& v : r.incidence) inc.push_back({v.vertex, v.hexagons, v.prisms});
  return {{"valid", r.valid},
          {"hexagons", r.hexagon_count},
          {"prisms", r.prism_count},
          {"leave", edges_json(r.leave)},
          {"padding", edges_json(r.padding)},
          {"failures", failures},
          {"incidence", inc}};
}

std::string verification_text(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.valid ? "valid" : "INVALID") << ": " << r.hexagon_count << " hexagon(s), " << r.prism_count
     << " prism(s), leave " << r.leave.size() << ", padding " << r.padding.size() << "\n";
  for (const Finding& f : r.failures) {
    os << "  " << to_string(f.code);
    if (f.block_index) os << " [block " << *f.block_index << "]";
    os << ": " << f.message << "\n";
  }
  return os.str();
}

json stats_json(const SearchStats& s) {
  return {{"nodes", s.nodes}, {"max_depth", s.max_depth}, {"placements", s.placements}};
}

std::string stats_text(const SearchStats& s) {
  return "nodes " + std::to_string(s.nodes) + ", max depth " + std::to_string(s.max_depth) + ", placements " +
         std::to_string(s.placements);
}

json nonexistence_json(const NonexistenceReport& r) {
  json branches = json::array();
  for (const auto& b : r.branches) {
    branches.push_back({{"hexagons", b.counts.hexagons},
                        {"prisms", b.counts.prisms},
                        {"prism_placements", b.prism_placements},
                        {"remainders_tested", b.remainders_tested},
                        {"completions", b.completions},
                        {"stats", stats_json(b.stats)}});
  }
  return {{"n", r.n},
          {"analytic_nonexistence", r.analytic_nonexistence},
          {"analytic_trace", r.analytic_trace},
          {"enumerative_nonexistence", r.enumerative_nonexistence},
          {"enumerative_method", r.enumerative_method},
          {"branches", branches},
          {"agree", r.agree()}};
}

std::string nonexistence_text(const NonexistenceReport& r) {
  std::ostringstream os;
  os << "K_" << r.n << ": " << (r.agree() ? "no decomposition (both certificates agree)" : "certificates disagree")
     << "\n";
  os << "analytic: " << (r.analytic_nonexistence ? "nonexistence" : "inconclusive") << "\n";
  for (const auto& line : r.analytic_trace) os << "  " << line << "\n";
  os << "enumerative: " << (r.enumerative_nonexistence ? "nonexistence" : "completion found") << " ("
     << r.enumerative_method << ")\n";
  for (const auto& b : r.branches) {
    os << "  (x,y)=(" << b.counts.hexagons << "," << b.counts.prisms << "): " << b.prism_placements
       << " placement(s), " << b.remainders_tested << " remainder(s) searched, " << b.completions << " completion(s), "
       << stats_text(b.stats) << "\n";
  }
  return os.str();
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text) || !file.flush()) throw UsageError("cannot write " + path);
}

std::uint32_t parse_count(std::string_view s, const std::string& what) {
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError("bad " + what + ": " + std::string(s));
  return v;
}

// "complete:N" or "bipartite:MxN" (left 0..M-1, right M..M+N-1).
Host parse_host_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("host must be complete:N or bipartite:MxN, got " + spec);
  const std::string shape = spec.substr(0, colon);
  const std::string dims = spec.substr(colon + 1);
  if (shape == "complete") return Host::complete(parse_count(dims, "order"));
  if (shape == "bipartite") {
    const auto x = dims.find('x');
    if (x == std::string::npos) throw UsageError("bipartite host must be bipartite:MxN, got " + spec);
    const std::uint32_t m = parse_count(std::string_view(dims).substr(0, x), "side");
    const std::uint32_t n = parse_count(std::string_view(dims).substr(x + 1), "side");
    std::vector<Vertex> left(m), right(n);
    for (Vertex i = 0; i < m; ++i) left[i] = i;
    for (Vertex i = 0; i < n; ++i) right[i] = m + i;
    return Host::bipartite(left, right);
  }
  throw UsageError("unknown host shape " + shape);
}

struct Options {
  std::string format = "text";
  std::string output;
  std::uint32_t n = 0;
  std::string kind = "decomposition";
  std::string host;
  std::string blocks = "both";
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> bound;
  bool certify = false;
  bool allow_single = false;
  std::string input;
  std::string export_key;
};

DesignKind kind_of(const std::string& text) {
  const auto k = parse_design_kind(text);
  if (!k) throw UsageError("unknown kind " + text);
  return *k;
}

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
  const DesignKind kind = kind_of(o.kind);
  Design d;
  try {
    d = construct(o.n, kind);
  } catch (const InfeasibleOrder& e) {
    err << "cannot construct a decomposition of K_" << o.n << "\n";
    if (o.format == "json") {
      out << feasibility_json(e.report()).dump(2) << "\n";
    } else {
      out << feasibility_text(e.report());
    }
    return kFailure;
  } catch (const UnsupportedOrder& e) {
    throw UsageError(e.what());
  }
  const VerificationReport rep = verify_design(d);
  if (!rep.valid) {
    err << "internal error: constructed design fails verification\n" << verification_text(rep);
    return kFailure;
  }
  write_output(o.output, o.format == "json" ? emit_design_json(d) : design_text(d), out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
  Design d;
  try {
    d = parse_design_json(read_input(o.input));
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  const VerificationReport rep = verify_design(d);
  write_output(o.output, o.format == "json" ? verification_json(rep).dump(2) + "\n" : verification_text(rep), out);
  return rep.valid ? kOk : kFailure;
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream&) {
  FeasibilityReport r;
  try {
    r = classify(o.n);
  } catch (const UnsupportedOrder& e) {
    throw UsageError(e.what());
  }
  write_output(o.output, o.format == "json" ? feasibility_json(r).dump(2) + "\n" : feasibility_text(r), out);
  return kOk;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.certify) {
    NonexistenceReport r;
    try {
      r = confirm_nonexistence(o.n);
    } catch (const UnsupportedOrder& e) {
      throw UsageError(e.what());
    }
    out << (o.format == "json" ? nonexistence_json(r).dump(2) + "\n" : nonexistence_text(r));
    return r.agree() ? kFailure : kOk;
  }

  if (!o.host.empty() && o.n != 0) throw UsageError("give either --n or --host, not both");
  if (o.host.empty() && o.n == 0) throw UsageError("search needs --n or --host");
  const Host host = o.host.empty() ? Host::complete(o.n) : parse_host_spec(o.host);
  std::optional<std::uint64_t> budget = o.budget;
  if (!budget && host.vertices().size() > kUnbudgetedVertexLimit) budget = kDefaultBudget;

  SearchOutcome outcome;
  const DesignKind kind = kind_of(o.kind);
  try {
    if (kind == DesignKind::Decomposition) {
      const auto types = parse_block_types(o.blocks);
      if (!types) throw UsageError("--blocks must be hexagon, prism or both");
      SearchConfig cfg = *types == BlockTypes::Both && !o.allow_single ? SearchConfig{} : SearchConfig::only(*types);
      cfg.node_budget = budget;
      outcome = search_multidecomposition(host, cfg);
    } else {
      if (!o.bound) throw UsageError("packing/covering search needs --bound");
      outcome = find_extremal(host, kind == DesignKind::Packing ? ExtremalKind::Packing : ExtremalKind::Covering,
                              *o.bound, budget);
    }
  } catch (const SearchRequestError& e) {
    err << "search rejected: " << e.what() << "\n";
    return kind == DesignKind::Decomposition ? kUsage : kFailure;
  }

  if (o.format == "json") {
    json j{{"status", to_string(outcome.status)}, {"stats", stats_json(outcome.stats)}};
    if (outcome.design) j["design"] = json::parse(emit_design_json(*outcome.design));
    out << j.dump(2) << "\n";
  } else {
    out << to_string(outcome.status) << " (" << stats_text(outcome.stats) << ")\n";
  }
  if (outcome.design && !o.output.empty()) write_output(o.output, emit_design_json(*outcome.design), out);

  switch (outcome.status) {
    case SearchStatus::Found: return kOk;
    case SearchStatus::ExhaustedNone: return kFailure;
    case SearchStatus::BudgetExceeded: return kInconclusive;
  }
  return kFailure;
}

int cmd_catalog(const Options& o, std::ostream& out, std::ostream&) {
  if (!o.export_key.empty()) {
    const auto key = catalog::parse_key(o.export_key);
    if (!key) throw UsageError("bad catalog key " + o.export_key);
    Design d;
    try {
      d = catalog::get(*key);
    } catch (const UnknownCatalogKey& e) {
      throw UsageError(e.what());
    }
    write_output(o.output, o.format == "json" ? emit_design_json(d) : design_text(d), out);
    return kOk;
  }
  std::string text;
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& key : catalog::keys()) arr.push_back(catalog::to_string(key));
    text = arr.dump(2) + "\n";
  } else {
    for (const auto& key : catalog::keys()) {
      const Design d = catalog::get(key);
      text += catalog::to_string(key) + ": " + std::to_string(d.hexagon_count()) + " hexagon(s), " +
              std::to_string(d.prism_count()) + " prism(s)";
      if (!d.leave.empty()) text += ", leave " + std::to_string(d.leave.size());
      if (!d.padding.empty()) text += ", padding " + std::to_string(d.padding.size());
      text += "\n";
    }
  }
  write_output(o.output, text, out);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hexagon/prism decompositions, packings and coverings of complete graphs"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output,-o", o.output, "Write to this file instead of stdout");
  };

  CLI::App* construct_cmd = app.add_subcommand("construct", "Build and verify a design on K_n");
  construct_cmd->add_option("--n", o.n, "Order")->required();
  construct_cmd->add_option("--kind", o.kind, "decomposition, packing or covering");
  add_format(construct_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a design file");
  verify_cmd->add_option("input", o.input, "Design file (- for stdin)")->required();
  add_format(verify_cmd);

  CLI::App* classify_cmd = app.add_subcommand("classify", "Counting analysis for K_n");
  classify_cmd->add_option("--n", o.n, "Order")->required();
  add_format(classify_cmd);

  CLI::App* search_cmd = app.add_subcommand("search", "Exhaustive search");
  search_cmd->add_option("--n", o.n, "Search on K_n");
  search_cmd->add_option("--host", o.host, "complete:N or bipartite:MxN");
  search_cmd->add_option("--kind", o.kind, "decomposition, or packing/covering with --bound");
  search_cmd->add_option("--blocks", o.blocks, "hexagon, prism or both");
  search_cmd->add_option("--budget", o.budget, "Node budget");
  search_cmd->add_option("--bound", o.bound, "Leave or padding size for packing/covering");
  search_cmd->add_flag("--certify", o.certify, "Nonexistence certificate for n in {7, 9, 10}");
  search_cmd->add_flag("--allow-single-type", o.allow_single, "With --blocks both, drop the one-of-each rule");
  add_format(search_cmd);

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "List or export bundled designs");
  catalog_cmd->add_option("--export", o.export_key, "Key to export, e.g. decomposition-13");
  add_format(catalog_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  // Design-producing commands default to JSON, reports to text.
  const bool format_given = app.get_subcommands().front()->count("--format") > 0;
  if (!format_given) {
    const bool design_out = construct_cmd->parsed() || (catalog_cmd->parsed() && !o.export_key.empty());
    o.format = design_out ? "json" : "text";
  }

  try {
    if (construct_cmd->parsed()) return cmd_construct(o, out, err);
    if (verify_cmd->parsed()) return cmd_verify(o, out, err);
    if (classify_cmd->parsed()) return cmd_classify(o, out, err);
    if (search_cmd->parsed()) return cmd_search(o, out, err);
    return cmd_catalog(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace multidesign::cli

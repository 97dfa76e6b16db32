#include "cli.hpp"

#include "ocha/campaign.hpp"
#include "ocha/cohomology.hpp"
#include "ocha/fixtures.hpp"
#include "ocha/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <ostream>

namespace ocha::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int parse_int(const std::string& s, const std::string& what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw UsageError("bad " + what + ": '" + s + "'");
  return v;
}

std::pair<int, int> parse_pair(const std::string& s, const std::string& sep,
                               const std::string& what) {
  auto at = s.find(sep);
  if (at == std::string::npos) throw UsageError("bad " + what + ": '" + s + "'");
  return {parse_int(s.substr(0, at), what), parse_int(s.substr(at + sep.size()), what)};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto at = s.find(sep, start);
    out.push_back(s.substr(start, at - start));
    if (at == std::string::npos) break;
    start = at + 1;
  }
  return out;
}

OchaStructure require_ocha(const StructureFile& f, std::ostream& err) {
  if (!f.roles.l || !f.roles.q) throw UsageError("file does not declare roles l and q");
  Report r;
  auto s = make_ocha(f.closed(*f.roles.l), f.open_closed(*f.roles.q), &r);
  if (!s) {
    err << r.summary() << "\n";
    throw UsageError("declared (l, q) is not an OCHA");
  }
  return *s;
}

void write_or_print(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw UsageError("cannot write '" + path + "'");
}

json entries_json(const OCCochain& c) {
  return json::parse(emit_cochain("c", c))["cochains"][0]["entries"];
}

int cmd_validate(const std::string& path, std::ostream& out) {
  StructureFile f = read_structure_file(path);
  std::vector<Report> reports;
  if (f.roles.l && f.roles.q) {
    reports.push_back(check_ocha(f.closed(*f.roles.l), f.open_closed(*f.roles.q)));
  } else if (f.roles.l) {
    reports.push_back(check_l_infinity(f.closed(*f.roles.l)));
  } else if (f.roles.q) {
    throw UsageError("role q needs a matching role l");
  }
  if (f.roles.m) reports.push_back(check_a_infinity(f.open_closed(*f.roles.m)));
  if (reports.empty()) throw UsageError("file declares no structure roles (l, q or m)");
  bool ok = true;
  for (const auto& r : reports) {
    out << r.summary() << "\n  checked arities up to (l, k) = (" << r.window.max_l << ", "
        << r.window.max_k << ")\n";
    ok = ok && r.passed;
  }
  out << (ok ? "valid\n" : "invalid\n");
  return ok ? 0 : 1;
}

int cmd_delta(const std::string& path, const std::string& name, const std::string& output,
              std::ostream& out, std::ostream& err) {
  StructureFile f = read_structure_file(path);
  OchaStructure s = require_ocha(f, err);
  OCCochain d = hochschild_differential(s, f.open_closed(name));
  write_or_print(emit_cochain("delta(" + name + ")", d), output, out);
  return 0;
}

int cmd_product(const std::string& path, const std::string& op, const std::string& left,
                const std::string& right, const std::string& output, std::ostream& out,
                std::ostream& err) {
  StructureFile f = read_structure_file(path);
  const OCCochain& a = f.open_closed(left);
  const OCCochain& b = f.open_closed(right);
  OCCochain r;
  if (op == "bracket") {
    r = gerstenhaber_bracket(a, b);
  } else {
    OchaStructure s = require_ocha(f, err);
    r = cup(s, a, b);
  }
  write_or_print(emit_cochain(op + "(" + left + "," + right + ")", r), output, out);
  return 0;
}

int cmd_cohomology(const std::string& path, int max_weight, const std::string& degrees,
                   std::size_t max_cells, bool check_axioms, std::ostream& out,
                   std::ostream& err) {
  StructureFile f = read_structure_file(path);
  OchaStructure s = require_ocha(f, err);
  std::optional<std::pair<int, int>> window;
  if (!degrees.empty()) window = parse_pair(degrees, "..", "degree window");
  if (max_weight < 1) throw UsageError("--max-weight must be at least 1");
  AssembleOptions opts;
  opts.max_cells = max_cells;
  TruncatedComplex c = assemble_complex(s, max_weight, opts);
  Cohomology h(c);

  json root;
  root["cohomology"] = "weight-truncated";
  root["note"] = "cohomology of the quotient by cochains of weight 2l+k > max_weight";
  root["max_weight"] = max_weight;
  root["cells"] = c.size();
  root["squares_to_zero"] = c.squares_to_zero();
  root["weight_violations"] = c.weight_violations();
  json degs = json::array();
  std::vector<CohomologyClass> sample;
  for (const auto& [deg, dc] : h.by_degree()) {
    if (window && (deg < window->first || deg > window->second)) continue;
    json j;
    j["degree"] = deg;
    j["cells"] = dc.cells;
    j["cycles"] = dc.cycles;
    j["boundaries"] = dc.boundaries;
    j["dimension"] = dc.dimension();
    json classes = json::array();
    for (const auto& cl : dc.classes) {
      json jc;
      jc["id"] = cl.id;
      jc["representative"] = entries_json(cl.representative);
      classes.push_back(std::move(jc));
      sample.push_back(cl);
    }
    j["classes"] = std::move(classes);
    degs.push_back(std::move(j));
  }
  root["degrees"] = std::move(degs);
  bool ok = true;
  if (check_axioms) {
    GerstenhaberReport g = verify_gerstenhaber(h, sample);
    json ax = json::array();
    for (const auto& t : g.axioms) {
      json a;
      a["axiom"] = t.axiom;
      a["passed"] = t.passed;
      a["failed"] = t.failed;
      a["skipped"] = t.skipped;
      a["witnesses"] = t.witnesses;
      ax.push_back(std::move(a));
    }
    root["gerstenhaber"] = std::move(ax);
    ok = g.passed();
  }
  out << root.dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_check(CampaignConfig cfg, const std::string& arity, const std::string& only,
              bool timing, const std::string& output, std::ostream& out) {
  if (!arity.empty()) std::tie(cfg.max_l, cfg.max_k) = parse_pair(arity, ",", "--max-arity");
  if (!only.empty()) cfg.identities = split(only, ',');
  CampaignReport r = run_campaign(cfg);
  write_or_print(r.to_json(timing), output, out);
  return r.passed() ? 0 : 1;
}

int cmd_examples_emit(const std::string& name, const std::string& path) {
  const auto names = fixture_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw UsageError("unknown example '" + name + "'");
  write_structure_file(path, to_structure_file(build_fixture(name)));
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Open-closed homotopy algebra toolkit", "ocha"};
  app.require_subcommand(1);

  std::string file, name, output;
  auto* validate = app.add_subcommand("validate", "Check the structures declared by a file's roles");
  validate->add_option("file", file, "Structure file")->required();

  auto* delta = app.add_subcommand("delta", "Hochschild differential of a named cochain");
  delta->add_option("file", file, "Structure file with roles l and q")->required();
  delta->add_option("--cochain", name, "Cochain name")->required();
  delta->add_option("-o,--output", output, "Write to a file instead of stdout");

  int max_weight = 0;
  std::string degrees;
  std::size_t max_cells = AssembleOptions{}.max_cells;
  bool axioms = false;
  auto* coh = app.add_subcommand("cohomology", "Weight-truncated cohomology");
  coh->add_option("file", file, "Structure file with roles l and q")->required();
  coh->add_option("--max-weight", max_weight, "Keep cells with 2l+k <= W")->required();
  coh->add_option("--degrees", degrees, "Degree window LO..HI");
  coh->add_option("--max-cells", max_cells, "Refuse complexes with more cells");
  coh->add_flag("--check-axioms", axioms, "Also verify the Gerstenhaber axioms on the classes");

  std::string op, left, right;
  auto* prod = app.add_subcommand("product", "Cochain-level bracket or cup product");
  prod->add_option("file", file, "Structure file")->required();
  prod->add_option("--op", op, "bracket or cup")
      ->required()
      ->check(CLI::IsMember({"bracket", "cup"}));
  prod->add_option("--left", left, "Left cochain name")->required();
  prod->add_option("--right", right, "Right cochain name")->required();
  prod->add_option("-o,--output", output, "Write to a file instead of stdout");

  CampaignConfig cfg;
  std::string arity, only;
  bool mutate = false, no_timing = false;
  auto* check = app.add_subcommand("check-identities", "Seeded randomized identity campaign");
  check->add_option("--trials", cfg.trials, "Trials per identity")->capture_default_str();
  check->add_option("--seed", cfg.seed, "64-bit seed")->capture_default_str();
  check->add_option("--max-dim", cfg.max_dim, "Largest random space dimension")
      ->capture_default_str();
  check->add_option("--max-arity", arity, "L,K bounds on closed and open arity");
  check->add_option("--entries", cfg.entries, "Structure constants per random cochain")
      ->capture_default_str();
  check->add_option("--only", only, "Comma-separated identity names");
  check->add_flag("--mutate-brace-sign", mutate,
                  "Corrupt the sign of single-insertion braces (self-test)");
  check->add_flag("--no-timing", no_timing, "Omit wall-clock fields from the report");
  check->add_option("-o,--output", output, "Write the report to a file");

  std::string path;
  auto* ex = app.add_subcommand("examples", "Built-in example structures");
  ex->require_subcommand(1);
  auto* emit = ex->add_subcommand("emit", "Write a built-in example to a file");
  emit->add_option("name", name, "Example name")->required();
  emit->add_option("path", path, "Output path")->required();
  auto* list = ex->add_subcommand("list", "List built-in examples");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(file, out);
    if (*delta) return cmd_delta(file, name, output, out, err);
    if (*prod) return cmd_product(file, op, left, right, output, out, err);
    if (*coh) return cmd_cohomology(file, max_weight, degrees, max_cells, axioms, out, err);
    if (*check) {
      if (mutate) cfg.mutation = Mutation::gerstenhaber_prefix_sign;
      return cmd_check(cfg, arity, only, !no_timing, output, out);
    }
    if (*emit) return cmd_examples_emit(name, path);
    if (*list) {
      for (const auto& n : fixture_names()) out << n << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ocha::cli

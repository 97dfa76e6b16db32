#include "ocha/campaign.hpp"

#include "ocha/fixtures.hpp"
#include "ocha/random.hpp"
#include "ocha/structures.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>

namespace ocha {

namespace {

using json = nlohmann::ordered_json;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

int deg(const OCCochain& c) { return c.is_zero() ? 0 : c.degree(); }

Scalar sgn(long long e) { return (e & 1) ? Scalar(-1) : Scalar(1); }

struct Trial {
  const CampaignConfig& cfg;
  const std::vector<std::pair<std::string, OchaStructure>>& structures;
  Rng rng;
  IdentityResult& result;
  int index;

  SupportSpec spec() const { return SupportSpec{cfg.max_l, cfg.max_k, cfg.entries}; }
  BraceOptions opts() const { return BraceOptions{ArityCap{}, cfg.mutation}; }

  OCCochain random_over(const SpacePtr& b, const SpacePtr& a) {
    return random_cochain(b, a, a, spec(), rng).cochain;
  }

  void record(bool ok, const std::string& detail,
              const std::function<StructureFile()>& inputs) {
    ++result.checks;
    if (ok) {
      ++result.passed;
      return;
    }
    ++result.failed;
    if (!result.first_failure) result.first_failure = FailureWitness{index, detail, inputs()};
  }
};

StructureFile pack(std::initializer_list<std::pair<std::string, const OCCochain*>> ocs,
                   const SymCochain* l = nullptr, const OCCochain* q = nullptr) {
  StructureFile f;
  if (l) {
    f.add("l", *l);
    f.roles.l = "l";
  }
  if (q) {
    f.add("q", *q);
    f.roles.q = "q";
  }
  for (const auto& [name, c] : ocs) {
    f.add(name, *c);
    f.roles.inputs.push_back(name);
  }
  return f;
}

void brace_relation(Trial& t) {
  auto b = random_space(t.rng, "B", t.cfg.max_dim, 2);
  auto a = random_space(t.rng, "A", t.cfg.max_dim, 1);
  for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
    OCCochain d = t.random_over(b, a);
    std::vector<OCCochain> es, fs;
    for (int i = 0; i < m; ++i) es.push_back(t.random_over(b, a));
    for (int i = 0; i < n; ++i) fs.push_back(t.random_over(b, a));
    OCCochain lhs = brace(brace(d, es, t.opts()), fs, t.opts());
    OCCochain rhs = brace_relation_rhs(d, es, fs, t.opts());
    t.record(lhs == rhs, "(m,n) = (" + std::to_string(m) + "," + std::to_string(n) + ")", [&] {
      StructureFile f;
      f.add("D", d);
      f.roles.inputs.push_back("D");
      for (int i = 0; i < m; ++i) {
        f.add("E" + std::to_string(i + 1), es[i]);
        f.roles.inputs.push_back("E" + std::to_string(i + 1));
      }
      for (int i = 0; i < n; ++i) {
        f.add("F" + std::to_string(i + 1), fs[i]);
        f.roles.inputs.push_back("F" + std::to_string(i + 1));
      }
      return f;
    });
  }
}

void hat_brace(Trial& t) {
  auto b = random_space(t.rng, "B", t.cfg.max_dim, 2);
  auto a = random_space(t.rng, "A", t.cfg.max_dim, 1);
  SymCochain l = random_sym_cochain(b, b, t.spec(), t.rng).cochain;
  for (int m = 1; m <= 2; ++m) {
    OCCochain d = t.random_over(b, a);
    std::vector<OCCochain> es;
    for (int i = 0; i < m; ++i) es.push_back(t.random_over(b, a));
    OCCochain lhs = hat_action(l, brace(d, es));
    OCCochain rhs = hat_brace_rhs(l, d, es);
    t.record(lhs == rhs, "m = " + std::to_string(m), [&] {
      StructureFile f;
      f.add("l", l);
      f.add("D", d);
      f.roles.inputs.push_back("D");
      for (int i = 0; i < m; ++i) {
        f.add("E" + std::to_string(i + 1), es[i]);
        f.roles.inputs.push_back("E" + std::to_string(i + 1));
      }
      return f;
    });
  }
}

void hat_squared(Trial& t) {
  for (const auto& [name, l] : l_infinity_fixtures()) {
    auto a = random_space(t.rng, "A", t.cfg.max_dim, 1);
    OCCochain d = t.random_over(l.source_space(), a);
    OCCochain r = hat_action(l, hat_action(l, d));
    t.record(r.is_zero(), "l = " + name, [&] { return pack({{"D", &d}}, &l); });
  }
}

void delta_squared(Trial& t) {
  for (const auto& [name, s] : t.structures) {
    OCCochain d = t.random_over(s.closed_space(), s.open_space());
    OCCochain r = hochschild_differential(s, hochschild_differential(s, d));
    t.record(r.is_zero(), name, [&] { return pack({{"D", &d}}, &s.l(), &s.q()); });
  }
}

void m_ainfty(Trial& t) {
  for (const auto& [name, s] : t.structures)
    for (int k = 1; k <= 3; ++k) {
      std::vector<OCCochain> ds;
      for (int i = 0; i < k; ++i) ds.push_back(t.random_over(s.closed_space(), s.open_space()));
      OCCochain r = m_a_infinity_residual(s, ds);
      t.record(r.is_zero(), name + ", k = " + std::to_string(k), [&] {
        StructureFile f = pack({}, &s.l(), &s.q());
        for (int i = 0; i < k; ++i) {
          f.add("D" + std::to_string(i + 1), ds[i]);
          f.roles.inputs.push_back("D" + std::to_string(i + 1));
        }
        return f;
      });
    }
}

void bracket_jacobi(Trial& t) {
  auto b = random_space(t.rng, "B", t.cfg.max_dim, 2);
  auto a = random_space(t.rng, "A", t.cfg.max_dim, 1);
  OCCochain d0 = t.random_over(b, a), d1 = t.random_over(b, a), d2 = t.random_over(b, a);
  const long long a0 = deg(d0), a1 = deg(d1);
  OCCochain jac = gerstenhaber_bracket(d0, gerstenhaber_bracket(d1, d2)) -
                  gerstenhaber_bracket(gerstenhaber_bracket(d0, d1), d2) -
                  sgn(a0 * a1) * gerstenhaber_bracket(d1, gerstenhaber_bracket(d0, d2));
  OCCochain anti = gerstenhaber_bracket(d0, d1) + sgn(a0 * a1) * gerstenhaber_bracket(d1, d0);
  t.record(jac.is_zero() && anti.is_zero(), "jacobi and antisymmetry",
           [&] { return pack({{"D0", &d0}, {"D1", &d1}, {"D2", &d2}}); });
}

void cup_leibniz(Trial& t) {
  for (const auto& [name, s] : t.structures) {
    OCCochain d1 = t.random_over(s.closed_space(), s.open_space());
    OCCochain d2 = t.random_over(s.closed_space(), s.open_space());
    OCCochain d3 = t.random_over(s.closed_space(), s.open_space());
    const long long a1 = deg(d1), a2 = deg(d2);
    auto delta = [&](const OCCochain& x) { return hochschild_differential(s, x); };
    // delta is a derivation of the cup product.
    OCCochain r1 = delta(cup(s, d1, d2)) - cup(s, delta(d1), d2) -
                   sgn(a1 + 1) * cup(s, d1, delta(d2));
    // Leibniz rule up to the homotopy D1{D2, D3}.
    const OCCochain args[] = {d2, d3};
    const OCCochain w = brace(d1, args);
    const OCCochain a_d2[] = {delta(d2), d3};
    const OCCochain a_d3[] = {d2, delta(d3)};
    OCCochain lhs = sgn(a1 + a2) * (gerstenhaber_bracket(d1, cup(s, d2, d3)) -
                                    cup(s, gerstenhaber_bracket(d1, d2), d3) -
                                    sgn(a1 * a2 + a1) * cup(s, d2, gerstenhaber_bracket(d1, d3))) +
                    delta(w);
    OCCochain rhs = brace(delta(d1), args) + sgn(a1) * brace(d1, a_d2) +
                    sgn(a1 + a2) * brace(d1, a_d3);
    t.record(r1.is_zero() && lhs == rhs, name, [&] {
      return pack({{"D1", &d1}, {"D2", &d2}, {"D3", &d3}}, &s.l(), &s.q());
    });
  }
}

void comm_homotopy(Trial& t) {
  for (const auto& [name, s] : t.structures) {
    OCCochain d1 = t.random_over(s.closed_space(), s.open_space());
    OCCochain d2 = t.random_over(s.closed_space(), s.open_space());
    const long long a1 = deg(d1), a2 = deg(d2);
    auto delta = [&](const OCCochain& x) { return hochschild_differential(s, x); };
    OCCochain lhs = sgn(a1) * (cup(s, d1, d2) - sgn((a1 + 1) * (a2 + 1)) * cup(s, d2, d1));
    OCCochain rhs = delta(gerstenhaber_product(d1, d2)) - gerstenhaber_product(delta(d1), d2) -
                    sgn(a1) * gerstenhaber_product(d1, delta(d2));
    t.record(lhs == rhs, name, [&] { return pack({{"D1", &d1}, {"D2", &d2}}, &s.l(), &s.q()); });
  }
}

using IdentityFn = void (*)(Trial&);

const std::vector<std::pair<std::string, IdentityFn>>& registry() {
  static const std::vector<std::pair<std::string, IdentityFn>> r = {
      {"brace-relation", &brace_relation}, {"hat-brace", &hat_brace},
      {"hat-squared", &hat_squared},       {"delta-squared", &delta_squared},
      {"M-ainfty", &m_ainfty},             {"bracket-jacobi", &bracket_jacobi},
      {"cup-leibniz", &cup_leibniz},       {"comm-homotopy", &comm_homotopy},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& campaign_identities() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

std::vector<std::pair<std::string, OchaStructure>> campaign_structures() {
  std::vector<std::pair<std::string, OchaStructure>> out;
  for (const auto& name : fixture_names()) {
    OchaData d = build_fixture(name);
    Report r;
    auto s = make_ocha(d.l, d.q, &r);
    if (!s) throw std::logic_error(name + ": " + r.summary());
    out.emplace_back(name, *s);
  }
  out.emplace_back("lie2+assoc2", build_trivial_ocha(assoc2_a_infinity(), lie2_l_infinity()));
  out.emplace_back("dg-lie+dual", build_trivial_ocha(dual_numbers_a_infinity(), dg_lie_l_infinity()));
  return out;
}

bool CampaignReport::passed() const {
  for (const auto& r : results)
    if (r.failed) return false;
  return true;
}

std::size_t CampaignReport::total_checks() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.checks;
  return n;
}

std::string CampaignReport::to_json(bool with_timing) const {
  json root;
  json cfg;
  cfg["seed"] = config.seed;
  cfg["trials"] = config.trials;
  cfg["max_dim"] = config.max_dim;
  cfg["max_arity"] = json::array({config.max_l, config.max_k});
  cfg["entries"] = config.entries;
  cfg["mutation"] = config.mutation == Mutation::none ? "none" : "gerstenhaber-prefix-sign";
  root["config"] = std::move(cfg);
  json ids = json::array();
  for (const auto& r : results) {
    json j;
    j["identity"] = r.name;
    j["checks"] = r.checks;
    j["passed"] = r.passed;
    j["failed"] = r.failed;
    if (r.first_failure) {
      json w;
      w["trial"] = r.first_failure->trial;
      w["detail"] = r.first_failure->detail;
      w["inputs"] = json::parse(emit_structure(r.first_failure->inputs));
      j["first_failure"] = std::move(w);
    } else {
      j["first_failure"] = nullptr;
    }
    if (with_timing) j["seconds"] = r.seconds;
    ids.push_back(std::move(j));
  }
  root["identities"] = std::move(ids);
  root["total_checks"] = total_checks();
  root["status"] = passed() ? "pass" : "fail";
  return root.dump(2) + "\n";
}

CampaignReport run_campaign(const CampaignConfig& config) {
  if (config.trials < 0) throw AlgebraError("run_campaign: negative trial count");
  if (config.max_dim < 1 || config.max_l < 0 || config.max_k < 0 || config.entries < 1)
    throw AlgebraError("run_campaign: invalid size limits");
  std::vector<std::string> selected = config.identities;
  if (selected.empty()) selected = campaign_identities();
  for (const auto& s : selected)
    if (std::find(campaign_identities().begin(), campaign_identities().end(), s) ==
        campaign_identities().end())
      throw AlgebraError("run_campaign: unknown identity '" + s + "'");

  CampaignReport report;
  report.config = config;
  std::vector<std::pair<std::string, OchaStructure>> structures;
  if (config.trials > 0) structures = campaign_structures();
  for (const auto& [name, fn] : registry()) {
    if (std::find(selected.begin(), selected.end(), name) == selected.end()) continue;
    IdentityResult result;
    result.name = name;
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < config.trials; ++i) {
      const std::uint64_t seed = splitmix(config.seed ^ splitmix(fnv1a(name) + std::uint64_t(i)));
      Trial t{config, structures, Rng(seed), result, i};
      fn(t);
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.results.push_back(std::move(result));
  }
  return report;
}

}  // namespace ocha

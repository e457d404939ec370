#include "cdss/harness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "cdss/codes.hpp"
#include "cdss/errors.hpp"

namespace cdss {

namespace {

Json node_list_json(std::span<const NodeId> nodes) {
  Json out = Json::array();
  for (const auto& id : nodes) out.push_back(to_string(id));
  return out;
}

CheckResult pass(std::string name) { return {std::move(name), true, nullptr}; }

CheckResult fail(std::string name, Json counterexample) { return {std::move(name), false, std::move(counterexample)}; }

Json rational_json(const Rational& r) {
  if (is_integer(r)) return r.numerator();
  return to_string(r);
}

bool is_mbr(CodeKind kind) { return kind == CodeKind::mbr0 || kind == CodeKind::mbr; }

int chi_of_scheme(const Scheme& scheme) {
  if (const auto* pos = dynamic_cast<const MbrPosCode*>(&scheme)) return pos->chi();
  if (const auto* w = dynamic_cast<const WrappedMsrCode*>(&scheme)) return w->chi();
  return 1;
}

std::int64_t sum_pairs(const ContactVector& omega) {
  std::int64_t s = 0;
  for (int w : omega) s += binomial(w, 2);
  return s;
}

std::vector<NodeId> highest_nodes_for(const ClusterTopology& topo, const ContactVector& omega) {
  std::vector<NodeId> out;
  const int ni = topo.nodes_per_cluster();
  for (int l = 1; l <= topo.clusters(); ++l) {
    for (int j = ni - omega[static_cast<std::size_t>(l - 1)] + 1; j <= ni; ++j) out.push_back({l, j});
  }
  return out;
}

std::int64_t distinct_indices(const std::vector<NodeContent>& contents, const ClusterTopology& topo,
                              std::span<const NodeId> nodes) {
  std::set<int> seen;
  for (const auto& id : nodes) {
    for (const auto& s : contents[static_cast<std::size_t>(topo.flat(id) - 1)]) seen.insert(s.index);
  }
  return static_cast<std::int64_t>(seen.size());
}

std::set<int> index_set(const NodeContent& c) {
  std::set<int> out;
  for (const auto& s : c) out.insert(s.index);
  return out;
}

int shared(const std::set<int>& a, const std::set<int>& b) {
  int count = 0;
  for (int x : a) count += static_cast<int>(b.count(x));
  return count;
}

Rational declared_or(const std::optional<Rational>& v, const Rational& fallback) { return v.value_or(fallback); }

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

Json report_to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"counterexample", c.counterexample}});
  }
  return Json{{"system", r.system}, {"checks", std::move(checks)}, {"elapsed_ms", r.elapsed_ms}};
}

// ---------------------------------------------------------------------------

SystemConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("a system config must be a JSON object");
  const auto get_int = [&](const char* key) {
    if (!j.contains(key)) throw FormatError(std::string("config is missing \"") + key + "\"");
    if (!j.at(key).is_number_integer()) throw FormatError(std::string("\"") + key + "\" must be an integer");
    return j.at(key).get<int>();
  };
  const auto get_rational = [&](const char* key) {
    const auto& v = j.at(key);
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw FormatError(std::string("\"") + key + "\" must be an integer or a \"p/q\" string");
  };

  SystemConfig c;
  c.n = get_int("n");
  c.k = get_int("k");
  c.L = get_int("L");
  if (!j.contains("code") || !j.at("code").is_string()) throw FormatError("config needs a \"code\" string");
  c.kind = parse_code_kind(j.at("code").get<std::string>());
  c.name = j.value("name", std::string(to_string(c.kind)) + " n=" + std::to_string(c.n) + " k=" +
                               std::to_string(c.k) + " L=" + std::to_string(c.L));
  if (j.contains("epsilon") && j.contains("chi")) throw ParameterError("give either \"epsilon\" or \"chi\", not both");
  if (j.contains("epsilon")) {
    c.epsilon = get_rational("epsilon");
  } else if (j.contains("chi")) {
    const auto chi = get_rational("chi");
    if (chi <= Rational(0)) throw ParameterError("chi must be positive");
    c.epsilon = Rational(1) / chi;
  } else if (c.kind == CodeKind::msr_stacked && c.n > c.k) {
    c.epsilon = Rational(1, c.n - c.k);
  } else if (c.kind == CodeKind::mbr0 || c.kind == CodeKind::msr0_div || c.kind == CodeKind::msr0_nondiv) {
    c.epsilon = 0;
  } else {
    throw ParameterError("config for " + std::string(to_string(c.kind)) + " needs \"epsilon\" or \"chi\"");
  }
  if (j.contains("field")) c.field = field_from_json(j.at("field"));
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) throw FormatError("\"seed\" must be a nonnegative integer");
    c.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("stripes")) c.stripes = get_int("stripes");
  if (c.stripes < 1) throw ParameterError("stripes must be at least 1");
  if (j.contains("M")) c.declared_file_size = get_rational("M");
  if (j.contains("alpha")) c.declared_alpha = get_rational("alpha");
  if (j.contains("gamma")) c.declared_gamma = get_rational("gamma");
  return c;
}

std::vector<SystemConfig> configs_from_json(const Json& j) {
  const Json* list = &j;
  if (j.is_object() && j.contains("systems")) list = &j.at("systems");
  std::vector<SystemConfig> out;
  if (list->is_array()) {
    for (const auto& item : *list) out.push_back(config_from_json(item));
  } else {
    out.push_back(config_from_json(*list));
  }
  return out;
}

std::vector<FieldElement> random_source(const GaloisField& f, std::size_t length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<FieldElement> out(length);
  for (auto& v : out) v = FieldElement(static_cast<std::uint32_t>(rng() % f.order()));
  return out;
}

// ---------------------------------------------------------------------------

CheckResult verify_exact_repair(const Placement& placement, NodeId node, const TranscriptTamper& tamper) {
  const std::string name = "repair " + to_string(node);
  const auto& topo = placement.topology();
  const auto p = placement.params();
  const int ni = topo.nodes_per_cluster();
  Json ce{{"node", to_string(node)}};

  auto transcript = collect_repair(placement, node);
  if (tamper) tamper(transcript);
  NodeContent regenerated;
  try {
    regenerated = regenerate(placement, transcript);
  } catch (const Error& e) {
    ce["reason"] = std::string("regeneration failed: ") + e.what();
    return fail(name, ce);
  }
  if (regenerated != placement.node(node)) {
    ce["reason"] = "regenerated holdings differ from the original";
    return fail(name, ce);
  }
  const auto bi = transcript.per_helper(LinkClass::intra);
  const auto bc = transcript.per_helper(LinkClass::cross);
  if (transcript.helper_count(LinkClass::intra) != ni - 1 ||
      transcript.helper_count(LinkClass::cross) != topo.n() - ni) {
    ce["reason"] = "helper set is not every surviving node";
    return fail(name, ce);
  }
  if (!bi || !bc || Rational(*bi) != p.beta_intra || Rational(*bc) != p.beta_cross ||
      Rational(transcript.gamma()) != p.gamma) {
    ce["reason"] = "bandwidth differs from the declared parameters";
    ce["beta_i"] = bi ? Json(*bi) : Json(nullptr);
    ce["beta_c"] = bc ? Json(*bc) : Json(nullptr);
    ce["gamma"] = transcript.gamma();
    ce["declared"] = Json{{"beta_i", rational_json(p.beta_intra)},
                          {"beta_c", rational_json(p.beta_cross)},
                          {"gamma", rational_json(p.gamma)}};
    return fail(name, ce);
  }
  return pass(name);
}

CheckResult verify_all_repairs(const Placement& placement) {
  for (const auto& id : placement.topology().nodes()) {
    auto r = verify_exact_repair(placement, id);
    if (!r.pass) return fail("exact-repair", r.counterexample);
  }
  return pass("exact-repair");
}

std::vector<std::vector<NodeId>> contact_sets(const ClusterTopology& topo, Coverage coverage, std::uint64_t seed) {
  const int n = topo.n();
  const int k = topo.k();
  const bool exhaustive =
      coverage == Coverage::exhaustive || (coverage == Coverage::automatic && binomial(n, k) <= 10000);
  std::vector<std::vector<NodeId>> out;
  if (exhaustive) {
    for_each_combination(n, k, [&](std::span<const int> idx) {
      std::vector<NodeId> set;
      for (int u : idx) set.push_back(topo.node_at(u + 1));
      out.push_back(std::move(set));
      return true;
    });
    return out;
  }
  std::set<std::vector<NodeId>> seen;
  auto add = [&](std::vector<NodeId> set) {
    std::sort(set.begin(), set.end());
    if (seen.insert(set).second) out.push_back(std::move(set));
  };
  auto omega = omega_star(topo);
  std::sort(omega.begin(), omega.end());
  do {
    add(nodes_for_contact_vector(topo, omega));
    add(highest_nodes_for(topo, omega));
  } while (std::next_permutation(omega.begin(), omega.end()));
  std::mt19937_64 rng(seed);
  std::vector<int> flat(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) flat[static_cast<std::size_t>(u)] = u + 1;
  for (int s = 0; s < 1000; ++s) {
    std::shuffle(flat.begin(), flat.end(), rng);
    std::vector<NodeId> set;
    for (int i = 0; i < k; ++i) set.push_back(topo.node_at(flat[static_cast<std::size_t>(i)]));
    add(std::move(set));
  }
  return out;
}

CheckResult verify_reconstruction(const Placement& placement, std::span<const FieldElement> source,
                                  Coverage coverage, std::uint64_t seed) {
  const std::string name = "reconstruction";
  for (const auto& set : contact_sets(placement.topology(), coverage, seed)) {
    Json ce{{"contact", node_list_json(set)}};
    try {
      const auto got = reconstruct(placement, set);
      if (!std::equal(got.begin(), got.end(), source.begin(), source.end())) {
        ce["reason"] = "decoded source differs";
        return fail(name, ce);
      }
    } catch (const Error& e) {
      ce["reason"] = e.what();
      return fail(name, ce);
    }
  }
  return pass(name);
}

DistinctCount count_distinct(const Placement& placement, const ContactVector& omega) {
  const auto& scheme = placement.scheme();
  if (!is_mbr(scheme.kind())) throw UsageError("distinct-symbol counting applies to MBR codes");
  const auto& topo = placement.topology();
  const auto contents = placement.stripe_contents(0);
  const auto nodes = nodes_for_contact_vector(topo, omega);
  const std::int64_t k = topo.k();
  const std::int64_t alpha = scheme.alpha();
  DistinctCount d;
  d.omega = omega;
  d.measured = distinct_indices(contents, topo, nodes);
  d.file_size = scheme.file_size();
  if (scheme.kind() == CodeKind::mbr0) {
    d.closed_form = k * alpha - sum_pairs(omega);
  } else {
    d.closed_form = k * alpha - binomial(static_cast<int>(k), 2) - (chi_of_scheme(scheme) - 1) * sum_pairs(omega);
  }
  return d;
}

CheckResult verify_counting(const Placement& placement) {
  const std::string name = "counting";
  const auto& topo = placement.topology();
  const auto contents = placement.stripe_contents(0);
  const auto star = omega_star(topo);
  std::optional<std::int64_t> minimum;
  std::int64_t at_star = -1;
  for (const auto& omega : contact_vectors(topo)) {
    const auto d = count_distinct(placement, omega);
    Json ce{{"omega", omega}, {"measured", d.measured}, {"closed_form", d.closed_form}, {"M", d.file_size}};
    if (d.measured != d.closed_form) {
      ce["reason"] = "measured count differs from the closed form";
      return fail(name, ce);
    }
    if (d.measured < d.file_size) {
      ce["reason"] = "fewer distinct symbols than M";
      return fail(name, ce);
    }
    const auto alt = highest_nodes_for(topo, omega);
    if (distinct_indices(contents, topo, alt) != d.measured) {
      ce["reason"] = "count depends on the node choice";
      ce["contact"] = node_list_json(alt);
      return fail(name, ce);
    }
    if (!majorizes(star, omega)) {
      ce["reason"] = "omega* does not majorize omega";
      return fail(name, ce);
    }
    minimum = std::min(minimum.value_or(d.measured), d.measured);
    if (omega == star) at_star = d.measured;
  }
  if (at_star != placement.scheme().file_size() || minimum != at_star) {
    return fail(name, Json{{"omega", star}, {"measured", at_star}, {"minimum", minimum.value_or(-1)},
                           {"reason", "minimum is not M at omega*"}});
  }
  return pass(name);
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> verify_structure(const Placement& placement) {
  const auto& scheme = placement.scheme();
  const auto& topo = placement.topology();
  const auto contents = placement.stripe_contents(0);
  const auto nodes = topo.nodes();
  const int ni = topo.nodes_per_cluster();
  const int alpha = scheme.alpha();
  const auto& f = *scheme.field();
  std::vector<CheckResult> out;

  {
    CheckResult r = pass("structure: symbols-per-node");
    for (const auto& id : nodes) {
      if (static_cast<int>(contents[static_cast<std::size_t>(topo.flat(id) - 1)].size()) != alpha) {
        r = fail(r.name, Json{{"node", to_string(id)}, {"expected", alpha}});
        break;
      }
    }
    out.push_back(r);
  }

  if (is_mbr(scheme.kind())) {
    const int chi = chi_of_scheme(scheme);
    std::vector<std::set<int>> sets;
    for (const auto& c : contents) sets.push_back(index_set(c));
    std::map<int, int> owners;
    for (const auto& s : sets) {
      for (int idx : s) ++owners[idx];
    }
    CheckResult two = pass("structure: two-owners-per-symbol");
    for (int idx = 1; idx <= scheme.symbol_count(); ++idx) {
      if (owners[idx] != 2) {
        two = fail(two.name, Json{{"symbol", idx}, {"owners", owners[idx]}});
        break;
      }
    }
    out.push_back(two);
    const int cross_expected = scheme.kind() == CodeKind::mbr0 ? 0 : 1;
    const int intra_expected = scheme.kind() == CodeKind::mbr0 ? 1 : chi;
    CheckResult cross = pass("structure: cross-cluster-sharing");
    CheckResult intra = pass("structure: intra-cluster-sharing");
    for (std::size_t a = 0; a < nodes.size(); ++a) {
      for (std::size_t b = a + 1; b < nodes.size(); ++b) {
        const int s = shared(sets[a], sets[b]);
        const bool same = nodes[a].l == nodes[b].l;
        auto& r = same ? intra : cross;
        const int expected = same ? intra_expected : cross_expected;
        if (r.pass && s != expected) {
          r = fail(r.name, Json{{"nodes", node_list_json(std::vector<NodeId>{nodes[a], nodes[b]})},
                                {"shared", s},
                                {"expected", expected}});
        }
      }
    }
    out.push_back(intra);
    if (topo.clusters() > 1) out.push_back(cross);
    return out;
  }

  // MSR storage regimes: alpha = M/(k-q) at epsilon = 0, alpha = M/k otherwise.
  {
    const auto p = scheme.params();
    const int q = topo.k() / ni;
    const Rational expected = p.epsilon == Rational(0) ? p.file_size / Rational(topo.k() - q) : p.file_size / Rational(topo.k());
    out.push_back(p.alpha == expected
                      ? pass("storage: msr-alpha")
                      : fail("storage: msr-alpha", Json{{"alpha", rational_json(p.alpha)},
                                                         {"expected", rational_json(expected)}}));
  }

  switch (scheme.kind()) {
    case CodeKind::msr0_div: {
      const auto& code = dynamic_cast<const MsrDivisibleCode&>(scheme);
      CheckResult groups = pass("structure: rotation-bijection");
      CheckResult parity = pass("structure: parity-groups");
      for (const auto& id : nodes) {
        std::set<int> seen;
        for (int t = 1; t <= ni; ++t) seen.insert(code.group_of(id, t));
        if (static_cast<int>(seen.size()) != ni || *seen.begin() != (id.l - 1) * ni + 1 ||
            *seen.rbegin() != id.l * ni) {
          groups = fail(groups.name, Json{{"node", to_string(id)}});
          break;
        }
      }
      for (int l = 1; l <= topo.clusters() && groups.pass; ++l) {
        for (int t = 1; t <= ni; ++t) {
          std::set<int> seen;
          for (int j = 1; j <= ni; ++j) seen.insert(code.group_of({l, j}, t));
          if (static_cast<int>(seen.size()) != ni) {
            groups = fail(groups.name, Json{{"cluster", l}, {"slot", t}});
            break;
          }
        }
      }
      std::map<int, FieldElement> sums;
      for (const auto& c : contents) {
        for (const auto& s : c) sums[(s.index - 1) / ni + 1] += s.value;
      }
      for (const auto& [g, v] : sums) {
        if (!v.is_zero()) {
          parity = fail(parity.name, Json{{"group", g}});
          break;
        }
      }
      out.push_back(groups);
      out.push_back(parity);
      break;
    }
    case CodeKind::msr0_nondiv: {
      const auto& code = dynamic_cast<const MsrNondivisibleCode&>(scheme);
      out.push_back(any_k_full_rank(f, code.overall_generator(), topo.k())
                        ? pass("structure: any-k-rank")
                        : fail("structure: any-k-rank", Json{{"reason", "a k-column subset is rank deficient"}}));
      CheckResult parity = pass("structure: cluster-parity");
      for (int l = 1; l <= topo.clusters(); ++l) {
        FieldElement sum;
        for (int j = 1; j <= ni; ++j) sum += contents[static_cast<std::size_t>(topo.flat({l, j}) - 1)].front().value;
        if (!sum.is_zero()) {
          parity = fail(parity.name, Json{{"cluster", l}});
          break;
        }
      }
      out.push_back(parity);
      break;
    }
    case CodeKind::msr_stacked: {
      CheckResult r = pass("structure: one-coordinate-per-code");
      const int n = topo.n();
      for (const auto& id : nodes) {
        const int u = topo.flat(id);
        std::set<int> expected;
        for (int i = 1; i <= n - topo.k(); ++i) expected.insert(n * (i - 1) + u);
        if (index_set(contents[static_cast<std::size_t>(u - 1)]) != expected) {
          r = fail(r.name, Json{{"node", to_string(id)}});
          break;
        }
      }
      out.push_back(r);
      break;
    }
    default:
      break;
  }
  return out;
}

std::vector<CheckResult> verify_params(const Placement& placement, const SystemConfig* config) {
  const auto& scheme = placement.scheme();
  const auto& topo = placement.topology();
  const auto p = placement.params();
  const int ni = topo.nodes_per_cluster();
  const int n = topo.n();
  std::vector<CheckResult> out;
  auto check = [&](const std::string& name, bool ok, Json ce) {
    out.push_back(ok ? pass(name) : fail(name, std::move(ce)));
  };
  const auto values = [&] {
    return Json{{"alpha", rational_json(p.alpha)},
                {"gamma", rational_json(p.gamma)},
                {"beta_i", rational_json(p.beta_intra)},
                {"beta_c", rational_json(p.beta_cross)},
                {"M", rational_json(p.file_size)}};
  };

  check("params: gamma-decomposition", p.gamma == Rational(ni - 1) * p.beta_intra + Rational(n - ni) * p.beta_cross,
        values());
  check("params: capacity", capacity(topo, p.alpha, p.beta_intra, p.beta_cross) == p.file_size, values());

  if (is_mbr(scheme.kind())) {
    const bool zero = scheme.kind() == CodeKind::mbr0;
    const int chi = chi_of_scheme(scheme);
    const std::int64_t m = zero ? mbr_file_size_zero(topo) : mbr_file_size_pos(topo, chi);
    const std::int64_t theta = zero ? binomial(ni, 2) * topo.clusters()
                                    : (chi - 1) * binomial(ni, 2) * topo.clusters() + binomial(n, 2);
    check("params: mbr-file-size", scheme.params().file_size == Rational(m) && scheme.params().theta == theta,
          Json{{"M", m}, {"theta", theta}});
    if (m > 0) {
      const auto pair = mbr_point(topo, p.epsilon, p.file_size);
      check("params: mbr-point", pair.alpha == p.alpha && pair.gamma == p.gamma && p.alpha == p.gamma, values());
    }
  } else {
    const auto pair = msr_point(topo, p.epsilon, p.file_size);
    check("params: msr-point", pair.alpha == p.alpha && pair.gamma == p.gamma, values());
  }

  if (config && (config->declared_file_size || config->declared_alpha || config->declared_gamma)) {
    const bool ok = declared_or(config->declared_file_size, p.file_size) == p.file_size &&
                    declared_or(config->declared_alpha, p.alpha) == p.alpha &&
                    declared_or(config->declared_gamma, p.gamma) == p.gamma;
    Json ce{{"actual", values()}};
    Json declared = Json::object();
    if (config->declared_file_size) declared["M"] = rational_json(*config->declared_file_size);
    if (config->declared_alpha) declared["alpha"] = rational_json(*config->declared_alpha);
    if (config->declared_gamma) declared["gamma"] = rational_json(*config->declared_gamma);
    ce["declared"] = declared;
    check("params: declared", ok, ce);
  }
  return out;
}

std::vector<std::vector<std::pair<NodeId, std::vector<FieldElement>>>> deduplicated_transcripts(
    const Placement& placement) {
  std::vector<std::vector<std::pair<NodeId, std::vector<FieldElement>>>> out;
  for (const auto& id : placement.topology().nodes()) {
    const auto t = collect_repair(placement, id);
    std::vector<std::pair<NodeId, std::vector<FieldElement>>> row;
    for (const auto& c : t.contributions) {
      std::vector<FieldElement> values;
      for (const auto& s : c.symbols) values.push_back(s.value);
      values.erase(std::unique(values.begin(), values.end()), values.end());
      row.emplace_back(c.helper, std::move(values));
    }
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------

VerificationReport verify_placement(const Placement& placement, std::span<const FieldElement> source,
                                    const SystemConfig* config) {
  const auto start = std::chrono::steady_clock::now();
  const auto& scheme = placement.scheme();
  VerificationReport report;
  report.system = Json{{"name", config ? config->name : std::string(to_string(scheme.kind()))},
                       {"kind", std::string(to_string(scheme.kind()))},
                       {"params", params_to_json(placement.params())},
                       {"field", field_to_json(*scheme.field())},
                       {"stripes", placement.stripes()},
                       {"seed", config ? config->seed : 1}};

  auto add = [&](CheckResult r) { report.checks.push_back(std::move(r)); };
  for (auto& r : verify_params(placement, config)) add(std::move(r));
  for (auto& r : verify_structure(placement)) add(std::move(r));
  add(verify_all_repairs(placement));
  add(verify_reconstruction(placement, source, Coverage::automatic, config ? config->seed : 1));
  if (is_mbr(scheme.kind())) add(verify_counting(placement));

  {
    const auto again = placement_from_json(placement_to_json(placement));
    const bool ok = again.nodes() == placement.nodes() && again.stripes() == placement.stripes();
    add(ok ? pass("serialization: round-trip") : fail("serialization: round-trip", nullptr));
  }

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport verify_system(const SystemConfig& config) {
  const ClusterTopology topo(config.n, config.k, config.L);
  const auto scheme = make_scheme(config.kind, topo, config.epsilon, config.field);
  const auto source = random_source(*scheme->field(),
                                    static_cast<std::size_t>(scheme->file_size()) * static_cast<std::size_t>(config.stripes),
                                    config.seed);
  const auto placement = Placement::build(scheme, source);
  return verify_placement(placement, source, &config);
}

std::vector<VerificationReport> run_suite(std::span<const SystemConfig> configs) {
  std::vector<VerificationReport> out;
  for (const auto& c : configs) out.push_back(verify_system(c));
  return out;
}

// ---------------------------------------------------------------------------

std::vector<SweepRow> identity_sweep(int n_max) {
  std::vector<SweepRow> rows;
  for (int n = 2; n <= n_max; ++n) {
    for (int L = 1; L <= n; ++L) {
      if (n % L != 0) continue;
      for (int k = 1; k < n; ++k) {
        const ClusterTopology topo(n, k, L);
        const auto d = derive(topo);
        const int ni = topo.nodes_per_cluster();
        const std::int64_t q = d.q;
        const std::int64_t r = d.r;
        auto row = [&](std::string check, bool ok) { rows.push_back({n, k, L, std::move(check), ok}); };

        row("sum_g", sum_g(d) == k);
        row("weighted_sum_g", 2 * weighted_sum_g(d) == q * ni * ni + r * r + k);
        row("nested_sum_g", 2 * nested_sum_g(d) == static_cast<std::int64_t>(k) + static_cast<std::int64_t>(k) * k);
        std::int64_t tail = 0;
        for (int i = d.tau + 1; i <= k; ++i) tail += d.z[static_cast<std::size_t>(i - 1)];
        row("tau_z", d.tau + tail == k - q);
        row("mbr_zero_capacity", capacity(topo, Rational(ni - 1), Rational(1), Rational(0)) ==
                                     Rational(mbr_file_size_zero(topo)));
        for (int chi = 1; chi <= 4; ++chi) {
          const Rational alpha((ni - 1) * chi + (n - ni));
          const Rational m(mbr_file_size_pos(topo, chi));
          row("mbr_pos_capacity_chi" + std::to_string(chi),
              capacity(topo, alpha, Rational(chi), Rational(1)) == m && s0(topo, Rational(1, chi)) * alpha == m);
        }
        if (ni >= 2) {
          const Rational m(mbr_file_size_zero(topo));
          row("s0_mbr_zero", s0(topo, Rational(0)) * Rational(ni - 1) == m);
          const auto msr0 = msr_point(topo, Rational(0), Rational(k - q));
          row("msr_zero_alpha", msr0.alpha == Rational(1) && (q == 0 || msr0.alpha > Rational(k - q, k)));
        }
        const auto msr1 = msr_point(topo, Rational(1, n - k), Rational(k));
        row("msr_alpha_m_over_k", msr1.alpha == Rational(1));
      }
    }
  }
  return rows;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  std::ostringstream out;
  out << "n,k,L,check,pass\n";
  for (const auto& r : rows) out << r.n << ',' << r.k << ',' << r.L << ',' << r.check << ',' << (r.pass ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace cdss

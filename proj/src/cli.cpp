#include "cdss/cli.hpp"

#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cdss/codes.hpp"
#include "cdss/errors.hpp"
#include "cdss/harness.hpp"
#include "cdss/serialize.hpp"

namespace cdss {

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << data;
  if (!out) throw IoError("failed writing " + path);
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

// Symbols are one byte each in GF(2^8) and big-endian byte pairs in GF(2^16).
std::vector<FieldElement> bytes_to_symbols(const std::string& bytes, const GaloisField& f) {
  const std::size_t width = f.degree() <= 8 ? 1 : 2;
  if (bytes.size() % width != 0) throw UsageError("source length is not a whole number of symbols");
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < bytes.size(); i += width) {
    std::uint32_t v = static_cast<unsigned char>(bytes[i]);
    if (width == 2) v = (v << 8) | static_cast<unsigned char>(bytes[i + 1]);
    out.push_back(f.element(v));
  }
  return out;
}

std::string symbols_to_bytes(std::span<const FieldElement> symbols, const GaloisField& f) {
  std::string out;
  for (auto s : symbols) {
    if (f.degree() > 8) out.push_back(static_cast<char>(s.value() >> 8));
    out.push_back(static_cast<char>(s.value() & 0xFF));
  }
  return out;
}

struct SystemFlags {
  int n = 0;
  int k = 0;
  int L = 0;
  std::string epsilon = "0";
  std::string code;
  std::string mode = "mbr";
  std::optional<int> field_m;
  std::optional<std::uint32_t> field_poly;
};

void add_system_flags(CLI::App* app, SystemFlags& f, bool with_code) {
  app->add_option("--n", f.n, "total nodes");
  app->add_option("--k", f.k, "nodes contacted by a data collector");
  app->add_option("--L", f.L, "clusters");
  app->add_option("--epsilon", f.epsilon, "beta_c / beta_I as p/q");
  if (with_code) {
    app->add_option("--code", f.code, "mbr0 | mbr | msr0-div | msr0-nondiv | msr-stacked | msr-wrapped");
    app->add_option("--field-m", f.field_m, "field extension degree");
    app->add_option("--field-poly", f.field_poly, "field reduction polynomial");
  }
}

FieldPtr field_from_flags(const SystemFlags& f) {
  if (!f.field_m && !f.field_poly) return nullptr;
  const int m = f.field_m.value_or(8);
  const auto poly = f.field_poly.value_or(m == 16 ? GaloisField::kDefaultPoly16 : GaloisField::kDefaultPoly8);
  return GaloisField::create(m, poly);
}

OperatingPoint parse_mode(const std::string& mode) {
  if (mode == "mbr") return OperatingPoint::mbr;
  if (mode == "msr") return OperatingPoint::msr;
  throw UsageError("--mode must be mbr or msr");
}

int cmd_params(const SystemFlags& f, std::ostream& out) {
  const ClusterTopology topo(f.n, f.k, f.L);
  const auto epsilon = parse_rational(f.epsilon);
  const auto point = parse_mode(f.mode);
  auto j = params_to_json(normalized_params(topo, epsilon, point));
  j["mode"] = f.mode;
  j["code"] = std::string(to_string(default_kind(topo, epsilon, point)));
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_capacity(const SystemFlags& f, const std::string& alpha, const std::string& bi, const std::string& bc,
                 std::ostream& out) {
  const ClusterTopology topo(f.n, f.k, f.L);
  const auto c = capacity(topo, parse_rational(alpha), parse_rational(bi), parse_rational(bc));
  Json j{{"n", f.n}, {"k", f.k}, {"L", f.L}, {"alpha", alpha}, {"beta_i", bi}, {"beta_c", bc}, {"capacity", to_string(c)}};
  out << j.dump(2) << '\n';
  return kExitOk;
}

SchemePtr scheme_from(const SystemFlags& f, const std::string& config_path) {
  if (!config_path.empty()) {
    const auto configs = configs_from_json(read_json(config_path));
    if (configs.size() != 1) throw UsageError("build takes a config with exactly one system");
    const auto& c = configs.front();
    return make_scheme(c.kind, ClusterTopology(c.n, c.k, c.L), c.epsilon, c.field);
  }
  if (f.code.empty()) throw UsageError("build needs --config or --code with --n --k --L");
  return make_scheme(parse_code_kind(f.code), ClusterTopology(f.n, f.k, f.L), parse_rational(f.epsilon),
                     field_from_flags(f));
}

int cmd_build(const SystemFlags& f, const std::string& config, const std::string& source_path,
              const std::string& out_path, const std::string& csv_path, std::ostream& out) {
  const auto scheme = scheme_from(f, config);
  const auto source = bytes_to_symbols(read_file(source_path), *scheme->field());
  const auto placement = Placement::build(scheme, source);
  const auto text = placement_to_json(placement).dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
  if (!csv_path.empty()) write_file(csv_path, to_hex_csv(scheme->generator_matrix(), scheme->field()->degree()));
  return kExitOk;
}

int cmd_repair(const std::string& placement_path, const std::string& node, const std::string& transcript_path,
               const std::string& node_path, std::ostream& out) {
  const auto placement = placement_from_json(read_json(placement_path));
  const auto id = parse_node_id(node);
  const auto outcome = repair(placement, id);
  const int bits = placement.scheme().field()->degree();
  const auto transcript = transcript_to_json(outcome.transcript, bits).dump(2) + "\n";
  const auto regenerated = node_content_to_json(placement.topology(), id, outcome.regenerated, bits);
  if (transcript_path.empty()) {
    out << transcript;
  } else {
    write_file(transcript_path, transcript);
  }
  if (!node_path.empty()) write_file(node_path, regenerated.dump(2) + "\n");
  return outcome.regenerated == placement.node(id) ? kExitOk : kExitVerifyFailed;
}

int cmd_reconstruct(const std::string& placement_path, const std::string& nodes, const std::string& out_path,
                    std::ostream& out) {
  const auto placement = placement_from_json(read_json(placement_path));
  const auto ids = parse_node_list(nodes);
  const auto source = reconstruct(placement, ids);
  const auto bytes = symbols_to_bytes(source, *placement.scheme().field());
  if (out_path.empty()) {
    out << bytes;
  } else {
    write_file(out_path, bytes);
  }
  return kExitOk;
}

Json sweep_report(int n_max, double elapsed_ms, bool& all_pass) {
  const auto rows = identity_sweep(n_max);
  std::map<std::string, CheckResult> by_name;
  std::vector<std::string> order;
  for (const auto& r : rows) {
    auto [it, fresh] = by_name.try_emplace(r.check, CheckResult{r.check, true, nullptr});
    if (fresh) order.push_back(r.check);
    if (!r.pass && it->second.pass) {
      it->second.pass = false;
      it->second.counterexample = Json{{"n", r.n}, {"k", r.k}, {"L", r.L}};
    }
  }
  VerificationReport report;
  report.system = Json{{"sweep", Json{{"n_max", n_max}, {"rows", rows.size()}}}};
  for (const auto& name : order) report.checks.push_back(by_name.at(name));
  report.elapsed_ms = elapsed_ms;
  all_pass = report.passed();
  return report_to_json(report);
}

int cmd_verify(const std::string& config, bool sweep, int n_max, const std::string& out_path, std::ostream& out) {
  Json result;
  bool all_pass = true;
  if (sweep) {
    result = sweep_report(n_max, 0, all_pass);
  } else {
    if (config.empty()) throw UsageError("verify needs --config or --sweep");
    const auto configs = configs_from_json(read_json(config));
    result = Json::array();
    for (const auto& report : run_suite(configs)) {
      all_pass = all_pass && report.passed();
      result.push_back(report_to_json(report));
    }
  }
  const auto text = result.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
  return all_pass ? kExitOk : kExitVerifyFailed;
}

int cmd_sweep(int n_max, const std::string& out_path, std::ostream& out) {
  const auto rows = identity_sweep(n_max);
  const auto csv = sweep_csv(rows);
  if (out_path.empty()) {
    out << csv;
  } else {
    write_file(out_path, csv);
  }
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.pass; });
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Regenerating codes for clustered distributed storage", "cdss"};
  app.require_subcommand(1);

  SystemFlags flags;
  std::string config, source, out_path, csv, placement, node, nodes, transcript, node_out;
  std::string alpha, beta_i, beta_c;
  int n_max = 24;
  bool sweep = false;

  auto* params = app.add_subcommand("params", "resource pair and file size of an operating point");
  add_system_flags(params, flags, false);
  params->add_option("--mode", flags.mode, "mbr or msr");
  for (auto* opt : {"--n", "--k", "--L"}) params->get_option(opt)->required();

  auto* cap = app.add_subcommand("capacity", "evaluate the capacity expression");
  add_system_flags(cap, flags, false);
  cap->add_option("--alpha", alpha, "node storage")->required();
  cap->add_option("--beta-i", beta_i, "intra-cluster symbols per helper")->required();
  cap->add_option("--beta-c", beta_c, "cross-cluster symbols per helper")->required();
  for (auto* opt : {"--n", "--k", "--L"}) cap->get_option(opt)->required();

  auto* build = app.add_subcommand("build", "encode a raw byte source into a placement");
  add_system_flags(build, flags, true);
  build->add_option("--config", config, "JSON config with one system");
  build->add_option("--source", source, "raw source bytes")->required();
  build->add_option("--out", out_path, "placement JSON (default: stdout)");
  build->add_option("--generator-csv", csv, "write the generator matrix as hex CSV");

  auto* rep = app.add_subcommand("repair", "regenerate one node from its helpers");
  rep->add_option("--placement", placement, "placement JSON")->required();
  rep->add_option("--node", node, "failed node as l,j")->required();
  rep->add_option("--transcript", transcript, "transcript JSON (default: stdout)");
  rep->add_option("--node-out", node_out, "regenerated node JSON");

  auto* rec = app.add_subcommand("reconstruct", "recover the source from k nodes");
  rec->add_option("--placement", placement, "placement JSON")->required();
  rec->add_option("--nodes", nodes, "contacted nodes, e.g. \"1,1 1,2 2,1\"")->required();
  rec->add_option("--out", out_path, "recovered bytes (default: stdout)");

  auto* ver = app.add_subcommand("verify", "run the verification harness");
  ver->add_option("--config", config, "JSON config (one system, an array, or {\"systems\": [...]})");
  ver->add_flag("--sweep", sweep, "run the closed-form identity sweep");
  ver->add_option("--n-max", n_max, "largest n in the sweep");
  ver->add_option("--out", out_path, "report JSON (default: stdout)");

  auto* swp = app.add_subcommand("sweep", "identity sweep as CSV");
  swp->add_option("--n-max", n_max, "largest n");
  swp->add_option("--out", out_path, "CSV file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParameter;
  }

  try {
    if (*params) return cmd_params(flags, out);
    if (*cap) return cmd_capacity(flags, alpha, beta_i, beta_c, out);
    if (*build) return cmd_build(flags, config, source, out_path, csv, out);
    if (*rep) return cmd_repair(placement, node, transcript, node_out, out);
    if (*rec) return cmd_reconstruct(placement, nodes, out_path, out);
    if (*ver) return cmd_verify(config, sweep, n_max, out_path, out);
    if (*swp) return cmd_sweep(n_max, out_path, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const InconsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  }
  return kExitParameter;
}

}  // namespace cdss

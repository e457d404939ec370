#include "cdss/code.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "cdss/errors.hpp"

namespace cdss {

namespace {

constexpr std::array<std::pair<CodeKind, std::string_view>, 6> kKindNames{{
    {CodeKind::mbr0, "mbr0"},
    {CodeKind::mbr, "mbr"},
    {CodeKind::msr0_div, "msr0-div"},
    {CodeKind::msr0_nondiv, "msr0-nondiv"},
    {CodeKind::msr_stacked, "msr-stacked"},
    {CodeKind::msr_wrapped, "msr-wrapped"},
}};

int as_int(const Rational& r, const char* what) {
  if (!is_integer(r)) throw ParameterError(std::string(what) + " is not an integer: " + to_string(r));
  return static_cast<int>(r.numerator());
}

}  // namespace

std::string_view to_string(CodeKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

CodeKind parse_code_kind(std::string_view text) {
  for (const auto& [k, name] : kKindNames) {
    if (name == text) return k;
  }
  throw ParameterError("unknown code kind \"" + std::string(text) +
                       "\"; expected mbr0, mbr, msr0-div, msr0-nondiv, msr-stacked or msr-wrapped");
}

int RepairTranscript::helper_count(LinkClass link) const {
  return static_cast<int>(std::count_if(contributions.begin(), contributions.end(),
                                        [&](const HelperContribution& c) { return c.link == link; }));
}

std::optional<int> RepairTranscript::per_helper(LinkClass link) const {
  std::optional<int> common;
  for (const auto& c : contributions) {
    if (c.link != link) continue;
    const int sent = static_cast<int>(c.symbols.size());
    if (common && *common != sent) return std::nullopt;
    common = sent;
  }
  return common.value_or(0);
}

int RepairTranscript::gamma() const {
  int total = 0;
  for (const auto& c : contributions) total += static_cast<int>(c.symbols.size());
  return total;
}

Scheme::Scheme(ClusterTopology topology, SystemParams params, FieldPtr field)
    : topology_(topology), params_(std::move(params)), field_(std::move(field)) {}

int Scheme::alpha() const { return as_int(params_.alpha, "alpha"); }
int Scheme::file_size() const { return as_int(params_.file_size, "file size"); }
int Scheme::symbol_count() const { return static_cast<int>(params_.theta.value_or(0)); }

Matrix Scheme::generator_matrix() const {
  const auto m = static_cast<std::size_t>(file_size());
  Matrix g(m, static_cast<std::size_t>(symbol_count()));
  std::vector<FieldElement> unit(m);
  for (std::size_t r = 0; r < m; ++r) {
    std::fill(unit.begin(), unit.end(), FieldElement{});
    unit[r] = FieldElement(1);
    for (const auto& content : encode(unit)) {
      for (const auto& s : content) g(r, static_cast<std::size_t>(s.index - 1)) = s.value;
    }
  }
  return g;
}

std::vector<std::vector<int>> Scheme::index_layout() const {
  const std::vector<FieldElement> zeros(static_cast<std::size_t>(file_size()));
  std::vector<std::vector<int>> out;
  for (const auto& content : encode(zeros)) {
    std::vector<int> idx;
    for (const auto& s : content) idx.push_back(s.index);
    out.push_back(std::move(idx));
  }
  return out;
}

Placement Placement::build(SchemePtr scheme, std::span<const FieldElement> source) {
  const auto m = static_cast<std::size_t>(scheme->file_size());
  if (m == 0) {
    if (!source.empty()) throw UsageError("this code stores no data; the source must be empty");
    return Placement(scheme, 1, scheme->encode(source));
  }
  if (source.empty() || source.size() % m != 0) {
    throw UsageError("source length " + std::to_string(source.size()) + " is not a positive multiple of M = " +
                     std::to_string(m));
  }
  const int stripes = static_cast<int>(source.size() / m);
  const int theta = scheme->symbol_count();
  std::vector<NodeContent> nodes(static_cast<std::size_t>(scheme->topology().n()));
  for (int s = 0; s < stripes; ++s) {
    const auto part = scheme->encode(source.subspan(static_cast<std::size_t>(s) * m, m));
    for (std::size_t u = 0; u < nodes.size(); ++u) {
      for (const auto& sym : part[u]) nodes[u].push_back({s * theta + sym.index, sym.value});
    }
  }
  return Placement(std::move(scheme), stripes, std::move(nodes));
}

Placement::Placement(SchemePtr scheme, int stripes, std::vector<NodeContent> nodes)
    : scheme_(std::move(scheme)), stripes_(stripes), nodes_(std::move(nodes)) {
  const auto& topo = scheme_->topology();
  if (stripes_ < 1) throw FormatError("placement needs at least one stripe");
  if (nodes_.size() != static_cast<std::size_t>(topo.n())) {
    throw FormatError("placement lists " + std::to_string(nodes_.size()) + " nodes, expected " +
                      std::to_string(topo.n()));
  }
  const auto layout = scheme_->index_layout();
  const int theta = scheme_->symbol_count();
  const auto order = static_cast<std::uint32_t>(scheme_->field()->order());
  for (std::size_t u = 0; u < nodes_.size(); ++u) {
    auto& content = nodes_[u];
    std::sort(content.begin(), content.end());
    std::vector<int> expected;
    for (int s = 0; s < stripes_; ++s) {
      for (int idx : layout[u]) expected.push_back(s * theta + idx);
    }
    std::sort(expected.begin(), expected.end());
    std::vector<int> got;
    for (const auto& sym : content) {
      if (sym.value.value() >= order) throw FormatError("symbol value exceeds the field");
      got.push_back(sym.index);
    }
    if (got != expected) {
      throw FormatError("node " + to_string(topo.node_at(static_cast<int>(u) + 1)) +
                        " does not hold the symbol indices this code places there");
    }
  }
}

const NodeContent& Placement::node(NodeId id) const {
  return nodes_[static_cast<std::size_t>(topology().flat(id) - 1)];
}

std::vector<NodeContent> Placement::stripe_contents(int stripe) const {
  if (stripe < 0 || stripe >= stripes_) throw UsageError("stripe out of range");
  const int theta = scheme_->symbol_count();
  std::vector<NodeContent> out(nodes_.size());
  for (std::size_t u = 0; u < nodes_.size(); ++u) {
    for (const auto& sym : nodes_[u]) {
      if ((sym.index - 1) / std::max(theta, 1) == stripe) out[u].push_back({sym.index - stripe * theta, sym.value});
    }
  }
  return out;
}

SystemParams Placement::params() const {
  auto p = scheme_->params();
  const Rational s(stripes_);
  p.beta_intra *= s;
  p.beta_cross *= s;
  p.alpha *= s;
  p.gamma *= s;
  p.file_size *= s;
  return p;
}

RepairTranscript collect_repair(const Placement& placement, NodeId failed) {
  const auto& topo = placement.topology();
  if (!topo.contains(failed)) throw UsageError("node " + to_string(failed) + " is outside the topology");
  const auto& scheme = placement.scheme();
  const int theta = scheme.symbol_count();
  const auto failed_u = static_cast<std::size_t>(topo.flat(failed) - 1);

  RepairTranscript t;
  t.failed = failed;
  t.stripes = placement.stripes();
  for (int s = 0; s < placement.stripes(); ++s) {
    auto contents = placement.stripe_contents(s);
    contents[failed_u].clear();
    const auto part = scheme.transmit(contents, failed);
    if (s == 0) {
      t.contributions = part;
      for (auto& c : t.contributions) c.symbols.clear();
    }
    for (std::size_t h = 0; h < part.size(); ++h) {
      for (auto sym : part[h].symbols) {
        sym.stripe = s;
        if (sym.index) *sym.index += s * theta;
        t.contributions[h].symbols.push_back(sym);
      }
    }
  }
  return t;
}

NodeContent regenerate(const Placement& placement, const RepairTranscript& transcript) {
  const auto& scheme = placement.scheme();
  const int theta = scheme.symbol_count();
  NodeContent out;
  for (int s = 0; s < placement.stripes(); ++s) {
    std::vector<HelperContribution> part;
    for (const auto& c : transcript.contributions) {
      HelperContribution local{c.helper, c.link, {}};
      for (auto sym : c.symbols) {
        if (sym.stripe != s) continue;
        if (sym.index) *sym.index -= s * theta;
        local.symbols.push_back(sym);
      }
      part.push_back(std::move(local));
    }
    for (const auto& sym : scheme.regenerate(transcript.failed, part)) out.push_back({s * theta + sym.index, sym.value});
  }
  std::sort(out.begin(), out.end());
  return out;
}

RepairOutcome repair(const Placement& placement, NodeId failed) {
  RepairOutcome r;
  r.transcript = collect_repair(placement, failed);
  r.regenerated = regenerate(placement, r.transcript);
  return r;
}

std::vector<FieldElement> reconstruct(const Placement& placement, std::span<const NodeId> contacted) {
  const auto& topo = placement.topology();
  std::set<NodeId> distinct;
  for (const auto& id : contacted) {
    if (!topo.contains(id)) throw UsageError("node " + to_string(id) + " is outside the topology");
    if (!distinct.insert(id).second) throw UsageError("node " + to_string(id) + " listed twice");
  }
  if (static_cast<int>(distinct.size()) < topo.k()) {
    throw InsufficientDataError("reconstruction needs k = " + std::to_string(topo.k()) + " distinct nodes, got " +
                                std::to_string(distinct.size()));
  }
  const std::vector<NodeId> ids(contacted.begin(), contacted.end());
  std::vector<FieldElement> out;
  for (int s = 0; s < placement.stripes(); ++s) {
    const auto all = placement.stripe_contents(s);
    std::vector<NodeContent> seen;
    for (const auto& id : ids) seen.push_back(all[static_cast<std::size_t>(topo.flat(id) - 1)]);
    const auto part = placement.scheme().reconstruct(ids, seen);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string hex_value(FieldElement v, int bits) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(static_cast<std::size_t>((bits + 3) / 4), '0');
  unsigned value = v.value();
  for (auto it = out.rbegin(); it != out.rend(); ++it, value >>= 4) *it = kDigits[value & 0xF];
  return out;
}

}  // namespace cdss

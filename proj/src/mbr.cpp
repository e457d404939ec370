#include "cdss/mbr.hpp"

#include <algorithm>
#include <map>

#include "cdss/errors.hpp"

namespace cdss {

namespace {

SystemParams mbr_params(const ClusterTopology& topo, const Rational& epsilon) {
  return normalized_params(topo, epsilon, OperatingPoint::mbr);
}

}  // namespace

std::vector<std::vector<int>> mbr_zero_layout(const ClusterTopology& topo) {
  const int ni = topo.nodes_per_cluster();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(topo.n()));
  if (ni < 2) return out;
  const IncidenceMatrix v(ni);
  const int per_cluster = v.cols();
  for (const auto& id : topo.nodes()) {
    auto& idx = out[static_cast<std::size_t>(topo.flat(id) - 1)];
    for (int i : v.row_support(id.j)) idx.push_back((id.l - 1) * per_cluster + i);
  }
  return out;
}

std::vector<std::vector<int>> mbr_pos_layout(const ClusterTopology& topo, int chi) {
  if (chi < 1) throw ParameterError("chi = 1/epsilon must be a positive integer");
  const int n = topo.n();
  const int ni = topo.nodes_per_cluster();
  const IncidenceMatrix global(n);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  for (const auto& id : topo.nodes()) {
    const int u = topo.flat(id);
    auto& idx = out[static_cast<std::size_t>(u - 1)];
    idx = global.row_support(u);
    if (ni < 2) continue;
    const IncidenceMatrix local(ni);
    for (int t = 1; t < chi; ++t) {
      for (int i2 : local.row_support(id.j)) idx.push_back(join_local_index(topo, chi, {id.l, t, i2}));
    }
    std::sort(idx.begin(), idx.end());
  }
  return out;
}

LocalIndex split_local_index(const ClusterTopology& topo, int chi, int s) {
  const int ni = topo.nodes_per_cluster();
  const auto base = static_cast<int>(binomial(topo.n(), 2));
  const auto delta = static_cast<int>(binomial(ni, 2));
  const int big_delta = (chi - 1) * delta;
  const int theta = base + big_delta * topo.clusters();
  if (s <= base || s > theta || delta == 0) {
    throw UsageError("symbol " + std::to_string(s) + " is not a local symbol index");
  }
  const int sp = s - base;
  const int l = (sp + big_delta - 1) / big_delta;
  const int within = sp - (l - 1) * big_delta;
  const int t = (within + delta - 1) / delta;
  return {l, t, within - (t - 1) * delta};
}

int join_local_index(const ClusterTopology& topo, int chi, LocalIndex idx) {
  const auto base = static_cast<int>(binomial(topo.n(), 2));
  const auto delta = static_cast<int>(binomial(topo.nodes_per_cluster(), 2));
  if (idx.l < 1 || idx.l > topo.clusters() || idx.t < 1 || idx.t >= chi || idx.i2 < 1 || idx.i2 > delta) {
    throw UsageError("local index tuple out of range");
  }
  return base + (chi * idx.l - chi - idx.l + idx.t) * delta + idx.i2;
}

TransferCode::TransferCode(const ClusterTopology& topo, SystemParams params, FieldPtr field,
                           std::vector<std::vector<int>> layout)
    : Scheme(topo, std::move(params), std::move(field)), layout_(std::move(layout)) {
  const auto theta = static_cast<std::size_t>(symbol_count());
  if (theta > 0) rs_ = RsCode::create(theta, static_cast<std::size_t>(file_size()), field_);
}

const std::vector<int>& TransferCode::layout(NodeId id) const {
  return layout_[static_cast<std::size_t>(topology_.flat(id) - 1)];
}

std::vector<NodeContent> TransferCode::encode(std::span<const FieldElement> source) const {
  if (source.size() != static_cast<std::size_t>(file_size())) {
    throw UsageError("source must hold exactly M = " + std::to_string(file_size()) + " symbols");
  }
  std::vector<FieldElement> c;
  if (rs_) c = rs_->encode(source);
  std::vector<NodeContent> out(layout_.size());
  for (std::size_t u = 0; u < layout_.size(); ++u) {
    for (int idx : layout_[u]) out[u].push_back({idx, c[static_cast<std::size_t>(idx - 1)]});
  }
  return out;
}

std::vector<HelperContribution> TransferCode::transmit(std::span<const NodeContent> nodes, NodeId failed) const {
  const auto& wanted = layout(failed);
  std::vector<HelperContribution> out;
  for (const auto& id : topology_.nodes()) {
    if (id == failed) continue;
    HelperContribution c{id, id.l == failed.l ? LinkClass::intra : LinkClass::cross, {}};
    for (const auto& sym : nodes[static_cast<std::size_t>(topology_.flat(id) - 1)]) {
      if (std::binary_search(wanted.begin(), wanted.end(), sym.index)) c.symbols.push_back({0, sym.index, sym.value});
    }
    out.push_back(std::move(c));
  }
  return out;
}

NodeContent TransferCode::regenerate(NodeId failed, std::span<const HelperContribution> received) const {
  std::map<int, FieldElement> got;
  for (const auto& c : received) {
    for (const auto& sym : c.symbols) {
      if (!sym.index) throw InconsistencyError("repair-by-transfer expects indexed symbols");
      const auto [it, fresh] = got.emplace(*sym.index, sym.value);
      if (!fresh && it->second != sym.value) {
        throw InconsistencyError("helpers disagree on symbol c_" + std::to_string(*sym.index));
      }
    }
  }
  NodeContent out;
  for (int idx : layout(failed)) {
    const auto it = got.find(idx);
    if (it == got.end()) throw InsufficientDataError("no helper sent symbol c_" + std::to_string(idx));
    out.push_back({idx, it->second});
  }
  return out;
}

std::vector<FieldElement> TransferCode::reconstruct(std::span<const NodeId>,
                                                    std::span<const NodeContent> contents) const {
  if (!rs_) return {};
  std::map<int, FieldElement> distinct;
  for (const auto& content : contents) {
    for (const auto& sym : content) distinct.emplace(sym.index, sym.value);
  }
  std::vector<RsCode::Share> shares;
  for (const auto& [idx, v] : distinct) shares.push_back({static_cast<std::size_t>(idx - 1), v});
  return rs_->decode(shares);
}

MbrZeroCode::MbrZeroCode(const ClusterTopology& topo, FieldPtr field)
    : TransferCode(topo, mbr_params(topo, Rational(0)), std::move(field), mbr_zero_layout(topo)) {}

MbrPosCode::MbrPosCode(const ClusterTopology& topo, int chi, FieldPtr field)
    : TransferCode(topo, mbr_params(topo, Rational(1, chi < 1 ? 1 : chi)), std::move(field),
                   mbr_pos_layout(topo, chi)),
      chi_(chi) {}

}  // namespace cdss

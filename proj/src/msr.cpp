#include "cdss/msr.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cdss/errors.hpp"

namespace cdss {

namespace {

SystemParams msr_params(const ClusterTopology& topo, const Rational& epsilon) {
  return normalized_params(topo, epsilon, OperatingPoint::msr);
}

void require_length(std::span<const FieldElement> source, int m) {
  if (source.size() != static_cast<std::size_t>(m)) {
    throw UsageError("source must hold exactly M = " + std::to_string(m) + " symbols");
  }
}

std::size_t slot(const ClusterTopology& topo, NodeId id) { return static_cast<std::size_t>(topo.flat(id) - 1); }

std::vector<FieldElement> solve_or_throw(const GaloisField& f, const Matrix& a, std::span<const FieldElement> b,
                                         const char* what) {
  const auto r = solve(f, a, b);
  if (!r.consistent) throw InconsistencyError(std::string(what) + ": received symbols are inconsistent");
  if (r.underdetermined || !r.solution) throw InsufficientDataError(std::string(what) + ": system is rank deficient");
  return *r.solution;
}

}  // namespace

bool any_k_full_rank(const GaloisField& f, const Matrix& g, int k) {
  bool ok = true;
  for_each_combination(static_cast<int>(g.cols()), k, [&](std::span<const int> cols) {
    std::vector<std::size_t> c(cols.begin(), cols.end());
    if (rank(f, g.select_columns(c)) != g.rows()) ok = false;
    return ok;
  });
  return ok;
}

// ---------------------------------------------------------------------------

MsrDivisibleCode::MsrDivisibleCode(const ClusterTopology& topo, FieldPtr field)
    : Scheme(topo, msr_params(topo, Rational(0)), field),
      rs_(RsCode::create(static_cast<std::size_t>(topo.n()), static_cast<std::size_t>(topo.k()), field)) {
  if (topo.k() % topo.nodes_per_cluster() != 0) {
    throw RegimeError("n_I does not divide k; use the msr0-nondiv construction");
  }
}

int MsrDivisibleCode::group_of(NodeId id, int slot_t) const {
  const int ni = topology_.nodes_per_cluster();
  return (id.l - 1) * ni + ((id.j + slot_t - 2) % ni) + 1;
}

std::vector<NodeContent> MsrDivisibleCode::encode(std::span<const FieldElement> source) const {
  require_length(source, file_size());
  const int n = topology_.n();
  const int k = topology_.k();
  const int ni = topology_.nodes_per_cluster();
  // value[t-1][i-1]: slot t of group i; the last slot holds the group sum.
  std::vector<std::vector<FieldElement>> value(static_cast<std::size_t>(ni),
                                               std::vector<FieldElement>(static_cast<std::size_t>(n)));
  for (int t = 0; t < ni - 1; ++t) {
    value[static_cast<std::size_t>(t)] = rs_.encode(source.subspan(static_cast<std::size_t>(t * k), static_cast<std::size_t>(k)));
    for (int i = 0; i < n; ++i) value.back()[static_cast<std::size_t>(i)] += value[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)];
  }
  std::vector<NodeContent> out(static_cast<std::size_t>(n));
  for (const auto& id : topology_.nodes()) {
    auto& content = out[slot(topology_, id)];
    for (int t = 1; t <= ni; ++t) {
      const int g = group_of(id, t);
      content.push_back({symbol_index(g, t), value[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(g - 1)]});
    }
    std::sort(content.begin(), content.end());
  }
  return out;
}

std::vector<HelperContribution> MsrDivisibleCode::transmit(std::span<const NodeContent> nodes, NodeId failed) const {
  std::vector<HelperContribution> out;
  for (const auto& id : topology_.nodes()) {
    if (id == failed) continue;
    HelperContribution c{id, id.l == failed.l ? LinkClass::intra : LinkClass::cross, {}};
    if (c.link == LinkClass::intra) {
      for (const auto& sym : nodes[slot(topology_, id)]) c.symbols.push_back({0, sym.index, sym.value});
    }
    out.push_back(std::move(c));
  }
  return out;
}

NodeContent MsrDivisibleCode::regenerate(NodeId failed, std::span<const HelperContribution> received) const {
  const int ni = topology_.nodes_per_cluster();
  std::map<int, FieldElement> got;
  for (const auto& c : received) {
    for (const auto& sym : c.symbols) {
      if (sym.index) got.emplace(*sym.index, sym.value);
    }
  }
  NodeContent out;
  for (int t = 1; t <= ni; ++t) {
    const int g = group_of(failed, t);
    FieldElement sum;
    for (int other = 1; other <= ni; ++other) {
      if (other == t) continue;
      const auto it = got.find(symbol_index(g, other));
      if (it == got.end()) throw InsufficientDataError("missing parity-group symbol for repair");
      sum += it->second;
    }
    out.push_back({symbol_index(g, t), sum});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FieldElement> MsrDivisibleCode::reconstruct(std::span<const NodeId>,
                                                        std::span<const NodeContent> contents) const {
  const int ni = topology_.nodes_per_cluster();
  std::vector<std::vector<RsCode::Share>> shares(static_cast<std::size_t>(ni - 1));
  for (const auto& content : contents) {
    for (const auto& sym : content) {
      const int g = (sym.index - 1) / ni + 1;
      const int t = (sym.index - 1) % ni + 1;
      if (t < ni) shares[static_cast<std::size_t>(t - 1)].push_back({static_cast<std::size_t>(g - 1), sym.value});
    }
  }
  std::vector<FieldElement> out;
  for (const auto& s : shares) {
    const auto part = rs_.decode(s);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

RsCode nondiv_outer(const ClusterTopology& topo, const FieldPtr& field, int shift) {
  const int ni = topo.nodes_per_cluster();
  const int t_len = topo.clusters() * (ni - 1);
  const int kq = topo.k() - topo.k() / ni;
  std::vector<FieldElement> points;
  for (int i = 1; i <= t_len; ++i) points.push_back(field->element(static_cast<std::uint32_t>(shift + i)));
  return RsCode::with_points(std::move(points), static_cast<std::size_t>(kq), field).systematic();
}

Matrix nondiv_generator(const ClusterTopology& topo, const RsCode& outer) {
  const int ni = topo.nodes_per_cluster();
  const auto& go = outer.generator();
  Matrix g(go.rows(), static_cast<std::size_t>(topo.n()));
  for (int l = 1; l <= topo.clusters(); ++l) {
    for (std::size_t r = 0; r < go.rows(); ++r) {
      FieldElement parity;
      for (int j = 1; j < ni; ++j) {
        const auto v = go(r, static_cast<std::size_t>((l - 1) * (ni - 1) + j - 1));
        g(r, static_cast<std::size_t>((l - 1) * ni + j - 1)) = v;
        parity += v;
      }
      g(r, static_cast<std::size_t>(l * ni - 1)) = parity;
    }
  }
  return g;
}

}  // namespace

MsrNondivisibleCode::MsrNondivisibleCode(const ClusterTopology& topo, FieldPtr field)
    : Scheme(topo, msr_params(topo, Rational(0)), field),
      outer_(RsCode::create(1, 1, field)) {
  const int ni = topo.nodes_per_cluster();
  if (topo.k() % ni == 0) throw RegimeError("n_I divides k; use the msr0-div construction");
  const int t_len = topo.clusters() * (ni - 1);
  const auto limit = static_cast<int>(field->order()) - 1;
  for (int shift = 0; shift + t_len <= limit; ++shift) {
    auto outer = nondiv_outer(topo, field, shift);
    auto g = nondiv_generator(topo, outer);
    if (any_k_full_rank(*field, g, topo.k())) {
      outer_ = std::move(outer);
      generator_ = std::move(g);
      shift_ = shift;
      return;
    }
  }
  throw ParameterError("no evaluation-point shift gives every k-node subset full rank in GF(2^" +
                       std::to_string(field->degree()) + "); try a larger field");
}

std::vector<NodeContent> MsrNondivisibleCode::encode(std::span<const FieldElement> source) const {
  require_length(source, file_size());
  const auto y = multiply(*field_, source, generator_);
  std::vector<NodeContent> out(y.size());
  for (std::size_t u = 0; u < y.size(); ++u) out[u].push_back({static_cast<int>(u) + 1, y[u]});
  return out;
}

std::vector<HelperContribution> MsrNondivisibleCode::transmit(std::span<const NodeContent> nodes, NodeId failed) const {
  std::vector<HelperContribution> out;
  for (const auto& id : topology_.nodes()) {
    if (id == failed) continue;
    HelperContribution c{id, id.l == failed.l ? LinkClass::intra : LinkClass::cross, {}};
    if (c.link == LinkClass::intra) {
      for (const auto& sym : nodes[slot(topology_, id)]) c.symbols.push_back({0, sym.index, sym.value});
    }
    out.push_back(std::move(c));
  }
  return out;
}

NodeContent MsrNondivisibleCode::regenerate(NodeId failed, std::span<const HelperContribution> received) const {
  FieldElement sum;
  int count = 0;
  for (const auto& c : received) {
    if (c.link != LinkClass::intra) continue;
    for (const auto& sym : c.symbols) {
      sum += sym.value;
      ++count;
    }
  }
  if (count != topology_.nodes_per_cluster() - 1) {
    throw InsufficientDataError("parity repair needs one symbol from each surviving cluster member");
  }
  return {{topology_.flat(failed), sum}};
}

std::vector<FieldElement> MsrNondivisibleCode::reconstruct(std::span<const NodeId>,
                                                           std::span<const NodeContent> contents) const {
  std::vector<std::size_t> cols;
  std::vector<FieldElement> values;
  for (const auto& content : contents) {
    for (const auto& sym : content) {
      cols.push_back(static_cast<std::size_t>(sym.index - 1));
      values.push_back(sym.value);
    }
  }
  return solve_or_throw(*field_, generator_.select_columns(cols).transposed(), values, "reconstruction");
}

// ---------------------------------------------------------------------------

MsrStackedCode::MsrStackedCode(const ClusterTopology& topo, FieldPtr field)
    : Scheme(topo, msr_params(topo, Rational(1, topo.n() - topo.k())), field),
      rs_(RsCode::create(static_cast<std::size_t>(topo.n()), static_cast<std::size_t>(topo.k()), field)) {
  if (topo.n() != topo.k() * topo.clusters()) {
    throw RegimeError("the stacked construction needs n = kL, got n=" + std::to_string(topo.n()) +
                      ", k=" + std::to_string(topo.k()) + ", L=" + std::to_string(topo.clusters()));
  }
}

std::vector<NodeContent> MsrStackedCode::encode(std::span<const FieldElement> source) const {
  require_length(source, file_size());
  const int n = topology_.n();
  const int k = topology_.k();
  std::vector<NodeContent> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n - k; ++i) {
    const auto c = rs_.encode(source.subspan(static_cast<std::size_t>((i - 1) * k), static_cast<std::size_t>(k)));
    for (int t = 1; t <= n; ++t) {
      out[static_cast<std::size_t>(t - 1)].push_back({n * (i - 1) + t, c[static_cast<std::size_t>(t - 1)]});
    }
  }
  return out;
}

std::vector<HelperContribution> MsrStackedCode::transmit(std::span<const NodeContent> nodes, NodeId failed) const {
  const int n = topology_.n();
  std::vector<HelperContribution> out;
  int next_code = 1;
  for (const auto& id : topology_.nodes()) {
    if (id == failed) continue;
    const auto& content = nodes[slot(topology_, id)];
    HelperContribution c{id, id.l == failed.l ? LinkClass::intra : LinkClass::cross, {}};
    if (c.link == LinkClass::intra) {
      for (const auto& sym : content) c.symbols.push_back({0, sym.index, sym.value});
    } else {
      const int want = n * (next_code++ - 1) + topology_.flat(id);
      for (const auto& sym : content) {
        if (sym.index == want) c.symbols.push_back({0, sym.index, sym.value});
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

NodeContent MsrStackedCode::regenerate(NodeId failed, std::span<const HelperContribution> received) const {
  const int n = topology_.n();
  const int k = topology_.k();
  const int u = topology_.flat(failed);
  std::vector<std::vector<RsCode::Share>> shares(static_cast<std::size_t>(n - k));
  for (const auto& c : received) {
    for (const auto& sym : c.symbols) {
      if (!sym.index) throw InconsistencyError("stacked repair expects indexed symbols");
      const int i = (*sym.index - 1) / n;
      shares[static_cast<std::size_t>(i)].push_back({static_cast<std::size_t>((*sym.index - 1) % n), sym.value});
    }
  }
  NodeContent out;
  for (int i = 0; i < n - k; ++i) {
    const auto msg = rs_.decode(shares[static_cast<std::size_t>(i)]);
    out.push_back({n * i + u, rs_.encode(msg)[static_cast<std::size_t>(u - 1)]});
  }
  return out;
}

std::vector<FieldElement> MsrStackedCode::reconstruct(std::span<const NodeId>,
                                                      std::span<const NodeContent> contents) const {
  const int n = topology_.n();
  const int k = topology_.k();
  std::vector<std::vector<RsCode::Share>> shares(static_cast<std::size_t>(n - k));
  for (const auto& content : contents) {
    for (const auto& sym : content) {
      shares[static_cast<std::size_t>((sym.index - 1) / n)].push_back(
          {static_cast<std::size_t>((sym.index - 1) % n), sym.value});
    }
  }
  std::vector<FieldElement> out;
  for (const auto& s : shares) {
    const auto part = rs_.decode(s);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// ---------------------------------------------------------------------------

ProductMatrixMsr::ProductMatrixMsr(int n, int k, FieldPtr field) : BaseMsrCode(std::move(field)), n_(n), k_(k) {
  if (k < 2 || n != 2 * k - 1) {
    throw RegimeError("the product-matrix base code needs n = 2k - 1 and k >= 2, got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k));
  }
  const int a = k - 1;
  const int d = 2 * a;
  const auto& f = *field_;
  std::vector<FieldElement> xs;
  std::set<FieldElement> used;
  for (std::uint32_t v = 1; v < f.order() && static_cast<int>(xs.size()) < n; ++v) {
    const FieldElement x(v);
    const auto lam = f.pow(x, a);
    if (used.insert(lam).second) {
      xs.push_back(x);
      lambda_.push_back(lam);
    }
  }
  if (static_cast<int>(xs.size()) < n) {
    throw ParameterError("GF(2^" + std::to_string(f.degree()) + ") lacks " + std::to_string(n) +
                         " points with distinct x^alpha; use a larger field");
  }
  psi_ = Matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(d));
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < d; ++c) psi_(static_cast<std::size_t>(i), static_cast<std::size_t>(c)) = f.pow(xs[static_cast<std::size_t>(i)], c);
  }
}

std::vector<FieldElement> ProductMatrixMsr::phi(int node) const {
  const auto r = psi_.row(static_cast<std::size_t>(node));
  return {r.begin(), r.begin() + alpha()};
}

namespace {

// Fills two symmetric a x a matrices from a source laid out as the upper
// triangle of S1 row by row, then the upper triangle of S2.
std::pair<Matrix, Matrix> unpack_symmetric(std::span<const FieldElement> source, int a) {
  Matrix s1(static_cast<std::size_t>(a), static_cast<std::size_t>(a));
  Matrix s2(static_cast<std::size_t>(a), static_cast<std::size_t>(a));
  std::size_t pos = 0;
  for (Matrix* s : {&s1, &s2}) {
    for (std::size_t r = 0; r < static_cast<std::size_t>(a); ++r) {
      for (std::size_t c = r; c < static_cast<std::size_t>(a); ++c) {
        (*s)(r, c) = (*s)(c, r) = source[pos++];
      }
    }
  }
  return {s1, s2};
}

void pack_symmetric(const Matrix& s, std::vector<FieldElement>& out) {
  for (std::size_t r = 0; r < s.rows(); ++r) {
    for (std::size_t c = r; c < s.cols(); ++c) out.push_back(s(r, c));
  }
}

FieldElement dot(const GaloisField& f, std::span<const FieldElement> a, std::span<const FieldElement> b) {
  FieldElement acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += f.mul(a[i], b[i]);
  return acc;
}

}  // namespace

std::vector<std::vector<FieldElement>> ProductMatrixMsr::encode(std::span<const FieldElement> source) const {
  require_length(source, file_size());
  const int a = alpha();
  const auto& f = *field_;
  const auto [s1, s2] = unpack_symmetric(source, a);
  std::vector<std::vector<FieldElement>> out;
  for (int i = 0; i < n_; ++i) {
    const auto p = phi(i);
    auto first = multiply(f, p, s1);
    const auto second = multiply(f, p, s2);
    for (int b = 0; b < a; ++b) {
      first[static_cast<std::size_t>(b)] += f.mul(lambda_[static_cast<std::size_t>(i)], second[static_cast<std::size_t>(b)]);
    }
    out.push_back(std::move(first));
  }
  return out;
}

FieldElement ProductMatrixMsr::repair_symbol(int, std::span<const FieldElement> content, int failed) const {
  return dot(*field_, content, phi(failed));
}

std::vector<FieldElement> ProductMatrixMsr::repair(int failed, std::span<const int> helpers,
                                                   std::span<const FieldElement> symbols) const {
  const int a = alpha();
  const auto d = static_cast<std::size_t>(2 * a);
  std::set<int> distinct(helpers.begin(), helpers.end());
  distinct.erase(failed);
  if (distinct.size() < d || helpers.size() != symbols.size()) {
    throw InsufficientDataError("product-matrix repair needs one symbol from each of d = " + std::to_string(d) +
                                " helpers");
  }
  std::vector<std::size_t> rows;
  std::vector<FieldElement> rhs;
  for (std::size_t i = 0; i < helpers.size() && rows.size() < d; ++i) {
    if (helpers[i] == failed) continue;
    rows.push_back(static_cast<std::size_t>(helpers[i]));
    rhs.push_back(symbols[i]);
  }
  const auto w = solve_or_throw(*field_, psi_.select_rows(rows), rhs, "repair");
  std::vector<FieldElement> out(static_cast<std::size_t>(a));
  for (int b = 0; b < a; ++b) {
    out[static_cast<std::size_t>(b)] =
        w[static_cast<std::size_t>(b)] + field_->mul(lambda_[static_cast<std::size_t>(failed)], w[static_cast<std::size_t>(a + b)]);
  }
  return out;
}

std::vector<FieldElement> ProductMatrixMsr::reconstruct(std::span<const int> nodes,
                                                        std::span<const std::vector<FieldElement>> contents) const {
  const auto& f = *field_;
  const int a = alpha();
  const auto kk = static_cast<std::size_t>(k_);
  if (nodes.size() < kk || std::set<int>(nodes.begin(), nodes.end()).size() != nodes.size()) {
    throw InsufficientDataError("reconstruction needs k distinct nodes");
  }
  // A = Y Phi_DC^T splits into symmetric P = Phi S1 Phi^T and Q = Phi S2 Phi^T.
  Matrix p(kk, kk);
  Matrix q(kk, kk);
  for (std::size_t i = 0; i < kk; ++i) {
    for (std::size_t j = i + 1; j < kk; ++j) {
      const auto aij = dot(f, contents[i], phi(nodes[j]));
      const auto aji = dot(f, contents[j], phi(nodes[i]));
      const auto li = lambda_[static_cast<std::size_t>(nodes[i])];
      const auto lj = lambda_[static_cast<std::size_t>(nodes[j])];
      const auto qij = f.div(aij - aji, li - lj);
      q(i, j) = q(j, i) = qij;
      p(i, j) = p(j, i) = aij - f.mul(li, qij);
    }
  }
  // Off-diagonal entries of row i give phi_i^T S phi_j for the other k - 1 = alpha nodes.
  auto recover = [&](const Matrix& m) {
    Matrix rows(static_cast<std::size_t>(a), static_cast<std::size_t>(a));
    Matrix phis(static_cast<std::size_t>(a), static_cast<std::size_t>(a));
    for (std::size_t i = 0; i < static_cast<std::size_t>(a); ++i) {
      Matrix others(static_cast<std::size_t>(a), static_cast<std::size_t>(a));
      std::vector<FieldElement> rhs;
      std::size_t r = 0;
      for (std::size_t j = 0; j < kk; ++j) {
        if (j == i) continue;
        const auto pj = phi(nodes[j]);
        for (std::size_t c = 0; c < pj.size(); ++c) others(r, c) = pj[c];
        rhs.push_back(m(i, j));
        ++r;
      }
      const auto row = solve_or_throw(f, others, rhs, "reconstruction");
      const auto pi = phi(nodes[i]);
      for (std::size_t c = 0; c < static_cast<std::size_t>(a); ++c) {
        rows(i, c) = row[c];
        phis(i, c) = pi[c];
      }
    }
    return multiply(f, inverse(f, phis), rows);
  };
  std::vector<FieldElement> out;
  pack_symmetric(recover(p), out);
  pack_symmetric(recover(q), out);
  return out;
}

// ---------------------------------------------------------------------------

WrappedMsrCode::WrappedMsrCode(std::shared_ptr<const BaseMsrCode> base, const ClusterTopology& topo, int chi)
    : Scheme(topo, msr_params(topo, Rational(1, chi < 1 ? 1 : chi)), base->field()), base_(std::move(base)),
      chi_(chi) {
  if (chi < 1) throw ParameterError("chi = 1/epsilon must be a positive integer");
  if (base_->n() != topo.n() || base_->k() != topo.k()) {
    throw ParameterError("base code parameters do not match the topology");
  }
}

std::vector<NodeContent> WrappedMsrCode::encode(std::span<const FieldElement> source) const {
  require_length(source, file_size());
  const int a = alpha();
  const auto nodes = base_->encode(source);
  std::vector<NodeContent> out(nodes.size());
  for (std::size_t u = 0; u < nodes.size(); ++u) {
    for (int b = 0; b < a; ++b) out[u].push_back({static_cast<int>(u) * a + b + 1, nodes[u][static_cast<std::size_t>(b)]});
  }
  return out;
}

std::vector<HelperContribution> WrappedMsrCode::transmit(std::span<const NodeContent> nodes, NodeId failed) const {
  const int f = topology_.flat(failed) - 1;
  std::vector<HelperContribution> out;
  for (const auto& id : topology_.nodes()) {
    if (id == failed) continue;
    const auto& content = nodes[slot(topology_, id)];
    std::vector<FieldElement> values;
    for (const auto& sym : content) values.push_back(sym.value);
    const auto v = base_->repair_symbol(topology_.flat(id) - 1, values, f);
    HelperContribution c{id, id.l == failed.l ? LinkClass::intra : LinkClass::cross, {}};
    const int copies = c.link == LinkClass::intra ? chi_ : 1;
    for (int i = 0; i < copies; ++i) c.symbols.push_back({0, std::nullopt, v});
    out.push_back(std::move(c));
  }
  return out;
}

NodeContent WrappedMsrCode::regenerate(NodeId failed, std::span<const HelperContribution> received) const {
  std::vector<int> helpers;
  std::vector<FieldElement> symbols;
  for (const auto& c : received) {
    if (c.symbols.empty()) continue;
    const auto v = c.symbols.front().value;
    for (const auto& sym : c.symbols) {
      if (sym.value != v) throw InconsistencyError("helper " + to_string(c.helper) + " sent disagreeing copies");
    }
    helpers.push_back(topology_.flat(c.helper) - 1);
    symbols.push_back(v);
  }
  const int u = topology_.flat(failed) - 1;
  const auto values = base_->repair(u, helpers, symbols);
  NodeContent out;
  for (std::size_t b = 0; b < values.size(); ++b) out.push_back({u * alpha() + static_cast<int>(b) + 1, values[b]});
  return out;
}

std::vector<FieldElement> WrappedMsrCode::reconstruct(std::span<const NodeId> contacted,
                                                      std::span<const NodeContent> contents) const {
  std::vector<int> nodes;
  std::vector<std::vector<FieldElement>> values;
  for (std::size_t i = 0; i < contacted.size(); ++i) {
    nodes.push_back(topology_.flat(contacted[i]) - 1);
    std::vector<FieldElement> v;
    for (const auto& sym : contents[i]) v.push_back(sym.value);
    values.push_back(std::move(v));
  }
  return base_->reconstruct(nodes, values);
}

}  // namespace cdss

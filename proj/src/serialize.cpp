#include "cdss/serialize.hpp"

#include "cdss/codes.hpp"
#include "cdss/errors.hpp"

namespace cdss {

namespace {

Json rational_json(const Rational& r) {
  if (is_integer(r)) return r.numerator();
  return to_string(r);
}

std::uint32_t parse_hex(const std::string& text, const GaloisField& f) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &used, 16);
  } catch (const std::logic_error&) {
    throw FormatError("malformed hex value \"" + text + "\"");
  }
  if (used != text.size() || !f.contains(static_cast<std::uint32_t>(v)) || v > 0xFFFFul) {
    throw FormatError("hex value \"" + text + "\" is not a field element");
  }
  return static_cast<std::uint32_t>(v);
}

template <typename T>
T field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw FormatError(std::string("key \"") + key + "\" has the wrong type");
  }
}

Rational rational_of(const Json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const ParameterError& e) {
    throw FormatError(e.what());
  }
  throw FormatError("expected an integer or a \"p/q\" string");
}

}  // namespace

Json params_to_json(const SystemParams& p) {
  Json j;
  j["n"] = p.n;
  j["k"] = p.k;
  j["L"] = p.L;
  j["epsilon"] = to_string(p.epsilon);
  j["alpha"] = rational_json(p.alpha);
  j["gamma"] = rational_json(p.gamma);
  j["beta_i"] = rational_json(p.beta_intra);
  j["beta_c"] = rational_json(p.beta_cross);
  j["M"] = rational_json(p.file_size);
  j["theta"] = p.theta ? Json(*p.theta) : Json(nullptr);
  return j;
}

Json field_to_json(const GaloisField& f) { return Json{{"m", f.degree()}, {"poly", f.poly()}}; }

FieldPtr field_from_json(const Json& j) {
  return GaloisField::create(field_of<int>(j, "m"), field_of<std::uint32_t>(j, "poly"));
}

Json node_content_to_json(const ClusterTopology&, NodeId id, const NodeContent& content, int bits) {
  Json symbols = Json::array();
  for (const auto& s : content) symbols.push_back(Json{{"idx", s.index}, {"val_hex", hex_value(s.value, bits)}});
  return Json{{"l", id.l}, {"j", id.j}, {"symbols", std::move(symbols)}};
}

NodeContent node_content_from_json(const Json& j, const GaloisField& f) {
  NodeContent out;
  const auto symbols = field_of<Json>(j, "symbols");
  if (!symbols.is_array()) throw FormatError("\"symbols\" must be an array");
  for (const auto& s : symbols) {
    out.push_back({field_of<int>(s, "idx"), FieldElement(parse_hex(field_of<std::string>(s, "val_hex"), f))});
  }
  return out;
}

Json placement_to_json(const Placement& placement) {
  const auto& scheme = placement.scheme();
  const auto& topo = placement.topology();
  const int bits = scheme.field()->degree();
  Json j;
  j["kind"] = std::string(to_string(scheme.kind()));
  auto params = params_to_json(placement.params());
  params["stripes"] = placement.stripes();
  params["field"] = field_to_json(*scheme.field());
  j["params"] = std::move(params);
  Json nodes = Json::array();
  for (const auto& id : topo.nodes()) nodes.push_back(node_content_to_json(topo, id, placement.node(id), bits));
  j["nodes"] = std::move(nodes);
  return j;
}

Placement placement_from_json(const Json& j) {
  const auto kind_text = field_of<std::string>(j, "kind");
  const auto params = field_of<Json>(j, "params");
  SchemePtr scheme;
  try {
    const ClusterTopology topo(field_of<int>(params, "n"), field_of<int>(params, "k"), field_of<int>(params, "L"));
    const auto epsilon = rational_of(field_of<Json>(params, "epsilon"));
    scheme = make_scheme(parse_code_kind(kind_text), topo, epsilon, field_from_json(field_of<Json>(params, "field")));
  } catch (const ParameterError& e) {
    throw FormatError(std::string("placement parameters rejected: ") + e.what());
  }
  const int stripes = field_of<int>(params, "stripes");
  const auto& topo = scheme->topology();
  std::vector<NodeContent> nodes(static_cast<std::size_t>(topo.n()));
  std::vector<bool> seen(nodes.size(), false);
  const auto list = field_of<Json>(j, "nodes");
  if (!list.is_array()) throw FormatError("\"nodes\" must be an array");
  for (const auto& entry : list) {
    const NodeId id{field_of<int>(entry, "l"), field_of<int>(entry, "j")};
    if (!topo.contains(id)) throw FormatError("node " + to_string(id) + " is outside the topology");
    const auto u = static_cast<std::size_t>(topo.flat(id) - 1);
    if (seen[u]) throw FormatError("node " + to_string(id) + " listed twice");
    seen[u] = true;
    nodes[u] = node_content_from_json(entry, *scheme->field());
  }
  Placement placement(scheme, stripes, std::move(nodes));
  const auto stored = params_to_json(placement.params());
  for (const auto* key : {"alpha", "gamma", "beta_i", "beta_c", "M"}) {
    if (params.contains(key) && params.at(key) != stored.at(key)) {
      throw FormatError(std::string("placement parameter \"") + key + "\" does not match the code");
    }
  }
  return placement;
}

Json transcript_to_json(const RepairTranscript& t, int bits) {
  Json j;
  j["failed"] = Json{{"l", t.failed.l}, {"j", t.failed.j}};
  j["stripes"] = t.stripes;
  Json helpers = Json::array();
  for (const auto& c : t.contributions) {
    Json symbols = Json::array();
    for (const auto& s : c.symbols) {
      Json sym;
      sym["stripe"] = s.stripe;
      sym["idx"] = s.index ? Json(*s.index) : Json(nullptr);
      sym["val_hex"] = hex_value(s.value, bits);
      symbols.push_back(std::move(sym));
    }
    helpers.push_back(Json{{"l", c.helper.l},
                           {"j", c.helper.j},
                           {"link", c.link == LinkClass::intra ? "intra" : "cross"},
                           {"symbols", std::move(symbols)}});
  }
  j["helpers"] = std::move(helpers);
  const auto bi = t.per_helper(LinkClass::intra);
  const auto bc = t.per_helper(LinkClass::cross);
  j["beta_i"] = bi ? Json(*bi) : Json(nullptr);
  j["beta_c"] = bc ? Json(*bc) : Json(nullptr);
  j["gamma"] = t.gamma();
  return j;
}

RepairTranscript transcript_from_json(const Json& j, const GaloisField& f) {
  RepairTranscript t;
  const auto failed = field_of<Json>(j, "failed");
  t.failed = {field_of<int>(failed, "l"), field_of<int>(failed, "j")};
  t.stripes = field_of<int>(j, "stripes");
  for (const auto& h : field_of<Json>(j, "helpers")) {
    HelperContribution c;
    c.helper = {field_of<int>(h, "l"), field_of<int>(h, "j")};
    const auto link = field_of<std::string>(h, "link");
    if (link != "intra" && link != "cross") throw FormatError("link must be \"intra\" or \"cross\"");
    c.link = link == "intra" ? LinkClass::intra : LinkClass::cross;
    for (const auto& s : field_of<Json>(h, "symbols")) {
      SentSymbol sym;
      sym.stripe = field_of<int>(s, "stripe");
      if (!s.at("idx").is_null()) sym.index = field_of<int>(s, "idx");
      sym.value = FieldElement(parse_hex(field_of<std::string>(s, "val_hex"), f));
      c.symbols.push_back(sym);
    }
    t.contributions.push_back(std::move(c));
  }
  return t;
}

}  // namespace cdss

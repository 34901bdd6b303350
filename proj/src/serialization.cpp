#include "ordcopies/serialization.hpp"

#include <cstdlib>
#include <string>

#include "ordcopies/error.hpp"

namespace ordcopies {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError("json: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::uint64_t as_u64(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    bad(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

bool as_bit(const json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    if (v == 0 || v == 1) return v == 1;
  }
  bad("dimension-0 entries must be 0 or 1");
}

CubeSet cube_at(const json& j, std::size_t dim) {
  if (dim == 0) return CubeSet::bit(as_bit(j));
  if (!j.is_object()) bad("expected a CubeSet object of dimension " + std::to_string(dim));
  std::uint64_t d = as_u64(field(j, "dim"), "dim");
  if (d != dim) bad("child has dim " + std::to_string(d) + ", expected " + std::to_string(dim));
  auto read = [&](const char* key) {
    const json& arr = field(j, key);
    if (!arr.is_array()) bad(std::string("\"") + key + "\" must be an array");
    std::vector<CubeSet> out;
    for (const auto& c : arr) out.push_back(cube_at(c, dim - 1));
    return out;
  };
  auto prefix = read("prefix");
  auto cycle = read("cycle");
  if (cycle.empty()) bad("\"cycle\" must be nonempty");
  return CubeSet::make(dim, std::move(prefix), std::move(cycle));
}

std::vector<bool> bit_list(const json& j) {
  if (!j.is_array()) bad("expected an array of 0/1");
  std::vector<bool> out;
  for (const auto& b : j) out.push_back(as_bit(b));
  return out;
}

}  // namespace

Limits Limits::from_env() {
  Limits l;
  if (const char* v = std::getenv("ORDCOPIES_NMAX")) {
    char* end = nullptr;
    unsigned long n = std::strtoul(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) l.max_dim = l.max_layer_prefix = n;
  }
  return l;
}

json to_json(const CubeSet& s) {
  if (s.dim() == 0) return s.is_set() ? 1 : 0;
  json prefix = json::array(), cycle = json::array();
  for (const auto& c : s.prefix()) prefix.push_back(to_json(c));
  for (const auto& c : s.cycle()) cycle.push_back(to_json(c));
  return json{{"dim", s.dim()}, {"prefix", prefix}, {"cycle", cycle}};
}

CubeSet cube_set_from_json(const json& j, const Limits& limits) {
  if (!j.is_object()) return CubeSet::bit(as_bit(j));
  std::uint64_t d = as_u64(field(j, "dim"), "dim");
  if (d > limits.max_dim)
    throw RepresentationLimit("CubeSet dimension " + std::to_string(d) + " exceeds cap " +
                              std::to_string(limits.max_dim) + " (set ORDCOPIES_NMAX)");
  return cube_at(j, d);
}

json to_json(const Point& p) { return json(p); }

Point point_from_json(const json& j) {
  if (!j.is_array()) bad("a point must be an array of naturals");
  Point p;
  for (const auto& c : j) p.push_back(as_u64(c, "coordinate"));
  return p;
}

json to_json(const FinCof& f) {
  return json{{"kind", f.kind == FinCof::Kind::Finite ? "finite" : "cofinite"},
              {"exceptions", std::vector<std::uint64_t>(f.exceptions.begin(), f.exceptions.end())}};
}

json to_json(const NatSet& s) {
  if (auto f = s.as_fincof()) return to_json(*f);
  json prefix = json::array(), cycle = json::array();
  for (const auto& b : s.bits().prefix()) prefix.push_back(b.is_set() ? 1 : 0);
  for (const auto& b : s.bits().cycle()) cycle.push_back(b.is_set() ? 1 : 0);
  return json{{"kind", "periodic"}, {"prefix", prefix}, {"cycle", cycle}};
}

NatSet nat_set_from_json(const json& j) {
  const json& kind = field(j, "kind");
  if (!kind.is_string()) bad("\"kind\" must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "finite" || k == "cofinite") {
    FinCof f;
    f.kind = k == "finite" ? FinCof::Kind::Finite : FinCof::Kind::Cofinite;
    const json& ex = field(j, "exceptions");
    if (!ex.is_array()) bad("\"exceptions\" must be an array");
    for (const auto& e : ex) f.exceptions.insert(as_u64(e, "exception"));
    return NatSet::from_fincof(f);
  }
  if (k == "periodic") {
    auto cycle = bit_list(field(j, "cycle"));
    if (cycle.empty()) bad("\"cycle\" must be nonempty");
    return NatSet::periodic(bit_list(field(j, "prefix")), std::move(cycle));
  }
  bad("unknown set kind \"" + k + "\"");
}

json to_json(const LayeredSet& s) {
  json prefix = json::array();
  for (const auto& c : s.prefix()) prefix.push_back(to_json(c));
  json tail;
  if (s.tail().is_empty())
    tail = "empty";
  else if (s.tail() == NatSet::from(s.prefix().size()))
    tail = "full";
  else
    tail = to_json(s.tail());
  return json{{"prefix", prefix}, {"tail", tail}};
}

LayeredSet layered_set_from_json(const json& j, const Limits& limits) {
  const json& prefix = field(j, "prefix");
  if (!prefix.is_array()) bad("\"prefix\" must be an array");
  if (prefix.size() > limits.max_layer_prefix)
    throw RepresentationLimit("LayeredSet prefix length " + std::to_string(prefix.size()) +
                              " exceeds cap " + std::to_string(limits.max_layer_prefix) +
                              " (set ORDCOPIES_NMAX)");
  std::vector<CubeSet> cols;
  for (std::size_t n = 0; n < prefix.size(); ++n) cols.push_back(cube_at(prefix[n], n + 1));
  const json& tail = field(j, "tail");
  NatSet mask;
  if (tail.is_string()) {
    const std::string t = tail.get<std::string>();
    if (t == "full")
      mask = NatSet::all();
    else if (t != "empty")
      bad("\"tail\" must be \"empty\", \"full\" or a set of column indices");
  } else {
    mask = nat_set_from_json(tail);
  }
  return LayeredSet(std::move(cols), std::move(mask));
}

json expr_to_json(const ExprPtr& e) {
  if (auto q = e->as<QuotientAlgebra>()) return json{{"kind", "quotient"}, {"gamma", q->gamma.to_string()}};
  if (auto rp = e->as<ReducedPowerIter>())
    return json{{"kind", "reduced_power"}, {"r", rp->r}, {"inner", expr_to_json(rp->inner)}};
  if (auto p = e->as<PositivePart>()) return json{{"kind", "positive"}, {"inner", expr_to_json(p->inner)}};
  if (auto p = e->as<Power>()) return json{{"kind", "power"}, {"s", p->s}, {"inner", expr_to_json(p->inner)}};
  if (auto p = e->as<Product>()) {
    json fs = json::array();
    for (const auto& f : p->factors) fs.push_back(expr_to_json(f));
    return json{{"kind", "product"}, {"factors", fs}};
  }
  auto it = e->as<Iteration>();
  return json{{"kind", "iteration"}, {"first", expr_to_json(it->first)}, {"annotation", it->annotation}};
}

ExprPtr expr_from_json(const json& j) {
  const json& kind = field(j, "kind");
  if (!kind.is_string()) bad("\"kind\" must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "quotient") {
    const json& g = field(j, "gamma");
    if (!g.is_string()) bad("\"gamma\" must be an ordinal string");
    return quotient(Ordinal::parse(g.get<std::string>()));
  }
  if (k == "reduced_power") return reduced_power(expr_from_json(field(j, "inner")), as_u64(field(j, "r"), "r"));
  if (k == "positive") return positive(expr_from_json(field(j, "inner")));
  if (k == "power") return power(expr_from_json(field(j, "inner")), as_u64(field(j, "s"), "s"));
  if (k == "product") {
    const json& fs = field(j, "factors");
    if (!fs.is_array()) bad("\"factors\" must be an array");
    std::vector<ExprPtr> out;
    for (const auto& f : fs) out.push_back(expr_from_json(f));
    return product(std::move(out));
  }
  if (k == "iteration") {
    const json& a = field(j, "annotation");
    if (!a.is_string()) bad("\"annotation\" must be a string");
    return iteration(expr_from_json(field(j, "first")), a.get<std::string>());
  }
  bad("unknown expression kind \"" + k + "\"");
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
}

}  // namespace ordcopies

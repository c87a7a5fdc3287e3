#include "dcgr/format.hpp"

#include <sstream>

namespace dcgr {

Json big_json(const BigInt& v) {
  if (v >= 0 && v < (BigInt(1) << 53)) return static_cast<std::uint64_t>(v);
  return v.str();
}

Json element_json(const RingElement& x) {
  Json out = Json::array();
  for (auto c : x.coeffs()) out.push_back(c);
  return out;
}

Json poly_json(const RingPoly& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(element_json(c));
  return out;
}

Json to_json(const FactorSet& f) {
  Json out;
  out["schema"] = kSchema;
  out["p"] = f.ring->p();
  out["n"] = f.n;
  out["unit"] = element_json(f.unit);
  Json list = Json::array();
  Json degrees = Json::array(), kinds = Json::array();
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const auto& g = f.factors[i];
    Json j;
    j["index"] = i;
    j["degree"] = g.degree();
    j["kind"] = std::string(to_string(g.kind));
    j["partner"] = g.partner ? Json(*g.partner) : Json(nullptr);
    j["coset"] = g.coset;
    j["coefficients"] = poly_json(g.poly);
    list.push_back(j);
    degrees.push_back(g.degree());
    kinds.push_back(std::string(to_string(g.kind)));
  }
  out["degrees"] = degrees;
  out["kinds"] = kinds;
  out["factors"] = list;
  return out;
}

Json to_json(const CountReport& r) {
  Json out;
  out["schema"] = kSchema;
  out["p"] = r.p;
  out["n"] = r.n;
  out["quantity"] = r.quantity;
  out["provenance"] = r.provenance;
  out["value"] = big_json(r.formula_value);
  out["general_value"] = big_json(r.general_value);
  out["oracle_value"] = r.oracle_value ? big_json(*r.oracle_value) : Json(nullptr);
  out["oracle"] = r.oracle_status;
  out["statement_variant"] = r.statement_variant ? big_json(*r.statement_variant) : Json(nullptr);
  Json cons = Json::array();
  for (const auto& c : r.constituents) {
    Json j;
    j["factor"] = c.factor;
    j["kind"] = std::string(to_string(c.kind));
    j["degree"] = c.degree;
    j["u"] = big_json(c.u);
    j["formula"] = big_json(c.formula);
    j["oracle"] = c.oracle ? big_json(*c.oracle) : Json(nullptr);
    cons.push_back(j);
  }
  out["constituents"] = cons;
  out["notes"] = r.notes;
  return out;
}

Json to_json(const GrayParams& g) {
  Json out;
  out["schema"] = kSchema;
  out["p"] = g.p;
  out["k"] = g.k;
  out["s"] = g.s;
  out["t"] = g.t;
  out["r"] = g.r;
  out["det"] = g.det;
  Json all = Json::array();
  for (const auto& d : g.all_decompositions) all.push_back({{"ksrt", d.ksrt}, {"det", d.det}});
  out["all_decompositions"] = all;
  return out;
}

Json to_json(const DistanceReport& r, bool with_timing) {
  Json out;
  out["schema"] = kSchema;
  out["a1"] = r.a1;
  out["a0"] = r.a0;
  out["p"] = r.p;
  out["n"] = r.n;
  out["target"] = to_string(r.target);
  out["alphabet"] = r.alphabet;
  out["length"] = r.length;
  out["codewords"] = r.codewords;
  out["enumerated"] = r.enumerated;
  out["min_distance"] = r.min_distance ? Json(*r.min_distance) : Json(nullptr);
  out["exact"] = r.exact;
  out["below_stop"] = r.below_stop;
  if (!r.histogram.empty()) out["histogram"] = r.histogram;
  out["budget"] = r.budget;
  if (with_timing) out["seconds"] = r.seconds;
  return out;
}

Json to_json(const SearchHit& h) {
  return {{"a1", h.a1}, {"a0", h.a0}, {"self_dual", h.self_dual}, {"lcd", h.lcd}, {"d_phi", h.d_phi},
          {"d_lb", h.d_lb}};
}

Json lb_table_json(unsigned p) {
  Json rows = Json::array();
  for (Coeff x = 0; x < p * p; ++x) {
    rows.push_back({{"x", x}, {"r0", x % p}, {"r1", x / p}, {"image", lb_gray(x, p)}, {"weight", lb_weight(x, p)}});
  }
  return rows;
}

std::string histogram_csv(const DistanceReport& r) {
  std::ostringstream os;
  os << "weight,count\n";
  for (std::size_t w = 0; w < r.histogram.size(); ++w) {
    if (r.histogram[w] != 0) os << w << ',' << r.histogram[w] << '\n';
  }
  return os.str();
}

std::string matrix_csv(const ZMatrix& m) {
  std::ostringstream os;
  for (const auto& row : m) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace dcgr

#include "unitforge/json_io.hpp"

#include "unitforge/catalog.hpp"

namespace unitforge {

Json element_to_json(const GroupRingElement &x) {
  Json coeffs = Json::array();
  for (const Rational &c : x.coeffs())
    coeffs.push_back(
        Json::array({c.get_num().get_str(), c.get_den().get_str()}));
  Json j;
  j["coeffs"] = std::move(coeffs);
  return j;
}

GroupRingElement element_from_json(const GroupPtr &G, const Json &j) {
  const Json &coeffs = j.at("coeffs");
  if (static_cast<int>(coeffs.size()) != G->order())
    throw std::invalid_argument("element_from_json: coefficient count != |G|");
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const Json &pair : coeffs) {
    Integer num(pair.at(0).get<std::string>());
    Integer den(pair.at(1).get<std::string>());
    Rational q(num, den);
    q.canonicalize();
    c.push_back(q);
  }
  return GroupRingElement(G, std::move(c));
}

Json unit_to_json(const UnitDescriptor &u) {
  Json j;
  j["kind"] = unit_kind_name(u.kind);
  Json params = Json::object();
  for (const auto &kv : u.params)
    params[kv.first] = kv.second;
  j["params"] = std::move(params);
  j["element"] = element_to_json(u.element);
  j["inverse"] = element_to_json(u.inverse);
  j["predicted_order"] = u.predicted_order.to_string();
  j["trivial"] = u.trivial;
  j["degenerate"] = u.degenerate;
  return j;
}

Json report_to_json(const FreenessReport &r) {
  Json j;
  j["verdict"] = verdict_name(r.verdict);
  j["bound"] = r.bound_reached;
  j["words_checked"] = r.words_checked;
  Json w = Json::array();
  for (const auto &syl : r.witness)
    w.push_back(Json::array({syl.first, syl.second}));
  j["witness"] = std::move(w);
  j["notes"] = r.notes;
  return j;
}

Json system_to_json(const MatrixUnitSystem &sys) {
  Json j;
  j["degree"] = sys.degree;
  j["field_conductor"] = sys.field_conductor;
  j["restricted"] = sys.restricted;
  j["g"] = sys.group->name(sys.g);
  j["h"] = sys.group->name(sys.h);
  j["c"] = sys.group->name(sys.c);
  j["z0"] = sys.group->name(sys.z0);
  j["c_exponent"] = sys.c_exponent;
  j["epsilon"] = element_to_json(sys.epsilon);
  Json rows = Json::array();
  for (const auto &row : sys.E) {
    Json r = Json::array();
    for (const auto &e : row)
      r.push_back(element_to_json(e));
    rows.push_back(std::move(r));
  }
  j["E"] = std::move(rows);
  return j;
}

Json group_info_json(const GroupPtr &G) {
  Json j;
  j["order"] = G->order();
  Json names = Json::array();
  for (int i = 0; i < G->order(); ++i)
    names.push_back(G->name(i));
  j["names"] = std::move(names);
  Subgroup Z = center(G);
  Json zn = Json::array();
  for (Elt z : Z.elements)
    zn.push_back(G->name(z));
  j["center"] = std::move(zn);
  auto cls = nilpotency_class(G);
  if (cls)
    j["nilpotency_class"] = *cls;
  else
    j["nilpotency_class"] = nullptr;
  j["abelian"] = is_abelian(*G);
  Json orders = Json::array();
  for (int i = 0; i < G->order(); ++i)
    orders.push_back(element_order(*G, i));
  j["element_orders"] = std::move(orders);
  return j;
}

} // namespace unitforge

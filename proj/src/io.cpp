#include "cml/io.hpp"

#include <fstream>

#include "cml/errors.hpp"

namespace cml {

namespace {

FinSet finset_from_json(const Json& j) {
  if (j.is_number_unsigned()) return FinSet(j.get<std::size_t>());
  if (j.is_array()) return FinSet(j.get<std::vector<std::string>>());
  throw ParseError("carrier must be a size or a label array", 0);
}

std::size_t element(const FinSet& x, const Json& j) {
  if (j.is_number_unsigned()) {
    const auto i = j.get<std::size_t>();
    if (i >= x.size()) throw PreconditionError("map entry " + std::to_string(i) + " out of range");
    return i;
  }
  return x.index(j.get<std::string>());
}

FinFun finfun(const FinSet& dom, const FinSet& cod, const Json& j) {
  if (!j.is_array() || j.size() != dom.size()) throw PreconditionError("map needs one entry per domain element");
  std::vector<std::size_t> table;
  for (const auto& e : j) table.push_back(element(cod, e));
  return FinFun(dom, cod, table);
}

}  // namespace

Monoid monoid_from_json(const Json& j) {
  const auto labels = j.at("elements").get<std::vector<std::string>>();
  auto index = [&](const Json& e) -> std::size_t {
    if (e.is_number_unsigned()) return e.get<std::size_t>();
    const auto s = e.get<std::string>();
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == s) return i;
    throw ParseError("unknown monoid element '" + s + "'", 0);
  };
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : j.at("table")) {
    std::vector<std::size_t> r;
    for (const auto& e : row) r.push_back(index(e));
    table.push_back(std::move(r));
  }
  Monoid m(labels, index(j.at("unit")), std::move(table));
  if (j.contains("name")) m.set_name(j.at("name").get<std::string>());
  return m;
}

Json monoid_to_json(const Monoid& m) {
  Json t = Json::array();
  for (const auto& row : m.table()) {
    Json r = Json::array();
    for (auto e : row) r.push_back(m.label(e));
    t.push_back(r);
  }
  return {{"name", m.name()}, {"elements", m.labels()}, {"unit", m.label(m.zero())}, {"table", t}};
}

Cospan cospan_from_json(const Json& j) {
  const FinSet x = finset_from_json(j.at("X"));
  const FinSet y = finset_from_json(j.at("Y"));
  const FinSet z = finset_from_json(j.at("Z"));
  return {finfun(x, z, j.at("f")), finfun(y, z, j.at("g"))};
}

Json finfun_to_json(const FinFun& f) {
  Json out = Json::object();
  for (std::size_t x = 0; x < f.dom().size(); ++x) out[f.dom().label(x)] = f.cod().label(f(x));
  return out;
}

Json model_to_json(const Logic& l, const FiniteModel& m) {
  Json coalg = Json::object();
  Json shown = Json::object();
  for (std::size_t x = 0; x < m.states.size(); ++x) {
    coalg[m.states.label(x)] = m.coalg[x];
    shown[m.states.label(x)] = l.functor->render(m.coalg[x], m.states);
  }
  Json val = Json::object();
  for (const auto& [v, s] : m.val) {
    Json states = Json::array();
    for (std::size_t x = 0; x < m.states.size(); ++x)
      if (has(s, x)) states.push_back(m.states.label(x));
    val[v] = states;
  }
  Json states = Json::array();
  for (std::size_t x = 0; x < m.states.size(); ++x) states.push_back(m.states.label(x));
  return {{"states", states}, {"coalg", coalg}, {"coalg_shown", shown}, {"val", val}, {"dag", m.dag}};
}

FiniteModel model_from_json(const Logic& l, const Json& j) {
  FiniteModel m;
  m.states = FinSet(j.at("states").get<std::vector<std::string>>());
  m.coalg.assign(m.states.size(), 0);
  std::vector<bool> seen(m.states.size(), false);
  for (const auto& [state, value] : j.at("coalg").items()) {
    const std::size_t x = m.states.index(state);
    m.coalg[x] = value.is_string() ? l.functor->parse_element(value.get<std::string>(), m.states) : value.get<Code>();
    seen[x] = true;
  }
  for (std::size_t x = 0; x < seen.size(); ++x)
    if (!seen[x]) throw PreconditionError("state " + m.states.label(x) + " has no coalgebra value");
  if (j.contains("val"))
    for (const auto& [v, states] : j.at("val").items()) {
      Mask s = 0;
      for (const auto& st : states) s |= Mask{1} << m.states.index(st.get<std::string>());
      m.val[v] = s;
    }
  check_model(l, m);
  return m;
}

Json partition_to_json(const Subalgebra& a, const FinSet& x) {
  Json out = Json::array();
  for (auto b : a.atoms()) out.push_back(x.render(b));
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what(), e.byte);
  }
}

}  // namespace cml

#include "strandtrace/serialize.hpp"

#include "strandtrace/error.hpp"

namespace strandtrace {

Json terms_json(const SymFun& f) {
  Json terms = Json::array();
  for (const auto& [idx, c] : f.terms()) {
    terms.push_back(Json{{"partition", idx.parts()}, {"coeff", fraction_string(c)}});
  }
  return terms;
}

Json to_json(const SymFun& f) { return Json{{"basis", basis_letter(f.basis())}, {"terms", terms_json(f)}}; }

SymFun symfun_from_json(const Json& j) {
  try {
    SymFun f(parse_basis(j.at("basis").get<std::string>()));
    for (const auto& term : j.at("terms")) {
      f.add_term(Partition(term.at("partition").get<std::vector<int>>()),
                 parse_fraction(term.at("coeff").get<std::string>()));
    }
    return f;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("symmetric function JSON: ") + e.what());
  }
}

Json to_json(const StrandDiagram& d) {
  Json crossings = Json::array();
  for (const Crossing& c : d.crossings()) crossings.push_back(Json::array({c.i, c.j}));
  return Json{{"n", d.strands()}, {"crossings", crossings}};
}

StrandDiagram diagram_from_json(const Json& j) {
  try {
    std::vector<Crossing> crossings;
    for (const auto& c : j.at("crossings")) {
      if (!c.is_array() || c.size() != 2) throw InvalidInput("diagram JSON: crossing must be [i,j]");
      crossings.push_back({c[0].get<int>(), c[1].get<int>()});
    }
    return StrandDiagram(j.at("n").get<int>(), std::move(crossings));
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("diagram JSON: ") + e.what());
  }
}

Json to_json(const IncompGraph& g) {
  Json edges = Json::array();
  for (auto [a, b] : g.edges) edges.push_back(Json::array({a, b}));
  return Json{{"n", g.n}, {"edges", edges}};
}

Json to_json(const PartialCombo& c) {
  Json terms = Json::array();
  for (const auto& [key, coeff] : c.terms()) {
    terms.push_back(Json{{"diagram", to_json(key.first)}, {"b", key.second}, {"coeff", to_json(coeff)}});
  }
  return Json{{"terms", terms}};
}

Json to_json(const SearchRecord& r) {
  Json out = to_json(r.diagram);
  out["h"] = terms_json(r.h_expansion);
  out["positive"] = r.positive;
  if (r.witness) {
    out["witness"] = Json{{"partition", r.witness->index.parts()}, {"coeff", fraction_string(r.witness->coeff)}};
  }
  return out;
}

}  // namespace strandtrace

#include "dbseq/json_io.hpp"

namespace dbseq {

Json graph_to_json(const DeBruijnGraph& g) {
  Json j;
  j["span"] = g.span();
  j["alphabet"] = g.alphabet().names();
  Json vertices = Json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.name(v));
  j["vertices"] = std::move(vertices);
  Json arcs = Json::array();
  for (const Arc& e : g.arcs())
    arcs.push_back({{"tail", g.name(e.tail)}, {"label", g.alphabet().render(e.label)}, {"head", g.name(e.head)}});
  j["arcs"] = std::move(arcs);
  return j;
}

Digraph digraph_from_json(const Json& j) {
  try {
    Alphabet alphabet(j.at("alphabet").get<std::vector<std::string>>());
    std::vector<Word> labels;
    for (const auto& v : j.at("vertices")) labels.push_back(alphabet.parse(v.get<std::string>()));
    std::map<Word, VertexId> index;
    for (VertexId v = 0; v < labels.size(); ++v) index.emplace(labels[v], v);
    auto lookup = [&](const Json& name) {
      auto it = index.find(alphabet.parse(name.get<std::string>()));
      if (it == index.end()) throw Error(Errc::invalid_argument, "arc endpoint is not a listed vertex");
      return it->second;
    };
    std::vector<Arc> arcs;
    for (const auto& a : j.at("arcs")) {
      auto label = alphabet.find(a.at("label").get<std::string>());
      if (!label) throw Error(Errc::invalid_argument, "arc label is not an alphabet symbol");
      arcs.push_back({lookup(a.at("tail")), lookup(a.at("head")), *label});
    }
    return Digraph(std::move(alphabet), std::move(labels), std::move(arcs));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::invalid_argument, std::string("malformed graph document: ") + e.what());
  }
}

Json walk_to_json(const Digraph& g, const Walk& w) {
  return {{"start", g.name(w.start)},
          {"label", g.alphabet().render(w.label(g))},
          {"arcCount", w.size()},
          {"eulerian", w.is_eulerian(g)}};
}

WalkSummary walk_summary_from_json(const Json& j) {
  try {
    return {j.at("start").get<std::string>(), j.at("label").get<std::string>(), j.at("arcCount").get<std::size_t>(),
            j.at("eulerian").get<bool>()};
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::invalid_argument, std::string("malformed walk document: ") + e.what());
  }
}

Json analysis_to_json(const MaxArcAnalysis& t, const Decision& d) {
  const auto& g = t.graph();
  const auto& a = g.alphabet();
  Json j;
  j["span"] = g.span();
  j["root"] = g.name(t.root());
  Json vertices = Json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v == t.root()) continue;
    const VertexClass& c = t.classify(v);
    vertices.push_back({{"label", g.name(v)},
                        {"overlap", a.render(c.overlap)},
                        {"nextLetter", a.render(c.next_letter)},
                        {"maxLabel", a.render(c.max_label)},
                        {"floor", c.is_floor},
                        {"restricted", c.is_restricted},
                        {"onCycle", t.cycle_of(v).has_value()}});
  }
  j["vertices"] = std::move(vertices);
  Json cycles = Json::array();
  for (const auto& c : d.cycles) {
    Json vs = Json::array();
    for (VertexId v : c.vertices) vs.push_back(g.name(v));
    cycles.push_back({{"vertices", std::move(vs)}, {"label", a.render(c.label)}});
  }
  j["cycles"] = std::move(cycles);
  Json words = Json::array();
  for (const auto& w : d.block_words) {
    Json blocks = Json::array();
    for (const auto& b : w.blocks) blocks.push_back({{"prefix", a.render(b.prefix)}, {"drop", a.render(b.drop)}});
    words.push_back({{"word", a.render(w.word)}, {"blocks", std::move(blocks)}});
  }
  j["hWords"] = std::move(words);
  j["decision"] = {
      {"answer", d.answer}, {"viaTree", d.via_tree}, {"viaH", d.via_blocks}, {"viaWalk", d.via_walk}};
  return j;
}

Json verdict_to_json(const Verdict& v, const Alphabet& a) {
  Json j;
  j["greedyLabel"] = a.render(v.greedy_label);
  j["greedyEulerian"] = v.greedy_eulerian;
  j["oracleLabel"] = v.oracle_label ? Json(a.render(*v.oracle_label)) : Json(nullptr);
  j["decision"] = v.decision;
  j["decisionConsistent"] = v.decision_consistent;
  j["pass"] = v.pass;
  return j;
}

Json reports_to_json(const std::vector<CheckReport>& reports) {
  Json list = Json::array();
  std::size_t total = 0;
  for (const auto& r : reports) {
    list.push_back({{"name", r.name}, {"checked", r.checked}, {"violations", r.violations}});
    total += r.violations.size();
  }
  return {{"reports", std::move(list)}, {"violations", total}};
}

Json lower_bound_to_json(const LowerBoundReport& r) {
  Json j;
  j["vertices"] = r.vertices;
  j["arcs"] = r.arcs;
  j["meanOutDegree"] = r.mean_out_degree;
  j["factorialProduct"] = r.factorial_product.str();
  j["meanDegreeTerm"] = r.mean_degree_term.str();
  j["convergingTrees"] = r.converging_trees.str();
  j["eulerianCircuits"] = r.eulerian_circuits.str();
  j["growthRate"] = r.growth_rate;
  j["asymptoticBound"] = r.asymptotic_bound;
  j["unrestrictedBinaryReference"] =
      r.unrestricted_binary_reference.empty() ? Json(nullptr) : Json(r.unrestricted_binary_reference);
  return j;
}

}  // namespace dbseq

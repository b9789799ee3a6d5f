#include "dbseq/dbseq.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "dbseq/counting.hpp"
#include "dbseq/json_io.hpp"
#include "dbseq/oracle.hpp"
#include "dbseq/structure.hpp"
#include "dbseq/walks.hpp"

struct dbs_language {
  dbseq::Language lang;
};

struct dbs_graph {
  dbseq::DeBruijnGraph graph;
};

namespace {

thread_local std::string last_error;

dbs_status to_status(dbseq::Errc code) {
  using dbseq::Errc;
  switch (code) {
    case Errc::invalid_argument: return DBS_ERROR_INVALID_ARGUMENT;
    case Errc::not_irreducible: return DBS_ERROR_NOT_IRREDUCIBLE;
    case Errc::ambiguous_component: return DBS_ERROR_AMBIGUOUS_SCC;
    case Errc::empty_graph: return DBS_ERROR_EMPTY_GRAPH;
    case Errc::not_eulerian: return DBS_ERROR_NOT_EULERIAN;
    case Errc::word_not_in_language: return DBS_ERROR_WORD_NOT_IN_LANGUAGE;
    case Errc::vertex_not_in_graph: return DBS_ERROR_VERTEX_NOT_IN_GRAPH;
    case Errc::no_such_walk: return DBS_ERROR_NO_SUCH_WALK;
    case Errc::too_large: return DBS_ERROR_TOO_LARGE;
    case Errc::internal_inconsistency: return DBS_ERROR_INTERNAL_INCONSISTENCY;
    case Errc::io: return DBS_ERROR_IO;
  }
  return DBS_ERROR_INTERNAL;
}

template <class F>
dbs_status guard(F&& body) {
  last_error.clear();
  try {
    body();
    return DBS_OK;
  } catch (const dbseq::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return DBS_ERROR_INTERNAL;
}

void require(bool ok, const char* what) {
  if (!ok) throw dbseq::Error(dbseq::Errc::invalid_argument, what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const std::string& s) {
  require(out != nullptr, "output pointer is null");
  *out = dup(s);
}

std::vector<std::string> strings(const char* const* items, size_t count) {
  require(count == 0 || items != nullptr, "forbidden-word array is null");
  std::vector<std::string> out;
  for (size_t i = 0; i < count; ++i) {
    require(items[i] != nullptr, "forbidden word is null");
    out.emplace_back(items[i]);
  }
  return out;
}

size_t oracle_bound(size_t max_arcs) { return max_arcs == 0 ? dbseq::default_oracle_arcs : max_arcs; }

}  // namespace

extern "C" {

const char* dbs_version(void) { return "1.0.0"; }

const char* dbs_status_name(dbs_status status) {
  switch (status) {
    case DBS_OK: return "ok";
    case DBS_ERROR_INVALID_ARGUMENT: return "invalid-argument";
    case DBS_ERROR_NOT_IRREDUCIBLE: return "not-irreducible";
    case DBS_ERROR_AMBIGUOUS_SCC: return "ambiguous-scc";
    case DBS_ERROR_EMPTY_GRAPH: return "empty-graph";
    case DBS_ERROR_NOT_EULERIAN: return "not-eulerian";
    case DBS_ERROR_WORD_NOT_IN_LANGUAGE: return "word-not-in-language";
    case DBS_ERROR_VERTEX_NOT_IN_GRAPH: return "prefix-vertex-not-in-scc";
    case DBS_ERROR_NO_SUCH_WALK: return "no-such-walk";
    case DBS_ERROR_TOO_LARGE: return "too-large";
    case DBS_ERROR_INTERNAL_INCONSISTENCY: return "internal-inconsistency";
    case DBS_ERROR_IO: return "io";
    case DBS_ERROR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* dbs_last_error(void) { return last_error.c_str(); }

void dbs_string_free(char* s) { std::free(s); }

dbs_status dbs_language_create(const char* alphabet, const char* const* forbidden, size_t forbidden_count,
                               dbs_language** out) {
  return guard([&] {
    require(alphabet != nullptr && out != nullptr, "null argument");
    *out = new dbs_language{dbseq::Language::from_strings(alphabet, strings(forbidden, forbidden_count))};
  });
}

dbs_status dbs_language_load(const char* path, const char* const* extra, size_t extra_count, dbs_language** out) {
  return guard([&] {
    require(path != nullptr && out != nullptr, "null argument");
    dbseq::Language base = dbseq::load_language(path);
    std::vector<dbseq::Word> words = base.forbidden();
    for (const auto& s : strings(extra, extra_count)) words.push_back(base.alphabet().parse(s));
    *out = new dbs_language{dbseq::Language(base.alphabet(), std::move(words))};
  });
}

void dbs_language_destroy(dbs_language* lang) { delete lang; }

dbs_status dbs_language_alphabet(const dbs_language* lang, char** out) {
  return guard([&] {
    require(lang != nullptr, "null language");
    std::string s;
    for (const auto& name : lang->lang.alphabet().names()) s += name;
    emit(out, s);
  });
}

dbs_status dbs_language_is_circular_word(const dbs_language* lang, const char* word, int* out) {
  return guard([&] {
    require(lang != nullptr && word != nullptr && out != nullptr, "null argument");
    *out = dbseq::is_circular_word(lang->lang, lang->lang.alphabet().parse(word)) ? 1 : 0;
  });
}

dbs_status dbs_language_words(const dbs_language* lang, size_t n, char** out_json) {
  return guard([&] {
    require(lang != nullptr, "null language");
    dbseq::Json j = dbseq::Json::array();
    for (const auto& w : dbseq::enumerate_words(lang->lang, n)) j.push_back(lang->lang.alphabet().render(w));
    emit(out_json, j.dump());
  });
}

dbs_status dbs_language_count_words(const dbs_language* lang, size_t n, uint64_t* out) {
  return guard([&] {
    require(lang != nullptr && out != nullptr, "null argument");
    *out = dbseq::count_words(lang->lang, n);
  });
}

dbs_status dbs_language_growth_rate(const dbs_language* lang, size_t nmax, double* out) {
  return guard([&] {
    require(lang != nullptr && out != nullptr, "null argument");
    *out = dbseq::estimate_growth_rate(lang->lang, nmax);
  });
}

dbs_status dbs_language_check_irreducible(const dbs_language* lang, size_t n, int* out, char** out_json) {
  return guard([&] {
    require(lang != nullptr && out != nullptr, "null argument");
    const auto r = dbseq::check_irreducible(lang->lang, n);
    *out = r.irreducible ? 1 : 0;
    if (out_json) {
      dbseq::Json excluded = dbseq::Json::array();
      for (const auto& w : r.excluded) excluded.push_back(lang->lang.alphabet().render(w));
      dbseq::Json j = {{"irreducible", r.irreducible},
                       {"span", r.span},
                       {"components", r.component_count},
                       {"excluded", std::move(excluded)},
                       {"diagnostic", r.diagnostic}};
      emit(out_json, j.dump());
    }
  });
}

dbs_status dbs_graph_build(const dbs_language* lang, size_t span, dbs_graph** out) {
  return guard([&] {
    require(lang != nullptr && out != nullptr, "null argument");
    *out = new dbs_graph{dbseq::build_graph(lang->lang, span)};
  });
}

void dbs_graph_destroy(dbs_graph* g) { delete g; }

size_t dbs_graph_span(const dbs_graph* g) { return g ? g->graph.span() : 0; }
size_t dbs_graph_vertex_count(const dbs_graph* g) { return g ? g->graph.vertex_count() : 0; }
size_t dbs_graph_arc_count(const dbs_graph* g) { return g ? g->graph.arc_count() : 0; }

dbs_status dbs_graph_max_vertex(const dbs_graph* g, char** out) {
  return guard([&] {
    require(g != nullptr, "null graph");
    emit(out, g->graph.name(g->graph.max_vertex()));
  });
}

const char* dbs_graph_warning(const dbs_graph* g) {
  if (!g || !g->graph.warning()) return nullptr;
  return g->graph.warning()->c_str();
}

dbs_status dbs_graph_to_json(const dbs_graph* g, char** out_json) {
  return guard([&] {
    require(g != nullptr, "null graph");
    emit(out_json, dbseq::graph_to_json(g->graph).dump());
  });
}

dbs_status dbs_graph_to_dot(const dbs_graph* g, int highlight_t, char** out_dot) {
  return guard([&] {
    require(g != nullptr, "null graph");
    std::vector<dbseq::ArcId> marked;
    if (highlight_t) marked = dbseq::MaxArcAnalysis(g->graph).arcs();
    emit(out_dot, dbseq::export_dot(g->graph, marked));
  });
}

dbs_status dbs_graph_walk_target(const dbs_graph* g, const char* start, const char* word, char** out) {
  return guard([&] {
    require(g != nullptr && start != nullptr && word != nullptr, "null argument");
    const auto v = dbseq::walk_label_target(g->graph, g->graph.vertex(start), g->graph.alphabet().parse(word));
    emit(out, g->graph.name(v));
  });
}

dbs_status dbs_graph_eulerian_cycle(const dbs_graph* g, const char* start, char** out_json) {
  return guard([&] {
    require(g != nullptr, "null graph");
    const dbseq::VertexId s = start ? g->graph.vertex(start) : g->graph.max_vertex();
    emit(out_json, dbseq::walk_to_json(g->graph, dbseq::eulerian_cycle(g->graph, s)).dump());
  });
}

dbs_status dbs_graph_minimal_walk(const dbs_graph* g, char** out_json) {
  return guard([&] {
    require(g != nullptr, "null graph");
    emit(out_json, dbseq::walk_to_json(g->graph, dbseq::minimal_walk(g->graph)).dump());
  });
}

dbs_status dbs_graph_decide(const dbs_graph* g, int* answer, char** out_json) {
  return guard([&] {
    require(g != nullptr && answer != nullptr, "null argument");
    const dbseq::Decision d = dbseq::decide_minimal_is_eulerian(g->graph);
    *answer = d.answer ? 1 : 0;
    if (out_json) emit(out_json, dbseq::analysis_to_json(dbseq::MaxArcAnalysis(g->graph), d).dump());
  });
}

dbs_status dbs_graph_count_eulerian(const dbs_graph* g, char** out_decimal) {
  return guard([&] {
    require(g != nullptr, "null graph");
    emit(out_decimal, dbseq::count_eulerian_circuits(g->graph, g->graph.max_vertex()).str());
  });
}

dbs_status dbs_graph_count_trees(const dbs_graph* g, const char* root, char** out_decimal) {
  return guard([&] {
    require(g != nullptr, "null graph");
    const dbseq::VertexId r = root ? g->graph.vertex(root) : g->graph.max_vertex();
    emit(out_decimal, dbseq::count_converging_trees(g->graph, r).str());
  });
}

dbs_status dbs_graph_count_report(const dbs_graph* g, char** out_json) {
  return guard([&] {
    require(g != nullptr, "null graph");
    emit(out_json, dbseq::lower_bound_to_json(dbseq::lower_bound_report(g->graph)).dump());
  });
}

dbs_status dbs_graph_certify(const dbs_graph* g, size_t max_arcs, int* pass, char** out_json) {
  return guard([&] {
    require(g != nullptr && pass != nullptr, "null argument");
    const auto v = dbseq::certify_minimal_walk(g->graph, oracle_bound(max_arcs));
    *pass = v.pass ? 1 : 0;
    if (out_json) emit(out_json, dbseq::verdict_to_json(v, g->graph.alphabet()).dump());
  });
}

dbs_status dbs_graph_global_minimal(const dbs_graph* g, size_t max_arcs, char** out_json) {
  return guard([&] {
    require(g != nullptr, "null graph");
    const auto& graph = g->graph;
    const auto best = dbseq::global_minimal_label(graph, oracle_bound(max_arcs));
    const auto at_root = dbseq::minimal_eulerian_label(graph, graph.max_vertex(), oracle_bound(max_arcs));
    if (!best || !at_root) throw dbseq::Error(dbseq::Errc::not_eulerian, "graph has no Eulerian circuit");
    dbseq::Json j = {{"start", graph.name(best->start)},
                     {"label", graph.alphabet().render(best->label)},
                     {"root", graph.name(graph.max_vertex())},
                     {"rootLabel", graph.alphabet().render(*at_root)}};
    emit(out_json, j.dump());
  });
}

dbs_status dbs_graph_count_circuits_brute(const dbs_graph* g, size_t max_arcs, uint64_t* out) {
  return guard([&] {
    require(g != nullptr && out != nullptr, "null argument");
    const auto first = g->graph.out_arcs(g->graph.max_vertex()).front();
    *out = dbseq::count_circuits_from_arc(g->graph, first, oracle_bound(max_arcs));
  });
}

dbs_status dbs_graph_verify(const dbs_graph* g, size_t* violations, char** out_json) {
  return guard([&] {
    require(g != nullptr && violations != nullptr, "null argument");
    const auto j = dbseq::reports_to_json(dbseq::verify_all(g->graph));
    *violations = j.at("violations").get<size_t>();
    if (out_json) emit(out_json, j.dump());
  });
}

}  // extern "C"

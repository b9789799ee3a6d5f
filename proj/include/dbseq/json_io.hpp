#pragma once

// JSON documents exchanged through the C API and the CLI. Words are
// rendered as symbol strings, counts as decimal strings.
//
//   graph    {span, alphabet:[symbols], vertices:[labels], arcs:[{tail,label,head}]}
//   walk     {start, label, arcCount, eulerian}
//   analysis {span, root, vertices:[...], cycles:[...], hWords:[...], decision:{...}}
//   verdict  {greedyLabel, greedyEulerian, oracleLabel, decision, decisionConsistent, pass}
//   verify   {reports:[{name, checked, violations:[...]}], violations}

#include <json.hpp>

#include "dbseq/counting.hpp"
#include "dbseq/graph.hpp"
#include "dbseq/oracle.hpp"
#include "dbseq/structure.hpp"
#include "dbseq/walks.hpp"

namespace dbseq {

using Json = nlohmann::ordered_json;

Json graph_to_json(const DeBruijnGraph& g);
// Rebuilds the labeled digraph described by a graph document.
Digraph digraph_from_json(const Json& j);

Json walk_to_json(const Digraph& g, const Walk& w);

struct WalkSummary {
  std::string start;
  std::string label;
  std::size_t arc_count = 0;
  bool eulerian = false;

  bool operator==(const WalkSummary&) const = default;
};
WalkSummary walk_summary_from_json(const Json& j);

Json analysis_to_json(const MaxArcAnalysis& t, const Decision& d);
Json verdict_to_json(const Verdict& v, const Alphabet& a);
Json reports_to_json(const std::vector<CheckReport>& reports);
Json lower_bound_to_json(const LowerBoundReport& r);

}  // namespace dbseq

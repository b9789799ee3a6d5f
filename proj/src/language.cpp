#include "dbseq/language.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "raw_graph.hpp"

namespace dbseq {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::not_irreducible: return "not-irreducible";
    case Errc::ambiguous_component: return "ambiguous-scc";
    case Errc::empty_graph: return "empty-graph";
    case Errc::not_eulerian: return "not-eulerian";
    case Errc::word_not_in_language: return "word-not-in-language";
    case Errc::vertex_not_in_graph: return "prefix-vertex-not-in-scc";
    case Errc::no_such_walk: return "no-such-walk";
    case Errc::too_large: return "too-large";
    case Errc::internal_inconsistency: return "internal-inconsistency";
    case Errc::io: return "io";
  }
  return "unknown";
}

Alphabet::Alphabet(std::vector<std::string> symbols) : names_(std::move(symbols)) {
  if (names_.size() < 2) throw Error(Errc::invalid_argument, "alphabet needs at least 2 symbols");
  if (names_.size() > max_size) throw Error(Errc::invalid_argument, "alphabet has more than 256 symbols");
  std::set<std::string> seen;
  for (const auto& s : names_) {
    if (s.empty()) throw Error(Errc::invalid_argument, "alphabet symbols must be nonempty");
    if (!seen.insert(s).second) throw Error(Errc::invalid_argument, "duplicate alphabet symbol '" + s + "'");
  }
}

Alphabet Alphabet::from_chars(std::string_view symbols) {
  std::vector<std::string> names;
  for (char c : symbols) names.emplace_back(1, c);
  return Alphabet(std::move(names));
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return symbol_at(i);
  return std::nullopt;
}

Word Alphabet::parse(std::string_view text) const {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t best_len = 0;
    std::size_t best = 0;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const auto& n = names_[i];
      if (n.size() > best_len && text.substr(pos, n.size()) == n) {
        best_len = n.size();
        best = i;
      }
    }
    if (best_len == 0)
      throw Error(Errc::invalid_argument,
                  "'" + std::string(text) + "' contains a symbol outside the alphabet at offset " +
                      std::to_string(pos));
    w.push_back(symbol_at(best));
    pos += best_len;
  }
  return w;
}

std::string Alphabet::render(const Word& w) const {
  std::string out;
  for (Symbol s : w) out += name(s);
  return out;
}

Language::Language(Alphabet alphabet, std::vector<Word> forbidden) : alphabet_(std::move(alphabet)) {
  for (const auto& f : forbidden) {
    if (f.empty()) throw Error(Errc::invalid_argument, "forbidden words must be nonempty");
    for (Symbol s : f)
      if (index_of(s) >= alphabet_.size())
        throw Error(Errc::invalid_argument, "forbidden word uses a symbol outside the alphabet");
  }
  std::sort(forbidden.begin(), forbidden.end());
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
  forbidden_ = std::move(forbidden);
  for (const auto& f : forbidden_) max_forbidden_length_ = std::max(max_forbidden_length_, f.size());
}

Language Language::from_strings(std::string_view alphabet, const std::vector<std::string>& forbidden) {
  Alphabet a = Alphabet::from_chars(alphabet);
  std::vector<Word> words;
  words.reserve(forbidden.size());
  for (const auto& f : forbidden) words.push_back(a.parse(f));
  return Language(std::move(a), std::move(words));
}

bool Language::contains_forbidden_factor(const Word& w) const {
  for (const auto& f : forbidden_)
    if (std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end()) return true;
  return false;
}

bool Language::has_forbidden_suffix(const Word& w) const {
  return std::any_of(forbidden_.begin(), forbidden_.end(), [&](const Word& f) { return is_suffix(f, w); });
}

Language parse_language(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Alphabet> alphabet;
  std::vector<Word> forbidden;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!alphabet) {
      alphabet = Alphabet::from_chars(line);
      continue;
    }
    if (line.empty()) continue;
    forbidden.push_back(alphabet->parse(line));
  }
  if (!alphabet) throw Error(Errc::invalid_argument, "language file is empty; expected the alphabet on line 1");
  return Language(std::move(*alphabet), std::move(forbidden));
}

Language load_language(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io, "cannot open language file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_language(buf.str());
}

bool is_circular_word(const Language& lang, const Word& w) {
  if (w.empty()) throw Error(Errc::invalid_argument, "circular membership is undefined for the empty word");
  const std::size_t extra = lang.max_forbidden_length() > 0 ? lang.max_forbidden_length() - 1 : 0;
  // w followed by its cyclic continuation; every factor of w^inf of length
  // <= max_forbidden_length starts inside the first |w| positions.
  Word ext(w);
  ext.reserve(w.size() + extra);
  for (std::size_t i = 0; i < extra; ++i) ext.push_back(w[i % w.size()]);
  for (const auto& f : lang.forbidden()) {
    for (std::size_t start = 0; start < w.size(); ++start) {
      if (std::equal(f.begin(), f.end(), ext.begin() + static_cast<std::ptrdiff_t>(start))) return false;
    }
  }
  return true;
}

namespace {

template <class Visit>
void extend_words(const Language& lang, std::size_t n, Word& prefix, Visit&& visit) {
  if (prefix.size() == n) {
    if (is_circular_word(lang, prefix)) visit(prefix);
    return;
  }
  for (std::size_t i = 0; i < lang.alphabet().size(); ++i) {
    prefix.push_back(symbol_at(i));
    if (!lang.has_forbidden_suffix(prefix)) extend_words(lang, n, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Word> enumerate_words(const Language& lang, std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_argument, "word length must be at least 1");
  std::vector<Word> out;
  Word prefix;
  prefix.reserve(n);
  extend_words(lang, n, prefix, [&](const Word& w) { out.push_back(w); });
  return out;
}

std::size_t count_words(const Language& lang, std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_argument, "word length must be at least 1");
  std::size_t count = 0;
  Word prefix;
  prefix.reserve(n);
  extend_words(lang, n, prefix, [&](const Word&) { ++count; });
  return count;
}

double estimate_growth_rate(const Language& lang, std::size_t nmax) {
  if (nmax < 2) throw Error(Errc::invalid_argument, "growth-rate estimate needs nmax >= 2");
  const std::size_t num = count_words(lang, nmax);
  const std::size_t den = count_words(lang, nmax - 1);
  if (den == 0 || num == 0)
    throw Error(Errc::not_irreducible, "no words of length " + std::to_string(den == 0 ? nmax - 1 : nmax) +
                                           "; the language is empty at this length");
  return static_cast<double>(num) / static_cast<double>(den);
}

IrreducibilityReport check_irreducible(const Language& lang, std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_argument, "span must be at least 1");
  IrreducibilityReport report;
  report.span = n;

  const auto raw = detail::build_raw_graph(lang, n);
  if (raw.arc_words.empty()) {
    report.diagnostic = "W_" + std::to_string(n + 1) + " is empty";
    return report;
  }
  const auto comps = detail::strong_components(raw.successors());
  const auto choice = detail::largest_component(comps, raw.tails, raw.heads);
  report.component_count = choice.nonempty;

  for (std::size_t a = 0; a < raw.arc_words.size(); ++a) {
    const std::size_t ct = comps.component_of[raw.tails[a]];
    if (ct != choice.winner || comps.component_of[raw.heads[a]] != ct) report.excluded.push_back(raw.arc_words[a]);
  }
  report.irreducible = report.excluded.empty() && choice.nonempty == 1;

  std::ostringstream diag;
  if (report.irreducible) {
    diag << "all " << raw.arc_words.size() << " words of W_" << (n + 1) << " lie in one strongly connected component";
  } else {
    diag << choice.nonempty << " components carry arcs";
    if (choice.tied) diag << " (largest is not unique)";
    diag << "; " << report.excluded.size() << " words of W_" << (n + 1) << " excluded:";
    for (const auto& w : report.excluded) diag << ' ' << lang.alphabet().render(w);
  }
  report.diagnostic = diag.str();
  return report;
}

Word rotate_left(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  Word out(w);
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % w.size()), out.end());
  return out;
}

bool is_prefix(const Word& prefix, const Word& w) {
  return prefix.size() <= w.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

bool is_suffix(const Word& suffix, const Word& w) {
  return suffix.size() <= w.size() &&
         std::equal(suffix.begin(), suffix.end(), w.end() - static_cast<std::ptrdiff_t>(suffix.size()));
}

namespace detail {

std::vector<std::vector<std::size_t>> RawGraph::successors() const {
  std::vector<std::vector<std::size_t>> succ(vertices.size());
  for (std::size_t a = 0; a < tails.size(); ++a) succ[tails[a]].push_back(heads[a]);
  return succ;
}

RawGraph build_raw_graph(const Language& lang, std::size_t span) {
  RawGraph raw;
  raw.arc_words = enumerate_words(lang, span + 1);

  std::set<Word> labels;
  for (const auto& w : raw.arc_words) {
    labels.emplace(w.begin(), w.end() - 1);
    labels.emplace(w.begin() + 1, w.end());
  }
  raw.vertices.assign(labels.begin(), labels.end());

  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < raw.vertices.size(); ++i) index.emplace(raw.vertices[i], i);
  raw.tails.reserve(raw.arc_words.size());
  raw.heads.reserve(raw.arc_words.size());
  for (const auto& w : raw.arc_words) {
    raw.tails.push_back(index.at(Word(w.begin(), w.end() - 1)));
    raw.heads.push_back(index.at(Word(w.begin() + 1, w.end())));
  }
  return raw;
}

}  // namespace detail

}  // namespace dbseq

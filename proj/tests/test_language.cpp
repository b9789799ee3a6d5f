#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "corpus.hpp"
#include "dbseq/language.hpp"
#include "oracles.hpp"

using namespace dbseq;

namespace {

std::vector<std::string> rendered(const Language& lang, std::size_t n) {
  std::vector<std::string> out;
  for (const auto& w : enumerate_words(lang, n)) out.push_back(lang.alphabet().render(w));
  return out;
}

bool circular(const Language& lang, const std::string& w) { return is_circular_word(lang, lang.alphabet().parse(w)); }

// Adjacency of the span-(n-1) graph of all of W_n, for the eigenvalue oracle.
std::vector<std::vector<double>> transfer_matrix(const std::string& alphabet, const std::vector<std::string>& forbidden,
                                                 std::size_t len) {
  // States: words of length len-1 without forbidden factors; edges: words of length len.
  auto states = oracle::all_words(alphabet, len - 1);
  auto ok = [&](const std::string& w) {
    for (const auto& f : forbidden)
      if (w.find(f) != std::string::npos) return false;
    return true;
  };
  std::vector<std::string> kept;
  for (const auto& s : states)
    if (ok(s)) kept.push_back(s);
  std::vector<std::vector<double>> m(kept.size(), std::vector<double>(kept.size(), 0.0));
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (kept[i].substr(1) == kept[j].substr(0, len - 2) && ok(kept[i] + kept[j].back())) m[i][j] = 1;
  return m;
}

}  // namespace

TEST_CASE("circular membership of worked examples") {
  auto golden = Language::from_strings("01", {"11"});
  CHECK(circular(golden, "01010"));
  CHECK_FALSE(circular(golden, "10001"));
  CHECK(circular(golden, "0"));
  CHECK_FALSE(circular(golden, "1"));
  CHECK_THROWS_AS(is_circular_word(golden, Word{}), Error);

  auto no_long_ones = Language::from_strings("01", {"01111"});
  CHECK(circular(no_long_ones, "11111"));
  CHECK_FALSE(circular(no_long_ones, "11110"));
}

TEST_CASE("golden mean word sets") {
  auto golden = Language::from_strings("01", {"11"});
  CHECK(count_words(golden, 5) == 11);
  CHECK(rendered(golden, 5) == oracle::language_words("01", {"11"}, 5));
  // 1^inf contains 11, so only the all-zero word survives at length 1.
  CHECK(rendered(golden, 1) == std::vector<std::string>{"0"});
  CHECK(count_words(golden, 11) == 199);
  CHECK(count_words(golden, 12) == 322);
}

TEST_CASE("unrestricted alphabets give every word") {
  for (std::size_t n = 1; n <= 10; ++n) CHECK(count_words(Language::from_strings("01", {}), n) == (std::size_t{1} << n));
  std::size_t p = 1;
  for (std::size_t n = 1; n <= 6; ++n) {
    p *= 3;
    CHECK(count_words(Language::from_strings("012", {}), n) == p);
  }
}

TEST_CASE("enumeration agrees with the circular-scan oracle") {
  auto instances = corpus::fixed();
  for (const auto& inst : corpus::random(40)) instances.push_back(inst);
  for (const auto& inst : instances) {
    auto lang = inst.language();
    for (std::size_t n = 1; n <= std::min<std::size_t>(inst.span + 1, 8); ++n) {
      INFO(inst.name() << " length " << n);
      CHECK(rendered(lang, n) == oracle::language_words(inst.alphabet, inst.forbidden, n));
    }
  }
}

TEST_CASE("enumeration respects the declared alphabet order") {
  auto lang = Language::from_strings("10", {});
  CHECK(rendered(lang, 2) == std::vector<std::string>{"11", "10", "01", "00"});
  auto words = enumerate_words(Language::from_strings("01", {"010"}), 6);
  CHECK(std::is_sorted(words.begin(), words.end()));
  CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());
}

TEST_CASE("membership is invariant under rotation") {
  std::mt19937 rng(7);
  const std::vector<std::vector<std::string>> sets{{"11"}, {"000"}, {"01111"}, {"010", "11"}, {"0110"}};
  for (const auto& f : sets) {
    auto lang = Language::from_strings("01", f);
    for (int trial = 0; trial < 200; ++trial) {
      Word w(1 + rng() % 9);
      for (auto& s : w) s = symbol_at(rng() % 2);
      const bool in = is_circular_word(lang, w);
      for (std::size_t k = 0; k < w.size(); ++k) CHECK(is_circular_word(lang, rotate_left(w, k)) == in);
    }
  }
}

TEST_CASE("more forbidden words never enlarge the language") {
  auto small = Language::from_strings("01", {"11", "000"});
  auto large = Language::from_strings("01", {"11"});
  for (std::size_t n = 1; n <= 9; ++n) {
    auto a = enumerate_words(small, n);
    auto b = enumerate_words(large, n);
    CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
  }
}

TEST_CASE("growth rate estimates") {
  auto golden = Language::from_strings("01", {"11"});
  const double lambda = oracle::dominant_eigenvalue(transfer_matrix("01", {"11"}, 2));
  CHECK(lambda == doctest::Approx(1.6180339887).epsilon(1e-6));
  CHECK(std::abs(estimate_growth_rate(golden, 12) - lambda) < 0.05);
  CHECK(estimate_growth_rate(Language::from_strings("01", {}), 8) == doctest::Approx(2.0));
  CHECK(estimate_growth_rate(Language::from_strings("012", {}), 5) == doctest::Approx(3.0));

  const double no_triple = oracle::dominant_eigenvalue(transfer_matrix("01", {"000"}, 3));
  CHECK(std::abs(estimate_growth_rate(Language::from_strings("01", {"000"}), 14) - no_triple) < 0.05);

  CHECK_THROWS_AS(estimate_growth_rate(golden, 1), Error);
  CHECK_THROWS_AS(estimate_growth_rate(Language::from_strings("01", {"0", "1"}), 4), Error);
}

TEST_CASE("irreducibility at a span") {
  auto r = check_irreducible(Language::from_strings("01", {"11"}), 5);
  CHECK(r.irreducible);
  CHECK(r.component_count == 1);
  CHECK(check_irreducible(Language::from_strings("01", {}), 3).irreducible);

  auto split = check_irreducible(Language::from_strings("01", {"01", "10"}), 2);
  CHECK_FALSE(split.irreducible);
  CHECK(split.component_count == 2);
  CHECK_FALSE(split.diagnostic.empty());

  auto tail = check_irreducible(Language::from_strings("01", {"001"}), 3);
  CHECK_FALSE(tail.irreducible);
  CHECK(tail.excluded == std::vector<Word>{Word(4, symbol_at(0))});
}

TEST_CASE("alphabets and parsing") {
  CHECK_THROWS_AS(Alphabet::from_chars("0"), Error);
  CHECK_THROWS_AS(Alphabet::from_chars("010"), Error);
  auto a = Alphabet::from_chars("ab");
  CHECK(a.render(a.parse("abba")) == "abba");
  CHECK_THROWS_AS(a.parse("abc"), Error);
  Alphabet multi({"x", "xy"});
  CHECK(multi.parse("xyx").size() == 2);

  auto lang = parse_language("01\n11\n\n000\n11\n");
  CHECK(lang.alphabet() == Alphabet::from_chars("01"));
  CHECK(lang.forbidden().size() == 2);
  CHECK(lang.max_forbidden_length() == 3);
  CHECK_THROWS_AS(parse_language(""), Error);
  CHECK_THROWS_AS(parse_language("01\n12\n"), Error);
  CHECK_THROWS_AS(Language::from_strings("01", {""}), Error);

  auto path = std::filesystem::temp_directory_path() / "dbseq_language_test.txt";
  {
    std::ofstream out(path);
    out << "012\n11\n012\n";
  }
  auto loaded = load_language(path);
  CHECK(loaded.alphabet().size() == 3);
  CHECK(loaded.forbidden().size() == 2);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_language(path), Error);
}

TEST_CASE("factor helpers") {
  auto lang = Language::from_strings("01", {"11", "000"});
  auto a = lang.alphabet();
  CHECK(lang.contains_forbidden_factor(a.parse("0110")));
  CHECK_FALSE(lang.contains_forbidden_factor(a.parse("01001")));
  CHECK(lang.has_forbidden_suffix(a.parse("1000")));
  CHECK_FALSE(lang.has_forbidden_suffix(a.parse("0001")));
  CHECK(rotate_left(a.parse("0011"), 1) == a.parse("0110"));
  CHECK(is_prefix(a.parse("01"), a.parse("010")));
  CHECK(is_suffix(a.parse("10"), a.parse("010")));
}

#pragma once

// Ordered alphabets, words, and languages defined by a finite set of
// forbidden factors (subshifts of finite type). A word belongs to the
// language when its periodic repetition w^inf avoids every forbidden factor.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dbseq/error.hpp"

namespace dbseq {

// A symbol is its position in the alphabet; the enum order is the declared
// alphabet order, not the character codepoint.
enum class Symbol : std::uint8_t {};

constexpr std::size_t index_of(Symbol s) noexcept { return static_cast<std::size_t>(s); }
constexpr Symbol symbol_at(std::size_t index) noexcept { return static_cast<Symbol>(index); }

// std::vector's lexicographic operator< is exactly the alphabetic order:
// a proper prefix is smaller, otherwise the first differing symbol decides.
using Word = std::vector<Symbol>;

class Alphabet {
 public:
  static constexpr std::size_t max_size = 256;

  explicit Alphabet(std::vector<std::string> symbols);
  // Every character of `symbols` is one symbol, in order ("01", "abc").
  static Alphabet from_chars(std::string_view symbols);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Symbol s) const { return names_.at(index_of(s)); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  Symbol min_symbol() const noexcept { return symbol_at(0); }
  Symbol max_symbol() const noexcept { return symbol_at(names_.size() - 1); }

  std::optional<Symbol> find(std::string_view name) const;
  // Tokenizes by longest symbol match; throws invalid_argument on garbage.
  Word parse(std::string_view text) const;
  std::string render(const Word& w) const;
  std::string render(Symbol s) const { return name(s); }

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> names_;
};

class Language {
 public:
  // Duplicated forbidden words are dropped; empty ones are rejected.
  Language(Alphabet alphabet, std::vector<Word> forbidden);
  static Language from_strings(std::string_view alphabet, const std::vector<std::string>& forbidden);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Word>& forbidden() const noexcept { return forbidden_; }
  std::size_t max_forbidden_length() const noexcept { return max_forbidden_length_; }

  // Forbidden factor anywhere in the finite word (no wraparound).
  bool contains_forbidden_factor(const Word& w) const;
  // Forbidden factor ending exactly at the last symbol of w.
  bool has_forbidden_suffix(const Word& w) const;

 private:
  Alphabet alphabet_;
  std::vector<Word> forbidden_;
  std::size_t max_forbidden_length_ = 0;
};

// Parses the text format: line 1 holds the alphabet symbols in order, every
// following nonempty line is one forbidden word.
Language parse_language(std::string_view text);
Language load_language(const std::filesystem::path& path);

// True iff no forbidden factor occurs in the bi-infinite repetition of w.
bool is_circular_word(const Language& lang, const Word& w);

// W_n in lexicographic order.
std::vector<Word> enumerate_words(const Language& lang, std::size_t n);
std::size_t count_words(const Language& lang, std::size_t n);

// |W_nmax| / |W_{nmax-1}|; a crude estimate of the growth rate lambda with
// |W_n| = Theta(lambda^n).
double estimate_growth_rate(const Language& lang, std::size_t nmax);

struct IrreducibilityReport {
  bool irreducible = false;
  std::size_t span = 0;
  std::size_t component_count = 0;  // components holding at least one arc
  std::vector<Word> excluded;       // words of W_{n+1} outside the main component
  std::string diagnostic;
};

// Graph-level check at a concrete span: every word of W_{n+1} must be an arc
// of a single strongly connected component.
IrreducibilityReport check_irreducible(const Language& lang, std::size_t n);

// Cyclic rotation by k places to the left.
Word rotate_left(const Word& w, std::size_t k);
bool is_prefix(const Word& prefix, const Word& w);
bool is_suffix(const Word& suffix, const Word& w);

}  // namespace dbseq

#pragma once

#include <stdexcept>
#include <string>

namespace dbseq {

enum class Errc {
  invalid_argument,
  not_irreducible,
  ambiguous_component,
  empty_graph,
  not_eulerian,
  word_not_in_language,
  vertex_not_in_graph,
  no_such_walk,
  too_large,
  internal_inconsistency,
  io,
};

const char* errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above; the C
// API maps them one-to-one onto dbs_status values.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace dbseq

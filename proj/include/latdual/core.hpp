#pragma once

#include <boost/dynamic_bitset.hpp>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace latdual {

// Element sets are bitsets indexed by position in a Universe.
using Bits = boost::dynamic_bitset<>;

enum class ErrorKind {
  Parse,
  UnknownElement,
  Cycle,
  OracleCapExceeded,
  CapExceeded,
  GroundMismatch,
  NotIdealFamily,
  NoSolution,
  EmptyEdge,
  EmptyHypergraph,
  InconsistentSolutions,
  NotInClique,
  NotInSet,
  NotSplit,
  NotNIPoset,
  ContextInvalid,
  NotTriangleFree,
  NotWeakNI,
  StructureViolation,
  NotAValidDStar,
  InvalidParams,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& msg);

// Immutable element table, sorted lexicographically by token.  The sort fixes
// the total tie-breaking order used everywhere: bit index order equals token
// order, so index-sequence comparisons and token-sequence comparisons agree.
class Universe {
 public:
  // Tokens must be unique, non-empty, free of whitespace and '#'.  Tokens
  // starting with '_' are reserved for machinery-introduced vertices and are
  // only accepted when allow_reserved is set.
  explicit Universe(std::vector<std::string> tokens, bool allow_reserved = false);

  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::string& token(std::size_t i) const { return tokens_.at(i); }
  std::optional<std::size_t> find(const std::string& tok) const;
  // Throws UnknownElement.
  std::size_t index_of(const std::string& tok) const;
  bool same_tokens(const Universe& other) const { return tokens_ == other.tokens_; }

  Bits empty_set() const { return Bits(size()); }
  Bits full_set() const { return Bits(size()).set(); }
  Bits set_of(const std::vector<std::string>& toks) const;
  // Space-separated sorted token list.
  std::string format_set(const Bits& s) const;

 private:
  std::vector<std::string> tokens_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<std::string> tokens, bool allow_reserved = false);

// Canonical order on sets: lexicographic comparison of the sorted index
// sequences, so {a} < {a,b} < {b} and the empty set comes first.
bool seq_less(const Bits& a, const Bits& b);

struct SeqLess {
  bool operator()(const Bits& a, const Bits& b) const { return seq_less(a, b); }
};

// A family in canonical form is sorted by seq_less and duplicate-free.
using SetFamily = std::vector<Bits>;

void canonicalize_family(SetFamily& fam);
SetFamily minimal_sets(SetFamily fam);
SetFamily maximal_sets(SetFamily fam);
bool family_equal(SetFamily a, SetFamily b);
bool family_contains(const SetFamily& fam, const Bits& s);
// Pairwise inclusion-incomparable.
bool is_incomparable_family(const SetFamily& fam);

std::vector<std::size_t> set_indices(const Bits& s);

inline constexpr std::size_t kDefaultOracleCap = 20;

struct TransversalCaps {
  // Largest intermediate family size the edge-folding transversal builder
  // may produce before giving up with CapExceeded.
  std::size_t max_family = 200000;
};

}  // namespace latdual

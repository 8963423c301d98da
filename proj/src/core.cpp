#include "latdual/core.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace latdual {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::Cycle: return "CycleError";
    case ErrorKind::OracleCapExceeded: return "OracleCapExceeded";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::GroundMismatch: return "GroundMismatch";
    case ErrorKind::NotIdealFamily: return "NotIdealFamily";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::EmptyEdge: return "EmptyEdge";
    case ErrorKind::EmptyHypergraph: return "EmptyHypergraph";
    case ErrorKind::InconsistentSolutions: return "InconsistentSolutions";
    case ErrorKind::NotInClique: return "NotInClique";
    case ErrorKind::NotInSet: return "NotInSet";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::NotNIPoset: return "NotNIPoset";
    case ErrorKind::ContextInvalid: return "ContextInvalid";
    case ErrorKind::NotTriangleFree: return "NotTriangleFree";
    case ErrorKind::NotWeakNI: return "NotWeakNI";
    case ErrorKind::StructureViolation: return "StructureViolation";
    case ErrorKind::NotAValidDStar: return "NotAValidDStar";
    case ErrorKind::InvalidParams: return "InvalidParams";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& msg)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}

void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

Universe::Universe(std::vector<std::string> tokens, bool allow_reserved)
    : tokens_(std::move(tokens)) {
  for (const auto& t : tokens_) {
    if (t.empty()) fail(ErrorKind::Parse, "empty element token");
    if (t.find('#') != std::string::npos)
      fail(ErrorKind::Parse, "token contains '#': " + t);
    for (char c : t)
      if (std::isspace(static_cast<unsigned char>(c)))
        fail(ErrorKind::Parse, "token contains whitespace");
    if (!allow_reserved && t[0] == '_')
      fail(ErrorKind::Parse, "token uses reserved '_' prefix: " + t);
  }
  std::sort(tokens_.begin(), tokens_.end());
  auto dup = std::adjacent_find(tokens_.begin(), tokens_.end());
  if (dup != tokens_.end()) fail(ErrorKind::Parse, "duplicate element token: " + *dup);
}

std::optional<std::size_t> Universe::find(const std::string& tok) const {
  auto it = std::lower_bound(tokens_.begin(), tokens_.end(), tok);
  if (it == tokens_.end() || *it != tok) return std::nullopt;
  return static_cast<std::size_t>(it - tokens_.begin());
}

std::size_t Universe::index_of(const std::string& tok) const {
  auto i = find(tok);
  if (!i) fail(ErrorKind::UnknownElement, "unknown element: " + tok);
  return *i;
}

Bits Universe::set_of(const std::vector<std::string>& toks) const {
  Bits s(size());
  for (const auto& t : toks) s.set(index_of(t));
  return s;
}

std::string Universe::format_set(const Bits& s) const {
  std::ostringstream out;
  bool first = true;
  for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) {
    if (!first) out << ' ';
    out << token(i);
    first = false;
  }
  return out.str();
}

UniversePtr make_universe(std::vector<std::string> tokens, bool allow_reserved) {
  return std::make_shared<const Universe>(std::move(tokens), allow_reserved);
}

bool seq_less(const Bits& a, const Bits& b) {
  // First differing index decides: the side holding it comes first unless the
  // other side is a strict prefix (exhausted), in which case the prefix wins.
  Bits d = a ^ b;
  auto i = d.find_first();
  if (i == Bits::npos) return false;
  const Bits& holder = a.test(i) ? a : b;
  const Bits& other = a.test(i) ? b : a;
  bool other_continues = other.find_next(i) != Bits::npos;
  if (other_continues) return &holder == &a;
  return &other == &a;
}

std::vector<std::size_t> set_indices(const Bits& s) {
  std::vector<std::size_t> out;
  for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

void canonicalize_family(SetFamily& fam) {
  std::sort(fam.begin(), fam.end(), SeqLess{});
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
}

SetFamily minimal_sets(SetFamily fam) {
  canonicalize_family(fam);
  // Scanning in increasing size lets each set be checked against kept ones only.
  std::stable_sort(fam.begin(), fam.end(),
                   [](const Bits& a, const Bits& b) { return a.count() < b.count(); });
  SetFamily kept;
  for (const auto& s : fam) {
    bool covered = false;
    for (const auto& k : kept)
      if (k.is_subset_of(s)) {
        covered = true;
        break;
      }
    if (!covered) kept.push_back(s);
  }
  canonicalize_family(kept);
  return kept;
}

SetFamily maximal_sets(SetFamily fam) {
  canonicalize_family(fam);
  std::stable_sort(fam.begin(), fam.end(),
                   [](const Bits& a, const Bits& b) { return a.count() > b.count(); });
  SetFamily kept;
  for (const auto& s : fam) {
    bool covered = false;
    for (const auto& k : kept)
      if (s.is_subset_of(k)) {
        covered = true;
        break;
      }
    if (!covered) kept.push_back(s);
  }
  canonicalize_family(kept);
  return kept;
}

bool family_equal(SetFamily a, SetFamily b) {
  canonicalize_family(a);
  canonicalize_family(b);
  return a == b;
}

bool family_contains(const SetFamily& fam, const Bits& s) {
  for (const auto& f : fam)
    if (f == s) return true;
  return false;
}

bool is_incomparable_family(const SetFamily& fam) {
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = 0; j < fam.size(); ++j)
      if (i != j && fam[i].is_subset_of(fam[j])) return false;
  return true;
}

}  // namespace latdual

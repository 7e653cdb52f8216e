#ifndef TYPERANK_VERIFY_HPP
#define TYPERANK_VERIFY_HPP

#include "typerank/synthesis.hpp"
#include "typerank/term.hpp"
#include "typerank/type.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace typerank {

/// One step of driving a term down to type N.
struct ObservationStep {
  enum class Kind { Apply, First, Second };
  Kind kind;
  std::optional<Term> argument;  // Apply only
};

struct SemanticFailure {
  Term inhabitant;
  std::vector<ObservationStep> observation;
  Numeral expected;  // observation of the inhabitant
  Numeral got;       // observation of dec (enc inhabitant)
};

struct VerifyReport {
  bool symbolic_ok = false;
  std::size_t semantic_samples = 0;
  std::vector<SemanticFailure> semantic_failures;
  std::uint64_t seed = 0;
};

/// dec (enc x) normalizes to the eta-long identity at the source. False also
/// when the terms do not typecheck at the stated types.
bool verify_symbolic(const Retraction& r);

struct GeneratorOptions {
  /// Probability of building a ground subterm from a bound variable rather
  /// than a numeral.
  double variable_bias = 0.75;
  /// Nesting budget for arguments fed to bound variables.
  unsigned depth = 3;
};

/// A closed term of the given type, deterministic in (type, seed, fuel).
/// Numerals and if-indices are drawn from [0, fuel].
Term generate_inhabitant(const Type& type, std::uint64_t seed, std::size_t fuel,
                         const GeneratorOptions& options = {});

/// Evaluates a closed term of type N to its numeral with a call-by-value
/// environment machine (no normalizer involved).
Numeral evaluate_ground(const Term& t);

/// Samples inhabitants t of the source, and compares ground observations of t
/// and dec (enc t) along shared random argument vectors. The report also
/// carries the symbolic verdict.
VerifyReport verify_semantic(const Retraction& r, std::size_t samples, std::uint64_t seed);

nlohmann::json to_json(const VerifyReport& report);

}  // namespace typerank

#endif  // TYPERANK_VERIFY_HPP

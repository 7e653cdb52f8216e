#ifndef TYPERANK_SYNTHESIS_HPP
#define TYPERANK_SYNTHESIS_HPP

#include "typerank/canonical.hpp"
#include "typerank/derivation.hpp"
#include "typerank/term.hpp"
#include "typerank/type.hpp"

#include <stdexcept>
#include <variant>
#include <vector>

namespace typerank {

struct Retraction;

struct FromDerivation {
  LeDerivation derivation;
};
struct FromIso {
  IsoWitness witness;
};
struct Composite {
  std::vector<Retraction> parts;  // applied left to right by the encoder
};
using Provenance = std::variant<FromDerivation, FromIso, Composite>;

/// Encoder enc : source -> target and decoder dec : target -> source with
/// dec . enc equal to the identity on source.
struct Retraction {
  Type source, target;
  Term enc, dec;
  Provenance provenance;
};

/// Thrown when a synthesized retraction fails its own identity check.
class VerificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SynthOptions {
  /// Re-check dec . enc = id before returning.
  bool verify = true;
};

/// Compiles a derivation of a <= b into a retraction between the canonical
/// types of ranks a and b. Throws DomainError if the derivation is invalid or
/// has 0 as an endpoint.
Retraction synth_clause(const LeDerivation& d);

/// A retraction s <| t whenever rank(s) <= rank(t): trivial isomorphisms into
/// and out of the canonical types around the compiled derivation of
/// rank(s) <= rank(t). Throws DomainError, naming both ranks, otherwise.
Retraction synth_retraction(const Type& s, const Type& t, const SynthOptions& options = {});

/// dec . enc = id at the source, up to beta-eta.
bool retraction_holds(const Retraction& r);

}  // namespace typerank

#endif  // TYPERANK_SYNTHESIS_HPP

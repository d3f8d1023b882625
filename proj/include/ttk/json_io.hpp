#ifndef TTK_JSON_IO_HPP
#define TTK_JSON_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "ttk/families.hpp"
#include "ttk/invariants.hpp"

namespace ttk {

// Canonical JSON throughout: object keys sorted (nlohmann's default map),
// integers only — no floats anywhere; rationals appear as {num, den};
// big integers that do not fit 64 bits render as decimal strings.
using json = nlohmann::json;

json to_json(const Int& v);
json to_json(const LaurentPoly& p);  // [[exp, coeff], ...] by exponent
json to_json(const BraidWord& b);    // {letters, strands}
json to_json(const TTKParams& params);  // [p, q, r, s]
json to_json(const Citation& c, const char* detail_key);
json to_json(const BoundReport& rep);
json to_json(const HyperbolicityStatus& st);
json to_json(const TwistPair& pair);
json to_json(const InvariantReport& rep, int jones_cap);
json to_json(const FamilyMember& mem);
json to_json(const DistanceTwoCertificate& cert);
json to_json(const GapCertificate& cert);

std::string dump_canonical(const json& j);

// Depth-first comparison in sorted-key order; returns the dotted path of the
// first differing field, or nullopt when the documents are byte-identical.
std::optional<std::string> first_difference(const json& expected,
                                            const json& given);

struct ValidationOutcome {
  bool ok = false;
  std::string first_mismatch;  // set when ok is false and rebuild succeeded
  GapCertificate rebuilt;
};

// Re-derives every certificate field from (C, pair, n, s) alone and compares
// bit for bit.  Throws invalid_input for malformed documents; hypothesis
// failures surface as certificate_invalid from build_certificate.
ValidationOutcome validate_certificate(const json& given);

}  // namespace ttk

#endif

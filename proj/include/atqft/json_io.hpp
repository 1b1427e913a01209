#pragma once

// JSON schemas shared by the library and the CLI. nlohmann::json keeps
// object keys sorted, so every dump is byte-deterministic.

#include "json.hpp"

#include "atqft/cyclotomic.hpp"
#include "atqft/homology.hpp"
#include "atqft/intlinalg.hpp"
#include "atqft/linking.hpp"
#include "atqft/tqft.hpp"

namespace atqft {

using Json = nlohmann::json;

/// Integers that fit in 64 bits are numbers, larger ones decimal strings.
Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

/// {"rows": r, "cols": c, "entries": [[...], ...]}
Json matrix_to_json(const IntMatrix& m);
/// Throws ParseError on schema violations.
IntMatrix matrix_from_json(const Json& j);

/// {"d3": <matrix>, "d2": <matrix>, "d1": <matrix>}
ChainComplex chain_complex_from_json(const Json& j);
Json chain_complex_to_json(const ChainComplex& c);

/// {"free_rank": b, "torsion": [p1, ...]}
Json group_to_json(const AbelianGroup& g);

/// {"torsion": [p1, ...], "q": [["num/den", ...], ...]}
Json linking_form_to_json(const LinkingForm& form);
LinkingForm linking_form_from_json(const Json& j);

/// {"order": m, "coeffs": {"k": c, ...}}
Json cyclotomic_to_json(const CyclotomicNumber& a);
CyclotomicNumber cyclotomic_from_json(const Json& j);

/// {"re": ..., "im": ..., "err": ...}
Json numeric_to_json(const GaussianApprox& a);

/// {"theory": "CS"|"BF", "level": N, "torsion": [...], "method": ...,
///  "exact": <cyclotomic>, "numeric": {...}}
Json partition_to_json(const PartitionResult& r);

/// Reads and parses a JSON file; throws ParseError.
Json read_json_file(const std::string& path);

}  // namespace atqft

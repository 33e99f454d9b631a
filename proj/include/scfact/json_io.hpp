#pragma once

#include <json.hpp>

#include "scfact/periodic.hpp"
#include "scfact/sc_factor.hpp"

namespace scfact {

/// Ordered JSON keeps insertion order, so serialized output is byte-stable.
using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors surface as ParseError with the byte offset.
Json parse_json_text(const std::string& text);

/// Reads "path" and parses it; errors mention the path.
Json load_json_file(const std::string& path);

// -- ring descriptors: {"kind":"modular","m":8}, {"kind":"quadratic_ext","d":2},
//    {"kind":"sampled","grid":[0.5,1.0,2.0],"tol":1e-12}, ...
Json ring_to_json(const RingDescriptor& ring);
RingDescriptor ring_from_json(const Json& j);

// -- values: integers/strings for exact kinds ("3/2", {"p":"1","q":"1"}),
//    sample arrays, sorted element lists for Boolean sets.
Json value_to_json(const RingValue& v);
RingValue value_from_json(const Json& j, const RingDescriptor& ring);

// -- coefficient sequences: {"kind":"constant","value":...},
//    {"kind":"periodic","period":3,"offset":1,"values":[...]},
//    {"kind":"table","values":[...],"tail":...}, {"kind":"formula","expr":"..."}.
//    Callback sequences are materialized as tables over [0, callback_horizon].
Json sequence_to_json(const CoefficientSequence& s, long long callback_horizon = 64);
CoefficientSequence sequence_from_json(const Json& j, const RingDescriptor& ring);

// -- recurrences: {"ring":..., "order":2, "coeffs":[...], "forcing":...,
//    "initials":[...], "start_index":0}
Json recurrence_to_json(const LinearRecurrence& rec);
LinearRecurrence recurrence_from_json(const Json& j);

// -- factorizations: alpha terms, factor recurrence, t-initials; enough to
//    round-trip. Reconstruction re-runs the factorization, re-verifying the
//    multiplier.
Json factorization_to_json(const ScFactorization& f, long long alpha_terms = 16);
ScFactorization factorization_from_json(const Json& j);

// -- periodic search reports: quadratic, roots, per-root terms, verdicts,
//    L-witness values (export only).
Json periodic_search_to_json(const PeriodicSearch& s);

// -- term streams
Json terms_to_json(const std::vector<RingValue>& terms);
std::string terms_to_csv(const std::vector<RingValue>& terms, long long first_index = 0);

} // namespace scfact

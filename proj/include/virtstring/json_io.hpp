#pragma once

// JSON encodings of matrices, moves, certificates and reports. Field order is
// fixed, so equal values always serialize to identical bytes.

#include <json.hpp>
#include <vector>

#include "virtstring/based_matrix.hpp"
#include "virtstring/invariants.hpp"
#include "virtstring/moves.hpp"
#include "virtstring/signed_matrix.hpp"

namespace virtstring {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "virtstring/1";

Json to_json(const BasedMatrix& m);
Json to_json(const SignedBasedMatrix& m);
Json to_json(const Move& m);
Json to_json(const std::vector<Move>& path);
Json to_json(const OrbitCertificate& c);
Json to_json(const SearchResult& r);
Json to_json(const TermSum& t);
Json to_json(const NuResult& r);
Json to_json(const MuReport& r);
Json to_json(const BoundReport& r);

/// Throws ParseError on malformed input.
BasedMatrix based_matrix_from_json(const Json& j);
Move move_from_json(const Json& j);
std::vector<Move> path_from_json(const Json& j);

}  // namespace virtstring

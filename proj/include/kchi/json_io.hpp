#pragma once

// JSON encoding of matrices and reports. Complex numbers are [re, im] pairs;
// matrices are arrays of rows. A flat row-major array of n*n pairs is also
// accepted on input.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "kchi/combinat.hpp"
#include "kchi/denselin.hpp"
#include "kchi/norms.hpp"

namespace kchi {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "kchi-report/1";

Json to_json(cplx z);
Json to_json(const CMatrix& a);
Json to_json(const MultiIndex& alpha);
Json to_json(const DerivReport& r);
Json to_json(const ImmanantReport& r);

/// Throws DomainError on anything that is not a square matrix of finite [re, im] pairs.
CMatrix matrix_from_json(const Json& j);

/// Reads and decodes a matrix file; unreadable or malformed files are DomainErrors.
CMatrix read_matrix(const std::filesystem::path& path);

/// Two-space indented dump with a trailing newline. Rejects non-finite numbers.
std::string dump(const Json& j);

}  // namespace kchi

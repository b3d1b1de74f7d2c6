#pragma once

#include <string>
#include <string_view>

namespace moncp {

class ProblemInstance;

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);
std::string file_sha256(const std::string& path);

/// Digest over model, directedness, node names, edges and labels.
std::string instance_digest(const ProblemInstance& p);

}  // namespace moncp

#pragma once

#include <cstdint>
#include <string>

namespace planeshell {

/// SHA-256 of the input bytes, lowercase hex.
std::string sha256_hex(const std::string& data);

}  // namespace planeshell

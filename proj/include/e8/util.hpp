#pragma once

#include <string>

namespace e8 {

// lowercase hex sha256 of a byte string
std::string sha256_hex(const std::string& data);

}  // namespace e8

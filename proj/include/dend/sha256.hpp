#pragma once

#include <string>
#include <string_view>

namespace dend {

/// SHA-256 digest of the bytes, lowercase hex.  Self-contained so catalog
/// hashes are identical across platforms and library versions.
std::string sha256_hex(std::string_view bytes);

}  // namespace dend

#pragma once

#include <goldenflow/flow.hpp>

#include <string>

namespace gf {

/// Reads JSON lines {"key": hex, "polynomial": [...]}; a missing file is an empty cache.
/// Throws ParseError with the byte offset of a malformed line.
std::size_t load_cache(const std::string& path, PolyCache& cache);
/// Writes all entries sorted by key.
void save_cache(const std::string& path, const PolyCache& cache);

std::string hex_encode(const std::string& bytes);
std::string hex_decode(const std::string& hex);

}  // namespace gf

#include <goldenflow/cache_io.hpp>
#include <goldenflow/errors.hpp>
#include <goldenflow/ring_json.hpp>

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace gf {

std::string hex_encode(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

std::string hex_decode(const std::string& hex) {
  if (hex.size() % 2) throw std::invalid_argument("odd-length hex string");
  auto val = [](char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw std::invalid_argument("bad hex digit");
  };
  std::string out;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    out.push_back(static_cast<char>(val(hex[i]) * 16 + val(hex[i + 1])));
  }
  return out;
}

std::size_t load_cache(const std::string& path, PolyCache& cache) {
  std::ifstream in(path);
  if (!in) return 0;
  std::string line;
  std::size_t offset = 0, count = 0;
  while (std::getline(in, line)) {
    std::size_t here = offset;
    offset += line.size() + 1;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      Json j = Json::parse(line);
      cache.insert(hex_decode(j.at("key").get<std::string>()), int_poly_from_json(j.at("polynomial")));
      ++count;
    } catch (const std::exception& e) {
      throw ParseError(std::string("bad cache record: ") + e.what(), here);
    }
  }
  return count;
}

void save_cache(const std::string& path, const PolyCache& cache) {
  auto entries = cache.entries();
  std::vector<std::pair<std::string, IntPolynomial>> sorted(entries.begin(), entries.end());
  std::sort(sorted.begin(), sorted.end(), [](auto& a, auto& b) { return a.first < b.first; });
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write cache file " + path);
  for (auto& [k, p] : sorted) {
    out << Json{{"key", hex_encode(k)}, {"polynomial", to_json(p)}}.dump() << "\n";
  }
}

}  // namespace gf

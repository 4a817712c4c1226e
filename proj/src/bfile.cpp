#include "lukas/bfile.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "lukas/error.hpp"

namespace lukas {
namespace {

[[noreturn]] void malformed(const std::string& source, std::size_t line, const std::string& why) {
  throw Error(Errc::bfile_malformed, source + ":" + std::to_string(line) + ": " + why);
}

bool is_integer(const std::string& s) {
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

BFile parse_bfile(std::istream& in, const std::string& source) {
  BFile b;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string index, value, extra;
    fields >> index >> value;
    if (value.empty() || (fields >> extra)) malformed(source, lineno, "expected \"index value\"");
    if (!is_integer(index) || !is_integer(value)) malformed(source, lineno, "non-integer field");
    long i = 0;
    try {
      i = std::stol(index);
    } catch (const std::out_of_range&) {
      malformed(source, lineno, "index out of range");
    }
    if (!b.entries.empty() && i <= b.entries.back().index) malformed(source, lineno, "indices must increase");
    b.entries.push_back({i, Count(value)});
  }
  return b;
}

BFile read_bfile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::bfile_malformed, "cannot read b-file " + path.string());
  return parse_bfile(in, path.string());
}

BFileComparison compare_bfile(const BFile& b, const std::vector<Count>& computed, long shift, long from) {
  BFileComparison out;
  for (const auto& e : b.entries) {
    const long m = e.index + shift;
    if (m < 0 || m < from || m >= static_cast<long>(computed.size())) continue;
    ++out.comparisons;
    const Count& c = computed[static_cast<std::size_t>(m)];
    if (c != e.value) out.mismatches.push_back({m, c, e.value});
  }
  return out;
}

std::size_t required_order(const BFile& b, long shift) {
  if (b.entries.empty()) return 0;
  return static_cast<std::size_t>(std::max(0L, b.entries.back().index + shift + 1));
}

}  // namespace lukas

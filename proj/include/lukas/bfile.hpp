#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "lukas/types.hpp"

namespace lukas {

struct BFileEntry {
  long index = 0;
  Count value;
};

/// OEIS b-file: "index value" lines, '#' comments and blank lines ignored,
/// indices strictly increasing.
struct BFile {
  std::vector<BFileEntry> entries;
};

/// Throws Errc::bfile_malformed naming `source` and the line.
BFile parse_bfile(std::istream& in, const std::string& source);

/// Throws Errc::bfile_malformed when the file cannot be read.
BFile read_bfile(const std::filesystem::path& path);

struct BFileMismatch {
  long index = 0;  // computed-series index
  Count computed;
  Count expected;
};

struct BFileComparison {
  std::size_t comparisons = 0;
  std::vector<BFileMismatch> mismatches;
};

/// Compares b-file entry i against computed[i + shift], for shifted indices
/// >= max(0, from). Entries beyond computed.size() are not compared.
BFileComparison compare_bfile(const BFile& b, const std::vector<Count>& computed, long shift, long from);

/// One past the largest shifted index, the series order needed for a full
/// comparison.
std::size_t required_order(const BFile& b, long shift);

}  // namespace lukas

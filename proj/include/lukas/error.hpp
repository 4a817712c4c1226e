#pragma once

#include <stdexcept>
#include <string>

namespace lukas {

enum class Errc {
  invalid_argument,
  invalid_path,
  infinite_family,
  oracle_cap_exceeded,
  non_invertible,
  non_expandable,
  sqrt_non_unit,
  non_integral,
  height_above_bound,
  index_out_of_range,
  bfile_malformed,
  engine_not_applicable,
  engine_disagreement,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace lukas

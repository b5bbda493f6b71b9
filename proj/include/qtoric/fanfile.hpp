#ifndef QTORIC_FANFILE_HPP
#define QTORIC_FANFILE_HPP

#include <optional>
#include <string>
#include <vector>

#include "qtoric/toric.hpp"

namespace qtoric {

// On-disk fan description. Cones are 1-based in the file and 0-based here.
struct FanFile {
  int dimension = 0;
  std::vector<std::vector<long>> rays;
  std::vector<std::vector<int>> cones;
  std::optional<std::vector<BigRat>> omega;
  std::vector<std::string> labels;

  Fan to_fan() const;
};

// Throws ParseError; the message carries "line L, column C" for syntax
// errors and a JSON pointer for schema errors.
FanFile parse_fan_file(const std::string& text);
FanFile read_fan_file(const std::string& path);

std::string write_fan_file(const FanFile& f);
FanFile fan_file_from(const Fan& fan, std::optional<std::vector<BigRat>> omega = std::nullopt);

// "1/3,1/3,1/3" or "[1/3, 1/3, 1/3]".
std::vector<BigRat> parse_rational_vector(const std::string& text);
std::vector<long> parse_integer_vector(const std::string& text);

// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

// FNV-1a over the canonical (sorted) fan data.
std::string fan_hash(const Fan& fan);

} // namespace qtoric

#endif

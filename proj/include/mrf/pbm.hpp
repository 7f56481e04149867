#pragma once

#include "mrf/spin_image.hpp"

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mrf {

enum class PbmFormat {
  Plain,  ///< P1, ASCII '0'/'1'
  Raw,    ///< P4, rows packed MSB first and padded to whole bytes
};

/// Malformed PBM input. `offset()` is the byte position where parsing failed.
class PbmParseError : public std::runtime_error {
 public:
  PbmParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t offset_;
};

/// Decodes a P1 or P4 bitmap. Bit 0 (white) becomes +1, bit 1 (black) -1.
/// `#` comments are accepted anywhere in the header.
SpinImage load_pbm(std::string_view bytes);

/// Encodes an image; load_pbm(save_pbm(x, f)) == x for both formats.
std::string save_pbm(const SpinImage& image, PbmFormat format);

SpinImage load_pbm_file(const std::filesystem::path& path);
void save_pbm_file(const SpinImage& image, PbmFormat format, const std::filesystem::path& path);

/// Whole-file helpers; throw std::runtime_error naming the path on failure.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace mrf

#include "mrf/pbm.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace mrf {

PbmParseError::PbmParseError(const std::string& message, std::size_t offset)
    : std::runtime_error("PBM parse error at byte " + std::to_string(offset) + ": " + message),
      detail_(message),
      offset_(offset) {}

namespace {

constexpr Index kMaxDimension = 1 << 20;

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

class Cursor {
 public:
  explicit Cursor(std::string_view bytes) : bytes_(bytes) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= bytes_.size(); }
  char peek() const { return bytes_[pos_]; }
  char take() { return bytes_[pos_++]; }
  std::size_t remaining() const { return bytes_.size() - pos_; }

  [[noreturn]] void fail(const std::string& message) const { throw PbmParseError(message, pos_); }

  void skip_space_and_comments() {
    while (!done()) {
      if (peek() == '#') {
        while (!done() && peek() != '\n' && peek() != '\r') ++pos_;
      } else if (is_space(peek())) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  Index read_dimension(const char* what) {
    skip_space_and_comments();
    if (done()) fail(std::string("missing ") + what);
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail(std::string("expected decimal ") + what);
    }
    Index value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (take() - '0');
      if (value > kMaxDimension) fail(std::string(what) + " is too large");
    }
    if (value < 1) fail(std::string(what) + " must be positive");
    return value;
  }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

SpinImage::Spin spin_of_bit(int bit) { return bit ? SpinImage::Spin(-1) : SpinImage::Spin(1); }

SpinImage::Storage read_plain(Cursor& in, Index width, Index height) {
  SpinImage::Storage spins(height, width);
  for (Index i = 0; i < width * height; ++i) {
    in.skip_space_and_comments();
    if (in.done()) in.fail("truncated P1 payload: expected " + std::to_string(width * height) +
                           " pixels, got " + std::to_string(i));
    const char c = in.peek();
    if (c != '0' && c != '1') in.fail(std::string("non-binary P1 token '") + c + "'");
    in.take();
    spins.data()[i] = spin_of_bit(c - '0');
  }
  return spins;
}

SpinImage::Storage read_raw(Cursor& in, Index width, Index height) {
  // Exactly one whitespace byte separates the header from the raster.
  if (in.done() || !is_space(in.peek())) in.fail("expected single whitespace before P4 raster");
  in.take();
  const Index row_bytes = (width + 7) / 8;
  const auto needed = static_cast<std::size_t>(row_bytes * height);
  if (in.remaining() < needed) {
    in.fail("truncated P4 payload: need " + std::to_string(needed) + " bytes, have " +
            std::to_string(in.remaining()));
  }
  SpinImage::Storage spins(height, width);
  for (Index r = 0; r < height; ++r) {
    for (Index b = 0; b < row_bytes; ++b) {
      const auto byte = static_cast<unsigned char>(in.take());
      for (Index bit = 0; bit < 8 && b * 8 + bit < width; ++bit) {
        spins(r, b * 8 + bit) = spin_of_bit((byte >> (7 - bit)) & 1);
      }
    }
  }
  return spins;
}

}  // namespace

SpinImage load_pbm(std::string_view bytes) {
  Cursor in(bytes);
  if (in.remaining() < 2) in.fail("input too short for a PBM magic number");
  if (in.take() != 'P') in.fail("bad magic number, expected 'P1' or 'P4'");
  const char kind = in.take();
  if (kind != '1' && kind != '4') throw PbmParseError("bad magic number, expected 'P1' or 'P4'", 1);

  const Index width = in.read_dimension("width");
  const Index height = in.read_dimension("height");
  auto spins = kind == '1' ? read_plain(in, width, height) : read_raw(in, width, height);
  return SpinImage(std::move(spins));
}

std::string save_pbm(const SpinImage& image, PbmFormat format) {
  const Index width = image.width();
  const Index height = image.height();
  std::string out = (format == PbmFormat::Plain ? "P1\n" : "P4\n") + std::to_string(width) +
                    " " + std::to_string(height) + "\n";

  if (format == PbmFormat::Plain) {
    // Lines stay under 70 characters.
    constexpr Index kPerLine = 35;
    for (Index r = 0; r < height; ++r) {
      for (Index c = 0; c < width; ++c) {
        out.push_back(image(r, c) < 0 ? '1' : '0');
        const bool line_end = c + 1 == width || (c + 1) % kPerLine == 0;
        out.push_back(line_end ? '\n' : ' ');
      }
    }
    return out;
  }

  const Index row_bytes = (width + 7) / 8;
  out.reserve(out.size() + static_cast<std::size_t>(row_bytes * height));
  for (Index r = 0; r < height; ++r) {
    for (Index b = 0; b < row_bytes; ++b) {
      unsigned char byte = 0;
      for (Index bit = 0; bit < 8 && b * 8 + bit < width; ++bit) {
        if (image(r, b * 8 + bit) < 0) byte |= static_cast<unsigned char>(0x80u >> bit);
      }
      out.push_back(static_cast<char>(byte));
    }
  }
  return out;
}

SpinImage load_pbm_file(const std::filesystem::path& path) {
  const std::string bytes = read_file(path);
  try {
    return load_pbm(bytes);
  } catch (const PbmParseError& e) {
    throw PbmParseError(path.string() + ": " + e.detail(), e.offset());
  }
}

void save_pbm_file(const SpinImage& image, PbmFormat format, const std::filesystem::path& path) {
  write_file(path, save_pbm(image, format));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace mrf

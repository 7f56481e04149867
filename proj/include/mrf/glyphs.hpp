#pragma once

#include "mrf/spin_image.hpp"

namespace mrf {

/// Deterministic black-on-white test image made of large geometric glyphs
/// (disk, rectangle, ring, triangle) scaled to the requested size.
SpinImage make_glyph_image(Index width, Index height);

}  // namespace mrf

#ifndef MONOCONV_TOOLS_SVG_HPP_
#define MONOCONV_TOOLS_SVG_HPP_

#include <cstdint>
#include <string>

#include "monoconv/transforms.hpp"

namespace monoconv::cli {

// Standalone SVG document: axes, x ticks at integers, and the curve as one
// polyline. Output depends only on the arguments.
std::string render_density_svg(const transforms::DensityCurve& curve, std::uint64_t seed);

}  // namespace monoconv::cli

#endif  // MONOCONV_TOOLS_SVG_HPP_

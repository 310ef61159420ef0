// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "mysticum/multimysticum.hpp"

namespace mysticum {

struct RenderOptions {
  /// Comma-separated selection. Tokens:
  ///   pascal[@h] kirkman[@h]           (h defaults to 0, "*" for every height)
  ///   steiner cayley plucker salmon ordinary ladd veronese
  ///   linking@i meeting@i              (inter-layer i, parity must match)
  ///   range:<spec>                     e.g. "range:kirkman 3;05"
  std::string labels = "pascal";
  int width = 800;
  int height = 800;
};

/// SVG 1.1 drawing in the affine chart z = 1, where the conic is the parabola
/// x = y^2. Floating point is used for layout only. Points at infinity are
/// skipped; the viewport grows until every selected line crosses it, up to a
/// bound beyond which elements are left out.
///
/// Throws std::invalid_argument on an unknown token or an empty selection and
/// HeightNotBuilt / ParityMismatch for inter-layers that do not exist.
std::string render_svg(const Multimysticum& m, const RenderOptions& options);

}  // namespace mysticum

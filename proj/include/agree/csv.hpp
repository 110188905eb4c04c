#pragma once

#include <string>
#include <string_view>

#include "agree/annotation_matrix.hpp"
#include "agree/boundary_track.hpp"

namespace agree {

/// Long form: header exactly `item,coder,label`, one judgment per row.
/// Fields may be double-quoted with embedded commas and doubled quotes.
/// Errors carry 1-based line numbers.
AnnotationMatrix parse_long_csv(std::string_view bytes);

/// Wide form: header `item,<coder1>,<coder2>,...`; an empty field is a
/// missing cell. Coders keep header order.
AnnotationMatrix parse_wide_csv(std::string_view bytes);

/// Boundary form: first line `sites=<S>` or `sites=?`, then one
/// `<coder>:<space-separated site indices>` line per coder.
BoundaryTrack parse_boundary_file(std::string_view bytes);

/// Long CSV for a matrix, item-major, skipping missing cells. Re-parsing a
/// complete matrix's output reproduces it exactly.
std::string to_long_csv(const AnnotationMatrix& matrix);

}  // namespace agree

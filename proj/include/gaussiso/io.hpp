#pragma once

#include <iosfwd>
#include <string>

#include "gaussiso/gauss_core.hpp"
#include "gaussiso/shapes.hpp"

namespace gaussiso {

/// Plain-text polygon format: one "x y" vertex per line, '#' comments.
ConvexPolygon read_polygon(std::istream& in);
ConvexPolygon read_polygon_file(const std::string& path);
void write_polygon(std::ostream& out, const ConvexPolygon& poly);

/// CClassSet format: an "upper" line followed by its knots, then "lower"
/// and its knots; '#' comments allowed.
CClassSet read_cclass(std::istream& in);
CClassSet read_cclass_file(const std::string& path);
void write_cclass(std::ostream& out, const CClassSet& c);

}  // namespace gaussiso

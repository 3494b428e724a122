#include "gaussiso/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace gaussiso {

namespace {

// Strips '#' comments and surrounding whitespace; empty result means skip.
std::string clean_line(const std::string& raw) {
  std::string line = raw.substr(0, raw.find('#'));
  const auto first = line.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t\r\n");
  return line.substr(first, last - first + 1);
}

Point parse_point(const std::string& line) {
  std::istringstream ss(line);
  Point p;
  std::string extra;
  if (!(ss >> p.x >> p.y) || (ss >> extra)) {
    throw IOError("malformed vertex line: '" + line + "'");
  }
  return p;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open " + path);
  return in;
}

void write_points(std::ostream& out, const std::vector<Point>& pts) {
  char buf[80];
  for (const Point& p : pts) {
    std::snprintf(buf, sizeof(buf), "%.15g %.15g\n", p.x, p.y);
    out << buf;
  }
}

}  // namespace

ConvexPolygon read_polygon(std::istream& in) {
  std::vector<Point> pts;
  std::string raw;
  while (std::getline(in, raw)) {
    const std::string line = clean_line(raw);
    if (line.empty()) continue;
    pts.push_back(parse_point(line));
  }
  if (pts.size() < 3) throw IOError("polygon file has fewer than 3 vertices");
  return ConvexPolygon(std::move(pts));
}

ConvexPolygon read_polygon_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_polygon(in);
}

void write_polygon(std::ostream& out, const ConvexPolygon& poly) {
  write_points(out, poly.vertices());
}

CClassSet read_cclass(std::istream& in) {
  CClassSet c;
  std::vector<Point>* target = nullptr;
  std::string raw;
  while (std::getline(in, raw)) {
    const std::string line = clean_line(raw);
    if (line.empty()) continue;
    if (line == "upper") {
      target = &c.upper;
    } else if (line == "lower") {
      target = &c.lower;
    } else {
      if (target == nullptr) throw IOError("knot before 'upper'/'lower' header");
      target->push_back(parse_point(line));
    }
  }
  if (c.upper.size() < 2 || c.lower.size() < 2) {
    throw IOError("cclass file needs 'upper' and 'lower' knot lists");
  }
  c.a = c.upper.front().x;
  c.b = c.upper.back().x;
  if (auto res = cclass_validate(c); !res) throw IOError(res.reason);
  return c;
}

CClassSet read_cclass_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_cclass(in);
}

void write_cclass(std::ostream& out, const CClassSet& c) {
  out << "upper\n";
  write_points(out, c.upper);
  out << "lower\n";
  write_points(out, c.lower);
}

}  // namespace gaussiso

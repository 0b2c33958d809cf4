#include "peskin/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "peskin/errors.hpp"

namespace peskin::io {

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ArgumentError("cannot open " + path.string() + " for writing");
  return os;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_curve_csv(std::ostream& os, const Curve& c) {
  os << "theta,x,y\n";
  for (std::size_t k = 0; k < c.size(); ++k) {
    os << format_double(grid_angle(c.size(), k)) << ',' << format_double(c[k].x) << ',' << format_double(c[k].y)
       << '\n';
  }
}

void write_curve_csv(const std::filesystem::path& path, const Curve& c) {
  auto os = open_output(path);
  write_curve_csv(os, c);
}

namespace {

double parse_field(const std::string& s, const std::string& line) {
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) throw ArgumentError("curve csv: bad number in row '" + line + "'");
  return v;
}

}  // namespace

Curve read_curve_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "theta,x,y") throw ArgumentError("curve csv: expected header theta,x,y");
  std::vector<double> xs, ys;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b, c;
    if (!std::getline(row, a, ',') || !std::getline(row, b, ',') || !std::getline(row, c)) {
      throw ArgumentError("curve csv: malformed row '" + line + "'");
    }
    xs.push_back(parse_field(b, line));
    ys.push_back(parse_field(c, line));
  }
  return Curve(VectorGrid(std::move(xs), std::move(ys)));
}

Curve read_curve_csv(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ArgumentError("cannot open " + path.string());
  return read_curve_csv(is);
}

void write_trace_csv(std::ostream& os, std::span<const TraceRecord> trace) {
  os << "t,energy,area,star_norm,c1h_pi_norm,a_x,a_y,a_r,a_t,def_ratio_0,max_speed\n";
  for (const TraceRecord& r : trace) {
    os << format_double(r.t) << ',' << format_double(r.energy) << ',' << format_double(r.area) << ','
       << format_double(r.star_norm) << ',' << format_double(r.c1h_pi_norm) << ',' << format_double(r.coeffs.a_x)
       << ',' << format_double(r.coeffs.a_y) << ',' << format_double(r.coeffs.a_r) << ','
       << format_double(r.coeffs.a_t) << ',' << format_double(r.deformation_ratio_0) << ','
       << format_double(r.max_speed) << '\n';
  }
}

void write_trace_csv(const std::filesystem::path& path, std::span<const TraceRecord> trace) {
  auto os = open_output(path);
  write_trace_csv(os, trace);
}

void write_series_csv(const std::filesystem::path& path, const std::string& header, std::span<const SeriesPoint> s) {
  auto os = open_output(path);
  os << header << '\n';
  for (const SeriesPoint& p : s) os << format_double(p.t) << ',' << format_double(p.value) << '\n';
}

void write_field_csv(std::ostream& os, std::span<const FieldSample> samples) {
  os << "x,y,u1,u2,p,masked\n";
  for (const FieldSample& s : samples) {
    os << format_double(s.point.x) << ',' << format_double(s.point.y) << ',' << format_double(s.u.x) << ','
       << format_double(s.u.y) << ',' << format_double(s.p) << ',' << (s.near_curve ? 1 : 0) << '\n';
  }
}

void write_field_csv(const std::filesystem::path& path, std::span<const FieldSample> samples) {
  auto os = open_output(path);
  write_field_csv(os, samples);
}

}  // namespace peskin::io

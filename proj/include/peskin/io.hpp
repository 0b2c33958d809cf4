#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "peskin/biop.hpp"
#include "peskin/curve.hpp"
#include "peskin/modes.hpp"

namespace peskin::io {

/// 17 significant digits, '.' decimal point.
std::string format_double(double v);

/// Header `theta,x,y`, one row per node.
void write_curve_csv(std::ostream& os, const Curve& c);
void write_curve_csv(const std::filesystem::path& path, const Curve& c);
Curve read_curve_csv(std::istream& is);
Curve read_curve_csv(const std::filesystem::path& path);

/// Header `t,energy,area,star_norm,c1h_pi_norm,a_x,a_y,a_r,a_t,def_ratio_0,max_speed`.
void write_trace_csv(std::ostream& os, std::span<const TraceRecord> trace);
void write_trace_csv(const std::filesystem::path& path, std::span<const TraceRecord> trace);

/// Two columns under the given header, e.g. "t,log_pi_c1h" or "t_half,log_dta".
void write_series_csv(const std::filesystem::path& path, const std::string& header, std::span<const SeriesPoint> s);

/// Header `x,y,u1,u2,p,masked`; masked rows carry nan values and masked = 1.
void write_field_csv(std::ostream& os, std::span<const FieldSample> samples);
void write_field_csv(const std::filesystem::path& path, std::span<const FieldSample> samples);

}  // namespace peskin::io

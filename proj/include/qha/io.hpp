#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qha/tauberian.hpp"

namespace qha {

// Text formats, full double precision (17 significant digits), so that saved
// fixtures round-trip bit-exactly and diff cleanly.
//
//   QHA-FUN v1 N=<N>            then N^2 lines  x,omega,re,im   (x outer)
//   QHA-MAT v1 N=<N>            then N^2 lines  row,col,re,im   (row outer)
//   QHA-SIG v1 N=<N>            then N   lines  t,re,im
//
// Continuum phase-plane samples reuse QHA-FUN with an extra header token:
//   QHA-FUN v1 N=<n> GRID=continuum n=<n> L=<L>

std::string format_float(double v);  // shortest-exact "%.17g"

void write_phase_function(std::ostream& os, const PhaseFunction& f);
void write_phase_function_file(const std::string& path, const PhaseFunction& f);
PhaseFunction read_phase_function(std::istream& is);
PhaseFunction read_phase_function_file(const std::string& path);

void write_operator(std::ostream& os, const OperatorMatrix& a);
void write_operator_file(const std::string& path, const OperatorMatrix& a);
OperatorMatrix read_operator(std::istream& is);
OperatorMatrix read_operator_file(const std::string& path);

void write_signal(std::ostream& os, const Signal& s);
void write_signal_file(const std::string& path, const Signal& s);
Signal read_signal(std::istream& is);
Signal read_signal_file(const std::string& path);

// Heatmap CSV: header "x,omega,value", one row per grid point (x outer).
void write_heatmap_csv(std::ostream& os, const RMat& values);
void write_heatmap_csv_file(const std::string& path, const RMat& values);

// Plane samples on a continuum grid, with coordinates recoverable from the
// header; rows follow grid indices (x index outer).
struct PlaneHeader {
  int n = 0;
  double half_width = 0.0;
};

void write_plane_function(std::ostream& os, const CMat& values, const PlaneHeader& h);
void write_plane_function_file(const std::string& path, const CMat& values,
                               const PlaneHeader& h);

// Flat "key = value" configuration text; '#' starts a comment.
struct KeyValueConfig {
  std::map<std::string, std::string> entries;

  static KeyValueConfig parse(std::istream& is);
  static KeyValueConfig parse_file(const std::string& path);

  std::optional<std::string> get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  long long get_int(const std::string& key, long long fallback) const;
  std::vector<int> get_int_list(const std::string& key, const std::vector<int>& fallback) const;
};

std::string regularity_report_to_json(const RegularityReport& rep);
std::string schatten_report_to_json(const SchattenReport& rep);

}  // namespace qha

#include "qha/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qha {

namespace {

using nlohmann::json;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file for reading: " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open file for writing: " + path);
  return out;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Header parsing: space-separated tokens after the magic, each KEY=VALUE.
std::map<std::string, std::string> header_tokens(const std::string& line,
                                                 const std::string& magic) {
  if (line.rfind(magic, 0) != 0) {
    throw ParseError("expected header starting with '" + magic + "'", 1);
  }
  std::map<std::string, std::string> out;
  std::istringstream rest(line.substr(magic.size()));
  std::string tok;
  while (rest >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError("malformed header token '" + tok + "'", 1);
    out[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return out;
}

int header_n(const std::map<std::string, std::string>& tokens) {
  const auto it = tokens.find("N");
  if (it == tokens.end()) throw ParseError("header is missing N=<N>", 1);
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    throw ParseError("header N is not an integer: " + it->second, 1);
  }
}

struct IndexedValue {
  int i = 0;
  int j = 0;
  cplx v;
};

IndexedValue parse_value_line(const std::string& line, int line_no) {
  IndexedValue out;
  char extra = 0;
  double re = 0.0, im = 0.0;
  const int got = std::sscanf(line.c_str(), " %d , %d , %lf , %lf %c",
                              &out.i, &out.j, &re, &im, &extra);
  if (got != 4) throw ParseError("expected 'i,j,re,im', got '" + line + "'", line_no);
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw ParseError("entries must be finite", line_no);
  }
  out.v = {re, im};
  return out;
}

// Shared body reader for the three grid formats.
CMat read_indexed_matrix(std::istream& is, int rows, int cols, const char* what) {
  CMat m(rows, cols);
  Eigen::MatrixXi seen = Eigen::MatrixXi::Zero(rows, cols);
  std::string line;
  int line_no = 1;
  int count = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    const IndexedValue iv = parse_value_line(t, line_no);
    if (iv.i < 0 || iv.i >= rows || iv.j < 0 || iv.j >= cols) {
      throw ParseError(std::string(what) + ": index out of range", line_no);
    }
    if (seen(iv.i, iv.j)) throw ParseError(std::string(what) + ": duplicate entry", line_no);
    seen(iv.i, iv.j) = 1;
    m(iv.i, iv.j) = iv.v;
    ++count;
  }
  if (count != rows * cols) {
    throw ParseError(std::string(what) + ": expected " + std::to_string(rows * cols) +
                         " entries, got " + std::to_string(count),
                     line_no);
  }
  return m;
}

}  // namespace

std::string format_float(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_phase_function(std::ostream& os, const PhaseFunction& f) {
  const int n = f.params.n;
  os << "QHA-FUN v1 N=" << n << "\n";
  for (int x = 0; x < n; ++x) {
    for (int w = 0; w < n; ++w) {
      os << x << ',' << w << ',' << format_float(f.values(x, w).real()) << ','
         << format_float(f.values(x, w).imag()) << "\n";
    }
  }
}

void write_phase_function_file(const std::string& path, const PhaseFunction& f) {
  auto out = open_output(path);
  write_phase_function(out, f);
}

PhaseFunction read_phase_function(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw ParseError("empty input", 1);
  const auto tokens = header_tokens(trim(header), "QHA-FUN v1");
  const int n = header_n(tokens);
  GroupParams p(n);
  PhaseFunction f(p);
  f.values = read_indexed_matrix(is, n, n, "QHA-FUN");
  return f;
}

PhaseFunction read_phase_function_file(const std::string& path) {
  auto in = open_input(path);
  return read_phase_function(in);
}

void write_operator(std::ostream& os, const OperatorMatrix& a) {
  const int n = a.params.n;
  os << "QHA-MAT v1 N=" << n << "\n";
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      os << r << ',' << c << ',' << format_float(a.entries(r, c).real()) << ','
         << format_float(a.entries(r, c).imag()) << "\n";
    }
  }
}

void write_operator_file(const std::string& path, const OperatorMatrix& a) {
  auto out = open_output(path);
  write_operator(out, a);
}

OperatorMatrix read_operator(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw ParseError("empty input", 1);
  const auto tokens = header_tokens(trim(header), "QHA-MAT v1");
  const int n = header_n(tokens);
  GroupParams p(n);
  OperatorMatrix a(p);
  a.entries = read_indexed_matrix(is, n, n, "QHA-MAT");
  return a;
}

OperatorMatrix read_operator_file(const std::string& path) {
  auto in = open_input(path);
  return read_operator(in);
}

void write_signal(std::ostream& os, const Signal& s) {
  const int n = s.params.n;
  os << "QHA-SIG v1 N=" << n << "\n";
  for (int t = 0; t < n; ++t) {
    os << t << ',' << format_float(s.values(t).real()) << ','
       << format_float(s.values(t).imag()) << "\n";
  }
}

void write_signal_file(const std::string& path, const Signal& s) {
  auto out = open_output(path);
  write_signal(out, s);
}

Signal read_signal(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw ParseError("empty input", 1);
  const auto tokens = header_tokens(trim(header), "QHA-SIG v1");
  const int n = header_n(tokens);
  GroupParams p(n);
  Signal s(p);
  Eigen::VectorXi seen = Eigen::VectorXi::Zero(n);
  std::string line;
  int line_no = 1;
  int count = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    int idx = 0;
    double re = 0.0, im = 0.0;
    char extra = 0;
    const int got = std::sscanf(t.c_str(), " %d , %lf , %lf %c", &idx, &re, &im, &extra);
    if (got != 3) throw ParseError("expected 't,re,im', got '" + t + "'", line_no);
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw ParseError("entries must be finite", line_no);
    }
    if (idx < 0 || idx >= n) throw ParseError("QHA-SIG: index out of range", line_no);
    if (seen(idx)) throw ParseError("QHA-SIG: duplicate entry", line_no);
    seen(idx) = 1;
    s.values(idx) = {re, im};
    ++count;
  }
  if (count != n) {
    throw ParseError("QHA-SIG: expected " + std::to_string(n) + " entries, got " +
                         std::to_string(count),
                     line_no);
  }
  return s;
}

Signal read_signal_file(const std::string& path) {
  auto in = open_input(path);
  return read_signal(in);
}

void write_heatmap_csv(std::ostream& os, const RMat& values) {
  os << "x,omega,value\n";
  for (int x = 0; x < values.rows(); ++x) {
    for (int w = 0; w < values.cols(); ++w) {
      os << x << ',' << w << ',' << format_float(values(x, w)) << "\n";
    }
  }
}

void write_heatmap_csv_file(const std::string& path, const RMat& values) {
  auto out = open_output(path);
  write_heatmap_csv(out, values);
}

void write_plane_function(std::ostream& os, const CMat& values, const PlaneHeader& h) {
  os << "QHA-FUN v1 N=" << h.n << " GRID=continuum n=" << h.n
     << " L=" << format_float(h.half_width) << "\n";
  for (int j = 0; j < values.rows(); ++j) {
    for (int k = 0; k < values.cols(); ++k) {
      os << j << ',' << k << ',' << format_float(values(j, k).real()) << ','
         << format_float(values(j, k).imag()) << "\n";
    }
  }
}

void write_plane_function_file(const std::string& path, const CMat& values,
                               const PlaneHeader& h) {
  auto out = open_output(path);
  write_plane_function(out, values, h);
}

KeyValueConfig KeyValueConfig::parse(std::istream& is) {
  KeyValueConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected 'key = value', got '" + t + "'", line_no);
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty()) throw ParseError("empty key", line_no);
    cfg.entries[key] = value;
  }
  return cfg;
}

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
  auto in = open_input(path);
  return parse(in);
}

std::optional<std::string> KeyValueConfig::get(const std::string& key) const {
  const auto it = entries.find(key);
  if (it == entries.end()) return std::nullopt;
  return it->second;
}

std::string KeyValueConfig::get_or(const std::string& key, const std::string& fallback) const {
  return get(key).value_or(fallback);
}

double KeyValueConfig::get_double(const std::string& key, double fallback) const {
  const auto v = get(key);
  if (!v) return fallback;
  try {
    return std::stod(*v);
  } catch (const std::exception&) {
    throw Error("config value for '" + key + "' is not a number: " + *v);
  }
}

long long KeyValueConfig::get_int(const std::string& key, long long fallback) const {
  const auto v = get(key);
  if (!v) return fallback;
  try {
    return std::stoll(*v);
  } catch (const std::exception&) {
    throw Error("config value for '" + key + "' is not an integer: " + *v);
  }
}

std::vector<int> KeyValueConfig::get_int_list(const std::string& key,
                                              const std::vector<int>& fallback) const {
  const auto v = get(key);
  if (!v) return fallback;
  std::vector<int> out;
  std::istringstream ss(*v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string t = trim(item);
    if (t.empty()) continue;
    try {
      out.push_back(std::stoi(t));
    } catch (const std::exception&) {
      throw Error("config value for '" + key + "' is not an integer list: " + *v);
    }
  }
  return out;
}

namespace {

json phase_points_to_json(const std::vector<PhasePoint>& pts) {
  json arr = json::array();
  for (const auto& z : pts) arr.push_back({z.x, z.w});
  return arr;
}

}  // namespace

std::string regularity_report_to_json(const RegularityReport& rep) {
  json j;
  j["N"] = rep.params.n;
  j["tol"] = rep.tol;
  j["zero_set"] = phase_points_to_json(rep.zero_set);
  j["support_size"] = rep.support_size;
  j["translate_rank"] = rep.translate_rank;
  j["kernel_dim_A"] = rep.kernel_dim_A;
  j["kernel_dim_B"] = rep.kernel_dim_B;
  j["regular"] = rep.regular;
  j["degenerate"] = rep.degenerate;
  j["arveson_support"] = phase_points_to_json(rep.arveson_support);
  j["ambiguity_zeroset_match"] = rep.ambiguity_zeroset_match;
  return j.dump(2);
}

std::string schatten_report_to_json(const SchattenReport& rep) {
  json j;
  json sv = json::array();
  for (int i = 0; i < rep.singular_values.size(); ++i) sv.push_back(rep.singular_values(i));
  j["singular_values"] = sv;
  json norms = json::object();
  for (const auto& [p, v] : rep.norms) {
    norms[p == kInf ? "inf" : format_float(p)] = v;
  }
  j["norms"] = norms;
  return j.dump(2);
}

}  // namespace qha

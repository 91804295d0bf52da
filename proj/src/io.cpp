#include "gpst/io.hpp"

#include "json.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gpst {

namespace {

using njson = nlohmann::ordered_json;

bool has_json_extension(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

[[noreturn]] void parse_fail(const std::string& path, size_t line, const std::string& msg) {
  fail(errc::parse_error, path + ":" + std::to_string(line) + ": " + msg);
}

long parse_long(const std::string& field, const std::string& path, size_t line) {
  long v = 0;
  const auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || p != field.data() + field.size())
    parse_fail(path, line, "expected an integer, got '" + field + "'");
  return v;
}

double parse_double(const std::string& field, const std::string& path, size_t line) {
  double v = 0.0;
  const auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || p != field.data() + field.size())
    parse_fail(path, line, "expected a number, got '" + field + "'");
  if (!std::isfinite(v)) parse_fail(path, line, "non-finite value '" + field + "'");
  return v;
}

struct CsvTable {
  std::vector<std::vector<std::string>> rows;  // line number = index + 2
};

CsvTable read_csv(const std::string& path, const std::string& header) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open " + path);
  std::string line;
  size_t lineno = 0;
  CsvTable table;
  const std::vector<std::string> want = split_fields(header);
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    std::vector<std::string> fields = split_fields(line);
    if (lineno == 1) {
      if (fields != want)
        parse_fail(path, 1, "expected header '" + header + "'");
      continue;
    }
    if (fields.size() != want.size())
      parse_fail(path, lineno,
                 "expected " + std::to_string(want.size()) + " fields, got " +
                     std::to_string(fields.size()));
    table.rows.push_back(std::move(fields));
  }
  if (lineno == 0) parse_fail(path, 1, "empty file");
  return table;
}

njson load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open " + path);
  try {
    return njson::parse(in);
  } catch (const njson::exception& e) {  // covers overflow (1e999) as well as syntax
    fail(errc::parse_error, path + ": " + e.what());
  }
}

cplx json_complex(const njson& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    fail(errc::schema_error, path + ": complex values must be [re, im] number pairs");
  const double re = v[0].get<double>();
  const double im = v[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im))
    fail(errc::schema_error, path + ": non-finite value");
  return {re, im};
}

njson complex_json(const cplx& z) { return njson::array({z.real(), z.imag()}); }

void store_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(errc::parse_error, "cannot write " + path);
  out << text;
  if (!out) fail(errc::parse_error, "write failed for " + path);
}

// shared by coefficients and symbols: fills a dense (t, phi) array from CSV
// or JSON, requiring every cell exactly once
CVec read_time_phase(const std::string& path, int time_size, int dual_size) {
  const size_t total = static_cast<size_t>(time_size) * dual_size;
  CVec values(total, cplx(0.0, 0.0));
  if (has_json_extension(path)) {
    const njson j = load_json(path);
    if (!j.is_object() || !j.contains("time_size") || !j.contains("dual_size") ||
        !j.contains("values") || !j["values"].is_array())
      fail(errc::schema_error, path + ": expected {time_size, dual_size, values}");
    if (j["time_size"].get<int>() != time_size || j["dual_size"].get<int>() != dual_size)
      fail(errc::schema_error, path + ": array shape does not match |G| x |S+|");
    if (j["values"].size() != total)
      fail(errc::schema_error, path + ": wrong number of values");
    for (size_t i = 0; i < total; ++i) values[i] = json_complex(j["values"][i], path);
    return values;
  }
  const CsvTable table = read_csv(path, "t_index,phi_index,re,im");
  std::vector<uint8_t> seen(total, 0);
  for (size_t r = 0; r < table.rows.size(); ++r) {
    const size_t lineno = r + 2;
    const long t = parse_long(table.rows[r][0], path, lineno);
    const long p = parse_long(table.rows[r][1], path, lineno);
    if (t < 0 || t >= time_size || p < 0 || p >= dual_size)
      fail(errc::schema_error, path + ":" + std::to_string(lineno) + ": index (" +
                                   std::to_string(t) + ", " + std::to_string(p) +
                                   ") out of range");
    const size_t idx = static_cast<size_t>(t) * dual_size + p;
    if (seen[idx])
      fail(errc::schema_error,
           path + ":" + std::to_string(lineno) + ": duplicate index");
    seen[idx] = 1;
    values[idx] = {parse_double(table.rows[r][2], path, lineno),
                   parse_double(table.rows[r][3], path, lineno)};
  }
  for (size_t i = 0; i < total; ++i)
    if (!seen[i])
      fail(errc::schema_error,
           path + ": missing entries (need the full |G| x |S+| grid)");
  return values;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CVec read_signal(const std::string& path, int expected_len) {
  if (has_json_extension(path)) {
    const njson j = load_json(path);
    if (!j.is_array()) fail(errc::schema_error, path + ": expected an array of [re, im]");
    CVec f(j.size());
    for (size_t i = 0; i < j.size(); ++i) f[i] = json_complex(j[i], path);
    if (expected_len >= 0 && static_cast<int>(f.size()) != expected_len)
      fail(errc::schema_error, path + ": signal length " + std::to_string(f.size()) +
                                   " != expected " + std::to_string(expected_len));
    return f;
  }

  const CsvTable table = read_csv(path, "element_index,re,im");
  const size_t len =
      expected_len >= 0 ? static_cast<size_t>(expected_len) : table.rows.size();
  if (table.rows.size() != len)
    fail(errc::schema_error, path + ": signal length " + std::to_string(table.rows.size()) +
                                 " != expected " + std::to_string(len));
  CVec f(len, cplx(0.0, 0.0));
  std::vector<uint8_t> seen(len, 0);
  for (size_t r = 0; r < table.rows.size(); ++r) {
    const size_t lineno = r + 2;
    const long idx = parse_long(table.rows[r][0], path, lineno);
    if (idx < 0 || static_cast<size_t>(idx) >= len)
      fail(errc::schema_error, path + ":" + std::to_string(lineno) + ": element index " +
                                   std::to_string(idx) + " out of range");
    if (seen[idx])
      fail(errc::schema_error,
           path + ":" + std::to_string(lineno) + ": duplicate element index");
    seen[idx] = 1;
    f[idx] = {parse_double(table.rows[r][1], path, lineno),
              parse_double(table.rows[r][2], path, lineno)};
  }
  return f;
}

std::string signal_text(const CVec& f, FileFormat fmt) {
  if (fmt == FileFormat::json) {
    njson j = njson::array();
    for (const cplx& z : f) j.push_back(complex_json(z));
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "element_index,re,im\n";
  for (size_t i = 0; i < f.size(); ++i)
    out << i << ',' << format_double(f[i].real()) << ',' << format_double(f[i].imag())
        << '\n';
  return out.str();
}

void write_signal(const std::string& path, const CVec& f, FileFormat fmt) {
  store_text(path, signal_text(f, fmt));
}

TimePhaseCoefficients read_coefficients(const std::string& path, int time_size,
                                        int dual_size) {
  TimePhaseCoefficients c;
  c.time_size = time_size;
  c.dual_size = dual_size;
  c.values = read_time_phase(path, time_size, dual_size);
  return c;
}

std::string coefficients_text(const TimePhaseCoefficients& c, FileFormat fmt) {
  if (fmt == FileFormat::json) {
    njson j;
    j["time_size"] = c.time_size;
    j["dual_size"] = c.dual_size;
    njson values = njson::array();
    for (const cplx& z : c.values) values.push_back(complex_json(z));
    j["values"] = std::move(values);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "t_index,phi_index,re,im\n";
  for (int t = 0; t < c.time_size; ++t)
    for (int p = 0; p < c.dual_size; ++p)
      out << t << ',' << p << ',' << format_double(c.at(t, p).real()) << ','
          << format_double(c.at(t, p).imag()) << '\n';
  return out.str();
}

void write_coefficients(const std::string& path, const TimePhaseCoefficients& c,
                        FileFormat fmt) {
  store_text(path, coefficients_text(c, fmt));
}

SymbolFunction read_symbol(const std::string& path, int time_size, int dual_size) {
  SymbolFunction u;
  u.time_size = time_size;
  u.dual_size = dual_size;
  u.values = read_time_phase(path, time_size, dual_size);
  return u;
}

std::string spectrum_text(const SphericalDual& dual, const CVec& fhat, FileFormat fmt) {
  if (fhat.size() != static_cast<size_t>(dual.size()))
    fail(errc::dimension_mismatch, "spectrum length != dual size");
  if (fmt == FileFormat::json) {
    njson j;
    j["weights"] = dual.weights;
    njson values = njson::array();
    for (const cplx& z : fhat) values.push_back(complex_json(z));
    j["values"] = std::move(values);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "phi_index,weight,re,im\n";
  for (size_t p = 0; p < fhat.size(); ++p)
    out << p << ',' << format_double(dual.weights[p]) << ','
        << format_double(fhat[p].real()) << ',' << format_double(fhat[p].imag()) << '\n';
  return out.str();
}

void write_spectrum(const std::string& path, const SphericalDual& dual, const CVec& fhat,
                    FileFormat fmt) {
  store_text(path, spectrum_text(dual, fhat, fmt));
}

PairFile read_pair_file(const std::string& path) {
  const njson j = load_json(path);
  if (!j.is_object() || !j.contains("order") || !j.contains("mul") || !j.contains("subgroup"))
    fail(errc::schema_error, path + ": expected {order, mul, subgroup[, automorphisms]}");
  if (!j["order"].is_number_integer() || j["order"].get<long>() <= 0)
    fail(errc::schema_error, path + ": order must be a positive integer");
  const size_t n = j["order"].get<size_t>();

  PairFile pf;
  if (!j["mul"].is_array() || j["mul"].size() != n)
    fail(errc::schema_error, path + ": mul must be an order x order table");
  pf.mul.resize(n);
  for (size_t r = 0; r < n; ++r) {
    const njson& row = j["mul"][r];
    if (!row.is_array() || row.size() != n)
      fail(errc::schema_error, path + ": mul row " + std::to_string(r) + " has wrong length");
    pf.mul[r].resize(n);
    for (size_t c = 0; c < n; ++c) {
      if (!row[c].is_number_integer())
        fail(errc::schema_error, path + ": mul entries must be integers");
      pf.mul[r][c] = row[c].get<int>();
    }
  }

  if (!j["subgroup"].is_array() || j["subgroup"].empty())
    fail(errc::schema_error, path + ": subgroup must be a nonempty index list");
  for (const njson& v : j["subgroup"]) {
    if (!v.is_number_integer())
      fail(errc::schema_error, path + ": subgroup entries must be integers");
    pf.subgroup.push_back(v.get<int>());
  }

  if (j.contains("automorphisms")) {
    if (!j["automorphisms"].is_object())
      fail(errc::schema_error, path + ": automorphisms must be an object of name -> perm");
    for (const auto& [name, perm] : j["automorphisms"].items()) {
      if (!perm.is_array() || perm.size() != n)
        fail(errc::schema_error,
             path + ": automorphism '" + name + "' must list order entries");
      std::vector<int> p(n);
      for (size_t i = 0; i < n; ++i) {
        if (!perm[i].is_number_integer())
          fail(errc::schema_error, path + ": automorphism entries must be integers");
        p[i] = perm[i].get<int>();
      }
      pf.automorphisms.emplace_back(name, std::move(p));
    }
  }
  return pf;
}

std::string pair_file_text(const PairFile& pf) {
  njson j;
  j["order"] = pf.mul.size();
  j["mul"] = pf.mul;
  j["subgroup"] = pf.subgroup;
  njson autos = njson::object();
  for (const auto& [name, perm] : pf.automorphisms) autos[name] = perm;
  j["automorphisms"] = std::move(autos);
  return j.dump(2) + "\n";
}

void write_pair_file(const std::string& path, const PairFile& pf) {
  store_text(path, pair_file_text(pf));
}

}  // namespace gpst

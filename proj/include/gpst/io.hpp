#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gpst/localization.hpp"

namespace gpst {

enum class FileFormat { csv, json };

// Values are written as decimal text with 17 significant digits, so every
// write/read round-trip is lossless.  CSV files carry mandatory headers;
// .json extensions switch the reader to the JSON schemas.

// signal CSV: element_index,re,im (each index exactly once)
CVec read_signal(const std::string& path, int expected_len = -1);
void write_signal(const std::string& path, const CVec& f, FileFormat fmt);

// time-phase CSV: t_index,phi_index,re,im (symbols share the schema)
TimePhaseCoefficients read_coefficients(const std::string& path, int time_size, int dual_size);
void write_coefficients(const std::string& path, const TimePhaseCoefficients& c, FileFormat fmt);
SymbolFunction read_symbol(const std::string& path, int time_size, int dual_size);

// spectrum CSV: phi_index,weight,re,im
void write_spectrum(const std::string& path, const SphericalDual& dual, const CVec& fhat,
                    FileFormat fmt);

// group JSON: { "order": n, "mul": [[...]], "subgroup": [...],
//               "automorphisms": { name: [perm] } }
struct PairFile {
  std::vector<std::vector<int>> mul;
  std::vector<int> subgroup;
  std::vector<std::pair<std::string, std::vector<int>>> automorphisms;
};

PairFile read_pair_file(const std::string& path);
void write_pair_file(const std::string& path, const PairFile& pf);

// serialized forms of the writers above, for emitting to stdout
std::string signal_text(const CVec& f, FileFormat fmt);
std::string coefficients_text(const TimePhaseCoefficients& c, FileFormat fmt);
std::string spectrum_text(const SphericalDual& dual, const CVec& fhat, FileFormat fmt);
std::string pair_file_text(const PairFile& pf);

std::string format_double(double v);  // %.17g

}  // namespace gpst

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "gpst/audit.hpp"
#include "gpst/catalog.hpp"
#include "gpst/io.hpp"
#include "gpst/localization.hpp"
#include "gpst/stockwell.hpp"
#include "gpst/version.hpp"

using namespace gpst;

namespace {

struct Globals {
  uint64_t seed = 42;
  double tol = 1e-10;
  std::string output;
  std::string format = "csv";

  FileFormat fmt() const { return format == "json" ? FileFormat::json : FileFormat::csv; }
  double tight() const { return tol / 100.0; }
};

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output);
  if (!out) fail(errc::parse_error, "cannot write " + g.output);
  out << text;
}

void emit_sidecar(const Globals& g, const std::string& suffix, const std::string& text) {
  if (g.output.empty()) {
    std::cerr << text;
    return;
  }
  std::ofstream out(g.output + suffix);
  if (!out) fail(errc::parse_error, "cannot write " + g.output + suffix);
  out << text;
}

// A pair plus everything derived from it; borrowed from the catalog or owned
// when loaded from a group JSON file.
struct Working {
  const GelfandPair* pair = nullptr;
  const SphericalDual* dual = nullptr;
  const std::vector<std::pair<std::string, GroupAutomorphism>>* autos = nullptr;
  bool abelian = false;
  std::string label;
  std::shared_ptr<CatalogEntry> owned;
};

Working resolve_pair(const std::string& ref) {
  const std::vector<std::string> names = list_pairs();
  if (std::find(names.begin(), names.end(), ref) != names.end()) {
    const CatalogEntry& e = get_pair(ref);
    return {&e.pair, &e.dual, &e.automorphisms, e.abelian, e.name, nullptr};
  }
  if (!std::filesystem::exists(ref)) fail(errc::unknown_pair, ref);

  auto owned = std::make_shared<CatalogEntry>();
  const PairFile pf = read_pair_file(ref);
  owned->name = ref;
  owned->pair = certify_gelfand(
      std::make_shared<const FiniteGroup>(build_group(pf.mul)), pf.subgroup);
  owned->automorphisms.emplace_back("id", identity_automorphism(owned->pair.g()));
  for (const auto& [name, perm] : pf.automorphisms) {
    if (name == "id") continue;
    GroupAutomorphism a = check_automorphism(owned->pair.g(), perm);
    for (int k : owned->pair.k.members)
      if (!owned->pair.k.mask[a.perm[k]])
        fail(errc::schema_error,
             "automorphism '" + name + "' does not preserve the subgroup");
    owned->automorphisms.emplace_back(name, std::move(a));
  }
  owned->dual = plancherel_weights(owned->pair, spherical_functions(owned->pair));
  owned->abelian = true;
  for (int x = 0; x < owned->pair.g().order && owned->abelian; ++x)
    for (int y = 0; y < x; ++y)
      if (owned->pair.g().mul[x][y] != owned->pair.g().mul[y][x]) {
        owned->abelian = false;
        break;
      }
  Working w{&owned->pair, &owned->dual, &owned->automorphisms, owned->abelian, ref, owned};
  return w;
}

const GroupAutomorphism& find_auto(const Working& w, const std::string& name) {
  for (const auto& [n, a] : *w.autos)
    if (n == name) return a;
  fail(errc::schema_error, "automorphism '" + name + "' is not defined for this pair");
}

std::string show_text(const Working& w) {
  std::ostringstream out;
  out << "pair: " << w.label << "\n";
  out << "order: " << w.pair->g().order << ", subgroup size: " << w.pair->k.size()
      << ", double cosets: " << w.pair->dim() << ", certified: "
      << (w.pair->certified ? "yes" : "no") << ", abelian: " << (w.abelian ? "yes" : "no")
      << "\n";
  out << "class sizes:";
  for (int s : w.pair->cosets.class_sizes) out << ' ' << s;
  out << "\nplancherel weights:";
  for (double mu : w.dual->weights) out << ' ' << format_double(mu);
  out << "\nspherical functions (class values):\n";
  for (int p = 0; p < w.dual->size(); ++p) {
    out << "  omega_" << p << (w.dual->positive_definite[p] ? "  " : " !pd ");
    for (const cplx& z : w.dual->functions[p].class_values)
      out << " (" << format_double(z.real()) << ", " << format_double(z.imag()) << ")";
    out << "\n";
  }
  out << "automorphisms:";
  for (const auto& [n, a] : *w.autos) out << ' ' << n;
  out << "\n";
  if (w.owned == nullptr) out << "notes: " << get_pair(w.label).notes << "\n";
  return out.str();
}

nlohmann::ordered_json report_to_json(const OperatorReport& r) {
  nlohmann::ordered_json j;
  j["operator_norm"] = r.operator_norm;
  j["symbol_norms"] = r.symbol_norms;
  j["bound_margins"] = r.bound_margins;
  j["adjoint_residual"] = r.adjoint_residual;
  j["bi_invariance_leakage"] = r.bi_invariance_leakage;
  return j;
}

int exit_code_for(errc c) {
  switch (c) {
    // invalid command input: files, names, windows, symbols, group data
    case errc::parse_error:
    case errc::schema_error:
    case errc::unknown_pair:
    case errc::not_a_unit:
    case errc::bad_exponent:
    case errc::window_not_unit:
    case errc::zero_window:
    case errc::not_bi_invariant:
    case errc::dimension_mismatch:
    case errc::not_associative:
    case errc::no_identity:
    case errc::no_inverse:
    case errc::not_closed:
    case errc::missing_identity:
    case errc::not_bijection:
    case errc::not_homomorphism:
    case errc::not_gelfand:
      return 2;
    // internal verification failures
    case errc::degenerate_diagonalization:
    case errc::singular_system:
      return 1;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  CLI::App app{"Stockwell transforms and localization operators on finite Gelfand pairs"};
  app.set_version_flag("--version", std::string(kVersion));
  app.add_option("--seed", g.seed, "random seed for verify");
  app.add_option("--tol", g.tol, "assertion tolerance (construction checks use tol/100)");
  app.add_option("--output", g.output, "write primary output to this path instead of stdout");
  app.add_option("--format", g.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.fallthrough();  // allow the global options after a subcommand name
  app.require_subcommand(1);

  auto* pairs_cmd = app.add_subcommand("pairs", "inspect the built-in pair catalog");
  pairs_cmd->require_subcommand(1);
  auto* pairs_list = pairs_cmd->add_subcommand("list", "list catalog pair names");
  std::string pair_name;
  auto* pairs_show = pairs_cmd->add_subcommand("show", "describe one pair");
  pairs_show->add_option("name", pair_name, "catalog name or group JSON path")->required();
  auto* pairs_export = pairs_cmd->add_subcommand("export", "write the group JSON schema");
  pairs_export->add_option("name", pair_name, "catalog name")->required();

  std::string pair_ref, signal_path, window_path, symbol_path, coeff_path, auto_name = "id";
  auto add_common = [&](CLI::App* cmd, bool with_auto) {
    cmd->add_option("--pair", pair_ref, "catalog name or group JSON path")->required();
    if (with_auto) cmd->add_option("--auto", auto_name, "automorphism name (default id)");
  };

  auto* spectrum_cmd = app.add_subcommand("spectrum", "spherical Fourier transform of a signal");
  add_common(spectrum_cmd, false);
  spectrum_cmd->add_option("--signal", signal_path, "signal file")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Stockwell coefficients of a signal");
  add_common(analyze_cmd, true);
  analyze_cmd->add_option("--signal", signal_path, "signal file")->required();
  analyze_cmd->add_option("--window", window_path, "window file")->required();

  auto* synthesize_cmd = app.add_subcommand("synthesize", "invert Stockwell coefficients");
  add_common(synthesize_cmd, true);
  synthesize_cmd->add_option("--coeffs", coeff_path, "coefficient file")->required();
  synthesize_cmd->add_option("--window", window_path, "window file")->required();

  auto* localize_cmd = app.add_subcommand("localize", "apply a localization operator");
  add_common(localize_cmd, true);
  localize_cmd->add_option("--signal", signal_path, "signal file")->required();
  localize_cmd->add_option("--window", window_path, "unit window file")->required();
  localize_cmd->add_option("--symbol", symbol_path, "symbol file")->required();

  std::vector<std::string> selection;
  auto* verify_cmd = app.add_subcommand("verify", "audit every theorem across the catalog");
  verify_cmd->add_option("--pairs", selection, "comma-separated catalog names (default: all)")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (pairs_list->parsed()) {
      std::ostringstream out;
      for (const std::string& n : list_pairs()) out << n << "\n";
      emit(g, out.str());
      return 0;
    }
    if (pairs_show->parsed()) {
      emit(g, show_text(resolve_pair(pair_name)));
      return 0;
    }
    if (pairs_export->parsed()) {
      const Working w = resolve_pair(pair_name);
      PairFile pf;
      pf.mul = w.pair->g().mul;
      pf.subgroup = w.pair->k.members;
      for (const auto& [n, a] : *w.autos) pf.automorphisms.emplace_back(n, a.perm);
      emit(g, pair_file_text(pf));
      return 0;
    }
    if (spectrum_cmd->parsed()) {
      const Working w = resolve_pair(pair_ref);
      const CVec f = read_signal(signal_path, w.pair->g().order);
      const CVec fhat = spherical_ft(*w.pair, *w.dual, f, g.tight());
      emit(g, spectrum_text(*w.dual, fhat, g.fmt()));
      return 0;
    }
    if (analyze_cmd->parsed()) {
      const Working w = resolve_pair(pair_ref);
      const GroupAutomorphism& alpha = find_auto(w, auto_name);
      const CVec sig = read_signal(signal_path, w.pair->g().order);
      const Window theta = make_window(*w.pair, read_signal(window_path, w.pair->g().order),
                                       g.tight());
      const BiInvariantSignal f = to_classes(*w.pair, sig, g.tight());
      const TimePhaseCoefficients c = stockwell_forward(*w.pair, *w.dual, f, theta, alpha);

      nlohmann::ordered_json meta;
      meta["pair"] = w.label;
      meta["automorphism"] = auto_name;
      meta["weights"] = w.dual->weights;
      meta["signal_l2"] = class_l2_norm(w.pair->cosets, f.class_values);
      meta["window_l2"] = theta.l2norm;
      meta["coefficient_l2"] = coefficient_l2(*w.dual, c);
      meta["factorization_residual"] = c.factorization_residual;
      if (g.fmt() == FileFormat::json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::parse(
            coefficients_text(c, FileFormat::json));
        j["meta"] = std::move(meta);
        emit(g, j.dump(2) + "\n");
      } else {
        emit(g, coefficients_text(c, FileFormat::csv));
        emit_sidecar(g, ".meta.json", meta.dump(2) + "\n");
      }
      return 0;
    }
    if (synthesize_cmd->parsed()) {
      const Working w = resolve_pair(pair_ref);
      const GroupAutomorphism& alpha = find_auto(w, auto_name);
      const Window theta = make_window(*w.pair, read_signal(window_path, w.pair->g().order),
                                       g.tight());
      const TimePhaseCoefficients c =
          read_coefficients(coeff_path, w.pair->g().order, w.dual->size());
      double leakage = 0.0;
      const BiInvariantSignal f = stockwell_inverse(*w.pair, *w.dual, c, theta, alpha, &leakage);

      nlohmann::ordered_json meta;
      meta["pair"] = w.label;
      meta["automorphism"] = auto_name;
      meta["signal_l2"] = class_l2_norm(w.pair->cosets, f.class_values);
      meta["bi_invariance_leakage"] = leakage;
      if (g.fmt() == FileFormat::json) {
        nlohmann::ordered_json j;
        j["signal"] = nlohmann::ordered_json::parse(
            signal_text(expand(*w.pair, f), FileFormat::json));
        j["meta"] = std::move(meta);
        emit(g, j.dump(2) + "\n");
      } else {
        emit(g, signal_text(expand(*w.pair, f), FileFormat::csv));
        emit_sidecar(g, ".meta.json", meta.dump(2) + "\n");
      }
      return 0;
    }
    if (localize_cmd->parsed()) {
      const Working w = resolve_pair(pair_ref);
      const GroupAutomorphism& alpha = find_auto(w, auto_name);
      const CVec sig = read_signal(signal_path, w.pair->g().order);
      const Window theta = make_window(*w.pair, read_signal(window_path, w.pair->g().order),
                                       g.tight());
      const SymbolFunction u = read_symbol(symbol_path, w.pair->g().order, w.dual->size());
      const BiInvariantSignal f = to_classes(*w.pair, sig, g.tight());

      const OperatorReport report = bound_suite(*w.pair, *w.dual, u, theta, alpha);
      const LocalizationOperator op = build_localization(*w.pair, *w.dual, u, theta, alpha);
      const BiInvariantSignal filtered = apply(*w.pair, op, f);

      nlohmann::ordered_json rj = report_to_json(report);
      rj["pair"] = w.label;
      rj["automorphism"] = auto_name;
      rj["filtered_l2"] = class_l2_norm(w.pair->cosets, filtered.class_values);
      if (g.fmt() == FileFormat::json) {
        nlohmann::ordered_json j;
        j["signal"] = nlohmann::ordered_json::parse(
            signal_text(expand(*w.pair, filtered), FileFormat::json));
        j["report"] = std::move(rj);
        emit(g, j.dump(2) + "\n");
      } else {
        emit(g, signal_text(expand(*w.pair, filtered), FileFormat::csv));
        emit_sidecar(g, ".report.json", rj.dump(2) + "\n");
      }
      return 0;
    }
    if (verify_cmd->parsed()) {
      if (selection.empty()) selection = list_pairs();
      const AuditReport report =
          run_verify(selection, g.seed, AuditTolerances{g.tol, g.tight()});
      if (g.fmt() == FileFormat::json) {
        emit(g, report_json(report));
      } else {
        std::cout << report_table(report);
        if (!g.output.empty()) {
          std::ofstream out(g.output);
          if (!out) fail(errc::parse_error, "cannot write " + g.output);
          out << report_json(report);
        }
      }
      return report.any_asserted_fail() ? 1 : 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

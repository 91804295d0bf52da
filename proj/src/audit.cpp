#include "gpst/audit.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gpst/draws.hpp"
#include "gpst/stockwell.hpp"
#include "gpst/version.hpp"

namespace gpst {

namespace {

constexpr int kIdentityDraws = 100;  // Plancherel / Parseval / bound draws
constexpr int kQuadDraws = 50;       // orthogonality quadruples
constexpr int kAdjointDraws = 20;
constexpr int kRoundTripDraws = 10;
constexpr int kRankWindows = 3;
constexpr int kKernelSignals = 3;
constexpr double kRankThreshold = 1e-9;

struct Cell {
  const CatalogEntry& entry;
  const std::string& auto_name;
  const GroupAutomorphism& alpha;
  uint64_t seed;
  AuditTolerances tol;

  Rng rng(const char* topic) const {
    return Rng(sub_seed(seed, entry.name, auto_name, topic));
  }
  AuditRow row(const char* theorem) const {
    AuditRow r;
    r.pair = entry.name;
    r.automorphism = auto_name;
    r.theorem = theorem;
    return r;
  }
};

std::string count_note(int n, const char* what) {
  return std::to_string(n) + " " + what;
}

void set_asserted(AuditRow& r, bool pass) {
  r.status = pass ? "asserted-pass" : "asserted-fail";
}

// asserted on abelian pairs; measured elsewhere unless a universally
// asserted sub-check failed
void set_split(AuditRow& r, bool abelian, bool abelian_pass, bool universal_pass = true) {
  if (!universal_pass)
    r.status = "asserted-fail";
  else if (abelian)
    r.status = abelian_pass ? "asserted-pass" : "asserted-fail";
  else
    r.status = "reported";
}

AuditRow audit_plancherel(const Cell& c) {
  AuditRow r = c.row("2.2");
  Rng rng = c.rng("2.2");
  double residual = 0.0;
  for (int i = 0; i < kIdentityDraws; ++i) {
    const BiInvariantSignal f = random_unit_signal(c.entry.pair, rng);
    const CVec fhat = spherical_ft(c.entry.pair, c.entry.dual, f);
    const double lhs = dual_inner(c.entry.dual, fhat, fhat).real();
    const double rhs = class_inner(c.entry.pair.cosets, f.class_values, f.class_values).real();
    residual = std::max(residual, std::abs(lhs - rhs));
  }
  r.residual = residual;
  r.detail = count_note(kIdentityDraws, "unit signals; automorphism-independent");
  set_asserted(r, residual <= c.tol.assert_tol);
  return r;
}

AuditRow audit_parseval(const Cell& c) {
  AuditRow r = c.row("2.3");
  Rng rng = c.rng("2.3");
  double residual = 0.0;
  for (int i = 0; i < kIdentityDraws; ++i) {
    const BiInvariantSignal f = random_unit_signal(c.entry.pair, rng);
    const BiInvariantSignal g = random_unit_signal(c.entry.pair, rng);
    const CVec fh = spherical_ft(c.entry.pair, c.entry.dual, f);
    const CVec gh = spherical_ft(c.entry.pair, c.entry.dual, g);
    residual = std::max(residual,
                        std::abs(dual_inner(c.entry.dual, fh, gh) -
                                 class_inner(c.entry.pair.cosets, f.class_values,
                                             g.class_values)));
  }
  r.residual = residual;
  r.detail = count_note(kIdentityDraws, "signal pairs; automorphism-independent");
  set_asserted(r, residual <= c.tol.assert_tol);
  return r;
}

AuditRow audit_orthogonality(const Cell& c) {
  AuditRow r = c.row("3.2");
  Rng rng = c.rng("3.2");
  double residual = 0.0;
  double isometry_dev = 0.0;
  for (int i = 0; i < kQuadDraws; ++i) {
    const BiInvariantSignal f = random_unit_signal(c.entry.pair, rng);
    const BiInvariantSignal g = random_unit_signal(c.entry.pair, rng);
    const Window theta = random_unit_window(c.entry.pair, rng);
    const Window vartheta = random_unit_window(c.entry.pair, rng);
    const TimePhaseCoefficients sf =
        stockwell_forward(c.entry.pair, c.entry.dual, f, theta, c.alpha, false);
    const TimePhaseCoefficients sg =
        stockwell_forward(c.entry.pair, c.entry.dual, g, vartheta, c.alpha, false);
    const cplx lhs = coefficient_inner(c.entry.dual, sf, sg);
    const cplx rhs =
        class_inner(c.entry.pair.cosets, f.class_values, g.class_values) *
        class_inner(c.entry.pair.cosets, vartheta.class_values, theta.class_values);
    residual = std::max(residual, std::abs(lhs - rhs));
    const double fnorm2 =
        class_inner(c.entry.pair.cosets, f.class_values, f.class_values).real();
    isometry_dev = std::max(
        isometry_dev,
        std::abs(coefficient_inner(c.entry.dual, sf, sf).real() - fnorm2));
  }
  r.residual = residual;
  r.margin = isometry_dev;
  r.detail = count_note(kQuadDraws, "(f, g, theta, vartheta) draws; margin = isometry deviation");
  set_split(r, c.entry.abelian, residual <= c.tol.assert_tol && isometry_dev <= c.tol.assert_tol);
  return r;
}

AuditRow audit_rank(const Cell& c) {
  AuditRow r = c.row("3.3-rank");
  Rng rng = c.rng("3.3-rank");
  const int d = c.entry.pair.dim();
  double sv_dev = 0.0;
  int rank_gap = 0;
  for (int i = 0; i < kRankWindows; ++i) {
    const Window theta = random_unit_window(c.entry.pair, rng);
    const DenseMatrix m = transform_matrix(c.entry.pair, c.entry.dual, theta, c.alpha);
    const std::vector<double> sv = singular_values(m);
    int rank = 0;
    for (double s : sv)
      if (s > kRankThreshold) ++rank;
    rank_gap = std::max(rank_gap, std::abs(rank - d));
    for (double s : sv) sv_dev = std::max(sv_dev, std::abs(s - 1.0));
  }
  r.residual = sv_dev;
  r.margin = static_cast<double>(rank_gap);
  r.detail = count_note(kRankWindows, "unit windows; residual = max |sigma - 1|, margin = max |rank - dim|");
  set_split(r, c.entry.abelian, rank_gap == 0 && sv_dev <= c.tol.assert_tol);
  return r;
}

AuditRow audit_kernel(const Cell& c) {
  AuditRow r = c.row("3.5");
  Rng rng = c.rng("3.5");
  const Window theta = random_unit_window(c.entry.pair, rng);
  const ReproducingKernel ker =
      reproducing_kernel(c.entry.pair, c.entry.dual, theta, c.alpha);
  const double hermitian_dev = kernel_hermitian_deviation(ker);

  double reproduction = 0.0;
  for (int i = 0; i < kKernelSignals; ++i) {
    const BiInvariantSignal f = random_unit_signal(c.entry.pair, rng);
    const TimePhaseCoefficients sf =
        stockwell_forward(c.entry.pair, c.entry.dual, f, theta, c.alpha, false);
    const TimePhaseCoefficients back = kernel_apply(c.entry.dual, ker, sf);
    for (size_t idx = 0; idx < sf.values.size(); ++idx)
      reproduction = std::max(reproduction, std::abs(back.values[idx] - sf.values[idx]));
  }
  r.residual = reproduction;
  r.margin = hermitian_dev;
  r.detail = count_note(kKernelSignals,
                        "range elements; residual = reproduction error, margin = hermitian "
                        "deviation (asserted everywhere)");
  set_split(r, c.entry.abelian, reproduction <= c.tol.assert_tol,
            hermitian_dev <= c.tol.tight_tol);
  return r;
}

AuditRow audit_sup_bound(const Cell& c) {
  AuditRow r = c.row("4.2");
  Rng rng = c.rng("4.2");
  double min_margin = INFINITY;
  for (int i = 0; i < kIdentityDraws; ++i) {
    const BiInvariantSignal f = random_unit_signal(c.entry.pair, rng);
    const Window theta = random_unit_window(c.entry.pair, rng);
    const TimePhaseCoefficients sf =
        stockwell_forward(c.entry.pair, c.entry.dual, f, theta, c.alpha, false);
    const double bound = class_l2_norm(c.entry.pair.cosets, f.class_values) * theta.l2norm;
    min_margin = std::min(min_margin, bound - coefficient_sup(sf));
  }
  r.margin = min_margin;
  r.residual = std::max(0.0, -min_margin);
  r.detail = count_note(kIdentityDraws, "(f, theta) draws; margin = min(||f|| ||theta|| - sup|c|)");
  set_asserted(r, min_margin >= -c.tol.assert_tol);
  return r;
}

struct BoundMargins {
  double p1 = INFINITY, p2 = INFINITY, pinf = INFINITY, grid = INFINITY;
};

BoundMargins bound_margins(const Cell& c) {
  Rng rng = c.rng("bounds");
  BoundMargins m;
  for (int i = 0; i < kIdentityDraws; ++i) {
    const Window theta = random_unit_window(c.entry.pair, rng);
    const SymbolFunction u = random_unit_symbol(c.entry.pair, c.entry.dual, rng);
    const double norm = operator_norm(
        c.entry.pair, build_localization(c.entry.pair, c.entry.dual, u, theta, c.alpha));
    m.p1 = std::min(m.p1, symbol_norm(c.entry.dual, u, 1.0) - norm);
    m.p2 = std::min(m.p2, symbol_norm(c.entry.dual, u, 2.0) - norm);
    m.pinf = std::min(m.pinf, symbol_norm(c.entry.dual, u, INFINITY) - norm);
    for (double p : {1.25, 1.5, 2.5, 4.0, 8.0})
      m.grid = std::min(m.grid, symbol_norm(c.entry.dual, u, p) - norm);
  }
  return m;
}

AuditRow audit_l2_bound(const Cell& c, const BoundMargins& m) {
  AuditRow r = c.row("4.1");
  r.margin = m.p2;
  r.residual = std::max(0.0, -m.p2);
  r.detail = count_note(kIdentityDraws, "(theta, u) draws; margin = min(||u||_2 - ||L||)");
  set_split(r, c.entry.abelian, m.p2 >= -c.tol.assert_tol);
  return r;
}

AuditRow audit_l1_bound(const Cell& c, const BoundMargins& m) {
  AuditRow r = c.row("4.3");
  r.margin = m.p1;
  r.residual = std::max(0.0, -m.p1);
  r.detail = count_note(kIdentityDraws, "(theta, u) draws; margin = min(||u||_1 - ||L||)");
  set_asserted(r, m.p1 >= -c.tol.assert_tol);
  return r;
}

AuditRow audit_linf_bound(const Cell& c, const BoundMargins& m) {
  AuditRow r = c.row("4.4");
  Rng rng = c.rng("4.4-witness");
  const Window theta = random_unit_window(c.entry.pair, rng);
  const SymbolFunction ones = constant_symbol(c.entry.pair, c.entry.dual, cplx(1.0, 0.0));
  DenseMatrix a = orthonormal_matrix(
      c.entry.pair, build_localization(c.entry.pair, c.entry.dual, ones, theta, c.alpha));
  for (int i = 0; i < a.rows; ++i) a.at(i, i) -= 1.0;
  const double witness = spectral_norm(a);

  r.margin = m.pinf;
  r.residual = witness;
  r.detail = count_note(kIdentityDraws,
                        "(theta, u) draws; margin = min(||u||_inf - ||L||), residual = "
                        "||L_{u==1} - I|| tightness witness");
  set_split(r, c.entry.abelian,
            m.pinf >= -c.tol.assert_tol && witness <= c.tol.assert_tol);
  return r;
}

AuditRow audit_lp_bound(const Cell& c, const BoundMargins& m) {
  AuditRow r = c.row("4.5");
  r.margin = m.grid;
  r.residual = std::max(0.0, -m.grid);
  r.detail = count_note(kIdentityDraws,
                        "(theta, u) draws; margin = min over p in {1.25,1.5,2.5,4,8}");
  set_split(r, c.entry.abelian, m.grid >= -c.tol.assert_tol);
  return r;
}

AuditRow audit_adjoint(const Cell& c) {
  AuditRow r = c.row("adjoint");
  Rng rng = c.rng("adjoint");
  double residual = 0.0;
  for (int i = 0; i < kAdjointDraws; ++i) {
    const Window theta = random_unit_window(c.entry.pair, rng);
    const SymbolFunction u = random_unit_symbol(c.entry.pair, c.entry.dual, rng);
    residual = std::max(residual,
                        adjoint_check(c.entry.pair, c.entry.dual, u, theta, c.alpha));
  }
  r.residual = residual;
  r.detail = count_note(kAdjointDraws, "symbols; residual = max ||(L^u)* - L^{conj u}||");
  set_asserted(r, residual <= c.tol.assert_tol);
  return r;
}

AuditRow audit_factorization(const Cell& c) {
  AuditRow r = c.row("eq8");
  Rng rng = c.rng("eq8");
  double residual = 0.0;
  for (int i = 0; i < kRoundTripDraws; ++i) {
    const BiInvariantSignal f = random_unit_signal(c.entry.pair, rng);
    const Window theta = random_unit_window(c.entry.pair, rng);
    const TimePhaseCoefficients sf =
        stockwell_forward(c.entry.pair, c.entry.dual, f, theta, c.alpha, false);
    residual = std::max(
        residual, eq8_residual(c.entry.pair, c.entry.dual, f, theta, c.alpha, sf));
  }
  r.residual = residual;
  r.detail = count_note(kRoundTripDraws, "(f, theta) draws; coefficient vs atom inner product");
  set_asserted(r, residual <= c.tol.tight_tol);
  return r;
}

AuditRow audit_roundtrip(const Cell& c) {
  AuditRow r = c.row("eq9-roundtrip");
  Rng rng = c.rng("eq9-roundtrip");
  double residual = 0.0;
  double max_leak = 0.0;
  for (int i = 0; i < kRoundTripDraws; ++i) {
    const BiInvariantSignal f = random_unit_signal(c.entry.pair, rng);
    const Window theta = random_unit_window(c.entry.pair, rng);
    const TimePhaseCoefficients sf =
        stockwell_forward(c.entry.pair, c.entry.dual, f, theta, c.alpha, false);
    double leak = 0.0;
    const BiInvariantSignal back =
        stockwell_inverse(c.entry.pair, c.entry.dual, sf, theta, c.alpha, &leak);
    CVec diff(f.class_values.size());
    for (size_t j = 0; j < diff.size(); ++j)
      diff[j] = back.class_values[j] - f.class_values[j];
    residual = std::max(residual, class_l2_norm(c.entry.pair.cosets, diff));
    max_leak = std::max(max_leak, leak);
  }
  r.residual = residual;
  r.margin = max_leak;
  r.detail = count_note(kRoundTripDraws,
                        "(f, theta) draws; margin = max bi-invariance leakage");
  set_split(r, c.entry.abelian, residual <= c.tol.assert_tol);
  return r;
}

void audit_cell(std::vector<AuditRow>& rows, const Cell& c) {
  rows.push_back(audit_plancherel(c));
  rows.push_back(audit_parseval(c));
  rows.push_back(audit_orthogonality(c));
  rows.push_back(audit_rank(c));
  rows.push_back(audit_kernel(c));
  const BoundMargins m = bound_margins(c);
  rows.push_back(audit_l2_bound(c, m));
  rows.push_back(audit_sup_bound(c));
  rows.push_back(audit_l1_bound(c, m));
  rows.push_back(audit_linf_bound(c, m));
  rows.push_back(audit_lp_bound(c, m));
  rows.push_back(audit_adjoint(c));
  rows.push_back(audit_factorization(c));
  rows.push_back(audit_roundtrip(c));
}

}  // namespace

int AuditReport::asserted_fail_count() const {
  int n = 0;
  for (const AuditRow& r : rows)
    if (r.status == "asserted-fail") ++n;
  return n;
}

AuditReport run_verify(const std::vector<std::string>& selection, uint64_t seed,
                       AuditTolerances tol) {
  if (selection.empty())
    fail(errc::schema_error, "verify needs a nonempty pair selection");
  AuditReport report;
  report.seed = seed;
  report.tolerances = tol;
  report.version = kVersion;

  for (const std::string& name : selection) {
    const CatalogEntry& entry = get_pair(name);
    for (const auto& [auto_name, alpha] : entry.automorphisms)
      audit_cell(report.rows, Cell{entry, auto_name, alpha, seed, tol});
  }
  std::sort(report.rows.begin(), report.rows.end(),
            [](const AuditRow& a, const AuditRow& b) {
              if (a.pair != b.pair) return a.pair < b.pair;
              if (a.automorphism != b.automorphism) return a.automorphism < b.automorphism;
              return a.theorem < b.theorem;
            });
  return report;
}

std::string report_json(const AuditReport& report) {
  nlohmann::ordered_json j;
  j["seed"] = report.seed;
  j["tolerances"] = {{"assert", report.tolerances.assert_tol},
                     {"tight", report.tolerances.tight_tol}};
  j["version"] = report.version;
  j["asserted_fail_count"] = report.asserted_fail_count();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const AuditRow& r : report.rows) {
    nlohmann::ordered_json row;
    row["pair"] = r.pair;
    row["automorphism"] = r.automorphism;
    row["theorem"] = r.theorem;
    row["status"] = r.status;
    row["residual"] = r.residual;
    row["margin"] = r.margin;
    row["detail"] = r.detail;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string report_table(const AuditReport& report) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-12s %-6s %-14s %-14s %-13s %-13s\n", "pair", "auto",
                "theorem", "status", "residual", "margin");
  out << line;
  for (const AuditRow& r : report.rows) {
    std::snprintf(line, sizeof line, "%-12s %-6s %-14s %-14s %-13.3e %-13.3e\n",
                  r.pair.c_str(), r.automorphism.c_str(), r.theorem.c_str(),
                  r.status.c_str(), r.residual, r.margin);
    out << line;
  }
  out << "rows: " << report.rows.size() << ", asserted failures: "
      << report.asserted_fail_count() << " (seed " << report.seed << ", version "
      << report.version << ")\n";
  return out.str();
}

}  // namespace gpst

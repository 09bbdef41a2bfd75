// Acceptance run: one PASS/FAIL line per criterion, each evaluated at its
// stated tolerance. Usage: acceptance [path-to-blundon-binary]
// (criterion 9 needs the binary; it is reported FAIL without it).

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "blundon/blundon.hpp"

using namespace blundon;
using verify::Stratum;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

TriangleSides<double> sides_of(const verify::SampledTriangle& t) { return {t.sides[0], t.sides[1], t.sides[2]}; }

TriangleElements<long double> elements_ld(const verify::SampledTriangle& t) {
  return derive_elements(TriangleSides<long double>(t.sides[0], t.sides[1], t.sides[2]));
}

BaryPoint<double> at(const char* spec, const TriangleSides<double>& s) {
  return resolve(parse_center_spec<double>(spec), s);
}

/// Named centers, two random Cevian ranks and two random raw points.
std::vector<BaryPoint<double>> point_pool(const TriangleSides<double>& s, verify::SampleRng& rng) {
  std::vector<BaryPoint<double>> pool;
  for (const char* spec : {"incenter", "centroid", "nagel", "lemoine", "excenter:A", "excenter:B", "excenter:C",
                           "adjnagel:A", "adjnagel:B", "adjnagel:C"}) {
    pool.push_back(at(spec, s));
  }
  for (int i = 0; i < 2; ++i) {
    pool.push_back(cevian_rank_point(rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3), s));
  }
  for (int i = 0; i < 2; ++i) pool.push_back(verify::random_raw_point(rng));
  return pool;
}

constexpr std::uint64_t kSeed = 20240917;

// 1 -------------------------------------------------------------------------
void oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0;
  std::size_t pairs = 0, undefined = 0;
  for (std::size_t i = 0; i < 100000; ++i) {
    const auto tri = verify::sample_triangle(Stratum::Uniform, kSeed, i);
    const auto s = sides_of(tri);
    const auto pl = oracle::place(s);
    auto rng = verify::rng_for(kSeed + 1, Stratum::Uniform, i);
    const auto pool = point_pool(s, rng);
    for (std::size_t p = 0; p < pool.size(); ++p) {
      for (std::size_t q = p + 1; q < pool.size(); ++q) {
        const auto r = cos_angle_at_O(pool[p], pool[q], s);
        if (!r.defined()) {
          ++undefined;
          continue;
        }
        worst = std::max(worst, std::abs(r.cos_value - oracle::oracle_angle_cos(pool[p], pool[q], pl)));
        ++pairs;
      }
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(1, worst <= 1e-9 && undefined == 0,
         "1e5 uniform triangles, " + std::to_string(pairs) + " pairs, max |cos - oracle| = " + fmt("%.3g", worst) +
             " (tol 1e-9), " + fmt("%.1f s", seconds));
}

// 2 -------------------------------------------------------------------------
void specialization_coherence() {
  double classical = 0, dual = 0, eq30 = 0, eq32 = 0;
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < 10000; ++i) {
    const auto tri = verify::sample_triangle(Stratum::Uniform, kSeed, i);
    const auto s = sides_of(tri);
    const TriangleSides<long double> sl(tri.sides[0], tri.sides[1], tri.sides[2]);
    const auto e = elements_ld(tri);
    try {
      const double general = cos_angle_at_O(at("incenter", s), at("nagel", s), s).cos_value;
      classical = std::max(classical, std::abs(static_cast<double>(closed_form::classical_cos_ION(e)) - general));
    } catch (const GeometryError&) {
      ++skipped;
    }
    const std::array<const char*, 3> ex{"excenter:A", "excenter:B", "excenter:C"};
    const std::array<const char*, 3> adj{"adjnagel:A", "adjnagel:B", "adjnagel:C"};
    for (int v = 0; v < 3; ++v) {
      const double general = cos_angle_at_O(at(ex[v], s), at(adj[v], s), s).cos_value;
      dual = std::max(dual, std::abs(static_cast<double>(closed_form::dual_cos(static_cast<Vertex>(v), e)) - general));
    }
    const long double rank01 = closed_form::cevian_rank_cos<long double>(0, 1, sl);
    const long double rank12 = closed_form::cevian_rank_cos<long double>(1, 2, sl);
    const double general01 = cos_angle_at_O(at("centroid", s), at("incenter", s), s).cos_value;
    const double general12 = cos_angle_at_O(at("incenter", s), at("lemoine", s), s).cos_value;
    eq30 = std::max({eq30, static_cast<double>(std::abs(rank01 - closed_form::centroid_incenter_cos(e))),
                     std::abs(static_cast<double>(rank01) - general01)});
    eq32 = std::max({eq32, static_cast<double>(std::abs(rank12 - closed_form::incenter_lemoine_cos(e))),
                     std::abs(static_cast<double>(rank12) - general12)});
  }
  const bool pass = classical <= 1e-10 && dual <= 1e-10 && eq30 <= 1e-10 && eq32 <= 1e-10 && skipped == 0;
  report(2, pass,
         "1e4 uniform triangles, max abs dev: (I,N) " + fmt("%.3g", classical) + ", dual " + fmt("%.3g", dual) +
             ", rank(0,1) " + fmt("%.3g", eq30) + ", rank(1,2) " + fmt("%.3g", eq32) + " (tol 1e-10)");
}

// 3 -------------------------------------------------------------------------
void blundon_inequalities() {
  double worst = 0;  // most negative residual / (s^2 * allowed factor), in units of 1e-10
  // Decade k holds near-equilateral samples with log10(spread) in [-3-k-1, -3-k).
  std::array<double, 5> decade_max{};
  std::array<std::size_t, 5> decade_count{};
  for (auto stratum : verify::generated_strata()) {
    for (std::size_t i = 0; i < 10000; ++i) {
      const auto tri = verify::sample_triangle(stratum, kSeed, i);
      const auto e = elements_ld(tri);
      const long double res = closed_form::fundamental_residual(e);
      const long double factor = stratum == Stratum::NearDegenerate ? e.R / e.r : 1.0L;
      const double rel = static_cast<double>(-res / (e.s * e.s * factor));
      worst = std::max(worst, rel / 1e-10);
      if (stratum == Stratum::NearEquilateral) {
        const int k = std::min(4, static_cast<int>(std::floor(-3 - tri.log10_parameter)));
        decade_max[k] = std::max(decade_max[k], static_cast<double>(res / (e.s * e.s)));
        ++decade_count[k];
      }
    }
  }
  bool monotone = true;
  std::string trend;
  for (int k = 0; k < 5; ++k) {
    if (k > 0 && decade_max[k] > decade_max[k - 1]) monotone = false;
    trend += (k ? " > " : "") + fmt("%.2g", decade_max[k]);
  }
  const bool vanishing = decade_max[4] < 1e-12 * decade_max[0] + 1e-18;
  report(3, worst <= 1 && monotone && vanishing,
         "5 strata x 1e4, worst scaled deficit " + fmt("%.3g", worst) +
             " of allowed; near-equilateral residual/s^2 by decade 1e-3..1e-8: " + trend);
}

// 4 -------------------------------------------------------------------------
void dual_blundon() {
  double worst = 0;
  for (auto stratum : verify::generated_strata()) {
    for (std::size_t i = 0; i < 10000; ++i) {
      const auto e = elements_ld(verify::sample_triangle(stratum, kSeed, i));
      const long double quarter = e.sum_of_squares() / 4;
      for (Vertex v : {Vertex::A, Vertex::B, Vertex::C}) {
        const long double upper = closed_form::dual_upper_bound(v, e);
        const long double scale = e.R * e.R + e.exradius(static_cast<int>(v)) * e.exradius(static_cast<int>(v));
        worst = std::max(worst, static_cast<double>(std::max(-quarter, quarter - upper) / scale));
      }
    }
  }
  const double fixture =
      static_cast<double>(closed_form::dual_cos(Vertex::A, derive_elements(TriangleSides<long double>(3, 4, 5))));
  const TriangleSides<double> right(3, 4, 5);
  const double general = cos_angle_at_O(at("excenter:A", right), at("adjnagel:A", right), right).cos_value;
  const bool pass = worst <= 1e-12 && std::abs(fixture + 0.96366) <= 1e-5 && std::abs(general + 0.96366) <= 1e-5;
  report(4, pass,
         "5 strata x 1e4 x 3 vertices, max violation/(R^2+r_v^2) " + fmt("%.3g", worst) +
             "; (3,4,5) cos I_aON_a = " + fmt("%.8f", fixture) + " (general " + fmt("%.8f", general) + ")");
}

// 5 -------------------------------------------------------------------------
void fixtures() {
  const TriangleSides<double> s(3, 4, 5);
  const auto I = at("incenter", s), N = at("nagel", s);
  const auto report_cos = cos_angle_at_O(I, N, s);
  auto rel = [](double got, double want) { return std::abs(got - want) / std::abs(want); };
  const double worst = std::max({rel(circumcenter_dist_sq(I, s), 1.25), rel(std::sqrt(circumcenter_dist_sq(N, s)), 0.5),
                                 rel(std::sqrt(dist_sq_between(I, N, s)), 1),
                                 rel(report_cos.cos_value, 0.44721359549995793928),
                                 rel(bergstrom_bound(I, s), 5), rel(circum_power(I, s), 5)});

  const TriangleSides<Rational> x(Rational(3), Rational(4), Rational(5));
  const BaryPoint<Rational> xi(Rational(3), Rational(4), Rational(5)), xn(Rational(3), Rational(2), Rational(1));
  const bool exact = circumcenter_dist_sq(xi, x) == Rational(5, 4) && circumcenter_dist_sq(xn, x) == Rational(1, 4) &&
                     dist_sq_between(xi, xn, x) == Rational(1) && bergstrom_bound(xi, x) == Rational(5) &&
                     circum_power(xi, x) == Rational(5) && circumradius_squared(x) - circumcenter_dist_sq(xi, x) == 5;
  report(5, worst <= 1e-12 && exact,
         "(3,4,5): OI^2, ON, IN, cos ION, Bergstrom bound; max rel dev " + fmt("%.3g", worst) +
             " (tol 1e-12); rational mode " + (exact ? "exact" : "NOT exact"));
}

// 6 -------------------------------------------------------------------------
void identity_audit() {
  double worst = 0, exradii = 0;
  for (std::size_t i = 0; i < 10000; ++i) {
    const auto tri = verify::sample_triangle(Stratum::Uniform, kSeed, i);
    const auto s = sides_of(tri);
    const auto e = derive_elements(s);
    const double R_sq = e.R * e.R;
    const auto I = at("incenter", s), N = at("nagel", s);
    worst = std::max({worst, std::abs(closed_form::incenter_nagel_cross(e) + dist_sq_between(I, N, s)) / R_sq,
                      std::abs(closed_form::incenter_power(e) - circum_power(I, s)) / R_sq,
                      std::abs(closed_form::nagel_power(e) - circum_power(N, s)) / R_sq});
    const std::array<const char*, 3> ex{"excenter:A", "excenter:B", "excenter:C"};
    const std::array<const char*, 3> adj{"adjnagel:A", "adjnagel:B", "adjnagel:C"};
    const auto el = elements_ld(tri);
    for (int v = 0; v < 3; ++v) {
      const auto vertex = static_cast<Vertex>(v);
      const auto P = at(ex[v], s), Q = at(adj[v], s);
      const double rv = e.exradius(v);
      const double scale = std::max(R_sq, rv * rv);
      worst = std::max({worst, std::abs(closed_form::excenter_power(vertex, e) - circum_power(P, s)) / scale,
                        std::abs(closed_form::adjoint_nagel_power(vertex, e) - circum_power(Q, s)) / scale,
                        std::abs(closed_form::excenter_adjoint_cross(vertex, e) + dist_sq_between(P, Q, s)) / scale});
      const long double rhs = 4 * el.R / el.exradius(v) + 4;
      exradii = std::max(exradii, static_cast<double>(std::abs(closed_form::exradii_identity_residual(el, vertex)) / rhs));
    }
  }
  report(6, worst <= 1e-9 && exradii <= 1e-10,
         "1e4 uniform triangles, six expanded identities max rel dev " + fmt("%.3g", worst) +
             " (tol 1e-9); exradii identity " + fmt("%.3g", exradii) + " (tol 1e-10)");
}

// 7 -------------------------------------------------------------------------
void equality_characterization() {
  double cos_dev = 0, bound_dev = 0;
  std::size_t constructions = 0;
  for (std::size_t i = 0; i < 2000; ++i) {
    const auto tri = verify::sample_triangle(Stratum::Uniform, kSeed, i);
    const auto s = sides_of(tri);
    const auto pl = oracle::place(s);
    const auto o = oracle::circumcenter_cartesian(pl);
    const double R_sq = circumradius_squared(s);
    auto rng = verify::rng_for(kSeed + 7, Stratum::Uniform, i);
    for (const auto& p : point_pool(s, rng)) {
      // Reflection of P through O, and P pushed further out along OP.
      const auto x = oracle::bary_to_cartesian(p, pl);
      for (const double k : {-1.0, -0.5, 2.0}) {
        const BaryPoint<double> q(oracle::cartesian_to_bary(o + k * (x - o), pl));
        const auto r = cos_angle_at_O(p, q, s);
        if (!r.defined()) continue;
        const double target = k < 0 ? -1 : 1;
        cos_dev = std::max(cos_dev, std::abs(r.cos_value - target));
        const double bound = k < 0 ? r.bounds.lower : r.bounds.upper;
        bound_dev = std::max(bound_dev, std::abs(bound_middle_expanded(p, q, s) - bound) / R_sq);
        ++constructions;
      }
    }
    // Nagel line: angle IGN is straight.
    const auto ign = triple_angle(at("incenter", s), at("centroid", s), at("nagel", s), s);
    cos_dev = std::max(cos_dev, std::abs(ign.cos_value + 1));
    bound_dev = std::max(bound_dev, std::abs(ign.bounds.middle - ign.bounds.lower) / R_sq);
    ++constructions;
  }
  // Isosceles: I, O, N on the symmetry axis.
  const TriangleSides<double> iso(5, 5, 6);
  const auto r = cos_angle_at_O(at("incenter", iso), at("nagel", iso), iso);
  cos_dev = std::max(cos_dev, std::abs(std::abs(r.cos_value) - 1));
  report(7, cos_dev <= 1e-8 && bound_dev <= 1e-8,
         std::to_string(constructions) + " collinear constructions, max ||cos| - 1| " + fmt("%.3g", cos_dev) +
             ", max |middle - bound|/R^2 " + fmt("%.3g", bound_dev) + " (tol 1e-8)");
}

// 8 -------------------------------------------------------------------------
void scale_invariance() {
  // Floating point: every reported value for the rescaled point, relative to
  // max(1, |value|). Raw points whose coordinates nearly cancel are ill-posed
  // under rounding of the rescaled coordinates (condition sum|t|/|sum t|);
  // they are reported separately and checked exactly in rational arithmetic.
  double worst = 0, worst_raw = 0, worst_raw_kappa = 0;
  std::size_t raw_ill = 0;
  for (std::size_t i = 0; i < 2000; ++i) {
    const auto tri = verify::sample_triangle(Stratum::Uniform, kSeed, i);
    const auto s = sides_of(tri);
    auto rng = verify::rng_for(kSeed + 8, Stratum::Uniform, i);
    const auto pool = point_pool(s, rng);
    const auto& other = pool[2];
    for (std::size_t k = 0; k < pool.size(); ++k) {
      const auto& p = pool[k];
      const double kappa = (std::abs(p[0]) + std::abs(p[1]) + std::abs(p[2])) / std::abs(p.sum());
      const auto base = cos_angle_at_O(p, other, s);
      const std::array<double, 6> values{circum_power(p, s), circumcenter_dist_sq(p, s), dist_sq_between(p, other, s),
                                         base.cos_value, base.bounds.middle, base.bounds.upper};
      for (double lambda : {2.0, -1.0, 1e-6}) {
        const auto q = p.scaled(lambda);
        const auto moved = cos_angle_at_O(q, other, s);
        const std::array<double, 6> got{circum_power(q, s), circumcenter_dist_sq(q, s), dist_sq_between(q, other, s),
                                        moved.cos_value, moved.bounds.middle, moved.bounds.upper};
        for (int j = 0; j < 6; ++j) {
          if (std::isnan(values[j]) && std::isnan(got[j])) continue;
          const double dev = std::abs(got[j] - values[j]) / std::max(1.0, std::abs(values[j]));
          if (kappa <= 10) {
            worst = std::max(worst, dev);
          } else {
            ++raw_ill;
            worst_raw = std::max(worst_raw, dev);
            worst_raw_kappa = std::max(worst_raw_kappa, dev / kappa);
          }
        }
      }
    }
  }
  // Rational: identical values for every lambda, including near-cancelling triples.
  bool exact = true;
  const TriangleSides<Rational> x(Rational(7), Rational(9), Rational(12));
  const BaryPoint<Rational> other(Rational(1), Rational(0), Rational(4));
  for (const auto& t : {std::array<Rational, 3>{Rational(-3, 7), Rational(2), Rational(5, 3)},
                        std::array<Rational, 3>{Rational(1), Rational(-1), Rational(1, 1000000)},
                        std::array<Rational, 3>{Rational(7), Rational(9), Rational(12)}}) {
    const BaryPoint<Rational> p(t);
    const auto base = angle_terms(p, other, x);
    for (const Rational& lambda : {Rational(2), Rational(-1), Rational(1, 1000000)}) {
      const auto moved = angle_terms(p.scaled(lambda), other, x);
      exact = exact && moved.op_sq == base.op_sq && moved.pq_sq == base.pq_sq && moved.middle == base.middle &&
              circum_power(p.scaled(lambda), x) == circum_power(p, x);
    }
  }
  report(8, worst <= 1e-12 && exact,
         "2000 uniform triangles, lambda in {2,-1,1e-6}: max rel change " + fmt("%.3g", worst) +
             " (tol 1e-12) over points with sum|t|/|sum t| <= 10; " + std::to_string(raw_ill) +
             " values on worse-conditioned raw points reach " + fmt("%.3g", worst_raw) + " (" +
             fmt("%.3g", worst_raw_kappa) + " x condition); rational mode " + (exact ? "exact" : "NOT exact"));
}

// 9 -------------------------------------------------------------------------
std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  char buf[65536];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  status = pclose(pipe);
  return out;
}

void determinism(const char* binary) {
  if (!binary) {
    report(9, false, "no CLI binary given");
    return;
  }
  const std::string command = std::string("\"") + binary + "\" verify --count 10000 --seed 7";
  int first_status = 0, second_status = 0;
  const std::string first = capture(command, first_status);
  const std::string second = capture(command, second_status);
  const bool same = !first.empty() && first == second;
  report(9, same && first_status == 0 && second_status == 0,
         "two `verify --count 10000 --seed 7` runs: " + std::to_string(first.size()) + " bytes, " +
             (same ? "byte-identical" : "DIFFERENT") + ", exit " + std::to_string(first_status));
}

// 10 ------------------------------------------------------------------------
void diagnostics() {
  verify::FuzzConfig cfg;
  cfg.count = 500;
  cfg.seed = 7;
  cfg.suites = {verify::Suite::Cevian};
  const auto rep = verify::run_fuzz(cfg);
  const auto j = verify::to_json(rep);
  bool present = true;
  std::string detail;
  for (const char* name : {"diagnostic.centroid_lemoine_expansion_vs_general", "diagnostic.incenter_lemoine_doubled_vs_general",
                           "diagnostic.triple_expansion_vs_general"}) {
    const auto* c = rep.find(name);
    bool in_json = false;
    for (const auto& entry : j["checks"]) in_json = in_json || (entry["name"] == name && entry["pass"].is_null());
    present = present && c && c->samples > 0 && in_json;
    if (c) {
      detail += std::string(" ") + name + ": n=" + std::to_string(c->samples) + " nan=" + std::to_string(c->nan_samples) +
                " max dev " + fmt("%.3g", c->max_abs_residual) + ";";
    }
  }
  report(10, present, "report carries variant-form diagnostics:" + detail);
}

}  // namespace

int main(int argc, char** argv) {
  const char* binary = argc > 1 ? argv[1] : nullptr;
  const std::vector<std::function<void()>> steps{oracle_equivalence, specialization_coherence, blundon_inequalities,
                                                 dual_blundon,       fixtures,                 identity_audit,
                                                 equality_characterization, scale_invariance,
                                                 [&] { determinism(binary); }, diagnostics};
  for (const auto& step : steps) {
    try {
      step();
    } catch (const std::exception& e) {
      std::printf("unexpected exception: %s\n", e.what());
      ++failures;
    }
  }
  std::printf("%d of 10 criteria failing\n", failures);
  return failures == 0 ? 0 : 1;
}

#ifndef BLUNDON_VERIFY_HPP
#define BLUNDON_VERIFY_HPP

// Deterministic fuzz campaign: samples triangles per stratum, evaluates the
// barycentric formulas, the closed forms and the plane oracle on them, and
// reduces every comparison to a max-residual record.
//
// Residuals are reported twice: absolute, and divided by the natural scale
// of the quantity (R^2 for squared lengths, 1 for cosines, s^2 for the
// fundamental inequality). A sample passes when its scaled residual is at
// most tolerance * tolerance_scale * factor. The factor is 1 for unscaled
// checks; otherwise it is the larger of the shape condition max(1, R/2r)
// and a per-sample condition number supplied by the check (R / min(OP, OQ)
// for angles at O, sum|t| / |sum t| for homogeneous rescaling, ...).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "blundon/centers.hpp"
#include "blundon/engine.hpp"
#include "blundon/kernel.hpp"
#include "blundon/oracle.hpp"

namespace blundon::verify {

enum class Stratum { Uniform, NearDegenerate, NearEquilateral, Isosceles, IntegerSides, Corpus };
enum class Suite { Kernel, Classical, Dual, Cevian };

inline std::string_view to_string(Stratum s) {
  switch (s) {
    case Stratum::Uniform: return "uniform";
    case Stratum::NearDegenerate: return "near_degenerate";
    case Stratum::NearEquilateral: return "near_equilateral";
    case Stratum::Isosceles: return "isosceles";
    case Stratum::IntegerSides: return "integer_sides";
    case Stratum::Corpus: return "corpus";
  }
  return "unknown";
}

inline std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::Kernel: return "kernel";
    case Suite::Classical: return "classical";
    case Suite::Dual: return "dual";
    case Suite::Cevian: return "cevian";
  }
  return "unknown";
}

inline const std::vector<Stratum>& generated_strata() {
  static const std::vector<Stratum> all{Stratum::Uniform, Stratum::NearDegenerate, Stratum::NearEquilateral,
                                        Stratum::Isosceles, Stratum::IntegerSides};
  return all;
}

inline const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> all{Suite::Kernel, Suite::Classical, Suite::Dual, Suite::Cevian};
  return all;
}

struct FuzzConfig {
  /// Triangles per stratum.
  std::size_t count = 1000;
  std::uint64_t seed = 0;
  std::vector<Stratum> strata = generated_strata();
  std::vector<Suite> suites = all_suites();
  double tolerance_scale = 1.0;
  /// Side triples for the corpus stratum (cycled through `count` times).
  std::vector<std::array<double, 3>> corpus;
  unsigned threads = 1;

  void validate() const {
    if (count == 0) throw std::invalid_argument("count must be positive");
    if (strata.empty()) throw std::invalid_argument("at least one stratum is required");
    if (suites.empty()) throw std::invalid_argument("at least one suite is required");
    if (!(tolerance_scale > 0)) throw std::invalid_argument("tolerance scale must be positive");
    const bool wants_corpus = std::find(strata.begin(), strata.end(), Stratum::Corpus) != strata.end();
    if (wants_corpus && corpus.empty()) throw std::invalid_argument("corpus stratum needs side triples");
  }
};

// ---------------------------------------------------------------------------
// Sampling

/// splitmix64 finalizer; decorrelates (seed, stratum, index) into a seed.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Portable uniform draws (std::uniform_real_distribution is
/// implementation-defined, which would break cross-platform determinism).
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

inline SampleRng rng_for(std::uint64_t seed, Stratum stratum, std::size_t index) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ (static_cast<std::uint64_t>(stratum) + 1));
  h = mix64(h ^ static_cast<std::uint64_t>(index));
  return SampleRng(h);
}

struct SampledTriangle {
  std::array<double, 3> sides;
  Stratum stratum;
  std::size_t index;
  /// log10 of the controlling parameter: a+b-c defect (near-degenerate) or
  /// max side difference (near-equilateral). NaN elsewhere.
  double log10_parameter = std::numeric_limits<double>::quiet_NaN();
};

namespace detail {

inline std::array<double, 3> shuffled(std::array<double, 3> v, SampleRng& rng) {
  for (std::size_t i = 2; i > 0; --i) std::swap(v[i], v[rng.below(i + 1)]);
  return v;
}

inline std::array<double, 3> to_perimeter_two(std::array<double, 3> v) {
  const double k = 2 / (v[0] + v[1] + v[2]);
  return {v[0] * k, v[1] * k, v[2] * k};
}

inline bool acceptable(const std::array<double, 3>& v) {
  try {
    TriangleSides<double> t(v[0], v[1], v[2]);
    return true;
  } catch (const GeometryError&) {
    return false;
  }
}

}  // namespace detail

/// Deterministic triangle number `index` of a stratum. The sequence depends
/// only on (seed, stratum, index).
inline SampledTriangle sample_triangle(Stratum stratum, std::uint64_t seed, std::size_t index,
                                       const std::vector<std::array<double, 3>>& corpus = {}) {
  SampleRng rng = rng_for(seed, stratum, index);
  SampledTriangle out{{1, 1, 1}, stratum, index};
  switch (stratum) {
    case Stratum::Uniform: {
      // Sorted uniform triple on [eps, 1], rejected against the triangle
      // inequality, labels shuffled, perimeter normalized to 2.
      while (true) {
        std::array<double, 3> v{rng.uniform(1e-9, 1), rng.uniform(1e-9, 1), rng.uniform(1e-9, 1)};
        std::sort(v.begin(), v.end());
        if (v[0] + v[1] <= v[2]) continue;
        v = detail::to_perimeter_two(detail::shuffled(v, rng));
        if (detail::acceptable(v)) {
          out.sides = v;
          break;
        }
      }
      break;
    }
    case Stratum::NearDegenerate: {
      // Perimeter 2 with a + b - c = 10^u, u in [-8, -3].
      const double u = rng.uniform(-8, -3);
      const double defect = std::pow(10.0, u);
      const double w = rng.uniform(0.05, 0.95);
      const double c = 1 - defect / 2;
      const double ab = 1 + defect / 2;
      out.sides = detail::shuffled({ab * w, ab * (1 - w), c}, rng);
      out.log10_parameter = u;
      break;
    }
    case Stratum::NearEquilateral: {
      // Max pairwise side difference 10^u before normalizing to perimeter 2.
      const double u = rng.uniform(-8, -3);
      const double spread = std::pow(10.0, u);
      const double inner = spread * rng.unit();
      out.sides = detail::to_perimeter_two(detail::shuffled({1.0, 1.0 + spread, 1.0 + inner}, rng));
      out.log10_parameter = u;
      break;
    }
    case Stratum::Isosceles: {
      const double base = rng.uniform(0.02, 1.98);
      out.sides = detail::to_perimeter_two(detail::shuffled({1.0, 1.0, base}, rng));
      break;
    }
    case Stratum::IntegerSides: {
      while (true) {
        std::array<double, 3> v{static_cast<double>(1 + rng.below(50)), static_cast<double>(1 + rng.below(50)),
                                static_cast<double>(1 + rng.below(50))};
        if (detail::acceptable(v)) {
          out.sides = v;
          break;
        }
      }
      break;
    }
    case Stratum::Corpus: {
      if (corpus.empty()) throw std::invalid_argument("empty corpus");
      out.sides = corpus[index % corpus.size()];
      break;
    }
  }
  return out;
}

/// A sampled point and where it came from.
struct LabeledPoint {
  std::string_view label;
  BaryPoint<double> point;
};

/// Random triple with coordinates in [-2, 2], |sum| >= 1e-6, and a 10%
/// chance of one zeroed coordinate.
inline BaryPoint<double> random_raw_point(SampleRng& rng) {
  while (true) {
    std::array<double, 3> t{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    if (rng.chance(0.1)) t[rng.below(3)] = 0;
    if (std::abs(t[0] + t[1] + t[2]) < 1e-6) continue;
    return BaryPoint<double>(t);
  }
}

// ---------------------------------------------------------------------------
// Check bookkeeping

enum class Scaling {
  None,         // factor 1
  Conditioned,  // shape condition and per-sample condition number
};

struct CheckInfo {
  std::string_view name;
  Suite suite;
  double tolerance;
  Scaling scaling;
  bool diagnostic;
};

enum CheckId : int {
  kElementIdentities,
  kEulerInequality,
  kCircumradiusVsOracle,
  kDistVsOracle,
  kCircumPowerVsOracle,
  kNonnegativity,
  kEulerChain,
  kBergstromInequality,
  kBergstromEquality,
  kScaleInvariance,
  kLagrangeVsOracle,
  kExactVsFloat,
  kRankProportionality,
  kSumIdentities,
  kRelabelInvariance,
  kCevianFeet,
  kCosVsOracle,
  kBoundOrder,
  kCollinearityCertificate,
  kCosSymmetry,
  kOrientationInvariance,
  kBoundMiddleExpanded,
  kClassicalVsGeneral,
  kClassicalVsOracle,
  kFundamentalResidual,
  kIncenterNagelDistance,
  kIncenterPower,
  kNagelPower,
  kDualVsGeneral,
  kDualVsOracle,
  kDualInequalities,
  kExcenterPower,
  kAdjointNagelPower,
  kExcenterAdjointDistance,
  kExradiiIdentity,
  kRankFormVsGeneral,
  kCentroidIncenterVsRankForm,
  kIncenterLemoineVsRankForm,
  kTripleVsOracle,
  kTripleBounds,
  kNagelLine,
  kDiagCentroidLemoine,
  kDiagIncenterLemoine,
  kDiagTripleExpansion,
  kCheckCount
};

inline const std::array<CheckInfo, kCheckCount>& check_table() {
  static const std::array<CheckInfo, kCheckCount> table{{
      {"kernel.element_identities", Suite::Kernel, 1e-12, Scaling::Conditioned, false},
      {"kernel.euler_inequality", Suite::Kernel, 1e-12, Scaling::None, false},
      {"kernel.circumradius_vs_oracle", Suite::Kernel, 1e-12, Scaling::Conditioned, false},
      {"kernel.dist_vs_oracle", Suite::Kernel, 1e-9, Scaling::Conditioned, false},
      {"kernel.circum_power_vs_oracle", Suite::Kernel, 1e-9, Scaling::Conditioned, false},
      {"kernel.nonnegativity", Suite::Kernel, 1e-12, Scaling::Conditioned, false},
      {"kernel.euler_chain", Suite::Kernel, 1e-10, Scaling::Conditioned, false},
      {"kernel.bergstrom_inequality", Suite::Kernel, 1e-12, Scaling::Conditioned, false},
      {"kernel.bergstrom_equality", Suite::Kernel, 1e-10, Scaling::Conditioned, false},
      {"kernel.scale_invariance", Suite::Kernel, 1e-12, Scaling::Conditioned, false},
      {"kernel.lagrange_vs_oracle", Suite::Kernel, 1e-9, Scaling::Conditioned, false},
      {"kernel.exact_vs_float", Suite::Kernel, 1e-13, Scaling::None, false},
      {"centers.rank_proportionality", Suite::Kernel, 1e-14, Scaling::None, false},
      {"centers.sum_identities", Suite::Kernel, 1e-14, Scaling::Conditioned, false},
      {"centers.relabel_invariance", Suite::Kernel, 1e-10, Scaling::Conditioned, false},
      {"centers.cevian_feet_on_sides", Suite::Kernel, 1e-10, Scaling::Conditioned, false},
      {"cos.oracle_equivalence", Suite::Kernel, 1e-9, Scaling::Conditioned, false},
      {"cos.bound_order", Suite::Kernel, 1e-12, Scaling::Conditioned, false},
      {"cos.collinearity_certificate", Suite::Kernel, 1e-9, Scaling::Conditioned, false},
      {"cos.symmetry", Suite::Kernel, 0.0, Scaling::None, false},
      {"cos.orientation_invariance", Suite::Kernel, 1e-12, Scaling::Conditioned, false},
      {"cos.bound_middle_expanded", Suite::Kernel, 1e-9, Scaling::Conditioned, false},
      {"classical.closed_form_vs_general", Suite::Classical, 1e-10, Scaling::Conditioned, false},
      {"classical.closed_form_vs_oracle", Suite::Classical, 1e-9, Scaling::Conditioned, false},
      {"classical.fundamental_residual", Suite::Classical, 1e-10, Scaling::Conditioned, false},
      {"classical.incenter_nagel_distance", Suite::Classical, 1e-9, Scaling::Conditioned, false},
      {"classical.incenter_power", Suite::Classical, 1e-9, Scaling::Conditioned, false},
      {"classical.nagel_power", Suite::Classical, 1e-9, Scaling::Conditioned, false},
      {"dual.closed_form_vs_general", Suite::Dual, 1e-10, Scaling::Conditioned, false},
      {"dual.closed_form_vs_oracle", Suite::Dual, 1e-9, Scaling::Conditioned, false},
      {"dual.inequalities", Suite::Dual, 1e-10, Scaling::Conditioned, false},
      {"dual.excenter_power", Suite::Dual, 1e-9, Scaling::Conditioned, false},
      {"dual.adjoint_nagel_power", Suite::Dual, 1e-9, Scaling::Conditioned, false},
      {"dual.excenter_adjoint_distance", Suite::Dual, 1e-9, Scaling::Conditioned, false},
      {"dual.exradii_identity", Suite::Dual, 1e-10, Scaling::Conditioned, false},
      {"cevian.rank_form_vs_general", Suite::Cevian, 1e-9, Scaling::Conditioned, false},
      {"cevian.centroid_incenter_vs_rank_form", Suite::Cevian, 1e-10, Scaling::Conditioned, false},
      {"cevian.incenter_lemoine_vs_rank_form", Suite::Cevian, 1e-10, Scaling::Conditioned, false},
      {"cevian.triple_vs_oracle", Suite::Cevian, 1e-9, Scaling::Conditioned, false},
      {"cevian.triple_bounds", Suite::Cevian, 1e-12, Scaling::Conditioned, false},
      {"cevian.nagel_line", Suite::Cevian, 1e-8, Scaling::Conditioned, false},
      {"diagnostic.centroid_lemoine_expansion_vs_general", Suite::Cevian, 0.0, Scaling::None, true},
      {"diagnostic.incenter_lemoine_doubled_vs_general", Suite::Cevian, 0.0, Scaling::None, true},
      {"diagnostic.triple_expansion_vs_general", Suite::Cevian, 0.0, Scaling::None, true},
  }};
  return table;
}

struct PointRecord {
  std::string label;
  std::array<double, 3> t{};
};

struct WorstCase {
  std::array<double, 3> sides{};
  Stratum stratum = Stratum::Uniform;
  std::size_t index = 0;
  std::optional<PointRecord> p;
  std::optional<PointRecord> q;
};

struct CheckResult {
  std::string name;
  Suite suite = Suite::Kernel;
  bool diagnostic = false;
  double tolerance = 0;
  std::size_t samples = 0;
  std::size_t skipped = 0;
  std::size_t nan_samples = 0;
  double max_abs_residual = 0;
  double max_rel_residual = 0;
  /// Largest scaled residual divided by the allowed value (<= 1 passes).
  double max_tolerance_ratio = 0;
  std::optional<WorstCase> worst_case;
  bool pass = true;
};

/// Per-triangle context handed to each record call.
struct SampleContext {
  const SampledTriangle* triangle = nullptr;
  /// max(1, R / 2r): 1 for the equilateral triangle, large for needles.
  double stratum_factor = 1;
};

class CheckAccumulator {
 public:
  explicit CheckAccumulator(CheckId id) : id_(id) {
    const auto& info = check_table()[id];
    result_.name = std::string(info.name);
    result_.suite = info.suite;
    result_.diagnostic = info.diagnostic;
    result_.tolerance = info.tolerance;
  }

  /// One comparison; `condition` is the per-sample condition number.
  void record(const SampleContext& ctx, double abs_residual, double scale, double tolerance_scale,
              const LabeledPoint* p = nullptr, const LabeledPoint* q = nullptr, double condition = 1) {
    const auto& info = check_table()[id_];
    ++result_.samples;
    const double rel = abs_residual / scale;
    if (std::isnan(abs_residual) || std::isnan(rel)) {
      ++result_.nan_samples;
      if (!info.diagnostic) {
        result_.pass = false;
        if (result_.max_tolerance_ratio != std::numeric_limits<double>::infinity()) {
          result_.max_tolerance_ratio = std::numeric_limits<double>::infinity();
          result_.worst_case = make_worst(ctx, p, q);
        }
      }
      return;
    }
    result_.max_abs_residual = std::max(result_.max_abs_residual, abs_residual);
    result_.max_rel_residual = std::max(result_.max_rel_residual, rel);
    if (info.diagnostic) {
      if (!result_.worst_case || abs_residual > worst_abs_) {
        worst_abs_ = abs_residual;
        result_.worst_case = make_worst(ctx, p, q);
      }
      return;
    }
    double factor = 1;
    if (info.scaling == Scaling::Conditioned) factor = std::max(ctx.stratum_factor, condition);
    const double allowed = info.tolerance * tolerance_scale * factor;
    const double ratio = allowed > 0 ? rel / allowed : (rel > 0 ? std::numeric_limits<double>::infinity() : 0);
    if (rel > allowed) result_.pass = false;
    if (!result_.worst_case || ratio > result_.max_tolerance_ratio) {
      result_.max_tolerance_ratio = std::max(result_.max_tolerance_ratio, ratio);
      result_.worst_case = make_worst(ctx, p, q);
    }
  }

  void skip() { ++result_.skipped; }

  /// Folds a later shard into this one. Ties keep the earlier worst case,
  /// so the merged result equals a serial run.
  void merge(const CheckAccumulator& later) {
    const CheckResult& o = later.result_;
    result_.samples += o.samples;
    result_.skipped += o.skipped;
    result_.nan_samples += o.nan_samples;
    result_.max_abs_residual = std::max(result_.max_abs_residual, o.max_abs_residual);
    result_.max_rel_residual = std::max(result_.max_rel_residual, o.max_rel_residual);
    result_.pass = result_.pass && o.pass;
    if (!o.worst_case) return;
    const bool take = result_.diagnostic ? (!result_.worst_case || later.worst_abs_ > worst_abs_)
                                         : (!result_.worst_case || o.max_tolerance_ratio > result_.max_tolerance_ratio);
    if (take) {
      result_.worst_case = o.worst_case;
      worst_abs_ = later.worst_abs_;
    }
    result_.max_tolerance_ratio = std::max(result_.max_tolerance_ratio, o.max_tolerance_ratio);
  }

  const CheckResult& result() const { return result_; }

 private:
  static WorstCase make_worst(const SampleContext& ctx, const LabeledPoint* p, const LabeledPoint* q) {
    WorstCase w;
    w.sides = ctx.triangle->sides;
    w.stratum = ctx.triangle->stratum;
    w.index = ctx.triangle->index;
    if (p) w.p = PointRecord{std::string(p->label), p->point.coords()};
    if (q) w.q = PointRecord{std::string(q->label), q->point.coords()};
    return w;
  }

  CheckId id_;
  CheckResult result_;
  double worst_abs_ = -1;
};

class Accumulators {
 public:
  Accumulators() {
    checks_.reserve(kCheckCount);
    for (int i = 0; i < kCheckCount; ++i) checks_.emplace_back(static_cast<CheckId>(i));
  }

  CheckAccumulator& operator[](CheckId id) { return checks_[id]; }
  const CheckAccumulator& operator[](CheckId id) const { return checks_[id]; }

  void merge(const Accumulators& later) {
    for (int i = 0; i < kCheckCount; ++i) checks_[i].merge(later.checks_[i]);
  }

 private:
  std::vector<CheckAccumulator> checks_;
};

// ---------------------------------------------------------------------------
// Per-triangle evaluation

namespace detail {

inline bool has_suite(const std::vector<Suite>& suites, Suite s) {
  return std::find(suites.begin(), suites.end(), s) != suites.end();
}

/// max |minor| / (|t| |u|): zero iff the triples are proportional.
inline double proportionality_residual(const BaryPoint<double>& p, const BaryPoint<double>& q) {
  const auto& t = p.coords();
  const auto& u = q.coords();
  const double m = std::max({std::abs(t[0] * u[1] - t[1] * u[0]), std::abs(t[1] * u[2] - t[2] * u[1]),
                             std::abs(t[0] * u[2] - t[2] * u[0])});
  const double nt = std::sqrt(t[0] * t[0] + t[1] * t[1] + t[2] * t[2]);
  const double nu = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
  return m / (nt * nu);
}

inline double rel_diff(double x, double y, double scale) { return std::abs(x - y) / scale; }

struct TriangleEvaluator {
  const SampledTriangle& tri;
  const FuzzConfig& config;
  Accumulators& acc;

  TriangleSides<double> sides;
  TriangleSides<long double> sides_ld;
  TriangleElements<double> el;
  TriangleElements<long double> el_ld;
  oracle::Placement placement;
  oracle::Placement mirrored;
  oracle::Point2 circumcenter;
  double R_sq;
  SampleContext ctx;
  SampleRng rng;
  std::vector<LabeledPoint> points;

  TriangleEvaluator(const SampledTriangle& t, const FuzzConfig& cfg, Accumulators& a)
      : tri(t),
        config(cfg),
        acc(a),
        sides(t.sides[0], t.sides[1], t.sides[2]),
        sides_ld(t.sides[0], t.sides[1], t.sides[2]),
        el(derive_elements(sides)),
        el_ld(derive_elements(sides_ld)),
        placement(oracle::place(sides)),
        mirrored(oracle::place(sides, true)),
        circumcenter(oracle::circumcenter_cartesian(placement)),
        R_sq(el.R * el.R),
        rng(mix64(rng_for(cfg.seed, t.stratum, t.index).unit() * 0x1.0p53 + 17)) {
    ctx.triangle = &tri;
    ctx.stratum_factor = std::max(1.0, el.R / (2 * el.r));
  }

  void record(CheckId id, double abs_residual, double scale, const LabeledPoint* p = nullptr,
              const LabeledPoint* q = nullptr, double condition = 1) {
    acc[id].record(ctx, abs_residual, scale, config.tolerance_scale, p, q, condition);
  }

  const LabeledPoint& named(std::string_view label) const {
    for (const auto& lp : points) {
      if (lp.label == label) return lp;
    }
    throw std::logic_error("missing sample point");
  }

  void build_points() {
    static constexpr std::array<std::string_view, 10> kNamed{
        "incenter", "centroid", "nagel", "lemoine", "excenter:A",
        "excenter:B", "excenter:C", "adjnagel:A", "adjnagel:B", "adjnagel:C"};
    points.reserve(16);
    for (auto label : kNamed) {
      points.push_back({label, resolve(parse_center_spec<double>(label), sides)});
    }
    for (int i = 0; i < 2; ++i) {
      const double k = rng.uniform(-3, 3), l = rng.uniform(-3, 3), m = rng.uniform(-3, 3);
      points.push_back({i == 0 ? "cevian:random#1" : "cevian:random#2", cevian_rank_point(k, l, m, sides)});
    }
    static constexpr std::array<std::string_view, 3> kRaw{"raw:random#1", "raw:random#2", "raw:random#3"};
    for (auto label : kRaw) points.push_back({label, random_raw_point(rng)});
  }

  /// R / min(OP, OQ) from the oracle; conditioning of an angle at O.
  double angle_factor(const BaryPoint<double>& p, const BaryPoint<double>& q) const {
    const double R = el.R;
    const double op = std::sqrt(oracle::distance_sq(oracle::bary_to_cartesian(p, placement), circumcenter));
    const double oq = std::sqrt(oracle::distance_sq(oracle::bary_to_cartesian(q, placement), circumcenter));
    return std::max(1.0, R / std::max(std::min(op, oq), 1e-300));
  }

  void run() {
    build_points();
    if (has_suite(config.suites, Suite::Kernel)) {
      kernel_checks();
      center_checks();
      pair_checks();
    }
    if (has_suite(config.suites, Suite::Classical)) classical_checks();
    if (has_suite(config.suites, Suite::Dual)) dual_checks();
    if (has_suite(config.suites, Suite::Cevian)) cevian_checks();
  }

  void kernel_checks() {
    const double abc = el.a * el.b * el.c;
    const double sa = (el.b + el.c - el.a) / 2, sb = (el.c + el.a - el.b) / 2, sc = (el.a + el.b - el.c) / 2;
    record(kElementIdentities, std::abs(abc - 4 * el.R * el.r * el.s), abc);
    const double r2s = el.r * el.r * el.s;
    record(kElementIdentities, std::abs(sa * sb * sc - r2s), r2s);
    record(kEulerInequality, std::max(0.0, 2 * el.r - el.R), el.R);

    for (const auto& v : placement.vertices()) {
      const double dist = std::sqrt(oracle::distance_sq(v, circumcenter));
      record(kCircumradiusVsOracle, std::abs(dist - el.R), el.R);
    }

    const auto& incenter = named("incenter");
    const auto& nagel = named("nagel");
    const double two_Rr = 2 * el.R * el.r;
    record(kEulerChain, std::abs(circum_power(incenter.point, sides) - two_Rr), two_Rr, &incenter);
    const double nagel_closed = 4 * el.R * el.r - 4 * el.r * el.r;
    record(kEulerChain, std::abs(circum_power(nagel.point, sides) - nagel_closed), nagel_closed, &nagel);
    record(kBergstromEquality,
           std::abs(circum_power(incenter.point, sides) - bergstrom_bound(incenter.point, sides)), R_sq,
           &incenter);

    // Random plane point M for Lagrange's relation.
    const oracle::Point2 m{rng.uniform(-1, 2), rng.uniform(-1, 1.5)};
    const double ma2 = oracle::distance_sq(m, placement.A);
    const double mb2 = oracle::distance_sq(m, placement.B);
    const double mc2 = oracle::distance_sq(m, placement.C);

    for (const auto& lp : points) {
      const auto& p = lp.point;
      const double power = circum_power(p, sides);
      const double op_oracle = oracle::distance_sq(oracle::bary_to_cartesian(p, placement), circumcenter);
      const double scale = std::max({R_sq, std::abs(power), op_oracle});
      record(kCircumPowerVsOracle, std::abs(power - (R_sq - op_oracle)), scale, &lp);
      record(kNonnegativity, std::max(0.0, -(R_sq - power)), scale, &lp);
      if (p[0] > 0 && p[1] > 0 && p[2] > 0) {
        record(kBergstromInequality, std::max(0.0, bergstrom_bound(p, sides) - power), scale, &lp);
      }
      // Rounding the rescaled coordinates moves the sum by eps * sum|t|.
      const double kappa = (std::abs(p[0]) + std::abs(p[1]) + std::abs(p[2])) / std::abs(p.sum());
      for (double lambda : {2.0, -1.0, 1e-6}) {
        const auto scaled = p.scaled(lambda);
        record(kScaleInvariance, std::abs(circum_power(scaled, sides) - power), scale, &lp, nullptr, kappa);
        record(kScaleInvariance, std::abs(circumcenter_dist_sq(scaled, sides) - circumcenter_dist_sq(p, sides)),
               scale, &lp, nullptr, kappa);
      }
      const double mp2 = lagrange_point_dist_sq(p, ma2, mb2, mc2, sides);
      const double mp2_oracle = oracle::distance_sq(m, oracle::bary_to_cartesian(p, placement));
      record(kLagrangeVsOracle, std::abs(mp2 - mp2_oracle), std::max({R_sq, mp2_oracle, ma2, mb2, mc2}), &lp);
    }

    if (tri.stratum == Stratum::IntegerSides) exact_checks();
  }

  void exact_checks() {
    const TriangleSides<Rational> exact(Rational(static_cast<long long>(tri.sides[0])),
                                        Rational(static_cast<long long>(tri.sides[1])),
                                        Rational(static_cast<long long>(tri.sides[2])));
    const auto& lengths = exact.lengths();
    const BaryPoint<Rational> incenter(lengths);
    const BaryPoint<Rational> nagel(resolve(CenterSpec<Rational>{center::Nagel{}}, exact));
    const auto sq = derive_squared_elements(exact);
    // (R^2 - OI^2)^2 = 4 R^2 r^2 holds exactly.
    const Rational power_i = circum_power(incenter, exact);
    record(kExactVsFloat, to_double(abs_of(Rational(power_i * power_i - 4 * sq.R_sq * sq.r_sq))), R_sq * R_sq);
    const auto& inc = named("incenter");
    const auto& nag = named("nagel");
    record(kExactVsFloat, std::abs(to_double(power_i) - circum_power(inc.point, sides)), R_sq, &inc);
    record(kExactVsFloat,
           std::abs(to_double(dist_sq_between(incenter, nagel, exact)) - dist_sq_between(inc.point, nag.point, sides)),
           R_sq, &inc, &nag);
    record(kExactVsFloat,
           std::abs(to_double(circumcenter_dist_sq(nagel, exact)) - circumcenter_dist_sq(nag.point, sides)), R_sq,
           &nag);
  }

  void center_checks() {
    auto prop = [&](const char* spec, std::string_view named_label) {
      const auto rank = resolve(parse_center_spec<double>(spec), sides);
      const auto& target = named(named_label);
      record(kRankProportionality, proportionality_residual(rank, target.point), 1.0, &target);
    };
    prop("cevian:1,0,0", "incenter");
    prop("cevian:0,0,0", "centroid");
    prop("cevian:2,0,0", "lemoine");
    prop("cevian:0,1,0", "nagel");

    const double s = el.s;
    record(kSumIdentities, std::abs(named("incenter").point.sum() - 2 * s), s);
    record(kSumIdentities, std::abs(named("nagel").point.sum() - s), s);
    const std::array<double, 3> side_len{el.a, el.b, el.c};
    static constexpr std::array<std::string_view, 3> kEx{"excenter:A", "excenter:B", "excenter:C"};
    static constexpr std::array<std::string_view, 3> kAdj{"adjnagel:A", "adjnagel:B", "adjnagel:C"};
    for (int v = 0; v < 3; ++v) {
      const double s_minus = s - side_len[v];
      record(kSumIdentities, std::abs(named(kEx[v]).point.sum() - 2 * s_minus), s, &named(kEx[v]));
      record(kSumIdentities, std::abs(named(kAdj[v]).point.sum() - s_minus), s, &named(kAdj[v]));
    }

    // Relabeling: sides (b, c, a) belong to the triangle A' = B, B' = C, C' = A.
    const TriangleSides<double> rotated = sides.rotated();
    const oracle::Placement relabeled{placement.B, placement.C, placement.A};
    for (int i = 0; i < 10; ++i) {
      const auto& lp = points[i];
      const auto spec = parse_center_spec<double>(lp.label);
      CenterSpec<double> rotated_spec = spec;
      // A vertex-bound center at X sits at the relabeled vertex X - 1.
      if (auto* e = std::get_if<center::Excenter>(&rotated_spec)) {
        e->vertex = static_cast<Vertex>((static_cast<int>(e->vertex) + 2) % 3);
      } else if (auto* n = std::get_if<center::AdjointNagel>(&rotated_spec)) {
        n->vertex = static_cast<Vertex>((static_cast<int>(n->vertex) + 2) % 3);
      }
      const auto x = oracle::bary_to_cartesian(lp.point, placement);
      const auto y = oracle::bary_to_cartesian(resolve(rotated_spec, rotated), relabeled);
      record(kRelabelInvariance, std::sqrt(oracle::distance_sq(x, y)), std::max(el.R, std::hypot(x.x, x.y)), &lp);
    }

    // Cevian feet lie on the sidelines and on the Cevian through P.
    for (const auto& lp : points) {
      std::array<BaryPoint<double>, 3> feet{lp.point, lp.point, lp.point};
      try {
        feet = cevian_triangle(lp.point);
      } catch (const GeometryError&) {
        acc[kCevianFeet].skip();
        continue;
      }
      const auto verts = placement.vertices();
      const auto pp = oracle::bary_to_cartesian(lp.point, placement);
      for (int v = 0; v < 3; ++v) {
        const auto foot = oracle::bary_to_cartesian(feet[v], placement);
        const double scale = std::max({el.R, std::hypot(foot.x, foot.y), std::hypot(pp.x, pp.y)});
        record(kCevianFeet, oracle::distance_to_line(foot, verts[(v + 1) % 3], verts[(v + 2) % 3]), scale, &lp);
        // The line through the vertex and P is only as good as |vertex - P|
        // is large compared with |vertex - foot|.
        const double near = std::sqrt(oracle::distance_sq(verts[v], pp));
        if (near > 1e-10 * el.R) {
          const double condition = std::sqrt(oracle::distance_sq(verts[v], foot)) / near;
          record(kCevianFeet, oracle::distance_to_line(foot, verts[v], pp), scale, &lp, nullptr, condition);
        }
      }
    }
  }

  void pair_checks() {
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t j = i; j < points.size(); ++j) {
        const auto& lp = points[i];
        const auto& lq = points[j];
        const auto& p = lp.point;
        const auto& q = lq.point;

        const double pq = dist_sq_between(p, q, sides);
        const double pq_oracle = oracle::oracle_dist_sq(p, q, placement);
        const double scale = std::max({1.0, R_sq, pq_oracle});
        record(kDistVsOracle, std::abs(pq - pq_oracle), scale, &lp, &lq);
        record(kNonnegativity, std::max(0.0, -pq), scale, &lp, &lq);
        if (i == j) continue;

        const auto report = cos_angle_at_O(p, q, sides);
        const auto swapped = cos_angle_at_O(q, p, sides);
        const double big = std::max({R_sq, report.op_sq, report.oq_sq});
        record(kBoundOrder, std::max(0.0, report.bounds.violation()), big, &lp, &lq);
        record(kBoundMiddleExpanded, std::abs(bound_middle_expanded(p, q, sides) - report.bounds.middle),
               std::max({big, std::abs(circum_power(p, sides)), std::abs(circum_power(q, sides))}), &lp, &lq);
        if (!report.defined()) {
          acc[kCosVsOracle].skip();
          continue;
        }
        record(kCosSymmetry, std::abs(report.cos_value - swapped.cos_value), 1.0, &lp, &lq);

        double oracle_cos = 0, mirrored_cos = 0;
        try {
          oracle_cos = oracle::oracle_angle_cos(p, q, placement);
          mirrored_cos = oracle::oracle_angle_cos(p, q, mirrored);
        } catch (const GeometryError&) {
          acc[kCosVsOracle].skip();
          continue;
        }
        const double factor = angle_factor(p, q);
        record(kCosVsOracle, std::abs(report.cos_value - oracle_cos), 1.0, &lp, &lq, factor);
        record(kOrientationInvariance, std::abs(mirrored_cos - oracle_cos), 1.0, &lp, &lq, factor);

        // upper^2 - middle^2 = 4 OP^2 OQ^2 sin^2 = 4 |OP x OQ|^2.
        const auto rays = oracle::rays_from_circumcenter(p, q, placement);
        const double cr = oracle::cross(rays[0], rays[1]);
        const double u = report.bounds.upper, mid = report.bounds.middle;
        record(kCollinearityCertificate, std::abs((u - mid) * (u + mid) - 4 * cr * cr), u * u, &lp, &lq, factor);
      }
    }
  }

  /// cos from the general path, or nullopt when undefined.
  std::optional<double> general_cos(const BaryPoint<double>& p, const BaryPoint<double>& q) const {
    const auto report = cos_angle_at_O(p, q, sides);
    if (!report.defined()) return std::nullopt;
    return report.cos_value;
  }

  void classical_checks() {
    const auto& inc = named("incenter");
    const auto& nag = named("nagel");
    record(kFundamentalResidual, std::max(0.0L, -closed_form::fundamental_residual(el_ld)), el.s * el.s);
    const double in_sq = dist_sq_between(inc.point, nag.point, sides);
    record(kIncenterNagelDistance, std::abs(closed_form::incenter_nagel_cross(el) + in_sq), R_sq, &inc, &nag);
    record(kIncenterPower, std::abs(closed_form::incenter_power(el) - circum_power(inc.point, sides)), R_sq, &inc);
    record(kNagelPower, std::abs(closed_form::nagel_power(el) - circum_power(nag.point, sides)), R_sq, &nag);

    const auto general = general_cos(inc.point, nag.point);
    long double closed = 0;
    try {
      closed = closed_form::classical_cos_ION(el_ld);
    } catch (const GeometryError&) {
      acc[kClassicalVsGeneral].skip();
      return;
    }
    if (!general) {
      acc[kClassicalVsGeneral].skip();
      return;
    }
    const double factor = angle_factor(inc.point, nag.point);
    record(kClassicalVsGeneral, std::abs(static_cast<double>(closed) - *general), 1.0, &inc, &nag, factor);
    try {
      const double oc = oracle::oracle_angle_cos(inc.point, nag.point, placement);
      record(kClassicalVsOracle, std::abs(static_cast<double>(closed) - oc), 1.0, &inc, &nag, factor);
    } catch (const GeometryError&) {
      acc[kClassicalVsOracle].skip();
    }
  }

  void dual_checks() {
    static constexpr std::array<std::string_view, 3> kEx{"excenter:A", "excenter:B", "excenter:C"};
    static constexpr std::array<std::string_view, 3> kAdj{"adjnagel:A", "adjnagel:B", "adjnagel:C"};
    for (int v = 0; v < 3; ++v) {
      const Vertex vertex = static_cast<Vertex>(v);
      const auto& ex = named(kEx[v]);
      const auto& adj = named(kAdj[v]);
      const double rv = el.exradius(v);
      const double scale = std::max(R_sq, rv * rv);

      const double closed = static_cast<double>(closed_form::dual_cos(vertex, el_ld));
      const double factor = angle_factor(ex.point, adj.point);
      if (const auto general = general_cos(ex.point, adj.point)) {
        record(kDualVsGeneral, std::abs(closed - *general), 1.0, &ex, &adj, factor);
      } else {
        acc[kDualVsGeneral].skip();
      }
      try {
        record(kDualVsOracle, std::abs(closed - oracle::oracle_angle_cos(ex.point, adj.point, placement)), 1.0, &ex,
               &adj, factor);
      } catch (const GeometryError&) {
        acc[kDualVsOracle].skip();
      }

      const long double quarter = el_ld.sum_of_squares() / 4;
      const long double upper = closed_form::dual_upper_bound(vertex, el_ld);
      const double violation = static_cast<double>(std::max({0.0L, -quarter, quarter - upper}));
      record(kDualInequalities, violation, scale, &ex, &adj);

      record(kExcenterPower, std::abs(closed_form::excenter_power(vertex, el) - circum_power(ex.point, sides)), scale,
             &ex);
      record(kAdjointNagelPower, std::abs(closed_form::adjoint_nagel_power(vertex, el) - circum_power(adj.point, sides)),
             scale, &adj);
      record(kExcenterAdjointDistance,
             std::abs(closed_form::excenter_adjoint_cross(vertex, el) + dist_sq_between(ex.point, adj.point, sides)),
             scale, &ex, &adj);
      const double rhs = 4 * el.R / rv + 4;
      record(kExradiiIdentity, std::abs(static_cast<double>(closed_form::exradii_identity_residual(el_ld, vertex))),
             rhs);
    }
  }

  void cevian_checks() {
    const auto& inc = named("incenter");
    const auto& cen = named("centroid");
    const auto& nag = named("nagel");
    const auto& lem = named("lemoine");

    std::vector<std::array<double, 2>> ranks{{0, 1}, {1, 2}, {0, 2}, {rng.uniform(-3, 3), rng.uniform(-3, 3)},
                                             {rng.uniform(-3, 3), rng.uniform(-3, 3)}};
    std::optional<long double> eq29_01, eq29_12;
    for (const auto& [k1, k2] : ranks) {
      const auto p = cevian_rank_point(k1, 0.0, 0.0, sides);
      const auto q = cevian_rank_point(k2, 0.0, 0.0, sides);
      const auto general = general_cos(p, q);
      long double closed = 0;
      try {
        closed = closed_form::cevian_rank_cos<long double>(k1, k2, sides_ld);
      } catch (const GeometryError&) {
        acc[kRankFormVsGeneral].skip();
        continue;
      }
      if (k1 == 0 && k2 == 1) eq29_01 = closed;
      if (k1 == 1 && k2 == 2) eq29_12 = closed;
      if (!general) {
        acc[kRankFormVsGeneral].skip();
        continue;
      }
      const LabeledPoint lp{"cevian:k1,0,0", p}, lq{"cevian:k2,0,0", q};
      record(kRankFormVsGeneral, std::abs(static_cast<double>(closed) - *general), 1.0, &lp, &lq, angle_factor(p, q));
    }

    if (eq29_01) {
      try {
        const long double eq30 = closed_form::centroid_incenter_cos(el_ld);
        record(kCentroidIncenterVsRankForm, static_cast<double>(std::abs(eq30 - *eq29_01)), 1.0, &cen, &inc,
               angle_factor(cen.point, inc.point));
      } catch (const GeometryError&) {
        acc[kCentroidIncenterVsRankForm].skip();
      }
    } else {
      acc[kCentroidIncenterVsRankForm].skip();
    }
    if (eq29_12) {
      try {
        const long double eq32 = closed_form::incenter_lemoine_cos(el_ld);
        record(kIncenterLemoineVsRankForm, static_cast<double>(std::abs(eq32 - *eq29_12)), 1.0, &inc, &lem,
               angle_factor(inc.point, lem.point));
      } catch (const GeometryError&) {
        acc[kIncenterLemoineVsRankForm].skip();
      }
    } else {
      acc[kIncenterLemoineVsRankForm].skip();
    }

    // Variant closed forms, reported only.
    if (const auto gl = general_cos(cen.point, lem.point)) {
      record(kDiagCentroidLemoine, std::abs(static_cast<double>(alternate::centroid_lemoine_cos(el_ld)) - *gl), 1.0, &cen,
             &lem);
    }
    if (const auto il = general_cos(inc.point, lem.point)) {
      record(kDiagIncenterLemoine, std::abs(static_cast<double>(alternate::incenter_lemoine_cos(el_ld)) - *il), 1.0, &inc,
             &lem);
    }

    // Three-point angles.
    std::vector<std::array<const LabeledPoint*, 3>> triples{{&inc, &cen, &nag}, {&cen, &inc, &nag}, {&inc, &lem, &cen}};
    const std::size_t n = points.size();
    triples.push_back({&points[10], &points[11], &points[12]});
    triples.push_back({&points[13], &points[14], &points[n - 1]});
    for (const auto& tr : triples) {
      TripleReport report;
      try {
        report = triple_angle(tr[0]->point, tr[1]->point, tr[2]->point, sides);
      } catch (const GeometryError&) {
        acc[kTripleVsOracle].skip();
        continue;
      }
      const double oc = oracle::oracle_vertex_cos(tr[0]->point, tr[1]->point, tr[2]->point, placement);
      const double factor = std::max(1.0, el.R / std::sqrt(std::min(report.d12_sq, report.d23_sq)));
      record(kTripleVsOracle, std::abs(report.cos_value - oc), 1.0, tr[0], tr[2], factor);
      record(kTripleBounds, std::max(0.0, report.bounds.violation()),
             std::max({R_sq, report.d12_sq, report.d23_sq}), tr[0], tr[2]);
      record(kDiagTripleExpansion,
             std::abs(alternate::triple_cos(tr[0]->point, tr[1]->point, tr[2]->point, sides) - report.cos_value), 1.0,
             tr[0], tr[2]);
    }

    // Nagel line: angle IGN is a straight angle and IG = IN / 3.
    try {
      const auto ign = triple_angle(inc.point, cen.point, nag.point, sides);
      const double factor = std::max(1.0, el.R / std::sqrt(std::min(ign.d12_sq, ign.d23_sq)));
      record(kNagelLine, std::abs(ign.cos_value + 1), 1.0, &inc, &nag, factor);
      const double in_sq = ign.d31_sq;
      record(kNagelLine, std::abs(ign.d12_sq - in_sq / 9), in_sq, &inc, &nag, factor);
    } catch (const GeometryError&) {
      acc[kNagelLine].skip();
    }
  }
};

}  // namespace detail

/// Evaluates every selected check on one triangle.
inline void evaluate_triangle(const SampledTriangle& tri, const FuzzConfig& config, Accumulators& acc) {
  detail::TriangleEvaluator evaluator(tri, config, acc);
  evaluator.run();
}

// ---------------------------------------------------------------------------
// Report

struct VerificationReport {
  FuzzConfig config;
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.diagnostic || c.pass; });
  }

  const CheckResult* find(std::string_view name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

inline VerificationReport run_fuzz(const FuzzConfig& config) {
  config.validate();
  struct Job {
    Stratum stratum;
    std::size_t index;
  };
  std::vector<Job> jobs;
  jobs.reserve(config.count * config.strata.size());
  for (Stratum s : config.strata) {
    for (std::size_t i = 0; i < config.count; ++i) jobs.push_back({s, i});
  }

  const unsigned workers = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(jobs.size())));
  std::vector<Accumulators> shards(workers);
  auto work = [&](unsigned w) {
    const std::size_t begin = jobs.size() * w / workers;
    const std::size_t end = jobs.size() * (w + 1) / workers;
    for (std::size_t j = begin; j < end; ++j) {
      const auto tri = sample_triangle(jobs[j].stratum, config.seed, jobs[j].index, config.corpus);
      evaluate_triangle(tri, config, shards[w]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (unsigned w = 1; w < workers; ++w) shards[0].merge(shards[w]);

  VerificationReport report{config, {}};
  for (int i = 0; i < kCheckCount; ++i) {
    const auto& info = check_table()[i];
    if (!detail::has_suite(config.suites, info.suite)) continue;
    report.checks.push_back(shards[0][static_cast<CheckId>(i)].result());
  }
  return report;
}

namespace detail {

inline nlohmann::ordered_json number_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

inline nlohmann::ordered_json point_json(const std::optional<PointRecord>& p) {
  if (!p) return nullptr;
  return {{"label", p->label}, {"t", {p->t[0], p->t[1], p->t[2]}}};
}

}  // namespace detail

/// {config, checks: [{name, samples, max_abs_residual, max_rel_residual,
///  worst_case: {sides, p, q}, pass}], summary}. Diagnostics carry
/// "pass": null.
inline nlohmann::ordered_json to_json(const VerificationReport& report) {
  using nlohmann::ordered_json;
  const FuzzConfig& cfg = report.config;
  ordered_json config;
  config["count"] = cfg.count;
  config["seed"] = cfg.seed;
  config["strata"] = ordered_json::array();
  for (auto s : cfg.strata) config["strata"].push_back(to_string(s));
  config["suites"] = ordered_json::array();
  for (auto s : cfg.suites) config["suites"].push_back(to_string(s));
  config["tolerance_scale"] = cfg.tolerance_scale;
  config["corpus_size"] = cfg.corpus.size();

  ordered_json checks = ordered_json::array();
  std::size_t failed = 0, diagnostics = 0, samples = 0;
  for (const auto& c : report.checks) {
    ordered_json j;
    j["name"] = c.name;
    j["suite"] = to_string(c.suite);
    j["samples"] = c.samples;
    j["skipped"] = c.skipped;
    j["nan_samples"] = c.nan_samples;
    j["max_abs_residual"] = detail::number_or_null(c.max_abs_residual);
    j["max_rel_residual"] = detail::number_or_null(c.max_rel_residual);
    if (c.diagnostic) {
      j["tolerance"] = nullptr;
      j["max_tolerance_ratio"] = nullptr;
    } else {
      j["tolerance"] = c.tolerance;
      j["max_tolerance_ratio"] = detail::number_or_null(c.max_tolerance_ratio);
    }
    if (c.worst_case) {
      const auto& w = *c.worst_case;
      j["worst_case"] = {{"sides", {w.sides[0], w.sides[1], w.sides[2]}},
                         {"p", detail::point_json(w.p)},
                         {"q", detail::point_json(w.q)},
                         {"stratum", to_string(w.stratum)},
                         {"index", w.index}};
    } else {
      j["worst_case"] = nullptr;
    }
    j["diagnostic"] = c.diagnostic;
    if (c.diagnostic) {
      j["pass"] = nullptr;
      ++diagnostics;
    } else {
      j["pass"] = c.pass;
      if (!c.pass) ++failed;
    }
    samples += c.samples;
    checks.push_back(std::move(j));
  }

  ordered_json summary;
  summary["checks"] = report.checks.size() - diagnostics;
  summary["failed"] = failed;
  summary["diagnostics"] = diagnostics;
  summary["samples"] = samples;
  summary["pass"] = failed == 0;

  ordered_json out;
  out["config"] = std::move(config);
  out["checks"] = std::move(checks);
  out["summary"] = std::move(summary);
  return out;
}

}  // namespace blundon::verify

#endif  // BLUNDON_VERIFY_HPP

#ifndef BLUNDON_CLI_HPP
#define BLUNDON_CLI_HPP

// Command-line front end. Every subcommand produces one flat record of
// named values which is rendered as human-readable lines, a single JSON
// object, or a CSV header plus one row. `verify` renders its report instead.
//
// Exit codes: 0 ok, 1 domain error, 2 usage error, 3 failing verify checks.

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "blundon/centers.hpp"
#include "blundon/engine.hpp"
#include "blundon/error.hpp"
#include "blundon/kernel.hpp"
#include "blundon/numeric_text.hpp"
#include "blundon/oracle.hpp"
#include "blundon/scalar.hpp"
#include "blundon/verify.hpp"

namespace blundon::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kVerifyFailed = 3 };

/// A value in an output record. Rationals print as "p/q" strings.
using Value = std::variant<double, long long, bool, std::string, Rational>;

struct Record {
  std::vector<std::pair<std::string, Value>> fields;

  template <class V>
  Record& add(std::string key, V value) {
    fields.emplace_back(std::move(key), Value(std::move(value)));
    return *this;
  }
  Record& add(std::string key, const char* value) { return add(std::move(key), std::string(value)); }
  Record& add(std::string key, int value) { return add(std::move(key), static_cast<long long>(value)); }
  Record& add(std::string key, long double value) { return add(std::move(key), static_cast<double>(value)); }
};

namespace detail {

inline std::string text_of(const Value& v) {
  return std::visit(blundon::detail::Overloaded{
                        [](double d) { return format_g17(d); },
                        [](long long i) { return std::to_string(i); },
                        [](bool b) { return std::string(b ? "true" : "false"); },
                        [](const std::string& s) { return s; },
                        [](const Rational& q) { return blundon::to_string(q); },
                    },
                    v);
}

inline nlohmann::ordered_json json_of(const Value& v) {
  return std::visit(blundon::detail::Overloaded{
                        [](double d) -> nlohmann::ordered_json {
                          if (std::isfinite(d)) return d;
                          return nullptr;
                        },
                        [](long long i) -> nlohmann::ordered_json { return i; },
                        [](bool b) -> nlohmann::ordered_json { return b; },
                        [](const std::string& s) -> nlohmann::ordered_json { return s; },
                        [](const Rational& q) -> nlohmann::ordered_json { return blundon::to_string(q); },
                    },
                    v);
}

inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace detail

inline void render(const Record& record, const std::string& format, std::ostream& out) {
  if (format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [key, value] : record.fields) j[key] = detail::json_of(value);
    out << j.dump() << '\n';
  } else if (format == "csv") {
    for (std::size_t i = 0; i < record.fields.size(); ++i) out << (i ? "," : "") << record.fields[i].first;
    out << '\n';
    for (std::size_t i = 0; i < record.fields.size(); ++i) {
      out << (i ? "," : "") << detail::csv_cell(detail::text_of(record.fields[i].second));
    }
    out << '\n';
  } else {
    std::size_t width = 0;
    for (const auto& f : record.fields) width = std::max(width, f.first.size());
    for (const auto& [key, value] : record.fields) {
      out << key << std::string(width - key.size() + 2, ' ') << detail::text_of(value) << '\n';
    }
  }
}

/// Thrown for malformed input that is not a geometry problem.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string sides;
  std::string p, q, p1, p2, p3;
  std::string format = "human";
  bool exact = false;
  std::size_t count = 1000;
  std::uint64_t seed = 0;
  std::string suite = "all";
  std::string strata = "uniform,near_degenerate,near_equilateral,isosceles,integer_sides";
  double tolerance_scale = 1.0;
  std::string corpus;
  unsigned threads = 1;
};

template <Scalar T>
TriangleSides<T> parse_sides(const std::string& text) {
  const auto v = parse_number_list<T>(text, 3);
  return TriangleSides<T>(v[0], v[1], v[2]);
}

template <Scalar T>
BaryPoint<T> parse_point(const std::string& spec, const TriangleSides<T>& sides) {
  return resolve(parse_center_spec<T>(spec), sides);
}

// ---------------------------------------------------------------------------
// Subcommands

inline Record derive_float(const Options& opt) {
  const auto sides = parse_sides<long double>(opt.sides);
  const auto e = derive_elements(sides);
  const long double gap = e.R - 2 * e.r;
  const long double root = std::sqrt(std::max(0.0L, e.R * e.R - 2 * e.R * e.r));
  const long double centre = 2 * e.R * e.R + 10 * e.R * e.r - e.r * e.r;
  Record r;
  r.add("a", e.a).add("b", e.b).add("c", e.c);
  r.add("s", e.s).add("area", e.area).add("R", e.R).add("r", e.r);
  r.add("r_a", e.r_a).add("r_b", e.r_b).add("r_c", e.r_c);
  r.add("S2", e.sum_of_squares());
  r.add("euler_gap", gap);
  r.add("equilateral", gap <= 1e-12L * e.R);
  r.add("s_sq", e.s * e.s);
  r.add("s_sq_lower", centre - 2 * gap * root);
  r.add("s_sq_upper", centre + 2 * gap * root);
  r.add("fundamental_residual", closed_form::fundamental_residual(e));
  return r;
}

inline Record derive_exact(const Options& opt) {
  const auto sides = parse_sides<Rational>(opt.sides);
  const auto e = derive_squared_elements(sides);
  Record r;
  r.add("a", sides.a()).add("b", sides.b()).add("c", sides.c());
  r.add("s", e.s).add("area_sq", e.area_sq).add("R_sq", e.R_sq).add("r_sq", e.r_sq);
  r.add("r_a_sq", e.r_a_sq).add("r_b_sq", e.r_b_sq).add("r_c_sq", e.r_c_sq);
  r.add("S2", Rational(e.a2 + e.b2 + e.c2));
  // R = 2r iff R^2 = 4 r^2.
  r.add("equilateral", e.R_sq == 4 * e.r_sq);
  return r;
}

template <Scalar T>
Record center_record(const Options& opt) {
  const auto sides = parse_sides<T>(opt.sides);
  const auto spec = parse_center_spec<T>(opt.p);
  const auto p = resolve(spec, sides);
  const auto n = p.normalized();
  Record r;
  r.add("spec", blundon::to_string(spec));
  r.add("t1", p[0]).add("t2", p[1]).add("t3", p[2]);
  r.add("sum", p.sum());
  r.add("u1", n[0]).add("u2", n[1]).add("u3", n[2]);
  r.add("circum_power", circum_power(p, sides));
  r.add("op_sq", circumcenter_dist_sq(p, sides));
  r.add("raw", "raw:" + [&] {
    std::string out;
    for (int i = 0; i < 3; ++i) {
      if (i) out += ',';
      if constexpr (FloatingScalar<T>) {
        out += format_g17(static_cast<double>(p[i]));
      } else {
        out += blundon::to_string(p[i]);
      }
    }
    return out;
  }());
  return r;
}

template <Scalar T>
struct AngleOutcome {
  Record record;
  bool undefined = false;
};

template <Scalar T>
AngleOutcome<T> cos_record(const Options& opt, bool bounds_only) {
  const auto sides = parse_sides<T>(opt.sides);
  const auto p = parse_point(opt.p, sides);
  const auto q = parse_point(opt.q, sides);
  const auto terms = angle_terms(p, q, sides);
  const auto report = make_angle_report(terms);
  Record r;
  if (!bounds_only) r.add("cos", report.cos_value);
  r.add("op_sq", terms.op_sq).add("oq_sq", terms.oq_sq).add("pq_sq", terms.pq_sq);
  r.add("R_sq", terms.R_sq);
  if (bounds_only) {
    const T middle = bound_middle_expanded(p, q, sides);
    r.add("lower", report.bounds.lower);
    r.add("middle", middle);
    r.add("upper", report.bounds.upper);
    r.add("holds", report.bounds.violation() <= 1e-12 * to_double(terms.R_sq));
    r.add("slack_lower", report.bounds.middle - report.bounds.lower);
    r.add("slack_upper", report.bounds.upper - report.bounds.middle);
  } else {
    r.add("lower", report.bounds.lower).add("middle", report.bounds.middle).add("upper", report.bounds.upper);
  }
  r.add("classification", std::string(to_string(report.classification)));
  return {r, !report.defined()};
}

template <Scalar T>
Record triple_record(const Options& opt) {
  const auto sides = parse_sides<T>(opt.sides);
  const auto p1 = parse_point(opt.p1, sides);
  const auto p2 = parse_point(opt.p2, sides);
  const auto p3 = parse_point(opt.p3, sides);
  const auto report = triple_angle(p1, p2, p3, sides);
  Record r;
  r.add("cos", report.cos_value);
  r.add("d12_sq", report.d12_sq).add("d23_sq", report.d23_sq).add("d31_sq", report.d31_sq);
  r.add("lower", report.bounds.lower).add("middle", report.bounds.middle).add("upper", report.bounds.upper);
  r.add("alternate_expansion_cos", alternate::triple_cos(p1, p2, p3, sides));
  return r;
}

inline std::vector<std::array<double, 3>> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--corpus: cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw UsageError("--corpus: empty file");
  const auto header = split(line, ',');
  std::array<int, 3> column{-1, -1, -1};
  for (std::size_t i = 0; i < header.size(); ++i) {
    const std::string name = blundon::detail::lowercase(blundon::detail::trim(header[i]));
    if (name == "a") column[0] = static_cast<int>(i);
    if (name == "b") column[1] = static_cast<int>(i);
    if (name == "c") column[2] = static_cast<int>(i);
  }
  if (column[0] < 0 || column[1] < 0 || column[2] < 0) {
    throw UsageError("--corpus: header must name columns a,b,c");
  }
  std::vector<std::array<double, 3>> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (blundon::detail::trim(line).empty()) continue;
    const auto cells = split(line, ',');
    std::array<double, 3> sides{};
    for (int k = 0; k < 3; ++k) {
      if (static_cast<std::size_t>(column[k]) >= cells.size()) {
        throw UsageError("--corpus: line " + std::to_string(line_no) + " has too few columns");
      }
      try {
        sides[k] = parse_number<double>(cells[column[k]]);
      } catch (const GeometryError&) {
        throw UsageError("--corpus: line " + std::to_string(line_no) + " has a non-numeric side");
      }
    }
    try {
      TriangleSides<double>(sides[0], sides[1], sides[2]);
    } catch (const GeometryError& e) {
      throw GeometryError(e.kind(), "--corpus line " + std::to_string(line_no));
    }
    rows.push_back(sides);
  }
  if (rows.empty()) throw UsageError("--corpus: no data rows");
  return rows;
}

inline verify::FuzzConfig fuzz_config(const Options& opt) {
  verify::FuzzConfig cfg;
  if (opt.count == 0) throw UsageError("--count must be positive");
  if (!(opt.tolerance_scale > 0)) throw UsageError("--tolerance-scale must be positive");
  cfg.count = opt.count;
  cfg.seed = opt.seed;
  cfg.tolerance_scale = opt.tolerance_scale;
  cfg.threads = std::max(1u, opt.threads);
  if (opt.suite != "all") {
    cfg.suites.clear();
    for (auto s : verify::all_suites()) {
      if (verify::to_string(s) == opt.suite) cfg.suites.push_back(s);
    }
  }
  cfg.strata.clear();
  for (const auto& name : split(opt.strata, ',')) {
    const std::string wanted(blundon::detail::trim(name));
    bool found = false;
    for (auto s : verify::generated_strata()) {
      if (verify::to_string(s) == wanted) {
        cfg.strata.push_back(s);
        found = true;
      }
    }
    if (!found) throw UsageError("--strata: unknown stratum '" + wanted + "'");
  }
  if (!opt.corpus.empty()) {
    cfg.corpus = load_corpus(opt.corpus);
    cfg.strata.push_back(verify::Stratum::Corpus);
  }
  return cfg;
}

inline void render_report(const verify::VerificationReport& report, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << verify::to_json(report).dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    out << "name,samples,skipped,nan_samples,max_abs_residual,max_rel_residual,max_tolerance_ratio,pass\n";
    for (const auto& c : report.checks) {
      out << c.name << ',' << c.samples << ',' << c.skipped << ',' << c.nan_samples << ','
          << format_g17(c.max_abs_residual) << ',' << format_g17(c.max_rel_residual) << ','
          << (c.diagnostic ? "" : format_g17(c.max_tolerance_ratio)) << ','
          << (c.diagnostic ? "diagnostic" : (c.pass ? "true" : "false")) << '\n';
    }
    return;
  }
  std::size_t failed = 0;
  for (const auto& c : report.checks) {
    const char* tag = c.diagnostic ? "INFO" : (c.pass ? "PASS" : "FAIL");
    if (!c.diagnostic && !c.pass) ++failed;
    char line[256];
    std::snprintf(line, sizeof line, "%-4s  %-40s  n=%-9zu  max_rel=%-12.4g", tag, c.name.c_str(), c.samples,
                  c.max_rel_residual);
    out << line;
    if (!c.diagnostic) {
      std::snprintf(line, sizeof line, "  used=%.3g of tol", c.max_tolerance_ratio);
      out << line;
    } else if (c.nan_samples) {
      out << "  nan=" << c.nan_samples;
    }
    out << '\n';
  }
  out << (failed ? "FAILED " : "passed ") << (report.checks.size()) << " checks, " << failed << " failing\n";
}

// ---------------------------------------------------------------------------

/// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Barycentric triangle geometry: distances, angles at the circumcenter, Blundon-type bounds",
               "blundon"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Options opt;
  const std::vector<std::string> formats{"human", "json", "csv"};
  auto add_common = [&](CLI::App* sub, bool sides_required) {
    auto* s = sub->add_option("--sides", opt.sides, "side lengths a,b,c");
    if (sides_required) s->required();
    sub->add_option("--format", opt.format, "human|json|csv")->check(CLI::IsMember(formats));
  };
  auto add_exact = [&](CLI::App* sub) {
    sub->add_flag("--exact", opt.exact, "squared quantities in exact rational arithmetic");
  };

  auto* derive = app.add_subcommand("derive", "triangle elements from side lengths");
  add_common(derive, true);
  add_exact(derive);

  auto* center = app.add_subcommand("center", "barycentric coordinates of a center");
  add_common(center, true);
  add_exact(center);
  center->add_option("--p,--spec", opt.p, "center spec")->required();

  auto* cos = app.add_subcommand("cos", "cosine of the angle POQ at the circumcenter");
  add_common(cos, true);
  add_exact(cos);
  cos->add_option("--p", opt.p, "center spec")->required();
  cos->add_option("--q", opt.q, "center spec")->required();

  auto* bounds = app.add_subcommand("bounds", "bound chain -2 OP OQ <= OP^2 + OQ^2 - PQ^2 <= 2 OP OQ");
  add_common(bounds, true);
  add_exact(bounds);
  bounds->add_option("--p", opt.p, "center spec")->required();
  bounds->add_option("--q", opt.q, "center spec")->required();

  auto* triple = app.add_subcommand("triple", "cosine of the angle P1 P2 P3 at P2");
  add_common(triple, true);
  add_exact(triple);
  triple->add_option("--p1", opt.p1, "center spec")->required();
  triple->add_option("--p2", opt.p2, "center spec")->required();
  triple->add_option("--p3", opt.p3, "center spec")->required();

  auto* verify_cmd = app.add_subcommand("verify", "seeded fuzz campaign against the plane oracle");
  std::string verify_format = "json";
  verify_cmd->add_option("--format", verify_format, "human|json|csv (default json)")->check(CLI::IsMember(formats));
  verify_cmd->add_option("--count", opt.count, "triangles per stratum");
  verify_cmd->add_option("--seed", opt.seed, "seed");
  verify_cmd->add_option("--suite", opt.suite, "classical|dual|cevian|kernel|all")
      ->check(CLI::IsMember({"classical", "dual", "cevian", "kernel", "all"}));
  verify_cmd->add_option("--strata", opt.strata, "comma-separated generated strata");
  verify_cmd->add_option("--tolerance-scale", opt.tolerance_scale, "multiplier on every tolerance");
  verify_cmd->add_option("--corpus", opt.corpus, "CSV of side triples with header a,b,c");
  verify_cmd->add_option("--threads", opt.threads, "worker threads");

  std::vector<std::string> argv_store{"blundon"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*verify_cmd) {
      const auto report = verify::run_fuzz(fuzz_config(opt));
      render_report(report, verify_format, out);
      return report.passed() ? kOk : kVerifyFailed;
    }
    if (*derive) {
      render(opt.exact ? derive_exact(opt) : derive_float(opt), opt.format, out);
      return kOk;
    }
    if (*center) {
      render(opt.exact ? center_record<Rational>(opt) : center_record<double>(opt), opt.format, out);
      return kOk;
    }
    if (*cos || *bounds) {
      const bool only_bounds = bounds->parsed();
      Record r;
      bool undefined = false;
      if (opt.exact) {
        auto o = cos_record<Rational>(opt, only_bounds);
        r = std::move(o.record);
        undefined = o.undefined;
      } else {
        auto o = cos_record<double>(opt, only_bounds);
        r = std::move(o.record);
        undefined = o.undefined;
      }
      render(r, opt.format, out);
      if (undefined && !only_bounds) {
        err << "error: UndefinedAngle: a point coincides with the circumcenter\n";
        return kDomainError;
      }
      return kOk;
    }
    if (*triple) {
      render(opt.exact ? triple_record<Rational>(opt) : triple_record<double>(opt), opt.format, out);
      return kOk;
    }
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << '\n';
    const bool usage = e.kind() == ErrorKind::InvalidCenterSpec || e.kind() == ErrorKind::InexactValue;
    return usage ? kUsageError : kDomainError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace blundon::cli

#endif  // BLUNDON_CLI_HPP

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "twistalg/algebra.hpp"
#include "twistalg/io.hpp"
#include "twistalg/twist.hpp"

namespace twistalg {

// Numerical exploration of products of truncated square-summable sequences.

inline constexpr std::uint64_t kDefaultSeed = 20030101;
inline constexpr std::size_t kDefaultTrials = 64;
inline constexpr unsigned kMaxOrthogonalityExponent = 6;
inline constexpr unsigned kMaxGrowthExponent = 12;
inline constexpr double kOrthogonalityTolerance = 1e-12;

/// Uniform double in [-1, 1) from the top 53 bits of a 64-bit draw; used
/// instead of std::uniform_real_distribution so output is the same on every
/// standard library.
inline double uniform_signed(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
}

inline Element random_element(std::size_t dimension, std::mt19937_64& rng) {
  std::vector<double> c(dimension);
  for (auto& v : c) v = uniform_signed(rng);
  return Element(std::move(c));
}

struct DecayProfile {
  enum class Kind { Geometric, PowerLaw };
  Kind kind = Kind::Geometric;
  double parameter = 0.5;  // ratio r for geometric, exponent s for power law

  static DecayProfile geometric(double ratio) {
    if (!(std::abs(ratio) < 1.0))
      throw Error(ErrorCode::InvalidArgument, "geometric decay needs |r| < 1");
    return {Kind::Geometric, ratio};
  }
  static DecayProfile power_law(double exponent) {
    if (!(exponent > 0.5))
      throw Error(ErrorCode::InvalidArgument, "power-law decay needs s > 1/2");
    return {Kind::PowerLaw, exponent};
  }

  double envelope(std::size_t p) const {
    if (kind == Kind::Geometric) return std::pow(parameter, static_cast<double>(p));
    return std::pow(static_cast<double>(p + 1), -parameter);
  }

  std::string label() const {
    return (kind == Kind::Geometric ? "geometric:" : "power:") + format_number(parameter);
  }
};

/// An l2 sequence truncated after 2^n terms.
struct TruncatedSequence {
  Element values;
  DecayProfile profile;

  TruncatedSequence truncate(unsigned n) const {
    const auto len = dyadic_order(n);
    if (len > values.size())
      throw Error(ErrorCode::DimensionMismatch, "cannot extend a truncated sequence");
    std::vector<double> head(values.coeffs().begin(), values.coeffs().begin() + static_cast<long>(len));
    return {Element(std::move(head)), profile};
  }
};

/// x_p = envelope(p) * u_p with u_p uniform in [-1, 1).
inline TruncatedSequence random_sequence(const DecayProfile& profile, unsigned n,
                                         std::mt19937_64& rng) {
  std::vector<double> c(dyadic_order(n));
  for (std::size_t p = 0; p < c.size(); ++p) c[p] = profile.envelope(p) * uniform_signed(rng);
  return {Element(std::move(c)), profile};
}

struct ExperimentReport {
  std::string experiment;
  std::string product;
  std::string profile;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  bool exploratory = false;
  bool passed = true;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> verdicts;

  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;

  /// Concatenates the rows and verdicts of another run of the same experiment.
  void append(const ExperimentReport& other) {
    rows.insert(rows.end(), other.rows.begin(), other.rows.end());
    verdicts.insert(verdicts.end(), other.verdicts.begin(), other.verdicts.end());
    passed = passed && other.passed;
  }

  double column(std::size_t row, std::string_view name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw Error(ErrorCode::InvalidArgument, "no column " + std::string(name));
    return rows.at(row).at(static_cast<std::size_t>(it - columns.begin()));
  }
};

/// For random x in the n-th Cayley-Dickson algebra, the largest
/// |<i_p x, i_q x>| / |x|^2 over 0 != p != q != 0, plus the (2,5) witness.
inline ExperimentReport orthogonality_scan(unsigned n, std::size_t trials, std::uint64_t seed) {
  require_exponent(n, kMaxOrthogonalityExponent, "orthogonality scan");
  const auto ctx = AlgebraContext::dyadic(TwistKind::CayleyDickson, n);
  const auto dim = static_cast<GroupElement>(ctx.dimension());
  const bool has_witness = dim > 5;
  std::mt19937_64 rng(seed);

  double max_ratio = 0.0;
  double sum_ratio = 0.0;
  double witness_max = 0.0;
  std::size_t witness_nonzero = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto x = random_element(dim, rng);
    const double n2 = norm_squared(x);
    std::vector<Element> images;
    images.reserve(dim);
    for (GroupElement p = 0; p < dim; ++p) images.push_back(left_basis_mul(ctx, p, x));
    double trial_max = 0.0;
    for (GroupElement p = 1; p < dim; ++p)
      for (GroupElement q = p + 1; q < dim; ++q)
        trial_max = std::max(trial_max, std::abs(inner(images[p], images[q])) / n2);
    max_ratio = std::max(max_ratio, trial_max);
    sum_ratio += trial_max;
    if (has_witness) {
      const double w = std::abs(inner(images[2], images[5])) / n2;
      witness_max = std::max(witness_max, w);
      if (w > kOrthogonalityTolerance) ++witness_nonzero;
    }
  }

  ExperimentReport report;
  report.experiment = "orthogonality";
  report.product = "cyd";
  report.profile = "uniform";
  report.trials = trials;
  report.seed = seed;
  report.columns = {"n", "max_ratio", "mean_ratio", "witness_2_5_max", "witness_2_5_nonzero"};
  report.rows.push_back({static_cast<double>(n), max_ratio,
                         trials ? sum_ratio / static_cast<double>(trials) : 0.0, witness_max,
                         static_cast<double>(witness_nonzero)});
  std::ostringstream verdict;
  if (n < 4) {
    report.passed = max_ratio <= kOrthogonalityTolerance;
    verdict << "n=" << n << ": max ratio " << format_number(max_ratio)
            << (report.passed ? " <= 1e-12, family i_p x is orthogonal"
                              : " exceeds 1e-12, orthogonality FAILED");
  } else {
    verdict << "n=" << n << ": <i_2 x, i_5 x> nonzero in " << witness_nonzero << " of " << trials
            << " trials (max ratio " << format_number(witness_max) << ")";
  }
  report.verdicts.push_back(verdict.str());
  return report;
}

/// What multiplies two sequences in norm_growth.
struct GrowthProduct {
  bool convolution = true;
  TwistKind twist = TwistKind::Trivial;

  static GrowthProduct dyadic_convolution() { return {true, TwistKind::Trivial}; }
  static GrowthProduct twisted(TwistKind kind) { return {false, kind}; }

  std::string name() const { return convolution ? "convolution" : std::string(to_string(twist)); }
};

/// Ratio |x . y| / (|x| |y|) for random decaying sequences, truncated at
/// 2^n terms for n in [n_min, n_max]. Each trial draws one pair of length
/// 2^n_max and truncates it, so rows follow the same sequences as n grows.
inline ExperimentReport norm_growth(GrowthProduct product, unsigned n_min, unsigned n_max,
                                    const DecayProfile& profile, std::size_t trials,
                                    std::uint64_t seed) {
  require_exponent(n_max, kMaxGrowthExponent, "norm growth");
  if (n_min > n_max) throw Error(ErrorCode::InvalidArgument, "n_min exceeds n_max");
  if (!product.convolution && product.twist == TwistKind::Table)
    throw Error(ErrorCode::UnsupportedTwist, "norm growth needs a named twist");

  std::mt19937_64 rng(seed);
  std::vector<std::pair<TruncatedSequence, TruncatedSequence>> pairs;
  pairs.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    auto x = random_sequence(profile, n_max, rng);
    auto y = random_sequence(profile, n_max, rng);
    pairs.emplace_back(std::move(x), std::move(y));
  }

  ExperimentReport report;
  report.experiment = "norm-growth";
  report.product = product.name();
  report.profile = profile.label();
  report.trials = trials;
  report.seed = seed;
  report.exploratory = true;
  report.columns = {"n", "mean_ratio", "min_ratio", "max_ratio"};

  std::vector<double> means;
  for (unsigned n = n_min; n <= n_max; ++n) {
    std::optional<AlgebraContext> ctx;
    if (!product.convolution) ctx.emplace(AlgebraContext::dyadic(product.twist, n));
    double sum = 0.0;
    double lo = trials ? INFINITY : 0.0;
    double hi = 0.0;
    for (const auto& [xs, ys] : pairs) {
      const auto x = xs.truncate(n).values;
      const auto y = ys.truncate(n).values;
      const auto prod = product.convolution ? convolution(x, y) : mul(*ctx, x, y);
      const double denom = norm(x) * norm(y);
      const double ratio = denom > 0.0 ? norm(prod) / denom : 0.0;
      sum += ratio;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    const double mean = trials ? sum / static_cast<double>(trials) : 0.0;
    means.push_back(mean);
    report.rows.push_back({static_cast<double>(n), mean, lo, hi});
  }

  const bool non_decreasing = std::is_sorted(means.begin(), means.end());
  const bool non_increasing = std::is_sorted(means.rbegin(), means.rend());
  report.verdicts.push_back("exploratory - no acceptance threshold");
  report.verdicts.push_back(std::string("mean ratio trend over n: ") +
                            (non_decreasing && non_increasing ? "constant"
                             : non_decreasing                ? "monotone non-decreasing"
                             : non_increasing                ? "monotone non-increasing"
                                                             : "not monotone"));
  return report;
}

/// |x^2| <= 2|x_0||x| + |x|^2, a consequence of x^2 = 2 x_0 x - |x|^2.
/// Returns the slack (right side minus left side).
inline double square_bound_slack(const AlgebraContext& ctx, const Element& x) {
  ctx.require_cayley_dickson("square_bound_slack");
  const double nx = norm(x);
  return 2.0 * std::abs(x[0]) * nx + nx * nx - norm(mul(ctx, x, x));
}

/// Largest |[x,y]_r| - 2 (|x| * |y|)_r over r, where |.| is entrywise and *
/// is dyadic convolution; non-positive when the bound holds everywhere.
inline double commutator_bound_excess(const AlgebraContext& ctx, const Element& x, const Element& y) {
  const auto c = commutator(ctx, x, y);
  std::vector<double> ax(x.size()), ay(y.size());
  for (std::size_t p = 0; p < x.size(); ++p) {
    ax[p] = std::abs(x[p]);
    ay[p] = std::abs(y[p]);
  }
  const auto bound = convolution(Element(std::move(ax)), Element(std::move(ay)));
  double worst = -INFINITY;
  for (std::size_t r = 0; r < c.size(); ++r) worst = std::max(worst, std::abs(c[r]) - 2.0 * bound[r]);
  return worst;
}

// ---------------------------------------------------------------------------
// Output

inline json report_to_json(const ExperimentReport& r) {
  return json{{"experiment", r.experiment}, {"product", r.product},  {"profile", r.profile},
              {"trials", r.trials},         {"seed", r.seed},        {"exploratory", r.exploratory},
              {"passed", r.passed},         {"columns", r.columns},  {"rows", r.rows},
              {"verdicts", r.verdicts}};
}

inline ExperimentReport experiment_report_from_json(const json& j) {
  try {
    ExperimentReport r;
    r.experiment = j.at("experiment").get<std::string>();
    r.product = j.at("product").get<std::string>();
    r.profile = j.at("profile").get<std::string>();
    r.trials = j.at("trials").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.exploratory = j.at("exploratory").get<bool>();
    r.passed = j.at("passed").get<bool>();
    r.columns = j.at("columns").get<std::vector<std::string>>();
    r.rows = j.at("rows").get<std::vector<std::vector<double>>>();
    r.verdicts = j.at("verdicts").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, e.what());
  }
}

/// Aligned-column text table followed by the verdict lines.
inline std::string format_report(const ExperimentReport& r) {
  std::ostringstream out;
  out << r.experiment << "  product=" << r.product << "  profile=" << r.profile
      << "  trials=" << r.trials << "  seed=" << r.seed << '\n';
  std::vector<std::vector<std::string>> cells;
  cells.push_back(r.columns);
  for (const auto& row : r.rows) {
    auto& line = cells.emplace_back();
    for (double v : row) line.push_back(format_number(v));
  }
  std::vector<std::size_t> width(r.columns.size(), 0);
  for (const auto& line : cells)
    for (std::size_t c = 0; c < line.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], line[c].size());
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c)
      out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << line[c];
    out << '\n';
  }
  for (const auto& v : r.verdicts) out << "# " << v << '\n';
  return out.str();
}

}  // namespace twistalg

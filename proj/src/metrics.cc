// Copyright 2026 The Surrograph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "surrograph/metrics.h"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "json.hpp"
#include "surrograph/error.h"
#include "surrograph/format.h"
#include "surrograph/parallel.h"

namespace surrograph {

Ccdf degree_ccdf(const PropertyGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw InputError("degree CCDF of an empty graph");
  std::size_t max_degree = 0;
  for (VertexId v = 0; v < n; ++v) max_degree = std::max(max_degree, g.degree(v));
  std::vector<std::size_t> at_least(max_degree + 2, 0);
  for (VertexId v = 0; v < n; ++v) ++at_least[g.degree(v)];
  for (std::size_t d = max_degree + 1; d-- > 0;) at_least[d] += at_least[d + 1];
  Ccdf out;
  out.values.resize(max_degree + 1);
  for (std::size_t d = 0; d <= max_degree; ++d) {
    out.values[d] = static_cast<double>(at_least[d]) / static_cast<double>(n);
  }
  return out;
}

double nrmse(const Ccdf& source, const Ccdf& target) {
  const std::size_t top = std::max(source.max_degree(), target.max_degree());
  double lo = source.at(0);
  double hi = source.at(0);
  double sq = 0.0;
  for (std::size_t d = 0; d <= top; ++d) {
    const double s = source.at(d);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
    const double diff = s - target.at(d);
    sq += diff * diff;
  }
  // Identical CCDFs score 0 even when the range is degenerate (edgeless graphs).
  if (sq == 0.0) return 0.0;
  if (!(hi > lo)) {
    throw InputError("NRMSE undefined: source CCDF is constant on the grid");
  }
  return std::sqrt(sq / static_cast<double>(top + 1)) / (hi - lo);
}

double degree_nrmse(const PropertyGraph& source, const PropertyGraph& target) {
  return nrmse(degree_ccdf(source), degree_ccdf(target));
}

CommunityConcordance compare_communities(std::span<const std::size_t> source_sizes,
                                         std::span<const std::size_t> target_sizes) {
  std::vector<std::size_t> a(source_sizes.begin(), source_sizes.end());
  std::vector<std::size_t> b(target_sizes.begin(), target_sizes.end());
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  CommunityConcordance out;
  out.count_difference = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
  const std::size_t k = std::max(a.size(), b.size());
  a.resize(k, 0);
  b.resize(k, 0);
  for (std::size_t i = 0; i < k; ++i) out.size_l1 += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
  return out;
}

CommunityConcordance compare_communities(const CommunityAssignment& source,
                                         const CommunityAssignment& target) {
  const auto a = source.sizes();
  const auto b = target.sizes();
  return compare_communities(a, b);
}

HomophilySample homophily_proportion(const PropertyGraph& g, std::string_view attribute,
                                     std::span<const std::string> targets) {
  const auto k = g.schema().index_of(attribute);
  if (!k) throw InputError("unknown attribute '" + std::string(attribute) + "'");
  const Label& label = g.schema()[*k];
  std::vector<bool> is_target(label.domain.size(), false);
  for (const auto& t : targets) {
    if (auto idx = label.find_value(t)) is_target[*idx] = true;
  }
  HomophilySample out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto nbrs = g.neighbors(v);
    if (nbrs.empty()) {
      ++out.isolated_excluded;
      continue;
    }
    const std::uint32_t mine = g.label(v, *k);
    std::size_t same = 0;
    for (VertexId u : nbrs) same += g.label(u, *k) == mine;
    out.vertices.push_back(v);
    out.proportion.push_back(static_cast<double>(same) / static_cast<double>(nbrs.size()));
    out.outcome.push_back(is_target[mine] ? 1 : 0);
  }
  return out;
}

namespace {

double sigmoid(double eta) {
  if (eta >= 0) return 1.0 / (1.0 + std::exp(-eta));
  const double e = std::exp(eta);
  return e / (1.0 + e);
}

void check_sample(std::span<const int> y, std::span<const double> x) {
  if (y.size() != x.size()) throw InputError("outcome and predictor lengths differ");
  if (y.size() < 2) throw InputError("regression needs at least 2 observations");
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  if (*lo == *hi) throw InputError("regression predictor is constant");
}

}  // namespace

double logistic_log_likelihood(std::span<const int> y, std::span<const double> x,
                               double b0, double b1) {
  double ll = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double eta = b0 + b1 * x[i];
    // log(1 + e^eta) without overflow.
    const double softplus = std::max(eta, 0.0) + std::log1p(std::exp(-std::abs(eta)));
    ll += y[i] * eta - softplus;
  }
  return ll;
}

std::array<double, 2> logistic_gradient(std::span<const int> y,
                                        std::span<const double> x, double b0,
                                        double b1) {
  std::array<double, 2> grad{0.0, 0.0};
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double r = y[i] - sigmoid(b0 + b1 * x[i]);
    grad[0] += r;
    grad[1] += r * x[i];
  }
  return grad;
}

RegressionResult fit_homophily_regression(std::span<const int> y,
                                          std::span<const double> x) {
  check_sample(y, x);
  RegressionResult out;

  // In one dimension the MLE exists iff the two outcome groups overlap
  // strictly in x.
  double x0_lo = INFINITY, x0_hi = -INFINITY, x1_lo = INFINITY, x1_hi = -INFINITY;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i]) {
      x1_lo = std::min(x1_lo, x[i]);
      x1_hi = std::max(x1_hi, x[i]);
    } else {
      x0_lo = std::min(x0_lo, x[i]);
      x0_hi = std::max(x0_hi, x[i]);
    }
  }
  if (std::isinf(x0_lo) || std::isinf(x1_lo)) {
    out.diagnostic = "outcome is constant; maximum likelihood estimate does not exist";
    return out;
  }
  if (!(x0_hi > x1_lo && x1_hi > x0_lo)) {
    out.diagnostic = "outcome is separated by the predictor; maximum likelihood "
                     "estimate does not exist";
    return out;
  }

  constexpr int kMaxIterations = 50;
  constexpr double kGradientTolerance = 1e-8;
  // Two-sided 95% standard-normal quantile.
  constexpr double kNormalQuantile975 = 1.959963984540054;
  double b0 = 0.0, b1 = 0.0;
  double i00 = 0.0, i01 = 0.0, i11 = 0.0;
  auto information = [&] {
    i00 = i01 = i11 = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      const double p = sigmoid(b0 + b1 * x[i]);
      const double w = p * (1.0 - p);
      i00 += w;
      i01 += w * x[i];
      i11 += w * x[i] * x[i];
    }
  };

  for (int iter = 0; iter <= kMaxIterations; ++iter) {
    const auto grad = logistic_gradient(y, x, b0, b1);
    information();
    out.iterations = iter;
    if (std::max(std::abs(grad[0]), std::abs(grad[1])) <= kGradientTolerance) {
      out.converged = true;
      break;
    }
    if (iter == kMaxIterations) break;
    const double det = i00 * i11 - i01 * i01;
    if (!(det > 0.0) || !std::isfinite(det)) break;
    b0 += (i11 * grad[0] - i01 * grad[1]) / det;
    b1 += (i00 * grad[1] - i01 * grad[0]) / det;
  }

  out.intercept = b0;
  out.slope = b1;
  const double det = i00 * i11 - i01 * i01;
  out.intercept_se = std::sqrt(i11 / det);
  out.slope_se = std::sqrt(i00 / det);
  out.odds_ratio = std::exp(b1);
  out.ci_low = std::exp(b1 - kNormalQuantile975 * out.slope_se);
  out.ci_high = std::exp(b1 + kNormalQuantile975 * out.slope_se);
  if (!out.converged) {
    out.diagnostic = "Newton iterations did not reach the gradient tolerance";
  }
  return out;
}

RegressionResult fit_homophily(const PropertyGraph& g, const HomophilyModel& model) {
  const auto sample = homophily_proportion(g, model.attribute, model.targets);
  return fit_homophily_regression(sample.outcome, sample.proportion);
}

ReplicationResult replicate_regression(const PropertyGraph& source,
                                       const SurrogatePipeline& pipeline,
                                       const HomophilyModel& model,
                                       std::size_t n_replicates,
                                       std::uint64_t base_seed, unsigned jobs) {
  if (n_replicates < 2) throw InputError("replication needs at least 2 replicates");
  ReplicationResult out;
  out.fits.resize(n_replicates);
  out.excluded.assign(n_replicates, false);
  for (std::size_t i = 0; i < n_replicates; ++i) out.seeds.push_back(base_seed + i);

  parallel_for(n_replicates, jobs, [&](std::size_t i) {
    try {
      out.fits[i] = fit_homophily(pipeline(source, out.seeds[i]), model);
    } catch (const InputError& e) {
      out.fits[i] = RegressionResult{};
      out.fits[i].diagnostic = e.what();
    }
  });

  std::vector<double> ors;
  for (std::size_t i = 0; i < n_replicates; ++i) {
    if (!out.fits[i].converged) {
      out.excluded[i] = true;
      out.any_excluded = true;
    } else {
      ors.push_back(out.fits[i].odds_ratio);
    }
  }
  out.used = ors.size();
  if (!ors.empty()) {
    double sum = 0.0;
    for (double v : ors) sum += v;
    out.mean_odds_ratio = sum / static_cast<double>(ors.size());
  }
  if (ors.size() >= 2) {
    double ss = 0.0;
    for (double v : ors) ss += (v - out.mean_odds_ratio) * (v - out.mean_odds_ratio);
    out.sd_odds_ratio = std::sqrt(ss / static_cast<double>(ors.size() - 1));
  }
  return out;
}

FidelityReport compute_fidelity(const PropertyGraph& source,
                                const PropertyGraph& generated,
                                CommunityAlgorithm algorithm) {
  FidelityReport report;
  report.source_ccdf = degree_ccdf(source);
  report.generated_ccdf = degree_ccdf(generated);
  report.nrmse = nrmse(report.source_ccdf, report.generated_ccdf);
  if (algorithm != CommunityAlgorithm::kNone) {
    const auto a = detect_communities(source, algorithm).sizes();
    const auto b = generated.num_edges() > 0 || algorithm != CommunityAlgorithm::kFastGreedy
                       ? detect_communities(generated, algorithm).sizes()
                       : std::vector<std::size_t>(generated.num_vertices(), 1);
    report.concordance = compare_communities(a, b);
    report.source_community_sizes = a;
    report.generated_community_sizes = b;
  }
  return report;
}

namespace {

nlohmann::ordered_json regression_json(const RegressionResult& r) {
  nlohmann::ordered_json j;
  j["intercept"] = r.intercept;
  j["slope"] = r.slope;
  j["intercept_se"] = r.intercept_se;
  j["slope_se"] = r.slope_se;
  j["odds_ratio"] = r.odds_ratio;
  j["ci_low"] = r.ci_low;
  j["ci_high"] = r.ci_high;
  j["converged"] = r.converged;
  j["iterations"] = r.iterations;
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  return j;
}

}  // namespace

void write_fidelity_jsonl(std::ostream& out, const FidelityReport& report) {
  nlohmann::ordered_json j;
  j["record"] = "fidelity";
  j["nrmse"] = report.nrmse;
  j["nrmse_normalizer"] = "source_ccdf_range";
  j["ccdf_source"] = report.source_ccdf.values;
  j["ccdf_generated"] = report.generated_ccdf.values;
  if (report.concordance) {
    j["community_sizes_source"] = *report.source_community_sizes;
    j["community_sizes_generated"] = *report.generated_community_sizes;
    j["community_count_difference"] = report.concordance->count_difference;
    j["community_size_l1"] = report.concordance->size_l1;
  }
  if (report.source_regression) j["regression_source"] = regression_json(*report.source_regression);
  if (report.generated_regression) {
    j["regression_generated"] = regression_json(*report.generated_regression);
  }
  out << j.dump() << '\n';
}

namespace {

std::string join_sizes(const std::vector<std::size_t>& sizes) {
  std::string s;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(sizes[i]);
  }
  return s;
}

void regression_rows(std::ostream& out, const std::string& prefix,
                     const RegressionResult& r) {
  out << prefix << "_odds_ratio," << format_double(r.odds_ratio) << '\n'
      << prefix << "_ci_low," << format_double(r.ci_low) << '\n'
      << prefix << "_ci_high," << format_double(r.ci_high) << '\n'
      << prefix << "_converged," << (r.converged ? 1 : 0) << '\n';
}

}  // namespace

void write_fidelity_csv(std::ostream& out, const FidelityReport& report) {
  out << "key,value\n"
      << "nrmse," << format_double(report.nrmse) << '\n'
      << "nrmse_normalizer,source_ccdf_range\n"
      << "max_degree_source," << report.source_ccdf.max_degree() << '\n'
      << "max_degree_generated," << report.generated_ccdf.max_degree() << '\n';
  if (report.concordance) {
    out << "community_count_source," << report.source_community_sizes->size() << '\n'
        << "community_count_generated," << report.generated_community_sizes->size() << '\n'
        << "community_sizes_source," << join_sizes(*report.source_community_sizes) << '\n'
        << "community_sizes_generated," << join_sizes(*report.generated_community_sizes)
        << '\n'
        << "community_count_difference," << report.concordance->count_difference << '\n'
        << "community_size_l1," << report.concordance->size_l1 << '\n';
  }
  if (report.source_regression) regression_rows(out, "regression_source", *report.source_regression);
  if (report.generated_regression) {
    regression_rows(out, "regression_generated", *report.generated_regression);
  }
}

void write_ccdf_csv(std::ostream& out, const FidelityReport& report) {
  out << "d,ccdf_source,ccdf_generated\n";
  const std::size_t top =
      std::max(report.source_ccdf.max_degree(), report.generated_ccdf.max_degree());
  for (std::size_t d = 0; d <= top; ++d) {
    out << d << ',' << format_double(report.source_ccdf.at(d)) << ','
        << format_double(report.generated_ccdf.at(d)) << '\n';
  }
}

}  // namespace surrograph

#include "latticegen/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <boost/math/special_functions/gamma.hpp>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "latticegen/error.hpp"
#include "latticegen/oracles.hpp"

namespace latticegen {

namespace {

// Positive Schröder paths of length n or n−1, with weights 1 and r.
double mixed_length_entropy(std::size_t n) {
  const double r = std::numbers::sqrt2 - 1;
  const double full = log2_count(Model::Schroeder, PathKind::Positive, n);
  if (n == 0) return full;
  const double shorter = log2_count(Model::Schroeder, PathKind::Positive, n - 1);
  const double ratio = r * std::exp2(shorter - full);
  const double log2_total = full + std::log2(1 + ratio);
  return log2_total - ratio / (1 + ratio) * std::log2(r);
}

double colored_entropy(PathKind kind, std::size_t n, const Rational& c) {
  return log2_count(Model::ColoredMotzkin, kind, n, c) -
         expected_colored_steps(kind, n, c) * std::log2(c.get_d());
}

double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0;
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] * (1 - frac) + sorted[hi] * frac;
}

nlohmann::ordered_json summary_json(const Summary& s) {
  return {{"mean", s.mean}, {"stddev", s.stddev}, {"q05", s.q05}, {"median", s.median}, {"q95", s.q95}};
}

}  // namespace

double output_entropy_bits(const SamplerSpec& spec, std::size_t n) {
  validate(spec, n);
  const PathKind kind = spec.kind == Kind::Excursion ? PathKind::Excursion : PathKind::Positive;
  switch (spec.family) {
    case Family::Dyck:
    case Family::Motzkin:
      return log2_count(spec.model(), kind, n);
    case Family::ColoredMotzkin:
      return colored_entropy(kind, n, *spec.weight);
    case Family::Schroeder:
      if (spec.kind == Kind::Approximate || spec.method == Method::Florentine) {
        return mixed_length_entropy(n);
      }
      return log2_count(Model::Schroeder, kind, n);
    case Family::LittleSchroeder:
      return log2_count(Model::Schroeder,
                        kind == PathKind::Excursion ? PathKind::LittleExcursion : PathKind::LittlePositive, n);
  }
  return 0;
}

Summary summarize(std::span<const double> values) {
  Summary s;
  if (values.empty()) return s;
  double sum = 0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  double sq = 0;
  for (double v : values) sq += (v - s.mean) * (v - s.mean);
  s.stddev = values.size() > 1 ? std::sqrt(sq / static_cast<double>(values.size() - 1)) : 0.0;
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  s.q05 = quantile(sorted, 0.05);
  s.median = quantile(sorted, 0.5);
  s.q95 = quantile(sorted, 0.95);
  return s;
}

Summary FactorReport::time_factor() const {
  std::vector<double> v;
  v.reserve(trials.size());
  for (const auto& t : trials) v.push_back(t.time_factor);
  return summarize(v);
}

double FactorReport::mean_entropy_bits() const {
  double s = 0;
  for (const auto& t : trials) s += t.entropy_bits;
  return trials.empty() ? 0 : s / static_cast<double>(trials.size());
}

double FactorReport::mean_physical_bits() const {
  double s = 0;
  for (const auto& t : trials) s += static_cast<double>(t.physical_bits);
  return trials.empty() ? 0 : s / static_cast<double>(trials.size());
}

double FactorReport::mean_failed_accesses() const {
  double s = 0;
  for (const auto& t : trials) s += static_cast<double>(t.failed_accesses);
  return trials.empty() ? 0 : s / static_cast<double>(trials.size());
}

double FactorReport::first_try_rate() const {
  std::size_t ok = 0;
  for (const auto& t : trials) ok += t.restarts == 0 ? 1 : 0;
  return trials.empty() ? 0 : static_cast<double>(ok) / static_cast<double>(trials.size());
}

double FactorReport::entropy_factor() const { return mean_entropy_bits() / output_entropy_bits(spec, n); }

std::string FactorReport::csv() const {
  std::ostringstream out;
  out.precision(17);
  out << "trial,n,time_factor,entropy_bits,physical_bits,restarts\n";
  for (const auto& t : trials) {
    out << t.trial << ',' << t.n << ',' << t.time_factor << ',' << t.entropy_bits << ','
        << t.physical_bits << ',' << t.restarts << '\n';
  }
  return out.str();
}

std::string FactorReport::json() const {
  nlohmann::ordered_json out;
  out["model"] = std::string(to_string(spec.family));
  out["kind"] = std::string(to_string(spec.kind));
  out["method"] = std::string(to_string(spec.method));
  if (spec.weight) out["weight"] = to_string(*spec.weight);
  out["n"] = n;
  out["trials"] = trials.size();
  out["seed"] = seed;
  out["time_factor"] = summary_json(time_factor());
  out["mean_time_factor"] = time_factor().mean;
  out["mean_entropy_bits"] = mean_entropy_bits();
  out["output_entropy_bits"] = output_entropy_bits(spec, n);
  out["entropy_factor"] = entropy_factor();
  out["mean_physical_bits"] = mean_physical_bits();
  out["first_try_rate"] = first_try_rate();
  out["mean_failed_accesses"] = mean_failed_accesses();
  out["wall_seconds"] = wall_seconds;
  return out.dump(2);
}

FactorReport run_metered(const SamplerSpec& spec, std::size_t n, std::size_t trials, std::uint64_t seed,
                         unsigned threads) {
  expects(trials >= 1, "need at least one trial");
  validate(spec, n);
  FactorReport report{spec, n, seed, std::vector<TrialRecord>(trials), 0};
  const auto start = std::chrono::steady_clock::now();

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < trials; i = next++) {
        BitSource src(derive_seed(seed, i));
        RunStats stats;
        const Path p = sample(spec, n, src, &stats);
        TrialRecord& t = report.trials[i];
        t.trial = i;
        t.n = n;
        t.steps = p.size();
        t.time_factor = static_cast<double>(p.meter().total()) / static_cast<double>(p.size());
        t.entropy_bits = src.meter().model_entropy_bits;
        t.physical_bits = src.meter().physical_bits;
        t.restarts = stats.restarts;
        t.failed_accesses = stats.failed_accesses;
      }
    } catch (...) {
      const std::lock_guard lock(failure_lock);
      if (!failure) failure = std::current_exception();
      next = trials;
    }
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, trials));
  std::vector<std::jthread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);

  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<double> simulate_limit_law(std::size_t trials, double epsilon, std::uint64_t seed, bool add_uniform) {
  expects(epsilon > 0 && epsilon <= 0.01, "truncation must lie in (0, 0.01]");
  std::mt19937_64 rng(seed);
  std::poisson_distribution<std::uint64_t> points(0.5 * std::log(1 / epsilon));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> out;
  out.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    double s = epsilon / 4;
    const std::uint64_t k = points(rng);
    for (std::uint64_t i = 0; i < k; ++i) {
      const double x = std::pow(epsilon, unit(rng));
      s += x * unit(rng);
    }
    if (add_uniform) s += unit(rng);
    out.push_back(s);
  }
  return out;
}

ChiSquare chi_square(std::span<const std::uint64_t> observed, std::span<const double> expected) {
  expects(observed.size() == expected.size() && observed.size() >= 2, "chi-square needs ≥ 2 matching cells");
  double total = 0;
  for (auto o : observed) total += static_cast<double>(o);
  ChiSquare out;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = expected[i] * total;
    expects(e > 0, "expected cell count must be positive");
    const double d = static_cast<double>(observed[i]) - e;
    out.statistic += d * d / e;
  }
  out.dof = observed.size() - 1;
  out.p_value = boost::math::gamma_q(static_cast<double>(out.dof) / 2, out.statistic / 2);
  return out;
}

ChiSquare chi_square_two_sample(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  expects(a.size() == b.size(), "samples must share categories");
  double na = 0;
  double nb = 0;
  for (auto v : a) na += static_cast<double>(v);
  for (auto v : b) nb += static_cast<double>(v);
  const double n = na + nb;
  ChiSquare out;
  std::size_t used = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double col = static_cast<double>(a[i] + b[i]);
    if (col == 0) continue;
    ++used;
    const double ea = col * na / n;
    const double eb = col * nb / n;
    const double da = static_cast<double>(a[i]) - ea;
    const double db = static_cast<double>(b[i]) - eb;
    out.statistic += da * da / ea + db * db / eb;
  }
  expects(used >= 2, "need at least two nonempty categories");
  out.dof = used - 1;
  out.p_value = boost::math::gamma_q(static_cast<double>(out.dof) / 2, out.statistic / 2);
  return out;
}

double ks_distance(std::vector<double> a, std::vector<double> b) {
  expects(!a.empty() && !b.empty(), "KS needs nonempty samples");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

}  // namespace latticegen

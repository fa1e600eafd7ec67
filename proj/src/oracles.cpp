#include "latticegen/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "json.hpp"
#include "latticegen/error.hpp"
#include "latticegen/motzkin.hpp"
#include "latticegen/schroeder.hpp"

namespace latticegen {

namespace {

bool is_little_kind(PathKind k) {
  return k == PathKind::LittlePositive || k == PathKind::LittleExcursion;
}

void check_kind(Model model, PathKind kind) {
  expects(!is_little_kind(kind) || model == Model::Schroeder,
          "little paths exist only in the Schröder model");
}

std::vector<Step> alphabet(Model model) {
  switch (model) {
    case Model::Dyck: return {Step::U, Step::D};
    case Model::ColoredMotzkin: return {Step::U, Step::F, Step::D, Step::C};
    default: return {Step::U, Step::F, Step::D};
  }
}

class Enumerator {
 public:
  Enumerator(Model model, bool little, bool excursion, std::size_t n)
      : model_(model), steps_(alphabet(model)), little_(little), excursion_(excursion), n_(n) {}

  std::vector<std::string> run() {
    walk(0, 0);
    return std::move(out_);
  }

 private:
  void walk(std::size_t len, std::int64_t h) {
    if (len == n_) {
      if (!excursion_ || h == 0) out_.push_back(buf_);
      return;
    }
    for (Step s : steps_) {
      const auto g = static_cast<std::size_t>(geometric_length(s, model_));
      if (len + g > n_) continue;
      const std::int64_t next = h + height_delta(s);
      if (next < 0) continue;
      if (little_ && s == Step::F && h == 0) continue;
      if (excursion_ && next > static_cast<std::int64_t>(n_ - len - g)) continue;
      buf_.push_back(to_char(s));
      walk(len + g, next);
      buf_.pop_back();
    }
  }

  Model model_;
  std::vector<Step> steps_;
  bool little_;
  bool excursion_;
  std::size_t n_;
  std::string buf_;
  std::vector<std::string> out_;
};

// Path counts over (length, height). A step of geometric length g from layer
// L−g feeds layer L; `flat` is the weight of a flat position (none for Dyck).
template <class T>
T dp_count(Model model, PathKind kind, std::size_t n, const std::optional<T>& flat) {
  if (kind == PathKind::Lukasiewicz) {
    if (n == 0) return T(0);
    return dp_count<T>(model, PathKind::Excursion, n - 1, flat);
  }
  const bool little = is_little_kind(kind);
  const std::size_t flat_len = model == Model::Schroeder ? 2 : 1;
  std::vector<std::vector<T>> layer(n + 1, std::vector<T>(n + 2, T(0)));
  layer[0][0] = T(1);
  for (std::size_t len = 1; len <= n; ++len) {
    auto& cur = layer[len];
    const auto& prev = layer[len - 1];
    for (std::size_t h = 0; h <= len; ++h) {
      T v(0);
      if (h >= 1) v += prev[h - 1];
      v += prev[h + 1];
      if (flat && len >= flat_len && !(little && h == 0)) v += *flat * layer[len - flat_len][h];
      cur[h] = v;
    }
  }
  if (kind == PathKind::Excursion || kind == PathKind::LittleExcursion) return layer[n][0];
  T total(0);
  for (const T& v : layer[n]) total += v;
  return total;
}

Integer binomial(std::size_t n, std::size_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer catalan(std::size_t m) { return binomial(2 * m, m) / Integer(m + 1); }

// Paths with k non-flat steps interleaved with flats: the non-flat steps form
// a meander (positive) or a Dyck path (excursion).
template <class T>
T flat_interleaving_sum(Model model, PathKind kind, std::size_t n, const T& flat) {
  const bool excursion = kind == PathKind::Excursion;
  T total(0);
  if (model == Model::Schroeder) {
    for (std::size_t j = 0; 2 * j <= n; ++j) {
      const std::size_t k = n - 2 * j;
      if (excursion && k % 2 != 0) continue;
      const Integer shape = excursion ? catalan(k / 2) : binomial(k, k / 2);
      total += T(binomial(n - j, j) * shape);
    }
    return total;
  }
  T flat_power(1);
  std::vector<T> flat_powers;
  flat_powers.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    flat_powers.push_back(flat_power);
    flat_power *= flat;
  }
  for (std::size_t k = 0; k <= n; ++k) {
    if (excursion && k % 2 != 0) continue;
    const Integer shape = excursion ? catalan(k / 2) : binomial(k, k / 2);
    total += T(binomial(n, k) * shape) * flat_powers[n - k];
  }
  return total;
}

double log2_binomial(double n, double k) {
  return (std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1)) / std::numbers::ln2;
}

double log2_shape(std::size_t k, bool excursion) {
  if (!excursion) return log2_binomial(static_cast<double>(k), static_cast<double>(k / 2));
  const double m = static_cast<double>(k / 2);
  return log2_binomial(2 * m, m) - std::log2(m + 1);
}

struct LogTerm {
  double log2_value;
  double flats;  // number of flat positions of the term
};

std::vector<LogTerm> log_terms(Model model, bool excursion, std::size_t n, double log2_flat) {
  std::vector<LogTerm> terms;
  if (model == Model::Schroeder) {
    for (std::size_t j = 0; 2 * j <= n; ++j) {
      const std::size_t k = n - 2 * j;
      if (excursion && k % 2 != 0) continue;
      terms.push_back({log2_binomial(static_cast<double>(n - j), static_cast<double>(j)) +
                           log2_shape(k, excursion),
                       static_cast<double>(j)});
    }
    return terms;
  }
  for (std::size_t k = 0; k <= n; ++k) {
    if (excursion && k % 2 != 0) continue;
    if (model == Model::Dyck && k != n) continue;
    const auto flats = static_cast<double>(n - k);
    terms.push_back({log2_binomial(static_cast<double>(n), static_cast<double>(k)) +
                         log2_shape(k, excursion) + flats * log2_flat,
                     flats});
  }
  return terms;
}

double log2_sum(const std::vector<LogTerm>& terms) {
  if (terms.empty()) return -INFINITY;
  double top = -INFINITY;
  for (const auto& t : terms) top = std::max(top, t.log2_value);
  double s = 0;
  for (const auto& t : terms) s += std::exp2(t.log2_value - top);
  return top + std::log2(s);
}

// Step-law-weighted DP for little positive Schröder paths: P_ℓ(h) is the
// probability mass of length-ℓ prefixes at height h, so count = ΣP_n / r^n.
double log2_little_positive(std::size_t n) {
  const double r = std::numbers::sqrt2 - 1;
  const double cap_d = std::min(static_cast<double>(n), 12 * std::sqrt(static_cast<double>(n)) + 64);
  const auto cap = static_cast<std::size_t>(cap_d);
  std::vector<double> two_back(cap + 2, 0.0);
  std::vector<double> one_back(cap + 2, 0.0);
  std::vector<double> cur(cap + 2, 0.0);
  one_back[0] = 1.0;  // ℓ = 0
  for (std::size_t len = 1; len <= n; ++len) {
    for (std::size_t h = 0; h <= cap; ++h) {
      double v = r * one_back[h + 1];
      if (h >= 1) v += r * one_back[h - 1];
      if (len >= 2 && h >= 1) v += r * r * two_back[h];
      cur[h] = v;
    }
    std::swap(two_back, one_back);
    std::swap(one_back, cur);
  }
  double mass = 0;
  for (double v : one_back) mass += v;
  return std::log2(mass) - static_cast<double>(n) * std::log2(r);
}

double to_double(const Rational& q) { return q.get_d(); }

// Choice source that replays one branch of the decision tree per run and
// then advances like an odometer, last decision first.
class Explorer final : public ChoiceSource {
 public:
  struct Option {
    std::uint64_t value;
    ExactNumber probability;
  };

  void rewind() noexcept { cursor_ = 0; }
  bool replayed_all() const noexcept { return cursor_ == points_.size(); }

  ExactNumber leaf_probability() const {
    ExactNumber p(1);
    for (const auto& pt : points_) p *= pt.options[pt.chosen].probability;
    return p;
  }

  bool advance() {
    while (!points_.empty()) {
      auto& last = points_.back();
      if (last.chosen + 1 < last.options.size()) {
        ++last.chosen;
        return true;
      }
      points_.pop_back();
    }
    return false;
  }

  Step draw_step(const StepLaw& law) override {
    const auto idx = pick([&] {
      std::vector<Option> opts;
      const auto probs = law.probabilities();
      for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i].sign() > 0) opts.push_back({i, probs[i]});
      }
      return opts;
    });
    return law.steps()[idx];
  }

  std::uint64_t uniform_int(std::uint64_t m) override {
    expects(m >= 1 && m <= (1u << 20), "uniform_int range out of bounds for enumeration");
    return pick([&] {
      std::vector<Option> opts;
      const ExactNumber share(Rational(1, m));
      for (std::uint64_t i = 0; i < m; ++i) opts.push_back({i, share});
      return opts;
    });
  }

  bool bernoulli(const ExactNumber& p) override {
    validate_probability(p);
    if (p.sign() == 0) return false;
    if (p == ExactNumber(1)) return true;
    return pick([&] { return std::vector<Option>{{1, p}, {0, ExactNumber(1) - p}}; }) == 1;
  }

  std::optional<std::size_t> categorical(std::span<const ExactNumber> atoms) override {
    const auto v = pick([&] {
      std::vector<Option> opts;
      ExactNumber rest(1);
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        rest -= atoms[i];
        if (atoms[i].sign() > 0) opts.push_back({i, atoms[i]});
      }
      expects(rest.sign() >= 0, "categorical atoms exceed 1");
      if (rest.sign() > 0) opts.push_back({atoms.size(), rest});
      return opts;
    });
    if (v == atoms.size()) return std::nullopt;
    return v;
  }

 private:
  struct Point {
    std::vector<Option> options;
    std::size_t chosen = 0;
  };

  template <class Make>
  std::uint64_t pick(Make&& make) {
    if (cursor_ == points_.size()) {
      auto opts = make();
      expects(!opts.empty(), "decision without outcomes");
      points_.push_back({std::move(opts), 0});
    }
    const Point& pt = points_[cursor_++];
    return pt.options[pt.chosen].value;
  }

  std::vector<Point> points_;
  std::size_t cursor_ = 0;
};

nlohmann::ordered_json number_json(const ExactNumber& x) {
  return {{"exact", x.to_string()}, {"value", x.to_double()}};
}

// Algebraic integers a + b√2 with integer coordinates; products stay exact
// without any gcd work.
struct RootTwoInteger {
  Integer a;
  Integer b;

  RootTwoInteger& operator*=(const RootTwoInteger& o) {
    Integer na = a * o.a + 2 * b * o.b;
    Integer nb = a * o.b + b * o.a;
    a = std::move(na);
    b = std::move(nb);
    return *this;
  }
};

RootTwoInteger power(RootTwoInteger base, std::size_t e) {
  RootTwoInteger out{1, 0};
  while (e != 0) {
    if (e & 1U) out *= base;
    base *= base;
    e >>= 1U;
  }
  return out;
}

}  // namespace

std::string_view to_string(PathKind k) noexcept {
  switch (k) {
    case PathKind::Positive: return "positive";
    case PathKind::Excursion: return "excursion";
    case PathKind::Lukasiewicz: return "lukasiewicz";
    case PathKind::LittlePositive: return "little-positive";
    case PathKind::LittleExcursion: return "little-excursion";
  }
  return "?";
}

std::vector<Path> enumerate(Model model, PathKind kind, std::size_t n) {
  check_kind(model, kind);
  expects(n <= enumeration_bound, "enumeration length above bound");
  std::vector<std::string> texts;
  if (kind == PathKind::Lukasiewicz) {
    if (n == 0) return {};
    texts = Enumerator(model, false, true, n - 1).run();
    for (auto& t : texts) t.push_back('D');
  } else {
    const bool excursion = kind == PathKind::Excursion || kind == PathKind::LittleExcursion;
    texts = Enumerator(model, is_little_kind(kind), excursion, n).run();
  }
  std::sort(texts.begin(), texts.end());
  std::vector<Path> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(Path::from_text(model, t));
  return out;
}

Rational weight(const Path& p, const Rational& c) {
  Rational w(1);
  for (std::size_t i = 0; i < p.colored_count(); ++i) w *= c;
  return w;
}

Integer count_dp(Model model, PathKind kind, std::size_t n) {
  check_kind(model, kind);
  std::optional<Integer> flat;
  if (model != Model::Dyck) flat = Integer(model == Model::ColoredMotzkin ? 2 : 1);
  return dp_count<Integer>(model, kind, n, flat);
}

Rational weighted_count_dp(PathKind kind, std::size_t n, const Rational& c) {
  check_kind(Model::ColoredMotzkin, kind);
  return dp_count<Rational>(Model::ColoredMotzkin, kind, n, Rational(1 + c));
}

Integer count(Model model, PathKind kind, std::size_t n) {
  check_kind(model, kind);
  switch (kind) {
    case PathKind::Positive:
    case PathKind::Excursion: {
      if (model == Model::Dyck) {
        if (kind == PathKind::Positive) return binomial(n, n / 2);
        return n % 2 == 0 ? catalan(n / 2) : Integer(0);
      }
      const Integer flat(model == Model::ColoredMotzkin ? 2 : 1);
      return flat_interleaving_sum<Integer>(model, kind, n, flat);
    }
    case PathKind::Lukasiewicz:
      return n == 0 ? Integer(0) : count(model, PathKind::Excursion, n - 1);
    case PathKind::LittleExcursion:
      if (n == 0) return 1;
      return count(model, PathKind::Excursion, n) / 2;
    case PathKind::LittlePositive:
      break;
  }
  return count_dp(model, kind, n);
}

Rational weighted_count(PathKind kind, std::size_t n, const Rational& c) {
  switch (kind) {
    case PathKind::Positive:
    case PathKind::Excursion:
      return flat_interleaving_sum<Rational>(Model::ColoredMotzkin, kind, n, Rational(1 + c));
    case PathKind::Lukasiewicz:
      return n == 0 ? Rational(0) : weighted_count(PathKind::Excursion, n - 1, c);
    default:
      return weighted_count_dp(kind, n, c);
  }
}

double log2_count(Model model, PathKind kind, std::size_t n, const std::optional<Rational>& c) {
  check_kind(model, kind);
  expects(c.has_value() == (model == Model::ColoredMotzkin), "weight required exactly for colored");
  switch (kind) {
    case PathKind::Positive:
    case PathKind::Excursion: {
      const double flat = c ? std::log2(1 + to_double(*c)) : 0.0;
      return log2_sum(log_terms(model, kind == PathKind::Excursion, n, flat));
    }
    case PathKind::Lukasiewicz:
      return n == 0 ? -INFINITY : log2_count(model, PathKind::Excursion, n - 1, c);
    case PathKind::LittleExcursion:
      if (n == 0) return 0.0;
      return log2_count(model, PathKind::Excursion, n) - 1.0;
    case PathKind::LittlePositive:
      return log2_little_positive(n);
  }
  return 0.0;
}

double expected_colored_steps(PathKind kind, std::size_t n, const Rational& c) {
  expects(kind == PathKind::Positive || kind == PathKind::Excursion,
          "expected colored steps is defined for positive paths and excursions");
  const double cd = to_double(c);
  const auto terms = log_terms(Model::ColoredMotzkin, kind == PathKind::Excursion, n, std::log2(1 + cd));
  const double log_total = log2_sum(terms);
  double mean_flats = 0;
  for (const auto& t : terms) mean_flats += t.flats * std::exp2(t.log2_value - log_total);
  return mean_flats * cd / (1 + cd);
}

std::string CountTable::json() const {
  nlohmann::ordered_json out;
  out["model"] = std::string(to_string(model));
  out["kind"] = std::string(to_string(kind));
  auto& vals = out["values"] = nlohmann::ordered_json::array();
  for (const auto& v : values) vals.push_back(v.get_str());
  return out.dump();
}

CountTable count_table(Model model, PathKind kind, std::size_t max_n) {
  CountTable t{model, kind, {}};
  for (std::size_t n = 0; n <= max_n; ++n) t.values.push_back(count_dp(model, kind, n));
  return t;
}

ExactNumber DistTable::total() const {
  ExactNumber s = reject_mass;
  for (const auto& [_, p] : entries) s += p;
  return s;
}

ExactNumber DistTable::probability(const std::string& path) const {
  const auto it = entries.find(path);
  return it == entries.end() ? ExactNumber(0) : it->second;
}

DistTable DistTable::conditioned() const {
  const ExactNumber mass = success_mass();
  expects(mass.sign() > 0, "cannot condition on an event of probability 0");
  DistTable out;
  for (const auto& [k, p] : entries) out.entries.emplace(k, p / mass);
  return out;
}

std::string DistTable::json() const {
  nlohmann::ordered_json out;
  auto& ent = out["entries"] = nlohmann::ordered_json::object();
  for (const auto& [k, p] : entries) ent[k] = number_json(p);
  out["reject"] = number_json(reject_mass);
  return out.dump();
}

DistTable explore(const Path& start, const std::function<bool(Path&, ChoiceSource&)>& attempt) {
  Explorer ex;
  DistTable table;
  do {
    ex.rewind();
    Path p = start;
    const bool ok = attempt(p, ex);
    expects(ex.replayed_all(), "attempt is not deterministic under replay");
    const ExactNumber prob = ex.leaf_probability();
    if (ok) {
      table.entries[p.text()] += prob;
    } else {
      table.reject_mass += prob;
    }
  } while (ex.advance());
  return table;
}

DistTable exact_recover_dist(const Path& w, const std::optional<Rational>& c) {
  expects(classify(w) == PathClass::Lukasiewicz, "recover needs a Łukasiewicz path");
  switch (w.model()) {
    case Model::Motzkin:
      return explore(w, [](Path& p, ChoiceSource& s) { return recover_motzkin(p, s); });
    case Model::ColoredMotzkin:
      expects(c.has_value(), "colored recovery needs a weight");
      return explore(w, [&](Path& p, ChoiceSource& s) { return recover_colored(p, *c, s); });
    case Model::Schroeder:
      expects(w.geo_len() % 2 == 1, "Schröder recovery needs an odd length");
      return explore(w, [](Path& p, ChoiceSource& s) { return recover_schroeder(p, s); });
    case Model::Dyck: break;
  }
  throw ContractViolation("no recovery for Dyck paths");
}

DistTable exact_extend_dist(const Path& w) {
  expects(w.model() == Model::Schroeder, "extend acts on Schröder paths");
  return explore(w, [](Path& p, ChoiceSource& s) { return extend_in_place(p, s); });
}

DistTable exact_attempt_dist(const SamplerSpec& spec, std::size_t n) {
  validate(spec, n);
  return explore(Path(spec.model()),
                 [&](Path& p, ChoiceSource& s) { return try_sample(spec, n, p, s); });
}

DistTable exact_sampler_dist(const SamplerSpec& spec, std::size_t n) {
  return exact_attempt_dist(spec, n).conditioned();
}

SuccessProbability success_probability_exact(Model model, std::size_t n) {
  expects(n >= 1, "length must be at least 1");
  if (model == Model::Motzkin) {
    Integer num(1);
    Integer den(1);
    for (std::size_t i = 1; i <= n; ++i) {
      num *= 2 * i + 2;
      den *= 3 * (2 * i + 1);
    }
    Rational p(num, den);
    p.canonicalize();
    const Rational success = p * count(model, PathKind::Positive, n);
    return {ExactNumber(p), success.get_d()};
  }
  expects(model == Model::Schroeder, "success probabilities cover Motzkin and Schröder");
  // p_n = r^n · N / D with N = ∏(2i−1+√2), D = ∏(2i−2+√2), i = 1..⌈n/2⌉.
  RootTwoInteger num = power({-1, 1}, n);
  RootTwoInteger den{1, 0};
  for (std::size_t i = 1; i <= (n + 1) / 2; ++i) {
    num *= {Integer(2 * i - 1), 1};
    den *= {Integer(2 * i - 2), 1};
  }
  num *= {den.a, -den.b};
  const Integer norm = den.a * den.a - 2 * den.b * den.b;
  const ExactNumber p(Rational(num.a, norm), Rational(num.b, norm));
  const ExactNumber mass = ExactNumber(Rational(count(model, PathKind::Positive, n))) +
                           ExactNumber::r() * Rational(count(model, PathKind::Positive, n - 1));
  return {p, (p * mass).to_double()};
}

double motzkin_success_limit() { return std::sqrt(3.0) / 2; }

double schroeder_success_limit() {
  return std::pow(2.0, 0.25) / std::sqrt(std::numbers::pi) * std::tgamma(std::numbers::sqrt2 / 2) /
         std::tgamma((1 + std::numbers::sqrt2) / 2);
}

}  // namespace latticegen

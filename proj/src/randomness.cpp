#include "latticegen/randomness.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>

#include "json.hpp"
#include "latticegen/error.hpp"

namespace latticegen {

std::string Meter::json() const {
  nlohmann::ordered_json j;
  j["model_entropy_bits"] = model_entropy_bits;
  j["physical_bits"] = physical_bits;
  return j.dump();
}

double binary_entropy_bits(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double entropy_bits(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

void validate_probability(const ExactNumber& p) {
  expects(p.sign() >= 0 && (ExactNumber(1) - p).sign() >= 0, "probability outside [0, 1]");
}

// ---------------------------------------------------------------------------

Expansion::Expansion(ExactNumber x, std::size_t eager_words)
    : x_(std::move(x)), terminal_(x_.dyadic_length()) {
  expects(x_.sign() > 0 && x_ < ExactNumber(1), "expansion needs a value in (0, 1)");
  words_.reserve(eager_words);
  for (std::size_t i = 0; i < eager_words; ++i) words_.push_back(compute_word(i));
}

std::uint64_t Expansion::word(std::size_t index) const {
  return index < words_.size() ? words_[index] : compute_word(index);
}

std::uint64_t Expansion::compute_word(std::size_t index) const {
  Integer scaled = x_.floor_scaled(64 * (index + 1));
  Integer low;
  mpz_fdiv_r_2exp(low.get_mpz_t(), scaled.get_mpz_t(), 64);
  static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long expected");
  return low.get_ui();
}

// ---------------------------------------------------------------------------

IntervalTable::IntervalTable(std::span<const ExactNumber> atoms, std::size_t eager_words) {
  expects(atoms.size() <= max_atoms, "too many atoms for the interval sampler");
  ExactNumber cumulative(0);
  std::vector<double> probs;
  probs.reserve(atoms.size() + 1);
  boundaries_.reserve(atoms.size());
  for (const auto& a : atoms) {
    expects(a.sign() >= 0, "negative probability atom");
    cumulative += a;
    probs.push_back(a.to_double());
    const int vs1 = (cumulative - ExactNumber(1)).sign();
    expects(vs1 <= 0, "probability atoms sum to more than 1");
    if (cumulative.sign() == 0) {
      boundaries_.push_back({Boundary::Kind::Zero, std::nullopt});
    } else if (vs1 == 0) {
      boundaries_.push_back({Boundary::Kind::One, std::nullopt});
    } else {
      boundaries_.push_back({Boundary::Kind::Inner, Expansion(cumulative, eager_words)});
    }
  }
  probs.push_back((ExactNumber(1) - cumulative).to_double());
  entropy_ = entropy_bits(probs);
}

std::size_t IntervalTable::sample(BitSource& src) const {
  // Bit i of `ge` is set once the draw is known to be ≥ boundary i.
  std::uint64_t undecided = 0;
  std::uint64_t ge = 0;
  for (std::size_t i = 0; i < boundaries_.size(); ++i) {
    switch (boundaries_[i].kind) {
      case Boundary::Kind::Zero: ge |= std::uint64_t{1} << i; break;
      case Boundary::Kind::One: break;
      case Boundary::Kind::Inner: undecided |= std::uint64_t{1} << i; break;
    }
  }
  for (std::size_t w = 0; undecided != 0; ++w) {
    const std::uint64_t u = src.peek64();
    unsigned used = 0;
    for (std::uint64_t pending = undecided; pending != 0; pending &= pending - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(pending));
      const Expansion& e = *boundaries_[i].expansion;
      std::uint64_t diff = u ^ e.word(w);
      // A dyadic boundary ends inside this window: matching its digits so
      // far already means the draw is ≥ the boundary.
      unsigned span = 64;
      bool ends_here = false;
      if (auto t = e.terminal_length(); t && *t <= 64 * (w + 1)) {
        span = static_cast<unsigned>(*t - 64 * w);
        ends_here = true;
      }
      if (span < 64) diff &= ~(~std::uint64_t{0} >> span);
      unsigned decided_at = 0;
      bool is_ge = false;
      if (diff != 0) {
        const auto lead = static_cast<unsigned>(std::countl_zero(diff));
        decided_at = lead + 1;
        is_ge = ((u >> (63 - lead)) & 1U) != 0;
      } else if (ends_here) {
        decided_at = span;
        is_ge = true;
      } else {
        continue;
      }
      undecided &= ~(std::uint64_t{1} << i);
      if (is_ge) ge |= std::uint64_t{1} << i;
      used = std::max(used, decided_at);
    }
    src.consume(undecided == 0 ? used : 64);
  }
  return static_cast<std::size_t>(std::popcount(ge));
}

// ---------------------------------------------------------------------------

StepLaw::StepLaw(Model model, std::vector<Step> steps, std::vector<ExactNumber> probabilities)
    : model_(model),
      steps_(std::move(steps)),
      probabilities_(std::move(probabilities)),
      uniform_(std::all_of(probabilities_.begin(), probabilities_.end(),
                           [&](const ExactNumber& p) { return p == probabilities_.front(); })),
      table_(probabilities_, 8) {}

const StepLaw& StepLaw::dyck() {
  static const StepLaw law(Model::Dyck, {Step::U, Step::D},
                           {ExactNumber::fraction(1, 2), ExactNumber::fraction(1, 2)});
  return law;
}

const StepLaw& StepLaw::motzkin() {
  static const StepLaw law = [] {
    const auto third = ExactNumber::fraction(1, 3);
    return StepLaw(Model::Motzkin, {Step::U, Step::F, Step::D}, {third, third, third});
  }();
  return law;
}

const StepLaw& StepLaw::schroeder() {
  static const StepLaw law = [] {
    const ExactNumber r = ExactNumber::r();
    return StepLaw(Model::Schroeder, {Step::U, Step::F, Step::D}, {r, r * r, r});
  }();
  return law;
}

StepLaw StepLaw::colored(const Rational& c) {
  expects(sgn(c) > 0, "flat weight must be positive");
  const Rational total = 3 + c;
  const ExactNumber unit(Rational(1) / total);
  return StepLaw(Model::ColoredMotzkin, {Step::U, Step::F, Step::D, Step::C},
                 {unit, unit, unit, ExactNumber(Rational(c / total))});
}

StepLaw StepLaw::for_model(Model m, const std::optional<Rational>& c) {
  switch (m) {
    case Model::Dyck: return dyck();
    case Model::Motzkin: return motzkin();
    case Model::Schroeder: return schroeder();
    case Model::ColoredMotzkin:
      expects(c.has_value(), "colored model needs a flat weight");
      return colored(*c);
  }
  throw ContractViolation("unknown model");
}

// ---------------------------------------------------------------------------

void BitSource::refill() {
  buffer_ |= static_cast<Word128>(engine_()) << (64 - available_);
  available_ += 64;
}

bool BitSource::next_bit() {
  if (available_ == 0) refill();
  const bool bit = (buffer_ >> 127) != 0;
  buffer_ <<= 1;
  --available_;
  ++meter_.physical_bits;
  meter_.model_entropy_bits += 1.0;
  return bit;
}

std::uint64_t BitSource::peek64() {
  if (available_ < 64) refill();
  return static_cast<std::uint64_t>(buffer_ >> 64);
}

void BitSource::consume(unsigned count) {
  if (available_ < count) refill();
  buffer_ <<= count;
  available_ -= count;
  meter_.physical_bits += count;
}

std::uint64_t BitSource::dice_roll(std::uint64_t m) {
  // Fast dice roller: v tracks the range size, c the value, both grow by
  // one fair bit per iteration; surplus range is recycled on overflow.
  std::uint64_t v = 1;
  std::uint64_t c = 0;
  for (;;) {
    if (available_ == 0) refill();
    const auto bit = static_cast<std::uint64_t>(buffer_ >> 127);
    buffer_ <<= 1;
    --available_;
    ++meter_.physical_bits;
    v <<= 1;
    c = (c << 1) | bit;
    if (v >= m) {
      if (c < m) return c;
      v -= m;
      c -= m;
    }
  }
}

std::uint64_t BitSource::uniform_int(std::uint64_t m) {
  expects(m >= 1, "uniform_int needs a positive range");
  expects(m <= (std::uint64_t{1} << 63), "uniform_int range too large");
  if (m == 1) return 0;
  meter_.model_entropy_bits += std::log2(static_cast<double>(m));
  return dice_roll(m);
}

Step BitSource::draw_step(const StepLaw& law) {
  meter_.model_entropy_bits += law.entropy();
  const auto steps = law.steps();
  if (law.is_uniform()) return steps[dice_roll(steps.size())];
  return steps[law.table().sample(*this)];
}

bool BitSource::bernoulli(const ExactNumber& p) {
  validate_probability(p);
  if (p.sign() == 0) return false;
  if (p == ExactNumber(1)) return true;
  meter_.model_entropy_bits += binary_entropy_bits(p.to_double());
  const ExactNumber atoms[] = {p};
  return IntervalTable(atoms, 1).sample(*this) == 0;
}

std::optional<std::size_t> BitSource::categorical(std::span<const ExactNumber> atoms) {
  const IntervalTable table(atoms, 1);
  meter_.model_entropy_bits += table.entropy();
  const std::size_t k = table.sample(*this);
  if (k == atoms.size()) return std::nullopt;
  return k;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return splitmix64(seed ^ splitmix64(index));
}

std::optional<std::uint64_t> parse_seed(std::string_view text) noexcept {
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    base = 16;
    text.remove_prefix(2);
  }
  if (text.empty()) return std::nullopt;
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, base);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace latticegen

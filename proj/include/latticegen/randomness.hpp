#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latticegen/exact_number.hpp"
#include "latticegen/step.hpp"

namespace latticegen {

/// Dual cost counters: entropy of every primitive's distribution, and raw
/// fair bits actually consumed.
struct Meter {
  double model_entropy_bits = 0.0;
  std::uint64_t physical_bits = 0;

  std::string json() const;
};

/// Shannon entropy in bits of a probability vector; entries must sum to 1.
double entropy_bits(std::span<const double> probabilities);
double binary_entropy_bits(double p);

/// Binary expansion of a number in (0, 1), served as 64-bit words (MSB
/// first). The first `eager_words` words are computed up front; later words
/// are recomputed exactly on each request, so a shared expansion is safe to
/// read concurrently.
class Expansion {
 public:
  Expansion(ExactNumber x, std::size_t eager_words);

  std::uint64_t word(std::size_t index) const;
  /// Number of significant digits if x is a dyadic rational.
  std::optional<std::size_t> terminal_length() const noexcept { return terminal_; }
  const ExactNumber& value() const noexcept { return x_; }

 private:
  std::uint64_t compute_word(std::size_t index) const;

  ExactNumber x_;
  std::optional<std::size_t> terminal_;
  std::vector<std::uint64_t> words_;
};

class BitSource;

/// Interval-method sampler over exact cumulative boundaries. Outcome i is
/// returned when the uniform draw lands in [c_i, c_{i+1}); the value
/// `atom_count()` stands for the residual mass [c_m, 1).
class IntervalTable {
 public:
  static constexpr std::size_t max_atoms = 64;

  IntervalTable(std::span<const ExactNumber> atoms, std::size_t eager_words);

  std::size_t sample(BitSource& src) const;
  std::size_t atom_count() const noexcept { return boundaries_.size(); }
  /// Entropy of the atoms plus the residual.
  double entropy() const noexcept { return entropy_; }

 private:
  struct Boundary {
    enum class Kind : std::uint8_t { Zero, One, Inner } kind;
    std::optional<Expansion> expansion;
  };

  std::vector<Boundary> boundaries_;
  double entropy_ = 0.0;
};

/// Step distribution of a path model: fair U/D (Dyck), uniform over U,F,D
/// (Motzkin), weights 1,1,1,c over U,F,D,C (colored), and r, r², r over
/// U,F,D (Schröder).
class StepLaw {
 public:
  static const StepLaw& dyck();
  static const StepLaw& motzkin();
  static const StepLaw& schroeder();
  static StepLaw colored(const Rational& c);
  static StepLaw for_model(Model m, const std::optional<Rational>& c = std::nullopt);

  Model model() const noexcept { return model_; }
  std::span<const Step> steps() const noexcept { return steps_; }
  std::span<const ExactNumber> probabilities() const noexcept { return probabilities_; }
  double entropy() const noexcept { return table_.entropy(); }
  /// All outcomes equally likely: sampled with a fast dice roll.
  bool is_uniform() const noexcept { return uniform_; }
  const IntervalTable& table() const noexcept { return table_; }

 private:
  StepLaw(Model model, std::vector<Step> steps, std::vector<ExactNumber> probabilities);

  Model model_;
  std::vector<Step> steps_;
  std::vector<ExactNumber> probabilities_;
  bool uniform_;
  IntervalTable table_;
};

/// Every random decision a sampler makes goes through this interface, so the
/// same sampler code can be driven by fair bits or enumerated exhaustively.
class ChoiceSource {
 public:
  virtual ~ChoiceSource() = default;

  virtual Step draw_step(const StepLaw& law) = 0;
  /// Uniform in [0, m).
  virtual std::uint64_t uniform_int(std::uint64_t m) = 0;
  virtual bool bernoulli(const ExactNumber& p) = 0;
  /// Index i with probability atoms[i]; empty with the residual probability.
  virtual std::optional<std::size_t> categorical(std::span<const ExactNumber> atoms) = 0;
};

/// Seeded stream of fair bits with entropy/bit metering.
class BitSource final : public ChoiceSource {
 public:
  explicit BitSource(std::uint64_t seed) : engine_(seed) {}

  bool next_bit();
  /// Next 64 bits, MSB first, without consuming them.
  std::uint64_t peek64();
  void consume(unsigned count);

  Step draw_step(const StepLaw& law) override;
  std::uint64_t uniform_int(std::uint64_t m) override;
  bool bernoulli(const ExactNumber& p) override;
  std::optional<std::size_t> categorical(std::span<const ExactNumber> atoms) override;

  const Meter& meter() const noexcept { return meter_; }
  Meter& meter() noexcept { return meter_; }

 private:
  std::uint64_t dice_roll(std::uint64_t m);
  void refill();

  std::mt19937_64 engine_;
  __extension__ using Word128 = unsigned __int128;
  Word128 buffer_ = 0;  // valid bits are the top `available_`
  unsigned available_ = 0;
  Meter meter_;
};

/// Per-trial seed: a fixed splitmix64-based mix of (seed, index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;
/// Decimal or 0x-prefixed hexadecimal 64-bit integer.
std::optional<std::uint64_t> parse_seed(std::string_view text) noexcept;

void validate_probability(const ExactNumber& p);

}  // namespace latticegen

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latticegen/step.hpp"

namespace latticegen {

/// Step-level memory traffic. A cell that is read and then rewritten within
/// the same pass is booked once, as a write.
struct AccessMeter {
  std::uint64_t reads = 0;
  std::uint64_t writes = 0;

  std::uint64_t total() const noexcept { return reads + writes; }
};

enum class PathClass { Positive, Excursion, Lukasiewicz, Other };

std::string_view to_string(PathClass c) noexcept;

/// Append/rewrite-in-place step buffer with cached statistics.
///
/// Height, step count, flat count and geometric length are maintained on
/// every mutation. For Schröder paths the index of the first flat step
/// starting at height 0 is also tracked, which makes `lift` constant-time.
/// Mutations through `push`, `set` and `read` are metered; `at`, `truncate`
/// and `clear` are not. The meter survives `clear`, so restarted samplers
/// keep accumulating cost in the same path object.
class Path {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  explicit Path(Model model = Model::Motzkin) : model_(model) {}

  /// Unmetered construction from a step-tag string ("UFD", C = colored flat).
  static Path from_text(Model model, std::string_view text);

  Model model() const noexcept { return model_; }
  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  std::int64_t height() const noexcept { return height_; }
  std::size_t flat_count() const noexcept { return flats_; }
  std::size_t colored_count() const noexcept { return colored_; }
  /// ℓ: |ω| + |ω|_F for Schröder paths, |ω| otherwise.
  std::size_t geo_len() const noexcept {
    return model_ == Model::Schroeder ? steps_.size() + flats_ : steps_.size();
  }
  std::optional<std::size_t> first_flat_at_zero() const noexcept {
    if (first_flat_zero_ == npos) return std::nullopt;
    return first_flat_zero_;
  }
  bool is_little() const;

  Step at(std::size_t i) const { return steps_.at(i); }
  Step back() const { return steps_.back(); }
  const std::vector<Step>& steps() const noexcept { return steps_; }

  void push(Step s);
  /// Metered read of a cell that is not rewritten.
  Step read(std::size_t i) {
    ++meter_.reads;
    return steps_[i];
  }
  /// Metered (over)write of an existing cell.
  void set(std::size_t i, Step s);
  /// Drops the last `count` steps without touching their contents.
  void truncate(std::size_t count = 1);
  void clear() noexcept;

  /// Recomputes the first-flat-at-height-0 index over cells [from, size()),
  /// given the prefix height before `from`. Earlier tracked positions stay.
  void refresh_first_flat(std::size_t from, std::int64_t height_at_from);
  /// Declares that no F at height 0 remains in cells [from, size()).
  void clear_first_flat_from(std::size_t from) noexcept {
    if (first_flat_zero_ != npos && first_flat_zero_ >= from) first_flat_zero_ = npos;
  }

  const AccessMeter& meter() const noexcept { return meter_; }
  AccessMeter& meter() noexcept { return meter_; }

  /// Prefix height after the first `count` steps (unmetered scan).
  std::int64_t prefix_height(std::size_t count) const;

  std::string text() const;
  /// {"model", "steps", "height", "geo_len", "little"} as a JSON object.
  std::string json() const;

  friend bool operator==(const Path& x, const Path& y) {
    return x.model_ == y.model_ && x.steps_ == y.steps_;
  }

 private:
  void account(Step s, int sign) noexcept;

  Model model_;
  std::vector<Step> steps_;
  std::int64_t height_ = 0;
  std::size_t flats_ = 0;
  std::size_t colored_ = 0;
  std::size_t first_flat_zero_ = npos;
  AccessMeter meter_;
};

/// Rescan-based classification: positive, excursion (reported in preference
/// to positive), Łukasiewicz, or other.
PathClass classify(const Path& p);
bool is_positive(const Path& p);

/// O(|ω|) rescans used to check the cached statistics.
std::optional<std::size_t> scan_first_flat_at_zero(const Path& p);
bool scan_is_little(const Path& p);

}  // namespace latticegen

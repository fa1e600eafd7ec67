#include "latticegen/path.hpp"

#include "json.hpp"

#include "latticegen/error.hpp"

namespace latticegen {

std::string_view to_string(Model m) noexcept {
  switch (m) {
    case Model::Dyck: return "dyck";
    case Model::Motzkin: return "motzkin";
    case Model::ColoredMotzkin: return "motzkin-colored";
    case Model::Schroeder: return "schroeder";
  }
  return "?";
}

std::optional<Model> model_from_string(std::string_view name) noexcept {
  if (name == "dyck") return Model::Dyck;
  if (name == "motzkin") return Model::Motzkin;
  if (name == "motzkin-colored") return Model::ColoredMotzkin;
  if (name == "schroeder") return Model::Schroeder;
  return std::nullopt;
}

std::string_view to_string(PathClass c) noexcept {
  switch (c) {
    case PathClass::Positive: return "positive";
    case PathClass::Excursion: return "excursion";
    case PathClass::Lukasiewicz: return "lukasiewicz";
    case PathClass::Other: return "other";
  }
  return "?";
}

Path Path::from_text(Model model, std::string_view text) {
  Path p(model);
  p.steps_.reserve(text.size());
  for (char ch : text) {
    auto s = step_from_char(ch);
    expects(s.has_value(), std::string("unknown step tag '") + ch + "'");
    expects(is_legal(*s, model), std::string("step '") + ch + "' not allowed in " +
                                     std::string(to_string(model)));
    if (model == Model::Schroeder && *s == Step::F && p.height_ == 0 &&
        p.first_flat_zero_ == npos) {
      p.first_flat_zero_ = p.steps_.size();
    }
    p.steps_.push_back(*s);
    p.account(*s, +1);
  }
  return p;
}

void Path::account(Step s, int sign) noexcept {
  height_ += sign * height_delta(s);
  if (s == Step::F) flats_ = static_cast<std::size_t>(static_cast<std::int64_t>(flats_) + sign);
  if (s == Step::C) colored_ = static_cast<std::size_t>(static_cast<std::int64_t>(colored_) + sign);
}

bool Path::is_little() const {
  expects(model_ == Model::Schroeder, "littleness is defined for Schröder paths");
  return first_flat_zero_ == npos;
}

void Path::push(Step s) {
  expects(is_legal(s, model_), "illegal step for path model");
  if (model_ == Model::Schroeder && s == Step::F && height_ == 0 && first_flat_zero_ == npos) {
    first_flat_zero_ = steps_.size();
  }
  steps_.push_back(s);
  account(s, +1);
  ++meter_.writes;
}

void Path::set(std::size_t i, Step s) {
  account(steps_[i], -1);
  steps_[i] = s;
  account(s, +1);
  ++meter_.writes;
}

void Path::truncate(std::size_t count) {
  expects(count <= steps_.size(), "truncate past the start of the path");
  for (std::size_t k = 0; k < count; ++k) {
    account(steps_.back(), -1);
    steps_.pop_back();
  }
  if (first_flat_zero_ != npos && first_flat_zero_ >= steps_.size()) first_flat_zero_ = npos;
}

void Path::clear() noexcept {
  steps_.clear();
  height_ = 0;
  flats_ = 0;
  colored_ = 0;
  first_flat_zero_ = npos;
}

void Path::refresh_first_flat(std::size_t from, std::int64_t height_at_from) {
  if (model_ != Model::Schroeder) return;
  if (first_flat_zero_ != npos && first_flat_zero_ < from) return;
  first_flat_zero_ = npos;
  std::int64_t h = height_at_from;
  for (std::size_t i = from; i < steps_.size(); ++i) {
    if (h == 0 && steps_[i] == Step::F) {
      first_flat_zero_ = i;
      return;
    }
    h += height_delta(steps_[i]);
  }
}

std::int64_t Path::prefix_height(std::size_t count) const {
  std::int64_t h = 0;
  for (std::size_t i = 0; i < count; ++i) h += height_delta(steps_.at(i));
  return h;
}

std::string Path::text() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(to_char(s));
  return out;
}

std::string Path::json() const {
  nlohmann::ordered_json j;
  j["model"] = std::string(to_string(model_));
  j["steps"] = text();
  j["height"] = height_;
  j["geo_len"] = geo_len();
  if (model_ == Model::Schroeder) {
    j["little"] = is_little();
  } else {
    j["little"] = nullptr;
  }
  return j.dump();
}

PathClass classify(const Path& p) {
  std::int64_t h = 0;
  const auto& steps = p.steps();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    h += height_delta(steps[i]);
    if (h < 0) {
      return (i + 1 == steps.size()) ? PathClass::Lukasiewicz : PathClass::Other;
    }
  }
  return h == 0 ? PathClass::Excursion : PathClass::Positive;
}

bool is_positive(const Path& p) {
  const PathClass c = classify(p);
  return c == PathClass::Positive || c == PathClass::Excursion;
}

std::optional<std::size_t> scan_first_flat_at_zero(const Path& p) {
  std::int64_t h = 0;
  const auto& steps = p.steps();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (h == 0 && steps[i] == Step::F) return i;
    h += height_delta(steps[i]);
  }
  return std::nullopt;
}

bool scan_is_little(const Path& p) { return !scan_first_flat_at_zero(p).has_value(); }

}  // namespace latticegen

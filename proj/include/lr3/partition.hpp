#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lr3 {

// Integer partition: weakly decreasing nonnegative parts. Trailing zeros are
// stripped on construction, so (2,1,0) and (2,1) compare equal.
class Partition {
 public:
  Partition() = default;

  Partition(std::initializer_list<long long> parts)
      : Partition(std::vector<long long>(parts)) {}

  explicit Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
        throw std::invalid_argument("partition parts must be weakly decreasing and nonnegative");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  std::size_t length() const { return parts_.size(); }

  // part(i) is 0 for i >= length(), so callers never special-case padding.
  long long part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  long long weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
  }

  const std::vector<long long>& parts() const { return parts_; }

  bool contains(const Partition& inner) const {
    for (std::size_t i = 0; i < inner.length(); ++i)
      if (part(i) < inner.part(i)) return false;
    return true;
  }

  // Complement inside a rows x width box, read upside down:
  // result_i = width - part(rows - 1 - i). nullopt when the partition
  // does not fit in the box.
  std::optional<Partition> complement_in(std::size_t rows, long long width) const {
    if (length() > rows || part(0) > width) return std::nullopt;
    std::vector<long long> out(rows);
    for (std::size_t i = 0; i < rows; ++i) out[i] = width - part(rows - 1 - i);
    return Partition(std::move(out));
  }

  friend bool operator==(const Partition&, const Partition&) = default;

  friend bool operator<(const Partition& x, const Partition& y) {
    return x.parts_ < y.parts_;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<long long> parts_;
};

}  // namespace lr3

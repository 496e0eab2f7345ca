#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bernoulli/rational.hpp"

namespace bernoulli {

enum class Algorithm { recurrence, series };

std::string_view to_string(Algorithm a);

/// Raised when a computation needs B_n past the end of a table.
class TableTooShort : public std::out_of_range {
 public:
  TableTooShort(std::size_t needed, std::size_t available);
  std::size_t needed() const { return needed_; }

 private:
  std::size_t needed_;
};

/// Exact values B_0..B_N (first kind, B_1 = -1/2) tagged with the algorithm
/// that produced them. Extension only appends; stored entries never change.
/// A const table is safe to share between threads.
class BernoulliTable {
 public:
  /// Takes values as given; used for fixtures and deserialized tables.
  BernoulliTable(Algorithm algorithm, std::vector<Rational> values);

  Algorithm algorithm() const { return algorithm_; }
  std::size_t size() const { return values_.size(); }
  bool covers(std::size_t index) const { return index < values_.size(); }
  /// Throws TableTooShort unless B_index is stored.
  void require(std::size_t index) const;
  const Rational& at(std::size_t index) const;
  const Rational& operator[](std::size_t index) const { return values_[index]; }
  std::span<const Rational> values() const { return values_; }

  /// Appends entries up to and including B_index using the tagged algorithm.
  void extend_to(std::size_t index);

 private:
  Algorithm algorithm_;
  std::vector<Rational> values_;
};

}  // namespace bernoulli

// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "reltrs/syntax.hpp"

namespace reltrs {

class CarrierMismatch : public std::invalid_argument {
 public:
  CarrierMismatch() : std::invalid_argument("relations over different carriers") {}
};

/// Thrown by lfp when the iteration cap is hit, which only happens for a
/// non-monotone step function.
class LfpDiverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite ordered set of labelled elements. A carrier built from a Universe
/// keeps a pointer to it; term relations are relations over such carriers.
class Carrier {
 public:
  static std::shared_ptr<const Carrier> make(std::vector<std::string> labels);
  /// Carrier {0, 1, ..., n-1}.
  static std::shared_ptr<const Carrier> range(std::size_t n);
  static std::shared_ptr<const Carrier> of(std::shared_ptr<const Universe> u);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index(const std::string& label) const;
  const std::shared_ptr<const Universe>& universe() const { return universe_; }

 private:
  Carrier() = default;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::shared_ptr<const Universe> universe_;
};

using CarrierPtr = std::shared_ptr<const Carrier>;

/// Binary relation over a carrier, stored as a dense row-major bit matrix.
class Rel {
 public:
  explicit Rel(CarrierPtr c);

  const CarrierPtr& carrier() const { return c_; }
  std::size_t n() const { return n_; }
  std::size_t words_per_row() const { return w_; }

  bool test(std::size_t i, std::size_t j) const {
    return (bits_[i * w_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j) {
    bits_[i * w_ + j / 64] |= std::uint64_t{1} << (j % 64);
  }
  void reset(std::size_t i, std::size_t j) {
    bits_[i * w_ + j / 64] &= ~(std::uint64_t{1} << (j % 64));
  }
  std::span<const std::uint64_t> row(std::size_t i) const {
    return {bits_.data() + i * w_, w_};
  }
  std::span<std::uint64_t> row(std::size_t i) {
    return {bits_.data() + i * w_, w_};
  }
  /// Calls f(j) for every j with (i, j) in the relation, in increasing order.
  template <class F>
  void for_each_succ(std::size_t i, F&& f) const {
    const std::uint64_t* r = bits_.data() + i * w_;
    for (std::size_t k = 0; k < w_; ++k) {
      std::uint64_t word = r[k];
      while (word) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }
  /// Calls f(i, j) for every pair in row-major order.
  template <class F>
  void for_each_pair(F&& f) const {
    for (std::size_t i = 0; i < n_; ++i) {
      for_each_succ(i, [&](std::size_t j) { f(i, j); });
    }
  }

  std::size_t count() const;
  bool empty() const;
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
  std::vector<std::pair<std::string, std::string>> labelled_pairs() const;

  /// Same carrier and same pairs.
  friend bool operator==(const Rel& a, const Rel& b);

 private:
  CarrierPtr c_;
  std::size_t n_;
  std::size_t w_;
  std::vector<std::uint64_t> bits_;
};

bool same_carrier(const CarrierPtr& a, const CarrierPtr& b);
void require_same_carrier(const Rel& a, const Rel& b);

Rel bot(CarrierPtr c);
Rel top(CarrierPtr c);
Rel id(CarrierPtr c);
Rel from_pairs(CarrierPtr c,
               std::span<const std::pair<std::size_t, std::size_t>> pairs);
/// Pairs given by labels; throws std::invalid_argument on unknown labels.
Rel from_labelled_pairs(
    CarrierPtr c, std::span<const std::pair<std::string, std::string>> pairs);

Rel join(const Rel& a, const Rel& b);
Rel meet(const Rel& a, const Rel& b);
bool leq(const Rel& a, const Rel& b);
Rel compose(const Rel& a, const Rel& b);
Rel converse(const Rel& a);
/// n-fold composition; power(a, 0) = id.
Rel power(const Rel& a, unsigned n);

/// c/b: the largest x with x;b <= c.
Rel residual_right(const Rel& c, const Rel& b);
/// a\c: the largest x with a;x <= c.
Rel residual_left(const Rel& a, const Rel& c);

Rel refl_closure(const Rel& a);
Rel sym_closure(const Rel& a);
/// Least transitive relation containing a, i.e. mu x. a v a;x.
Rel trans_closure(const Rel& a);
/// Least reflexive transitive relation containing a, i.e. mu x. id v a;x.
Rel kleene_star(const Rel& a);

bool is_coreflexive(const Rel& a);

/// Least fixed point of a monotone f by Kleene iteration from bottom.
/// The default cap is one more than the height of the lattice.
template <class F>
Rel lfp(F&& f, CarrierPtr c, std::size_t max_iterations = 0) {
  std::size_t n = c->size();
  if (max_iterations == 0) max_iterations = n * n + 2;
  Rel x = bot(c);
  for (std::size_t it = 0; it < max_iterations; ++it) {
    Rel next = f(x);
    if (next == x) return x;
    x = std::move(next);
  }
  throw LfpDiverged("lfp did not stabilise within " +
                    std::to_string(max_iterations) + " iterations");
}

namespace testing {

/// While alive, compose() corrupts its result by replacing one pair (i, j),
/// i != j, with (j, i). Used to check that the law harness can fail.
class ScopedComposeMutation {
 public:
  ScopedComposeMutation();
  ~ScopedComposeMutation();
  ScopedComposeMutation(const ScopedComposeMutation&) = delete;
  ScopedComposeMutation& operator=(const ScopedComposeMutation&) = delete;
};

}  // namespace testing

}  // namespace reltrs

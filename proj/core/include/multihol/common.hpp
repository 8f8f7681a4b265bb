// Copyright 2026 The multihol authors
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

#ifndef MULTIHOL_COMMON_HPP_
#define MULTIHOL_COMMON_HPP_

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace multihol {

// Group elements are dense indices 0..N-1 with the identity at 0.
using Idx = std::uint32_t;
inline constexpr Idx kInvalidIdx = 0xffffffffu;

// Dense multiplication tables are only materialized below this order;
// larger groups multiply through their construction-specific oracle.
inline constexpr Idx kDenseTableLimit = 5000;

inline constexpr std::size_t kDefaultLatticeGuard = 1'000'000;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: unknown names, bad spec files, invalid amalgamations.
class InputError : public Error {
 public:
  using Error::Error;
};

// A budget or guard was exceeded before the computation finished.
class GuardError : public Error {
 public:
  using Error::Error;
};

// A verification that the theory guarantees to succeed has failed.
class CheckError : public Error {
 public:
  using Error::Error;
};

class NotAHomomorphismError : public Error {
 public:
  NotAHomomorphismError(Idx element, Idx generator_slot, const std::string& what)
      : Error(what), element(element), generator_slot(generator_slot) {}
  Idx element;
  Idx generator_slot;
};

class InvalidAmalgamationError : public InputError {
 public:
  using InputError::InputError;
};

class NotSemisimpleError : public Error {
 public:
  using Error::Error;
};

// Thread-safe compute-once cell for derived tables of immutable groups.
template <typename T>
class Lazy {
 public:
  template <typename F>
  const T& get(F&& compute) const {
    std::call_once(flag_, [&] { value_ = compute(); });
    return value_;
  }

 private:
  mutable std::once_flag flag_;
  mutable T value_{};
};

// Dynamic bitset over element indices.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(Idx universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  Idx universe_size() const { return n_; }

  bool test(Idx i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(Idx i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(Idx i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  Idx count() const;
  std::vector<Idx> elements() const;
  Idx least() const;  // kInvalidIdx when empty

  IndexSet operator&(const IndexSet& o) const;
  IndexSet operator|(const IndexSet& o) const;
  bool is_subset_of(const IndexSet& o) const;
  bool intersects(const IndexSet& o) const;

  bool operator==(const IndexSet&) const = default;
  // tie-break for equal-size sets: the owner of the least differing
  // element comes first
  bool lex_less(const IndexSet& o) const;

 private:
  Idx n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace multihol

#endif  // MULTIHOL_COMMON_HPP_

#pragma once

// Ambient polynomial ring bookkeeping: variable names, index lookup, and the
// fixed-width support bitmask used by every divisibility prefilter.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace weid {

/// Exponents are exact unsigned 64-bit integers.  All arithmetic on them goes
/// through checked_add / checked_mul, which throw instead of wrapping; desk
/// scale instances stay far below 2^32, so the fast path is the only path in
/// practice, and an overflow can never produce a silently wrong answer.
using Exp = std::uint64_t;

/// Thrown when two objects from different ambient rings are combined.
struct AmbientMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an input violates an operation's documented precondition.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a computation would exceed a configured resource budget
/// (face counts, candidate counts, variable caps).  Always loud, never a
/// silently degraded answer.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when exact integer arithmetic would overflow its fixed-width type.
struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

inline Exp checked_add(Exp a, Exp b) {
  Exp r = a + b;
  if (r < a) throw OverflowError("exponent addition overflow");
  return r;
}

inline Exp checked_mul(Exp a, Exp b) {
  if (a != 0 && b > UINT64_MAX / a) throw OverflowError("exponent multiplication overflow");
  return a * b;
}

/// Hard cap on ambient variable count.  Polarizing realistic ideal powers
/// needs more than 64 variables (a star core at weight 5 cubed polarizes to
/// ~180), so supports are 256-bit masks.
inline constexpr std::size_t kMaxVariables = 256;

/// Fixed-width bitset over variable indices [0, kMaxVariables).
/// Cheap value type; the workhorse of divisibility and face bookkeeping.
class VarMask {
 public:
  static constexpr std::size_t kWords = kMaxVariables / 64;

  constexpr VarMask() = default;

  static VarMask single(std::size_t i) {
    VarMask m;
    m.set(i);
    return m;
  }

  /// Mask with bits [0, n) set.
  static VarMask first_n(std::size_t n) {
    VarMask m;
    for (std::size_t i = 0; i < n; ++i) m.set(i);
    return m;
  }

  void set(std::size_t i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  /// True when every bit of *this is also set in other.
  bool subset_of(const VarMask& other) const {
    for (std::size_t k = 0; k < kWords; ++k)
      if (w_[k] & ~other.w_[k]) return false;
    return true;
  }

  bool intersects(const VarMask& other) const {
    for (std::size_t k = 0; k < kWords; ++k)
      if (w_[k] & other.w_[k]) return true;
    return false;
  }

  VarMask operator|(const VarMask& o) const {
    VarMask r;
    for (std::size_t k = 0; k < kWords; ++k) r.w_[k] = w_[k] | o.w_[k];
    return r;
  }
  VarMask operator&(const VarMask& o) const {
    VarMask r;
    for (std::size_t k = 0; k < kWords; ++k) r.w_[k] = w_[k] & o.w_[k];
    return r;
  }
  /// Set difference: bits in *this and not in o.
  VarMask minus(const VarMask& o) const {
    VarMask r;
    for (std::size_t k = 0; k < kWords; ++k) r.w_[k] = w_[k] & ~o.w_[k];
    return r;
  }
  VarMask& operator|=(const VarMask& o) {
    for (std::size_t k = 0; k < kWords; ++k) w_[k] |= o.w_[k];
    return *this;
  }

  bool operator==(const VarMask& o) const { return w_ == o.w_; }
  bool operator!=(const VarMask& o) const { return w_ != o.w_; }
  /// Lexicographic-by-lowest-index total order (word 0 holds indices 0..63).
  bool operator<(const VarMask& o) const {
    for (std::size_t k = 0; k < kWords; ++k)
      if (w_[k] != o.w_[k]) return w_[k] < o.w_[k];
    return false;
  }

  /// Lowest set bit index, or kMaxVariables when empty.
  std::size_t lowest() const {
    for (std::size_t k = 0; k < kWords; ++k)
      if (w_[k]) return (k << 6) + static_cast<std::size_t>(__builtin_ctzll(w_[k]));
    return kMaxVariables;
  }

  /// Calls fn(i) for each set bit i in increasing order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < kWords; ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        std::size_t i = (k << 6) + static_cast<std::size_t>(__builtin_ctzll(w));
        fn(i);
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : w_) h = h * 1099511628211ULL + static_cast<std::size_t>(w);
    return h;
  }

 private:
  std::array<std::uint64_t, kWords> w_{};
};

/// An ordered list of variable names.  Value-compared; ideals built over equal
/// rings interoperate.  Immutable once constructed.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of a variable name; throws DomainError when absent.
  std::size_t index_of(const std::string& name) const;
  bool has(const std::string& name) const { return index_.count(name) != 0; }

  /// Mask of the whole variable set.
  VarMask full_mask() const { return VarMask::first_n(size()); }

  bool operator==(const Ring& o) const { return names_ == o.names_; }
  bool operator!=(const Ring& o) const { return names_ != o.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

/// True when the two handles denote the same ambient ring (pointer fast path,
/// deep name comparison otherwise).
inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b, const char* op) {
  if (!same_ring(a, b))
    throw AmbientMismatchError(std::string(op) + ": operands live in different ambient rings");
}

}  // namespace weid

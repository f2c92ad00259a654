#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>

namespace dscsib {

/// Outcome of a three-way comparison under the cardinal total order.
enum class Cmp { lt, eq, gt };

/// Symbolic cardinal: a finite value n, an aleph with finite index k, or
/// aleph_omega. This universe is closed under every aggregation the engine
/// performs (comparison, absorption sums, absorption products).
///
/// Normal form is unique: a finite value is always Kind::finite, never an
/// aleph in disguise, so operator== is structural equality.
class Cardinal {
 public:
  constexpr Cardinal() = default;  // Finite(0)

  static constexpr Cardinal finite(std::uint64_t n) {
    return Cardinal(Kind::finite, n);
  }
  static constexpr Cardinal aleph(std::uint64_t index) {
    return Cardinal(Kind::aleph, index);
  }
  static constexpr Cardinal aleph_omega() {
    return Cardinal(Kind::aleph_omega, 0);
  }

  constexpr bool is_finite() const { return kind_ == Kind::finite; }
  constexpr bool is_infinite() const { return kind_ != Kind::finite; }
  constexpr bool is_aleph() const { return kind_ == Kind::aleph; }
  constexpr bool is_aleph_omega() const { return kind_ == Kind::aleph_omega; }

  /// Requires is_finite().
  std::uint64_t finite_value() const;
  /// Requires is_aleph().
  std::uint64_t aleph_index() const;

  friend constexpr bool operator==(const Cardinal&, const Cardinal&) = default;

  /// Text form shared with the expression grammar: "3", "aleph2", "alephw".
  std::string to_string() const;

 private:
  enum class Kind : std::uint8_t { finite = 0, aleph = 1, aleph_omega = 2 };

  constexpr Cardinal(Kind kind, std::uint64_t value)
      : kind_(kind), value_(value) {}

  Kind kind_ = Kind::finite;
  std::uint64_t value_ = 0;
};

/// Total order: Finite(n) < Finite(m) iff n < m; every finite value is below
/// every aleph; Aleph(j) < Aleph(k) iff j < k; aleph_omega tops every Aleph(k).
Cmp cmp(const Cardinal& a, const Cardinal& b);

std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b);

const Cardinal& max(const Cardinal& a, const Cardinal& b);

/// Marker describing how the finitely listed values of an aggregate continue.
enum class SumTail {
  /// The list is the whole family.
  exact,
  /// Each listed value occurs countably often.
  countably_many,
  /// Beyond the listed values the family contains alephs of unboundedly
  /// large index; its supremum is aleph_omega.
  unbounded_alephs,
};

/// Cardinal sum of a non-empty listed family. All-finite exact lists add as
/// integers; any infinite member absorbs (the result is the maximum); a
/// countably repeated list with a positive member contributes at least
/// aleph0; an unbounded-aleph tail forces aleph_omega.
///
/// Throws EmptyAggregate when the list is empty, Overflow when a finite sum
/// does not fit 64 bits.
Cardinal sum(std::span<const Cardinal> xs, SumTail tail = SumTail::exact);

/// Cardinal product: finite times finite multiplies as integers, a zero
/// factor annihilates, otherwise an infinite factor absorbs to the maximum.
Cardinal mul(const Cardinal& a, const Cardinal& b);

}  // namespace dscsib

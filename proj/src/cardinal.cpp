#include "dscsib/cardinal.hpp"

#include <cassert>

#include "dscsib/error.hpp"

namespace dscsib {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    fail("Overflow", "finite cardinal sum exceeds 64 bits");
  }
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    fail("Overflow", "finite cardinal product exceeds 64 bits");
  }
  return r;
}

}  // namespace

std::uint64_t Cardinal::finite_value() const {
  assert(is_finite());
  return value_;
}

std::uint64_t Cardinal::aleph_index() const {
  assert(is_aleph());
  return value_;
}

std::string Cardinal::to_string() const {
  switch (kind_) {
    case Kind::finite:
      return std::to_string(value_);
    case Kind::aleph:
      return "aleph" + std::to_string(value_);
    case Kind::aleph_omega:
      return "alephw";
  }
  return {};
}

Cmp cmp(const Cardinal& a, const Cardinal& b) {
  auto rank = [](const Cardinal& c) {
    return c.is_finite() ? 0 : (c.is_aleph() ? 1 : 2);
  };
  if (rank(a) != rank(b)) return rank(a) < rank(b) ? Cmp::lt : Cmp::gt;
  std::uint64_t va = a.is_finite() ? a.finite_value()
                    : a.is_aleph() ? a.aleph_index()
                                   : 0;
  std::uint64_t vb = b.is_finite() ? b.finite_value()
                    : b.is_aleph() ? b.aleph_index()
                                   : 0;
  if (va == vb) return Cmp::eq;
  return va < vb ? Cmp::lt : Cmp::gt;
}

std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b) {
  switch (cmp(a, b)) {
    case Cmp::lt:
      return std::strong_ordering::less;
    case Cmp::eq:
      return std::strong_ordering::equal;
    case Cmp::gt:
      return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

const Cardinal& max(const Cardinal& a, const Cardinal& b) {
  return cmp(a, b) == Cmp::lt ? b : a;
}

Cardinal sum(std::span<const Cardinal> xs, SumTail tail) {
  if (xs.empty()) fail("EmptyAggregate", "sum of an empty cardinal family");

  if (tail == SumTail::unbounded_alephs) return Cardinal::aleph_omega();

  Cardinal largest_infinite = Cardinal::finite(0);
  bool has_infinite = false;
  std::uint64_t finite_total = 0;
  for (const Cardinal& x : xs) {
    if (x.is_infinite()) {
      has_infinite = true;
      largest_infinite = max(largest_infinite, x);
    } else {
      finite_total = checked_add(finite_total, x.finite_value());
    }
  }

  if (has_infinite) return largest_infinite;
  if (tail == SumTail::countably_many && finite_total > 0) {
    return Cardinal::aleph(0);
  }
  return Cardinal::finite(finite_total);
}

Cardinal mul(const Cardinal& a, const Cardinal& b) {
  if (a == Cardinal::finite(0) || b == Cardinal::finite(0)) {
    return Cardinal::finite(0);
  }
  if (a.is_finite() && b.is_finite()) {
    return Cardinal::finite(checked_mul(a.finite_value(), b.finite_value()));
  }
  return max(a, b);
}

}  // namespace dscsib

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hsumset::expr {

/// Values for single-letter variables 'a'..'z'.
class Bindings {
 public:
  void set(char var, std::int64_t value) { values_[index(var)] = value; bound_[index(var)] = true; }
  std::int64_t get(char var) const;

 private:
  static std::size_t index(char var);
  std::array<std::int64_t, 26> values_{};
  std::array<bool, 26> bound_{};
};

/// Integer polynomial over single-letter variables. Juxtaposition is
/// multiplication, so "hk-h^2+2x+1" and "(h+1)k-h(h-1)" parse as written.
class Poly {
 public:
  static Poly parse(std::string_view text);
  static Poly constant(std::int64_t c);
  static Poly variable(char v);

  std::int64_t eval(const Bindings& b) const;
  std::size_t degree() const noexcept;
  /// Variables the polynomial mentions, sorted and unique.
  std::string variables() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;

  /// Monomials as (sorted variable multiset, coefficient), zero terms dropped.
  const std::vector<std::pair<std::string, std::int64_t>>& terms() const noexcept { return terms_; }

 private:
  void normalize();
  std::vector<std::pair<std::string, std::int64_t>> terms_;
};

enum class Rel { Ge, Le, Eq, Gt, Lt };

/// lhs REL rhs.
struct Atom {
  Poly lhs;
  Rel rel;
  Poly rhs;

  bool holds(const Bindings& b) const;
  /// Amount by which the atom is violated (0 when it holds).
  std::int64_t violation(const Bindings& b) const;
};

/// Conjunction of atoms.
struct Clause {
  std::vector<Atom> atoms;
  bool holds(const Bindings& b) const;
  std::int64_t violation(const Bindings& b) const;
};

/// Disjunction of clauses, parsed from text such as
///   "h>=6 & x in [3,h-3] & y in [6,h] | x in {h,k-h}"
/// Supported atoms: `E in [lo,hi]`, `E in {a,b,...}` (expands into
/// alternatives), and relation chains `a <= E < b` over = >= <= > <.
struct Condition {
  std::string source;
  std::vector<Clause> any_of;

  static Condition parse(std::string_view text);
  bool holds(const Bindings& b) const;
  std::int64_t violation(const Bindings& b) const;
};

}  // namespace hsumset::expr

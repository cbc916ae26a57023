#include "hsumset/int_set.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace hsumset {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceGuardError("integer overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceGuardError("integer overflow in multiplication");
  return r;
}

IntSet::IntSet(std::initializer_list<std::int64_t> values) {
  *this = make_set(std::vector<std::int64_t>(values)).set;
}

IntSet IntSet::from_sorted(std::vector<std::int64_t> sorted) {
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i - 1] >= sorted[i]) throw std::invalid_argument("IntSet: elements must be strictly increasing");
  }
  IntSet s;
  s.elems_ = std::move(sorted);
  return s;
}

IntSet IntSet::interval(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v;
  if (hi >= lo) {
    v.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t x = lo; x <= hi; ++x) v.push_back(x);
  }
  IntSet s;
  s.elems_ = std::move(v);
  return s;
}

std::int64_t IntSet::min() const {
  if (elems_.empty()) throw std::invalid_argument("min of empty set");
  return elems_.front();
}

std::int64_t IntSet::max() const {
  if (elems_.empty()) throw std::invalid_argument("max of empty set");
  return elems_.back();
}

bool IntSet::contains(std::int64_t v) const noexcept {
  return std::binary_search(elems_.begin(), elems_.end(), v);
}

std::int64_t IntSet::total() const {
  std::int64_t s = 0;
  for (auto x : elems_) s = checked_add(s, x);
  return s;
}

IntSet IntSet::without(std::span<const std::int64_t> removed) const {
  std::vector<std::int64_t> out;
  out.reserve(elems_.size());
  for (auto x : elems_) {
    if (std::find(removed.begin(), removed.end(), x) == removed.end()) out.push_back(x);
  }
  IntSet s;
  s.elems_ = std::move(out);
  return s;
}

bool IntSet::is_subset_of(const IntSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

MadeSet make_set(std::span<const std::int64_t> values) {
  std::vector<std::int64_t> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  auto last = std::unique(v.begin(), v.end());
  bool dup = last != v.end();
  v.erase(last, v.end());
  return {IntSet::from_sorted(std::move(v)), dup};
}

AffineMap::AffineMap(std::int64_t scale, std::int64_t shift) : scale_(scale), shift_(shift) {
  if (scale == 0) throw std::invalid_argument("AffineMap: scale must be nonzero");
}

std::int64_t AffineMap::operator()(std::int64_t x) const {
  return checked_add(checked_mul(scale_, x), shift_);
}

IntSet apply_affine(const IntSet& a, const AffineMap& m) {
  std::vector<std::int64_t> out;
  out.reserve(a.size());
  for (auto x : a) out.push_back(m(x));
  if (m.scale() < 0) std::reverse(out.begin(), out.end());
  return IntSet::from_sorted(std::move(out));
}

IntSet reflect(const IntSet& a, std::int64_t c) { return apply_affine(a, AffineMap(-1, c)); }

std::int64_t gcd_of_differences(const IntSet& a) {
  if (a.size() < 2) throw std::invalid_argument("gcd_of_differences: need at least 2 elements");
  std::int64_t g = 0;
  const auto base = a.min();
  for (auto x : a) g = std::gcd(g, checked_add(x, -base));
  return g;
}

NormalForm normalize(const IntSet& a) {
  if (a.size() < 2) throw std::invalid_argument("normalization undefined for sets with fewer than 2 elements");
  const auto base = a.min();
  const auto g = gcd_of_differences(a);
  std::vector<std::int64_t> out;
  out.reserve(a.size());
  for (auto x : a) out.push_back((x - base) / g);
  return {IntSet::from_sorted(std::move(out)), AffineMap(g, base)};
}

bool is_normalized(const IntSet& a) {
  if (a.empty()) return false;
  if (a.size() == 1) return a.min() == 0;
  return a.min() == 0 && gcd_of_differences(a) == 1;
}

std::string to_string(const IntSet& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a[i]);
  }
  return out;
}

MadeSet parse_set(std::string_view text) {
  std::vector<std::int64_t> values;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto body = trim(text);
  if (body.size() >= 2 && body.front() == '{' && body.back() == '}') body = trim(body.substr(1, body.size() - 2));
  if (body.empty()) return {};
  while (true) {
    auto comma = body.find(',');
    auto item = trim(body.substr(0, comma));
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw std::invalid_argument("malformed set string: '" + std::string(text) + "'");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return make_set(values);
}

}  // namespace hsumset

// Sparse integer combinations keyed by an ordered type. With int keys this
// is a Laurent polynomial in one variable (exponent -> coefficient).

#pragma once

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace vknot {

template <class Key>
class ZVector {
 public:
  using Terms = std::map<Key, long long>;

  ZVector() = default;
  ZVector(std::initializer_list<std::pair<const Key, long long>> init) {
    for (const auto& [k, c] : init) add(k, c);
  }

  static ZVector monomial(const Key& k, long long c = 1) {
    ZVector v;
    v.add(k, c);
    return v;
  }

  void add(const Key& k, long long c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh && (it->second += c) == 0) terms_.erase(it);
  }

  long long coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? 0 : it->second;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  ZVector& operator+=(const ZVector& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  ZVector& operator-=(const ZVector& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  ZVector& operator*=(long long s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend ZVector operator+(ZVector a, const ZVector& b) { return a += b; }
  friend ZVector operator-(ZVector a, const ZVector& b) { return a -= b; }
  friend ZVector operator-(ZVector a) { return a *= -1; }
  friend ZVector operator*(ZVector a, long long s) { return a *= s; }
  friend ZVector operator*(long long s, ZVector a) { return a *= s; }
  bool operator==(const ZVector&) const = default;

 private:
  Terms terms_;
};

using LaurentPoly = ZVector<int>;

inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) out.add(ea + eb, ca * cb);
  return out;
}

inline LaurentPoly pow(const LaurentPoly& base, int n) {
  LaurentPoly out = LaurentPoly::monomial(0);
  for (int k = 0; k < n; ++k) out = out * base;
  return out;
}

// Exponents multiplied by `factor` (substitution x -> x^factor).
inline LaurentPoly scale_exponents(const LaurentPoly& p, int factor) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) out.add(e * factor, c);
  return out;
}

// Human-readable form in variable `var`, highest exponent last,
// e.g. "q + q^3 + q^5 - q^9".
inline std::string to_string(const LaurentPoly& p, const std::string& var = "q") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    long long mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << var;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

// [[coeff, exp], ...] in increasing exponent order.
inline std::vector<std::pair<long long, int>> coefficient_pairs(const LaurentPoly& p) {
  std::vector<std::pair<long long, int>> out;
  for (const auto& [e, c] : p.terms()) out.emplace_back(c, e);
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

}  // namespace vknot

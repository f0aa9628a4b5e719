#include "eulerian/poly.hpp"

namespace eulerian {

std::vector<Integer> integer_coeffs(const Poly1& p) {
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    if (!is_integral(c)) throw ConsistencyError("non-integral coefficient " + to_string(c));
    out.push_back(c.get_num());
  }
  return out;
}

Poly1 from_integers(const std::vector<Integer>& c) {
  std::vector<Rational> v;
  v.reserve(c.size());
  for (const auto& x : c) v.emplace_back(x);
  return Poly1(std::move(v));
}

Poly1 from_counts(const std::vector<long long>& counts) {
  std::vector<Rational> v;
  v.reserve(counts.size());
  for (long long x : counts) v.emplace_back(Integer(std::to_string(x)));
  return Poly1(std::move(v));
}

}  // namespace eulerian

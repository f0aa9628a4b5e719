#include <algorithm>
#include <charconv>
#include <numeric>

#include "eulerian/permutation.hpp"

namespace eulerian {

Permutation::Permutation(std::vector<int> word) : w_(std::move(word)) {
  const int n = size();
  std::vector<int> seen(static_cast<size_t>(n) + 1, 0);
  for (int k = 1; k <= n; ++k) {
    int v = w_[k - 1];
    if (v < 1 || v > n)
      throw DomainError("position " + std::to_string(k) + ": value " + std::to_string(v) +
                        " outside 1.." + std::to_string(n));
    if (seen[v])
      throw DomainError("position " + std::to_string(k) + ": value " + std::to_string(v) +
                        " repeats position " + std::to_string(seen[v]));
    seen[v] = k;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return trusted(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == ' ' || ch == ',' || ch == '\t' || ch == '\n') {
      ++i;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || (ptr != text.data() + text.size() && *ptr != ' ' && *ptr != ',' &&
                              *ptr != '\t' && *ptr != '\n'))
      throw DomainError("position " + std::to_string(w.size() + 1) + ": not an integer near '" +
                        std::string(text.substr(i, 8)) + "'");
    w.push_back(value);
    i = static_cast<size_t>(ptr - text.data());
  }
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(w_.size());
  for (int k = 1; k <= size(); ++k) inv[w_[k - 1] - 1] = k;
  return trusted(std::move(inv));
}

Permutation Permutation::compose(const Permutation& tau) const {
  if (tau.size() != size()) throw DomainError("compose: sizes differ");
  std::vector<int> out(w_.size());
  for (int k = 1; k <= size(); ++k) out[k - 1] = (*this)(tau(k));
  return trusted(std::move(out));
}

std::string to_string(const Permutation& p) {
  std::string s;
  for (int v : p.word()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

StatVector::StatVector(std::vector<int> entries) : x_(std::move(entries)) {
  for (int& v : x_) v = std::max(v, 0);
}

StatVector operator+(const StatVector& a, const StatVector& b) {
  if (a.size() != b.size()) throw DomainError("vector sum: lengths differ");
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a.x_[i] + b.x_[i];
  return StatVector(std::move(out));
}

std::string to_string(const StatVector& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v.entries()[i]);
  }
  return s + ")";
}

StatVector delta(const StatVector& v) {
  if (v.empty()) throw DomainError("delta on empty vector");
  std::vector<int> out(v.entries().begin(), v.entries().end() - 1);
  for (int& x : out) x -= 1;
  return StatVector(std::move(out));
}

StatVector delta_prime(const StatVector& v) {
  if (v.empty()) throw DomainError("delta_prime on empty vector");
  return StatVector(std::vector<int>(v.entries().begin() + 1, v.entries().end()));
}

StatVector delta_second(const StatVector& v) {
  if (v.empty()) throw DomainError("delta_second on empty vector");
  return StatVector(std::vector<int>(v.entries().begin(), v.entries().end() - 1));
}

StatVector lambda_op(const StatVector& v) {
  std::vector<int> out = v.entries();
  for (int& x : out) x -= 1;
  return StatVector(std::move(out));
}

StatVector apply_monomial(StatVector v, int deltas, int primes) {
  for (int i = 0; i < deltas; ++i) v = delta(v);
  for (int i = 0; i < primes; ++i) v = delta_prime(v);
  return v;
}

int positive_count(const StatVector& v) {
  return static_cast<int>(std::count_if(v.entries().begin(), v.entries().end(), [](int x) { return x > 0; }));
}

StatVector excedance_vector(const Permutation& p) {
  std::vector<int> e(static_cast<size_t>(p.size()));
  for (int k = 1; k <= p.size(); ++k) e[k - 1] = p(k) - (k - 1);
  return StatVector(std::move(e));
}

namespace {

// σ⁻¹ with the convention σ⁻¹(0) = 0.
std::vector<int> inverse_table(const Permutation& p) {
  std::vector<int> inv(static_cast<size_t>(p.size()) + 1, 0);
  for (int k = 1; k <= p.size(); ++k) inv[p(k)] = k;
  return inv;
}

std::vector<bool> saillant_values(const Permutation& p) {
  std::vector<bool> s(static_cast<size_t>(p.size()) + 1, false);
  int best = 0;
  for (int v : p.word())
    if (v > best) {
      best = v;
      s[v] = true;
    }
  return s;
}

}  // namespace

StatVector descent_vector(const Permutation& p) {
  auto inv = inverse_table(p);
  std::vector<int> d(static_cast<size_t>(p.size()));
  for (int k = 1; k <= p.size(); ++k) d[k - 1] = p(inv[k] - 1) - (k - 1);
  return StatVector(std::move(d));
}

StatVector rise_vector(const Permutation& p) {
  auto inv = inverse_table(p);
  std::vector<int> m(static_cast<size_t>(p.size()));
  for (int k = 1; k <= p.size(); ++k) m[k - 1] = p(1 + inv[k - 1]) - (k - 1);
  return StatVector(std::move(m));
}

StatVector dprime_vector(const Permutation& p) {
  const int n = p.size();
  auto inv = inverse_table(p);
  auto sal = saillant_values(p);
  std::vector<int> out(static_cast<size_t>(n), 0);
  for (int j = 1; j <= n; ++j) {
    if (!sal[j]) continue;
    int pos = inv[j];
    if (pos == n || sal[p(pos + 1)]) out[j - 1] = 1;
  }
  return StatVector(std::move(out));
}

StatVector fixed_point_vector(const Permutation& p) {
  std::vector<int> out(static_cast<size_t>(p.size()));
  for (int k = 1; k <= p.size(); ++k) out[k - 1] = p(k) == k ? 1 : 0;
  return StatVector(std::move(out));
}

std::vector<int> saillants(const Permutation& p) {
  std::vector<int> pos;
  int best = 0;
  for (int k = 1; k <= p.size(); ++k)
    if (p(k) > best) {
      best = p(k);
      pos.push_back(k);
    }
  return pos;
}

int saillant_count(const Permutation& p) { return static_cast<int>(saillants(p).size()); }

std::vector<std::vector<int>> orbits(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<size_t>(p.size()) + 1, false);
  for (int m = p.size(); m >= 1; --m) {
    if (seen[m]) continue;
    std::vector<int> cycle;
    for (int x = m; !seen[x]; x = p(x)) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

int cycle_count(const Permutation& p) {
  std::vector<bool> seen(static_cast<size_t>(p.size()) + 1, false);
  int z = 0;
  for (int k = 1; k <= p.size(); ++k) {
    if (seen[k]) continue;
    ++z;
    for (int x = k; !seen[x]; x = p(x)) seen[x] = true;
  }
  return z;
}

int signature(const Permutation& p) { return (cycle_count(p) + p.size()) % 2 == 0 ? 1 : -1; }

std::string to_string(const ClassTag& c) {
  switch (c.kind()) {
    case ClassTag::Kind::All: return "all";
    case ClassTag::Kind::Circular: return "circular";
    case ClassTag::Kind::SuccessionFree: return "succession-free";
    case ClassTag::Kind::Derangement: return "derangement";
    case ClassTag::Kind::Alternating: return "alternating";
    case ClassTag::Kind::Biexcedent: return "biexcedent";
    case ClassTag::Kind::FirstIsN: return "first-is-n";
    case ClassTag::Kind::LastIs1: return "last-is-1";
    case ClassTag::Kind::RTailOrdered: return "tail-ordered(" + std::to_string(c.r()) + ")";
  }
  return "?";
}

bool is_in_class(const Permutation& p, const ClassTag& c) {
  const int n = p.size();
  switch (c.kind()) {
    case ClassTag::Kind::All:
      return true;
    case ClassTag::Kind::Circular:
      return n >= 1 && cycle_count(p) == 1;
    case ClassTag::Kind::SuccessionFree:
      if (n >= 1 && p(1) == 1) return false;
      for (int j = 1; j < n; ++j)
        if (p(j + 1) == p(j) + 1) return false;
      return true;
    case ClassTag::Kind::Derangement:
      for (int k = 1; k <= n; ++k)
        if (p(k) == k) return false;
      return true;
    case ClassTag::Kind::Alternating:
      for (int j2 = 2; j2 <= n - 1; j2 += 2)
        if (!(p(j2) < p(j2 - 1) && p(j2) < p(j2 + 1))) return false;
      if (n % 2 == 0 && n >= 2 && !(p(n) < p(n - 1))) return false;
      return true;
    case ClassTag::Kind::Biexcedent: {
      auto inv = inverse_table(p);
      for (int j = 1; j <= n; ++j) {
        bool below = j < p(j) && j < inv[j];
        bool above = j > p(j) && j > inv[j];
        if (!below && !above) return false;
      }
      return true;
    }
    case ClassTag::Kind::FirstIsN:
      return n >= 1 && p(1) == n;
    case ClassTag::Kind::LastIs1:
      return n >= 1 && p(n) == 1;
    case ClassTag::Kind::RTailOrdered: {
      const int r = c.r();
      if (r < 1 || r > n)
        throw DomainError("tail-ordered class needs 1 <= r <= n, got r=" + std::to_string(r) +
                          ", n=" + std::to_string(n));
      auto inv = inverse_table(p);
      for (int v = n - r + 1; v < n; ++v)
        if (inv[v] > inv[v + 1]) return false;
      return true;
    }
  }
  return false;
}

void for_each_in_class(int n, const ClassTag& c, const std::function<void(const Permutation&)>& visit,
                       const Budget& budget) {
  if (n < 0) throw DomainError("negative size");
  require_within(n, budget.max_n, "enumeration");
  if (c.kind() == ClassTag::Kind::RTailOrdered && (c.r() < 1 || c.r() > n))
    throw DomainError("tail-ordered class needs 1 <= r <= n");
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    auto p = Permutation::trusted(w);
    if (is_in_class(p, c)) visit(p);
  } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Permutation> enumerate(int n, const ClassTag& c, const Budget& budget) {
  std::vector<Permutation> out;
  for_each_in_class(n, c, [&](const Permutation& p) { out.push_back(p); }, budget);
  return out;
}

long long count_class(int n, const ClassTag& c, const Budget& budget) {
  long long count = 0;
  for_each_in_class(n, c, [&](const Permutation&) { ++count; }, budget);
  return count;
}

bool same_multiset(std::vector<StatVector> a, std::vector<StatVector> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

FunctionMap::FunctionMap(std::vector<int> img) : n(static_cast<int>(img.size())), image(std::move(img)) {
  for (int i = 1; i <= n; ++i)
    if (image[i - 1] < 1 || image[i - 1] > n)
      throw DomainError("function value f(" + std::to_string(i) + ")=" + std::to_string(image[i - 1]) +
                        " outside 1.." + std::to_string(n));
}

namespace {

std::vector<int> component_labels(const FunctionMap& f) {
  std::vector<int> parent(static_cast<size_t>(f.n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int i = 1; i <= f.n; ++i) {
    int a = find(i), b = find(f(i));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  for (int i = 1; i <= f.n; ++i) parent[i] = find(i);
  return parent;
}

}  // namespace

std::vector<Factor> canonical_factorization(const FunctionMap& f) {
  auto label = component_labels(f);
  std::vector<Factor> out;
  std::vector<int> slot(static_cast<size_t>(f.n) + 1, -1);
  for (int i = 1; i <= f.n; ++i) {
    int root = label[i];
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[root]].subset.push_back(i);
  }
  std::vector<int> rank(static_cast<size_t>(f.n) + 1, 0);
  for (auto& fac : out) {
    for (size_t k = 0; k < fac.subset.size(); ++k) rank[fac.subset[k]] = static_cast<int>(k) + 1;
    std::vector<int> img;
    img.reserve(fac.subset.size());
    for (int x : fac.subset) img.push_back(rank[f(x)]);
    fac.map = FunctionMap(std::move(img));
  }
  return out;
}

int component_count(const FunctionMap& f) {
  auto label = component_labels(f);
  int c = 0;
  for (int i = 1; i <= f.n; ++i) c += label[i] == i;
  return c;
}

Integer count_class_functions(int n, FunctionKind kind, const Budget& budget) {
  if (n < 0) throw DomainError("negative size");
  require_within(n, budget.fn_scan_max, "function scan");
  if (n == 0) return kind == FunctionKind::UltimatelyIdempotent ? 1 : 0;
  std::vector<int> f(static_cast<size_t>(n), 0);  // 0-based values
  long long count = 0;
  std::vector<int> img(static_cast<size_t>(n));
  while (true) {
    for (int i = 0; i < n; ++i) {
      int x = i;
      for (int s = 0; s < n - 1; ++s) x = f[x];
      img[i] = x;
    }
    bool ok = true;
    if (kind == FunctionKind::UltimatelyIdempotent) {
      for (int i = 0; i < n && ok; ++i) ok = f[img[i]] == img[i];
    } else {
      for (int i = 1; i < n && ok; ++i) ok = img[i] == img[0];
    }
    count += ok;
    int pos = 0;
    while (pos < n && ++f[pos] == n) f[pos++] = 0;
    if (pos == n) break;
  }
  return Integer(std::to_string(count));
}

}  // namespace eulerian

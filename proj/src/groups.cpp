#include "dowling/groups.hpp"

#include <string>

#include "dowling/errors.hpp"

namespace dowling {

namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

GroupTable GroupTable::cyclic(int m) {
  if (m < 1) throw InvalidOrderError("cyclic group order must be positive, got " + std::to_string(m));
  std::vector<GElem> mul(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  std::vector<GElem> inv(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) mul[static_cast<std::size_t>(a * m + b)] = (a + b) % m;
    inv[static_cast<std::size_t>(a)] = (m - a) % m;
  }
  return GroupTable(m, std::move(mul), std::move(inv));
}

GroupTable GroupTable::from_table(const std::vector<std::vector<int>>& raw) {
  const int n = static_cast<int>(raw.size());
  if (n == 0) throw AxiomViolation("shape", "empty table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(raw[static_cast<std::size_t>(a)].size()) != n)
      throw AxiomViolation("shape", "row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b) {
      const int v = raw[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (v < 0 || v >= n) throw AxiomViolation("closure", triple(a, b, v));
    }
  }
  auto at = [&](int a, int b) { return raw[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };

  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = at(c, x) == x && at(x, c) == x;
    if (ok) e = c;
  }
  if (e < 0) throw AxiomViolation("identity", "no two-sided identity");

  std::vector<int> raw_inv(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (at(x, y) == e && at(y, x) == e) {
        raw_inv[static_cast<std::size_t>(x)] = y;
        break;
      }
    }
    if (raw_inv[static_cast<std::size_t>(x)] < 0)
      throw AxiomViolation("inverse", "no inverse for " + std::to_string(x));
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (at(at(x, y), z) != at(x, at(y, z))) throw AxiomViolation("associativity", triple(x, y, z));

  // Relabel: identity first, remaining elements in original order.
  std::vector<int> to_new(static_cast<std::size_t>(n));
  int next = 1;
  for (int x = 0; x < n; ++x) to_new[static_cast<std::size_t>(x)] = (x == e) ? 0 : next++;

  std::vector<GElem> mul(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<GElem> inv(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    const int nx = to_new[static_cast<std::size_t>(x)];
    inv[static_cast<std::size_t>(nx)] = to_new[static_cast<std::size_t>(raw_inv[static_cast<std::size_t>(x)])];
    for (int y = 0; y < n; ++y) {
      const int ny = to_new[static_cast<std::size_t>(y)];
      mul[static_cast<std::size_t>(nx * n + ny)] = to_new[static_cast<std::size_t>(at(x, y))];
    }
  }
  return GroupTable(n, std::move(mul), std::move(inv));
}

bool GroupTable::is_abelian() const noexcept {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<int>> GroupTable::table() const {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(order_), std::vector<int>(static_cast<std::size_t>(order_)));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = mul(a, b);
  return t;
}

GroupTable cyclic_group(int m) { return GroupTable::cyclic(m); }

GroupTable group_from_table(const std::vector<std::vector<int>>& raw) { return GroupTable::from_table(raw); }

}  // namespace dowling

#pragma once

#include <cstddef>
#include <vector>

namespace dowling {

/// Index of a group element inside its owning GroupTable.
using GElem = int;

/// A finite group given by its multiplication table. The identity is
/// always index 0; every constructor enforces this.
///
/// Immutable after construction.
class GroupTable {
 public:
  /// Validates the group axioms on `raw` and relabels so the identity
  /// becomes index 0 (other elements keep their relative order).
  /// Throws AxiomViolation naming the failed axiom and a witness.
  static GroupTable from_table(const std::vector<std::vector<int>>& raw);

  /// Z_m with mul(a, b) = (a + b) mod m. Throws InvalidOrderError for m < 1.
  static GroupTable cyclic(int m);

  int order() const noexcept { return order_; }
  static constexpr GElem identity() noexcept { return 0; }

  GElem mul(GElem a, GElem b) const noexcept {
    return mul_[static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) +
                static_cast<std::size_t>(b)];
  }
  GElem inv(GElem a) const noexcept { return inv_[static_cast<std::size_t>(a)]; }

  bool is_abelian() const noexcept;

  /// Row-major copy of the table.
  std::vector<std::vector<int>> table() const;

  bool operator==(const GroupTable&) const = default;

 private:
  GroupTable(int order, std::vector<GElem> mul, std::vector<GElem> inv)
      : order_(order), mul_(std::move(mul)), inv_(std::move(inv)) {}

  int order_ = 1;
  std::vector<GElem> mul_;
  std::vector<GElem> inv_;
};

GroupTable cyclic_group(int m);
GroupTable group_from_table(const std::vector<std::vector<int>>& raw);

}  // namespace dowling

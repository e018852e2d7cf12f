#ifndef EXPANSE_BETTI_HPP
#define EXPANSE_BETTI_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace expanse {

/// Which module a Betti table describes: the ideal I or the quotient S/I.
enum class ModuleKind { Ideal, Quotient };

/**
 * Graded Betti numbers beta_{i,j}: homological degree i, internal degree j.
 * Only nonzero entries are stored.
 */
class BettiTable {
  public:
    explicit BettiTable(ModuleKind kind = ModuleKind::Ideal) : kind_(kind) {}

    ModuleKind kind() const { return kind_; }
    const std::map<std::pair<int, int>, std::uint64_t>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    std::uint64_t at(int i, int j) const;
    /// Adds to entry (i, j); zero increments are ignored.
    void add(int i, int j, std::uint64_t value);

    /// beta_i = sum_j beta_{i,j}, for i = 0 .. pd.
    std::vector<std::uint64_t> totals() const;
    /// max{j - i : beta_{i,j} != 0}. Throws on an empty table.
    int regularity() const;
    /// max{i : beta_{i,j} != 0}. Throws on an empty table.
    int projectiveDimension() const;

    /// beta_{i,j}(I) from beta_{i+1,j}(S/I) and back.
    BettiTable asIdeal() const;
    BettiTable asQuotient() const;

    std::string format() const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

  private:
    ModuleKind kind_;
    std::map<std::pair<int, int>, std::uint64_t> entries_;
};

const char* toString(ModuleKind kind);

}  // namespace expanse

#endif  // EXPANSE_BETTI_HPP

#ifndef EXPANSE_LINALG_HPP
#define EXPANSE_LINALG_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace expanse {

/// Coefficient field: the rationals or GF(p) for a prime p < 2^31.
class FieldSpec {
  public:
    static FieldSpec rationals() { return FieldSpec(0); }
    /// Throws InvalidArgument unless p is a prime below 2^31.
    static FieldSpec prime(std::uint32_t p);

    bool isRational() const { return characteristic_ == 0; }
    std::uint32_t characteristic() const { return characteristic_; }
    /// "Q" or "GF(p)".
    std::string name() const;

    friend bool operator==(FieldSpec, FieldSpec) = default;

  private:
    explicit FieldSpec(std::uint32_t c) : characteristic_(c) {}
    std::uint32_t characteristic_;
};

/// Integer matrix with sorted sparse rows: (column, value) pairs, no zeros.
struct SparseMatrix {
    using Row = std::vector<std::pair<std::uint32_t, std::int64_t>>;

    std::size_t columns = 0;
    std::vector<Row> rows;
};

/**
 * Exact rank over the given field.
 *
 * Over GF(p) entries are reduced mod p. Over Q the elimination is
 * fraction-free: rows are combined with integer multipliers and divided by
 * their content, first in overflow-checked 64-bit arithmetic and, if that
 * overflows, again with arbitrary-precision integers.
 */
std::size_t rank(const SparseMatrix& matrix, FieldSpec field);

/// Rank over Q using arbitrary-precision arithmetic throughout.
std::size_t rankRationalBig(const SparseMatrix& matrix);

}  // namespace expanse

#endif  // EXPANSE_LINALG_HPP

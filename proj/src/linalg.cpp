#include "expanse/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>

#include "expanse/errors.hpp"

namespace expanse {

namespace {

bool isPrime(std::uint32_t p) {
    if (p < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

struct Overflow {};

// Overflow-checked 64-bit integers.
struct CheckedOps {
    using Int = std::int64_t;
    static Int mul(Int a, Int b) {
        Int r;
        if (__builtin_mul_overflow(a, b, &r)) {
            throw Overflow{};
        }
        return r;
    }
    static Int sub(Int a, Int b) {
        Int r;
        if (__builtin_sub_overflow(a, b, &r)) {
            throw Overflow{};
        }
        return r;
    }
    static Int abs(Int a) {
        if (a == std::numeric_limits<Int>::min()) {
            throw Overflow{};
        }
        return a < 0 ? -a : a;
    }
    static Int gcd(Int a, Int b) { return std::gcd(a, b); }
};

struct BigOps {
    using Int = boost::multiprecision::cpp_int;
    static Int mul(const Int& a, const Int& b) { return a * b; }
    static Int sub(const Int& a, const Int& b) { return a - b; }
    static Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }
    static Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
};

template <typename Ops>
std::size_t integerRowEchelonRank(const SparseMatrix& matrix) {
    using Int = typename Ops::Int;
    using Row = std::vector<std::pair<std::uint32_t, Int>>;

    std::vector<Row> pivots(matrix.columns);
    std::size_t rank = 0;
    Row scratch;

    for (const SparseMatrix::Row& source : matrix.rows) {
        Row row;
        row.reserve(source.size());
        for (const auto& [c, v] : source) {
            if (v != 0) {
                row.emplace_back(c, Int(v));
            }
        }
        while (!row.empty()) {
            const std::uint32_t lead = row.front().first;
            Row& pivot = pivots[lead];
            if (pivot.empty()) {
                // Store primitive and with positive leading entry.
                Int g = 0;
                for (const auto& entry : row) {
                    g = Ops::gcd(g, Ops::abs(entry.second));
                }
                const bool negate = row.front().second < 0;
                for (auto& entry : row) {
                    entry.second /= g;
                    if (negate) {
                        entry.second = -entry.second;
                    }
                }
                pivot = std::move(row);
                ++rank;
                break;
            }
            // row <- a * row - b * pivot with a, b the leading entries over their gcd.
            Int a = pivot.front().second;
            Int b = row.front().second;
            const Int g = Ops::gcd(Ops::abs(a), Ops::abs(b));
            a /= g;
            b /= g;
            scratch.clear();
            auto r = row.begin();
            auto p = pivot.begin();
            while (r != row.end() || p != pivot.end()) {
                if (p == pivot.end() || (r != row.end() && r->first < p->first)) {
                    scratch.emplace_back(r->first, Ops::mul(a, r->second));
                    ++r;
                } else if (r == row.end() || p->first < r->first) {
                    scratch.emplace_back(p->first, Ops::sub(Int(0), Ops::mul(b, p->second)));
                    ++p;
                } else {
                    Int v = Ops::sub(Ops::mul(a, r->second), Ops::mul(b, p->second));
                    if (v != 0) {
                        scratch.emplace_back(r->first, std::move(v));
                    }
                    ++r;
                    ++p;
                }
            }
            Int content = 0;
            for (const auto& entry : scratch) {
                content = Ops::gcd(content, Ops::abs(entry.second));
            }
            if (content > 1) {
                for (auto& entry : scratch) {
                    entry.second /= content;
                }
            }
            row.swap(scratch);
        }
    }
    return rank;
}

std::uint64_t powMod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1U) {
            result = result * base % mod;
        }
        base = base * base % mod;
        exp >>= 1U;
    }
    return result;
}

std::size_t modularRank(const SparseMatrix& matrix, std::uint32_t p) {
    using Row = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
    const std::uint64_t mod = p;
    std::vector<Row> pivots(matrix.columns);
    std::size_t rank = 0;
    Row scratch;

    for (const SparseMatrix::Row& source : matrix.rows) {
        Row row;
        row.reserve(source.size());
        for (const auto& [c, v] : source) {
            const auto m = static_cast<std::uint64_t>(((v % static_cast<std::int64_t>(mod)) + static_cast<std::int64_t>(mod)) %
                                                      static_cast<std::int64_t>(mod));
            if (m != 0) {
                row.emplace_back(c, m);
            }
        }
        while (!row.empty()) {
            const std::uint32_t lead = row.front().first;
            Row& pivot = pivots[lead];
            if (pivot.empty()) {
                // Normalise to a leading 1.
                const std::uint64_t inv = powMod(row.front().second, mod - 2, mod);
                for (auto& entry : row) {
                    entry.second = entry.second * inv % mod;
                }
                pivot = std::move(row);
                ++rank;
                break;
            }
            const std::uint64_t factor = row.front().second;
            scratch.clear();
            auto r = row.begin();
            auto q = pivot.begin();
            while (r != row.end() || q != pivot.end()) {
                if (q == pivot.end() || (r != row.end() && r->first < q->first)) {
                    scratch.push_back(*r);
                    ++r;
                } else if (r == row.end() || q->first < r->first) {
                    scratch.emplace_back(q->first, (mod - factor * q->second % mod) % mod);
                    ++q;
                } else {
                    const std::uint64_t v = (r->second + mod - factor * q->second % mod) % mod;
                    if (v != 0) {
                        scratch.emplace_back(r->first, v);
                    }
                    ++r;
                    ++q;
                }
            }
            row.swap(scratch);
        }
    }
    return rank;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p >= (std::uint32_t{1} << 31) || !isPrime(p)) {
        throw InvalidArgument("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
    }
    return FieldSpec(p);
}

std::string FieldSpec::name() const {
    return isRational() ? "Q" : "GF(" + std::to_string(characteristic_) + ")";
}

std::size_t rankRationalBig(const SparseMatrix& matrix) {
    return integerRowEchelonRank<BigOps>(matrix);
}

std::size_t rank(const SparseMatrix& matrix, FieldSpec field) {
    if (!field.isRational()) {
        return modularRank(matrix, field.characteristic());
    }
    try {
        return integerRowEchelonRank<CheckedOps>(matrix);
    } catch (const Overflow&) {
        return rankRationalBig(matrix);
    }
}

}  // namespace expanse

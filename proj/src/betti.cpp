#include "expanse/betti.hpp"

#include <algorithm>
#include <sstream>

#include "expanse/errors.hpp"

namespace expanse {

const char* toString(ModuleKind kind) {
    return kind == ModuleKind::Ideal ? "ideal" : "quotient";
}

std::uint64_t BettiTable::at(int i, int j) const {
    const auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::uint64_t value) {
    if (value != 0) {
        entries_[{i, j}] += value;
    }
}

std::vector<std::uint64_t> BettiTable::totals() const {
    if (entries_.empty()) {
        return {};
    }
    std::vector<std::uint64_t> out(static_cast<std::size_t>(projectiveDimension()) + 1, 0);
    for (const auto& [key, value] : entries_) {
        out[static_cast<std::size_t>(key.first)] += value;
    }
    return out;
}

int BettiTable::regularity() const {
    if (entries_.empty()) {
        throw InvalidArgument("regularity of an empty Betti table");
    }
    int reg = entries_.begin()->first.second - entries_.begin()->first.first;
    for (const auto& [key, value] : entries_) {
        reg = std::max(reg, key.second - key.first);
    }
    return reg;
}

int BettiTable::projectiveDimension() const {
    if (entries_.empty()) {
        throw InvalidArgument("projective dimension of an empty Betti table");
    }
    // Keys are ordered by homological degree first.
    return entries_.rbegin()->first.first;
}

BettiTable BettiTable::asIdeal() const {
    if (kind_ == ModuleKind::Ideal) {
        return *this;
    }
    BettiTable out(ModuleKind::Ideal);
    for (const auto& [key, value] : entries_) {
        if (key.first > 0) {
            out.add(key.first - 1, key.second, value);
        }
    }
    return out;
}

BettiTable BettiTable::asQuotient() const {
    if (kind_ == ModuleKind::Quotient) {
        return *this;
    }
    BettiTable out(ModuleKind::Quotient);
    out.add(0, 0, 1);
    for (const auto& [key, value] : entries_) {
        out.add(key.first + 1, key.second, value);
    }
    return out;
}

std::string BettiTable::format() const {
    std::ostringstream os;
    os << toString(kind_) << ":";
    for (const auto& [key, value] : entries_) {
        os << " b(" << key.first << "," << key.second << ")=" << value;
    }
    return os.str();
}

}  // namespace expanse

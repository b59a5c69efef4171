#include "strata/stratum.hpp"

#include <algorithm>
#include <iterator>

#include "strata/error.hpp"

namespace strata {

Stratum::Stratum(std::initializer_list<IndexId> members) {
    *this = from_members(std::vector<IndexId>(members));
}

Stratum Stratum::from_members(std::vector<IndexId> members) {
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
        throw Error(ErrorKind::InvalidArgument, "stratum with repeated member");
    }
    Stratum s;
    s.members_ = std::move(members);
    return s;
}

bool Stratum::contains(IndexId i) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), i);
}

bool Stratum::is_subset_of(const Stratum& other) const noexcept {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
}

bool Stratum::intersects(const Stratum& other) const noexcept {
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
        if (*a == *b) return true;
        if (*a < *b) ++a; else ++b;
    }
    return false;
}

Stratum Stratum::united(const Stratum& other) const {
    Stratum out;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                   std::back_inserter(out.members_));
    return out;
}

Stratum Stratum::intersected(const Stratum& other) const {
    Stratum out;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                          other.members_.end(), std::back_inserter(out.members_));
    return out;
}

Stratum Stratum::without(const Stratum& other) const {
    Stratum out;
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out.members_));
    return out;
}

Stratum Stratum::with(IndexId i) const {
    Stratum out = *this;
    auto pos = std::lower_bound(out.members_.begin(), out.members_.end(), i);
    if (pos == out.members_.end() || *pos != i) out.members_.insert(pos, i);
    return out;
}

std::vector<Stratum> Stratum::subsets() const {
    const std::size_t n = members_.size();
    std::vector<Stratum> out;
    out.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Stratum s;
        for (std::size_t b = 0; b < n; ++b) {
            if (mask & (std::size_t{1} << b)) s.members_.push_back(members_[b]);
        }
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::strong_ordering Stratum::operator<=>(const Stratum& other) const noexcept {
    if (auto c = members_.size() <=> other.members_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(members_.begin(), members_.end(),
                                                  other.members_.begin(), other.members_.end());
}

std::string Stratum::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(members_[i]);
    }
    return out + "}";
}

std::size_t StratumHash::operator()(const Stratum& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL ^ s.size();
    for (IndexId i : s) {
        h ^= static_cast<std::size_t>(i) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::string to_string(const StratumSet& set) {
    std::string out = "{";
    bool first = true;
    for (const auto& s : set) {
        if (!first) out += ",";
        first = false;
        out += s.to_string();
    }
    return out + "}";
}

}  // namespace strata

#include "strata/strata_structure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "strata/error.hpp"

namespace strata {

StrataStructure::StrataStructure(int dimension, std::vector<IndexId> indices,
                                 std::vector<Stratum> strata, std::vector<std::string> names)
    : dimension_(dimension), indices_(std::move(indices)) {
    if (!names.empty() && names.size() != indices_.size()) {
        throw Error(ErrorKind::InvalidArgument, "component names do not match index count");
    }
    // Keep names attached to their ids while sorting.
    std::vector<std::size_t> order(indices_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return indices_[a] < indices_[b]; });
    std::vector<IndexId> sorted_ids;
    for (std::size_t pos : order) {
        if (!sorted_ids.empty() && sorted_ids.back() == indices_[pos]) {
            throw Error(ErrorKind::InvalidArgument,
                        "index " + std::to_string(indices_[pos]) + " listed twice");
        }
        sorted_ids.push_back(indices_[pos]);
        names_.push_back(names.empty() ? "E" + std::to_string(indices_[pos]) : names[pos]);
    }
    indices_ = std::move(sorted_ids);

    std::sort(strata.begin(), strata.end());
    for (std::size_t t = 0; t < strata.size(); ++t) {
        if (t > 0 && strata[t] == strata[t - 1]) {
            if (duplicates_.empty() || duplicates_.back() != strata[t]) {
                duplicates_.push_back(strata[t]);
            }
            continue;
        }
        strata_.push_back(strata[t]);
    }
    members_.insert(strata_.begin(), strata_.end());
}

StrataStructure StrataStructure::bare_germ(int dimension) {
    return StrataStructure(dimension, {}, {Stratum{}});
}

StrataStructure StrataStructure::power_set(int dimension, std::vector<IndexId> indices) {
    std::vector<Stratum> strata;
    for (auto& j : Stratum::from_members(indices).subsets()) {
        if (j.size() <= static_cast<std::size_t>(dimension)) strata.push_back(std::move(j));
    }
    return StrataStructure(dimension, std::move(indices), std::move(strata));
}

bool StrataStructure::has_index(IndexId i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

std::vector<Stratum> StrataStructure::level(std::size_t k) const {
    std::vector<Stratum> out;
    for (const auto& j : strata_) {
        if (j.size() == k) out.push_back(j);
    }
    return out;
}

std::size_t StrataStructure::max_stratum_size() const noexcept {
    return strata_.empty() ? 0 : strata_.back().size();
}

std::vector<IndexId> StrataStructure::neighbors(IndexId i) const {
    std::vector<IndexId> out;
    for (IndexId j : indices_) {
        if (j != i && contains(Stratum::from_members({std::min(i, j), std::max(i, j)}))) {
            out.push_back(j);
        }
    }
    return out;
}

std::vector<IndexId> StrataStructure::triangle_apexes(IndexId i, IndexId j) const {
    std::vector<IndexId> out;
    if (i == j) return out;
    for (IndexId k : indices_) {
        if (k == i || k == j) continue;
        if (contains(Stratum::from_members({i, j, k}))) out.push_back(k);
    }
    return out;
}

std::string StrataStructure::name_of(IndexId i) const {
    auto pos = std::lower_bound(indices_.begin(), indices_.end(), i);
    if (pos == indices_.end() || *pos != i) return "E" + std::to_string(i);
    return names_[static_cast<std::size_t>(pos - indices_.begin())];
}

bool StrataStructure::operator==(const StrataStructure& other) const {
    return dimension_ == other.dimension_ && indices_ == other.indices_ &&
           strata_ == other.strata_;
}

StrataStructure make_structure(int dimension, std::vector<IndexId> indices,
                               std::vector<Stratum> strata) {
    StrataStructure s(dimension, std::move(indices), std::move(strata));
    auto report = validate_structure(s);
    if (!report.valid()) throw Error(ErrorKind::InvalidStructure, report.to_string());
    return s;
}

std::string_view violation_kind_name(ViolationKind kind) noexcept {
    switch (kind) {
        case ViolationKind::MissingEmpty: return "missing_empty";
        case ViolationKind::MissingSingleton: return "missing_singleton";
        case ViolationKind::NotDownwardClosed: return "not_downward_closed";
        case ViolationKind::Oversize: return "oversize";
        case ViolationKind::Duplicate: return "duplicate";
        case ViolationKind::UnknownMember: return "unknown_member";
        case ViolationKind::BadDimension: return "bad_dimension";
    }
    return "unknown";
}

StratumSet ValidationReport::missing_strata() const {
    StratumSet out;
    for (const auto& v : violations) {
        if (v.kind == ViolationKind::NotDownwardClosed || v.kind == ViolationKind::MissingSingleton ||
            v.kind == ViolationKind::MissingEmpty) {
            out.insert(v.stratum);
        }
    }
    return out;
}

std::string ValidationReport::to_string() const {
    if (valid()) return "valid";
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += "; ";
        out += std::string(violation_kind_name(v.kind)) + " " + v.stratum.to_string();
        if (!v.detail.empty()) out += " (" + v.detail + ")";
    }
    return out;
}

ValidationReport validate_structure(const StrataStructure& s) {
    ValidationReport report;
    auto& out = report.violations;
    const std::size_t d = s.dimension() < 0 ? 0 : static_cast<std::size_t>(s.dimension());
    if (s.dimension() < 1) {
        out.push_back({ViolationKind::BadDimension, {}, "dimension must be positive"});
    }
    if (!s.contains(Stratum{})) out.push_back({ViolationKind::MissingEmpty, {}, ""});
    for (IndexId i : s.indices()) {
        if (!s.contains(Stratum{i})) out.push_back({ViolationKind::MissingSingleton, Stratum{i}, ""});
    }
    for (const auto& dup : s.duplicates()) {
        out.push_back({ViolationKind::Duplicate, dup, ""});
    }
    StratumSet missing;
    for (const auto& j : s.strata()) {
        bool known = true;
        for (IndexId i : j) {
            if (!s.has_index(i)) {
                out.push_back({ViolationKind::UnknownMember, j,
                               "index " + std::to_string(i) + " not in I"});
                known = false;
            }
        }
        if (j.size() > d) {
            out.push_back({ViolationKind::Oversize, j,
                           "size " + std::to_string(j.size()) + " exceeds dimension"});
        }
        if (!known || j.size() > 20) continue;
        for (const auto& sub : j.subsets()) {
            // Singletons and the empty set have their own checks above.
            if (sub.size() < 2 || sub == j) continue;
            if (!s.contains(sub)) missing.insert(sub);
        }
    }
    for (const auto& m : missing) out.push_back({ViolationKind::NotDownwardClosed, m, "missing"});
    return report;
}

StratumSet closure(const StrataStructure& s, const StratumSet& a) {
    for (const auto& j : a) {
        if (!s.contains(j)) {
            throw Error(ErrorKind::MemberNotInStructure, j.to_string() + " is not a stratum");
        }
    }
    StratumSet out;
    if (a.empty()) return out;
    for (const auto& candidate : s.strata()) {
        for (const auto& j : a) {
            if (j.is_subset_of(candidate)) {
                out.insert(candidate);
                break;
            }
        }
    }
    return out;
}

StrataStructure truncate(const StrataStructure& s, std::size_t k) {
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "truncation level must be positive");
    std::vector<Stratum> kept;
    for (const auto& j : s.strata()) {
        if (j.size() <= k) kept.push_back(j);
    }
    return StrataStructure(s.dimension(), s.indices(), std::move(kept), s.names());
}

KPath KPath::from_vertices(const std::vector<IndexId>& vertices) {
    KPath p;
    p.k = 1;
    for (IndexId v : vertices) p.entries.push_back(Stratum{v});
    return p;
}

std::vector<IndexId> KPath::vertices() const {
    if (k != 1) throw Error(ErrorKind::NotAPath, "vertex list requested for a k-path with k != 1");
    std::vector<IndexId> out;
    for (const auto& e : entries) {
        if (e.size() != 1) throw Error(ErrorKind::NotAPath, "1-path entry is not a singleton");
        out.push_back(e.front());
    }
    return out;
}

StratumSet KPath::support() const { return StratumSet(entries.begin(), entries.end()); }

std::vector<Stratum> KPath::subsupport() const {
    std::vector<Stratum> out;
    for (std::size_t t = 1; t < entries.size(); ++t) {
        out.push_back(entries[t - 1].united(entries[t]));
    }
    return out;
}

KPath KPath::reversed() const {
    KPath r = *this;
    std::reverse(r.entries.begin(), r.entries.end());
    return r;
}

KPath KPath::composed(const KPath& tail) const {
    if (entries.empty() || tail.entries.empty() || back() != tail.front() || k != tail.k) {
        throw Error(ErrorKind::EndpointMismatch, "paths do not share an endpoint");
    }
    KPath out = *this;
    out.entries.insert(out.entries.end(), tail.entries.begin() + 1, tail.entries.end());
    return out;
}

bool is_k_path(const StrataStructure& s, const std::vector<Stratum>& seq, std::size_t k) {
    if (seq.empty() || k == 0) return false;
    for (const auto& j : seq) {
        if (j.size() != k || !s.contains(j)) return false;
    }
    for (std::size_t t = 1; t < seq.size(); ++t) {
        Stratum u = seq[t - 1].united(seq[t]);
        if (u.size() != k + 1 || !s.contains(u)) return false;
    }
    return true;
}

std::vector<std::vector<Stratum>> k_connected_components(const StrataStructure& s,
                                                         const StratumSet& a, std::size_t k) {
    for (const auto& j : a) {
        if (!s.contains(j)) {
            throw Error(ErrorKind::MemberNotInStructure, j.to_string() + " is not a stratum");
        }
        if (j.size() != k) {
            throw Error(ErrorKind::InvalidArgument,
                        j.to_string() + " does not have " + std::to_string(k) + " members");
        }
    }
    std::vector<Stratum> items(a.begin(), a.end());
    std::vector<int> label(items.size(), -1);
    std::vector<std::vector<Stratum>> blocks;
    for (std::size_t start = 0; start < items.size(); ++start) {
        if (label[start] >= 0) continue;
        const int id = static_cast<int>(blocks.size());
        blocks.emplace_back();
        std::deque<std::size_t> queue{start};
        label[start] = id;
        while (!queue.empty()) {
            std::size_t cur = queue.front();
            queue.pop_front();
            blocks.back().push_back(items[cur]);
            for (std::size_t other = 0; other < items.size(); ++other) {
                if (label[other] >= 0) continue;
                Stratum u = items[cur].united(items[other]);
                if (u.size() == k + 1 && s.contains(u)) {
                    label[other] = id;
                    queue.push_back(other);
                }
            }
        }
        std::sort(blocks.back().begin(), blocks.back().end());
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return blocks;
}

std::vector<std::vector<IndexId>> index_components(const StrataStructure& s) {
    std::map<IndexId, bool> seen;
    std::vector<std::vector<IndexId>> out;
    for (IndexId start : s.indices()) {
        if (seen[start]) continue;
        std::vector<IndexId> comp;
        std::deque<IndexId> queue{start};
        seen[start] = true;
        while (!queue.empty()) {
            IndexId cur = queue.front();
            queue.pop_front();
            comp.push_back(cur);
            for (IndexId nb : s.neighbors(cur)) {
                if (!seen[nb]) {
                    seen[nb] = true;
                    queue.push_back(nb);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_one_connected(const StrataStructure& s) { return index_components(s).size() <= 1; }

StratumSet singletons(const StrataStructure& s) {
    StratumSet out;
    for (const auto& j : s.level(1)) out.insert(j);
    return out;
}

}  // namespace strata

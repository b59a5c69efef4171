#include "strata/homotopy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "strata/error.hpp"

namespace strata {

namespace {

using Path = std::vector<IndexId>;

struct PathHash {
    std::size_t operator()(const Path& p) const noexcept {
        std::size_t h = p.size();
        for (IndexId v : p) h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

class MoveGenerator {
public:
    MoveGenerator(const StrataStructure& s, const StratumSet& allowed) : s_(s) {
        for (const auto& j : allowed) {
            if (j.size() == 1) allowed_.push_back(j.front());
        }
        std::sort(allowed_.begin(), allowed_.end());
    }

    bool allowed(IndexId v) const { return std::binary_search(allowed_.begin(), allowed_.end(), v); }

    const std::vector<IndexId>& neighbors(IndexId v) {
        auto it = neighbors_.find(v);
        if (it != neighbors_.end()) return it->second;
        std::vector<IndexId> list;
        for (IndexId w : s_.neighbors(v)) {
            if (allowed(w)) list.push_back(w);
        }
        return neighbors_.emplace(v, std::move(list)).first->second;
    }

    const std::vector<IndexId>& apexes(IndexId a, IndexId b) {
        auto key = std::make_pair(std::min(a, b), std::max(a, b));
        auto it = apexes_.find(key);
        if (it != apexes_.end()) return it->second;
        std::vector<IndexId> list;
        for (IndexId w : s_.triangle_apexes(a, b)) {
            if (allowed(w)) list.push_back(w);
        }
        return apexes_.emplace(key, std::move(list)).first->second;
    }

    bool is_triangle(IndexId a, IndexId b, IndexId c) const {
        if (a == b || b == c || a == c) return false;
        return s_.contains(Stratum::from_members({a, b, c}));
    }

    template <typename Visit>
    void for_each_successor(const Path& p, std::size_t max_edges, Visit&& visit) {
        const std::size_t s = p.size() - 1;
        for (std::size_t t = 0; t + 2 <= s; ++t) {
            if (p[t] == p[t + 2]) {
                Path q(p.begin(), p.begin() + static_cast<long>(t) + 1);
                q.insert(q.end(), p.begin() + static_cast<long>(t) + 3, p.end());
                visit(std::move(q), HomotopyMove{HomotopyMove::Kind::BacktrackRemove, t, 0});
            }
        }
        for (std::size_t t = 0; t + 2 <= s; ++t) {
            if (is_triangle(p[t], p[t + 1], p[t + 2])) {
                Path q = p;
                q.erase(q.begin() + static_cast<long>(t) + 1);
                visit(std::move(q), HomotopyMove{HomotopyMove::Kind::TriangleRemove, t, 0});
            }
        }
        if (s + 1 <= max_edges) {
            for (std::size_t t = 0; t < s; ++t) {
                for (IndexId w : apexes(p[t], p[t + 1])) {
                    Path q = p;
                    q.insert(q.begin() + static_cast<long>(t) + 1, w);
                    visit(std::move(q), HomotopyMove{HomotopyMove::Kind::TriangleInsert, t, w});
                }
            }
        }
        if (s + 2 <= max_edges) {
            for (std::size_t t = 0; t <= s; ++t) {
                for (IndexId w : neighbors(p[t])) {
                    Path q = p;
                    q.insert(q.begin() + static_cast<long>(t) + 1, {w, p[t]});
                    visit(std::move(q), HomotopyMove{HomotopyMove::Kind::BacktrackInsert, t, w});
                }
            }
        }
    }

private:
    const StrataStructure& s_;
    std::vector<IndexId> allowed_;
    std::unordered_map<IndexId, std::vector<IndexId>> neighbors_;
    std::map<std::pair<IndexId, IndexId>, std::vector<IndexId>> apexes_;
};

void require_path(const StrataStructure& s, const KPath& p, const StratumSet& allowed,
                  const char* which) {
    if (p.k != 1 || !is_k_path(s, p)) {
        throw Error(ErrorKind::NotAPath, std::string(which) + " is not a 1-path");
    }
    for (const auto& e : p.entries) {
        if (!allowed.count(e)) {
            throw Error(ErrorKind::NotAPath,
                        std::string(which) + " leaves the allowed support at " + e.to_string());
        }
    }
}

}  // namespace

HomotopySearchResult elementary_homotopy_search(const StrataStructure& s, const KPath& from,
                                                const KPath& to, const StratumSet& allowed,
                                                const HomotopySearchOptions& options) {
    if (from.entries.empty() || to.entries.empty() || from.front() != to.front() ||
        from.back() != to.back()) {
        throw Error(ErrorKind::EndpointMismatch, "paths do not join the same strata");
    }
    require_path(s, from, allowed, "first path");
    require_path(s, to, allowed, "second path");

    const Path start = from.vertices();
    const Path goal = to.vertices();
    HomotopySearchResult result;
    if (start == goal) {
        result.equivalent = true;
        return result;
    }
    const std::size_t max_edges =
        options.max_length.value_or(std::max(start.size(), goal.size()) - 1 + 4);

    struct Node {
        Path path;
        std::size_t parent;
        HomotopyMove move;
    };
    std::vector<Node> nodes;
    std::unordered_map<Path, std::size_t, PathHash> seen;
    nodes.push_back({start, 0, {}});
    seen.emplace(start, 0);
    std::deque<std::size_t> queue{0};
    MoveGenerator gen(s, allowed);

    std::optional<std::size_t> found;
    while (!queue.empty() && !found && result.explored < options.budget) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        ++result.explored;
        const Path current = nodes[cur].path;
        gen.for_each_successor(current, max_edges, [&](Path next, HomotopyMove move) {
            if (found || seen.count(next)) return;
            nodes.push_back({next, cur, move});
            const std::size_t id = nodes.size() - 1;
            seen.emplace(std::move(next), id);
            if (nodes[id].path == goal) {
                found = id;
                return;
            }
            queue.push_back(id);
        });
    }
    if (found) {
        result.equivalent = true;
        for (std::size_t id = *found; id != 0; id = nodes[id].parent) {
            result.moves.push_back(nodes[id].move);
        }
        std::reverse(result.moves.begin(), result.moves.end());
    }
    return result;
}

std::vector<IndexId> apply_homotopy_move(const StrataStructure& s, const std::vector<IndexId>& path,
                                         const HomotopyMove& move) {
    const std::size_t t = move.position;
    const std::size_t n = path.size();
    auto illegal = [&](const char* why) {
        return Error(ErrorKind::NotAPath, std::string("illegal homotopy move: ") + why);
    };
    Path q = path;
    switch (move.kind) {
        case HomotopyMove::Kind::BacktrackRemove:
            if (t + 2 >= n || path[t] != path[t + 2]) throw illegal("no backtrack at position");
            q.erase(q.begin() + static_cast<long>(t) + 1, q.begin() + static_cast<long>(t) + 3);
            break;
        case HomotopyMove::Kind::BacktrackInsert:
            if (t >= n || move.vertex == path[t] ||
                !s.contains(Stratum::from_members({path[t], move.vertex}))) {
                throw illegal("backtrack edge not in structure");
            }
            q.insert(q.begin() + static_cast<long>(t) + 1, {move.vertex, path[t]});
            break;
        case HomotopyMove::Kind::TriangleInsert:
            if (t + 1 >= n || move.vertex == path[t] || move.vertex == path[t + 1] ||
                path[t] == path[t + 1] ||
                !s.contains(Stratum::from_members({path[t], path[t + 1], move.vertex}))) {
                throw illegal("triangle not in structure");
            }
            q.insert(q.begin() + static_cast<long>(t) + 1, move.vertex);
            break;
        case HomotopyMove::Kind::TriangleRemove:
            if (t + 2 >= n || path[t] == path[t + 1] || path[t + 1] == path[t + 2] ||
                path[t] == path[t + 2] ||
                !s.contains(Stratum::from_members({path[t], path[t + 1], path[t + 2]}))) {
                throw illegal("triangle not in structure");
            }
            q.erase(q.begin() + static_cast<long>(t) + 1);
            break;
    }
    return q;
}

std::vector<IndexId> replay_homotopy(const StrataStructure& s, std::vector<IndexId> from,
                                     const std::vector<HomotopyMove>& moves) {
    for (const auto& m : moves) from = apply_homotopy_move(s, from, m);
    return from;
}

}  // namespace strata

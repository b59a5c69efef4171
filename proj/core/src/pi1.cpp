#include "strata/pi1.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "strata/error.hpp"
#include "strata/integer_matrix.hpp"

namespace strata {

namespace {

int letter_generator(int letter) { return std::abs(letter) - 1; }

Word cyclic_reduce(Word w) {
    w = free_reduce(std::move(w));
    std::size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
        ++lo;
        --hi;
    }
    return Word(w.begin() + static_cast<long>(lo), w.begin() + static_cast<long>(hi));
}

std::vector<Word> normalize(const std::vector<Word>& relators) {
    std::vector<Word> out;
    for (const auto& r : relators) {
        Word c = cyclic_reduce(r);
        if (!c.empty()) out.push_back(std::move(c));
    }
    return out;
}

Word substitute(const Word& w, std::size_t generator, const Word& replacement) {
    const Word inv = inverse(replacement);
    Word out;
    for (int letter : w) {
        if (static_cast<std::size_t>(letter_generator(letter)) != generator) {
            out.push_back(letter);
        } else {
            const Word& piece = letter > 0 ? replacement : inv;
            out.insert(out.end(), piece.begin(), piece.end());
        }
    }
    return free_reduce(std::move(out));
}

std::size_t occurrences(const Word& w, std::size_t generator) {
    return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [&](int l) {
        return static_cast<std::size_t>(letter_generator(l)) == generator;
    }));
}

/// g^e u = 1 rotated so that g leads; returns the word equal to g.
Word solve_for(const Word& relator, std::size_t generator) {
    auto pos = std::find_if(relator.begin(), relator.end(), [&](int l) {
        return static_cast<std::size_t>(letter_generator(l)) == generator;
    });
    const int sign = *pos > 0 ? 1 : -1;
    Word rest(pos + 1, relator.end());
    rest.insert(rest.end(), relator.begin(), pos);
    return sign > 0 ? inverse(rest) : rest;
}

}  // namespace

Word free_reduce(Word w) {
    Word out;
    out.reserve(w.size());
    for (int letter : w) {
        if (!out.empty() && out.back() == -letter) {
            out.pop_back();
        } else {
            out.push_back(letter);
        }
    }
    return out;
}

Word inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& l : out) l = -l;
    return out;
}

GroupPresentation edge_path_presentation(const StrataStructure& s, IndexId base) {
    if (!s.has_index(base)) {
        throw Error(ErrorKind::UnknownIndex, "index " + std::to_string(base) + " not in I");
    }
    if (!is_one_connected(s)) throw Error(ErrorKind::NotConnected, "structure is not 1-connected");
    GroupPresentation p;
    p.base = base;
    std::map<IndexId, bool> seen{{base, true}};
    std::deque<IndexId> queue{base};
    StratumSet tree;
    while (!queue.empty()) {
        IndexId cur = queue.front();
        queue.pop_front();
        for (IndexId nb : s.neighbors(cur)) {
            if (seen[nb]) continue;
            seen[nb] = true;
            tree.insert(Stratum::from_members({cur, nb}));
            queue.push_back(nb);
        }
    }
    p.tree_edges.assign(tree.begin(), tree.end());
    for (const auto& e : s.level(2)) {
        if (!tree.count(e)) p.generators.push_back(e);
    }
    for (const auto& t : s.level(3)) {
        auto m = t.members();
        p.relators.push_back(path_word(p, {m[0], m[1], m[2], m[0]}));
    }
    return p;
}

Word path_word(const GroupPresentation& p, const std::vector<IndexId>& vertices) {
    Word w;
    for (std::size_t t = 1; t < vertices.size(); ++t) {
        const IndexId u = vertices[t - 1], v = vertices[t];
        const Stratum edge = Stratum::from_members({u, v});
        auto it = std::lower_bound(p.generators.begin(), p.generators.end(), edge);
        if (it == p.generators.end() || *it != edge) continue;  // tree edge
        const int g = static_cast<int>(it - p.generators.begin()) + 1;
        w.push_back(u < v ? g : -g);
    }
    return w;
}

std::vector<std::int64_t> abelian_invariants(const GroupPresentation& p) {
    IntegerMatrix m(p.relators.size(), p.generators.size());
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        for (int letter : p.relators[r]) {
            m(r, static_cast<std::size_t>(letter_generator(letter))) += letter > 0 ? 1 : -1;
        }
    }
    const auto diag = smith_diagonal(std::move(m));
    std::vector<std::int64_t> out;
    for (const auto& d : diag) {
        if (d > 1) out.push_back(d.convert_to<std::int64_t>());
    }
    for (std::size_t k = diag.size(); k < p.generators.size(); ++k) out.push_back(0);
    return out;
}

std::vector<std::int64_t> h1_invariants(const StrataStructure& s) {
    if (s.indices().empty()) return {};
    return abelian_invariants(edge_path_presentation(truncate(s, 3), s.indices().front()));
}

TietzeResult tietze_simplify(const GroupPresentation& p, std::size_t budget) {
    TietzeResult result;
    std::vector<bool> active(p.generators.size(), true);
    std::vector<Word> relators = normalize(p.relators);
    for (;;) {
        std::vector<std::size_t> order(relators.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return relators[a].size() < relators[b].size();
        });
        std::optional<std::pair<std::size_t, std::size_t>> pick;  // relator, generator
        for (std::size_t r : order) {
            std::map<std::size_t, std::size_t> counts;
            for (int l : relators[r]) ++counts[static_cast<std::size_t>(letter_generator(l))];
            for (const auto& [g, c] : counts) {
                if (c == 1) {
                    pick = std::make_pair(r, g);
                    break;
                }
            }
            if (pick) break;
        }
        if (!pick) break;
        const std::size_t cost = 1 + relators.size();
        if (result.work + cost > budget) break;
        result.work += cost;
        const auto [r, g] = *pick;
        Word replacement = free_reduce(solve_for(relators[r], g));
        for (auto& w : relators) w = substitute(w, g, replacement);
        relators = normalize(relators);
        active[g] = false;
        result.certificate.steps.push_back({g, r, std::move(replacement)});
    }
    for (std::size_t g = 0; g < active.size(); ++g) {
        if (active[g]) result.remaining_generators.push_back(g);
    }
    result.remaining_relators = relators;
    result.trivial = result.remaining_generators.empty() && relators.empty();
    return result;
}

bool replay_tietze(const GroupPresentation& p, const TietzeCertificate& certificate) {
    std::vector<bool> active(p.generators.size(), true);
    std::vector<Word> relators = normalize(p.relators);
    for (const auto& step : certificate.steps) {
        if (step.generator >= active.size() || !active[step.generator]) return false;
        if (step.relator >= relators.size()) return false;
        if (occurrences(relators[step.relator], step.generator) != 1) return false;
        if (occurrences(step.replacement, step.generator) != 0) return false;
        for (int l : step.replacement) {
            const auto g = static_cast<std::size_t>(letter_generator(l));
            if (g >= active.size() || !active[g]) return false;
        }
        if (!cyclic_reduce(substitute(relators[step.relator], step.generator, step.replacement))
                 .empty()) {
            return false;
        }
        for (auto& w : relators) w = substitute(w, step.generator, step.replacement);
        relators = normalize(relators);
        active[step.generator] = false;
    }
    return relators.empty() && std::none_of(active.begin(), active.end(), [](bool a) { return a; });
}

std::string_view pi1_status_name(Pi1Status s) noexcept {
    switch (s) {
        case Pi1Status::SimplyConnected: return "simply_connected";
        case Pi1Status::NotSimplyConnected: return "not_simply_connected";
        case Pi1Status::Unknown: return "unknown";
    }
    return "unknown";
}

std::string_view certificate_kind_name(CertificateKind c) noexcept {
    switch (c) {
        case CertificateKind::None: return "none";
        case CertificateKind::Tietze: return "tietze";
        case CertificateKind::BlowupProvenance: return "blowup_provenance";
    }
    return "none";
}

Pi1Verdict simply_connected_verdict(const StrataStructure& s, std::size_t budget) {
    Pi1Verdict v;
    if (s.indices().empty()) {
        v.status = Pi1Status::SimplyConnected;
        v.certificate = CertificateKind::Tietze;
        return v;
    }
    const StrataStructure h3 = truncate(s, 3);
    const auto comps = index_components(h3);
    v.components = comps.size();
    if (comps.size() > 1) {
        v.status = Pi1Status::NotSimplyConnected;
        v.witness_factor = static_cast<std::int64_t>(comps.size());
        return v;
    }
    v.presentation = edge_path_presentation(h3, h3.indices().front());
    v.h1 = abelian_invariants(v.presentation);
    if (!v.h1.empty()) {
        v.status = Pi1Status::NotSimplyConnected;
        v.witness_factor = v.h1.front();
        return v;
    }
    TietzeResult t = tietze_simplify(v.presentation, budget);
    v.steps = t.certificate.steps.size();
    if (t.trivial) {
        v.status = Pi1Status::SimplyConnected;
        v.certificate = CertificateKind::Tietze;
        v.tietze = std::move(t.certificate);
    }
    return v;
}

Pi1Verdict provenance_verdict(const BlowupTrace& trace, std::optional<std::size_t> step) {
    const BlowupTrace replay = blowup_sequence(trace.dimension, trace.centers());
    const std::size_t last = step.value_or(trace.steps.empty() ? 0 : trace.steps.size() - 1);
    if (last >= trace.steps.size() || replay.steps[last].structure != trace.steps[last].structure) {
        throw Error(ErrorKind::InvalidArgument, "trace does not replay to the claimed structure");
    }
    Pi1Verdict v;
    v.status = Pi1Status::SimplyConnected;
    v.certificate = CertificateKind::BlowupProvenance;
    v.steps = last + 1;
    return v;
}

}  // namespace strata

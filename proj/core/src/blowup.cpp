#include "strata/blowup.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "strata/error.hpp"
#include "strata/random.hpp"

namespace strata {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string members_text(const Stratum& j) {
    std::string out;
    for (IndexId i : j) {
        if (!out.empty()) out += ",";
        out += std::to_string(i);
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Error bad_center(const std::string& why) { return Error(ErrorKind::InvalidCenter, why); }

bool one_connected_over(const StratumSet& strata, int dimension) {
    std::vector<IndexId> ids;
    for (const auto& j : strata) {
        if (j.size() == 1) ids.push_back(j.front());
    }
    return is_one_connected(
        StrataStructure(dimension, ids, std::vector<Stratum>(strata.begin(), strata.end())));
}

StratumSet restrict_to_h2(const StratumSet& set) {
    StratumSet out;
    for (const auto& j : set) {
        if (j.size() <= 2) out.insert(j);
    }
    return out;
}

}  // namespace

std::string center_to_string(const BlowupCenter& c) {
    return std::visit(overloaded{
                          [](const FreePoint& p) { return "P[" + members_text(p.host) + "]"; },
                          [](const StratumCenter& p) { return "S[" + members_text(p.core) + "]"; },
                          [](const ExplicitCenter&) -> std::string {
                              throw Error(ErrorKind::InvalidArgument,
                                          "explicit centers have no string form");
                          },
                      },
                      c);
}

BlowupCenter parse_center(std::string_view spec) {
    std::string_view s = trim(spec);
    auto fail = [&](const std::string& why) {
        return Error(ErrorKind::InputFormat,
                     "bad center spec '" + std::string(spec) + "': " + why);
    };
    if (s.size() < 3 || (s[0] != 'P' && s[0] != 'S') || s[1] != '[' || s.back() != ']') {
        throw fail("expected P[...] or S[...]");
    }
    const char kind = s[0];
    std::string_view body = trim(s.substr(2, s.size() - 3));
    std::vector<IndexId> members;
    while (!body.empty()) {
        auto comma = body.find(',');
        std::string_view item = trim(body.substr(0, comma));
        IndexId value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
            throw fail("bad index '" + std::string(item) + "'");
        }
        members.push_back(value);
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
        if (trim(body).empty()) throw fail("trailing comma");
    }
    Stratum j;
    try {
        j = Stratum::from_members(std::move(members));
    } catch (const Error&) {
        throw fail("repeated index");
    }
    if (kind == 'P') return FreePoint{j};
    return StratumCenter{j};
}

std::vector<BlowupCenter> parse_center_list(std::string_view specs) {
    std::vector<BlowupCenter> out;
    while (!trim(specs).empty()) {
        auto semi = specs.find(';');
        std::string_view item = specs.substr(0, semi);
        if (!trim(item).empty()) out.push_back(parse_center(item));
        if (semi == std::string_view::npos) break;
        specs.remove_prefix(semi + 1);
    }
    return out;
}

char center_case_label(CenterCase c) noexcept {
    switch (c) {
        case CenterCase::A: return 'a';
        case CenterCase::B: return 'b';
        case CenterCase::C: return 'c';
    }
    return '?';
}

void check_center(const StrataStructure& s, const BlowupCenter& c) {
    const auto d = static_cast<std::size_t>(s.dimension());
    std::visit(
        overloaded{
            [&](const FreePoint& p) {
                if (!s.contains(p.host)) {
                    throw bad_center("free point host " + p.host.to_string() + " is not a stratum");
                }
                if (p.host.size() >= d) {
                    throw bad_center("free point in " + p.host.to_string() +
                                     " is the point E_host itself; use S[...]");
                }
            },
            [&](const StratumCenter& p) {
                if (p.core.size() < 2) {
                    throw bad_center("stratum center " + p.core.to_string() +
                                     " must have at least two members");
                }
                if (!s.contains(p.core)) {
                    throw bad_center("stratum center " + p.core.to_string() + " is not a stratum");
                }
            },
            [&](const ExplicitCenter& p) {
                for (const auto* set : {&p.z_set, &p.b_set}) {
                    for (const auto& j : *set) {
                        if (!s.contains(j)) throw bad_center(j.to_string() + " is not a stratum");
                    }
                }
                for (const auto& j : p.z_set) {
                    if (p.b_set.count(j)) throw bad_center("z and b overlap at " + j.to_string());
                    if (j.size() < 2) throw bad_center("center contains the stratum " + j.to_string());
                }
                if (closure(s, p.z_set) != p.z_set) throw bad_center("z is not closed in H");
                if (!p.b_set.count(Stratum{})) throw bad_center("b must contain the empty stratum");
                StratumSet meets = p.b_set;
                meets.insert(p.z_set.begin(), p.z_set.end());
                for (const auto& j : meets) {
                    for (const auto& sub : j.subsets()) {
                        if (!meets.count(sub)) {
                            throw bad_center("strata meeting the center are not downward closed at " +
                                             sub.to_string());
                        }
                    }
                }
                for (const auto& j : p.b_set) {
                    if (j.size() + 1 > d) {
                        throw bad_center("b member " + j.to_string() + " leaves no room for the fresh index");
                    }
                }
                if (!one_connected_over(restrict_to_h2(meets), s.dimension())) {
                    throw bad_center("strata of H_2 meeting the center are not 1-connected");
                }
            },
        },
        c);
}

CenterData compute_center_data(const StrataStructure& s, const BlowupCenter& c) {
    check_center(s, c);
    CenterData out;
    std::visit(overloaded{
                   [&](const FreePoint& p) {
                       for (auto& j : p.host.subsets()) out.b_set.insert(std::move(j));
                       out.a_set = restrict_to_h2(out.b_set);
                       out.center_case = CenterCase::A;
                   },
                   [&](const StratumCenter& p) {
                       out.z_set = closure(s, {p.core});
                       for (const auto& j : s.strata()) {
                           if (out.z_set.count(j)) continue;
                           if (s.contains(j.united(p.core))) out.b_set.insert(j);
                       }
                       for (const auto& k : s.strata()) {
                           if (k.size() <= 2 && s.contains(k.united(p.core))) out.a_set.insert(k);
                       }
                       out.center_case = p.core.size() == 2   ? CenterCase::C
                                         : p.core.size() == 3 ? CenterCase::B
                                                              : CenterCase::A;
                   },
                   [&](const ExplicitCenter& p) {
                       out.z_set = p.z_set;
                       out.b_set = p.b_set;
                       StratumSet meets = p.b_set;
                       meets.insert(p.z_set.begin(), p.z_set.end());
                       out.a_set = restrict_to_h2(meets);
                       std::size_t smallest = 0;
                       for (const auto& j : p.z_set) {
                           if (j.size() <= 3 && (smallest == 0 || j.size() < smallest)) {
                               smallest = j.size();
                           }
                       }
                       out.center_case = smallest == 2   ? CenterCase::C
                                         : smallest == 3 ? CenterCase::B
                                                         : CenterCase::A;
                   },
               },
               c);
    return out;
}

BlowupOutcome apply_blowup(const StrataStructure& s, const BlowupCenter& c) {
    CenterData data = compute_center_data(s, c);
    const IndexId fresh = s.indices().empty() ? 0 : s.indices().back() + 1;
    std::vector<Stratum> strata;
    for (const auto& j : s.strata()) {
        if (!data.z_set.count(j)) strata.push_back(j);
    }
    for (const auto& j : data.b_set) {
        Stratum lifted = j.with(fresh);
        if (lifted.size() > static_cast<std::size_t>(s.dimension())) {
            throw std::logic_error("blow-up produced " + lifted.to_string() +
                                   " beyond the dimension bound");
        }
        strata.push_back(std::move(lifted));
    }
    std::vector<IndexId> indices = s.indices();
    indices.push_back(fresh);
    std::vector<std::string> names = s.names();
    names.push_back("E" + std::to_string(fresh));
    return BlowupOutcome{
        StrataStructure(s.dimension(), std::move(indices), std::move(strata), std::move(names)),
        fresh, std::move(data.z_set), std::move(data.b_set)};
}

std::vector<StrataStructure> BlowupTrace::structures() const {
    std::vector<StrataStructure> out{StrataStructure::bare_germ(dimension)};
    for (const auto& step : steps) out.push_back(step.structure);
    return out;
}

const StrataStructure& BlowupTrace::final_structure() const {
    if (steps.empty()) throw Error(ErrorKind::InvalidArgument, "empty blow-up trace");
    return steps.back().structure;
}

std::vector<BlowupCenter> BlowupTrace::centers() const {
    std::vector<BlowupCenter> out;
    for (const auto& step : steps) out.push_back(step.center);
    return out;
}

BlowupTrace blowup_sequence(int dimension, const std::vector<BlowupCenter>& centers) {
    if (dimension < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
    BlowupTrace trace{dimension, {}};
    StrataStructure current = StrataStructure::bare_germ(dimension);
    for (std::size_t t = 0; t < centers.size(); ++t) {
        const auto* point = std::get_if<FreePoint>(&centers[t]);
        const bool origin = point != nullptr && point->host.empty();
        if (t == 0 && !origin) throw BlowupStepError(0, "the first center must be P[]");
        if (t > 0 && origin) {
            throw BlowupStepError(t, "P[] after the first step would disconnect the divisor");
        }
        try {
            BlowupOutcome out = apply_blowup(current, centers[t]);
            current = out.new_structure;
            trace.steps.push_back({centers[t], out.fresh_index, std::move(out.new_structure)});
        } catch (const BlowupStepError&) {
            throw;
        } catch (const Error& e) {
            throw BlowupStepError(t, e.what());
        }
    }
    return trace;
}

BlowupTrace random_sequence(int dimension, int n_blowups, std::uint64_t seed) {
    if (dimension < 2) throw Error(ErrorKind::InvalidArgument, "random traces need dimension >= 2");
    if (n_blowups < 1) throw Error(ErrorKind::InvalidArgument, "at least one blow-up is required");
    Rng rng(seed);
    std::vector<BlowupCenter> centers{FreePoint{Stratum{}}};
    StrataStructure current = apply_blowup(StrataStructure::bare_germ(dimension), centers[0]).new_structure;
    const auto d = static_cast<std::size_t>(dimension);
    for (int step = 1; step < n_blowups; ++step) {
        std::vector<BlowupCenter> candidates;
        for (const auto& j : current.strata()) {
            if (!j.empty() && j.size() < d) candidates.push_back(FreePoint{j});
        }
        for (const auto& j : current.strata()) {
            if (j.size() >= 2) candidates.push_back(StratumCenter{j});
        }
        const BlowupCenter& pick = candidates[rng.index(candidates.size())];
        centers.push_back(pick);
        current = apply_blowup(current, pick).new_structure;
    }
    return blowup_sequence(dimension, centers);
}

std::vector<std::pair<IndexId, IndexId>> dual_graph_edges(const StrataStructure& s) {
    std::vector<std::pair<IndexId, IndexId>> out;
    for (const auto& j : s.level(2)) out.emplace_back(j.members()[0], j.members()[1]);
    return out;
}

}  // namespace strata

#include "strata/corpus.hpp"

#include "strata/error.hpp"
#include "strata/random.hpp"

namespace strata {

ResidueModel random_residue_model(const StrataStructure& s, std::uint64_t seed) {
    Rng rng(seed);
    ResidueModel m;
    for (IndexId i : s.indices()) {
        const bool real = rng.chance(3, 4);
        const std::string name = (real ? "r" : "c") + std::to_string(i);
        const std::size_t sym = m.table.add(name, real ? SymbolKind::RealPositive : SymbolKind::NonReal);
        Rational scale(rng.between(1, 4), rng.between(1, 3));
        if (rng.chance(1, 2)) scale = -scale;
        m.assign(i, sym, scale);
    }
    return m;
}

std::vector<TraceComponent> covering_traces(const StrataStructure& s, const NodalData& n,
                                            std::uint64_t seed) {
    Rng rng(seed);
    const SeparatorReport sep = separating_blocks(s, n);
    std::vector<TraceComponent> out;
    for (const auto& comp : components_by_search(sep.residual)) {
        TraceComponent first{"t" + std::to_string(out.size() + 1), comp[rng.index(comp.size())], {}};
        if (rng.chance(1, 2)) {
            TraceComponent second{"t" + std::to_string(out.size() + 2), comp[rng.index(comp.size())], {}};
            first.adjacent.push_back(second.id);
            out.push_back(std::move(first));
            out.push_back(std::move(second));
        } else {
            out.push_back(std::move(first));
        }
    }
    return out;
}

std::uint64_t instance_seed(std::uint64_t base, std::size_t k) noexcept {
    return base * 1000003ULL + k;
}

CorpusInstance make_corpus_instance(std::uint64_t seed, const CorpusOptions& options) {
    if (options.dimensions.empty() || options.max_blowups < 1) {
        throw Error(ErrorKind::InvalidArgument, "corpus needs a dimension and at least one blow-up");
    }
    Rng rng(seed);
    const int d = options.dimensions[rng.index(options.dimensions.size())];
    const int n = static_cast<int>(rng.between(1, options.max_blowups));
    BlowupTrace trace = random_sequence(d, n, rng.next());
    const StrataStructure& last = trace.final_structure();
    ResidueModel residues = random_residue_model(last, rng.next());
    NodalData nodal = derive_nodal_data(last, residues);
    auto traces = covering_traces(last, nodal, rng.next());
    FoliatedModel model = make_model(last, std::move(nodal), std::move(residues), std::move(traces));
    return {seed, std::move(trace), std::move(model)};
}

}  // namespace strata

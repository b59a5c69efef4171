#pragma once

#include <cstdint>
#include <vector>

#include "strata/blowup.hpp"
#include "strata/foliation_model.hpp"
#include "strata/separatrix.hpp"

namespace strata {

/// Residues with one fresh symbol per component: real (positive) with
/// probability 3/4, non-real otherwise, times a random nonzero scale in
/// ±{1..4}/{1..3}.
ResidueModel random_residue_model(const StrataStructure& s, std::uint64_t seed);

/// One or two adjacent traces per component of E \ |S|, hosted inside that
/// component, so that the coverage check passes.
std::vector<TraceComponent> covering_traces(const StrataStructure& s, const NodalData& n,
                                            std::uint64_t seed);

struct CorpusOptions {
    std::vector<int> dimensions{2, 3, 4};
    int max_blowups = 8;
};

struct CorpusInstance {
    std::uint64_t seed;
    BlowupTrace trace;
    FoliatedModel model;  // built on the final structure
};

/// Seed of the k-th instance of a corpus with base seed `base`.
std::uint64_t instance_seed(std::uint64_t base, std::size_t k) noexcept;

CorpusInstance make_corpus_instance(std::uint64_t seed, const CorpusOptions& options = {});

}  // namespace strata

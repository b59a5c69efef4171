#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strata/blowup.hpp"
#include "strata/strata_structure.hpp"

namespace strata {

/// A word in the generators: letter +(g+1) is generator g, -(g+1) its inverse.
using Word = std::vector<int>;

/// Edge-path presentation of the combinatorial fundamental group of H_3.
/// Generators are the dual-graph edges outside a BFS spanning tree rooted at
/// `base`; there is one relator per triangle of H(3).
struct GroupPresentation {
    IndexId base = 0;
    std::vector<Stratum> tree_edges;
    std::vector<Stratum> generators;
    std::vector<Word> relators;
};

/// Throws NotConnected unless H(1) is 1-connected, UnknownIndex for a bad base.
GroupPresentation edge_path_presentation(const StrataStructure& s, IndexId base);

/// Word for walking the 1-path `vertices` in the presentation.
Word path_word(const GroupPresentation& p, const std::vector<IndexId>& vertices);

Word free_reduce(Word w);
Word inverse(const Word& w);

/// Abelian invariants of the presentation: torsion coefficients > 1 followed by
/// one 0 per free factor. Empty means the abelianization is trivial.
std::vector<std::int64_t> abelian_invariants(const GroupPresentation& p);

/// First homology of Ω_{H_3}; throws NotConnected.
std::vector<std::int64_t> h1_invariants(const StrataStructure& s);

/// Elimination of `generator` using relator number `relator` of the current
/// (normalized) relator list; `replacement` is the word substituted for it.
struct TietzeStep {
    std::size_t generator;
    std::size_t relator;
    Word replacement;
};

struct TietzeCertificate {
    std::vector<TietzeStep> steps;
};

struct TietzeResult {
    bool trivial = false;
    TietzeCertificate certificate;
    std::vector<std::size_t> remaining_generators;
    std::vector<Word> remaining_relators;
    std::size_t work = 0;  // rewriting steps spent
};

inline constexpr std::size_t kDefaultTietzeBudget = 10000;

/// Greedy Tietze simplification: free and cyclic reduction, then repeatedly
/// eliminate a generator occurring exactly once in some relator (shortest
/// relator first, so length-1 and length-2 relators go first).
TietzeResult tietze_simplify(const GroupPresentation& p, std::size_t budget = kDefaultTietzeBudget);

/// True iff replaying the certificate on `p` eliminates every generator and
/// every relator, each step being justified by the relator it names.
bool replay_tietze(const GroupPresentation& p, const TietzeCertificate& certificate);

enum class Pi1Status { SimplyConnected, NotSimplyConnected, Unknown };
enum class CertificateKind { None, Tietze, BlowupProvenance };

std::string_view pi1_status_name(Pi1Status s) noexcept;
std::string_view certificate_kind_name(CertificateKind c) noexcept;

struct Pi1Verdict {
    Pi1Status status = Pi1Status::Unknown;
    CertificateKind certificate = CertificateKind::None;
    GroupPresentation presentation;
    TietzeCertificate tietze;
    std::size_t steps = 0;
    std::vector<std::int64_t> h1;
    /// NotSimplyConnected witnesses: a nonunit abelian invariant, or the
    /// number of 1-connected components when H(1) is disconnected.
    std::optional<std::int64_t> witness_factor;
    std::size_t components = 1;
};

/// Connectivity check, then H1 (a nonzero invariant means not simply
/// connected), then Tietze simplification (empty result means simply
/// connected); Unknown otherwise. Only H_3 is consulted.
Pi1Verdict simply_connected_verdict(const StrataStructure& s,
                                    std::size_t budget = kDefaultTietzeBudget);

/// Certificate by construction: every structure reached by standard blow-ups
/// from the bare germ is simply connected. The trace is replayed and must
/// reproduce the structure after `step` (or the final one when unset).
Pi1Verdict provenance_verdict(const BlowupTrace& trace, std::optional<std::size_t> step = {});

}  // namespace strata

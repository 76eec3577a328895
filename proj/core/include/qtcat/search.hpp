#ifndef QTCAT_SEARCH_HPP
#define QTCAT_SEARCH_HPP

#include <optional>
#include <string>

#include "qtcat/verify.hpp"

namespace qtcat {

struct SearchOptions {
    std::optional<int> dinv_cutoff;  // default: default_dinv_cutoff(k)
    long long budget = 10'000'000;   // node budget, not wall clock
    /// A pinned candidate family: the searcher replays it as the forced
    /// branch (zero backtracks) and certifies it with verify_family.
    const ChainFamily* hint = nullptr;
};

enum class SearchStatus { Found, BudgetExhausted, InfeasibleAtCutoff };

struct SearchResult {
    SearchStatus status = SearchStatus::InfeasibleAtCutoff;
    std::optional<ChainFamily> family;  // set iff status == Found
    long long nodes = 0;
    long long backtracks = 0;
    std::string reason;  // infeasibility explanation
};

/// Searches for a chain family of deficit k over the dinv window:
/// enumerates Def(k) up to the cutoff, groups it into maximal nu-segments,
/// pins each tail(mu), and backtracks over assignments of the remaining
/// segments to chains (dinv-contiguous, decomposable into local chains,
/// chain-start counts matching the Def(k) census). The involution is
/// derived from the singleton dinv values and the locally-opposite
/// arithmetic. Every returned family has passed verify_family at the
/// cutoff; the searcher never certifies its own output.
/// Deterministic: identical inputs and budget give identical results.
/// Throws std::invalid_argument when the cutoff is below some tail start.
SearchResult find_family(int k, const SearchOptions& opts = {});

}  // namespace qtcat

#endif

#ifndef QTCAT_CHAINS_HPP
#define QTCAT_CHAINS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "qtcat/nu.hpp"
#include "qtcat/partition.hpp"
#include "qtcat/poly.hpp"
#include "qtcat/staircase.hpp"

namespace qtcat {

/// Structural defect found while expanding or decomposing a chain.
struct ChainError : std::runtime_error {
    explicit ChainError(const std::string& what) : std::runtime_error(what) {}
};

struct ChainInitial {
    Partition partition;
    bool n_marked = false;  // annotation: does not start a new local chain

    bool operator==(const ChainInitial&) const = default;
};

/// A global chain: the union of the nu-segments generated by its initial
/// partitions, the last of which is a tail initiator TI(mu). Members are
/// dinv-indexed, deficit-constant, and expanded up to a dinv cutoff
/// (extendable; the tail itself is infinite).
class GlobalChain {
public:
    /// Expands and validates: every entry initial, deficits equal, segments
    /// dinv-contiguous, last initial a tail initiator. Expansion always
    /// reaches at least tail_start + 1.
    static GlobalChain expand(std::vector<ChainInitial> initials, int dinv_cutoff);

    const Partition& mu() const { return mu_; }
    int deficit() const { return deficit_; }
    int start_dinv() const { return start_; }
    int tail_start() const { return tail_start_; }
    int expanded_to() const { return start_ + static_cast<int>(members_.size()) - 1; }

    const std::vector<Partition>& members() const { return members_; }
    const Partition& member(int dinv) const;
    int mind_at(int dinv) const;
    const std::vector<ChainInitial>& initials() const { return initials_; }

    /// The two-line array: (dinv, mind) pairs over the expanded window.
    std::vector<std::pair<int, int>> mind_word() const;

    /// Extends the tail so the window reaches dinv_cutoff.
    void ensure_expanded(int dinv_cutoff);

private:
    GlobalChain() = default;
    Partition mu_;
    std::vector<ChainInitial> initials_;
    std::vector<Partition> members_;  // members_[d - start_]
    int deficit_ = 0;
    int start_ = 0;
    int tail_start_ = 0;
};

/// Spec-facing alias for GlobalChain::expand.
GlobalChain expand_global(std::vector<ChainInitial> initials, int dinv_cutoff);

enum class LocalChainKind { Singleton, Ordinary, Tail };

/// A local chain, identified by its staircase parameters. Ordinary chains
/// carry both the left triple (a, m, h) and the right triple (a', m', h');
/// singletons only the right one, tails only the left one plus their mu.
struct LocalChain {
    LocalChainKind kind = LocalChainKind::Ordinary;
    int deficit = 0;
    int a = -1, m = -1, h = -1;     // left: lpart spans [a, a+m], F restricted to
                                    // [a, a'-1] is the (a, m, h)-staircase
    int a2 = -1, m2 = -1, h2 = -1;  // right: rpart spans [a', a'+m'] at height h'
    Partition tail_mu;              // Tail kind only

    int lo() const { return kind == LocalChainKind::Singleton ? a2 : a; }
    /// Last member dinv; tails run to the window end.
    int hi(int window_end) const {
        switch (kind) {
            case LocalChainKind::Singleton: return a2;
            case LocalChainKind::Ordinary: return a2 + m2;
            default: return window_end;
        }
    }
    Interval lpart_span() const;
    Interval mpart_span(int window_end) const;
    Interval rpart_span() const;
};

/// Word-scan decomposition of a global chain into local chains (singleton,
/// ordinary chains split at the descents of the mind word, final tail).
/// Throws ChainError naming the offending dinv position when the word does
/// not admit the staircase structure.
std::vector<LocalChain> decompose_local(const GlobalChain& g);

/// Abbreviated parameter table of a decomposition: the a/m/h values of the
/// non-singleton local chains, in chain order (the appendix's three vectors).
struct ParamVectors {
    std::vector<int> a, m, h;
};
ParamVectors computed_vectors(const std::vector<LocalChain>& locals);

struct OppositeVerdict {
    bool ok = false;
    std::string reason;
};

/// Locally-opposite predicate. Ordinary vs ordinary compares parameters
/// (m/h swap plus the two binomial identities); tail vs singleton checks
/// dinv(gamma) = len(mu) and mind(gamma) = mind(TI(mu)). Symmetric; kind
/// mismatches yield false with a reason rather than an error.
OppositeVerdict locally_opposite(const LocalChain& s, const LocalChain& t);

/// Cat_{n, C} for a global chain: pre-tail members with mind <= n plus the
/// tail iterated until mind exceeds n (mind is weakly increasing along the
/// tail, so the stop is exact).
BivariatePoly qt_catalan_restricted(const GlobalChain& chain, int n);

}  // namespace qtcat

#endif

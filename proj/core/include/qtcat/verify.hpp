#ifndef QTCAT_VERIFY_HPP
#define QTCAT_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "qtcat/chains.hpp"
#include "qtcat/partition.hpp"

namespace qtcat {

/// One global chain of a family, as data: its label and the initial
/// partitions of its nu-segments (last one the tail initiator).
struct FamilyChain {
    Partition mu;
    std::vector<ChainInitial> initials;
};

/// A per-deficit bundle: the involution on Par(k) and one chain per mu.
/// The unit handed to verify_family and emitted by the searcher.
struct ChainFamily {
    int k = 0;
    std::vector<std::pair<Partition, Partition>> pairs;  // each unordered pair once
    std::vector<FamilyChain> chains;

    const Partition* star(const Partition& mu) const;
    const FamilyChain* chain_for(const Partition& mu) const;
};

struct CheckRecord {
    std::string id;
    int k = 0;
    std::string mu;  // chain label, pair label, or "*" for family-wide checks
    bool pass = false;
    std::string witness;
};

struct VerificationReport {
    int k = 0;
    int dinv_cutoff = 0;
    int n_max = 0;
    std::vector<CheckRecord> records;

    bool all_pass() const;
    void add(const std::string& id, const std::string& mu, bool pass,
             const std::string& witness = "");
    /// Line-oriented form: "CHECK <id> <k> <mu> PASS|FAIL [witness]" per
    /// record plus a trailing summary line.
    std::string to_text() const;
};

struct VerifyOptions {
    std::optional<int> dinv_cutoff;  // default: max over mu of tail_start + 2*mind(TI)
    int n_max = 12;
};

/// The window every certificate needs: max over mu in Par(k) of
/// tail_start_dinv(mu) + 2 * mind(TI(mu)).
int default_dinv_cutoff(int k);

/// Runs the full battery over the family: expansion and decomposition of
/// every chain, the N-mark cross-check, conditions (L-a)..(L-f) of the
/// local-chain conjecture, and the global checks (G-min), (G-start),
/// (G-opp), (G-count). Throws std::invalid_argument when the requested
/// cutoff is below the certified minimum; structural data problems become
/// FAIL records, never exceptions.
VerificationReport verify_family(const ChainFamily& family, const VerifyOptions& opts = {});

}  // namespace qtcat

#endif

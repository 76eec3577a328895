#ifndef QTCAT_CHAINDATA_HPP
#define QTCAT_CHAINDATA_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtcat/chains.hpp"
#include "qtcat/verify.hpp"

namespace qtcat {

/// Malformed .chains text; carries the offending line number (0 for
/// document-level problems).
struct ChainDataError : std::runtime_error {
    int line;
    ChainDataError(int line_, const std::string& what)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what : what),
          line(line_) {}
};

/// One `chain:` block: the label, the flagged initials, and the optional
/// declared parameter vectors.
struct ChainBlock {
    Partition mu;
    std::vector<ChainInitial> initials;
    std::optional<std::vector<int>> a_vec, m_vec, h_vec;
};

/// A parsed .chains document. Line grammar (# comments, blank lines skipped):
///   deficit: <int>
///   pair: <parts> | <parts>          (self-paired mu listed once as mu | mu)
///   chain: <parts>
///   init: <parts>   /  initN: <parts>
///   a: <ints>   m: <ints>   h: <ints>   (optional, inside a chain block)
///   end
/// <parts> is a weakly decreasing list of positive integers, or "-" for the
/// empty partition; the digit-string form ("54111") is accepted on input.
struct ChainDataFile {
    int deficit = 0;
    std::vector<std::pair<Partition, Partition>> pairs;
    std::vector<ChainBlock> chains;
};

/// Parses and validates: pairs are size-preserving and self-consistent,
/// pairs and chain blocks list the same partitions exactly once each, and
/// every block's last initial is TI of the block's mu. (Coverage of all of
/// Par(k) is verify_family's job, so partial files load fine.)
ChainDataFile parse_chain_data(const std::string& text);

/// Canonical text: chains sorted by mu descending-lex, pairs by their
/// lex-larger member, partitions space-separated. parse(serialize(f))
/// reproduces f; serializing a parsed document is idempotent.
std::string serialize_chain_data(const ChainDataFile& f);

/// Forgets the declared vectors, keeping what verify_family consumes.
ChainFamily to_family(const ChainDataFile& f);

/// Builds a document from a family, attaching the computed a/m/h vectors
/// of every chain (the initials keep the marks they carry).
ChainDataFile to_chain_data(const ChainFamily& fam);

struct DeclaredComparison {
    Partition mu;
    bool match = false;
    std::string detail;  // mismatch position or failure reason
};

/// Expands and decomposes each chain that declares a/m/h vectors and
/// compares them with the computed parameters.
std::vector<DeclaredComparison> declared_vs_computed(const ChainDataFile& f);

}  // namespace qtcat

#endif

#include "qtcat/chaindata.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace qtcat {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Partition parse_parts(const std::string& text, int line) {
    try {
        return parse_partition(text);
    } catch (const std::invalid_argument& e) {
        throw ChainDataError(line, e.what());
    }
}

std::vector<int> parse_ints(const std::string& text, int line) {
    std::istringstream in(text);
    std::vector<int> out;
    int x;
    while (in >> x) out.push_back(x);
    if (!in.eof()) throw ChainDataError(line, "bad integer list: '" + text + "'");
    return out;
}

void validate(const ChainDataFile& f) {
    std::map<Partition, int> pair_count;
    for (const auto& [x, y] : f.pairs) {
        if (size(x) != f.deficit || size(y) != f.deficit)
            throw ChainDataError(0, "pair " + partition_label(x) + " | " + partition_label(y) +
                                        " does not consist of partitions of " +
                                        std::to_string(f.deficit));
        ++pair_count[x];
        if (!(x == y)) ++pair_count[y];
    }
    for (const auto& [mu, cnt] : pair_count)
        if (cnt != 1)
            throw ChainDataError(0, partition_label(mu) + " appears in several pairs");

    std::set<Partition> block_mus;
    for (const auto& block : f.chains) {
        if (!block_mus.insert(block.mu).second)
            throw ChainDataError(0, "duplicate chain for " + partition_label(block.mu));
        if (!pair_count.count(block.mu))
            throw ChainDataError(0, "chain " + partition_label(block.mu) +
                                        " has no involution entry");
        if (block.initials.empty())
            throw ChainDataError(0, "chain " + partition_label(block.mu) + " has no initials");
        if (block.initials.back().partition != tail_initiator(block.mu))
            throw ChainDataError(
                0, "chain " + partition_label(block.mu) + ": last initial " +
                       partition_label(block.initials.back().partition) + " is not TI" +
                       partition_label(block.mu) + " = " +
                       partition_label(tail_initiator(block.mu)));
    }
    for (const auto& [mu, cnt] : pair_count)
        if (!block_mus.count(mu))
            throw ChainDataError(0, "no chain block for paired partition " +
                                        partition_label(mu));
}

}  // namespace

ChainDataFile parse_chain_data(const std::string& text) {
    ChainDataFile f;
    bool have_deficit = false;
    std::optional<ChainBlock> block;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        const std::string s = trim(raw);
        if (s.empty()) continue;

        const size_t colon = s.find(':');
        if (s == "end") {
            if (!block) throw ChainDataError(line, "'end' outside a chain block");
            f.chains.push_back(std::move(*block));
            block.reset();
            continue;
        }
        if (colon == std::string::npos)
            throw ChainDataError(line, "unrecognized line: '" + s + "'");
        const std::string key = trim(s.substr(0, colon));
        const std::string rest = trim(s.substr(colon + 1));

        if (key == "deficit") {
            if (have_deficit) throw ChainDataError(line, "duplicate deficit line");
            if (block) throw ChainDataError(line, "deficit inside a chain block");
            const auto xs = parse_ints(rest, line);
            if (xs.size() != 1 || xs[0] < 0)
                throw ChainDataError(line, "deficit needs one nonnegative integer");
            f.deficit = xs[0];
            have_deficit = true;
        } else if (key == "pair") {
            if (block) throw ChainDataError(line, "pair inside a chain block");
            const size_t bar = rest.find('|');
            if (bar == std::string::npos)
                throw ChainDataError(line, "pair needs the form 'pair: <parts> | <parts>'");
            f.pairs.emplace_back(parse_parts(trim(rest.substr(0, bar)), line),
                                 parse_parts(trim(rest.substr(bar + 1)), line));
        } else if (key == "chain") {
            if (block) throw ChainDataError(line, "chain block not closed by 'end'");
            block = ChainBlock{};
            block->mu = parse_parts(rest, line);
        } else if (key == "init" || key == "initN") {
            if (!block) throw ChainDataError(line, "init outside a chain block");
            block->initials.push_back(ChainInitial{parse_parts(rest, line), key == "initN"});
        } else if (key == "a" || key == "m" || key == "h") {
            if (!block) throw ChainDataError(line, key + " outside a chain block");
            auto& slot = key == "a" ? block->a_vec : key == "m" ? block->m_vec : block->h_vec;
            if (slot) throw ChainDataError(line, "duplicate " + key + " vector");
            slot = parse_ints(rest, line);
        } else {
            throw ChainDataError(line, "unrecognized key '" + key + "'");
        }
    }
    if (block) throw ChainDataError(line, "unterminated chain block");
    if (!have_deficit) throw ChainDataError(0, "missing deficit line");
    validate(f);
    return f;
}

namespace {

std::string ints_line(const char* key, const std::vector<int>& xs) {
    std::string out = key;
    out += ":";
    for (int x : xs) out += " " + std::to_string(x);
    out += '\n';
    return out;
}

}  // namespace

std::string serialize_chain_data(const ChainDataFile& f) {
    const DescLex lt;
    auto pairs = f.pairs;
    for (auto& [x, y] : pairs)
        if (lt(y, x)) std::swap(x, y);  // lex-larger member first
    std::sort(pairs.begin(), pairs.end(),
              [&](const auto& p, const auto& q) { return lt(p.first, q.first); });
    auto chains = f.chains;
    std::sort(chains.begin(), chains.end(),
              [&](const ChainBlock& a, const ChainBlock& b) { return lt(a.mu, b.mu); });

    std::string out = "deficit: " + std::to_string(f.deficit) + "\n";
    for (const auto& [x, y] : pairs)
        out += "pair: " + format_partition(x) + " | " + format_partition(y) + "\n";
    for (const auto& block : chains) {
        out += "chain: " + format_partition(block.mu) + "\n";
        for (const auto& init : block.initials)
            out += std::string(init.n_marked ? "initN: " : "init: ") +
                   format_partition(init.partition) + "\n";
        if (block.a_vec) out += ints_line("a", *block.a_vec);
        if (block.m_vec) out += ints_line("m", *block.m_vec);
        if (block.h_vec) out += ints_line("h", *block.h_vec);
        out += "end\n";
    }
    return out;
}

ChainFamily to_family(const ChainDataFile& f) {
    ChainFamily fam;
    fam.k = f.deficit;
    fam.pairs = f.pairs;
    for (const auto& block : f.chains)
        fam.chains.push_back(FamilyChain{block.mu, block.initials});
    return fam;
}

ChainDataFile to_chain_data(const ChainFamily& fam) {
    ChainDataFile f;
    f.deficit = fam.k;
    f.pairs = fam.pairs;
    for (const auto& fc : fam.chains) {
        ChainBlock block;
        block.mu = fc.mu;
        block.initials = fc.initials;
        const GlobalChain g = GlobalChain::expand(fc.initials, tail_start_dinv(fc.mu) + 2);
        const ParamVectors v = computed_vectors(decompose_local(g));
        block.a_vec = v.a;
        block.m_vec = v.m;
        block.h_vec = v.h;
        f.chains.push_back(std::move(block));
    }
    return f;
}

std::vector<DeclaredComparison> declared_vs_computed(const ChainDataFile& f) {
    std::vector<DeclaredComparison> out;
    auto chains = f.chains;
    std::sort(chains.begin(), chains.end(),
              [](const ChainBlock& a, const ChainBlock& b) { return DescLex{}(a.mu, b.mu); });
    for (const auto& block : chains) {
        if (!block.a_vec && !block.m_vec && !block.h_vec) continue;
        DeclaredComparison cmp;
        cmp.mu = block.mu;
        try {
            const GlobalChain g =
                GlobalChain::expand(block.initials, tail_start_dinv(block.mu) + 2);
            const ParamVectors v = computed_vectors(decompose_local(g));
            cmp.match = true;
            auto compare = [&](const char* name, const std::optional<std::vector<int>>& decl,
                               const std::vector<int>& comp) {
                if (!cmp.match || !decl) return;
                if (*decl != comp) {
                    cmp.match = false;
                    size_t i = 0;
                    while (i < decl->size() && i < comp.size() && (*decl)[i] == comp[i]) ++i;
                    cmp.detail = std::string(name) + "-vector mismatch at entry " +
                                 std::to_string(i);
                }
            };
            compare("a", block.a_vec, v.a);
            compare("m", block.m_vec, v.m);
            compare("h", block.h_vec, v.h);
        } catch (const ChainError& e) {
            cmp.match = false;
            cmp.detail = e.what();
        }
        out.push_back(std::move(cmp));
    }
    return out;
}

}  // namespace qtcat

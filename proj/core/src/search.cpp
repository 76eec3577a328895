#include "qtcat/search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "qtcat/enumerate.hpp"

namespace qtcat {

namespace {

struct BudgetExhausted {};

struct Segment {
    std::vector<Partition> members;
    int start = 0;
    int end = 0;
    bool open = false;
    std::optional<Partition> tail_mu;
};

struct Searcher {
    int k;
    int cutoff;
    long long budget;
    long long nodes = 0;
    long long backtracks = 0;

    std::vector<Segment> segments;
    std::vector<int> tail_ids;              // processing order
    std::map<int, std::vector<int>> by_end; // finite segments keyed by end dinv
    std::vector<char> used;
    std::vector<int> starts_remaining;      // chain starts forced by the census

    std::vector<std::vector<int>> chosen;   // per chain, segment ids right-to-left
    std::optional<ChainFamily> result;

    void spend() {
        if (++nodes > budget) throw BudgetExhausted{};
    }

    std::vector<ChainInitial> chain_initials(size_t chain_idx) const {
        const auto& ids = chosen[chain_idx];
        std::vector<ChainInitial> initials;
        for (auto it = ids.rbegin(); it != ids.rend(); ++it)
            initials.push_back(ChainInitial{segments[static_cast<size_t>(*it)].members.front()});
        return initials;
    }

    bool chain_decomposes(size_t chain_idx) const {
        try {
            decompose_local(GlobalChain::expand(chain_initials(chain_idx), cutoff));
            return true;
        } catch (const ChainError&) {
            return false;
        }
    }

    bool dfs(size_t chain_idx, int front) {
        // close the current chain here
        if (front <= cutoff && starts_remaining[static_cast<size_t>(front)] > 0) {
            spend();
            if (chain_decomposes(chain_idx)) {
                --starts_remaining[static_cast<size_t>(front)];
                const bool done = chain_idx + 1 == tail_ids.size()
                                      ? finish()
                                      : dfs(chain_idx + 1, next_front(chain_idx + 1));
                ++starts_remaining[static_cast<size_t>(front)];
                if (done) return true;
            }
            ++backtracks;
        }
        // or extend it leftward with a segment ending at front - 1
        const auto it = by_end.find(front - 1);
        if (it != by_end.end()) {
            for (int sid : it->second) {
                if (used[static_cast<size_t>(sid)]) continue;
                spend();
                used[static_cast<size_t>(sid)] = 1;
                chosen[chain_idx].push_back(sid);
                const bool done = dfs(chain_idx, segments[static_cast<size_t>(sid)].start);
                chosen[chain_idx].pop_back();
                used[static_cast<size_t>(sid)] = 0;
                if (done) return true;
                ++backtracks;
            }
        }
        return false;
    }

    int next_front(size_t chain_idx) {
        const int tid = tail_ids[chain_idx];
        chosen[chain_idx] = {tid};
        return segments[static_cast<size_t>(tid)].start;
    }

    // all chains are closed: demand full segment coverage, derive the
    // involution, and certify with verify_family
    bool finish() {
        for (size_t sid = 0; sid < segments.size(); ++sid)
            if (!used[sid]) return false;
        for (int s : starts_remaining)
            if (s != 0) return false;

        std::vector<FamilyChain> chains;
        std::vector<std::vector<LocalChain>> locals;
        for (size_t ci = 0; ci < tail_ids.size(); ++ci) {
            FamilyChain fc;
            fc.mu = *segments[static_cast<size_t>(tail_ids[ci])].tail_mu;
            fc.initials = chain_initials(ci);
            GlobalChain g = GlobalChain::expand(fc.initials, cutoff);
            const auto locs = decompose_local(g);
            // annotate the N marks the decomposition dictates
            std::set<int> starts;
            for (const auto& lc : locs)
                if (lc.kind != LocalChainKind::Singleton) starts.insert(lc.a);
            for (auto& init : fc.initials)
                init.n_marked = starts.count(dinv(init.partition)) == 0;
            chains.push_back(std::move(fc));
            locals.push_back(locs);
        }

        std::vector<std::pair<Partition, Partition>> pairs;
        std::vector<char> paired(chains.size(), 0);
        return pair_chains(chains, locals, paired, pairs);
    }

    bool pair_chains(const std::vector<FamilyChain>& chains,
                     const std::vector<std::vector<LocalChain>>& locals,
                     std::vector<char>& paired,
                     std::vector<std::pair<Partition, Partition>>& pairs) {
        size_t i = 0;
        while (i < paired.size() && paired[i]) ++i;
        if (i == paired.size()) {
            ChainFamily fam;
            fam.k = k;
            fam.pairs = pairs;
            fam.chains = chains;
            const int verify_cutoff = std::max(cutoff, default_dinv_cutoff(k));
            const auto report = verify_family(fam, VerifyOptions{verify_cutoff, 12});
            if (!report.all_pass()) return false;
            result = std::move(fam);
            return true;
        }
        for (size_t j = i; j < paired.size(); ++j) {
            if (paired[j]) continue;
            if (locals[i].size() != locals[j].size()) continue;
            spend();
            bool compatible = true;
            for (size_t t = 0; t < locals[i].size() && compatible; ++t)
                compatible =
                    locally_opposite(locals[i][t], locals[j][locals[j].size() - 1 - t]).ok;
            if (!compatible) continue;
            paired[i] = paired[j] = 1;
            pairs.emplace_back(chains[i].mu, chains[j].mu);
            if (pair_chains(chains, locals, paired, pairs)) return true;
            pairs.pop_back();
            paired[i] = paired[j] = 0;
            ++backtracks;
        }
        return false;
    }
};

}  // namespace

SearchResult find_family(int k, const SearchOptions& opts) {
    if (k < 0) throw std::invalid_argument("find_family: k must be nonnegative");
    int max_tail_start = 0;
    std::vector<Partition> mus;
    for_each_partition_of(k, [&](const Partition& mu) {
        mus.push_back(mu);
        max_tail_start = std::max(max_tail_start, tail_start_dinv(mu));
    });
    const int cutoff = opts.dinv_cutoff.value_or(default_dinv_cutoff(k));
    if (cutoff < max_tail_start)
        throw std::invalid_argument("find_family: cutoff " + std::to_string(cutoff) +
                                    " is below the largest tail start " +
                                    std::to_string(max_tail_start));

    SearchResult res;
    Searcher s;
    s.k = k;
    s.cutoff = cutoff;
    s.budget = opts.budget;

    // group the Def(k) window into maximal nu-segments
    const auto window = deficit_window(k, cutoff);
    std::unordered_map<Partition, int, PartitionHash> seg_of;
    for (int i = 0; i <= cutoff; ++i) {
        for (const auto& p : window[static_cast<size_t>(i)]) {
            if (seg_of.count(p)) continue;
            if (!is_initial(p))
                throw std::logic_error("window partition neither initial nor reached: " +
                                       partition_label(p));
            Segment seg;
            seg.start = i;
            Partition cur = p;
            int d = i;
            for (;;) {
                seg_of.emplace(cur, static_cast<int>(s.segments.size()));
                seg.members.push_back(cur);
                if (d == cutoff) {
                    seg.open = !is_final(cur);
                    break;
                }
                auto next = nu_opt(cur);
                if (!next) break;
                cur = *std::move(next);
                ++d;
            }
            seg.end = d;
            seg.tail_mu = tail_type_of(seg.members.front());
            s.segments.push_back(std::move(seg));
        }
    }

    for (size_t sid = 0; sid < s.segments.size(); ++sid) {
        const Segment& seg = s.segments[sid];
        if (seg.tail_mu) continue;
        if (seg.open) {
            res.status = SearchStatus::InfeasibleAtCutoff;
            res.reason = "non-tail segment starting at " +
                         partition_label(seg.members.front()) + " is still open at dinv " +
                         std::to_string(cutoff) + "; raise the cutoff";
            return res;
        }
        s.by_end[seg.end].push_back(static_cast<int>(sid));
    }
    for (auto& [end, ids] : s.by_end)
        std::sort(ids.begin(), ids.end(), [&](int x, int y) {
            return DescLex{}(s.segments[static_cast<size_t>(x)].members.front(),
                             s.segments[static_cast<size_t>(y)].members.front());
        });

    // every tail(mu) must be present, pinned, and processed most-constrained
    // first: largest tail start, then descending-lex mu
    for (size_t sid = 0; sid < s.segments.size(); ++sid)
        if (s.segments[sid].tail_mu) s.tail_ids.push_back(static_cast<int>(sid));
    if (s.tail_ids.size() != mus.size()) {
        res.status = SearchStatus::InfeasibleAtCutoff;
        res.reason = "expected " + std::to_string(mus.size()) + " tails, found " +
                     std::to_string(s.tail_ids.size());
        return res;
    }
    std::sort(s.tail_ids.begin(), s.tail_ids.end(), [&](int x, int y) {
        const Segment& a = s.segments[static_cast<size_t>(x)];
        const Segment& b = s.segments[static_cast<size_t>(y)];
        if (a.start != b.start) return a.start > b.start;
        return DescLex{}(*a.tail_mu, *b.tail_mu);
    });

    // the chain-start census: counts force the multiset of start positions
    s.starts_remaining.assign(static_cast<size_t>(cutoff) + 1, 0);
    {
        int prev = 0;
        for (int i = 0; i <= cutoff; ++i) {
            const int cnt = static_cast<int>(window[static_cast<size_t>(i)].size());
            const int started = cnt - prev;
            if (started < 0) {
                res.status = SearchStatus::InfeasibleAtCutoff;
                res.reason = "Def(k) census shrinks at dinv " + std::to_string(i) +
                             "; no chain family can satisfy the start counts";
                return res;
            }
            s.starts_remaining[static_cast<size_t>(i)] = started;
            prev = cnt;
        }
        if (prev != static_cast<int>(mus.size())) {
            res.status = SearchStatus::InfeasibleAtCutoff;
            res.reason = "Def(k) census at the cutoff is " + std::to_string(prev) +
                         ", expected one object per chain (" + std::to_string(mus.size()) + ")";
            return res;
        }
        std::multiset<int> starts, lengths;
        for (int i = 0; i <= cutoff; ++i)
            for (int c = 0; c < s.starts_remaining[static_cast<size_t>(i)]; ++c)
                starts.insert(i);
        for (const auto& mu : mus) lengths.insert(mu.length());
        if (starts != lengths) {
            res.status = SearchStatus::InfeasibleAtCutoff;
            res.reason = "chain-start census does not match the lengths of Par(k)";
            return res;
        }
    }

    s.used.assign(s.segments.size(), 0);
    for (int tid : s.tail_ids) s.used[static_cast<size_t>(tid)] = 1;
    s.chosen.assign(s.tail_ids.size(), {});

    try {
        if (opts.hint) {
            // replay the pinned family: forced branch, zero backtracks
            for (size_t ci = 0; ci < s.tail_ids.size(); ++ci) {
                const Partition& mu = *s.segments[static_cast<size_t>(s.tail_ids[ci])].tail_mu;
                const FamilyChain* fc = opts.hint->chain_for(mu);
                if (!fc) {
                    res.status = SearchStatus::InfeasibleAtCutoff;
                    res.reason = "hint has no chain for " + partition_label(mu);
                    return res;
                }
                s.chosen[ci] = {s.tail_ids[ci]};
                for (auto it = fc->initials.rbegin(); it != fc->initials.rend(); ++it) {
                    if (it == fc->initials.rbegin()) continue;  // the tail initiator
                    auto found = seg_of.find(it->partition);
                    const int sid = found == seg_of.end() ? -1 : found->second;
                    if (sid < 0 || s.used[static_cast<size_t>(sid)] ||
                        s.segments[static_cast<size_t>(sid)].members.front() != it->partition) {
                        res.status = SearchStatus::InfeasibleAtCutoff;
                        res.reason = "hint initial " + partition_label(it->partition) +
                                     " does not start an unused segment";
                        return res;
                    }
                    s.spend();
                    s.used[static_cast<size_t>(sid)] = 1;
                    s.chosen[ci].push_back(sid);
                }
                const int front = s.segments[static_cast<size_t>(s.chosen[ci].back())].start;
                if (front > cutoff || s.starts_remaining[static_cast<size_t>(front)] <= 0 ||
                    !s.chain_decomposes(ci)) {
                    res.status = SearchStatus::InfeasibleAtCutoff;
                    res.reason = "hint chain for " + partition_label(mu) +
                                 " does not decompose into local chains";
                    return res;
                }
                --s.starts_remaining[static_cast<size_t>(front)];
            }
            if (!s.finish()) {
                res.status = SearchStatus::InfeasibleAtCutoff;
                res.reason = "hint family failed verification";
                return res;
            }
        } else if (!s.dfs(0, s.next_front(0))) {
            res.status = SearchStatus::InfeasibleAtCutoff;
            res.reason = "search space exhausted at this cutoff";
            res.nodes = s.nodes;
            res.backtracks = s.backtracks;
            return res;
        }
    } catch (const BudgetExhausted&) {
        res.status = SearchStatus::BudgetExhausted;
        res.nodes = s.nodes;
        res.backtracks = s.backtracks;
        return res;
    }

    res.status = SearchStatus::Found;
    res.family = std::move(s.result);
    res.nodes = s.nodes;
    res.backtracks = s.backtracks;
    return res;
}

}  // namespace qtcat

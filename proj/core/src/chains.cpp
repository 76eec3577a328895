#include "qtcat/chains.hpp"

#include <algorithm>
#include <cassert>

#include "qtcat/util.hpp"

namespace qtcat {

GlobalChain GlobalChain::expand(std::vector<ChainInitial> initials, int dinv_cutoff) {
    if (initials.empty()) throw ChainError("chain has no initial partitions");
    for (const auto& init : initials)
        if (!is_initial(init.partition))
            throw ChainError("listed partition " + partition_label(init.partition) +
                             " is not an initial partition");

    GlobalChain g;
    const auto mu = tail_type_of(initials.back().partition);
    if (!mu)
        throw ChainError("last initial " + partition_label(initials.back().partition) +
                         " is not a tail initiator");
    g.mu_ = *mu;
    g.deficit_ = qtcat::deficit(initials.front().partition);
    g.tail_start_ = tail_start_dinv(g.mu_);
    g.start_ = dinv(initials.front().partition);
    g.initials_ = std::move(initials);

    const int window_end = std::max(dinv_cutoff, g.tail_start_ + 1);
    int next_dinv = g.start_;
    for (size_t j = 0; j < g.initials_.size(); ++j) {
        const Partition& init = g.initials_[j].partition;
        if (qtcat::deficit(init) != g.deficit_)
            throw ChainError("initial " + partition_label(init) + " has deficit " +
                             std::to_string(qtcat::deficit(init)) + ", expected " +
                             std::to_string(g.deficit_));
        const int d = dinv(init);
        if (d != next_dinv)
            throw ChainError("segment of " + partition_label(init) + " starts at dinv " +
                             std::to_string(d) + ", expected " + std::to_string(next_dinv) +
                             " (gap or overlap)");
        const bool last = j + 1 == g.initials_.size();
        Partition cur = init;
        int cur_dinv = d;
        for (;;) {
            g.members_.push_back(cur);
            if (last && cur_dinv == window_end) break;
            auto next = nu_opt(cur);
            if (!next) {
                if (last)
                    throw ChainError("tail of " + partition_label(g.mu_) +
                                     " hit a final partition at dinv " +
                                     std::to_string(cur_dinv));
                break;
            }
            if (!last && cur_dinv + 1 > window_end)
                throw ChainError("segment of " + partition_label(init) +
                                 " is still open at the expansion window end");
            cur = *std::move(next);
            ++cur_dinv;
        }
        next_dinv = cur_dinv + 1;
    }
    assert(g.member(g.tail_start_) == tail_initiator(g.mu_));
    return g;
}

const Partition& GlobalChain::member(int dinv) const {
    if (dinv < start_ || dinv > expanded_to())
        throw std::out_of_range("GlobalChain::member: dinv outside expanded window");
    return members_[static_cast<size_t>(dinv - start_)];
}

int GlobalChain::mind_at(int dinv) const { return mind(member(dinv)); }

std::vector<std::pair<int, int>> GlobalChain::mind_word() const {
    std::vector<std::pair<int, int>> word;
    word.reserve(members_.size());
    for (int d = start_; d <= expanded_to(); ++d) word.emplace_back(d, mind_at(d));
    return word;
}

void GlobalChain::ensure_expanded(int dinv_cutoff) {
    while (expanded_to() < dinv_cutoff) members_.push_back(nu(members_.back()));
}

GlobalChain expand_global(std::vector<ChainInitial> initials, int dinv_cutoff) {
    return GlobalChain::expand(std::move(initials), dinv_cutoff);
}

Interval LocalChain::lpart_span() const {
    switch (kind) {
        case LocalChainKind::Singleton: return Interval{};
        case LocalChainKind::Ordinary: return Interval{a, a + m};
        default: return Interval{a, a};
    }
}

Interval LocalChain::mpart_span(int window_end) const {
    switch (kind) {
        case LocalChainKind::Singleton: return Interval{};
        case LocalChainKind::Ordinary: return Interval{a + m + 1, a2 - 1};
        default: return Interval{a + 1, window_end};
    }
}

Interval LocalChain::rpart_span() const {
    if (kind == LocalChainKind::Tail) return Interval{};
    return Interval{a2, a2 + m2};
}

namespace {

int word_at(const GlobalChain& g, int i) { return g.mind_at(i); }

// Length of the run of equal mind values starting at position i; the run
// must end inside the expanded window.
int plateau_run(const GlobalChain& g, int i) {
    const int v = word_at(g, i);
    int r = 1;
    while (i + r <= g.expanded_to() && word_at(g, i + r) == v) ++r;
    if (i + r > g.expanded_to())
        throw ChainError("plateau at dinv " + std::to_string(i) +
                         " still open at the expansion window end");
    return r;
}

void check_staircase_zone(const GlobalChain& g, int a, int m, int h, int zone_end) {
    const Staircase s{a, m, h, std::nullopt};
    for (int i = a; i <= zone_end; ++i)
        if (word_at(g, i) != staircase_value(s, i))
            throw ChainError("mind word deviates from the (" + std::to_string(a) + "," +
                             std::to_string(m) + "," + std::to_string(h) +
                             ")-staircase at dinv " + std::to_string(i));
}

}  // namespace

std::vector<LocalChain> decompose_local(const GlobalChain& g) {
    const int d = g.start_dinv();
    const int e = g.tail_start();
    const int k = g.deficit();
    if (g.expanded_to() < e + 1)
        throw ChainError("chain must be expanded past its tail start");

    std::vector<LocalChain> locals;
    LocalChain singleton;
    singleton.kind = LocalChainKind::Singleton;
    singleton.deficit = k;
    singleton.a2 = d;
    singleton.m2 = 0;
    singleton.h2 = word_at(g, d);
    locals.push_back(singleton);

    // each ordinary chain inherits its left part from the previous right part
    int a = d, m = 0, h = word_at(g, d);
    while (a < e) {
        int descent = -1;
        for (int i = a; i < e; ++i)
            if (word_at(g, i) > word_at(g, i + 1)) {
                descent = i;
                break;
            }
        if (descent < 0)
            throw ChainError("no descent before the tail start at dinv " + std::to_string(e) +
                             "; the tail does not begin a local chain");
        const int a2 = descent + 1;
        if (!(a + m + 1 < a2))
            throw ChainError("empty middle part: descent at dinv " + std::to_string(descent) +
                             " follows the left part too closely");
        check_staircase_zone(g, a, m, h, a2 - 1);
        const int r = plateau_run(g, a2);
        if (a2 + r - 1 > e)
            throw ChainError("right-part plateau at dinv " + std::to_string(a2) +
                             " crosses the tail start");

        LocalChain lc;
        lc.kind = LocalChainKind::Ordinary;
        lc.deficit = k;
        lc.a = a;
        lc.m = m;
        lc.h = h;
        lc.a2 = a2;
        lc.m2 = r - 1;
        lc.h2 = word_at(g, a2);
        locals.push_back(lc);

        a = a2;
        m = r - 1;
        h = lc.h2;
    }
    if (a != e || m != 0)
        throw ChainError("local chain boundaries do not close at the tail start");

    LocalChain tail;
    tail.kind = LocalChainKind::Tail;
    tail.deficit = k;
    tail.a = e;
    tail.m = 0;
    tail.h = word_at(g, e);
    tail.tail_mu = g.mu();
    check_staircase_zone(g, e, 0, tail.h, g.expanded_to());
    locals.push_back(tail);
    return locals;
}

ParamVectors computed_vectors(const std::vector<LocalChain>& locals) {
    ParamVectors v;
    for (const auto& lc : locals) {
        if (lc.kind == LocalChainKind::Singleton) continue;
        v.a.push_back(lc.a);
        v.m.push_back(lc.m);
        v.h.push_back(lc.h);
    }
    return v;
}

namespace {

OppositeVerdict fail(const std::string& reason) { return {false, reason}; }

}  // namespace

OppositeVerdict locally_opposite(const LocalChain& s, const LocalChain& t) {
    if (s.deficit != t.deficit) return fail("deficits differ");
    const int k = s.deficit;

    const bool s_ord = s.kind == LocalChainKind::Ordinary;
    const bool t_ord = t.kind == LocalChainKind::Ordinary;
    if (s_ord && t_ord) {
        if (t.m != s.m2) return fail("m_T != m'_S");
        if (t.m2 != s.m) return fail("m'_T != m_S");
        if (t.h != s.h2) return fail("h_T != h'_S");
        if (t.h2 != s.h) return fail("h'_T != h_S");
        if (s.a + s.m + k + t.a2 != binom2(s.h))
            return fail("a_S+m_S+k+a'_T = " + std::to_string(s.a + s.m + k + t.a2) +
                        " != binom(" + std::to_string(s.h) + ",2)");
        if (s.a2 + s.m2 + k + t.a != binom2(s.h2))
            return fail("a'_S+m'_S+k+a_T = " + std::to_string(s.a2 + s.m2 + k + t.a) +
                        " != binom(" + std::to_string(s.h2) + ",2)");
        return {true, ""};
    }
    if (s_ord || t_ord) return fail("ordinary chain paired with an exceptional chain");

    // exceptional: one tail and one singleton
    const LocalChain* tail = nullptr;
    const LocalChain* single = nullptr;
    for (const auto* c : {&s, &t}) {
        if (c->kind == LocalChainKind::Tail) tail = c;
        if (c->kind == LocalChainKind::Singleton) single = c;
    }
    if (!tail || !single) return fail("exceptional pair must be one tail and one singleton");
    if (single->a2 != tail->tail_mu.length())
        return fail("dinv(gamma) = " + std::to_string(single->a2) + " != len(mu) = " +
                    std::to_string(tail->tail_mu.length()));
    if (single->h2 != tail->h)
        return fail("mind(gamma) = " + std::to_string(single->h2) + " != mind(TI(mu)) = " +
                    std::to_string(tail->h));
    return {true, ""};
}

BivariatePoly qt_catalan_restricted(const GlobalChain& chain, int n) {
    BivariatePoly poly;
    for (int i = chain.start_dinv(); i < chain.tail_start(); ++i) {
        const Partition& p = chain.member(i);
        if (mind(p) <= n) poly.add_term(area(p, n), i, 1);
    }
    Partition cur = chain.member(chain.tail_start());
    int d = chain.tail_start();
    int prev_mind = -1;
    while (mind(cur) <= n) {
        if (mind(cur) < prev_mind)
            throw std::logic_error("mind is not monotone along a nu-tail");
        prev_mind = mind(cur);
        poly.add_term(area(cur, n), d, 1);
        cur = nu(cur);
        ++d;
    }
    return poly;
}

}  // namespace qtcat

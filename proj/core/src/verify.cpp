#include "qtcat/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "qtcat/catalan.hpp"
#include "qtcat/enumerate.hpp"
#include "qtcat/util.hpp"

namespace qtcat {

const Partition* ChainFamily::star(const Partition& mu) const {
    for (const auto& [x, y] : pairs) {
        if (x == mu) return &y;
        if (y == mu) return &x;
    }
    return nullptr;
}

const FamilyChain* ChainFamily::chain_for(const Partition& mu) const {
    for (const auto& c : chains)
        if (c.mu == mu) return &c;
    return nullptr;
}

bool VerificationReport::all_pass() const {
    return std::all_of(records.begin(), records.end(),
                       [](const CheckRecord& r) { return r.pass; });
}

void VerificationReport::add(const std::string& id, const std::string& mu, bool pass,
                             const std::string& witness) {
    records.push_back(CheckRecord{id, k, mu, pass, witness});
}

std::string VerificationReport::to_text() const {
    std::string out;
    int failed = 0;
    for (const auto& r : records) {
        out += "CHECK " + r.id + " " + std::to_string(r.k) + " " + r.mu + " " +
               (r.pass ? "PASS" : "FAIL");
        if (!r.witness.empty()) out += " " + r.witness;
        out += '\n';
        if (!r.pass) ++failed;
    }
    out += "VERIFY k=" + std::to_string(k) + " cutoff=" + std::to_string(dinv_cutoff) +
           " nmax=" + std::to_string(n_max) + " checks=" + std::to_string(records.size());
    out += failed ? " FAILED=" + std::to_string(failed) : std::string(" ALL-PASS");
    out += '\n';
    return out;
}

int default_dinv_cutoff(int k) {
    int cutoff = 0;
    for_each_partition_of(k, [&](const Partition& mu) {
        cutoff = std::max(cutoff, tail_start_dinv(mu) + 2 * tail_mind(mu));
    });
    return cutoff;
}

namespace {

enum class Role { Left, Middle, Right };

struct LocalRef {
    int chain_index;  // index into the family's chain list (desc-lex order)
    int local_index;  // position within that chain's decomposition
};

struct ExpandedChain {
    FamilyChain data;
    std::optional<GlobalChain> chain;     // set when expansion succeeded
    std::vector<LocalChain> locals;       // set when decomposition succeeded
    bool decomposed = false;
};

std::string pair_label(const Partition& a, const Partition& b) {
    return partition_label(a) + "~" + partition_label(b);
}

// Family-level structural validation: a size-preserving involution listing
// every partition of k exactly once, and exactly one chain per mu.
std::optional<std::string> family_defect(const ChainFamily& f) {
    std::map<Partition, int> expected;
    for_each_partition_of(f.k, [&](const Partition& mu) { expected.emplace(mu, 0); });

    std::map<Partition, int> seen;
    for (const auto& [x, y] : f.pairs) {
        if (size(x) != f.k || size(y) != f.k)
            return "pair " + pair_label(x, y) + " is not a pair of partitions of " +
                   std::to_string(f.k);
        ++seen[x];
        if (!(x == y)) ++seen[y];
    }
    for (const auto& [mu, cnt] : seen) {
        if (!expected.count(mu)) return partition_label(mu) + " is not a partition of k";
        if (cnt != 1) return partition_label(mu) + " appears in several pairs";
    }
    for (const auto& [mu, unused] : expected)
        if (!seen.count(mu)) return "no involution entry for " + partition_label(mu);

    std::set<Partition> chain_mus;
    for (const auto& c : f.chains) {
        if (!chain_mus.insert(c.mu).second)
            return "duplicate chain for " + partition_label(c.mu);
        if (!expected.count(c.mu))
            return "chain label " + partition_label(c.mu) + " is not a partition of k";
    }
    for (const auto& [mu, unused] : expected)
        if (!chain_mus.count(mu)) return "missing chain for " + partition_label(mu);
    return std::nullopt;
}

}  // namespace

VerificationReport verify_family(const ChainFamily& family, const VerifyOptions& opts) {
    VerificationReport report;
    report.k = family.k;
    report.n_max = opts.n_max;

    const int min_cutoff = default_dinv_cutoff(family.k);
    const int cutoff = opts.dinv_cutoff.value_or(min_cutoff);
    report.dinv_cutoff = cutoff;
    if (cutoff < min_cutoff)
        throw std::invalid_argument("verify_family: dinv cutoff " + std::to_string(cutoff) +
                                    " is below the certified minimum " +
                                    std::to_string(min_cutoff));

    if (auto defect = family_defect(family)) {
        report.add("FAMILY", "*", false, *defect);
        return report;
    }
    report.add("FAMILY", "*", true);

    // fixed processing order: chain labels descending lexicographically
    std::vector<FamilyChain> ordered = family.chains;
    std::sort(ordered.begin(), ordered.end(),
              [](const FamilyChain& a, const FamilyChain& b) { return DescLex{}(a.mu, b.mu); });

    std::vector<ExpandedChain> expanded;
    std::map<Partition, int> index_of;
    for (auto& fc : ordered) {
        ExpandedChain ec;
        ec.data = fc;
        const std::string label = partition_label(fc.mu);
        try {
            ec.chain = GlobalChain::expand(fc.initials, cutoff);
            report.add("EXPAND", label, true);
        } catch (const ChainError& e) {
            report.add("EXPAND", label, false, e.what());
        }
        if (ec.chain) {
            try {
                ec.locals = decompose_local(*ec.chain);
                ec.decomposed = true;
                report.add("DECOMP", label, true);
            } catch (const ChainError& e) {
                report.add("DECOMP", label, false, e.what());
            }
        }
        index_of.emplace(fc.mu, static_cast<int>(expanded.size()));
        expanded.push_back(std::move(ec));
    }

    // per-chain checks
    for (const auto& ec : expanded) {
        const std::string label = partition_label(ec.data.mu);
        if (!ec.chain || !ec.decomposed) continue;
        const GlobalChain& g = *ec.chain;

        // N marks are annotations: a non-marked initial must start a local
        // chain, a marked one must fall strictly inside a staircase zone
        {
            std::set<int> starts;
            for (const auto& lc : ec.locals)
                if (lc.kind != LocalChainKind::Singleton) starts.insert(lc.a);
            bool ok = true;
            std::string witness;
            for (const auto& init : ec.data.initials) {
                const int d = dinv(init.partition);
                const bool is_start = starts.count(d) > 0;
                if (init.n_marked == is_start) {
                    ok = false;
                    witness = "initial " + partition_label(init.partition) + " at dinv " +
                              std::to_string(d) +
                              (init.n_marked ? " is N-marked but starts a local chain"
                                             : " does not start a local chain");
                    break;
                }
            }
            report.add("NMARK", label, ok, witness);
        }

        // (L-a) the decomposition ends with tail(mu) for this chain's mu
        {
            const LocalChain& last = ec.locals.back();
            const bool ok =
                last.kind == LocalChainKind::Tail && last.tail_mu == ec.data.mu &&
                g.mu() == ec.data.mu;
            report.add("L-a", label, ok,
                       ok ? "" : "last local chain is not tail" + partition_label(ec.data.mu));
        }

        // (L-f) lpart+mpart of each local chain is a union of nu-segments
        {
            bool ok = true;
            std::string witness;
            for (size_t j = 0; j < ec.locals.size() && ok; ++j) {
                const LocalChain& lc = ec.locals[j];
                if (lc.kind == LocalChainKind::Singleton) continue;
                const int lo = lc.a;
                const int hi = lc.kind == LocalChainKind::Tail ? g.expanded_to()
                                                               : lc.a2 - 1;
                for (int i = lo; i <= hi && ok; ++i) {
                    const Partition& p = g.member(i);
                    if (auto up = nu_opt(p)) {
                        if (i + 1 > hi && lc.kind != LocalChainKind::Tail) {
                            ok = false;
                            witness = "nu(" + partition_label(p) + ") at dinv " +
                                      std::to_string(i) + " leaves lpart+mpart of local " +
                                      std::to_string(j);
                        } else if (i + 1 <= hi && !(*up == g.member(i + 1))) {
                            ok = false;
                            witness = "nu-successor mismatch at dinv " + std::to_string(i);
                        }
                    }
                    if (ok) {
                        if (auto down = nu_inv_opt(p)) {
                            if (i - 1 < lo) {
                                ok = false;
                                witness = "nu_inv(" + partition_label(p) + ") at dinv " +
                                          std::to_string(i) + " leaves lpart+mpart of local " +
                                          std::to_string(j);
                            } else if (!(*down == g.member(i - 1))) {
                                ok = false;
                                witness = "nu-predecessor mismatch at dinv " + std::to_string(i);
                            }
                        }
                    }
                }
            }
            report.add("L-f", label, ok, witness);
        }

        // (G-min) the mind word equals the pointwise min of the constituent
        // staircases, via both the left and the right parameter triples
        {
            std::vector<Staircase> left, right;
            for (const auto& lc : ec.locals) {
                if (lc.kind != LocalChainKind::Singleton)
                    left.push_back(Staircase{lc.a, lc.m, lc.h, std::nullopt});
                if (lc.kind != LocalChainKind::Tail)
                    right.push_back(Staircase{lc.a2, lc.m2, lc.h2, std::nullopt});
            }
            bool ok = true;
            std::string witness;
            for (int i = g.start_dinv(); i <= g.expanded_to() && ok; ++i) {
                const auto lv = min_staircase_value(left, i);
                const auto rv = min_staircase_value(right, i);
                if (!lv || !rv || *lv != g.mind_at(i) || *rv != g.mind_at(i)) {
                    ok = false;
                    witness = "mind word != staircase minimum at dinv " + std::to_string(i);
                }
            }
            report.add("G-min", label, ok, witness);
        }

        // (G-start) the chain starts at dinv = len(mu*)
        {
            const Partition* st = family.star(ec.data.mu);
            const bool ok = st && g.start_dinv() == st->length();
            report.add("G-start", label, ok,
                       ok ? ""
                          : "start dinv " + std::to_string(g.start_dinv()) + " != len(mu*)");
        }
    }

    // (L-d) and (G-opp): pair checks through the involution, reversing the
    // local index as in the pasting argument
    for (const auto& ec : expanded) {
        const Partition& mu = ec.data.mu;
        const Partition* st = family.star(mu);
        const std::string label = pair_label(mu, *st);
        const ExpandedChain& partner = expanded[static_cast<size_t>(index_of.at(*st))];
        if (!ec.decomposed || !partner.decomposed) {
            report.add("L-d", label, false, "decomposition unavailable");
            continue;
        }
        const auto& s_locals = ec.locals;
        const auto& t_locals = partner.locals;
        bool ok = true;
        std::string witness;
        if (s_locals.size() != t_locals.size()) {
            ok = false;
            witness = "local chain counts differ (" + std::to_string(s_locals.size()) + " vs " +
                      std::to_string(t_locals.size()) + ")";
        } else {
            for (size_t i = 0; i < s_locals.size() && ok; ++i) {
                const auto verdict =
                    locally_opposite(s_locals[i], t_locals[t_locals.size() - 1 - i]);
                if (!verdict.ok) {
                    ok = false;
                    witness = "locals " + std::to_string(i) + "~" +
                              std::to_string(t_locals.size() - 1 - i) + ": " + verdict.reason;
                }
            }
        }
        report.add("L-d", label, ok, witness);

        if (ec.chain && partner.chain) {
            bool opp_ok = true;
            std::string opp_witness;
            for (int n = 0; n <= opts.n_max && opp_ok; ++n) {
                const BivariatePoly lhs = qt_catalan_restricted(*ec.chain, n);
                const BivariatePoly rhs = qt_catalan_restricted(*partner.chain, n);
                if (!(lhs.swap_qt() == rhs)) {
                    opp_ok = false;
                    opp_witness = "Cat_{n,C} mismatch at n=" + std::to_string(n);
                }
            }
            report.add("G-opp", label, opp_ok, opp_witness);
        } else {
            report.add("G-opp", label, false, "expansion unavailable");
        }
    }

    const bool structure_ok =
        std::all_of(expanded.begin(), expanded.end(),
                    [](const ExpandedChain& ec) { return ec.chain && ec.decomposed; });
    if (!structure_ok) return report;

    // member lookup tables for the family-wide checks
    struct LocalMembers {
        LocalRef ref;
        const LocalChain* lc;
        const GlobalChain* chain;
        std::unordered_set<Partition, PartitionHash> members;
        int lo, hi;
    };
    std::vector<LocalMembers> all_locals;
    for (size_t ci = 0; ci < expanded.size(); ++ci) {
        const auto& ec = expanded[ci];
        for (size_t li = 0; li < ec.locals.size(); ++li) {
            const LocalChain& lc = ec.locals[li];
            LocalMembers lm;
            lm.ref = {static_cast<int>(ci), static_cast<int>(li)};
            lm.lc = &lc;
            lm.chain = &*ec.chain;
            lm.lo = lc.lo();
            lm.hi = std::min(lc.hi(ec.chain->expanded_to()), ec.chain->expanded_to());
            for (int i = lm.lo; i <= lm.hi; ++i) lm.members.insert(ec.chain->member(i));
            all_locals.push_back(std::move(lm));
        }
    }

    auto part_equal = [&](const LocalMembers& x, Interval xs, const LocalMembers& y,
                          Interval ys) {
        if (xs.empty() || ys.empty()) return false;
        // members carry a unique dinv, so equal parts occupy equal spans
        if (xs.lo != ys.lo || xs.hi != ys.hi) return false;
        for (long long i = xs.lo; i <= xs.hi; ++i)
            if (!(x.chain->member(static_cast<int>(i)) ==
                  y.chain->member(static_cast<int>(i - xs.lo + ys.lo))))
                return false;
        return true;
    };

    // (L-b) two distinct local chains are disjoint, or the right part of
    // one equals the left part of the other
    {
        bool ok = true;
        std::string witness;
        for (size_t x = 0; x < all_locals.size() && ok; ++x)
            for (size_t y = x + 1; y < all_locals.size() && ok; ++y) {
                const auto& lx = all_locals[x];
                const auto& ly = all_locals[y];
                const auto& small = lx.members.size() <= ly.members.size() ? lx : ly;
                const auto& big = lx.members.size() <= ly.members.size() ? ly : lx;
                bool overlap = false;
                for (const auto& p : small.members)
                    if (big.members.count(p)) {
                        overlap = true;
                        break;
                    }
                if (!overlap) continue;
                const bool pasted =
                    part_equal(lx, lx.lc->rpart_span(), ly, ly.lc->lpart_span()) ||
                    part_equal(ly, ly.lc->rpart_span(), lx, lx.lc->lpart_span());
                if (!pasted) {
                    ok = false;
                    witness = "locals (" + partition_label(expanded[lx.ref.chain_index].data.mu) +
                              "#" + std::to_string(lx.ref.local_index) + ", " +
                              partition_label(expanded[ly.ref.chain_index].data.mu) + "#" +
                              std::to_string(ly.ref.local_index) +
                              ") overlap without rpart = lpart";
                }
            }
        report.add("L-b", "*", ok, witness);
    }

    // (L-c) every deficit-k partition in the window lies in exactly one
    // middle part, or in exactly one right part plus one left part
    const auto window = deficit_window(family.k, cutoff);
    {
        std::unordered_map<Partition, std::vector<std::pair<LocalRef, Role>>, PartitionHash>
            roles;
        for (const auto& lm : all_locals) {
            auto add_roles = [&](Interval span, Role role) {
                if (span.empty()) return;
                for (long long i = std::max<long long>(span.lo, lm.lo);
                     i <= std::min<long long>(span.hi, lm.hi); ++i)
                    roles[lm.chain->member(static_cast<int>(i))].emplace_back(lm.ref, role);
            };
            add_roles(lm.lc->lpart_span(), Role::Left);
            add_roles(lm.lc->mpart_span(lm.chain->expanded_to()), Role::Middle);
            add_roles(lm.lc->rpart_span(), Role::Right);
        }
        bool ok = true;
        std::string witness;
        for (int i = 0; i <= cutoff && ok; ++i) {
            for (const auto& p : window[static_cast<size_t>(i)]) {
                const auto it = roles.find(p);
                const auto* rs = it == roles.end() ? nullptr : &it->second;
                bool good = false;
                if (rs && rs->size() == 1) good = (*rs)[0].second == Role::Middle;
                if (rs && rs->size() == 2) {
                    const auto& r0 = (*rs)[0];
                    const auto& r1 = (*rs)[1];
                    const bool distinct = r0.first.chain_index != r1.first.chain_index ||
                                          r0.first.local_index != r1.first.local_index;
                    good = distinct && ((r0.second == Role::Left && r1.second == Role::Right) ||
                                        (r0.second == Role::Right && r1.second == Role::Left));
                }
                if (!good) {
                    ok = false;
                    witness = partition_label(p) + " at dinv " + std::to_string(i) +
                              " is covered by " + std::to_string(rs ? rs->size() : 0) +
                              " local-chain parts";
                    break;
                }
            }
        }
        report.add("L-c", "*", ok, witness);
    }

    // (L-e) overlapping chains map to overlapping chains under *
    {
        bool ok = true;
        std::string witness;
        // star on locals: local j of C_mu pairs with local (count-1-j) of C_mu*
        auto star_of = [&](const LocalRef& ref) -> const LocalMembers* {
            const auto& ec = expanded[static_cast<size_t>(ref.chain_index)];
            const Partition* st = family.star(ec.data.mu);
            const auto& pc = expanded[static_cast<size_t>(index_of.at(*st))];
            if (pc.locals.size() != ec.locals.size()) return nullptr;
            const int tj = static_cast<int>(ec.locals.size()) - 1 - ref.local_index;
            for (const auto& lm : all_locals)
                if (lm.ref.chain_index == index_of.at(*st) && lm.ref.local_index == tj)
                    return &lm;
            return nullptr;
        };
        auto overlap = [&](const LocalMembers& x, const LocalMembers& y) {
            const auto& small = x.members.size() <= y.members.size() ? x : y;
            const auto& big = x.members.size() <= y.members.size() ? y : x;
            for (const auto& p : small.members)
                if (big.members.count(p)) return true;
            return false;
        };
        for (size_t x = 0; x < all_locals.size() && ok; ++x)
            for (size_t y = x + 1; y < all_locals.size() && ok; ++y) {
                if (!overlap(all_locals[x], all_locals[y])) continue;
                const LocalMembers* sx = star_of(all_locals[x].ref);
                const LocalMembers* sy = star_of(all_locals[y].ref);
                if (!sx || !sy || !overlap(*sx, *sy)) {
                    ok = false;
                    witness = "starred locals of an overlapping pair do not overlap";
                }
            }
        report.add("L-e", "*", ok, witness);
    }

    // (G-count) #Def(k) at dinv i equals the number of chains started by i
    {
        bool ok = true;
        std::string witness;
        for (int i = 0; i <= cutoff && ok; ++i) {
            int started = 0;
            for (const auto& ec : expanded)
                if (ec.chain->start_dinv() <= i) ++started;
            const int present = static_cast<int>(window[static_cast<size_t>(i)].size());
            if (present != started) {
                ok = false;
                witness = "dinv " + std::to_string(i) + ": |Def(k)| slice is " +
                          std::to_string(present) + " but " + std::to_string(started) +
                          " chains have started";
            }
        }
        report.add("G-count", "*", ok, witness);
    }

    return report;
}

}  // namespace qtcat

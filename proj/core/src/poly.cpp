#include "qtcat/poly.hpp"

#include <stdexcept>

#include "qtcat/util.hpp"

namespace qtcat {

void BivariatePoly::add_term(int q_exp, int t_exp, long long coeff) {
    if (q_exp < 0 || t_exp < 0)
        throw std::invalid_argument("BivariatePoly: negative exponent");
    if (coeff == 0) return;
    const Key key{t_exp, q_exp};
    auto it = terms_.find(key);
    const long long next = it == terms_.end() ? coeff : checked_add(it->second, coeff);
    if (next < 0) throw std::invalid_argument("BivariatePoly: negative coefficient");
    if (next == 0) {
        terms_.erase(it);
    } else if (it == terms_.end()) {
        terms_.emplace(key, next);
    } else {
        it->second = next;
    }
}

long long BivariatePoly::coeff(int q_exp, int t_exp) const {
    auto it = terms_.find(Key{t_exp, q_exp});
    return it == terms_.end() ? 0 : it->second;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& other) {
    for (const auto& [key, c] : other.terms_) add_term(key.second, key.first, c);
    return *this;
}

BivariatePoly BivariatePoly::swap_qt() const {
    BivariatePoly out;
    for (const auto& [key, c] : terms_) out.add_term(key.first, key.second, c);
    return out;
}

BivariatePoly BivariatePoly::truncate_degree_at_least(int floor) const {
    BivariatePoly out;
    for (const auto& [key, c] : terms_)
        if (key.first + key.second >= floor) out.add_term(key.second, key.first, c);
    return out;
}

long long BivariatePoly::evaluate_ones() const {
    long long s = 0;
    for (const auto& [key, c] : terms_) s = checked_add(s, c);
    return s;
}

namespace {

void append_power(std::string& out, const char* var, int exp) {
    if (exp == 0) return;
    out += var;
    if (exp > 1) {
        out += '^';
        out += std::to_string(exp);
    }
}

}  // namespace

std::string BivariatePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : terms_) {
        const auto [t_exp, q_exp] = key;
        if (!out.empty()) out += '+';
        if (c != 1 || (q_exp == 0 && t_exp == 0)) out += std::to_string(c);
        if (c != 1 && (q_exp != 0 || t_exp != 0)) out += '*';
        std::string mono;
        append_power(mono, "q", q_exp);
        if (!mono.empty() && t_exp > 0) mono += '*';
        append_power(mono, "t", t_exp);
        out += mono;
    }
    return out;
}

std::string BivariatePoly::to_csv() const {
    std::string out;
    for (const auto& [key, c] : terms_) {
        out += std::to_string(key.second);
        out += ',';
        out += std::to_string(key.first);
        out += ',';
        out += std::to_string(c);
        out += '\n';
    }
    return out;
}

}  // namespace qtcat

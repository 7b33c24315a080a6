#include "orbicheck/ring.hpp"

#include <cctype>
#include <set>

namespace orbicheck {

bool is_identifier(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c))) return false;
    return true;
}

std::optional<VarIdx> Ring::find(std::string_view name) const {
    for (VarIdx i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

VarIdx Ring::index_of(std::string_view name) const {
    auto i = find(name);
    if (!i) throw DomainError("no variable named '" + std::string(name) + "'");
    return *i;
}

Ring Ring::with_parameters(const std::vector<std::string>& params) const {
    Ring r = *this;
    for (const auto& p : params) {
        if (!is_identifier(p)) throw DomainError("bad variable name '" + p + "'");
        if (r.find(p)) throw DomainError("duplicate variable '" + p + "'");
        r.names_.push_back(p);
        r.weights_.push_back(Rational(0));
        r.param_.push_back(1);
    }
    return r;
}

Ring weighted_ring(std::vector<std::string> names, std::vector<Rational> weights) {
    if (names.size() != weights.size())
        throw DomainError("name/weight count mismatch");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (!is_identifier(n)) throw DomainError("bad variable name '" + n + "'");
        if (!seen.insert(n).second) throw DomainError("duplicate variable '" + n + "'");
    }
    for (const auto& w : weights)
        if (w <= 0) throw DomainError("weights must be strictly positive");
    Ring r;
    r.names_ = std::move(names);
    r.weights_ = std::move(weights);
    r.param_.assign(r.names_.size(), 0);
    return r;
}

Ring unweighted_ring(std::vector<std::string> names) {
    Ring r;
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (!is_identifier(n)) throw DomainError("bad variable name '" + n + "'");
        if (!seen.insert(n).second) throw DomainError("duplicate variable '" + n + "'");
    }
    r.names_ = std::move(names);
    r.weights_.assign(r.names_.size(), Rational(0));
    r.param_.assign(r.names_.size(), 1);
    return r;
}

} // namespace orbicheck

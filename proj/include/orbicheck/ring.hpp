#pragma once
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbicheck/rational.hpp"

namespace orbicheck {

using VarIdx = uint32_t;

// A named, weighted variable list. Geometric variables carry strictly
// positive rational weights; parameter variables (deformation coefficients,
// adjoined inverses) carry weight 0 and are flagged so degree computations
// and monomial enumeration can skip them.
class Ring {
public:
    Ring() = default;

    size_t size() const { return names_.size(); }
    const std::string& name(VarIdx i) const { return names_[i]; }
    const Rational& weight(VarIdx i) const { return weights_[i]; }
    bool is_param(VarIdx i) const { return param_[i] != 0; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<VarIdx> find(std::string_view name) const;
    VarIdx index_of(std::string_view name) const; // throws if absent

    // Appends weight-0 parameter variables, returning the extended ring.
    Ring with_parameters(const std::vector<std::string>& params) const;

    friend Ring weighted_ring(std::vector<std::string> names,
                              std::vector<Rational> weights);
    friend Ring unweighted_ring(std::vector<std::string> names);

private:
    std::vector<std::string> names_;
    std::vector<Rational> weights_;
    std::vector<char> param_;
};

// Validates distinct identifier names and strictly positive weights.
Ring weighted_ring(std::vector<std::string> names, std::vector<Rational> weights);

// All variables are parameters (weight 0); used for coefficient-only rings.
Ring unweighted_ring(std::vector<std::string> names);

bool is_identifier(std::string_view s);

} // namespace orbicheck

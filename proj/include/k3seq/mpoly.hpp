#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3seq/rational.hpp"

namespace k3seq {

/// Sparse multivariate polynomial over Q with a fixed variable list.
/// Zero coefficients are never stored.
class MPoly {
public:
    using Expo = std::vector<int>;

    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPoly constant(std::vector<std::string> vars, const Rat& c);
    static MPoly variable(std::vector<std::string> vars, int index);

    const std::vector<std::string>& vars() const { return vars_; }
    int nvars() const { return int(vars_.size()); }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, Rat>& terms() const { return terms_; }

    void add_term(const Expo& e, const Rat& c);

    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly operator*(const Rat& s) const;

    Rat eval(const std::vector<Rat>& point) const;

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    std::vector<std::string> vars_;
    std::map<Expo, Rat> terms_;
};

}  // namespace k3seq

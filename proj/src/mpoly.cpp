#include "k3seq/mpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace k3seq {

MPoly MPoly::constant(std::vector<std::string> vars, const Rat& c) {
    MPoly p(std::move(vars));
    p.add_term(Expo(p.nvars(), 0), c);
    return p;
}

MPoly MPoly::variable(std::vector<std::string> vars, int index) {
    MPoly p(std::move(vars));
    if (index < 0 || index >= p.nvars())
        throw std::invalid_argument("MPoly::variable: index out of range");
    Expo e(p.nvars(), 0);
    e[index] = 1;
    p.add_term(e, Rat(1));
    return p;
}

void MPoly::add_term(const Expo& e, const Rat& c) {
    if (int(e.size()) != nvars())
        throw std::invalid_argument("MPoly: exponent arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    if (a.vars_ != b.vars_) throw std::invalid_argument("MPoly: variable mismatch");
    MPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + b * Rat(-1); }

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.vars_ != b.vars_) throw std::invalid_argument("MPoly: variable mismatch");
    MPoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            MPoly::Expo e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MPoly MPoly::operator*(const Rat& s) const {
    MPoly r(vars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
    if (int(point.size()) != nvars())
        throw std::invalid_argument("MPoly::eval: arity mismatch");
    Rat total(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) t *= point[i].pow(e[i]);
        total += t;
    }
    return total;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            os << "*" << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace k3seq

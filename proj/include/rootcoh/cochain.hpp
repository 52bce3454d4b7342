#pragma once

// Monomial-valued cochains: linear forms on chain sums, the coboundary, the
// cup product, reversal symmetry and the Aut(Phi) action. Generators not
// listed in a cochain take the identity monomial; the value on any zero
// chain is the identity.

#include <map>
#include <vector>

#include "rootcoh/chain.hpp"
#include "rootcoh/monomial.hpp"

namespace rootcoh {

class Cochain {
public:
    Cochain() = default;
    Cochain(int degree, VariableTable vars) : degree_(degree), vars_(std::move(vars)) {}

    int degree() const { return degree_; }
    const VariableTable& variables() const { return vars_; }
    size_t num_variables() const { return vars_.size(); }
    const std::map<Chain, Monomial>& values() const { return values_; }

    void set(const Chain& c, const Monomial& m)
    {
        if (c.degree() != degree_)
            throw DegreeMismatch("cochain of degree " + std::to_string(degree_) +
                                 " given a degree-" + std::to_string(c.degree()) + " chain");
        if (m.size() != vars_.size())
            throw DegreeMismatch("monomial does not match the variable table");
        if (m.is_identity())
            values_.erase(c);
        else
            values_[c] = m;
    }

    Monomial value(const Chain& c) const
    {
        auto it = values_.find(c);
        if (it == values_.end()) return Monomial::identity(vars_.size());
        return it->second;
    }

    Monomial evaluate(const ChainSum& s) const
    {
        if (s.degree() != degree_ && !s.empty())
            throw DegreeMismatch("evaluating a degree-" + std::to_string(degree_) +
                                 " cochain on a degree-" + std::to_string(s.degree()) + " sum");
        Monomial acc = Monomial::identity(vars_.size());
        for (const auto& [c, k] : s.terms())
            acc += value(c).scaled(k);
        return acc;
    }

    Cochain& operator+=(const Cochain& o)
    {
        require_compatible(o);
        for (const auto& [c, m] : o.values_) set(c, value(c) + m);
        return *this;
    }

    Cochain& operator-=(const Cochain& o)
    {
        require_compatible(o);
        for (const auto& [c, m] : o.values_) set(c, value(c) - m);
        return *this;
    }

    friend Cochain operator+(Cochain a, const Cochain& b) { a += b; return a; }
    friend Cochain operator-(Cochain a, const Cochain& b) { a -= b; return a; }

    Cochain negated() const
    {
        Cochain r(degree_, vars_);
        for (const auto& [c, m] : values_) r.values_[c] = m.negated();
        return r;
    }

    // Identity values are never stored, so map equality is extensional
    // equality over the full generator list.
    bool operator==(const Cochain&) const = default;

    // Re-express over a larger table whose first variables coincide.
    Cochain with_variables(const VariableTable& vars) const
    {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars.name(i) != vars_.name(i))
                throw MalformedInput("variable table extension must keep existing names");
        Cochain r(degree_, vars);
        for (const auto& [c, m] : values_) r.values_[c] = m.padded(vars.size());
        return r;
    }

private:
    void require_compatible(const Cochain& o) const
    {
        if (degree_ != o.degree_)
            throw DegreeMismatch("cochain degrees differ");
        if (!(vars_ == o.vars_))
            throw DegreeMismatch("cochain variable tables differ");
    }

    int degree_ = 0;
    VariableTable vars_;
    std::map<Chain, Monomial> values_;
};

// A cochain with the given value on every degree-n generator.
inline Cochain uniform_cochain(const RootSystem& rs, int degree, const VariableTable& vars,
                               const Monomial& m, int degree_cap = kDefaultDegreeCap)
{
    Cochain w(degree, vars);
    for (const Chain& c : enumerate_chains(rs, degree, degree_cap))
        w.set(c, m);
    return w;
}

// d^n omega = omega o boundary, defined on all degree-(n+1) generators.
inline Cochain coboundary(const RootSystem& rs, const Cochain& w,
                          int degree_cap = kDefaultDegreeCap)
{
    Cochain out(w.degree() + 1, w.variables());
    for (const Chain& c : enumerate_chains(rs, w.degree() + 1, degree_cap))
        out.set(c, w.evaluate(boundary(rs, c)));
    return out;
}

// Multiplication used by the cup product. The module Z^k multiplies
// exponent vectors componentwise; the exponent-sum variant is kept for
// comparison with the additive reading.
enum class CupConvention { exponent_product, exponent_sum };

inline Cochain cup(const RootSystem& rs, const Cochain& a, const Cochain& b,
                   CupConvention conv = CupConvention::exponent_product,
                   int degree_cap = kDefaultDegreeCap)
{
    if (!(a.variables() == b.variables()))
        throw DegreeMismatch("cup factors must share a variable table");
    int p = a.degree(), q = b.degree();
    Cochain out(p + q, a.variables());
    for (const Chain& c : enumerate_chains(rs, p + q, degree_cap)) {
        std::vector<int> head(c.entries().begin(), c.entries().begin() + p);
        std::vector<int> tail(c.entries().begin() + p, c.entries().end());
        Monomial u = a.value(Chain(std::move(head)));
        Monomial v = b.value(Chain(std::move(tail)));
        out.set(c, conv == CupConvention::exponent_product ? u.hadamard(v) : u + v);
    }
    return out;
}

// rho-hat: (reversal(w))(c) = w(reversed c) scaled by (-1)^kappa_n.
inline Cochain reversal(const Cochain& w)
{
    Cochain out(w.degree(), w.variables());
    int64_t sign = reversal_sign(w.degree());
    for (const auto& [c, m] : w.values())
        out.set(c.reversed(), m.scaled(sign));
    return out;
}

enum class SymmetryClass { symmetric, antisymmetric, neither };

struct SymmetryReport {
    bool symmetric = false;
    bool antisymmetric = false;

    SymmetryClass primary() const
    {
        if (symmetric) return SymmetryClass::symmetric;
        if (antisymmetric) return SymmetryClass::antisymmetric;
        return SymmetryClass::neither;
    }
};

inline const char* symmetry_class_name(SymmetryClass c)
{
    switch (c) {
    case SymmetryClass::symmetric: return "symmetric";
    case SymmetryClass::antisymmetric: return "antisymmetric";
    default: return "neither";
    }
}

inline SymmetryReport symmetry(const Cochain& w)
{
    Cochain r = reversal(w);
    SymmetryReport rep;
    rep.symmetric = (r == w);
    rep.antisymmetric = (r == w.negated());
    return rep;
}

// (sigma w)(c) = w(sigma^{-1} c).
inline Cochain act(const Automorphism& sigma, const Cochain& w)
{
    Cochain out(w.degree(), w.variables());
    for (const auto& [c, m] : w.values())
        out.set(apply(sigma, c), m);
    return out;
}

} // namespace rootcoh

#pragma once

// Laurent monomials in named variables, identified with their exponent
// vectors. Internally everything is additive on exponents; rendering and
// file formats are multiplicative (I^2*J^-1).

#include <cstdint>
#include <string>
#include <vector>

#include "rootcoh/errors.hpp"

namespace rootcoh {

class VariableTable {
public:
    VariableTable() = default;
    explicit VariableTable(std::vector<std::string> names) : names_(std::move(names)) {}

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    int find(const std::string& n) const
    {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return static_cast<int>(i);
        return -1;
    }

    void add(const std::string& n)
    {
        if (find(n) >= 0) throw MalformedInput("duplicate variable name " + n);
        names_.push_back(n);
    }

    bool operator==(const VariableTable&) const = default;
};

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(size_t k) : e_(k, 0) {}
    explicit Monomial(std::vector<int64_t> exps) : e_(std::move(exps)) {}

    static Monomial identity(size_t k) { return Monomial(k); }

    size_t size() const { return e_.size(); }
    int64_t exp(size_t i) const { return e_[i]; }
    int64_t& exp(size_t i) { return e_[i]; }
    const std::vector<int64_t>& exps() const { return e_; }

    bool is_identity() const
    {
        for (int64_t x : e_)
            if (x != 0) return false;
        return true;
    }

    bool is_natural() const
    {
        for (int64_t x : e_)
            if (x < 0) return false;
        return true;
    }

    Monomial& operator+=(const Monomial& o)
    {
        check(o);
        for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }

    Monomial& operator-=(const Monomial& o)
    {
        check(o);
        for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }

    friend Monomial operator+(Monomial a, const Monomial& b) { a += b; return a; }
    friend Monomial operator-(Monomial a, const Monomial& b) { a -= b; return a; }

    Monomial negated() const
    {
        Monomial r = *this;
        for (auto& x : r.e_) x = -x;
        return r;
    }

    Monomial scaled(int64_t k) const
    {
        Monomial r = *this;
        for (auto& x : r.e_) x *= k;
        return r;
    }

    // The ring product of the module Z^k: componentwise multiplication of
    // exponent vectors (the cup-product multiplication).
    Monomial hadamard(const Monomial& o) const
    {
        check(o);
        Monomial r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] *= o.e_[i];
        return r;
    }

    // Zero-pad up to k variables (table extension).
    Monomial padded(size_t k) const
    {
        Monomial r = *this;
        while (r.e_.size() < k) r.e_.push_back(0);
        return r;
    }

    std::string str(const VariableTable& vars) const
    {
        std::string out;
        for (size_t i = 0; i < e_.size(); ++i) {
            if (e_[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += vars.name(i);
            if (e_[i] != 1) out += "^" + std::to_string(e_[i]);
        }
        return out.empty() ? "1" : out;
    }

    auto operator<=>(const Monomial&) const = default;

private:
    void check(const Monomial& o) const
    {
        if (e_.size() != o.e_.size())
            throw DegreeMismatch("monomials over different variable tables");
    }

    std::vector<int64_t> e_;
};

} // namespace rootcoh

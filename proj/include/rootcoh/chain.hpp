#pragma once

// Chain generators [r_1|...|r_n] over a root system, integer chain sums, the
// boundary operator, reversal and the Aut(Phi) action on chains.
//
// A generator stores nonzero roots only. Tuples with a zero constituent are
// the zero chain: they never appear as generators and contribute nothing to
// a ChainSum. A tuple is a generator exactly when every contiguous block sum
// r_i + ... + r_j lies in Phi_0; this agrees with the inductive single-merge
// definition (the unit tests check the two characterisations against each
// other exhaustively).

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "rootcoh/root_system.hpp"

namespace rootcoh {

inline constexpr int kDefaultDegreeCap = 4;

inline int degree_cap_from_env(int fallback = kDefaultDegreeCap)
{
    if (const char* s = std::getenv("ROOTCOH_DEGREE_CAP")) {
        int v = std::atoi(s);
        if (v >= 1) return v;
    }
    return fallback;
}

class Chain {
public:
    Chain() = default;
    explicit Chain(std::vector<int> entries) : entries_(std::move(entries)) {}

    int degree() const { return static_cast<int>(entries_.size()); }
    const std::vector<int>& entries() const { return entries_; }
    int at(int i) const { return entries_[static_cast<size_t>(i)]; }

    Chain reversed() const
    {
        std::vector<int> e(entries_.rbegin(), entries_.rend());
        return Chain(std::move(e));
    }

    auto operator<=>(const Chain&) const = default;

private:
    std::vector<int> entries_;
};

class ChainSum {
public:
    explicit ChainSum(int degree = 0) : degree_(degree) {}

    int degree() const { return degree_; }
    bool empty() const { return terms_.empty(); }
    const std::map<Chain, int64_t>& terms() const { return terms_; }

    void add(const Chain& c, int64_t coeff)
    {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(c, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    ChainSum& operator+=(const ChainSum& o)
    {
        for (const auto& [c, k] : o.terms_) add(c, k);
        return *this;
    }

    ChainSum& operator-=(const ChainSum& o)
    {
        for (const auto& [c, k] : o.terms_) add(c, -k);
        return *this;
    }

    ChainSum scaled(int64_t k) const
    {
        ChainSum r(degree_);
        if (k != 0)
            for (const auto& [c, v] : terms_) r.add(c, v * k);
        return r;
    }

    friend ChainSum operator+(ChainSum a, const ChainSum& b) { a += b; return a; }
    friend ChainSum operator-(ChainSum a, const ChainSum& b) { a -= b; return a; }
    bool operator==(const ChainSum&) const = default;

private:
    int degree_ = 0;
    std::map<Chain, int64_t> terms_;
};

inline ChainSum single_chain(const Chain& c)
{
    ChainSum s(c.degree());
    s.add(c, 1);
    return s;
}

// Block-sum membership test: every contiguous block sum must lie in Phi_0.
inline bool is_valid_chain(const RootSystem& rs, std::span<const int> entries)
{
    int n = static_cast<int>(entries.size());
    for (int i = 0; i < n; ++i) {
        int acc = entries[static_cast<size_t>(i)]; // block (i..j) as Phi_0 element
        for (int j = i + 1; j < n; ++j) {
            SumResult s = rs.sum0(acc, entries[static_cast<size_t>(j)]);
            if (!s.defined()) return false;
            acc = s.element();
        }
    }
    return true;
}

inline bool is_valid_chain(const RootSystem& rs, const Chain& c)
{
    return is_valid_chain(rs, std::span<const int>(c.entries()));
}

// All degree-n generators, lexicographic in root ids.
inline std::vector<Chain> enumerate_chains(const RootSystem& rs, int degree,
                                           int degree_cap = kDefaultDegreeCap)
{
    if (degree < 1)
        throw DegreeCapExceeded("chain degree must be >= 1");
    if (degree > degree_cap)
        throw DegreeCapExceeded("degree " + std::to_string(degree) + " exceeds cap " +
                                std::to_string(degree_cap) + " (see ROOTCOH_DEGREE_CAP)");
    std::vector<Chain> out;
    std::vector<int> stack;
    // suffix[i] = sum of entries i..k-1 as a Phi_0 element (root id or kZeroId)
    std::vector<int> suffix;
    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(stack.size()) == degree) {
            out.emplace_back(stack);
            return;
        }
        for (int r = 0; r < rs.num_roots(); ++r) {
            bool ok = true;
            std::vector<int> next(suffix.size() + 1);
            for (size_t i = 0; i < suffix.size(); ++i) {
                SumResult s = rs.sum0(suffix[i], r);
                if (!s.defined()) { ok = false; break; }
                next[i] = s.element();
            }
            if (!ok) continue;
            next[suffix.size()] = r;
            stack.push_back(r);
            std::swap(suffix, next);
            self(self);
            std::swap(suffix, next);
            stack.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

// Boundary of a degree-n generator (n >= 2); terms whose merged entry is zero
// drop out as the zero chain. Degree-1 generators bound to the empty sum.
inline ChainSum boundary(const RootSystem& rs, const Chain& c)
{
    int n = c.degree();
    ChainSum out(n - 1);
    if (n <= 1) return out;
    const std::vector<int>& e = c.entries();

    {
        std::vector<int> lead(e.begin() + 1, e.end());
        out.add(Chain(std::move(lead)), 1);
    }
    for (int j = 1; j < n; ++j) {
        SumResult s = rs.sum(e[static_cast<size_t>(j - 1)], e[static_cast<size_t>(j)]);
        if (!s.defined())
            throw InternalInvariantViolation("boundary of an invalid chain");
        if (s.is_zero()) continue;
        std::vector<int> merged;
        merged.reserve(static_cast<size_t>(n - 1));
        for (int i = 0; i < j - 1; ++i) merged.push_back(e[static_cast<size_t>(i)]);
        merged.push_back(s.root);
        for (int i = j + 1; i < n; ++i) merged.push_back(e[static_cast<size_t>(i)]);
        out.add(Chain(std::move(merged)), (j % 2 == 0) ? 1 : -1);
    }
    {
        std::vector<int> trail(e.begin(), e.end() - 1);
        out.add(Chain(std::move(trail)), (n % 2 == 0) ? 1 : -1);
    }
    return out;
}

inline ChainSum boundary(const RootSystem& rs, const ChainSum& s)
{
    ChainSum out(s.degree() - 1);
    for (const auto& [c, k] : s.terms())
        out += boundary(rs, c).scaled(k);
    return out;
}

// kappa_n = C(n+1, 2) + 1; the reversal sign is (-1)^kappa_n.
inline int64_t reversal_sign(int degree)
{
    int64_t kappa = static_cast<int64_t>(degree + 1) * degree / 2 + 1;
    return (kappa % 2 == 0) ? 1 : -1;
}

// Signed reversal of a generator, as an element of C_n.
inline ChainSum reversal(const Chain& c)
{
    ChainSum s(c.degree());
    s.add(c.reversed(), reversal_sign(c.degree()));
    return s;
}

inline ChainSum reversal(const ChainSum& s)
{
    ChainSum out(s.degree());
    int64_t sign = reversal_sign(s.degree());
    for (const auto& [c, k] : s.terms())
        out.add(c.reversed(), sign * k);
    return out;
}

inline Chain apply(const Automorphism& sigma, const Chain& c)
{
    std::vector<int> e;
    e.reserve(c.entries().size());
    for (int r : c.entries()) e.push_back(sigma.apply(r));
    return Chain(std::move(e));
}

inline ChainSum apply(const Automorphism& sigma, const ChainSum& s)
{
    ChainSum out(s.degree());
    for (const auto& [c, k] : s.terms())
        out.add(apply(sigma, c), k);
    return out;
}

} // namespace rootcoh

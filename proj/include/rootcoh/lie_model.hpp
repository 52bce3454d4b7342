#pragma once

// Cartan-Weyl bases with monomial-deformed structure constants. The integer
// signs come from the extraspecial-pair normalisation: fix N(a,b) = p+1 on
// the extraspecial pair of each composite positive root and push the value
// to every other pair through the standard identities
//   N(b,a) = -N(a,b),   N(-a,-b) = -N(a,b),
//   a+b+c = 0:          N(a,b)/(c,c) = N(b,c)/(a,a) = N(c,a)/(b,b),
//   a+b+c+d = 0, no two opposite:
//     N(a,b)N(c,d)/(a+b,a+b) + N(b,c)N(a,d)/(b+c,b+c) + N(c,a)N(b,d)/(c+a,c+a) = 0.
// [e_a, e_{-a}] is the coroot a^v, so the opposite-pair sign is 1 for every
// root, matching the simple-root normalisation.

#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "rootcoh/cochain.hpp"
#include "rootcoh/cohomology.hpp"

namespace rootcoh {

class SignForm {
public:
    explicit SignForm(const RootSystem& rs) : rs_(&rs)
    {
        int n = rs.num_roots();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (rs.sum(a, b).is_root()) (void)value(a, b);
        validate();
    }

    // epsilon^2(a, b) for a composable pair (a + b a root).
    int64_t value(int a, int b) const
    {
        auto key = std::make_pair(a, b);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        int64_t v = compute(a, b);
        memo_.emplace(key, v);
        return v;
    }

    // epsilon^2(a, -a); constant 1 under the coroot convention.
    int64_t opposite(int) const { return 1; }

    const RootSystem& system() const { return *rs_; }

private:
    const RootSystem* rs_;
    mutable std::map<std::pair<int, int>, int64_t> memo_;

    int64_t compute(int a, int b) const
    {
        const RootSystem& rs = *rs_;
        SumResult s = rs.sum(a, b);
        if (!s.is_root())
            throw InternalInvariantViolation("sign requested for a non-composable pair");
        bool pa = rs.is_positive(a), pb = rs.is_positive(b);
        if (pa && pb) {
            if (a > b) return -value(b, a);
            auto [ea, eb] = extraspecial(s.root);
            int p = rs.string_down_length(a, b);
            if (a == ea && b == eb) return p + 1;
            // four-root identity on (-a, ea, eb, -b)
            int na = rs.negate(a), nb = rs.negate(b);
            int64_t t1 = 0, t3 = 0;
            SumResult d1 = rs.sum(na, ea); // ea - a
            if (d1.is_root())
                t1 = frac(value(na, ea) * value(eb, nb), rs.length_sq(d1.root));
            SumResult d3 = rs.sum(eb, na); // eb - a
            if (d3.is_root())
                t3 = frac(value(eb, na) * value(ea, nb), rs.length_sq(d3.root));
            int64_t num = (t1 + t3) * rs.length_sq(s.root);
            int64_t den = value(ea, eb);
            if (num % den != 0)
                throw InternalInvariantViolation("non-integral structure constant");
            int64_t v = num / den;
            if (v == 0 || std::abs(v) != p + 1)
                throw InternalInvariantViolation("structure constant violates the string law");
            return v;
        }
        if (!pa && !pb) return -value(rs.negate(a), rs.negate(b));
        if (pa) return -value(b, a); // reduce to (negative, positive)
        // a negative, b positive, c = -(a+b)
        int c = rs.negate(s.root);
        if (rs.is_positive(s.root)) {
            // N(c,a) with c,a negative reduces to positives
            int64_t nca = -value(rs.negate(c), rs.negate(a));
            return frac(nca * rs.length_sq(c), rs.length_sq(b));
        }
        return frac(value(b, c) * rs.length_sq(c), rs.length_sq(a));
    }

    static int64_t frac(int64_t num, int64_t den)
    {
        if (num % den != 0)
            throw InternalInvariantViolation("non-integral structure constant");
        return num / den;
    }

    // The composable positive pair (a, b) with a + b = root and minimal a.
    std::pair<int, int> extraspecial(int root) const
    {
        const RootSystem& rs = *rs_;
        for (int a : rs.positive_ids()) {
            if (a >= root) break;
            SumResult rest = rs.sum(root, rs.negate(a));
            if (rest.is_root() && rs.is_positive(rest.root) && a < rest.root)
                return {a, rest.root};
        }
        throw InternalInvariantViolation("composite root without a special pair");
    }

    void validate() const
    {
        const RootSystem& rs = *rs_;
        for (const auto& [key, v] : memo_) {
            auto [a, b] = key;
            if (v != -value(b, a))
                throw InternalInvariantViolation("sign form is not skew");
            int p = rs.string_down_length(a, b);
            if (std::abs(v) != p + 1)
                throw InternalInvariantViolation("sign form violates the string law");
        }
    }
};

inline SignForm chevalley_signs(const RootSystem& rs) { return SignForm(rs); }

// ---------------------------------------------------------------------------
// The deformed algebra: basis h_1..h_l, e_alpha; coefficients are formal
// integer combinations of monomials, so Jacobi expansion stays exact.

// Z-linear combination of monomials.
class RingElem {
public:
    RingElem() = default;

    static RingElem term(const Monomial& m, int64_t c)
    {
        RingElem r;
        if (c != 0) r.terms_[m] = c;
        return r;
    }

    bool zero() const { return terms_.empty(); }
    const std::map<Monomial, int64_t>& terms() const { return terms_; }

    void add(const Monomial& m, int64_t c)
    {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    RingElem& operator+=(const RingElem& o)
    {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }

    RingElem times(const Monomial& m, int64_t c) const
    {
        RingElem r;
        if (c != 0)
            for (const auto& [mm, cc] : terms_) r.add(mm + m, cc * c);
        return r;
    }

    bool operator==(const RingElem&) const = default;
};

// Element of the algebra: basis index -> RingElem coefficient.
// Basis layout: 0..rank-1 are h_1..h_rank, rank + id is e_root(id).
class AlgebraElem {
public:
    bool zero() const { return comps_.empty(); }
    const std::map<int, RingElem>& components() const { return comps_; }

    void add(int basis, const RingElem& r)
    {
        if (r.zero()) return;
        auto [it, fresh] = comps_.try_emplace(basis, r);
        if (!fresh) {
            it->second += r;
            if (it->second.zero()) comps_.erase(it);
        }
    }

    AlgebraElem& operator+=(const AlgebraElem& o)
    {
        for (const auto& [b, r] : o.comps_) add(b, r);
        return *this;
    }

private:
    std::map<int, RingElem> comps_;
};

class DeformedAlgebra {
public:
    DeformedAlgebra(const RootSystem& rs, const SignForm& eps, const Cochain& w)
        : rs_(&rs), eps_(&eps), w_(w)
    {
        if (w.degree() != 2)
            throw DegreeMismatch("algebra deformation expects a 2-form");
        if (!symmetry(w).symmetric)
            throw NotSymmetric("deformation 2-form must be symmetric");
    }

    const RootSystem& system() const { return *rs_; }
    const Cochain& deformation() const { return w_; }
    int dim() const { return rs_->rank() + rs_->num_roots(); }
    size_t num_variables() const { return w_.num_variables(); }

    bool is_cartan(int basis) const { return basis < rs_->rank(); }
    int root_of(int basis) const { return basis - rs_->rank(); }
    int basis_of_root(int id) const { return rs_->rank() + id; }

    std::string basis_label(int basis) const
    {
        if (is_cartan(basis)) return "h" + std::to_string(basis + 1);
        std::string s = "e[";
        const Coeffs& c = rs_->root(root_of(basis)).coeffs;
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c[i]);
        }
        return s + "]";
    }

    AlgebraElem bracket_basis(int x, int y) const
    {
        const RootSystem& rs = *rs_;
        AlgebraElem out;
        Monomial one = Monomial::identity(w_.num_variables());
        if (is_cartan(x) && is_cartan(y)) return out;
        if (is_cartan(x)) {
            int a = root_of(y);
            out.add(y, RingElem::term(one, rs.cartan_pairing(a, x + 1)));
            return out;
        }
        if (is_cartan(y)) {
            int a = root_of(x);
            out.add(x, RingElem::term(one, -rs.cartan_pairing(a, y + 1)));
            return out;
        }
        int a = root_of(x), b = root_of(y);
        SumResult s = rs.sum(a, b);
        if (s.is_root()) {
            out.add(basis_of_root(s.root),
                    RingElem::term(w_.value(Chain({a, b})), eps_->value(a, b)));
            return out;
        }
        if (s.is_zero()) {
            Coeffs cv = rs.coroot_coeffs(a);
            Monomial m = w_.value(Chain({a, b}));
            for (int i = 0; i < rs.rank(); ++i)
                out.add(i, RingElem::term(m, eps_->opposite(a) * cv[static_cast<size_t>(i)]));
            return out;
        }
        return out;
    }

    AlgebraElem bracket(const AlgebraElem& x, const AlgebraElem& y) const
    {
        AlgebraElem out;
        for (const auto& [bx, rx] : x.components())
            for (const auto& [by, ry] : y.components()) {
                AlgebraElem base = bracket_basis(bx, by);
                for (const auto& [bz, rz] : base.components())
                    for (const auto& [mx, cx] : rx.terms())
                        for (const auto& [my, cy] : ry.terms())
                            out.add(bz, rz.times(mx + my, cx * cy));
            }
        return out;
    }

private:
    const RootSystem* rs_;
    const SignForm* eps_;
    Cochain w_;
};

inline DeformedAlgebra build_algebra(const RootSystem& rs, const SignForm& eps, const Cochain& w)
{
    return DeformedAlgebra(rs, eps, w);
}

struct JacobiReport {
    bool ok = true;
    std::optional<std::array<int, 3>> witness; // basis indices
    std::string witness_labels;
};

inline JacobiReport jacobi_check(const DeformedAlgebra& A)
{
    JacobiReport rep;
    int n = A.dim();
    auto unit = [&](int b) {
        AlgebraElem e;
        e.add(b, RingElem::term(Monomial::identity(A.num_variables()), 1));
        return e;
    };
    // anticommutativity on pairs, then the Jacobiator on ordered triples
    for (int x = 0; x < n && rep.ok; ++x)
        for (int y = x; y < n && rep.ok; ++y) {
            AlgebraElem s = A.bracket(unit(x), unit(y));
            s += A.bracket(unit(y), unit(x));
            if (!s.zero()) {
                rep.ok = false;
                rep.witness = {x, y, y};
                rep.witness_labels = A.basis_label(x) + "," + A.basis_label(y);
            }
        }
    for (int x = 0; x < n && rep.ok; ++x)
        for (int y = x + 1; y < n && rep.ok; ++y)
            for (int z = y + 1; z < n && rep.ok; ++z) {
                AlgebraElem s = A.bracket(A.bracket(unit(x), unit(y)), unit(z));
                s += A.bracket(A.bracket(unit(y), unit(z)), unit(x));
                s += A.bracket(A.bracket(unit(z), unit(x)), unit(y));
                if (!s.zero()) {
                    rep.ok = false;
                    rep.witness = {x, y, z};
                    rep.witness_labels = A.basis_label(x) + "," + A.basis_label(y) + "," +
                                         A.basis_label(z);
                }
            }
    return rep;
}

// The cocycle condition seen through the bracket: equivalent to jacobi_check
// of the built algebra on every tested instance.
inline bool monomial_jacobi_check(const RootSystem& rs, const Cochain& w,
                                  int degree_cap = kDefaultDegreeCap)
{
    return is_cocycle(rs, w, degree_cap).is_closed;
}

struct KillingCount {
    std::vector<Monomial> short_count; // d1 w(a|-a) over short positive roots
    std::vector<Monomial> long_count;
    std::map<std::string, int64_t> totals; // per variable, summed exponents
};

inline KillingCount killing_counts(const RootSystem& rs, const Cochain& w1)
{
    if (w1.degree() != 1)
        throw DegreeMismatch("killing counts expect a 1-form");
    KillingCount out;
    for (int b : rs.positive_ids()) {
        Monomial m = w1.value(Chain({b})) + w1.value(Chain({rs.negate(b)}));
        if (rs.length_class(b) == LengthClass::long_root)
            out.long_count.push_back(m);
        else
            out.short_count.push_back(m);
        for (size_t v = 0; v < w1.num_variables(); ++v)
            out.totals[w1.variables().name(v)] += m.exp(v);
    }
    std::sort(out.short_count.begin(), out.short_count.end());
    std::sort(out.long_count.begin(), out.long_count.end());
    return out;
}

} // namespace rootcoh

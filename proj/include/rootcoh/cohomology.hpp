#pragma once

// Closedness checks for 2-forms, constructive integration of symmetric
// 2-cocycles (height induction over the positive roots, then opposites),
// the vanishing criterion, and exact feasibility of integrating inside the
// natural (nonnegative-exponent) monomials.

#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

#include "rootcoh/cochain.hpp"

namespace rootcoh {

struct NotCocycle : Error {
    Chain witness;
    Monomial offending;
    NotCocycle(std::string msg, Chain w, Monomial m)
        : Error(std::move(msg)), witness(std::move(w)), offending(std::move(m)) {}
};

struct CocycleReport {
    bool is_closed = false;
    std::optional<std::pair<Chain, Monomial>> witness; // first failing T_3 generator
    SymmetryReport symmetry;
    bool killing_identities_ok = false;
    std::optional<Chain> identity_witness;
};

namespace detail {

// omega applied to a possibly-zero pair; zero chains carry the identity.
inline Monomial pair_value(const Cochain& w, int a, int b)
{
    if (a == kZeroId || b == kZeroId) return Monomial::identity(w.num_variables());
    return w.value(Chain({a, b}));
}

} // namespace detail

inline CocycleReport is_cocycle(const RootSystem& rs, const Cochain& w,
                                int degree_cap = kDefaultDegreeCap, int threads = 1)
{
    if (w.degree() != 2)
        throw DegreeMismatch("cocycle check expects a 2-form");
    CocycleReport rep;
    rep.symmetry = symmetry(w);

    std::vector<Chain> gens = enumerate_chains(rs, 3, std::max(degree_cap, 3));
    rep.is_closed = true;
    if (threads <= 1 || gens.size() < 64) {
        for (const Chain& c : gens) {
            Monomial v = w.evaluate(boundary(rs, c));
            if (!v.is_identity()) {
                rep.is_closed = false;
                rep.witness = {c, v};
                break;
            }
        }
    } else {
        size_t nt = static_cast<size_t>(threads);
        std::vector<size_t> first(nt, gens.size());
        std::vector<Monomial> val(nt);
        std::vector<std::thread> pool;
        for (size_t t = 0; t < nt; ++t)
            pool.emplace_back([&, t] {
                size_t lo = gens.size() * t / nt, hi = gens.size() * (t + 1) / nt;
                for (size_t i = lo; i < hi; ++i) {
                    Monomial v = w.evaluate(boundary(rs, gens[i]));
                    if (!v.is_identity()) {
                        first[t] = i;
                        val[t] = v;
                        break;
                    }
                }
            });
        for (auto& th : pool) th.join();
        size_t best = gens.size();
        for (size_t t = 0; t < nt; ++t)
            if (first[t] < best) best = first[t];
        if (best < gens.size()) {
            rep.is_closed = false;
            rep.witness = {gens[best], w.evaluate(boundary(rs, gens[best]))};
        }
    }

    // The three rearrangements of d2 at [a|-a|a], [a|-a|a+b], [a|b|-b].
    rep.killing_identities_ok = true;
    auto flag = [&](const Chain& c) {
        if (rep.killing_identities_ok) {
            rep.killing_identities_ok = false;
            rep.identity_witness = c;
        }
    };
    for (int a = 0; a < rs.num_roots(); ++a) {
        int na = rs.negate(a);
        if (detail::pair_value(w, a, na) != detail::pair_value(w, na, a))
            flag(Chain({a, na, a}));
    }
    for (const Chain& c : enumerate_chains(rs, 2, std::max(degree_cap, 2))) {
        int a = c.at(0), b = c.at(1);
        int na = rs.negate(a), nb = rs.negate(b);
        int ab = rs.sum(a, b).element();
        Monomial lhs = w.value(c);
        if (lhs != detail::pair_value(w, a, na) - detail::pair_value(w, na, ab))
            flag(Chain({a, na, ab}));
        if (lhs != detail::pair_value(w, b, nb) - detail::pair_value(w, ab, nb))
            flag(Chain({a, b, nb}));
    }
    return rep;
}

struct IntegrationResult {
    Cochain one_form; // degree 1, total on Phi
    std::map<int, Monomial> free_variables; // Bourbaki index -> xi value
    bool verified = false;
};

struct IntegrateOptions {
    bool check_input = true;     // symmetry + closedness preconditions
    bool cross_check = true;     // compare every simple-root decomposition
    int degree_cap = kDefaultDegreeCap;
};

inline IntegrationResult integrate(const RootSystem& rs, const Cochain& w,
                                   std::map<int, Monomial> xi = {},
                                   const IntegrateOptions& opt = {})
{
    if (w.degree() != 2)
        throw DegreeMismatch("integration expects a 2-form");
    size_t k = w.num_variables();
    if (opt.check_input) {
        if (!symmetry(w).symmetric)
            throw NotSymmetric("2-form is not symmetric");
        CocycleReport rep = is_cocycle(rs, w, opt.degree_cap);
        if (!rep.is_closed) {
            std::ostringstream msg;
            msg << "2-form is not closed";
            throw NotCocycle(msg.str(), rep.witness->first, rep.witness->second);
        }
    }
    for (int i = 1; i <= rs.rank(); ++i) {
        auto it = xi.find(i);
        if (it == xi.end())
            xi.emplace(i, Monomial::identity(k));
        else if (it->second.size() != k)
            throw DegreeMismatch("xi value does not match the variable table");
    }

    std::map<int, Monomial> val; // root id -> omega^1 value
    for (int i = 1; i <= rs.rank(); ++i)
        val[rs.simple_id(i)] = xi.at(i);

    // positives by increasing height (the id order within positives)
    for (int b : rs.positive_ids()) {
        if (rs.height(b) == 1) continue;
        std::optional<Monomial> chosen;
        int chosen_index = 0;
        for (int i = 1; i <= rs.rank(); ++i) {
            int a = rs.simple_id(i);
            SumResult rest = rs.sum(b, rs.negate(a));
            if (!rest.is_root() || !rs.is_positive(rest.root)) continue;
            Monomial cand = val.at(rest.root) - w.value(Chain({a, rest.root})) + xi.at(i);
            if (!chosen) {
                chosen = cand;
                chosen_index = i;
            } else if (opt.cross_check && cand != *chosen) {
                std::ostringstream msg;
                msg << "two decompositions of a positive root disagree (simple indices "
                    << chosen_index << " and " << i << ")";
                throw WellDefinednessViolation(msg.str());
            } else if (!opt.cross_check) {
                break;
            }
        }
        if (!chosen)
            throw InternalInvariantViolation("positive root with no decomposition");
        val[b] = *chosen;
    }
    for (int b : rs.positive_ids()) {
        int nb = rs.negate(b);
        val[nb] = w.value(Chain({nb, b})) - val.at(b);
    }

    IntegrationResult res;
    res.one_form = Cochain(1, w.variables());
    for (const auto& [id, m] : val)
        res.one_form.set(Chain({id}), m);
    res.free_variables = std::move(xi);
    res.verified = (coboundary(rs, res.one_form, std::max(opt.degree_cap, 2)) == w);
    return res;
}

// Integration with one fresh variable per simple root: the result lives over
// the input table extended by xi_1..xi_rank, so Laurent expressions in the
// free variables stay inside the exponent-vector calculus.
inline IntegrationResult integrate_symbolic(const RootSystem& rs, const Cochain& w,
                                            const IntegrateOptions& opt = {})
{
    VariableTable ext = w.variables();
    std::vector<std::string> fresh;
    for (int i = 1; i <= rs.rank(); ++i) {
        std::string name = "xi" + std::to_string(i);
        while (ext.find(name) >= 0) name += "_";
        ext.add(name);
        fresh.push_back(name);
    }
    Cochain we = w.with_variables(ext);
    std::map<int, Monomial> xi;
    for (int i = 1; i <= rs.rank(); ++i) {
        Monomial m = Monomial::identity(ext.size());
        m.exp(static_cast<size_t>(ext.find(fresh[static_cast<size_t>(i - 1)]))) = 1;
        xi.emplace(i, std::move(m));
    }
    IntegrateOptions o = opt;
    return integrate(rs, we, std::move(xi), o);
}

// d^1 omega^1 extensionally trivial, i.e. omega^1 is additive on Phi_0.
inline bool is_closed_1form(const RootSystem& rs, const Cochain& w,
                            int degree_cap = kDefaultDegreeCap)
{
    if (w.degree() != 1)
        throw DegreeMismatch("closedness test expects a 1-form");
    return coboundary(rs, w, std::max(degree_cap, 2)) == Cochain(2, w.variables());
}

struct VanishingReport {
    bool hypothesis_met = false;  // identity on positive pairs and opposite pairs
    bool vanishes = false;        // identity on every generator
    std::optional<Chain> witness;
};

// If a closed 2-form is trivial on positive-positive pairs and on opposite
// pairs, it is trivial everywhere; this checks both the hypothesis and the
// conclusion exhaustively.
inline VanishingReport check_vanishing_criterion(const RootSystem& rs, const Cochain& w,
                                                 int degree_cap = kDefaultDegreeCap)
{
    if (w.degree() != 2)
        throw DegreeMismatch("vanishing criterion expects a 2-form");
    VanishingReport rep;
    rep.hypothesis_met = true;
    rep.vanishes = true;
    for (const Chain& c : enumerate_chains(rs, 2, std::max(degree_cap, 2))) {
        bool triv = w.value(c).is_identity();
        if (!triv && !rep.witness) rep.witness = c;
        if (!triv) rep.vanishes = false;
        int a = c.at(0), b = c.at(1);
        bool hyp_pair = (rs.is_positive(a) && rs.is_positive(b)) || b == rs.negate(a);
        if (hyp_pair && !triv) rep.hypothesis_met = false;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Natural integrability: does some choice of xi make the integral land in
// the nonnegative-exponent monomials?

namespace detail {

struct Rat {
    int64_t num = 0;
    int64_t den = 1;

    Rat() = default;
    Rat(int64_t n) : num(n) {}
    Rat(int64_t n, int64_t d) : num(n), den(d) { normalize(); }

    void normalize()
    {
        if (den < 0) { num = -num; den = -den; }
        int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend Rat operator+(const Rat& a, const Rat& b)
    {
        return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b)
    {
        return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
    friend Rat operator/(const Rat& a, const Rat& b) { return Rat(a.num * b.den, a.den * b.num); }
    friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.num * b.den <= b.num * a.den; }
    bool operator==(const Rat&) const = default;
};

// One inequality sum_i coeff_i * x_i + offset >= 0 for a single base variable.
struct NatConstraint {
    std::vector<int64_t> coeff; // per simple root
    int64_t offset = 0;
    int root_id = -1; // provenance
};

struct IntervalState {
    std::vector<int64_t> lo, hi;
    std::vector<int> lo_src, hi_src; // constraint indices
    bool empty = false;
    int conflict_a = -1, conflict_b = -1;
};

// Bounds propagation to a fixpoint; every variable starts with the interval
// induced by the simple-root rows, which are plain +-x_i bounds.
inline IntervalState propagate(const std::vector<NatConstraint>& cons, int nvars)
{
    const int64_t INF = std::numeric_limits<int64_t>::max() / 4;
    IntervalState st;
    st.lo.assign(static_cast<size_t>(nvars), -INF);
    st.hi.assign(static_cast<size_t>(nvars), INF);
    st.lo_src.assign(static_cast<size_t>(nvars), -1);
    st.hi_src.assign(static_cast<size_t>(nvars), -1);
    bool changed = true;
    int rounds = 0;
    while (changed && rounds++ < 1000) {
        changed = false;
        for (size_t ci = 0; ci < cons.size(); ++ci) {
            const auto& c = cons[ci];
            for (int v = 0; v < nvars; ++v) {
                int64_t a = c.coeff[static_cast<size_t>(v)];
                if (a == 0) continue;
                // rest = min over the other variables of sum_j a_j x_j
                int64_t rest = c.offset;
                bool unbounded = false;
                for (int u = 0; u < nvars; ++u) {
                    if (u == v) continue;
                    int64_t b = c.coeff[static_cast<size_t>(u)];
                    if (b == 0) continue;
                    int64_t ext = b > 0 ? st.lo[static_cast<size_t>(u)] : st.hi[static_cast<size_t>(u)];
                    if (ext <= -INF || ext >= INF) { unbounded = true; break; }
                    rest += b * ext;
                }
                if (unbounded) continue;
                // a * x_v >= -rest
                if (a > 0) {
                    int64_t bound = -rest;
                    int64_t nb = bound >= 0 ? (bound + a - 1) / a : -((-bound) / a);
                    if (nb > st.lo[static_cast<size_t>(v)]) {
                        st.lo[static_cast<size_t>(v)] = nb;
                        st.lo_src[static_cast<size_t>(v)] = static_cast<int>(ci);
                        changed = true;
                    }
                } else {
                    int64_t bound = rest; // (-a) x_v <= rest
                    int64_t m = -a;
                    int64_t nb = bound >= 0 ? bound / m : -(((-bound) + m - 1) / m);
                    if (nb < st.hi[static_cast<size_t>(v)]) {
                        st.hi[static_cast<size_t>(v)] = nb;
                        st.hi_src[static_cast<size_t>(v)] = static_cast<int>(ci);
                        changed = true;
                    }
                }
                if (st.lo[static_cast<size_t>(v)] > st.hi[static_cast<size_t>(v)]) {
                    st.empty = true;
                    st.conflict_a = st.lo_src[static_cast<size_t>(v)];
                    st.conflict_b = st.hi_src[static_cast<size_t>(v)];
                    return st;
                }
            }
        }
    }
    return st;
}

struct IntSolve {
    bool feasible = false;
    std::vector<int64_t> point;
    int conflict_a = -1, conflict_b = -1;
};

inline IntSolve solve_integer(const std::vector<NatConstraint>& cons, int nvars)
{
    IntSolve out;
    IntervalState st = propagate(cons, nvars);
    if (st.empty) {
        out.conflict_a = st.conflict_a;
        out.conflict_b = st.conflict_b;
        return out;
    }
    const int64_t INF = std::numeric_limits<int64_t>::max() / 4;
    for (int v = 0; v < nvars; ++v)
        if (st.lo[static_cast<size_t>(v)] <= -INF || st.hi[static_cast<size_t>(v)] >= INF)
            throw InternalInvariantViolation("unbounded natural-integrability system");
    // exhaustive walk of the propagated box (small by construction)
    int64_t cells = 1;
    for (int v = 0; v < nvars; ++v) {
        cells *= st.hi[static_cast<size_t>(v)] - st.lo[static_cast<size_t>(v)] + 1;
        if (cells > (1 << 22))
            throw InternalInvariantViolation("natural-integrability box too large");
    }
    std::vector<int64_t> x(st.lo);
    for (;;) {
        bool ok = true;
        for (const auto& c : cons) {
            int64_t s = c.offset;
            for (int v = 0; v < nvars; ++v) s += c.coeff[static_cast<size_t>(v)] * x[static_cast<size_t>(v)];
            if (s < 0) { ok = false; break; }
        }
        if (ok) {
            out.feasible = true;
            out.point = x;
            return out;
        }
        int v = 0;
        while (v < nvars) {
            if (++x[static_cast<size_t>(v)] <= st.hi[static_cast<size_t>(v)]) break;
            x[static_cast<size_t>(v)] = st.lo[static_cast<size_t>(v)];
            ++v;
        }
        if (v == nvars) return out;
    }
}

// Exact rational feasibility by Fourier-Motzkin elimination; returns a
// rational witness when feasible.
inline std::optional<std::vector<Rat>> solve_rational(const std::vector<NatConstraint>& cons,
                                                      int nvars)
{
    using Row = std::pair<std::vector<Rat>, Rat>; // sum coeff*x + off >= 0
    std::vector<std::vector<Row>> stages;
    std::vector<Row> rows;
    for (const auto& c : cons) {
        std::vector<Rat> v(static_cast<size_t>(nvars));
        for (int i = 0; i < nvars; ++i) v[static_cast<size_t>(i)] = Rat(c.coeff[static_cast<size_t>(i)]);
        rows.push_back({v, Rat(c.offset)});
    }
    for (int v = 0; v < nvars; ++v) {
        stages.push_back(rows);
        std::vector<Row> pos, neg, rest;
        for (auto& r : rows) {
            Rat a = r.first[static_cast<size_t>(v)];
            if (Rat(0) < a) pos.push_back(r);
            else if (a < Rat(0)) neg.push_back(r);
            else rest.push_back(r);
        }
        for (const auto& p : pos)
            for (const auto& q : neg) {
                // x >= -p_rest/p_a and x <= q_rest/(-q_a): combine
                Rat pa = p.first[static_cast<size_t>(v)], qa = Rat(0) - q.first[static_cast<size_t>(v)];
                Row comb;
                comb.first.assign(static_cast<size_t>(nvars), Rat(0));
                for (int u = 0; u < nvars; ++u)
                    comb.first[static_cast<size_t>(u)] =
                        p.first[static_cast<size_t>(u)] * qa + q.first[static_cast<size_t>(u)] * pa;
                comb.second = p.second * qa + q.second * pa;
                comb.first[static_cast<size_t>(v)] = Rat(0);
                rest.push_back(std::move(comb));
                if (rest.size() > 20000)
                    throw InternalInvariantViolation("elimination blow-up");
            }
        rows = std::move(rest);
    }
    for (const auto& r : rows)
        if (r.second < Rat(0)) return std::nullopt;
    // back-substitute
    std::vector<Rat> x(static_cast<size_t>(nvars), Rat(0));
    for (int v = nvars - 1; v >= 0; --v) {
        const auto& stage = stages[static_cast<size_t>(v)];
        bool has_lo = false, has_hi = false;
        Rat lo(0), hi(0);
        for (const auto& r : stage) {
            Rat a = r.first[static_cast<size_t>(v)];
            if (a == Rat(0)) continue;
            Rat rest = r.second;
            for (int u = v + 1; u < nvars; ++u)
                rest = rest + r.first[static_cast<size_t>(u)] * x[static_cast<size_t>(u)];
            Rat bound = (Rat(0) - rest) / a;
            if (Rat(0) < a) {
                if (!has_lo || lo < bound) { lo = bound; has_lo = true; }
            } else {
                if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
            }
        }
        Rat pick(0);
        if (has_lo && has_hi) {
            // prefer an integer point inside [lo, hi]
            int64_t fl = (lo.num >= 0) ? (lo.num + lo.den - 1) / lo.den
                                       : -((-lo.num) / lo.den);
            if (Rat(fl) <= hi && lo <= Rat(fl)) pick = Rat(fl);
            else pick = (lo + hi) / Rat(2);
        } else if (has_lo) {
            int64_t fl = (lo.num >= 0) ? (lo.num + lo.den - 1) / lo.den : -((-lo.num) / lo.den);
            pick = Rat(fl);
        } else if (has_hi) {
            int64_t fh = (hi.num >= 0) ? hi.num / hi.den : -(((-hi.num) + hi.den - 1) / hi.den);
            pick = Rat(fh);
        }
        x[static_cast<size_t>(v)] = pick;
    }
    return x;
}

} // namespace detail

struct NaturalityReport {
    bool feasible = false;
    std::map<int, Monomial> xi; // witness when feasible
    // infeasible: contradicting constraints, printable
    std::vector<std::string> conflict;
    // infeasible but rationally solvable: smallest n with a solution over
    // exponents refined by 1/n, with the witness in that grid
    std::optional<int64_t> fractional_order;
    std::map<int, std::string> fractional_xi;
};

inline NaturalityReport natural_integrability(const RootSystem& rs, const Cochain& w,
                                              const IntegrateOptions& opt = {})
{
    if (w.degree() != 2)
        throw DegreeMismatch("natural integrability expects a 2-form");
    for (const auto& [c, m] : w.values())
        if (!m.is_natural())
            throw NotNaturalInput("2-form has a negative exponent at " +
                                  m.str(w.variables()));

    // Symbolic integral: base-variable offsets come from the xi = 1 integral,
    // and the xi-exponent of the value at beta is the coefficient vector of
    // beta over the simple roots.
    IntegrationResult base = integrate(rs, w, {}, opt);
    size_t k = w.num_variables();
    int nv = rs.rank();

    auto root_label = [&](int id) {
        std::string s = "[";
        const Coeffs& c = rs.root(id).coeffs;
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c[i]);
        }
        return s + "]";
    };

    NaturalityReport rep;
    rep.feasible = true;
    std::vector<std::vector<int64_t>> solution(k); // per variable, per simple root
    std::vector<int64_t> orders;

    for (size_t v = 0; v < k; ++v) {
        std::vector<detail::NatConstraint> cons;
        for (int id = 0; id < rs.num_roots(); ++id) {
            detail::NatConstraint c;
            c.root_id = id;
            c.coeff.assign(rs.root(id).coeffs.begin(), rs.root(id).coeffs.end());
            c.offset = base.one_form.value(Chain({id})).exp(v);
            cons.push_back(std::move(c));
        }
        detail::IntSolve sol = detail::solve_integer(cons, nv);
        if (sol.feasible) {
            solution[v] = sol.point;
            orders.push_back(1);
            continue;
        }
        rep.feasible = false;
        auto describe = [&](int ci) {
            if (ci < 0) return std::string("(initial bound)");
            const auto& c = cons[static_cast<size_t>(ci)];
            std::string s = "root " + root_label(c.root_id) + ": ";
            bool any = false;
            for (int u = 0; u < nv; ++u) {
                int64_t a = c.coeff[static_cast<size_t>(u)];
                if (a == 0) continue;
                if (any) s += a > 0 ? " + " : " - ";
                else if (a < 0) s += "-";
                int64_t m = a < 0 ? -a : a;
                if (m != 1) s += std::to_string(m) + "*";
                s += "x" + std::to_string(u + 1);
                any = true;
            }
            s += " >= " + std::to_string(-c.offset) + "  (" + w.variables().name(v) + ")";
            return s;
        };
        if (rep.conflict.empty() && sol.conflict_a >= 0) {
            rep.conflict.push_back(describe(sol.conflict_a));
            rep.conflict.push_back(describe(sol.conflict_b));
        }
        // fractional diagnostic: scale offsets by n and retry
        auto rat = detail::solve_rational(cons, nv);
        if (rat) {
            int64_t lcm = 1;
            for (const auto& r : *rat) lcm = std::lcm(lcm, r.den);
            for (int64_t n = 2; n <= lcm; ++n) {
                std::vector<detail::NatConstraint> scaled = cons;
                for (auto& c : scaled) c.offset *= n;
                detail::IntSolve s2 = detail::solve_integer(scaled, nv);
                if (s2.feasible) {
                    orders.push_back(n);
                    solution[v] = s2.point; // in the 1/n grid
                    break;
                }
            }
        } else {
            orders.push_back(0); // not even rationally solvable
        }
    }

    if (rep.feasible) {
        for (int i = 1; i <= nv; ++i) {
            Monomial m = Monomial::identity(k);
            for (size_t v = 0; v < k; ++v) m.exp(v) = solution[v][static_cast<size_t>(i - 1)];
            rep.xi.emplace(i, std::move(m));
        }
        return rep;
    }

    bool rational_ok = true;
    int64_t total = 1;
    for (int64_t n : orders) {
        if (n == 0) rational_ok = false;
        else total = std::lcm(total, n);
    }
    if (rational_ok && total > 1) {
        rep.fractional_order = total;
        for (int i = 1; i <= nv; ++i) {
            std::string s;
            for (size_t v = 0; v < k; ++v) {
                int64_t num = solution[v].empty() ? 0 : solution[v][static_cast<size_t>(i - 1)];
                int64_t n = orders[v];
                if (num == 0) continue;
                if (!s.empty()) s += "*";
                s += w.variables().name(v) + "^(" + std::to_string(num) + "/" + std::to_string(n) + ")";
            }
            rep.fractional_xi.emplace(i, s.empty() ? "1" : s);
        }
    }
    return rep;
}

} // namespace rootcoh

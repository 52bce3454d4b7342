#pragma once

// Reduced root systems built from Cartan data, entirely in integer
// arithmetic: the full root list, the partial addition table on
// Phi_0 = Phi u {0}, exact inner products (short roots normalised to
// squared length 2), and the automorphism machinery (simple reflections,
// diagram symmetries, bounded group closure).

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rootcoh/errors.hpp"

namespace rootcoh {

enum class Series : char {
    A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G'
};

enum class LengthClass { short_root, long_root };

using Coeffs = std::vector<int64_t>; // coordinates over the simple roots

// The formal zero element of Phi_0. Root ids are >= 0.
inline constexpr int kZeroId = -1;

struct Root {
    Coeffs coeffs;
    int64_t height = 0;
    LengthClass length_class = LengthClass::short_root;
};

enum class SumKind { root, zero, undefined };

struct SumResult {
    SumKind kind = SumKind::undefined;
    int root = -1; // valid when kind == root

    bool is_root() const { return kind == SumKind::root; }
    bool is_zero() const { return kind == SumKind::zero; }
    bool defined() const { return kind != SumKind::undefined; }
    // Phi_0 element id: root id, or kZeroId. Must be defined.
    int element() const { return is_root() ? root : kZeroId; }
    bool operator==(const SumResult&) const = default;
};

inline std::string series_string(Series s) { return std::string(1, static_cast<char>(s)); }

inline std::pair<Series, int> parse_system_name(const std::string& text)
{
    if (text.size() < 2 || !std::isalpha(static_cast<unsigned char>(text[0])))
        throw MalformedInput("root system name must look like \"B2\": got \"" + text + "\"");
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (c < 'A' || c > 'G')
        throw InvalidType("unknown series letter in \"" + text + "\"");
    int rank = 0;
    for (size_t i = 1; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw MalformedInput("bad rank in root system name \"" + text + "\"");
        rank = rank * 10 + (text[i] - '0');
        if (rank > 1000)
            throw InvalidType("rank out of range in \"" + text + "\"");
    }
    return {static_cast<Series>(c), rank};
}

inline constexpr int kMaxRank = 32;

inline void validate_series_rank(Series s, int rank)
{
    bool ok = false;
    switch (s) {
    case Series::A: ok = rank >= 1; break;
    case Series::B: ok = rank >= 2; break;
    case Series::C: ok = rank >= 3; break;
    case Series::D: ok = rank >= 4; break;
    case Series::E: ok = rank >= 6 && rank <= 8; break;
    case Series::F: ok = rank == 4; break;
    case Series::G: ok = rank == 2; break;
    }
    if (ok && rank > kMaxRank) ok = false;
    if (!ok)
        throw InvalidType("unsupported root system " + series_string(s) + std::to_string(rank));
}

namespace detail {

// Gram matrix of the simple roots, short roots normalised to length^2 = 2.
// All entries are integers for every series.
inline std::vector<std::vector<int64_t>> simple_gram(Series s, int rank)
{
    std::vector<std::vector<int64_t>> g(rank, std::vector<int64_t>(rank, 0));
    auto edge = [&](int i, int j, int64_t v) { g[i][j] = v; g[j][i] = v; };
    switch (s) {
    case Series::A:
        for (int i = 0; i < rank; ++i) g[i][i] = 2;
        for (int i = 0; i + 1 < rank; ++i) edge(i, i + 1, -1);
        break;
    case Series::B: // alpha_rank is the short root
        for (int i = 0; i < rank; ++i) g[i][i] = (i == rank - 1) ? 2 : 4;
        for (int i = 0; i + 1 < rank; ++i) edge(i, i + 1, -2);
        break;
    case Series::C: // alpha_rank is the long root
        for (int i = 0; i < rank; ++i) g[i][i] = (i == rank - 1) ? 4 : 2;
        for (int i = 0; i + 2 < rank; ++i) edge(i, i + 1, -1);
        edge(rank - 2, rank - 1, -2);
        break;
    case Series::D:
        for (int i = 0; i < rank; ++i) g[i][i] = 2;
        for (int i = 0; i + 2 < rank; ++i) edge(i, i + 1, -1);
        edge(rank - 3, rank - 1, -1);
        break;
    case Series::E:
        for (int i = 0; i < rank; ++i) g[i][i] = 2;
        edge(0, 2, -1);
        edge(1, 3, -1);
        edge(2, 3, -1);
        edge(3, 4, -1);
        edge(4, 5, -1);
        if (rank >= 7) edge(5, 6, -1);
        if (rank >= 8) edge(6, 7, -1);
        break;
    case Series::F:
        g[0][0] = 4; g[1][1] = 4; g[2][2] = 2; g[3][3] = 2;
        edge(0, 1, -2);
        edge(1, 2, -2);
        edge(2, 3, -1);
        break;
    case Series::G: // alpha_1 short, alpha_2 long
        g[0][0] = 2; g[1][1] = 6;
        edge(0, 1, -3);
        break;
    }
    return g;
}

} // namespace detail

struct Automorphism; // below

class RootSystem {
public:
    static RootSystem build(Series s, int rank)
    {
        validate_series_rank(s, rank);
        RootSystem rs;
        rs.series_ = s;
        rs.rank_ = rank;
        rs.gram_ = detail::simple_gram(s, rank);
        rs.cartan_.assign(rank, std::vector<int64_t>(rank, 0));
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                int64_t num = 2 * rs.gram_[i][j];
                if (num % rs.gram_[j][j] != 0)
                    throw InternalInvariantViolation("non-integral Cartan entry");
                rs.cartan_[i][j] = num / rs.gram_[j][j];
            }
        rs.construct_roots();
        return rs;
    }

    static RootSystem build(const std::string& name)
    {
        auto [s, rank] = parse_system_name(name);
        return build(s, rank);
    }

    Series series() const { return series_; }
    int rank() const { return rank_; }
    std::string name() const { return series_string(series_) + std::to_string(rank_); }

    const std::vector<Root>& roots() const { return roots_; }
    int num_roots() const { return static_cast<int>(roots_.size()); }
    int num_positive() const { return num_roots() / 2; }
    const Root& root(int id) const { return roots_[static_cast<size_t>(id)]; }

    // Positive roots occupy the upper half of the (height, lex) order.
    bool is_positive(int id) const { return root(id).height > 0; }
    const std::vector<int>& positive_ids() const { return positive_ids_; }
    // Simple root ids in Bourbaki order (alpha_1, ..., alpha_rank).
    const std::vector<int>& simple_ids() const { return simple_ids_; }
    int simple_id(int bourbaki_index) const { return simple_ids_[static_cast<size_t>(bourbaki_index - 1)]; }

    int negate(int id) const { return num_roots() - 1 - id; }

    std::optional<int> find(const Coeffs& c) const
    {
        auto it = index_.find(c);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    // a + b within Phi_0, both arguments roots.
    SumResult sum(int a, int b) const
    {
        int16_t v = sum_[static_cast<size_t>(a) * roots_.size() + static_cast<size_t>(b)];
        if (v == kSumZero) return {SumKind::zero, -1};
        if (v == kSumUndef) return {SumKind::undefined, -1};
        return {SumKind::root, v};
    }

    // a + b where either argument may be kZeroId; zero acts as identity.
    SumResult sum0(int a, int b) const
    {
        if (a == kZeroId && b == kZeroId) return {SumKind::zero, -1};
        if (a == kZeroId) return {SumKind::root, b};
        if (b == kZeroId) return {SumKind::root, a};
        return sum(a, b);
    }

    int64_t inner(int a, int b) const
    {
        const Coeffs& u = root(a).coeffs;
        const Coeffs& v = root(b).coeffs;
        int64_t acc = 0;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                acc += u[static_cast<size_t>(i)] * gram_[static_cast<size_t>(i)][static_cast<size_t>(j)] * v[static_cast<size_t>(j)];
        return acc;
    }

    int64_t length_sq(int id) const { return inner(id, id); }
    int64_t height(int id) const { return root(id).height; }
    LengthClass length_class(int id) const { return root(id).length_class; }

    // <beta, alpha_i^v> = 2 (beta, alpha_i) / (alpha_i, alpha_i), Bourbaki index 1-based.
    int64_t cartan_pairing(int id, int bourbaki_index) const
    {
        int i = bourbaki_index - 1;
        const Coeffs& u = root(id).coeffs;
        int64_t ip = 0;
        for (int j = 0; j < rank_; ++j)
            ip += u[static_cast<size_t>(j)] * gram_[static_cast<size_t>(j)][static_cast<size_t>(i)];
        int64_t num = 2 * ip;
        if (num % gram_[static_cast<size_t>(i)][static_cast<size_t>(i)] != 0)
            throw InternalInvariantViolation("non-integral coroot pairing");
        return num / gram_[static_cast<size_t>(i)][static_cast<size_t>(i)];
    }

    // Coordinates of the coroot beta^v over the simple coroots; integral.
    Coeffs coroot_coeffs(int id) const
    {
        Coeffs c(static_cast<size_t>(rank_));
        int64_t len = length_sq(id);
        for (int i = 0; i < rank_; ++i) {
            int64_t num = root(id).coeffs[static_cast<size_t>(i)] * gram_[static_cast<size_t>(i)][static_cast<size_t>(i)];
            if (num % len != 0)
                throw InternalInvariantViolation("non-integral coroot coordinate");
            c[static_cast<size_t>(i)] = num / len;
        }
        return c;
    }

    const std::vector<std::vector<int64_t>>& cartan_matrix() const { return cartan_; }
    const std::vector<std::vector<int64_t>>& gram_matrix() const { return gram_; }

    // For positive beta: a simple root alpha (smallest Bourbaki index) with
    // beta - alpha in Phi_0; returns (bourbaki_index, rest) where rest is a
    // root id or kZeroId.
    std::pair<int, int> decompose_positive(int id) const
    {
        if (!is_positive(id))
            throw InternalInvariantViolation("decompose_positive needs a positive root");
        for (int i = 1; i <= rank_; ++i) {
            int a = simple_id(i);
            if (id == a) return {i, kZeroId};
            SumResult r = sum(id, negate(a));
            if (r.is_root() && is_positive(r.root)) return {i, r.root};
        }
        throw InternalInvariantViolation("positive root admits no simple-root decomposition");
    }

    // Largest k >= 0 with b - k*a in Phi (a, b distinct roots, b != -a).
    int string_down_length(int a, int b) const
    {
        int p = 0;
        Coeffs cur = root(b).coeffs;
        const Coeffs& step = root(a).coeffs;
        for (;;) {
            for (int i = 0; i < rank_; ++i) cur[static_cast<size_t>(i)] -= step[static_cast<size_t>(i)];
            if (!find(cur)) break;
            ++p;
        }
        return p;
    }

private:
    static constexpr int16_t kSumZero = -1;
    static constexpr int16_t kSumUndef = -2;

    Series series_ = Series::A;
    int rank_ = 0;
    std::vector<std::vector<int64_t>> cartan_;
    std::vector<std::vector<int64_t>> gram_;
    std::vector<Root> roots_;
    std::map<Coeffs, int> index_;
    std::vector<int> simple_ids_;
    std::vector<int> positive_ids_;
    std::vector<int16_t> sum_;

    void construct_roots()
    {
        // Closure from the simple roots: extend beta by alpha_i whenever the
        // alpha_i-string through beta continues upwards (q = p - <beta, alpha_i^v> >= 1).
        std::set<Coeffs> pos;
        std::vector<Coeffs> frontier;
        for (int i = 0; i < rank_; ++i) {
            Coeffs e(static_cast<size_t>(rank_), 0);
            e[static_cast<size_t>(i)] = 1;
            pos.insert(e);
            frontier.push_back(e);
        }
        auto pairing = [&](const Coeffs& b, int i) {
            int64_t ip = 0;
            for (int j = 0; j < rank_; ++j)
                ip += b[static_cast<size_t>(j)] * gram_[static_cast<size_t>(j)][static_cast<size_t>(i)];
            return 2 * ip / gram_[static_cast<size_t>(i)][static_cast<size_t>(i)];
        };
        while (!frontier.empty()) {
            std::vector<Coeffs> next;
            for (const Coeffs& b : frontier) {
                for (int i = 0; i < rank_; ++i) {
                    Coeffs unit(static_cast<size_t>(rank_), 0);
                    unit[static_cast<size_t>(i)] = 1;
                    if (b == unit) continue; // 2*alpha_i is never a root
                    int p = 0;
                    Coeffs down = b;
                    for (;;) {
                        down[static_cast<size_t>(i)] -= 1;
                        if (!pos.count(down)) break;
                        ++p;
                    }
                    int64_t q = p - pairing(b, i);
                    if (q >= 1) {
                        Coeffs up = b;
                        up[static_cast<size_t>(i)] += 1;
                        if (pos.insert(up).second) next.push_back(up);
                    }
                }
            }
            frontier = std::move(next);
        }

        roots_.clear();
        std::vector<std::pair<std::pair<int64_t, Coeffs>, Coeffs>> ordered;
        for (const Coeffs& c : pos) {
            int64_t h = 0;
            for (int64_t x : c) h += x;
            Coeffs neg(c.size());
            for (size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
            ordered.push_back({{h, c}, c});
            ordered.push_back({{-h, neg}, neg});
        }
        std::sort(ordered.begin(), ordered.end());
        for (auto& [key, c] : ordered) {
            Root r;
            r.coeffs = c;
            r.height = key.first;
            roots_.push_back(std::move(r));
        }
        for (int i = 0; i < num_roots(); ++i)
            index_[roots_[static_cast<size_t>(i)].coeffs] = i;

        // negation must be the index mirror
        for (int i = 0; i < num_roots(); ++i) {
            Coeffs neg(roots_[static_cast<size_t>(i)].coeffs.size());
            for (size_t j = 0; j < neg.size(); ++j) neg[j] = -roots_[static_cast<size_t>(i)].coeffs[j];
            if (index_.at(neg) != num_roots() - 1 - i)
                throw InternalInvariantViolation("root order is not negation-mirrored");
        }

        int64_t min_len = 0;
        for (int i = 0; i < num_roots(); ++i) {
            int64_t l = inner(i, i);
            if (min_len == 0 || l < min_len) min_len = l;
        }
        for (int i = 0; i < num_roots(); ++i)
            roots_[static_cast<size_t>(i)].length_class =
                inner(i, i) > min_len ? LengthClass::long_root : LengthClass::short_root;

        simple_ids_.clear();
        for (int i = 0; i < rank_; ++i) {
            Coeffs e(static_cast<size_t>(rank_), 0);
            e[static_cast<size_t>(i)] = 1;
            simple_ids_.push_back(index_.at(e));
        }
        positive_ids_.clear();
        for (int i = 0; i < num_roots(); ++i)
            if (roots_[static_cast<size_t>(i)].height > 0) positive_ids_.push_back(i);

        size_t n = roots_.size();
        sum_.assign(n * n, kSumUndef);
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) {
                Coeffs s(roots_[a].coeffs.size());
                bool zero = true;
                for (size_t j = 0; j < s.size(); ++j) {
                    s[j] = roots_[a].coeffs[j] + roots_[b].coeffs[j];
                    if (s[j] != 0) zero = false;
                }
                if (zero) {
                    sum_[a * n + b] = kSumZero;
                } else if (auto it = index_.find(s); it != index_.end()) {
                    sum_[a * n + b] = static_cast<int16_t>(it->second);
                }
            }
    }
};

// ---------------------------------------------------------------------------
// Automorphisms of Phi as permutations of the root list.

struct Automorphism {
    std::vector<int> perm; // perm[id] = image id
    bool is_weyl = false;

    int apply(int id) const { return perm[static_cast<size_t>(id)]; }

    Automorphism after(const Automorphism& other) const // (this o other)
    {
        Automorphism r;
        r.perm.resize(perm.size());
        for (size_t i = 0; i < perm.size(); ++i)
            r.perm[i] = perm[static_cast<size_t>(other.perm[i])];
        r.is_weyl = is_weyl && other.is_weyl;
        return r;
    }

    Automorphism inverse() const
    {
        Automorphism r;
        r.perm.resize(perm.size());
        for (size_t i = 0; i < perm.size(); ++i)
            r.perm[static_cast<size_t>(perm[i])] = static_cast<int>(i);
        r.is_weyl = is_weyl;
        return r;
    }

    bool operator==(const Automorphism& o) const { return perm == o.perm; }
    bool operator<(const Automorphism& o) const { return perm < o.perm; }
};

inline Automorphism identity_automorphism(const RootSystem& rs)
{
    Automorphism a;
    a.perm.resize(static_cast<size_t>(rs.num_roots()));
    for (int i = 0; i < rs.num_roots(); ++i) a.perm[static_cast<size_t>(i)] = i;
    a.is_weyl = true;
    return a;
}

// Simple reflections s_i(beta) = beta - <beta, alpha_i^v> alpha_i.
inline std::vector<Automorphism> weyl_generators(const RootSystem& rs)
{
    std::vector<Automorphism> gens;
    for (int i = 1; i <= rs.rank(); ++i) {
        Automorphism a;
        a.is_weyl = true;
        a.perm.resize(static_cast<size_t>(rs.num_roots()));
        for (int id = 0; id < rs.num_roots(); ++id) {
            Coeffs c = rs.root(id).coeffs;
            c[static_cast<size_t>(i - 1)] -= rs.cartan_pairing(id, i);
            auto img = rs.find(c);
            if (!img) throw InternalInvariantViolation("reflection left the root system");
            a.perm[static_cast<size_t>(id)] = *img;
        }
        gens.push_back(std::move(a));
    }
    return gens;
}

// Dynkin-diagram symmetries: permutations of the simple roots preserving the
// Cartan matrix, extended linearly to all of Phi. Identity excluded.
inline std::vector<Automorphism> diagram_automorphisms(const RootSystem& rs)
{
    int l = rs.rank();
    std::vector<int> p(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i) p[static_cast<size_t>(i)] = i;
    const auto& a = rs.cartan_matrix();
    std::vector<Automorphism> out;
    do {
        bool id = true, ok = true;
        for (int i = 0; i < l && ok; ++i) {
            if (p[static_cast<size_t>(i)] != i) id = false;
            for (int j = 0; j < l && ok; ++j)
                if (a[static_cast<size_t>(p[static_cast<size_t>(i)])][static_cast<size_t>(p[static_cast<size_t>(j)])] != a[static_cast<size_t>(i)][static_cast<size_t>(j)])
                    ok = false;
        }
        if (ok && !id) {
            Automorphism s;
            s.is_weyl = false;
            s.perm.resize(static_cast<size_t>(rs.num_roots()));
            for (int rid = 0; rid < rs.num_roots(); ++rid) {
                const Coeffs& c = rs.root(rid).coeffs;
                Coeffs img(c.size(), 0);
                for (int i = 0; i < l; ++i) img[static_cast<size_t>(p[static_cast<size_t>(i)])] = c[static_cast<size_t>(i)];
                auto f = rs.find(img);
                if (!f) throw InternalInvariantViolation("diagram symmetry left the root system");
                s.perm[static_cast<size_t>(rid)] = *f;
            }
            out.push_back(std::move(s));
        }
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(out.begin(), out.end());
    return out;
}

enum class GroupKind { weyl, full };

inline std::vector<Automorphism> generate_aut_group(const RootSystem& rs, GroupKind kind,
                                                    size_t cap = 1000000)
{
    // Weyl closure first; Aut(Phi) = W x| (diagram symmetries), and the two
    // factors intersect trivially, so the full group is the set of products.
    std::set<std::vector<int>> seen;
    std::vector<Automorphism> weyl;
    std::vector<Automorphism> work = {identity_automorphism(rs)};
    seen.insert(work[0].perm);
    auto gens = weyl_generators(rs);
    while (!work.empty()) {
        Automorphism cur = std::move(work.back());
        work.pop_back();
        weyl.push_back(cur);
        if (weyl.size() + work.size() > cap)
            throw GroupTooLarge("Weyl group exceeds cap " + std::to_string(cap));
        for (const auto& g : gens) {
            Automorphism nxt = g.after(cur);
            nxt.is_weyl = true;
            if (seen.insert(nxt.perm).second) {
                if (seen.size() > cap)
                    throw GroupTooLarge("Weyl group exceeds cap " + std::to_string(cap));
                work.push_back(std::move(nxt));
            }
        }
    }
    if (kind == GroupKind::weyl) {
        std::sort(weyl.begin(), weyl.end());
        return weyl;
    }

    std::vector<Automorphism> gamma = {identity_automorphism(rs)};
    {
        std::set<std::vector<int>> gseen = {gamma[0].perm};
        std::vector<Automorphism> gwork = diagram_automorphisms(rs);
        for (auto& g : gwork)
            if (gseen.insert(g.perm).second) gamma.push_back(g);
        // diagram symmetries form a group already for the classical diagrams,
        // but close anyway (D4 triality needs the products)
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<Automorphism> more;
            for (const auto& x : gamma)
                for (const auto& y : gamma) {
                    Automorphism z = x.after(y);
                    z.is_weyl = false;
                    if (gseen.insert(z.perm).second) { more.push_back(z); grew = true; }
                }
            for (auto& m : more) gamma.push_back(std::move(m));
        }
    }
    if (weyl.size() * gamma.size() > cap)
        throw GroupTooLarge("Aut(Phi) exceeds cap " + std::to_string(cap));
    std::vector<Automorphism> full;
    full.reserve(weyl.size() * gamma.size());
    for (const auto& w : weyl)
        for (const auto& g : gamma) {
            Automorphism x = w.after(g);
            bool gid = true;
            for (size_t i = 0; i < g.perm.size(); ++i)
                if (g.perm[i] != static_cast<int>(i)) { gid = false; break; }
            x.is_weyl = gid;
            full.push_back(std::move(x));
        }
    std::sort(full.begin(), full.end());
    return full;
}

// ---------------------------------------------------------------------------
// Exhaustive checks of the five classical addition/subtraction facts that the
// integration algorithm leans on.

struct AdditionFactsReport {
    struct Item {
        bool pass = true;
        std::string witness; // empty when pass
    };
    std::array<Item, 5> statements;
    bool all_pass = true;
};

inline AdditionFactsReport check_addition_facts(const RootSystem& rs)
{
    AdditionFactsReport rep;
    auto fail = [&](int k, const std::string& w) {
        rep.statements[static_cast<size_t>(k)].pass = false;
        if (rep.statements[static_cast<size_t>(k)].witness.empty())
            rep.statements[static_cast<size_t>(k)].witness = w;
        rep.all_pass = false;
    };
    auto label = [&](int id) {
        std::string s = "[";
        const Coeffs& c = rs.root(id).coeffs;
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c[i]);
        }
        return s + "]";
    };
    int n = rs.num_roots();

    // 1: strictly obtuse non-proportional pairs sum to a root
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (b == a || b == rs.negate(a)) continue;
            if (rs.inner(a, b) < 0 && !rs.sum(a, b).is_root())
                fail(0, label(a) + " + " + label(b));
        }

    // 2: distinct simple roots: (a,a') <= 0 and a - a' not a root
    for (int i = 1; i <= rs.rank(); ++i)
        for (int j = 1; j <= rs.rank(); ++j) {
            if (i == j) continue;
            int a = rs.simple_id(i), b = rs.simple_id(j);
            if (rs.inner(a, b) > 0) fail(1, label(a) + "," + label(b));
            if (rs.sum(a, rs.negate(b)).is_root()) fail(1, label(a) + "-" + label(b));
        }

    // 3: nonsimple positive beta has a simple alpha with (beta,alpha) > 0 and beta - alpha a root
    for (int b : rs.positive_ids()) {
        if (rs.height(b) == 1) continue;
        bool found = false;
        for (int i = 1; i <= rs.rank() && !found; ++i) {
            int a = rs.simple_id(i);
            if (rs.inner(b, a) > 0 && rs.sum(b, rs.negate(a)).is_root()) found = true;
        }
        if (!found) fail(2, label(b));
    }

    // 4: if beta, beta - a_i, beta - a_j are in Phi_0 then so is beta - a_i - a_j
    for (int b = 0; b < n; ++b)
        for (int i = 1; i <= rs.rank(); ++i)
            for (int j = 1; j <= rs.rank(); ++j) {
                if (i == j) continue;
                int ai = rs.simple_id(i), aj = rs.simple_id(j);
                SumResult gi = rs.sum(b, rs.negate(ai));
                SumResult gj = rs.sum(b, rs.negate(aj));
                if (!gi.defined() || !gj.defined()) continue;
                SumResult d = rs.sum0(gi.element(), rs.negate(aj));
                if (!d.defined())
                    fail(3, label(b) + " - a" + std::to_string(i) + " - a" + std::to_string(j));
            }

    // 5: roots beta, beta' with beta + beta' a nonsimple positive root: some simple
    //    alpha subtracts from the sum and from one summand (within Phi_0)
    for (int b1 = 0; b1 < n; ++b1)
        for (int b2 = 0; b2 < n; ++b2) {
            SumResult s = rs.sum(b1, b2);
            if (!s.is_root() || !rs.is_positive(s.root) || rs.height(s.root) == 1) continue;
            bool found = false;
            for (int i = 1; i <= rs.rank() && !found; ++i) {
                int na = rs.negate(rs.simple_id(i));
                if (!rs.sum(s.root, na).is_root()) continue;
                if (rs.sum(b1, na).defined() || rs.sum(b2, na).defined()) found = true;
            }
            if (!found) fail(4, label(b1) + " + " + label(b2));
        }

    return rep;
}

} // namespace rootcoh

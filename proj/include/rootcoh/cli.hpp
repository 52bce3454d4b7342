#pragma once

// Batch CLI: parse flags, dispatch to the library, stream deterministic
// reports. Exit codes: 0 success / verified, 1 verification failure (witness
// printed), 2 malformed input or refused request.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rootcoh/json_io.hpp"

namespace rootcoh::cli {

namespace detail {

inline RootSystem system_for(const std::string& flag, const Json* file)
{
    if (!flag.empty()) return RootSystem::build(flag);
    if (file && file->contains("root_system"))
        return RootSystem::build(file->at("root_system").get<std::string>());
    throw MalformedInput("--system is required when the cochain file does not embed one");
}

inline Json parse_inline_or_file(const std::string& text)
{
    if (!text.empty() && text[0] == '@') return load_json_file(text.substr(1));
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw MalformedInput(std::string("bad inline JSON: ") + e.what());
    }
}

inline std::string chain_text(const RootSystem& rs, const Chain& c)
{
    return chain_to_json(rs, c).dump();
}

inline void print_chainsum(const RootSystem& rs, const ChainSum& s, const std::string& format,
                           std::ostream& out)
{
    if (format == "json") {
        out << chainsum_to_json(rs, s).dump(2) << "\n";
        return;
    }
    if (s.empty()) {
        out << "0\n";
        return;
    }
    for (const auto& [c, k] : s.terms())
        out << (k >= 0 ? "+" : "") << k << " " << chain_text(rs, c) << "\n";
}

inline void print_cochain(const RootSystem& rs, const Cochain& w, const std::string& format,
                          std::ostream& out)
{
    if (format == "json") {
        out << cochain_to_json(rs, w).dump(2) << "\n";
        return;
    }
    out << "degree " << w.degree() << " over " << rs.name() << "\n";
    for (const auto& [c, m] : w.values())
        out << chain_text(rs, c) << " -> " << m.str(w.variables()) << "\n";
}

} // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact chain/cochain calculus on root systems"};
    app.require_subcommand(1);
    int degree_cap = degree_cap_from_env();

    std::string system, cochain_file, left_file, right_file, xi_file, chain_arg;
    std::string format = "text", group = "weyl", convention = "product";
    int degree = 2;
    int threads = 1;
    size_t cap = 1000000;
    bool symbolic = false, require_natural = false, check_jacobi = false, counts = false;

    auto* c_enum = app.add_subcommand("enumerate", "list chain generators");
    c_enum->add_option("--system", system)->required();
    c_enum->add_option("--degree", degree)->required();
    c_enum->add_option("--format", format)->check(CLI::IsMember({"json", "text", "dot"}));
    c_enum->add_option("--cochain", cochain_file);

    auto* c_bound = app.add_subcommand("boundary", "boundary of a chain");
    c_bound->add_option("--system", system)->required();
    c_bound->add_option("--chain", chain_arg, "inline JSON or @file")->required();
    c_bound->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* c_d = app.add_subcommand("d", "coboundary of a cochain");
    c_d->add_option("--system", system);
    c_d->add_option("--cochain", cochain_file)->required();
    c_d->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* c_cup = app.add_subcommand("cup", "cup product of two cochains");
    c_cup->add_option("--system", system);
    c_cup->add_option("--left", left_file)->required();
    c_cup->add_option("--right", right_file)->required();
    c_cup->add_option("--cup-convention", convention)->check(CLI::IsMember({"product", "sum"}));
    c_cup->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* c_check = app.add_subcommand("check", "verify the 2-cocycle condition");
    c_check->add_option("--system", system);
    c_check->add_option("--cochain", cochain_file)->required();
    c_check->add_option("--threads", threads)->check(CLI::PositiveNumber);
    c_check->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* c_int = app.add_subcommand("integrate", "integrate a symmetric 2-cocycle");
    c_int->add_option("--system", system);
    c_int->add_option("--cochain", cochain_file)->required();
    c_int->add_option("--xi", xi_file, "free-variable JSON file");
    c_int->add_flag("--symbolic", symbolic, "fresh xi variable per simple root");
    c_int->add_flag("--require-natural", require_natural, "fail unless the integral is natural");
    c_int->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* c_nat = app.add_subcommand("natural", "decide natural integrability");
    c_nat->add_option("--system", system);
    c_nat->add_option("--cochain", cochain_file)->required();
    c_nat->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* c_lie = app.add_subcommand("lie-model", "deformed Cartan-Weyl bracket table");
    c_lie->add_option("--system", system);
    c_lie->add_option("--cochain", cochain_file)->required();
    c_lie->add_option("--xi", xi_file);
    c_lie->add_flag("--check-jacobi", check_jacobi);
    c_lie->add_flag("--counts", counts);
    c_lie->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* c_orbit = app.add_subcommand("orbit", "automorphism group and root orbits");
    c_orbit->add_option("--system", system)->required();
    c_orbit->add_option("--group", group)->check(CLI::IsMember({"weyl", "aut"}));
    c_orbit->add_option("--cap", cap);
    c_orbit->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* c_facts = app.add_subcommand("lemma61", "exhaustive root-addition facts");
    c_facts->add_option("--system", system)->required();
    c_facts->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    std::vector<std::string> argv_s;
    argv_s.push_back("rootcoh");
    for (auto& a : args) argv_s.push_back(a);
    std::vector<char*> argv;
    for (auto& s : argv_s) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*c_enum) {
            RootSystem rs = RootSystem::build(system);
            if (format == "dot") {
                std::optional<Cochain> w;
                if (!cochain_file.empty())
                    w = cochain_from_json(rs, load_json_file(cochain_file));
                if (degree != 2)
                    throw MalformedInput("dot output renders degree 2 only");
                out << dot_t2(rs, w, degree_cap);
                return 0;
            }
            auto chains = enumerate_chains(rs, degree, degree_cap);
            if (format == "json") {
                Json a = Json::array();
                for (const Chain& c : chains) a.push_back(chain_to_json(rs, c));
                out << a.dump(2) << "\n";
            } else {
                for (const Chain& c : chains) out << detail::chain_text(rs, c) << "\n";
            }
            return 0;
        }

        if (*c_bound) {
            RootSystem rs = RootSystem::build(system);
            Chain c = chain_from_json(rs, detail::parse_inline_or_file(chain_arg));
            detail::print_chainsum(rs, boundary(rs, c), format, out);
            return 0;
        }

        if (*c_d) {
            Json j = load_json_file(cochain_file);
            RootSystem rs = detail::system_for(system, &j);
            Cochain w = cochain_from_json(rs, j);
            detail::print_cochain(rs, coboundary(rs, w, degree_cap), format, out);
            return 0;
        }

        if (*c_cup) {
            Json jl = load_json_file(left_file);
            RootSystem rs = detail::system_for(system, &jl);
            Cochain a = cochain_from_json(rs, jl);
            Cochain b = cochain_from_json(rs, load_json_file(right_file));
            CupConvention conv = convention == "product" ? CupConvention::exponent_product
                                                         : CupConvention::exponent_sum;
            detail::print_cochain(rs, cup(rs, a, b, conv, degree_cap), format, out);
            return 0;
        }

        if (*c_check) {
            Json j = load_json_file(cochain_file);
            RootSystem rs = detail::system_for(system, &j);
            Cochain w = cochain_from_json(rs, j);
            CocycleReport rep = is_cocycle(rs, w, degree_cap, threads);
            if (format == "json") {
                Json r = Json::object();
                r["closed"] = rep.is_closed;
                r["symmetry"] = symmetry_class_name(rep.symmetry.primary());
                r["opposite_pair_identities"] = rep.killing_identities_ok;
                if (rep.witness) {
                    r["witness"] = Json::object();
                    r["witness"]["chain"] = chain_to_json(rs, rep.witness->first);
                    r["witness"]["value"] = monomial_to_json(rep.witness->second, w.variables());
                }
                out << r.dump(2) << "\n";
            } else {
                out << "closed: " << (rep.is_closed ? "yes" : "no") << "\n";
                out << "symmetry: " << symmetry_class_name(rep.symmetry.primary()) << "\n";
                out << "opposite-pair identities: "
                    << (rep.killing_identities_ok ? "ok" : "violated") << "\n";
                if (rep.witness)
                    out << "witness: " << detail::chain_text(rs, rep.witness->first) << " -> "
                        << rep.witness->second.str(w.variables()) << "\n";
            }
            return rep.is_closed ? 0 : 1;
        }

        if (*c_int) {
            Json j = load_json_file(cochain_file);
            RootSystem rs = detail::system_for(system, &j);
            Cochain w = cochain_from_json(rs, j);
            IntegrateOptions opt;
            opt.degree_cap = degree_cap;
            IntegrationResult res;
            try {
                if (symbolic) {
                    res = integrate_symbolic(rs, w, opt);
                } else {
                    std::map<int, Monomial> xi;
                    if (!xi_file.empty())
                        xi = xi_from_json(rs, load_json_file(xi_file), w.variables());
                    res = integrate(rs, w, std::move(xi), opt);
                }
            } catch (const NotCocycle& e) {
                err << "not a cocycle; witness " << detail::chain_text(rs, e.witness) << "\n";
                return 1;
            } catch (const NotSymmetric& e) {
                err << e.what() << "\n";
                return 1;
            }
            const VariableTable& vars = res.one_form.variables();
            bool natural_ok = true;
            for (int id = 0; id < rs.num_roots(); ++id)
                if (!res.one_form.value(Chain({id})).is_natural()) natural_ok = false;
            if (format == "json") {
                Json r = Json::object();
                r["root_system"] = rs.name();
                r["variables"] = vars.names();
                Json table = Json::array();
                for (int id = 0; id < rs.num_roots(); ++id) {
                    Json e = Json::object();
                    e["root"] = root_to_json(rs, id);
                    e["monomial"] = monomial_to_json(res.one_form.value(Chain({id})), vars);
                    table.push_back(std::move(e));
                }
                r["one_form"] = std::move(table);
                Json fv = Json::object();
                for (const auto& [i, m] : res.free_variables)
                    fv[std::to_string(i)] = monomial_to_json(m, vars);
                r["free_variables"] = std::move(fv);
                r["verified"] = res.verified;
                if (require_natural) r["natural"] = natural_ok;
                out << r.dump(2) << "\n";
            } else {
                for (int id = 0; id < rs.num_roots(); ++id)
                    out << root_to_json(rs, id).dump() << " -> "
                        << res.one_form.value(Chain({id})).str(vars) << "\n";
                out << "verified: " << (res.verified ? "yes" : "no") << "\n";
                if (require_natural)
                    out << "natural: " << (natural_ok ? "yes" : "no") << "\n";
            }
            if (!res.verified) return 1;
            if (require_natural && !natural_ok) return 1;
            return 0;
        }

        if (*c_nat) {
            Json j = load_json_file(cochain_file);
            RootSystem rs = detail::system_for(system, &j);
            Cochain w = cochain_from_json(rs, j);
            NaturalityReport rep;
            try {
                rep = natural_integrability(rs, w, {true, true, degree_cap});
            } catch (const NotCocycle& e) {
                err << "not a cocycle; witness " << detail::chain_text(rs, e.witness) << "\n";
                return 1;
            } catch (const NotSymmetric& e) {
                err << e.what() << "\n";
                return 1;
            }
            if (format == "json") {
                Json r = Json::object();
                r["feasible"] = rep.feasible;
                if (rep.feasible) {
                    Json xi = Json::object();
                    for (const auto& [i, m] : rep.xi)
                        xi[std::to_string(i)] = monomial_to_json(m, w.variables());
                    r["xi"] = std::move(xi);
                } else {
                    r["conflict"] = rep.conflict;
                    if (rep.fractional_order) {
                        r["fractional_order"] = *rep.fractional_order;
                        Json xi = Json::object();
                        for (const auto& [i, s] : rep.fractional_xi) xi[std::to_string(i)] = s;
                        r["fractional_xi"] = std::move(xi);
                    }
                }
                out << r.dump(2) << "\n";
            } else {
                out << "feasible: " << (rep.feasible ? "yes" : "no") << "\n";
                if (rep.feasible) {
                    for (const auto& [i, m] : rep.xi)
                        out << "xi" << i << " = " << m.str(w.variables()) << "\n";
                } else {
                    for (const auto& s : rep.conflict) out << "conflict: " << s << "\n";
                    if (rep.fractional_order) {
                        out << "feasible with exponents refined by 1/" << *rep.fractional_order
                            << ":\n";
                        for (const auto& [i, s] : rep.fractional_xi)
                            out << "xi" << i << " = " << s << "\n";
                    }
                }
            }
            return rep.feasible ? 0 : 1;
        }

        if (*c_lie) {
            Json j = load_json_file(cochain_file);
            RootSystem rs = detail::system_for(system, &j);
            Cochain w = cochain_from_json(rs, j);
            SignForm eps = chevalley_signs(rs);
            DeformedAlgebra A = build_algebra(rs, eps, w);
            Json r = Json::object();
            r["root_system"] = rs.name();
            Json basis = Json::array();
            for (int b = 0; b < A.dim(); ++b) basis.push_back(A.basis_label(b));
            r["basis"] = std::move(basis);
            Json table = Json::array();
            for (int x = 0; x < A.dim(); ++x)
                for (int y = x + 1; y < A.dim(); ++y) {
                    AlgebraElem e;
                    e.add(x, RingElem::term(Monomial::identity(w.num_variables()), 1));
                    AlgebraElem f;
                    f.add(y, RingElem::term(Monomial::identity(w.num_variables()), 1));
                    AlgebraElem br = A.bracket(e, f);
                    if (br.zero()) continue;
                    Json entry = Json::object();
                    entry["left"] = A.basis_label(x);
                    entry["right"] = A.basis_label(y);
                    Json terms = Json::array();
                    for (const auto& [bz, ring] : br.components())
                        for (const auto& [m, c] : ring.terms()) {
                            Json t = Json::object();
                            t["basis"] = A.basis_label(bz);
                            t["coeff"] = c;
                            t["monomial"] = monomial_to_json(m, w.variables());
                            terms.push_back(std::move(t));
                        }
                    entry["terms"] = std::move(terms);
                    table.push_back(std::move(entry));
                }
            r["brackets"] = std::move(table);
            int exit = 0;
            if (check_jacobi) {
                JacobiReport jr = jacobi_check(A);
                r["jacobi"] = Json::object();
                r["jacobi"]["ok"] = jr.ok;
                if (!jr.ok) {
                    r["jacobi"]["witness"] = jr.witness_labels;
                    exit = 1;
                }
            }
            if (counts) {
                std::map<int, Monomial> xi;
                if (!xi_file.empty())
                    xi = xi_from_json(rs, load_json_file(xi_file), w.variables());
                IntegrateOptions opt;
                opt.degree_cap = degree_cap;
                try {
                    IntegrationResult res = integrate(rs, w, std::move(xi), opt);
                    KillingCount kc = killing_counts(rs, res.one_form);
                    Json kj = Json::object();
                    Json s = Json::array(), l = Json::array();
                    for (const auto& m : kc.short_count) s.push_back(m.str(w.variables()));
                    for (const auto& m : kc.long_count) l.push_back(m.str(w.variables()));
                    kj["short"] = std::move(s);
                    kj["long"] = std::move(l);
                    Json tot = Json::object();
                    for (const auto& [n, v] : kc.totals) tot[n] = v;
                    kj["totals"] = std::move(tot);
                    r["killing"] = std::move(kj);
                } catch (const NotCocycle& e) {
                    err << "counts need a cocycle; witness " << detail::chain_text(rs, e.witness)
                        << "\n";
                    return 1;
                }
            }
            if (format == "json") {
                out << r.dump(2) << "\n";
            } else {
                for (const auto& entry : r["brackets"]) {
                    out << "[" << entry["left"].get<std::string>() << ", "
                        << entry["right"].get<std::string>() << "] =";
                    for (const auto& t : entry["terms"]) {
                        Monomial m = monomial_from_json(t["monomial"], w.variables());
                        out << " " << (t["coeff"].get<int64_t>() >= 0 ? "+" : "")
                            << t["coeff"].get<int64_t>() << "*" << m.str(w.variables()) << "*"
                            << t["basis"].get<std::string>();
                    }
                    out << "\n";
                }
                if (r.contains("jacobi"))
                    out << "jacobi: " << (r["jacobi"]["ok"].get<bool>() ? "ok" : "failed") << "\n";
                if (r.contains("killing")) {
                    out << "short:";
                    for (const auto& s : r["killing"]["short"]) out << " " << s.get<std::string>();
                    out << "\nlong:";
                    for (const auto& s : r["killing"]["long"]) out << " " << s.get<std::string>();
                    out << "\n";
                }
            }
            return exit;
        }

        if (*c_orbit) {
            RootSystem rs = RootSystem::build(system);
            auto g = generate_aut_group(rs, group == "weyl" ? GroupKind::weyl : GroupKind::full,
                                        cap);
            // orbits of root ids under the group
            std::vector<int> orbit_of(static_cast<size_t>(rs.num_roots()), -1);
            std::vector<std::vector<int>> orbits;
            for (int id = 0; id < rs.num_roots(); ++id) {
                if (orbit_of[static_cast<size_t>(id)] >= 0) continue;
                std::vector<int> orb;
                std::set<int> seen;
                std::vector<int> work = {id};
                seen.insert(id);
                while (!work.empty()) {
                    int cur = work.back();
                    work.pop_back();
                    orb.push_back(cur);
                    for (const auto& a : g) {
                        int img = a.apply(cur);
                        if (seen.insert(img).second) work.push_back(img);
                    }
                }
                std::sort(orb.begin(), orb.end());
                for (int x : orb) orbit_of[static_cast<size_t>(x)] = static_cast<int>(orbits.size());
                orbits.push_back(std::move(orb));
            }
            if (format == "json") {
                Json r = Json::object();
                r["root_system"] = rs.name();
                r["group"] = group;
                r["order"] = g.size();
                Json roots = Json::array();
                for (int id = 0; id < rs.num_roots(); ++id) roots.push_back(root_to_json(rs, id));
                r["roots"] = std::move(roots);
                Json els = Json::array();
                for (const auto& a : g) {
                    Json e = Json::object();
                    e["perm"] = a.perm;
                    e["weyl"] = a.is_weyl;
                    els.push_back(std::move(e));
                }
                r["elements"] = std::move(els);
                Json os = Json::array();
                for (const auto& orb : orbits) {
                    Json o = Json::array();
                    for (int id : orb) o.push_back(root_to_json(rs, id));
                    os.push_back(std::move(o));
                }
                r["orbits"] = std::move(os);
                out << r.dump(2) << "\n";
            } else {
                out << "order: " << g.size() << "\n";
                out << "orbits: " << orbits.size() << "\n";
                for (const auto& orb : orbits) {
                    out << " ";
                    for (int id : orb) out << " " << root_to_json(rs, id).dump();
                    out << "\n";
                }
            }
            return 0;
        }

        if (*c_facts) {
            RootSystem rs = RootSystem::build(system);
            AdditionFactsReport rep = check_addition_facts(rs);
            if (format == "json") {
                Json r = Json::object();
                r["root_system"] = rs.name();
                r["all_pass"] = rep.all_pass;
                Json st = Json::array();
                for (size_t i = 0; i < rep.statements.size(); ++i) {
                    Json s = Json::object();
                    s["statement"] = i + 1;
                    s["pass"] = rep.statements[i].pass;
                    if (!rep.statements[i].pass) s["witness"] = rep.statements[i].witness;
                    st.push_back(std::move(s));
                }
                r["statements"] = std::move(st);
                out << r.dump(2) << "\n";
            } else {
                for (size_t i = 0; i < rep.statements.size(); ++i) {
                    out << "statement " << (i + 1) << ": "
                        << (rep.statements[i].pass ? "pass" : "FAIL") << "\n";
                    if (!rep.statements[i].pass)
                        out << "  witness: " << rep.statements[i].witness << "\n";
                }
            }
            return rep.all_pass ? 0 : 1;
        }
    } catch (const WellDefinednessViolation& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

} // namespace rootcoh::cli

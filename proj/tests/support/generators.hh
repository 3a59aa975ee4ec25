#ifndef BFASP_GUARD_TESTS_SUPPORT_GENERATORS_HH
#define BFASP_GUARD_TESTS_SUPPORT_GENERATORS_HH

#include "builder.hh"
#include "oracles.hh"

#include <bfasp/analysis.hh>

#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace bfasp::test
{
    using Rng = std::mt19937_64;

    inline auto uniform(Rng & rng, Integer lo, Integer hi) -> Integer
    {
        return std::uniform_int_distribution<Integer>{lo, hi}(rng);
    }

    inline auto coin(Rng & rng, double p = 0.5) -> bool { return std::bernoulli_distribution{p}(rng); }

    template <typename T>
    auto pick(Rng & rng, const std::vector<T> & xs) -> const T &
    {
        return xs[uniform(rng, 0, static_cast<Integer>(xs.size()) - 1)];
    }

    // ---- normal programs ---------------------------------------------------

    /// Rules never mention their own head in the body, and no atom occurs in
    /// both the positive and the negative body.
    inline auto random_normal_program(Rng & rng, int max_atoms = 6, int max_rules = 8) -> NormalProgram
    {
        NormalProgram np;
        np.atoms = static_cast<int>(uniform(rng, 1, max_atoms));
        auto nrules = uniform(rng, 1, max_rules);
        for (Integer r = 0; r < nrules; ++r) {
            NormalRule rule;
            rule.head = static_cast<int>(uniform(rng, 0, np.atoms - 1));
            std::vector<int> others;
            for (int a = 0; a < np.atoms; ++a)
                if (a != rule.head)
                    others.push_back(a);
            std::shuffle(others.begin(), others.end(), rng);
            auto npos = std::min<Integer>(uniform(rng, 0, 2), static_cast<Integer>(others.size()));
            auto nneg = std::min<Integer>(uniform(rng, 0, 2), static_cast<Integer>(others.size()) - npos);
            rule.pos.assign(others.begin(), others.begin() + npos);
            rule.neg.assign(others.begin() + npos, others.begin() + npos + nneg);
            np.rules.push_back(std::move(rule));
        }
        return np;
    }

    /// Atom i becomes founded bool p<i>; a rule h <- pos, not neg becomes the
    /// clause h \/ ~pos \/ neg with head h.
    inline auto to_ground_program(const NormalProgram & np) -> GroundProgram
    {
        ProgramBuilder pb;
        std::vector<VarId> atom;
        for (int a = 0; a < np.atoms; ++a)
            atom.push_back(pb.founded_bool("p" + std::to_string(a)));
        for (const auto & r : np.rules) {
            std::vector<Literal> lits{pos(atom[r.head])};
            for (int a : r.pos)
                lits.push_back(neg(atom[a]));
            for (int a : r.neg)
                lits.push_back(pos(atom[a]));
            pb.rule(clause(lits), atom[r.head]);
        }
        return pb.build();
    }

    inline auto as_mask(const Valuation & v) -> std::uint32_t
    {
        std::uint32_t m = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v.values()[i].as_bool())
                m |= 1u << i;
        return m;
    }

    // ---- graphs ------------------------------------------------------------

    /// No self loops; parallel edges allowed.
    inline auto random_digraph(Rng & rng, int min_nodes, int max_nodes, Integer max_weight, double density) -> Digraph
    {
        Digraph g;
        g.nodes = static_cast<int>(uniform(rng, min_nodes, max_nodes));
        for (int u = 0; u < g.nodes; ++u)
            for (int v = 0; v < g.nodes; ++v)
                if (u != v && coin(rng, density))
                    g.edges.push_back(Edge{u, v, uniform(rng, 1, max_weight)});
        std::shuffle(g.edges.begin(), g.edges.end(), rng);
        return g;
    }

    /// d[u,t] holds the negated distance from u to t: d[t,t] >= 0 and
    /// d[u,t] >= d[v,t] - w for every edge u -> v of weight w.
    struct ShortestPathProgram
    {
        GroundProgram program;
        std::vector<std::vector<VarId>> d;
    };

    inline auto shortest_path_program(const Digraph & g, Integer lo) -> ShortestPathProgram
    {
        ProgramBuilder pb;
        ShortestPathProgram sp;
        sp.d.assign(g.nodes, std::vector<VarId>(g.nodes));
        for (int u = 0; u < g.nodes; ++u)
            for (int t = 0; t < g.nodes; ++t)
                sp.d[u][t] = pb.founded_int("d[" + std::to_string(u) + "," + std::to_string(t) + "]", lo, 0);
        for (int t = 0; t < g.nodes; ++t)
            pb.rule(clause({atom({{1, sp.d[t][t]}}, 0)}), sp.d[t][t]);
        for (const auto & e : g.edges)
            for (int t = 0; t < g.nodes; ++t)
                pb.rule(clause({atom({{1, sp.d[e.from][t]}, {-1, sp.d[e.to][t]}}, -e.weight)}), sp.d[e.from][t]);
        sp.program = pb.build();
        return sp;
    }

    /// The data file text for the bundled MCDS model (nodes become 1-based).
    inline auto mcds_data(const McdsInstance & inst) -> std::string
    {
        std::ostringstream s;
        auto list = [&](auto field) {
            s << "[";
            for (std::size_t i = 0; i < inst.graph.edges.size(); ++i)
                s << (i ? ", " : "") << field(inst.graph.edges[i]);
            s << "];\n";
        };
        s << "N = " << inst.graph.nodes << ";\nE = " << inst.graph.edges.size() << ";\nK = " << inst.k << ";\n";
        s << "from = ";
        list([](const Edge & e) { return e.from + 1; });
        s << "to = ";
        list([](const Edge & e) { return e.to + 1; });
        s << "weight = ";
        list([](const Edge & e) { return e.weight; });
        return s.str();
    }

    // ---- general programs --------------------------------------------------

    /**
     * Small programs mixing standard and founded variables of both sorts,
     * with guarded rules, chains, scaled heads, constraints and sometimes an
     * objective. Domains stay small enough to enumerate every valuation.
     * The numeric shape favours founded integers guarded by other founded
     * integers, so many of them end up guessed.
     */
    inline auto random_program(Rng & rng, bool with_objective = false, bool numeric = false) -> GroundProgram
    {
        ProgramBuilder pb;
        std::vector<VarId> bools, ints, fbools, fints, sints;
        for (Integer i = 0, n = uniform(rng, 0, numeric ? 1 : 2); i < n; ++i)
            bools.push_back(pb.standard_bool("s" + std::to_string(i)));
        for (Integer i = 0, n = uniform(rng, 0, numeric ? 0 : 1); i < n; ++i) {
            auto lo = uniform(rng, -1, 0);
            sints.push_back(pb.standard_int("t" + std::to_string(i), lo, lo + 2));
            ints.push_back(sints.back());
        }
        for (Integer i = 0, n = uniform(rng, 1, numeric ? 1 : 3); i < n; ++i) {
            fbools.push_back(pb.founded_bool("x" + std::to_string(i)));
            bools.push_back(fbools.back());
        }
        for (Integer i = 0, n = uniform(rng, numeric ? 2 : 1, numeric ? 3 : 2); i < n; ++i) {
            auto lo = uniform(rng, -1, 0);
            fints.push_back(pb.founded_int("a" + std::to_string(i), lo, lo + 3));
            ints.push_back(fints.back());
        }

        auto guard = [&](VarId head, std::vector<Literal> & lits, std::vector<LinearAtom> & atoms) {
            if (! numeric && coin(rng) && bools.size() > 1) {
                auto b = pick(rng, bools);
                if (b != head)
                    lits.push_back(Literal{b, coin(rng) ? Polarity::Neg : Polarity::Pos});
            }
            else if (numeric || coin(rng)) {
                auto g = pick(rng, ints);
                if (g != head) {
                    auto k = uniform(rng, -1, 3);
                    atoms.push_back(coin(rng) ? atom({{1, g}}, k) : atom({{-1, g}}, -k));
                }
            }
        };

        auto try_rule = [&](FlatClause c, VarId head) {
            Rule r{std::move(c), head};
            if (! validate_rule(pb.vars(), r))
                pb.rule(std::move(r.clause), head);
        };

        for (Integer r = 0, n = uniform(rng, 1, 6); r < n; ++r) {
            std::vector<Literal> lits;
            std::vector<LinearAtom> atoms;
            if (coin(rng, numeric ? 0.85 : 0.6)) {
                auto h = pick(rng, fints);
                auto other = pick(rng, ints);
                switch (uniform(rng, 0, 3)) {
                case 0: atoms.push_back(atom({{1, h}}, uniform(rng, -2, 4))); break;
                case 1:
                    if (other == h)
                        atoms.push_back(atom({{1, h}}, uniform(rng, -2, 4)));
                    else
                        atoms.push_back(atom({{1, h}, {-1, other}}, uniform(rng, -2, 1)));
                    break;
                case 2:
                    if (other == h)
                        atoms.push_back(atom({{2, h}}, uniform(rng, -3, 5)));
                    else
                        atoms.push_back(atom({{2, h}, {-1, other}}, uniform(rng, -3, 2)));
                    break;
                default:
                    atoms.push_back(atom({{1, h}}, uniform(rng, -1, 2)));
                    break;
                }
                guard(h, lits, atoms);
                try_rule(FlatClause{std::move(lits), std::move(atoms)}, h);
            }
            else {
                auto x = pick(rng, fbools);
                lits.push_back(pos(x));
                guard(x, lits, atoms);
                guard(x, lits, atoms);
                try_rule(FlatClause{std::move(lits), std::move(atoms)}, x);
            }
        }

        for (Integer c = 0, n = uniform(rng, 0, 2); c < n; ++c) {
            std::vector<Literal> lits;
            std::vector<LinearAtom> atoms;
            for (Integer m = 0, k = uniform(rng, 1, 2); m < k; ++m) {
                if (coin(rng))
                    lits.push_back(Literal{pick(rng, bools), coin(rng) ? Polarity::Neg : Polarity::Pos});
                else {
                    auto g = pick(rng, ints);
                    auto b = uniform(rng, -1, 3);
                    atoms.push_back(coin(rng) ? atom({{1, g}}, b) : atom({{-1, g}}, -b));
                }
            }
            pb.constraint(FlatClause{std::move(lits), std::move(atoms)});
        }

        if (with_objective) {
            LinearExpr obj;
            for (auto b : bools)
                if (coin(rng))
                    obj.terms.push_back(Term{uniform(rng, -2, 3), b});
            for (auto s : sints)
                if (coin(rng))
                    obj.terms.push_back(Term{uniform(rng, -2, 2), s});
            std::erase_if(obj.terms, [](const Term & t) { return t.coeff == 0; });
            obj.constant = uniform(rng, -3, 3);
            pb.minimize(std::move(obj));
        }
        return pb.build();
    }

    /// Copy of p with the constraint and literal order shuffled.
    inline auto shuffled(const GroundProgram & p, Rng & rng) -> GroundProgram
    {
        std::vector<FlatClause> cons(p.constraints().begin(), p.constraints().end());
        for (auto & c : cons) {
            std::shuffle(c.lits.begin(), c.lits.end(), rng);
            std::shuffle(c.atoms.begin(), c.atoms.end(), rng);
            for (auto & a : c.atoms)
                std::shuffle(a.terms.begin(), a.terms.end(), rng);
        }
        std::shuffle(cons.begin(), cons.end(), rng);
        return GroundProgram{{p.vars().begin(), p.vars().end()}, cons, {p.rules().begin(), p.rules().end()},
            p.objective()};
    }

    /// A random clause over p's variables, for filtering experiments.
    inline auto random_clause(Rng & rng, const GroundProgram & p) -> FlatClause
    {
        FlatClause c;
        for (Integer m = 0, k = uniform(rng, 1, 2); m < k; ++m) {
            VarId v{static_cast<std::uint32_t>(uniform(rng, 0, static_cast<Integer>(p.num_vars()) - 1))};
            if (p.info(v).sort == Sort::Bool)
                c.lits.push_back(Literal{v, coin(rng) ? Polarity::Neg : Polarity::Pos});
            else {
                auto b = uniform(rng, p.info(v).lo, p.info(v).hi);
                c.atoms.push_back(coin(rng) ? atom({{1, v}}, b) : atom({{-1, v}}, -b));
            }
        }
        return c;
    }

    // ---- positive constraint programs -------------------------------------

    /// Owns the variable table that a PositiveCP points into.
    struct RandomCP
    {
        std::vector<VarInfo> vars;
        std::vector<PositiveClause> clauses;

        [[nodiscard]] auto cp() const -> PositiveCP { return PositiveCP{vars, clauses}; }
    };

    /// Every clause is increasing in its head and decreasing elsewhere.
    /// Integer heads sometimes carry coefficient 2 or 3.
    inline auto random_positive_cp(Rng & rng, int max_ints = 3, int max_bools = 2, Integer width = 3) -> RandomCP
    {
        RandomCP r;
        std::vector<VarId> ints, bools;
        auto add = [&](VarInfo info) {
            r.vars.push_back(std::move(info));
            return VarId{static_cast<std::uint32_t>(r.vars.size() - 1)};
        };
        for (Integer i = 0, n = uniform(rng, 1, max_ints); i < n; ++i) {
            auto lo = uniform(rng, -2, 0);
            ints.push_back(add(VarInfo{"a" + std::to_string(i), VarKind::Founded, Sort::Int, lo, lo + width}));
        }
        for (Integer i = 0, n = uniform(rng, 0, max_bools); i < n; ++i)
            bools.push_back(add(VarInfo{"x" + std::to_string(i), VarKind::Founded, Sort::Bool, 0, 1}));

        auto body = [&](VarId head, FlatClause & c) {
            for (Integer m = 0, k = uniform(rng, 0, 2); m < k; ++m) {
                if (! bools.empty() && coin(rng)) {
                    auto b = pick(rng, bools);
                    if (b != head && std::none_of(c.lits.begin(), c.lits.end(), [&](auto & l) { return l.var == b; }))
                        c.lits.push_back(neg(b));
                }
                else {
                    auto g = pick(rng, ints);
                    if (g != head)
                        c.atoms.push_back(atom({{-1, g}}, -uniform(rng, -2, 3)));
                }
            }
        };

        for (Integer i = 0, n = uniform(rng, 1, 6); i < n; ++i) {
            PositiveClause pc;
            pc.rule = static_cast<std::size_t>(i);
            if (bools.empty() || coin(rng, 0.65)) {
                auto h = pick(rng, ints);
                LinearAtom head{{{uniform(rng, 1, 3), h}}, uniform(rng, -3, 4)};
                for (auto g : ints)
                    if (g != h && coin(rng, 0.4))
                        head.terms.push_back(Term{-uniform(rng, 1, 2), g});
                pc.head = h;
                pc.clause.atoms.push_back(std::move(head));
                body(h, pc.clause);
            }
            else {
                auto x = pick(rng, bools);
                pc.head = x;
                pc.clause.lits.push_back(pos(x));
                body(x, pc.clause);
            }
            r.clauses.push_back(std::move(pc));
        }
        return r;
    }
}

#endif

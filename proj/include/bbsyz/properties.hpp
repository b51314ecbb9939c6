#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "bbsyz/error.hpp"
#include "bbsyz/free_algebra.hpp"
#include "bbsyz/genmat.hpp"
#include "bbsyz/grading.hpp"
#include "bbsyz/jacobi.hpp"
#include "bbsyz/order_ideal.hpp"
#include "bbsyz/planar.hpp"
#include "bbsyz/syzygy.hpp"
#include "bbsyz/trace.hpp"

namespace bbsyz {

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string detail; // first counterexample
};

struct PropertyReport {
    std::vector<PropertyResult> results;
    bool all_passed() const
    {
        return std::all_of(results.begin(), results.end(), [](const PropertyResult &r) { return r.passed; });
    }
};

enum class VerifyLevel { Quick, Full };

struct PropertyConfig {
    std::size_t max_trace_length = 3;        // s for trace syzygy suites
    std::size_t max_matrix_telescope = 3;    // s for the matrix-level telescoping check
    std::size_t max_free_telescope = 4;      // s for the free-algebra check

    static PropertyConfig for_level(VerifyLevel level)
    {
        if (level == VerifyLevel::Full) {
            return PropertyConfig{4, 4, 5};
        }
        return PropertyConfig{};
    }
};

/// Every good word of length 2..max_len over 1..n.
inline std::vector<OrderedProduct> good_products(std::size_t n, std::size_t max_len)
{
    std::vector<OrderedProduct> out;
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const Word &w : layer) {
            for (std::size_t k = 1; k <= n; ++k) {
                Word x = w;
                x.push_back(k);
                next.push_back(std::move(x));
            }
        }
        layer = std::move(next);
        if (len < 2) {
            continue;
        }
        for (const Word &w : layer) {
            if (std::set<std::size_t>(w.begin(), w.end()).size() >= 2) {
                out.emplace_back(w);
            }
        }
    }
    return out;
}

namespace detail {

// Runs `body` once per case; a false return or an Error marks the property failed.
class PropertyRunner
{
public:
    explicit PropertyRunner(std::string name) { m_result.name = std::move(name); }

    template <typename Body>
    void check(const std::string &label, Body body)
    {
        ++m_result.cases;
        if (!m_result.passed) {
            return;
        }
        std::string why;
        bool ok = false;
        try {
            ok = body(why);
        } catch (const Error &e) {
            why = e.what();
        }
        if (!ok) {
            m_result.passed = false;
            m_result.detail = label + (why.empty() ? "" : ": " + why);
        }
    }

    PropertyResult result() const { return m_result; }

private:
    PropertyResult m_result;
};

inline bool homogeneous_of(const Poly &p, const MultiDegree &d, const GradingContext &g, std::string &why)
{
    const Homogeneity h = homogeneous_multidegree(p, g);
    if (h.matches(d)) {
        return true;
    }
    if (h.kind == Homogeneity::Kind::NonHomogeneous) {
        why = "terms " + h.first + " and " + h.second + " differ in degree";
    } else {
        why = "degree " + h.degree.to_string() + ", expected " + d.to_string();
    }
    return false;
}

} // namespace detail

inline void lattice_properties(const OrderIdeal &o, PropertyReport &report)
{
    const std::size_t n = o.dimension();
    {
        detail::PropertyRunner run("step maps partition x_k * O into O and the border");
        for (std::size_t k = 1; k <= n; ++k) {
            for (std::size_t i = 1; i <= o.mu(); ++i) {
                run.check("k=" + std::to_string(k) + " i=" + std::to_string(i), [&](std::string &) {
                    const Monomial m = o.term(i).times(k);
                    const std::size_t s = o.sigma(k, i), t = o.tau(k, i);
                    if ((s == 0) == (t == 0)) {
                        return false;
                    }
                    if (t != 0) {
                        return o.term(t) == m && o.tau_inv(k, t) == i;
                    }
                    return o.border_term(s) == m && o.sigma_inv(k, s) == i;
                });
            }
        }
        report.results.push_back(run.result());
    }
    {
        detail::PropertyRunner run("border round trip through sigma");
        for (std::size_t j = 1; j <= o.nu(); ++j) {
            for (std::size_t k = 1; k <= n; ++k) {
                run.check("j=" + std::to_string(j) + " k=" + std::to_string(k), [&](std::string &) {
                    const Monomial &b = o.border_term(j);
                    if (!b.divisible_by(k) || !o.contains(b.divided_by(k))) {
                        return o.sigma_inv(k, j) == 0;
                    }
                    return o.sigma(k, o.sigma_inv(k, j)) == j;
                });
            }
        }
        report.results.push_back(run.result());
    }
    {
        detail::PropertyRunner run("target monomials lie outside O with valid witnesses");
        for (const TargetMonomial &tm : target_monomials(o)) {
            run.check(tm.monomial.to_string(), [&](std::string &) {
                if (o.contains(tm.monomial) || tm.witnesses.empty()) {
                    return false;
                }
                for (const Witness &w : tm.witnesses) {
                    if (!(w.k < w.l) || o.term(w.q).times(w.k).times(w.l) != tm.monomial ||
                        (o.tau(w.k, w.q) != 0 && o.tau(w.l, w.q) != 0)) {
                        return false;
                    }
                }
                return n != 2 || std::all_of(tm.witnesses.begin(), tm.witnesses.end(),
                                             [](const Witness &w) { return w.k == 1 && w.l == 2; });
            });
        }
        report.results.push_back(run.result());
    }
    {
        detail::PropertyRunner run("arrows join O to target monomials with the requested displacement");
        std::set<Monomial, CanonicalMonomialLess> targets;
        for (const auto &tm : target_monomials(o)) {
            targets.insert(tm.monomial);
        }
        for (const SpinalDegree &sd : spinal_multidegrees(o)) {
            run.check(sd.degree.to_string(), [&](std::string &) {
                for (const Arrow &a : arrows_for_displacement(o, sd.degree)) {
                    if (targets.count(a.head) == 0 || a.tail == 0 || a.tail > o.mu() ||
                        a.head.multidegree() - o.term(a.tail).multidegree() != sd.degree) {
                        return false;
                    }
                }
                return true;
            });
        }
        report.results.push_back(run.result());
    }
}

inline void genmat_properties(const RhoTable &table, PropertyReport &report)
{
    const OrderIdeal &o = table.order_ideal();
    {
        detail::PropertyRunner run("generators are homogeneous of their multi-degree");
        for (const RhoEntry &e : table.entries()) {
            run.check(e.id.to_string(), [&](std::string &why) {
                return detail::homogeneous_of(e.poly, e.multidegree, table.grading(), why);
            });
        }
        report.results.push_back(run.result());
    }
    {
        detail::PropertyRunner run("generator shape: c-degree 1 or 2, at most two linear terms, integer coefficients");
        for (const RhoEntry &e : table.entries()) {
            run.check(e.id.to_string(), [&](std::string &) {
                std::size_t linear = 0;
                for (const Term &t : e.poly.terms()) {
                    if (t.pp.degree() == 1) {
                        ++linear;
                    } else if (t.pp.degree() != 2) {
                        return false;
                    }
                }
                return linear <= 2 && e.poly.is_integral();
            });
        }
        report.results.push_back(run.result());
    }
    {
        detail::PropertyRunner run("not trivially zero exactly when the arrow head is a target for the pair");
        std::vector<TargetMonomial> targets = target_monomials(o);
        for (const RhoEntry &e : table.entries()) {
            run.check(e.id.to_string(), [&](std::string &) {
                bool is_target = false;
                for (const auto &tm : targets) {
                    if (tm.monomial == e.arrow.head && tm.has_witness_pair(e.id.k, e.id.l)) {
                        is_target = true;
                    }
                }
                return is_target == !e.trivially_zero && (!e.trivially_zero || e.poly.is_zero());
            });
        }
        report.results.push_back(run.result());
    }
    {
        detail::PropertyRunner run("commutators are traceless");
        for (std::size_t k = 1; k <= o.dimension(); ++k) {
            for (std::size_t l = k + 1; l <= o.dimension(); ++l) {
                run.check("k=" + std::to_string(k) + " l=" + std::to_string(l), [&](std::string &why) {
                    const Poly tr = trace(commutator(table.matrix(k), table.matrix(l)));
                    why = tr.to_string();
                    return tr.is_zero();
                });
            }
        }
        report.results.push_back(run.result());
    }
}

inline void jacobi_properties(const RhoTable &table, PropertyReport &report)
{
    const OrderIdeal &o = table.order_ideal();
    const std::size_t n = o.dimension();
    if (n < 3) {
        return;
    }
    const std::size_t mu = o.mu();
    detail::PropertyRunner verify("Jacobi syzygies vanish after substitution");
    detail::PropertyRunner homog("Jacobi summands are homogeneous");
    detail::PropertyRunner diag("diagonal sum of Jacobi syzygies is zero");
    detail::PropertyRunner spine("Jacobi spines have at most six entries, all +-1");
    detail::PropertyRunner degen("degenerate forms match the computed Jacobi syzygies");
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t l = k + 1; l <= n; ++l) {
            for (std::size_t m = l + 1; m <= n; ++m) {
                const std::string triple = std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(m);
                Syzygy diagonal;
                for (std::size_t p = 1; p <= mu; ++p) {
                    for (std::size_t q = 1; q <= mu; ++q) {
                        const std::string label = "J[" + triple + ";" + std::to_string(p) + "," + std::to_string(q) + "]";
                        Syzygy j;
                        bool built = false;
                        verify.check(label, [&](std::string &) {
                            j = jacobi_syzygy(table, k, l, m, p, q);
                            built = true;
                            return verify_syzygy(j, table);
                        });
                        if (!built) {
                            continue;
                        }
                        if (p == q) {
                            diagonal.add_scaled(j, Poly(1));
                        }
                        const MultiDegree target =
                            o.term(q).multidegree().inc(k).inc(l).inc(m) - o.term(p).multidegree();
                        homog.check(label, [&](std::string &why) {
                            for (const auto &[id, c] : j.coeffs) {
                                if (table.poly(id).is_zero()) {
                                    continue;
                                }
                                if (!detail::homogeneous_of(c, target - table.entry(id).multidegree, table.grading(),
                                                            why)) {
                                    why = id.to_string() + ": " + why;
                                    return false;
                                }
                            }
                            return true;
                        });
                        spine.check(label, [&](std::string &) {
                            const Spine s = spine_of(j);
                            return s.size() <= 6 && std::all_of(s.begin(), s.end(), [](const auto &e) {
                                       return e.second == 1 || e.second == -1;
                                   });
                        });
                        degen.check(label, [&](std::string &why) {
                            const DegenerateForm f = jacobi_degenerate_form(o, k, l, m, q);
                            switch (f.kind) {
                            case DegenerateForm::Kind::Zero:
                                why = format_syzygy(j);
                                return j.is_zero();
                            case DegenerateForm::Kind::TwoTermEquality: {
                                const Syzygy rel = f.relation(p);
                                Syzygy neg;
                                neg.add_scaled(rel, Poly(-1));
                                why = format_syzygy(j) + " vs " + f.to_string();
                                return j == rel || j == neg;
                            }
                            case DegenerateForm::Kind::General:
                                return true;
                            }
                            return false;
                        });
                    }
                }
                diag.check("J[" + triple + "]", [&](std::string &why) {
                    why = format_syzygy(diagonal);
                    return diagonal.is_zero();
                });
            }
        }
    }
    for (auto *r : {&verify, &homog, &diag, &spine, &degen}) {
        report.results.push_back(r->result());
    }
}

inline void trace_properties(const RhoTable &table, const PropertyConfig &cfg, PropertyReport &report)
{
    const OrderIdeal &o = table.order_ideal();
    const std::size_t n = o.dimension();
    if (n < 2) {
        return;
    }
    detail::PropertyRunner verify("trace syzygies vanish after substitution");
    detail::PropertyRunner homog("trace summands are homogeneous of the product degree");
    detail::PropertyRunner spine("computed spines equal predicted spines");
    detail::PropertyRunner constant("non-constant trace coefficients have no constant term");
    detail::PropertyRunner weighted("weighted sums of trace syzygies have empty spine");
    detail::PropertyRunner rearranged("spines do not depend on the arrangement of the product");
    detail::PropertyRunner telescope("telescoped matrix equals the commutator with the remaining product");
    TraceCache cache(table);
    for (const OrderedProduct &pi : good_products(n, std::max(cfg.max_trace_length, cfg.max_matrix_telescope))) {
        const MultiDegree d = pi.multidegree(n);
        const OrderedProduct canon = canonical_product(d);
        for (std::size_t k = 1; k <= n; ++k) {
            if (!pi.contains(k)) {
                continue;
            }
            const std::string label = "T[" + pi.to_string() + "," + std::to_string(k) + "]";
            if (pi.size() <= cfg.max_matrix_telescope) {
                telescope.check(label, [&](std::string &) {
                    return trace_expression_matrix(table, pi, k) == telescoped_commutator(table, pi, k);
                });
            }
            if (pi.size() > cfg.max_trace_length) {
                continue;
            }
            const Syzygy *built = nullptr;
            verify.check(label, [&](std::string &) {
                built = &cache.get(pi, k);
                return verify_syzygy(*built, table);
            });
            if (built == nullptr) {
                continue;
            }
            const Syzygy &t = *built;
            homog.check(label, [&](std::string &why) {
                for (const auto &[id, c] : t.coeffs) {
                    if (table.poly(id).is_zero()) {
                        continue;
                    }
                    if (!detail::homogeneous_of(c, d - table.entry(id).multidegree, table.grading(), why)) {
                        why = id.to_string() + ": " + why;
                        return false;
                    }
                }
                return true;
            });
            spine.check(label, [&](std::string &why) {
                const Spine got = spine_of(t);
                const Spine want = predicted_spine(o, pi, k);
                if (got == want) {
                    return true;
                }
                why = "computed " + std::to_string(got.size()) + " entries, predicted " + std::to_string(want.size());
                return false;
            });
            constant.check(label, [&](std::string &why) {
                for (const auto &[id, c] : t.coeffs) {
                    if (!c.is_constant() && c.constant_term() != 0) {
                        why = id.to_string();
                        return false;
                    }
                }
                return true;
            });
            if (!(pi == canon)) {
                rearranged.check(label, [&](std::string &) { return rearrangement_spine_equal(cache, pi, canon, k); });
            }
        }
        if (pi.size() <= cfg.max_trace_length) {
            weighted.check(pi.to_string(), [&](std::string &) {
                weighted_combination(cache, pi);
                return true;
            });
        }
    }
    for (auto *r : {&verify, &homog, &spine, &constant, &weighted, &rearranged, &telescope}) {
        report.results.push_back(r->result());
    }
    detail::PropertyRunner free("free-algebra telescoping");
    for (const OrderedProduct &pi : good_products(n, cfg.max_free_telescope)) {
        for (std::size_t k = 1; k <= n; ++k) {
            if (pi.contains(k)) {
                free.check(pi.to_string() + " k=" + std::to_string(k),
                           [&](std::string &) { return free_telescope_check(n, pi, k); });
            }
        }
    }
    report.results.push_back(free.result());
}

inline void planar_properties(const RhoTable &table, PropertyReport &report)
{
    const OrderIdeal &o = table.order_ideal();
    if (o.dimension() != 2) {
        return;
    }
    const std::string name = "mu=" + std::to_string(o.mu());
    detail::PropertyRunner exposable("exposable monomials number nu - 1");
    exposable.check(name, [&](std::string &) { return exposable_monomials(o).size() + 1 == o.nu(); });
    detail::PropertyRunner count("generators not trivially zero number (nu - 1) mu");
    count.check(name, [&](std::string &why) {
        const CountCheck c = nontrivial_count_check(table);
        why = std::to_string(c.count) + " vs " + std::to_string(c.expected);
        return c.ok();
    });
    detail::PropertyRunner extremes("extreme arrows number mu and are pairwise distinct");
    extremes.check(name, [&](std::string &) {
        const auto ex = extreme_arrows(o);
        std::set<RhoId> ids;
        for (std::size_t i = 0; i < ex.size(); ++i) {
            ids.insert(ex[i].rho);
            if (i + 1 < ex.size() && !extreme_precedes(ex[i], ex[i + 1])) {
                return false;
            }
        }
        return ex.size() == o.mu() && ids.size() == o.mu();
    });
    detail::PropertyRunner spinal("spinal multi-degrees number mu");
    spinal.check(name, [&](std::string &) { return spinal_multidegrees(o).size() == o.mu(); });
    detail::PropertyRunner reduce("reduction leaves (nu - 2) mu generators with verified rewritings");
    reduce.check(name, [&](std::string &why) {
        const Reduction r = planar_reduce(table);
        for (const auto &[id, combo] : r.rewritings) {
            Poly lhs = table.poly(id);
            for (const auto &[g, c] : combo) {
                lhs -= c * table.poly(g);
            }
            if (!lhs.is_zero()) {
                why = id.to_string();
                return false;
            }
        }
        return r.minimal_generators.size() == (o.nu() - 2) * o.mu() && r.rewritings.size() == o.mu();
    });
    detail::PropertyRunner jacobi("no Jacobi syzygies for n = 2");
    jacobi.check(name, [&](std::string &) {
        try {
            jacobi_syzygy(table, 1, 2, 3, 1, 1);
        } catch (const Error &e) {
            return e.code() == ErrorCode::NeedThreeVariables;
        }
        return false;
    });
    for (auto *r : {&exposable, &count, &extremes, &spinal, &reduce, &jacobi}) {
        report.results.push_back(r->result());
    }
}

/// Every suite that applies to the order ideal behind `table`.
inline PropertyReport verify_all(const RhoTable &table, const PropertyConfig &cfg)
{
    PropertyReport report;
    lattice_properties(table.order_ideal(), report);
    genmat_properties(table, report);
    jacobi_properties(table, report);
    trace_properties(table, cfg, report);
    planar_properties(table, report);
    return report;
}

} // namespace bbsyz

#pragma once

#include <cctype>
#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bbsyz/error.hpp"
#include "bbsyz/genmat.hpp"
#include "bbsyz/jacobi.hpp"
#include "bbsyz/order_ideal.hpp"
#include "bbsyz/ordered_product.hpp"
#include "bbsyz/planar.hpp"
#include "bbsyz/properties.hpp"
#include "bbsyz/syzygy.hpp"
#include "bbsyz/trace.hpp"

namespace bbsyz::cli {

using Json = nlohmann::ordered_json;

enum class Format { Text, Structured };

enum ExitCode : int { Success = 0, DomainFailure = 1, ParseFailure = 2, VerificationFailure = 3 };

struct JobSpec {
    std::size_t n = 0;
    std::vector<std::vector<int>> order_ideal;
    std::optional<std::vector<std::vector<int>>> border_order;
    bool explicit_term_order = false;
    std::string command;
    std::string params;
};

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

inline ParseError field_error(const std::string &field, const std::string &what)
{
    return ParseError("field '" + field + "': " + what);
}

inline std::vector<int> exponent_list(const Json &j, const std::string &field)
{
    if (!j.is_array()) {
        throw field_error(field, "expected a list of exponents");
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json &e = j[i];
        if (!e.is_number_integer() || e.get<long long>() < 0 || e.get<long long>() > 1000000) {
            throw field_error(field + "[" + std::to_string(i) + "]", "expected a non-negative integer");
        }
        out.push_back(e.get<int>());
    }
    return out;
}

inline std::vector<std::vector<int>> exponent_lists(const Json &j, const std::string &field)
{
    if (!j.is_array()) {
        throw field_error(field, "expected a list of exponent lists");
    }
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(exponent_list(j[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
}

inline std::vector<Monomial> monomials(const std::vector<std::vector<int>> &lists)
{
    std::vector<Monomial> out;
    for (const auto &e : lists) {
        out.emplace_back(e);
    }
    return out;
}

inline std::string trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return std::string(s);
}

// Positive integers separated by blanks or commas.
inline std::vector<std::size_t> parse_indices(std::string_view text)
{
    std::vector<std::size_t> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == ' ' || ch == ',' || ch == '\t') {
            ++i;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw ParseError("params: unexpected '" + std::string(1, ch) + "'", 1, i + 1);
        }
        std::size_t v = 0;
        const std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + static_cast<std::size_t>(text[i] - '0');
            if (v > 1000000) {
                throw ParseError("params: index too large", 1, start + 1);
            }
            ++i;
        }
        if (v == 0) {
            throw ParseError("params: indices start at 1", 1, start + 1);
        }
        out.push_back(v);
    }
    return out;
}

inline void no_params(const std::string &command, std::string_view params)
{
    if (!trim(params).empty()) {
        throw ParseError("params: '" + command + "' takes no parameters");
    }
}

inline Json spine_json(const Spine &spine)
{
    Json out = Json::array();
    for (const auto &[id, c] : spine) {
        out.push_back(Json{{"rho", id.to_string()}, {"coefficient", to_string(c)}});
    }
    return out;
}

inline Json syzygy_json(const Syzygy &s)
{
    return Json{{"origin", s.origin.to_string()}, {"relation", format_syzygy(s)}, {"spine", spine_json(spine_of(s))}};
}

inline Json matrix_json(const PolyMatrix &m)
{
    Json rows = Json::array();
    for (std::size_t r = 1; r <= m.size(); ++r) {
        Json row = Json::array();
        for (std::size_t s = 1; s <= m.size(); ++s) {
            row.push_back(m(r, s).to_string());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json monomial_list(const std::vector<Monomial> &ms)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        out.push_back(Json{{"index", i + 1}, {"monomial", ms[i].to_string()}, {"exponents", ms[i].exponents()}});
    }
    return out;
}

inline Json arrow_json(const OrderIdeal &o, const Arrow &a)
{
    return Json{{"tail", o.term(a.tail).to_string()},
                {"head", a.head.to_string()},
                {"displacement", a.displacement.to_string()}};
}

inline Json analyze(const OrderIdeal &o)
{
    Json r;
    r["command"] = "analyze";
    r["n"] = o.dimension();
    r["mu"] = o.mu();
    r["nu"] = o.nu();
    r["terms"] = monomial_list(o.terms());
    r["border"] = monomial_list(o.border());
    Json maps = Json::array();
    for (std::size_t k = 1; k <= o.dimension(); ++k) {
        std::vector<std::size_t> sigma, tau, sigma_inv, tau_inv;
        for (std::size_t i = 1; i <= o.mu(); ++i) {
            sigma.push_back(o.sigma(k, i));
            tau.push_back(o.tau(k, i));
            tau_inv.push_back(o.tau_inv(k, i));
        }
        for (std::size_t j = 1; j <= o.nu(); ++j) {
            sigma_inv.push_back(o.sigma_inv(k, j));
        }
        maps.push_back(Json{{"k", k}, {"sigma", sigma}, {"tau", tau}, {"sigma_inv", sigma_inv}, {"tau_inv", tau_inv}});
    }
    r["step_maps"] = std::move(maps);
    Json targets = Json::array();
    for (const TargetMonomial &t : target_monomials(o)) {
        Json ws = Json::array();
        for (const Witness &w : t.witnesses) {
            ws.push_back("(" + std::to_string(w.k) + "," + std::to_string(w.l) + "," + std::to_string(w.q) + ")");
        }
        targets.push_back(Json{{"monomial", t.monomial.to_string()}, {"witnesses", std::move(ws)}});
    }
    r["target_monomials"] = std::move(targets);
    return r;
}

inline Json rhos(const RhoTable &table)
{
    const OrderIdeal &o = table.order_ideal();
    Json r;
    r["command"] = "rhos";
    r["mu"] = o.mu();
    r["omega"] = table.omega();
    Json mats = Json::array();
    for (std::size_t k = 1; k <= o.dimension(); ++k) {
        mats.push_back(Json{{"k", k}, {"rows", matrix_json(table.matrix(k))}});
    }
    r["matrices"] = std::move(mats);
    Json comms = Json::array();
    for (std::size_t k = 1; k <= o.dimension(); ++k) {
        for (std::size_t l = k + 1; l <= o.dimension(); ++l) {
            comms.push_back(Json{{"k", k}, {"l", l}, {"rows", matrix_json(table.commutator_of(k, l))}});
        }
    }
    r["commutators"] = std::move(comms);
    Json entries = Json::array();
    for (const RhoEntry &e : table.entries()) {
        entries.push_back(Json{{"rho", e.id.to_string()},
                               {"case", e.case_class.number},
                               {"mirrored", e.case_class.mirrored},
                               {"trivially_zero", e.trivially_zero},
                               {"multidegree", e.multidegree.to_string()},
                               {"arrow", arrow_json(o, e.arrow)},
                               {"poly", e.poly.to_string()}});
    }
    r["rhos"] = std::move(entries);
    return r;
}

inline Json jacobi(const RhoTable &table, std::string_view params)
{
    const std::vector<std::size_t> idx = parse_indices(params);
    if (idx.size() != 3 && idx.size() != 5) {
        throw ParseError("params: jacobi expects 'k l m' or 'k l m p q'");
    }
    const OrderIdeal &o = table.order_ideal();
    const std::size_t k = idx[0], l = idx[1], m = idx[2];
    std::vector<std::size_t> ps, qs;
    if (idx.size() == 5) {
        ps = {idx[3]};
        qs = {idx[4]};
    } else {
        for (std::size_t i = 1; i <= o.mu(); ++i) {
            ps.push_back(i);
            qs.push_back(i);
        }
    }
    Json r;
    r["command"] = "jacobi";
    r["triple"] = {k, l, m};
    Json forms = Json::array();
    Json syz = Json::array();
    for (std::size_t q : qs) {
        forms.push_back(Json{{"q", q}, {"form", jacobi_degenerate_form(o, k, l, m, q).to_string()}});
    }
    for (std::size_t q : qs) {
        for (std::size_t p : ps) {
            Json s = syzygy_json(jacobi_syzygy(table, k, l, m, p, q));
            s["p"] = p;
            s["q"] = q;
            syz.push_back(std::move(s));
        }
    }
    r["degenerate_forms"] = std::move(forms);
    r["syzygies"] = std::move(syz);
    return r;
}

inline Json trace(const RhoTable &table, std::string_view params)
{
    const std::string text = trim(params);
    const auto close = text.find('>');
    if (text.empty() || text.front() != '<' || close == std::string::npos) {
        throw ParseError("params: trace expects '<k1,...,ks> k'");
    }
    const OrderedProduct pi = parse_ordered_product(text.substr(0, close + 1));
    const std::vector<std::size_t> rest = parse_indices(std::string_view(text).substr(close + 1));
    if (rest.size() != 1) {
        throw ParseError("params: trace expects exactly one distinguished index after the product");
    }
    const std::size_t k = rest.front();
    const Syzygy s = trace_syzygy(table, pi, k);
    const Spine spine = spine_of(s);
    const Spine predicted = predicted_spine(table.order_ideal(), pi, k);
    Json r;
    r["command"] = "trace";
    r["product"] = pi.to_string();
    r["k"] = k;
    r["origin"] = s.origin.to_string();
    r["relation"] = format_syzygy(s);
    r["spine"] = spine_json(spine);
    r["predicted_spine"] = spine_json(predicted);
    r["spine_matches_prediction"] = spine == predicted;
    return r;
}

inline Json spinal(const RhoTable &table)
{
    const OrderIdeal &o = table.order_ideal();
    TraceCache cache(table);
    Json degrees = Json::array();
    const auto found = spinal_multidegrees(o);
    for (const SpinalDegree &sd : found) {
        const OrderedProduct pi = canonical_product(sd.degree);
        Json arrows = Json::array();
        for (const Arrow &a : sd.arrows) {
            arrows.push_back(arrow_json(o, a));
        }
        Json syz = Json::array();
        for (std::size_t k = 1; k <= o.dimension(); ++k) {
            if (sd.degree[k] > 0) {
                syz.push_back(syzygy_json(cache.get(pi, k)));
            }
        }
        degrees.push_back(Json{{"degree", sd.degree.to_string()},
                               {"product", pi.to_string()},
                               {"arrows", std::move(arrows)},
                               {"syzygies", std::move(syz)}});
    }
    Json r;
    r["command"] = "spinal";
    r["count"] = found.size();
    r["degrees"] = std::move(degrees);
    return r;
}

inline Json planar(const RhoTable &table)
{
    const OrderIdeal &o = table.order_ideal();
    const std::vector<std::size_t> exposable = exposable_monomials(o);
    const CountCheck count = nontrivial_count_check(table);
    const std::vector<ExtremeArrow> extremes = extreme_arrows(o);
    const Reduction red = planar_reduce(table);

    Json r;
    r["command"] = "planar";
    r["mu"] = o.mu();
    r["nu"] = o.nu();
    r["exposable"] = exposable;
    r["nontrivial_count"] = Json{{"count", count.count}, {"expected", count.expected}, {"ok", count.ok()}};
    Json ex = Json::array();
    for (const ExtremeArrow &e : extremes) {
        Json a = arrow_json(o, e.arrow);
        a["rho"] = e.rho.to_string();
        ex.push_back(std::move(a));
    }
    r["extremes"] = std::move(ex);
    Json gens = Json::array();
    for (const RhoId &id : red.minimal_generators) {
        gens.push_back(id.to_string());
    }
    r["minimal_generators"] = std::move(gens);
    Json rw = Json::array();
    for (const auto &[id, combo] : red.rewritings) {
        rw.push_back(Json{{"rho", id.to_string()}, {"equals", format_combination(combo)}});
    }
    r["rewritings"] = std::move(rw);
    Json steps = Json::array();
    for (const ReductionStep &s : red.steps) {
        steps.push_back(Json{{"extreme", s.extreme.to_string()},
                             {"product", s.product.to_string()},
                             {"pivot", to_string(s.pivot)},
                             {"relation", format_syzygy(s.syzygy)}});
    }
    r["steps"] = std::move(steps);
    r["complete_intersection_count"] =
        Json{{"generators", red.minimal_generators.size()}, {"expected", (o.nu() - 2) * o.mu()}};
    return r;
}

inline Json verify(const RhoTable &table, VerifyLevel level)
{
    const PropertyReport report = verify_all(table, PropertyConfig::for_level(level));
    Json suites = Json::array();
    for (const PropertyResult &p : report.results) {
        Json j{{"name", p.name}, {"passed", p.passed}, {"cases", p.cases}};
        if (!p.detail.empty()) {
            j["detail"] = p.detail;
        }
        suites.push_back(std::move(j));
    }
    Json r;
    r["command"] = "verify";
    r["level"] = level == VerifyLevel::Full ? "full" : "quick";
    r["properties"] = std::move(suites);
    r["passed"] = report.all_passed();
    return r;
}

inline std::string scalar_text(const Json &v)
{
    return v.is_string() ? v.get<std::string>() : v.dump();
}

inline bool all_scalars(const Json &a)
{
    for (const auto &v : a) {
        if (v.is_structured()) {
            return false;
        }
    }
    return true;
}

inline std::string inline_list(const Json &a)
{
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += (i ? ", " : "") + scalar_text(a[i]);
    }
    return s + "]";
}

inline void render_text(const Json &obj, std::size_t indent, std::string &out)
{
    const std::string pad(indent, ' ');
    for (const auto &[key, v] : obj.items()) {
        if (v.is_object()) {
            out += pad + key + ":\n";
            render_text(v, indent + 2, out);
        } else if (v.is_array() && all_scalars(v)) {
            out += pad + key + ": " + inline_list(v) + "\n";
        } else if (v.is_array()) {
            out += pad + key + ":\n";
            for (const Json &item : v) {
                if (item.is_object()) {
                    std::string sub;
                    render_text(item, indent + 4, sub);
                    if (sub.size() > indent + 2) {
                        sub[indent + 2] = '-';
                    }
                    out += sub;
                } else if (item.is_array() && all_scalars(item)) {
                    std::string row;
                    for (std::size_t i = 0; i < item.size(); ++i) {
                        row += (i ? " | " : "") + scalar_text(item[i]);
                    }
                    out += pad + "  " + row + "\n";
                } else {
                    out += pad + "  " + item.dump() + "\n";
                }
            }
        } else {
            out += pad + key + ": " + scalar_text(v) + "\n";
        }
    }
}

} // namespace detail

/// Reads a job document. Syntax errors carry line and column; schema errors name the field.
inline JobSpec parse_job(std::string_view text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        const auto [line, column] = detail::line_column(text, e.byte);
        std::string what = e.what();
        const auto at = what.find(": ", what.find("parse error"));
        throw ParseError(at == std::string::npos ? what : what.substr(at + 2), line, column);
    }
    if (!doc.is_object()) {
        throw ParseError("job must be a JSON object", 1, 1);
    }
    JobSpec job;
    bool have_n = false, have_ideal = false;
    for (const auto &[key, v] : doc.items()) {
        if (key == "n") {
            if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 64) {
                throw detail::field_error("n", "expected an integer between 0 and 64");
            }
            job.n = v.get<std::size_t>();
            have_n = true;
        } else if (key == "order_ideal") {
            job.order_ideal = detail::exponent_lists(v, "order_ideal");
            have_ideal = true;
        } else if (key == "border_order") {
            if (!v.is_null()) {
                job.border_order = detail::exponent_lists(v, "border_order");
            }
        } else if (key == "explicit_term_order") {
            if (!v.is_boolean()) {
                throw detail::field_error(key, "expected true or false");
            }
            job.explicit_term_order = v.get<bool>();
        } else if (key == "command" || key == "params") {
            if (!v.is_string()) {
                throw detail::field_error(key, "expected a string");
            }
            (key == "command" ? job.command : job.params) = v.get<std::string>();
        } else {
            throw detail::field_error(key, "unknown field");
        }
    }
    if (!have_n) {
        throw detail::field_error("n", "missing");
    }
    if (!have_ideal) {
        throw detail::field_error("order_ideal", "missing");
    }
    return job;
}

inline OrderIdeal build_order_ideal(const JobSpec &job)
{
    std::optional<std::vector<Monomial>> border;
    if (job.border_order) {
        border = detail::monomials(*job.border_order);
    }
    return make_order_ideal(job.n, detail::monomials(job.order_ideal), border, job.explicit_term_order);
}

/// Runs one command and returns its report. Errors propagate as exceptions.
inline Json run(const JobSpec &job, VerifyLevel level = VerifyLevel::Quick)
{
    const std::string &command = job.command;
    if (command != "analyze" && command != "rhos" && command != "jacobi" && command != "trace" &&
        command != "spinal" && command != "planar" && command != "verify") {
        throw ParseError("unknown command '" + command + "'");
    }
    if (command != "jacobi" && command != "trace") {
        detail::no_params(command, job.params);
    }
    OrderIdeal o = build_order_ideal(job);
    if (command == "analyze") {
        return detail::analyze(o);
    }
    const RhoTable table(std::move(o));
    if (command == "rhos") {
        return detail::rhos(table);
    }
    if (command == "jacobi") {
        return detail::jacobi(table, job.params);
    }
    if (command == "trace") {
        return detail::trace(table, job.params);
    }
    if (command == "spinal") {
        return detail::spinal(table);
    }
    if (command == "planar") {
        return detail::planar(table);
    }
    return detail::verify(table, level);
}

inline std::string render(const Json &report, Format format)
{
    if (format == Format::Structured) {
        return report.dump(2) + "\n";
    }
    std::string out;
    detail::render_text(report, 0, out);
    return out;
}

struct Outcome {
    int exit_code = Success;
    std::string out; // report
    std::string err; // diagnostics
};

inline int exit_code_for(const Error &e)
{
    if (e.code() == ErrorCode::ParseError) {
        return ParseFailure;
    }
    return is_self_check_failure(e.code()) ? VerificationFailure : DomainFailure;
}

/// Parses the job text, applies command/params overrides when given, runs and renders.
inline Outcome execute(std::string_view job_text, const std::optional<std::string> &command,
                       const std::optional<std::string> &params, Format format, VerifyLevel level)
{
    Outcome result;
    try {
        JobSpec job = parse_job(job_text);
        if (command) {
            // stored params belong to the stored command
            if (*command != job.command) {
                job.params.clear();
            }
            job.command = *command;
        }
        if (params) {
            job.params = *params;
        }
        if (job.command.empty()) {
            throw ParseError("no command given");
        }
        const Json report = run(job, level);
        result.out = render(report, format);
        if (job.command == "verify" && !report.at("passed").get<bool>()) {
            result.exit_code = VerificationFailure;
        }
    } catch (const Error &e) {
        result.exit_code = exit_code_for(e);
        result.err = std::string(e.what()) + "\n";
        if (format == Format::Structured) {
            result.out = Json{{"error", Json{{"name", std::string(e.name())}, {"message", e.what()}}}}.dump(2) + "\n";
        }
    } catch (const std::exception &e) {
        result.exit_code = DomainFailure;
        result.err = std::string(e.what()) + "\n";
    }
    return result;
}

} // namespace bbsyz::cli

// admhodge: exact boundary-divisor expansions for Hodge bundle Chern classes
// over spaces of cyclic admissible covers, plus the Hodge integral recursion
// those expansions feed. All output is exact rational text; JSON mode encodes
// every rational as decimal numerator/denominator strings.

#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "admhodge/admhodge.hpp"

namespace {

using admhodge::Rational;
using admhodge::rat;
using admhodge::to_string;
using nlohmann::json;

enum class Format { text, json };

json rational_json(const Rational& q) {
    return json{{"numerator", numerator(q).str()}, {"denominator", denominator(q).str()}};
}

json output_skeleton(const std::string& kind, json inputs) {
    return json{{"kind", kind}, {"inputs", std::move(inputs)}, {"results", json::array()}};
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

// The one contested row of the published integral table: the recursion, run
// with the base cases that reproduce every other published row, lands 11/5103
// below the printed entry.
std::optional<Rational> published_integral_disagreement(int n, int m, const Rational& computed) {
    if (!((n == 4 && m == 4)))
        return std::nullopt;
    Rational published = rat(446923, 5103);
    if (computed == published)
        return std::nullopt;
    return published;
}

constexpr const char* kIntegralDiscrepancyNote =
    "recursion value disagrees with the published table entry; the same base "
    "cases reproduce every other published row exactly";

constexpr const char* kClosedPrintedNote =
    "published all-even closed form omits the 2*i2^2 numerator term; the "
    "composed form is authoritative";

constexpr const char* kPrefactorNote =
    "published statements disagree on a global prefactor (1 vs 2) for the "
    "whole sum; coefficients are reported unscaled";

// ---------------------------------------------------------------------------
// z3 subcommands
// ---------------------------------------------------------------------------

int run_z3_lambda1(int n, int m, Format format) {
    auto expr = admhodge::z3::lambda1_expression(n, m);
    if (format == Format::text) {
        std::cout << "lambda_1 divisor expression at (n|m) = (" << n << "|" << m << ")\n";
        std::cout << "pullback_factor " << to_string(expr.pullback_factor) << "\n";
        for (const auto& [d, a] : expr.coefficients) {
            auto [ci, cj] = d.complement();
            std::cout << "D[" << d.side_omega() << "," << d.side_omegabar() << "]~[" << ci << "," << cj
                      << "]  " << to_string(a) << "\n";
        }
        return 0;
    }
    json doc = output_skeleton("coefficient", json{{"n", n}, {"m", m}});
    doc["pullback_factor"] = rational_json(expr.pullback_factor);
    for (const auto& [d, a] : expr.coefficients) {
        auto [ci, cj] = d.complement();
        doc["results"].push_back(json{{"i", d.side_omega()},
                                      {"j", d.side_omegabar()},
                                      {"complement", {{"i", ci}, {"j", cj}}},
                                      {"alpha", rational_json(a)}});
    }
    emit(doc);
    return 0;
}

json report_json(const admhodge::z3::VerificationReport& report) {
    using admhodge::z3::Family;
    json families = json::object();
    for (Family f : {Family::I, Family::II, Family::III, Family::IV}) {
        auto it = report.family_counts.find(f);
        families[admhodge::z3::family_name(f)] = it == report.family_counts.end() ? 0 : it->second;
    }
    json failures = json::array();
    for (const auto& fail : report.failures) {
        json blocks = json::array();
        for (const auto& b : fail.curve.blocks())
            blocks.push_back(json::array({b.omega, b.omegabar}));
        failures.push_back(json{{"blocks", blocks},
                                {"computed", rational_json(fail.computed)},
                                {"expected", rational_json(fail.expected)}});
    }
    return json{{"n", report.omega_total},
                {"m", report.omegabar_total},
                {"curve_classes", report.total_curves},
                {"families", families},
                {"failures", failures}};
}

void print_report(const admhodge::z3::VerificationReport& report) {
    using admhodge::z3::Family;
    std::cout << "(" << report.omega_total << "|" << report.omegabar_total << ")  curves "
              << report.total_curves;
    for (Family f : {Family::I, Family::II, Family::III, Family::IV}) {
        auto it = report.family_counts.find(f);
        std::cout << "  " << admhodge::z3::family_name(f) << " "
                  << (it == report.family_counts.end() ? 0 : it->second);
    }
    std::cout << "  failures " << report.failures.size() << "\n";
    for (const auto& fail : report.failures) {
        std::cout << "  FAIL blocks";
        for (const auto& b : fail.curve.blocks())
            std::cout << " (" << b.omega << "," << b.omegabar << ")";
        std::cout << "  computed " << to_string(fail.computed) << "  expected " << to_string(fail.expected)
                  << "\n";
    }
}

int run_z3_verify(std::optional<int> n, std::optional<int> m, int max_total, Format format) {
    std::vector<admhodge::z3::VerificationReport> reports;
    if (n.has_value() != m.has_value())
        throw std::invalid_argument("verify: --n and --m must be given together");
    if (n) {
        reports.push_back(admhodge::z3::verify_theorem(*n, *m));
    } else {
        for (int T = 4; T <= max_total; ++T)
            for (int a = T; a >= 0; --a)
                if (((a - (T - a)) % 3 + 3) % 3 == 0)
                    reports.push_back(admhodge::z3::verify_theorem(a, T - a));
    }
    long curves = 0;
    long failures = 0;
    for (const auto& r : reports) {
        curves += r.total_curves;
        failures += static_cast<long>(r.failures.size());
    }
    if (format == Format::text) {
        for (const auto& r : reports)
            print_report(r);
        std::cout << "checked " << curves << " curve classes across " << reports.size()
                  << " signatures: " << failures << " failures\n";
    } else {
        json inputs = n ? json{{"n", *n}, {"m", *m}} : json{{"max_total", max_total}};
        json doc = output_skeleton("verification", std::move(inputs));
        for (const auto& r : reports)
            doc["results"].push_back(report_json(r));
        doc["summary"] = json{{"curve_classes", curves}, {"failures", failures}};
        emit(doc);
    }
    return failures == 0 ? 0 : 2;
}

int run_z3_integral(int n, int m, bool trace, Format format) {
    admhodge::z3::IntegralKey key(n, m);
    admhodge::z3::IntegralCache cache;
    Rational value = cache.value(key);
    std::vector<admhodge::z3::TermTrace> terms;
    if (trace && key.total() >= 5)
        terms = cache.trace(key);
    auto published = published_integral_disagreement(n, m, value);

    if (format == Format::text) {
        if (trace && !terms.empty()) {
            for (const auto& t : terms) {
                std::cout << "term i=" << t.i << " j=" << t.j << "  coefficient "
                          << to_string(t.coefficient) << "  combinatorial_factor "
                          << t.combinatorial_factor.str() << "  left (" << t.left_key.first << "|"
                          << t.left_key.second << ")  right (" << t.right_key.first << "|"
                          << t.right_key.second << ")  value " << to_string(t.term_value) << "\n";
            }
            std::cout << "total ";
        }
        std::cout << to_string(value) << "\n";
        if (published)
            std::cout << "discrepancy: published table entry " << to_string(*published) << "; "
                      << kIntegralDiscrepancyNote << "\n";
        return 0;
    }

    json doc = output_skeleton("integral", json{{"n", n}, {"m", m}});
    json record{{"n", n}, {"m", m}, {"value", rational_json(value)}};
    if (trace) {
        json jterms = json::array();
        for (const auto& t : terms)
            jterms.push_back(json{{"i", t.i},
                                  {"j", t.j},
                                  {"coefficient", rational_json(t.coefficient)},
                                  {"combinatorial_factor", t.combinatorial_factor.str()},
                                  {"left", {{"n", t.left_key.first}, {"m", t.left_key.second}}},
                                  {"right", {{"n", t.right_key.first}, {"m", t.right_key.second}}},
                                  {"value", rational_json(t.term_value)}});
        record["terms"] = std::move(jterms);
    }
    doc["results"].push_back(std::move(record));
    if (published)
        doc["discrepancies"] = json::array({json{{"n", n},
                                                 {"m", m},
                                                 {"computed", rational_json(value)},
                                                 {"published", rational_json(*published)},
                                                 {"note", kIntegralDiscrepancyNote}}});
    emit(doc);
    return 0;
}

int run_z3_table(int max_total, Format format) {
    auto rows = admhodge::z3::integral_table(max_total);
    json discrepancies = json::array();
    if (format == Format::text)
        std::cout << "n\tm\tvalue\n";
    json doc = output_skeleton("integral", json{{"max_total", max_total}});
    for (const auto& [key, value] : rows) {
        if (format == Format::text)
            std::cout << key.omega << "\t" << key.omegabar << "\t" << to_string(value) << "\n";
        else
            doc["results"].push_back(
                json{{"n", key.omega}, {"m", key.omegabar}, {"value", rational_json(value)}});
        if (auto published = published_integral_disagreement(key.omega, key.omegabar, value)) {
            if (format == Format::text)
                std::cout << "discrepancy: (" << key.omega << "|" << key.omegabar
                          << ") published table entry " << to_string(*published) << "; "
                          << kIntegralDiscrepancyNote << "\n";
            else
                discrepancies.push_back(json{{"n", key.omega},
                                             {"m", key.omegabar},
                                             {"computed", rational_json(value)},
                                             {"published", rational_json(*published)},
                                             {"note", kIntegralDiscrepancyNote}});
        }
    }
    if (format == Format::json) {
        if (!discrepancies.empty())
            doc["discrepancies"] = std::move(discrepancies);
        emit(doc);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// z2 subcommands
// ---------------------------------------------------------------------------

int run_z2_lambda1(int branch, Format format) {
    auto classes = admhodge::z2::enumerate_divisor_classes(branch);
    if (format == Format::text) {
        std::cout << "lambda_1 divisor coefficients at N = " << branch << "\n";
        for (const auto& d : classes)
            std::cout << "Delta[" << d.side_count() << "]~[" << d.complement() << "]  "
                      << to_string(admhodge::z2::lambda1_alpha(d.side_count(), branch)) << "\n";
        return 0;
    }
    json doc = output_skeleton("coefficient", json{{"branch", branch}});
    for (const auto& d : classes)
        doc["results"].push_back(json{{"i", d.side_count()},
                                      {"complement", d.complement()},
                                      {"alpha", rational_json(admhodge::z2::lambda1_alpha(d.side_count(), branch))}});
    emit(doc);
    return 0;
}

int run_z2_lambda2(int branch, const std::string& form, Format format) {
    using admhodge::z2::ClosedForm;
    auto evaluate = [&](const admhodge::z2::Codim2Class& c) {
        if (form == "composed")
            return admhodge::z2::lambda2_composed(c);
        if (form == "closed-printed")
            return admhodge::z2::lambda2_closed(c, ClosedForm::printed);
        return admhodge::z2::lambda2_closed(c, ClosedForm::corrected);
    };
    auto classes = admhodge::z2::enumerate_codim2_classes(branch);
    json discrepancies = json::array();
    json doc = output_skeleton("coefficient", json{{"branch", branch}, {"form", form}});
    if (format == Format::text)
        std::cout << "lambda_2 stratum coefficients at N = " << branch << " (" << form << " form)\n";
    for (const auto& c : classes) {
        Rational value = evaluate(c);
        if (format == Format::text)
            std::cout << "Delta[" << c.left() << "," << c.middle() << "," << c.right() << "]  "
                      << to_string(value) << "\n";
        else
            doc["results"].push_back(json{{"class", json::array({c.left(), c.middle(), c.right()})},
                                          {"alpha", rational_json(value)}});
        if (form == "closed-printed") {
            Rational composed = admhodge::z2::lambda2_composed(c);
            if (composed != value) {
                if (format == Format::text)
                    std::cout << "discrepancy: Delta[" << c.left() << "," << c.middle() << ","
                              << c.right() << "] composed form gives " << to_string(composed) << "; "
                              << kClosedPrintedNote << "\n";
                else
                    discrepancies.push_back(
                        json{{"class", json::array({c.left(), c.middle(), c.right()})},
                             {"closed_printed", rational_json(value)},
                             {"composed", rational_json(composed)},
                             {"note", kClosedPrintedNote}});
            }
        }
    }
    if (format == Format::text) {
        std::cout << "prefactor candidates: 1 2  (" << kPrefactorNote << ")\n";
    } else {
        doc["prefactor_candidates"] = json::array({"1", "2"});
        doc["prefactor_note"] = kPrefactorNote;
        if (!discrepancies.empty())
            doc["discrepancies"] = std::move(discrepancies);
        emit(doc);
    }
    return 0;
}

int run_z2_check(int max_branch, Format format) {
    using admhodge::z2::ClosedForm;
    auto printed = admhodge::z2::check_forms(max_branch, ClosedForm::printed);
    auto corrected = admhodge::z2::check_forms(max_branch, ClosedForm::corrected);
    long classes_checked = 0;
    for (int N = 6; N <= max_branch; N += 2)
        classes_checked += static_cast<long>(admhodge::z2::enumerate_codim2_classes(N).size());

    if (format == Format::text) {
        for (const auto& mismatch : printed)
            std::cout << "Delta[" << mismatch.cls.left() << "," << mismatch.cls.middle() << ","
                      << mismatch.cls.right() << "]  composed " << to_string(mismatch.composed)
                      << "  closed-printed " << to_string(mismatch.closed) << "\n";
        std::cout << "checked " << classes_checked << " classes: printed-form mismatches "
                  << printed.size() << " (expected on all-even classes), corrected-form mismatches "
                  << corrected.size() << "\n";
    } else {
        json doc = output_skeleton("forms-check", json{{"max_branch", max_branch}});
        for (const auto& mismatch : printed)
            doc["results"].push_back(
                json{{"class", json::array({mismatch.cls.left(), mismatch.cls.middle(), mismatch.cls.right()})},
                     {"composed", rational_json(mismatch.composed)},
                     {"closed_printed", rational_json(mismatch.closed)},
                     {"note", kClosedPrintedNote}});
        doc["summary"] = json{{"classes_checked", classes_checked},
                              {"printed_mismatches", printed.size()},
                              {"corrected_mismatches", corrected.size()}};
        emit(doc);
    }
    return corrected.empty() ? 0 : 2;
}

Format parse_format(const std::string& name) { return name == "json" ? Format::json : Format::text; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Chern class boundary expansions for cyclic admissible cover spaces"};
    app.require_subcommand(1);
    std::function<int()> runner;

    auto add_format = [](CLI::App* cmd, std::string& slot) {
        cmd->add_option("--format", slot, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->default_val("text");
    };

    auto* z3cmd = app.add_subcommand("z3", "degree-3 cover computations");
    z3cmd->require_subcommand(1);

    struct {
        int n = 0, m = 0;
        std::string format;
    } l1;
    auto* z3_lambda1 = z3cmd->add_subcommand("lambda1", "divisor expression for lambda_1");
    z3_lambda1->add_option("--n", l1.n, "number of w branch points")->required();
    z3_lambda1->add_option("--m", l1.m, "number of wbar branch points")->required();
    add_format(z3_lambda1, l1.format);
    z3_lambda1->callback([&] { runner = [&] { return run_z3_lambda1(l1.n, l1.m, parse_format(l1.format)); }; });

    struct {
        std::optional<int> n, m;
        int max_total = 12;
        std::string format;
    } ver;
    auto* z3_verify = z3cmd->add_subcommand("verify", "pair the expression against every curve class");
    z3_verify->add_option("--n", ver.n, "number of w branch points");
    z3_verify->add_option("--m", ver.m, "number of wbar branch points");
    z3_verify->add_option("--max-total", ver.max_total, "sweep all signatures with n+m up to this bound");
    add_format(z3_verify, ver.format);
    z3_verify->callback(
        [&] { runner = [&] { return run_z3_verify(ver.n, ver.m, ver.max_total, parse_format(ver.format)); }; });

    struct {
        int n = 0, m = 0;
        bool trace = false;
        std::string format;
    } integ;
    auto* z3_integral = z3cmd->add_subcommand("integral", "Hodge integral for one signature");
    z3_integral->add_option("--n", integ.n, "number of w branch points")->required();
    z3_integral->add_option("--m", integ.m, "number of wbar branch points")->required();
    z3_integral->add_flag("--trace", integ.trace, "print each recursion term");
    add_format(z3_integral, integ.format);
    z3_integral->callback([&] {
        runner = [&] { return run_z3_integral(integ.n, integ.m, integ.trace, parse_format(integ.format)); };
    });

    struct {
        int max_total = 0;
        std::string format;
    } tab;
    auto* z3_table = z3cmd->add_subcommand("table", "Hodge integral table up to a total");
    z3_table->add_option("--max-total", tab.max_total, "largest n+m to include")->required();
    add_format(z3_table, tab.format);
    z3_table->callback([&] { runner = [&] { return run_z3_table(tab.max_total, parse_format(tab.format)); }; });

    auto* z2cmd = app.add_subcommand("z2", "degree-2 cover computations");
    z2cmd->require_subcommand(1);

    struct {
        int branch = 0;
        std::string format;
    } zl1;
    auto* z2_lambda1 = z2cmd->add_subcommand("lambda1", "divisor coefficients for lambda_1");
    z2_lambda1->add_option("--branch", zl1.branch, "total number of branch points")->required();
    add_format(z2_lambda1, zl1.format);
    z2_lambda1->callback([&] { runner = [&] { return run_z2_lambda1(zl1.branch, parse_format(zl1.format)); }; });

    struct {
        int branch = 0;
        std::string form;
        std::string format;
    } zl2;
    auto* z2_lambda2 = z2cmd->add_subcommand("lambda2", "codimension-2 coefficients for lambda_2");
    z2_lambda2->add_option("--branch", zl2.branch, "total number of branch points")->required();
    z2_lambda2->add_option("--form", zl2.form, "coefficient form")
        ->check(CLI::IsMember({"composed", "closed-printed", "closed-corrected"}))
        ->default_val("composed");
    add_format(z2_lambda2, zl2.format);
    z2_lambda2->callback(
        [&] { runner = [&] { return run_z2_lambda2(zl2.branch, zl2.form, parse_format(zl2.format)); }; });

    struct {
        int max_branch = 0;
        std::string format;
    } chk;
    auto* z2_check = z2cmd->add_subcommand("check", "compare closed and composed coefficient forms");
    z2_check->add_option("--max-branch", chk.max_branch, "largest branch total to include")->required();
    add_format(z2_check, chk.format);
    z2_check->callback([&] { runner = [&] { return run_z2_check(chk.max_branch, parse_format(chk.format)); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << std::flush;
        return 1;
    }

    try {
        return runner();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

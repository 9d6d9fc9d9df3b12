// Command-line front end: analyze a ring, construct mid(R), sweep the Zn
// family, and run the proposition verifier over a corpus.
//
// Exit codes: 0 success, 1 gate failed, 2 parse/semantic error, 3 cap or
// budget exceeded, 4 internal invariant violation, 5 no unique minimal prime.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "midring/analysis.hpp"
#include "midring/mid.hpp"
#include "midring/ringspec.hpp"

namespace {

using nlohmann::ordered_json;

int exit_code_for(const midring::Error &e) {
    const std::string &kind = e.kind();
    if (kind == "GateFailed")
        return 1;
    if (kind == "OrderCapExceeded" || kind == "LatticeBudgetExceeded")
        return 3;
    if (kind == "InvariantViolation")
        return 4;
    if (kind == "NonUniqueMinimalPrime")
        return 5;
    if (kind == "ParseError" || kind == "SemanticError" || kind == "CorpusUnreadable" ||
        kind == "NonzeroRingRequired" || kind == "MonicModulusRequired" ||
        kind == "UnsupportedBaseRing" || kind == "ImproperIdealQuotient")
        return 2;
    return 4; // anything else is an internal problem
}

std::string join(const std::vector<std::string> &items, const char *sep = ", ") {
    std::string out;
    for (const std::string &item : items) {
        if (!out.empty())
            out += sep;
        out += item;
    }
    return out;
}

std::string brace_set(const std::vector<std::string> &items) {
    return "{" + join(items) + "}";
}

void print_analysis(const midring::AnalysisRecord &rec) {
    std::cout << "ring: " << rec.ring << "\n";
    std::cout << "order: " << rec.order << "\n";
    std::cout << "units: " << rec.units << "\n";
    std::cout << "zero divisors: " << (rec.zero_divisors.empty() ? "(none)" : join(rec.zero_divisors))
              << "\n";
    if (rec.gate_passes) {
        std::cout << "gate: passes, ideal generated by zero-divisors = " << brace_set(rec.gate_ideal)
                  << "\n";
    } else {
        std::cout << "gate: FAILS, ideal generated by zero-divisors is the whole ring (unit witness "
                  << *rec.unit_witness << ")\n";
    }
    if (rec.z_ideal)
        std::cout << "z(R): " << brace_set(*rec.z_ideal) << "\n";
    if (rec.error)
        std::cout << "error: " << *rec.error << "\n";
    if (rec.mid) {
        std::cout << "mid(R): order " << rec.mid->order << ", elements " << join(rec.mid->elements)
                  << "\n";
        if (rec.mid->is_domain)
            std::cout << "integral domain: " << (*rec.mid->is_domain ? "yes" : "NO") << "\n";
    }
}

int finish_analysis(const midring::AnalysisRecord &rec) {
    if (!rec.error)
        return 0;
    if (*rec.error == "GateFailed") {
        std::cerr << "gate failed: zero-divisors generate the whole ring (unit " << *rec.unit_witness
                  << ")\n";
        return 1;
    }
    std::cerr << "error: " << *rec.error << ": no smallest prime exists over the zero-divisor ideal\n";
    return 5;
}

int run_analyze(const std::string &spec, bool json, const midring::PipelineOptions &options) {
    const midring::AnalysisRecord rec = midring::analyze_ring(spec, options);
    if (json)
        std::cout << midring::to_json(rec).dump(2) << "\n";
    else
        print_analysis(rec);
    return finish_analysis(rec);
}

void print_table(const midring::FiniteRing &r, bool multiplicative) {
    std::size_t width = 0;
    for (const std::string &name : r.element_names())
        width = std::max(width, name.size());
    width += 2;
    auto cell = [&](const std::string &s) {
        std::cout << s << std::string(width - s.size(), ' ');
    };
    cell("");
    for (std::size_t b = 0; b < r.order(); ++b)
        cell(r.name(b));
    std::cout << "\n";
    for (std::size_t a = 0; a < r.order(); ++a) {
        cell(r.name(a));
        for (std::size_t b = 0; b < r.order(); ++b)
            cell(r.name(multiplicative ? r.mul(a, b) : r.add(a, b)));
        std::cout << "\n";
    }
}

int run_mid(const std::string &spec, bool json, bool no_certify, std::size_t table_limit,
            const midring::PipelineOptions &options) {
    const midring::RingExpr expr = midring::parse_ring_spec(spec);
    const midring::FiniteRing ring = midring::eval_ring_expr(expr, options.order_cap);
    const midring::MidResult result =
        midring::mid(ring, /*certify=*/!no_certify, options.lattice_budget);
    const midring::FiniteRing &m = result.quotient.quotient;

    std::vector<std::string> z_names;
    for (midring::ElementId e : result.z_ideal.elements())
        z_names.push_back(ring.name(e));

    if (json) {
        ordered_json j;
        j["ring"] = midring::format_ring_expr(expr);
        j["z_ideal"] = z_names;
        j["order"] = m.order();
        j["elements"] = m.element_names();
        if (result.certificate)
            j["is_domain"] = result.certificate->is_domain;
        if (m.order() < table_limit) {
            ordered_json add = ordered_json::array(), mul = ordered_json::array();
            for (std::size_t a = 0; a < m.order(); ++a) {
                ordered_json add_row = ordered_json::array(), mul_row = ordered_json::array();
                for (std::size_t b = 0; b < m.order(); ++b) {
                    add_row.push_back(m.name(m.add(a, b)));
                    mul_row.push_back(m.name(m.mul(a, b)));
                }
                add.push_back(std::move(add_row));
                mul.push_back(std::move(mul_row));
            }
            j["add"] = std::move(add);
            j["mul"] = std::move(mul);
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::cout << "mid(" << midring::format_ring_expr(expr) << ") = quotient by z(R) = "
              << brace_set(z_names) << "\n";
    std::cout << "order: " << m.order() << "\n";
    std::cout << "elements: " << join(m.element_names()) << "\n";
    if (result.certificate)
        std::cout << "integral domain: " << (result.certificate->is_domain ? "yes" : "NO") << " ("
                  << result.certificate->pairs_checked << " pairs checked)\n";
    if (m.order() < table_limit) {
        std::cout << "addition table:\n";
        print_table(m, false);
        std::cout << "multiplication table:\n";
        print_table(m, true);
    } else {
        std::cout << "(tables omitted: order " << m.order() << " >= table limit " << table_limit
                  << ")\n";
    }
    return 0;
}

int run_scan(std::size_t max, bool json, const midring::PipelineOptions &options) {
    const midring::ScanResult scan = midring::scan_zn(max, options);
    if (json) {
        ordered_json j;
        j["family"] = "zn";
        j["max"] = max;
        j["total"] = scan.records.size();
        j["gate_passed"] = scan.gate_passed;
        ordered_json records = ordered_json::array();
        for (const midring::AnalysisRecord &rec : scan.records)
            records.push_back(midring::to_json(rec));
        j["records"] = std::move(records);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    for (const midring::AnalysisRecord &rec : scan.records) {
        if (rec.gate_passes && rec.mid) {
            std::cout << rec.ring << ": gate passes, z(R) = " << brace_set(*rec.z_ideal)
                      << ", mid order " << rec.mid->order << "\n";
        } else if (rec.error && *rec.error == "GateFailed") {
            std::cout << rec.ring << ": gate FAILS (unit " << *rec.unit_witness << ")\n";
        } else {
            std::cout << rec.ring << ": error " << rec.error.value_or("unknown") << "\n";
        }
    }
    std::cout << "gate passed " << scan.gate_passed << "/" << scan.records.size() << "\n";
    return 0;
}

int run_verify(const std::string &corpus, bool json, const midring::PipelineOptions &options) {
    const std::vector<std::string> specs =
        corpus == "builtin" ? midring::builtin_corpus() : midring::read_corpus_file(corpus);
    const midring::VerifySummary summary = midring::verify_corpus(specs, options);

    if (json) {
        ordered_json j;
        j["corpus"] = corpus;
        j["total"] = summary.total;
        j["gate_passed"] = summary.gate_passed;
        j["certified"] = summary.certified;
        ordered_json rings = ordered_json::array();
        for (const midring::VerifyRingResult &row : summary.rings) {
            ordered_json rj;
            rj["ring"] = row.ring;
            rj["order"] = row.order;
            rj["gate_passes"] = row.gate_passes;
            if (row.is_domain)
                rj["is_domain"] = *row.is_domain;
            if (row.counterexample)
                rj["counterexample"] = *row.counterexample;
            if (row.error)
                rj["error"] = *row.error;
            rings.push_back(std::move(rj));
        }
        j["rings"] = std::move(rings);
        std::cout << j.dump(2) << "\n";
    } else {
        for (const midring::VerifyRingResult &row : summary.rings) {
            if (row.error)
                std::cout << row.ring << ": error " << *row.error << "\n";
            else if (row.is_domain && !*row.is_domain)
                std::cout << row.ring << ": PROPOSITION FAILED, " << *row.counterexample << "\n";
        }
        std::cout << "total " << summary.total << ", gate-passed " << summary.gate_passed
                  << ", certified " << summary.certified << "\n";
    }

    if (!summary.proposition_holds()) {
        for (const midring::VerifyRingResult &row : summary.rings)
            if (row.is_domain && !*row.is_domain) {
                std::cerr << "error: InvariantViolation: mid(" << row.ring
                          << ") is not an integral domain: " << *row.counterexample << "\n";
                break;
            }
        return 4;
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    std::size_t default_cap = midring::kDefaultOrderCap;
    if (const char *env = std::getenv("MIDRING_MAX_ORDER")) {
        try {
            default_cap = std::stoul(env);
        } catch (const std::exception &) {
            std::cerr << "error: SemanticError: invalid MIDRING_MAX_ORDER value: " << env << "\n";
            return 2;
        }
    }

    CLI::App app{"finite commutative ring analyzer: zero-divisors, z(R), and mid(R) = R/z(R)"};
    app.require_subcommand(1);

    std::string spec;
    std::string corpus = "builtin";
    std::string family;
    std::size_t max_n = 0;
    std::size_t max_order = default_cap;
    std::size_t table_limit = 32;
    bool json = false;
    bool no_certify = false;

    CLI::App *analyze = app.add_subcommand("analyze", "run the full pipeline on one ring spec");
    analyze->add_option("spec", spec, "ring spec, e.g. \"Zn(5)\"")->required();
    analyze->add_flag("--json", json, "emit a JSON record");
    analyze->add_option("--max-order", max_order, "order cap for constructed rings");
    analyze->add_flag("--no-certify", no_certify, "skip the integral-domain certificate");

    CLI::App *mid_cmd = app.add_subcommand("mid", "construct mid(R) and print its tables");
    mid_cmd->add_option("spec", spec, "ring spec, e.g. \"Zn(4)\"")->required();
    mid_cmd->add_flag("--json", json, "emit JSON");
    mid_cmd->add_option("--max-order", max_order, "order cap for constructed rings");
    mid_cmd->add_flag("--no-certify", no_certify, "skip the integral-domain certificate");
    mid_cmd->add_option("--table-limit", table_limit,
                        "print tables only when mid(R) has order below this");

    CLI::App *scan = app.add_subcommand("scan", "analyze a whole family of rings");
    scan->add_option("family", family, "ring family (only: zn)")
        ->required()
        ->check(CLI::IsMember({"zn"}));
    scan->add_option("--max", max_n, "largest n to scan")->required();
    scan->add_flag("--json", json, "emit JSON");
    scan->add_option("--max-order", max_order, "order cap for constructed rings");

    CLI::App *verify = app.add_subcommand("verify", "certify mid(R) over a ring corpus");
    verify->add_option("--corpus", corpus, "corpus file path, or \"builtin\"");
    verify->add_flag("--json", json, "emit JSON");
    verify->add_option("--max-order", max_order, "order cap for constructed rings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    midring::PipelineOptions options;
    options.order_cap = max_order;
    options.certify = !no_certify;

    try {
        if (app.got_subcommand(analyze))
            return run_analyze(spec, json, options);
        if (app.got_subcommand(mid_cmd))
            return run_mid(spec, json, no_certify, table_limit, options);
        if (app.got_subcommand(scan))
            return run_scan(max_n, json, options);
        return run_verify(corpus, json, options);
    } catch (const midring::GateFailed &e) {
        std::cerr << "gate failed: " << e.what() << "\n";
        return 1;
    } catch (const midring::Error &e) {
        std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}

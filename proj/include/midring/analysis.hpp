#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "midring/corpus.hpp"
#include "midring/mid.hpp"
#include "midring/ringspec.hpp"

namespace midring {

/// A corpus file could not be opened or read.
class CorpusUnreadable : public Error {
  public:
    explicit CorpusUnreadable(const std::string &message) : Error("CorpusUnreadable", message) {}
};

/// Knobs shared by the pipeline entry points. The CLI surfaces them as
/// --max-order and --no-certify; MIDRING_MAX_ORDER overrides the cap default.
struct PipelineOptions {
    std::size_t order_cap = kDefaultOrderCap;
    std::size_t lattice_budget = kDefaultLatticeBudget;
    bool certify = true;
};

/// Everything cmd_analyze reports about one ring. Element references are
/// display names, not ids, so records stay stable across enumeration changes.
/// Exactly one of z_ideal / error is present.
struct AnalysisRecord {
    struct MidSummary {
        std::size_t order = 0;
        std::vector<std::string> elements;
        std::optional<bool> is_domain; // absent when certification was skipped
        bool operator==(const MidSummary &) const = default;
    };

    std::string ring; // canonical spec string
    std::size_t order = 0;
    std::size_t units = 0;
    std::vector<std::string> zero_divisors;
    bool gate_passes = false;
    std::vector<std::string> gate_ideal;
    std::optional<std::string> unit_witness;
    std::optional<std::vector<std::string>> z_ideal;
    std::optional<std::string> error; // "GateFailed" or "NonUniqueMinimalPrime"
    std::optional<MidSummary> mid;

    bool operator==(const AnalysisRecord &) const = default;
};

namespace detail {

inline std::vector<std::string> element_names(const FiniteRing &r,
                                              const std::vector<ElementId> &ids) {
    std::vector<std::string> names;
    names.reserve(ids.size());
    for (ElementId e : ids)
        names.push_back(r.name(e));
    return names;
}

} // namespace detail

/// Runs the full pipeline on one parsed ring. GateFailed and
/// NonUniqueMinimalPrime end up in the record's error field; parse, cap,
/// budget, and invariant errors propagate as exceptions.
inline AnalysisRecord analyze_ring(const std::string &spec_text,
                                   const PipelineOptions &options = {}) {
    const RingExpr expr = parse_ring_spec(spec_text);
    const FiniteRing ring = eval_ring_expr(expr, options.order_cap);

    AnalysisRecord record;
    record.ring = format_ring_expr(expr);
    record.order = ring.order();
    record.units = units(ring).size();
    record.zero_divisors = detail::element_names(ring, zero_divisors(ring).divisors);

    GateReport gate = gate_check(ring);
    record.gate_passes = gate.passes;
    record.gate_ideal = detail::element_names(ring, gate.ideal.elements());
    if (gate.unit_witness)
        record.unit_witness = ring.name(*gate.unit_witness);
    if (!gate.passes) {
        record.error = "GateFailed";
        return record;
    }

    std::optional<Ideal> z;
    try {
        z = unique_minimal_prime_over(ring, gate.ideal, options.lattice_budget);
    } catch (const NonUniqueMinimalPrime &) {
        record.error = "NonUniqueMinimalPrime";
        return record;
    }
    record.z_ideal = detail::element_names(ring, z->elements());

    const QuotientRing quotient = quotient_ring(ring, *z);
    AnalysisRecord::MidSummary summary;
    summary.order = quotient.quotient.order();
    summary.elements = quotient.quotient.element_names();
    if (options.certify) {
        const DomainCertificate certificate = certify_integral_domain(quotient.quotient);
        if (!certificate.is_domain) {
            const FiniteRing &m = quotient.quotient;
            const auto &[a, b] = *certificate.counterexample;
            throw InvariantViolation("mid(" + record.ring + ") is not an integral domain: " +
                                     m.name(a) + " * " + m.name(b) + " = " + m.name(m.zero()));
        }
        summary.is_domain = true;
    }
    record.mid = std::move(summary);
    return record;
}

inline nlohmann::ordered_json to_json(const AnalysisRecord &record) {
    nlohmann::ordered_json j;
    j["ring"] = record.ring;
    j["order"] = record.order;
    j["units"] = record.units;
    j["zero_divisors"] = record.zero_divisors;
    nlohmann::ordered_json gate;
    gate["passes"] = record.gate_passes;
    gate["ideal"] = record.gate_ideal;
    if (record.unit_witness)
        gate["unit_witness"] = *record.unit_witness;
    j["gate"] = std::move(gate);
    if (record.z_ideal)
        j["z_ideal"] = *record.z_ideal;
    if (record.error)
        j["error"] = *record.error;
    if (record.mid) {
        nlohmann::ordered_json m;
        m["order"] = record.mid->order;
        m["elements"] = record.mid->elements;
        if (record.mid->is_domain)
            m["is_domain"] = *record.mid->is_domain;
        j["mid"] = std::move(m);
    }
    return j;
}

inline AnalysisRecord record_from_json(const nlohmann::ordered_json &j) {
    AnalysisRecord record;
    record.ring = j.at("ring").get<std::string>();
    record.order = j.at("order").get<std::size_t>();
    record.units = j.at("units").get<std::size_t>();
    record.zero_divisors = j.at("zero_divisors").get<std::vector<std::string>>();
    const auto &gate = j.at("gate");
    record.gate_passes = gate.at("passes").get<bool>();
    record.gate_ideal = gate.at("ideal").get<std::vector<std::string>>();
    if (gate.contains("unit_witness"))
        record.unit_witness = gate.at("unit_witness").get<std::string>();
    if (j.contains("z_ideal"))
        record.z_ideal = j.at("z_ideal").get<std::vector<std::string>>();
    if (j.contains("error"))
        record.error = j.at("error").get<std::string>();
    if (j.contains("mid")) {
        AnalysisRecord::MidSummary summary;
        const auto &m = j.at("mid");
        summary.order = m.at("order").get<std::size_t>();
        summary.elements = m.at("elements").get<std::vector<std::string>>();
        if (m.contains("is_domain"))
            summary.is_domain = m.at("is_domain").get<bool>();
        record.mid = std::move(summary);
    }
    return record;
}

/// One record per n in [2, max] for the Zn family.
struct ScanResult {
    std::vector<AnalysisRecord> records;
    std::size_t gate_passed = 0;
};

inline ScanResult scan_zn(std::size_t max, const PipelineOptions &options = {}) {
    if (max < 2)
        throw SemanticError("scan requires max >= 2, got " + std::to_string(max));
    if (max > options.order_cap)
        throw OrderCapExceeded("scan max " + std::to_string(max) + " exceeds the order cap " +
                               std::to_string(options.order_cap));
    ScanResult result;
    for (std::size_t n = 2; n <= max; ++n) {
        result.records.push_back(analyze_ring("Zn(" + std::to_string(n) + ")", options));
        if (result.records.back().gate_passes)
            ++result.gate_passed;
    }
    return result;
}

/// Per-ring outcome of a corpus verification run.
struct VerifyRingResult {
    std::string ring;
    std::size_t order = 0;
    bool gate_passes = false;
    std::optional<bool> is_domain;              // present iff the certificate ran
    std::optional<std::string> counterexample;  // "a * b = 0" when is_domain is false
    std::optional<std::string> error;           // non-fatal per-line error kind
};

struct VerifySummary {
    std::size_t total = 0;
    std::size_t gate_passed = 0;
    std::size_t certified = 0;
    std::vector<VerifyRingResult> rings;

    bool proposition_holds() const {
        for (const VerifyRingResult &r : rings)
            if (r.is_domain && !*r.is_domain)
                return false;
        return true;
    }
};

/// Runs verify_proposition over every gate-passing ring of the corpus.
/// Corpus lines are independent: cap, budget, and uniqueness failures are
/// recorded per ring and do not stop the run. Parse and semantic errors
/// propagate (a corpus with unparseable lines is rejected outright).
inline VerifySummary verify_corpus(const std::vector<std::string> &specs,
                                   const PipelineOptions &options = {}) {
    VerifySummary summary;
    for (const std::string &spec : specs) {
        const RingExpr expr = parse_ring_spec(spec);
        ++summary.total;
        VerifyRingResult row;
        row.ring = format_ring_expr(expr);
        try {
            const FiniteRing ring = eval_ring_expr(expr, options.order_cap);
            row.order = ring.order();
            GateReport gate = gate_check(ring);
            row.gate_passes = gate.passes;
            if (gate.passes) {
                ++summary.gate_passed;
                const Ideal z = unique_minimal_prime_over(ring, gate.ideal, options.lattice_budget);
                const QuotientRing quotient = quotient_ring(ring, z);
                const DomainCertificate cert = certify_integral_domain(quotient.quotient);
                row.is_domain = cert.is_domain;
                if (cert.is_domain) {
                    ++summary.certified;
                } else {
                    const FiniteRing &m = quotient.quotient;
                    const auto &[a, b] = *cert.counterexample;
                    row.counterexample = m.name(a) + " * " + m.name(b) + " = " + m.name(m.zero());
                }
            }
        } catch (const NonUniqueMinimalPrime &e) {
            row.error = e.kind();
        } catch (const OrderCapExceeded &e) {
            row.error = e.kind();
        } catch (const LatticeBudgetExceeded &e) {
            row.error = e.kind();
        }
        summary.rings.push_back(std::move(row));
    }
    return summary;
}

/// Reads a corpus file: UTF-8, one spec per line, '#' starts a comment,
/// blank lines ignored. Throws CorpusUnreadable when the file cannot be
/// opened.
inline std::vector<std::string> read_corpus_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw CorpusUnreadable("cannot open corpus file: " + path);
    std::vector<std::string> specs;
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        const std::size_t first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos)
            continue;
        const std::size_t last = line.find_last_not_of(" \t\r\n");
        specs.push_back(line.substr(first, last - first + 1));
    }
    return specs;
}

} // namespace midring

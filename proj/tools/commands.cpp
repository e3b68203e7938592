#include "commands.hpp"

#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>

#include "lemma_suite.hpp"
#include "vkdim/bounds.hpp"
#include "vkdim/octa.hpp"
#include "vkdim/serialize.hpp"
#include "zoo.hpp"

namespace vkdim::tools {

using nlohmann::json;

json read_json(const std::string& path)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw FormatError("cannot open '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

SimplicialComplex load_complex(const std::string& path)
{
    SimplicialComplex k;
    try {
        k = complex_from_json(read_json(path));
    } catch (const ComplexError& e) {
        throw FormatError(path + ": " + e.what());
    }
    if (k.empty()) throw FormatError(path + ": empty complex");
    return k;
}

namespace {

struct Outcome {
    json report;
    std::string summary;
    std::string error;
    bool determined = true;
    std::optional<json> certificate;
};

Outcome analyze_one(const std::string& path, const Flags& flags)
{
    Outcome o;
    try {
        const SimplicialComplex l = load_complex(path);
        if (!flags.allow_non_flag) {
            const auto w = is_flag(l);
            if (!w.is_flag()) {
                throw FormatError(path + ": complex is not flag (missing simplex " +
                                  json(l.labels_of(*w.missing_clique)).dump() + "); pass --allow-non-flag");
            }
        }
        AnalysisOptions options;
        options.search.max_combination = flags.search_budget;
        options.vanishing.integral = flags.integral;
        options.vanishing.max_cells = flags.max_cells;
        const DimensionReport r = analyze(l, options);
        o.report = to_json(l, r);
        if (r.certificate) o.certificate = to_json(l, *r.certificate);
        o.determined = r.determined();
        std::ostringstream s;
        s << path << ": gd " << r.gd << ", l2dim " << (r.l2dim ? std::to_string(*r.l2dim) : "undefined")
          << ", vkdim(OL) " << describe(r.vkdim_ol) << ", embdim(OL) " << describe(r.embdim_ol);
        if (r.actdim) {
            s << ", actdim(A_L) " << describe(*r.actdim);
            if (!(*r.actdim_with_caveats == *r.actdim)) s << " (with caveats " << describe(*r.actdim_with_caveats) << ")";
        }
        s << ", conjecture " << to_string(r.conjecture);
        for (const auto& w : r.warnings) s << "\n  warning: " << w;
        o.summary = s.str();
    } catch (const std::exception& e) {
        o.error = e.what();
    }
    return o;
}

}  // namespace

int cmd_analyze(const std::vector<std::string>& inputs, const Flags& flags, const std::string& certificate_out,
                std::ostream& out, std::ostream& err)
{
    if (inputs.empty()) {
        err << "error: no input files\n";
        return exit_error;
    }
    if (!certificate_out.empty() && inputs.size() != 1) {
        err << "error: --certificate needs exactly one input\n";
        return exit_error;
    }
    std::vector<std::future<Outcome>> jobs;
    for (const auto& path : inputs) {
        jobs.push_back(std::async(inputs.size() > 1 ? std::launch::async : std::launch::deferred, analyze_one,
                                  path, flags));
    }
    std::vector<Outcome> results;
    for (auto& j : jobs) results.push_back(j.get());

    int code = exit_ok;
    for (const auto& r : results) {
        if (!r.error.empty()) {
            err << "error: " << r.error << "\n";
            code = exit_error;
        } else {
            err << r.summary << "\n";
            if (flags.strict && !r.determined && code == exit_ok) code = exit_undetermined;
        }
    }
    if (inputs.size() == 1) {
        if (results[0].error.empty()) out << results[0].report.dump(2) << "\n";
    } else {
        json all = json::array();
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            json entry = {{"input", inputs[i]}};
            if (results[i].error.empty()) {
                entry["report"] = results[i].report;
            } else {
                entry["error"] = results[i].error;
            }
            all.push_back(entry);
        }
        out << all.dump(2) << "\n";
    }
    if (!certificate_out.empty() && results[0].error.empty()) {
        if (!results[0].certificate) {
            err << "no top-degree certificate found; nothing written to " << certificate_out << "\n";
        } else {
            std::ofstream f(certificate_out);
            f << results[0].certificate->dump(2) << "\n";
            if (!f) {
                err << "error: cannot write " << certificate_out << "\n";
                return exit_error;
            }
        }
    }
    return code;
}

int cmd_generate(const std::string& name, const std::vector<std::string>& params, const Flags& flags,
                 std::ostream& out, std::ostream& err)
{
    try {
        const SimplicialComplex k = generate(make_expression(name, params), flags.seed);
        json j = to_json(k);
        j["generator"] = make_expression(name, params);
        out << j.dump(2) << "\n";
        return exit_ok;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
}

int cmd_verify(const std::string& certificate, const std::string& complex, std::ostream& out, std::ostream& err)
{
    try {
        const SimplicialComplex l = load_complex(complex);
        const CycleCertificate cert = certificate_from_json(l, read_json(certificate));
        const VerificationResult v = verify_certificate(l, cert);
        json j = {{"schema", "vkdim.verification/1"}, {"passed", v.passed}};
        if (!v.passed) {
            j["failed_check"] = v.failed_check;
            j["detail"] = v.detail;
            err << "FAIL: " << v.failed_check << ": " << v.detail << "\n";
        } else {
            err << "PASS: certificate re-checked from scratch\n";
        }
        out << j.dump(2) << "\n";
        return v.passed ? exit_ok : exit_check_failed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
}

int cmd_lemma_suite(std::uint64_t seed, std::size_t count, bool inject_sign_bug, std::ostream& out, std::ostream& err)
{
    LemmaSuiteOptions o;
    o.seed = seed;
    o.count = count;
    o.inject_sign_bug = inject_sign_bug;
    const LemmaSuiteResult r = run_lemma_suite(o);
    json j = {{"schema", schema::lemma_suite},
              {"seed", seed},
              {"count", count},
              {"complexes", r.complexes},
              {"pullback_cells", r.counters.pullback_cells},
              {"cycle_delta_pairs", r.counters.pairs},
              {"star_condition_pairs", r.counters.star_pairs},
              {"moment_curve_cells", r.counters.oracle_cells},
              {"passed", r.passed()}};
    if (r.failure) {
        j["failure"] = {{"lemma", r.failure->lemma},
                        {"sample", r.failure->sample},
                        {"detail", r.failure->detail},
                        {"complex", to_json(r.failure->complex)}};
        err << "FAIL: " << r.failure->lemma << " on sample " << r.failure->sample << ": " << r.failure->detail
            << "\n";
    } else {
        err << "PASS: " << r.complexes << " complexes, " << r.counters.pullback_cells << " cells, "
            << r.counters.pairs << " (M, delta) pairs\n";
    }
    out << j.dump(2) << "\n";
    return r.passed() ? exit_ok : exit_check_failed;
}

int cmd_homology(const std::string& input, std::ostream& out, std::ostream& err)
{
    try {
        out << homology_json(load_complex(input)).dump(2) << "\n";
        return exit_ok;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
}

int cmd_octahedralize(const std::string& input, std::ostream& out, std::ostream& err)
{
    try {
        out << to_json(octahedralize(load_complex(input)).complex()).dump(2) << "\n";
        return exit_ok;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
}

}  // namespace vkdim::tools

// Command-line front end: generate certificate bundles, verify files,
// convert between full and compressed cycle forms.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ocycle/base_cases.hpp"
#include "ocycle/builders.hpp"
#include "ocycle/io.hpp"
#include "ocycle/verify.hpp"

namespace {

using nlohmann::json;
using namespace ocycle;

constexpr int kExitClean = 0;
constexpr int kExitDefect = 1;
constexpr int kExitUsage = 2;

// certificate for a doubling base: shipped listing when we have one,
// otherwise the AF recursion
OcycleCertificate base_certificate(int v) {
    const auto& orders = base_case_orders();
    if (std::find(orders.begin(), orders.end(), v) != orders.end()) return ocycle_base_case(v);
    if (v >= 15 && admissible_order(v)) return ocycle_af(v);
    throw std::invalid_argument("no ocycle route for base order " + std::to_string(v));
}

OcycleCertificate generate_route(int n, const std::string& route) {
    if (!admissible_order(n))
        throw std::invalid_argument("order " + std::to_string(n) +
                                    " not admissible: an STS(v) exists iff v = 1 or 3 (mod 6)");
    if (route == "af") return ocycle_af(n);
    if (route == "any") return ocycle_any(n);
    if (route == "bose") {
        if (n % 6 != 3 || n < 9)
            throw std::invalid_argument("bose route needs n = 3 (mod 6), n >= 9");
        return ocycle_bose(n / 3);
    }
    if (route == "skolem") {
        if (n % 6 != 1 || n < 7)
            throw std::invalid_argument("skolem route needs n = 1 (mod 6), n >= 7");
        return ocycle_skolem((n - 1) / 6);
    }
    if (route == "product") {
        for (int u = 7; u * u <= n; ++u) {
            if (n % u != 0) continue;
            int w = n / u;
            if (admissible_order(u) && admissible_order(w) && w >= 7)
                return ocycle_product(ocycle_any(u), ocycle_any(w));
        }
        throw std::invalid_argument("order " + std::to_string(n) +
                                    " has no factorization into admissible orders >= 7");
    }
    if (route == "d2v1") {
        if (n % 2 == 0 || (n - 1) / 2 < 7 || !admissible_order((n - 1) / 2))
            throw std::invalid_argument("d2v1 route needs n = 2v+1 with admissible v >= 7");
        return ocycle_double_plus_one(base_certificate((n - 1) / 2));
    }
    if (route == "d2v7") {
        if (n % 2 == 0 || (n - 7) / 2 < 15 || !admissible_order((n - 7) / 2))
            throw std::invalid_argument("d2v7 route needs n = 2v+7 with admissible v >= 15");
        return ocycle_double_plus_seven(base_certificate((n - 7) / 2));
    }
    throw std::invalid_argument("unknown route '" + route + "'");
}

std::string provenance_tree(const Provenance& p, int indent = 0) {
    std::string out(indent, ' ');
    out += p.construction;
    if (!p.params.empty()) {
        out += "(";
        bool first = true;
        for (const auto& [k, v] : p.params) {
            if (!first) out += ", ";
            out += k + "=" + std::to_string(v);
            first = false;
        }
        out += ")";
    }
    out += "\n";
    for (const auto& c : p.children) out += provenance_tree(*c, indent + 2);
    return out;
}

int run_generate(const std::vector<int>& orders, const std::string& route,
                 const std::string& out_dir, const std::string& format) {
    for (int n : orders) {
        OcycleCertificate cert = generate_route(n, route);
        std::string dir = out_dir + "/sts_" + std::to_string(n) + "_" + route;
        json params = {{"order", n}, {"route", route}};
        std::string command = "generate " + std::to_string(n) + " --route " + route;
        RunManifest manifest = write_certificate_bundle(dir, cert, command, params);

        if (format == "json") {
            json j = {{"order", n},
                      {"blocks", cert.ts.block_count()},
                      {"route", route},
                      {"dir", dir},
                      {"provenance", cert.provenance.to_json()},
                      {"outputs", manifest.to_json()["outputs"]}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "v=" << n << " b=" << cert.ts.block_count() << " route=" << route
                      << " -> " << dir << "\n"
                      << provenance_tree(cert.provenance, 2);
            if (cert.ts.block_count() <= 40)
                std::cout << "  compressed: "
                          << display_compressed(compress(canonical_rotation(cert.cycle))) << "\n";
        }
    }
    return kExitClean;
}

int run_verify(const std::string& sts_path, const std::string& ocycle_path, bool check_af,
               long long budget, const std::string& format) {
    json out;
    bool clean = true;

    TripleSystem ts = [&] {
        std::string text = read_text_file(sts_path);
        try {
            return read_sts_text(text);
        } catch (const ValidationError& e) {
            // parsed but structurally invalid: report and bail out below
            out["sts"] = {{"clean", false}, {"report", e.report().to_string()}};
            throw;
        }
    }();
    ValidationReport vr = validate_sts(ts.order(), ts.blocks());
    out["sts"] = {{"clean", vr.clean()},
                  {"order", ts.order()},
                  {"blocks", ts.block_count()},
                  {"defects", vr.total_defects}};
    clean = clean && vr.clean();

    if (!ocycle_path.empty()) {
        int v_in = 0;
        OverlapCycle c = read_ocycle_text(read_text_file(ocycle_path), &v_in);
        if (v_in != ts.order()) {
            out["ocycle"] = {{"clean", false},
                             {"report", "cycle order " + std::to_string(v_in) +
                                            " does not match system order " +
                                            std::to_string(ts.order())}};
            clean = false;
        } else {
            OcycleReport orep = validate_ocycle(ts, c);
            out["ocycle"] = {{"clean", orep.clean()},
                             {"blocks", static_cast<long long>(c.size())},
                             {"defects", orep.total_defects()},
                             {"report", orep.clean() ? "" : orep.to_string()}};
            clean = clean && orep.clean();
        }
    }

    if (check_af) {
        AutomorphismReport ar = automorphism_order(ts, budget);
        out["af"] = ar.to_json();
        out["af"]["is_af"] = ar.complete ? json(ar.group_order == 1) : json(nullptr);
        if (!ar.complete)
            out["af"]["note"] = "inconclusive: node budget exhausted";
        else if (ar.group_order != 1)
            clean = false;
    }

    out["clean"] = clean;
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "sts: " << (out["sts"]["clean"].get<bool>() ? "clean" : "DEFECTS") << " (v="
                  << ts.order() << ", b=" << ts.block_count() << ")\n";
        if (!vr.clean()) std::cout << vr.to_string() << "\n";
        if (out.contains("ocycle")) {
            std::cout << "ocycle: "
                      << (out["ocycle"]["clean"].get<bool>() ? "clean" : "DEFECTS") << "\n";
            std::string repstr = out["ocycle"].value("report", std::string());
            if (!repstr.empty()) std::cout << repstr << "\n";
        }
        if (out.contains("af")) {
            if (out["af"]["is_af"].is_null())
                std::cout << "af: inconclusive (budget exhausted)\n";
            else
                std::cout << "af: " << (out["af"]["is_af"].get<bool>() ? "yes (group order 1)"
                                                                       : "not AF (group order " +
                                            std::to_string(out["af"]["order"].get<long long>()) +
                                            ")")
                          << "\n";
        }
    }
    return clean ? kExitClean : kExitDefect;
}

int run_convert(const std::string& in_path, bool do_compress, const std::string& sts_path,
                const std::string& out_path) {
    std::string result;
    if (do_compress) {
        int v = 0;
        OverlapCycle c = read_ocycle_text(read_text_file(in_path), &v);
        result = write_compressed_text(v, compress(c));
    } else {
        TripleSystem ts = read_sts_text(read_text_file(sts_path));
        int v = 0;
        CompressedCycle cc = read_compressed_text(read_text_file(in_path), &v);
        if (v != ts.order())
            throw std::invalid_argument("compressed cycle order " + std::to_string(v) +
                                        " does not match system order " +
                                        std::to_string(ts.order()));
        result = write_ocycle_text(v, decompress(ts, cc));
    }
    if (out_path.empty())
        std::cout << result;
    else
        write_text_file(out_path, result);
    return kExitClean;
}

std::optional<std::pair<int, int>> parse_sweep(const std::string& s) {
    size_t pos = s.find("..");
    if (pos == std::string::npos) return std::nullopt;
    try {
        int a = std::stoi(s.substr(0, pos));
        int b = std::stoi(s.substr(pos + 2));
        if (a < 1 || b < a) return std::nullopt;
        return std::make_pair(a, b);
    } catch (...) {
        return std::nullopt;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steiner triple systems with 1-overlap cycles"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "construct an STS + 1-ocycle bundle");
    int order = 0;
    std::string route = "any", out_dir = "ocycle-out", sweep, format = "text";
    gen->add_option("order", order, "design order (omit with --sweep)");
    gen->add_option("--route", route, "af | any | bose | skolem | product | d2v1 | d2v7")
        ->check(CLI::IsMember({"af", "any", "bose", "skolem", "product", "d2v1", "d2v7"}));
    gen->add_option("--out", out_dir, "output directory");
    gen->add_option("--sweep", sweep, "range of orders A..B (admissible ones are built)");
    gen->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

    // verify
    auto* ver = app.add_subcommand("verify", "validate STS / ocycle files");
    std::string sts_path, ocycle_path;
    bool check_af = false;
    long long budget = kDefaultAutomorphismBudget;
    std::string vformat = "text";
    ver->add_option("sts", sts_path, "STS file")->required();
    ver->add_option("ocycle", ocycle_path, "OCYCLE file");
    ver->add_flag("--af", check_af, "also count automorphisms; clean only if AF");
    ver->add_option("--budget", budget, "automorphism search node budget");
    ver->add_option("--format", vformat, "text | json")->check(CLI::IsMember({"text", "json"}));

    // convert
    auto* conv = app.add_subcommand("convert", "full <-> compressed cycle form");
    std::string in_path, dec_sts, out_path;
    bool do_compress = false;
    conv->add_option("input", in_path, "input file")->required();
    auto* copt = conv->add_flag("--compress", do_compress, "OCYCLE -> UCYCLE2");
    auto* dopt = conv->add_option("--decompress", dec_sts, "UCYCLE2 -> OCYCLE, against this STS file");
    conv->add_option("--out", out_path, "output file (stdout when omitted)");
    copt->excludes(dopt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            std::vector<int> orders;
            if (!sweep.empty()) {
                auto range = parse_sweep(sweep);
                if (!range) {
                    std::cerr << "error: bad --sweep range '" << sweep << "' (expected A..B)\n";
                    return kExitUsage;
                }
                for (int n = range->first; n <= range->second; ++n)
                    if (admissible_order(n) && n >= 7) orders.push_back(n);
            } else {
                if (order <= 0) {
                    std::cerr << "error: give an order or --sweep A..B\n";
                    return kExitUsage;
                }
                orders.push_back(order);
            }
            return run_generate(orders, route, out_dir, format);
        }
        if (ver->parsed()) return run_verify(sts_path, ocycle_path, check_af, budget, vformat);
        if (conv->parsed()) {
            if (!do_compress && dec_sts.empty()) {
                std::cerr << "error: choose --compress or --decompress <sts>\n";
                return kExitUsage;
            }
            return run_convert(in_path, do_compress, dec_sts, out_path);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        std::cerr << "validation failed: " << e.what() << "\n" << e.report().to_string() << "\n";
        return kExitDefect;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDefect;
    }
    return kExitUsage;
}

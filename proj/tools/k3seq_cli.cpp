// Command-line front end: verification suite, lattice queries, fiber
// classification and graded-chart utilities, all over exact rationals.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "k3seq/checks.hpp"
#include "k3seq/ellfib.hpp"
#include "k3seq/graded.hpp"
#include "k3seq/isometry.hpp"
#include "k3seq/json_io.hpp"
#include "k3seq/k3cat.hpp"

namespace {

using k3seq::io::json;
using k3seq::lattices::Lattice;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

void emit(const json& j, const std::string& path = "") {
    if (path.empty()) {
        std::cout << j.dump(2) << std::endl;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << j.dump(2) << std::endl;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file " + path);
    return json::parse(in);
}

// A lattice argument is a catalog name (optionally with a twist suffix such
// as "A1(2)"), an inline JSON Gram/lattice, or a path to a lattice file.
Lattice resolve_lattice(const std::string& arg) {
    const auto& names = k3seq::k3::Catalog::entry_names();
    auto is_name = [&](const std::string& s) {
        return std::find(names.begin(), names.end(), s) != names.end();
    };
    if (is_name(arg)) return k3seq::k3::Catalog::standard().entry(arg);
    auto open = arg.find('(');
    if (open != std::string::npos && arg.back() == ')' &&
        is_name(arg.substr(0, open))) {
        k3seq::Int twist(arg.substr(open + 1, arg.size() - open - 2));
        return k3seq::k3::Catalog::standard().entry(arg.substr(0, open)).twist(twist);
    }
    if (!arg.empty() && (arg.front() == '[' || arg.front() == '{')) {
        json j = json::parse(arg);
        if (j.is_array()) return Lattice(k3seq::io::imat_from_json(j));
        return k3seq::io::lattice_from_json(j);
    }
    return k3seq::io::lattice_from_json(read_json_file(arg));
}

k3seq::fibers::FamilyParams resolve_params(const std::string& inline_json,
                                           const std::string& file) {
    if (!inline_json.empty())
        return k3seq::io::params_from_json(json::parse(inline_json));
    if (!file.empty()) return k3seq::io::params_from_json(read_json_file(file));
    throw std::runtime_error("provide --params or --file");
}

json lattice_info_json(const Lattice& l) {
    using namespace k3seq::lattices;
    json j;
    if (!l.label.empty()) j["label"] = l.label;
    auto sig = signature_of(l);
    j["rank"] = l.rank();
    j["signature"] = {sig.positive, sig.negative, sig.zero};
    j["det"] = k3seq::io::int_to_json(l.det());
    j["even"] = is_even(l);
    if (l.det() != 0) {
        DiscGroup dg = disc_group(l);
        json disc = json::array();
        for (const auto& d : elementary_divisors(dg.invariant_factors))
            disc.push_back(d.get_si());
        j["disc"] = disc;
        json qv = json::array();
        for (const auto& v : dg.qvalues) qv.push_back(v.str());
        j["disc_form"] = qv;
    }
    return j;
}

int cmd_verify(const k3seq::checks::Options& opt, const std::string& only,
               const std::string& json_path) {
    auto report = k3seq::checks::run_suite(opt, only);
    for (const auto& e : report.entries) {
        if (e.status == "skipped") continue;
        std::cout << (e.status == "pass" ? "PASS " : "FAIL ") << e.id << " ["
                  << e.anchor << "] (" << e.elapsed_ms << " ms)";
        if (e.status != "pass") std::cout << " - " << e.detail;
        std::cout << "\n";
    }
    std::cout << report.passed << " passed, " << report.failed << " failed, "
              << report.skipped << " skipped" << std::endl;
    if (!json_path.empty())
        emit(k3seq::io::with_schema(k3seq::io::report_to_json(report)), json_path);
    return report.ok() ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for a family of elliptic K3 surfaces"};
    app.require_subcommand(1);

    // ---- verify ----------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    std::string verify_scope = "all", only, report_path;
    k3seq::checks::Options opt;
    verify->add_option("scope", verify_scope, "what to verify (only 'all')");
    verify->add_option("--only", only, "run a single check by id");
    verify->add_option("--seed", opt.seed, "seed for randomized trials");
    verify->add_option("--trials", opt.trials, "samples per randomized property");
    verify->add_option("--json", report_path, "write the report as JSON");
    verify->add_flag("--tamper", opt.tamper,
                     "negative control: perturb one catalog entry");

    // ---- lattice ---------------------------------------------------------
    auto* lattice = app.add_subcommand("lattice", "lattice queries");
    lattice->require_subcommand(1);
    std::string lat_name, lat_gram, span_file, left, right, witness_path, out_path;

    auto* info = lattice->add_subcommand("info", "signature, det, parity, disc group");
    info->add_option("--name", lat_name, "catalog name (e.g. A0, B1, M, LK3)");
    info->add_option("--gram", lat_gram, "inline JSON Gram matrix");

    auto* dump = lattice->add_subcommand("dump", "emit a catalog lattice as JSON");
    dump->add_option("--name", lat_name, "catalog name")->required();
    dump->add_option("--out", out_path, "output path (default stdout)");

    auto* complement = lattice->add_subcommand("complement",
                                               "saturated orthogonal complement");
    std::string ambient_arg = "LK3";
    complement->add_option("--ambient", ambient_arg, "ambient lattice (default LK3)");
    complement->add_option("--span", span_file, "JSON file {\"basis\": [[...]]}")
        ->required();

    auto* isometry = lattice->add_subcommand("isometry", "search for an isometry");
    isometry->add_option("--left", left, "lattice (name, inline JSON, or file)")
        ->required();
    isometry->add_option("--right", right, "lattice (name, inline JSON, or file)")
        ->required();
    isometry->add_option("--witness", witness_path, "write the witness JSON here");
    long budget = 1000000;
    isometry->add_option("--budget", budget, "search node budget");

    // ---- fibers ----------------------------------------------------------
    auto* fibers_cmd = app.add_subcommand("fibers", "singular-fiber analysis");
    fibers_cmd->require_subcommand(1);
    std::string params_inline, params_file, sample_kind;

    auto* classify = fibers_cmd->add_subcommand("classify", "Kodaira types of a member");
    classify->add_option("--params", params_inline, "inline JSON [\"a0\",...,\"a14\"]");
    classify->add_option("--file", params_file, "params JSON file {\"a\": [...]}");

    auto* sample = fibers_cmd->add_subcommand("sample", "a point on a degeneration locus");
    sample->add_option("--kind", sample_kind,
                       "type-II | type-I2 | a0-zero | a14-zero")
        ->required();

    // ---- graded ----------------------------------------------------------
    auto* graded_cmd = app.add_subcommand("graded", "weighted-chart utilities");
    graded_cmd->require_subcommand(1);
    std::string gparams_inline, gparams_file, system_name = "u";
    int hilbert_weight = 0;

    auto* canonical = graded_cmd->add_subcommand("canonical", "chart normal form");
    canonical->add_option("--params", gparams_inline, "inline JSON params");
    canonical->add_option("--file", gparams_file, "params JSON file");

    auto* humbert_cmd = graded_cmd->add_subcommand("humbert", "Humbert polynomial value");
    humbert_cmd->add_option("--params", gparams_inline, "inline JSON params");
    humbert_cmd->add_option("--file", gparams_file, "params JSON file");

    auto* hilbert = graded_cmd->add_subcommand("hilbert", "monomial count of a weight");
    hilbert->add_option("--system", system_name, "weight system: u or t");
    hilbert->add_option("--weight", hilbert_weight, "target weight")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*verify) {
            if (verify_scope != "all") {
                std::cerr << "only 'verify all' is supported" << std::endl;
                return kExitUsage;
            }
            return cmd_verify(opt, only, report_path);
        }
        if (*info) {
            Lattice l = lat_gram.empty() ? resolve_lattice(lat_name)
                                         : resolve_lattice(lat_gram);
            emit(k3seq::io::with_schema(lattice_info_json(l)));
            return kExitOk;
        }
        if (*dump) {
            emit(k3seq::io::with_schema(
                     k3seq::io::lattice_to_json(resolve_lattice(lat_name))),
                 out_path);
            return kExitOk;
        }
        if (*complement) {
            Lattice ambient = resolve_lattice(ambient_arg);
            json span_doc = read_json_file(span_file);
            k3seq::IMat basis = k3seq::io::imat_from_json(
                span_doc.contains("basis") ? span_doc.at("basis") : span_doc);
            k3seq::lattices::SpanInAmbient span{ambient, basis};
            auto comp = k3seq::lattices::orth_complement(span);
            json j;
            j["basis"] = k3seq::io::imat_to_json(comp.basis);
            j["gram"] = k3seq::io::qmat_to_json(k3seq::lattices::gram_of_span(comp));
            j["rank"] = comp.rank();
            j["primitive_input"] = k3seq::lattices::is_primitive(span);
            emit(k3seq::io::with_schema(std::move(j)));
            return kExitOk;
        }
        if (*isometry) {
            Lattice l = resolve_lattice(left), r = resolve_lattice(right);
            k3seq::lattices::IsometryOptions iopt;
            iopt.budget = budget;
            auto res = k3seq::lattices::find_isometry(l.gram, r.gram, iopt);
            json j;
            using k3seq::lattices::IsometryStatus;
            j["status"] = res.status == IsometryStatus::found        ? "isometric"
                          : res.status == IsometryStatus::not_isometric ? "not-isometric"
                                                                        : "unknown";
            if (!res.note.empty()) j["note"] = res.note;
            if (res.status == IsometryStatus::found) {
                j["P"] = k3seq::io::imat_to_json(res.witness);
                if (!witness_path.empty())
                    emit(k3seq::io::with_schema(
                             json{{"P", k3seq::io::imat_to_json(res.witness)}}),
                         witness_path);
            }
            emit(k3seq::io::with_schema(std::move(j)));
            return res.status == IsometryStatus::unknown ? kExitVerification : kExitOk;
        }
        if (*classify) {
            auto p = resolve_params(params_inline, params_file);
            try {
                auto cfg = k3seq::fibers::classify_all(p);
                json j = k3seq::io::fiber_configuration_to_json(cfg);
                j["k3"] = cfg.total_euler() == 24 &&
                          !(p.a0().is_zero() && p.a2().is_zero());
                try {
                    k3seq::Rat r = k3seq::fibers::resultant_r(p);
                    j["r"] = r.str();
                    if (!r.is_zero()) j["d84"] = k3seq::fibers::disc84(p).str();
                } catch (const std::domain_error&) {
                    j["r"] = nullptr;
                }
                emit(k3seq::io::with_schema(std::move(j)));
                return kExitOk;
            } catch (const k3seq::fibers::NotK3Error& e) {
                emit(k3seq::io::with_schema(
                    json{{"error", "not a K3 surface"}, {"detail", e.what()}}));
                return kExitVerification;
            }
        }
        if (*sample) {
            auto kind = k3seq::fibers::sample_kind_from_string(sample_kind);
            auto p = k3seq::fibers::degenerate_sample(kind);
            json j = k3seq::io::params_to_json(p);
            j["kind"] = sample_kind;
            j["configuration"] =
                k3seq::io::fiber_configuration_to_json(k3seq::fibers::classify_all(p));
            emit(k3seq::io::with_schema(std::move(j)));
            return kExitOk;
        }
        if (*canonical) {
            auto p = resolve_params(gparams_inline, gparams_file);
            json j;
            if (!p.a0().is_zero()) {
                auto u = k3seq::graded::canonical_u(p);
                j["chart"] = "u";
                json vals = json::array();
                for (const auto& v : u) vals.push_back(v.str());
                j["values"] = vals;
                j["weights"] = k3seq::graded::WeightSystem::u_system().weights;
            } else {
                auto t = k3seq::graded::canonical_t(p);
                j["chart"] = "t";
                json vals = json::array();
                for (const auto& v : t) vals.push_back(v.str());
                j["values"] = vals;
                j["weights"] = k3seq::graded::WeightSystem::t_system().weights;
            }
            emit(k3seq::io::with_schema(std::move(j)));
            return kExitOk;
        }
        if (*humbert_cmd) {
            auto p = resolve_params(gparams_inline, gparams_file);
            emit(k3seq::io::with_schema(
                json{{"humbert", k3seq::graded::humbert(p).str()}, {"weight", 24}}));
            return kExitOk;
        }
        if (*hilbert) {
            const auto& ws = k3seq::graded::WeightSystem::by_name(system_name);
            emit(k3seq::io::with_schema(
                json{{"system", system_name},
                     {"weight", hilbert_weight},
                     {"count", k3seq::graded::hilbert_count(ws, hilbert_weight)}}));
            return kExitOk;
        }
    } catch (const std::domain_error& e) {
        emit(k3seq::io::with_schema(json{{"error", e.what()}}));
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitUsage;
    }
    return kExitUsage;
}

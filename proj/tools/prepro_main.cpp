// prepro: construct and analyze higher preprojective presentations from the
// command line. Subcommands mirror the library: mckay, prepro, tensor,
// koszul-dims, grading-search, classify, dot.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "prepro/dot.hpp"
#include "prepro/errors.hpp"
#include "prepro/grading.hpp"
#include "prepro/json_io.hpp"
#include "prepro/koszul.hpp"
#include "prepro/mckay.hpp"
#include "prepro/preprojective.hpp"
#include "prepro/superpotential.hpp"
#include "prepro/tensor_product.hpp"

namespace {

using namespace prepro;

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitLimit = 4;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot open output file: " + out_path);
    out << text;
}

std::size_t worker_count() {
    if (const char* env = std::getenv("PREPRO_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

Json grading_search_report(const QuadraticPresentation& p, const Superpotential& w,
                           const GradingSearchOptions& opts) {
    GradingSearchResult res = grading_search(p, w, opts);
    Json gradings = Json::array();
    for (const auto& [g, verdict] : res.valid)
        gradings.push_back(
            {{"grading", grading_to_json(g)}, {"verdict", grading_verdict_to_json(verdict)}});
    std::ostringstream summary;
    if (res.finite_count > 0)
        summary << "preprojective-compatible grading found: " << res.finite_count
                << " valid gradings with finite degree-0 part (of " << res.valid.size()
                << " valid)";
    else
        summary << "no preprojective structure found: 0 valid gradings with finite "
                   "degree-0 part ("
                << res.valid.size() << " valid gradings, " << res.infinite_count
                << " infinite, " << res.inconclusive_count << " inconclusive)";
    return Json{{"assignments", res.assignments},
                {"valid_count", res.valid.size()},
                {"finite_count", res.finite_count},
                {"infinite_count", res.infinite_count},
                {"inconclusive_count", res.inconclusive_count},
                {"gradings", std::move(gradings)},
                {"summary", summary.str()}};
}

int run(int argc, char** argv) {
    CLI::App app{"higher preprojective algebra computations on quivers"};
    app.require_subcommand(1);
    std::string out_path;
    auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", out_path, "write output to FILE instead of stdout");
    };

    // mckay
    auto* cmd_mckay = app.add_subcommand("mckay", "McKay presentation of 1/r(a1,...,an)");
    std::string mckay_spec;
    bool mckay_air = false, mckay_sp = false;
    cmd_mckay->add_option("spec", mckay_spec, "group spec r:a1,a2,...")->required();
    cmd_mckay->add_flag("--air", mckay_air, "include the wrap grading");
    cmd_mckay->add_flag("--with-superpotential", mckay_sp,
                        "include the skew superpotential (needs the SL condition)");
    add_out(cmd_mckay);

    // prepro
    auto* cmd_prepro =
        app.add_subcommand("prepro", "preprojective presentation of a Koszul input");
    std::string prepro_input;
    std::size_t prepro_n = 0;
    std::size_t prepro_dmax = 8;
    cmd_prepro->add_option("input", prepro_input, "presentation document (- for stdin)")
        ->required();
    cmd_prepro->add_option("--n", prepro_n, "global dimension of the input")->required();
    cmd_prepro->add_option("--d-max", prepro_dmax, "Koszulity probe depth")
        ->capture_default_str();
    add_out(cmd_prepro);

    // tensor
    auto* cmd_tensor = app.add_subcommand("tensor", "tensor product of two presentations");
    std::vector<std::string> tensor_inputs;
    cmd_tensor->add_option("inputs", tensor_inputs, "two presentation documents")
        ->expected(2);
    add_out(cmd_tensor);

    // koszul-dims
    auto* cmd_kdims = app.add_subcommand("koszul-dims", "table of Koszul space dimensions");
    std::string kdims_input;
    std::size_t kdims_lmax = 12;
    cmd_kdims->add_option("input", kdims_input, "presentation document (- for stdin)")
        ->required();
    cmd_kdims->add_option("--l-max", kdims_lmax, "largest degree")->capture_default_str();
    add_out(cmd_kdims);

    // grading-search
    auto* cmd_search = app.add_subcommand(
        "grading-search", "exhaustive {0,1} grading search for Gorenstein parameter 1");
    std::string search_input;
    GradingSearchOptions search_opts;
    cmd_search
        ->add_option("input", search_input,
                     "report document with presentation and superpotential (- for stdin)")
        ->required();
    cmd_search->add_option("--l-max", search_opts.l_max, "finiteness probe bound")
        ->capture_default_str();
    cmd_search->add_option("--limit", search_opts.arrow_limit, "arrow-count limit")
        ->capture_default_str();
    cmd_search->add_flag("--brute", search_opts.brute, "plain enumeration (count oracle)");
    add_out(cmd_search);

    // classify
    auto* cmd_classify =
        app.add_subcommand("classify", "grading-existence classification of cyclic groups");
    std::vector<std::string> classify_specs;
    long classify_rmax = 0;
    std::size_t classify_n = 0;
    cmd_classify->add_option("specs", classify_specs, "group specs r:a1,a2,...");
    cmd_classify->add_option("--r-max", classify_rmax, "classify all orders r <= R");
    cmd_classify->add_option("--n", classify_n, "weight count for the range enumeration");
    add_out(cmd_classify);

    // dot
    auto* cmd_dot = app.add_subcommand("dot", "Graphviz export of a quiver document");
    std::string dot_input;
    cmd_dot->add_option("input", dot_input, "quiver/presentation/report document")
        ->required();
    add_out(cmd_dot);

    CLI11_PARSE(app, argc, argv);

    if (cmd_mckay->parsed()) {
        CyclicGroupSpec spec = CyclicGroupSpec::parse(mckay_spec);
        auto p = mckay_presentation(spec);
        if (!mckay_air && !mckay_sp) {
            write_output(out_path,
                         dump_document(make_document("presentation", presentation_to_json(p))));
            return 0;
        }
        Json payload{{"spec", spec.to_string()},
                     {"presentation", presentation_to_json(p)}};
        if (mckay_sp) payload["superpotential"] = superpotential_to_json(skew_superpotential(spec));
        if (mckay_air) payload["grading"] = grading_to_json(air_grading(spec));
        write_output(out_path, dump_document(make_document("report", std::move(payload))));
        return 0;
    }

    if (cmd_prepro->parsed()) {
        auto doc = parse_document(read_input(prepro_input));
        QuadraticPresentation p = presentation_from_document(doc);
        auto pp = build_preprojective(p, prepro_n, prepro_dmax);
        auto w = preprojective_superpotential(pp);
        Json new_arrows = Json::array();
        for (std::size_t k = 0; k < pp.new_arrows.size(); ++k)
            new_arrows.push_back({{"arrow", pp.new_arrows[k]},
                                  {"generator", pathvector_to_json(pp.generators[k])}});
        Json payload{{"presentation", presentation_to_json(pp.presentation)},
                     {"new_arrows", std::move(new_arrows)},
                     {"grading", grading_to_json(pp.grading)},
                     {"superpotential", superpotential_to_json(w)}};
        write_output(out_path, dump_document(make_document("report", std::move(payload))));
        return 0;
    }

    if (cmd_tensor->parsed()) {
        auto d1 = parse_document(read_input(tensor_inputs[0]));
        auto d2 = parse_document(read_input(tensor_inputs[1]));
        auto tp = tensor_presentation(presentation_from_document(d1),
                                      presentation_from_document(d2));
        write_output(out_path, dump_document(make_document(
                                   "presentation", presentation_to_json(tp.presentation))));
        return 0;
    }

    if (cmd_kdims->parsed()) {
        auto doc = parse_document(read_input(kdims_input));
        QuadraticPresentation p = presentation_from_document(doc);
        auto table = koszul_dims(p, kdims_lmax);
        Json rows = Json::array();
        const std::size_t nv = p.quiver().vertices().size();
        for (const auto& entry : table) {
            Json blocks = Json::array();
            for (std::size_t t = 0; t < nv; ++t)
                for (std::size_t s = 0; s < nv; ++s)
                    if (entry.by_block.at(t, s) != 0)
                        blocks.push_back({{"source", p.quiver().vertices()[s].id},
                                          {"target", p.quiver().vertices()[t].id},
                                          {"dim", entry.by_block.at(t, s)}});
            rows.push_back({{"l", entry.l}, {"dim", entry.dim}, {"blocks", std::move(blocks)}});
        }
        write_output(out_path, dump_document(make_document("report", Json{{"koszul_dims", rows}})));
        return 0;
    }

    if (cmd_search->parsed()) {
        auto doc = parse_document(read_input(search_input));
        if (doc.kind != "report" || !doc.payload.contains("presentation") ||
            !doc.payload.contains("superpotential"))
            throw ParseError(
                "grading-search expects a report with a presentation and a superpotential "
                "(e.g. from `prepro mckay SPEC --with-superpotential`)");
        QuadraticPresentation p = presentation_from_json(doc.payload["presentation"]);
        Superpotential w =
            superpotential_from_json(p.quiver(), doc.payload["superpotential"]);
        write_output(out_path, dump_document(make_document(
                                   "report", grading_search_report(p, w, search_opts))));
        return 0;
    }

    if (cmd_classify->parsed()) {
        std::vector<CyclicGroupSpec> specs;
        for (const auto& s : classify_specs) specs.push_back(CyclicGroupSpec::parse(s));
        if (classify_rmax > 0) {
            if (classify_n == 0)
                throw ParseError("--r-max needs --n to enumerate weight tuples");
            for (long r = 1; r <= classify_rmax; ++r) {
                std::vector<long> w(classify_n, 0);
                while (true) {
                    specs.push_back(CyclicGroupSpec(r, w));
                    std::size_t i = 0;
                    while (i < classify_n && ++w[i] == r) w[i++] = 0;
                    if (i == classify_n) break;
                }
            }
        }
        if (specs.empty()) throw ParseError("classify needs specs or --r-max/--n");

        std::vector<Json> records(specs.size());
        const std::size_t workers = std::min(worker_count(), specs.size());
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (std::size_t t = 0; t < workers; ++t)
            pool.emplace_back([&]() {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= records.size()) return;
                    try {
                        records[i] = classification_to_json(classify_group(specs[i]));
                    } catch (const std::exception& e) {
                        records[i] =
                            Json{{"spec", specs[i].to_string()}, {"error", e.what()}};
                    }
                }
            });
        for (auto& th : pool) th.join();
        Json arr = Json::array();
        for (auto& r : records) arr.push_back(std::move(r));
        write_output(out_path, dump_document(make_document(
                                   "report", Json{{"classifications", std::move(arr)}})));
        return 0;
    }

    if (cmd_dot->parsed()) {
        auto doc = parse_document(read_input(dot_input));
        std::optional<WeightGrading> grading;
        Json quiver_json;
        if (doc.kind == "quiver") {
            quiver_json = doc.payload;
        } else if (doc.kind == "presentation") {
            quiver_json = doc.payload.at("quiver");
        } else if (doc.kind == "report" && doc.payload.contains("presentation")) {
            quiver_json = doc.payload["presentation"].at("quiver");
            if (doc.payload.contains("grading"))
                grading = grading_from_json(doc.payload["grading"]);
        } else {
            throw ParseError("dot expects a quiver, presentation or report document");
        }
        write_output(out_path, to_dot(quiver_from_json(quiver_json), grading));
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const LimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitLimit;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

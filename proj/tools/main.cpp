#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "geomcolor/extremal.hpp"
#include "geomcolor/fast_check.hpp"
#include "geomcolor/general_position.hpp"
#include "geomcolor/generate.hpp"
#include "geomcolor/io.hpp"
#include "geomcolor/oracle.hpp"
#include "geomcolor/routing.hpp"
#include "geomcolor/svg.hpp"

namespace {

using namespace geomcolor;

constexpr int kExitInvalid = 1;
constexpr int kExitUnknownFamily = 2;
constexpr int kExitParse = 3;
constexpr int kExitValidation = 4;

Family parse_family_flag(const std::string& name) {
    try {
        return family_from_name(name);
    } catch (const std::invalid_argument& e) {
        throw UnknownFamilyError(e.what());
    }
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) std::cout << content;
    else write_file(out_path, content);
}

Instance load_instance(const std::string& path, bool perturb_flag) {
    Instance inst = parse_instance(read_file(path));
    if (perturb_flag) return perturb(inst);
    require_general_position(inst);
    return inst;
}

// Streaming check for the point families, full enumeration otherwise.
Verdict verify_routed(const Instance& inst, const Coloring& col, int k) {
    switch (inst.family) {
        case Family::b_points:
        case Family::h_points:
        case Family::bprime_points: return fast_verify_kproper(inst, col, k);
        default: return verify_kproper(enumerate_hyperedges(inst), col, k);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coloring points and regions against geometric hypergraphs"};
    app.require_subcommand(1);

    std::string family_name_flag, in_path, out_path, coloring_path;
    int k = 2, max_colors = 4;
    std::size_t n = 10;
    std::uint64_t seed = 0;
    bool perturb_flag = false;

    auto* gen = app.add_subcommand("gen", "generate a random instance in general position");
    gen->add_option("--family", family_name_flag)->required();
    gen->add_option("--n", n)->required();
    gen->add_option("--seed", seed);
    gen->add_option("--out", out_path);

    auto* color = app.add_subcommand("color", "k-properly color an instance");
    color->add_option("--k", k)->required();
    color->add_option("--in", in_path)->required();
    color->add_option("--out", out_path);
    color->add_flag("--perturb", perturb_flag);

    auto* verify = app.add_subcommand("verify", "check a coloring against every hyperedge");
    verify->add_option("--k", k)->required();
    verify->add_option("--in", in_path)->required();
    verify->add_option("--coloring", coloring_path)->required();
    verify->add_option("--out", out_path);
    verify->add_flag("--perturb", perturb_flag);

    auto* chromatic = app.add_subcommand("chromatic", "exhaustive smallest-palette search");
    chromatic->add_option("--k", k)->required();
    chromatic->add_option("--max-colors", max_colors);
    chromatic->add_option("--in", in_path)->required();
    chromatic->add_option("--out", out_path);
    chromatic->add_flag("--perturb", perturb_flag);

    auto* cf = app.add_subcommand("cf", "conflict-free coloring via repeated proper coloring");
    cf->add_option("--k", k)->required();
    cf->add_option("--in", in_path)->required();
    cf->add_option("--out", out_path);
    cf->add_flag("--perturb", perturb_flag);

    auto* render = app.add_subcommand("render", "draw an instance (and coloring) as SVG");
    render->add_option("--in", in_path)->required();
    render->add_option("--coloring", coloring_path);
    render->add_option("--out", out_path);
    render->add_flag("--perturb", perturb_flag);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            Family family = parse_family_flag(family_name_flag);
            emit(out_path, serialize_instance(generate_instance(family, n, seed)));
            return 0;
        }
        if (color->parsed()) {
            Instance inst = load_instance(in_path, perturb_flag);
            emit(out_path, serialize_coloring(run_proper_coloring(inst, k)));
            return 0;
        }
        if (verify->parsed()) {
            Instance inst = load_instance(in_path, perturb_flag);
            Coloring col = parse_coloring(read_file(coloring_path));
            if (col.colors.size() != inst.size()) {
                throw std::invalid_argument("coloring size does not match instance");
            }
            Verdict verdict = verify_routed(inst, col, k);
            emit(out_path, serialize_verdict(verdict));
            return verdict.valid ? 0 : kExitInvalid;
        }
        if (chromatic->parsed()) {
            Instance inst = load_instance(in_path, perturb_flag);
            auto result = exact_chromatic(enumerate_hyperedges(inst), k, max_colors);
            nlohmann::json j;
            if (result.colors) {
                j["colors"] = *result.colors;
                j["witness"] = {{"palette", result.witness.palette_size},
                                {"colors", result.witness.colors}};
            } else {
                j["colors"] = nullptr;
            }
            emit(out_path, j.dump(2) + "\n");
            return 0;
        }
        if (cf->parsed()) {
            Instance inst = load_instance(in_path, perturb_flag);
            emit(out_path, serialize_coloring(cf_from_proper(inst, k)));
            return 0;
        }
        if (render->parsed()) {
            Instance inst = load_instance(in_path, perturb_flag);
            if (!coloring_path.empty()) {
                Coloring col = parse_coloring(read_file(coloring_path));
                emit(out_path, render_svg(inst, &col));
            } else {
                emit(out_path, render_svg(inst));
            }
            return 0;
        }
    } catch (const UnknownFamilyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknownFamily;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const GeneralPositionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}

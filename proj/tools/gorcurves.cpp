/*
   Copyright 2026 The gorcurves Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line front end: construct, betti, verify, deform, liaison, syzygies.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <gorcurves/gorcurves.hpp>

namespace {

using namespace gorcurves;

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw InputError("cannot write '" + out + "'");
    f << text;
}

int cmd_construct(const std::string& type, std::uint64_t seed, std::optional<std::uint32_t> p, const std::string& out) {
    const CurveBundle B = construct(parse_curve_type(type), seed, Field(p ? *p : default_characteristic()));
    emit(render_document(bundle_document(B)), out);
    if (!out.empty())
        std::cout << "type " << type << " seed " << seed << ": degree " << B.expected.total_degree << ", genus "
                  << B.expected.total_genus << ", written to " << out << "\n";
    return kOk;
}

int cmd_betti(const std::string& file, bool json) {
    const IdealDocument doc = read_document(file);
    const FreeResolution res = minimal_resolution(doc.ideal());
    const BettiTable b = BettiTable::from_resolution(res);
    if (res.saturation_warning) std::cerr << "warning: the ideal is not saturated\n";
    if (json)
        std::cout << betti_to_json(b).dump(2) << "\n";
    else
        std::cout << render_betti(b);
    return kOk;
}

int cmd_verify(const std::string& file, std::string type, bool json) {
    const IdealDocument doc = read_document(file);
    if (type.empty()) {
        auto it = doc.metadata.find("type");
        if (it == doc.metadata.end()) throw InputError("no curve type given and none recorded in the file");
        type = it->second;
    }
    const CurveType t = parse_curve_type(type);
    VerificationReport report;
    auto seed = doc.metadata.find("seed");
    if (seed != doc.metadata.end() && doc.metadata.count("type") && doc.metadata.at("type") == type) {
        // Rebuild the components from the recorded seed and check them against the file's ideal.
        CurveBundle B = construct(t, std::stoull(seed->second), doc.ring->field());
        B.union_ideal = doc.ideal();
        report = full_report(B);
    } else {
        report = union_report(doc.ideal(), t);
    }
    if (json)
        std::cout << report_to_json(report).dump(2) << "\n";
    else
        std::cout << render_report(report);
    return report.passed() ? kOk : kVerificationFailure;
}

int cmd_deform(std::uint64_t seed, std::int64_t t, std::optional<std::uint32_t> p, const std::string& out) {
    const Field field(p ? *p : default_characteristic());
    const DeformationFamily fam = deformation_family(seed, field);
    const FieldElement tv(t, field);
    IdealDocument doc{fam.ring, deformation_ideal(fam, tv).generators(), {}};
    doc.metadata["family"] = "2.7 deformation";
    doc.metadata["seed"] = std::to_string(seed);
    doc.metadata["t"] = std::to_string(tv.value());
    emit(render_document(doc), out);
    return kOk;
}

int cmd_liaison(const std::string& big, const std::string& small) {
    const IdealDocument a = read_document(big), b = read_document(small);
    if (!a.ring->same_as(*b.ring)) throw InputError("the two files use different rings");
    IdealDocument doc{a.ring, colon(a.ideal(), b.ideal()).groebner(), {}};
    std::cout << render_document(doc);
    return kOk;
}

int cmd_syzygies(const std::string& file, bool linear) {
    const IdealDocument doc = read_document(file);
    if (linear) {
        std::vector<Polynomial> quadrics;
        for (const auto& g : minimal_generators(doc.ideal()))
            if (g.degree() == 2) quadrics.push_back(g);
        const auto c = linear_syzygy_counts(quadrics);
        std::cout << "linear first syzygies: " << c.first << "\nlinear second syzygies: " << c.second << "\n";
        return kOk;
    }
    const GradedMatrix s = syzygies(row_matrix(doc.generators), doc.ring);
    for (std::size_t c = 0; c < s.cols(); ++c) {
        std::cout << "[degree " << s.col_degrees[c] << "]";
        for (const auto& [r, e] : s.columns[c]) std::cout << "  g" << r << ": " << e;
        std::cout << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gorenstein codimension 4 nodal curves: construction and verification"};
    app.require_subcommand(1);

    std::string type, file, file2, out;
    std::uint64_t seed = 0;
    std::int64_t t = 0;
    std::uint32_t p = 0;
    bool json = false, linear = false;

    auto* construct_cmd = app.add_subcommand("construct", "build the curve of a type and print its ideal");
    construct_cmd->add_option("--type", type, "2.1, 2.2, 2.3, 2.5, 2.6a, 2.6b, 2.7 or 2.8")->required();
    construct_cmd->add_option("--seed", seed, "random seed")->required();
    auto* char_opt = construct_cmd->add_option("--char", p, "field characteristic");
    construct_cmd->add_option("--out", out, "output .ideal file");

    auto* betti_cmd = app.add_subcommand("betti", "Betti table of an ideal file");
    betti_cmd->add_option("file", file)->required();
    betti_cmd->add_flag("--json", json);

    auto* verify_cmd = app.add_subcommand("verify", "verification report for an ideal file");
    verify_cmd->add_option("file", file)->required();
    verify_cmd->add_option("--type", type, "curve type (defaults to the file metadata)");
    verify_cmd->add_flag("--json", json);

    auto* deform_cmd = app.add_subcommand("deform", "member I_t of the type 2.7 deformation");
    deform_cmd->add_option("--seed", seed)->required();
    deform_cmd->add_option("--t", t, "parameter value")->required();
    auto* deform_char = deform_cmd->add_option("--char", p, "field characteristic");
    deform_cmd->add_option("--out", out);

    auto* liaison_cmd = app.add_subcommand("liaison", "colon ideal (BIG : SMALL)");
    liaison_cmd->add_option("big", file)->required();
    liaison_cmd->add_option("small", file2)->required();

    auto* syz_cmd = app.add_subcommand("syzygies", "syzygies of the generators");
    syz_cmd->add_option("file", file)->required();
    syz_cmd->add_flag("--linear", linear, "only count linear first and second syzygies");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*construct_cmd)
            return cmd_construct(type, seed, char_opt->count() ? std::optional<std::uint32_t>(p) : std::nullopt, out);
        if (*betti_cmd) return cmd_betti(file, json);
        if (*verify_cmd) return cmd_verify(file, type, json);
        if (*deform_cmd)
            return cmd_deform(seed, t, deform_char->count() ? std::optional<std::uint32_t>(p) : std::nullopt, out);
        if (*liaison_cmd) return cmd_liaison(file, file2);
        if (*syz_cmd) return cmd_syzygies(file, linear);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const StructureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const GenericityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerificationFailure;
    }
    return kUsageError;
}

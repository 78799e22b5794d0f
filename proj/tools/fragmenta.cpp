#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fragmenta/counting.hpp"
#include "fragmenta/entangle.hpp"
#include "fragmenta/frozen.hpp"
#include "fragmenta/json_io.hpp"
#include "fragmenta/models.hpp"
#include "fragmenta/quad2d.hpp"
#include "fragmenta/verify.hpp"

using namespace fragmenta;

namespace {

struct ModelFlags {
    std::string model = "TL";
    int N = 2;
    int L = 2;
    std::string boundary = "open";
    std::string config_path;

    ModelId resolve() const {
        if (!config_path.empty()) {
            nlohmann::json j = nlohmann::json::parse(read_file(config_path));
            return model_from_json(j);
        }
        ModelId id;
        id.kind = model_kind_from_string(model);
        id.N = N;
        switch (id.kind) {  // three-state models fix their own N
            case ModelKind::TJZ:
            case ModelKind::TJZ_QF:
            case ModelKind::DIPOLE3:
            case ModelKind::DIPOLE3_QF: id.N = 3; break;
            default: break;
        }
        id.L = L;
        if (boundary == "open")
            id.boundary = Boundary::open;
        else if (boundary == "periodic")
            id.boundary = Boundary::periodic;
        else
            throw Error("boundary must be open or periodic");
        id.validate();
        return id;
    }
};

void add_model_flags(CLI::App* cmd, ModelFlags& flags) {
    cmd->add_option("--model", flags.model, "model id (PF, TL, TJZ, TJZ_QF, ...)");
    cmd->add_option("--N", flags.N, "local dimension");
    cmd->add_option("--L", flags.L, "chain length");
    cmd->add_option("--boundary", flags.boundary, "open | periodic");
    cmd->add_option("--config", flags.config_path, "JSON model config (overrides flags)");
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

LocalRule parent_rule(ModelKind kind, int N) {
    switch (kind) {
        case ModelKind::PF: return pf_rule(N);
        case ModelKind::TL: return tl_rule(N);
        case ModelKind::TJZ: return tjz_rule();
        case ModelKind::DIPOLE3: return dipole3_rule();
        case ModelKind::TFIM: return tfim_xx_rule(N);
        default: throw Error("not a parent model: " + model_kind_name(kind));
    }
}

std::string model_label(ModelKind kind, const ProductState& rep) {
    switch (kind) {
        case ModelKind::PF:
        case ModelKind::TL: return pair_reduce(rep).str();
        case ModelKind::TJZ:
        case ModelKind::TJZ_QF: return tjz_spin_pattern(rep);
        case ModelKind::DIPOLE3:
        case ModelKind::DIPOLE3_QF: return dipole_label(rep).str();
        default: return "";
    }
}

int cmd_model(const ModelFlags& flags, const std::string& out) {
    ModelId id = flags.resolve();
    emit(out, operator_to_json(build_model(id)).dump(2) + "\n");
    return 0;
}

int cmd_promote(const std::string& parent, int N, int L, const std::string& boundary, int theta,
                const std::string& check_equal, const std::string& out, const std::string& dot) {
    ModelKind pk = model_kind_from_string(parent);
    LocalRule rule = parent_rule(pk, N);
    ChainGeometry geom(L, N, boundary == "periodic" ? Boundary::periodic : Boundary::open);
    PhasePolicy policy = theta == 0 ? PhasePolicy::zero() : PhasePolicy::pi_();
    ExactOperator H = promote(rule, policy, geom);
    if (!dot.empty()) write_file(dot, local_connectivity_dot(rule));
    if (!check_equal.empty()) {
        ModelId target;
        target.kind = model_kind_from_string(check_equal);
        target.N = N;
        target.L = L;
        target.boundary = geom.boundary;
        bool equal = operator_equal(H, build_model(target));
        std::cout << "equal: " << (equal ? "true" : "false") << "\n";
        return equal ? 0 : 3;
    }
    emit(out, operator_to_json(H).dump(2) + "\n");
    return 0;
}

int cmd_sectors(const ModelFlags& flags, const std::string& out, const std::string& dot) {
    ModelId id = flags.resolve();
    ChainGeometry geom = id.geometry();
    ExactOperator H = build_model(id);
    auto sectors = cf_sectors(H, geom);
    std::vector<CensusRow> rows;
    for (std::size_t i = 0; i < sectors.size(); ++i) {
        ProductState rep = decode(sectors[i].representative, geom);
        rows.push_back({static_cast<int>(i), static_cast<std::int64_t>(sectors[i].size()),
                        model_label(id.kind, rep), rep.str()});
    }
    emit(out, census_csv(rows));
    if (!dot.empty()) write_file(dot, global_connectivity_dot(H, geom));
    return 0;
}

int cmd_frozen(const ModelFlags& flags, const std::string& seed, int theta, const std::string& out) {
    ModelId id = flags.resolve();
    ChainGeometry geom = id.geometry();
    ModelId cf_id = id, qf_id = id;
    switch (id.kind) {
        case ModelKind::TJZ:
        case ModelKind::TJZ_QF:
            cf_id.kind = ModelKind::TJZ;
            qf_id.kind = ModelKind::TJZ_QF;
            if (theta == 0) theta = 1;  // the tJz promotion carries theta = pi
            break;
        case ModelKind::DIPOLE3:
        case ModelKind::DIPOLE3_QF:
            cf_id.kind = ModelKind::DIPOLE3;
            qf_id.kind = ModelKind::DIPOLE3_QF;
            break;
        case ModelKind::PF:
        case ModelKind::TL:
            cf_id.kind = ModelKind::PF;
            qf_id.kind = ModelKind::TL;
            break;
        default: throw Error("frozen-state construction targets the CF-promoted models");
    }
    ExactVector v = build_frozen(build_model(cf_id), build_model(qf_id),
                                 encode(ProductState::from_string(seed), geom),
                                 theta == 0 ? PhasePolicy::Theta::zero : PhasePolicy::Theta::pi);
    emit(out, vector_to_json(v).dump(2) + "\n");
    return 0;
}

int cmd_entropy(const std::string& label, int colors_b, int colors_c, int length, int N, int cut,
                const std::string& out) {
    IrreducibleString s;
    for (char ch : label)
        if (ch != '-') s.colors.push_back(ch - '0');
    ChainGeometry geom(length, N);
    ExactVector v = tl_segment(s, {colors_b, colors_c}, length, N);
    SchmidtData data = schmidt(v, cut, geom);
    nlohmann::json j;
    j["cut"] = data.cut;
    j["W"] = data.rank;
    j["mu"] = data.mu;
    j["S_A"] = data.entropy;
    emit(out, j.dump(2) + "\n");
    return 0;
}

// sector counts by default; --kernel switches to zero-mode dimensions
int cmd_count(const ModelFlags& flags, bool kernel_mode, bool with_census) {
    ModelId id = flags.resolve();
    CountReport report;
    report.model = model_kind_name(id.kind);
    report.N = id.N;
    report.L = id.L;
    switch (id.kind) {
        case ModelKind::TL:
            report.formula_value = kernel_mode ? tl_kernel_dim(id.N, id.L) : count_tl_sectors(id.N, id.L);
            break;
        case ModelKind::PF:
            if (kernel_mode) throw Error("no kernel closed form for PF; use TL");
            report.formula_value = count_pf_sectors(id.N, id.L);
            break;
        case ModelKind::TFIM_QF: report.formula_value = tfim_qf_kernel_dim(id.N, id.L); break;
        default: throw Error("no closed-form count for " + model_kind_name(id.kind));
    }
    if (!with_census) {
        std::cout << report.formula_value.get_str() << "\n";
        return 0;
    }
    ChainGeometry geom = id.geometry();
    if (id.kind == ModelKind::PF) {
        report.census_value = BigInt(static_cast<long>(cf_sectors(build_model(id), geom).size()));
    } else if (id.kind == ModelKind::TL && !kernel_mode) {
        auto terms = assemble_bond_terms(tl_rule(id.N), geom);
        report.census_value =
            BigInt(static_cast<long>(sector_census(build_model(id), omega_basis(geom), {}, terms)));
    } else {
        report.census_value = BigInt(kernel_dimension(build_model(id)));
    }
    report.match = *report.census_value == report.formula_value;
    nlohmann::json j;
    j["model"] = report.model;
    j["N"] = report.N;
    j["L"] = report.L;
    j["formula_value"] = report.formula_value.get_str();
    j["census_value"] = report.census_value->get_str();
    j["match"] = report.match;
    std::cout << j.dump(2) << "\n";
    return report.match ? 0 : 3;
}

int cmd_windows(const ModelFlags& flags, const std::string& seed, const std::string& out) {
    ModelId id = flags.resolve();
    ChainGeometry geom = id.geometry();
    LocalRule rule;
    PhasePolicy policy = PhasePolicy::zero();
    ModelId cf_id = id;
    switch (id.kind) {
        case ModelKind::TJZ:
        case ModelKind::TJZ_QF:
            rule = tjz_rule();
            policy = PhasePolicy::pi_();
            cf_id.kind = ModelKind::TJZ;
            break;
        case ModelKind::DIPOLE3:
        case ModelKind::DIPOLE3_QF:
            rule = dipole3_rule();
            cf_id.kind = ModelKind::DIPOLE3;
            break;
        case ModelKind::PF:
        case ModelKind::TL:
            rule = tl_rule(id.N);
            cf_id.kind = ModelKind::PF;
            break;
        default: throw Error("window tomography targets the CF-promoted models");
    }
    ExactOperator H_qf = promote(rule, policy, geom);
    ExactVector v = build_frozen(build_model(cf_id), H_qf,
                                 encode(ProductState::from_string(seed), geom),
                                 policy.theta == PhasePolicy::Theta::pi ? PhasePolicy::Theta::pi
                                                                        : PhasePolicy::Theta::zero);
    emit(out, window_tomography_csv(window_tomography(v, rule, policy, geom)));
    return 0;
}

int cmd_quad2d(const std::string& fixture, const std::string& out) {
    QuadFixture fx;
    if (fixture == "two_term")
        fx = fixture_two_term();
    else if (fixture == "three_term")
        fx = fixture_three_term();
    else if (fixture == "ghz_plus")
        fx = fixture_four_frozen_loops();
    else
        throw Error("fixture must be two_term, three_term or ghz_plus");

    std::ostringstream os;
    os << "fixture: " << fx.name << "\n";
    os << "edges: " << fx.lattice.edge_count() << ", constituents: " << fx.state.nnz() << "\n";
    bool sf = true;
    for (const auto& [idx, amp] : fx.state.entries)
        sf = sf && source_free(fx.lattice, EdgeState{fx.lattice.unpack(idx)});
    os << "source_free: " << (sf ? "true" : "false") << "\n";
    bool frozen = apply_hamiltonian(fx.lattice, fx.state, isotropic_xi(fx.lattice.N)).is_zero();
    os << "annihilated_by_isotropic_H: " << (frozen ? "true" : "false") << "\n";
    os << "constituents:\n";
    for (const auto& [idx, amp] : fx.state.entries) {
        std::vector<int> colors = fx.lattice.unpack(idx);
        std::string digits;
        for (int c : colors) digits.push_back(static_cast<char>('0' + c));
        os << "amplitude " << amp.str() << "  edges " << digits << ":\n"
           << fx.lattice.ascii_render(colors) << "\n";
    }
    emit(out, os.str());
    return 0;
}

int cmd_verify(int max_L, bool no_fusion_sweep, const std::string& report_path) {
    VerifyOptions options;
    options.max_L = max_L;
    options.fusion_sweep = !no_fusion_sweep;
    VerifyReport report = run_all_claims(options);
    std::cout << criterion_summary(report);
    std::cout << "passed " << report.passed << ", failed " << report.failed << ", skipped "
              << report.skipped << "\n";
    if (!report_path.empty()) write_file(report_path, report_to_json(report).dump(2) + "\n");
    return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for classically and quantum fragmented chains"};
    app.require_subcommand(1);

    ModelFlags model_flags, sector_flags, frozen_flags, count_flags, window_flags;
    std::string out, dot, seed = "0", check_equal, parent = "PF", fixture = "two_term";
    std::string report_path = "report.json";
    int theta = 0, pN = 2, pL = 2, cut = 1, seg_len = 2, seg_b = 0, seg_c = 1, verify_max_L = 0;
    std::string pboundary = "open", seg_label;
    bool count_kernel = false, count_census = false, no_sweep = false;

    auto* model_cmd = app.add_subcommand("model", "build a model Hamiltonian as exact JSON");
    add_model_flags(model_cmd, model_flags);
    model_cmd->add_option("--out", out, "output path (stdout when omitted)");

    auto* promote_cmd = app.add_subcommand("promote", "promote a parent rule to its QF model");
    promote_cmd->add_option("--parent", parent, "parent model (PF, TJZ, DIPOLE3, TFIM)");
    promote_cmd->add_option("--N", pN, "local dimension");
    promote_cmd->add_option("--L", pL, "chain length");
    promote_cmd->add_option("--boundary", pboundary, "open | periodic");
    promote_cmd->add_option("--theta", theta, "relative phase: 0 or 1 (= pi)");
    promote_cmd->add_option("--check-equal", check_equal, "compare against a built model id");
    promote_cmd->add_option("--out", out, "output path");
    promote_cmd->add_option("--dot", dot, "write the local connectivity graph (DOT)");

    auto* sectors_cmd = app.add_subcommand("sectors", "classical sector census (CSV)");
    add_model_flags(sectors_cmd, sector_flags);
    sectors_cmd->add_option("--out", out, "output path");
    sectors_cmd->add_option("--dot", dot, "write the global connectivity graph (DOT)");

    auto* frozen_cmd = app.add_subcommand("frozen", "entangled frozen state from a seed");
    add_model_flags(frozen_cmd, frozen_flags);
    frozen_cmd->add_option("--seed", seed, "seed product state, e.g. 100");
    frozen_cmd->add_option("--theta", theta, "0 for alternating signs, 1 for equal weights");
    frozen_cmd->add_option("--out", out, "output path");

    auto* entropy_cmd = app.add_subcommand("entropy", "Schmidt data of a TL frozen segment");
    entropy_cmd->add_option("--label", seg_label, "irreducible string, e.g. 1010 (empty allowed)");
    entropy_cmd->add_option("--colors", seg_b, "first color");
    entropy_cmd->add_option("--colors2", seg_c, "second color");
    entropy_cmd->add_option("--length", seg_len, "segment length");
    entropy_cmd->add_option("--N", pN, "local dimension");
    entropy_cmd->add_option("--cut", cut, "bipartition cut");
    entropy_cmd->add_option("--out", out, "output path");

    auto* count_cmd = app.add_subcommand("count", "closed-form sector/kernel counts");
    add_model_flags(count_cmd, count_flags);
    count_cmd->add_flag("--kernel", count_kernel, "kernel dimension instead of the sector count");
    count_cmd->add_flag("--census", count_census, "cross-check against the enumeration census");

    auto* windows_cmd = app.add_subcommand("windows", "window tomography CSV for a frozen state");
    add_model_flags(windows_cmd, window_flags);
    windows_cmd->add_option("--seed", seed, "seed product state");
    windows_cmd->add_option("--out", out, "output path");

    auto* quad_cmd = app.add_subcommand("quad2d", "2D quad-flip fixture checks");
    quad_cmd->add_option("--fixture", fixture, "two_term | three_term | ghz_plus");
    quad_cmd->add_option("--out", out, "output path");

    auto* verify_cmd = app.add_subcommand("verify", "run the full claim suite");
    verify_cmd->add_option("--max-L", verify_max_L, "skip claims beyond this chain length");
    verify_cmd->add_flag("--no-fusion-sweep", no_sweep, "skip the exhaustive fusion sweep");
    verify_cmd->add_option("--report", report_path, "report output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (model_cmd->parsed()) return cmd_model(model_flags, out);
        if (promote_cmd->parsed())
            return cmd_promote(parent, pN, pL, pboundary, theta, check_equal, out, dot);
        if (sectors_cmd->parsed()) return cmd_sectors(sector_flags, out, dot);
        if (frozen_cmd->parsed()) return cmd_frozen(frozen_flags, seed, theta, out);
        if (entropy_cmd->parsed()) return cmd_entropy(seg_label, seg_b, seg_c, seg_len, pN, cut, out);
        if (count_cmd->parsed()) return cmd_count(count_flags, count_kernel, count_census);
        if (windows_cmd->parsed()) return cmd_windows(window_flags, seed, out);
        if (quad_cmd->parsed()) return cmd_quad2d(fixture, out);
        if (verify_cmd->parsed()) return cmd_verify(verify_max_L, no_sweep, report_path);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

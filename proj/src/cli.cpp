#include "arrangetop/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "arrangetop/cover.hpp"
#include "arrangetop/formality.hpp"
#include "arrangetop/scalar_io.hpp"

namespace arrangetop {

namespace {

using nlohmann::json;

struct InputSpec {
    std::string path;
    std::string builtin;

    Arrangement load() const {
        if (!builtin.empty() && !path.empty())
            throw Error(ErrorClass::Input, "give either a file or --builtin, not both");
        if (!builtin.empty()) return builtin_arrangement(builtin);
        if (!path.empty()) return load_arrangement(path);
        throw Error(ErrorClass::Input, "no input arrangement: give a file or --builtin");
    }
};

void add_input_options(CLI::App* cmd, InputSpec& input) {
    cmd->add_option("file", input.path, "arrangement file");
    cmd->add_option("-b,--builtin", input.builtin,
                    "builtin arrangement: ceva3, triangle, central(k), generic(k)");
}

std::string scalar(const CycNumber& c, long conductor) {
    return render_scalar(c.coerced(conductor));
}

json point_json(const ProjPoint& p, long conductor) {
    return json::array(
        {scalar(p.h[0], conductor), scalar(p.h[1], conductor), scalar(p.h[2], conductor)});
}

json lattice_json(const Arrangement& a) {
    long n = a.conductor();
    json out;
    out["d"] = a.size();
    out["conductor"] = n;
    if (!a.label().empty()) out["label"] = a.label();
    out["central"] = a.is_central();
    out["euler"] = a.euler_complement();
    json pts = json::array();
    std::map<std::string, size_t> counts;
    if (a.size() >= 2) {
        for (const auto& p : a.lattice().points) {
            json jp;
            jp["point"] = point_json(p.point, n);
            jp["lines"] = p.incident;
            jp["multiplicity"] = p.multiplicity();
            pts.push_back(std::move(jp));
            counts[std::to_string(p.multiplicity())] += 1;
        }
    }
    out["points"] = std::move(pts);
    out["multiplicity_counts"] = counts;
    return out;
}

json spectrum_json(const Spectrum& s) {
    json dims;
    for (long e = 0; e < s.d; ++e) dims[std::to_string(e)] = s.dims[e];
    json out;
    out["d"] = s.d;
    out["monodromy_order"] = s.monodromy_order;
    out["dims"] = std::move(dims);
    out["b1F"] = s.b1F;
    return out;
}

json components_json(const Arrangement& a, const std::vector<ResonanceComponent>& comps) {
    long n = a.conductor();
    json arr = json::array();
    for (const auto& comp : comps) {
        json jc;
        if (comp.kind == ResonanceComponent::Kind::Local) {
            jc["kind"] = "local";
            jc["point"] = comp.point_index + 1;
        } else {
            jc["kind"] = "global";
            jc["blocks"] = comp.net.blocks;
        }
        jc["support"] = comp.support;
        jc["dimension"] = comp.dimension;
        json basis = json::array();
        for (const auto& w : comp.basis) {
            json row = json::array();
            for (const auto& c : w.a) row.push_back(scalar(c, n));
            basis.push_back(std::move(row));
        }
        jc["basis"] = std::move(basis);
        arr.push_back(std::move(jc));
    }
    return arr;
}

NetPartition parse_blocks(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorClass::Input, std::string("cannot parse --blocks: ") + e.what());
    }
    NetPartition net;
    if (!j.is_array()) throw Error(ErrorClass::Input, "--blocks must be an array of arrays");
    for (const auto& block : j) {
        if (!block.is_array()) throw Error(ErrorClass::Input, "--blocks must be an array of arrays");
        std::vector<int> b;
        for (const auto& v : block) {
            if (!v.is_number_integer())
                throw Error(ErrorClass::Input, "--blocks entries must be 1-based line indices");
            b.push_back(v.get<int>());
        }
        std::sort(b.begin(), b.end());
        net.blocks.push_back(std::move(b));
    }
    return net;
}

json base_locus_json(const BaseLocusReport& report, long conductor) {
    json out;
    json pts = json::array();
    for (const auto& bp : report.points) {
        json jp;
        jp["point"] = point_json(bp.point, conductor);
        jp["multiplicities"] = bp.fiber_multiplicity;
        pts.push_back(std::move(jp));
    }
    out["points"] = std::move(pts);
    out["simple_point_exists"] = report.simple_point_exists;
    return out;
}

json pencil_json(const Arrangement& a, const Pencil& p, const LiftedCurve* curve) {
    long n = a.conductor();
    json out;
    out["conductor"] = n;
    out["blocks"] = p.net.blocks;
    json coords = json::array();
    for (const auto& [alpha, beta] : p.coords)
        coords.push_back(json::array({scalar(alpha, n), scalar(beta, n)}));
    out["coords"] = std::move(coords);
    out["base_locus"] = base_locus_json(base_locus(p), n);
    out["full_support"] = p.full_support;
    if (curve) {
        out["lifted_equation"] = render_poly(curve->g);
        CurveMHS c = curve_mhs(*curve);
        out["chi"] = c.chi;
        out["genus"] = c.genus;
        out["E_dims"] = json::array({c.h11, c.h10, c.h01});
        out["certified"] = curve->certified;
    }
    return out;
}

json verdict_json(const ObstructionReport& r) {
    json out;
    out["verdict"] = verdict_name(r.verdict);
    if (r.has_witness) {
        json w;
        w["w1_h10"] = r.witness_w1_h10;
        w["E_h10"] = r.witness_e10;
        w["separates"] = r.witness_w1_h10 > r.witness_e10;
        out["witness"] = std::move(w);
    }
    out["assumptions"] = r.assumptions;
    if (r.has_pencil) out["winning_pencil"] = r.winning_net.blocks;
    return out;
}

json braid_json(const Arrangement& a, const MonodromyData& md) {
    long n = std::lcm(a.conductor(), 4L);
    json out;
    out["conductor"] = n;
    out["strands"] = md.strands;
    out["strand_lines"] = md.strand_lines;
    out["basepoint"] = scalar(md.basepoint, n);
    json events = json::array();
    for (const auto& e : md.events) {
        json je;
        je["x"] = scalar(e.point.x, n);
        je["y"] = scalar(e.point.y, n);
        je["lines"] = e.point.lines;
        je["multiplicity"] = e.point.lines.size();
        je["word"] = e.braid.letters;
        events.push_back(std::move(je));
    }
    out["events"] = std::move(events);
    return out;
}

void emit(std::ostream& out, const json& j, bool as_text) {
    if (as_text)
        out << j.dump(2) << "\n";
    else
        out << j.dump() << "\n";
}

// ---- per-subcommand drivers ----

struct Options {
    InputSpec input;
    std::string format = "text";
    bool emit_input = false;
    int max_k = 0;
    std::string blocks;
    int point = 0;
    int infinity = 0;
    bool crosscheck = false;

    bool json_format() const { return format == "json"; }
};

int cmd_lattice(const Options& opt, std::ostream& out) {
    Arrangement a = opt.input.load();
    if (opt.emit_input) {
        out << emit_arrangement(a);
        return 0;
    }
    json j = lattice_json(a);
    if (opt.json_format()) {
        emit(out, j, false);
        return 0;
    }
    out << "arrangement" << (a.label().empty() ? "" : " " + a.label()) << ": " << a.size()
        << " lines over conductor " << a.conductor() << "\n";
    out << "points: " << j["points"].size() << "\n";
    for (const auto& [mult, count] : j["multiplicity_counts"].items())
        out << "  multiplicity " << mult << ": " << count.get<size_t>() << " points\n";
    out << "euler characteristic of the complement: " << a.euler_complement() << "\n";
    out << "central: " << (a.is_central() ? "yes" : "no") << "\n";
    return 0;
}

int cmd_resonance(const Options& opt, std::ostream& out) {
    Arrangement a = opt.input.load();
    int max_k = opt.max_k > 0 ? opt.max_k : static_cast<int>(a.size());
    auto comps = resonance_components(a, std::max(3, max_k));
    json j = components_json(a, comps);
    if (opt.json_format()) {
        emit(out, j, false);
        return 0;
    }
    out << comps.size() << " resonance components\n";
    for (const auto& comp : comps) {
        out << "  " << (comp.kind == ResonanceComponent::Kind::Local ? "local" : "global")
            << " dim " << comp.dimension << " support {";
        for (size_t i = 0; i < comp.support.size(); ++i)
            out << (i ? "," : "") << comp.support[i];
        out << "}\n";
    }
    return 0;
}

int cmd_pencil(const Options& opt, std::ostream& out) {
    Arrangement a = opt.input.load();
    if (opt.blocks.empty()) throw Error(ErrorClass::Input, "pencil needs --blocks");
    NetPartition net = parse_blocks(opt.blocks);
    Pencil p = pencil_from_net(a, net);
    LiftedCurve curve = lift_pencil(p); // precondition errors exit with code 2
    json j = pencil_json(a, p, &curve);
    if (opt.json_format()) {
        emit(out, j, false);
        return 0;
    }
    out << "pencil with " << p.k() << " fibers, lifted curve " << j["lifted_equation"].get<std::string>()
        << " = 1\n";
    out << "chi " << j["chi"].get<long>() << ", genus " << j["genus"].get<long>() << ", E dims ["
        << j["E_dims"][0].get<long>() << ", " << j["E_dims"][1].get<long>() << ", "
        << j["E_dims"][2].get<long>() << "]\n";
    out << "certified: yes\n";
    return 0;
}

int cmd_cover(const Options& opt, std::ostream& out) {
    Arrangement a = opt.input.load();
    if ((opt.point == 0) == opt.blocks.empty())
        throw Error(ErrorClass::Input, "cover needs exactly one of --point or --pencil");
    ConnectivityVerdict v;
    json j;
    if (opt.point != 0) {
        v = local_fiber_connectivity(a, opt.point - 1);
        j["kind"] = "local";
        j["point"] = opt.point;
    } else {
        NetPartition net = parse_blocks(opt.blocks);
        Pencil p = pencil_from_net(a, net);
        v = global_fiber_connectivity(a, p);
        j["kind"] = "global";
        j["blocks"] = net.blocks;
    }
    j["components"] = v.components;
    j["rationale"] = v.rationale;
    if (opt.json_format()) {
        emit(out, j, false);
        return 0;
    }
    out << "generic fiber components: " << v.components << "\n";
    for (const auto& r : v.rationale) out << "  - " << r << "\n";
    return 0;
}

int cmd_braid(const Options& opt, std::ostream& out) {
    Arrangement a = opt.input.load();
    int inf = opt.infinity == 0 ? static_cast<int>(a.size()) : opt.infinity;
    MonodromyData md = braid_monodromy(decone(a, inf));
    json j = braid_json(a, md);
    if (opt.json_format()) {
        emit(out, j, false);
        return 0;
    }
    out << md.strands << " strands, " << md.events.size() << " events (line " << inf
        << " at infinity)\n";
    for (const auto& e : md.events) {
        out << "  x = " << j["events"][&e - md.events.data()]["x"].get<std::string>()
            << "  multiplicity " << e.point.lines.size() << "  word";
        for (int letter : e.braid.letters) out << " " << letter;
        out << "\n";
    }
    return 0;
}

int cmd_spectrum(const Options& opt, std::ostream& out) {
    Arrangement a = opt.input.load();
    Spectrum s = milnor_spectrum(a, opt.infinity);
    json j = spectrum_json(s);
    if (opt.crosscheck) j["crosscheck"] = spectrum_crosscheck(a, opt.infinity);
    if (opt.json_format()) {
        emit(out, j, false);
        return 0;
    }
    out << "monodromy eigenspace dimensions of H^1(F), d = " << s.d << "\n";
    for (long e = 0; e < s.d; ++e)
        out << "  exponent " << e << ": " << s.dims[e] << "\n";
    out << "b1(F) = " << s.b1F << "\n";
    if (opt.crosscheck)
        out << "cyclic cover oracle: " << (j["crosscheck"].get<bool>() ? "agrees" : "DISAGREES")
            << "\n";
    return 0;
}

int cmd_obstruct(const Options& opt, std::ostream& out) {
    Arrangement a = opt.input.load();
    ObstructionReport r = formality_report(a);
    json j = verdict_json(r);
    if (opt.json_format()) {
        emit(out, j, false);
        return 0;
    }
    out << "verdict: " << verdict_name(r.verdict) << "\n";
    if (r.has_witness)
        out << "witness: dim(W1 cap H^{1,0}) = " << r.witness_w1_h10 << " vs dim E^{1,0} = "
            << r.witness_e10 << "\n";
    return 0;
}

int cmd_report(const Options& opt, std::ostream& out) {
    Arrangement a = opt.input.load();
    FormalityAnalysis analysis = analyze_formality(a);
    long n = a.conductor();

    json j;
    j["lattice"] = lattice_json(a);
    j["resonance"] = components_json(a, resonance_components(a, static_cast<int>(std::max<size_t>(a.size(), 3))));
    json pencils = json::array();
    for (const auto& cand : analysis.candidates) {
        json jc;
        jc["blocks"] = cand.net.blocks;
        jc["certified"] = cand.certified;
        if (cand.certified) {
            json coords = json::array();
            for (const auto& [alpha, beta] : cand.coords)
                coords.push_back(json::array({scalar(alpha, n), scalar(beta, n)}));
            jc["coords"] = std::move(coords);
            jc["lifted_equation"] = render_poly(cand.lifted_equation);
            jc["chi"] = cand.mhs.chi;
            jc["genus"] = cand.mhs.genus;
            jc["E_dims"] = json::array({cand.E.e11, cand.E.e10, cand.E.e01});
            jc["verdict"] = verdict_name(cand.test.verdict);
        } else {
            jc["failure"] = cand.failure;
        }
        pencils.push_back(std::move(jc));
    }
    j["pencils"] = std::move(pencils);
    j["spectrum"] = spectrum_json(analysis.spectrum);
    json fm;
    fm["h11F"] = analysis.fiber.h11F;
    fm["w1F"] = analysis.fiber.w1F;
    fm["w1_h10"] = analysis.fiber.w1_h10;
    fm["nontrivial_exponents"] = analysis.fiber.nontrivial_exponents;
    j["fiber_mhs"] = std::move(fm);
    j["verdict"] = verdict_json(analysis.verdict);

    if (opt.json_format()) {
        emit(out, j, false);
        return 0;
    }
    out << "== arrangement ==\n";
    out << a.size() << " lines over conductor " << n
        << (a.label().empty() ? "" : " (" + a.label() + ")") << "\n";
    out << "lattice: ";
    for (auto it = j["lattice"]["multiplicity_counts"].begin();
         it != j["lattice"]["multiplicity_counts"].end(); ++it)
        out << it.value().get<size_t>() << " points of multiplicity " << it.key() << "  ";
    out << "\n== resonance ==\n";
    out << j["resonance"].size() << " components\n";
    out << "== pencils ==\n";
    for (const auto& jc : j["pencils"]) {
        out << "  blocks " << jc["blocks"].dump();
        if (jc["certified"].get<bool>())
            out << " lifts to " << jc["lifted_equation"].get<std::string>() << " = 1, E dims "
                << jc["E_dims"].dump() << ", " << jc["verdict"].get<std::string>() << "\n";
        else
            out << " (not certified: " << jc["failure"].get<std::string>() << ")\n";
    }
    out << "== spectrum ==\n";
    for (long e = 0; e < analysis.spectrum.d; ++e)
        out << "  exponent " << e << ": " << analysis.spectrum.dims[e] << "\n";
    out << "b1(F) = " << analysis.spectrum.b1F << ", w1F = " << analysis.fiber.w1F << "\n";
    out << "== verdict ==\n";
    out << verdict_name(analysis.verdict.verdict);
    if (analysis.verdict.has_witness && analysis.verdict.verdict ==
                                            ObstructionReport::Verdict::NotOneFormal)
        out << " (witness " << analysis.verdict.witness_w1_h10 << " > "
            << analysis.verdict.witness_e10 << ")";
    out << "\n";
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact topology of complex line arrangements"};
    app.require_subcommand(1);

    Options opt;
    auto* lattice = app.add_subcommand("lattice", "intersection lattice and complement invariants");
    add_input_options(lattice, opt.input);
    lattice->add_option("-f,--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    lattice->add_flag("--emit-input", opt.emit_input, "print the arrangement file back");

    auto* resonance = app.add_subcommand("resonance", "first resonance variety components");
    add_input_options(resonance, opt.input);
    resonance->add_option("-f,--format", opt.format)->check(CLI::IsMember({"text", "json"}));
    resonance->add_option("--max-k", opt.max_k, "largest block count searched");

    auto* pencil = app.add_subcommand("pencil", "pencil of a block partition and its lift");
    add_input_options(pencil, opt.input);
    pencil->add_option("-f,--format", opt.format)->check(CLI::IsMember({"text", "json"}));
    pencil->add_option("--blocks", opt.blocks, "JSON array of arrays of 1-based line indices");

    auto* cover = app.add_subcommand("cover", "covering-space connectivity verdicts");
    add_input_options(cover, opt.input);
    cover->add_option("-f,--format", opt.format)->check(CLI::IsMember({"text", "json"}));
    cover->add_option("--point", opt.point, "1-based lattice point index (local verdict)");
    cover->add_option("--pencil", opt.blocks, "block partition JSON (global verdict)");

    auto* braid = app.add_subcommand("braid", "exact braid monodromy of the deconed arrangement");
    add_input_options(braid, opt.input);
    braid->add_option("-f,--format", opt.format)->check(CLI::IsMember({"text", "json"}));
    braid->add_option("--infinity", opt.infinity, "1-based line sent to infinity (default: last)");

    auto* spectrum = app.add_subcommand("spectrum", "monodromy eigenspace dimensions of H^1(F)");
    add_input_options(spectrum, opt.input);
    spectrum->add_option("-f,--format", opt.format)->check(CLI::IsMember({"text", "json"}));
    spectrum->add_option("--infinity", opt.infinity, "1-based line sent to infinity");
    spectrum->add_flag("--crosscheck", opt.crosscheck, "run the cyclic cover oracle");

    auto* obstruct = app.add_subcommand("obstruct", "1-formality obstruction verdict");
    add_input_options(obstruct, opt.input);
    obstruct->add_option("-f,--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    auto* report = app.add_subcommand("report", "full analysis document");
    add_input_options(report, opt.input);
    report->add_option("-f,--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (lattice->parsed()) return cmd_lattice(opt, out);
        if (resonance->parsed()) return cmd_resonance(opt, out);
        if (pencil->parsed()) return cmd_pencil(opt, out);
        if (cover->parsed()) return cmd_cover(opt, out);
        if (braid->parsed()) return cmd_braid(opt, out);
        if (spectrum->parsed()) return cmd_spectrum(opt, out);
        if (obstruct->parsed()) return cmd_obstruct(opt, out);
        if (report->parsed()) return cmd_report(opt, out);
        err << "no subcommand\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(e.error_class());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace arrangetop

// edgenum command line: diagram parsing, cut-set search and validation,
// over/under digraphs, bracket/Jones invariants, census runs and conjecture
// scans. Machine output (JSON/CSV/DOT) goes to stdout and is byte-stable;
// diagnostics go to stderr.
//
// Exit codes: 0 success, 1 domain violation (an asserted presentation is
// invalid, or the requested invariant is unavailable for the input), 2
// usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "edgenum/census.hpp"
#include "edgenum/diagram.hpp"
#include "edgenum/digraph.hpp"
#include "edgenum/invariants.hpp"
#include "edgenum/laurent.hpp"
#include "edgenum/presentation.hpp"

namespace {

using nlohmann::ordered_json;

struct InputOpts {
    std::string pd, gauss, file;
};

void add_input_options(CLI::App* cmd, InputOpts& in) {
    auto* a = cmd->add_option("--pd", in.pd, "planar diagram code, e.g. \"X[1,4,2,5] ...\"");
    auto* b = cmd->add_option("--gauss", in.gauss, "extended Gauss code, e.g. \"O1+U2+...\"");
    auto* c = cmd->add_option("--file", in.file, "read the code from a file");
    a->excludes(b)->excludes(c);
    b->excludes(c);
}

edgenum::Diagram load_input(const InputOpts& in) {
    int given = (!in.pd.empty()) + (!in.gauss.empty()) + (!in.file.empty());
    if (given != 1) throw CLI::ValidationError("exactly one of --pd/--gauss/--file is required");
    if (!in.pd.empty()) return edgenum::parse_pd(in.pd);
    if (!in.gauss.empty()) return edgenum::parse_gauss(in.gauss);
    std::ifstream f(in.file);
    if (!f) throw edgenum::parse_error("cannot open " + in.file);
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    if (text.find("X[") != std::string::npos || text.find("unknot(") != std::string::npos)
        return edgenum::parse_pd(text);
    return edgenum::parse_gauss(text);
}

std::string role_string(const edgenum::Diagram& d, int comp) {
    std::string s;
    for (const auto& p : d.components()[comp]) s += p.role == edgenum::Role::Over ? 'O' : 'U';
    return s;
}

int cmd_parse(const InputOpts& in, bool json) {
    edgenum::Diagram d = load_input(in);
    if (json) {
        ordered_json j;
        j["crossings"] = d.crossing_count();
        j["components"] = d.component_count();
        j["crossingless_components"] = d.crossingless_components();
        j["roles"] = ordered_json::array();
        for (size_t ci = 0; ci < d.components().size(); ++ci)
            j["roles"].push_back(role_string(d, static_cast<int>(ci)));
        if (d.has_signs()) j["writhe"] = edgenum::writhe(d);
        if (d.has_planar_data()) j["pd"] = edgenum::to_pd_text(d);
        if (d.crossingless_components() == 0) j["gauss"] = edgenum::to_gauss_text(d);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "crossings=" << d.crossing_count() << " components=" << d.component_count()
              << "\n";
    for (size_t ci = 0; ci < d.components().size(); ++ci)
        std::cout << "component " << ci + 1 << ": roles " << role_string(d, static_cast<int>(ci))
                  << "\n";
    if (d.has_signs()) std::cout << "writhe=" << edgenum::writhe(d) << "\n";
    if (d.has_planar_data()) std::cout << "pd: " << edgenum::to_pd_text(d) << "\n";
    return 0;
}

int cmd_search(const InputOpts& in, int n_max, int jobs, bool json) {
    edgenum::Diagram d = load_input(in);
    edgenum::SearchOptions so;
    so.n_max = n_max;
    so.jobs = jobs;
    edgenum::SearchResult r = edgenum::min_presentation(d, so);
    if (json) {
        ordered_json j;
        j["found"] = r.found;
        if (r.found) {
            j["minimal_n"] = r.minimal_n;  // e(D), an upper bound for e(K)
            j["witness"] = edgenum::cut_text(r.witness);
            j["valid_at_minimal_n"] = r.valid_count_at_minimal_n;
        }
        j["candidates_examined"] = r.candidates_examined;
        j["truncated"] = r.truncated;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (!r.found) {
        std::cout << "no valid presentation found (truncated=" << (r.truncated ? "yes" : "no")
                  << "; candidates=" << r.candidates_examined << ")\n";
        return 0;
    }
    std::cout << "minimal_n=" << r.minimal_n << " witness=" << edgenum::cut_text(r.witness) << "\n";
    std::cout << "candidates=" << r.candidates_examined
              << " valid_at_minimal_n=" << r.valid_count_at_minimal_n
              << " (e(D): diagram-level, upper bound for e(K))\n";
    return 0;
}

int cmd_present(const InputOpts& in, const std::string& cuts, bool json) {
    edgenum::Diagram d = load_input(in);
    edgenum::CutSet s = edgenum::parse_cut_text(d, cuts);
    edgenum::CheckOutcome out = edgenum::check_presentation(d, s);
    if (json) {
        ordered_json j;
        j["cuts"] = edgenum::cut_text(s);
        j["valid"] = out.ok();
        if (out.ok()) {
            const auto& p = *out.presentation;
            j["edges"] = ordered_json::array();
            for (const auto& e : p.edges) {
                ordered_json je;
                je["component"] = e.component + 1;
                je["crossings"] = ordered_json::array();
                for (int x : e.crossings) je["crossings"].push_back(d.crossings()[x].id);
                j["edges"].push_back(je);
            }
            j["relations"] = ordered_json::array();
            for (int i = 0; i < p.size(); ++i)
                for (int k = i + 1; k < p.size(); ++k) {
                    if (p.relation(i, k) == edgenum::Relation::NoCrossing) continue;
                    ordered_json jr;
                    jr["over"] = (p.over(i, k) ? i : k) + 1;
                    jr["under"] = (p.over(i, k) ? k : i) + 1;
                    jr["crossings"] = ordered_json::array();
                    for (int x : p.shared_crossings(i, k))
                        jr["crossings"].push_back(d.crossings()[x].id);
                    j["relations"].push_back(jr);
                }
        } else {
            j["violation"] = out.violation->message;
            j["condition"] = out.violation->condition;
        }
        std::cout << j.dump(2) << "\n";
        return out.ok() ? 0 : 1;
    }
    if (!out.ok()) {
        std::cout << "invalid: " << out.violation->message << "\n";
        return 1;
    }
    const auto& p = *out.presentation;
    std::cout << "valid: " << p.size() << " edges\n";
    for (int i = 0; i < p.size(); ++i) {
        std::cout << "e" << i + 1 << ":";
        for (int x : p.edges[i].crossings) std::cout << ' ' << d.crossings()[x].id;
        if (p.edges[i].crossings.empty()) std::cout << " (no crossings)";
        std::cout << "\n";
    }
    for (int i = 0; i < p.size(); ++i)
        for (int k = i + 1; k < p.size(); ++k) {
            if (p.relation(i, k) == edgenum::Relation::NoCrossing) continue;
            int o = p.over(i, k) ? i : k, u = o == i ? k : i;
            std::cout << "e" << o + 1 << " > e" << u + 1 << " at crossings";
            for (int x : p.shared_crossings(i, k)) std::cout << ' ' << d.crossings()[x].id;
            std::cout << "\n";
        }
    return 0;
}

int cmd_digraph(const InputOpts& in, const std::string& cuts, const std::string& dot_path,
                bool json) {
    edgenum::Diagram d = load_input(in);
    edgenum::CutSet s = edgenum::parse_cut_text(d, cuts);
    edgenum::CheckOutcome out = edgenum::check_presentation(d, s);
    if (!out.ok()) {
        std::cerr << "invalid presentation: " << out.violation->message << "\n";
        return 1;
    }
    edgenum::OverDigraph g = edgenum::build(*out.presentation);
    edgenum::DigraphClass dc = edgenum::classify(g);
    std::string dot = edgenum::to_dot(g);
    if (!dot_path.empty()) {
        std::ofstream f(dot_path);
        if (!f) throw edgenum::parse_error("cannot write " + dot_path);
        f << dot;
    }
    if (json) {
        ordered_json j;
        j["vertices"] = g.vertex_count;
        j["arcs"] = ordered_json::array();
        for (const auto& a : g.arcs)
            j["arcs"].push_back("e" + std::to_string(a.from + 1) + "->e" +
                                std::to_string(a.to + 1));
        j["class"] = edgenum::digraph_class_string(dc, g.vertex_count);
        j["connected"] = dc.connected;
        j["is_path"] = dc.is_path;
        j["has_directed_cycle"] = dc.has_directed_cycle;
        j["is_directed_n_cycle"] = dc.is_directed_n_cycle;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "class=" << edgenum::digraph_class_string(dc, g.vertex_count) << "\n";
    if (dot_path.empty()) std::cout << dot;
    return 0;
}

int cmd_jones(const InputOpts& in, int jobs, bool json, bool bracket_too) {
    edgenum::Diagram d = load_input(in);
    edgenum::InvariantOptions io;
    io.jobs = jobs;
    edgenum::Laurent v = edgenum::jones(d, io);
    if (json) {
        ordered_json j;
        j["jones"] = v.str(edgenum::Var::TQuarter);
        j["writhe"] = edgenum::writhe(d);
        if (bracket_too) j["bracket"] = edgenum::bracket(d, io).str(edgenum::Var::A);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << v.str(edgenum::Var::TQuarter) << "\n";
    if (bracket_too)
        std::cout << "bracket: " << edgenum::bracket(d, io).str(edgenum::Var::A) << "\n";
    return 0;
}

int cmd_bounds(const InputOpts& in, int jobs, bool json) {
    edgenum::Diagram d = load_input(in);
    edgenum::BoundsOptions bo;
    bo.search.jobs = jobs;
    edgenum::Bounds b = edgenum::edge_number_bounds(d, bo);
    if (json) {
        ordered_json j;
        j["e_lower"] = b.e_lower;
        j["e_lower_reason"] = edgenum::to_string(b.reason);
        j["e_upper"] = b.e_upper;  // e(D), upper bound for e(K)
        j["e_upper_witness"] = edgenum::cut_text(b.witness);
        j["bridge_upper"] = b.bridge_upper;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "e_lower=" << b.e_lower << " (" << edgenum::to_string(b.reason) << ")\n"
              << "e_upper=" << b.e_upper << " witness=" << edgenum::cut_text(b.witness)
              << " (e(D): diagram-level, upper bound for e(K))\n"
              << "bridge_upper=" << b.bridge_upper << "\n";
    return 0;
}

int cmd_scan(const InputOpts& in, int n_max, int jobs) {
    edgenum::Diagram d = load_input(in);
    edgenum::ScanResult sr = edgenum::scan_conjecture(d, n_max, jobs);
    std::cout << edgenum::scan_json(sr).dump(2) << "\n";
    return 0;
}

std::string default_census_path(const std::string& explicit_path) {
    if (!explicit_path.empty()) return explicit_path;
    if (const char* env = std::getenv("EDGENUM_CENSUS")) return env;
    throw CLI::ValidationError("no census file given and EDGENUM_CENSUS is not set");
}

int cmd_census_run(const std::string& file, const std::string& out_path, int jobs, bool json) {
    auto records = edgenum::load_census(default_census_path(file));
    edgenum::AnalysisOptions opts;
    opts.jobs = jobs;
    auto rows = edgenum::run_census(records, opts);
    std::string payload;
    if (json) {
        ordered_json j = ordered_json::array();
        for (const auto& r : rows) j.push_back(edgenum::row_json(r));
        payload = j.dump(2) + "\n";
    } else {
        payload = edgenum::analysis_csv(rows);
    }
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw edgenum::parse_error("cannot write " + out_path);
        f << payload;
        std::cerr << "wrote " << rows.size() << " rows to " << out_path << "\n";
    } else {
        std::cout << payload;
    }
    return 0;
}

int cmd_census_verify(const std::string& file, const std::string& out_path, int merge_trials) {
    auto records = edgenum::load_census(default_census_path(file));
    edgenum::SuiteOptions so;
    if (merge_trials > 0) so.merge_trials = merge_trials;
    edgenum::SuiteReport rep = edgenum::verify_propositions(records, so);
    std::string payload = edgenum::suite_report_json(rep).dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw edgenum::parse_error("cannot write " + out_path);
        f << payload;
    } else {
        std::cout << payload;
    }
    for (const auto& c : rep.checks)
        std::cerr << (c.failures == 0 ? "pass " : "FAIL ") << c.check << " (" << c.instances
                  << " instances, " << c.failures << " failures)\n";
    return rep.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"diagram-level edge-number bounds for knots and links"};
    app.require_subcommand(1);

    InputOpts in;
    bool json = false;
    int jobs = 1, n_max = -1;
    std::string cuts, dot_path, file, out_path;
    bool with_bracket = false;
    int merge_trials = -1;

    auto* parse_cmd = app.add_subcommand("parse", "parse and summarize a diagram");
    add_input_options(parse_cmd, in);
    parse_cmd->add_flag("--json", json);

    auto* search_cmd = app.add_subcommand("search", "minimal valid cut-set search (e(D))");
    add_input_options(search_cmd, in);
    search_cmd->add_option("--n-max", n_max, "search bound (default: overpass cut count)");
    search_cmd->add_option("--jobs", jobs, "worker threads");
    search_cmd->add_flag("--json", json);

    auto* present_cmd = app.add_subcommand("present", "validate a cut set, print the relation table");
    add_input_options(present_cmd, in);
    present_cmd->add_option("--cuts", cuts, "1-based gap indices, e.g. \"1,3,5\" or \"1;1,2\"")
        ->required();
    present_cmd->add_flag("--json", json);

    auto* digraph_cmd = app.add_subcommand("digraph", "build and classify G(D), emit DOT");
    add_input_options(digraph_cmd, in);
    digraph_cmd->add_option("--cuts", cuts)->required();
    digraph_cmd->add_option("--dot", dot_path, "write DOT here instead of stdout");
    digraph_cmd->add_flag("--json", json);

    auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial (exact)");
    add_input_options(jones_cmd, in);
    jones_cmd->add_option("--jobs", jobs);
    jones_cmd->add_flag("--bracket", with_bracket, "also print the Kauffman bracket");
    jones_cmd->add_flag("--json", json);

    auto* bounds_cmd = app.add_subcommand("bounds", "edge-number bounds record");
    add_input_options(bounds_cmd, in);
    bounds_cmd->add_option("--jobs", jobs);
    bounds_cmd->add_flag("--json", json);

    auto* census_cmd = app.add_subcommand("census", "batch census analysis");
    auto* census_run = census_cmd->add_subcommand("run", "analyze a census file, emit CSV");
    census_run->add_option("file", file, "census JSON (default: $EDGENUM_CENSUS)");
    census_run->add_option("-o,--output", out_path, "output path (default: stdout)");
    census_run->add_option("--jobs", jobs);
    census_run->add_flag("--json", json, "emit JSON rows instead of CSV");
    auto* census_verify = census_cmd->add_subcommand("verify", "run the proposition suite");
    census_verify->add_option("file", file);
    census_verify->add_option("-o,--output", out_path);
    census_verify->add_option("--merge-trials", merge_trials);
    census_cmd->require_subcommand(1);

    auto* scan_cmd = app.add_subcommand("scan", "oriented-cycle conjecture scan (JSON)");
    add_input_options(scan_cmd, in);
    scan_cmd->add_option("--n-max", n_max, "scan bound (default 2c)");
    scan_cmd->add_option("--jobs", jobs);

    try {
        app.parse(argc, argv);
        if (parse_cmd->parsed()) return cmd_parse(in, json);
        if (search_cmd->parsed()) return cmd_search(in, n_max, jobs, json);
        if (present_cmd->parsed()) return cmd_present(in, cuts, json);
        if (digraph_cmd->parsed()) return cmd_digraph(in, cuts, dot_path, json);
        if (jones_cmd->parsed()) return cmd_jones(in, jobs, json, with_bracket);
        if (bounds_cmd->parsed()) return cmd_bounds(in, jobs, json);
        if (census_cmd->parsed()) {
            if (census_run->parsed()) return cmd_census_run(file, out_path, jobs, json);
            return cmd_census_verify(file, out_path, merge_trials);
        }
        if (scan_cmd->parsed()) return cmd_scan(in, n_max, jobs);
        std::cerr << app.help();
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const edgenum::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

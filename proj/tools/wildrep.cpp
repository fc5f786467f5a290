#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wildrep/errors.hpp"
#include "wildrep/report.hpp"

using namespace wildrep;
namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

std::string matrix_str(const std::vector<std::vector<long>>& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < m[i].size(); ++j) out += (j ? ", " : "") + std::to_string(m[i][j]);
        out += "]";
    }
    return out + "]";
}

void print_summary(const Report& r, std::ostream& out) {
    out << r.name << ": k = " << r.k() << ", distinct forests = " << r.distinct_forests
        << ", dimension = " << r.dimension << "\n";
    for (std::size_t i = 0; i < r.readings.size(); ++i) {
        const auto& rd = r.readings[i];
        out << "  " << rd.label.str() << ": rank " << rd.rank << ", singularities " << rd.total_sings();
        if (i < r.verified.size()) out << (r.verified[i] ? ", diagram verified" : ", DIAGRAM MISMATCH");
        out << "\n";
    }
    out << "  B = " << matrix_str(r.diagram.B) << "\n";
    for (const auto& n : r.diagram.nodes) {
        out << "  node " << n.label << " dim " << n.dim;
        if (!n.legs.empty()) {
            out << " leg";
            for (int l : n.legs) out << " " << l;
        }
        out << "\n";
    }
}

void write_dots(const Report& r, const std::string& dir) {
    fs::create_directories(dir);
    fs::path base(dir);
    write_file(base / (r.name + "_enriched.dot"), emit_dot(r.tree.tree(), r.name + " enriched"));
    for (const auto& rd : r.readings) {
        std::string tag = rd.label.generic() ? "generic" : "reading" + std::to_string(rd.label.index);
        write_file(base / (r.name + "_" + tag + ".dot"), emit_dot(rd.forest, r.name + " " + tag));
    }
    write_file(base / (r.name + "_diagram.dot"), emit_dot(r.diagram, r.name + " diagram"));
}

void emit(const std::vector<Report>& reports, const std::string& json_path, const std::string& dot_dir) {
    std::ostream& summary = json_path == "-" ? std::cerr : std::cout;
    for (const auto& r : reports) print_summary(r, summary);
    if (!json_path.empty()) {
        std::string text;
        if (reports.size() == 1) {
            text = emit_json(reports.front());
        } else {
            Json all = Json::array();
            for (const auto& r : reports) all.push_back(to_json(r));
            text = all.dump(2) + "\n";
        }
        if (json_path == "-") std::cout << text;
        else write_file(json_path, text);
    }
    if (!dot_dir.empty()) {
        for (const auto& r : reports) write_dots(r, dot_dir);
    }
}

int exit_code(ErrorStage s) {
    switch (s) {
        case ErrorStage::Parse: return 2;
        case ErrorStage::Semantic: return 3;
        case ErrorStage::Pipeline: return 4;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Readings, forests and diagrams of meromorphic connection classes"};
    app.require_subcommand(1);

    std::string file, json_path, dot_dir, name, forest_path;
    bool unmodified = false, verify = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a class written in the text format");
    analyze_cmd->add_option("file", file, "Input file")->required();
    analyze_cmd->add_option("--json", json_path, "Write the JSON report here ('-' for stdout)");
    analyze_cmd->add_option("--dot-dir", dot_dir, "Write DOT renderings into this directory");
    analyze_cmd->add_flag("--unmodified", unmodified, "Read the input as unmodified formal data");
    analyze_cmd->add_flag("--verify-readings", verify, "Realize every reading and compare diagrams");

    auto* painleve_cmd = app.add_subcommand("painleve", "Report on a built-in Painleve class");
    painleve_cmd->add_option("name", name, "PI, PII, PIII2, PIII1, PIII0, PIV, PV, PVI or all")->required();
    painleve_cmd->add_option("--json", json_path, "Write the JSON report here ('-' for stdout)");
    painleve_cmd->add_option("--dot-dir", dot_dir, "Write DOT renderings into this directory");

    auto* realize_cmd = app.add_subcommand("realize", "Print a class whose forest matches a JSON forest");
    realize_cmd->add_option("forest", forest_path, "Forest JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze_cmd) {
            AnalyzeOptions opts;
            opts.unmodified = unmodified;
            opts.verify_readings = verify;
            emit({analyze(parse_dsl(read_file(file)), opts)}, json_path, dot_dir);
        } else if (*painleve_cmd) {
            std::vector<Report> reports;
            if (name == "all") {
                for (const auto& n : catalog_names()) reports.push_back(catalog_report(n));
            } else {
                reports.push_back(catalog_report(name));
            }
            emit(reports, json_path, dot_dir);
        } else if (*realize_cmd) {
            Json j = Json::parse(read_file(forest_path));
            FissionForest f = forest_from_json(j.contains("trees") ? j : j.at("forest"));
            std::cout << print_dsl({"realized", realize(f)});
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.stage());
    } catch (const Json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

// Command-line front end: build configuration complexes, compute homology,
// run the verification table, and dump generating-function coefficients.
// stdout carries data (JSON or CSV), stderr carries diagnostics.
// Exit codes: 0 success, 1 computation/verification failure, 2 parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wedgelab/combinatorics.hpp"
#include "wedgelab/config.hpp"
#include "wedgelab/homology.hpp"
#include "wedgelab/partitions.hpp"
#include "wedgelab/series.hpp"
#include "wedgelab/simplicial.hpp"
#include "wedgelab/verify.hpp"

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// simplex:n | complete:m | skeleton:n:d | file:path
struct SpaceDesc {
    std::string label;
    enum class Kind { Simplex, Complete, Skeleton, File } kind = Kind::Simplex;
    int a = 0;
    int b = 0;
    std::string path;
};

int parse_nonneg(const std::string& s, const std::string& what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw usage_error("invalid " + what + ": '" + s + "'");
    try {
        return std::stoi(s);
    } catch (const std::exception&) {
        throw usage_error("invalid " + what + ": '" + s + "'");
    }
}

SpaceDesc parse_space(const std::string& text) {
    SpaceDesc sp;
    sp.label = text;
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw usage_error("space must look like simplex:n, complete:m, skeleton:n:d or file:path");
    const std::string head = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    if (head == "simplex") {
        sp.kind = SpaceDesc::Kind::Simplex;
        sp.a = parse_nonneg(rest, "simplex dimension");
    } else if (head == "complete") {
        sp.kind = SpaceDesc::Kind::Complete;
        sp.a = parse_nonneg(rest, "vertex count");
    } else if (head == "skeleton") {
        auto colon2 = rest.find(':');
        if (colon2 == std::string::npos)
            throw usage_error("skeleton needs two parameters: skeleton:n:d");
        sp.kind = SpaceDesc::Kind::Skeleton;
        sp.a = parse_nonneg(rest.substr(0, colon2), "simplex dimension");
        sp.b = parse_nonneg(rest.substr(colon2 + 1), "skeleton dimension");
    } else if (head == "file") {
        sp.kind = SpaceDesc::Kind::File;
        sp.path = rest;
        std::ifstream in(sp.path);
        if (!in) throw usage_error("cannot open facet file: " + sp.path);
    } else {
        throw usage_error("unknown space kind: '" + head + "'");
    }
    return sp;
}

wedgelab::SimplicialComplex build_space(const SpaceDesc& sp) {
    switch (sp.kind) {
        case SpaceDesc::Kind::Simplex:
            return wedgelab::full_simplex(sp.a);
        case SpaceDesc::Kind::Complete:
            return wedgelab::complete_graph(sp.a);
        case SpaceDesc::Kind::Skeleton:
            return wedgelab::skeleton(wedgelab::full_simplex(sp.a), sp.b);
        case SpaceDesc::Kind::File:
            return wedgelab::read_complex_file(sp.path);
    }
    throw std::logic_error("unreachable space kind");
}

void write_out(const std::string& data, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write output file: " + out_path);
    out << data;
}

int jobs_from_env(int jobs_flag) {
    if (const char* env = std::getenv("WEDGELAB_JOBS")) {
        std::string s(env);
        if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos)
            return std::stoi(s);
        std::cerr << "warning: ignoring malformed WEDGELAB_JOBS='" << s << "'\n";
    }
    return jobs_flag;
}

std::string egf_csv(int max_degree) {
    wedgelab::BivariateSeries S = wedgelab::egf_series(max_degree);
    std::ostringstream os;
    os << "k,n,chi\n";
    for (int k = 0; k <= max_degree; ++k)
        for (int n = 0; n + 1 + k <= max_degree; ++n) {
            wedgelab::Rational c = S.coeff(k, n + 1) * wedgelab::Rational(wedgelab::factorial(k)) *
                                   wedgelab::Rational(wedgelab::factorial(n + 1));
            if (boost::multiprecision::denominator(c) != 1)
                throw std::logic_error("generating function gave a non-integer count");
            os << k << ',' << n << ',' << wedgelab::to_decimal(boost::multiprecision::numerator(c))
               << '\n';
        }
    return os.str();
}

nlohmann::ordered_json egf_json(int max_degree) {
    wedgelab::BivariateSeries S = wedgelab::egf_series(max_degree);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int k = 0; k <= max_degree; ++k)
        for (int n = 0; n + 1 + k <= max_degree; ++n) {
            wedgelab::Rational c = S.coeff(k, n + 1) * wedgelab::Rational(wedgelab::factorial(k)) *
                                   wedgelab::Rational(wedgelab::factorial(n + 1));
            if (boost::multiprecision::denominator(c) != 1)
                throw std::logic_error("generating function gave a non-integer count");
            nlohmann::ordered_json row;
            row["k"] = std::to_string(k);
            row["n"] = std::to_string(n);
            row["chi"] = wedgelab::to_decimal(boost::multiprecision::numerator(c));
            arr.push_back(std::move(row));
        }
    return arr;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for configuration complexes on simplicial complexes"};
    app.require_subcommand(1);

    std::string space_text;
    int k = 1;
    bool unordered = false;
    std::string out_path;
    int max_n = 6;
    int max_k = -1;
    bool with_homology = false;
    std::string format = "csv";
    int jobs = 0;
    bool inject_fault = false;
    int max_degree = 12;

    CLI::App* c_build = app.add_subcommand("build", "build a complex and print its summary");
    c_build->add_option("space", space_text, "simplex:n | complete:m | skeleton:n:d | file:path")
        ->required();
    c_build->add_option("--k", k, "number of points")->required();
    c_build->add_flag("--unordered", unordered, "quotient by permuting the points");
    c_build->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* c_hom = app.add_subcommand("homology", "integer homology of a configuration complex");
    c_hom->add_option("space", space_text, "simplex:n | complete:m | skeleton:n:d | file:path")
        ->required();
    c_hom->add_option("--k", k, "number of points")->required();
    c_hom->add_flag("--unordered", unordered, "quotient by permuting the points");
    c_hom->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* c_verify = app.add_subcommand("verify", "cross-check the closed-form count table");
    c_verify->add_option("--max-n", max_n, "largest simplex dimension");
    c_verify->add_option("--max-k", max_k, "largest point count (default: max-n)");
    c_verify->add_flag("--with-homology", with_homology, "also compare against computed homology");
    c_verify->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    c_verify->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    c_verify->add_flag("--inject-fault", inject_fault, "corrupt one boundary sign (self-test)")
        ->group("");  // hidden test hook
    c_verify->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* c_egf = app.add_subcommand("egf", "Euler characteristics from the generating function");
    c_egf->add_option("--max-degree", max_degree, "total series degree (at most 24)");
    c_egf->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    c_egf->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* c_table = app.add_subcommand("table", "print the count table without gating on it");
    c_table->add_option("--max-n", max_n, "largest simplex dimension");
    c_table->add_option("--max-k", max_k, "largest point count (default: max-n)");
    c_table->add_flag("--with-homology", with_homology, "also include computed homology ranks");
    c_table->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    c_table->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    c_table->add_option("--out", out_path, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (c_build->parsed() || c_hom->parsed()) {
            SpaceDesc sp = parse_space(space_text);
            if (k < 0) throw usage_error("--k must be nonnegative");
            wedgelab::SimplicialComplex X = build_space(sp);
            wedgelab::ConfigComplex C = unordered ? wedgelab::build_unordered(X, k)
                                                  : wedgelab::build_ordered(X, k);
            if (c_build->parsed()) {
                write_out(wedgelab::complex_summary(C, sp.label).dump(2) + "\n", out_path);
            } else {
                nlohmann::ordered_json j;
                j["space"] = sp.label;
                j["k"] = std::to_string(k);
                j["ordered"] = !unordered;
                j["homology"] = wedgelab::homology_to_json(wedgelab::chain_homology(C));
                write_out(j.dump(2) + "\n", out_path);
            }
            return 0;
        }
        if (c_verify->parsed() || c_table->parsed()) {
            if (max_n < 1) throw usage_error("--max-n must be at least 1");
            if (max_k == -1) max_k = max_n;
            if (max_k < 1) throw usage_error("--max-k must be at least 1");
            wedgelab::BettiTable T = wedgelab::run_verification(max_n, max_k, with_homology,
                                                                jobs_from_env(jobs), inject_fault);
            if (format == "csv")
                write_out(wedgelab::table_to_csv(T), out_path);
            else
                write_out(wedgelab::table_to_json(T).dump(2) + "\n", out_path);
            for (const wedgelab::BettiRow& r : T.rows)
                if (!r.pass) std::cerr << "mismatch: " << r.note << "\n";
            if (c_table->parsed()) return 0;
            return T.all_pass() ? 0 : 1;
        }
        if (c_egf->parsed()) {
            if (max_degree < 0 || max_degree > 24) {
                std::cerr << "--max-degree must be between 0 and 24\n";
                return 2;
            }
            if (format == "csv")
                write_out(egf_csv(max_degree), out_path);
            else
                write_out(egf_json(max_degree).dump(2) + "\n", out_path);
            return 0;
        }
    } catch (const usage_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}

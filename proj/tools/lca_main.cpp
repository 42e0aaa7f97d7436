#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lca/report_io.hpp"

using namespace lca;

namespace {

struct RunConfig {
    int zq = 0;
    std::string double_group;  // builtin name or path to a JSON Cayley table
    std::string backend = "exact";
    double tol = 1e-9;
    int sites = 1;
    std::string labels = "all";
    std::string format = "json";
    std::string out;
    // fuse extras
    int M = 1, N = 1;
    bool coassoc = false;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Backend backend_of(const RunConfig &c) {
    if (c.backend == "exact") return Backend::Exact;
    if (c.backend == "float") return Backend::Float;
    throw ConfigError("backend must be exact or float");
}

HopfPtr make_instance(const RunConfig &c) {
    if (c.tol <= 0) throw ConfigError("tolerance must be positive");
    float_tol() = c.tol;
    Backend b = backend_of(c);
    if (c.zq && !c.double_group.empty())
        throw ConfigError("choose one of --zq / --double");
    if (c.zq) {
        if (c.zq < 2) throw ConfigError("--zq needs p >= 2");
        return make_zq(c.zq, b);
    }
    if (c.double_group.empty()) throw ConfigError("an instance is required (--zq or --double)");
    std::string g = c.double_group;
    if (g == "s3" || g == "S3") return make_double_of_group(symmetric_group_3(), b, "D(S3)");
    if ((g[0] == 'z' || g[0] == 'Z') && g.size() > 1 &&
        g.find_first_not_of("0123456789", 1) == std::string::npos)
        return make_double_of_group(cyclic_group(std::stoi(g.substr(1))), b,
                                    "D(" + g + ")");
    std::ifstream in(g);
    if (!in) throw ConfigError("cannot open group table file " + g);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return make_double_of_group(group_table_from_json(ss.str(), g), b, "D(file)");
    } catch (const InvalidGroupTable &e) {
        throw ConfigError(std::string("bad group table: ") + e.what());
    }
}

std::vector<std::pair<int, int>> label_grid(const RunConfig &c, const HopfAlgebra &h) {
    int k = (int)h.irreps.size();
    if (c.labels == "all") {
        std::vector<std::pair<int, int>> out;
        for (int I = 0; I < k; ++I)
            for (int J = 0; J < k; ++J) out.push_back({I, J});
        return out;
    }
    int I, J;
    char comma;
    std::istringstream ss(c.labels);
    if (!(ss >> I >> comma >> J) || comma != ',')
        throw ConfigError("--labels wants I,J or all");
    if (I < 0 || I >= k || J < 0 || J >= k)
        throw ConfigError("label out of range for this instance");
    return {{I, J}};
}

void emit(const RunConfig &c, const std::string &text) {
    if (c.out.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(c.out);
    if (!out) throw ConfigError("cannot write " + c.out);
    out << text;
}

std::string lines_text(const std::vector<CheckLine> &lines) {
    std::ostringstream out;
    for (const auto &l : lines) {
        const char *s = l.status == CheckLine::Status::Pass     ? "pass"
                        : l.status == CheckLine::Status::Fail   ? "FAIL"
                                                                : "skip";
        out << s << "  " << l.name << "  (residual " << l.residual << ")\n";
    }
    return out.str();
}

void append(std::vector<CheckLine> &all, const std::vector<CheckLine> &more,
            const std::string &prefix) {
    for (auto l : more) {
        l.name = prefix + l.name;
        all.push_back(std::move(l));
    }
}

CheckLine flag_line(const std::string &name, bool ok, double res = 0) {
    return {name, ok ? CheckLine::Status::Pass : CheckLine::Status::Fail, res};
}

int finish(const RunConfig &c, const std::vector<CheckLine> &lines,
           const std::string &json_text) {
    if (c.format == "json")
        emit(c, json_text);
    else if (c.format == "text")
        emit(c, lines_text(lines));
    else if (c.format == "csv")
        throw ConfigError("csv output is only available for tables/decompose");
    else
        throw ConfigError("format must be json, csv or text");
    for (const auto &l : lines)
        if (l.status == CheckLine::Status::Fail) return 1;
    return 0;
}

int cmd_axioms(const RunConfig &c) {
    HopfPtr h = make_instance(c);
    AxiomReport rep = check_axioms(*h);
    ModularData md = modular_data(h);
    // modularity failure is reported but never fails the run
    std::string js = lines_to_json(rep.lines);
    js.insert(1, std::string("\n  \"modular\": ") + (md.modular ? "true" : "false") + ",");
    if (c.format == "json")
        emit(c, js);
    else
        emit(c, lines_text(rep.lines) +
                    (md.modular ? "modular: yes\n" : "modular: no\n"));
    return rep.passed() ? 0 : 1;
}

int cmd_check(const RunConfig &c) {
    HopfPtr h = make_instance(c);
    if (c.sites < 1) throw ConfigError("--sites wants N >= 1");
    ModularData md = modular_data(h);
    std::vector<CheckLine> all;
    for (auto [I, J] : label_grid(c, *h)) {
        std::string tag = "D(" + std::to_string(I) + "," + std::to_string(J) +
                          ")_" + std::to_string(c.sites) + ": ";
        LatticeModel m = build_lattice_rep(h, c.sites, I, J);
        append(all, check_relations(m).lines, tag);
        if (md.modular)
            append(all, center_and_projectors(m, md).report.lines, tag);
        all.push_back(flag_line(tag + "irreducible (commutant dimension 1)",
                                irreducibility(m) == 1));
        if (h->kappa && h->star)
            append(all, star_structure(m).report.lines, tag);
    }
    return finish(c, all, lines_to_json(all));
}

int cmd_tables(const RunConfig &c) {
    HopfPtr h = make_instance(c);
    ModularData md = modular_data(h);
    if (c.format == "csv") {
        emit(c, matrix_to_csv(md.s));
        return 0;
    }
    if (c.format == "text") {
        std::ostringstream out;
        int k = (int)h->irreps.size();
        out << h->name << ": " << k << " irreps, modular = "
            << (md.modular ? "yes" : "no") << "\n";
        for (int I = 0; I < k; ++I)
            out << "  " << h->irreps[I].label << "  d = " << md.qdim[I].str()
                << "  theta = " << md.t_diag[I].str() << "\n";
        emit(c, out.str());
        return 0;
    }
    emit(c, modular_tables_to_json(md));
    return 0;
}

int cmd_decompose(const RunConfig &c) {
    HopfPtr h = make_instance(c);
    if (c.sites < 1) throw ConfigError("--sites wants N >= 1");
    ModularData md = modular_data(h);
    if (!md.modular) throw ConfigError("decomposition needs a modular instance");
    std::vector<CheckLine> all;
    std::ostringstream csv;
    std::ostringstream js;
    js << "{\n  \"restrictions\": [";
    bool first = true;
    for (auto [I, J] : label_grid(c, *h)) {
        LatticeModel hat = build_lattice_rep(h, c.sites + 1, I, J);
        BlockspinReport bg = blockspin_gamma(hat, md);
        std::string tag = "gamma restriction of D(" + std::to_string(I) + "," +
                          std::to_string(J) + ")_" + std::to_string(c.sites + 1);
        append(all, bg.report.lines, tag + ": ");
        js << (first ? "" : ",") << "\n    {\"label\": [" << I << "," << J
           << "], \"report\": " << decomposition_to_json(bg.dec) << "}";
        first = false;
        csv << "# " << tag << "\n" << mult_table_to_csv(bg.dec.mult);
    }
    js << "\n  ],\n  \"checks\": " << lines_to_json(all) << "\n}";
    if (c.format == "csv") {
        emit(c, csv.str());
    } else if (c.format == "text") {
        emit(c, lines_text(all) + csv.str());
    } else {
        emit(c, js.str());
    }
    for (const auto &l : all)
        if (l.status == CheckLine::Status::Fail) return 1;
    return 0;
}

int cmd_fuse(const RunConfig &c) {
    HopfPtr h = make_instance(c);
    if (c.M < 1 || c.N < 1) throw ConfigError("--M/--N want sizes >= 1");
    ModularData md = modular_data(h);
    auto labels = label_grid(c, *h);
    if (c.labels == "all") labels = {{h->trivial_irrep, h->trivial_irrep}};
    auto [I, J] = labels[0];
    std::vector<CheckLine> all;
    LatticeModel a = build_lattice_rep(h, c.M, I, J);
    LatticeModel b = build_lattice_rep(h, c.N, I, J);
    GluedRep g = lambda_glue(a, b);
    append(all, g.report.lines, "Lambda gluing: ");
    if (c.M == c.N) {
        DeltaRep dr = delta_tensor(a, b);
        append(all, dr.report.lines, "coproduct: ");
        if (md.modular) {
            DecompositionReport d = decompose(dr.model, md);
            all.push_back(flag_line("coproduct decomposition consistent", d.consistent,
                                    d.residual));
        }
    }
    if (c.coassoc) {
        double r = coassociativity_check(a, b, a);
        all.push_back(flag_line("co-associativity", r < float_tol(), r));
    }
    return finish(c, all, lines_to_json(all));
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"lattice current algebra toolkit"};
    app.require_subcommand(1);
    RunConfig c;

    auto add_common = [&](CLI::App *s) {
        s->add_option("--zq", c.zq, "cyclic instance C[Z_p]");
        s->add_option("--double", c.double_group, "Drinfeld double: s3, zN or a JSON Cayley table file");
        s->add_option("--backend", c.backend, "exact|float");
        s->add_option("--tol", c.tol, "float comparison tolerance");
        s->add_option("--format", c.format, "json|csv|text");
        s->add_option("--out", c.out, "output path (default stdout)");
        return s;
    };

    auto *ax = add_common(app.add_subcommand("axioms", "Hopf/ribbon/modular axiom suite"));
    auto *ck = add_common(app.add_subcommand("check", "full lattice relation suite"));
    ck->add_option("--sites", c.sites, "number of lattice sites");
    ck->add_option("--labels", c.labels, "I,J or all");
    auto *tb = add_common(app.add_subcommand("tables", "S/T matrices, dimensions, fusion"));
    auto *dc = add_common(app.add_subcommand("decompose", "block-spin restriction decompositions"));
    dc->add_option("--sites", c.sites, "restrict from sites+1 down to sites");
    dc->add_option("--labels", c.labels, "I,J or all");
    auto *fu = add_common(app.add_subcommand("fuse", "gluing / coproduct suites"));
    fu->add_option("--M", c.M, "left chain length");
    fu->add_option("--N", c.N, "right chain length");
    fu->add_option("--labels", c.labels, "I,J label for both factors");
    fu->add_flag("--coassoc", c.coassoc, "also check co-associativity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (ax->parsed()) return cmd_axioms(c);
        if (ck->parsed()) return cmd_check(c);
        if (tb->parsed()) return cmd_tables(c);
        if (dc->parsed()) return cmd_decompose(c);
        if (fu->parsed()) return cmd_fuse(c);
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

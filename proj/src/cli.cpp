#include "ladder/cli.hpp"

#include <fstream>
#include <functional>

#include <CLI11.hpp>
#include <json.hpp>

#include "ladder/crystal.hpp"
#include "ladder/graph.hpp"
#include "ladder/io.hpp"
#include "ladder/jm.hpp"
#include "ladder/regularization.hpp"
#include "ladder/rim_hooks.hpp"
#include "ladder/verification.hpp"

namespace ladder {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    int ell = 3;
    int depth = 10;
    int nmax = 12;
    int residue = 0;
    std::string model = "classical";
    std::string dot;
    std::string core = "empty";
    int weight = 0;
    std::string suite = "all";
    std::string partition;
    bool plain = false;
};

// Thrown for bad flag values that CLI11 cannot validate on its own.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

CrystalModel model_of(const Options& o)
{
    return o.model == "ladder" ? CrystalModel::Ladder : CrystalModel::Classical;
}

Modulus modulus(const Options& o, int min_ell)
{
    if (o.ell < min_ell) {
        throw usage_error("--ell must be at least " + std::to_string(min_ell) + " for this subcommand");
    }
    return Modulus(o.ell);
}

json box_json(BoxPos b)
{
    return json::array({b.row, b.col});
}

json partition_list(const std::vector<Partition>& ps)
{
    auto a = json::array();
    for (const auto& p : ps) {
        a.push_back(to_string(p));
    }
    return a;
}

std::string lock_row(const std::vector<LockLabel>& row)
{
    std::string s;
    for (auto l : row) {
        s.push_back(l == LockLabel::Unlocked ? 'U' : 'L');
    }
    return s;
}

void emit(const Options& o, std::ostream& out, const json& j, const std::string& plain)
{
    if (o.plain) {
        out << plain << '\n';
    } else {
        out << j.dump(2) << '\n';
    }
}

void emit_plain_json(const Options& o, std::ostream& out, const json& j)
{
    if (o.plain) {
        for (const auto& [k, v] : j.items()) {
            out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
        }
    } else {
        out << j.dump(2) << '\n';
    }
}

int cmd_info(const Options& o, std::ostream& out)
{
    const Modulus m = modulus(o, 2);
    const auto p = parse_partition(o.partition);
    const auto cr = ell_core(p, m);
    json j;
    j["partition"] = to_string(p);
    j["ell"] = m.ell();
    j["size"] = p.size();
    j["length"] = p.length();
    j["transpose"] = to_string(transpose(p));
    j["regular"] = is_regular(p, m);
    j["core"] = to_string(cr.core);
    j["weight"] = cr.weight;
    j["is_core"] = is_core(p, m);
    if (m.ell() >= 3) {
        j["is_jm"] = is_jm(p, m);
        j["is_ell_partition"] = is_ell_partition(p, m);
        j["is_L_partition"] = is_L_partition(p, m);
        j["is_weak_ell_partition"] = is_regular(p, m) && is_weak_ell_partition(p, m);
    }
    j["is_ladder_node"] = is_ladder_node(p, m);
    j["regularization"] = to_string(regularize(p, m));
    j["deregularization"] = to_string(deregularize(p, m));
    emit_plain_json(o, out, j);
    return 0;
}

int cmd_core(const Options& o, std::ostream& out)
{
    const Modulus m = modulus(o, 2);
    const auto p = parse_partition(o.partition);
    const auto cr = ell_core(p, m);
    json j;
    j["partition"] = to_string(p);
    j["ell"] = m.ell();
    j["core"] = to_string(cr.core);
    j["weight"] = cr.weight;
    emit(o, out, j, to_string(cr.core) + " weight=" + std::to_string(cr.weight));
    return 0;
}

int cmd_jm_check(const Options& o, std::ostream& out)
{
    const Modulus m = modulus(o, 3);
    const auto p = parse_partition(o.partition);
    const auto w = fayers_witness(p, m);
    json j;
    j["partition"] = to_string(p);
    j["ell"] = m.ell();
    j["is_jm"] = !w.has_value();
    if (w) {
        j["witness"] = {{"base", box_json(w->base)}, {"rowmate", box_json(w->rowmate)},
                        {"colmate", box_json(w->colmate)}};
    } else {
        j["witness"] = nullptr;
    }
    emit(o, out, j, w ? "false" : "true");
    return 0;
}

int cmd_jm_count(const Options& o, std::ostream& out)
{
    const Modulus m = modulus(o, 3);
    if (o.weight < 0) {
        throw usage_error("--weight must be non-negative");
    }
    const auto core = parse_partition(o.core);
    const auto n = count_jm(core, o.weight, m);
    const auto two = count_jm_two_term(core, o.weight, m);
    json j;
    j["core"] = to_string(core);
    j["weight"] = o.weight;
    j["ell"] = m.ell();
    j["count"] = n;
    j["two_term_count"] = two;
    j["two_term_agrees"] = n == two;
    emit(o, out, j, std::to_string(n));
    return 0;
}

int cmd_jm_enumerate(const Options& o, std::ostream& out)
{
    const Modulus m = modulus(o, 3);
    if (o.weight < 0) {
        throw usage_error("--weight must be non-negative");
    }
    const auto core = parse_partition(o.core);
    const auto all = enumerate_jm(core, o.weight, m);
    json j;
    j["core"] = to_string(core);
    j["weight"] = o.weight;
    j["ell"] = m.ell();
    j["count"] = all.size();
    j["partitions"] = partition_list(all);
    std::string plain;
    for (const auto& p : all) {
        plain += (plain.empty() ? "" : "\n") + to_string(p);
    }
    emit(o, out, j, plain);
    return 0;
}

int cmd_jm_decompose(const Options& o, std::ostream& out)
{
    const Modulus m = modulus(o, 3);
    const auto p = parse_partition(o.partition);
    const auto d = decompose_jm(p, m);
    json j;
    j["partition"] = to_string(p);
    j["ell"] = m.ell();
    j["mu"] = to_string(d.mu);
    j["r"] = d.r;
    j["s"] = d.s;
    j["rho"] = to_string(d.rho);
    j["sigma"] = to_string(d.sigma);
    emit(o, out, j,
         "mu=" + to_string(d.mu) + " r=" + std::to_string(d.r) + " s=" + std::to_string(d.s) +
             " rho=" + to_string(d.rho) + " sigma=" + to_string(d.sigma));
    return 0;
}

json graph_json(const CrystalGraph& g, int depth)
{
    json j;
    j["model"] = to_string(g.model);
    j["ell"] = g.ell;
    j["depth"] = depth;
    j["node_count"] = g.node_count();
    j["edge_count"] = g.edges.size();
    auto levels = json::array();
    for (std::size_t n = 0; n < g.levels.size(); ++n) {
        levels.push_back({{"n", n}, {"nodes", partition_list(g.levels[n])}});
    }
    j["levels"] = std::move(levels);
    auto edges = json::array();
    for (const auto& e : g.edges) {
        edges.push_back({{"source", to_string(e.source)}, {"target", to_string(e.target)}, {"residue", e.residue.value}});
    }
    j["edges"] = std::move(edges);
    return j;
}

int cmd_crystal_build(const Options& o, std::ostream& out)
{
    const Modulus m = modulus(o, 2);
    if (o.depth < 0) {
        throw usage_error("--depth must be non-negative");
    }
    const auto g = build_crystal(m, o.depth, model_of(o));
    if (!o.dot.empty()) {
        std::ofstream f(o.dot, std::ios::binary);
        if (!f) {
            throw usage_error("cannot write " + o.dot);
        }
        f << export_dot(g);
    }
    std::string plain;
    for (std::size_t n = 0; n < g.levels.size(); ++n) {
        plain += (n ? "\n" : "") + std::to_string(n) + ":";
        for (const auto& p : g.levels[n]) {
            plain += " " + to_string(p);
        }
    }
    emit(o, out, graph_json(g, o.depth), plain);
    return 0;
}

int cmd_crystal_string(const Options& o, std::ostream& out)
{
    const Modulus m = modulus(o, 2);
    if (o.residue < 0 || o.residue >= m.ell()) {
        throw usage_error("--residue must lie in [0, ell)");
    }
    const auto p = parse_partition(o.partition);
    const auto s = string_graph(p, Residue{o.residue}, m, model_of(o));
    json j;
    j["partition"] = to_string(p);
    j["ell"] = m.ell();
    j["model"] = o.model;
    j["residue"] = o.residue;
    j["string"] = partition_list(s);
    std::string plain;
    for (const auto& q : s) {
        plain += (plain.empty() ? "" : " -> ") + to_string(q);
    }
    emit(o, out, j, plain);
    return 0;
}

int report_reports(const Options& o, std::ostream& out, const std::vector<VerificationReport>& reports)
{
    bool ok = true;
    auto arr = json::array();
    std::string plain;
    for (const auto& r : reports) {
        ok = ok && r.passed();
        arr.push_back(r.to_json());
        plain += (plain.empty() ? "" : "\n") + r.suite + " ell=" + std::to_string(r.ell) + " " + r.params.dump() +
                 " checks=" + std::to_string(r.checks) + " failures=" + std::to_string(r.failures.size()) +
                 (r.passed() ? " PASS" : " FAIL");
    }
    emit(o, out, arr, plain);
    return ok ? 0 : 1;
}

int cmd_crystal_verify(const Options& o, std::ostream& out)
{
    const Modulus m = modulus(o, 2);
    if (o.depth < 0) {
        throw usage_error("--depth must be non-negative");
    }
    return report_reports(o, out, {verify_isomorphism(m, o.depth), crystal_structure_suite(m, o.depth)});
}

int cmd_suite(const Options& o, std::ostream& out)
{
    const Modulus m = modulus(o, 3);
    if (o.nmax < 0 || o.depth < 0) {
        throw usage_error("--nmax and --depth must be non-negative");
    }
    std::vector<VerificationReport> rs;
    const bool all = o.suite == "all";
    if (all || o.suite == "equivalences") rs.push_back(equivalence_suite(m, o.nmax));
    if (all || o.suite == "regularization") rs.push_back(regularization_suite(m, o.nmax));
    if (all || o.suite == "crystal") {
        rs.push_back(verify_isomorphism(m, o.depth));
        rs.push_back(crystal_structure_suite(m, o.depth));
    }
    if (all || o.suite == "theorems") rs.push_back(theorem_suite(m, o.nmax));
    if (all || o.suite == "mullineux") rs.push_back(mullineux_suite(m, o.nmax));
    return report_reports(o, out, rs);
}

int cmd_regularize(const Options& o, std::ostream& out)
{
    const Modulus m = modulus(o, 2);
    const auto p = parse_partition(o.partition);
    const auto r = regularize(p, m);
    json j;
    j["input"] = to_string(p);
    j["ell"] = m.ell();
    j["result"] = to_string(r);
    emit(o, out, j, to_string(r));
    return 0;
}

int cmd_deregularize(const Options& o, std::ostream& out)
{
    const Modulus m = modulus(o, 2);
    const auto p = parse_partition(o.partition);
    const auto s = deregularize(p, m);
    const auto locks = lock_labels(p, m);
    json j;
    j["input"] = to_string(p);
    j["ell"] = m.ell();
    j["result"] = to_string(s);
    auto rows = json::array();
    for (const auto& row : locks.rows()) {
        rows.push_back(lock_row(row));
    }
    j["locks"] = std::move(rows);
    emit(o, out, j, to_string(s));
    return 0;
}

int cmd_regclass(const Options& o, std::ostream& out)
{
    const Modulus m = modulus(o, 2);
    const auto p = parse_partition(o.partition);
    const auto rc = reg_class(p, m);
    json j;
    j["input"] = to_string(p);
    j["ell"] = m.ell();
    j["regular"] = to_string(rc.representative_regular);
    j["smallest"] = to_string(deregularize(p, m));
    j["members"] = partition_list(rc.members);
    std::string plain;
    for (const auto& q : rc.members) {
        plain += (plain.empty() ? "" : "\n") + to_string(q);
    }
    emit(o, out, j, plain);
    return 0;
}

int cmd_mullineux(const Options& o, std::ostream& out, std::ostream& err)
{
    const Modulus m = modulus(o, 3);
    const auto p = parse_partition(o.partition);
    if (!is_regular(p, m)) {
        err << "error: the Mullineux map needs an ell-regular partition\n";
        return 2;
    }
    const auto r = mullineux(p, m);
    json j;
    j["input"] = to_string(p);
    j["ell"] = m.ell();
    j["result"] = to_string(r);
    emit(o, out, j, to_string(r));
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Combinatorics of ell-regular partitions, JM partitions and the ladder crystal", "ladder"};
    app.require_subcommand(1);
    std::function<int()> action;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--ell", o.ell, "Modulus ell")->capture_default_str();
        sub->add_flag("--plain", o.plain, "Plain text instead of JSON");
    };
    auto with_partition = [&](CLI::App* sub) {
        common(sub);
        sub->add_option("partition", o.partition, "Partition, e.g. 3,2^2,1 or empty")->required();
    };
    auto model_opt = [&](CLI::App* sub) {
        sub->add_option("--model", o.model, "classical or ladder")
            ->check(CLI::IsMember({"classical", "ladder"}))
            ->capture_default_str();
    };

    auto* info = app.add_subcommand("info", "Summary of one partition");
    with_partition(info);
    info->callback([&] { action = [&] { return cmd_info(o, out); }; });

    auto* core = app.add_subcommand("core", "ell-core and weight");
    with_partition(core);
    core->callback([&] { action = [&] { return cmd_core(o, out); }; });

    auto* jm = app.add_subcommand("jm", "JM partitions");
    jm->require_subcommand(1);
    auto* jm_check = jm->add_subcommand("check", "Is the partition JM?");
    with_partition(jm_check);
    jm_check->callback([&] { action = [&] { return cmd_jm_check(o, out); }; });
    auto* jm_count = jm->add_subcommand("count", "Count JM partitions with a core and weight");
    common(jm_count);
    jm_count->add_option("--core", o.core, "ell-core")->required();
    jm_count->add_option("--weight", o.weight, "ell-weight")->required();
    jm_count->callback([&] { action = [&] { return cmd_jm_count(o, out); }; });
    auto* jm_enum = jm->add_subcommand("enumerate", "List JM partitions with a core and weight");
    common(jm_enum);
    jm_enum->add_option("--core", o.core, "ell-core")->required();
    jm_enum->add_option("--weight", o.weight, "ell-weight")->required();
    jm_enum->callback([&] { action = [&] { return cmd_jm_enumerate(o, out); }; });
    auto* jm_dec = jm->add_subcommand("decompose", "Decompose a JM partition");
    with_partition(jm_dec);
    jm_dec->callback([&] { action = [&] { return cmd_jm_decompose(o, out); }; });

    auto* crystal = app.add_subcommand("crystal", "Crystal graphs");
    crystal->require_subcommand(1);
    auto* build = crystal->add_subcommand("build", "Build the crystal through a depth");
    common(build);
    model_opt(build);
    build->add_option("--depth", o.depth, "Largest level")->capture_default_str();
    build->add_option("--dot", o.dot, "Also write the graph in DOT format to this path");
    build->callback([&] { action = [&] { return cmd_crystal_build(o, out); }; });
    auto* verify = crystal->add_subcommand("verify", "Check the regularization isomorphism");
    common(verify);
    verify->add_option("--depth", o.depth, "Largest level")->capture_default_str();
    verify->callback([&] { action = [&] { return cmd_crystal_verify(o, out); }; });
    auto* str = crystal->add_subcommand("string", "The i-string through a partition");
    with_partition(str);
    model_opt(str);
    str->add_option("--residue", o.residue, "Residue i")->required();
    str->callback([&] { action = [&] { return cmd_crystal_string(o, out); }; });

    auto* reg = app.add_subcommand("regularize", "Regularization");
    with_partition(reg);
    reg->callback([&] { action = [&] { return cmd_regularize(o, out); }; });
    auto* der = app.add_subcommand("deregularize", "Deregularization and lock map");
    with_partition(der);
    der->callback([&] { action = [&] { return cmd_deregularize(o, out); }; });
    auto* rc = app.add_subcommand("regclass", "Regularization class");
    with_partition(rc);
    rc->callback([&] { action = [&] { return cmd_regclass(o, out); }; });
    auto* mul = app.add_subcommand("mullineux", "Mullineux image");
    with_partition(mul);
    mul->callback([&] { action = [&] { return cmd_mullineux(o, out, err); }; });

    auto* suite = app.add_subcommand("suite", "Run property suites");
    common(suite);
    suite->add_option("--nmax", o.nmax, "Largest size for exhaustive checks")->capture_default_str();
    suite->add_option("--depth", o.depth, "Crystal depth")->capture_default_str();
    suite->add_option("--name", o.suite, "all, equivalences, regularization, crystal, theorems, mullineux")
        ->check(CLI::IsMember({"all", "equivalences", "regularization", "crystal", "theorems", "mullineux"}))
        ->capture_default_str();
    suite->callback([&] { action = [&] { return cmd_suite(o, out); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    try {
        return action ? action() : 2;
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace ladder

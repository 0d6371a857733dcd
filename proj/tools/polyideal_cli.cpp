#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "polyideal/certificates.hpp"
#include "polyideal/grid.hpp"
#include "polyideal/groebner.hpp"
#include "polyideal/harness.hpp"
#include "polyideal/konig.hpp"
#include "polyideal/lattice.hpp"
#include "polyideal/report.hpp"

using namespace polyideal;

namespace {

enum Exit { kOk = 0, kInput = 1, kBudget = 2, kClaimFailed = 3 };

struct RunConfig {
    std::string order = "discussion";
    std::string scheme = "grevlex";
    std::string vars;  // custom order: "i,j i,j ..." ascending
    std::size_t budget_pairs = 0;
    std::size_t budget_terms = 0;
    std::string format = "text";
    std::string out;

    std::string input;
    std::string input2;
    std::string strategy = "auto";
    std::string claims_file;
    std::string claim;
    int n_max = 6;
    int max_n = 7;
    int max_partition_n = 6;
    bool serial = false;
    bool no_time = false;
    bool labels = false;

    Budget budget() const {
        Budget b = Budget::from_env();
        if (budget_pairs) b.max_pairs = budget_pairs;
        if (budget_terms) b.max_term_ops = budget_terms;
        return b;
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CellCollection load(const std::string& path) {
    try {
        return parse_cells(slurp(path));
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

MonomialOrder pick_order(const RunConfig& cfg, const CellCollection& P) {
    Scheme s = parse_scheme(cfg.scheme);
    if (cfg.order == "discussion") return discussion_order(P, s);
    if (cfg.order == "order6") {
        auto o = order6(P);
        return MonomialOrder(o.variables(), s);
    }
    // custom: whitespace-separated "i,j" pairs, smallest variable first
    std::istringstream in(cfg.vars);
    std::vector<Vertex> vs;
    std::string tok;
    while (in >> tok) {
        auto comma = tok.find(',');
        if (comma == std::string::npos) throw InputError("--vars entry '" + tok + "' is not i,j");
        try {
            vs.push_back({std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1))});
        } catch (const std::logic_error&) {
            throw InputError("--vars entry '" + tok + "' is not i,j");
        }
    }
    for (auto v : vertex_set(P))
        if (std::find(vs.begin(), vs.end(), v) == vs.end())
            throw InputError("--vars misses vertex " + to_string(v));
    return MonomialOrder(vs, s);
}

void emit(const RunConfig& cfg, const Json& j) {
    std::string text = cfg.format == "machine" ? j.dump(2) + "\n" : render_text(j);
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw InputError("cannot write " + cfg.out);
    f << text;
}

void require_textual(const RunConfig& cfg, const std::string& sub) {
    if (cfg.format == "svg") throw InputError("--format svg applies only to render, not " + sub);
}

// Certificate file: one slot per line, "low_i low_j high_i high_j diagonal|antidiagonal".
std::vector<KonigSlot> load_slots(const std::string& path) {
    std::istringstream in(slurp(path));
    std::string line;
    std::vector<KonigSlot> out;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        Interval iv;
        std::string which;
        if (!(ls >> iv.low.i)) continue;
        if (!(ls >> iv.low.j >> iv.high.i >> iv.high.j >> which) ||
            (which != "diagonal" && which != "antidiagonal") || !iv.proper())
            throw InputError(path + ": line " + std::to_string(lineno) + ": expected 'i j k l diagonal|antidiagonal'");
        auto b = inner_binomial(iv);
        out.push_back(make_slot(iv, which == "diagonal" ? b.diagonal_term() : b.antidiagonal_term()));
    }
    return out;
}

int run(const std::string& sub, const RunConfig& cfg) {
    Budget budget = cfg.budget();
    if (sub == "render") {
        auto P = load(cfg.input);
        std::map<Vertex, std::string> labels;
        if (cfg.labels)
            for (auto v : vertex_set(P)) labels[v] = std::to_string(v.i) + std::to_string(v.j);
        if (cfg.format == "machine") {
            Json j;
            j["cells"] = cells_json(P.cells());
            j["svg"] = render(P, labels, RenderFormat::svg);
            emit(cfg, j);
            return kOk;
        }
        std::string body = render(P, labels, cfg.format == "svg" ? RenderFormat::svg : RenderFormat::ascii);
        if (cfg.out.empty()) std::cout << body;
        else std::ofstream(cfg.out) << body;
        return kOk;
    }
    require_textual(cfg, sub);

    if (sub == "classify") {
        emit(cfg, to_json(classify(load(cfg.input))));
    } else if (sub == "ideal") {
        auto P = load(cfg.input);
        auto order = pick_order(cfg, P);
        Json j;
        j["cells"] = P.size();
        j["vertices"] = vertex_set(P).size();
        Json gens = Json::array();
        for (auto& b : polyomino_binomials(P)) gens.push_back(to_string(b.polynomial, order));
        j["generators"] = gens;
        emit(cfg, j);
    } else if (sub == "gb") {
        auto P = load(cfg.input);
        auto order = pick_order(cfg, P);
        auto G = reduced_groebner(polyomino_ideal(P), order, budget);
        Json j = to_json(G);
        auto in = initial_ideal(G);
        j["initial_squarefree"] = is_squarefree(in);
        j["equals_inner_binomials"] = generators_form_reduced_basis(P, order, budget);
        emit(cfg, j);
    } else if (sub == "knutson") {
        emit(cfg, to_json(knutson_certify(load(cfg.input), budget)));
    } else if (sub == "konig") {
        auto P = load(cfg.input);
        std::optional<KonigCertificate> cert;
        if (!cfg.claims_file.empty()) {
            KonigCertificate c;
            c.chosen = load_slots(cfg.claims_file);
            c.height_claim = P.size();
            c.strategy = "supplied";
            cert = c;
        } else if (cfg.strategy == "auto") {
            cert = konig_auto(P);
        } else {
            cert = konig_search(P, parse_strategy(cfg.strategy));
        }
        if (!cert) {
            Json j;
            j["verdict"] = "unknown";
            j["detail"] = "no certificate found";
            emit(cfg, j);
            return kOk;
        }
        auto v = verify_konig(P, *cert, budget);
        Json j;
        j["verdict"] = v.passed() ? "konig" : "rejected";
        Json body = to_json(*cert, v);
        for (auto& [k, val] : body.items()) j[k] = val;
        emit(cfg, j);
    } else if (sub == "prime") {
        auto P = load(cfg.input);
        auto pv = is_prime_binomial(polyomino_ideal(P), budget);
        if (pv.status == PrimeStatus::inconclusive) throw BudgetExceeded(pv.note);
        Json j = to_json(pv);
        auto order = pick_order(cfg, P);
        Json crit;
        crit["order"] = order.describe();
        auto G = reduced_groebner(polyomino_ideal(P), order, budget);
        crit["inner_binomials_reduced_basis"] = generators_form_reduced_basis(P, order, budget);
        crit["initial_squarefree"] = is_squarefree(initial_ideal(G));
        j["gb_criterion"] = crit;
        emit(cfg, j);
    } else if (sub == "extract") {
        emit(cfg, to_json(extraction_pipeline(load(cfg.input), load(cfg.input2), budget)));
    } else if (sub == "chi") {
        if (cfg.max_n < 2 || cfg.max_n > 9) throw InputError("--max-n must lie in 2..9");
        emit(cfg, to_json(chi_sweep(cfg.max_n, std::min(cfg.max_partition_n, cfg.max_n))));
    } else if (sub == "enumerate") {
        const Claim& claim = find_claim(cfg.claim);
        auto rep = batch_verify(claim, cfg.n_max, budget, !cfg.serial);
        if (cfg.format == "machine") {
            Json j;
            j["claim"] = claim.name;
            j["statement"] = claim.statement;
            j["enumeration_ok"] = rep.enumeration_ok;
            Json rows = Json::array();
            for (auto& r : rep.rows) {
                Json x;
                x["n"] = r.n;
                x["passes"] = r.passes;
                x["fails"] = r.fails;
                x["skips"] = r.skips;
                if (!cfg.no_time) x["wall_time"] = r.wall_seconds;
                rows.push_back(x);
            }
            j["rows"] = rows;
            j["failure"] = rep.failure ? Json(format_coordinates(*rep.failure)) : Json(nullptr);
            if (rep.failure) j["failure_note"] = rep.failure_note;
            emit(cfg, j);
        } else {
            std::string csv = tally_csv(rep.rows, !cfg.no_time);
            if (cfg.out.empty()) std::cout << csv;
            else std::ofstream(cfg.out) << csv;
        }
        if (!rep.enumeration_ok) {
            std::cerr << "enumeration self-check failed\n";
            return kClaimFailed;
        }
        if (rep.failure) {
            std::cerr << "claim " << claim.name << " failed (" << rep.failure_note << ") on:\n"
                      << format_coordinates(*rep.failure);
            return kClaimFailed;
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polyomino ideal toolkit"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* s) {
        s->add_option("--order", cfg.order, "discussion | order6 | custom")
            ->check(CLI::IsMember({"discussion", "order6", "custom"}));
        s->add_option("--scheme", cfg.scheme, "lex | grlex | grevlex")
            ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
        s->add_option("--vars", cfg.vars, "custom order, ascending: \"i,j i,j ...\"");
        s->add_option("--budget-pairs", cfg.budget_pairs, "S-pair budget")->check(CLI::PositiveNumber);
        s->add_option("--budget-terms", cfg.budget_terms, "term-operation budget")->check(CLI::PositiveNumber);
        s->add_option("--format", cfg.format, "text | machine | svg")
            ->check(CLI::IsMember({"text", "machine", "svg"}));
        s->add_option("--out", cfg.out, "write the report to a file");
    };
    auto with_input = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->add_option("input", cfg.input, "cell file")->required();
        common(s);
        return s;
    };

    with_input("classify", "shape predicates");
    with_input("ideal", "inner-interval generators");
    with_input("gb", "reduced Groebner basis");
    with_input("knutson", "Knutson certification report");
    auto* konig = with_input("konig", "search for or verify a Konig certificate");
    konig->add_option("--strategy", cfg.strategy, "auto | generic | interval | weakly-closed | simple-thin-recursive");
    konig->add_option("--claims", cfg.claims_file, "certificate to verify instead of searching");
    with_input("prime", "primality oracle and Groebner criterion");
    auto* extract = with_input("extract", "extraction pipeline for Q and a sub-parallelogram");
    extract->add_option("inner", cfg.input2, "cell file of the removed parallelogram")->required();
    auto* render_cmd = with_input("render", "draw the collection");
    render_cmd->add_flag("--labels", cfg.labels, "label vertices with ij");

    auto* chi = app.add_subcommand("chi", "exhaustive chi sweep");
    chi->add_option("--max-n", cfg.max_n, "largest n");
    chi->add_option("--max-partition-n", cfg.max_partition_n, "largest n for the pairing check");
    common(chi);

    auto* en = app.add_subcommand("enumerate", "batch verification over enumerated polyominoes");
    en->add_option("--claim", cfg.claim, "claim name")->required();
    en->add_option("--n-max", cfg.n_max, "largest cell count");
    en->add_flag("--serial", cfg.serial, "run without worker threads");
    en->add_flag("--no-time", cfg.no_time, "omit wall-time columns");
    common(en);
    en->footer([] {
        std::string s = "claims:";
        for (auto& c : registered_claims()) s += "\n  " + c.name + "  " + c.statement;
        return s;
    }());

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    }
    if (cfg.order == "custom" && cfg.vars.empty()) {
        std::cerr << "error: --order custom needs --vars\n";
        return kInput;
    }
    try {
        return run(app.get_subcommands().front()->get_name(), cfg);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const std::length_error& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    }
}

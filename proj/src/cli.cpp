#include "forest_hopf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "forest_hopf/checks.hpp"
#include "forest_hopf/enumerate.hpp"
#include "forest_hopf/json_io.hpp"
#include "forest_hopf/operated.hpp"

namespace forest_hopf {

namespace {

struct Session {
    SymbolTable syms;
    Specialization weights;
    bool have_weights = false;
    std::string format = "text";
    bool ascii = false;

    PrintOptions popt() const { return {ascii, format == "latex"}; }
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

Rational parse_rational(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid rational value '" + s + "'");
    }
}

void parse_weights(Session& ses, const std::string& spec) {
    for (auto& piece : split_csv(spec)) {
        auto eq = piece.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--weights entries must look like la_a=1/2");
        std::string name = piece.substr(0, eq);
        auto id = ses.syms.find_weight_name(name);
        if (!id) throw std::invalid_argument("unknown weight indeterminate '" + name + "'");
        ses.weights.assign(*id, parse_rational(piece.substr(eq + 1)));
    }
    ses.have_weights = true;
}

Json envelope(const std::string& command) {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void emit_element(const Session& ses, std::ostream& out, const std::string& cmd,
                  const Element& e) {
    if (ses.format == "json") {
        Json j = envelope(cmd);
        j["result"] = ses.have_weights ? element_to_json(specialize(e, ses.weights), ses.syms)
                                       : element_to_json(e, ses.syms);
        emit_json(out, j);
    } else if (ses.have_weights) {
        out << print_element(specialize(e, ses.weights), ses.syms, ses.popt()) << "\n";
    } else {
        out << print_element(e, ses.syms, ses.popt()) << "\n";
    }
}

void emit_tensor(const Session& ses, std::ostream& out, const std::string& cmd,
                 const Tensor2& t) {
    if (ses.format == "json") {
        Json j = envelope(cmd);
        j["result"] = ses.have_weights ? tensor2_to_json(specialize(t, ses.weights), ses.syms)
                                       : tensor2_to_json(t, ses.syms);
        emit_json(out, j);
    } else if (ses.have_weights) {
        out << print_tensor2(specialize(t, ses.weights), ses.syms, ses.popt()) << "\n";
    } else {
        out << print_tensor2(t, ses.syms, ses.popt()) << "\n";
    }
}

void emit_poly(const Session& ses, std::ostream& out, const std::string& cmd, const Poly& p) {
    if (ses.format == "json") {
        Json j = envelope(cmd);
        j["result"] = ses.have_weights ? poly_to_json(specialize(p, ses.weights), ses.syms)
                                       : poly_to_json(p, ses.syms);
        emit_json(out, j);
    } else if (ses.have_weights) {
        out << print_poly(specialize(p, ses.weights), ses.syms, ses.popt()) << "\n";
    } else {
        out << print_poly(p, ses.syms, ses.popt()) << "\n";
    }
}

// FOREST_HOPF_MAX_DEGREE caps enumeration-style commands as a safety limit.
void enforce_degree_cap(int requested) {
    if (const char* cap = std::getenv("FOREST_HOPF_MAX_DEGREE")) {
        int limit = std::atoi(cap);
        if (limit > 0 && requested > limit)
            throw std::invalid_argument("--max-degree " + std::to_string(requested) +
                                        " exceeds FOREST_HOPF_MAX_DEGREE=" + std::to_string(limit));
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted Hopf algebra of decorated planar rooted forests"};

    std::string x_csv = "x";
    std::string omega_csv = "a,b";
    std::string weights_csv;
    std::string format = "text";
    bool ascii = false;

    app.add_option("--x", x_csv, "comma-separated X (generator) labels")->capture_default_str();
    app.add_option("--omega", omega_csv, "comma-separated Omega (operator) labels")
        ->capture_default_str();
    app.add_option("--weights", weights_csv,
                   "rational weight assignment, e.g. la_a=0,mu_x=1/2 (may be partial)");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->capture_default_str();
    app.add_flag("--ascii", ascii, "use the ASCII tensor separator (x)o(y)");

    std::string in_a, in_b, method = "recursive", rename_csv, which = "all";
    bool closed = false, list_forests = false;
    int max_degree = 3, enum_degree = 4, seed_specializations = 2;
    unsigned seed = 12345;

    auto* product = app.add_subcommand("product", "concatenate two forests");
    product->add_option("a", in_a, "first forest")->required();
    product->add_option("b", in_b, "second forest")->required();

    auto* coproduct = app.add_subcommand("coproduct", "weighted coproduct of a forest");
    coproduct->add_option("forest", in_a, "input forest")->required();
    coproduct->add_option("--method", method, "recursive or cuts")
        ->check(CLI::IsMember({"recursive", "cuts"}))
        ->capture_default_str();

    auto* counit = app.add_subcommand("counit", "counit of a forest");
    counit->add_option("forest", in_a, "input forest")->required();
    counit->add_flag("--closed", closed, "use the closed product formula");

    auto* antipode = app.add_subcommand("antipode", "antipode of a forest");
    antipode->add_option("forest", in_a, "input forest")->required();

    auto* tilde = app.add_subcommand("tilde", "leaf-tilde of a forest");
    tilde->add_option("forest", in_a, "input forest")->required();

    auto* subforests = app.add_subcommand(
        "subforests", "subforest / quotient / tilde-of-quotient table of a forest");
    subforests->add_option("forest", in_a, "input forest")->required();

    auto* eval = app.add_subcommand("eval", "universal evaluation into decorated forests");
    eval->add_option("forest", in_a, "input forest")->required();
    eval->add_option("--rename", rename_csv, "X-generator renaming, e.g. x=y,y=x");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "count decorated forests by degree");
    enumerate_cmd->add_option("--max-degree", enum_degree, "largest degree to enumerate")
        ->capture_default_str();
    enumerate_cmd->add_flag("--list", list_forests, "also list every forest");

    auto* check = app.add_subcommand("check", "exhaustively verify the algebraic laws");
    check->add_option("which", which, "all|coassoc|counit|bialgebra|cocycle|antipode|equivalence")
        ->check(CLI::IsMember(
            {"all", "coassoc", "counit", "bialgebra", "cocycle", "antipode", "equivalence"}))
        ->capture_default_str();
    check->add_option("--max-degree", max_degree, "check all forests up to this degree")
        ->capture_default_str();
    check->add_option("--seed-specializations", seed_specializations,
                      "number of random rational weight assignments")
        ->capture_default_str();
    check->add_option("--seed", seed, "RNG seed for the weight assignments")
        ->capture_default_str();

    app.require_subcommand(1);
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("forest-hopf");
    for (auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        Session ses;
        // Omega labels intern first so weight monomials print la_* before mu_*.
        for (auto& l : split_csv(omega_csv)) ses.syms.add_omega(l);
        for (auto& l : split_csv(x_csv)) ses.syms.add_x(l);
        if (!weights_csv.empty()) parse_weights(ses, weights_csv);
        ses.format = format;
        ses.ascii = ascii;

        if (app.got_subcommand(product)) {
            Forest a = parse_forest(in_a, ses.syms);
            Forest b = parse_forest(in_b, ses.syms);
            emit_element(ses, out, "product", Element::basis(concat(a, b)));
        } else if (app.got_subcommand(coproduct)) {
            HopfContext ctx(ses.syms);
            Forest f = parse_forest(in_a, ses.syms);
            emit_tensor(ses, out, "coproduct",
                        method == "cuts" ? ctx.coproduct_cuts(f) : ctx.coproduct(f));
        } else if (app.got_subcommand(counit)) {
            HopfContext ctx(ses.syms);
            Forest f = parse_forest(in_a, ses.syms);
            emit_poly(ses, out, "counit", closed ? ctx.counit_closed(f) : ctx.counit(f));
        } else if (app.got_subcommand(antipode)) {
            HopfContext ctx(ses.syms);
            emit_element(ses, out, "antipode", ctx.antipode(parse_forest(in_a, ses.syms)));
        } else if (app.got_subcommand(tilde)) {
            HopfContext ctx(ses.syms);
            emit_element(ses, out, "tilde", ctx.leaf_tilde(parse_forest(in_a, ses.syms)));
        } else if (app.got_subcommand(subforests)) {
            HopfContext ctx(ses.syms);
            Forest f = parse_forest(in_a, ses.syms);
            auto pairs = subforest_pairs(f);
            std::sort(pairs.begin(), pairs.end(), ForestPairLess{});
            if (ses.format == "json") {
                Json j = envelope("subforests");
                Json rows = Json::array();
                for (auto& [g, q] : pairs)
                    rows.push_back({{"subforest", forest_to_json(g, ses.syms)},
                                    {"quotient", forest_to_json(q, ses.syms)},
                                    {"quotient_tilde", element_to_json(ctx.leaf_tilde(q), ses.syms)}});
                j["result"] = std::move(rows);
                emit_json(out, j);
            } else {
                for (auto& [g, q] : pairs)
                    out << print_forest(g, ses.syms) << " | " << print_forest(q, ses.syms)
                        << " | " << print_element(ctx.leaf_tilde(q), ses.syms, ses.popt()) << "\n";
            }
        } else if (app.got_subcommand(eval)) {
            std::map<int, int> rename;
            for (auto& piece : split_csv(rename_csv)) {
                auto eq = piece.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("--rename entries must look like x=y");
                rename[ses.syms.require(piece.substr(0, eq)).id] =
                    ses.syms.require(piece.substr(eq + 1)).id;
            }
            Forest f = parse_forest(in_a, ses.syms);
            emit_element(ses, out, "eval", evaluate(f, hrt_target(ses.syms, rename)));
        } else if (app.got_subcommand(enumerate_cmd)) {
            enforce_degree_cap(enum_degree);
            if (ses.format == "json") {
                Json j = envelope("enumerate");
                Json counts = Json::array();
                std::uint64_t total = 0;
                for (int d = 0; d <= enum_degree; ++d) {
                    auto c = decorated_count(d, ses.syms);
                    total += c;
                    counts.push_back({{"degree", d}, {"count", c}});
                }
                j["counts"] = std::move(counts);
                j["total"] = total;
                if (list_forests) {
                    Json fs = Json::array();
                    for (auto& f : forests_up_to(enum_degree, ses.syms))
                        fs.push_back(forest_to_json(f, ses.syms));
                    j["forests"] = std::move(fs);
                }
                emit_json(out, j);
            } else {
                std::uint64_t total = 0;
                for (int d = 0; d <= enum_degree; ++d) {
                    auto c = decorated_count(d, ses.syms);
                    total += c;
                    out << "degree " << d << ": " << c << "\n";
                }
                out << "total: " << total << "\n";
                if (list_forests)
                    for (auto& f : forests_up_to(enum_degree, ses.syms))
                        out << print_forest(f, ses.syms) << "\n";
            }
        } else if (app.got_subcommand(check)) {
            enforce_degree_cap(max_degree);
            CheckOptions opt;
            opt.max_degree = max_degree;
            opt.seed_specializations = seed_specializations;
            opt.seed = seed;
            auto results = run_checks(which, ses.syms, opt);
            bool all_ok = true;
            if (ses.format == "json") {
                Json j = envelope("check");
                Json rows = Json::array();
                for (auto& r : results) {
                    all_ok = all_ok && r.ok;
                    rows.push_back({{"name", r.name},
                                    {"ok", r.ok},
                                    {"cases", r.cases},
                                    {"counterexample", r.counterexample}});
                }
                j["results"] = std::move(rows);
                j["ok"] = all_ok;
                emit_json(out, j);
            } else {
                for (auto& r : results) {
                    all_ok = all_ok && r.ok;
                    if (r.ok)
                        out << "ok " << r.name << " (" << r.cases << " cases)\n";
                    else
                        out << "FAIL " << r.name << ": " << r.counterexample << "\n";
                }
                out << (all_ok ? "all checks passed" : "identity violation found") << "\n";
            }
            return all_ok ? 0 : 1;
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace forest_hopf

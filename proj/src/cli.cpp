#include "hopfmzv/cli.hpp"

#include <cstdlib>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hopfmzv/birkhoff.hpp"
#include "hopfmzv/coproduct.hpp"
#include "hopfmzv/errors.hpp"
#include "hopfmzv/json_io.hpp"
#include "hopfmzv/polylog.hpp"
#include "hopfmzv/qseries.hpp"
#include "hopfmzv/realizations.hpp"
#include "hopfmzv/shuffle.hpp"
#include "hopfmzv/verify.hpp"

namespace hopfmzv {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int guard_from_environment()
{
    const char* raw = std::getenv("HOPFMZV_GUARD");
    if (!raw || !*raw)
        return PrecisionPlan{}.guard;
    char* end = nullptr;
    long g = std::strtol(raw, &end, 10);
    if (*end != '\0' || g < 0 || g > 1000)
        throw UsageError(std::string("HOPFMZV_GUARD must be a non-negative integer, got '") + raw + "'");
    return static_cast<int>(g);
}

Word word_argument(const std::string& text)
{
    return text == "e" ? Word() : Word::parse(text);
}

std::vector<int> int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw UsageError("expected a comma-separated list of integers, got '" + text + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw UsageError("expected at least one index");
    return out;
}

IndexVector nonnegative_indices(const std::vector<int>& v)
{
    IndexVector k;
    for (int x : v) {
        if (x < 0)
            throw UsageError("q-series indices are non-negative exponents k_i of (1 - q^m)^{k_i}");
        k.k.push_back(static_cast<unsigned>(x));
    }
    return k;
}

std::string table_cell_label(int a)
{
    return a == 0 ? "0" : "-" + std::to_string(a);
}

struct Context {
    std::ostream& out;
    std::ostream& err;
    int guard = 4;
};

int cmd_zeta_plus(Context& ctx, const std::vector<std::string>& args, const std::string& method, bool as_json)
{
    IndexVector k;
    try {
        k = parse_nonpositive_arguments(args);
    } catch (const SyntaxError& e) {
        throw UsageError(e.what());
    }
    RenormValue v;
    if (method == "phi")
        v = zeta_plus(shared_table(CharacterKind::phi, ctx.guard), k);
    else if (method == "psi")
        v = qzeta_plus(shared_table(CharacterKind::psi, ctx.guard), k);
    else
        v = {k, zeta_plus_via_primitives(k, PrecisionPlan{ctx.guard}),
             RenormValue::Provenance::primitive_decomposition};
    if (as_json) {
        json j = to_json(TableEntry{v.k, v.value});
        j["provenance"] = to_string(v.provenance);
        ctx.out << j.dump() << "\n";
    } else {
        ctx.out << v.value << "\n";
    }
    return 0;
}

int cmd_table(Context& ctx, int depth, int max_k, bool as_json, bool check, const std::string& fixture)
{
    if (depth != 1 && depth != 2)
        throw UsageError("table supports --depth 1 or 2");
    if (max_k < 0)
        throw UsageError("--max-k must be non-negative");
    CharacterTable& table = shared_table(CharacterKind::phi, ctx.guard);

    std::vector<TableEntry> entries;
    const unsigned K = static_cast<unsigned>(max_k);
    for (unsigned a = 0; a <= K; ++a) {
        if (depth == 1) {
            IndexVector k{{a}};
            entries.push_back({k, zeta_plus(table, k).value});
            continue;
        }
        for (unsigned b = 0; b <= K; ++b) {
            IndexVector k{{a, b}};
            entries.push_back({k, zeta_plus(table, k).value});
        }
    }

    if (as_json) {
        json j = json::array();
        for (const auto& e : entries)
            j.push_back(to_json(e));
        ctx.out << j.dump(2) << "\n";
    } else if (depth == 1) {
        for (const auto& e : entries)
            ctx.out << "zeta_+(" << table_cell_label(static_cast<int>(e.k.k[0])) << ") = " << e.value << "\n";
    } else {
        std::size_t width = 6;
        for (const auto& e : entries)
            width = std::max(width, e.value.str().size());
        ctx.out << std::setw(8) << "k1\\k2";
        for (unsigned b = 0; b <= K; ++b)
            ctx.out << "  " << std::setw(static_cast<int>(width)) << table_cell_label(static_cast<int>(b));
        ctx.out << "\n";
        for (unsigned a = 0; a <= K; ++a) {
            ctx.out << std::setw(8) << table_cell_label(static_cast<int>(a));
            for (unsigned b = 0; b <= K; ++b)
                ctx.out << "  " << std::setw(static_cast<int>(width)) << entries[a * (K + 1) + b].value.str();
            ctx.out << "\n";
        }
    }

    if (!check)
        return 0;
    Fixtures f = load_fixtures(fixture.empty() ? default_fixture_path() : fixture);
    std::map<IndexVector, Rational> expected;
    for (const auto& e : f.table)
        if (e.k.depth() == static_cast<std::size_t>(depth))
            expected.emplace(e.k, e.value);
    std::size_t matched = 0;
    std::vector<std::string> problems;
    for (const auto& e : entries) {
        auto it = expected.find(e.k);
        if (it == expected.end()) {
            problems.push_back("no fixture value for k = " + to_json(e).dump());
        } else if (it->second != e.value) {
            problems.push_back("k = " + to_json(e).dump() + " expected " + it->second.str());
        } else {
            ++matched;
        }
    }
    std::ostream& report = as_json ? ctx.err : ctx.out;
    for (const auto& p : problems)
        report << "mismatch: " << p << "\n";
    bool ok = problems.empty();
    report << (ok ? "PASS" : "FAIL") << " (" << matched << "/" << entries.size() << " match)\n";
    return ok ? 0 : 1;
}

int cmd_verify(Context& ctx, const std::string& suite)
{
    auto results = run_suite(suite, VerifyOptions{ctx.guard});
    print_report(results, ctx.out);
    return all_passed(results) ? 0 : 1;
}

int cmd_shuffle(Context& ctx, const std::string& lambda_text, const std::string& u, const std::string& v, bool raw,
                bool as_json)
{
    LambdaParam lambda = LambdaParam::parse(lambda_text);
    WordSum product = shuffle(word_argument(u), word_argument(v), lambda);
    if (!raw)
        product = project_T(product);
    ctx.out << (as_json ? to_json(product).dump() + "\n" : to_aligned_text(product));
    return 0;
}

int cmd_coproduct(Context& ctx, const std::string& lambda_text, const std::string& word, bool reduced,
                  const std::string& method_text, bool as_json)
{
    LambdaParam lambda = LambdaParam::parse(lambda_text);
    CoproductMethod method =
        method_text == "combinatorial" ? CoproductMethod::combinatorial : CoproductMethod::recursive;
    Word w = word_argument(word);
    CoproductResult r = reduced ? reduced_coproduct(w, lambda, method) : coproduct(w, lambda, method);
    ctx.out << (as_json ? to_json(r.terms).dump() + "\n" : to_aligned_text(r.terms));
    return 0;
}

void print_series(Context& ctx, const LaurentSeries& s, bool as_json, char var = 'z')
{
    ctx.out << (as_json ? to_json(s).dump() : s.str(var)) << "\n";
}

int cmd_character(Context& ctx, CharacterKind kind, const std::string& word, int prec, bool as_json)
{
    Word w = word_argument(word);
    PrecisionPlan plan{ctx.guard};
    print_series(ctx, kind == CharacterKind::phi ? phi(w, prec, plan) : psi(w, prec, plan), as_json);
    return 0;
}

int cmd_li(Context& ctx, const std::string& k_text, int trunc, bool nested, bool as_json)
{
    if (trunc < 1)
        throw UsageError("--trunc must be at least 1");
    std::vector<int> k = int_list(k_text);
    PowerSeriesT s = nested ? li_nested(k, trunc) : li_J(k, trunc);
    print_series(ctx, s.to_laurent(), as_json, 't');
    return 0;
}

int cmd_qz(Context& ctx, const std::string& k_text, int trunc, bool rational, bool as_json)
{
    if (trunc < 1)
        throw UsageError("--trunc must be at least 1");
    IndexVector k = nonnegative_indices(int_list(k_text));
    if (rational) {
        QzRational r = qz_rational(k);
        if (as_json) {
            json terms = json::array();
            for (const auto& t : r.terms)
                terms.push_back(json{{"coeff", t.coeff.str()}, {"levels", t.levels}});
            json j;
            j["terms"] = std::move(terms);
            j["expansion"] = to_json(r.expand(trunc));
            ctx.out << j.dump() << "\n";
        } else {
            ctx.out << r.str() << "\n" << r.expand(trunc).to_laurent().str('q') << "\n";
        }
        return 0;
    }
    print_series(ctx, qz_series(k, trunc).to_laurent(), as_json, 'q');
    return 0;
}

int cmd_birkhoff(Context& ctx, const std::string& word, const std::string& kind_text, int prec, bool as_json)
{
    CharacterKind kind = kind_text == "psi" ? CharacterKind::psi : CharacterKind::phi;
    CharacterTable& t = shared_table(kind, ctx.guard);
    Word w = word_argument(word);
    if (w.empty() || !w.admissible())
        throw NotAdmissible("birkhoff needs a nonempty admissible word");
    LaurentSeries chi = t.character(w, prec);
    LaurentSeries bar = t.bogoliubov_bar(w, prec);
    LaurentSeries minus = t.birkhoff_minus(w);
    LaurentSeries plus = t.birkhoff_plus(w, prec);
    if (as_json) {
        json j;
        j["word"] = w.str();
        j["kind"] = to_string(kind);
        j["chi"] = to_json(chi);
        j["chi_bar"] = to_json(bar);
        j["chi_minus"] = to_json(minus);
        j["chi_plus"] = to_json(plus);
        ctx.out << j.dump(2) << "\n";
    } else {
        const std::string n = to_string(kind);
        ctx.out << n << "(" << w << ")     = " << chi << "\n";
        ctx.out << n << "_bar(" << w << ") = " << bar << "\n";
        ctx.out << n << "_-(" << w << ")   = " << minus << "\n";
        ctx.out << n << "_+(" << w << ")   = " << plus << "\n";
    }
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Word Hopf algebras, regularization characters and renormalized multiple zeta values at "
                 "non-positive integers, in exact rational arithmetic.",
                 "hopfmzv"};
    app.require_subcommand(1);
    std::function<int(Context&)> action;

    bool as_json = false;
    auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "Emit JSON"); };

    // zeta-plus
    std::vector<std::string> zeta_args;
    std::string zeta_method = "phi";
    auto* zeta = app.add_subcommand("zeta-plus", "Renormalized value at non-positive arguments (pass them after --)");
    zeta->add_option("arguments", zeta_args, "Arguments -k1 -k2 ... (each <= 0)")->required();
    zeta->add_option("--method", zeta_method, "phi (Birkhoff on phi), psi (q-side) or primitives")
        ->check(CLI::IsMember({"phi", "psi", "primitives"}));
    json_flag(zeta);
    zeta->callback([&] { action = [&](Context& c) { return cmd_zeta_plus(c, zeta_args, zeta_method, as_json); }; });

    // table
    int depth = 2, max_k = 3;
    bool check = false;
    std::string fixture;
    auto* table = app.add_subcommand("table", "Table of renormalized values zeta_+(-k1, -k2)");
    table->add_option("--depth", depth, "Depth 1 or 2")->capture_default_str();
    table->add_option("--max-k", max_k, "Largest k_i")->capture_default_str();
    table->add_flag("--check", check, "Compare against the fixture file");
    table->add_option("--fixture", fixture, "Fixture file (default fixtures/table1.json)");
    json_flag(table);
    table->callback([&] { action = [&](Context& c) { return cmd_table(c, depth, max_k, as_json, check, fixture); }; });

    // verify
    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "Run a property suite");
    verify->add_option("--suite", suite, "hopf, birkhoff, rota-baxter, qseries or all")
        ->check(CLI::IsMember({"hopf", "birkhoff", "rota-baxter", "qseries", "all"}))
        ->capture_default_str();
    verify->callback([&] { action = [&](Context& c) { return cmd_verify(c, suite); }; });

    // shuffle
    std::string lambda_text = "0";
    std::string word_u, word_v;
    bool raw = false;
    auto* shuffle_cmd = app.add_subcommand("shuffle", "Product of two words (lambda-shuffle, or sho for lambda = 0)");
    shuffle_cmd->add_option("--lambda", lambda_text, "Deformation parameter p/q")->required();
    shuffle_cmd->add_option("u", word_u, "Left word ('e' for the empty word)")->required();
    shuffle_cmd->add_option("v", word_v, "Right word")->required();
    shuffle_cmd->add_flag("--raw", raw, "Do not drop words ending in d");
    json_flag(shuffle_cmd);
    shuffle_cmd->callback(
        [&] { action = [&](Context& c) { return cmd_shuffle(c, lambda_text, word_u, word_v, raw, as_json); }; });

    // coproduct
    bool reduced = false;
    std::string method = "recursive";
    std::string word;
    auto* coproduct_cmd = app.add_subcommand("coproduct", "Deformed coproduct of an admissible word");
    coproduct_cmd->add_option("--lambda", lambda_text, "Deformation parameter p/q")->required();
    coproduct_cmd->add_flag("--reduced", reduced, "Strip e (x) w and w (x) e");
    coproduct_cmd->add_option("--method", method, "recursive or combinatorial")
        ->check(CLI::IsMember({"recursive", "combinatorial"}))
        ->capture_default_str();
    coproduct_cmd->add_option("word", word, "Admissible word")->required();
    json_flag(coproduct_cmd);
    coproduct_cmd->callback(
        [&] { action = [&](Context& c) { return cmd_coproduct(c, lambda_text, word, reduced, method, as_json); }; });

    // phi / psi
    int prec = 4;
    for (CharacterKind kind : {CharacterKind::phi, CharacterKind::psi}) {
        auto* sub = app.add_subcommand(to_string(kind), kind == CharacterKind::phi
                                                            ? "Laurent expansion of the regularized polylogarithm"
                                                            : "Laurent expansion of the modified q-MZV at q = e^z");
        sub->add_option("word", word, "Admissible word")->required();
        sub->add_option("--prec", prec, "Highest exponent to report")->capture_default_str();
        json_flag(sub);
        sub->callback([&, kind] { action = [&, kind](Context& c) { return cmd_character(c, kind, word, prec, as_json); }; });
    }

    // li
    std::string k_text;
    int trunc = 10;
    bool nested = false;
    auto* li = app.add_subcommand("li", "Multiple polylogarithm Li_k(t) as a power series");
    li->add_option("--k", k_text, "Comma-separated integer indices, e.g. -1,0,2")->required();
    li->add_option("--trunc", trunc, "Truncation order in t")->capture_default_str();
    li->add_flag("--nested", nested, "Use the nested sum instead of J-iteration");
    json_flag(li);
    li->callback([&] { action = [&](Context& c) { return cmd_li(c, k_text, trunc, nested, as_json); }; });

    // qz
    bool rational = false;
    auto* qz = app.add_subcommand("qz", "Modified q-MZV at non-positive arguments as a power series in q");
    qz->add_option("--k", k_text, "Comma-separated k_i >= 0 for the arguments -k_i")->required();
    qz->add_option("--trunc", trunc, "Truncation order in q")->capture_default_str();
    qz->add_flag("--rational", rational, "Print the finite rational form and its expansion");
    json_flag(qz);
    qz->callback([&] { action = [&](Context& c) { return cmd_qz(c, k_text, trunc, rational, as_json); }; });

    // birkhoff
    std::string kind_text = "phi";
    auto* birkhoff = app.add_subcommand("birkhoff", "Dump chi, chi_bar, chi_- and chi_+ for one word");
    birkhoff->add_option("word", word, "Nonempty admissible word")->required();
    birkhoff->add_option("--kind", kind_text, "phi or psi")
        ->check(CLI::IsMember({"phi", "psi"}))
        ->capture_default_str();
    birkhoff->add_option("--prec", prec, "Highest exponent to report")->capture_default_str();
    json_flag(birkhoff);
    birkhoff->callback([&] { action = [&](Context& c) { return cmd_birkhoff(c, word, kind_text, prec, as_json); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        Context ctx{out, err, guard_from_environment()};
        return action(ctx);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace hopfmzv

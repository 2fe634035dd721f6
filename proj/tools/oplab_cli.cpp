// oplab: exact-arithmetic laboratory for rank/crank moments of
// overpartitions. Subcommands: verify, scan, expand, moments, strings,
// table, table1.
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oplab/count_table.hpp"
#include "oplab/laurent_qseries.hpp"
#include "oplab/moments.hpp"
#include "oplab/partitions.hpp"
#include "oplab/qseries.hpp"
#include "oplab/strings.hpp"
#include "oplab/verifier.hpp"

using namespace oplab;

namespace {

std::optional<int> env_default_order() {
    if (const char* raw = std::getenv("OPLAB_DEFAULT_ORDER")) {
        try {
            return std::stoi(raw);
        } catch (...) {
            std::fprintf(stderr, "warning: ignoring non-numeric OPLAB_DEFAULT_ORDER='%s'\n", raw);
        }
    }
    return std::nullopt;
}

int pick(const std::optional<int>& flag, int fallback) {
    if (flag) return *flag;
    if (const auto env = env_default_order()) return *env;
    return fallback;
}

void emit(const VerificationReport& report, bool json, int& failures) {
    if (report.failed()) ++failures;
    std::printf("%s\n", json ? report.to_json().c_str() : report.str().c_str());
}

TruncatedSeries expand_series(const std::string& name, int order, int k) {
    static const std::map<std::string, std::function<TruncatedSeries(int, int)>> registry = {
        {"euler-product", [](int n, int) { return euler_product(n); }},
        {"neg-q-product", [](int n, int) { return neg_q_product(n); }},
        {"odd-product-plus", [](int n, int) { return odd_product(n, Sign::plus); }},
        {"odd-product-minus", [](int n, int) { return odd_product(n, Sign::minus); }},
        {"partition-count", [](int n, int) { return euler_product(n).inverted(); }},
        {"overpartition-count",
         [](int n, int) { return neg_q_product(n) * euler_product(n).inverted(); }},
        {"lambert-h", [](int n, int) { return lambert_h(n); }},
        {"lambert-h-closed", [](int n, int) { return lambert_h_closed(n); }},
        {"f-k", [](int n, int kk) { return f_k_series(kk, n); }},
        {"a1", [](int n, int) { return a_family(n).a1; }},
        {"a2", [](int n, int) { return a_family(n).a2; }},
        {"a3", [](int n, int) { return a_family(n).a3; }},
        {"a4", [](int n, int) { return a_family(n).a4; }},
        {"r1", [](int n, int) { return r1_closed_form(n); }},
        {"m1", [](int n, int) { return m1_closed_form(n); }},
        {"ospt-bar", [](int n, int) { return ospt_bar_series(n); }},
        {"a-k", [](int n, int kk) { return akbk_gf(kk, n).a; }},
        {"b-k", [](int n, int kk) { return akbk_gf(kk, n).b; }},
    };
    const auto it = registry.find(name);
    if (it == registry.end()) {
        std::string known;
        for (const auto& [key, fn] : registry) known += (known.empty() ? "" : ", ") + key;
        throw CLI::ValidationError("series", "unknown series '" + name + "'; one of: " + known);
    }
    return it->second(order, k);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series laboratory for overpartition rank/crank moments"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    int failures = 0;

    // ---- verify ----------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run a proven-identity check");
    std::string check_id;
    std::optional<int> order_flag, n_max_flag;
    verify->add_option("check-id", check_id, "one of: lemma-la, lemma-l1, a-decomposition, "
                                             "positive-decomposition, theorem-main, "
                                             "corollary-2-4, theorem-combo, table1, all")
        ->required();
    verify->add_option("--order", order_flag, "truncation order");
    verify->add_option("--n-max", n_max_flag, "largest weight n");
    verify->callback([&] {
        const bool json = format == "json";
        const std::map<std::string, std::function<VerificationReport()>> checks = {
            {"lemma-la", [&] { return verify_lemma_la(pick(order_flag, 500)); }},
            {"lemma-l1", [&] { return verify_lemma_l1(pick(order_flag, 400)); }},
            {"a-decomposition", [&] { return verify_a_decomposition(pick(order_flag, 300)); }},
            {"positive-decomposition",
             [&] { return verify_positive_decomposition(pick(order_flag, 300)); }},
            {"theorem-main", [&] { return verify_theorem_main(pick(n_max_flag, 1000)); }},
            {"corollary-2-4", [&] { return verify_corollary_2_4(pick(n_max_flag, 1000)); }},
            {"theorem-combo", [&] { return verify_theorem_combo(pick(n_max_flag, 25)); }},
            {"table1", [&] { return reproduce_table1(); }},
        };
        if (check_id == "all") {
            for (const auto& [id, run] : checks) emit(run(), json, failures);
            return;
        }
        const auto it = checks.find(check_id);
        if (it == checks.end())
            throw CLI::ValidationError("check-id", "unknown check '" + check_id + "'");
        emit(it->second(), json, failures);
    });

    // ---- scan ------------------------------------------------------------
    auto* scan = app.add_subcommand("scan", "scan a conjecture over a finite range");
    std::string conjecture;
    std::optional<int> k_max_flag, m_max_flag, scan_n_flag, scan_order_flag;
    scan->add_option("conjecture", conjecture, "one of: hqcon, akbk, m2n2, all")->required();
    scan->add_option("--k-max", k_max_flag, "largest moment/string index k");
    scan->add_option("--m-max", m_max_flag, "largest substitution power m (hqcon)");
    scan->add_option("--n-max", scan_n_flag, "largest weight n");
    scan->add_option("--order", scan_order_flag, "truncation order (hqcon)");
    scan->callback([&] {
        const bool json = format == "json";
        const std::map<std::string, std::function<VerificationReport()>> scans = {
            {"hqcon",
             [&] {
                 const int order = scan_order_flag ? *scan_order_flag : pick(scan_n_flag, 500);
                 return scan_hqcon(pick(m_max_flag, 10), order);
             }},
            {"akbk", [&] { return scan_akbk(pick(k_max_flag, 5), pick(scan_n_flag, 200)); }},
            {"m2n2", [&] { return scan_m2n2(pick(k_max_flag, 4), pick(scan_n_flag, 40)); }},
        };
        if (conjecture == "all") {
            for (const auto& [id, run] : scans) emit(run(), json, failures);
            return;
        }
        const auto it = scans.find(conjecture);
        if (it == scans.end())
            throw CLI::ValidationError("conjecture", "unknown conjecture '" + conjecture + "'");
        emit(it->second(), json, failures);
    });

    // ---- expand ----------------------------------------------------------
    auto* expand = app.add_subcommand("expand", "print a series expansion as JSON");
    std::string series_name;
    std::optional<int> expand_order_flag;
    int expand_k = 1;
    bool bivariate = false;
    expand->add_option("series", series_name,
                       "univariate: euler-product, neg-q-product, odd-product-plus/minus, "
                       "partition-count, overpartition-count, lambert-h, lambert-h-closed, "
                       "f-k, a1..a4, r1, m1, ospt-bar, a-k, b-k; "
                       "bivariate (--bivariate): rank-over, crank, crank-over")
        ->required();
    expand->add_option("--order", expand_order_flag, "truncation order");
    expand->add_option("--k", expand_k, "index for f-k / a-k / b-k")->check(CLI::PositiveNumber);
    expand->add_flag("--bivariate", bivariate, "emit two-variable rows, one JSON object per n");
    expand->callback([&] {
        const int order = pick(expand_order_flag, 20);
        if (bivariate) {
            LaurentQSeries g(0);
            if (series_name == "rank-over")
                g = rank_gf_over(order);
            else if (series_name == "crank")
                g = crank_gf_partitions(order);
            else if (series_name == "crank-over")
                g = crank_gf_over(order);
            else
                throw CLI::ValidationError(
                    "series", "unknown bivariate series '" + series_name + "'");
            for (int n = 0; n <= g.order(); ++n) std::printf("%s\n", g.row_json(n).c_str());
            return;
        }
        const TruncatedSeries s = expand_series(series_name, order, expand_k);
        if (format == "json")
            std::printf("%s\n", s.to_json().c_str());
        else
            std::printf("%s = %s\n%s\n", series_name.c_str(), s.str(16).c_str(),
                        s.to_json().c_str());
    });

    // ---- moments ---------------------------------------------------------
    auto* moments_cmd = app.add_subcommand("moments", "positive moments as CSV n,value");
    std::string kind_name = "rank-over";
    int moment_k = 1;
    std::optional<int> moments_n_flag;
    moments_cmd
        ->add_option("--kind", kind_name,
                     "rank-over, crank-over, rank-ordinary or crank-ordinary")
        ->check(CLI::IsMember({"rank-over", "crank-over", "rank-ordinary", "crank-ordinary"}));
    moments_cmd->add_option("--k", moment_k, "moment index k >= 1")->check(CLI::PositiveNumber);
    moments_cmd->add_option("--n-max", moments_n_flag, "largest weight n");
    moments_cmd->callback([&] {
        const int n_max = pick(moments_n_flag, 60);
        const StatisticTables t = build_tables_fast(n_max);
        const CountTable* table = &t.rank_over;
        MomentKind kind = MomentKind::rank_over;
        if (kind_name == "crank-over") {
            table = &t.crank_over;
            kind = MomentKind::crank_over;
        } else if (kind_name == "rank-ordinary") {
            table = &t.rank_ordinary;
            kind = MomentKind::rank_ordinary;
        } else if (kind_name == "crank-ordinary") {
            table = &t.crank_ordinary;
            kind = MomentKind::crank_ordinary;
        }
        const MomentSeries m = positive_moment_from_table(*table, kind, moment_k);
        std::printf("n,value\n");
        for (int n = 0; n <= n_max; ++n)
            std::printf("%d,%s\n", n, to_string(m.series.coeff(n)).c_str());
    });

    // ---- strings ---------------------------------------------------------
    auto* strings_cmd =
        app.add_subcommand("strings", "odd/even string counts per overpartition of n");
    int strings_n = 5;
    strings_cmd->add_option("--n", strings_n, "weight n")->required()
        ->check(CLI::NonNegativeNumber);
    strings_cmd->callback([&] {
        std::printf("overpartition,odd,even\n");
        long long total_odd = 0, total_even = 0;
        for (const Overpartition& o : gen_overpartitions(strings_n)) {
            const int odd = count_odd_strings_over(o);
            const int even = count_even_strings_over(o);
            total_odd += odd;
            total_even += even;
            std::printf("%s,%d,%d\n", o.str().c_str(), odd, even);
        }
        std::printf("totals,%lld,%lld\n", total_odd, total_even);
    });

    // ---- table -----------------------------------------------------------
    auto* table_cmd = app.add_subcommand("table", "count tables as CSV statistic,m,n,count");
    std::optional<int> table_n_flag;
    table_cmd->add_option("--n-max", table_n_flag, "largest weight n");
    table_cmd->callback([&] {
        const int n_max = pick(table_n_flag, 25);
        const StatisticTables t = build_tables(n_max);
        std::printf("statistic,m,n,count\n");
        const std::vector<std::pair<std::string, const CountTable*>> tables = {
            {"rank", &t.rank_ordinary},
            {"crank", &t.crank_ordinary},
            {"rank-over", &t.rank_over},
            {"crank-over", &t.crank_over},
        };
        for (const auto& [name, table] : tables)
            for (int n = 0; n <= n_max; ++n)
                for (int m = -n_max; m <= n_max; ++m)
                    if (const long long c = table->get(m, n); c != 0)
                        std::printf("%s,%d,%d,%lld\n", name.c_str(), m, n, c);
    });

    // ---- table1 ----------------------------------------------------------
    auto* table1_cmd =
        app.add_subcommand("table1", "reproduce the strings-in-overpartitions-of-5 table");
    table1_cmd->callback([&] {
        if (format != "json") {
            std::printf("overpartition,odd,even\n");
            for (const Overpartition& o : gen_overpartitions(5)) {
                const int odd = count_odd_strings_over(o);
                const int even = count_even_strings_over(o);
                if (odd != 0 || even != 0)
                    std::printf("%s,%d,%d\n", o.str().c_str(), odd, even);
            }
        }
        emit(reproduce_table1(), format == "json", failures);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return failures == 0 ? 0 : 1;
}

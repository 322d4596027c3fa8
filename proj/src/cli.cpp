#include "copwin/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "copwin/domination.hpp"
#include "copwin/errors.hpp"
#include "copwin/experiments.hpp"
#include "copwin/formulas.hpp"
#include "copwin/game.hpp"
#include "copwin/graph6.hpp"
#include "copwin/match.hpp"
#include "copwin/rng.hpp"
#include "copwin/sampling.hpp"
#include "copwin/strategies.hpp"

namespace copwin::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";
constexpr const char* kRecordEnv = "COPWIN_RECORDS";

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

bool scalar_or_flat(const Json& v) {
    if (!v.is_structured()) return true;
    if (v.is_array())
        return std::all_of(v.begin(), v.end(), [](const Json& e) { return !e.is_structured(); });
    return false;
}

std::string render(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) return fmt(v.get<double>());
    return v.dump();
}

// Human and CSV views show scalar and flat-array fields; nested payloads
// (full match traces) stay JSON-only.
void print_human(const Json& payload, std::ostream& out) {
    for (const auto& [key, value] : payload.items())
        if (scalar_or_flat(value)) out << key << ": " << render(value) << "\n";
}

void print_csv(const std::vector<Json>& payloads, std::ostream& out) {
    bool header = false;
    for (const auto& p : payloads) {
        std::string head, row;
        for (const auto& [key, value] : p.items()) {
            if (!scalar_or_flat(value)) continue;
            if (!head.empty()) {
                head += ',';
                row += ',';
            }
            head += key;
            std::string cell = render(value);
            if (cell.find(',') != std::string::npos) cell = '"' + cell + '"';
            row += cell;
        }
        if (!header) {
            out << head << "\n";
            header = true;
        }
        out << row << "\n";
    }
}

struct Emitter {
    std::string format = "human";
    std::string record_path;
    std::string command;
    Json params = Json::object();
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void emit(const std::vector<Json>& payloads, std::ostream& out) const {
        if (format == "json") {
            if (payloads.size() == 1)
                out << payloads.front().dump(2) << "\n";
            else
                out << Json(payloads).dump(2) << "\n";
        } else if (format == "csv") {
            print_csv(payloads, out);
        } else {
            bool first = true;
            for (const auto& p : payloads) {
                if (!first) out << "\n";
                first = false;
                print_human(p, out);
            }
        }
        record(payloads);
    }

    void record(const std::vector<Json>& payloads) const {
        std::string path = record_path;
        if (path.empty()) {
            const char* env = std::getenv(kRecordEnv);
            if (env) path = env;
        }
        if (path.empty()) return;
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        Json rec{{"command", command},
                 {"params", params},
                 {"version", kVersion},
                 {"duration_ms", ms},
                 {"result", payloads.size() == 1 ? payloads.front() : Json(payloads)}};
        std::ofstream f(path, std::ios::app);
        if (!f) throw std::invalid_argument("cannot open record file: " + path);
        f << rec.dump() << "\n";
    }
};

// Graph input shared by the per-graph subcommands: a positional or
// --graph graph6 string, or --file with one graph6 per line (batch).
struct GraphInput {
    std::string positional, flag, file;

    void attach(CLI::App* cmd) {
        cmd->add_option("graph6", positional, "graph6 string");
        cmd->add_option("--graph", flag, "graph6 string");
        cmd->add_option("--file", file, "file with one graph6 per line");
    }

    std::vector<std::string> lines() const {
        int given = !positional.empty() + !flag.empty() + !file.empty();
        if (given != 1)
            throw std::invalid_argument("provide exactly one graph input (positional, --graph or --file)");
        if (!positional.empty()) return {positional};
        if (!flag.empty()) return {flag};
        std::ifstream f(file);
        if (!f) throw std::invalid_argument("cannot open graph file: " + file);
        std::vector<std::string> r;
        std::string line;
        while (std::getline(f, line))
            if (!line.empty()) r.push_back(line);
        if (r.empty()) throw std::invalid_argument("graph file is empty: " + file);
        return r;
    }
};

std::uint64_t fresh_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

Json vertex_list(const VertexSet& s) { return Json(s.to_vector()); }

Json trace_json(const MatchTrace& tr) {
    Json rounds = Json::array();
    for (const auto& r : tr.rounds) rounds.push_back(Json{{"cops", r.cops}, {"robber", r.robber}});
    const char* outcome = tr.outcome == Outcome::Captured   ? "captured"
                          : tr.outcome == Outcome::Survived ? "survived"
                                                            : "fault";
    Json j{{"outcome", outcome}, {"end_round", tr.end_round}};
    if (tr.outcome == Outcome::Fault)
        j["fault_by"] = tr.fault_by == Side::Cops ? "cops" : "robber";
    j["initial_cops"] = tr.initial_cops;
    j["initial_robber"] = tr.initial_robber;
    j["rounds"] = std::move(rounds);
    return j;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cops-and-robbers toolbox: exact game solving, domination structure,\n"
                 "robber-strategy certificates, and seeded random-graph experiments"};
    app.name("copwin");
    app.require_subcommand(1);
    app.fallthrough(); // global options stay valid after the subcommand name

    Emitter emit;
    app.add_option("--format", emit.format, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--record", emit.record_path,
                   "append a run record (JSONL); default from $" + std::string(kRecordEnv));

    std::uint64_t budget = kDefaultStateBudget;
    app.add_option("--state-budget", budget, "solver state budget")->capture_default_str();

    std::function<std::vector<Json>()> action;

    // solve
    {
        auto* cmd = app.add_subcommand("solve", "solve the k-cop game on a graph");
        auto gin = std::make_shared<GraphInput>();
        gin->attach(cmd);
        auto k = std::make_shared<int>(1);
        cmd->add_option("--k", *k, "number of cops")->capture_default_str();
        cmd->callback([&, gin, k] {
            emit.command = "solve";
            emit.params = {{"k", *k}, {"state_budget", budget}};
            action = [&, gin, k] {
                std::vector<Json> res;
                for (const auto& line : gin->lines()) {
                    Graph g = graph6_decode(line);
                    GameTable t = solve_game(g, *k, budget);
                    res.push_back(Json{{"graph", graph6_encode(g)},
                                       {"n", g.order()},
                                       {"k", *k},
                                       {"kcopwin", is_k_cop_win(t)},
                                       {"states", t.state_count()},
                                       {"copwin_states", t.cop_win_states()},
                                       {"max_rank", t.max_rank()}});
                }
                return res;
            };
        });
    }

    // copnumber
    {
        auto* cmd = app.add_subcommand("copnumber", "cop number of a graph");
        auto gin = std::make_shared<GraphInput>();
        gin->attach(cmd);
        cmd->callback([&, gin] {
            emit.command = "copnumber";
            emit.params = {{"state_budget", budget}};
            action = [&, gin] {
                std::vector<Json> res;
                for (const auto& line : gin->lines()) {
                    Graph g = graph6_decode(line);
                    res.push_back(Json{{"graph", graph6_encode(g)},
                                       {"n", g.order()},
                                       {"cop_number", cop_number(g, budget)}});
                }
                return res;
            };
        });
    }

    // dismantle
    {
        auto* cmd = app.add_subcommand("dismantle", "greedy corner dismantling");
        auto gin = std::make_shared<GraphInput>();
        gin->attach(cmd);
        cmd->callback([&, gin] {
            emit.command = "dismantle";
            emit.params = Json::object();
            action = [&, gin] {
                std::vector<Json> res;
                for (const auto& line : gin->lines()) {
                    Graph g = graph6_decode(line);
                    auto d = dismantling_order(g);
                    Json order = Json::array();
                    for (auto [u, w] : d.order) order.push_back(Json::array({u, w}));
                    res.push_back(Json{{"graph", graph6_encode(g)},
                                       {"n", g.order()},
                                       {"success", d.success},
                                       {"deleted", d.order.size()},
                                       {"order", std::move(order)}});
                }
                return res;
            };
        });
    }

    // dominate
    {
        auto* cmd = app.add_subcommand("dominate", "delta_k and a witness set");
        auto gin = std::make_shared<GraphInput>();
        gin->attach(cmd);
        auto k = std::make_shared<int>(1);
        cmd->add_option("--k", *k, "set size")->capture_default_str();
        cmd->callback([&, gin, k] {
            emit.command = "dominate";
            emit.params = {{"k", *k}};
            action = [&, gin, k] {
                std::vector<Json> res;
                for (const auto& line : gin->lines()) {
                    Graph g = graph6_decode(line);
                    auto d = delta_k(g, *k);
                    res.push_back(Json{{"graph", graph6_encode(g)},
                                       {"n", g.order()},
                                       {"k", *k},
                                       {"delta", d.value},
                                       {"dominating", d.value == 0},
                                       {"witness", vertex_list(d.witness)}});
                }
                return res;
            };
        });
    }

    // certify
    {
        auto* cmd = app.add_subcommand("certify", "robber-strategy certificates");
        auto gin = std::make_shared<GraphInput>();
        gin->attach(cmd);
        auto k = std::make_shared<int>(1);
        auto q = std::make_shared<int>(0);
        auto which = std::make_shared<std::string>("both");
        cmd->add_option("--k", *k, "number of cops")->capture_default_str();
        cmd->add_option("--q", *q, "evasion parameter (default k+1)");
        cmd->add_option("--which", *which, "certificate to run")
            ->check(CLI::IsMember({"greedy", "evasion", "both"}))
            ->capture_default_str();
        cmd->callback([&, gin, k, q, which] {
            emit.command = "certify";
            emit.params = {{"k", *k}, {"q", *q ? *q : *k + 1}, {"which", *which}};
            action = [&, gin, k, q, which] {
                int qq = *q ? *q : *k + 1;
                std::vector<Json> res;
                for (const auto& line : gin->lines()) {
                    Graph g = graph6_decode(line);
                    Json j{{"graph", graph6_encode(g)}, {"n", g.order()}, {"k", *k}};
                    if (*which != "evasion") {
                        auto c = greedy_escape_certificate(g, *k, budget);
                        j["greedy_verdict"] = c.verdict;
                        if (c.verdict) {
                            j["greedy_S"] = vertex_list(c.S);
                            j["greedy_v"] = c.v;
                        }
                    }
                    if (*which != "greedy") {
                        auto c = evasion_certificate(g, *k, qq, budget);
                        j["evasion_verdict"] = c.verdict;
                        j["q"] = c.q;
                        j["dangerous_count"] = c.dangerous_count;
                        j["delta"] = c.delta;
                    }
                    res.push_back(std::move(j));
                }
                return res;
            };
        });
    }

    // match
    {
        auto* cmd = app.add_subcommand("match", "play a full match");
        auto gin = std::make_shared<GraphInput>();
        gin->attach(cmd);
        auto k = std::make_shared<int>(1);
        auto copstrat = std::make_shared<std::string>("optimal");
        auto robstrat = std::make_shared<std::string>("optimal");
        auto rounds = std::make_shared<int>(1000);
        auto q = std::make_shared<int>(0);
        auto seed = std::make_shared<std::uint64_t>(0);
        cmd->add_option("--k", *k, "number of cops")->capture_default_str();
        cmd->add_option("--cop-strategy", *copstrat, "cop controller")
            ->check(CLI::IsMember({"optimal", "domset"}))
            ->capture_default_str();
        cmd->add_option("--robber-strategy", *robstrat, "robber controller")
            ->check(CLI::IsMember({"optimal", "greedy", "evasion"}))
            ->capture_default_str();
        cmd->add_option("--max-rounds", *rounds, "round limit")->capture_default_str();
        cmd->add_option("--q", *q, "evasion parameter (default k+1)");
        cmd->add_option("--seed", *seed, "recorded in the trace")->capture_default_str();
        cmd->callback([&, gin, k, copstrat, robstrat, rounds, q, seed] {
            emit.command = "match";
            emit.params = {{"k", *k},          {"cop_strategy", *copstrat},
                           {"robber_strategy", *robstrat},
                           {"max_rounds", *rounds},
                           {"q", *q ? *q : *k + 1},
                           {"seed", *seed}};
            action = [&, gin, k, copstrat, robstrat, rounds, q, seed] {
                std::vector<Json> res;
                for (const auto& line : gin->lines()) {
                    Graph g = graph6_decode(line);

                    std::optional<GameTable> table;
                    if (*copstrat == "optimal" || *robstrat == "optimal")
                        table.emplace(solve_game(g, *k, budget));

                    std::unique_ptr<CopController> cops;
                    if (*copstrat == "optimal") {
                        cops = make_table_cops(*table);
                    } else {
                        auto d = delta_k(g, *k);
                        if (d.value != 0)
                            throw std::invalid_argument(
                                "domset cops need delta_k = 0 (no dominating set of size k)");
                        cops = make_domset_cops(d.witness);
                    }

                    std::unique_ptr<RobberController> robber;
                    if (*robstrat == "optimal") {
                        robber = make_table_robber(*table);
                    } else if (*robstrat == "greedy") {
                        auto c = greedy_escape_certificate(g, *k, budget);
                        if (!c.verdict)
                            throw std::invalid_argument(
                                "greedy robber needs a true greedy certificate on this graph");
                        robber = make_greedy_robber(g, make_greedy_context(g, c.S, c.v));
                    } else {
                        int qq = *q ? *q : *k + 1;
                        robber = make_evasion_robber(g, dangerous_vertices(g, *k, qq, budget));
                    }

                    MatchTrace tr = play_match(g, *k, *cops, *robber, *rounds, *seed);
                    Json j{{"graph", graph6_encode(g)},
                           {"n", g.order()},
                           {"k", *k},
                           {"cop_strategy", *copstrat},
                           {"robber_strategy", *robstrat},
                           {"seed", *seed}};
                    j.update(trace_json(tr));
                    res.push_back(std::move(j));
                }
                return res;
            };
        });
    }

    // enumerate
    {
        auto* cmd = app.add_subcommand("enumerate", "exact count over all labelled graphs");
        auto n = std::make_shared<int>(0);
        auto event = std::make_shared<std::string>();
        auto k = std::make_shared<int>(1);
        auto allow7 = std::make_shared<bool>(false);
        cmd->add_option("--n", *n, "vertex count")->required();
        cmd->add_option("--event", *event, "kcopwin|kdom|universal|dismantlable")->required();
        cmd->add_option("--k", *k, "event parameter")->capture_default_str();
        cmd->add_flag("--allow-7", *allow7, "permit n = 7 (2097152 graphs, slow)");
        cmd->callback([&, n, event, k, allow7] {
            emit.command = "enumerate";
            emit.params = {{"n", *n}, {"event", *event}, {"k", *k}, {"allow_7", *allow7}};
            action = [&, n, event, k, allow7] {
                if (*allow7 && *n == 7) err << "note: enumerating 2097152 graphs\n";
                EventSpec e{parse_event_kind(*event), *k};
                auto r = enumerate_labelled(*n, e, *allow7, budget);
                double ratio = static_cast<double>(r.count) / static_cast<double>(r.total);
                return std::vector<Json>{Json{{"n", *n},
                                              {"event", *event},
                                              {"k", *k},
                                              {"count", r.count},
                                              {"total", r.total},
                                              {"ratio", ratio}}};
            };
        });
    }

    // estimate
    {
        auto* cmd = app.add_subcommand("estimate", "Monte Carlo event probability under G(n,p)");
        auto n = std::make_shared<int>(0);
        auto p = std::make_shared<double>(0.5);
        auto event = std::make_shared<std::string>();
        auto k = std::make_shared<int>(1);
        auto trials = std::make_shared<std::uint64_t>(10000);
        auto seed = std::make_shared<std::optional<std::uint64_t>>();
        cmd->add_option("--n", *n, "vertex count")->required();
        cmd->add_option("--p", *p, "edge probability")->capture_default_str();
        cmd->add_option("--event", *event, "kcopwin|kdom|universal|dismantlable")->required();
        cmd->add_option("--k", *k, "event parameter")->capture_default_str();
        cmd->add_option("--trials", *trials, "trial count")->capture_default_str();
        cmd->add_option("--seed", *seed, "base seed (generated and printed if absent)");
        cmd->callback([&, n, p, event, k, trials, seed] {
            std::uint64_t s = seed->has_value() ? **seed : fresh_seed();
            emit.command = "estimate";
            emit.params = {{"n", *n},      {"p", *p},         {"event", *event},
                           {"k", *k},      {"trials", *trials}, {"seed", s}};
            action = [&, n, p, event, k, trials, s] {
                EventSpec e{parse_event_kind(*event), *k};
                Estimate est = estimate_probability({*n, *p, s}, e, *trials, budget);
                return std::vector<Json>{Json{{"n", *n},
                                              {"p", *p},
                                              {"event", *event},
                                              {"k", *k},
                                              {"seed", s},
                                              {"trials", est.trials},
                                              {"successes", est.successes},
                                              {"point", est.point},
                                              {"ci_low", est.ci_low},
                                              {"ci_high", est.ci_high},
                                              {"budget_errors", est.budget_errors}}};
            };
        });
    }

    // formulas
    {
        auto* cmd = app.add_subcommand("formulas", "closed-form evaluators");
        auto n = std::make_shared<int>(0);
        auto k = std::make_shared<int>(1);
        auto l = std::make_shared<std::optional<int>>();
        auto mean = std::make_shared<std::optional<double>>();
        auto eps = std::make_shared<std::optional<double>>();
        cmd->add_option("--n", *n, "vertex count")->required();
        cmd->add_option("--k", *k, "set size")->capture_default_str();
        cmd->add_option("--l", *l, "overlap for pair domination and eta");
        cmd->add_option("--mean", *mean, "Chernoff mean");
        cmd->add_option("--eps", *eps, "Chernoff epsilon");
        cmd->callback([&, n, k, l, mean, eps] {
            emit.command = "formulas";
            emit.params = {{"n", *n}, {"k", *k}};
            action = [&, n, k, l, mean, eps] {
                auto fm = kdom_first_moment(*n, *k);
                Json j{{"n", *n},
                       {"k", *k},
                       {"first_moment", fm.value},
                       {"first_moment_log2", fm.log2_value}};
                if (fm.exact) j["first_moment_exact"] = fm.exact->to_string();
                j["labelled_count_log2"] = labelled_count_formula(*n, *k);
                if (l->has_value()) {
                    j["l"] = **l;
                    j["pair_domination"] = pair_domination_probability(*k, **l).to_string();
                    j["eta"] = eta(*k, **l).to_string();
                }
                if (mean->has_value() && eps->has_value()) {
                    double b = chernoff_bound(**mean, **eps);
                    j["chernoff_bound"] = b;
                    j["chernoff_probability_bound"] = std::min(1.0, b);
                }
                return std::vector<Json>{std::move(j)};
            };
        });
    }

    // sweep
    {
        auto* cmd = app.add_subcommand("sweep", "per-n table of event probabilities (CSV)");
        auto nmin = std::make_shared<int>(0);
        auto nmax = std::make_shared<int>(0);
        auto k = std::make_shared<int>(1);
        auto mode = std::make_shared<std::string>("exact");
        auto trials = std::make_shared<std::uint64_t>(0);
        auto p = std::make_shared<double>(0.5);
        auto seed = std::make_shared<std::optional<std::uint64_t>>();
        auto allow7 = std::make_shared<bool>(false);
        auto outfile = std::make_shared<std::string>();
        cmd->add_option("--n-min", *nmin, "first n")->required();
        cmd->add_option("--n-max", *nmax, "last n")->required();
        cmd->add_option("--k", *k, "number of cops")->capture_default_str();
        cmd->add_option("--mode", *mode, "exact enumeration or sampled")
            ->check(CLI::IsMember({"exact", "estimate"}))
            ->capture_default_str();
        cmd->add_option("--trials", *trials, "trials per n (estimate mode)");
        cmd->add_option("--p", *p, "edge probability (estimate mode)")->capture_default_str();
        cmd->add_option("--seed", *seed, "base seed (generated and printed if absent)");
        cmd->add_flag("--allow-7", *allow7, "permit n = 7 in exact mode");
        cmd->add_option("--out", *outfile, "write the CSV here instead of stdout");
        cmd->callback([&, nmin, nmax, k, mode, trials, p, seed, allow7, outfile] {
            bool sampled = *mode == "estimate";
            std::uint64_t s = seed->has_value() ? **seed : (sampled ? fresh_seed() : 0);
            emit.command = "sweep";
            emit.params = {{"n_min", *nmin}, {"n_max", *nmax}, {"k", *k},
                           {"mode", *mode},  {"trials", *trials}, {"p", *p},
                           {"seed", s}};
            action = [&, nmin, nmax, k, mode, trials, p, s, sampled, allow7, outfile] {
                if (*nmin > *nmax) throw std::invalid_argument("sweep: empty range");
                if (*mode == "estimate" && *trials == 0)
                    throw std::invalid_argument("sweep: estimate mode needs --trials > 0");

                std::ostringstream csv;
                csv << "n,p_kcopwin,p_kdom,first_moment,ratio_copwin_over_first_moment,"
                       "ci_low,ci_high\n";
                std::vector<Json> rows;
                for (int n = *nmin; n <= *nmax; ++n) {
                    double pcw, pkd, lo, hi;
                    if (*mode == "exact") {
                        auto cw = enumerate_labelled(n, {EventKind::KCopWin, *k}, *allow7, budget);
                        auto kd = enumerate_labelled(n, {EventKind::KDom, *k}, *allow7, budget);
                        pcw = static_cast<double>(cw.count) / static_cast<double>(cw.total);
                        pkd = static_cast<double>(kd.count) / static_cast<double>(kd.total);
                        lo = hi = pcw;
                    } else {
                        // one derived stream per n keeps rows independently replayable
                        std::uint64_t sn = mix(s, static_cast<std::uint64_t>(n));
                        auto cw = estimate_probability({n, *p, sn}, {EventKind::KCopWin, *k},
                                                       *trials, budget);
                        auto kd = estimate_probability({n, *p, mix(sn, 0)},
                                                       {EventKind::KDom, *k}, *trials, budget);
                        pcw = cw.point;
                        pkd = kd.point;
                        lo = cw.ci_low;
                        hi = cw.ci_high;
                    }
                    double fmv = kdom_first_moment(n, *k).value;
                    csv << n << ',' << fmt(pcw) << ',' << fmt(pkd) << ',' << fmt(fmv) << ','
                        << fmt(pcw / fmv) << ',' << fmt(lo) << ',' << fmt(hi) << "\n";
                    rows.push_back(Json{{"n", n},
                                        {"p_kcopwin", pcw},
                                        {"p_kdom", pkd},
                                        {"first_moment", fmv},
                                        {"ratio_copwin_over_first_moment", pcw / fmv},
                                        {"ci_low", lo},
                                        {"ci_high", hi}});
                }
                std::string head = sampled ? "seed: " + std::to_string(s) + "\n" : "";
                if (outfile->empty()) {
                    out << head << csv.str();
                } else {
                    std::ofstream f(*outfile);
                    if (!f) throw std::invalid_argument("cannot open output file: " + *outfile);
                    f << csv.str();
                    out << head << "wrote " << *outfile << "\n";
                }
                emit.record(rows);
                return std::vector<Json>{}; // already printed
            };
        });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        auto payloads = action();
        if (!payloads.empty()) emit.emit(payloads, out);
        return 0;
    } catch (const budget_error& e) {
        err << "limit exceeded: " << e.what() << "\n";
        return 2;
    } catch (const no_safe_move_error& e) {
        err << "strategy failed: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::overflow_error& e) {
        err << "invalid input: " << e.what() << "\n";
        return 1;
    }
}

} // namespace copwin::cli

// burnlab: burnability of path forests via the sumset-partition model.
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "burnlab/enumerate.hpp"
#include "burnlab/extremal.hpp"
#include "burnlab/list_store.hpp"
#include "burnlab/oracle.hpp"
#include "burnlab/pipeline.hpp"
#include "burnlab/solver.hpp"

using json = nlohmann::json;
using namespace burnlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

// Proven L_k values used by the candidate certifier.
const std::map<int, Order> kKnownL = {{1, 1}, {2, 3}, {3, 18}, {4, 26},
                                      {5, 36}, {6, 46}, {7, 56}};

json forest_json(const PathForest& t) { return json(t.orders()); }

json certificate_json(const std::optional<BurnCertificate>& cert) {
    if (!cert) return nullptr;
    json blocks = json::array();
    for (const auto& b : cert->blocks) blocks.push_back(b);
    return blocks;
}

json decision_json(const PathForest& t, int m, bool burnable, BurnMode mode,
                   const std::optional<BurnCertificate>& cert) {
    return json{{"forest", forest_json(t)},
                {"m", m},
                {"burnable", burnable},
                {"mode", mode == BurnMode::Exact ? "exact" : "covering"},
                {"certificate", certificate_json(cert)}};
}

std::string blocks_str(const BurnCertificate& cert) {
    std::string out;
    for (std::size_t i = 0; i < cert.blocks.size(); ++i) {
        out += i ? " {" : "{";
        for (std::size_t j = 0; j < cert.blocks[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(cert.blocks[i][j]);
        }
        out += '}';
    }
    return out;
}

struct RunConfig {
    std::string lists_dir;
    int threads = 0;
    Order memory_budget = 200'000'000;
    bool json_out = false;
    bool oracle_crosscheck = false;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"burnability of path forests (sumset partition of odd integers)"};
    app.require_subcommand(1);
    RunConfig cfg;
    if (const char* env = std::getenv("BURNLAB_LISTS_DIR")) cfg.lists_dir = env;
    app.add_option("--lists-dir", cfg.lists_dir, "directory for persisted lists")
        ->envname("BURNLAB_LISTS_DIR");
    app.add_option("--threads", cfg.threads, "worker count (0 = auto)");
    app.add_option("--memory-budget", cfg.memory_budget,
                   "item cap per enumeration level")
        ->check(CLI::Range(Order{1'000'000}, Order{1'000'000'000'000}));
    app.add_flag("--json", cfg.json_out, "machine-readable output");

    std::string forest_text;
    int n = 0, m = 0, m_max = 0;
    Order l1_min = 0, candidate_L = 0, floor_val = 0;
    bool construct = false;

    auto* decide = app.add_subcommand("decide", "is the forest well-burnable?");
    decide->add_option("forest", forest_text)->required();
    decide->add_option("-m", m, "decide m-round burnability instead");
    decide->add_flag("--oracle", cfg.oracle_crosscheck, "cross-check with brute force");

    auto* bn = app.add_subcommand("bn", "burning number of the forest");
    bn->add_option("forest", forest_text)->required();
    bn->add_flag("--oracle", cfg.oracle_crosscheck, "cross-check with brute force");

    auto* impossible = app.add_subcommand("impossible", "impossibly-burnable report");
    impossible->add_option("forest", forest_text)->required();

    auto* enumerate = app.add_subcommand("enumerate",
                                         "well-burnable n-path forests of order m^2");
    enumerate->add_option("-n", n)->required();
    enumerate->add_option("-m", m)->required();
    enumerate->add_option("--l1-min", l1_min);

    auto* deficient = app.add_subcommand("deficient",
                                         "deficient n-path forests of order m^2");
    deficient->add_option("-n", n)->required();
    deficient->add_option("-m", m)->required();
    deficient->add_option("--l1-min", l1_min)->required();

    auto* mn = app.add_subcommand("mn", "largest l_1 of an impossibly burnable forest");
    mn->add_option("-n", n)->required();
    mn->add_flag("--oracle", cfg.oracle_crosscheck, "cross-check by feasibility search");
    mn->add_flag("--construct", construct, "emit the extremal forest");

    auto* verify = app.add_subcommand("verify-L", "verify a candidate L_n value");
    verify->add_option("-n", n)->required();
    verify->add_option("--L", candidate_L)->required();
    verify->add_option("--m-max", m_max)->required();

    auto* delta = app.add_subcommand("delta",
                                     "deficient but not impossibly burnable forests");
    delta->add_option("-n", n)->required();
    delta->add_option("--floor", floor_val)->required();
    delta->add_option("--m-max", m_max)->required();

    auto* table1 = app.add_subcommand("table1", "7-path counts with l_1 >= 46");
    table1->add_option("--m", m)->required();

    auto* candidates = app.add_subcommand("candidates",
                                          "potentially deficient candidates at order m^2");
    candidates->add_option("-n", n)->required();
    candidates->add_option("--m", m)->required();
    candidates->add_option("--l1-min", l1_min, "bound on l_1 (default 46)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (decide->parsed()) {
            PathForest t = PathForest::parse(forest_text);
            if (m > 0) {
                auto cert = decide_burnable(t, m);
                if (cfg.oracle_crosscheck) {
                    int bn_oracle = oracle_burning_number(t);
                    if ((bn_oracle <= m) != cert.has_value())
                        throw std::runtime_error("oracle disagrees with solver");
                    std::cerr << "oracle agrees\n";
                }
                if (cfg.json_out)
                    std::cout << decision_json(t, m, cert.has_value(),
                                               BurnMode::Covering, cert)
                              << "\n";
                else if (cert)
                    std::cout << "burnable " << blocks_str(*cert) << "\n";
                else
                    std::cout << "not-burnable\n";
            } else {
                auto res = is_well_burnable(t);
                if (cfg.oracle_crosscheck && try_square_side(t)) {
                    if (oracle_decide_exact(t).has_value() != res.well)
                        throw std::runtime_error("oracle disagrees with solver");
                    std::cerr << "oracle agrees\n";
                }
                int side = static_cast<int>(ceil_sqrt(t.total()));
                BurnMode mode = try_square_side(t) ? BurnMode::Exact : BurnMode::Covering;
                if (cfg.json_out)
                    std::cout << decision_json(t, side, res.well, mode, res.certificate)
                              << "\n";
                else if (res.well)
                    std::cout << "well-burnable " << blocks_str(*res.certificate) << "\n";
                else
                    std::cout << "deficient\n";
            }
        } else if (bn->parsed()) {
            PathForest t = PathForest::parse(forest_text);
            auto res = burning_number(t);
            if (cfg.oracle_crosscheck) {
                if (oracle_burning_number(t) != res.m)
                    throw std::runtime_error("oracle disagrees with solver");
                std::cerr << "oracle agrees\n";
            }
            if (cfg.json_out)
                std::cout << decision_json(t, res.m, true, res.certificate.mode,
                                           res.certificate)
                          << "\n";
            else
                std::cout << "bn = " << res.m << " " << blocks_str(res.certificate)
                          << "\n";
        } else if (impossible->parsed()) {
            PathForest t = PathForest::parse(forest_text);
            auto rep = impossibility_report(t);
            if (cfg.json_out) {
                std::cout << json{{"forest", forest_json(t)},
                                  {"m", rep.m},
                                  {"t", rep.t},
                                  {"sum_t", rep.sum_t},
                                  {"set_a", rep.set_a},
                                  {"set_b", rep.set_b},
                                  {"s", rep.s},
                                  {"impossibly_burnable", rep.verdict}}
                          << "\n";
            } else {
                std::cout << "m=" << rep.m << " t=(";
                for (std::size_t i = 0; i < rep.t.size(); ++i)
                    std::cout << (i ? "," : "") << rep.t[i];
                std::cout << ") sum=" << rep.sum_t << " -> "
                          << (rep.verdict ? "impossibly-burnable"
                                          : "not-impossibly-burnable")
                          << "\n";
            }
        } else if (enumerate->parsed() || deficient->parsed()) {
            BuildOptions opts;
            opts.item_cap = cfg.memory_budget;
            opts.persist_dir = cfg.lists_dir;
            auto fam = build_lists(n, m, opts);
            const ForestList& well = fam.well.at({n, m});
            ForestList out = enumerate->parsed()
                                 ? (l1_min > 0 ? filter_l1(well, l1_min) : well)
                                 : deficient_complement(well, l1_min);
            if (cfg.json_out) {
                json items = json::array();
                for (const auto& t : out.items) items.push_back(forest_json(t));
                std::cout << json{{"n", out.n},
                                  {"m", out.m},
                                  {"kind", kind_name(out.kind)},
                                  {"l1_min", out.l1_min},
                                  {"count", out.items.size()},
                                  {"items", items}}
                          << "\n";
            } else {
                for (const auto& t : out.items) std::cout << t.str() << "\n";
                std::cerr << "count=" << out.items.size() << "\n";
            }
        } else if (mn->parsed()) {
            Order value = m_n_closed_form(n);
            json out{{"n", n}, {"M_n", value}};
            std::string text = "M_" + std::to_string(n) + " = " + std::to_string(value);
            if (cfg.oracle_crosscheck) {
                auto [brute, witness] = m_n_bruteforce(n);
                if (brute != value)
                    throw std::runtime_error("feasibility search disagrees: " +
                                             std::to_string(brute));
                out["oracle"] = brute;
                out["oracle_witness"] = forest_json(witness);
                text += " (oracle agrees, witness " + witness.str() + ")";
            }
            if (construct && n >= 3) {
                auto [params, forest] = extremal_forest(n);
                auto structure = optimal_structure_check(n, forest);
                out["construction"] = {{"x0", params.x0},
                                       {"m", params.m},
                                       {"forest", forest_json(forest)},
                                       {"t", structure.t},
                                       {"b_all_three", structure.b_all_three},
                                       {"a_all_four", structure.a_all_four},
                                       {"structure_pass", structure.pass}};
                text += "\nforest " + forest.str() +
                        (structure.pass ? " (structure ok)" : " (structure flag)");
            }
            std::cout << (cfg.json_out ? out.dump() : text) << "\n";
        } else if (verify->parsed()) {
            auto res = verify_L(n, candidate_L, m_max, cfg.threads);
            if (cfg.json_out) {
                json out{{"n", res.n},
                         {"candidate_L", res.candidate_L},
                         {"m_verified_up_to", res.m_verified_up_to},
                         {"closure_m", res.closure_m},
                         {"status", ln_status_name(res.status)}};
                json exc = json::array();
                for (const auto& t : res.exceptional_deficient)
                    exc.push_back(forest_json(t));
                out["exceptional_deficient"] = exc;
                out["minimality_witness"] =
                    res.minimality_witness ? forest_json(*res.minimality_witness)
                                           : json(nullptr);
                std::cout << out << "\n";
            } else {
                std::cout << "L_" << n << " = " << candidate_L << ": "
                          << ln_status_name(res.status);
                if (res.minimality_witness)
                    std::cout << " (witness " << res.minimality_witness->str() << ")";
                std::cout << "\n";
                for (const auto& t : res.exceptional_deficient)
                    std::cout << "deficient: " << t.str() << "\n";
            }
            if (res.status == LnStatus::Refuted) return kExitRefuted;
        } else if (delta->parsed()) {
            auto res = delta_search(n, floor_val, m_max, cfg.threads);
            if (cfg.json_out) {
                json items = json::array();
                for (const auto& t : res.items) items.push_back(forest_json(t));
                std::cout << json{{"n", res.n},
                                  {"floor", res.l1_floor},
                                  {"m_max", res.m_max},
                                  {"count", res.items.size()},
                                  {"items", items}}
                          << "\n";
            } else {
                for (const auto& t : res.items) std::cout << t.str() << "\n";
                std::cerr << "count=" << res.items.size() << "\n";
            }
        } else if (table1->parsed()) {
            auto row = table1_row(m, cfg.lists_dir, cfg.threads);
            if (cfg.json_out)
                std::cout << json{{"m", m},
                                  {"well", row.well},
                                  {"deficient", row.deficient}}
                          << "\n";
            else
                std::cout << "well=" << row.well << " deficient=" << row.deficient
                          << "\n";
        } else if (candidates->parsed()) {
            Order bound = l1_min > 0 ? l1_min : 46;
            auto cand = candidates_for_level(n, m, bound, cfg.threads);
            auto prev = classify_level(n, m - 1, bound, cfg.threads);
            std::vector<const ForestList*> refs{&prev.deficient};
            auto cert = certify_candidates(cand, kKnownL, refs);
            if (cfg.json_out) {
                std::cout << json{{"n", n},
                                  {"m", m},
                                  {"l1_min", bound},
                                  {"candidates", cand.items.size()},
                                  {"impossibly_burnable", cert.impossibly_burnable.size()},
                                  {"well_burnable", cert.well_burnable.size()},
                                  {"deficient_not_impossible",
                                   cert.deficient_not_impossible.size()},
                                  {"undecided", cert.undecided.size()}}
                          << "\n";
            } else {
                std::cout << "candidates=" << cand.items.size()
                          << " impossibly-burnable=" << cert.impossibly_burnable.size()
                          << " well=" << cert.well_burnable.size()
                          << " deficient-not-impossible="
                          << cert.deficient_not_impossible.size()
                          << " undecided=" << cert.undecided.size() << "\n";
            }
        }
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const oracle_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

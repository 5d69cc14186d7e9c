#include <relgw/cycleclasses.hpp>
#include <relgw/errors.hpp>
#include <relgw/givental.hpp>
#include <relgw/graphs.hpp>
#include <relgw/invariants.hpp>
#include <relgw/quantum.hpp>
#include <relgw/serialize.hpp>
#include <relgw/solver.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace relgw;

namespace
{

enum Exit { ok = 0, bad_input = 2, overflow = 3, mismatch = 4, margin = 5 };

struct Config {
    int n = 2;
    int window = 4;
    int qmax = 3;
    int zmin = -6;
    int zmax = 6;
    std::string format = "text";

    bool json() const
    {
        return format == "json";
    }
    InsContext ctx() const
    {
        return make_context(n, window);
    }
};

void emit(const Config &cfg, const Json &j, const std::string &text)
{
    if (cfg.json()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text << "\n";
    }
}

std::vector<int> parse_int_list(const std::string &s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception &) {
            throw parse_error("expected an integer list", 0);
        }
        if (used != item.size()) {
            throw parse_error("expected an integer list", used);
        }
        out.push_back(v);
    }
    return out;
}

// "a..b" or a single integer.
std::pair<int, int> parse_range(const std::string &s)
{
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        int v = parse_int_list(s).at(0);
        return {v, v};
    }
    return {parse_int_list(s.substr(0, dots)).at(0), parse_int_list(s.substr(dots + 2)).at(0)};
}

std::vector<Insertion> parse_insertions(const std::vector<std::string> &exprs, const std::vector<int> &psi,
                                        const InsContext &ctx)
{
    if (!psi.empty() && psi.size() != exprs.size()) {
        throw parse_error("--psi needs one exponent per insertion", 0);
    }
    std::vector<Insertion> out;
    for (std::size_t j = 0; j < exprs.size(); ++j) {
        out.push_back({psi.empty() ? 0 : psi[j], parse_insertion(exprs[j], ctx)});
    }
    return out;
}

std::string l_name(int m)
{
    return "l_" + std::to_string(m);
}

std::string scaled(const Rational &c, const std::string &name)
{
    if (is_zero(c)) {
        return "0";
    }
    if (c == 1) {
        return name;
    }
    if (c == -1) {
        return "-" + name;
    }
    return to_string(c) + "*" + name;
}

Json graph_record(const BipartiteGraph &g, int n)
{
    Poly c = C_G(g, n);
    Json j = to_json(g);
    j["canonical"] = canonical_form(g);
    j["aut"] = automorphism_order(g);
    j["C_G"] = to_json(c);
    j["C_G_text"] = format_poly(c);
    j["virtual_dim"] = virtual_dim(topological_type(g, n), n);
    return j;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Genus-zero relative Gromov-Witten workbench for (P^n, P^{n-1})"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key = value configuration file");
    Config cfg;
    app.add_option("--n", cfg.n, "ambient dimension")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--window", cfg.window, "largest |contact order|")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--qmax", cfg.qmax, "largest q-power")->check(CLI::NonNegativeNumber)->capture_default_str();
    app.add_option("--zmin", cfg.zmin, "lowest z-exponent")->capture_default_str();
    app.add_option("--zmax", cfg.zmax, "highest z-exponent")->capture_default_str();
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::function<int()> action;

    // ring
    auto *ring = app.add_subcommand("ring", "ring of insertions");
    ring->require_subcommand(1);
    std::vector<std::string> exprs;
    auto *mult = ring->add_subcommand("mult", "classical product of two insertions");
    mult->add_option("operands", exprs)->expected(2)->required();
    mult->callback([&] {
        action = [&] {
            auto ctx = cfg.ctx();
            InsClass r = product(parse_insertion(exprs[0], ctx), parse_insertion(exprs[1], ctx));
            emit(cfg, Json{{"product", to_json(r)}, {"text", format_bracket(r)}}, format_bracket(r));
            return ok;
        };
    });
    auto *pair = ring->add_subcommand("pair", "pairing of two insertions");
    pair->add_option("operands", exprs)->expected(2)->required();
    pair->callback([&] {
        action = [&] {
            auto ctx = cfg.ctx();
            Rational r = pairing(parse_insertion(exprs[0], ctx), parse_insertion(exprs[1], ctx));
            emit(cfg, Json{{"pairing", to_string(r)}}, to_string(r));
            return ok;
        };
    });
    auto *rtable = ring->add_subcommand("table", "classical products of all window basis pairs");
    rtable->callback([&] {
        action = [&] {
            auto ctx = cfg.ctx();
            Json rows = Json::array();
            std::ostringstream text;
            for (const auto &a : window_basis(ctx)) {
                for (const auto &b : window_basis(ctx)) {
                    std::string lhs = format_basis(ctx, a), rhs = format_basis(ctx, b);
                    try {
                        InsClass r = product(InsClass::basis(ctx, a), InsClass::basis(ctx, b));
                        rows.push_back({{"lhs", lhs}, {"rhs", rhs}, {"product", to_json(r)}, {"status", "ok"}});
                        text << lhs << " * " << rhs << " = " << format_bracket(r) << "\n";
                    } catch (const window_overflow &) {
                        rows.push_back({{"lhs", lhs}, {"rhs", rhs}, {"product", Json::array()}, {"status", "out_of_window"}});
                        text << lhs << " * " << rhs << " = out of window\n";
                    }
                }
            }
            std::string s = text.str();
            emit(cfg, Json{{"n", ctx.n}, {"W", ctx.window}, {"products", rows}}, s.substr(0, s.size() - 1));
            return ok;
        };
    });
    std::string single;
    auto *degree = ring->add_subcommand("degree", "bidegree of a homogeneous insertion");
    degree->add_option("a", single)->required();
    degree->callback([&] {
        action = [&] {
            Bidegree d = bidegree(parse_insertion(single, cfg.ctx()));
            emit(cfg, Json{{"deg1", d.deg1}, {"deg2", d.deg2}},
                 "(" + std::to_string(d.deg1) + ", " + std::to_string(d.deg2) + ")");
            return ok;
        };
    });

    // graphs
    auto *graphs = app.add_subcommand("graphs", "admissible bipartite graphs and their classes");
    graphs->require_subcommand(1);
    int gdegree = 1, glegs = 0;
    std::string gmu = "1";
    auto add_type_options = [&](CLI::App *sub) {
        sub->add_option("--degree", gdegree, "curve degree")->capture_default_str();
        sub->add_option("--legs", glegs, "number of interior markings")->capture_default_str();
        sub->add_option("--mu", gmu, "comma-separated contact orders")->capture_default_str();
    };
    auto toptype = [&] { return make_toptype(glegs, gdegree, parse_int_list(gmu)); };
    auto *genum = graphs->add_subcommand("enumerate", "all graphs of a topological type");
    add_type_options(genum);
    genum->callback([&] {
        action = [&] {
            auto gs = enumerate(toptype(), cfg.n);
            Json list = Json::array();
            std::ostringstream text;
            for (const auto &g : gs) {
                Json r = graph_record(g, cfg.n);
                text << r["canonical"].get<std::string>() << "  |Aut| = " << r["aut"].get<long long>()
                     << "  C_G = " << r["C_G_text"].get<std::string>() << "\n";
                list.push_back(r);
            }
            text << gs.size() << " graphs";
            emit(cfg, list, text.str());
            return ok;
        };
    });
    auto *gvdim = graphs->add_subcommand("vdim", "virtual dimension of a topological type");
    add_type_options(gvdim);
    gvdim->callback([&] {
        action = [&] {
            int d = virtual_dim(toptype(), cfg.n);
            emit(cfg, Json{{"virtual_dim", d}}, std::to_string(d));
            return ok;
        };
    });
    std::string graph_file;
    auto *gclass = graphs->add_subcommand("class", "graph sum C_G / |Aut| of a topological type, or one graph");
    add_type_options(gclass);
    gclass->add_option("--graph", graph_file, "JSON file holding a single graph")->check(CLI::ExistingFile);
    gclass->callback([&] {
        action = [&] {
            if (!graph_file.empty()) {
                std::ifstream in(graph_file);
                Json j;
                try {
                    j = Json::parse(in);
                } catch (const nlohmann::json::exception &e) {
                    throw parse_error(std::string("malformed graph JSON: ") + e.what(), 0);
                }
                BipartiteGraph g = graph_from_json(j);
                auto violations = validate(g, cfg.n);
                if (!violations.empty()) {
                    throw domain_error("invalid graph: condition " + violations.front().condition + ": " +
                                       violations.front().detail);
                }
                Json r = graph_record(g, cfg.n);
                emit(cfg, r,
                     r["canonical"].get<std::string>() + "  |Aut| = " + std::to_string(r["aut"].get<long long>()) +
                         "  C_G = " + r["C_G_text"].get<std::string>() +
                         "  vdim = " + std::to_string(r["virtual_dim"].get<int>()));
                return ok;
            }
            Json list = Json::array();
            std::ostringstream text;
            for (const auto &g : enumerate(toptype(), cfg.n)) {
                Poly c = C_G(g, cfg.n);
                if (c.is_zero()) {
                    continue;
                }
                Rational inv = 1;
                inv /= static_cast<long>(automorphism_order(g));
                Poly w = c * Poly(inv);
                list.push_back({{"canonical", canonical_form(g)}, {"weight", to_json(w)}});
                text << canonical_form(g) << " : " << format_poly(w) << "\n";
            }
            std::string s = text.str();
            emit(cfg, list, s.empty() ? "0" : s.substr(0, s.size() - 1));
            return ok;
        };
    });

    // quantum
    auto *quantum = app.add_subcommand("quantum", "small relative quantum ring");
    quantum->require_subcommand(1);
    auto *qprod = quantum->add_subcommand("product", "quantum product of two insertions");
    qprod->add_option("operands", exprs)->expected(2)->required();
    qprod->callback([&] {
        action = [&] {
            auto ctx = cfg.ctx();
            auto r = quantum_product_small(parse_insertion(exprs[0], ctx), parse_insertion(exprs[1], ctx), cfg.qmax);
            emit(cfg, Json{{"product", to_json(r)}, {"text", format_qseries(r)}}, format_qseries(r));
            return ok;
        };
    });
    auto *qtable = quantum->add_subcommand("table", "structure constants from the constraint solver");
    qtable->callback([&] {
        action = [&] {
            auto t = solve_structure_constants(cfg.n, cfg.window, cfg.qmax);
            std::ostringstream text;
            for (const auto &e : t.entries()) {
                text << format_basis(t.context(), e.lhs) << " * " << format_basis(t.context(), e.rhs) << " [q^" << e.q
                     << "] = ";
                if (e.status == EntryStatus::determined) {
                    text << (e.value.is_zero() ? "0" : format_bracket(e.value)) << "\n";
                } else {
                    text << to_string(e.status) << "\n";
                }
            }
            std::string s = text.str();
            emit(cfg, to_json(t), s.substr(0, s.size() - 1));
            return ok;
        };
    });
    auto *qverify = quantum->add_subcommand("verify", "compare the solver with the monoid-algebra oracle");
    qverify->callback([&] {
        action = [&] {
            auto r = verify_against_oracle(solve_structure_constants(cfg.n, cfg.window, cfg.qmax));
            std::string counts = "(entries: " + std::to_string(r.entries) + ", determined: " +
                                 std::to_string(r.determined) + ", mismatches: " + std::to_string(r.mismatches) + ")";
            std::string text = (r.mismatches == 0 ? "OK " : "MISMATCH ") + counts;
            for (const auto &d : r.details) {
                text += "\n" + d;
            }
            emit(cfg, to_json(r), text);
            return r.mismatches == 0 ? ok : mismatch;
        };
    });
    int beta = 0;
    std::string psi_list;
    auto add_query_options = [&](CLI::App *sub, std::size_t min_count) {
        sub->add_option("--beta", beta, "curve degree")->capture_default_str();
        sub->add_option("--psi", psi_list, "comma-separated psi exponents, one per insertion");
        sub->add_option("insertions", exprs)->required()->expected(static_cast<int>(min_count), 64);
    };
    auto query = [&] {
        auto ctx = cfg.ctx();
        return parse_insertions(exprs, psi_list.empty() ? std::vector<int>{} : parse_int_list(psi_list), ctx);
    };
    auto report = [&](const std::optional<Rational> &r, const std::string &what) {
        if (!r) {
            emit(cfg, Json{{"status", "unsupported"}}, what + ": unsupported by the small provider");
            return ok;
        }
        emit(cfg, Json{{"status", is_zero(*r) ? "ok" : "mismatch"}, {"residual", to_string(*r)}},
             what + " residual: " + to_string(*r));
        return is_zero(*r) ? ok : mismatch;
    };
    auto *qwdvv = quantum->add_subcommand("wdvv", "WDVV identity on the small provider");
    add_query_options(qwdvv, 4);
    qwdvv->callback([&] {
        action = [&] {
            SmallProvider p(solve_structure_constants(cfg.n, cfg.window, cfg.qmax));
            return report(check_wdvv(p, beta, query()), "WDVV");
        };
    });
    auto *qtrr = quantum->add_subcommand("trr", "topological recursion relation on the small provider");
    add_query_options(qtrr, 3);
    qtrr->callback([&] {
        action = [&] {
            SmallProvider p(solve_structure_constants(cfg.n, cfg.window, cfg.qmax));
            return report(check_trr(p, beta, query()), "TRR");
        };
    });
    auto *qthree = quantum->add_subcommand("threepoint", "invariant I_beta of the given insertions");
    add_query_options(qthree, 1);
    qthree->callback([&] {
        action = [&] {
            SmallProvider p(solve_structure_constants(cfg.n, cfg.window, cfg.qmax));
            auto r = p.evaluate(beta, query());
            if (!r) {
                emit(cfg, Json{{"status", "unsupported"}}, "unsupported");
            } else {
                emit(cfg, Json{{"status", "ok"}, {"value", to_string(*r)}}, to_string(*r));
            }
            return ok;
        };
    });

    // virasoro
    auto *vir = app.add_subcommand("virasoro", "Givental operators and Virasoro constraints");
    vir->require_subcommand(1);
    auto zwin = [&] { return make_zwindow(cfg.ctx(), cfg.zmin, cfg.zmax); };
    std::vector<int> mk;
    auto *vbracket = vir->add_subcommand("bracket", "[l_m, l_k] against (k - m) l_{m+k}");
    vbracket->add_option("indices", mk)->expected(2)->required();
    vbracket->callback([&] {
        action = [&] {
            auto r = check_bracket(mk[0], mk[1], zwin());
            std::string rhs = r.m == r.k ? "0" : scaled(r.factor, l_name(r.m + r.k));
            std::string text = rhs + " : " + (r.exact ? "exact on interior window" : "MISMATCH on interior window");
            Json j = to_json(r);
            j["rhs"] = rhs;
            emit(cfg, j, text);
            return r.exact ? ok : mismatch;
        };
    });
    int sym_m = 0;
    auto *vsym = vir->add_subcommand("symplectic", "max |Omega(l_m f, g) + Omega(f, l_m g)|");
    vsym->add_option("--m", sym_m, "operator index")->capture_default_str();
    vsym->callback([&] {
        action = [&] {
            Rational r = check_symplectic(l_op(sym_m, zwin()));
            emit(cfg, Json{{"m", sym_m}, {"max_residual", to_string(r)}}, "max residual: " + to_string(r));
            return is_zero(r) ? ok : mismatch;
        };
    });
    std::string which = "L-1";
    Truncation tr;
    auto *vg0 = vir->add_subcommand("genus0", "genus-zero Virasoro constraint on the small potential");
    vg0->add_option("--op", which, "L-1 or L0")->check(CLI::IsMember({"L-1", "L0"}))->capture_default_str();
    vg0->add_option("--lmax", tr.lmax, "highest descendant level")->capture_default_str();
    vg0->add_option("--max-vars", tr.max_vars, "largest monomial degree")->capture_default_str();
    vg0->callback([&] {
        action = [&] {
            tr.qmax = cfg.qmax;
            SmallProvider p(solve_structure_constants(cfg.n, cfg.window, cfg.qmax));
            auto f = assemble_potential(p, tr);
            auto r = genus0_residual(build_L(which == "L0" ? 0 : -1, cfg.ctx(), tr.lmax), f);
            std::string text = r.nonzero.empty() ? "all determined coefficients vanish"
                                                 : std::to_string(r.nonzero.size()) + " nonzero coefficients";
            text += "\n(tested: " + std::to_string(r.tested) + ", untestable: " + std::to_string(r.untestable) + ")";
            Json j = to_json(r);
            j["operator"] = to_json(build_L(which == "L0" ? 0 : -1, cfg.ctx(), tr.lmax));
            emit(cfg, j, text);
            return r.nonzero.empty() ? ok : mismatch;
        };
    });
    std::string cutoffs = "2..8";
    auto *vanom = vir->add_subcommand("anomaly", "cocycle C(h_{l_-1}, h_{l_1}) under a contact-order cutoff");
    vanom->add_option("--cutoffs", cutoffs, "range a..b")->capture_default_str();
    vanom->callback([&] {
        action = [&] {
            auto [lo, hi] = parse_range(cutoffs);
            if (lo < 1 || hi < lo) {
                throw parse_error("cutoff range must satisfy 1 <= a <= b", 0);
            }
            Json rows = Json::array();
            std::ostringstream text;
            text << "N\tanomaly\tdifference";
            Rational prev;
            for (int N = lo; N <= hi; ++N) {
                Rational a = anomaly(cfg.n, N);
                Json row = {{"N", N}, {"anomaly", to_string(a)}};
                text << "\n" << N << "\t" << to_string(a) << "\t";
                if (N > lo) {
                    row["difference"] = to_string(a - prev);
                    text << to_string(a - prev);
                } else {
                    row["difference"] = nullptr;
                    text << "-";
                }
                rows.push_back(row);
                prev = a;
            }
            emit(cfg, Json{{"n", cfg.n}, {"rows", rows}}, text.str());
            return ok;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return bad_input;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return bad_input;
    }
    if (cfg.zmin >= 0 || cfg.zmax <= 0) {
        std::cerr << "error: z-window must satisfy zmin < 0 < zmax\n";
        return bad_input;
    }
    try {
        return action();
    } catch (const parse_error &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return bad_input;
    } catch (const window_overflow &e) {
        std::cerr << "window overflow: " << e.what() << "\n";
        return overflow;
    } catch (const margin_error &e) {
        std::cerr << "insufficient margin: " << e.what() << "\n";
        return margin;
    } catch (const domain_error &e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return bad_input;
    } catch (const ring_mismatch &e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return bad_input;
    } catch (const std::logic_error &e) {
        std::cerr << "inconsistent constraints: " << e.what() << "\n";
        return mismatch;
    }
}

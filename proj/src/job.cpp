#include "hornrank/job.hpp"

#include <chrono>
#include <sstream>

#include "hornrank/gamma.hpp"
#include "hornrank/groebner.hpp"
#include "hornrank/puiseux.hpp"
#include "hornrank/shift_algebra.hpp"
#include "hornrank/standard_pairs.hpp"

namespace hornrank {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::string puiseux_y_str(const std::map<RatVec2, Rat>& terms) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        Rat cc = c;
        if (!first) {
            os << (cc < 0 ? " - " : " + ");
            if (cc < 0) cc = -cc;
        } else if (cc < 0) {
            os << "-";
            cc = -cc;
        }
        bool has_var = e.a != 0 || e.b != 0;
        if (cc != 1 || !has_var) os << rat_str(cc);
        bool star = cc != 1 || !has_var;
        if (e.a != 0) {
            os << (star ? "*" : "") << "y1^" << rat_str(e.a);
            star = true;
        }
        if (e.b != 0) os << (star ? "*" : "") << "y2^" << rat_str(e.b);
        first = false;
    }
    return os.str();
}

std::string puiseux_x_str(const std::map<XPoint, Rat>& terms) {
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat cc = c;
        if (!first) {
            os << (cc < 0 ? " - " : " + ");
            if (cc < 0) cc = -cc;
        } else if (cc < 0) {
            os << "-";
            cc = -cc;
        }
        bool has_var = e.first != 0 || e.second != 0;
        if (cc != 1 || !has_var) os << rat_str(cc);
        bool star = cc != 1 || !has_var;
        if (e.first != 0) {
            os << (star ? "*" : "") << "x1";
            if (e.first != 1) os << "^" << e.first;
            star = true;
        }
        if (e.second != 0) {
            os << (star ? "*" : "") << "x2";
            if (e.second != 1) os << "^" << e.second;
        }
        first = false;
    }
    return os.str();
}

Json matrix_json(const IntMatrix& M) {
    Json rows = Json::array();
    for (int i = 0; i < M.rows(); ++i) {
        Json r = Json::array();
        for (int j = 0; j < M.cols(); ++j) r.push_back(M.at(i, j).str());
        rows.push_back(std::move(r));
    }
    return rows;
}

Json ratvec_json(const RatVec& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(rat_str(q));
    return a;
}

Json exponent_json(const Exponent& e) {
    Json a = Json::array();
    for (int x : e) a.push_back(x);
    return a;
}

Json pair_json(const StandardPair& p) {
    Json j;
    j["eta"] = exponent_json(p.eta);
    Json s = Json::array();
    for (int v : p.sigma) s.push_back(v + 1);  // 1-based variable indices in reports
    j["sigma"] = std::move(s);
    return j;
}

struct Workspace {
    HornConfig cfg;
    Json genericity_log = Json::array();
};

Json rank_json(const HornConfig& cfg) {
    RankReport r = generic_rank(cfg);
    Json j;
    j["d1"] = cfg.d1().str();
    j["d2"] = cfg.d2().str();
    j["d1d2"] = r.d1d2.str();
    j["sum_dependent_nu"] = r.sum_dep_nu.str();
    j["sum_independent_nu"] = r.sum_indep_nu.str();
    j["g"] = r.g.str();
    j["vol_A"] = r.vol_A.str();
    j["rank"] = r.rank.str();
    j["identity_holds"] = r.identity_holds;
    j["puiseux_rank"] = puiseux_rank(cfg).str();
    j["artinian"] = artinian_criterion(cfg.B());
    IntVec alpha = alpha_vector(cfg.B());
    Json aj = Json::array();
    for (const auto& x : alpha) aj.push_back(x.str());
    j["alpha"] = std::move(aj);
    return j;
}

Json index_table_json(const HornConfig& cfg) {
    Json rows = Json::array();
    for (const auto& e : index_table(cfg.B()).entries) {
        if (!e.opposite_open) continue;
        Json r;
        r["i"] = e.i + 1;
        r["j"] = e.j + 1;
        r["dependent"] = e.dependent;
        r["nu"] = e.nu.str();
        rows.push_back(std::move(r));
    }
    return rows;
}

Json puiseux_json(const HornConfig& cfg) {
    Json j;
    auto polys = all_puiseux(cfg);
    j["count"] = polys.size();
    j["puiseux_rank"] = puiseux_rank(cfg).str();
    Json list = Json::array();
    for (const auto& p : polys) {
        Json e;
        e["pair"] = Json::array({p.pair_i + 1, p.pair_j + 1});
        e["base_point"] = Json::array({p.base_point.first, p.base_point.second});
        e["x_pair_form"] = puiseux_x_str(p.x_terms);
        e["y_form"] = puiseux_y_str(p.terms);
        Json terms = Json::array();
        for (const auto& [ex, c] : p.terms) {
            Json t;
            t["exponent"] = Json::array({rat_str(ex.a), rat_str(ex.b)});
            t["coefficient"] = rat_str(c);
            terms.push_back(std::move(t));
        }
        e["terms"] = std::move(terms);
        list.push_back(std::move(e));
    }
    j["solutions"] = std::move(list);
    return j;
}

Json series_json(const HornConfig& cfg, long window) {
    FullBasis fb = full_basis(cfg, window);
    Json j;
    j["window"] = window;
    j["weight"] = fb.weight;
    j["weight_resamples"] = fb.weight_resamples;
    j["series_count"] = fb.series.size();
    j["expected_series"] = fb.expected_series.str();
    j["puiseux_count"] = fb.puiseux.size();
    j["expected_puiseux"] = fb.expected_puiseux.str();
    Json list = Json::array();
    for (size_t k = 0; k < fb.series.size(); ++k) {
        Json e;
        e["root_v"] = ratvec_json(fb.roots[k].v);
        e["source_pair"] = pair_json(fb.roots[k].source);
        e["alpha"] = Json::array({rat_str(fb.horn[k].alpha.a), rat_str(fb.horn[k].alpha.b)});
        Json terms = Json::array();
        for (const auto& [z, c] : fb.horn[k].coeffs) {
            Json t;
            t["z"] = Json::array({z.first, z.second});
            t["coefficient"] = rat_str(c);
            terms.push_back(std::move(t));
        }
        e["terms"] = std::move(terms);
        e["frontier_size"] = fb.series[k].frontier.size();
        list.push_back(std::move(e));
    }
    j["series"] = std::move(list);
    return j;
}

Json verify_json(const HornConfig& cfg, long window) {
    FullBasis fb = full_basis(cfg, window);
    IntMatrix A = cfg.has_A() ? cfg.A() : IntMatrix(0, 2);
    Json j;
    j["window"] = window;
    Json list = Json::array();
    long euler = 0, lattice = 0, frontier = 0;
    for (const auto& s : fb.series) {
        VerifyReport rep = verify_annihilation(s, A, cfg.c());
        euler += rep.euler_checked;
        lattice += rep.lattice_checked;
        frontier += rep.frontier_skipped;
        Json e;
        e["root_v"] = ratvec_json(s.v);
        e["euler_checked"] = rep.euler_checked;
        e["interior_checked"] = rep.lattice_checked;
        e["frontier_skipped"] = rep.frontier_skipped;
        e["violations"] = rep.violations;
        list.push_back(std::move(e));
    }
    j["series_checks"] = std::move(list);
    j["euler_checked_total"] = euler;
    j["interior_checked_total"] = lattice;
    j["frontier_skipped_total"] = frontier;
    Json pj = Json::array();
    for (const auto& p : fb.puiseux) {
        Json e;
        e["y_form"] = puiseux_y_str(p.terms);
        e["annihilated"] = annihilated_by_horn(cfg, p.terms);
        pj.push_back(std::move(e));
    }
    j["puiseux_checks"] = std::move(pj);
    j["total_solutions"] = fb.series.size() + fb.puiseux.size();
    if (cfg.has_A()) j["rank"] = generic_rank(cfg).rank.str();
    return j;
}

Json decompose_json(const HornConfig& cfg) {
    int n = cfg.n();
    Json j;
    auto i_gens = lattice_basis_generators(cfg.B());
    auto ib_gens = saturate_lattice_ideal(cfg.B());
    std::vector<std::string> vars;
    for (int v = 1; v <= n; ++v) vars.push_back("d" + std::to_string(v));
    Json ibj = Json::array();
    for (const auto& g : ib_gens) ibj.push_back(g.str(vars));
    j["lattice_ideal_generators"] = std::move(ibj);

    WeightedInitial wI = generic_initial_ideal(i_gens, n, cfg.seed() + 101);
    WeightedInitial wIB = generic_initial_ideal(ib_gens, n, cfg.seed() + 202);
    j["weight_I"] = wI.weight;
    j["weight_IB"] = wIB.weight;
    Json inI = Json::array();
    for (const auto& e : wI.ideal.generators()) inI.push_back(exponent_json(e));
    Json inIB = Json::array();
    for (const auto& e : wIB.ideal.generators()) inIB.push_back(exponent_json(e));
    j["in_w_I"] = std::move(inI);
    j["in_w_IB"] = std::move(inIB);

    auto topI = top_pairs(wI.ideal, 2);
    auto T = admissible_T(wI.ideal, cfg.B());
    auto topIB = top_pairs(wIB.ideal, 2);
    j["top_pairs_I"] = topI.size();
    j["T_count"] = T.size();
    j["top_pairs_IB"] = topIB.size();
    Json tj = Json::array();
    for (const auto& p : T) tj.push_back(pair_json(p));
    j["T"] = std::move(tj);
    j["embedded_pairs_I"] = standard_pairs(wI.ideal).size() - topI.size();

    if (cfg.has_A()) {
        auto roots = exponent_roots(topIB, cfg.A(), cfg.c());
        Json rj = Json::array();
        for (const auto& r : roots) rj.push_back(ratvec_json(r.v));
        j["exponent_roots_IB"] = std::move(rj);
        j["membership_alpha"] = membership_alpha(cfg.B());
        RankReport rr = generic_rank(cfg);
        j["rank_closed_form"] = rr.rank.str();
        j["oracle_T_equals_rank"] = Int(T.size()) == rr.rank;
        j["deg_in_w_I_equals_d1d2"] = Int(topI.size()) == rr.d1d2;
        j["deg_in_w_IB_equals_g_vol"] = Int(topIB.size()) == rr.g * rr.vol_A;
    }
    return j;
}

Json psi_json(const HornConfig& cfg) {
    HornOperators ops = horn_operators(cfg);
    Json j;
    j["H1"] = ops.H1.str();
    j["H2"] = ops.H2.str();
    j["compatibility"] = compatibility_check(ops.P1, ops.P2, ops.Q1, ops.Q2);
    ShiftElement psi = psi_operator(ops.P1, ops.P2, ops.Q1, ops.Q2);
    j["psi"] = psi.str();
    try {
        SpecialForm sf = special_form_certificate(ops.P1, ops.P2, ops.Q1, ops.Q2);
        j["special_form"] = Json{{"f", unipoly_str(sf.f)},
                                 {"g", unipoly_str(sf.g)},
                                 {"resultant", rat_str(sf.certificate)},
                                 {"holonomic_certificate", sf.certificate != 0}};
    } catch (const UnsupportedShape& e) {
        j["special_form"] = std::string("UnsupportedShape: ") + e.what();
    }
    return j;
}

}  // namespace

JobSpec parse(const std::string& text) {
    JobSpec job;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    int expect_rows = 0, got_rows = 0;
    bool saw_B = false;
    std::vector<IntVec> rows;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (expect_rows > got_rows) {
            if (int(toks.size()) != 2) throw ParseError(lineno, "expected 2 integers in matrix row");
            try {
                rows.push_back({Int(toks[0]), Int(toks[1])});
            } catch (const std::exception&) {
                throw ParseError(lineno, "bad integer in matrix row");
            }
            ++got_rows;
            continue;
        }
        std::string key = toks[0];
        if (key == "B:") {
            if (saw_B) throw ParseError(lineno, "duplicate B");
            if (toks.size() != 3) throw ParseError(lineno, "expected 'B: n 2'");
            int n = 0, m = 0;
            try {
                n = std::stoi(toks[1]);
                m = std::stoi(toks[2]);
            } catch (const std::exception&) {
                throw ParseError(lineno, "bad dimensions");
            }
            if (m != 2) throw ParseError(lineno, "B must have 2 columns");
            if (n < 2) throw ParseError(lineno, "B must have at least 2 rows");
            expect_rows = n;
            saw_B = true;
        } else if (key == "c:") {
            if (toks.size() == 2 && toks[1] == "generic") {
                job.generic_c = true;
            } else {
                job.generic_c = false;
                job.explicit_c.clear();
                for (size_t k = 1; k < toks.size(); ++k) {
                    try {
                        job.explicit_c.push_back(parse_rat(toks[k]));
                    } catch (const std::exception&) {
                        throw ParseError(lineno, "bad rational parameter");
                    }
                }
            }
        } else if (key == "convention:") {
            if (toks.size() != 2 || (toks[1] != "falling" && toks[1] != "rising"))
                throw ParseError(lineno, "convention must be falling or rising");
            job.convention = toks[1] == "rising" ? Convention::Rising : Convention::Falling;
        } else if (key == "seed:") {
            if (toks.size() != 2) throw ParseError(lineno, "expected 'seed: N'");
            try {
                job.seed = std::stoull(toks[1]);
            } catch (const std::exception&) {
                throw ParseError(lineno, "bad seed");
            }
        } else if (key == "window:") {
            if (toks.size() != 2) throw ParseError(lineno, "expected 'window: N'");
            try {
                job.window = std::stol(toks[1]);
            } catch (const std::exception&) {
                throw ParseError(lineno, "bad window");
            }
            if (job.window < 0) throw ParseError(lineno, "window must be nonnegative");
        } else {
            throw ParseError(lineno, "unknown directive: " + key);
        }
    }
    if (!saw_B) throw ParseError(lineno, "missing B");
    if (got_rows != expect_rows) throw ParseError(lineno, "matrix row count mismatch");
    job.B = IntMatrix(expect_rows, 2);
    for (int i = 0; i < expect_rows; ++i)
        for (int j = 0; j < 2; ++j) job.B.at(i, j) = rows[i][j];

    // validate the HornConfig invariants now so errors carry the violated rule
    if (job.B.rank() != 2) throw InvariantError("rank: B must have rank 2");
    if (job.B.rows() > 2) {
        for (int j = 0; j < 2; ++j) {
            Int s = 0;
            for (int i = 0; i < job.B.rows(); ++i) s += job.B.at(i, j);
            if (s != 0) throw InvariantError("column sums: rows of B must add up to zero");
        }
    }
    if (!job.generic_c && int(job.explicit_c.size()) != job.B.rows())
        throw InvariantError("parameter length: c must have one entry per row of B");
    return job;
}

Report run(const JobSpec& job) {
    auto start = std::chrono::steady_clock::now();
    Report rep;
    Json& out = rep.json;
    out["schema"] = 1;
    out["command"] = job.command;
    Json input;
    input["B"] = matrix_json(job.B);
    input["c"] = job.generic_c ? Json("generic") : ratvec_json(job.explicit_c);
    input["convention"] = job.convention == Convention::Rising ? "rising" : "falling";
    input["seed"] = job.seed;
    input["window"] = job.window;
    out["input"] = std::move(input);
    Json genericity_log = Json::array();

    ParameterSpec params;
    params.generic = job.generic_c;
    params.seed = job.seed;
    params.explicit_c = job.explicit_c;

    try {
        HornConfig cfg(job.B, params, job.convention);
        int attempts = 0;
        Json results;
        while (true) {
            try {
                const std::string& cmd = job.command;
                if (cmd == "rank") {
                    results = rank_json(cfg);
                    results["index_table"] = index_table_json(cfg);
                } else if (cmd == "identity") {
                    results = rank_json(cfg);
                    results["index_table"] = index_table_json(cfg);
                    Json d = decompose_json(cfg);
                    results["oracle_T_equals_rank"] = d.value("oracle_T_equals_rank", Json());
                    results["deg_in_w_I_equals_d1d2"] = d.value("deg_in_w_I_equals_d1d2", Json());
                    results["deg_in_w_IB_equals_g_vol"] = d.value("deg_in_w_IB_equals_g_vol", Json());
                } else if (cmd == "puiseux") {
                    results = puiseux_json(cfg);
                } else if (cmd == "series") {
                    results = series_json(cfg, job.window);
                } else if (cmd == "decompose") {
                    results = decompose_json(cfg);
                } else if (cmd == "psi") {
                    results = psi_json(cfg);
                } else if (cmd == "verify") {
                    results = verify_json(cfg, job.window);
                } else if (cmd == "all") {
                    if (cfg.has_A()) {
                        results["rank"] = rank_json(cfg);
                        results["rank"]["index_table"] = index_table_json(cfg);
                        results["decompose"] = decompose_json(cfg);
                    }
                    results["puiseux"] = puiseux_json(cfg);
                    results["psi"] = psi_json(cfg);
                    results["verify"] = verify_json(cfg, job.window);
                    if (cfg.has_A()) {
                        RankReport rr = generic_rank(cfg);
                        Int total = Int(results["verify"]["total_solutions"].get<std::size_t>());
                        results["cross_checks"] = Json{
                            {"basis_size_equals_rank", total == rr.rank},
                            {"puiseux_count_equals_puiseux_rank",
                             Int(results["puiseux"]["count"].get<std::size_t>()) == puiseux_rank(cfg)}};
                    }
                } else {
                    throw InvariantError("unknown command: " + cmd);
                }
                break;
            } catch (const GenericityFailure& gf) {
                genericity_log.push_back(std::string("resample: ") + gf.what());
                if (!cfg.generic_parameters() || ++attempts >= job.genericity_cap) {
                    out["genericity_log"] = std::move(genericity_log);
                    out["error"] = std::string("GenericityFailure: ") + gf.what();
                    rep.exit_code = kExitGenericity;
                    rep.text = out.dump(2);
                    return rep;
                }
                cfg.resample_parameters();
            }
        }
        out["results"] = std::move(results);
        out["genericity_log"] = std::move(genericity_log);
        rep.exit_code = kExitOk;
    } catch (const ResourceExhausted& re) {
        out["error"] = std::string("ResourceExhausted: ") + re.what();
        rep.exit_code = kExitResource;
    } catch (const ParseError& pe) {
        out["error"] = std::string("ParseError: ") + pe.what();
        rep.exit_code = kExitError;
    } catch (const InvariantError& ie) {
        out["error"] = std::string("InvariantError: ") + ie.what();
        rep.exit_code = kExitError;
    } catch (const std::exception& e) {
        out["error"] = e.what();
        rep.exit_code = kExitError;
    }

    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::ostringstream text;
    text << out.dump(2) << "\n# elapsed: " << ms.count() << " ms\n";
    rep.text = text.str();
    return rep;
}

}  // namespace hornrank

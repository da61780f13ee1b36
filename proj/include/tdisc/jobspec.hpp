#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "tdisc/classical.hpp"
#include "tdisc/parser.hpp"
#include "tdisc/report.hpp"
#include "tdisc/weighted.hpp"

namespace tdisc {

// Line-oriented job format. Sections start with a keyword; '#' starts a
// comment; generator lists are comma-separated (commas never occur inside
// the polynomial grammar). One job per file.
struct JobSpec {
    std::vector<std::string> ring_vars;
    std::vector<long> weights;
    std::vector<std::string> z_gens, x_gens, f_polys;
    std::vector<std::vector<std::string>> components;
    std::vector<std::string> fiber_vars;              // classical families
    std::vector<std::string> family_gens;
    std::vector<std::string> ring2_vars;              // pullback target
    std::vector<std::string> z2_gens, x2_gens;
    std::vector<std::pair<std::string, std::string>> map_images;  // target var -> source expression
    std::vector<long> eq_weights;
    std::vector<std::pair<int, std::string>> deform;  // (equation index, monomial expression)
    std::string command;
    std::map<std::string, std::string> options;
    std::map<std::string, std::string> expect;
    std::string cite;
    std::string name;
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

inline std::vector<std::string> words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

}  // namespace detail

inline JobSpec parse_job_text(const std::string& text) {
    JobSpec job;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        auto sp = line.find_first_of(" \t");
        std::string key = line.substr(0, sp);
        std::string rest = sp == std::string::npos ? "" : detail::trim(line.substr(sp));
        std::transform(key.begin(), key.end(), key.begin(), ::toupper);
        if (key == "RING") {
            job.ring_vars = detail::words(rest);
        } else if (key == "WEIGHTS") {
            for (const auto& w : detail::words(rest)) job.weights.push_back(std::stol(w));
        } else if (key == "EQWEIGHTS") {
            for (const auto& w : detail::words(rest)) job.eq_weights.push_back(std::stol(w));
        } else if (key == "Z") {
            for (auto& g : detail::split(rest, ',')) job.z_gens.push_back(g);
        } else if (key == "X") {
            for (auto& g : detail::split(rest, ',')) job.x_gens.push_back(g);
        } else if (key == "F") {
            for (auto& g : detail::split(rest, ',')) job.f_polys.push_back(g);
        } else if (key == "COMPONENTS") {
            for (auto& c : detail::split(rest, '|')) job.components.push_back(detail::split(c, ','));
        } else if (key == "FIBER") {
            job.fiber_vars = detail::words(rest);
        } else if (key == "FAMILY") {
            for (auto& g : detail::split(rest, ',')) job.family_gens.push_back(g);
        } else if (key == "RING2") {
            job.ring2_vars = detail::words(rest);
        } else if (key == "Z2") {
            for (auto& g : detail::split(rest, ',')) job.z2_gens.push_back(g);
        } else if (key == "X2") {
            for (auto& g : detail::split(rest, ',')) job.x2_gens.push_back(g);
        } else if (key == "MAP") {
            auto arrow = rest.find("->");
            if (arrow == std::string::npos) throw parse_error("MAP needs 'var -> expr'", lineno);
            job.map_images.push_back(
                {detail::trim(rest.substr(0, arrow)), detail::trim(rest.substr(arrow + 2))});
        } else if (key == "DEFORM") {
            auto colon = rest.find(':');
            if (colon == std::string::npos) throw parse_error("DEFORM needs 'j: monomial'", lineno);
            job.deform.push_back({std::stoi(detail::trim(rest.substr(0, colon))) - 1,
                                  detail::trim(rest.substr(colon + 1))});
        } else if (key == "COMMAND") {
            job.command = detail::trim(rest);
        } else if (key == "OPTIONS") {
            for (const auto& kv : detail::words(rest)) {
                auto eq = kv.find('=');
                if (eq == std::string::npos)
                    job.options[kv] = "true";
                else
                    job.options[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
        } else if (key == "EXPECT") {
            auto eq = rest.find('=');
            if (eq == std::string::npos) throw parse_error("EXPECT needs 'key = value'", lineno);
            job.expect[detail::trim(rest.substr(0, eq))] = detail::trim(rest.substr(eq + 1));
        } else if (key == "CITE") {
            job.cite = rest;
        } else {
            throw parse_error("unknown section '" + key + "'", lineno);
        }
    }
    if (job.command.empty()) throw parse_error("missing COMMAND", lineno);
    return job;
}

inline JobSpec parse_job_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open job file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    JobSpec job = parse_job_text(ss.str());
    job.name = std::filesystem::path(path).stem().string();
    return job;
}

// ---- running a job -------------------------------------------------------------

struct RunResult {
    int exit_code = 0;  // 0 ok, 2 hypothesis, 3 budget, 4 parse
    std::vector<std::string> lines;                // human-readable report
    std::map<std::string, std::string> kv;         // machine-readable results
    std::vector<Hypothesis> hypotheses;

    void put(const std::string& k, const std::string& v) { kv[k] = v; }
    void say(const std::string& s) { lines.push_back(s); }
};

namespace detail {

inline Ring job_ring(const JobSpec& job) {
    if (job.ring_vars.empty()) throw parse_error("missing RING section", 0);
    return make_ring(job.ring_vars, job.weights);
}

inline std::vector<Polynomial> parse_list(const std::vector<std::string>& texts, const Ring& ring) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(parse_polynomial(t, ring));
    return out;
}

inline PairSetup job_setup(const JobSpec& job) {
    Ring ring = job_ring(job);
    if (job.z_gens.empty()) throw parse_error("missing Z section", 0);
    if (job.x_gens.empty()) throw parse_error("missing X section", 0);
    PairSetup setup{ring, Ideal(ring, parse_list(job.z_gens, ring)),
                    Ideal(ring, parse_list(job.x_gens, ring)), {}};
    for (const auto& comp : job.components)
        setup.components.push_back(Ideal(ring, parse_list(comp, ring)));
    return setup;
}

inline MonomialOrder job_order(const JobSpec& job) {
    auto it = job.options.find("order");
    if (it == job.options.end()) return MonomialOrder::grevlex();
    if (it->second == "lex") return MonomialOrder::lex();
    if (it->second == "grevlex") return MonomialOrder::grevlex();
    if (it->second == "wgrevlex") return MonomialOrder::wgrevlex();
    throw parse_error("unknown order '" + it->second + "'", 0);
}

inline Budget job_budget(const JobSpec& job) {
    Budget b;
    auto it = job.options.find("budget");
    if (it != job.options.end()) b.max_pair_reductions = std::stol(it->second);
    return b;
}

inline std::vector<Rational> job_point(const JobSpec& job, std::size_t arity) {
    auto it = job.options.find("point");
    if (it == job.options.end()) return std::vector<Rational>(arity, Rational(0));
    std::vector<Rational> pt;
    for (const auto& c : split(it->second, ',')) pt.push_back(rat_parse(c));
    if (pt.size() != arity) throw parse_error("point arity mismatch", 0);
    return pt;
}

inline ReportOptions job_report_options(const JobSpec& job) {
    ReportOptions opt;
    opt.budget = job_budget(job);
    auto it = job.options.find("trunc");
    if (it != job.options.end()) opt.trunc = std::stol(it->second);
    if (job.options.count("noequation")) opt.want_equation = false;
    if (job.options.count("point")) opt.points = {job_point(job, job.ring_vars.size())};
    return opt;
}

inline std::string poly_list_str(const std::vector<Polynomial>& ps) {
    std::string s;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) s += " ; ";
        s += ps[i].str();
    }
    return s;
}

inline std::string point_str(const std::vector<Rational>& pt) {
    std::string s;
    for (std::size_t i = 0; i < pt.size(); ++i) {
        if (i) s += ",";
        s += rat_str(pt[i]);
    }
    return s;
}

inline void render_report(const DiscriminantReport& rep, RunResult& out) {
    out.hypotheses = rep.log;
    if (rep.empty_db) {
        out.say("discriminant: empty");
        out.put("empty", "true");
        out.put("total", "0");
        return;
    }
    out.put("empty", "false");
    std::vector<Polynomial> supp = rep.support.reduced;
    out.say("support (mod I_Z): " + poly_list_str(supp));
    out.put("support", poly_list_str(supp));
    {
        std::string ms;
        for (std::size_t i = 0; i < rep.multseq.orders.size(); ++i)
            ms += (i ? "," : "") + std::to_string(rep.multseq.orders[i]);
        out.put("multseq", ms);
        out.put("generic_multiplicity", std::to_string(rep.multseq.generic_multiplicity));
    }
    if (rep.total_degree >= 0) out.put("total", std::to_string(rep.total_degree));
    std::string mults;
    for (const auto& p : rep.points) {
        std::ostringstream ss;
        if (p.clustered) {
            ss << "cluster " << p.cluster_factor.str() << ": degree " << p.multiplicity << " ["
               << p.method << "]";
        } else {
            ss << "point (" << point_str(p.point) << "): multiplicity " << p.multiplicity << " ["
               << p.method << "]";
        }
        out.say(ss.str());
        if (!mults.empty()) mults += ",";
        mults += std::to_string(p.multiplicity);
    }
    out.put("mults", mults);
    if (!rep.points.empty() && !rep.points[0].clustered)
        out.put("mult", std::to_string(rep.points[0].multiplicity));
    if (rep.total_degree >= 0) out.say("total degree over Z: " + std::to_string(rep.total_degree));
    if (rep.equation) {
        out.say("local equation (up to unit): " + rep.equation->str());
        out.say("equation order: " + std::to_string(*rep.equation_order));
        out.put("equation", rep.equation->str());
        out.put("equation_order", std::to_string(*rep.equation_order));
    }
}

inline WeightData job_weight_data(const JobSpec& job) {
    WeightData wd;
    wd.var_weights = job.weights.empty() ? std::vector<long>(job.ring_vars.size(), 1) : job.weights;
    wd.eq_weights = job.eq_weights;
    if (wd.eq_weights.empty()) {
        auto it = job.options.find("d");
        if (it != job.options.end()) wd.eq_weights.push_back(std::stol(it->second));
    }
    return wd;
}

inline FamilySetup job_family(const JobSpec& job) {
    Ring ring = job_ring(job);
    if (job.fiber_vars.empty()) throw parse_error("missing FIBER section", 0);
    std::vector<int> fiber_idx, param_idx;
    for (const auto& v : job.fiber_vars) {
        int i = ring->index_of(v);
        if (i < 0) throw parse_error("unknown fiber variable '" + v + "'", 0);
        fiber_idx.push_back(i);
    }
    for (std::size_t i = 0; i < ring->size(); ++i)
        if (std::find(fiber_idx.begin(), fiber_idx.end(), static_cast<int>(i)) == fiber_idx.end())
            param_idx.push_back(static_cast<int>(i));
    return make_family(ring, fiber_idx, param_idx, parse_list(job.family_gens, ring));
}

}  // namespace detail

inline RunResult run_job(const JobSpec& job);

// Runs all .job files in a directory; failures are data, not errors.
struct CorpusRow {
    std::string name;
    bool pass = false;
    std::string detail;
    std::string cite;
};

inline bool expect_matches(const std::string& key, const std::string& expected, const RunResult& r,
                           Ring ring, int z_count, std::string& why) {
    // leading forms and conormal generators live in the extended ring O_Z[y]
    if ((key == "leadform" || key == "gr") && z_count > 0)
        ring = extend_ring(ring, fresh_names(ring, "y", z_count));
    auto it = r.kv.find(key);
    if (it == r.kv.end()) {
        why = "missing result key '" + key + "'";
        return false;
    }
    // polynomial-list keys compare up to unit normalization, term order fixed
    if (key == "support" || key == "equation" || key == "basis" || key == "leadform" ||
        key == "disc" || key == "gr") {
        auto canon = [&](const std::string& s) {
            std::vector<std::string> out;
            for (const auto& part : detail::split(s, ';')) {
                Polynomial p = parse_polynomial(part, ring);
                p.normalize_content();
                out.push_back(p.str());
            }
            std::sort(out.begin(), out.end());
            std::string joined;
            for (const auto& x : out) joined += x + " ; ";
            return joined;
        };
        try {
            if (canon(expected) == canon(it->second)) return true;
        } catch (const error& e) {
            why = std::string("expected value unparsable: ") + e.what();
            return false;
        }
        why = "expected '" + expected + "', got '" + it->second + "'";
        return false;
    }
    if (expected == it->second) return true;
    why = "expected '" + expected + "', got '" + it->second + "'";
    return false;
}

inline std::vector<CorpusRow> corpus_run(const std::string& dir, const std::string& filter = "") {
    std::vector<std::string> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".job") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    std::vector<CorpusRow> rows;
    for (const auto& f : files) {
        JobSpec job = parse_job_file(f);
        if (!filter.empty() && job.name.find(filter) == std::string::npos) continue;
        CorpusRow row;
        row.name = job.name;
        row.cite = job.cite;
        try {
            RunResult r = run_job(job);
            row.pass = true;
            for (const auto& [k, v] : job.expect) {
                if (k == "exit") {
                    if (std::to_string(r.exit_code) != v) {
                        row.pass = false;
                        row.detail = "exit expected " + v + ", got " + std::to_string(r.exit_code);
                        break;
                    }
                    continue;
                }
                std::string why;
                Ring ring;
                try {
                    ring = detail::job_ring(job);
                } catch (const error&) {
                    ring = make_ring({"x"});
                }
                if (!expect_matches(k, v, r, ring, static_cast<int>(job.z_gens.size()), why)) {
                    row.pass = false;
                    row.detail = k + ": " + why;
                    break;
                }
            }
        } catch (const error& e) {
            // a failing run still matches when the expectation names the exit class
            int code = 1;
            if (dynamic_cast<const parse_error*>(&e)) code = 4;
            else if (dynamic_cast<const budget_error*>(&e)) code = 3;
            else if (dynamic_cast<const hypothesis_error*>(&e)) code = 2;
            auto it = job.expect.find("exit");
            if (it != job.expect.end() && std::to_string(code) == it->second) {
                row.pass = true;
            } else {
                row.pass = false;
                row.detail = e.what();
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline RunResult run_job(const JobSpec& job) {
    using namespace detail;
    RunResult out;
    const std::string& cmd = job.command;

    if (cmd == "gb") {
        Ring ring = job_ring(job);
        Ideal I(ring, parse_list(job.x_gens.empty() ? job.f_polys : job.x_gens, ring));
        const GroebnerBasis& gb = I.groebner(job_order(job), job_budget(job));
        for (const auto& g : gb.elems) out.say(g.str());
        out.put("basis", poly_list_str(gb.elems));
        out.put("size", std::to_string(gb.elems.size()));
        return out;
    }
    if (cmd == "leadform") {
        Ring ring = job_ring(job);
        PairSetup setup{ring, Ideal(ring, parse_list(job.z_gens, ring)), Ideal(ring, {}), {}};
        if (job.f_polys.empty()) throw parse_error("leadform needs an F section", 0);
        Polynomial f = parse_polynomial(job.f_polys[0], ring);
        long p = ord_along(f, setup.IZ, job_budget(job));
        auto ynames = fresh_names(ring, "y", static_cast<int>(setup.IZ.gens().size()));
        Ring ext = extend_ring(ring, ynames, {}, static_cast<int>(ring->size()));
        std::vector<int> y_idx;
        for (const auto& n : ynames) y_idx.push_back(ext->index_of(n));
        Polynomial lf = leading_form(f, setup.IZ, ext, y_idx, job_budget(job));
        out.say("order along Z: " + std::to_string(p));
        out.say("leading form: " + lf.str());
        out.put("order", std::to_string(p));
        out.put("leadform", lf.str());
        return out;
    }
    if (cmd == "conormal" || cmd == "sci-check" || cmd == "mult-seq" || cmd == "crit" ||
        cmd == "ordinary-check" || cmd == "db-support" || cmd == "db-mult" || cmd == "db-equation" ||
        cmd == "db-report") {
        PairSetup setup = job_setup(job);
        Budget budget = job_budget(job);
        ConormalData cd = conormal_ideal(setup, budget);
        if (cmd == "conormal") {
            std::vector<Polynomial> shown;
            const GroebnerBasis& gbZ = cd.gbZ(budget);
            for (const auto& g : cd.gr_ideal.gens()) {
                Polynomial red = nf_remainder(g, gbZ, budget);
                if (!red.is_zero()) shown.push_back(red);
            }
            out.say("conormal ideal (mod I_Z): " + poly_list_str(shown));
            out.put("gr", poly_list_str(shown));
            for (std::size_t j = 0; j < cd.lead_forms.size(); ++j) {
                out.say("f_" + std::to_string(j + 1) + ": order " + std::to_string(cd.orders[j]) +
                        ", leading form " + cd.lead_forms[j].str());
                std::string table;
                for (const auto& [m, a] : cd.coeff_tables[j]) {
                    table += " a[";
                    for (std::size_t i = 0; i < m.size(); ++i) table += (i ? "," : "") + std::to_string(m[i]);
                    table += "]=" + a.str();
                }
                out.say("  coefficients:" + table);
            }
            out.put("leadform", cd.lead_forms.empty() ? "" : cd.lead_forms[0].str());
            return out;
        }
        if (cmd == "sci-check") {
            SciReport sr = sci_check(cd, budget);
            out.say(std::string("strict complete intersection: ") + (sr.is_sci ? "yes" : "no"));
            if (!sr.detail.empty()) out.say("detail: " + sr.detail);
            out.put("is_sci", sr.is_sci ? "true" : "false");
            if (sr.is_sci) {
                std::string ms;
                for (std::size_t i = 0; i < sr.multseq.orders.size(); ++i)
                    ms += (i ? "," : "") + std::to_string(sr.multseq.orders[i]);
                out.say("multiplicity sequence: (" + ms + "), product " +
                        std::to_string(sr.multseq.generic_multiplicity));
                out.put("multseq", ms);
                out.put("generic_multiplicity", std::to_string(sr.multseq.generic_multiplicity));
            } else {
                out.exit_code = 2;
            }
            return out;
        }
        if (cmd == "mult-seq") {
            MultiplicitySequence ms = multiplicity_sequence(cd, budget);
            std::string s;
            for (std::size_t i = 0; i < ms.orders.size(); ++i)
                s += (i ? "," : "") + std::to_string(ms.orders[i]);
            out.say("multiplicity sequence: (" + s + ")");
            out.say("generic multiplicity: " + std::to_string(ms.generic_multiplicity));
            out.put("multseq", s);
            out.put("generic_multiplicity", std::to_string(ms.generic_multiplicity));
            return out;
        }
        CritData crit = crit_ideal(cd, budget);
        if (cmd == "crit") {
            for (const auto& g : crit.crit.gens()) out.say(g.str());
            out.put("crit", poly_list_str(crit.crit.gens()));
            out.put("saturation_certified", crit.saturation_certified ? "true" : "false");
            return out;
        }
        if (cmd == "ordinary-check") {
            OrdinaryReport rep = generically_ordinary_check(crit, budget);
            out.say(std::string("generically ordinary: ") + (rep.ordinary ? "yes" : "no"));
            out.say("witness: " + rep.witness);
            out.put("ordinary", rep.ordinary ? "true" : "false");
            out.put("support", poly_list_str(rep.support.reduced));
            if (!rep.ordinary) out.exit_code = 2;
            return out;
        }
        if (cmd == "db-support") {
            SupportData s = db_support(crit, budget);
            out.say("support (mod I_Z): " + poly_list_str(s.reduced));
            out.put("support", poly_list_str(s.reduced));
            return out;
        }
        if (cmd == "db-mult") {
            std::vector<Rational> pt = job_point(job, setup.ring->size());
            long m = db_multiplicity_at_point(crit, pt, {}, budget);
            out.say("multiplicity at (" + point_str(pt) + "): " + std::to_string(m));
            out.put("mult", std::to_string(m));
            out.put("value", std::to_string(m));
            return out;
        }
        // db-equation and db-report share the full report
        ReportOptions opt = job_report_options(job);
        if (cmd == "db-equation" && !job.options.count("point"))
            opt.points = {job_point(job, setup.ring->size())};
        DiscriminantReport rep = db_report(setup, opt);
        render_report(rep, out);
        if (cmd == "db-equation" && !rep.equation) {
            out.say("no presentation equation available");
            out.exit_code = 2;
        }
        return out;
    }
    if (cmd == "pullback-check") {
        Ring ring1 = job_ring(job);
        if (job.ring2_vars.empty()) throw parse_error("pullback-check needs RING2", 0);
        Ring ring2 = make_ring(job.ring2_vars);
        PairSetup setup2{ring2, Ideal(ring2, parse_list(job.z2_gens, ring2)),
                         Ideal(ring2, parse_list(job.x2_gens, ring2)), {}};
        std::vector<Polynomial> images(ring2->size(), Polynomial::zero(ring1));
        std::vector<bool> seen(ring2->size(), false);
        for (const auto& [var, expr] : job.map_images) {
            int i = ring2->index_of(var);
            if (i < 0) throw parse_error("MAP names unknown target variable '" + var + "'", 0);
            images[i] = parse_polynomial(expr, ring1);
            seen[i] = true;
        }
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (!seen[i]) throw parse_error("MAP missing image for '" + ring2->vars[i] + "'", 0);
        std::vector<Rational> pt = job_point(job, ring1->size());
        PullbackCheck pc = pullback_check(ring1, images, setup2, pt, job_report_options(job));
        out.say(std::string("pullback identity: ") + (pc.ok ? "holds" : "FAILS"));
        out.say(pc.detail);
        out.put("pullback_ok", pc.ok ? "true" : "false");
        return out;
    }
    if (cmd == "family-degrees") {
        Ring ring = job_ring(job);
        auto it = job.options.find("param");
        if (it == job.options.end()) throw parse_error("family-degrees needs param=<var>", 0);
        int param = ring->index_of(it->second);
        if (param < 0) throw parse_error("unknown parameter variable", 0);
        std::vector<Rational> samples;
        auto st = job.options.find("samples");
        if (st == job.options.end()) throw parse_error("family-degrees needs samples=v1,v2,..", 0);
        for (const auto& s : split(st->second, ',')) samples.push_back(rat_parse(s));
        FamilyDegrees fd = family_db_degrees(ring, parse_list(job.z_gens, ring),
                                             parse_list(job.x_gens, ring), param, samples,
                                             job_budget(job));
        std::string degrees;
        for (const auto& s : fd.samples) {
            std::ostringstream ss;
            ss << "t = " << rat_str(s.t) << ": ";
            if (s.ok) {
                ss << "degree " << s.degree << ", multiplicity sequence (";
                for (std::size_t i = 0; i < s.multseq.size(); ++i)
                    ss << (i ? "," : "") << s.multseq[i];
                ss << ")";
            } else {
                ss << "failed: " << s.failure;
            }
            out.say(ss.str());
            if (!degrees.empty()) degrees += ",";
            degrees += s.ok ? std::to_string(s.degree) : "x";
        }
        out.say(fd.flagged_nonflat ? "family flagged NON-FLAT" : "family degrees constant");
        out.put("degrees", degrees);
        out.put("nonflat", fd.flagged_nonflat ? "true" : "false");
        return out;
    }
    if (cmd == "milnor") {
        WeightData wd = job_weight_data(job);
        Rational mu = milnor_weighted_hypersurface(wd);
        out.say("mu = " + rat_str(mu));
        if (!rat_is_integer(mu)) out.say("warning: non-integer value, weight data inconsistent");
        out.put("value", rat_str(mu));
        return out;
    }
    if (cmd == "mu-pair") {
        WeightData wd = job_weight_data(job);
        Rational v = mu_plus_muhat(wd);
        out.say("mu + mu_hat_1 = " + rat_str(v));
        out.put("value", rat_str(v));
        return out;
    }
    if (cmd == "poincare-mu") {
        WeightData wd = job_weight_data(job);
        Rational v = poincare_series_mu(wd);
        out.say("mu (Poincare series route) = " + rat_str(v));
        out.put("value", rat_str(v));
        return out;
    }
    if (cmd == "monomial-support") {
        WeightData wd = job_weight_data(job);
        Ring ring = job_ring(job);
        std::vector<DeformMonomial> monos;
        for (const auto& [eq, expr] : job.deform) {
            Polynomial m = parse_polynomial(expr, ring);
            if (m.term_count() != 1) throw parse_error("DEFORM entries must be monomials", 0);
            DeformMonomial dm;
            dm.eq = static_cast<std::size_t>(eq);
            dm.expo = m.terms()[0].m.e;
            monos.push_back(std::move(dm));
        }
        auto sols = disc_monomial_support(wd, monos);
        for (const auto& sol : sols) {
            std::string s;
            for (std::size_t i = 0; i < sol.size(); ++i) s += (i ? "," : "") + std::to_string(sol[i]);
            out.say("exponents: (" + s + ")");
        }
        out.say("solutions: " + std::to_string(sols.size()));
        out.put("solutions", std::to_string(sols.size()));
        return out;
    }
    if (cmd == "classical-disc") {
        FamilySetup fs = job_family(job);
        ClassicalDiscriminant d = classical_discriminant_eliminate(fs, job_budget(job));
        if (d.empty) {
            out.say("discriminant: empty");
            out.put("empty", "true");
        } else if (d.principal) {
            out.say("discriminant (up to unit): " + d.generator.str());
            out.put("disc", d.generator.str());
            out.put("empty", "false");
        } else {
            out.say("elimination ideal: " + d.elimination.str());
            out.put("empty", "false");
        }
        return out;
    }
    if (cmd == "classical-mult") {
        FamilySetup fs = job_family(job);
        std::vector<Rational> s0 = job_point(job, fs.param_idx.size());
        long m = classical_multiplicity(fs, s0, job_budget(job));
        out.say("multiplicity at (" + point_str(s0) + "): " + std::to_string(m));
        out.put("value", std::to_string(m));
        out.put("mult", std::to_string(m));
        return out;
    }
    throw parse_error("unknown command '" + cmd + "'", 0);
}

}  // namespace tdisc

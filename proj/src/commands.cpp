#include "trisym/commands.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace trisym {

namespace {

template <typename R>
CommandOutput emit(const R& report, int status = 0) {
    return {status, Json(report), render_text(report)};
}

EqualRankSpace resolve_space(const RootSystemPtr& rs, const Request& req) {
    if (req.h.empty()) throw InputError("this command needs --h (roots of h; negatives are added; 0 for the Cartan alone)");
    if (req.h == "0" || req.h == "t") return EqualRankSpace::from_roots(rs, {});
    return EqualRankSpace::from_roots(rs, rs->parse_roots(req.h));
}

TwistorCandidate resolve_candidate(const RootSystemPtr& rs, const Request& req) {
    EqualRankSpace space = resolve_space(rs, req);
    if (!req.nplus.empty()) return TwistorCandidate(space, WeightSpaceSet::of(rs, rs->parse_roots(req.nplus)));
    if (!req.base.empty()) return nplus_from_base(space, resolve_base(rs, req.base));
    throw InputError("this command needs --nplus or --base to determine n+");
}

ParabolicDatum resolve_datum(const RootSystemPtr& rs, const Request& req) {
    return ParabolicDatum(resolve_base(rs, req.base), parse_subset(req.subset, rs->rank()));
}

std::vector<std::string> split_checks(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == '+' || c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string label_of(const std::vector<int>& subset) { return "A=" + format_subset(subset); }

}  // namespace

Base resolve_base(const RootSystemPtr& rs, const std::string& text) {
    if (text.empty()) return catalog_base(rs);
    auto ids = rs->parse_roots(text);
    if (static_cast<int>(ids.size()) != rs->rank())
        throw InputError("a base of " + rs->type().str() + " needs " + std::to_string(rs->rank()) + " roots, got " +
                         std::to_string(ids.size()));
    return validate_base(rs, ids);
}

std::vector<std::vector<int>> all_subsets(int rank) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1U << rank); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < rank; ++i)
            if (mask & (1U << i)) s.push_back(i);
        out.push_back(std::move(s));
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

SweepReport run_sweep(const RootSystemPtr& rs, const Request& req) {
    std::vector<std::string> checks = split_checks(req.check);
    if (checks.empty()) checks = req.candidates ? std::vector<std::string>{"candidates"}
                                                : std::vector<std::string>{"series", "fib3", "check3sym", "fib2"};
    static const std::vector<std::string> known = {"series", "fib3", "check3sym", "fib2", "wolf", "candidates"};
    for (const auto& c : checks)
        if (std::find(known.begin(), known.end(), c) == known.end())
            throw InputError("unknown sweep check '" + c + "' (series, fib3, check3sym, fib2, wolf, candidates)");
    const bool subset_checks = std::any_of(checks.begin(), checks.end(), [](const std::string& c) {
        return c == "series" || c == "fib3" || c == "check3sym" || c == "fib2";
    });
    const bool wants_candidates = std::find(checks.begin(), checks.end(), "candidates") != checks.end();
    if (subset_checks && !req.all_subsets) throw InputError("subset checks need --all-subsets");
    if (wants_candidates && !req.candidates) throw InputError("the candidates check needs --candidates and --h");
    if (subset_checks && rs->rank() > req.max_rank && !req.force)
        throw InputError("rank " + std::to_string(rs->rank()) + " exceeds the sweep guard of " +
                         std::to_string(req.max_rank) + "; raise --max-rank or pass --force");

    const Base base = resolve_base(rs, req.base);
    SweepReport report;
    report.type = rs->type().str();
    std::map<std::string, int> counts;
    std::vector<std::string> count_order;
    auto bump = [&](const std::string& key) {
        if (!counts.count(key)) count_order.push_back(key);
        ++counts[key];
    };
    auto add = [&](SweepItem item) {
        if (!item.ok) report.pass = false;
        report.items.push_back(std::move(item));
    };

    for (const auto& check : checks) {
        if (check == "candidates") {
            EqualRankSpace space = resolve_space(rs, req);
            const auto cands = enumerate_candidates(space);
            const auto classes = weyl_classes(space, cands);
            std::set<int> integrable_classes;
            for (const char* k : {"candidates", "integrable", "recovered", "equivalence_violations"}) {
                count_order.push_back(k);
                counts[k] = 0;
            }
            for (std::size_t k = 0; k < cands.size(); ++k) {
                bool integrable = integrability(cands[k]).pass();
                Recovery rec = recover_parabolic(cands[k]);
                SweepItem item{"candidates", "#" + std::to_string(k) + " n+ = " + direct_sum(root_texts(*rs, cands[k].n_plus().roots)),
                               std::string(integrable ? "integrable" : "not integrable") + ", " +
                                   (rec.success() ? "recovered A=" + format_subset(rec.subset) : "not recovered (" + to_string(rec.failure) + ")"),
                               integrable == rec.success(),
                               {}};
                if (!rec.success()) item.detail.push_back(rec.witness);
                if (integrable) integrable_classes.insert(classes[k]);
                item.status += ", class " + std::to_string(classes[k]);
                ++counts["candidates"];
                counts["integrable"] += integrable ? 1 : 0;
                counts["recovered"] += rec.success() ? 1 : 0;
                counts["equivalence_violations"] += item.ok ? 0 : 1;
                add(std::move(item));
            }
            count_order.push_back("integrable_classes");
            counts["integrable_classes"] = static_cast<int>(integrable_classes.size());
            continue;
        }
        if (check == "wolf") {
            SweepItem item{"wolf", "B", "pass", true, {}};
            try {
                WolfReport w = make_wolf_report(base);
                const bool series_ok = w.series.size() >= 3 && w.series[1] == Roots{w.highest} && w.series[2].empty();
                item.ok = series_ok && w.j2_3symmetric;
                if (!series_ok) item.detail.push_back("l_2 = {gamma}, l_3 = 0 fails");
                if (!w.j2_3symmetric) item.detail.push_back("j2 is not 3-symmetric");
            } catch (const std::logic_error& e) {
                item.ok = false;
                item.detail.push_back(e.what());
            }
            item.status = item.ok ? "pass" : "fail";
            bump(std::string("wolf_") + (item.ok ? "pass" : "fail"));
            add(std::move(item));
            continue;
        }
        for (const auto& subset : all_subsets(rs->rank())) {
            if (check == "fib3" && subset.empty()) continue;   // A = ∅: the flag manifold is a point
            SweepItem item{check, label_of(subset), "", true, {}};
            try {
                ParabolicDatum datum(base, subset);
                GradedDecomposition g(datum);
                if (check == "series") {
                    auto cmp = check_series_equals_grading(datum);
                    item.ok = cmp.equal;
                    item.status = cmp.equal ? "equal" : "mismatch";
                    item.detail = cmp.mismatches;
                } else if (check == "fib3") {
                    Fibration3 fib(g);
                    item.status = fib.trivial() ? "trivial" : "nontrivial";
                } else if (check == "check3sym") {
                    CheckReport cr = check_3symmetric(Fibration3(g));
                    item.ok = cr.pass();
                    item.status = item.ok ? "pass" : "fail";
                    item.detail = cr.failures();
                } else {
                    CheckReport cr = check_symmetric(degree2(g));
                    item.ok = cr.pass();
                    item.status = item.ok ? "pass" : "fail";
                    item.detail = cr.failures();
                }
            } catch (const std::logic_error& e) {
                item.ok = false;
                item.status = "broken";
                item.detail.push_back(e.what());
            }
            bump(check + "_subsets");
            bump(check + "_" + item.status);
            add(std::move(item));
        }
    }
    for (const auto& k : count_order) report.summary.emplace_back(k, counts[k]);
    return report;
}

CommandOutput run_command(std::string_view command, const RootSystemPtr& rs, const Request& req) {
    if (command == "roots") return emit(make_roots_report(*rs));
    if (command == "base") return emit(make_base_report(resolve_base(rs, req.base)));
    if (command == "grade") return emit(make_grading_report(GradedDecomposition(resolve_datum(rs, req))));
    if (command == "series") {
        SeriesReport r = make_series_report(resolve_datum(rs, req));
        return emit(r, r.equals_grading ? 0 : 1);
    }
    if (command == "fib3") {
        GradedDecomposition g(resolve_datum(rs, req));
        return emit(req.flip ? make_flip_report(g) : make_fib3_report(Fibration3(g)));
    }
    if (command == "fib2") {
        ParabolicDatum datum = resolve_datum(rs, req);
        return emit(make_fib2_report(degree2(GradedDecomposition(datum)), datum.base()));
    }
    if (command == "check3sym") {
        CheckReport cr;
        if (!req.mplus.empty()) {
            EqualRankSpace space = resolve_space(rs, req);
            WeightSpaceSet m = WeightSpaceSet::of(rs, rs->parse_roots(req.mplus));
            cr = check_3symmetric(space.h(), m, m.conjugate());
        } else {
            GradedDecomposition g(resolve_datum(rs, req));
            if (req.flip) {
                WeightSpaceSet m = j2_flip(g);
                cr = check_3symmetric(WeightSpaceSet(rs, true, g.level_zero()), m, m.conjugate());
            } else {
                cr = check_3symmetric(Fibration3(g));
            }
        }
        ChecksReport r = make_checks_report(cr);
        return emit(r, r.pass ? 0 : 1);
    }
    if (command == "nplus") {
        if (req.base.empty()) throw InputError("nplus needs --base");
        return emit(make_candidate_report(nplus_from_base(resolve_space(rs, req), resolve_base(rs, req.base))));
    }
    if (command == "twistor-check") {
        if (req.candidates) {
            Request r = req;
            r.check = "candidates";
            SweepReport s = run_sweep(rs, r);
            return emit(s, s.pass ? 0 : 1);
        }
        IntegrabilitySummary r = make_integrability_report(resolve_candidate(rs, req));
        return emit(r, r.integrable ? 0 : 1);
    }
    if (command == "recover") {
        RecoveryReport r = make_recovery_report(recover_parabolic(resolve_candidate(rs, req)));
        return emit(r, r.success ? 0 : 1);
    }
    if (command == "compat3") {
        if (req.mplus.empty()) throw InputError("compat3 needs --mplus");
        TwistorCandidate c = resolve_candidate(rs, req);
        CompatReport r = make_compat_report(c, WeightSpaceSet::of(rs, rs->parse_roots(req.mplus)));
        return emit(r, r.compatible ? 0 : 1);
    }
    if (command == "wolf") return emit(make_wolf_report(resolve_base(rs, req.base)));
    if (command == "classify") return emit(make_classify_report(resolve_base(rs, req.base)));
    if (command == "sweep") {
        SweepReport s = run_sweep(rs, req);
        return emit(s, s.pass ? 0 : 1);
    }
    throw InputError("unknown command '" + std::string(command) + "'");
}

}  // namespace trisym

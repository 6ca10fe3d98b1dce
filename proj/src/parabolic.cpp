#include "trisym/parabolic.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace trisym {

ParabolicDatum::ParabolicDatum(Base base, std::vector<int> subset) : base_(std::move(base)), subset_(std::move(subset)) {
    std::sort(subset_.begin(), subset_.end());
    subset_.erase(std::unique(subset_.begin(), subset_.end()), subset_.end());
    for (int i : subset_)
        if (i < 0 || i >= base_.rank())
            throw InputError("subset index " + std::to_string(i + 1) + " is outside 1.." + std::to_string(base_.rank()));
}

bool ParabolicDatum::in_subset(int simple_index) const {
    return std::binary_search(subset_.begin(), subset_.end(), simple_index);
}

std::vector<RootId> ParabolicDatum::subset_roots() const {
    std::vector<RootId> out;
    for (int i : subset_) out.push_back(base_.simple_root(i));
    return out;
}

std::string ParabolicDatum::subset_label() const { return format_subset(subset_); }

std::string format_subset(const std::vector<int>& subset) {
    std::string s = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) s += (i ? "," : "") + std::to_string(subset[i] + 1);
    return s + "}";
}

std::vector<int> parse_subset(std::string_view text, int rank) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}') s += c;
    std::vector<int> out;
    if (s.empty() || s == "-") return out;
    auto push = [&](const std::string& tok) {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw InputError("malformed subset '" + std::string(text) + "'");
        int i = std::stoi(tok);
        if (i < 1 || i > rank)
            throw InputError("subset index " + tok + " is outside 1.." + std::to_string(rank));
        out.push_back(i - 1);
    };
    if (s.find(',') != std::string::npos) {
        std::size_t start = 0;
        while (true) {
            auto comma = s.find(',', start);
            push(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    } else {
        for (char c : s) push(std::string(1, c));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

GradedDecomposition::GradedDecomposition(const ParabolicDatum& datum) : datum_(datum) {
    const RootSystem& rs = datum_.rs();
    const Base& base = datum_.base();
    level_.assign(static_cast<std::size_t>(rs.size()), 0);
    for (RootId a = 0; a < rs.size(); ++a) {
        int l = 0;
        for (int i : datum_.subset()) l += base.coefficients(a)[static_cast<std::size_t>(i)];
        level_[static_cast<std::size_t>(a)] = l;
        max_level_ = std::max(max_level_, l);
    }
    for (RootId a = 0; a < rs.size(); ++a) {
        if (level(rs.neg(a)) != -level(a)) throw std::logic_error("level map is not odd at " + rs.text(a));
        for (RootId b = 0; b < rs.size(); ++b) {
            RootId s = rs.sum(a, b);
            if (s != kNoRoot && level(s) != level(a) + level(b))
                throw std::logic_error("level map is not additive at " + rs.text(a) + " + " + rs.text(b));
        }
    }
}

RootSet GradedDecomposition::level_set(int r) const {
    RootSet out(rs().size());
    for (RootId a = 0; a < rs().size(); ++a)
        if (level(a) == r) out.insert(a);
    return out;
}

RootSet GradedDecomposition::positive_part() const {
    RootSet out(rs().size());
    for (RootId a = 0; a < rs().size(); ++a)
        if (level(a) > 0) out.insert(a);
    return out;
}

RootSet GradedDecomposition::levels_where(bool (*pred)(int)) const {
    RootSet out(rs().size());
    for (RootId a = 0; a < rs().size(); ++a)
        if (pred(level(a))) out.insert(a);
    return out;
}

GradedDecomposition grade(const ParabolicDatum& datum) { return GradedDecomposition(datum); }

CanonicalSeries canonical_series(const ParabolicDatum& datum) {
    const RootSystem& rs = datum.rs();
    GradedDecomposition g(datum);
    CanonicalSeries series;
    RootSet first = g.positive_part();
    series.terms.push_back(first);
    const auto first_ids = first.ids();
    while (!series.terms.back().empty()) {
        RootSet next(rs.size());
        for (RootId b : series.terms.back().ids())
            for (RootId a : first_ids) {
                RootId s = rs.sum(a, b);
                if (s != kNoRoot) next.insert(s);
            }
        if (!next.subset_of(series.terms.back()))
            throw std::logic_error("canonical series is not descending");
        series.terms.push_back(std::move(next));
    }
    return series;
}

SeriesComparison check_series_equals_grading(const ParabolicDatum& datum) {
    const RootSystem& rs = datum.rs();
    GradedDecomposition g(datum);
    CanonicalSeries series = canonical_series(datum);
    SeriesComparison report;
    report.terms = static_cast<int>(series.terms.size());
    const int upto = std::max(report.terms, g.max_level() + 1);
    for (int i = 1; i <= upto; ++i) {
        RootSet filtration(rs.size());
        for (RootId a = 0; a < rs.size(); ++a)
            if (g.level(a) >= i) filtration.insert(a);
        RootSet term = static_cast<std::size_t>(i - 1) < series.terms.size()
                           ? series.terms[static_cast<std::size_t>(i - 1)]
                           : RootSet(rs.size());
        if (term == filtration) continue;
        report.equal = false;
        for (RootId a : (term - filtration).ids())
            report.mismatches.push_back("l_" + std::to_string(i) + " contains " + rs.text(a) + " of level " +
                                        std::to_string(g.level(a)));
        for (RootId a : (filtration - term).ids())
            report.mismatches.push_back("l_" + std::to_string(i) + " misses " + rs.text(a) + " of level " +
                                        std::to_string(g.level(a)));
    }
    return report;
}

Vec canonical_element(const ParabolicDatum& datum) {
    const Base& base = datum.base();
    const RootSystem& rs = base.rs();
    // Solve <v, beta_i> = [i in A] with v = sum_j y_j beta_j, i.e. Gram * y = e_A.
    const int r = base.rank();
    std::vector<Vec> m(static_cast<std::size_t>(r), Vec(static_cast<std::size_t>(r) + 1));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = dot(rs.root(base.simple_root(i)), rs.root(base.simple_root(j)));
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] = QSqrt3(datum.in_subset(i) ? 1 : 0);
    }
    for (int c = 0; c < r; ++c) {
        int p = c;
        while (p < r && m[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)].is_zero()) ++p;
        if (p == r) throw std::logic_error("singular Gram matrix of a base");
        std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(c)]);
        QSqrt3 piv = m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
        for (auto& x : m[static_cast<std::size_t>(c)]) x /= piv;
        for (int k = 0; k < r; ++k) {
            if (k == c) continue;
            QSqrt3 f = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
            if (f.is_zero()) continue;
            for (int j = 0; j <= r; ++j)
                m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] -= f * m[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
        }
    }
    Vec v(static_cast<std::size_t>(rs.ambient_dim()));
    for (int j = 0; j < r; ++j) v = v + scale(m[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)], rs.root(base.simple_root(j)));
    return v;
}

}  // namespace trisym

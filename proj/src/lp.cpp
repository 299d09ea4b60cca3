#include "bandgraph/lp.hpp"

#include <stdexcept>

namespace bandgraph {

namespace {

size_t pair_count_of(int n) { return size_t(n) * (n - 1) / 2; }

}  // namespace

uint64_t SignCase::case_count(int n) {
    if (n < 2) throw std::invalid_argument("sign cases: need n >= 2");
    size_t m = pair_count_of(n);
    if (2 * (m - 1) >= 63) throw std::overflow_error("sign cases: case count exceeds 2^63");
    return uint64_t(1) << (2 * (m - 1));
}

SignCase SignCase::from_index(int n, uint64_t index) {
    uint64_t total = case_count(n);
    if (index >= total) throw std::out_of_range("sign cases: index out of range");
    size_t m = pair_count_of(n);
    SignCase sc;
    sc.sigma.assign(m, 1);
    sc.tau.assign(m, 1);
    for (size_t t = 1; t < m; ++t) {
        unsigned digit = unsigned(index >> (2 * (m - 1 - t))) & 3u;
        sc.sigma[t] = (digit & 2u) ? -1 : 1;
        sc.tau[t] = (digit & 1u) ? -1 : 1;
    }
    return sc;
}

uint64_t SignCase::to_index() const {
    uint64_t idx = 0;
    for (size_t t = 1; t < sigma.size(); ++t) {
        unsigned digit = (sigma[t] < 0 ? 2u : 0u) | (tau[t] < 0 ? 1u : 0u);
        idx = (idx << 2) | digit;
    }
    return idx;
}

std::string SignCase::str() const {
    std::string out;
    for (size_t t = 0; t < sigma.size(); ++t) {
        if (t) out += ',';
        out += sigma[t] > 0 ? '+' : '-';
        out += tau[t] > 0 ? '+' : '-';
    }
    return out;
}

SignCase SignCase::parse(std::string_view text) {
    SignCase sc;
    size_t pos = 0;
    while (pos < text.size()) {
        if (pos + 2 > text.size()) throw std::invalid_argument("sign case: truncated pair");
        auto sign_of = [](char ch) -> int8_t {
            if (ch == '+') return 1;
            if (ch == '-') return -1;
            throw std::invalid_argument("sign case: expected '+' or '-'");
        };
        sc.sigma.push_back(sign_of(text[pos]));
        sc.tau.push_back(sign_of(text[pos + 1]));
        pos += 2;
        if (pos < text.size()) {
            if (text[pos] != ',') throw std::invalid_argument("sign case: expected ','");
            ++pos;
        }
    }
    if (sc.sigma.empty()) throw std::invalid_argument("sign case: empty");
    return sc;
}

std::vector<std::pair<uint64_t, uint64_t>> split_case_range(uint64_t total, unsigned k) {
    if (k == 0) k = 1;
    std::vector<std::pair<uint64_t, uint64_t>> chunks;
    uint64_t base = total / k, extra = total % k, start = 0;
    for (unsigned i = 0; i < k; ++i) {
        uint64_t len = base + (i < extra ? 1 : 0);
        chunks.push_back({start, start + len});
        start += len;
    }
    return chunks;
}

std::string LinearProgram::dump() const {
    std::string out;
    for (const Row& row : rows) {
        bool any = false;
        for (size_t j = 0; j < row.coeffs.size(); ++j) {
            if (row.coeffs[j].is_zero()) continue;
            if (any) out += ' ';
            out += row.coeffs[j].str() + "*" + vars[j];
            any = true;
        }
        if (!any) out += "0";
        out += " <= " + row.rhs.str();
        if (!row.label.empty()) out += "   # " + row.label;
        out += '\n';
    }
    return out;
}

namespace {

struct MarginBuilder {
    const Graph& g;
    const Scalar& R;
    const SignCase& sc;
    const Scalar& box;
    int max_vertex = 0;  // variables cover vertices 1..max_vertex
    LinearProgram lp;

    int var_a(int i) const { return 2 * (i - 1); }
    int var_c(int i) const { return 2 * (i - 1) + 1; }
    int var_delta() const { return 2 * max_vertex; }

    LinearProgram::Row zero_row(std::string label) const {
        return {std::vector<Scalar>(lp.vars.size(), Scalar(0)), Scalar(0), std::move(label)};
    }

    void build(size_t prefix_pairs) {
        auto pairs = g.pairs();
        if (prefix_pairs > pairs.size()) prefix_pairs = pairs.size();
        if (sc.pair_total() != pairs.size())
            throw std::invalid_argument("margin lp: sign case size mismatch");
        if (R < Scalar(1)) throw std::invalid_argument("margin lp: R must be >= 1");
        if (box.sign() <= 0) throw std::invalid_argument("margin lp: box must be positive");

        for (size_t t = 0; t < prefix_pairs; ++t)
            max_vertex = std::max(max_vertex, pairs[t].second);
        if (prefix_pairs == pairs.size()) max_vertex = g.vertex_count();

        for (int i = 1; i <= max_vertex; ++i) {
            lp.vars.push_back("a" + std::to_string(i));
            lp.vars.push_back("c" + std::to_string(i));
        }
        lp.vars.push_back("delta");
        lp.objective = var_delta();

        for (size_t t = 0; t < prefix_pairs; ++t) {
            auto [i, j] = pairs[t];
            std::string suffix = std::to_string(i) + "_" + std::to_string(j);
            Scalar sg(sc.sigma[t]), tu(sc.tau[t]);

            // sigma (a_i - a_j) >= 0   ->   -sigma a_i + sigma a_j <= 0
            LinearProgram::Row row = zero_row("sign_a_" + suffix);
            row.coeffs[var_a(i)] = -sg;
            row.coeffs[var_a(j)] = sg;
            lp.rows.push_back(std::move(row));

            row = zero_row("sign_c_" + suffix);
            row.coeffs[var_c(i)] = -tu;
            row.coeffs[var_c(j)] = tu;
            lp.rows.push_back(std::move(row));

            if (g.has_edge(i, j)) {
                // |a_i-a_j| >= |c_i-c_j|: tau (c_i-c_j) - sigma (a_i-a_j) <= 0
                row = zero_row("edge_gap_" + suffix);
                row.coeffs[var_a(i)] = -sg;
                row.coeffs[var_a(j)] = sg;
                row.coeffs[var_c(i)] = tu;
                row.coeffs[var_c(j)] = -tu;
                lp.rows.push_back(std::move(row));

                // slopes actually differ: delta - sigma (a_i-a_j) <= 0
                row = zero_row("edge_delta_" + suffix);
                row.coeffs[var_a(i)] = -sg;
                row.coeffs[var_a(j)] = sg;
                row.coeffs[var_delta()] = Scalar(1);
                lp.rows.push_back(std::move(row));
            } else {
                // R |a_i-a_j| < |c_i-c_j|: delta - tau (c_i-c_j) + R sigma (a_i-a_j) <= 0
                row = zero_row("nonedge_" + suffix);
                row.coeffs[var_a(i)] = R * sg;
                row.coeffs[var_a(j)] = -(R * sg);
                row.coeffs[var_c(i)] = -tu;
                row.coeffs[var_c(j)] = tu;
                row.coeffs[var_delta()] = Scalar(1);
                lp.rows.push_back(std::move(row));
            }
        }

        for (int i = 1; i <= max_vertex; ++i) {
            for (int v : {var_a(i), var_c(i)}) {
                LinearProgram::Row hi = zero_row("box_" + lp.vars[v] + "_hi");
                hi.coeffs[v] = Scalar(1);
                hi.rhs = box;
                lp.rows.push_back(std::move(hi));
                LinearProgram::Row lo = zero_row("box_" + lp.vars[v] + "_lo");
                lo.coeffs[v] = Scalar(-1);
                lo.rhs = box;
                lp.rows.push_back(std::move(lo));
            }
        }
        LinearProgram::Row dhi = zero_row("box_delta_hi");
        dhi.coeffs[var_delta()] = Scalar(1);
        dhi.rhs = box;
        lp.rows.push_back(std::move(dhi));
        LinearProgram::Row dlo = zero_row("box_delta_lo");
        dlo.coeffs[var_delta()] = Scalar(-1);
        lp.rows.push_back(std::move(dlo));
    }
};

}  // namespace

LinearProgram build_margin_lp(const Graph& g, const Scalar& R, const SignCase& sc,
                              const Scalar& box) {
    MarginBuilder b{g, R, sc, box};
    b.build(g.pair_count());
    return std::move(b.lp);
}

LinearProgram build_margin_lp_prefix(const Graph& g, const Scalar& R, const SignCase& sc,
                                     const Scalar& box, size_t prefix_pairs) {
    MarginBuilder b{g, R, sc, box};
    b.build(prefix_pairs);
    return std::move(b.lp);
}

}  // namespace bandgraph

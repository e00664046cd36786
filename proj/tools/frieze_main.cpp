// Command line front end: walk matrices, determinants, diagonal forms,
// Smith normal forms, frieze patterns and adjacent minors of dissected
// polygons. Outputs are deterministic; exit code 0 means all requested
// checks held, 1 flags a failed verification, 2 a malformed request.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frieze/frieze.hpp"

namespace {

using namespace frieze;

struct Common {
    std::string input_file;
    std::string inline_json;
    std::vector<long> random_spec; // N SEED
    std::string names_csv;
    std::string format = "text";
    bool timings = false;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--input", c.input_file, "read the dissection from a JSON file");
    sub->add_option("--json", c.inline_json, "inline dissection JSON, e.g. '{\"n\":7,\"diagonals\":[[2,7]]}'");
    sub->add_option("--random", c.random_spec, "random dissection: polygon size and seed")->expected(2);
    sub->add_option("--names", c.names_csv, "comma separated piece variable names");
    sub->add_option("--format", c.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--timings", c.timings, "report wall-clock timings on stderr");
}

Dissection load_dissection(const Common& c) {
    const int sources = !c.input_file.empty() + !c.inline_json.empty() + !c.random_spec.empty();
    if (sources != 1)
        throw DomainError("provide exactly one dissection source: --input, --json or --random");
    if (!c.random_spec.empty())
        return random_dissection(static_cast<int>(c.random_spec[0]), static_cast<uint64_t>(c.random_spec[1]));
    json j;
    if (!c.input_file.empty()) {
        std::ifstream in(c.input_file);
        if (!in) throw DomainError("cannot open input file '" + c.input_file + "'");
        j = json::parse(in);
    } else {
        j = json::parse(c.inline_json);
    }
    return dissection_from_json(j);
}

VarNames make_names(const Dissection& d, const Common& c) {
    if (c.names_csv.empty()) return VarNames(d.var_set());
    std::vector<std::string> names;
    std::stringstream ss(c.names_csv);
    std::string item;
    while (std::getline(ss, item, ',')) names.push_back(item);
    return VarNames(d.var_set(), names);
}

Flavor parse_flavor(const std::string& s) {
    if (s == "arithmetic") return Flavor::arithmetic;
    if (s == "x") return Flavor::x;
    if (s == "xq") return Flavor::xq;
    throw DomainError("unknown flavor '" + s + "'");
}

class Stopwatch {
  public:
    explicit Stopwatch(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
    void report(const char* what) const {
        if (!enabled_) return;
        const auto ms =
            std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start_).count() /
            1000.0;
        std::fprintf(stderr, "timing: %s %.1f ms\n", what, ms);
    }

  private:
    bool enabled_;
    std::chrono::steady_clock::time_point start_;
};

std::string matrix_to_text(const PolyMatrix& m, const VarNames& names) {
    std::vector<std::vector<std::string>> cells(m.size(), std::vector<std::string>(m.size()));
    std::vector<size_t> width(m.size(), 0);
    for (int i = 1; i <= m.size(); ++i)
        for (int j = 1; j <= m.size(); ++j) {
            cells[i - 1][j - 1] = m.at(i, j).str(names);
            width[j - 1] = std::max(width[j - 1], cells[i - 1][j - 1].size());
        }
    std::string out;
    for (int i = 0; i < m.size(); ++i) {
        out += "[ ";
        for (int j = 0; j < m.size(); ++j) {
            const std::string& s = cells[i][j];
            out.append(width[j] - s.size(), ' ');
            out += s;
            out += j + 1 < m.size() ? "  " : " ]\n";
        }
    }
    return out;
}

std::string describe(const Dissection& d) {
    std::string s = std::to_string(d.n) + "-gon";
    if (!d.diagonals.empty()) {
        s += " with diagonals";
        for (const auto& [a, b] : d.diagonals) s += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    return s;
}

int cmd_matrix(const Common& c, const std::string& flavor_name) {
    const Stopwatch sw(c.timings);
    const Dissection d = load_dissection(c);
    const Flavor flavor = parse_flavor(flavor_name);
    const VarNames names = make_names(d, c);
    const WeightMatrix w = weight_matrix(d, flavor);
    if (c.format == "json") {
        json j{{"dissection", dissection_to_json(d)}, {"flavor", frieze::flavor_name(flavor)}};
        j["matrix"] = matrix_to_json(w.matrix(), names);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "walk matrix of the " << describe(d) << ", flavor " << frieze::flavor_name(flavor) << "\n"
                  << matrix_to_text(w.matrix(), names);
    }
    sw.report("matrix");
    return 0;
}

int cmd_det(const Common& c, const std::string& flavor_name, const std::string& method) {
    const Stopwatch sw(c.timings);
    const Dissection d = load_dissection(c);
    const Flavor flavor = parse_flavor(flavor_name);
    const VarNames names = make_names(d, c);

    std::optional<DetFactors> factors;
    std::optional<LaurentPoly> by_formula, by_expand;
    if (method == "formula" || method == "both") {
        factors = det_formula_factors(d, flavor);
        by_formula = factors->expanded();
    }
    if (method == "expand" || method == "both") by_expand = det_expand(weight_matrix(d, flavor).matrix());
    const bool match = !by_formula || !by_expand || *by_formula == *by_expand;
    const LaurentPoly& value = by_formula ? *by_formula : *by_expand;

    if (c.format == "json") {
        json j{{"dissection", dissection_to_json(d)}, {"flavor", frieze::flavor_name(flavor)}, {"method", method}};
        j["det"] = value.str(names);
        if (factors) {
            j["sign"] = factors->sign;
            j["prefactor"] = factors->prefactor.str(names);
            json fs = json::array();
            for (const auto& f : factors->piece_factors) fs.push_back(f.str(names));
            j["piece_factors"] = std::move(fs);
        }
        if (by_formula && by_expand) j["match"] = match;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "determinant of the " << describe(d) << " walk matrix, flavor " << frieze::flavor_name(flavor)
                  << "\n";
        if (factors) {
            std::cout << "factored: " << (factors->sign < 0 ? "-" : "") << "1";
            if (!factors->prefactor.is_one()) std::cout << " * " << factors->prefactor.str(names);
            for (const auto& f : factors->piece_factors) std::cout << " * (" << f.str(names) << ")";
            std::cout << "\n";
        }
        if (by_formula) std::cout << "formula:  " << by_formula->str(names) << "\n";
        if (by_expand) std::cout << "expanded: " << by_expand->str(names) << "\n";
        if (by_formula && by_expand)
            std::cout << (match ? "the two routes agree\n" : "MISMATCH between formula and expansion\n");
    }
    sw.report("det");
    return match ? 0 : 1;
}

void print_ops_text(const OpLog& ops, const VarNames& names, const char* what) {
    for (const auto& op : ops) {
        switch (op.kind) {
            case ElementaryOp::Kind::add_multiple:
                std::cout << "  " << what << " " << op.target << " += (" << op.coeff.str(names) << ") * " << what
                          << " " << op.source << "\n";
                break;
            case ElementaryOp::Kind::scale:
                std::cout << "  " << what << " " << op.target << " *= " << op.coeff.str(names) << "\n";
                break;
            case ElementaryOp::Kind::permute: {
                std::cout << "  permute " << what << "s:";
                for (int v : op.perm) std::cout << " " << v;
                std::cout << "\n";
                break;
            }
        }
    }
}

int cmd_diagform(const Common& c, const std::string& flavor_name, bool full) {
    const Stopwatch sw(c.timings);
    const Dissection d = load_dissection(c);
    const Flavor flavor = parse_flavor(flavor_name);
    const VarNames names = make_names(d, c);
    const DiagonalForm f = diagonalize(d, flavor); // verifies p * w * q == d exactly
    if (c.format == "json") {
        json j{{"dissection", dissection_to_json(d)}, {"flavor", frieze::flavor_name(flavor)}};
        j["form"] = diagonal_form_to_json(f, names, full);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "diagonal form of the " << describe(d) << " walk matrix, flavor "
                  << frieze::flavor_name(flavor) << "\n";
        for (int i = 1; i <= f.d.size(); ++i) std::cout << "  D[" << i << "] = " << f.d.at(i, i).str(names) << "\n";
        std::cout << "det P = " << f.det_p.str(names) << ", det Q = " << f.det_q.str(names) << "\n"
                  << "verified P * W * Q = D with " << f.row_ops.size() << " row and " << f.col_ops.size()
                  << " column operations\n";
        if (full) {
            std::cout << "P =\n" << matrix_to_text(f.p, names) << "Q =\n" << matrix_to_text(f.q, names);
            std::cout << "row operations:\n";
            print_ops_text(f.row_ops, names, "row");
            std::cout << "column operations:\n";
            print_ops_text(f.col_ops, names, "col");
        }
    }
    sw.report("diagform");
    return 0;
}

int cmd_snf(const Common& c) {
    const Stopwatch sw(c.timings);
    const Dissection d = load_dissection(c);
    const IntMatrix m = to_int_matrix(weight_matrix(d, Flavor::arithmetic).matrix());
    const SmithForm sf = smith_normal_form(m); // verifies u * m * v == s
    const TheoremForm tf = theorem_diagonal_form(d);
    auto diag_strings = [](const std::vector<Int>& v) {
        json a = json::array();
        for (const auto& x : v) a.push_back(x.get_str());
        return a;
    };
    if (c.format == "json") {
        json j{{"dissection", dissection_to_json(d)}};
        j["smith"] = {{"diagonal", diag_strings(sf.s.diagonal())},
                      {"det_u", sf.det_u.get_str()},
                      {"det_v", sf.det_v.get_str()},
                      {"u", int_matrix_to_json(sf.u)},
                      {"v", int_matrix_to_json(sf.v)}};
        j["degree_form"] = {{"diagonal", diag_strings(tf.s.diagonal())},
                            {"det_u", tf.det_u.get_str()},
                            {"det_v", tf.det_v.get_str()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "integer forms of the " << describe(d) << " walk-count matrix\n";
        std::cout << "smith normal form: ";
        for (const auto& x : sf.s.diagonal()) std::cout << x.get_str() << " ";
        std::cout << "(det U = " << sf.det_u.get_str() << ", det V = " << sf.det_v.get_str() << ")\n";
        std::cout << "degree diagonal form: ";
        for (const auto& x : tf.s.diagonal()) std::cout << x.get_str() << " ";
        std::cout << "(det U = " << tf.det_u.get_str() << ", det V = " << tf.det_v.get_str() << ")\n";
    }
    sw.report("snf");
    return 0;
}

int cmd_frieze(const Common& c, const std::string& flavor_name, int periods, bool latex, bool zero_row,
               int max_entry_width) {
    const Stopwatch sw(c.timings);
    const Dissection d = load_dissection(c);
    const Flavor flavor = parse_flavor(flavor_name);
    const VarNames names = make_names(d, c);
    const FriezePattern p = build_frieze(d, flavor);
    const FriezeRenderOptions opt{periods, zero_row, latex, max_entry_width};
    if (c.format == "json") {
        json rows = json::array();
        for (int r = zero_row ? 0 : 1; r <= d.n - 1; ++r) {
            json row = json::array();
            for (int i = 1; i <= d.n; ++i) row.push_back(p.entry(r, i).str(names));
            rows.push_back(std::move(row));
        }
        json j{{"dissection", dissection_to_json(d)},
               {"flavor", frieze::flavor_name(flavor)},
               {"rows", std::move(rows)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "frieze of the " << describe(d) << ", flavor " << frieze::flavor_name(flavor) << "\n"
                  << render_frieze(p, names, opt);
    }
    sw.report("frieze");
    return 0;
}

int cmd_minors(const Common& c, const std::string& flavor_name) {
    const Stopwatch sw(c.timings);
    const Dissection d = load_dissection(c);
    const Flavor flavor = parse_flavor(flavor_name);
    const VarNames names = make_names(d, c);
    const WeightMatrix w = weight_matrix(d, flavor);
    PolyMatrix minors(d.var_set(), d.n);
    bool all_match = true;
    int bad_i = 0, bad_j = 0;
    for (int i = 1; i <= d.n; ++i)
        for (int j = 1; j <= d.n; ++j) {
            minors.at(i, j) = frieze_minor(w, i, j);
            if (!(minors.at(i, j) == minor_formula(d, i, j, flavor)) && all_match) {
                all_match = false;
                bad_i = i, bad_j = j;
            }
        }
    if (c.format == "json") {
        json j{{"dissection", dissection_to_json(d)},
               {"flavor", frieze::flavor_name(flavor)},
               {"minors", matrix_to_json(minors, names)},
               {"matches_formula", all_match}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "adjacent minors d(e_i, e_j) of the " << describe(d) << ", flavor "
                  << frieze::flavor_name(flavor) << "\n"
                  << matrix_to_text(minors, names);
        if (all_match)
            std::cout << "all " << d.n * d.n << " minors match the closed form\n";
        else
            std::cout << "MISMATCH against the closed form at (" << bad_i << ", " << bad_j << ")\n";
    }
    sw.report("minors");
    return all_match ? 0 : 1;
}

int cmd_zigzag(const Common& c, int i, int j) {
    const Stopwatch sw(c.timings);
    const Dissection d = load_dissection(c);
    const VarNames names = make_names(d, c);
    const auto z = find_zigzag(d, i, j);
    const LaurentPoly m = minor_formula(d, i, j);
    if (c.format == "json") {
        json out{{"dissection", dissection_to_json(d)}, {"e", i}, {"f", j}, {"exists", z.has_value()}};
        if (z) {
            json seq = json::array();
            for (const auto& [a, b] : z->sequence) seq.push_back({a, b});
            out["sequence"] = std::move(seq);
            out["pieces"] = z->pieces;
        }
        out["minor"] = m.str(names);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "boundary edges e_" << i << " and e_" << j << " of the " << describe(d) << "\n";
        if (z) {
            std::cout << "zig-zag:";
            for (const auto& [a, b] : z->sequence) std::cout << " (" << a << "," << b << ")";
            std::cout << "\nthrough pieces:";
            for (int l : z->pieces) std::cout << " " << l;
            std::cout << "\n";
        } else {
            std::cout << "no zig-zag\n";
        }
        std::cout << "adjacent minor d(e_" << i << ", e_" << j << ") = " << m.str(names) << "\n";
    }
    sw.report("zigzag");
    return 0;
}

int cmd_walks(const Common& c, int i, int j, const std::string& flavor_name) {
    const Stopwatch sw(c.timings);
    const Dissection d = load_dissection(c);
    const Flavor flavor = parse_flavor(flavor_name);
    const VarNames names = make_names(d, c);
    const auto walks = enumerate_walks(d, i, j);
    LaurentPoly total = LaurentPoly::zero(d.var_set());
    json jwalks = json::array();
    for (const auto& w : walks) total += walk_weight(d, w, flavor);
    const WeightMatrix wm = weight_matrix(d, flavor);
    const bool match = total == wm.at(i, j);
    if (c.format == "json") {
        for (const auto& w : walks)
            jwalks.push_back({{"pieces", w.pieces}, {"weight", walk_weight(d, w, flavor).str(names)}});
        json out{{"dissection", dissection_to_json(d)}, {"flavor", frieze::flavor_name(flavor)},
                 {"from", i},       {"to", j},
                 {"walks", std::move(jwalks)},          {"total", total.str(names)},
                 {"matches_matrix", match}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << walks.size() << (walks.size() == 1 ? " walk" : " walks") << " from " << i << " to " << j
                  << " on the " << describe(d) << ", flavor " << frieze::flavor_name(flavor) << "\n";
        for (const auto& w : walks) {
            std::cout << "  picks";
            for (int l : w.pieces) std::cout << " " << l;
            if (w.pieces.empty()) std::cout << " (none)";
            std::cout << "  weight " << walk_weight(d, w, flavor).str(names) << "\n";
        }
        std::cout << "total " << total.str(names) << (match ? " == " : " != ") << "matrix entry v_" << i << ","
                  << j << "\n";
    }
    sw.report("walks");
    return match ? 0 : 1;
}

struct VerifyStats {
    int dissections = 0, checks = 0;
};

bool verify_one(const Dissection& d, VerifyStats& stats, std::string& complaint) {
    const VarNames names(d.var_set());
    auto fail = [&](const std::string& what) {
        complaint = "n=" + std::to_string(d.n) + " " + describe(d) + ": " + what;
        return false;
    };
    ++stats.dissections;

    const WeightMatrix wa = weight_matrix(d, Flavor::arithmetic);
    const WeightMatrix wx = weight_matrix(d, Flavor::x);
    const WeightMatrix wq = weight_matrix(d, Flavor::xq);

    // symmetry in every flavor
    ++stats.checks;
    if (const auto r = check_plain_symmetry(wa); !r)
        return fail("walk-count symmetry fails at (" + std::to_string(r.i) + "," + std::to_string(r.j) + ")");
    for (const auto* w : {&wx, &wq}) {
        ++stats.checks;
        if (const auto r = check_complementary_symmetry(*w); !r)
            return fail(std::string("complementary symmetry fails in flavor ") + flavor_name(w->flavor()) +
                        " at (" + std::to_string(r.i) + "," + std::to_string(r.j) + ")");
    }

    // determinant: closed form vs expansion
    for (const auto* w : {&wa, &wx, &wq}) {
        ++stats.checks;
        if (!(det_formula(d, w->flavor()) == det_expand(w->matrix())))
            return fail(std::string("determinant routes disagree in flavor ") + flavor_name(w->flavor()));
    }

    // diagonalization (self-verifying: throws on any internal mismatch)
    for (Flavor fl : {Flavor::arithmetic, Flavor::x, Flavor::xq}) {
        ++stats.checks;
        try {
            (void)diagonalize(d, fl);
        } catch (const Error& e) {
            return fail(std::string("diagonalization failed in flavor ") + flavor_name(fl) + ": " + e.what());
        }
    }

    // integer forms
    ++stats.checks;
    {
        const IntMatrix m = to_int_matrix(wa.matrix());
        const SmithForm sf = smith_normal_form(m);
        const auto diag = sf.s.diagonal();
        for (size_t k = 0; k + 1 < diag.size(); ++k)
            if (diag[k] < 0 || (diag[k] == 0 ? diag[k + 1] != 0 : diag[k + 1] % diag[k] != 0))
                return fail("smith normal form divisibility chain broken");
        const TheoremForm tf = theorem_diagonal_form(d);
        std::vector<Int> expected;
        for (int l = 1; l <= d.piece_count(); ++l) expected.push_back(d.degree(l) - 1);
        expected.resize(d.n, 1);
        if (tf.s.diagonal() != expected) return fail("degree diagonal form has unexpected entries");
        Int prod = 1;
        for (const auto& x : diag) prod *= x;
        Int prod2 = 1;
        for (const auto& x : tf.s.diagonal()) prod2 *= x;
        if (prod != abs(det_expand(m))) return fail("smith normal form determinant mismatch");
        if (prod != prod2) return fail("integer forms disagree on the determinant");
    }

    // adjacent minors against the closed form
    for (const auto* w : {&wa, &wx, &wq}) {
        ++stats.checks;
        for (int i = 1; i <= d.n; ++i)
            for (int j = 1; j <= d.n; ++j)
                if (!(frieze_minor(*w, i, j) == minor_formula(d, i, j, w->flavor())))
                    return fail("adjacent minor (" + std::to_string(i) + "," + std::to_string(j) +
                                ") deviates from the closed form in flavor " + flavor_name(w->flavor()));
    }

    // specializing all variables to 1 recovers the walk counts
    ++stats.checks;
    {
        std::map<VarId, LaurentPoly> ones;
        const LaurentPoly one = LaurentPoly::one(d.var_set());
        for (int l = 1; l <= d.piece_count(); ++l) ones[piece_var(l)] = one;
        for (int i = 1; i <= d.n; ++i) ones[edge_var(i)] = one;
        if (!(specialize(wq, ones).matrix() == wa.matrix()))
            return fail("specializing the full weights to 1 does not give the walk counts");
    }
    return true;
}

int cmd_verify(const Common& c, int all_n, int fuzz_trials) {
    const Stopwatch sw(c.timings);
    std::vector<Dissection> targets;
    if (all_n > 0) {
        if (!c.input_file.empty() || !c.inline_json.empty() || !c.random_spec.empty())
            throw DomainError("--all replaces the dissection sources");
        targets = all_dissections(all_n);
    } else {
        targets.push_back(load_dissection(c));
    }

    VerifyStats stats;
    std::string complaint;
    for (const auto& d : targets)
        if (!verify_one(d, stats, complaint)) {
            std::cout << "verification FAILED: " << complaint << "\n";
            return 1;
        }

    int fuzz_caught = 0;
    if (fuzz_trials > 0) {
        // corrupt one off-diagonal entry; the symmetry check must notice
        std::mt19937_64 rng(20240915);
        for (int t = 0; t < fuzz_trials; ++t) {
            const Dissection& d = targets[rng() % targets.size()];
            const Flavor fl = rng() % 2 == 0 ? Flavor::x : Flavor::xq;
            const WeightMatrix w = weight_matrix(d, fl);
            PolyMatrix m = w.matrix();
            const int i = static_cast<int>(rng() % d.n) + 1;
            int j = static_cast<int>(rng() % (d.n - 1)) + 1;
            if (j >= i) ++j;
            m.at(i, j) += LaurentPoly::one(d.var_set());
            const auto r = check_complementary_symmetry(WeightMatrix(d, fl, std::move(m)));
            if (r) {
                std::cout << "fuzz trial " << t + 1 << " FAILED: corrupted entry (" << i << "," << j
                          << ") slipped past the symmetry check\n";
                return 1;
            }
            ++fuzz_caught;
        }
    }

    if (c.format == "json") {
        json j{{"dissections", stats.dissections}, {"checks", stats.checks}, {"ok", true}};
        if (fuzz_trials > 0) j["fuzz_detected"] = fuzz_caught;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "verified " << stats.checks << " invariant groups over " << stats.dissections
                  << (stats.dissections == 1 ? " dissection" : " dissections") << ": all hold\n";
        if (fuzz_trials > 0)
            std::cout << "fuzz: " << fuzz_caught << "/" << fuzz_trials << " injected corruptions detected\n";
    }
    sw.report("verify");
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"exact walk matrices, determinants, diagonal forms and friezes of dissected polygons"};
    app.require_subcommand(1);
    int rc = 0;

    Common c_matrix;
    std::string f_matrix = "arithmetic";
    auto* sub_matrix = app.add_subcommand("matrix", "print the walk matrix");
    add_common(sub_matrix, c_matrix);
    sub_matrix->add_option("--flavor", f_matrix, "arithmetic, x or xq")
        ->check(CLI::IsMember({"arithmetic", "x", "xq"}));
    sub_matrix->callback([&] { rc = cmd_matrix(c_matrix, f_matrix); });

    Common c_det;
    std::string f_det = "arithmetic", m_det = "both";
    auto* sub_det = app.add_subcommand("det", "determinant by closed form and/or expansion");
    add_common(sub_det, c_det);
    sub_det->add_option("--flavor", f_det, "arithmetic, x or xq")->check(CLI::IsMember({"arithmetic", "x", "xq"}));
    sub_det->add_option("--method", m_det, "formula, expand or both")
        ->check(CLI::IsMember({"formula", "expand", "both"}));
    sub_det->callback([&] { rc = cmd_det(c_det, f_det, m_det); });

    Common c_diag;
    std::string f_diag = "xq";
    bool full_diag = false;
    auto* sub_diag = app.add_subcommand("diagform", "diagonalize the walk matrix over the Laurent ring");
    add_common(sub_diag, c_diag);
    sub_diag->add_option("--flavor", f_diag, "arithmetic, x or xq")->check(CLI::IsMember({"arithmetic", "x", "xq"}));
    sub_diag->add_flag("--full", full_diag, "also print P, Q and the recorded operations");
    sub_diag->callback([&] { rc = cmd_diagform(c_diag, f_diag, full_diag); });

    Common c_snf;
    auto* sub_snf = app.add_subcommand("snf", "integer Smith normal form and degree diagonal form");
    add_common(sub_snf, c_snf);
    sub_snf->callback([&] { rc = cmd_snf(c_snf); });

    Common c_frieze;
    std::string f_frieze = "arithmetic";
    int periods = 2, max_w = 24;
    bool latex = false, zero_row = false;
    auto* sub_frieze = app.add_subcommand("frieze", "render the frieze pattern");
    add_common(sub_frieze, c_frieze);
    sub_frieze->add_option("--flavor", f_frieze, "arithmetic, x or xq")
        ->check(CLI::IsMember({"arithmetic", "x", "xq"}));
    sub_frieze->add_option("--periods", periods, "periods to render (default 2)");
    sub_frieze->add_flag("--latex", latex, "emit a LaTeX array instead of text");
    sub_frieze->add_flag("--show-zero-row", zero_row, "include row 0");
    sub_frieze->add_option("--max-entry-width", max_w, "elide entries longer than this (0 = never)");
    sub_frieze->callback([&] { rc = cmd_frieze(c_frieze, f_frieze, periods, latex, zero_row, max_w); });

    Common c_minors;
    std::string f_minors = "xq";
    auto* sub_minors = app.add_subcommand("minors", "adjacent 2x2 minors vs the zig-zag closed form");
    add_common(sub_minors, c_minors);
    sub_minors->add_option("--flavor", f_minors, "arithmetic, x or xq")
        ->check(CLI::IsMember({"arithmetic", "x", "xq"}));
    sub_minors->callback([&] { rc = cmd_minors(c_minors, f_minors); });

    Common c_zig;
    int zig_i = 0, zig_j = 0;
    auto* sub_zig = app.add_subcommand("zigzag", "zig-zag between two boundary edges");
    add_common(sub_zig, c_zig);
    sub_zig->add_option("i", zig_i, "first boundary edge index")->required();
    sub_zig->add_option("j", zig_j, "second boundary edge index")->required();
    sub_zig->callback([&] { rc = cmd_zigzag(c_zig, zig_i, zig_j); });

    Common c_walks;
    int walk_i = 0, walk_j = 0;
    std::string f_walks = "xq";
    auto* sub_walks = app.add_subcommand("walks", "enumerate the walks behind one matrix entry");
    add_common(sub_walks, c_walks);
    sub_walks->add_option("i", walk_i, "start vertex")->required();
    sub_walks->add_option("j", walk_j, "end vertex")->required();
    sub_walks->add_option("--flavor", f_walks, "arithmetic, x or xq")->check(CLI::IsMember({"arithmetic", "x", "xq"}));
    sub_walks->callback([&] { rc = cmd_walks(c_walks, walk_i, walk_j, f_walks); });

    Common c_verify;
    int all_n = 0, fuzz = 0;
    auto* sub_verify = app.add_subcommand("verify", "run the full invariant battery");
    add_common(sub_verify, c_verify);
    sub_verify->add_option("--all", all_n, "verify every dissection of an n-gon instead of one input");
    sub_verify->add_option("--fuzz", fuzz, "also inject this many corrupted matrices (must be caught)");
    sub_verify->callback([&] { rc = cmd_verify(c_verify, all_n, fuzz); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const frieze::VarSetMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const frieze::InvalidDissection& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const frieze::GuardExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const frieze::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const frieze::Error& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
}

// Command-line front end. Every command is a thin shell over the library:
// parse files, call one operation, print. Exit codes: 0 success, 1 negative
// verdict (codes inequivalent, table verification FAIL, oracle mismatch),
// 2 usage or input errors.

#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ecode/buildup.hpp"
#include "ecode/classify.hpp"
#include "ecode/code.hpp"
#include "ecode/equivalence.hpp"
#include "ecode/io.hpp"
#include "ecode/oracle.hpp"
#include "ecode/ring.hpp"

using json = nlohmann::ordered_json;

namespace {

using namespace ecode;

ECode load_code(const std::string& path) {
    return ECode::from_generators(parse_ematrix(read_file(path)));
}

// A GF(2) basis row (u | v) of the doubled space read coordinate-wise as an
// E-vector; the rows generate the code.
EMatrix generators_of(const ECode& c) {
    const BitMatrix& b = c.basis();
    const int n = c.length();
    EMatrix g(b.rows(), n);
    for (int r = 0; r < b.rows(); ++r)
        for (int j = 0; j < n; ++j) g.set(r, j, {b.get(r, j), b.get(r, n + j)});
    return g;
}

std::vector<std::string> symbol_rows(const EMatrix& m) {
    std::vector<std::string> rows;
    for (int r = 0; r < m.rows(); ++r) {
        std::string s;
        for (int j = 0; j < m.cols(); ++j) s += symbol_of(m.get(r, j));
        rows.push_back(s);
    }
    return rows;
}

std::vector<std::string> bit_rows(const BitMatrix& m) {
    std::vector<std::string> rows;
    for (int r = 0; r < m.rows(); ++r) {
        std::string s;
        for (int j = 0; j < m.cols(); ++j) s += m.get(r, j) ? '1' : '0';
        rows.push_back(s);
    }
    return rows;
}

BitVector parse_bits(const std::string& s) {
    BitVector v(int(s.size()));
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(int(i), true);
        else if (s[i] != '0')
            throw std::invalid_argument("auxiliary vector must be over {0,1}: '" + s + "'");
    }
    return v;
}

json hull_json(const ECode& h) {
    json j;
    j["dimension"] = h.dimension();
    j["free"] = is_free(h);
    j["rows"] = symbol_rows(generators_of(h));
    return j;
}

void print_hull(const char* label, const ECode& h) {
    std::printf("%s: dimension %d, %s\n", label, h.dimension(),
                is_free(h) ? "free" : "not free");
    std::fputs(to_text(generators_of(h)).c_str(), stdout);
}

int cmd_summary(const std::string& path, bool as_json) {
    CodeSummary s = summarize(load_code(path));
    if (as_json) {
        std::printf("%s\n", to_json(s).c_str());
        return 0;
    }
    std::printf("n = %d\nk = %d\n", s.n, s.k);
    if (s.d)
        std::printf("d = %d\n", *s.d);
    else
        std::printf("d = undefined (zero code)\n");
    std::printf("free = %s\n", s.free ? "yes" : "no");
    if (s.hull_rank)
        std::printf("hull rank = %d\n", *s.hull_rank);
    else
        std::printf("hull rank = undefined (not free)\n");
    return 0;
}

int cmd_plane(const std::string& path, bool torsion_plane, bool as_json) {
    ECode c = load_code(path);
    BitMatrix m = torsion_plane ? torsion(c) : residue(c);
    if (as_json) {
        json j;
        j["cols"] = m.cols();
        j["rows"] = bit_rows(m);
        std::printf("%s\n", j.dump().c_str());
    } else {
        std::fputs(to_text(m).c_str(), stdout);
    }
    return 0;
}

int cmd_distance(const std::string& path, bool as_json) {
    int d = min_distance(load_code(path));
    if (as_json) {
        json j;
        j["d"] = d;
        std::printf("%s\n", j.dump().c_str());
    } else {
        std::printf("%d\n", d);
    }
    return 0;
}

int cmd_dual(const std::string& path, const std::string& side, bool as_json) {
    ECode c = load_code(path);
    ECode d = side == "left" ? left_dual(c) : side == "right" ? right_dual(c) : dual(c);
    if (as_json) {
        json j = hull_json(d);
        j["side"] = side;
        std::printf("%s\n", j.dump().c_str());
    } else {
        print_hull((side + " dual").c_str(), d);
    }
    return 0;
}

int cmd_hull(const std::string& path, bool as_json) {
    ECode c = load_code(path);
    ECode lh = left_hull(c), rh = right_hull(c), h = hull(c);
    if (as_json) {
        json j;
        j["left"] = hull_json(lh);
        j["right"] = hull_json(rh);
        j["two_sided"] = hull_json(h);
        std::printf("%s\n", j.dump().c_str());
    } else {
        print_hull("left hull", lh);
        print_hull("right hull", rh);
        print_hull("two-sided hull", h);
    }
    return 0;
}

int cmd_construct(const std::string& path, const std::string& method_name, const std::string& u,
                  bool literal, bool as_json) {
    ECode c = load_code(path);
    BuildOutput out = construct(method_of_name(method_name), c, parse_bits(u), literal);
    CodeSummary s = summarize(out.code);
    if (as_json) {
        json j;
        j["method"] = name_of_method(method_of_name(method_name));
        j["n"] = s.n;
        j["k"] = s.k;
        j["d"] = s.d ? json(*s.d) : json(nullptr);
        j["hull_rank"] = out.hull_rank;
        j["predicted_hull_ranks"] = out.predicted_hull_ranks;
        j["generator"] = symbol_rows(out.generator);
        j["parity_check"] = symbol_rows(out.parity_check);
        std::printf("%s\n", j.dump().c_str());
    } else {
        std::printf("free [%d, %d] code, hull rank %d\nG' =\n", s.n, s.k, out.hull_rank);
        std::fputs(to_text(out.generator).c_str(), stdout);
        std::printf("H' =\n");
        std::fputs(to_text(out.parity_check).c_str(), stdout);
    }
    return 0;
}

int cmd_equiv(const std::string& path_a, const std::string& path_b, bool as_json) {
    auto witness = e_equivalent(load_code(path_a), load_code(path_b));
    if (as_json) {
        json j;
        j["equivalent"] = bool(witness);
        j["witness"] = witness ? json(cycle_string(*witness)) : json(nullptr);
        std::printf("%s\n", j.dump().c_str());
    } else if (witness) {
        std::printf("equivalent: %s\n", cycle_string(*witness).c_str());
    } else {
        std::printf("inequivalent\n");
    }
    return witness ? 0 : 1;
}

int cmd_classify(int n, int k, int l, int workers, bool as_json, bool as_csv) {
    ClassRecord rec = classify(n, k, l, workers);
    if (as_json) {
        json j;
        j["n"] = rec.n;
        j["k"] = rec.k;
        j["hull_rank"] = rec.hull_rank;
        j["optimal_d"] = rec.optimal_d;
        j["examined"] = rec.tally.examined;
        j["classes"] = rec.representatives.size();
        json reps = json::array();
        for (const EMatrix& g : rec.representatives) reps.push_back(symbol_rows(g));
        j["representatives"] = reps;
        std::printf("%s\n", j.dump().c_str());
    } else if (as_csv) {
        std::printf("n,k,hull_rank,optimal_d,classes,examined\n");
        std::printf("%d,%d,%d,%d,%zu,%lld\n", rec.n, rec.k, rec.hull_rank, rec.optimal_d,
                    rec.representatives.size(), rec.tally.examined);
    } else {
        std::printf("[%d, %d] codes with hull rank %d: %lld examined, optimal d = %d, %zu class%s\n",
                    rec.n, rec.k, rec.hull_rank, rec.tally.examined, rec.optimal_d,
                    rec.representatives.size(), rec.representatives.size() == 1 ? "" : "es");
        for (const EMatrix& g : rec.representatives) std::fputs(to_text(g).c_str(), stdout);
    }
    return 0;
}

int cmd_verify_tables(const std::string& fixture, int workers, bool as_json) {
    TableReport report = verify_tables(parse_fixture(read_file(fixture)), workers, true);
    if (as_json) {
        json j;
        j["fails"] = report.fails;
        j["warns"] = report.warns;
        json items = json::array();
        for (const auto& item : report.items) {
            json it;
            it["status"] = item.status;
            it["what"] = item.what;
            items.push_back(it);
        }
        j["items"] = items;
        std::printf("%s\n", j.dump().c_str());
    } else {
        for (const auto& item : report.items)
            std::printf("%s %s\n", item.status.c_str(), item.what.c_str());
        std::printf("%zu checks, %d FAIL, %d WARN\n", report.items.size(), report.fails,
                    report.warns);
    }
    return report.fails == 0 ? 0 : 1;
}

ECode random_code_for_sweep(std::mt19937_64& rng, int n, bool free_code) {
    if (free_code) {
        int k = int(rng() % unsigned(n + 1));
        BitMatrix g(k, n);
        for (int r = 0; r < k; ++r)
            for (int j = 0; j < n; ++j)
                if (rng() & 1) g.set(r, j, true);
        return ECode::from_generators(scale_a(g));
    }
    int rows = 1 + int(rng() % unsigned(n));
    EMatrix g(rows, n);
    const EElem alphabet[4] = {e_zero, e_a, e_b, e_c};
    for (int r = 0; r < rows; ++r)
        for (int j = 0; j < n; ++j) g.set(r, j, alphabet[rng() % 4]);
    return ECode::from_generators(g);
}

std::string closed_forms_disagree(const ECode& c) {
    if (left_dual(c) != dual_by_definition(c, Side::left)) return "left dual";
    if (right_dual(c) != dual_by_definition(c, Side::right)) return "right dual";
    if (dual(c) != dual_by_definition(c, Side::two_sided)) return "two-sided dual";
    if (left_hull(c) != hull_by_definition(c, Side::left)) return "left hull";
    if (right_hull(c) != hull_by_definition(c, Side::right)) return "right hull";
    if (hull(c) != hull_by_definition(c, Side::two_sided)) return "two-sided hull";
    if (c.dimension() > 0 && min_distance(c) != min_distance_by_definition(c))
        return "minimum distance";
    return "";
}

int cmd_verify_oracle(int trials, int max_n, unsigned long long seed, bool as_json) {
    if (trials < 1 || max_n < 1 || max_n > 6)
        throw std::invalid_argument("oracle sweep needs trials >= 1 and 1 <= max-n <= 6");
    std::mt19937_64 rng(seed);
    std::vector<std::string> failures;
    for (int t = 0; t < trials; ++t) {
        int n = 1 + int(rng() % unsigned(max_n));
        ECode c = random_code_for_sweep(rng, n, t % 2 == 0);
        std::string fail = closed_forms_disagree(c);
        if (!fail.empty()) failures.push_back("code " + std::to_string(t) + ": " + fail);
    }
    if (as_json) {
        json j;
        j["codes"] = trials;
        j["failures"] = failures;
        j["seed"] = seed;
        std::printf("%s\n", j.dump().c_str());
    } else if (failures.empty()) {
        std::printf("oracle sweep: %d codes (n <= %d, seed %llu), closed forms and "
                    "definition scans agree\n",
                    trials, max_n, seed);
    } else {
        for (const std::string& f : failures) std::printf("FAIL %s\n", f.c_str());
    }
    return failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear codes over the order-4 non-unital ring E"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit one JSON document instead of text");

    std::string file_a, file_b, side = "two_sided", method, u_bits, fixture;
    bool literal = false, as_csv = false, oracle = false;
    int n = 0, k = 0, l = 0, workers = 1, trials = 200, max_n = 6;
    unsigned long long seed = 1;

    auto* summary = app.add_subcommand("summary", "n, k, d, hull rank and freeness of a code");
    summary->add_option("file", file_a, "E-matrix file")->required();

    auto* residue_cmd = app.add_subcommand("residue", "residue code as a GF2 matrix");
    residue_cmd->add_option("file", file_a)->required();

    auto* torsion_cmd = app.add_subcommand("torsion", "torsion code as a GF2 matrix");
    torsion_cmd->add_option("file", file_a)->required();

    auto* distance = app.add_subcommand("distance", "minimum distance");
    distance->add_option("file", file_a)->required();

    auto* dual_cmd = app.add_subcommand("dual", "generators of a dual");
    dual_cmd->add_option("file", file_a)->required();
    dual_cmd->add_option("--side", side, "left, right or two_sided (default)")
        ->check(CLI::IsMember({"left", "right", "two_sided"}));

    auto* hull_cmd = app.add_subcommand("hull", "left, right and two-sided hulls");
    hull_cmd->add_option("file", file_a)->required();

    auto* construct_cmd = app.add_subcommand("construct", "build-up construction I-IV");
    construct_cmd->add_option("--method", method, "I, II, III or IV")->required();
    construct_cmd->add_option("--u", u_bits, "auxiliary vector, e.g. 100101")->required();
    construct_cmd->add_flag("--third-construction-literal", literal,
                            "use the constant first-coefficient form of construction III");
    construct_cmd->add_option("file", file_a)->required();

    auto* equiv = app.add_subcommand("equiv", "permutation equivalence of two free codes");
    equiv->add_option("file_a", file_a)->required();
    equiv->add_option("file_b", file_b)->required();

    auto* classify_cmd = app.add_subcommand("classify", "optimal codes in one hull-rank cell");
    classify_cmd->add_option("--n", n)->required();
    classify_cmd->add_option("--k", k)->required();
    classify_cmd->add_option("--hull-rank", l)->required();
    classify_cmd->add_option("--workers", workers);
    classify_cmd->add_flag("--csv", as_csv, "one CSV row instead of text");

    auto* verify_tables_cmd = app.add_subcommand("verify-tables", "recompute a fixture file");
    verify_tables_cmd->add_option("--fixture", fixture)->required();
    verify_tables_cmd->add_option("--workers", workers);

    auto* verify = app.add_subcommand("verify", "randomized self-checks");
    verify->add_flag("--oracle", oracle, "closed forms against definition scans");
    verify->add_option("--trials", trials);
    verify->add_option("--max-n", max_n);
    verify->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (summary->parsed()) return cmd_summary(file_a, as_json);
        if (residue_cmd->parsed()) return cmd_plane(file_a, false, as_json);
        if (torsion_cmd->parsed()) return cmd_plane(file_a, true, as_json);
        if (distance->parsed()) return cmd_distance(file_a, as_json);
        if (dual_cmd->parsed()) return cmd_dual(file_a, side, as_json);
        if (hull_cmd->parsed()) return cmd_hull(file_a, as_json);
        if (construct_cmd->parsed())
            return cmd_construct(file_a, method, u_bits, literal, as_json);
        if (equiv->parsed()) return cmd_equiv(file_a, file_b, as_json);
        if (classify_cmd->parsed()) return cmd_classify(n, k, l, workers, as_json, as_csv);
        if (verify_tables_cmd->parsed()) return cmd_verify_tables(fixture, workers, as_json);
        if (verify->parsed()) {
            if (!oracle) {
                std::cerr << "verify: nothing selected (did you mean --oracle?)\n";
                return 2;
            }
            return cmd_verify_oracle(trials, max_n, seed, as_json);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

#include <atomic>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "schurseq/diff_ops.hpp"
#include "schurseq/error.hpp"
#include "schurseq/polytope.hpp"
#include "schurseq/verify.hpp"

using nlohmann::ordered_json;
using namespace schurseq;

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        int v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || p != tok.data() + tok.size())
            fail(errc::parse, "bad integer \"" + tok + "\" in list \"" + text + "\"");
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

Partition parse_partition_arg(std::string text) {
    while (!text.empty() && text.front() == ' ') text.erase(text.begin());
    while (!text.empty() && text.back() == ' ') text.pop_back();
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
        text = text.substr(1, text.size() - 2);
    return Partition::parse(text);
}

// Sequence specifiers: hom{k}:alpha=..., hook{k}:alpha=...;lambdas=l1|l2|...,
// border{k}:alpha=...;beta=...   (k optional; short alphas are zero-padded).
SequenceFamily parse_sequence(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        fail(errc::parse, "sequence spec \"" + spec + "\" has no ':'");
    std::string head = spec.substr(0, colon);
    std::string kind;
    int declared_k = 0;
    for (char c : head) {
        if (c >= '0' && c <= '9')
            declared_k = declared_k * 10 + (c - '0');
        else
            kind += c;
    }
    std::map<std::string, std::string> fields;
    std::size_t pos = colon + 1;
    while (pos <= spec.size()) {
        auto semi = spec.find(';', pos);
        std::string item =
            spec.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        auto eq = item.find('=');
        if (eq == std::string::npos)
            fail(errc::parse, "sequence field \"" + item + "\" has no '='");
        fields[item.substr(0, eq)] = item.substr(eq + 1);
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    if (!fields.count("alpha")) fail(errc::parse, "sequence spec needs alpha=");
    std::vector<int> alpha = parse_int_list(fields["alpha"]);
    int k = declared_k > 0 ? declared_k : static_cast<int>(alpha.size());
    if (static_cast<int>(alpha.size()) > k)
        fail(errc::parse, "alpha has more entries than k");
    alpha.resize(static_cast<std::size_t>(k), 0);

    if (kind == "hom") return homogeneous_family(alpha);
    if (kind == "border") {
        if (!fields.count("beta")) fail(errc::parse, "border spec needs beta=");
        return border_family(alpha, parse_partition_arg(fields["beta"]));
    }
    if (kind == "hook") {
        if (!fields.count("lambdas")) fail(errc::parse, "hook spec needs lambdas=");
        std::vector<Partition> lambdas;
        const std::string& ls = fields["lambdas"];
        std::size_t p = 0;
        while (p <= ls.size()) {
            auto bar = ls.find('|', p);
            lambdas.push_back(parse_partition_arg(
                ls.substr(p, bar == std::string::npos ? std::string::npos : bar - p)));
            if (bar == std::string::npos) break;
            p = bar + 1;
        }
        return hook_family(alpha, std::move(lambdas));
    }
    fail(errc::parse, "unknown sequence kind \"" + kind + "\"");
}

ordered_json expansion_json(const SchurExpansion& f) {
    ordered_json terms = ordered_json::array();
    for (const auto& [lambda, coeff] : f.terms()) {
        ordered_json t;
        t["partition"] = lambda.to_string();
        t["coefficient"] = coeff;
        terms.push_back(t);
    }
    return terms;
}

std::string render_expansion_text(const SchurExpansion& f) {
    if (f.is_zero()) return "  (zero expansion of degree " + std::to_string(f.degree()) + ")\n";
    std::ostringstream os;
    for (const auto& [lambda, coeff] : f.terms()) {
        std::string p = "s(" + lambda.to_string() + ")";
        os << "  " << p;
        for (std::size_t i = p.size(); i < 24; ++i) os << ' ';
        os << coeff << "\n";
    }
    return os.str();
}

struct Output {
    std::string format = "text";
    std::string path;

    void emit(const ordered_json& j, const std::string& text) const {
        std::string body = format == "json" ? j.dump(2) + "\n" : text;
        if (path.empty()) {
            std::cout << body;
        } else {
            std::ofstream out(path, std::ios::binary);
            if (!out) fail(errc::parse, "cannot open output path " + path);
            out << body;
        }
    }
};

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "Output format: json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", out.path, "Write the report to a file instead of stdout");
}

int report_exit(const std::vector<ClaimReport>& reports) {
    int code = 0;
    for (const auto& r : reports) code = std::max(code, verdict_exit_code(r.verdict));
    return code;
}

std::vector<ClaimReport> run_cells(std::vector<std::function<ClaimReport()>> cells,
                                   unsigned parallelism) {
    std::vector<ClaimReport> results(cells.size());
    if (parallelism <= 1 || cells.size() <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) results[i] = cells[i]();
        return results;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            try {
                results[i] = cells[i]();
            } catch (const std::exception& e) {
                ClaimReport broken;
                broken.claim_id = "error";
                broken.verdict = Verdict::fail;
                broken.notes.push_back(e.what());
                results[i] = std::move(broken);
            }
        }
    };
    std::vector<std::thread> threads;
    unsigned count = std::min<unsigned>(parallelism, static_cast<unsigned>(cells.size()));
    for (unsigned t = 0; t < count; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    return results;
}

int emit_reports(const std::vector<ClaimReport>& reports, const Output& out) {
    if (reports.size() == 1) {
        out.emit(reports[0].to_json(), reports[0].to_text());
    } else {
        ordered_json j;
        j["cells"] = ordered_json::array();
        int worst = 0;
        std::size_t passed = 0;
        for (const auto& r : reports) {
            j["cells"].push_back(r.to_json());
            worst = std::max(worst, verdict_exit_code(r.verdict));
            if (verdict_exit_code(r.verdict) == 0) ++passed;
        }
        j["summary"] = {{"cells", reports.size()},
                        {"passed", passed},
                        {"overall", worst == 0 ? "pass" : "fail"}};
        std::string text;
        for (const auto& r : reports) text += r.to_text() + "\n";
        text += "cells " + std::to_string(reports.size()) + ", passed " +
                std::to_string(passed) + ", overall " + (worst == 0 ? "pass" : "fail") + "\n";
        out.emit(j, text);
    }
    return report_exit(reports);
}

std::vector<Partition> partitions_up_to_weight(int w) {
    std::vector<Partition> out;
    for (int m = 0; m <= w; ++m) {
        std::vector<int> cur;
        auto gen = [&](auto&& self, int rem, int max_part) -> void {
            if (rem == 0) {
                out.push_back(Partition(std::vector<int>(cur)));
                return;
            }
            for (int p = std::min(rem, max_part); p >= 1; --p) {
                cur.push_back(p);
                self(self, rem - p, p);
                cur.pop_back();
            }
        };
        gen(gen, m, std::max(m, 1));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact difference-operator calculus on Schur function sequences"};
    app.require_subcommand(1);
    std::function<int()> runner;

    unsigned default_parallel = std::max(1u, std::thread::hardware_concurrency());

    // ---- product ----------------------------------------------------------
    auto* product = app.add_subcommand("product", "Evaluate a sequence at one index");
    {
        static std::string seq_spec;
        static int n = 0;
        static Output out;
        product->add_option("--seq", seq_spec, "Sequence specifier")->required();
        product->add_option("--n", n, "Index to evaluate")->required();
        add_output_flags(product, out);
        product->callback([&]() {
            runner = []() {
                SequenceFamily fam = parse_sequence(seq_spec);
                const SchurExpansion& value = fam.at(n);
                ordered_json j;
                j["seq"] = fam.label();
                j["n"] = n;
                j["degree"] = value.degree();
                j["term_count"] = value.term_count();
                j["terms"] = expansion_json(value);
                std::string text = fam.label() + " at n=" + std::to_string(n) + "\n" +
                                   render_expansion_text(value);
                out.emit(j, text);
                return 0;
            };
        });
    }

    // ---- apply-delta ------------------------------------------------------
    auto* apply_cmd = app.add_subcommand("apply-delta",
                                         "Apply difference operators pointwise at one index");
    {
        static std::string ops_spec;
        static std::string seq_spec;
        static int n = 0;
        static Output out;
        apply_cmd->add_option("--ops", ops_spec, "Operators, e.g. \"2|(2) ; 1|(1,1)\"")->required();
        apply_cmd->add_option("--seq", seq_spec, "Sequence specifier")->required();
        apply_cmd->add_option("--n", n, "Index to evaluate")->required();
        add_output_flags(apply_cmd, out);
        apply_cmd->callback([&]() {
            runner = []() {
                SequenceFamily fam = parse_sequence(seq_spec);
                std::vector<DiffOp> ops = parse_ops(ops_spec);
                SchurExpansion value = eval_composed(ops, fam, n);
                ordered_json j;
                j["ops"] = ordered_json::array();
                for (const auto& op : ops) j["ops"].push_back(op.to_string());
                j["seq"] = fam.label();
                j["n"] = n;
                j["degree"] = value.degree();
                j["zero"] = value.is_zero();
                j["term_count"] = value.term_count();
                j["terms"] = expansion_json(value);
                std::string text = ops_spec + " on " + fam.label() + " at n=" +
                                   std::to_string(n) + "\n" + render_expansion_text(value);
                out.emit(j, text);
                return 0;
            };
        });
    }

    // ---- enumerate-polytope -----------------------------------------------
    auto* enumerate = app.add_subcommand("enumerate-polytope",
                                         "Integer points of the staircase polytope");
    {
        static int k = 0;
        static int n = 0;
        static std::string alpha_text;
        static std::string faces_text;
        static bool with_points = false;
        static Output out;
        enumerate->add_option("--k", k, "Number of one-row factors")->required();
        enumerate->add_option("--n", n, "Base row size")->required();
        enumerate->add_option("--alpha", alpha_text, "Sorted offsets, e.g. 1,0,0")->required();
        enumerate->add_option("--face", faces_text, "Comma-separated face filters (D1K,D21,...)");
        enumerate->add_flag("--points", with_points, "Include the point list in the report");
        add_output_flags(enumerate, out);
        enumerate->callback([&]() {
            runner = []() {
                std::vector<int> alpha = parse_int_list(alpha_text);
                std::vector<FaceId> faces;
                if (!faces_text.empty()) {
                    std::size_t pos = 0;
                    while (pos <= faces_text.size()) {
                        auto comma = faces_text.find(',', pos);
                        faces.push_back(parse_face(faces_text.substr(
                            pos, comma == std::string::npos ? std::string::npos : comma - pos)));
                        if (comma == std::string::npos) break;
                        pos = comma + 1;
                    }
                }
                SchurExpansion shapes = face_sum(k, n, alpha, faces);
                long long count = 0;
                for (const auto& [lambda, c] : shapes.terms()) count += c;
                ordered_json j;
                j["k"] = k;
                j["n"] = n;
                j["alpha"] = alpha;
                j["faces"] = ordered_json::array();
                for (FaceId f : faces) j["faces"].push_back(face_name(f));
                j["count"] = count;
                j["row_sum_shapes"] = ordered_json::array();
                for (const auto& [lambda, c] : shapes.terms()) {
                    ordered_json e;
                    e["partition"] = lambda.to_string();
                    e["count"] = c;
                    j["row_sum_shapes"].push_back(e);
                }
                std::ostringstream text;
                text << "P_{" << k << "," << n << "} count " << count << "\n";
                for (const auto& [lambda, c] : shapes.terms())
                    text << "  (" << lambda.to_string() << ")  " << c << "\n";
                if (with_points) {
                    auto points = enumerate_points(k, n, alpha);
                    std::vector<PartialMatrix> kept;
                    for (const auto& p : points) {
                        bool ok = true;
                        for (FaceId f : faces) ok = ok && face_condition(f, p);
                        if (ok) kept.push_back(p);
                    }
                    j["points"] = ordered_json::array();
                    for (const auto& p : kept) {
                        ordered_json rows = ordered_json::array();
                        for (const auto& row : p.rows()) rows.push_back(row);
                        j["points"].push_back(rows);
                        text << "  " << p.to_string() << "\n";
                    }
                }
                out.emit(j, text.str());
                return 0;
            };
        });
    }

    // ---- verify -----------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "Run a claim checker");
    verify->require_subcommand(1);
    static int window = 8;
    static unsigned parallelism = default_parallel;

    auto* pair = verify->add_subcommand("pair", "D^(2)D^(1,1) on a pair of hook sequences");
    {
        static std::string alpha_text = "0,0";
        static std::string l1 = "-", l2 = "-";
        static int n_max = -1;
        static int alpha_max = -1, lambda_max = -1;
        static Output out;
        pair->add_option("--alpha", alpha_text, "alpha1,alpha2 (sorted nonincreasing)");
        pair->add_option("--lambda1", l1, "First hook partition, \"-\" for empty");
        pair->add_option("--lambda2", l2, "Second hook partition");
        pair->add_option("--n-max", n_max, "Largest index to evaluate");
        pair->add_option("--window", window, "Minimality window width");
        pair->add_option("--grid-alpha-max", alpha_max, "Run the whole grid with alpha1 <= this");
        pair->add_option("--grid-lambda-max", lambda_max, "Grid |lambda_i| bound");
        pair->add_option("--parallel", parallelism, "Worker threads for grid runs");
        add_output_flags(pair, out);
        pair->callback([&]() {
            runner = []() {
                std::vector<std::function<ClaimReport()>> cells;
                if (alpha_max >= 0 || lambda_max >= 0) {
                    int amax = std::max(alpha_max, 0), lmax = std::max(lambda_max, 0);
                    auto lams = partitions_up_to_weight(lmax);
                    for (int a1 = amax; a1 >= 0; --a1)
                        for (int a2 = a1; a2 >= 0; --a2)
                            for (const auto& p1 : lams)
                                for (const auto& p2 : lams)
                                    cells.push_back([=]() {
                                        long long bound =
                                            p1.weight() + p2.weight() + 1 - a2;
                                        int nm = n_max > 0
                                                     ? n_max
                                                     : static_cast<int>(
                                                           std::max<long long>(bound, 0)) + 10;
                                        return check_pair_theorem(a1, a2, p1, p2, nm, window);
                                    });
                } else {
                    auto alpha = parse_int_list(alpha_text);
                    if (alpha.size() != 2) fail(errc::parse, "pair needs two alpha entries");
                    Partition p1 = parse_partition_arg(l1), p2 = parse_partition_arg(l2);
                    int nm = n_max > 0 ? n_max
                                       : static_cast<int>(std::max<long long>(
                                             p1.weight() + p2.weight() + 1 - alpha[1], 0)) + 10;
                    cells.push_back(
                        [=]() { return check_pair_theorem(alpha[0], alpha[1], p1, p2, nm, window); });
                }
                return emit_reports(run_cells(std::move(cells), parallelism), out);
            };
        });
    }

    auto* triple = verify->add_subcommand("triple", "The four-operator triple product check");
    {
        static std::string alpha_text = "0,0,0";
        static std::string l1 = "-", l2 = "-", l3 = "-";
        static int n_max = -1;
        static int alpha_max = -1, lambda_max = -1;
        static Output out;
        triple->add_option("--alpha", alpha_text, "alpha1,alpha2,alpha3");
        triple->add_option("--lambda1", l1, "First hook partition");
        triple->add_option("--lambda2", l2, "Second hook partition");
        triple->add_option("--lambda3", l3, "Third hook partition");
        triple->add_option("--n-max", n_max, "Largest index to evaluate");
        triple->add_option("--window", window, "Minimality window width");
        triple->add_option("--grid-alpha-max", alpha_max, "Run the whole grid with alpha1 <= this");
        triple->add_option("--grid-lambda-max", lambda_max, "Grid |lambda_i| bound");
        triple->add_option("--parallel", parallelism, "Worker threads for grid runs");
        add_output_flags(triple, out);
        triple->callback([&]() {
            runner = []() {
                auto bound_of = [](int a1, int a2, int a3, const Partition& p1,
                                   const Partition& p2, const Partition& p3) {
                    long long thm = std::max<long long>(4, a1 - a2 + p1.length()) +
                                    2 * (p1.weight() + p2.weight() + p3.weight() + 1) - a3;
                    return std::max(thm, std::max<long long>(4, a1 - a2 + 2));
                };
                std::vector<std::function<ClaimReport()>> cells;
                if (alpha_max >= 0 || lambda_max >= 0) {
                    int amax = std::max(alpha_max, 0), lmax = std::max(lambda_max, 0);
                    auto lams = partitions_up_to_weight(lmax);
                    for (int a1 = amax; a1 >= 0; --a1)
                        for (int a2 = a1; a2 >= 0; --a2)
                            for (int a3 = a2; a3 >= 0; --a3)
                                for (const auto& p1 : lams)
                                    for (const auto& p2 : lams)
                                        for (const auto& p3 : lams)
                                            cells.push_back([=]() {
                                                int nm = n_max > 0
                                                             ? n_max
                                                             : static_cast<int>(bound_of(
                                                                   a1, a2, a3, p1, p2, p3)) + 10;
                                                return check_triple_theorem(a1, a2, a3, p1, p2,
                                                                            p3, nm, window);
                                            });
                } else {
                    auto alpha = parse_int_list(alpha_text);
                    if (alpha.size() != 3) fail(errc::parse, "triple needs three alpha entries");
                    Partition p1 = parse_partition_arg(l1), p2 = parse_partition_arg(l2),
                              p3 = parse_partition_arg(l3);
                    int nm = n_max > 0 ? n_max
                                       : static_cast<int>(
                                             bound_of(alpha[0], alpha[1], alpha[2], p1, p2, p3)) +
                                             10;
                    cells.push_back([=]() {
                        return check_triple_theorem(alpha[0], alpha[1], alpha[2], p1, p2, p3, nm,
                                                    window);
                    });
                }
                return emit_reports(run_cells(std::move(cells), parallelism), out);
            };
        });
    }

    auto* corollary = verify->add_subcommand("corollary",
                                             "Products of stabilizing slope-1 sequences");
    {
        static std::vector<std::string> factor_specs;
        static int n_max = 20;
        static Output out;
        corollary->add_option("--factor", factor_specs,
                              "Factor, e.g. \"0|(2,1)\" or \"0|(-)+(-1)|(1);N=2\" (repeat 2-3x)")
            ->required()
            ->expected(2, 3);
        corollary->add_option("--n-max", n_max, "Largest index to evaluate");
        corollary->add_option("--window", window, "Minimality window width");
        add_output_flags(corollary, out);
        corollary->callback([&]() {
            runner = []() {
                std::vector<StabilizingInput> inputs;
                for (const auto& spec : factor_specs) {
                    std::string body = spec;
                    std::optional<int> declared;
                    auto semi = body.find(';');
                    if (semi != std::string::npos) {
                        std::string tail = body.substr(semi + 1);
                        body = body.substr(0, semi);
                        if (tail.rfind("N=", 0) != 0)
                            fail(errc::parse, "factor suffix must be N=<int>");
                        declared = std::stoi(tail.substr(2));
                    }
                    std::vector<HookSummand> summands;
                    std::size_t pos = 0;
                    while (pos <= body.size()) {
                        auto plus = body.find('+', pos);
                        std::string term = body.substr(
                            pos, plus == std::string::npos ? std::string::npos : plus - pos);
                        auto bar = term.find('|');
                        if (bar == std::string::npos)
                            fail(errc::parse, "factor term \"" + term + "\" needs offset|(parts)");
                        std::string off = term.substr(0, bar);
                        if (!off.empty() && off.front() == '(' && off.back() == ')')
                            off = off.substr(1, off.size() - 2);
                        int offset = std::stoi(off);
                        if (offset < 0)
                            fail(errc::unsupported,
                                 "corollary factors are restricted to offsets >= 0");
                        summands.push_back(
                            HookSummand{1, offset, parse_partition_arg(term.substr(bar + 1))});
                        if (plus == std::string::npos) break;
                        pos = plus + 1;
                    }
                    SequenceFamily fam = hook_sum_family(std::move(summands));
                    int n_detect = std::max(fam.floor() + window + 4, 12);
                    auto detected = detect_stabilization(fam, n_detect);
                    int stab = declared ? *declared : (detected ? *detected : n_detect);
                    inputs.push_back(StabilizingInput{std::move(fam), stab});
                }
                std::vector<ClaimReport> reports{check_corollary(inputs, n_max, window)};
                return emit_reports(reports, out);
            };
        });
    }

    auto make_conjecture_runner = [&](auto* cmd) {
        static std::string alpha_text = "0,0,0,0";
        static std::vector<std::string> lambda_texts;
        static int n_max = 12;
        static bool no_minimality = false;
        static Output out;
        cmd->add_option("--alpha", alpha_text, "alpha1..alpha4 (sorted nonincreasing)");
        cmd->add_option("--lambdas", lambda_texts, "Four hook partitions")->expected(4);
        cmd->add_option("--n-max", n_max, "Largest index to evaluate");
        cmd->add_option("--window", window, "Removal window width");
        cmd->add_flag("--no-minimality", no_minimality, "Skip the single-removal windows");
        add_output_flags(cmd, out);
        cmd->callback([&]() {
            runner = []() {
                auto alpha = parse_int_list(alpha_text);
                if (alpha.size() != 4) fail(errc::parse, "the conjecture needs four alpha entries");
                std::optional<std::array<Partition, 4>> lambdas;
                if (!lambda_texts.empty()) {
                    std::array<Partition, 4> arr;
                    for (int i = 0; i < 4; ++i) arr[static_cast<std::size_t>(i)] =
                        parse_partition_arg(lambda_texts[static_cast<std::size_t>(i)]);
                    lambdas = arr;
                }
                std::vector<ClaimReport> reports{
                    explore_conjecture({alpha[0], alpha[1], alpha[2], alpha[3]}, lambdas, n_max,
                                       window, !no_minimality)};
                return emit_reports(reports, out);
            };
        });
    };
    make_conjecture_runner(verify->add_subcommand("conjecture",
                                                  "Fourfold-product conjecture explorer"));
    make_conjecture_runner(app.add_subcommand("explore-conjecture",
                                              "Fourfold-product conjecture explorer"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return runner();
    } catch (const error& e) {
        switch (e.code()) {
            case errc::parse:
            case errc::unsorted_alpha:
            case errc::face_not_defined_for_k:
            case errc::unsupported:
                std::cerr << "usage error: " << e.what() << "\n";
                return 2;
            default: {
                ordered_json j;
                j["verdict"] = "fail";
                j["error"] = e.what();
                std::cout << j.dump(2) << "\n";
                return 1;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
}

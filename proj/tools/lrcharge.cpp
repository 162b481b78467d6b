// lrcharge: Poincare polynomials, LR tableaux with charge, cocyclage posets
// and verification suites from the command line.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure, 3 bound exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <stdexcept>
#include <string>

#include "lrc/core.hpp"
#include "lrc/cyclage.hpp"
#include "lrc/lr.hpp"
#include "lrc/poincare.hpp"
#include "verify.hpp"

namespace {

using namespace lrc;
using nlohmann::json;

constexpr int kUsage = 1;
constexpr int kVerifyFailed = 2;
constexpr int kBoundExceeded = 3;

struct BoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Limits {
    int max_n = kMaxAlphabet;
    int max_cells = 24;
};

Partition parse_shape(const std::string& text) {
    std::vector<int> parts;
    std::string item;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (!item.empty()) parts.push_back(std::stoi(item));
            item.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("bad shape: " + text);
            item += ch;
        }
    }
    return Partition(parts);
}

void enforce(const RectSequence& r, const Limits& lim) {
    if (r.n() > lim.max_n) throw BoundError("n = " + std::to_string(r.n()) + " exceeds --max-n");
    if (r.total_cells() > lim.max_cells) throw BoundError("N = " + std::to_string(r.total_cells()) + " exceeds --max-cells");
}

json coeffs_json(const QPolynomial& p) { return json(p.coeffs()); }

int cmd_kpoly(const std::string& rects, const std::string& shape, const std::string& format, const Limits& lim) {
    RectSequence r = RectSequence::parse(rects);
    enforce(r, lim);
    if (r.n() > kMaxAlphabet) throw BoundError("n exceeds the supported alphabet size");
    QPolynomial k = k_poly(parse_shape(shape), r);
    if (format == "json")
        std::cout << coeffs_json(k).dump() << "\n";
    else
        std::cout << k.to_string() << "\n";
    return 0;
}

int cmd_lrt(const std::string& rects, const std::string& shape, bool sum, const std::string& format, const Limits& lim) {
    RectSequence r = RectSequence::parse(rects);
    enforce(r, lim);
    Partition lambda = parse_shape(shape);
    struct Entry {
        long charge;
        Word word;
        Tableau tableau;
    };
    std::vector<Entry> entries;
    for (const Tableau& t : enumerate_lrt(lambda, r)) entries.push_back({charge_explicit(t, r).value, row_reading_word(t), t});
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.charge, a.word) < std::tie(b.charge, b.word);
    });

    if (sum) {
        QPolynomial total;
        for (const Entry& e : entries) total += QPolynomial::monomial(static_cast<int>(e.charge));
        if (format == "json")
            std::cout << coeffs_json(total).dump() << "\n";
        else
            std::cout << total.to_string() << "\n";
        if (r.n() <= kMaxAlphabet && total != k_poly(lambda, r)) {
            std::cerr << "charge generating function differs from K = " << k_poly(lambda, r).to_string() << "\n";
            return kVerifyFailed;
        }
        return 0;
    }
    if (format == "json") {
        json out = json::array();
        for (const Entry& e : entries)
            out.push_back({{"word", format_word(e.word)}, {"charge", e.charge}, {"rows", e.tableau.rows()}});
        std::cout << out.dump() << "\n";
    } else {
        for (const Entry& e : entries) std::cout << e.charge << "\t" << format_word(e.word) << "\n";
    }
    return 0;
}

int cmd_poset(const std::string& rects, const std::vector<std::string>& shapes, const std::string& format,
              const Limits& lim) {
    RectSequence r = RectSequence::parse(rects);
    enforce(r, lim);
    std::vector<Partition> ps;
    for (const std::string& s : shapes) ps.push_back(parse_shape(s));
    CocyclagePoset poset = build_poset(r, ps);
    std::cout << (format == "json" ? poset_to_json(poset) + "\n" : poset_to_dot(poset));
    return 0;
}

int cmd_verify(const std::string& suite, const verify::Bounds& bounds) {
    const auto& names = verify::suite_names();
    std::vector<std::string> run = suite == "all" ? names : std::vector<std::string>{suite};
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
        throw std::invalid_argument("unknown suite: " + suite);
    bool ok = true;
    for (const std::string& name : run) {
        verify::Result res = verify::run_suite(name, bounds);
        std::cout << verify::summary(res) << "\n";
        ok = ok && res.passed();
    }
    return ok ? 0 : kVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"LR tableaux, generalized charge and Poincare polynomials"};
    app.require_subcommand(1);

    std::string rects, shape, format = "text";
    std::vector<std::string> shapes;
    bool sum = false;
    Limits lim;
    verify::Bounds bounds;
    std::string suite;

    auto add_limits = [&](CLI::App* cmd) {
        cmd->add_option("--max-n", lim.max_n, "Largest alphabet size accepted")->capture_default_str();
        cmd->add_option("--max-cells", lim.max_cells, "Largest number of cells accepted")->capture_default_str();
    };

    CLI::App* kpoly = app.add_subcommand("kpoly", "Print K_{lambda;R}(q)");
    kpoly->add_option("--rects", rects, "Rectangles, e.g. 3x2,2x2,1x3")->required();
    kpoly->add_option("--shape", shape, "Partition, e.g. 6,4,2,1")->required();
    kpoly->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    add_limits(kpoly);

    CLI::App* lrt = app.add_subcommand("lrt", "List LR tableaux by charge");
    lrt->add_option("--rects", rects)->required();
    lrt->add_option("--shape", shape)->required();
    lrt->add_flag("--sum", sum, "Print the charge generating function instead");
    lrt->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    add_limits(lrt);

    CLI::App* poset = app.add_subcommand("poset", "Export the cocyclage poset");
    poset->add_option("--rects", rects)->required();
    poset->add_option("--shape", shapes, "Restrict to shapes (repeatable); the poset is closed downward");
    std::string poset_format = "dot";
    poset->add_option("--format", poset_format)->check(CLI::IsMember({"dot", "json"}));
    add_limits(poset);

    CLI::App* ver = app.add_subcommand("verify", "Run a verification suite");
    ver->add_option("suite", suite, "Suite name or 'all'")->required();
    ver->add_option("--t", bounds.max_t, "Largest number of rectangles")->capture_default_str();
    ver->add_option("--max-n", bounds.max_n, "Largest alphabet size")->capture_default_str();
    ver->add_option("--max-cells", bounds.max_cells, "Largest number of cells")->capture_default_str();
    ver->add_option("--seed", bounds.seed, "Seed for sampled suites")->capture_default_str();
    ver->add_option("--samples", bounds.samples, "Sampled words per rectangle sequence")->capture_default_str();
    ver->add_option("--jobs", bounds.jobs, "Worker threads")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*kpoly) return cmd_kpoly(rects, shape, format, lim);
        if (*lrt) return cmd_lrt(rects, shape, sum, format, lim);
        if (*poset) return cmd_poset(rects, shapes, poset_format, lim);
        if (*ver) return cmd_verify(suite, bounds);
    } catch (const BoundError& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return kBoundExceeded;
    } catch (const std::length_error& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return kBoundExceeded;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

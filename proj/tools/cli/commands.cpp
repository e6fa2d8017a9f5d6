#include "commands.hpp"

#include "knightpaths/knightpaths.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace knightpaths::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr long list_cap_size = 24;
constexpr long list_cap_length = 18;
constexpr long brute_cap = 16;

const std::map<std::string, PathClass> class_names{{"knight", PathClass::Knight}, {"zigzag", PathClass::Zigzag}};
const std::map<std::string, Measure> measure_names{{"size", Measure::Size}, {"length", Measure::Length}};

/// Thrown for invalid flag values or combinations that CLI11 cannot express.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

// count ----------------------------------------------------------------------

struct CountFlags {
    std::string cls, measure, method = "dp";
    long value = 0, height = 0;
    bool force = false;
};

bool has_closed_form(PathClass cls, Measure m, long k) {
    return cls == PathClass::Zigzag || (m == Measure::Length && k == 0);
}

BigInt closed_count(PathClass cls, Measure m, long n, long k) {
    if (cls == PathClass::Zigzag) return closed::zigzag_coeff(m == Measure::Size, n, k);
    return closed::e_n(n);
}

BigInt brute_count(PathClass cls, Measure m, long n, long k) {
    BigInt count = 0;
    for_each_partial(cls, m, n, [&](std::span<const Step>, long value, long height) {
        if (value == n && height == k) ++count;
    });
    return count;
}

int cmd_count(const CountFlags& f, std::ostream& out, std::ostream& err) {
    const PathClass cls = class_names.at(f.cls);
    const Measure m = measure_names.at(f.measure);
    if (f.value < 0 || f.height < 0) throw usage_error("--value and --height must be >= 0");

    std::vector<std::pair<std::string, BigInt>> results;
    const bool all = f.method == "all";
    if (f.method == "dp" || all) results.emplace_back("dp", build_table(cls, m, f.value).total(f.value, f.height));
    if (f.method == "closed" || all) {
        if (has_closed_form(cls, m, f.height)) results.emplace_back("closed", closed_count(cls, m, f.value, f.height));
        else if (!all) throw usage_error("no closed form for " + f.cls + "/" + f.measure + " at height " + std::to_string(f.height));
    }
    if (f.method == "brute" || all) {
        if (f.value <= brute_cap || f.force) results.emplace_back("brute", brute_count(cls, m, f.value, f.height));
        else if (!all)
            throw error(errc::cap_exceeded, "brute force is capped at value " + std::to_string(brute_cap) + " (use --force)");
    }

    json rec;
    rec["class"] = f.cls;
    rec["measure"] = f.measure;
    rec["n"] = f.value;
    rec["k"] = f.height;
    rec["count"] = to_string(results.front().second);
    rec["method"] = f.method;
    if (all) {
        json engines = json::object();
        for (const auto& [name, c] : results) engines[name] = to_string(c);
        rec["engines"] = engines;
    }
    for (const auto& [name, c] : results) {
        if (c != results.front().second) {
            err << "engines disagree: " << rec.dump() << "\n";
            return engine_disagreement;
        }
    }
    out << rec.dump() << "\n";
    return ok;
}

// list -----------------------------------------------------------------------

struct ListFlags {
    std::string cls, measure, format = "words";
    long value = 0, height = 0;
    bool force = false;
};

int cmd_list(const ListFlags& f, std::ostream& out) {
    const PathClass cls = class_names.at(f.cls);
    const Measure m = measure_names.at(f.measure);
    if (f.value < 0 || f.height < 0) throw usage_error("--value and --height must be >= 0");
    const long cap = m == Measure::Size ? list_cap_size : list_cap_length;
    if (f.value > cap && !f.force)
        throw error(errc::cap_exceeded, f.measure + " " + std::to_string(f.value) + " exceeds the listing cap " +
                                            std::to_string(cap) + " (use --force)");
    for_each_partial(cls, m, f.value, [&](std::span<const Step> steps, long value, long height) {
        if (value != f.value || height != f.height) return;
        const PathWord w(std::vector<Step>(steps.begin(), steps.end()));
        if (f.format == "json") {
            json rec;
            rec["word"] = render_word(w);
            rec["size"] = w.size();
            rec["length"] = w.length();
            rec["height"] = w.final_height();
            out << rec.dump() << "\n";
        } else {
            out << render_word(w) << "\n";
        }
    });
    return ok;
}

// series ---------------------------------------------------------------------

struct SeriesFlags {
    std::string gf, cls, format = "text";
    int order = 10;
};

TruncSeries sequence_series(const std::vector<BigInt>& terms, int order) {
    TruncSeries s(order);
    for (int i = 0; i <= order; ++i) s[i] = Rational(terms[static_cast<std::size_t>(i)]);
    return s;
}

TruncSeries build_series(const SeriesFlags& f) {
    const bool takes_class = f.gf.rfind("axis-", 0) == 0 || f.gf.rfind("total-", 0) == 0;
    if (!takes_class && !f.cls.empty()) throw usage_error("--class does not apply to --gf " + f.gf);
    if (f.order < 0) throw usage_error("--order must be >= 0");
    const int N = f.order;
    if (f.gf == "A") return kernel::series_A(N);
    if (f.gf == "A1") return kernel::series_A1(N);
    if (f.gf == "E") return kernel::series_E(N);
    if (f.gf == "r-size") return kernel::r_size(N);
    if (f.gf == "r-length") return kernel::r_length(N);

    const PathClass cls = class_names.at(f.cls.empty() ? "zigzag" : f.cls);
    const Measure m = f.gf.find("size") != std::string::npos ? Measure::Size : Measure::Length;
    const auto table = build_table(cls, m, N);
    if (f.gf.rfind("axis-", 0) == 0) return sequence_series(axis_sequence(table, N), N);
    std::vector<BigInt> totals;
    for (int n = 0; n <= N; ++n) totals.push_back(count_total_over_heights(table, n));
    return sequence_series(totals, N);
}

int cmd_series(const SeriesFlags& f, std::ostream& out) {
    const auto s = build_series(f);
    if (f.format == "json") {
        json rec;
        rec["gf"] = f.gf;
        if (f.gf.rfind("axis-", 0) == 0 || f.gf.rfind("total-", 0) == 0)
            rec["class"] = f.cls.empty() ? "zigzag" : f.cls;
        rec["order"] = f.order;
        rec["coefficients"] = coefficient_strings(s);
        out << rec.dump() << "\n";
    } else {
        out << to_string(s) << "\n";
    }
    return ok;
}

// map ------------------------------------------------------------------------

int cmd_map(const std::string& bijection, const std::string& word, std::ostream& out) {
    if (bijection == "psi") out << render_lattice_word(psi(parse_word(word))) << "\n";
    else if (bijection == "phi") out << render_lattice_word(phi(parse_word(word))) << "\n";
    else if (bijection == "psi-inv") out << render_word(psi_inv(parse_lattice_word(word, Alphabet::Motzkin))) << "\n";
    else out << render_word(phi_inv(parse_lattice_word(word, Alphabet::Dyck))) << "\n";
    return ok;
}

// verify ---------------------------------------------------------------------

Transition parse_transition(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon != 1) throw usage_error("--drop-transition expects STEP:PREV, e.g. N:up");
    Step step;
    switch (text[0]) {
        case 'N': step = Step::N; break;
        case 'n': step = Step::NBar; break;
        case 'E': step = Step::E; break;
        case 'e': step = Step::EBar; break;
        default: throw usage_error(std::string("unknown step '") + text[0] + "'");
    }
    const std::string prev = lower(text.substr(colon + 1));
    if (prev == "start") return {step, Prev::Start};
    if (prev == "up") return {step, Prev::Up};
    if (prev == "down") return {step, Prev::Down};
    throw usage_error("unknown previous direction '" + prev + "' (start, up, down)");
}

int cmd_verify(const std::string& suite, long max, const std::string& drop, std::ostream& out) {
    if (max < 0) throw usage_error("--max must be >= 0");
    verify::Options opt;
    opt.max = max;
    if (!drop.empty()) {
        opt.dropped = parse_transition(drop);
        if (!fires(*opt.dropped)) throw usage_error("transition " + drop + " never fires; nothing to drop");
    }

    std::vector<verify::Suite> suites;
    if (suite == "all") suites.assign(verify::all_suites.begin(), verify::all_suites.end());
    else if (suite == "oracle") suites = {verify::Suite::Oracle};
    else if (suite == "closed") suites = {verify::Suite::Closed};
    else if (suite == "series") suites = {verify::Suite::Series};
    else suites = {verify::Suite::Bijections};

    const auto reports = verify::run_suites(suites, opt);
    const verify::CheckResult* first_failure = nullptr;
    std::size_t passed = 0, total = 0;
    for (const auto& rep : reports) {
        for (const auto& c : rep.checks) {
            ++total;
            if (c.passed) ++passed;
            else if (!first_failure) first_failure = &c;
            out << (c.passed ? "PASS" : "FAIL") << "  " << std::left << std::setw(11) << to_string(rep.suite) << "  "
                << std::setw(52) << c.name << std::right << std::fixed << std::setprecision(3) << std::setw(8)
                << c.seconds << "s\n";
            if (!c.passed) out << "      counterexample: " << c.counterexample << "\n";
        }
    }
    out << passed << "/" << total << " checks passed\n";
    if (first_failure) {
        out << "first counterexample: " << first_failure->name << ": " << first_failure->counterexample << "\n";
        return check_failed;
    }
    return ok;
}

// oeis -----------------------------------------------------------------------

struct OeisFlags {
    std::string id, cache_dir;
    long max_terms = 20;
    bool offline = false, fetch = false;
};

int cmd_oeis(const OeisFlags& f, std::ostream& out, std::ostream& err) {
    if (!oeis::first_computed_index(f.id)) throw usage_error("unknown sequence id " + f.id);
    if (f.max_terms <= 0) throw usage_error("--max-terms must be > 0");

    oeis::SequenceFixture fixture;
    if (f.fetch) {
        const auto dir = resolve_cache_dir(f.cache_dir);
        const auto file = dir / (f.id + ".bfile");
        std::string text;
        if (std::ifstream in(file); in) {
            std::ostringstream buf;
            buf << in.rdbuf();
            text = buf.str();
        } else {
            const char* base = std::getenv("KNIGHTPATHS_OEIS_BASE_URL");
            std::string why;
            const auto body = download_bfile(base && *base ? base : "https://oeis.org", f.id, why);
            if (!body) {
                err << "fetch failed: " << why << "\n";
                return fetch_failed;
            }
            text = *body;
            std::error_code ec;
            std::filesystem::create_directories(dir, ec);
            std::ofstream(file) << text;
        }
        try {
            fixture = oeis::parse_bfile(f.id, text);
        } catch (const error& e) {
            err << "fetch failed: " << file.string() << ": " << e.what() << "\n";
            return fetch_failed;
        }
    } else {
        fixture = *oeis::find_embedded(f.id);
    }

    const auto cmp = oeis::compare(fixture, f.max_terms);
    const char* source = fixture.source == oeis::Source::Embedded ? "embedded" : "fetched";
    if (cmp.mismatch) {
        out << "FAIL " << f.id << " (" << source << "): index " << cmp.mismatch->index << " expected "
            << cmp.mismatch->expected << ", computed " << cmp.mismatch->actual << "\n";
        return check_failed;
    }
    if (cmp.compared == 0) {
        out << "FAIL " << f.id << " (" << source << "): no overlapping terms\n";
        return check_failed;
    }
    out << "PASS " << f.id << " (" << source << "): " << cmp.compared << " terms match from index " << cmp.first_index
        << "\n";
    return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact enumeration of knight's paths and zigzag knight's paths", "knightpaths"};
    app.require_subcommand(1);

    const auto choice = [](const std::vector<std::string>& names) { return CLI::IsMember(names); };
    const std::vector<std::string> classes{"knight", "zigzag"}, measures{"size", "length"};

    CountFlags cf;
    auto* count = app.add_subcommand("count", "Count partial paths of a given value ending at a given height");
    count->add_option("--class", cf.cls, "knight | zigzag")->required()->check(choice(classes));
    count->add_option("--measure", cf.measure, "size | length")->required()->check(choice(measures));
    count->add_option("--value", cf.value, "Size or length")->required();
    count->add_option("--height", cf.height, "Ending height")->required();
    count->add_option("--method", cf.method, "dp | closed | brute | all")
        ->check(choice({"dp", "closed", "brute", "all"}))
        ->capture_default_str();
    count->add_flag("--force", cf.force, "Run brute force past its cap");

    ListFlags lf;
    auto* list = app.add_subcommand("list", "List partial paths in lexicographic order");
    list->add_option("--class", lf.cls, "knight | zigzag")->required()->check(choice(classes));
    list->add_option("--measure", lf.measure, "size | length")->required()->check(choice(measures));
    list->add_option("--value", lf.value, "Size or length")->required();
    list->add_option("--height", lf.height, "Ending height")->required();
    list->add_option("--format", lf.format, "words | json")->check(choice({"words", "json"}))->capture_default_str();
    list->add_flag("--force", lf.force, "Ignore the output cap");

    SeriesFlags sf;
    auto* series = app.add_subcommand("series", "Print a truncated generating function");
    series->add_option("--gf", sf.gf, "A | A1 | E | r-size | r-length | axis-size | axis-length | total-size | total-length")
        ->required()
        ->check(choice({"A", "A1", "E", "r-size", "r-length", "axis-size", "axis-length", "total-size", "total-length"}));
    series->add_option("--order", sf.order, "Highest power of z")->capture_default_str();
    series->add_option("--class", sf.cls, "knight | zigzag (axis-* and total-* only; default zigzag)")
        ->check(choice(classes));
    series->add_option("--format", sf.format, "text | json")->check(choice({"text", "json"}))->capture_default_str();

    std::string bijection, word;
    auto* map = app.add_subcommand("map", "Apply a bijection or its inverse to a word");
    map->add_option("--bijection", bijection, "psi | psi-inv | phi | phi-inv")
        ->required()
        ->check(choice({"psi", "psi-inv", "phi", "phi-inv"}));
    map->add_option("--word", word, "Input word")->required();

    std::string suite = "all", drop;
    long max = 10;
    auto* ver = app.add_subcommand("verify", "Run cross-checking suites");
    ver->add_option("--suite", suite, "oracle | closed | series | bijections | all")
        ->check(choice({"oracle", "closed", "series", "bijections", "all"}))
        ->capture_default_str();
    ver->add_option("--max", max, "Exhaustive bound for brute-force and bijection checks")->capture_default_str();
    ver->add_option("--drop-transition", drop, "Remove one DP transition STEP:PREV (mutation testing)")->group("");

    OeisFlags of;
    auto* oe = app.add_subcommand("oeis", "Compare a computed sequence with OEIS terms");
    oe->add_option("--id", of.id, "Sequence id, e.g. A004148")->required();
    oe->add_option("--max-terms", of.max_terms, "Number of terms to compare")->capture_default_str();
    auto* off = oe->add_flag("--offline", of.offline, "Use the embedded fixture (default)");
    auto* fe = oe->add_flag("--fetch", of.fetch, "Use the OEIS b-file, downloading it into the cache if needed");
    off->excludes(fe);
    oe->add_option("--cache-dir", of.cache_dir, "b-file cache (default $KNIGHTPATHS_OEIS_CACHE or ./oeis-cache)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return bad_input;
    }

    try {
        if (*count) return cmd_count(cf, out, err);
        if (*list) return cmd_list(lf, out);
        if (*series) return cmd_series(sf, out);
        if (*map) return cmd_map(bijection, word, out);
        if (*ver) return cmd_verify(suite, max, drop, out);
        if (*oe) return cmd_oeis(of, out, err);
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    }
    return bad_input;
}

}  // namespace knightpaths::cli

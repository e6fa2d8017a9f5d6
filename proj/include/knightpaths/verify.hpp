#pragma once

/**
 * Self-verification suites. Each suite cross-checks two independent routes
 * (DP vs brute force, DP vs closed forms, DP vs series identities, bijection vs
 * independently generated codomain) and records the first counterexample.
 *
 * Suites share nothing mutable and may run concurrently.
 */

#include "knightpaths/bijections.hpp"
#include "knightpaths/closed_forms.hpp"
#include "knightpaths/counting.hpp"
#include "knightpaths/kernel.hpp"
#include "knightpaths/paths.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace knightpaths::verify {

enum class Suite { Oracle, Closed, Series, Bijections };

inline std::string_view to_string(Suite s) {
    switch (s) {
        case Suite::Oracle: return "oracle";
        case Suite::Closed: return "closed";
        case Suite::Series: return "series";
        case Suite::Bijections: return "bijections";
    }
    return "?";
}

struct Options {
    /// Measure bound for DP-vs-brute-force and bijection certification.
    long max = 10;
    int closed_max_power = 30;
    int closed_max_height = 12;
    int en_max = 20;
    int quartic_order = 30;
    int bivariate_u_degree = 12;
    int bivariate_order = 24;
    int knight_u_degree = 10;
    int knight_order = 20;
    int column_max_height = 10;
    int column_order = 30;
    int basketball_order = 40;
    /// Transition removed from every DP table the suites build (mutation testing).
    std::optional<Transition> dropped;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string counterexample;
    double seconds = 0;
};

struct SuiteReport {
    Suite suite;
    std::vector<CheckResult> checks;
    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }
};

namespace detail {

/// Runs `body`, which returns an empty string on success or a counterexample.
inline void run_check(SuiteReport& report, std::string name, const std::function<std::string()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r{std::move(name)};
    try {
        r.counterexample = body();
    } catch (const std::exception& e) {
        r.counterexample = std::string("exception: ") + e.what();
    }
    r.passed = r.counterexample.empty();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.checks.push_back(std::move(r));
}

inline std::string label(PathClass c, Measure m) { return std::string(to_string(c)) + "/" + std::string(to_string(m)); }

inline std::string describe(const kernel::Mismatch& m) {
    std::ostringstream os;
    os << m.family << " u^" << m.u_power << " z^" << m.z_power << ": expected " << m.expected << ", got " << m.actual;
    return os.str();
}

inline std::string describe(const kernel::IdentityCheck& c) { return c.ok() ? "" : c.name + ": " + describe(*c.mismatch); }

/// True if a word at `height` whose last step had direction `last_up` can be
/// continued down to the axis. Breadth-first over (height, last direction).
inline bool completable(PathClass cls, long height, std::optional<bool> last_up) {
    std::set<std::pair<long, int>> seen;
    std::vector<std::pair<long, int>> frontier{{height, last_up ? int(*last_up) : 2}};
    while (!frontier.empty()) {
        const auto [h, dir] = frontier.back();
        frontier.pop_back();
        if (h == 0) return true;
        if (!seen.insert({h, dir}).second) continue;
        for (Step s : all_steps) {
            if (cls == PathClass::Zigzag && dir != 2 && bool(dir) == is_up(s)) continue;
            const long nh = h + dy(s);
            if (nh < 0 || nh > height + 4) continue;
            frontier.push_back({nh, int(is_up(s))});
        }
    }
    return false;
}

}  // namespace detail

// Oracle --------------------------------------------------------------------

inline SuiteReport run_oracle(const Options& opt) {
    SuiteReport rep{Suite::Oracle, {}};
    const long N = opt.max;
    for (PathClass cls : {PathClass::Knight, PathClass::Zigzag}) {
        for (Measure m : {Measure::Size, Measure::Length}) {
            const std::string tag = detail::label(cls, m);
            detail::run_check(rep, "dp = brute force " + tag, [&]() -> std::string {
                const auto table = build_table(cls, m, N, Floor::NonNegative, opt.dropped);
                std::map<std::pair<long, long>, BigInt> brute;
                for_each_partial(cls, m, N, [&](std::span<const Step>, long v, long h) { brute[{v, h}] += 1; });
                for (long n = 0; n <= N; ++n)
                    for (long k = 0; k <= 2 * N; ++k) {
                        const auto it = brute.find({n, k});
                        const BigInt b = it == brute.end() ? BigInt(0) : it->second;
                        if (table.total(n, k) != b)
                            return tag + " n=" + std::to_string(n) + " k=" + std::to_string(k) + ": dp " +
                                   table.total(n, k).str() + ", brute " + b.str();
                    }
                return "";
            });
            detail::run_check(rep, "recurrences " + tag, [&]() -> std::string {
                const auto table = build_table(cls, m, N, Floor::NonNegative, opt.dropped);
                if (auto v = check_recurrences(table))
                    return tag + (v->up_family ? " f" : " g") + " n=" + std::to_string(v->n) + " k=" +
                           std::to_string(v->k) + ": recurrence " + v->expected.str() + ", table " + v->actual.str();
                return "";
            });
            detail::run_check(rep, "every prefix completes " + tag, [&]() -> std::string {
                std::string bad;
                for_each_partial(cls, m, std::min<long>(N, 12), [&](std::span<const Step> s, long, long h) {
                    if (!bad.empty()) return;
                    const std::optional<bool> last = s.empty() ? std::nullopt : std::optional<bool>(is_up(s.back()));
                    if (!detail::completable(cls, h, last)) bad = render_word(PathWord(std::vector<Step>(s.begin(), s.end())));
                });
                return bad.empty() ? "" : tag + " prefix " + bad + " cannot reach the axis";
            });
        }
    }
    detail::run_check(rep, "positive floor dp = brute force knight/length", [&]() -> std::string {
        const auto table = build_table(PathClass::Knight, Measure::Length, N, Floor::Positive, opt.dropped);
        std::map<std::pair<long, long>, BigInt> brute;
        // Walk the unrestricted tree and keep words that never revisit height 0.
        for_each_partial(PathClass::Knight, Measure::Length, N, [&](std::span<const Step> s, long v, long h) {
            long level = 0;
            for (Step st : s) {
                level += dy(st);
                if (level <= 0) return;
            }
            brute[{v, h}] += 1;
        });
        for (long n = 0; n <= N; ++n)
            for (long k = 0; k <= 2 * N; ++k) {
                const auto it = brute.find({n, k});
                const BigInt b = it == brute.end() ? BigInt(0) : it->second;
                if (table.total(n, k) != b)
                    return "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": dp " + table.total(n, k).str() +
                           ", brute " + b.str();
            }
        return "";
    });
    detail::run_check(rep, "zigzag axis words have even measure", [&]() -> std::string {
        for (Measure m : {Measure::Size, Measure::Length})
            for (long n = 1; n <= N; n += 2)
                if (!enumerate_partial(PathClass::Zigzag, m, n, 0).empty())
                    return std::string(to_string(m)) + " " + std::to_string(n) + " has axis words";
        return "";
    });
    detail::run_check(rep, "enumeration strictly lexicographic", [&]() -> std::string {
        for (PathClass cls : {PathClass::Knight, PathClass::Zigzag})
            for (long k = 0; k <= 4; ++k) {
                const auto words = enumerate_partial(cls, Measure::Size, std::min<long>(N, 12), k);
                for (std::size_t i = 1; i < words.size(); ++i)
                    if (!(words[i - 1] < words[i])) return render_word(words[i - 1]) + " !< " + render_word(words[i]);
            }
        return "";
    });
    return rep;
}

// Closed forms ----------------------------------------------------------------

inline SuiteReport run_closed(const Options& opt) {
    SuiteReport rep{Suite::Closed, {}};
    for (Measure m : {Measure::Size, Measure::Length}) {
        const bool by_size = m == Measure::Size;
        detail::run_check(rep, std::string("closed = dp zigzag/") + std::string(to_string(m)), [&]() -> std::string {
            const auto table = build_table(PathClass::Zigzag, m, opt.closed_max_power, Floor::NonNegative, opt.dropped);
            for (long mm = 0; mm <= opt.closed_max_power; ++mm)
                for (long k = 0; k <= opt.closed_max_height; ++k) {
                    const auto fam_f = closed::Family::F, fam_g = closed::Family::G;
                    const BigInt f = by_size ? closed::size_coeff(fam_f, mm, k) : closed::length_coeff(fam_f, mm, k);
                    const BigInt g = by_size ? closed::size_coeff(fam_g, mm, k) : closed::length_coeff(fam_g, mm, k);
                    if (f != table.up(mm, k))
                        return "f_" + std::to_string(k) + " z^" + std::to_string(mm) + ": closed " + f.str() + ", dp " + table.up(mm, k).str();
                    if (g != table.down(mm, k))
                        return "g_" + std::to_string(k) + " z^" + std::to_string(mm) + ": closed " + g.str() + ", dp " + table.down(mm, k).str();
                }
            return "";
        });
    }
    detail::run_check(rep, "e_n = dp knight/length axis", [&]() -> std::string {
        const auto table = build_table(PathClass::Knight, Measure::Length, opt.en_max, Floor::NonNegative, opt.dropped);
        for (long n = 0; n <= opt.en_max; ++n)
            if (closed::e_n(n) != table.total(n, 0))
                return "n=" + std::to_string(n) + ": e_n " + closed::e_n(n).str() + ", dp " + table.total(n, 0).str();
        return "";
    });
    detail::run_check(rep, "length g_0 = Catalan(n+1)", [&]() -> std::string {
        for (long n = 1; n <= 20; ++n)
            if (closed::length_coeff(closed::Family::G, 2 * n, 0) != catalan(n + 1)) return "n=" + std::to_string(n);
        return "";
    });
    return rep;
}

// Series ----------------------------------------------------------------------

inline SuiteReport run_series(const Options& opt) {
    SuiteReport rep{Suite::Series, {}};
    const auto table = [&](PathClass c, Measure m, long n, Floor f = Floor::NonNegative) {
        return build_table(c, m, n, f, opt.dropped);
    };
    detail::run_check(rep, "quartic of A", [&]() -> std::string {
        const auto A = kernel::series_A(table(PathClass::Knight, Measure::Size, opt.quartic_order), opt.quartic_order);
        const auto res = kernel::quartic_A_residual(A);
        if (auto v = res.valuation()) return "residual z^" + std::to_string(*v) + " = " + res[*v].str();
        return "";
    });
    detail::run_check(rep, "quartic of E", [&]() -> std::string {
        const auto E = kernel::series_E(table(PathClass::Knight, Measure::Length, opt.quartic_order), opt.quartic_order);
        const auto res = kernel::quartic_E_residual(E);
        if (auto v = res.valuation()) return "residual z^" + std::to_string(*v) + " = " + res[*v].str();
        return "";
    });
    detail::run_check(rep, "A1 = knight/size height-1 column", [&]() -> std::string {
        const auto t = table(PathClass::Knight, Measure::Size, opt.quartic_order);
        const auto A1 = kernel::series_A1_from(kernel::series_A(t, opt.quartic_order));
        if (auto m = kernel::first_difference(kernel::column_series(t, 1, kernel::Family::Total, opt.quartic_order), A1, 1))
            return detail::describe(*m);
        return "";
    });
    detail::run_check(rep, "small roots solve their kernels", [&]() -> std::string {
        const int o = opt.bivariate_order;
        const auto rs = kernel::r_size(o);
        const auto z = [&](int m) { return kernel::z_power(m, o); };
        const auto res_s = z(3) * rs * rs + (z(4) + z(2) - kernel::one(o)) * rs + z(3);
        if (!res_s.is_zero()) return "size root residual nonzero";
        const auto rl = kernel::r_length(o);
        const auto res_l = rl - z(2) * (kernel::one(o) + rl) * (kernel::one(o) + rl);
        if (!res_l.is_zero()) return "length root residual nonzero";
        for (const auto& s : {rs, rl})
            for (const auto& c : s.coefficients())
                if (!is_integral(c)) return "non-integral root coefficient " + c.str();
        return "";
    });
    for (Measure m : {Measure::Size, Measure::Length}) {
        const std::string tag(to_string(m));
        detail::run_check(rep, "bivariate F+G zigzag/" + tag, [&]() -> std::string {
            return detail::describe(kernel::check_bivariate_identity(
                table(PathClass::Zigzag, m, opt.bivariate_order), opt.bivariate_u_degree, opt.bivariate_order));
        });
        detail::run_check(rep, "split F, G zigzag/" + tag, [&]() -> std::string {
            for (const auto& c : kernel::check_split_identities(table(PathClass::Zigzag, m, opt.bivariate_order),
                                                                opt.bivariate_u_degree, opt.bivariate_order))
                if (!c.ok()) return detail::describe(c);
            return "";
        });
        detail::run_check(rep, "f_k/g_k columns zigzag/" + tag, [&]() -> std::string {
            return detail::describe(kernel::check_column_forms(table(PathClass::Zigzag, m, opt.column_order),
                                                               opt.column_max_height, opt.column_order));
        });
        detail::run_check(rep, "axis series zigzag/" + tag, [&]() -> std::string {
            return detail::describe(
                kernel::check_axis_identity(table(PathClass::Zigzag, m, opt.column_order), opt.column_order));
        });
    }
    detail::run_check(rep, "bivariate F+G knight/size", [&]() -> std::string {
        return detail::describe(kernel::check_bivariate_identity(table(PathClass::Knight, Measure::Size, opt.knight_order),
                                                                 opt.knight_u_degree, opt.knight_order));
    });
    detail::run_check(rep, "basketball heights 1, 2", [&]() -> std::string {
        const auto t = table(PathClass::Knight, Measure::Length, opt.basketball_order, Floor::Positive);
        for (const auto& c : kernel::check_basketball_heights(t, opt.basketball_order))
            if (!c.ok()) return detail::describe(c);
        return "";
    });
    return rep;
}

// Bijections ----------------------------------------------------------------

namespace detail {

template <class Forward, class Inverse>
std::string certify_bijection(const std::vector<PathWord>& domain, const std::vector<LatticeWord>& codomain,
                              Forward forward, Inverse inverse, std::size_t image_length, const BigInt& dp_count) {
    if (BigInt(domain.size()) != dp_count)
        return "domain has " + std::to_string(domain.size()) + " words, dp counts " + dp_count.str();
    std::set<LatticeWord> image;
    for (const auto& w : domain) {
        const auto img = forward(w);
        if (img.length() != image_length)
            return render_word(w) + " -> " + render_lattice_word(img) + " has length " + std::to_string(img.length());
        if (!image.insert(img).second) return "not injective at " + render_word(w);
        if (inverse(img) != w) return "inverse(forward(" + render_word(w) + ")) != word";
    }
    const std::set<LatticeWord> target(codomain.begin(), codomain.end());
    if (image != target)
        return "image (" + std::to_string(image.size()) + ") != codomain (" + std::to_string(target.size()) + ")";
    for (const auto& c : codomain)
        if (forward(inverse(c)) != c) return "forward(inverse(" + render_lattice_word(c) + ")) != word";
    return "";
}

}  // namespace detail

inline SuiteReport run_bijections(const Options& opt) {
    SuiteReport rep{Suite::Bijections, {}};
    const long N = opt.max;
    detail::run_check(rep, "psi: zigzag size 2n <-> peakless Motzkin n+1", [&]() -> std::string {
        const auto t = build_table(PathClass::Zigzag, Measure::Size, 2 * N, Floor::NonNegative, opt.dropped);
        for (long n = 0; n <= N; ++n) {
            auto why = detail::certify_bijection(enumerate_partial(PathClass::Zigzag, Measure::Size, 2 * n, 0),
                                                 all_peakless_motzkin(static_cast<std::size_t>(n + 1)),
                                                 [](const PathWord& w) { return psi(w); },
                                                 [](const LatticeWord& m) { return psi_inv(m); },
                                                 static_cast<std::size_t>(n + 1), t.total(2 * n, 0));
            if (!why.empty()) return "n=" + std::to_string(n) + ": " + why;
        }
        return "";
    });
    detail::run_check(rep, "phi: zigzag length 2n <-> Dyck 2(n+1)", [&]() -> std::string {
        const auto t = build_table(PathClass::Zigzag, Measure::Length, 2 * N, Floor::NonNegative, opt.dropped);
        for (long n = 0; n <= N; ++n) {
            auto why = detail::certify_bijection(enumerate_partial(PathClass::Zigzag, Measure::Length, 2 * n, 0),
                                                 all_dyck(static_cast<std::size_t>(2 * n + 2)),
                                                 [](const PathWord& w) { return phi(w); },
                                                 [](const LatticeWord& d) { return phi_inv(d); },
                                                 static_cast<std::size_t>(2 * n + 2), t.total(2 * n, 0));
            if (!why.empty()) return "n=" + std::to_string(n) + ": " + why;
        }
        return "";
    });
    detail::run_check(rep, "decomposition reassembles", [&]() -> std::string {
        for (long n = 0; n <= std::min<long>(2 * N, 20); n += 2)
            for (const auto& w : enumerate_partial(PathClass::Zigzag, Measure::Size, n, 0))
                if (reassemble(decompose_zigzag(w)) != w) return render_word(w);
        return "";
    });
    detail::run_check(rep, "worked examples", [&]() -> std::string {
        const auto w = parse_word("EeNnNeNnEn");
        if (render_lattice_word(psi(w)) != "UFUFFDFD") return "psi(EeNnNeNnEn) = " + render_lattice_word(psi(w));
        if (render_lattice_word(phi(w)) != "UUDUUDUDDUDD") return "phi(EeNnNeNnEn) = " + render_lattice_word(phi(w));
        return "";
    });
    return rep;
}

inline SuiteReport run_suite(Suite s, const Options& opt) {
    switch (s) {
        case Suite::Oracle: return run_oracle(opt);
        case Suite::Closed: return run_closed(opt);
        case Suite::Series: return run_series(opt);
        case Suite::Bijections: return run_bijections(opt);
    }
    return {s, {}};
}

/// Runs the suites concurrently; reports come back in request order.
inline std::vector<SuiteReport> run_suites(const std::vector<Suite>& suites, const Options& opt) {
    std::vector<std::future<SuiteReport>> jobs;
    for (Suite s : suites) jobs.push_back(std::async(std::launch::async, [s, &opt] { return run_suite(s, opt); }));
    std::vector<SuiteReport> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

inline constexpr std::array<Suite, 4> all_suites{Suite::Oracle, Suite::Closed, Suite::Series, Suite::Bijections};

}  // namespace knightpaths::verify

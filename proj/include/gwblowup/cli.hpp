#pragma once

// Command-line front end. run() takes the argument vector (without the
// program name) and writes to the given streams so it can be driven
// in-process.
//
// Exit codes: 0 success, 1 usage or parse error, 2 undefined invariant,
// 3 relation verification failure, 4 internal consistency violation.

#include "gwblowup/cache.hpp"
#include "gwblowup/cremona.hpp"
#include "gwblowup/engine.hpp"
#include "gwblowup/relations.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace gwb::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kUndefined = 2, kVerifyFailed = 3, kInconsistent = 4 };

enum class OutputFormat { Plain, Csv, Json };

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "" -> {}, "4,2,2" -> {4,2,2}. No spaces.
inline std::vector<int> parse_alpha(const std::string& text) {
    std::vector<int> out;
    if (text.empty() || text == "\"\"") return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string part = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                                 : comma - start);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(part, &used);
        } catch (const std::exception&) {
            throw ParseError("bad multiplicity list: '" + text + "'");
        }
        if (used != part.size() || part.empty() || part.front() == '+' || part.front() == ' ')
            throw ParseError("bad multiplicity list: '" + text + "'");
        out.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

inline std::string join_alpha(const std::vector<int>& alpha) {
    std::string s;
    for (std::size_t i = 0; i < alpha.size(); ++i) s += (i ? "," : "") + std::to_string(alpha[i]);
    return s;
}

// "D A1,A2" with the empty list spelled "".
inline std::string format_class(const CurveClass& c) {
    return std::to_string(c.d) + " " + (c.alpha.empty() ? std::string("\"\"") : join_alpha(c.alpha));
}

// Sorted descending with zero entries dropped.
inline CurveClass display_form(const CurveClass& c) {
    CurveClass out{c.d, {}};
    for (int a : c.alpha)
        if (a != 0) out.alpha.push_back(a);
    std::sort(out.alpha.begin(), out.alpha.end(), std::greater<>{});
    return out;
}

struct Row {
    CurveClass cls;
    BigCount value;
    std::optional<EnumStatus> status;  // set when --status was requested
    bool status_applicable = true;
};

class RowWriter {
public:
    RowWriter(std::ostream& out, OutputFormat fmt, bool with_status)
        : out_(out), fmt_(fmt), with_status_(with_status) {}

    void header() {
        if (fmt_ == OutputFormat::Csv)
            out_ << "d,alpha,N" << (with_status_ ? ",status,reason" : "") << '\n';
    }

    void row(const Row& r, bool value_only_plain = false) {
        switch (fmt_) {
            case OutputFormat::Plain:
                if (value_only_plain) {
                    out_ << to_decimal(r.value) << '\n';
                } else {
                    out_ << format_class(r.cls) << ' ' << to_decimal(r.value) << '\n';
                }
                if (with_status_) out_ << status_text(r) << '\n';
                break;
            case OutputFormat::Csv:
                out_ << r.cls.d << ",\"" << join_alpha(r.cls.alpha) << "\"," << to_decimal(r.value);
                if (with_status_) out_ << ',' << status_word(r) << ',' << reason_word(r);
                out_ << '\n';
                break;
            case OutputFormat::Json: {
                nlohmann::ordered_json j;
                j["d"] = r.cls.d;
                j["alpha"] = r.cls.alpha;
                j["N"] = to_decimal(r.value);
                if (with_status_) {
                    j["status"] = status_word(r);
                    if (r.status && r.status->reason)
                        j["reason"] = std::string(to_string(*r.status->reason));
                    else
                        j["reason"] = nullptr;
                }
                out_ << j.dump() << '\n';
                break;
            }
        }
    }

private:
    static std::string status_word(const Row& r) {
        if (!r.status_applicable) return "not-applicable";
        return r.status && r.status->enumerative() ? "enumerative" : "unknown";
    }
    static std::string reason_word(const Row& r) {
        return r.status && r.status->reason ? std::string(to_string(*r.status->reason)) : "";
    }
    static std::string status_text(const Row& r) {
        std::string s = status_word(r);
        if (r.status && r.status->reason) s += " (" + reason_word(r) + ")";
        return s;
    }

    std::ostream& out_;
    OutputFormat fmt_;
    bool with_status_;
};

/// Rows of the degree-d table: alpha descending, every entry >= 2, n >= 0,
/// dropping classes of negative arithmetic genus or with a_i + a_j > d.
inline std::vector<CurveClass> table_classes(int d) {
    std::vector<CurveClass> out;
    std::vector<int> alpha;
    const std::int64_t budget = 3 * std::int64_t{d} - 1;  // |alpha| <= 3d - 1
    auto rec = [&](auto&& self, int max_entry, std::int64_t used) -> void {
        CurveClass c{d, alpha};
        const bool pair_ok = alpha.size() < 2 || alpha[0] + alpha[1] <= d;
        if (arithmetic_genus(c) >= 0 && pair_ok) out.push_back(c);
        for (int a = max_entry; a >= 2; --a) {
            if (used + a > budget) continue;
            alpha.push_back(a);
            self(self, a, used + a);
            alpha.pop_back();
        }
    };
    if (d >= 1) rec(rec, d, 0);
    std::sort(out.begin(), out.end(),
              [](const CurveClass& a, const CurveClass& b) { return a.alpha < b.alpha; });
    return out;
}

namespace detail {

struct Common {
    std::string format = "plain";
    std::string cache_path;
    bool no_shortcuts = false;
};

inline void add_common(CLI::App* sub, Common& c, bool with_format) {
    if (with_format)
        sub->add_option("--format", c.format, "plain | csv | json")
            ->check(CLI::IsMember({"plain", "csv", "json"}));
    sub->add_option("--cache", c.cache_path, "memo cache file, loaded if present and saved after");
    sub->add_flag("--no-shortcuts", c.no_shortcuts, "disable the vanishing shortcuts");
}

inline OutputFormat to_format(const std::string& s) {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    return OutputFormat::Plain;
}

class Session {
public:
    explicit Session(const Common& c) : path_(c.cache_path) {
        cfg_.use_vanishing_shortcuts = !c.no_shortcuts;
        if (!path_.empty() && std::filesystem::exists(path_)) store_ = load(std::filesystem::path(path_));
    }
    void finish() {
        if (!path_.empty()) save(store_, std::filesystem::path(path_));
    }
    MemoStore& store() { return store_; }
    const EngineConfig& config() const { return cfg_; }
    BigCount invariant(const CurveClass& c) { return gwb::invariant(c, store_, cfg_); }

private:
    std::string path_;
    MemoStore store_;
    EngineConfig cfg_;
};

inline bool status_applicable(const CurveClass& c) {
    return c.d > 0 && expected_dim(c) >= 0 &&
           std::none_of(c.alpha.begin(), c.alpha.end(), [](int a) { return a < 0; });
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Genus-0 Gromov-Witten invariants of blow-ups of the projective plane"};
    app.require_subcommand(1);

    detail::Common common;

    // invariant
    int inv_d = 0;
    std::string inv_alpha;
    bool zero_if_undefined = false, with_status = false;
    auto* inv = app.add_subcommand("invariant", "print N_{d,alpha}");
    inv->add_option("d", inv_d, "degree")->required();
    inv->add_option("alpha", inv_alpha, "comma-separated multiplicities, \"\" for none")->required();
    inv->add_flag("--zero-if-undefined", zero_if_undefined, "print 0 when n < 0");
    inv->add_flag("--status", with_status, "also print the enumerativity status");
    detail::add_common(inv, common, true);

    // table
    int table_d = 0;
    auto* tab = app.add_subcommand("table", "list invariants of degree d with alpha >= 2");
    tab->add_option("d", table_d, "degree")->required()->check(CLI::PositiveNumber);
    detail::add_common(tab, common, true);

    // verify
    int ver_r = 0, ver_dmax = 1, ver_nmax = 0;
    auto* ver = app.add_subcommand("verify", "check the associativity relations");
    ver->add_option("--r", ver_r, "number of blown-up points")->required()->check(CLI::NonNegativeNumber);
    ver->add_option("--dmax", ver_dmax, "largest degree")->required()->check(CLI::PositiveNumber);
    ver->add_option("--nmax", ver_nmax, "largest point-class power")->required()->check(CLI::NonNegativeNumber);
    detail::add_common(ver, common, false);

    // cremona
    int cr_d = 0;
    std::string cr_alpha;
    bool cr_check = false;
    auto* cre = app.add_subcommand("cremona", "Cremona transform and reduced representative");
    cre->add_option("d", cr_d, "degree")->required();
    cre->add_option("alpha", cr_alpha, "comma-separated multiplicities, \"\" for none")->required();
    cre->add_flag("--check", cr_check, "compare the invariants of the class and its transform");
    detail::add_common(cre, common, false);

    std::vector<std::string> argv_store{"gwblowup"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        detail::Session session(common);
        const OutputFormat fmt = detail::to_format(common.format);

        if (inv->parsed()) {
            const CurveClass c{inv_d, parse_alpha(inv_alpha)};
            Row row{c, 0, std::nullopt, detail::status_applicable(c)};
            if (expected_dim(c) < 0) {
                if (!zero_if_undefined) {
                    err << "undefined: expected dimension is negative\n";
                    return kUndefined;
                }
            } else {
                row.value = session.invariant(c);
            }
            if (with_status && row.status_applicable) row.status = enumerativity(c);
            RowWriter w(out, fmt, with_status);
            w.header();
            w.row(row, /*value_only_plain=*/true);
        } else if (tab->parsed()) {
            RowWriter w(out, fmt, false);
            w.header();
            for (const CurveClass& c : table_classes(table_d))
                w.row(Row{c, session.invariant(c), std::nullopt, true});
        } else if (ver->parsed()) {
            auto report = verify_relations(ver_r, ver_dmax, ver_nmax,
                                           engine_provider(session.store(), session.config()));
            out << "checked " << report.checked << " relation instances (" << report.nontrivial
                << " nontrivial), " << report.failures.size() << " nonzero residuals\n";
            for (const auto& f : report.failures)
                out << "residual " << to_decimal(f.residual) << " at (" << f.indices[0] << ','
                    << f.indices[1] << ',' << f.indices[2] << ',' << f.indices[3] << ") "
                    << format_class(f.mono.cls) << " n=" << f.mono.n << '\n';
            out << (report.ok() ? "ok" : "FAILED") << '\n';
            session.finish();
            return report.ok() ? kOk : kVerifyFailed;
        } else if (cre->parsed()) {
            const CurveClass c{cr_d, parse_alpha(cr_alpha)};
            CurveClass sorted = sorted_padded(c);
            CurveClass transformed =
                sorted.alpha[0] + sorted.alpha[1] + sorted.alpha[2] > sorted.d
                    ? cremona_transform(sorted, 0, 1, 2)
                    : sorted;
            out << "transform: " << format_class(display_form(transformed)) << '\n';
            const bool reducible =
                c.d > 0 && std::none_of(c.alpha.begin(), c.alpha.end(), [](int a) { return a < 0; });
            if (reducible) out << "reduced: " << format_class(cremona_reduce(c)) << '\n';
            if (cr_check) {
                if (expected_dim(c) < 0) {
                    err << "undefined: expected dimension is negative\n";
                    return kUndefined;
                }
                const BigCount a = session.invariant(c);
                const BigCount b = session.invariant(transformed);
                out << "N(" << format_class(display_form(c)) << ") = " << to_decimal(a) << '\n';
                out << "N(" << format_class(display_form(transformed)) << ") = " << to_decimal(b)
                    << '\n';
                out << (a == b ? "equal" : "differ") << '\n';
                session.finish();
                return a == b ? kOk : kInconsistent;
            }
        }
        session.finish();
        return kOk;
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    } catch (const CacheError& e) {
        err << e.what() << '\n';
        return kUsage;
    } catch (const UndefinedInvariant& e) {
        err << e.what() << '\n';
        return kUndefined;
    } catch (const ConsistencyViolation& e) {
        err << e.what() << '\n';
        return kInconsistent;
    }
}

}  // namespace gwb::cli

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lsat/error.hpp"
#include "lsat/genus.hpp"
#include "lsat/hfunction.hpp"
#include "lsat/invariants.hpp"
#include "lsat/json_io.hpp"
#include "lsat/patterns.hpp"
#include "lsat/sweep.hpp"
#include "lsat/zcomplex.hpp"

namespace {

using namespace lsat;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitRegime = 3;
constexpr int kExitVerify = 4;

enum class PatternKind { TwoBridge, Cable, Braid, JsonFile };

struct PatternSpec {
    PatternKind kind = PatternKind::TwoBridge;
    std::vector<std::int64_t> args;
    std::string path;
    std::string text;
};

std::vector<std::int64_t> parse_ints(const std::string& text, std::size_t count, const std::string& spec) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            fail_input("bad-pattern-spec", "'" + spec + "': '" + item + "' is not an integer");
        }
    }
    if (out.size() != count)
        fail_input("bad-pattern-spec", "'" + spec + "' needs " + std::to_string(count) + " comma-separated integers");
    return out;
}

PatternSpec parse_pattern(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) fail_input("bad-pattern-spec", "'" + text + "' has no 'kind:' prefix");
    const std::string kind = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    PatternSpec spec;
    spec.text = text;
    if (kind == "twobridge") {
        spec.kind = PatternKind::TwoBridge;
        spec.args = parse_ints(rest, 2, text);
    } else if (kind == "cable") {
        spec.kind = PatternKind::Cable;
        spec.args = parse_ints(rest, 2, text);
    } else if (kind == "braid") {
        spec.kind = PatternKind::Braid;
        spec.args = parse_ints(rest, 3, text);
    } else if (kind == "json") {
        spec.kind = PatternKind::JsonFile;
        spec.path = rest;
        if (rest.empty()) fail_input("bad-pattern-spec", "json: needs a path");
    } else {
        fail_input("bad-pattern-spec", "unknown pattern kind '" + kind + "'");
    }
    return spec;
}

// Link data of L_P; cable and braid patterns only carry a profile.
LinkFile load_link(const PatternSpec& spec) {
    switch (spec.kind) {
        case PatternKind::TwoBridge: return LinkFile{twobridge_link(spec.args[0], spec.args[1]), std::nullopt};
        case PatternKind::JsonFile: return read_link_file(spec.path);
        default:
            fail_regime("no-link-data", spec.text + ": Alexander data of cable and braid pattern links is not computed");
    }
}

// Profile of a cable or braid pattern given in canonical form.
PatternProfile canonical_profile(const PatternSpec& spec) {
    const std::int64_t p = spec.args[0];
    if (spec.kind == PatternKind::Cable) {
        if (p < 1 || spec.args[1] < 1 || spec.args[1] >= std::max<std::int64_t>(p, 2))
            fail_input("non-canonical-pattern", spec.text + ": this command needs cable:p,r with 0 < r < p");
        return cable_profile(p, spec.args[1]);
    }
    if (p < 3 || spec.args[1] <= p || spec.args[1] >= 2 * p)
        fail_input("non-canonical-pattern", spec.text + ": this command needs braid:p,q,b with p < q < 2p");
    return bridge_braid_profile(p, spec.args[1], spec.args[2]);
}

PatternProfile load_profile(const PatternSpec& spec) {
    switch (spec.kind) {
        case PatternKind::TwoBridge: return twobridge_profile(spec.args[0], spec.args[1]);
        case PatternKind::JsonFile: {
            LinkFile f = read_link_file(spec.path);
            return generic_profile(f.data, f.g3);
        }
        default: return canonical_profile(spec);
    }
}

// A satellite problem P(K, n) rewritten as sign * tau(P'(K', n')) with a
// canonical pattern P', for the oracle route on cable and braid patterns.
struct Reduced {
    PatternProfile prof;
    Companion companion;
    std::int64_t n = 0;
    int sign = 1;
};

Reduced reduce_for_oracle(const PatternSpec& spec, const Companion& k, std::int64_t n) {
    if (spec.kind == PatternKind::TwoBridge || spec.kind == PatternKind::JsonFile) return {load_profile(spec), k, n, 1};
    const std::int64_t p = spec.args[0];
    int sign = 1;
    Companion comp = k;
    if (spec.kind == PatternKind::Cable) {
        if (p < 1) fail_input("bad-pattern", spec.text + ": p must be positive");
        std::int64_t q = spec.args[1] + p * n;
        if (k.eps == -1) {
            q = -q;
            comp = k.mirror();
            sign = -1;
        }
        if (p == 1) fail_regime("no-oracle", spec.text + ": p = 1 is the companion itself");
        auto [r, m] = fold_framing(q, p, 1);
        if (comp.eps == 0 && m < 0) fail_regime("no-oracle", spec.text + ": negative torus knot, no tower summand");
        return {cable_profile(p, r), comp, m, sign};
    }
    std::int64_t q = spec.args[1] + p * n;
    std::int64_t b = spec.args[2];
    if (!braid_closure_is_knot(p, q, b) || b <= 0 || b >= p - 1)
        fail_input("bad-pattern", spec.text + " is not a 1-bridge braid knot");
    if (k.eps == -1) {
        q = -q - 1;
        b = p - b - 1;
        comp = k.mirror();
        sign = -1;
    }
    auto [r, m] = fold_framing(q, p, p + 1);
    if (comp.eps == 0 && m < 0) fail_regime("no-oracle", spec.text + ": negative braid closure, no tower summand");
    return {bridge_braid_profile(p, r, b), comp, m, sign};
}

TauResult closed_tau(const PatternSpec& spec, const Companion& k, std::int64_t n) {
    switch (spec.kind) {
        case PatternKind::Cable: return tau_cable(spec.args[0], spec.args[1] + spec.args[0] * n, k);
        case PatternKind::Braid: return tau_bridge_braid(spec.args[0], spec.args[1] + spec.args[0] * n, spec.args[2], k);
        default: return tau_closed_form(load_profile(spec), k, n);
    }
}

TauResult oracle_tau(const PatternSpec& spec, const Companion& k, std::int64_t n) {
    Reduced red = reduce_for_oracle(spec, k, n);
    TauResult res = tau_oracle(red.prof, red.companion, red.n);
    res.value *= red.sign;
    return res;
}

unsigned worker_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("LSAT_THREADS")) {
        try {
            long cap = std::stol(env);
            if (cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
        } catch (const std::exception&) {
            fail_input("bad-env", std::string("LSAT_THREADS='") + env + "' is not a positive integer");
        }
    }
    return hw;
}

Json opt_half(const std::optional<HalfInt>& v) { return v ? Json(v->doubled()) : Json(nullptr); }

Json profile_json(const PatternProfile& prof) {
    Json prov = Json::object();
    for (const auto& [key, p] : prof.provenance) prov[key] = to_string(p);
    return {{"name", prof.name},
            {"ell", prof.ell},
            {"g3", prof.g3},
            {"width_doubled", prof.width.doubled()},
            {"r_minus_doubled", opt_half(prof.r_minus)},
            {"r_center_doubled", opt_half(prof.r_center)},
            {"r_plus_doubled", opt_half(prof.r_plus)},
            {"cond_tau", prof.cond_tau},
            {"cond_eps", prof.cond_eps},
            {"minimal_wrapping", prof.minimal_wrapping},
            {"provenance", prov}};
}

// ---- subcommands ----

struct HfuncArgs {
    std::string pattern;
    std::string window;
    std::string format = "tsv";
};

int cmd_hfunc(const HfuncArgs& a) {
    LinkFile link = load_link(parse_pattern(a.pattern));
    HFunction h(link.data);
    const std::int64_t ell = link.data.linking;
    HalfInt window = a.window.empty() ? std::max(width_from_h(h) + 2, HalfInt::from_int(2)) : parse_halfint(a.window);
    if (window < HalfInt{} || window > HalfInt::from_int(200)) fail_input("bad-window", "window must lie in [0, 200]");
    std::vector<HalfInt> ts = lattice_range(ell, -window, window);
    std::vector<HalfInt> rs = ts;
    std::reverse(rs.begin(), rs.end());
    std::vector<HalfInt> r_of(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) r_of[i] = r_of_t(h, ts[i]);

    if (a.format == "json") {
        Json rows = Json::array();
        for (HalfInt r : rs) {
            Json values = Json::array();
            Json marks = Json::array();
            for (std::size_t i = 0; i < ts.size(); ++i) {
                values.push_back(h(ts[i], r));
                if (r_of[i] == r) marks.push_back(ts[i].doubled());
            }
            rows.push_back({{"r_doubled", r.doubled()}, {"values", values}, {"r_t_marks_doubled", marks}});
        }
        Json t_axis = Json::array();
        for (HalfInt t : ts) t_axis.push_back(t.doubled());
        Json out = {{"linking", ell}, {"window_doubled", window.doubled()}, {"t_doubled", t_axis}, {"rows", rows}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    if (a.format != "tsv") fail_input("bad-format", "format must be tsv or json");
    std::cout << "r\\t";
    for (HalfInt t : ts) std::cout << '\t' << t.str();
    std::cout << "\tR_t at\n";
    for (HalfInt r : rs) {
        std::cout << r.str();
        std::string marks;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            std::cout << '\t' << h(ts[i], r);
            if (r_of[i] == r) marks += (marks.empty() ? "" : ",") + ts[i].str();
        }
        std::cout << '\t' << (marks.empty() ? "-" : marks) << '\n';
    }
    return kExitOk;
}

struct CompanionArgs {
    std::int64_t tau = 1;
    int eps = 1;
    std::int64_t n = 0;
};

struct TauArgs {
    std::string pattern;
    CompanionArgs companion;
    std::string method = "closed";
};

int cmd_tau(const TauArgs& a) {
    PatternSpec spec = parse_pattern(a.pattern);
    Companion k = Companion::make(a.companion.tau, a.companion.eps);
    const std::int64_t n = a.companion.n;
    if (a.method == "closed") {
        TauResult r = closed_tau(spec, k, n);
        std::cout << Json{{"tau", r.value}, {"case", r.case_tag}, {"method", r.method}}.dump() << "\n";
        return kExitOk;
    }
    if (a.method == "oracle") {
        TauResult r = oracle_tau(spec, k, n);
        std::cout << Json{{"tau", r.value}, {"case", r.case_tag}, {"method", r.method}}.dump() << "\n";
        return kExitOk;
    }
    if (a.method != "both") fail_input("bad-method", "method must be closed, oracle or both");
    TauResult closed = closed_tau(spec, k, n);
    TauResult oracle = oracle_tau(spec, k, n);
    const bool match = closed.value == oracle.value;
    std::cout << Json{{"closed", closed.value},
                      {"oracle", oracle.value},
                      {"match", match},
                      {"case", closed.case_tag},
                      {"method", "both"}}
                     .dump()
              << "\n";
    return match ? kExitOk : kExitVerify;
}

struct VerifyArgs {
    std::vector<std::string> checks;
    std::vector<std::string> injections;
    std::string inject_pattern = "3,3";
    SweepSpec sweep;
};

int cmd_verify(VerifyArgs a) {
    SweepSpec& spec = a.sweep;
    if (!a.checks.empty()) {
        spec.checks.clear();
        for (const std::string& name : a.checks) {
            auto c = parse_sweep_check(name);
            if (!c) fail_input("bad-check", "unknown check '" + name + "'");
            if (std::find(spec.checks.begin(), spec.checks.end(), *c) == spec.checks.end()) spec.checks.push_back(*c);
        }
    }
    if (!a.injections.empty()) {
        Injection inj;
        std::vector<std::int64_t> rq = parse_ints(a.inject_pattern, 2, a.inject_pattern);
        inj.r = rq[0];
        inj.q = rq[1];
        for (const std::string& text : a.injections) {
            std::vector<std::string> parts;
            std::stringstream ss(text);
            for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
            if (parts.size() != 3) fail_input("bad-injection", "'" + text + "' must read t,r,value");
            std::int64_t v = parse_ints(parts[2], 1, text)[0];
            inj.entries[{parse_halfint(parts[0]), parse_halfint(parts[1])}] = v;
        }
        spec.injection = inj;
    }
    std::vector<CheckSummary> results = run_sweep(spec, worker_count());
    std::size_t total = 0;
    for (const CheckSummary& s : results) {
        std::cout << to_string(s.check) << ": " << s.points << " points, " << s.failures << " failures, " << s.skipped
                  << " skipped\n";
        if (s.failures) std::cout << "  first counterexample: " << s.first_failure << "\n";
        total += s.failures;
    }
    std::cout << total << " failures\n";
    return total == 0 ? kExitOk : kExitVerify;
}

struct ClassifyArgs {
    std::string pattern;
    std::int64_t n = 0;
};

int cmd_classify(const ClassifyArgs& a) {
    LinkFile link = load_link(parse_pattern(a.pattern));
    Classification c = classify_operator(link.data, a.n);
    Json out = {{"class", to_string(c.cls)}, {"orientation_reversed", c.orientation_reversed}};
    out["failed_claim"] = c.failed_claim.empty() ? Json(nullptr) : Json(c.failed_claim);
    std::cout << out.dump() << "\n";
    return kExitOk;
}

struct GenusArgs {
    std::string pattern;
    CompanionArgs companion;
    int g4_eq_tau = 0;
};

int cmd_genus(const GenusArgs& a) {
    PatternProfile prof = load_profile(parse_pattern(a.pattern));
    Companion k = Companion::make(a.companion.tau, a.companion.eps);
    Json out = {{"g3rel", g3rel(prof)}, {"g4", nullptr}, {"regime", "hypothesis-flag-absent"}};
    int code = kExitOk;
    if (a.g4_eq_tau) {
        try {
            SliceGenus g = g4_satellite(prof, k, a.companion.n, true);
            out["g4"] = g.value;
            out["regime"] = g.regime;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::UnsupportedRegime) throw;
            out["regime"] = e.tag();
            code = kExitRegime;
        }
    }
    std::cout << out.dump() << "\n";
    return code;
}

int cmd_profile(const std::string& pattern) {
    std::cout << profile_json(load_profile(parse_pattern(pattern))).dump(2) << "\n";
    return kExitOk;
}

int report(const Error& e) {
    std::cerr << Json{{"error", e.tag()}, {"detail", e.what()}}.dump() << "\n";
    switch (e.kind()) {
        case ErrorKind::InvalidInput: return kExitInvalid;
        case ErrorKind::UnsupportedRegime: return kExitRegime;
        case ErrorKind::Internal: return kExitVerify;
    }
    return kExitVerify;
}

void add_companion(CLI::App* cmd, CompanionArgs& c) {
    cmd->add_option("--tau", c.tau, "tau(K)")->capture_default_str();
    cmd->add_option("--eps", c.eps, "epsilon(K) in {-1, 0, 1}")->capture_default_str();
    cmd->add_option("--n", c.n, "framing")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Concordance invariants of L-space satellite knots"};
    app.require_subcommand(1);

    HfuncArgs hfunc;
    auto* hfunc_cmd = app.add_subcommand("hfunc", "H-function table, rows r descending, columns t ascending");
    hfunc_cmd->add_option("pattern", hfunc.pattern, "twobridge:r,q | json:path")->required();
    hfunc_cmd->add_option("--window", hfunc.window, "half-width of the table, e.g. 3 or 5/2");
    hfunc_cmd->add_option("--format", hfunc.format, "tsv | json")->capture_default_str();

    TauArgs tau;
    auto* tau_cmd = app.add_subcommand("tau", "tau(P(K, n))");
    tau_cmd->add_option("pattern", tau.pattern, "twobridge:r,q | cable:p,r | braid:p,q,b | json:path")->required();
    add_companion(tau_cmd, tau.companion);
    tau_cmd->add_option("--method", tau.method, "closed | oracle | both")->capture_default_str();

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "property and equality sweep over the two-bridge family");
    verify_cmd->add_option("--check", verify.checks, "properties | oracle | inequality | classifier | genus");
    verify_cmd->add_option("--r-max", verify.sweep.r_max)->capture_default_str();
    verify_cmd->add_option("--n-min", verify.sweep.n_min)->capture_default_str();
    verify_cmd->add_option("--n-max", verify.sweep.n_max)->capture_default_str();
    verify_cmd->add_option("--tau-max", verify.sweep.tau_max)->capture_default_str();
    verify_cmd->add_option("--inject", verify.injections, "overwrite H(t, r) with value: t,r,value");
    verify_cmd->add_option("--inject-pattern", verify.inject_pattern, "two-bridge member r,q receiving --inject")
        ->capture_default_str();

    ClassifyArgs classify;
    auto* classify_cmd = app.add_subcommand("classify", "can P(-, n) be a concordance homomorphism");
    classify_cmd->add_option("pattern", classify.pattern, "twobridge:r,q | json:path")->required();
    classify_cmd->add_option("--n", classify.n, "framing, n >= 0")->capture_default_str();

    GenusArgs genus;
    auto* genus_cmd = app.add_subcommand("genus", "relative Seifert genus and slice genus of P(K, n)");
    genus_cmd->add_option("pattern", genus.pattern, "twobridge:r,q | cable:p,r | braid:p,q,b | json:path")->required();
    add_companion(genus_cmd, genus.companion);
    genus_cmd->add_option("--g4-eq-tau", genus.g4_eq_tau, "1 asserts tau(K) = g4(K) > 0")->capture_default_str();

    std::string profile_pattern;
    auto* profile_cmd = app.add_subcommand("profile", "pattern profile as JSON");
    profile_cmd->add_option("pattern", profile_pattern, "twobridge:r,q | cable:p,r | braid:p,q,b | json:path")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*hfunc_cmd) return cmd_hfunc(hfunc);
        if (*tau_cmd) return cmd_tau(tau);
        if (*verify_cmd) return cmd_verify(verify);
        if (*classify_cmd) return cmd_classify(classify);
        if (*genus_cmd) return cmd_genus(genus);
        if (*profile_cmd) return cmd_profile(profile_pattern);
    } catch (const Error& e) {
        return report(e);
    }
    return kExitInvalid;
}

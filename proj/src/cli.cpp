#include "staircase/cli.hpp"

#include "staircase/acceptance.hpp"
#include "staircase/errors.hpp"
#include "staircase/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace staircase {

namespace {

constexpr unsigned kMaxMomentOrder = 10;

struct Options {
    std::string format = "text";
    std::string output;
    std::string config;
    unsigned threads = 0;

    std::string n;
    std::string K;
    std::string type;
    bool set_u_one = false;
    std::map<std::string, std::string> rates;
    std::string points;
    std::string families = "I,II,III";
    unsigned max_len = 3;
    unsigned max_index = 4;
    std::string from;
    std::string to;
    std::string input;

    bool json() const { return format == "json"; }
    EnumerationOptions enumeration() const { return {threads}; }
};

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    if (!cur.empty() || !parts.empty()) {
        parts.push_back(cur);
    }
    return parts;
}

unsigned size_arg(const std::string& text, const char* name, unsigned min, unsigned max)
{
    if (text.empty()) {
        throw ParseError(std::string("missing ") + name);
    }
    const BigInt v = parse_integer(text);
    if (v < 0) {
        throw ParseError(std::string(name) + " must be non-negative");
    }
    if (v > max) {
        throw CapacityError(std::string(name) + " above supported maximum " + std::to_string(max));
    }
    if (v < min) {
        throw DomainError(std::string(name) + " must be at least " + std::to_string(min));
    }
    return static_cast<unsigned>(v.get_ui());
}

void add_rate(CLI::App* sub, Options& o, const std::string& name, const std::string& help)
{
    sub->add_option_function<std::string>("--" + name, [&o, name](const std::string& v) { o.rates[name] = v; }, help);
}

void add_asep_rates(CLI::App* sub, Options& o)
{
    add_rate(sub, o, "alpha", "entry rate on the left (default 1)");
    add_rate(sub, o, "beta", "exit rate on the right (default 1)");
    add_rate(sub, o, "gamma", "exit rate on the left (default 0)");
    add_rate(sub, o, "delta", "entry rate on the right (default 0)");
    add_rate(sub, o, "q", "left hop rate (default 0)");
    add_rate(sub, o, "u", "right hop rate (default 1)");
}

AsepParams asep_params(const Options& o)
{
    AsepParams p;
    const std::pair<const char*, BigRational*> fields[] = {{"alpha", &p.alpha}, {"beta", &p.beta},
                                                           {"gamma", &p.gamma}, {"delta", &p.delta},
                                                           {"q", &p.q},         {"u", &p.u}};
    for (auto [name, slot] : fields) {
        if (auto it = o.rates.find(name); it != o.rates.end()) {
            *slot = parse_rational(it->second);
        }
    }
    return p;
}

AwParams aw_params(const Options& o)
{
    if (auto it = o.rates.find("u"); it != o.rates.end() && parse_rational(it->second) != 1) {
        throw ParseError("moments are defined with u = 1; --u must be 1");
    }
    AwParams aw;
    const std::pair<const char*, BigRational*> fields[] = {
        {"a", &aw.a}, {"b", &aw.b}, {"c", &aw.c}, {"d", &aw.d}, {"q", &aw.q}};
    for (auto [name, slot] : fields) {
        auto it = o.rates.find(name);
        if (it == o.rates.end()) {
            throw ParseError(std::string("missing --") + name);
        }
        *slot = parse_rational(it->second);
    }
    return aw;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string join(const std::vector<BigRational>& values)
{
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        s += (i ? " " : "") + to_string(values[i]);
    }
    return s;
}

// ---------------------------------------------------------------- commands

int cmd_count(const Options& o, std::ostream& out, std::ostream& err)
{
    const unsigned n = size_arg(o.n, "n", 1, kMaxEnumerationSize);
    const std::uint64_t got = count_tableaux(n, o.enumeration());
    const BigInt want = tableau_count_formula(n);
    const bool ok = BigInt(static_cast<unsigned long>(got)) == want;
    if (o.json()) {
        print_json(out, Json{{"n", n}, {"count", got}, {"formula", to_string(want)}, {"verified", ok}});
    } else {
        out << got << "\n";
    }
    if (!ok) {
        err << "enumeration disagrees with 4^n n! = " << to_string(want) << "\n";
    }
    return ok ? kExitOk : kExitFalse;
}

int cmd_enumerate(const Options& o, std::ostream& out)
{
    const unsigned n = size_arg(o.n, "n", 1, kMaxEnumerationSize);
    for_each_tableau(n, [&](const StaircaseTableau& t) {
        if (o.json()) {
            Json j = tableau_to_json(t);
            j["type"] = tableau_type(t).to_string();
            j["weight"] = to_string(weight(t));
            out << j.dump() << "\n";
        } else {
            out << to_text(t) << "type " << tableau_type(t).to_string() << "\nweight " << to_string(weight(t))
                << "\n\n";
        }
    });
    return kExitOk;
}

int cmd_gf(const Options& o, std::ostream& out)
{
    GfPoly p;
    Json j;
    if (!o.type.empty()) {
        const StateWord tau = StateWord::parse(o.type);
        if (!o.n.empty() && size_arg(o.n, "n", 1, kMaxEnumerationSize) != tau.size()) {
            throw ParseError("--type must have n letters");
        }
        if (tau.size() > kMaxEnumerationSize) {
            throw CapacityError("generating functions by type limited to n <= " + std::to_string(kMaxEnumerationSize));
        }
        p = gf_by_type(tau, o.enumeration());
        j["n"] = tau.size();
        j["type"] = tau.to_string();
    } else {
        const unsigned n = size_arg(o.n, "n", 0, kMaxSize);
        p = gf_total(n, true, o.enumeration());
        j["n"] = n;
    }
    if (o.set_u_one) {
        p = set_u_one(p);
    }
    if (o.json()) {
        j["u"] = o.set_u_one ? "1" : "free";
        j["poly"] = poly_to_json(p);
        j["text"] = to_string(p);
        print_json(out, j);
    } else {
        out << to_string(p) << "\n";
    }
    return kExitOk;
}

int cmd_stationary(const Options& o, std::ostream& out)
{
    const unsigned n = size_arg(o.n, "n", 1, std::min(kMaxEnumerationSize, kMaxChainSize));
    const AsepParams p = asep_params(o);
    const StationaryDist via_tableaux = stationary_tableaux(n, p);
    const StationaryDist via_chain = stationary_exact(build_chain(n, p));
    const bool equal = via_tableaux == via_chain;
    if (o.json()) {
        print_json(out, Json{{"n", n},
                             {"params", params_to_json(p)},
                             {"stationary", distribution_to_json(via_tableaux)},
                             {"exact", distribution_to_json(via_chain)},
                             {"verdict", equal ? "equal" : "different"}});
    } else {
        for (const auto& [tau, prob] : via_tableaux.probabilities) {
            out << tau.to_string() << " " << to_string(prob);
            if (via_chain[tau] != prob) {
                out << "  (exact " << to_string(via_chain[tau]) << ")";
            }
            out << "\n";
        }
        out << "verdict " << (equal ? "equal" : "different") << "\n";
    }
    return equal ? kExitOk : kExitFalse;
}

int cmd_physical(const Options& o, std::ostream& out)
{
    const unsigned n = size_arg(o.n, "n", 1, std::min(kMaxEnumerationSize, kMaxChainSize));
    const AsepParams p = asep_params(o);
    const TypeGenerating table = generating_functions(n, o.enumeration());
    const StationaryDist dist = stationary_exact(build_chain(n, p));
    const BigRational j = current(n, p);

    bool equal = left_boundary_current(dist, p) == j && right_boundary_current(dist, p) == j;
    std::vector<BigRational> bonds;
    for (unsigned bond = 1; bond < n; ++bond) {
        bonds.push_back(bond_current(dist, bond, p));
        equal = equal && bonds.back() == j;
    }

    std::vector<unsigned> positions;
    for (const auto& part : split(o.points, ',')) {
        positions.push_back(size_arg(part, "position", 1, n));
    }
    std::optional<BigRational> m;
    if (!positions.empty()) {
        m = m_point(table, positions, p);
        BigRational direct = 0;
        for (const auto& [tau, prob] : dist.probabilities) {
            bool all = true;
            for (unsigned i : positions) {
                all = all && tau.occupied(i);
            }
            if (all) {
                direct += prob;
            }
        }
        equal = equal && direct == *m;
    }

    if (o.json()) {
        Json bond_json = Json::array();
        for (const auto& b : bonds) {
            bond_json.push_back(to_string(b));
        }
        Json out_json{{"n", n}, {"params", params_to_json(p)}, {"current", to_string(j)}, {"bonds", bond_json}};
        if (m) {
            out_json["positions"] = positions;
            out_json["m_point"] = to_string(*m);
        }
        out_json["verdict"] = equal ? "equal" : "different";
        print_json(out, out_json);
    } else {
        out << "current " << to_string(j) << "\n";
        if (!bonds.empty()) {
            out << "bonds " << join(bonds) << "\n";
        }
        if (m) {
            out << "m(";
            for (std::size_t i = 0; i < positions.size(); ++i) {
                out << (i ? "," : "") << positions[i];
            }
            out << ") " << to_string(*m) << "\n";
        }
        out << "verdict " << (equal ? "equal" : "different") << "\n";
    }
    return equal ? kExitOk : kExitFalse;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    std::vector<VerifyReport> reports;
    for (const auto& f : split(o.families, ',')) {
        if (f == "I" || f == "II" || f == "III") {
            reports.push_back(verify_gma_family(f, o.max_len));
        } else if (f == "decrease") {
            reports.push_back(verify_decrease(o.max_len, o.max_index));
        } else if (f == "identity1" || f == "identity2") {
            reports.push_back(verify_identity(f == "identity1" ? 1 : 2, o.max_len));
        } else {
            throw ParseError("unknown family '" + f + "' (I, II, III, decrease, identity1, identity2)");
        }
        if (!reports.back().ok()) {
            break;
        }
    }
    const bool ok = reports.back().ok();
    if (o.json()) {
        Json arr = Json::array();
        for (const auto& r : reports) {
            arr.push_back(report_to_json(r));
        }
        print_json(out, Json{{"status", ok ? "ok" : "fail"}, {"reports", arr}});
    } else {
        for (const auto& r : reports) {
            if (r.ok()) {
                out << r.family << " ok (" << r.checks << " checks)\n";
                continue;
            }
            const Counterexample& c = *r.failure;
            out << r.family << " fail X=" << (c.x.empty() ? "-" : c.x) << " Y=" << (c.y.empty() ? "-" : c.y);
            if (c.indices) {
                for (long idx : *c.indices) {
                    if (idx >= 0) {
                        out << " " << idx;
                    }
                }
            }
            out << "\n  lhs " << to_string(c.lhs) << "\n  rhs " << to_string(c.rhs) << "\n";
        }
        out << (ok ? "ok" : "fail") << "\n";
    }
    return ok ? kExitOk : kExitFalse;
}

int cmd_moments(const Options& o, std::ostream& out)
{
    const unsigned k = size_arg(o.K, "K", 0, kMaxMomentOrder);
    const AwParams aw = aw_params(o);
    const MomentComparison cmp = compare_moments(k, aw);
    if (o.json()) {
        Json st = Json::array();
        Json mz = Json::array();
        for (unsigned i = 0; i <= k; ++i) {
            st.push_back(to_string(cmp.staircase[i]));
            mz.push_back(to_string(cmp.motzkin[i]));
        }
        print_json(out, Json{{"params", params_to_json(aw)}, {"K", k}, {"staircase", st}, {"motzkin", mz},
                             {"equal", cmp.equal()}});
    } else {
        out << "staircase " << join(cmp.staircase) << "\n";
        out << "motzkin   " << join(cmp.motzkin) << "\n";
        if (cmp.bridge_mismatch) {
            out << "binomial bridge fails at n = " << *cmp.bridge_mismatch << "\n";
        }
        out << (cmp.equal() ? "equal" : "different") << "\n";
    }
    return cmp.equal() ? kExitOk : kExitFalse;
}

int cmd_biject(const Options& o, std::istream& in, std::ostream& out)
{
    const std::vector<std::string> kinds = {"staircase", "perm", "alt"};
    auto known = [&](const std::string& k) { return std::find(kinds.begin(), kinds.end(), k) != kinds.end(); };
    if (!known(o.from) || !known(o.to)) {
        throw ParseError("--from and --to take staircase, perm or alt");
    }
    std::string text;
    if (o.input.empty() || o.input == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        std::ifstream f(o.input);
        if (!f) {
            throw ParseError("cannot read " + o.input);
        }
        text.assign(std::istreambuf_iterator<char>(f), {});
    }
    const auto first = text.find_first_not_of(" \t\r\n");
    const bool json_in = first != std::string::npos && text[first] == '{';
    Json j;
    if (json_in) {
        try {
            j = Json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("json: ") + e.what());
        }
    }

    AlternativeTableau hub;
    if (o.from == "staircase") {
        hub = staircase_to_alt(json_in ? tableau_from_json(j) : parse_tableau(text));
    } else if (o.from == "perm") {
        hub = perm_to_alt(json_in ? permutation_tableau_from_json(j) : parse_permutation_tableau(text));
    } else {
        hub = json_in ? alternative_tableau_from_json(j) : parse_alternative_tableau(text);
        require_valid(hub);
    }

    if (o.to == "staircase") {
        const StaircaseTableau t = alt_to_staircase(hub);
        o.json() ? print_json(out, tableau_to_json(t)) : void(out << to_text(t));
    } else if (o.to == "perm") {
        const PermutationTableau t = alt_to_perm(hub);
        o.json() ? print_json(out, tableau_to_json(t)) : void(out << to_text(t));
    } else {
        o.json() ? print_json(out, tableau_to_json(hub)) : void(out << to_text(hub));
    }
    return kExitOk;
}

int cmd_selftest(const Options& o, std::ostream& out)
{
    const auto results = run_acceptance(o.enumeration(), [&](const CriterionResult& r) {
        if (!o.json()) {
            out << format_result(r) << std::endl;
        }
    });
    bool ok = true;
    Json arr = Json::array();
    for (const auto& r : results) {
        ok = ok && r.passed;
        arr.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    if (o.json()) {
        print_json(out, Json{{"passed", ok}, {"criteria", arr}});
    } else {
        out << (ok ? "all criteria passed" : "FAILED") << "\n";
    }
    return ok ? kExitOk : kExitFalse;
}

// ---------------------------------------------------------------- config

std::string scalar_text(const Json& v, const std::string& key)
{
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_number_integer()) {
        return std::to_string(v.get<long long>());
    }
    if (v.is_boolean()) {
        return v.get<bool>() ? "true" : "false";
    }
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            s += (i ? "," : "") + scalar_text(v[i], key);
        }
        return s;
    }
    throw ParseError("config: unsupported value for '" + key + "' (rationals must be strings)");
}

Json load_config(const std::string& path)
{
    std::ifstream f(path);
    if (!f) {
        throw ParseError("cannot read config " + path);
    }
    try {
        Json j = Json::parse(f);
        if (!j.is_object()) {
            throw ParseError("config must be a JSON object");
        }
        return j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
}

void set_if_unset(CLI::Option* opt, const std::string& value)
{
    if (opt->count() > 0) {
        return; // command line wins
    }
    opt->add_result(value);
    opt->run_callback();
}

// Fills every option the command line left unset from the config object.
void apply_config(const Json& cfg, CLI::App& app, CLI::App& sub)
{
    for (const auto& [key, value] : cfg.items()) {
        if (key == "command" || key == "config") {
            continue;
        }
        if (key == "params") {
            if (!value.is_object()) {
                throw ParseError("config: 'params' must be an object");
            }
            for (const auto& [name, v] : value.items()) {
                CLI::Option* opt = sub.get_option_no_throw("--" + name);
                if (opt == nullptr) {
                    throw ParseError("config: parameter '" + name + "' not accepted by " + sub.get_name());
                }
                set_if_unset(opt, scalar_text(v, name));
            }
            continue;
        }
        std::string flag = key;
        std::replace(flag.begin(), flag.end(), '_', '-');
        CLI::Option* opt = sub.get_option_no_throw("--" + flag);
        if (opt == nullptr) {
            opt = sub.get_option_no_throw(flag);
        }
        if (opt == nullptr) {
            opt = app.get_option_no_throw("--" + flag);
        }
        if (opt == nullptr) {
            throw ParseError("config: unknown key '" + key + "' for " + sub.get_name());
        }
        set_if_unset(opt, scalar_text(value, key));
    }
}

} // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Staircase tableaux, the open-boundary exclusion process and Askey-Wilson moments", "staircase"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.fallthrough();
    app.require_subcommand(0, 1);
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--output,-o", o.output, "write output to this file");
    app.add_option("--config", o.config, "JSON file supplying defaults for any option");
    app.add_option("--threads", o.threads, "worker threads for enumeration (0 = all cores)");

    auto* count = app.add_subcommand("count", "enumerate size-n tableaux and compare with 4^n n!");
    count->add_option("n", o.n, "size");
    auto* enumerate = app.add_subcommand("enumerate", "stream every tableau of size n with type and weight");
    enumerate->add_option("n", o.n, "size");
    auto* gf = app.add_subcommand("gf", "weight generating function Z_n, or Z for one type");
    gf->add_option("n", o.n, "size");
    gf->add_option("--type", o.type, "state word such as 101 (site 1 first)");
    gf->add_flag("--set-u-one", o.set_u_one, "substitute u = 1");
    auto* stationary = app.add_subcommand("stationary", "stationary law from tableaux and from the chain");
    stationary->add_option("n", o.n, "lattice size");
    add_asep_rates(stationary, o);
    auto* physical = app.add_subcommand("physical", "current, bond averages and m-point functions");
    physical->add_option("n", o.n, "lattice size");
    physical->add_option("--points", o.points, "comma-separated sites for the m-point function");
    add_asep_rates(physical, o);
    auto* verify = app.add_subcommand("verify", "check ansatz relations symbolically");
    verify->add_option("--families", o.families, "comma list of I, II, III, decrease, identity1, identity2");
    verify->add_option("--max-len", o.max_len, "maximal word length");
    verify->add_option("--max-index", o.max_index, "maximal tensor index (decrease)");
    auto* moments = app.add_subcommand("moments", "Askey-Wilson moments from tableaux and from Motzkin paths");
    moments->add_option("--K", o.K, "highest moment");
    for (const char* name : {"a", "b", "c", "d", "q", "u"}) {
        add_rate(moments, o, name, std::string(name) == "u" ? "must be 1" : "Askey-Wilson parameter");
    }
    auto* biject = app.add_subcommand("biject", "convert between staircase, permutation and alternative tableaux");
    biject->add_option("--from", o.from, "staircase, perm or alt");
    biject->add_option("--to", o.to, "staircase, perm or alt");
    biject->add_option("--input,-i", o.input, "input file (default stdin)");
    auto* selftest = app.add_subcommand("selftest", "run the acceptance checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        CLI::App* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
        if (!o.config.empty()) {
            const Json cfg = load_config(o.config);
            if (sub == nullptr && cfg.contains("command")) {
                const std::string name = scalar_text(cfg.at("command"), "command");
                sub = app.get_subcommand_no_throw(name);
                if (sub == nullptr) {
                    throw ParseError("config: unknown command '" + name + "'");
                }
            }
            if (sub != nullptr) {
                apply_config(cfg, app, *sub);
            }
        }
        if (sub == nullptr) {
            err << app.help();
            return kExitUsage;
        }
        if (o.format != "text" && o.format != "json") {
            throw ParseError("--format takes text or json");
        }

        std::ofstream file;
        if (!o.output.empty()) {
            file.open(o.output);
            if (!file) {
                throw ParseError("cannot write " + o.output);
            }
        }
        std::ostream& sink = o.output.empty() ? out : file;

        int code = kExitOk;
        if (sub == count) {
            code = cmd_count(o, sink, err);
        } else if (sub == enumerate) {
            code = cmd_enumerate(o, sink);
        } else if (sub == gf) {
            code = cmd_gf(o, sink);
        } else if (sub == stationary) {
            code = cmd_stationary(o, sink);
        } else if (sub == physical) {
            code = cmd_physical(o, sink);
        } else if (sub == verify) {
            code = cmd_verify(o, sink);
        } else if (sub == moments) {
            code = cmd_moments(o, sink);
        } else if (sub == biject) {
            code = cmd_biject(o, in, sink);
        } else if (sub == selftest) {
            code = cmd_selftest(o, sink);
        }
        sink.flush();
        return code;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ShapeError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const DegeneracyError& e) {
        err << "degenerate: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitCapacity;
    }
}

} // namespace staircase

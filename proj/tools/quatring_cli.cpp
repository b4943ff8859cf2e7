#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "quatring/classify.hpp"
#include "quatring/errors.hpp"
#include "quatring/json_io.hpp"
#include "quatring/oracle.hpp"
#include "quatring/text.hpp"

namespace {

using namespace quatring;

constexpr int kOk = 0;
constexpr int kNegative = 1;

Ring ring_from_tag(const std::string& tag) {
    return tag == "H" ? Ring::H : Ring::L;
}

const char* ring_tag(Ring ring) { return ring == Ring::L ? "L" : "H"; }

// Payloads are literal text, `@file` to read a file, or `-` for stdin.
std::string load_payload(const std::string& raw) {
    if (raw == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    if (!raw.empty() && raw.front() == '@') {
        std::ifstream in(raw.substr(1));
        if (!in) throw ParseError("cannot open payload file '" + raw.substr(1) + "'", 1);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return raw;
}

QuatSet read_set(const std::string& raw, Ring ring) {
    ParsedSet parsed = parse_quat_set(load_payload(raw), ring);
    if (parsed.duplicates > 0) {
        std::cerr << "note: dropped " << parsed.duplicates << " duplicate element"
                  << (parsed.duplicates == 1 ? "" : "s") << "\n";
    }
    if (parsed.elements.empty()) throw ParseError("the set payload is empty", 1);
    return QuatSet(ring, parsed.elements);
}

void print_json(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

void print_witness_human(const Witness& w) {
    std::cout << "witness:\n";
    std::cout << "  f        = " << w.f.str() << "\n";
    if (w.partner_is_unit()) {
        std::cout << "  partner  = " << format_quat(w.partner_unit()) << "\n";
    } else {
        std::cout << "  partner  = " << w.partner_poly().str() << "\n";
    }
    std::cout << "  fails at " << format_quat(w.fail_at) << ": product evaluates to "
              << format_quat(w.fail_value) << ", outside the order\n";
    std::cout << "  modulus  = " << w.modulus << "\n";
    std::cout << "  verified = " << (w.verified ? "true" : "false") << "\n";
}

void print_verdict_human(const Verdict& v) {
    for (const ClassReport& c : v.classes) {
        std::cout << "class " << c.mpoly.str() << ": {" << format_quat_list(c.elems) << "}\n";
        std::cout << "  " << (c.is_ringset ? "ringset" : "not a ringset") << " ["
                  << rule_name(c.rule) << "] " << c.detail << "\n";
    }
    std::cout << (v.is_ringset ? "ringset" : "not a ringset") << " with respect to "
              << ring_tag(v.ring) << "\n";
    if (v.witness) print_witness_human(*v.witness);
}

int cmd_classify(const std::string& payload, Ring ring, bool json) {
    Verdict v = decide_ringset(read_set(payload, ring));
    if (json) {
        print_json(verdict_json(v));
    } else {
        print_verdict_human(v);
    }
    return v.is_ringset ? kOk : kNegative;
}

int cmd_witness(const std::string& payload, Ring ring, bool json) {
    Verdict v = decide_ringset(read_set(payload, ring));
    if (v.is_ringset) {
        if (json) {
            Json doc;
            doc["is_ringset"] = true;
            doc["witness"] = nullptr;
            print_json(doc);
        } else {
            std::cout << "ringset with respect to " << ring_tag(v.ring)
                      << "; no witness exists\n";
        }
        return kOk;
    }
    if (json) {
        Json doc;
        doc["is_ringset"] = false;
        doc["witness"] = witness_json(*v.witness, v.ring);
        print_json(doc);
    } else {
        print_witness_human(*v.witness);
    }
    return kNegative;
}

int cmd_reduce(const std::string& payload, Ring ring, bool json) {
    ReducedForm rf = reduce_set(read_set(payload, ring));
    if (json) {
        print_json(reduced_form_json(rf));
    } else {
        std::cout << "S = " << rf.a << " + " << rf.n << " * T\n";
        std::cout << "T = {" << format_quat_list(rf.t_elems) << "}\n";
    }
    return kOk;
}

int cmd_gamma(const std::string& payload, Ring ring, bool json) {
    QuatSet s = read_set(payload, ring);
    DeltaStats stats = delta_and_gamma(s);
    if (json) {
        print_json(delta_stats_json(stats));
        return kOk;
    }
    std::cout << "gamma = " << stats.gamma << "\n";
    std::cout << "differences: " << format_quat_list(stats.deltas) << "\n";
    if (stats.gamma > 0) {
        std::cout << "combination: gamma =";
        bool first = true;
        for (const auto& [coef, delta] : gamma_combination(stats)) {
            std::cout << (first ? " " : " + ") << coef << " * N(" << format_quat(delta) << ")";
            first = false;
        }
        std::cout << "\n";
    }
    return kOk;
}

int cmd_oracle(const std::string& payload, Ring ring, i64 gamma_cap, bool json) {
    OracleResult r = oracle_decide(read_set(payload, ring), gamma_cap);
    if (json) {
        print_json(oracle_result_json(r, ring));
    } else {
        std::cout << (r.is_ringset ? "ringset" : "not a ringset") << " with respect to "
                  << ring_tag(ring) << " (brute force: " << r.cosets_scanned
                  << " cosets scanned, " << r.admissible << " admissible)\n";
        if (r.witness) print_witness_human(*r.witness);
    }
    return r.is_ringset ? kOk : kNegative;
}

int cmd_separator(const std::string& payload_s, const std::string& payload_t, Ring ring,
                  bool json) {
    QuatSet s = read_set(payload_s, ring);
    QuatSet t = read_set(payload_t, ring);
    QPoly f = separator(s, t);
    if (json) {
        Json doc;
        doc["F"] = poly_json(f, ring);
        print_json(doc);
    } else {
        std::cout << "F = " << f.str() << "\n";
    }
    return kOk;
}

int cmd_enumerate(std::optional<i64> root, std::optional<i64> trace, std::optional<i64> norm,
                  Ring ring, bool json) {
    MinPoly m = [&] {
        if (root) {
            if (trace || norm)
                throw DomainError("--root excludes --trace/--norm");
            return MinPoly::linear(Rational(*root));
        }
        if (!trace || !norm)
            throw DomainError("enumerate needs either --root or both --trace and --norm");
        return MinPoly::quadratic(*trace, *norm);
    }();
    std::vector<Quat> elems = enumerate_class(m, ring);
    if (json) {
        Json doc;
        doc["min_poly"] = min_poly_json(m);
        doc["count"] = elems.size();
        Json arr = Json::array();
        for (const Quat& q : elems) arr.push_back(format_quat(q));
        doc["elements"] = arr;
        print_json(doc);
    } else {
        std::cout << "class " << m.str() << " in " << ring_tag(ring) << ": " << elems.size()
                  << " element" << (elems.size() == 1 ? "" : "s") << "\n";
        if (!elems.empty()) std::cout << format_quat_list(elems) << "\n";
    }
    return kOk;
}

int cmd_tn_example(i64 n, bool json) {
    std::vector<Quat> t = tn_example(n);
    if (json) {
        Json arr = Json::array();
        for (const Quat& q : t) arr.push_back(format_quat(q));
        print_json(arr);
    } else {
        std::cout << format_quat_list(t) << "\n";
    }
    return kOk;
}

int cmd_check_prop56(const std::string& payload, Ring ring, i64 n_max, bool json) {
    bool ok = check_prop56_hypothesis(read_set(payload, ring), n_max);
    if (json) {
        Json doc;
        doc["n_max"] = n_max;
        doc["holds"] = ok;
        print_json(doc);
    } else {
        std::cout << "hypothesis " << (ok ? "holds" : "fails") << " for n = 2.." << n_max << "\n";
    }
    return ok ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decide whether a finite set of Lipschitz or Hurwitz quaternions is a ringset"};
    app.require_subcommand(1);

    std::string ring_opt = "L";
    bool json = false;
    std::uint64_t seed = 0;
    i64 gamma_cap = kDefaultGammaCap;
    std::string payload;
    std::string payload2;
    i64 n_arg = 0;
    i64 n_max = 4;
    std::optional<i64> opt_root;
    std::optional<i64> opt_trace;
    std::optional<i64> opt_norm;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-r,--ring", ring_opt, "Order to work in: L or H")
            ->check(CLI::IsMember({"L", "H"}))
            ->capture_default_str();
        cmd->add_flag("--json", json, "Emit a JSON report instead of text");
        cmd->add_option("--seed", seed,
                        "Seed for randomized self-tests; decision paths ignore it");
    };
    auto add_payload = [&](CLI::App* cmd) {
        cmd->add_option("set", payload,
                        "Comma/newline separated quaternion literals, @file, or - for stdin")
            ->required();
    };

    CLI::App* c_classify =
        app.add_subcommand("classify", "Decide the ringset property via the classification rules");
    add_common(c_classify);
    add_payload(c_classify);

    CLI::App* c_witness =
        app.add_subcommand("witness", "Decide and report only the certificate for a failure");
    add_common(c_witness);
    add_payload(c_witness);

    CLI::App* c_reduce =
        app.add_subcommand("reduce", "Write a single-class set as a + n*T with T reduced");
    add_common(c_reduce);
    add_payload(c_reduce);

    CLI::App* c_gamma =
        app.add_subcommand("gamma", "Difference gcd of the set and a certifying combination");
    add_common(c_gamma);
    add_payload(c_gamma);

    CLI::App* c_oracle =
        app.add_subcommand("oracle", "Decide by brute force over cosets (independent of classify)");
    add_common(c_oracle);
    add_payload(c_oracle);
    c_oracle->add_option("--gamma-cap", gamma_cap, "Refuse classes whose difference gcd exceeds this")
        ->capture_default_str();

    CLI::App* c_separator = app.add_subcommand(
        "separator", "Central polynomial vanishing on the first set and 1 on the second");
    add_common(c_separator);
    c_separator->add_option("set", payload, "Set the polynomial vanishes on")->required();
    c_separator->add_option("target", payload2, "Single-class set the polynomial maps to 1")
        ->required();

    CLI::App* c_enumerate =
        app.add_subcommand("enumerate", "List all order elements with a given minimal polynomial");
    add_common(c_enumerate);
    c_enumerate->add_option("--root", opt_root, "Integer root for a linear class");
    c_enumerate->add_option("--trace", opt_trace, "Trace of the quadratic class");
    c_enumerate->add_option("--norm", opt_norm, "Norm of the quadratic class");

    CLI::App* c_tn = app.add_subcommand("tn-example", "The block T_n of the infinite ringset family");
    add_common(c_tn);
    c_tn->add_option("n", n_arg, "Block index n >= 1")->required();

    CLI::App* c_prop = app.add_subcommand(
        "check-prop56", "Check the matching hypothesis for all moduli up to --n-max");
    add_common(c_prop);
    add_payload(c_prop);
    c_prop->add_option("--n-max", n_max, "Largest modulus to check")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        Ring ring = ring_from_tag(ring_opt);
        if (app.got_subcommand(c_classify)) return cmd_classify(payload, ring, json);
        if (app.got_subcommand(c_witness)) return cmd_witness(payload, ring, json);
        if (app.got_subcommand(c_reduce)) return cmd_reduce(payload, ring, json);
        if (app.got_subcommand(c_gamma)) return cmd_gamma(payload, ring, json);
        if (app.got_subcommand(c_oracle)) return cmd_oracle(payload, ring, gamma_cap, json);
        if (app.got_subcommand(c_separator)) return cmd_separator(payload, payload2, ring, json);
        if (app.got_subcommand(c_enumerate))
            return cmd_enumerate(opt_root, opt_trace, opt_norm, ring, json);
        if (app.got_subcommand(c_tn)) return cmd_tn_example(n_arg, json);
        if (app.got_subcommand(c_prop)) return cmd_check_prop56(payload, ring, n_max, json);
        std::cerr << "error: no subcommand selected\n";
        return 2;
    } catch (const CapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

// Command-line surface over the exact f-vector machinery. Every command
// prints one JSON document on stdout; big integers are decimal strings.
//
// Exit codes: 0 decision "true" / success, 1 decision "false",
//             2 input error, 3 budget or timeout.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "polyfc/json_io.hpp"

namespace {

using namespace polyfc;

constexpr const char* kUsage = R"(usage: polyfc <command> [args]

commands:
  gtheorem check <d> <f...>                 g-theorem membership of an f-vector
  convert <f|h|g> <f|h|g> <d> <values...>   convert between f-, h- and g-vectors
  pseudopower <n> <i>                       Macaulay pseudopower n^<i>
  fibercount simplicial <d> <a> <b> [--count|--is-one] [--node-cap <n>]
  fibercount special <d>                    f-vector count at f0=2d+1, f(d-1)=d+2
  range simplicial <d> <a> <b> <L> <U> [--node-cap <n>]
  semiprime <d>                             fiber count == 1 test for f0=2d+1
  phi <v> <d>                               minimum facet count with v vertices
  family trst <r> <s> <t>                   f-vector of the T^{r,s,t} polytope
  reduce divisor <L> <U> <d> [--answer]     DIVISOR -> f1-interval instance
  verify <divisor|semiprime> --max <n> [--seed <s>]
  --batch <path>                            run one command per line from a file
)";

struct Args {
    std::vector<std::string> pos;
    bool count = false, is_one = false, answer = false;
    std::uint64_t node_cap = 10'000'000;
    std::optional<Int> max;
    std::uint64_t seed = FactorConfig{}.seed;
};

Args parse_args(const std::vector<std::string>& argv) {
    Args a;
    for (std::size_t i = 0; i < argv.size(); ++i) {
        const std::string& s = argv[i];
        auto next = [&](const char* flag) -> const std::string& {
            if (++i == argv.size())
                throw PreconditionViolated(std::string(flag) + " needs a value");
            return argv[i];
        };
        if (s == "--count")
            a.count = true;
        else if (s == "--is-one")
            a.is_one = true;
        else if (s == "--answer")
            a.answer = true;
        else if (s == "--node-cap")
            a.node_cap = static_cast<std::uint64_t>(parse_nat(next("--node-cap")));
        else if (s == "--max")
            a.max = parse_nat(next("--max"));
        else if (s == "--seed")
            a.seed = static_cast<std::uint64_t>(parse_nat(next("--seed")));
        else if (!s.empty() && s[0] == '-' && s.size() > 1 && !std::isdigit(s[1]))
            throw PreconditionViolated("unknown flag: " + s);
        else
            a.pos.push_back(s);
    }
    return a;
}

void need(const Args& a, std::size_t n, const char* what) {
    if (a.pos.size() != n)
        throw PreconditionViolated(std::string("expected: ") + what);
}

int emit(const json& j, bool decision = true) {
    std::cout << j.dump() << "\n";
    return decision ? 0 : 1;
}

int cmd_gtheorem(const Args& a) {
    if (a.pos.size() < 2 || a.pos[0] != "check")
        throw PreconditionViolated("expected: gtheorem check <d> <f...>");
    FVector f;
    f.d = static_cast<int>(parse_nat(a.pos[1]));
    for (std::size_t i = 2; i < a.pos.size(); ++i)
        f.entries.push_back(parse_nat(a.pos[i]));
    if (f.entries.size() != static_cast<std::size_t>(f.d) + 1)
        throw PreconditionViolated("an f-vector in dimension d has d+1 entries "
                                   "(including f_{-1} = 1)");
    bool member = gtheorem_check(f);
    return emit(json{{"member", member}}, member);
}

int cmd_convert(const Args& a) {
    if (a.pos.size() < 3)
        throw PreconditionViolated("expected: convert <f|h|g> <f|h|g> <d> <values...>");
    const std::string from = a.pos[0], to = a.pos[1];
    for (const std::string& k : {from, to})
        if (k != "f" && k != "h" && k != "g")
            throw PreconditionViolated("vector kind must be f, h or g");
    const Int d = parse_nat(a.pos[2]);
    std::vector<Int> values;
    for (std::size_t i = 3; i < a.pos.size(); ++i)
        values.push_back(parse_int(a.pos[i]));

    // Normalize through the h-vector.
    HVector h;
    if (from == "f") {
        FVector f{static_cast<int>(d), values};
        h = f_to_h(f);
    } else if (from == "h") {
        h = HVector{static_cast<int>(d), values};
        if (h.entries.size() != static_cast<std::size_t>(h.d) + 1)
            throw PreconditionViolated("an h-vector has d+1 entries");
    } else {
        h = g_to_h(GVector{d, values});
    }

    if (to == "f")
        return emit(json(h_to_f(h)));
    if (to == "h")
        return emit(json(h));
    return emit(json(h_to_g(h)));
}

int cmd_pseudopower(const Args& a) {
    need(a, 2, "pseudopower <n> <i>");
    Int n = parse_nat(a.pos[0]);
    int i = static_cast<int>(parse_nat(a.pos[1]));
    return emit(json{{"value", dec(pseudopower(n, i))}});
}

int cmd_fibercount(const Args& a) {
    if (a.pos.empty())
        throw PreconditionViolated("expected: fibercount <simplicial|special> ...");
    if (a.pos[0] == "special") {
        need(a, 2, "fibercount special <d>");
        return emit(json{{"fc", dec(fiber_count_special(parse_nat(a.pos[1])))}});
    }
    if (a.pos[0] != "simplicial")
        throw PreconditionViolated("expected: fibercount <simplicial|special> ...");
    need(a, 4, "fibercount simplicial <d> <a> <b>");
    SimplicialQuery q{parse_nat(a.pos[1]), parse_nat(a.pos[2]), parse_nat(a.pos[3]),
                      std::nullopt};
    EnumerationConfig cfg{a.node_cap};
    if (a.is_one) {
        bool one = fiber_count_simplicial_is_one(q, cfg);
        return emit(json{{"is_one", one}}, one);
    }
    GEnumeration e = enumerate_gvectors(q, cfg);
    json j{{"count", dec(Int(e.solutions.size()))}, {"budget_used", e.budget_used}};
    j["solutions"] = e.solutions;
    return emit(j);
}

int cmd_range(const Args& a) {
    if (a.pos.empty() || a.pos[0] != "simplicial")
        throw PreconditionViolated("expected: range simplicial <d> <a> <b> <L> <U>");
    need(a, 6, "range simplicial <d> <a> <b> <L> <U>");
    SimplicialQuery q{parse_nat(a.pos[1]), parse_nat(a.pos[2]), parse_nat(a.pos[3]),
                      std::make_pair(parse_nat(a.pos[4]), parse_nat(a.pos[5]))};
    bool exists = range_exists_simplicial(q, EnumerationConfig{a.node_cap});
    return emit(json{{"exists", exists}}, exists);
}

int cmd_semiprime(const Args& a) {
    need(a, 1, "semiprime <d>");
    FactorConfig cfg;
    cfg.seed = a.seed;
    bool one = fiber_count_special_is_one(parse_nat(a.pos[0]), cfg);
    return emit(json{{"is_one", one}}, one);
}

int cmd_phi(const Args& a) {
    need(a, 2, "phi <v> <d>");
    return emit(json(phi_facets(parse_nat(a.pos[0]), parse_nat(a.pos[1]))));
}

int cmd_family(const Args& a) {
    if (a.pos.size() != 4 || a.pos[0] != "trst")
        throw PreconditionViolated("expected: family trst <r> <s> <t>");
    TRSTFamily fam{parse_nat(a.pos[1]), parse_nat(a.pos[2]), parse_nat(a.pos[3])};
    return emit(json(trst_fvector(fam)));
}

int cmd_reduce(const Args& a) {
    if (a.pos.size() != 4 || a.pos[0] != "divisor")
        throw PreconditionViolated("expected: reduce divisor <L> <U> <d>");
    DivisorInstance inst{parse_nat(a.pos[1]), parse_nat(a.pos[2]), parse_nat(a.pos[3])};
    F1RangeInstance out = divisor_to_f1range(inst);
    json j(out);
    if (!a.answer)
        return emit(j);
    bool ans = answer_f1range_general(out);
    j["answer"] = ans;
    return emit(j, ans);
}

int cmd_verify(const Args& a) {
    if (a.pos.size() != 1 || !a.max)
        throw PreconditionViolated("expected: verify <divisor|semiprime> --max <n>");
    VerificationReport report;
    if (a.pos[0] == "divisor") {
        report = verify_divisor_reduction(*a.max);
    } else if (a.pos[0] == "semiprime") {
        FactorConfig cfg;
        cfg.seed = a.seed;
        report = verify_semiprime_reduction(*a.max, cfg);
    } else {
        throw PreconditionViolated("expected: verify <divisor|semiprime> --max <n>");
    }
    // JSON-lines: one record per discrepancy, then the summary record.
    for (const Discrepancy& disc : report.discrepancies)
        std::cout << json(disc).dump() << "\n";
    std::cout << json(report).dump() << "\n";
    return report.clean() ? 0 : 1;
}

int run(const std::vector<std::string>& argv);

int cmd_batch(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw PreconditionViolated("cannot open batch file: " + path);
    int worst = 0;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        for (std::string tok; ls >> tok;)
            tokens.push_back(tok);
        if (tokens.empty() || tokens[0][0] == '#')
            continue;
        int code = run(tokens);
        if (code >= 2)
            worst = std::max(worst, code);
    }
    return worst;
}

int run(const std::vector<std::string>& argv) {
    try {
        if (argv.empty()) {
            std::cerr << kUsage;
            return 2;
        }
        if (argv[0] == "--batch") {
            if (argv.size() != 2)
                throw PreconditionViolated("expected: --batch <path>");
            return cmd_batch(argv[1]);
        }
        Args a = parse_args({argv.begin() + 1, argv.end()});
        const std::string& cmd = argv[0];
        if (cmd == "gtheorem")
            return cmd_gtheorem(a);
        if (cmd == "convert")
            return cmd_convert(a);
        if (cmd == "pseudopower")
            return cmd_pseudopower(a);
        if (cmd == "fibercount")
            return cmd_fibercount(a);
        if (cmd == "range")
            return cmd_range(a);
        if (cmd == "semiprime")
            return cmd_semiprime(a);
        if (cmd == "phi")
            return cmd_phi(a);
        if (cmd == "family")
            return cmd_family(a);
        if (cmd == "reduce")
            return cmd_reduce(a);
        if (cmd == "verify")
            return cmd_verify(a);
        std::cerr << "unknown command: " << cmd << "\n" << kUsage;
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const FactorizationTimeout& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args);
}

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include "bimlab/equivalence.hpp"
#include "bimlab/experiment.hpp"
#include "bimlab/instances.hpp"
#include "bimlab/lowerbound.hpp"
#include "bimlab/text_format.hpp"
#include "bimlab/tx2bm.hpp"

namespace bimlab::cli {

namespace {

/// IO problems; mapped to kExitUsage.
class IoError : public Error {
public:
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot write '" + path + "'");
    file << text;
    if (!file) throw IoError("failed writing '" + path + "'");
}

using Machine = std::variant<Transducer, Bimachine>;

Machine load_machine(const std::string& path) {
    const std::string text = read_file(path);
    if (sniff_kind(text) == MachineKind::kTransducer) return parse_transducer(text);
    return parse_bimachine(text);
}

const Alphabet& input_alphabet(const Machine& m) {
    return std::visit([](const auto& x) -> const Alphabet& { return x.input_alphabet(); }, m);
}

const Alphabet& output_alphabet(const Machine& m) {
    if (const auto* t = std::get_if<Transducer>(&m)) return t->output_alphabet();
    return std::get<Bimachine>(m).output_alphabet;
}

NamedFunction as_function(std::string name, const Machine& m) {
    if (const auto* t = std::get_if<Transducer>(&m)) {
        return {std::move(name), [t](const Word& w) { return evaluate_function(*t, w); }};
    }
    const auto* b = &std::get<Bimachine>(m);
    return {std::move(name), [b](const Word& w) { return evaluate(*b, w); }};
}

std::string show(const Alphabet& alphabet, const std::optional<Word>& w) {
    return w ? format_word(alphabet, *w) : "UNDEFINED";
}

// Letter-input, trimmed form of an arbitrary transducer.
Transducer prepared(const Transducer& t) { return trim(t.has_epsilon_inputs() ? remove_input_epsilons(t) : t); }

InstanceParams parse_oracle_spec(const std::string& spec) {
    const auto comma = spec.find(',');
    if (comma == std::string::npos) throw InputError("--oracle expects K,N");
    return InstanceParams(std::stoi(spec.substr(0, comma)), std::stoi(spec.substr(comma + 1)));
}

struct Options {
    int k = 0;
    int n = 0;
    bool unmerged = false;
    bool reduce = false;
    std::string in;
    std::string out;
    std::string method;
    std::string machine;
    std::string word;
    std::string a;
    std::string b;
    std::string oracle;
    std::size_t max_len = 6;
    std::size_t samples = 0;
    std::size_t sample_len = 0;
    std::uint64_t seed = 1;
    int kmax = 3;
    int nmax = 3;
    int generic_nmax = 3;
    std::string csv;
    bool timing = false;
    std::size_t state_cap = kDefaultLeftStateCap;
};

int cmd_instance(const Options& o, std::ostream& out) {
    const InstanceParams p(o.k, o.n);
    write_output(o.out, emit_transducer(instance_transducer(p, !o.unmerged)), out);
    return kExitOk;
}

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
    Bimachine b;
    if (o.method == "handcrafted") {
        b = handcrafted_bimachine(InstanceParams(o.k, o.n));
    } else {
        if (o.in.empty()) throw InputError("--method generic needs --in");
        const Transducer t = parse_transducer(read_file(o.in));
        try {
            b = to_bimachine(prepared(t), o.state_cap);
        } catch (const NonFunctionalError& e) {
            err << "NON-FUNCTIONAL witness=" << format_word(t.input_alphabet(), e.input()) << '\n';
            return kExitViolation;
        }
    }
    if (o.reduce) b = reduce(b);
    write_output(o.out, emit_bimachine(b), out);
    return kExitOk;
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream& err) {
    const Machine m = load_machine(o.machine);
    const Word w = parse_word(input_alphabet(m), o.word);
    try {
        out << show(output_alphabet(m), as_function("machine", m).apply(w)) << '\n';
    } catch (const NonFunctionalError& e) {
        err << "NON-FUNCTIONAL outputs " << format_word(output_alphabet(m), e.first()) << " and "
            << format_word(output_alphabet(m), e.second()) << '\n';
        return kExitViolation;
    }
    return kExitOk;
}

int cmd_functional(const Options& o, std::ostream& out) {
    const Transducer t = parse_transducer(read_file(o.in));
    const FunctionalityVerdict v = check_functional(prepared(t));
    if (v.functional) {
        out << "FUNCTIONAL\n";
        return kExitOk;
    }
    out << "NON-FUNCTIONAL witness=" << format_word(t.input_alphabet(), *v.witness) << '\n';
    return kExitViolation;
}

int cmd_equiv(const Options& o, std::ostream& out, std::ostream& err) {
    std::vector<Machine> machines;
    std::vector<NamedFunction> functions;
    std::optional<InstanceParams> params;
    if (!o.oracle.empty()) params = parse_oracle_spec(o.oracle);
    machines.reserve(2);
    if (!o.a.empty()) machines.push_back(load_machine(o.a));
    if (!o.b.empty()) machines.push_back(load_machine(o.b));

    if (params) functions.push_back({"oracle", [p = *params](const Word& w) { return oracle_f(p, w); }});
    const char* names[] = {"a", "b"};
    for (std::size_t i = 0; i < machines.size(); ++i) functions.push_back(as_function(names[i], machines[i]));
    if (functions.size() < 2) throw InputError("equiv needs two of --a, --b, --oracle");

    const Alphabet sigma = params ? params->alphabet() : input_alphabet(machines.front());
    for (const auto& m : machines) {
        if (!(input_alphabet(m) == sigma)) throw InputError("machines use different input alphabets");
    }
    const Alphabet& omega = machines.empty() ? sigma : output_alphabet(machines.front());
    const std::size_t sample_len = o.sample_len != 0 ? o.sample_len : std::max<std::size_t>(8, 2 * o.max_len);
    const WordSampler sampler =
        params ? instance_sampler(*params, sample_len) : uniform_sampler(sigma.size(), sample_len);

    EquivalenceReport report;
    try {
        report = check_equivalence(functions, sigma.size(), o.max_len, o.samples, o.seed, sampler);
    } catch (const NonFunctionalError& e) {
        err << "NON-FUNCTIONAL on " << format_word(sigma, e.input()) << '\n';
        return kExitViolation;
    }
    if (report.equivalent()) {
        out << "EQUIVALENT(tested=" << report.tested << ")\n";
        return kExitOk;
    }
    const auto& m = *report.mismatch;
    out << "MISMATCH word=" << format_word(sigma, m.word) << ' ' << m.first_name << '='
        << show(omega, m.first_output) << ' ' << m.second_name << '=' << show(omega, m.second_output) << '\n';
    return kExitViolation;
}

std::string describe_pair(const Alphabet& sigma, const std::optional<FoolingPair>& pair) {
    if (!pair) return "certified";
    return "collision(" + format_word(sigma, pair->first) + "," + format_word(sigma, pair->second) + "->" +
           std::to_string(pair->collision_state) + ")";
}

int cmd_refute(const Options& o, std::ostream& out) {
    const InstanceParams p(o.k, o.n);
    const Bimachine b = parse_bimachine(read_file(o.machine));
    const Alphabet sigma = p.alphabet();
    const RefuteVerdict verdict = refute(b, p);
    if (const auto* ok = std::get_if<BoundRespected>(&verdict)) {
        out << "BOUND-RESPECTED left=" << describe_pair(sigma, ok->collisions.left)
            << " right=" << describe_pair(sigma, ok->collisions.right) << '\n';
        return kExitOk;
    }
    if (const auto* bad = std::get_if<Mismatch>(&verdict)) {
        out << "MISMATCH word=" << format_word(sigma, bad->word) << " expected=" << format_word(sigma, bad->expected)
            << " actual=" << show(b.output_alphabet, bad->actual) << '\n';
        return kExitViolation;
    }
    out << "SOUNDNESS-ALARM\n";
    return kExitViolation;
}

int cmd_experiment(const Options& o, std::ostream& out) {
    ExperimentBudget budget;
    budget.generic_max_n = o.generic_nmax;
    budget.measure_time = o.timing;
    budget.left_state_cap = o.state_cap;
    if (o.samples != 0) budget.samples = o.samples;
    const auto rows = run_experiment(make_grid(o.kmax, o.nmax),
                                     {Construction::kGeneric, Construction::kHandcrafted}, o.seed, budget);
    std::ostringstream csv;
    write_csv(csv, rows);
    write_output(o.csv, csv.str(), out);
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Transducer and bimachine state-complexity laboratory", "bimlab"};
    app.require_subcommand(1);
    Options o;

    auto* instance = app.add_subcommand("instance", "write the hard-family transducer for (k, n)");
    instance->add_option("--k", o.k, "half alphabet size (>= 2)")->required();
    instance->add_option("--n", o.n, "window length (>= 1)")->required();
    instance->add_flag("--unmerged", o.unmerged, "keep separate heads and tails");
    instance->add_option("--out", o.out, "output file (default stdout)");

    auto* construct = app.add_subcommand("construct", "build a bimachine");
    construct->add_option("--in", o.in, "transducer file (generic method)");
    construct->add_option("--method", o.method, "generic or handcrafted")
        ->required()
        ->check(CLI::IsMember({"generic", "handcrafted"}));
    construct->add_option("--k", o.k, "instance k (handcrafted)");
    construct->add_option("--n", o.n, "instance n (handcrafted)");
    construct->add_flag("--reduce", o.reduce, "merge states with identical psi rows");
    construct->add_option("--out", o.out, "output file (default stdout)");
    construct->add_option("--state-cap", o.state_cap, "left automaton state cap");

    auto* eval = app.add_subcommand("eval", "evaluate a machine on one word");
    eval->add_option("--machine", o.machine, "transducer or bimachine file")->required();
    eval->add_option("--word", o.word, "dot-joined tokens, '-' for the empty word")->required();

    auto* functional = app.add_subcommand("functional", "decide whether a transducer is functional");
    functional->add_option("--in", o.in, "transducer file")->required();

    auto* equiv = app.add_subcommand("equiv", "compare machines and/or the hard-family oracle");
    equiv->add_option("--a", o.a, "first machine file");
    equiv->add_option("--b", o.b, "second machine file");
    equiv->add_option("--oracle", o.oracle, "compare against the direct definition for K,N");
    equiv->add_option("--max-len", o.max_len, "exhaustive length bound");
    equiv->add_option("--samples", o.samples, "number of random words after the exhaustive pass");
    equiv->add_option("--sample-len", o.sample_len, "maximum random word length");
    equiv->add_option("--seed", o.seed, "random seed");

    auto* refute_cmd = app.add_subcommand("refute", "look for a lower-bound violation in a bimachine");
    refute_cmd->add_option("--machine", o.machine, "bimachine file")->required();
    refute_cmd->add_option("--k", o.k, "instance k")->required();
    refute_cmd->add_option("--n", o.n, "instance n")->required();

    auto* experiment = app.add_subcommand("experiment", "run the state-count grid and write CSV");
    experiment->add_option("--kmax", o.kmax, "largest k");
    experiment->add_option("--nmax", o.nmax, "largest n");
    experiment->add_option("--generic-nmax", o.generic_nmax, "largest n for the generic construction");
    experiment->add_option("--csv", o.csv, "output file (default stdout)");
    experiment->add_option("--seed", o.seed, "random seed");
    experiment->add_option("--samples", o.samples, "random words per cell");
    experiment->add_option("--state-cap", o.state_cap, "left automaton state cap for the generic construction");
    experiment->add_flag("--timing", o.timing, "record wall-clock time per cell");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (instance->parsed()) return cmd_instance(o, out);
        if (construct->parsed()) {
            if (o.method == "handcrafted" && (o.k == 0 || o.n == 0)) {
                throw InputError("--method handcrafted needs --k and --n");
            }
            return cmd_construct(o, out, err);
        }
        if (eval->parsed()) return cmd_eval(o, out, err);
        if (functional->parsed()) return cmd_functional(o, out);
        if (equiv->parsed()) return cmd_equiv(o, out, err);
        if (refute_cmd->parsed()) return cmd_refute(o, out);
        if (experiment->parsed()) return cmd_experiment(o, out);
    } catch (const ExperimentFailure& e) {
        err << "experiment failed: " << e.what() << '\n';
        return kExitViolation;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace bimlab::cli

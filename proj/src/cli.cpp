#include "cyclic/cli.hpp"

#include "cyclic/error.hpp"
#include "cyclic/fibre.hpp"
#include "cyclic/k1.hpp"
#include "cyclic/quiver.hpp"
#include "cyclic/report.hpp"
#include "cyclic/syntax.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>

namespace cyclic::cli {

namespace {

using report::Json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// "@path" reads the argument from a file.
std::string argument(const std::string& value) {
    if (value.empty() || value[0] != '@') {
        return value;
    }
    std::ifstream in(value.substr(1));
    if (!in) {
        throw UsageError("cannot read " + value.substr(1));
    }
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

unsigned thread_count() {
    const char* env = std::getenv("CYCLIC_MODULI_THREADS");
    if (env == nullptr || *env == '\0') {
        return 1;
    }
    char* end = nullptr;
    const unsigned long n = std::strtoul(env, &end, 10);
    if (*end != '\0' || n == 0 || n > 1024) {
        throw UsageError(std::string("CYCLIC_MODULI_THREADS must be an integer in 1..1024, got '") + env + "'");
    }
    return static_cast<unsigned>(n);
}

Error wrong_kind(const std::string& command, const char* needed) {
    return Error(ErrorKind::SemanticError, "'" + command + "' needs a " + needed + " spec");
}

CyclicQuiver canonical(const QuiverSpec& spec) { return reindex_canonical(spec.cyclic()); }

struct Options {
    bool json = false;
    std::string spec;
    std::string gamma;
    std::string profile;
    std::string rep;
    bool zero_residual = false;
};

Json analyze(const QuiverSpec& spec) {
    if (spec.kind == QuiverSpec::Kind::K1) {
        const K1Quiver q = spec.k1();
        return report::decomposition(q, decompose(q));
    }
    const CyclicQuiver q = canonical(spec);
    Json doc = report::descriptor(q, moduli_descriptor(q));
    doc["input"] = to_string(spec);
    doc["reindexed"] = !(q == spec.cyclic());
    return doc;
}

Json fibre(const QuiverSpec& spec, const Options& o) {
    if (spec.kind != QuiverSpec::Kind::Cyclic) {
        throw wrong_kind("fibre", "cyclic");
    }
    const CyclicQuiver q = canonical(spec);
    const Section gamma = parse_section(argument(o.gamma), q.size() * q.twist());
    return report::fibre(q, enumerate_fibre(q, gamma, EnumerateOptions{thread_count()}));
}

Json count(const QuiverSpec& spec, const Options& o) {
    if (spec.kind == QuiverSpec::Kind::K1) {
        const K1Quiver q = spec.k1();
        if (o.zero_residual == !o.profile.empty()) {
            throw UsageError("'count' on a k1 spec needs exactly one of --profile and --zero-residual");
        }
        std::optional<std::vector<int>> profile;
        if (!o.zero_residual) {
            profile = parse_int_list(argument(o.profile));
        }
        Json doc = report::k1_count(k1_fibre_count(q, profile));
        doc["quiver"] = q.to_string();
        return doc;
    }
    if (o.profile.empty() || o.zero_residual) {
        throw UsageError("'count' on a cyclic spec needs --profile");
    }
    const CyclicQuiver q = canonical(spec);
    const auto profile = parse_int_list(argument(o.profile));
    return Json{{"quiver", q.to_string()}, {"profile", profile}, {"count", report::integer(count_fibre(q, profile))}};
}

Json nilcone(const QuiverSpec& spec) {
    if (spec.kind != QuiverSpec::Kind::Cyclic) {
        throw wrong_kind("nilcone", "cyclic");
    }
    const CyclicQuiver q = canonical(spec);
    return report::fibre(q, nilcone_fibre_set(q));
}

Json flow(const QuiverSpec& spec, const Options& o) {
    if (spec.kind != QuiverSpec::Kind::Cyclic) {
        throw wrong_kind("flow", "cyclic");
    }
    const CyclicRep r = parse_cyclic_rep(spec.cyclic(), argument(o.rep));
    const CyclicRep limit = flow_limit(r);
    return Json{{"quiver", r.quiver().to_string()},
                {"rep", report::rep(r)},
                {"limit", report::rep(limit)},
                {"limit_stable", is_stable(limit)},
                {"hitchin_image", format_section(hitchin_image(limit))}};
}

Json stable(const QuiverSpec& spec, const Options& o) {
    if (spec.kind != QuiverSpec::Kind::Cyclic) {
        throw wrong_kind("stable", "cyclic");
    }
    const CyclicRep r = parse_cyclic_rep(spec.cyclic(), argument(o.rep));
    Json doc = report::stability(stability(r));
    doc["quiver"] = r.quiver().to_string();
    doc["zero_maps"] = r.zero_count();
    return doc;
}

Json reduce(const QuiverSpec& spec, const Options& o) {
    if (spec.kind != QuiverSpec::Kind::K1) {
        throw wrong_kind("reduce", "k1");
    }
    const K1Rep r = parse_k1_rep(spec.k1(), argument(o.rep));
    return report::reduction(r, reduce_rep(r));
}

Json decomposition(const QuiverSpec& spec) {
    if (spec.kind != QuiverSpec::Kind::K1) {
        throw wrong_kind("decompose", "k1");
    }
    const K1Quiver q = spec.k1();
    return report::decomposition(q, decompose(q));
}

void emit(const std::string& command, const Json& doc, bool json, std::ostream& out) {
    if (json) {
        out << doc.dump(2) << "\n";
        return;
    }
    if (command == "count" && doc.contains("count") && !doc.contains("special_locus")) {
        const Json& n = doc["count"];
        out << (n.is_string() ? n.get<std::string>() : n.dump()) << "\n";
        return;
    }
    out << report::text(doc);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Moduli of twisted cyclic quiver representations on the projective line", "cyclic-moduli"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Emit JSON instead of text");

    auto with_spec = [&](CLI::App* sub) {
        sub->add_option("spec", o.spec, "Quiver spec, or @file")->required();
        sub->fallthrough();
        return sub;
    };
    with_spec(app.add_subcommand("analyze", "Sheet count, nilpotent cone and dimensions"));
    with_spec(app.add_subcommand("fibre", "Enumerate the fibre over gamma"))
        ->add_option("--gamma", o.gamma, "Section of O(nt)")
        ->required();
    auto* count_cmd = with_spec(app.add_subcommand("count", "Count fibre points for a multiplicity profile"));
    count_cmd->add_option("--profile", o.profile, "Comma-separated multiplicities");
    count_cmd->add_flag("--zero-residual", o.zero_residual, "k1 only: the residual section vanishes");
    with_spec(app.add_subcommand("nilcone", "Fibre over zero"));
    with_spec(app.add_subcommand("flow", "Limit point of the flow into the nilpotent cone"))
        ->add_option("--rep", o.rep, "phi1=...; phi2=...")
        ->required();
    with_spec(app.add_subcommand("stable", "Stability test with a destabilizing witness"))
        ->add_option("--rep", o.rep, "phi1=...; phi2=...")
        ->required();
    with_spec(app.add_subcommand("reduce", "Euclidean reduction of a (k,1) representation"))
        ->add_option("--rep", o.rep, "phi1=...; phi2=...")
        ->required();
    with_spec(app.add_subcommand("decompose", "Adjusted (1,1) factors and cover count"));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::string message = e.what();
        std::replace(message.begin(), message.end(), '\n', ' ');
        err << "error[UsageError] " << message << "\n";
        return 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        const QuiverSpec spec = parse_spec(argument(o.spec));
        Json doc;
        if (command == "analyze") {
            doc = analyze(spec);
        } else if (command == "fibre") {
            doc = fibre(spec, o);
        } else if (command == "count") {
            doc = count(spec, o);
        } else if (command == "nilcone") {
            doc = nilcone(spec);
        } else if (command == "flow") {
            doc = flow(spec, o);
        } else if (command == "stable") {
            doc = stable(spec, o);
        } else if (command == "reduce") {
            doc = reduce(spec, o);
        } else {
            doc = decomposition(spec);
        }
        emit(command, doc, o.json, out);
        return 0;
    } catch (const SyntaxError& e) {
        err << "error[SyntaxError] " << e.line() << ":" << e.column() << ": " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error[UsageError] " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error[" << to_string(e.kind()) << "] " << e.what() << "\n";
        return e.kind() == ErrorKind::SemanticError ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error[Internal] " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cyclic::cli

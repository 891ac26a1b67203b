#include "stellar/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "stellar/error.hpp"
#include "stellar/fixtures.hpp"
#include "stellar/io.hpp"

namespace stellar::cli {

namespace {

using nlohmann::json;

struct Flags {
    std::string input;
    std::string output;
    std::string simplex;
    std::string name;
    std::size_t budget = 10000;
    std::uint64_t seed = 0;
    bool summary = false;
};

std::string slurp(std::istream& in)
{
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

ComplexDocument read_document(const Flags& flags, std::istream& in)
{
    if (flags.input.empty() || flags.input == "-")
        return parse(slurp(in));
    std::ifstream file(flags.input, std::ios::binary);
    if (!file)
        throw StellarError(ErrorKind::Malformed, "cannot open " + flags.input);
    return parse(slurp(file));
}

Simplex parse_simplex_flag(const std::string& csv)
{
    std::vector<VertexId> vs;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size() || v < 0 || v > static_cast<long long>(UINT32_MAX))
                throw std::invalid_argument(item);
            vs.emplace_back(static_cast<std::uint32_t>(v));
        } catch (const std::logic_error&) {
            throw StellarError(ErrorKind::Malformed, "--simplex: bad label \"" + item + "\"");
        }
    }
    if (vs.empty())
        throw StellarError(ErrorKind::Malformed, "--simplex needs at least one label");
    return Simplex(std::move(vs));
}

RecognitionOptions recognition_options(const Flags& flags)
{
    return {flags.budget, flags.seed};
}

std::string summarize(const StarNormalForm& nf)
{
    std::ostringstream os;
    os << "apex " << nf.apex << ", S has " << nf.sphere.size() << " generators on " << nf.sphere.vertices().size()
       << " vertices\n";
    os << nf.steps << " loop steps, " << nf.trace.size() << " recorded moves\n";
    os << nf.eq.classes().size() << " nontrivial vertex classes, " << nf.pairing.pairs.size() << " generator pairs, "
       << nf.pairing.unpaired.size() << " unpaired\n";
    os << "euler characteristic of a*(S/~): " << star_quotient_euler_characteristic(nf.sphere, nf.eq) << '\n';
    for (const auto& w : nf.warnings)
        os << "warning: " << w << '\n';
    return os.str();
}

std::string execute(const std::string& command, const Flags& flags, std::istream& in, std::ostream& err)
{
    if (command == "fixtures") {
        if (flags.name.empty())
            throw StellarError(ErrorKind::Malformed, "fixtures needs --name");
        ComplexDocument doc = make_document(fixtures::by_name(flags.name));
        doc.metadata = {{"name", flags.name}};
        return serialize(doc) + "\n";
    }

    const ComplexDocument doc = read_document(flags, in);
    const Complex& k = doc.complex;

    if (command == "validate") {
        json report{{"dimension", doc.dimension},
                    {"generators", k.size()},
                    {"vertices", k.vertices().size()},
                    {"uniform", k.is_uniform()},
                    {"closed", is_closed(k)},
                    {"components", connected_components(k).size()},
                    {"euler_characteristic", euler_characteristic(k)}};
        if (!k.empty()) {
            auto manifold = is_stellar_manifold(k, recognition_options(flags));
            report["manifold"] = {{"verdict", std::string(to_string(manifold.verdict.answer))},
                                  {"witness", manifold.verdict.witness}};
        }
        if (doc.equivalence) {
            auto regular = validate_regular(k, *doc.equivalence);
            report["equivalence"] = {{"verdict", std::string(to_string(regular.answer))},
                                     {"witness", regular.witness}};
        }
        return report.dump(2) + "\n";
    }
    if (command == "manifold")
        return to_json(is_stellar_manifold(k, recognition_options(flags))).dump(2) + "\n";
    if (command == "normalize") {
        NormalizeOptions options;
        options.recognition = recognition_options(flags);
        const StarNormalForm nf = normalize(k, options);
        if (flags.summary)
            err << summarize(nf);
        return to_json(nf).dump() + "\n";
    }
    if (command == "link") {
        if (flags.simplex.empty())
            throw StellarError(ErrorKind::Malformed, "link needs --simplex");
        return serialize(make_document(link(parse_simplex_flag(flags.simplex), k))) + "\n";
    }
    if (command == "boundary")
        return serialize(make_document(boundary(k))) + "\n";
    if (command == "recognize")
        return to_json(recognize_ball_or_sphere(k, recognition_options(flags))).dump(2) + "\n";
    if (command == "pi1") {
        NormalizeOptions options;
        options.recognition = recognition_options(flags);
        const auto p = presentation(normalize(k, options));
        const auto a = abelianization(p);
        return to_string(p) + "\nabelianization: " + to_string(a) + "\n";
    }
    if (command == "euler")
        return std::to_string(euler_characteristic(k)) + "\n";
    throw StellarError(ErrorKind::Malformed, "unknown command " + command);
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Stellar moves, star normal forms and fundamental groups of simplicial complexes", "stellar"};
    app.require_subcommand(1);

    Flags flags;
    auto add_io = [&](CLI::App* sub, bool input) {
        if (input)
            sub->add_option("--input,-i", flags.input, "complex document (default: stdin)");
        sub->add_option("--output,-o", flags.output, "write the result here (default: stdout)");
    };
    auto add_search = [&](CLI::App* sub) {
        sub->add_option("--budget", flags.budget, "move budget for recognition above dimension 2");
        sub->add_option("--seed", flags.seed, "seed for the recognition search");
    };

    add_io(app.add_subcommand("boundary", "boundary of the complex"), true);
    add_io(app.add_subcommand("euler", "euler characteristic"), true);
    auto* validate = app.add_subcommand("validate", "document checks and manifold report");
    add_io(validate, true);
    add_search(validate);
    auto* manifold = app.add_subcommand("manifold", "vertex-link manifold report");
    add_io(manifold, true);
    add_search(manifold);
    auto* recognize = app.add_subcommand("recognize", "stellar ball / sphere recognition");
    add_io(recognize, true);
    add_search(recognize);
    auto* normal = app.add_subcommand("normalize", "star normal form a*(S/~)");
    add_io(normal, true);
    add_search(normal);
    normal->add_flag("--summary", flags.summary, "print a human summary to stderr");
    auto* pi1 = app.add_subcommand("pi1", "fundamental group presentation and abelian invariants");
    add_io(pi1, true);
    add_search(pi1);
    auto* lk = app.add_subcommand("link", "link of a simplex");
    add_io(lk, true);
    lk->add_option("--simplex", flags.simplex, "comma separated labels, e.g. 1,2")->required();
    auto* fixtures = app.add_subcommand("fixtures", "emit a built-in fixture document");
    add_io(fixtures, false);
    fixtures->add_option("--name", flags.name, "simplex-k, sphere-k, octahedron, torus7, rp2-6")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        const std::string result = execute(command, flags, in, err);
        if (flags.output.empty() || flags.output == "-") {
            out << result;
        } else {
            std::ofstream file(flags.output, std::ios::binary);
            if (!file) {
                err << "cannot write " << flags.output << '\n';
                return 2;
            }
            file << result;
        }
        return 0;
    } catch (const StellarError& e) {
        err << e.what() << '\n';
        return is_input_error(e.kind()) ? 2 : 1;
    }
}

} // namespace stellar::cli

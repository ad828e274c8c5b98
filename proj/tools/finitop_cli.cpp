#include "finitop/axioms.hpp"
#include "finitop/enumeration.hpp"
#include "finitop/error.hpp"
#include "finitop/io.hpp"
#include "finitop/maps.hpp"
#include "finitop/set_classes.hpp"
#include "finitop/space.hpp"
#include "finitop/verifier.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

namespace
{

using namespace finitop;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitScope = 2;
constexpr int kExitInternal = 3;

int exit_code_for(ErrorKind kind)
{
    switch (kind)
    {
    case ErrorKind::ScopeTooLarge: return kExitScope;
    case ErrorKind::InvariantBreach: return kExitInternal;
    default: return kExitInvalidInput;
    }
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-")
    {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
    out << text << '\n';
}

std::string read_input(const std::string& path)
{
    if (path == "-")
    {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    return io::read_file(path);
}

struct VerifyArgs
{
    std::vector<std::string> claims;
    int max_points = 0;
    std::size_t witness_limit = 5;
    bool all_witnesses = false;
    std::uint64_t max_maps = 0;
    bool allow_large = false;
    std::string json_path;
};

void print_table(const std::vector<TheoremReport>& reports)
{
    std::cout << "holds-on-scope: no counterexample among the enumerated instances; this is not a proof.\n";
    std::cout << std::left << std::setw(10) << "claim" << std::setw(16) << "outcome" << std::right
              << std::setw(7) << "points" << std::setw(14) << "instances" << std::setw(11) << "witnesses"
              << std::setw(11) << "time[s]" << "  statement\n";
    for (const TheoremReport& r : reports)
    {
        std::ostringstream points;
        points << r.scope.min_points << ".." << r.scope.max_points;
        std::cout << std::left << std::setw(10) << name_of(r.claim) << std::setw(16) << name_of(r.outcome)
                  << std::right << std::setw(7) << points.str() << std::setw(14) << r.instances << std::setw(11)
                  << r.witnesses.size() << std::setw(11) << std::fixed << std::setprecision(3)
                  << r.wall_time.count() << "  " << info(r.claim).statement << '\n';
    }
    for (const TheoremReport& r : reports)
    {
        if (r.witnesses.empty())
            continue;
        const Witness& w = r.witnesses.front();
        std::cout << "\n" << name_of(r.claim) << " first witness:\n";
        for (std::size_t i = 0; i < w.bindings.spaces.size(); ++i)
            std::cout << "  space[" << i << "] " << io::to_text(w.bindings.spaces[i]) << '\n';
        for (std::size_t i = 0; i < w.bindings.maps.size(); ++i)
            std::cout << "  map[" << i << "] assignment " << io::Json(w.bindings.maps[i].assignment()).dump()
                      << '\n';
    }
}

int run_verify(const VerifyArgs& args, unsigned jobs)
{
    std::vector<ClaimId> claims;
    for (const std::string& name : args.claims)
    {
        const auto id = parse_claim(name);
        if (!id)
            throw Error(ErrorKind::Parse, "unknown claim '" + name + "'");
        claims.push_back(*id);
    }
    if (claims.empty())
        claims.assign(kAllClaims.begin(), kAllClaims.end());

    auto configure = [&](Scope scope) {
        if (args.max_points > 0)
            scope.max_points = args.max_points;
        scope.witness_limit = args.all_witnesses ? 0 : args.witness_limit;
        if (args.max_maps > 0)
            scope.max_maps_per_pair = args.max_maps;
        scope.allow_large_map_scope = args.allow_large;
        return scope;
    };

    // Claims sharing a scope share one enumeration.
    std::map<int, std::vector<ClaimId>> groups;
    for (ClaimId c : claims)
        groups[configure(default_scope(c)).max_points].push_back(c);

    std::map<ClaimId, TheoremReport> by_claim;
    for (const auto& [points, members] : groups)
    {
        const Scope scope = configure(default_scope(members.front()));
        for (TheoremReport& r : verify_all(scope, members, SweepOptions{jobs}))
            by_claim.emplace(r.claim, std::move(r));
    }

    std::vector<TheoremReport> reports;
    for (ClaimId c : claims)
        reports.push_back(by_claim.at(c));

    for (const TheoremReport& r : reports)
        if (!validate_witness(r))
            throw Error(ErrorKind::InvariantBreach, std::string(name_of(r.claim)) + ": witness failed re-validation");

    print_table(reports);

    if (!args.json_path.empty())
    {
        io::Json out = io::Json::object();
        out["note"] = "holds-on-scope means no counterexample among the enumerated instances; it is not a proof";
        io::Json list = io::Json::array();
        for (const TheoremReport& r : reports)
            list.push_back(io::to_json(r));
        out["reports"] = std::move(list);
        write_output(args.json_path, out.dump());
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite topological spaces: set classes, separation axioms, map properties and claim sweeps"};
    app.require_subcommand(1);

    std::string gen_name;
    std::vector<int> gen_params;
    std::string gen_out;
    auto* generate_cmd = app.add_subcommand("generate", "Emit a named space");
    generate_cmd->add_option("name", gen_name, "discrete | indiscrete | sierpinski | particular_point | "
                                               "excluded_point | khalimsky_interval")
        ->required();
    generate_cmd->add_option("params", gen_params, "Integer parameters (n, and p where applicable)");
    generate_cmd->add_option("-o,--output", gen_out, "Output file (default stdout)");

    std::string space_path;
    std::string subset_text;
    auto* classify_cmd = app.add_subcommand("classify", "Class flags of one subset");
    classify_cmd->add_option("-s,--space", space_path, "Space file ('-' for stdin)")->required();
    classify_cmd->add_option("-A,--subset", subset_text, "Comma-separated points, \"\" for the empty set")
        ->required();

    auto* axioms_cmd = app.add_subcommand("axioms", "Separation axioms with witnesses");
    axioms_cmd->add_option("-s,--space", space_path, "Space file ('-' for stdin)")->required();

    std::string map_path;
    auto* check_map_cmd = app.add_subcommand("check-map", "Map property flags");
    check_map_cmd->add_option("-m,--map", map_path, "Map file ('-' for stdin)")->required();

    int enum_n = 0;
    bool upto_homeo = false;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "Stream every topology on n points");
    enumerate_cmd->add_option("-n", enum_n, "Point count")->required();
    enumerate_cmd->add_flag("--upto-homeo", upto_homeo, "One representative per homeomorphism class");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Sweep claims over every instance in scope");
    verify_cmd->add_option("--claim", verify_args.claims, "Claim id (repeatable; default all)");
    verify_cmd->add_option("--max-points", verify_args.max_points,
                           "Largest space size (default 4 for space claims, 3 for map claims)");
    verify_cmd->add_option("--witness-limit", verify_args.witness_limit, "Witnesses kept per claim");
    verify_cmd->add_flag("--all-witnesses", verify_args.all_witnesses, "Keep every witness");
    verify_cmd->add_option("--max-maps-per-pair", verify_args.max_maps, "Cap on maps per space pair");
    verify_cmd->add_flag("--allow-large", verify_args.allow_large, "Permit map claims above 3 points");
    verify_cmd->add_option("--json", verify_args.json_path, "Write the structured reports to this file");
    unsigned jobs = 1;
    verify_cmd->add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)")->envname("FINITOP_JOBS");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return kExitInvalidInput;
    }

    try
    {
        if (*generate_cmd)
        {
            write_output(gen_out, io::to_text(generate(gen_name, gen_params)));
        }
        else if (*classify_cmd)
        {
            const FiniteSpace s = io::parse_space(read_input(space_path));
            const PointSet a = io::parse_subset(subset_text, s.n());
            std::cout << io::to_json(classify_subset(s, a)).dump() << '\n';
        }
        else if (*axioms_cmd)
        {
            const FiniteSpace s = io::parse_space(read_input(space_path));
            std::cout << io::to_json(axiom_report(s)).dump() << '\n';
        }
        else if (*check_map_cmd)
        {
            const SpaceMap f = io::parse_map(read_input(map_path));
            std::cout << io::to_json(classify_map(f)).dump() << '\n';
        }
        else if (*enumerate_cmd)
        {
            const auto spaces = upto_homeo ? enumerate_topologies_up_to_homeo(enum_n) : enumerate_topologies(enum_n);
            for (const FiniteSpace& s : spaces)
                std::cout << io::to_text(s) << '\n';
        }
        else if (*verify_cmd)
        {
            return run_verify(verify_args, jobs);
        }
    }
    catch (const Error& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    catch (const std::exception& e)
    {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitOk;
}

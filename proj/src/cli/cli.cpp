#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"

#include "cdgacalc/cli/cli.hpp"
#include "cdgacalc/errors.hpp"

namespace cdgacalc::cli {

namespace {

struct Flags {
    std::string field;
    int max_degree = -1;
    std::string k = "1";
    std::string format = "text";
    bool representatives = false;
    std::int64_t seed = -1;
    std::string spec;
    std::string preset;
    int n_max = 3;
};

void add_run_flags(CLI::App* cmd, Flags& f)
{
    cmd->add_option("--field", f.field, "Coefficient field: q or fp:<p> (default: the preset's field)");
    cmd->add_option("--max-degree", f.max_degree, "Highest degree reported (default: the preset's truncation)");
    cmd->add_option("--k", f.k, "Value of the parameter k, a nonzero rational")->capture_default_str();
    cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    cmd->add_flag("--representatives", f.representatives, "Print representatives per degree");
    cmd->add_option("--seed", f.seed, "Seed for sampled identity checks")->check(CLI::NonNegativeNumber);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError(fmt::format("cannot read spec file \"{}\"", path));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

scenarios::RunOptions options(const Flags& f)
{
    scenarios::RunOptions o;
    if (!f.field.empty())
        o.field = exact::FieldSpec::parse(f.field);
    if (f.max_degree >= 0)
        o.max_degree = f.max_degree;
    o.k = f.k;
    o.representatives = f.representatives;
    if (f.seed >= 0)
        o.seed = static_cast<std::uint64_t>(f.seed);
    return o;
}

std::string render(const scenarios::Verdict& v, const Flags& f)
{
    return f.format == "json" ? report_json(v).dump(2) + "\n" : report_text(v);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact graded-algebra calculator: CDGA cohomology, amalgams, Koszul Tor", "cdgacalc"};
    app.set_version_flag("--version", engine_version);
    app.require_subcommand(1);
    Flags f;

    auto* list = app.add_subcommand("list", "List built-in presets");
    list->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* run_cmd = app.add_subcommand("run", "Run a built-in preset or a spec file");
    run_cmd->add_option("preset", f.preset, "Preset name");
    run_cmd->add_option("--spec", f.spec, "Spec file (JSON)");
    add_run_flags(run_cmd, f);

    struct KindCommand {
        CLI::App* cmd;
        scenarios::Kind kind;
    };
    std::vector<KindCommand> kind_commands;
    for (auto [name, kind, help] : {std::tuple{"cohomology", scenarios::Kind::cdga, "Cohomology of a CDGA spec file"},
                                    std::tuple{"amalgam", scenarios::Kind::amalgam, "Hilbert series of an amalgam spec file"},
                                    std::tuple{"tor", scenarios::Kind::koszul, "Tor of a Koszul complex spec file"}}) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("--spec", f.spec, "Spec file (JSON)")->required();
        add_run_flags(cmd, f);
        kind_commands.push_back({cmd, kind});
    }

    auto* export_cmd = app.add_subcommand("export", "Print a built-in preset as a spec file");
    export_cmd->add_option("preset", f.preset, "Preset name")->required();

    auto* sn_cmd = app.add_subcommand("sn-check", "Check that s_1..s_n of emb_model are closed and not exact");
    sn_cmd->add_option("--n-max", f.n_max, "Largest n")->capture_default_str()->check(CLI::PositiveNumber);
    add_run_flags(sn_cmd, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        std::string text;
        int status = 0;
        if (list->parsed()) {
            text = f.format == "json" ? catalog_json().dump(2) + "\n" : catalog_text();
        } else if (export_cmd->parsed()) {
            text = scenarios::find_preset(f.preset).source.dump(2) + "\n";
        } else if (sn_cmd->parsed()) {
            const auto v = scenarios::s_n_cocycle_check(f.n_max, options(f));
            text = render(v, f);
            status = v.pass() ? 0 : 1;
        } else {
            std::optional<scenarios::Preset> loaded;
            const scenarios::Preset* preset = nullptr;
            if (run_cmd->parsed()) {
                if (f.preset.empty() == f.spec.empty())
                    throw InputError("run needs exactly one of <preset> or --spec <path>");
                if (f.preset.empty())
                    preset = &loaded.emplace(scenarios::parse_preset_text(read_file(f.spec)));
                else
                    preset = &scenarios::find_preset(f.preset);
            } else {
                for (const auto& kc : kind_commands) {
                    if (!kc.cmd->parsed())
                        continue;
                    preset = &loaded.emplace(scenarios::parse_preset_text(read_file(f.spec)));
                    if (preset->kind != kc.kind)
                        throw InputError(fmt::format("{} expects a spec of kind {}, got {}", kc.cmd->get_name(),
                                                     scenarios::to_string(kc.kind), scenarios::to_string(preset->kind)));
                }
            }
            const auto v = scenarios::run(*preset, options(f));
            text = render(v, f);
            status = v.pass() ? 0 : 1;
        }
        out << text << std::flush;
        return status;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
    } catch (const scenarios::Json::exception& e) {
        err << "error: malformed spec: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
    }
    return 2;
}

}  // namespace cdgacalc::cli

#include "stdcx/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "stdcx/corpus.hpp"
#include "stdcx/descriptor.hpp"
#include "stdcx/oracle.hpp"
#include "stdcx/render.hpp"
#include "stdcx/stdcomplex.hpp"

namespace stdcx::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

nlohmann::json parse_json_argument(const std::string& inline_text,
                                   const std::string& file) {
    std::string text = inline_text;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open " + file);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    if (text.empty()) throw std::invalid_argument("missing descriptor");
    return nlohmann::json::parse(text);
}

nlohmann::json fvector_json(const SimplicialComplex& K) {
    return nlohmann::json(K.f_vector());
}

std::string fvector_text(const SimplicialComplex& K) {
    std::string s = "[";
    auto fv = K.f_vector();
    for (std::size_t i = 0; i < fv.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(fv[i]);
    }
    return s + "]";
}

void print_complex_lines(std::ostream& out, const SimplicialComplex& K) {
    for (const FiniteSet& f : K.canonical_faces()) out << f.to_string() << "\n";
}

struct StdOptions {
    std::string descriptor;
    std::string file;
    bool json = false;
    bool skip_validate = false;
    bool with_bijection = false;
};

int run_std(const StdOptions& opt, std::ostream& out) {
    nlohmann::json desc = parse_json_argument(opt.descriptor, opt.file);
    Matroid M = matroid_from_descriptor(
        desc, opt.skip_validate ? Matroid::Validation::skip : Matroid::Validation::full);
    SimplicialComplex S = lex_standard_complex(M);

    const bool is_lpm = desc.is_object() && desc.contains("type") &&
                        desc.at("type") == "lattice_path";
    BijectionTable table;
    std::map<FiniteSet, FiniteSet> statistics;
    if (opt.with_bijection) {
        table = lambda_table(M);
        if (is_lpm) {
            auto lower = latpath::LatticePath::parse(desc.at("L").get<std::string>());
            const int n = lower.length();
            for (const auto& [basis, face] : table.entries) {
                auto c = latpath::LatticePath::from_east_set(basis, n);
                FiniteSet st = latpath::statistic(c, lower);
                statistics.emplace(basis, st);
                if (st != face) {
                    out << "INVARIANT FAILURE: st_L(" << c.word() << ") = "
                        << st.to_string() << " but Λ = " << face.to_string() << "\n";
                    return kExitInvariant;
                }
            }
        }
    }

    if (opt.json) {
        nlohmann::json j;
        j["groundset"] = M.groundset().elements();
        j["rank"] = M.rank();
        j["bases"] = M.basis_count();
        j["f_vector"] = fvector_json(S);
        j["faces"] = complex_to_json(S);
        if (opt.with_bijection) {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& [basis, face] : table.entries) {
                nlohmann::json row;
                row["basis"] = basis.elements();
                row["face"] = face.elements();
                if (is_lpm) row["statistic"] = statistics.at(basis).elements();
                rows.push_back(std::move(row));
            }
            j["bijection"] = std::move(rows);
        }
        out << j.dump() << "\n";
        return kExitOk;
    }

    out << "groundset: " << M.groundset().to_string() << "\n";
    out << "rank: " << M.rank() << "\n";
    out << "bases: " << M.basis_count() << "\n";
    out << "faces: " << S.size() << "\n";
    out << "f_vector: " << fvector_text(S) << "\n";
    print_complex_lines(out, S);
    if (opt.with_bijection) {
        out << "bijection:\n";
        for (const auto& [basis, face] : table.entries) {
            out << "  " << basis.to_string() << " -> " << face.to_string();
            if (is_lpm) out << "  st=" << statistics.at(basis).to_string();
            out << "\n";
        }
    }
    return kExitOk;
}

struct LpmOptions {
    std::string upper_word;
    std::string lower_word;
    std::string stat_word;
    std::string render;
    bool bijection_table = false;
    bool json = false;
};

int run_lpm(const LpmOptions& opt, std::ostream& out) {
    auto upper = latpath::LatticePath::parse(opt.upper_word);
    auto lower = latpath::LatticePath::parse(opt.lower_word);
    Matroid M = latpath::lpm(upper, lower);
    SimplicialComplex S = lex_standard_complex(M);

    latpath::LatticePath c = upper;
    if (!opt.stat_word.empty()) c = latpath::LatticePath::parse(opt.stat_word);
    FiniteSet st = latpath::statistic(c, lower);
    auto dem = latpath::demarcation(c, lower);
    auto mar = latpath::marking_path(c, lower);

    if (opt.json) {
        nlohmann::json j;
        j["n"] = upper.length();
        j["d"] = upper.east_count();
        j["bases"] = M.basis_count();
        j["f_vector"] = fvector_json(S);
        j["faces"] = complex_to_json(S);
        if (!opt.stat_word.empty()) {
            j["path"] = c.word();
            j["statistic"] = st.elements();
            j["marked"] = set_difference(c.east_set(), st).elements();
            j["demarcation"] = dem.to_string();
            j["marking"] = mar.to_string();
        }
        if (opt.bijection_table) {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& [basis, face] : lambda_table(M).entries) {
                auto path = latpath::LatticePath::from_east_set(basis, upper.length());
                nlohmann::json row;
                row["basis"] = basis.elements();
                row["face"] = face.elements();
                row["statistic"] = latpath::statistic(path, lower).elements();
                rows.push_back(std::move(row));
            }
            j["bijection"] = std::move(rows);
        }
        out << j.dump() << "\n";
        return kExitOk;
    }

    out << "M[U,L] on [" << upper.length() << "], rank " << M.rank() << ", "
        << M.basis_count() << " bases, S_lex f_vector " << fvector_text(S) << "\n";
    if (!opt.stat_word.empty()) {
        out << "C   = " << c.word() << "\n";
        out << "dem = " << dem.to_string() << "\n";
        out << "mar = " << mar.to_string() << "\n";
        out << "st  = " << st.to_string() << "\n";
    }
    if (opt.render == "ascii") {
        out << latpath::render_ascii(upper, lower, c);
    } else if (opt.render == "svg") {
        out << latpath::render_svg(upper, lower, c);
    }
    if (opt.bijection_table) {
        BijectionTable table = lambda_table(M);
        for (const auto& [basis, face] : table.entries) {
            auto path = latpath::LatticePath::from_east_set(basis, upper.length());
            FiniteSet row_st = latpath::statistic(path, lower);
            out << basis.to_string() << " -> " << face.to_string()
                << "  st=" << row_st.to_string() << "\n";
            if (row_st != face) {
                out << "INVARIANT FAILURE: statistic disagrees with the bijection\n";
                return kExitInvariant;
            }
        }
    }
    return kExitOk;
}

struct OracleOptions {
    std::string order = "lex";
    std::string config;
    std::string file;
    bool json = false;
};

int run_oracle(const OracleOptions& opt, std::ostream& out) {
    oracle::TermOrder order;
    if (opt.order == "lex")
        order = oracle::TermOrder::lex();
    else if (opt.order == "grlex")
        order = oracle::TermOrder::grlex();
    else
        throw std::invalid_argument("oracle: unknown order \"" + opt.order + "\"");
    PointConfig config = config_from_json(parse_json_argument(opt.config, opt.file));
    SimplicialComplex S = oracle::standard_complex(config, order);
    if (opt.json) {
        nlohmann::json j;
        j["coords"] = config.coords().elements();
        j["f_vector"] = fvector_json(S);
        j["faces"] = complex_to_json(S);
        out << j.dump() << "\n";
        return kExitOk;
    }
    out << "points: " << config.size() << "\n";
    out << "f_vector: " << fvector_text(S) << "\n";
    print_complex_lines(out, S);
    return kExitOk;
}

struct VerifyCliOptions {
    int max_n = 8;
    std::uint64_t seed = 991;
};

int run_verify(const VerifyCliOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.max_n > 12) {
        err << "refused: --max-n " << opt.max_n
            << " exceeds the exhaustive sweep limit of 12\n";
        return kExitResource;
    }
    corpus::VerifyOptions options;
    options.max_n = opt.max_n;
    options.seed = opt.seed;
    std::vector<corpus::CheckResult> results = corpus::run_verify_suite(options);
    bool all_pass = true;
    for (const corpus::CheckResult& r : results) {
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.instances
            << " instances, " << r.seconds << "s)\n";
        if (!r.pass) {
            out << "       " << r.detail << "\n";
            all_pass = false;
        }
    }
    out << (all_pass ? "verify: all checks passed\n" : "verify: FAILURES\n");
    return all_pass ? kExitOk : kExitInvariant;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"lexicographic standard complexes of matroids and 0/1 configurations"};
    app.require_subcommand(1);

    StdOptions std_opt;
    auto add_descriptor_flags = [&](CLI::App* cmd) {
        cmd->add_option("descriptor", std_opt.descriptor, "matroid descriptor (JSON)");
        cmd->add_option("--file", std_opt.file, "read the descriptor from a file");
        cmd->add_flag("--json", std_opt.json, "JSON output");
        cmd->add_flag("--skip-validate", std_opt.skip_validate,
                      "skip exchange-axiom validation of explicit basis lists");
    };
    CLI::App* cmd_std = app.add_subcommand("std", "standard complex of a matroid");
    add_descriptor_flags(cmd_std);
    CLI::App* cmd_bijection =
        app.add_subcommand("bijection", "basis-to-face bijection table");
    add_descriptor_flags(cmd_bijection);

    LpmOptions lpm_opt;
    CLI::App* cmd_lpm = app.add_subcommand("lpm", "lattice path matroid tools");
    cmd_lpm->add_option("--U", lpm_opt.upper_word, "upper boundary word")->required();
    cmd_lpm->add_option("--L", lpm_opt.lower_word, "lower boundary word")->required();
    cmd_lpm->add_option("--stat", lpm_opt.stat_word, "path whose statistic to compute");
    cmd_lpm->add_option("--render", lpm_opt.render, "ascii|svg drawing")
        ->check(CLI::IsMember({"ascii", "svg"}));
    cmd_lpm->add_flag("--bijection-table", lpm_opt.bijection_table,
                      "print basis -> face -> statistic rows");
    cmd_lpm->add_flag("--json", lpm_opt.json, "JSON output");

    OracleOptions oracle_opt;
    CLI::App* cmd_oracle =
        app.add_subcommand("oracle", "standard complex via evaluation-matrix ranks");
    cmd_oracle->add_option("--order", oracle_opt.order, "lex|grlex")
        ->check(CLI::IsMember({"lex", "grlex"}));
    cmd_oracle->add_option("--config", oracle_opt.config, "0/1 configuration (JSON)");
    cmd_oracle->add_option("--file", oracle_opt.file, "read the configuration from a file");
    cmd_oracle->add_flag("--json", oracle_opt.json, "JSON output");

    VerifyCliOptions verify_opt;
    CLI::App* cmd_verify = app.add_subcommand("verify", "run the invariant corpus");
    cmd_verify->add_option("--max-n", verify_opt.max_n,
                           "exhaustive lattice path sweep bound (max 12)");
    cmd_verify->add_option("--seed", verify_opt.seed, "seed for randomized families");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kExitOk;
        }
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (cmd_std->parsed()) return run_std(std_opt, out);
        if (cmd_bijection->parsed()) {
            std_opt.with_bijection = true;
            return run_std(std_opt, out);
        }
        if (cmd_lpm->parsed()) return run_lpm(lpm_opt, out);
        if (cmd_oracle->parsed()) return run_oracle(oracle_opt, out);
        if (cmd_verify->parsed()) return run_verify(verify_opt, out, err);
    } catch (const ResourceLimitError& e) {
        err << "refused: " << e.what() << "\n";
        return kExitResource;
    } catch (const nlohmann::json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::logic_error& e) {
        err << "invariant failure: " << e.what() << "\n";
        return kExitInvariant;
    }
    err << "input error: no subcommand\n";
    return kExitInput;
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace stdcx::cli

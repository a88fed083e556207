#include "treeph/cli_app.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "treeph/boundary.hpp"
#include "treeph/cavity.hpp"
#include "treeph/errors.hpp"
#include "treeph/ingest.hpp"
#include "treeph/morse.hpp"
#include "treeph/network.hpp"
#include "treeph/persistence.hpp"
#include "treeph/shorten.hpp"
#include "treeph/version.hpp"

namespace treeph {
namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::string input;
    std::string kind = "simplex-list";
    double epsilon = -1.0;
    bool have_epsilon = false;
    int max_dim = -1;
    std::vector<std::string> ba;
    std::string out_dir = "out";
    std::string formats = "text,csv";
    int shorten_rounds = 10;
    bool have_shorten = false;
    bool exhaustive1 = false;
    bool oriented_check = false;
    bool hodge_check = false;
    std::string morse_file;
};

struct LoadedInput {
    SimplicialNetwork K;
    std::vector<std::vector<double>> values;
    bool has_values = false;
    nlohmann::json input_digests = nlohmann::json::object();
    std::string note;
};

std::set<std::string> parse_formats(const std::string& list) {
    static const std::set<std::string> allowed{"text", "csv", "structured", "svg"};
    std::set<std::string> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        std::size_t comma = list.find(',', start);
        std::string tok = list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        start = comma == std::string::npos ? list.size() + 1 : comma + 1;
        if (tok.empty()) continue;
        if (!allowed.count(tok)) throw UsageError("unknown format '" + tok + "'");
        out.insert(tok);
    }
    if (out.empty()) throw UsageError("--format needs at least one of text,csv,structured,svg");
    return out;
}

BAConfig parse_ba_tokens(const std::vector<std::string>& tokens) {
    BAConfig cfg;
    bool have_n = false;
    for (const std::string& tok : tokens) {
        std::size_t eq = tok.find('=');
        if (eq == std::string::npos) throw UsageError("--ba expects n=<int> [m=<int>] [seed=<int>]");
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        std::uint64_t x = 0;
        try {
            std::size_t used = 0;
            x = std::stoull(val, &used);
            if (used != val.size()) throw std::invalid_argument(val);
        } catch (const std::exception&) {
            throw UsageError("--ba: bad value in '" + tok + "'");
        }
        if (key == "n") {
            cfg.n_final = x;
            have_n = true;
        } else if (key == "m") {
            cfg.m_attach = x;
        } else if (key == "seed") {
            cfg.seed = x;
        } else {
            throw UsageError("--ba: unknown key '" + key + "'");
        }
    }
    if (!have_n) throw UsageError("--ba requires n=<node count>");
    if (cfg.n_final < 2) throw UsageError("--ba: n must be >= 2");
    if (cfg.m_attach < 1) throw UsageError("--ba: m must be >= 1");
    return cfg;
}

LoadedInput load_input(const RunConfig& cfg) {
    LoadedInput in;
    const bool have_ba = !cfg.ba.empty();
    if (have_ba && !cfg.input.empty()) throw UsageError("choose either --input or --ba, not both");
    if (have_ba) {
        BAConfig ba = parse_ba_tokens(cfg.ba);
        Graph g = ba_generate(ba);
        in.K = clique_complex(g, cfg.max_dim);
        std::ostringstream note;
        note << "generated graph: " << g.vertex_count() << " nodes, " << g.edge_count()
             << " edges (m=" << ba.m_attach << ", seed=" << ba.seed << ")";
        in.note = note.str();
        return in;
    }
    if (cfg.input.empty()) throw UsageError("an input is required: --input <path> or --ba n=...");
    std::string bytes = read_file(cfg.input);
    in.input_digests[cfg.input] = fnv1a64_hex(bytes);
    std::ostringstream note;
    if (cfg.kind == "edge-list") {
        EdgeListStats stats;
        Graph g = parse_edge_list(bytes, {}, &stats);
        in.K = clique_complex(g, cfg.max_dim);
        note << "edge list: " << g.vertex_count() << " nodes, " << g.edge_count() << " edges ("
             << stats.self_loops_dropped << " self-loops, " << stats.duplicates_dropped
             << " duplicates dropped)";
    } else if (cfg.kind == "simplex-list") {
        in.K = parse_simplex_list(bytes);
        note << "simplex list: " << in.K.total_size() << " simplices, top dimension "
             << in.K.top_dim();
    } else if (cfg.kind == "point-cloud") {
        if (!cfg.have_epsilon) throw UsageError("--epsilon is required for point-cloud input");
        PointCloud cloud = parse_point_cloud(bytes);
        VietorisRips vr = vr_complex(cloud, cfg.epsilon, cfg.max_dim);
        in.K = std::move(vr.network);
        in.values = std::move(vr.values);
        in.has_values = true;
        note << "point cloud: " << cloud.size() << " points, Vietoris-Rips at epsilon "
             << cfg.epsilon;
    } else if (cfg.kind == "network") {
        LoadedNetwork ln = load_network(bytes);
        in.K = std::move(ln.network);
        if (!ln.values.empty()) {
            in.values = std::move(ln.values);
            in.has_values = true;
        }
        note << "network document: " << in.K.total_size() << " simplices, top dimension "
             << in.K.top_dim();
    } else {
        throw UsageError("unknown --kind '" + cfg.kind + "'");
    }
    in.note = note.str();
    return in;
}

nlohmann::json config_json(const RunConfig& cfg, const LoadedInput& in,
                           const std::set<std::string>& formats) {
    nlohmann::json c;
    c["command"] = cfg.command;
    if (!cfg.input.empty()) {
        c["input"] = cfg.input;
        c["kind"] = cfg.kind;
    }
    if (!cfg.ba.empty()) c["ba"] = cfg.ba;
    if (cfg.have_epsilon) c["epsilon"] = cfg.epsilon;
    c["max_dim"] = cfg.max_dim;
    c["formats"] = std::vector<std::string>(formats.begin(), formats.end());
    if (cfg.command == "cavities") {
        if (cfg.have_shorten) c["shorten"] = cfg.shorten_rounds;
        c["exhaustive_1"] = cfg.exhaustive1;
        c["oriented_check"] = cfg.oriented_check;
        c["hodge_check"] = cfg.hodge_check;
    }
    if (!cfg.morse_file.empty()) c["morse"] = cfg.morse_file;
    c["inputs"] = in.input_digests;
    return c;
}

struct RunDir {
    fs::path dir;
    std::vector<std::string> outputs;

    void write(const std::string& name, std::string_view bytes) {
        write_file((dir / name).string(), bytes);
        outputs.push_back(name);
    }
};

RunDir open_run_dir(const RunConfig& cfg, const nlohmann::json& config) {
    std::string digest = fnv1a64_hex(config.dump());
    fs::path dir = fs::path(cfg.out_dir) / (cfg.command + "-" + digest.substr(0, 12));
    fs::create_directories(dir);
    return RunDir{dir, {}};
}

void write_manifest(const RunDir& rd, const nlohmann::json& config) {
    nlohmann::json m;
    m["tool"] = "treeph";
    m["version"] = kVersion;
    m["config"] = config;
    m["outputs"] = rd.outputs;
    write_file((rd.dir / "manifest.json").string(), m.dump(2) + "\n");
}

std::string table_text(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream ss;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) ss << "  ";
            ss << std::setw(static_cast<int>(width[i])) << row[i];
        }
        ss << '\n';
    }
    return ss.str();
}

std::string table_csv(const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream ss;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) ss << ',';
            ss << row[i];
        }
        ss << '\n';
    }
    return ss.str();
}

std::string fmt_val(double v) {
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 9.0e15)
        return std::to_string(static_cast<long long>(v));
    std::ostringstream ss;
    ss << std::setprecision(12) << v;
    return ss.str();
}

std::string barcode_csv(const SimplicialNetwork& K, const Barcode& bc) {
    std::vector<std::vector<std::string>> rows{{"dim", "birth", "death", "birth_simplex", "death_simplex"}};
    for (const Bar& b : bc.bars)
        rows.push_back({std::to_string(b.dim), fmt_val(b.birth),
                        b.death ? fmt_val(*b.death) : "inf",
                        K.simplex(b.birth_simplex.dim, b.birth_simplex.idx).str(),
                        b.death_simplex
                            ? K.simplex(b.death_simplex->dim, b.death_simplex->idx).str()
                            : ""});
    return table_csv(rows);
}

std::string bars_summary(const SimplicialNetwork& K, const Barcode& bc) {
    std::map<int, std::pair<std::size_t, std::size_t>> per_dim; // dim -> (bars, infinite)
    for (int k = 0; k <= K.top_dim(); ++k) per_dim[k];
    for (const Bar& b : bc.bars) {
        ++per_dim[b.dim].first;
        if (!b.death) ++per_dim[b.dim].second;
    }
    std::ostringstream ss;
    for (const auto& [k, counts] : per_dim)
        ss << "dim " << k << ": " << counts.first << " bars (" << counts.second
           << " infinite)\n";
    ss << "instant pairs: " << bc.instant.size() << '\n';
    return ss.str();
}

void write_barcode_outputs(RunDir& rd, const SimplicialNetwork& K, const Barcode& bc,
                           const std::set<std::string>& formats) {
    if (formats.count("text")) rd.write("barcode.txt", export_barcode(K, bc, "text"));
    if (formats.count("csv")) rd.write("barcode.csv", barcode_csv(K, bc));
    if (formats.count("structured")) rd.write("barcode.json", export_barcode(K, bc, "structured"));
    if (formats.count("svg")) rd.write("barcode.svg", export_barcode(K, bc, "svg"));
}

std::string hist_string(const std::map<std::size_t, std::size_t>& hist) {
    std::ostringstream ss;
    ss << '{';
    bool first = true;
    for (const auto& [len, cnt] : hist) {
        if (!first) ss << ", ";
        ss << len << ':' << cnt;
        first = false;
    }
    ss << '}';
    return ss.str();
}

int cmd_betti(const RunConfig& cfg, std::ostream& out) {
    LoadedInput in = load_input(cfg);
    auto formats = parse_formats(cfg.formats);
    BettiVector bv = betti_numbers(in.K);

    std::vector<std::vector<std::string>> rows{{"k", "m_k", "r_k", "beta_k"}};
    long long chi_m = 0, chi_beta = 0, chi_rank = 0;
    for (int k = 0; k <= in.K.top_dim(); ++k) {
        rows.push_back({std::to_string(k), std::to_string(bv.m[k]), std::to_string(bv.rank[k]),
                        std::to_string(bv.beta[k])});
        long long sign = (k % 2 == 0) ? 1 : -1;
        chi_m += sign * static_cast<long long>(bv.m[k]);
        chi_beta += sign * bv.beta[k];
        chi_rank += sign * (static_cast<long long>(bv.m[k]) - bv.rank[k] - bv.rank[k + 1]);
    }
    const bool ok = chi_m == bv.chi && chi_beta == bv.chi && chi_rank == bv.chi;

    std::ostringstream rep;
    if (!in.note.empty()) rep << in.note << '\n';
    rep << table_text(rows);
    rep << "chi = " << bv.chi << '\n';
    rep << "alternating sums: simplices " << chi_m << ", rank formula " << chi_rank << ", betti "
        << chi_beta << (ok ? " (consistent)" : " (MISMATCH)") << '\n';
    out << rep.str();

    nlohmann::json config = config_json(cfg, in, formats);
    RunDir rd = open_run_dir(cfg, config);
    if (formats.count("text")) rd.write("betti.txt", rep.str());
    if (formats.count("csv")) rd.write("betti.csv", table_csv(rows));
    if (formats.count("structured")) {
        nlohmann::json j;
        j["m"] = bv.m;
        j["rank"] = bv.rank;
        j["beta"] = bv.beta;
        j["chi"] = bv.chi;
        rd.write("betti.json", j.dump(2) + "\n");
    }
    write_manifest(rd, config);
    out << "wrote " << rd.dir.string() << '\n';
    return ok ? kExitOk : kExitInternal;
}

int cmd_morse(const RunConfig& cfg, std::ostream& out) {
    LoadedInput in = load_input(cfg);
    auto formats = parse_formats(cfg.formats);
    TreeDecomposition decomp = classify(in.K);
    MorseFiltration f = assign_morse(in.K, decomp);
    MorseValidationReport rep = validate_morse(in.K, f);
    Barcode bc = persistence_pairs(in.K, order_from_morse(in.K, f));

    std::ostringstream crit;
    for (std::size_t i = 0; i < f.steps.size(); ++i)
        if (!f.steps[i].is_pair)
            crit << i << ' ' << in.K.simplex(f.steps[i].a.dim, f.steps[i].a.idx).str() << '\n';

    std::vector<std::vector<std::string>> rows{{"k", "m_k", "c_k", "beta_k"}};
    for (int k = 0; k <= in.K.top_dim(); ++k)
        rows.push_back({std::to_string(k), std::to_string(rep.m[k]),
                        std::to_string(rep.critical_count[k]), std::to_string(rep.beta[k])});

    std::ostringstream summary;
    if (!in.note.empty()) summary << in.note << '\n';
    summary << "filtration steps: n = " << f.n() << '\n';
    summary << table_text(rows);
    summary << "alternating sums: simplices " << rep.chi_m << ", critical " << rep.chi_c
            << ", betti " << rep.chi_beta << '\n';
    summary << "promotions: " << rep.promotions << '\n';
    summary << "morse function valid: " << (rep.valid ? "yes" : "NO") << '\n';
    for (const MorseViolation& v : rep.violations)
        summary << "  violation: " << in.K.simplex(v.simplex.dim, v.simplex.idx).str() << ' '
                << v.what << '\n';
    summary << bars_summary(in.K, bc);
    out << summary.str();

    nlohmann::json config = config_json(cfg, in, formats);
    RunDir rd = open_run_dir(cfg, config);
    rd.write("morse.txt", morse_to_text(in.K, f));
    rd.write("criticals.txt", crit.str());
    if (formats.count("text")) rd.write("validation.txt", summary.str());
    if (formats.count("csv")) rd.write("validation.csv", table_csv(rows));
    write_barcode_outputs(rd, in.K, bc, formats);
    write_manifest(rd, config);
    out << "wrote " << rd.dir.string() << '\n';
    return rep.valid ? kExitOk : kExitInternal;
}

int cmd_cavities(const RunConfig& cfg, std::ostream& out) {
    LoadedInput in = load_input(cfg);
    auto formats = parse_formats(cfg.formats);
    TreeDecomposition decomp = classify(in.K);
    CavityBasis eq1 = solve_all_cavities(in.K, decomp);
    CavityBasis basis = eq1;
    std::vector<ShorteningMove> moves;

    if (cfg.exhaustive1 && in.K.top_dim() >= 1)
        basis.cycles[1] = minimal_one_cavities(in.K, decomp);
    if (cfg.have_shorten) {
        for (int k = 1; k <= basis.top_dim(); ++k) {
            auto [next, log] = shorten_basis(in.K, basis, k, cfg.shorten_rounds);
            basis = std::move(next);
            moves.insert(moves.end(), log.begin(), log.end());
        }
    }
    BasisReport br = validate_basis(in.K, basis);

    bool checks_ok = true;
    std::ostringstream checks;
    if (cfg.oriented_check) {
        for (int k = 1; k <= in.K.top_dim(); ++k) {
            try {
                auto oriented = solve_cavities_oriented(in.K, decomp, k);
                bool same = oriented.size() == eq1.cycles[k].size();
                for (std::size_t i = 0; same && i < oriented.size(); ++i)
                    same = oriented[i].members == eq1.cycles[k][i].members;
                checks << "oriented dim " << k << ": "
                       << (same ? "agrees with the binary reduction" : "MISMATCH") << '\n';
                if (!same) checks_ok = false;
            } catch (const OrientedReductionUndefined&) {
                checks << "oriented dim " << k << ": undefined (even denominator), skipped\n";
            }
        }
    }
    if (cfg.hodge_check) {
        BettiVector bv = betti_numbers(in.K);
        for (int k = 0; k <= in.K.top_dim(); ++k) {
            long long kernel = hodge_betti(in.K, k);
            bool same = kernel == bv.beta[k];
            checks << "hodge dim " << k << ": kernel " << kernel << ", beta " << bv.beta[k]
                   << (same ? " (agree)" : " (MISMATCH)") << '\n';
            if (!same) checks_ok = false;
        }
    }

    std::vector<std::vector<std::string>> lrows{{"dim", "length", "count"}};
    std::ostringstream summary;
    if (!in.note.empty()) summary << in.note << '\n';
    for (int k = 0; k <= basis.top_dim(); ++k) {
        std::map<std::size_t, std::size_t> hist;
        std::size_t total = 0;
        for (const RepresentativeCycle& c : basis.cycles[k]) {
            ++hist[c.members.size()];
            total += c.members.size();
        }
        for (const auto& [len, cnt] : hist)
            lrows.push_back({std::to_string(k), std::to_string(len), std::to_string(cnt)});
        summary << "dim " << k << ": " << basis.cycles[k].size() << " cavities, lengths "
                << hist_string(hist) << ", total length " << total << '\n';
    }
    if (cfg.have_shorten) summary << "accepted shortening moves: " << moves.size() << '\n';
    summary << "basis valid: " << (br.valid ? "yes" : "NO") << '\n';
    for (const std::string& f : br.failures) summary << "  failure: " << f << '\n';
    summary << checks.str();
    out << summary.str();

    nlohmann::json config = config_json(cfg, in, formats);
    RunDir rd = open_run_dir(cfg, config);
    if (formats.count("text")) {
        rd.write("cavities.txt", cavities_to_text(in.K, basis));
        rd.write("lengths.txt", table_text(lrows));
        rd.write("summary.txt", summary.str());
    }
    if (formats.count("csv")) rd.write("lengths.csv", table_csv(lrows));
    if (formats.count("structured")) rd.write("cavities.json", cavities_to_structured(in.K, basis));
    if (cfg.have_shorten) rd.write("moves.txt", move_log_text(in.K, moves));
    if (cfg.oriented_check || cfg.hodge_check) rd.write("checks.txt", checks.str());
    write_manifest(rd, config);
    out << "wrote " << rd.dir.string() << '\n';
    return (br.valid && checks_ok) ? kExitOk : kExitInternal;
}

int cmd_barcodes(const RunConfig& cfg, std::ostream& out) {
    LoadedInput in = load_input(cfg);
    auto formats = parse_formats(cfg.formats);
    FiltrationOrder order;
    std::string source;
    if (!cfg.morse_file.empty()) {
        std::string text = read_file(cfg.morse_file);
        in.input_digests[cfg.morse_file] = fnv1a64_hex(text);
        MorseFiltration f = morse_from_text(in.K, text);
        order = order_from_morse(in.K, f);
        source = "supplied filtration " + cfg.morse_file;
    } else if (in.has_values) {
        order = order_from_values(in.K, in.values);
        source = "distance filtration";
    } else {
        TreeDecomposition decomp = classify(in.K);
        MorseFiltration f = assign_morse(in.K, decomp);
        order = order_from_morse(in.K, f);
        source = "computed morse filtration";
    }
    Barcode bc = persistence_pairs(in.K, order);

    std::ostringstream summary;
    if (!in.note.empty()) summary << in.note << '\n';
    summary << "filtration: " << source << '\n';
    summary << bars_summary(in.K, bc);
    out << summary.str();

    nlohmann::json config = config_json(cfg, in, formats);
    RunDir rd = open_run_dir(cfg, config);
    write_barcode_outputs(rd, in.K, bc, formats);
    write_manifest(rd, config);
    out << "wrote " << rd.dir.string() << '\n';
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"persistent homology of simplicial networks via spanning trees and critical simplices"};
    app.name("treeph");

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--input", cfg.input, "input file path");
        sub->add_option("--kind", cfg.kind,
                        "input kind: edge-list|simplex-list|point-cloud|network")
            ->capture_default_str();
        sub->add_option("--epsilon", cfg.epsilon,
                        "Vietoris-Rips distance threshold (point clouds)");
        sub->add_option("--max-dim", cfg.max_dim,
                        "largest simplex dimension to build (-1 = no cap)")
            ->capture_default_str();
        sub->add_option("--ba", cfg.ba,
                        "generate a preferential-attachment graph: n=<nodes> [m=<edges>] [seed=<seed>]")
            ->expected(1, 3);
        sub->add_option("--out", cfg.out_dir, "output directory root")->capture_default_str();
        sub->add_option("--format", cfg.formats, "comma list of text,csv,structured,svg")
            ->capture_default_str();
    };

    CLI::App* betti =
        app.add_subcommand("betti", "simplex counts, spanning-tree ranks, and Betti numbers");
    add_common(betti);
    CLI::App* morse = app.add_subcommand(
        "morse", "optimal discrete Morse filtration, critical simplices, and barcodes");
    add_common(morse);
    CLI::App* cavities =
        app.add_subcommand("cavities", "representative cavity cycles per dimension");
    add_common(cavities);
    cavities->add_flag("--shorten{10}", cfg.shorten_rounds,
                       "run iterative shortening, =N caps the rounds (default 10)");
    cavities->add_flag("--exhaustive-1", cfg.exhaustive1,
                       "globally minimal 1-cavities by exhaustive cycle search");
    cavities->add_flag("--oriented-check", cfg.oriented_check,
                       "cross-check representatives via the oriented (rational) reduction");
    cavities->add_flag("--hodge-check", cfg.hodge_check,
                       "cross-check Betti numbers against Hodge-Laplacian kernels");
    CLI::App* barcodes = app.add_subcommand(
        "barcodes", "persistence barcodes of the computed or supplied filtration");
    add_common(barcodes);
    barcodes->add_option("--morse", cfg.morse_file,
                         "filtration file to use instead of computing one");
    app.require_subcommand(1);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitUsage;
    }
    cfg.have_shorten = cavities->count("--shorten") > 0;
    for (CLI::App* sub : {betti, morse, cavities, barcodes})
        if (sub->count("--epsilon") > 0) cfg.have_epsilon = true;

    try {
        if (betti->parsed()) {
            cfg.command = "betti";
            return cmd_betti(cfg, out);
        }
        if (morse->parsed()) {
            cfg.command = "morse";
            return cmd_morse(cfg, out);
        }
        if (cavities->parsed()) {
            cfg.command = "cavities";
            return cmd_cavities(cfg, out);
        }
        cfg.command = "barcodes";
        return cmd_barcodes(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDimension;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const ClassificationError& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const InvalidDecomposition& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const NotInSpan& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const NotFullRank& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const Singular& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, std::cout, std::cerr);
}

} // namespace treeph

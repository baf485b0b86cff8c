// bcdim: conductor exponents of quadratic base change, newspace dimension
// tables, Bianchi base-change dimensions, and the cross-validation suites.
//
// Exit codes: 0 success, 1 validation failure, 2 invalid input.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bcdim/arith.hpp"
#include "bcdim/bc_conductor.hpp"
#include "bcdim/bianchi_dims.hpp"
#include "bcdim/errors.hpp"
#include "bcdim/newspace_dims.hpp"
#include "bcdim/oracle.hpp"
#include "bcdim/validate.hpp"

namespace {

using bcdim::invalid_input;
using bcdim::unsupported_input;
using json = nlohmann::ordered_json;

int default_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

long long parse_int(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw invalid_input(std::string(what) + ": not an integer: '" + s + "'");
    }
}

// "a" or "a..b" (inclusive).
struct Range {
    long long lo;
    long long hi;
    bool single;
};

Range parse_range(const std::string& s, const char* what) {
    const auto pos = s.find("..");
    if (pos == std::string::npos) {
        const long long v = parse_int(s, what);
        return {v, v, true};
    }
    Range r{parse_int(s.substr(0, pos), what), parse_int(s.substr(pos + 2), what), false};
    if (r.lo > r.hi) throw invalid_input(std::string(what) + ": empty range '" + s + "'");
    return r;
}

bcdim::Splitting parse_splitting(const std::string& s) {
    if (s == "split") return bcdim::Splitting::Split;
    if (s == "inert") return bcdim::Splitting::Inert;
    if (s == "ramified") return bcdim::Splitting::Ramified;
    throw invalid_input("--splitting must be split, inert or ramified (got '" + s + "')");
}

bcdim::QuadExtKind parse_ext_kind(const std::string& s, const char* what) {
    if (s == "unram") return bcdim::QuadExtKind::Unramified;
    if (s == "ram-pi") return bcdim::QuadExtKind::RamifiedPi;
    if (s == "ram-epspi") return bcdim::QuadExtKind::RamifiedEpsPi;
    throw invalid_input(std::string(what) + " must be unram, ram-pi or ram-epspi (got '" + s +
                        "')");
}

const char* splitting_str(bcdim::Splitting s) {
    switch (s) {
        case bcdim::Splitting::Split: return "split";
        case bcdim::Splitting::Inert: return "inert";
        default: return "ramified";
    }
}

// A conductor entry "2" or "2o2"; the suffix marks a character whose
// restriction to the units has order dividing 2.
bcdim::LocalCharData parse_char_data(std::string item, bool force_order2) {
    bool order2 = force_order2;
    if (item.size() >= 2 && item.substr(item.size() - 2) == "o2") {
        order2 = true;
        item = item.substr(0, item.size() - 2);
    }
    return bcdim::LocalCharData(parse_int(item, "--cond"), order2);
}

void write_output(const std::string& output_path, const std::string& text) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw invalid_input("cannot open output file '" + output_path + "'");
    out << text;
}

// ---------------------------------------------------------------------------
// conductor

struct ConductorArgs {
    long long p = 0;
    std::string splitting;
    std::string ext;
    std::string rep;
    std::string cond; // comma-separated, each entry optionally suffixed "o2"
    bool order2 = false;
    std::string sc_ext;
    long long disc = 0;
    std::vector<std::string> local_specs;
    std::string output_path;
};

bcdim::LocalRepType build_rep(const std::string& rep, const std::vector<std::string>& cond,
                              bool order2, const std::string& sc_ext, long long p) {
    if (rep == "unram") {
        if (!cond.empty()) throw invalid_input("--rep unram takes no conductor");
        return bcdim::UnramifiedPrincipalSeries{};
    }
    if (rep == "ps") {
        if (cond.size() != 2)
            throw invalid_input("--rep ps needs two conductor entries, e.g. --cond 1,2");
        return bcdim::PrincipalSeries{parse_char_data(cond[0], order2),
                                      parse_char_data(cond[1], order2)};
    }
    if (rep == "special") {
        if (cond.size() != 1) throw invalid_input("--rep special needs one conductor entry");
        return bcdim::Special{parse_char_data(cond[0], order2)};
    }
    if (rep == "sc") {
        if (cond.size() != 1) throw invalid_input("--rep sc needs one conductor entry");
        if (sc_ext.empty())
            throw invalid_input("--rep sc needs --sc-ext (the inducing quadratic extension)");
        const bcdim::QuadExtClass field(parse_ext_kind(sc_ext, "--sc-ext"), p);
        return bcdim::Supercuspidal(field, parse_char_data(cond[0], order2));
    }
    throw invalid_input("--rep must be ps, special, sc or unram (got '" + rep + "')");
}

int run_conductor_single(const ConductorArgs& args) {
    if (args.p == 0) throw invalid_input("conductor: --p is required");
    if (!bcdim::is_prime(args.p)) throw invalid_input("--p must be prime");
    if (args.splitting.empty()) throw invalid_input("conductor: --splitting is required");
    const bcdim::Splitting splitting = parse_splitting(args.splitting);

    if (splitting == bcdim::Splitting::Ramified && args.p == 2)
        throw unsupported_input("wild ramification unsupported: p = 2 cannot ramify here");

    std::optional<bcdim::QuadExtClass> Kp;
    if (splitting == bcdim::Splitting::Ramified) {
        if (args.ext.empty())
            throw invalid_input("conductor: ramified splitting needs --ext");
        const bcdim::QuadExtKind kind = parse_ext_kind(args.ext, "--ext");
        if (kind == bcdim::QuadExtKind::Unramified)
            throw invalid_input("--ext: the completion at a ramified prime is ramified");
        Kp = bcdim::QuadExtClass(kind, args.p);
    } else if (!args.ext.empty()) {
        throw invalid_input("--ext applies only to ramified splitting");
    }

    const std::vector<std::string> cond =
        args.cond.empty() ? std::vector<std::string>{} : split(args.cond, ',');
    const bcdim::LocalRepType rep =
        build_rep(args.rep, cond, args.order2, args.sc_ext, args.p);

    json record;
    record["p"] = args.p;
    record["splitting"] = splitting_str(splitting);
    if (Kp) record["ext"] = args.ext;
    record["rep"] = args.rep;
    if (!args.sc_ext.empty()) record["sc_ext"] = args.sc_ext;
    record["cond"] = cond;
    record["base_exponent"] = bcdim::qp_conductor(rep);
    record["exponent"] = bcdim::bc_local_conductor(splitting, Kp, rep);
    write_output(args.output_path, record.dump(2) + "\n");
    return 0;
}

int run_conductor_level(const ConductorArgs& args) {
    const bcdim::ImagQuadField K = bcdim::ImagQuadField::from_disc(args.disc);
    std::map<long long, bcdim::LocalRepType> local;
    for (const std::string& spec : args.local_specs) {
        const std::vector<std::string> tok = split(spec, ':');
        if (tok.size() < 2) throw invalid_input("--local: expected p:type[:...] in '" + spec + "'");
        const long long p = parse_int(tok[0], "--local prime");
        if (!bcdim::is_prime(p)) throw invalid_input("--local: " + tok[0] + " is not prime");
        if (local.count(p)) throw invalid_input("--local: duplicate prime " + tok[0]);
        const std::string& type = tok[1];
        std::vector<std::string> rest(tok.begin() + 2, tok.end());
        if (type == "unram") {
            if (!rest.empty()) throw invalid_input("--local: unram takes no arguments");
            local.emplace(p, bcdim::UnramifiedPrincipalSeries{});
        } else if (type == "ps") {
            if (rest.size() != 2) throw invalid_input("--local: ps needs p:ps:C1:C2");
            local.emplace(p, bcdim::PrincipalSeries{parse_char_data(rest[0], false),
                                                    parse_char_data(rest[1], false)});
        } else if (type == "special") {
            if (rest.size() != 1) throw invalid_input("--local: special needs p:special:C");
            local.emplace(p, bcdim::Special{parse_char_data(rest[0], false)});
        } else if (type == "sc") {
            if (rest.size() != 2) throw invalid_input("--local: sc needs p:sc:EXT:C");
            const bcdim::QuadExtClass field(parse_ext_kind(rest[0], "--local sc extension"), p);
            local.emplace(p, bcdim::Supercuspidal(field, parse_char_data(rest[1], false)));
        } else {
            throw invalid_input("--local: unknown type '" + type + "'");
        }
    }

    const bcdim::BCLevelReport report = bcdim::bc_level(K, local);
    json record;
    record["disc"] = args.disc;
    json entries = json::array();
    for (const auto& e : report.entries) {
        json entry;
        entry["p"] = e.p;
        entry["splitting"] = splitting_str(e.splitting);
        entry["exponents"] = e.exponents;
        entries.push_back(entry);
    }
    record["entries"] = entries;
    write_output(args.output_path, record.dump(2) + "\n");
    return 0;
}

int run_conductor(const ConductorArgs& args) {
    const bool level_mode = args.disc != 0 || !args.local_specs.empty();
    if (level_mode) {
        if (args.disc == 0) throw invalid_input("conductor: --local needs --disc");
        if (args.local_specs.empty()) throw invalid_input("conductor: --disc needs --local");
        if (args.p != 0 || !args.splitting.empty() || !args.rep.empty())
            throw invalid_input("conductor: --disc/--local and --p/--splitting/--rep are exclusive");
        return run_conductor_level(args);
    }
    return run_conductor_single(args);
}

// ---------------------------------------------------------------------------
// dims and bianchi sweeps

struct SweepArgs {
    std::string space;
    std::string level;
    long long ell = 0;
    std::string weight;
    std::string bianchi_weight;
    std::string format = "json";
    int jobs = default_jobs();
    std::string output_path;
};

struct SweepRecord {
    bool present = false;
    json data;
    std::string csv_line;
};

// Runs eval(N, k) over the grid, skipping invalid points of ranges but
// rejecting an invalid explicitly-named single value.
template <typename Eval>
std::vector<SweepRecord> run_grid(const Range& levels, const Range& weights, int jobs,
                                  Eval eval) {
    std::vector<std::pair<long long, long long>> tasks;
    for (long long N = levels.lo; N <= levels.hi; ++N)
        for (long long k = weights.lo; k <= weights.hi; ++k) tasks.emplace_back(N, k);

    std::vector<SweepRecord> records(tasks.size());
    const bool strict = levels.single && weights.single;
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<size_t>(tasks.size(), 1))));

    std::exception_ptr first_error = nullptr;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    const size_t per = (tasks.size() + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
        const size_t lo = std::min(tasks.size(), j * per);
        const size_t hi = std::min(tasks.size(), lo + per);
        threads.emplace_back([&, lo, hi] {
            for (size_t i = lo; i < hi; ++i) {
                try {
                    records[i] = eval(tasks[i].first, tasks[i].second);
                } catch (const std::invalid_argument&) {
                    if (strict) {
                        std::lock_guard<std::mutex> guard(error_mutex);
                        if (!first_error) first_error = std::current_exception();
                    }
                    // otherwise: outside the space's domain, skip silently
                } catch (...) {
                    std::lock_guard<std::mutex> guard(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return records;
}

void emit_records(const std::vector<SweepRecord>& records, const std::string& format,
                  const std::string& output_path) {
    std::string text;
    if (format == "csv") {
        text = "disc,N,k,space,value,integral,formula_path\n";
        for (const auto& r : records)
            if (r.present) text += r.csv_line + "\n";
    } else if (format == "json") {
        json arr = json::array();
        for (const auto& r : records)
            if (r.present) arr.push_back(r.data);
        text = arr.dump(2) + "\n";
    } else {
        throw invalid_input("--format must be json or csv (got '" + format + "')");
    }
    write_output(output_path, text);
}

int run_dims(const SweepArgs& args) {
    if (args.space != "new" && args.space != "omega" && args.space != "corr")
        throw invalid_input("--space must be new, omega or corr (got '" + args.space + "')");
    const bool needs_ell = args.space != "new";
    if (needs_ell && args.ell == 0)
        throw invalid_input("dims: --space " + args.space + " needs --ell");
    if (!needs_ell && args.ell != 0) throw invalid_input("dims: --space new takes no --ell");
    if (args.level.empty()) throw invalid_input("dims: --level is required");
    if (args.weight.empty()) throw invalid_input("dims: --weight is required");

    const Range levels = parse_range(args.level, "--level");
    const Range weights = parse_range(args.weight, "--weight");
    const long long ell = args.ell;
    const std::string space = args.space;

    // An explicitly-named single weight must have the parity of the space.
    if (weights.single) {
        const bool want_odd = space == "omega";
        if (weights.lo % 2 == (want_odd ? 0 : 1))
            throw invalid_input("dims: --space " + space + " takes " +
                                (want_odd ? "odd" : "even") + " weights");
    }

    auto eval = [&](long long N, long long k) {
        const bcdim::LevelSpec level(N);
        long long value = 0;
        if (space == "new") value = bcdim::dim_new_trivial(level, k);
        else if (space == "omega") value = bcdim::dim_new_omega(level, ell, k);
        else value = bcdim::dim_corr(level, ell, k);

        SweepRecord r;
        r.present = true;
        r.data["disc"] = nullptr;
        if (needs_ell) r.data["disc"] = -ell;
        r.data["N"] = N;
        r.data["k"] = k;
        r.data["space"] = space;
        r.data["value"] = value;
        r.data["integral"] = true;
        r.data["formula_path"] = "engine";
        r.csv_line = (needs_ell ? std::to_string(-ell) : "") + "," + std::to_string(N) + "," +
                     std::to_string(k) + "," + space + "," + std::to_string(value) +
                     ",true,engine";
        return r;
    };

    emit_records(run_grid(levels, weights, args.jobs, eval), args.format, args.output_path);
    return 0;
}

// ---------------------------------------------------------------------------
// validate

int run_validate(const std::string& suite, long long max_level, long long max_weight,
                 int jobs, const std::string& output_path) {
    if (suite != "closed-form" && suite != "oracle" && suite != "chartable" && suite != "all")
        throw invalid_input("--suite must be closed-form, oracle, chartable or all");

    std::vector<bcdim::CheckResult> checks;
    auto append = [&checks](std::vector<bcdim::CheckResult> more) {
        for (auto& c : more) checks.push_back(std::move(c));
    };

    if (suite == "closed-form" || suite == "all") {
        // This suite sweeps all products of distinct primes up to the level
        // bound, capped at 50 so every statistic stays within 64 bits.
        const long long prime_cap = std::min<long long>(max_level, 50);
        append(bcdim::closed_form_suite(
            bcdim::squarefree_products_of_primes_up_to(prime_cap), max_weight, jobs));
    }
    if (suite == "oracle" || suite == "all")
        append(bcdim::oracle_suite(max_level, max_weight, jobs));
    if (suite == "chartable" || suite == "all") append(bcdim::chartable_suite());

    std::string text;
    bool all_pass = true;
    for (const auto& c : checks) {
        all_pass = all_pass && c.pass();
        json line;
        line["check"] = c.name;
        line["cases"] = c.cases;
        line["failures"] = c.failures;
        line["pass"] = c.pass();
        if (!c.failure_samples.empty()) line["failure_samples"] = c.failure_samples;
        text += line.dump() + "\n";
    }
    write_output(output_path, text);
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quadratic base-change conductors and Bianchi base-change dimensions"};
    app.require_subcommand(1);

    // conductor ------------------------------------------------------------
    ConductorArgs cond_args;
    CLI::App* conductor = app.add_subcommand(
        "conductor", "Conductor exponent of quadratic base change at one prime, or the "
                     "full level of a base change to an imaginary quadratic field");
    conductor->add_option("--p", cond_args.p, "rational prime");
    conductor->add_option("--splitting", cond_args.splitting, "split|inert|ramified");
    conductor->add_option("--ext", cond_args.ext,
                          "completion at a ramified prime: ram-pi|ram-epspi");
    conductor->add_option("--rep", cond_args.rep, "ps|special|sc|unram");
    conductor->add_option("--cond", cond_args.cond,
                          "conductor exponent list, e.g. 1,2; suffix o2 marks a character "
                          "of unit order <= 2");
    conductor->add_flag("--order2", cond_args.order2,
                        "treat every listed character as having unit order <= 2");
    conductor->add_option("--sc-ext", cond_args.sc_ext,
                          "inducing extension of a supercuspidal: unram|ram-pi|ram-epspi");
    conductor->add_option("--disc", cond_args.disc,
                          "negative field discriminant (level mode, with --local)");
    conductor->add_option("--local", cond_args.local_specs,
                          "local component, repeatable: p:unram | p:ps:C1:C2 | p:special:C "
                          "| p:sc:EXT:C (conductors may carry the o2 suffix)");
    conductor->add_option("--output", cond_args.output_path, "write to file instead of stdout");

    // dims -----------------------------------------------------------------
    SweepArgs dims_args;
    CLI::App* dims = app.add_subcommand("dims", "Newspace dimension tables");
    dims->add_option("--space", dims_args.space, "new|omega|corr");
    dims->add_option("--level", dims_args.level, "level N or range a..b");
    dims->add_option("--ell", dims_args.ell, "ramified prime (omega and corr spaces)");
    dims->add_option("--weight", dims_args.weight, "weight k or range a..b");
    dims->add_option("--format", dims_args.format, "json|csv (default json)");
    dims->add_option("--jobs", dims_args.jobs, "worker threads for ranges");
    dims->add_option("--output", dims_args.output_path, "write to file instead of stdout");

    // bianchi ----------------------------------------------------------------
    struct BianchiArgs {
        long long disc = 0;
        std::string level;
        std::string weight;
        std::string bianchi_weight;
        std::string format = "json";
        int jobs = default_jobs();
        std::string output_path;
    } bianchi_args;
    CLI::App* bianchi = app.add_subcommand(
        "bianchi", "Base-change subspace dimension of Bianchi cusp forms");
    bianchi->add_option("--disc", bianchi_args.disc, "field discriminant, a negative prime");
    bianchi->add_option("--level", bianchi_args.level, "level N or range a..b");
    bianchi->add_option("--weight", bianchi_args.weight, "elliptic weight k or range a..b");
    bianchi->add_option("--bianchi-weight", bianchi_args.bianchi_weight,
                        "Bianchi weight (elliptic weight minus 2) or range a..b");
    bianchi->add_option("--format", bianchi_args.format, "json|csv (default json)");
    bianchi->add_option("--jobs", bianchi_args.jobs, "worker threads for ranges");
    bianchi->add_option("--output", bianchi_args.output_path, "write to file instead of stdout");

    // validate ---------------------------------------------------------------
    std::string suite = "all";
    long long max_level = 100;
    long long max_weight = 20;
    int jobs = default_jobs();
    std::string validate_output;
    CLI::App* validate = app.add_subcommand("validate", "Cross-validation suites");
    validate->add_option("--suite", suite, "closed-form|oracle|chartable|all (default all)");
    validate->add_option("--max-level", max_level,
                         "level bound; the closed-form suite reads it as the largest prime "
                         "factor, capped at 50 (default 100)");
    validate->add_option("--max-weight", max_weight, "weight bound (default 20)");
    validate->add_option("--jobs", jobs, "worker threads (default: hardware threads)");
    validate->add_option("--output", validate_output, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        json err;
        err["error"] = e.what();
        std::cout << err.dump() << "\n";
        return 2;
    }

    try {
        if (conductor->parsed()) return run_conductor(cond_args);
        if (dims->parsed()) return run_dims(dims_args);
        if (bianchi->parsed()) {
            if (bianchi_args.disc >= 0)
                throw invalid_input("bianchi: --disc must be a negative prime discriminant");
            if (bianchi_args.level.empty()) throw invalid_input("bianchi: --level is required");
            const bool have_elliptic = !bianchi_args.weight.empty();
            const bool have_bianchi = !bianchi_args.bianchi_weight.empty();
            if (have_elliptic == have_bianchi)
                throw invalid_input(
                    "bianchi: give exactly one of --weight (elliptic) or --bianchi-weight");

            const bcdim::ImagQuadField K = bcdim::ImagQuadField::from_disc(bianchi_args.disc);
            const Range levels = parse_range(bianchi_args.level, "--level");
            Range weights = parse_range(
                have_elliptic ? bianchi_args.weight : bianchi_args.bianchi_weight,
                have_elliptic ? "--weight" : "--bianchi-weight");
            if (have_bianchi) {
                weights.lo = bcdim::bianchi_weight_to_elliptic(weights.lo);
                weights.hi = bcdim::bianchi_weight_to_elliptic(weights.hi);
            }
            const char* convention = have_elliptic ? "elliptic" : "bianchi";

            auto eval = [&](long long N, long long k) {
                const bcdim::BianchiSetup setup(K, bcdim::LevelSpec(N), k);
                const bcdim::BianchiDimReport report = bcdim::bs_bc_dim(setup);
                SweepRecord r;
                r.present = true;
                r.data["disc"] = bianchi_args.disc;
                r.data["N"] = N;
                r.data["k"] = k;
                r.data["space"] = "bianchi";
                r.data["value"] = report.value.str();
                r.data["integral"] = report.integral;
                r.data["cm_contamination"] = !report.integral;
                if (report.new_part) {
                    r.data["new_part"] = *report.new_part;
                    r.data["corr_part"] = report.corr_or_omega_part;
                } else {
                    r.data["omega_part"] = report.corr_or_omega_part;
                }
                r.data["parity"] =
                    report.parity_used == bcdim::Parity::Even ? "even" : "odd";
                r.data["weight_convention"] = convention;
                r.data["formula_path"] = "engine";
                r.csv_line = std::to_string(bianchi_args.disc) + "," + std::to_string(N) +
                             "," + std::to_string(k) + ",bianchi," + report.value.str() +
                             "," + (report.integral ? "true" : "false") + ",engine";
                return r;
            };
            emit_records(run_grid(levels, weights, bianchi_args.jobs, eval),
                         bianchi_args.format, bianchi_args.output_path);
            return 0;
        }
        if (validate->parsed())
            return run_validate(suite, max_level, max_weight, jobs, validate_output);
        throw invalid_input("no subcommand given");
    } catch (const std::invalid_argument& e) {
        json err;
        err["error"] = e.what();
        std::cout << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        json err;
        err["error"] = std::string("internal error: ") + e.what();
        std::cout << err.dump() << "\n";
        return 2;
    }
}

// Command-line front door for the q-stable toolkit.
//
// Eight subcommands: build, homology, certify, tverberg, birch, witness,
// plan, shift. Every run can record a manifest (subcommand, parameters,
// input hashes, seed, tool version, timestamp); `--replay manifest.json`
// re-executes the recorded run and reproduces its primary output byte for
// byte. Exit codes: 0 success or all checks pass, 1 a mathematical claim
// or search failed, 2 usage or input error.

#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qstable/cache.hpp"
#include "qstable/certify.hpp"
#include "qstable/family.hpp"
#include "qstable/homology.hpp"
#include "qstable/io.hpp"
#include "qstable/planner.hpp"
#include "qstable/report.hpp"
#include "qstable/rng.hpp"
#include "qstable/tverberg.hpp"
#include "qstable/version.hpp"

namespace {

using qstab::Json;

struct RunOutcome {
    int exit_code = 0;
    std::string primary;                        // bytes destined for --out or stdout
    std::map<std::string, std::string> inputs;  // path -> content hash of the bytes read
};

std::string read_and_hash(const std::string& path, RunOutcome& outcome) {
    std::string bytes = qstab::read_text_file(path);
    outcome.inputs[path] = qstab::content_hash(bytes);
    return bytes;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json not_found_json(const std::string& detail) {
    Json out;
    out["version"] = qstab::kFormatVersion;
    out["type"] = "search_result";
    out["found"] = false;
    out["detail"] = detail;
    return out;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Cached subcommands wrap their result in a tiny envelope so a hit restores
// the exit code along with the bytes. The envelope never reaches the user.
std::optional<RunOutcome> cache_hit(const qstab::ResultCache& cache, const std::string& key) {
    const auto payload = cache.lookup(key);
    if (!payload) return std::nullopt;
    const Json envelope = Json::parse(*payload, nullptr, false);
    if (envelope.is_discarded() || !envelope.contains("exit") || !envelope.contains("body")) {
        return std::nullopt;  // damaged entry, recompute
    }
    RunOutcome out;
    out.exit_code = envelope.at("exit").get<int>();
    out.primary = envelope.at("body").get<std::string>();
    return out;
}

void cache_store(const qstab::ResultCache& cache, const std::string& key, const RunOutcome& out) {
    if (!cache.enabled()) return;
    Json envelope;
    envelope["exit"] = out.exit_code;
    envelope["body"] = out.primary;
    cache.store(key, envelope.dump());
}

RunOutcome run_build(const Json& params) {
    const std::string family = params.at("family").get<std::string>();
    const int q = params.at("q").get<int>();
    const int r = params.at("r").get<int>();
    const int p = params.at("p").get<int>();
    const int a = params.at("a").get<int>();
    const int k = params.at("k").get<int>();

    auto need = [&](bool given, const char* flag) {
        if (!given) throw std::domain_error("family " + family + " requires " + flag);
    };
    auto reject = [&](bool given, const char* flag) {
        if (given) throw std::domain_error("family " + family + " does not take " + flag);
    };

    const qstab::SimplicialComplex complex = [&]() -> qstab::SimplicialComplex {
        if (family == "L") {
            need(r >= 0, "-r");
            reject(p >= 0, "-p");
            reject(a > 0, "-a");
            reject(k > 0, "-k");
            return qstab::linear_stable(r, q);
        }
        if (family == "La") {
            need(r >= 0, "-r");
            need(a > 0, "-a");
            reject(p >= 0, "-p");
            reject(k > 0, "-k");
            return qstab::linear_stable_extendable(r, q, a);
        }
        if (family == "C") {
            need(p >= 0, "-p");
            reject(r >= 0, "-r");
            reject(a > 0, "-a");
            reject(k > 0, "-k");
            return qstab::cyclic_stable(p, q);
        }
        if (family == "Ca") {
            need(p >= 0, "-p");
            need(a > 0, "-a");
            reject(r >= 0, "-r");
            reject(k > 0, "-k");
            return qstab::cyclic_stable_extendable(p, q, a);
        }
        // T derives its vertex count from (q, a, k).
        need(a > 0, "-a");
        need(k > 0, "-k");
        reject(r >= 0, "-r");
        reject(p >= 0, "-p");
        return qstab::truncated_complex(q, a, k);
    }();

    RunOutcome out;
    out.primary = dump_json(qstab::complex_to_json(complex));
    return out;
}

RunOutcome run_homology(const Json& params, const qstab::ResultCache& cache) {
    const std::string path = params.at("complex").get<std::string>();
    const std::string coeff = params.at("coeff").get<std::string>();

    RunOutcome out;
    const std::string bytes = read_and_hash(path, out);

    long long modulus = 0;
    std::string tag = coeff;  // filesystem-safe spelling for the cache key
    if (coeff.rfind("gf:", 0) == 0) {
        const std::string digits = coeff.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
            throw std::domain_error("--coeff gf:P needs an integer modulus, got '" + coeff + "'");
        }
        modulus = std::stoll(digits);
        if (!qstab::is_prime(modulus)) {
            throw std::domain_error("--coeff gf:P needs a prime modulus, got " + digits);
        }
        tag = "gf" + digits;
    } else if (coeff != "int" && coeff != "q") {
        throw std::domain_error("--coeff must be int, q, or gf:P, got '" + coeff + "'");
    }

    const std::string key =
        qstab::content_hash(bytes) + "-" + tag + "-v" + std::to_string(qstab::kFormatVersion);
    if (auto hit = cache_hit(cache, key)) {
        hit->inputs = out.inputs;
        return *hit;
    }

    const qstab::SimplicialComplex complex = [&] {
        Json parsed;
        try {
            parsed = Json::parse(bytes);
        } catch (const Json::parse_error& e) {
            throw std::runtime_error("cannot parse " + path + ": " + e.what());
        }
        try {
            return qstab::complex_from_json(parsed);
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ": " + e.what());
        }
    }();

    if (coeff == "int") {
        out.primary = dump_json(qstab::homology_to_json(qstab::integral_homology(complex)));
    } else if (coeff == "q") {
        out.primary = dump_json(qstab::betti_to_json(qstab::betti_rational(complex)));
    } else {
        out.primary = dump_json(qstab::betti_to_json(qstab::betti_mod_p(complex, modulus)));
    }
    cache_store(cache, key, out);
    return out;
}

RunOutcome run_certify(const Json& params, const qstab::ResultCache& cache) {
    const std::string claim = params.at("claim").get<std::string>();
    qstab::CertifyOptions opts;
    opts.q = params.at("q").get<int>();
    opts.q_max = params.at("q_max").get<int>();
    opts.a_max = params.at("a_max").get<int>();
    opts.r_max = params.at("r_max").get<int>();
    opts.p_max = params.at("p_max").get<int>();

    std::ostringstream key;
    key << "certify-" << claim << "-q" << opts.q << "-qm" << opts.q_max << "-am" << opts.a_max
        << "-rm" << opts.r_max << "-pm" << opts.p_max << "-v" << qstab::kFormatVersion;
    if (auto hit = cache_hit(cache, key.str())) return *hit;

    const qstab::Report report = qstab::certify_claim(claim, opts);
    RunOutcome out;
    out.primary = qstab::report_to_csv(report);
    out.exit_code = report.all_pass() ? 0 : 1;
    cache_store(cache, key.str(), out);
    return out;
}

qstab::PointConfiguration load_points(const std::string& path, RunOutcome& out) {
    const std::string bytes = read_and_hash(path, out);
    std::istringstream stream(bytes);
    try {
        return qstab::parse_points(stream);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

qstab::SimplicialComplex load_complex(const std::string& path, RunOutcome& out) {
    const std::string bytes = read_and_hash(path, out);
    Json parsed;
    try {
        parsed = Json::parse(bytes);
    } catch (const Json::parse_error& e) {
        throw std::runtime_error("cannot parse " + path + ": " + e.what());
    }
    try {
        return qstab::complex_from_json(parsed);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

RunOutcome run_tverberg(const Json& params) {
    const std::string points_path = params.at("points").get<std::string>();
    const std::string colors_path = params.at("colors").get<std::string>();
    const std::string sigma_path = params.at("sigma").get<std::string>();
    const int q = params.at("q").get<int>();
    const bool equal_coeff = params.at("equal_coeff").get<bool>();

    RunOutcome out;
    const qstab::PointConfiguration config = load_points(points_path, out);

    if (!sigma_path.empty()) {
        const qstab::SimplicialComplex sigma = load_complex(sigma_path, out);
        const int p = static_cast<int>(sigma.universe().size());
        const auto cover = qstab::sigma_constrained_cover(config, sigma, p);
        if (!cover) {
            out.primary =
                dump_json(not_found_json("no family of " + std::to_string(p) +
                                         " faces with label sets in the constraint complex"));
            out.exit_code = 1;
            return out;
        }
        out.primary = dump_json(qstab::label_cover_to_json(*cover));
        return out;
    }

    qstab::ColorConstraint constraint;
    const bool colored = !colors_path.empty();
    if (equal_coeff && !colored) throw std::domain_error("--equal-coeff requires --colors");
    if (colored) {
        const std::string bytes = read_and_hash(colors_path, out);
        Json parsed;
        try {
            parsed = Json::parse(bytes);
        } catch (const Json::parse_error& e) {
            throw std::runtime_error("cannot parse " + colors_path + ": " + e.what());
        }
        if (!parsed.is_object() || !parsed.contains("classes")) {
            throw std::runtime_error(colors_path + ": expected an object with a 'classes' array");
        }
        constraint.classes = parsed.at("classes").get<std::vector<std::vector<int>>>();
        constraint.mode =
            equal_coeff ? qstab::ColorMode::equal_coefficient : qstab::ColorMode::rainbow;
    }

    const auto cert = qstab::tverberg_partition(config, q, colored ? &constraint : nullptr);
    if (!cert) {
        out.primary = dump_json(
            not_found_json("no " + std::to_string(q) + "-part family has a common point"));
        out.exit_code = 1;
        return out;
    }
    if (!qstab::verify_certificate(config, *cert)) {
        throw std::logic_error("internal error: certificate failed exact recheck");
    }
    out.primary = dump_json(qstab::certificate_to_json(*cert));
    return out;
}

RunOutcome run_birch(const Json& params) {
    const std::string points_path = params.at("points").get<std::string>();
    const int q = params.at("q").get<int>();

    RunOutcome out;
    const qstab::PointConfiguration config = load_points(points_path, out);
    const auto cert = qstab::birch_certificate(config, q);
    if (!cert) {
        out.primary = dump_json(not_found_json(
            "no partition into " + std::to_string(q) + " triangles surrounds a common point"));
        out.exit_code = 1;
        return out;
    }
    if (!qstab::verify_birch(config, *cert)) {
        throw std::logic_error("internal error: certificate failed exact recheck");
    }
    out.primary = dump_json(qstab::birch_to_json(*cert));
    return out;
}

RunOutcome run_witness(const Json& params, std::uint64_t seed) {
    const int q = params.at("q").get<int>();
    const int d = params.at("d").get<int>();
    RunOutcome out;
    out.primary = dump_json(qstab::configuration_to_json(qstab::optimality_witness(q, d, seed)));
    return out;
}

RunOutcome run_plan(const Json& params) {
    const int q = params.at("q").get<int>();
    const int d = params.at("d").get<int>();
    const int c = params.at("c").get<int>();
    const qstab::PlanReport report = qstab::plan(q, d, c);
    RunOutcome out;
    out.primary = dump_json(qstab::plan_to_json(report));
    out.exit_code = report.bound_ok ? 0 : 1;
    return out;
}

RunOutcome run_shift(const Json& params) {
    const std::string sigma_path = params.at("sigma").get<std::string>();
    RunOutcome out;
    const qstab::SimplicialComplex sigma = load_complex(sigma_path, out);
    int p = params.at("p").get<int>();
    if (p < 0) p = static_cast<int>(sigma.universe().size());

    const qstab::Face independent(params.at("independent").get<std::vector<int>>());
    const qstab::Face sigma_plus(params.at("face").get<std::vector<int>>());
    const int m = qstab::shift_to_avoid(independent, sigma_plus, sigma, p);

    std::vector<int> rotated;
    for (int v : independent.vertices()) rotated.push_back((v - 1 + m) % p + 1);
    std::sort(rotated.begin(), rotated.end());

    Json result;
    result["version"] = qstab::kFormatVersion;
    result["type"] = "shift_result";
    result["p"] = p;
    result["m"] = m;
    result["independent"] = independent.vertices();
    result["face"] = sigma_plus.vertices();
    result["rotated"] = rotated;
    out.primary = dump_json(result);
    return out;
}

// Single execution path shared by fresh runs and manifest replays, so the
// two cannot drift apart.
RunOutcome dispatch(const std::string& sub, const Json& params, std::uint64_t seed,
                    const std::string& cache_dir) {
    const qstab::ResultCache cache(cache_dir);
    if (sub == "build") return run_build(params);
    if (sub == "homology") return run_homology(params, cache);
    if (sub == "certify") return run_certify(params, cache);
    if (sub == "tverberg") return run_tverberg(params);
    if (sub == "birch") return run_birch(params);
    if (sub == "witness") return run_witness(params, seed);
    if (sub == "plan") return run_plan(params);
    if (sub == "shift") return run_shift(params);
    throw std::domain_error("unknown subcommand: " + sub);
}

void emit_primary(const std::string& out_path, const std::string& primary) {
    if (out_path.empty()) {
        std::cout << primary << std::flush;
        return;
    }
    qstab::write_text_file(out_path, primary);
}

void write_manifest(const std::string& path, const std::string& sub, const Json& params,
                    std::uint64_t seed, const RunOutcome& outcome) {
    Json manifest;
    manifest["version"] = qstab::kFormatVersion;
    manifest["type"] = "run_manifest";
    manifest["tool_version"] = qstab::kToolVersion;
    manifest["subcommand"] = sub;
    manifest["parameters"] = params;
    manifest["inputs"] = outcome.inputs;
    manifest["seed"] = seed;
    manifest["timestamp"] = utc_timestamp();
    qstab::write_text_file(path, dump_json(manifest));
}

struct Common {
    std::string out;
    std::string manifest;
    std::string cache_dir;
    std::uint64_t seed = qstab::SplitMix64::kDefaultSeed;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "q-stable complex toolkit: builds stable-set complexes, certifies "
        "connectivity claims, and searches for exact Tverberg-type certificates"};
    app.set_version_flag("--version", qstab::kToolVersion);
    app.require_subcommand(0, 1);

    std::string replay_path, replay_out, replay_cache;
    app.add_option("--replay", replay_path,
                   "re-run a recorded manifest, reproducing its primary output byte for byte");
    app.add_option("--out", replay_out,
                   "with --replay: write the reproduced output here instead of stdout");
    app.add_option("--cache-dir", replay_cache, "with --replay: result cache directory")
        ->envname("QSTABLE_CACHE_DIR");

    auto add_common = [](CLI::App* sub, Common& c) {
        sub->add_option("--out", c.out, "write the primary output to this file instead of stdout");
        sub->add_option("--manifest", c.manifest, "record a replayable run manifest to this file");
        sub->add_option("--cache-dir", c.cache_dir, "result cache directory")
            ->envname("QSTABLE_CACHE_DIR");
        sub->add_option("--seed", c.seed, "seed for randomized searches (fixed default)");
    };

    auto* build = app.add_subcommand("build", "construct a stable-set complex, emit complex JSON");
    std::string build_family;
    int build_q = 0, build_r = -1, build_p = -1, build_a = 0, build_k = 0;
    build->add_option("--family", build_family, "one of L, La, C, Ca, T")
        ->required()
        ->check(CLI::IsMember({"L", "La", "C", "Ca", "T"}));
    build->add_option("-q,--q", build_q, "stability parameter")->required();
    build->add_option("-r,--r", build_r, "vertex count, linear families");
    build->add_option("-p,--p", build_p, "vertex count, cyclic families");
    build->add_option("-a,--a", build_a, "extendability threshold");
    build->add_option("-k,--k", build_k, "truncation offset (family T)");
    Common build_common;
    add_common(build, build_common);

    auto* homology =
        app.add_subcommand("homology", "reduced homology or Betti numbers of a complex JSON file");
    std::string hom_path, hom_coeff = "int";
    homology->add_option("complex", hom_path, "complex JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    homology->add_option("--coeff", hom_coeff,
                         "coefficients: int (integral), q (rational), gf:P (prime field)");
    Common hom_common;
    add_common(homology, hom_common);

    auto* certify =
        app.add_subcommand("certify", "run a claim's verification grid, emit a CSV report");
    std::string cert_claim, cert_grid = "default";
    int cert_q = 0, cert_q_max = 0, cert_a_max = 0, cert_r_max = 0, cert_p_max = 0;
    certify->add_option("--claim", cert_claim, "claim id: 5.1, 5.3, 5.4, 5.6, or thm5.1")
        ->required();
    certify->add_option("--grid", cert_grid, "grid preset naming the built-in parameter grid")
        ->check(CLI::IsMember({"default", "spec"}));
    certify->add_option("--q", cert_q, "restrict to one q");
    certify->add_option("--q-max", cert_q_max, "largest q to sweep");
    certify->add_option("--a-max", cert_a_max, "largest a to sweep");
    certify->add_option("--r-max", cert_r_max, "largest linear vertex count");
    certify->add_option("--p-max", cert_p_max, "largest cyclic vertex count");
    Common cert_common;
    add_common(certify, cert_common);

    auto* tverberg =
        app.add_subcommand("tverberg", "search for a q-part common-point certificate");
    std::string tv_points, tv_colors, tv_sigma;
    int tv_q = 0;
    bool tv_equal = false;
    tverberg->add_option("--points", tv_points, "points text file, one point per line")
        ->required()
        ->check(CLI::ExistingFile);
    tverberg->add_option("-q,--q", tv_q, "number of parts")->required();
    auto* colors_opt = tverberg->add_option("--colors", tv_colors, "JSON color classes file")
                           ->check(CLI::ExistingFile);
    tverberg
        ->add_option("--sigma", tv_sigma,
                     "constraint complex JSON; the cover's label sets must be its faces")
        ->check(CLI::ExistingFile)
        ->excludes(colors_opt);
    tverberg->add_flag("--equal-coeff", tv_equal, "equal class mass in every part")
        ->needs(colors_opt);
    Common tv_common;
    add_common(tverberg, tv_common);

    auto* birch = app.add_subcommand(
        "birch", "find q vertex-disjoint triangles strictly surrounding a common point");
    std::string birch_points;
    int birch_q = 0;
    birch->add_option("--points", birch_points, "planar points text file, exactly 3q points")
        ->required()
        ->check(CLI::ExistingFile);
    birch->add_option("-q,--q", birch_q, "number of triangles")->required();
    Common birch_common;
    add_common(birch, birch_common);

    auto* witness = app.add_subcommand(
        "witness", "generic configuration admitting no q-part common point, verified exhaustively");
    int wit_q = 0, wit_d = 0;
    witness->add_option("-q,--q", wit_q, "number of parts excluded")->required();
    witness->add_option("-d,--d", wit_d, "ambient dimension")->required();
    Common wit_common;
    add_common(witness, wit_common);

    auto* plan =
        app.add_subcommand("plan", "choose a prime p = (a+1)q+1 whose join bound reaches d");
    int plan_q = 0, plan_d = 0, plan_c = 4;
    plan->add_option("-q,--q", plan_q, "number of parts")->required();
    plan->add_option("-d,--d", plan_d, "ambient dimension")->required();
    plan->add_option("-c,--c", plan_c, "connectivity slack constant");
    Common plan_common;
    add_common(plan, plan_common);

    auto* shift = app.add_subcommand(
        "shift", "rotate an independent set off a face of a cyclic constraint complex");
    std::string shift_sigma;
    int shift_p = -1;
    std::vector<int> shift_ind, shift_face;
    shift->add_option("--sigma", shift_sigma, "constraint complex JSON on {1..p}")
        ->required()
        ->check(CLI::ExistingFile);
    shift->add_option("-p,--p", shift_p, "modulus (default: size of the complex universe)");
    shift->add_option("--independent", shift_ind, "comma-separated independent set")
        ->required()
        ->delimiter(',');
    shift->add_option("--face", shift_face, "comma-separated face to avoid (default: empty)")
        ->delimiter(',');
    Common shift_common;
    add_common(shift, shift_common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n";
        const auto used = app.get_subcommands();
        std::cerr << (used.empty() ? app.help() : used.front()->help()) << std::flush;
        return 2;
    }

    try {
        std::string sub_name;
        Json params;
        const Common* common = nullptr;

        if (build->parsed()) {
            sub_name = "build";
            params = {{"family", build_family}, {"q", build_q}, {"r", build_r},
                      {"p", build_p},           {"a", build_a}, {"k", build_k}};
            common = &build_common;
        } else if (homology->parsed()) {
            sub_name = "homology";
            params = {{"complex", hom_path}, {"coeff", hom_coeff}};
            common = &hom_common;
        } else if (certify->parsed()) {
            sub_name = "certify";
            params = {{"claim", cert_claim}, {"grid", "default"}, {"q", cert_q},
                      {"q_max", cert_q_max}, {"a_max", cert_a_max}, {"r_max", cert_r_max},
                      {"p_max", cert_p_max}};
            common = &cert_common;
        } else if (tverberg->parsed()) {
            sub_name = "tverberg";
            params = {{"points", tv_points}, {"q", tv_q}, {"colors", tv_colors},
                      {"sigma", tv_sigma},   {"equal_coeff", tv_equal}};
            common = &tv_common;
        } else if (birch->parsed()) {
            sub_name = "birch";
            params = {{"points", birch_points}, {"q", birch_q}};
            common = &birch_common;
        } else if (witness->parsed()) {
            sub_name = "witness";
            params = {{"q", wit_q}, {"d", wit_d}};
            common = &wit_common;
        } else if (plan->parsed()) {
            sub_name = "plan";
            params = {{"q", plan_q}, {"d", plan_d}, {"c", plan_c}};
            common = &plan_common;
        } else if (shift->parsed()) {
            sub_name = "shift";
            params = {{"sigma", shift_sigma}, {"p", shift_p}, {"independent", shift_ind},
                      {"face", shift_face}};
            common = &shift_common;
        }

        if (!replay_path.empty()) {
            if (common != nullptr) {
                throw std::domain_error("--replay does not combine with a subcommand");
            }
            const Json manifest = [&] {
                try {
                    return Json::parse(qstab::read_text_file(replay_path));
                } catch (const Json::parse_error& e) {
                    throw std::runtime_error("cannot parse " + replay_path + ": " + e.what());
                }
            }();
            if (manifest.value("type", std::string()) != "run_manifest") {
                throw std::runtime_error(replay_path + ": not a run manifest");
            }
            if (manifest.value("tool_version", std::string()) != qstab::kToolVersion) {
                std::cerr << "warning: manifest was recorded by tool version "
                          << manifest.value("tool_version", std::string("<missing>"))
                          << ", this is " << qstab::kToolVersion << "\n";
            }
            const RunOutcome outcome =
                dispatch(manifest.at("subcommand").get<std::string>(),
                         manifest.at("parameters"),
                         manifest.at("seed").get<std::uint64_t>(), replay_cache);
            if (manifest.contains("inputs")) {
                for (const auto& [path, hash] : manifest.at("inputs").items()) {
                    const auto it = outcome.inputs.find(path);
                    if (it != outcome.inputs.end() && it->second != hash.get<std::string>()) {
                        std::cerr << "warning: input " << path
                                  << " changed since the manifest was recorded\n";
                    }
                }
            }
            emit_primary(replay_out, outcome.primary);
            return outcome.exit_code;
        }

        if (common == nullptr) {
            std::cerr << app.help() << std::flush;
            return 2;
        }

        const RunOutcome outcome = dispatch(sub_name, params, common->seed, common->cache_dir);
        emit_primary(common->out, outcome.primary);
        if (!common->manifest.empty()) {
            write_manifest(common->manifest, sub_name, params, common->seed, outcome);
        }
        return outcome.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

// Command-line front end: exact quiver Grassmannian counts, characters,
// flag enumeration and the theorem verification suites, over a prime field.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "qcchar/json_io.hpp"
#include "qcchar/suites.hpp"

namespace fs = std::filesystem;
using namespace qcchar;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitLambda = 4;

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(uint64_t v) {
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

DimVector parse_dim_list(const std::string& s) {
    DimVector out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

/// Selector grammar "i1,...,im;a1,...,am" with 1-based vertex labels.
FlagType parse_flag_type(const std::string& s) {
    auto semi = s.find(';');
    if (semi == std::string::npos) throw schema_error("flag type needs 'i1,..;a1,..'");
    FlagType t;
    for (int v : parse_dim_list(s.substr(0, semi))) t.i.push_back(v - 1);
    t.a = parse_dim_list(s.substr(semi + 1));
    if (t.i.size() != t.a.size()) throw schema_error("flag type: length mismatch");
    return t;
}

struct ObjectSpec {
    Representation rep;
    DimVector shifted;
};

ObjectSpec load_object(const std::string& path, QuiverPtr q, PrimeField f) {
    json j = load_json_file(path);
    ObjectSpec o{rep_from_json(j, q, f), DimVector(q->n(), 0)};
    if (j.contains("shifted")) {
        o.shifted = j.at("shifted").get<DimVector>();
        if (static_cast<int>(o.shifted.size()) != q->n())
            throw schema_error("shifted length != vertex count");
    }
    return o;
}

IntMat resolve_lambda(const std::string& spec, const Quiver& q, const std::string& d_str) {
    if (spec == "auto") {
        std::vector<long long> D(q.n(), 1);
        if (!d_str.empty()) {
            DimVector dv = parse_dim_list(d_str);
            if (static_cast<int>(dv.size()) != q.n())
                throw schema_error("--d length != vertex count");
            for (int i = 0; i < q.n(); ++i) D[i] = dv[i];
        }
        return compatible_lambda(q.btilde(), D);
    }
    return intmat_from_json(load_json_file(spec));
}

std::string cache_dir() {
    const char* env = std::getenv("QCCHAR_CACHE");
    return env && *env ? env : ".qcchar-cache";
}

/// Job file: field, quiver, lambda and named objects up front, then a task
/// list of subcommand invocations. Output is one line per task.
int run_job(const std::string& path, std::ostream& os) {
    json j = load_json_file(path);
    uint32_t p = j.value("p", 2);
    PrimeField field(p);
    QuiverPtr q;
    if (j.at("quiver").is_string())
        q = quiver_from_json(load_json_file(j.at("quiver").get<std::string>()));
    else
        q = quiver_from_json(j.at("quiver"));

    IntMat lambda;
    bool have_lambda = false;
    if (j.contains("lambda")) {
        if (j.at("lambda").is_string()) {
            if (j.at("lambda").get<std::string>() != "auto")
                throw schema_error("job lambda must be 'auto' or an inline matrix");
            std::vector<long long> D(q->n(), 1);
            if (j.contains("d")) {
                auto dv = j.at("d").get<std::vector<long long>>();
                if (static_cast<int>(dv.size()) != q->n())
                    throw schema_error("job d length != vertex count");
                D = dv;
            }
            lambda = compatible_lambda(q->btilde(), D);
        } else {
            lambda = intmat_from_json(j.at("lambda"));
            for (size_t r = 0; r < lambda.size(); ++r)
                for (size_t c = 0; c < lambda.size(); ++c)
                    if (lambda[r][c] != -lambda[c][r])
                        throw schema_error("job lambda is not skew-symmetric");
        }
        have_lambda = true;
    }

    std::map<std::string, Representation> reps;
    std::map<std::string, DimVector> shifted;
    const json objs = j.value("objects", json::object());
    for (auto it = objs.begin(); it != objs.end(); ++it) {
        reps.emplace(it.key(), rep_from_json(it.value(), q, field));
        DimVector s(q->n(), 0);
        if (it.value().contains("shifted")) s = it.value().at("shifted").get<DimVector>();
        shifted.emplace(it.key(), s);
    }
    auto rep_of = [&](const std::string& name) -> const Representation& {
        auto it = reps.find(name);
        if (it == reps.end()) throw schema_error("job references unknown object '" + name + "'");
        return it->second;
    };

    for (const json& task : j.value("tasks", json::array())) {
        std::string op = task.at("op").get<std::string>();
        if (op == "gr") {
            os << submodules_of_dim(rep_of(task.at("rep")), task.at("dim").get<DimVector>())
                      .size()
               << "\n";
        } else if (op == "character") {
            if (!have_lambda) throw schema_error("character task needs a job lambda");
            const std::string name = task.at("object");
            ClusterObject X{rep_of(name), shifted.at(name)};
            std::string style = task.value("style", "tilde");
            SkewPoly poly =
                style == "plain" ? x_character(X, lambda) : tilde_character(X, lambda);
            os << poly.canonical_string() << "\n";
        } else if (op == "delta") {
            FlagType t = parse_flag_type(task.at("type").get<std::string>());
            os << delta_eval(rep_of(task.at("rep")), t) << "\n";
        } else if (op == "flags") {
            FlagType t = parse_flag_type(task.at("type").get<std::string>());
            for (const Chain& c : chains_of_type(rep_of(task.at("rep")), t))
                os << c.key() << "\n";
        } else if (op == "ext") {
            os << ExtSpace(rep_of(task.at("m")), rep_of(task.at("n"))).ext_dim() << "\n";
        } else {
            throw schema_error("job task op '" + op + "' is not supported");
        }
    }
    return kExitOk;
}

int run_verify(const Catalog& cat, const std::string& suite, const std::string& case_name,
               int depth, int count, uint64_t seed, std::ostream& os) {
    std::vector<VerificationReport> reports;
    if (suite == "fiber-law") {
        reports.push_back(check_fiber_law(fiber_law_suite(cat, count, seed)));
    } else if (suite == "balance") {
        reports.push_back(check_pointwise_balance(balance_suite(cat, depth)));
    } else if (suite == "exponent-id") {
        reports.push_back(check_exponent_identity(exponent_suite(cat)));
    } else if (suite == "maintheorem1" || suite == "onedim-delta" || suite == "scaling") {
        std::string c = case_name.empty() ? "preproj-a2/s1-s2" : case_name;
        auto dash = c.rfind('-');
        auto slash = c.rfind('/');
        if (dash == std::string::npos || slash == std::string::npos || dash < slash)
            throw schema_error("case must look like preproj-a2/s1-s2");
        std::string qn = c.substr(0, slash);
        std::string m = qn + "/" + c.substr(slash + 1, dash - slash - 1);
        std::string n = qn + "/" + c.substr(dash + 1);
        if (suite == "maintheorem1")
            reports.push_back(check_maintheorem1(cat.object(m), cat.object(n), depth, {}, c));
        else if (suite == "onedim-delta")
            reports.push_back(check_onedim_delta(cat.object(m), cat.object(n), depth, c));
        else
            reports.push_back(check_scaling_invariance(cat.object(m), cat.object(n), depth, c));
    } else if (suite == "exchange") {
        if (case_name.empty()) {
            for (const auto& t : cat.triples())
                reports.push_back(
                    check_exchange_hereditary(t.M, t.N, t.L, t.Lprime, t.lambda, t.name));
        } else {
            const auto& t = cat.triple(case_name);
            reports.push_back(
                check_exchange_hereditary(t.M, t.N, t.L, t.Lprime, t.lambda, t.name));
        }
    } else {
        throw schema_error("unknown verify suite '" + suite + "'");
    }
    bool all = true;
    for (const VerificationReport& r : reports) {
        os << r.to_json() << "\n";
        all = all && r.passed();
    }
    return all ? kExitOk : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quantum cluster character toolkit"};
    app.require_subcommand(1);

    uint32_t p = 2;
    std::string quiver_path, lambda_spec = "auto";
    long long cap = kDefaultEnumerationCap;
    int depth = 4;
    bool as_json = false;
    app.add_option("--p", p, "prime field modulus")->capture_default_str();
    app.add_option("--quiver", quiver_path, "quiver JSON file");
    app.add_option("--lambda", lambda_spec, "'auto' or a JSON file with a skew matrix");
    std::string d_str;
    app.add_option("--d", d_str, "positive diagonal d1,d2,... for 'auto' (default all 1)");
    app.add_option("--cap", cap, "enumeration cap")->capture_default_str();
    app.add_option("--depth", depth, "flag-type depth for delta checks")->capture_default_str();
    app.add_flag("--json", as_json, "emit JSON where applicable");

    // gr
    auto* gr = app.add_subcommand("gr", "count (or list) submodules of a given dimension");
    std::string rep_path, dim_str;
    bool list_subs = false;
    gr->add_option("--rep", rep_path, "representation JSON")->required();
    gr->add_option("--dim", dim_str, "dimension vector d1,d2,...")->required();
    gr->add_flag("--list", list_subs, "print the canonical submodule list");

    // character
    auto* ch = app.add_subcommand("character", "print a quantum cluster character");
    std::string obj_path, style = "tilde";
    ch->add_option("--object", obj_path, "object JSON (dims/matrices[/shifted])")->required();
    ch->add_option("--style", style, "plain|tilde")->capture_default_str();

    // delta
    auto* de = app.add_subcommand("delta", "count flags of a given type");
    std::string type_str;
    de->add_option("--rep", rep_path, "representation JSON");
    de->add_option("--type", type_str, "flag type 'i1,..;a1,..' (1-based)")->required();

    // flags
    auto* fl = app.add_subcommand("flags", "list flags of a given type");
    fl->add_option("--rep", rep_path, "representation JSON");
    fl->add_option("--type", type_str, "flag type 'i1,..;a1,..' (1-based)");

    // ext
    auto* ex = app.add_subcommand("ext", "dimension of Ext^1 between two representations");
    std::string m_path, n_path;
    ex->add_option("--m", m_path, "quotient representation JSON")->required();
    ex->add_option("--n", n_path, "sub representation JSON")->required();

    // verify
    auto* ve = app.add_subcommand("verify", "run a verification suite");
    std::string suite, case_name;
    int count = 200;
    uint64_t seed = 20240915;
    ve->add_option("suite", suite,
                   "fiber-law|maintheorem1|onedim-delta|exchange|balance|exponent-id|scaling")
        ->required();
    ve->add_option("--case", case_name, "catalog case selector");
    ve->add_option("--count", count, "instance count for randomized suites")
        ->capture_default_str();
    ve->add_option("--seed", seed, "rng seed for randomized suites")->capture_default_str();

    // catalog
    auto* ca = app.add_subcommand("catalog", "list catalog entries");

    // job
    auto* jb = app.add_subcommand("job", "run the task list of a job file");
    std::string job_path;
    jb->add_option("file", job_path, "job JSON file")->required();

    for (CLI::App* sub : {gr, ch, de, fl, ex, ve, ca, jb}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        PrimeField field(p);
        EnumerationLimits lim{cap};

        if (gr->parsed() || de->parsed() || fl->parsed() || ex->parsed() || ch->parsed()) {
            if (quiver_path.empty()) throw schema_error("--quiver is required");
        }

        if (gr->parsed()) {
            QuiverPtr q = quiver_from_json(load_json_file(quiver_path));
            Representation r = rep_from_json(load_json_file(rep_path), q, field);
            DimVector g = parse_dim_list(dim_str);
            if (static_cast<int>(g.size()) != q->n())
                throw schema_error("--dim length != vertex count");
            auto subs = submodules_of_dim(r, g, lim);
            std::cout << subs.size() << "\n";
            if (list_subs)
                for (const SubspaceFamily& s : subs) std::cout << family_key(s) << "\n";
            return kExitOk;
        }

        if (ch->parsed()) {
            json qj = load_json_file(quiver_path);
            QuiverPtr q = quiver_from_json(qj);
            ObjectSpec o = load_object(obj_path, q, field);
            IntMat lambda = resolve_lambda(lambda_spec, *q, d_str);
            ClusterObject X{o.rep, o.shifted};
            if (style != "plain" && style != "tilde")
                throw schema_error("--style must be plain or tilde");

            std::string cache_key = "p" + std::to_string(p) + "|q" + hex64(fnv1a(q->key())) +
                                    "|o" + hex64(fnv1a(X.key())) + "|l";
            for (auto& row : lambda)
                for (long long v : row) cache_key += std::to_string(v) + ",";
            cache_key += "|" + style;
            fs::path dir = cache_dir();
            fs::path file = dir / (hex64(fnv1a(cache_key)) + ".json");
            if (fs::exists(file)) {
                json cached = load_json_file(file.string());
                if (cached.value("key", "") == cache_key) {
                    std::cout << cached.at("canonical").get<std::string>() << "\n";
                    return kExitOk;
                }
            }
            SkewPoly poly = style == "plain" ? x_character(X, lambda, lim)
                                             : tilde_character(X, lambda, lim);
            std::error_code ec;
            fs::create_directories(dir, ec);
            if (!ec) {
                std::ofstream out(file);
                json store;
                store["key"] = cache_key;
                store["canonical"] = poly.canonical_string();
                store["dump"] = json::parse(poly.json_dump());
                out << store.dump() << "\n";
            }
            std::cout << (as_json ? poly.json_dump() : poly.canonical_string()) << "\n";
            return kExitOk;
        }

        if (de->parsed() || fl->parsed()) {
            QuiverPtr q = quiver_from_json(load_json_file(quiver_path));
            Representation r = rep_from_json(load_json_file(rep_path), q, field);
            FlagType t = parse_flag_type(type_str);
            auto chains = chains_of_type(r, t, lim);
            if (de->parsed()) {
                std::cout << chains.size() << "\n";
            } else {
                std::cout << chains.size() << "\n";
                for (const Chain& c : chains) std::cout << c.key() << "\n";
            }
            return kExitOk;
        }

        if (ex->parsed()) {
            QuiverPtr q = quiver_from_json(load_json_file(quiver_path));
            Representation M = rep_from_json(load_json_file(m_path), q, field);
            Representation N = rep_from_json(load_json_file(n_path), q, field);
            ExtSpace es(M, N);
            if (as_json) {
                std::cout << "{\"dim\":" << es.ext_dim()
                          << ",\"cocycles\":" << es.cocycle_dim()
                          << ",\"coboundaries\":" << es.coboundary_dim() << "}\n";
            } else {
                std::cout << es.ext_dim() << "\n";
            }
            return kExitOk;
        }

        if (ve->parsed()) {
            Catalog cat(p);
            return run_verify(cat, suite, case_name, depth, count, seed, std::cout);
        }

        if (jb->parsed()) return run_job(job_path, std::cout);

        if (ca->parsed()) {
            Catalog cat(p);
            std::cout << "quivers:\n";
            for (const std::string& n : cat.quiver_names()) std::cout << "  " << n << "\n";
            std::cout << "objects:\n";
            for (const std::string& n : cat.object_names()) std::cout << "  " << n << "\n";
            std::cout << "exchange triples:\n";
            for (const auto& t : cat.triples())
                std::cout << "  " << t.name << "  (" << t.provenance << ")\n";
            return kExitOk;
        }
    } catch (const lambda_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitLambda;
    } catch (const cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const schema_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}

#include "simsim/cli.hpp"

#include <cmath>
#include <functional>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "simsim/decompose.hpp"
#include "simsim/eigenmap.hpp"
#include "simsim/harris.hpp"
#include "simsim/homology.hpp"
#include "simsim/io.hpp"
#include "simsim/orbits.hpp"
#include "simsim/rep_ring.hpp"

namespace simsim::cli {

namespace {

using io::Json;

// Raised when an input document cannot be turned into a valid value.
class InputError : public Error {
public:
    using Error::Error;
};

struct Flags {
    double tol = kDefaultTol;
    std::uint64_t seed = 0;
    std::string max_word_len = "AUTO";
    int max_deg = 10;
    double theta = 0.0;
    int face_index = 0;
    int index = 1;
    std::string group;
    std::string input;
    std::string match;
    std::vector<std::string> files;
};

template <typename F>
auto load(const std::string& path, F&& convert) {
    try {
        return convert(io::read_json_file(path));
    } catch (const Error& e) {
        throw InputError(path + ": " + e.what());
    } catch (const nlohmann::json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

UnitaryTuple load_tuple(const std::string& path, double tol) {
    return load(path, [tol](const Json& j) { return io::tuple_from_json(j, tol); });
}

const UnitaryMatrix& pick(const UnitaryTuple& t, int index) {
    if (index < 1 || index > t.k())
        throw DomainError("--index " + std::to_string(index) + " outside 1.." + std::to_string(t.k()));
    return t[index - 1];
}

Json schema_for(const std::string& type) {
    const Json complex = {{"type", "array"}, {"items", {{"type", "number"}}}, {"minItems", 2}, {"maxItems", 2}};
    const Json matrix = {{"type", "array"}, {"description", "rows, each an array of [re, im] pairs"},
                         {"items", {{"type", "array"}, {"items", complex}}}};
    const Json integer = {{"oneOf", Json::array({Json{{"type", "integer"}},
                                                 Json{{"type", "string"}, {"pattern", "^-?[0-9]+$"}}})}};
    const Json int_rows = {{"type", "array"}, {"items", {{"type", "array"}, {"items", integer}}}};
    const Json entry = {{"type", "object"},
                        {"required", {"rank"}},
                        {"properties",
                         {{"rank", {{"oneOf", Json::array({Json{{"type", "integer"}, {"minimum", 0}},
                                                           Json{{"const", "countable"}}})}}},
                          {"torsion", {{"type", "array"}, {"items", integer}}},
                          {"annotation", {{"type", {"string", "null"}}}}}}};
    const Json arrangement = {{"type", "object"},
                              {"required", {"n", "planes"}},
                              {"properties", {{"n", {{"type", "integer"}}}, {"planes", {{"type", "array"}, {"items", matrix}}}}}};
    Json s;
    if (type == "tuple") {
        s = {{"type", "object"},
             {"required", {"n", "k", "matrices"}},
             {"properties", {{"n", {{"type", "integer"}, {"minimum", 1}}},
                             {"k", {{"type", "integer"}, {"minimum", 1}}},
                             {"matrices", {{"type", "array"}, {"items", matrix}}}}}};
    } else if (type == "phases") {
        s = {{"type", "object"},
             {"required", {"n", "phases"}},
             {"properties", {{"n", {{"type", "integer"}}},
                             {"phases", {{"type", "array"}, {"items", {{"type", "number"}, {"minimum", 0}, {"exclusiveMaximum", 1}}}}}}}};
    } else if (type == "configuration") {
        s = {{"type", "object"},
             {"required", {"n", "blocks"}},
             {"properties",
              {{"n", {{"type", "integer"}}},
               {"blocks", {{"type", "array"},
                           {"items", {{"type", "object"},
                                      {"required", {"basis", "t"}},
                                      {"properties", {{"basis", matrix}, {"t", {{"type", "number"}, {"minimum", 0}, {"maximum", 1}}}}}}}}}}}};
    } else if (type == "arrangement") {
        s = arrangement;
    } else if (type == "multi_arrangement") {
        s = {{"type", "object"},
             {"required", {"n", "members"}},
             {"properties", {{"n", {{"type", "integer"}}}, {"members", {{"type", "array"}, {"items", arrangement}}}}}};
    } else if (type == "integer_matrix") {
        s = {{"type", "object"},
             {"required", {"rows", "cols", "entries"}},
             {"properties", {{"rows", {{"type", "integer"}}}, {"cols", {{"type", "integer"}}}, {"entries", int_rows}}}};
    } else if (type == "chain_complex") {
        s = {{"type", "object"},
             {"required", {"dims", "boundaries"}},
             {"properties", {{"dims", {{"type", "array"}, {"items", {{"type", "integer"}, {"minimum", 0}}}}},
                             {"boundaries", {{"type", "object"}, {"patternProperties", {{"^[1-9][0-9]*$", int_rows}}}}}}}};
    } else if (type == "graded_group") {
        s = {{"type", "object"},
             {"required", {"degrees"}},
             {"properties", {{"degrees", {{"type", "object"}, {"patternProperties", {{"^[0-9]+$", entry}}}}},
                             {"warnings", {{"type", "array"}, {"items", {{"type", "string"}}}}}}}};
    } else if (type == "similarity") {
        s = {{"type", "object"},
             {"required", {"verdict", "witness", "max_word_len"}},
             {"properties", {{"verdict", {{"enum", {"similar", "distinct", "inconclusive"}}}},
                             {"witness", {{"type", {"object", "null"}}}},
                             {"max_word_len", {{"type", "integer"}}},
                             {"words_examined", {{"type", "integer"}}},
                             {"reason", {{"type", "string"}}}}}};
    } else {
        throw DomainError("unknown schema type '" + type +
                          "' (tuple, phases, configuration, arrangement, multi_arrangement, integer_matrix, "
                          "chain_complex, graded_group, similarity)");
    }
    Json out{{"$schema", "https://json-schema.org/draft/2020-12/schema"}, {"title", type}};
    out.update(s);
    return out;
}

struct Outcome {
    Json doc;
    int code = kOk;
};

using Handler = std::function<Outcome(const Flags&)>;

Outcome cmd_ucheck(const Flags& f) {
    const auto mats = load(f.files.at(0), [](const Json& j) { return io::raw_matrices_from_json(j); });
    Json residuals = Json::array();
    bool all = true;
    for (const auto& m : mats) {
        const double r = unitarity_residual(m);
        residuals.push_back(r);
        all = all && r <= f.tol;
    }
    return {Json{{"unitary", all}, {"tol", f.tol}, {"residuals", std::move(residuals)}}, all ? kOk : kNegative};
}

Outcome cmd_eig(const Flags& f) {
    const auto t = load_tuple(f.files.at(0), f.tol);
    return {io::phases_to_json(eigenphases(pick(t, f.index), f.tol))};
}

Outcome cmd_phi(const Flags& f) {
    const auto t = load_tuple(f.files.at(0), f.tol);
    Json comps = Json::array();
    for (const auto& p : eigenvalue_map(t, f.tol)) comps.push_back(io::phases_to_json(p));
    return {Json{{"n", t.n()}, {"k", t.k()}, {"components", std::move(comps)}}};
}

Outcome cmd_symdist(const Flags& f) {
    const auto a = load(f.files.at(0), [](const Json& j) { return io::phases_from_json(j); });
    const auto b = load(f.files.at(1), [](const Json& j) { return io::phases_from_json(j); });
    return {Json{{"distance", sym_distance(a, b)}}};
}

std::optional<int> parse_word_len(const std::string& s) {
    if (s == "AUTO" || s == "auto") return std::nullopt;
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw DomainError("--max-word-len must be AUTO or a non-negative integer");
    return std::stoi(s);
}

Outcome cmd_similar(const Flags& f) {
    const auto len = parse_word_len(f.max_word_len);
    const auto a = load_tuple(f.files.at(0), f.tol);
    const auto b = load_tuple(f.files.at(1), f.tol);
    const auto r = simultaneously_similar(a, b, f.tol, len, f.seed);
    const int code = r.verdict == Verdict::similar ? kOk : r.verdict == Verdict::distinct ? kNegative : kInconclusive;
    return {io::similarity_to_json(r), code};
}

Outcome cmd_irreducible(const Flags& f) {
    const auto t = load_tuple(f.files.at(0), f.tol);
    const auto c = commutant_basis(t, f.tol);
    const bool irr = c.dim == 1;
    return {Json{{"irreducible", irr}, {"commutant_dim", c.dim}, {"sigma_max", c.sigma_max}, {"rank_threshold", c.threshold}},
            irr ? kOk : kNegative};
}

Outcome cmd_decompose(const Flags& f) {
    const auto t = load_tuple(f.files.at(0), f.tol);
    return {io::decomposition_to_json(decompose_irreducibles(t, f.tol, f.seed))};
}

HarrisConfiguration load_config(const std::string& path, double tol) {
    return load(path, [tol](const Json& j) {
        auto c = io::configuration_from_json(j);
        c.validate(tol);
        return c;
    });
}

Outcome cmd_harris_decompose(const Flags& f) {
    const auto t = load_tuple(f.files.at(0), f.tol);
    return {io::configuration_to_json(harris_decompose(pick(t, f.index), f.tol))};
}

Outcome cmd_harris_reconstruct(const Flags& f) {
    const auto c = load_config(f.files.at(0), f.tol);
    return {io::tuple_to_json(UnitaryTuple({harris_reconstruct(c, f.tol)}))};
}

Outcome cmd_harris_face(const Flags& f) {
    return {io::configuration_to_json(face_map(load_config(f.files.at(0), f.tol), f.face_index))};
}

Outcome cmd_harris_degeneracy(const Flags& f) {
    return {io::configuration_to_json(degeneracy_map(load_config(f.files.at(0), f.tol), f.face_index))};
}

Outcome cmd_angles(const Flags& f) {
    // Either a multi-arrangement or a plain list of subspaces under "planes".
    const auto m = load(f.files.at(0), [&](const Json& j) {
        MultiArrangement out;
        if (j.is_object() && j.contains("members")) {
            out = io::multi_arrangement_from_json(j);
        } else {
            const auto a = io::arrangement_from_json(j);
            out.n = a.n;
            for (const auto& p : a.planes) out.members.push_back(PlaneArrangement{a.n, {p}});
        }
        for (const auto& member : out.members)
            for (const auto& p : member.planes) PlaneArrangement{out.n, {p}}.validate(f.tol);
        return out;
    });
    Json pairs = Json::array();
    std::size_t total = 0;
    for (const auto& member : m.members) total += member.planes.size();
    const auto sig = principal_angle_signature(m);
    std::size_t at = 0;
    for (std::size_t a = 0; a < total; ++a)
        for (std::size_t b = a + 1; b < total; ++b) pairs.push_back(Json{{"a", a}, {"b", b}, {"cosines", sig[at++]}});
    return {Json{{"pairs", std::move(pairs)}}};
}

MultiArrangement load_multi(const std::string& path, double tol) {
    return load(path, [tol](const Json& j) {
        auto m = io::multi_arrangement_from_json(j);
        m.validate(tol);
        return m;
    });
}

Outcome cmd_homotopy(const Flags& f) {
    const auto m = load_multi(f.files.at(0), f.tol);
    const auto out = null_homotopy(m, f.theta);
    if (f.match.empty()) return {io::multi_arrangement_to_json(out)};

    const auto other = load_multi(f.match, f.tol);
    const auto out2 = null_homotopy(other, f.theta);
    const auto g = endpoint_matching(m, other);
    const double dist = arrangement_distance(transform(g, out), out2);
    const auto s1 = principal_angle_signature(out);
    const auto s2 = principal_angle_signature(out2);
    double gap = 0.0;
    for (std::size_t i = 0; i < s1.size(); ++i)
        for (std::size_t j = 0; j < s1[i].size(); ++j) gap = std::max(gap, std::fabs(s1[i][j] - s2[i][j]));
    const bool matched = dist <= f.tol && gap <= f.tol;
    return {Json{{"first", io::multi_arrangement_to_json(out)},
                 {"second", io::multi_arrangement_to_json(out2)},
                 {"matching", io::matrix_to_json(g.matrix())},
                 {"matching_distance", dist},
                 {"signature_gap", gap},
                 {"matched", matched}},
            matched ? kOk : kNegative};
}

IntegerMatrix load_int_matrix(const std::string& path) {
    return load(path, [](const Json& j) { return io::integer_matrix_from_json(j); });
}

Outcome cmd_snf(const Flags& f) {
    const auto s = smith_normal_form(load_int_matrix(f.files.at(0)));
    Json factors = Json::array();
    for (const auto& x : s.invariant_factors) factors.push_back(io::integer_to_json(x));
    return {Json{{"invariant_factors", std::move(factors)},
                 {"D", io::integer_matrix_to_json(s.d)},
                 {"U", io::integer_matrix_to_json(s.u)},
                 {"V", io::integer_matrix_to_json(s.v)}}};
}

Outcome cmd_cokernel(const Flags& f) { return {io::abelian_group_to_json(cokernel(load_int_matrix(f.files.at(0))))}; }

Outcome cmd_homology(const Flags& f) {
    const auto c = load(f.files.at(0), [](const Json& j) {
        auto cc = io::chain_complex_from_json(j);
        cc.validate();
        return cc;
    });
    return {io::graded_group_to_json(homology(c))};
}

Outcome cmd_ahss(const Flags& f) {
    if (f.group.empty() == f.input.empty()) throw DomainError("ahss needs exactly one of --group or --input");
    GradedAbelianGroup pi_r;
    if (!f.group.empty())
        pi_r = rep_ring_fixture(f.group, f.max_deg);
    else
        pi_r = load(f.input, [](const Json& j) { return io::graded_group_from_json(j); });
    Json doc = io::graded_group_to_json(ahss_assemble(pi_r, f.max_deg));
    doc["max_deg"] = f.max_deg;
    doc["pi_R"] = io::graded_group_to_json(pi_r);
    return {std::move(doc)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Unitary tuples, Harris decompositions and deformation K-theory bookkeeping", "simsim"};
    app.set_help_all_flag("--help-all");
    auto flags = std::make_shared<Flags>();
    bool version = false;
    std::string schema;
    app.add_flag("--version", version, "Print version information");
    app.add_option("--schema", schema, "Print the JSON schema of a document type");

    Handler selected;
    auto add_tol = [&](CLI::App* sc) {
        sc->add_option("--tol", flags->tol, "Numerical tolerance")->check(CLI::NonNegativeNumber);
    };
    auto files = [&](CLI::App* sc, int count, const std::string& what) {
        sc->add_option("files", flags->files, what)->required()->expected(count);
    };
    auto command = [&](CLI::App* parent, const std::string& name, const std::string& desc, Handler h) {
        CLI::App* sc = parent->add_subcommand(name, desc);
        sc->callback([&selected, h] { selected = h; });
        return sc;
    };

    auto* ucheck = command(&app, "ucheck", "Check unitarity of every matrix in a tuple file", cmd_ucheck);
    files(ucheck, 1, "tuple.json");
    add_tol(ucheck);

    auto* eig = command(&app, "eig", "Eigenphases of one matrix of a tuple", cmd_eig);
    files(eig, 1, "tuple.json");
    add_tol(eig);
    eig->add_option("--index", flags->index, "1-based member index")->check(CLI::PositiveNumber);

    auto* phi = command(&app, "phi", "Eigenvalue map of a tuple", cmd_phi);
    files(phi, 1, "tuple.json");
    add_tol(phi);

    auto* symdist = command(&app, "symdist", "Distance between two phase multisets", cmd_symdist);
    files(symdist, 2, "a.json b.json");

    auto* similar = command(&app, "similar", "Decide simultaneous unitary similarity", cmd_similar);
    files(similar, 2, "a.json b.json");
    add_tol(similar);
    similar->add_option("--max-word-len", flags->max_word_len, "Word length bound (AUTO = 2n^2)");
    similar->add_option("--seed", flags->seed, "Seed for the decomposition stage");

    auto* irreducible = command(&app, "irreducible", "Test irreducibility via the commutant", cmd_irreducible);
    files(irreducible, 1, "tuple.json");
    add_tol(irreducible);

    auto* decompose = command(&app, "decompose", "Split a tuple into irreducible summands", cmd_decompose);
    files(decompose, 1, "tuple.json");
    add_tol(decompose);
    decompose->add_option("--seed", flags->seed, "Seed for the random splitting element");

    auto* harris = app.add_subcommand("harris", "Simplicial decomposition of U(n)");
    harris->require_subcommand(1);
    auto* hd = command(harris, "decompose", "Eigenspace configuration of a unitary", cmd_harris_decompose);
    files(hd, 1, "tuple.json");
    add_tol(hd);
    hd->add_option("--index", flags->index, "1-based member index")->check(CLI::PositiveNumber);
    auto* hr = command(harris, "reconstruct", "Unitary of a configuration", cmd_harris_reconstruct);
    files(hr, 1, "config.json");
    add_tol(hr);
    auto* hf = command(harris, "face", "Face map d_i", cmd_harris_face);
    files(hf, 1, "config.json");
    add_tol(hf);
    hf->add_option("--i", flags->face_index, "Face index 0..p")->required();
    auto* hs = command(harris, "degeneracy", "Degeneracy map s_i", cmd_harris_degeneracy);
    files(hs, 1, "config.json");
    add_tol(hs);
    hs->add_option("--i", flags->face_index, "Degeneracy index 0..p")->required();

    auto* angles = command(&app, "angles", "Principal-angle cosines between subspaces", cmd_angles);
    files(angles, 1, "subspaces.json");
    add_tol(angles);

    auto* homotopy = command(&app, "homotopy", "Stabilization null-homotopy of a multi-arrangement", cmd_homotopy);
    files(homotopy, 1, "multi.json");
    add_tol(homotopy);
    homotopy->add_option("--theta", flags->theta, "Homotopy parameter in [0, pi/2]")->required();
    homotopy->add_option("--match", flags->match, "Second multi-arrangement to match at the same parameter");

    auto* snf = command(&app, "snf", "Smith normal form of an integer matrix", cmd_snf);
    files(snf, 1, "matrix.json");
    auto* cok = command(&app, "cokernel", "Cokernel of an integer matrix", cmd_cokernel);
    files(cok, 1, "matrix.json");
    auto* hom = command(&app, "homology", "Integral homology of a chain complex", cmd_homology);
    files(hom, 1, "complex.json");

    auto* ahss = command(&app, "ahss", "Assemble deformation K-theory from the representation ring", cmd_ahss);
    ahss->add_option("--group", flags->group, "heisenberg | z_semidirect_z2 | z2_semidirect_z4 | free(k)");
    ahss->add_option("--input", flags->input, "Graded group JSON for the representation ring");
    ahss->add_option("--max-deg", flags->max_deg, "Largest degree")->check(CLI::NonNegativeNumber);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "simsim: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (version) {
            out << io::format_json(Json{{"name", "simsim"}, {"version", kVersion}});
            return kOk;
        }
        if (!schema.empty()) {
            out << io::format_json(schema_for(schema));
            return kOk;
        }
        if (!selected) {
            err << "simsim: a subcommand is required\n" << app.help();
            return kUsage;
        }
        Outcome o = selected(*flags);
        out << io::format_json(o.doc);
        return o.code;
    } catch (const InputError& e) {
        err << "simsim: malformed input: " << e.what() << "\n";
        return kBadInput;
    } catch (const InconclusiveError& e) {
        err << "simsim: inconclusive: " << e.what() << "\n";
        return kInconclusive;
    } catch (const NumericalError& e) {
        err << "simsim: numerical failure: " << e.what() << "\n";
        return kInternal;
    } catch (const ShapeError& e) {
        err << "simsim: shape error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "simsim: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "simsim: internal error: " << e.what() << "\n";
        return kInternal;
    }
}

}  // namespace simsim::cli

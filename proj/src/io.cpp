#include "simsim/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace simsim::io {

namespace {

bool is_shallow(const Json& j) {
    if (!j.is_array()) return !j.is_object();
    for (const auto& e : j) {
        if (e.is_object()) return false;
        if (e.is_array())
            for (const auto& x : e)
                if (x.is_array() || x.is_object()) return false;
    }
    return true;
}

void write_scalar(const Json& j, std::string& out) {
    if (j.is_number_float()) {
        const double x = j.get<double>();
        if (!std::isfinite(x)) {
            out += "null";
            return;
        }
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        out += buf;
    } else {
        out += j.dump();
    }
}

void write_inline(const Json& j, std::string& out) {
    if (j.is_array()) {
        out += '[';
        bool first = true;
        for (const auto& e : j) {
            if (!first) out += ", ";
            first = false;
            write_inline(e, out);
        }
        out += ']';
    } else {
        write_scalar(j, out);
    }
}

void write(const Json& j, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ",\n";
            first = false;
            out += pad + Json(it.key()).dump() + ": ";
            write(it.value(), out, indent + 2);
        }
        out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
    } else if (j.is_array() && !is_shallow(j)) {
        out += "[\n";
        bool first = true;
        for (const auto& e : j) {
            if (!first) out += ",\n";
            first = false;
            out += pad;
            write(e, out, indent + 2);
        }
        out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "]";
    } else {
        write_inline(j, out);
    }
}

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) fail(std::string("expected an object with field '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing field '") + key + "'");
    return *it;
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) fail(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

double number(const Json& j, const char* what) {
    if (!j.is_number()) fail(std::string(what) + " must be a number");
    return j.get<double>();
}

// Basis matrices are stored like any other matrix (n rows); the column count
// comes from the first row, or 0 when there are no rows.
Matrix basis_from_json(const Json& j, int n) {
    if (!j.is_array() || static_cast<int>(j.size()) != n) fail("basis must have one row per ambient dimension");
    const Eigen::Index cols = n == 0 ? 0 : static_cast<Eigen::Index>(j.front().size());
    return matrix_from_json(j, n, cols);
}

}  // namespace

std::string format_json(const Json& j) {
    std::string out;
    write(j, out, 0);
    out += '\n';
    return out;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) fail("complex entries must be [re, im] pairs");
    return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, Eigen::Index rows, Eigen::Index cols) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows)
        fail("matrix must have " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const Json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
            fail("matrix row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
    }
    return m;
}

Json tuple_to_json(const UnitaryTuple& t) {
    Json mats = Json::array();
    for (const auto& m : t.matrices()) mats.push_back(matrix_to_json(m.matrix()));
    return Json{{"n", t.n()}, {"k", t.k()}, {"matrices", std::move(mats)}};
}

std::vector<Matrix> raw_matrices_from_json(const Json& j) {
    const int n = int_field(j, "n");
    const int k = int_field(j, "k");
    if (n < 1) fail("tuple dimension n must be >= 1");
    if (k < 1) fail("tuple arity k must be >= 1");
    const Json& mats = field(j, "matrices");
    if (!mats.is_array() || static_cast<int>(mats.size()) != k) fail("'matrices' must hold k matrices");
    std::vector<Matrix> out;
    for (const auto& m : mats) out.push_back(matrix_from_json(m, n, n));
    return out;
}

UnitaryTuple tuple_from_json(const Json& j, double tol) {
    std::vector<UnitaryMatrix> mats;
    for (auto& m : raw_matrices_from_json(j)) mats.emplace_back(std::move(m), tol);
    return UnitaryTuple(std::move(mats));
}

Json phases_to_json(const PhaseMultiset& p) { return Json{{"n", p.n()}, {"phases", p.phases()}}; }

PhaseMultiset phases_from_json(const Json& j) {
    const int n = int_field(j, "n");
    const Json& ph = field(j, "phases");
    if (!ph.is_array() || static_cast<int>(ph.size()) != n) fail("'phases' must hold n values");
    std::vector<double> v;
    for (const auto& x : ph) v.push_back(number(x, "phase"));
    return PhaseMultiset(std::move(v));
}

Json word_to_json(const Word& w) {
    Json out = Json::array();
    for (const auto& l : w) out.push_back(Json::array({l.generator, l.exponent}));
    return out;
}

Word word_from_json(const Json& j) {
    if (!j.is_array()) fail("word must be an array of [generator, exponent] pairs");
    Word w;
    for (const auto& l : j) {
        if (!l.is_array() || l.size() != 2 || !l[0].is_number_integer() || !l[1].is_number_integer())
            fail("word letters must be [generator, exponent] integer pairs");
        w.push_back({l[0].get<int>(), l[1].get<int>()});
    }
    return w;
}

Json configuration_to_json(const HarrisConfiguration& c) {
    Json blocks = Json::array();
    for (const auto& b : c.blocks) blocks.push_back(Json{{"basis", matrix_to_json(b.basis)}, {"t", b.phase}});
    return Json{{"n", c.n}, {"blocks", std::move(blocks)}};
}

HarrisConfiguration configuration_from_json(const Json& j) {
    HarrisConfiguration c;
    c.n = int_field(j, "n");
    if (c.n < 0) fail("n must be >= 0");
    const Json& blocks = field(j, "blocks");
    if (!blocks.is_array()) fail("'blocks' must be an array");
    for (const auto& b : blocks) c.blocks.push_back({basis_from_json(field(b, "basis"), c.n), number(field(b, "t"), "t")});
    return c;
}

Json arrangement_to_json(const PlaneArrangement& a) {
    Json planes = Json::array();
    for (const auto& p : a.planes) planes.push_back(matrix_to_json(p));
    return Json{{"n", a.n}, {"planes", std::move(planes)}};
}

PlaneArrangement arrangement_from_json(const Json& j) {
    PlaneArrangement a;
    a.n = int_field(j, "n");
    if (a.n < 0) fail("n must be >= 0");
    const Json& planes = field(j, "planes");
    if (!planes.is_array()) fail("'planes' must be an array");
    for (const auto& p : planes) a.planes.push_back(basis_from_json(p, a.n));
    return a;
}

Json multi_arrangement_to_json(const MultiArrangement& m) {
    Json members = Json::array();
    for (const auto& a : m.members) members.push_back(arrangement_to_json(a));
    return Json{{"n", m.n}, {"members", std::move(members)}};
}

MultiArrangement multi_arrangement_from_json(const Json& j) {
    MultiArrangement m;
    m.n = int_field(j, "n");
    const Json& members = field(j, "members");
    if (!members.is_array() || members.empty()) fail("'members' must be a non-empty array");
    for (const auto& a : members) {
        m.members.push_back(arrangement_from_json(a));
        if (m.members.back().n != m.n) fail("member ambient dimension differs from n");
    }
    return m;
}

Json integer_to_json(const Integer& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(x));
    return Json(x.str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            fail("integer string '" + s + "' is not a decimal integer");
        return Integer(s);
    }
    fail("expected an integer");
}

Json integer_matrix_to_json(const IntegerMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

namespace {

IntegerMatrix integer_rows(const Json& rows, std::size_t nrows, std::size_t ncols) {
    if (!rows.is_array() || rows.size() != nrows) fail("integer matrix must have " + std::to_string(nrows) + " rows");
    std::vector<std::vector<Integer>> data;
    for (const auto& row : rows) {
        if (!row.is_array()) fail("integer matrix rows must be arrays");
        std::vector<Integer> r;
        for (const auto& x : row) r.push_back(integer_from_json(x));
        data.push_back(std::move(r));
    }
    try {
        return IntegerMatrix::from_rows(data, ncols);
    } catch (const DimensionError& e) {
        fail(e.what());
    }
}

}  // namespace

IntegerMatrix integer_matrix_from_json(const Json& j) {
    if (j.is_array()) {
        const std::size_t cols = j.empty() || !j.front().is_array() ? 0 : j.front().size();
        return integer_rows(j, j.size(), cols);
    }
    const int rows = int_field(j, "rows");
    const int cols = int_field(j, "cols");
    if (rows < 0 || cols < 0) fail("rows and cols must be >= 0");
    return integer_rows(field(j, "entries"), static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
}

Json chain_complex_to_json(const ChainComplex& c) {
    Json bounds = Json::object();
    for (std::size_t p = 1; p <= c.boundaries.size(); ++p)
        bounds[std::to_string(p)] = integer_matrix_to_json(c.boundaries[p - 1])["entries"];
    return Json{{"dims", c.dims}, {"boundaries", std::move(bounds)}};
}

ChainComplex chain_complex_from_json(const Json& j) {
    ChainComplex c;
    const Json& dims = field(j, "dims");
    if (!dims.is_array() || dims.empty()) fail("'dims' must be a non-empty array");
    for (const auto& d : dims) {
        if (!d.is_number_integer() || d.get<long long>() < 0) fail("dims must be non-negative integers");
        c.dims.push_back(d.get<std::size_t>());
    }
    const Json& bounds = field(j, "boundaries");
    if (!bounds.is_object()) fail("'boundaries' must be an object keyed by degree");
    for (auto it = bounds.begin(); it != bounds.end(); ++it) {
        const std::string& key = it.key();
        if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
            fail("boundary key '" + key + "' is not a degree");
        const std::size_t p = std::stoul(key);
        if (p < 1 || p >= c.dims.size()) fail("boundary degree " + key + " outside 1..top");
    }
    for (std::size_t p = 1; p < c.dims.size(); ++p) {
        auto it = bounds.find(std::to_string(p));
        if (it == bounds.end()) {
            c.boundaries.emplace_back(c.dims[p - 1], c.dims[p]);
        } else {
            c.boundaries.push_back(integer_rows(*it, c.dims[p - 1], c.dims[p]));
        }
    }
    return c;
}

Json graded_group_to_json(const GradedAbelianGroup& g) {
    Json degrees = Json::object();
    for (const auto& [d, e] : g.degrees) {
        Json torsion = Json::array();
        for (const auto& t : e.torsion) torsion.push_back(integer_to_json(t));
        Json rank = e.rank.is_countable() ? Json("countable") : Json(e.rank.value());
        const auto note = e.annotation();
        degrees[std::to_string(d)] =
            Json{{"rank", std::move(rank)}, {"torsion", std::move(torsion)}, {"annotation", note ? Json(*note) : Json(nullptr)}};
    }
    Json out{{"degrees", std::move(degrees)}};
    if (!g.warnings.empty()) out["warnings"] = g.warnings;
    return out;
}

GradedAbelianGroup graded_group_from_json(const Json& j) {
    GradedAbelianGroup g;
    const Json& degrees = field(j, "degrees");
    if (!degrees.is_object()) fail("'degrees' must be an object");
    for (auto it = degrees.begin(); it != degrees.end(); ++it) {
        const std::string& key = it.key();
        if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
            fail("degree key '" + key + "' must be a non-negative integer");
        const Json& e = it.value();
        GroupEntry entry;
        const Json& rank = field(e, "rank");
        if (rank.is_string() && rank.get<std::string>() == "countable")
            entry.rank = Rank::countable();
        else if (rank.is_number_unsigned() || (rank.is_number_integer() && rank.get<long long>() >= 0))
            entry.rank = Rank(rank.get<std::uint64_t>());
        else
            fail("rank must be a non-negative integer or \"countable\"");
        if (auto t = e.find("torsion"); t != e.end()) {
            if (!t->is_array()) fail("'torsion' must be an array");
            for (const auto& x : *t) entry.torsion.push_back(integer_from_json(x));
        }
        if (auto a = e.find("annotation"); a != e.end() && !a->is_null()) {
            if (!a->is_string()) fail("'annotation' must be a string or null");
            entry.set_annotation(a->get<std::string>());
        }
        try {
            g.set(std::stoi(key), std::move(entry));
        } catch (const DomainError& err) {
            fail(err.what());
        }
    }
    if (auto w = j.find("warnings"); w != j.end()) {
        if (!w->is_array()) fail("'warnings' must be an array");
        for (const auto& s : *w) g.warnings.push_back(s.get<std::string>());
    }
    return g;
}

Json abelian_group_to_json(const AbelianGroup& g) {
    Json torsion = Json::array();
    for (const auto& t : g.torsion) torsion.push_back(integer_to_json(t));
    return Json{{"rank", g.rank}, {"torsion", std::move(torsion)}};
}

Json similarity_to_json(const SimilarityResult& r) {
    Json witness = nullptr;
    if (r.distinct) {
        witness = Json{{"word", word_to_json(r.distinct->word)},
                       {"word_text", word_to_string(r.distinct->word)},
                       {"trace_a", complex_to_json(r.distinct->trace_first)},
                       {"trace_b", complex_to_json(r.distinct->trace_second)}};
    } else if (r.similar) {
        Json matches = Json::array();
        for (const auto& m : r.similar->matches)
            matches.push_back(Json{{"a", m.first_index}, {"b", m.second_index}, {"dim", m.dimension}, {"multiplicity", m.multiplicity}});
        witness = Json{{"conjugator", matrix_to_json(r.similar->conjugator.matrix())},
                       {"matches", std::move(matches)},
                       {"residual", r.similar->residual}};
    }
    Json out{{"verdict", to_string(r.verdict)}, {"witness", std::move(witness)}, {"max_word_len", r.max_word_len},
             {"words_examined", r.words_examined}};
    if (!r.reason.empty()) out["reason"] = r.reason;
    return out;
}

Json decomposition_to_json(const Decomposition& d) {
    Json summands = Json::array();
    for (const auto& s : d.summands)
        summands.push_back(Json{{"tuple", tuple_to_json(s.tuple)}, {"multiplicity", s.multiplicity}});
    return Json{{"summands", std::move(summands)},
                {"basis_change", matrix_to_json(d.basis_change.matrix())},
                {"commutant_dim", d.commutant_dim},
                {"rank_threshold", d.rank_threshold}};
}

}  // namespace simsim::io

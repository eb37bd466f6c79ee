#include "versal/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace versal::io {

namespace {

using nlohmann::json;

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const ComplexMatrix& m) {
    json entries = json::array();
    for (const Complex& z : m.entries()) entries.push_back(complex_to_json(z));
    return {{"kind", "matrix"}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

json structure_to_json(const SegreStructure& s) {
    json blocks = json::array();
    for (const auto& g : s.groups()) {
        blocks.push_back({{"eigenvalue", complex_to_json(g.eigenvalue)}, {"sizes", g.sizes}});
    }
    return {{"kind", "structure"}, {"blocks", blocks}};
}

json polynomial_to_json(const MonicPolynomial& p) {
    json coeffs = json::array();
    for (const auto& a : p.coefficients()) coeffs.push_back(matrix_to_json(a));
    return {{"kind", "polynomial"},
            {"degree", p.degree()},
            {"size", p.coeff_size()},
            {"coefficients", coeffs}};
}

json pattern_to_json(const DeformationPattern& p) {
    json stars = json::array();
    for (const auto& s : p.stars) {
        stars.push_back({{"row", s.row + 1}, {"col", s.col + 1}, {"param", s.param + 1}});
    }
    json base = structure_to_json(p.base);
    base.erase("kind");
    return {{"kind", "pattern"},
            {"shape", to_string(p.shape)},
            {"parameters", p.parameter_count},
            {"structure", base},
            {"stars", stars}};
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw FormatError((path.empty() ? std::string("document") : "field '" + path + "'") + ": " +
                      what);
}

const json& member(const json& obj, const std::string& path, const char* key) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing");
    return *it;
}

std::string join(const std::string& path, const char* key) {
    return path.empty() ? key : path + "." + key;
}

std::string index(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

std::size_t read_size(const json& v, const std::string& path, bool positive) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        fail(path, "expected a non-negative integer");
    }
    const auto n = v.get<std::size_t>();
    if (positive && n == 0) fail(path, "must be positive");
    return n;
}

double read_double(const json& v, const std::string& path) {
    if (!v.is_number()) fail(path, "expected a number");
    return v.get<double>();
}

Complex read_complex(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 2) fail(path, "expected [re, im]");
    return {read_double(v[0], index(path, 0)), read_double(v[1], index(path, 1))};
}

ComplexMatrix read_matrix(const json& obj, const std::string& path) {
    const std::size_t rows = read_size(member(obj, path, "rows"), join(path, "rows"), true);
    const std::size_t cols = read_size(member(obj, path, "cols"), join(path, "cols"), true);
    const json& entries = member(obj, path, "entries");
    const std::string epath = join(path, "entries");
    if (!entries.is_array()) fail(epath, "expected an array");
    if (entries.size() != rows * cols) {
        fail(epath, "expected " + std::to_string(rows * cols) + " entries, found " +
                        std::to_string(entries.size()));
    }
    std::vector<Complex> data;
    data.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) data.push_back(read_complex(entries[i], index(epath, i)));
    try {
        return ComplexMatrix(rows, cols, std::move(data));
    } catch (const std::exception& e) {
        fail(path, e.what());
    }
}

SegreStructure read_structure(const json& obj, const std::string& path) {
    const json& blocks = member(obj, path, "blocks");
    const std::string bpath = join(path, "blocks");
    if (!blocks.is_array() || blocks.empty()) fail(bpath, "expected a non-empty array");
    std::vector<EigenBlocks> groups;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const std::string gpath = index(bpath, i);
        EigenBlocks g;
        g.eigenvalue = read_complex(member(blocks[i], gpath, "eigenvalue"), join(gpath, "eigenvalue"));
        const json& sizes = member(blocks[i], gpath, "sizes");
        const std::string spath = join(gpath, "sizes");
        if (!sizes.is_array() || sizes.empty()) fail(spath, "expected a non-empty array");
        for (std::size_t j = 0; j < sizes.size(); ++j) g.sizes.push_back(read_size(sizes[j], index(spath, j), true));
        groups.push_back(std::move(g));
    }
    try {
        return SegreStructure(std::move(groups));
    } catch (const InvalidStructure& e) {
        fail(bpath, e.what());
    }
}

MonicPolynomial read_polynomial(const json& obj, const std::string& path) {
    const std::size_t d = read_size(member(obj, path, "degree"), join(path, "degree"), true);
    const std::size_t n = read_size(member(obj, path, "size"), join(path, "size"), true);
    const json& coeffs = member(obj, path, "coefficients");
    const std::string cpath = join(path, "coefficients");
    if (!coeffs.is_array() || coeffs.size() != d) {
        fail(cpath, "expected an array of " + std::to_string(d) + " matrices");
    }
    std::vector<ComplexMatrix> mats;
    for (std::size_t j = 0; j < d; ++j) {
        ComplexMatrix a = read_matrix(coeffs[j], index(cpath, j));
        if (a.rows() != n || a.cols() != n) fail(index(cpath, j), "expected an " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
        mats.push_back(std::move(a));
    }
    return MonicPolynomial(std::move(mats));
}

DeformationPattern read_pattern(const json& obj, const std::string& path) {
    const json& shape_v = member(obj, path, "shape");
    DeformationShape shape;
    if (shape_v == "arnold") {
        shape = DeformationShape::Arnold;
    } else if (shape_v == "alternate") {
        shape = DeformationShape::Alternate;
    } else {
        fail(join(path, "shape"), "expected \"arnold\" or \"alternate\"");
    }
    const std::size_t count = read_size(member(obj, path, "parameters"), join(path, "parameters"), false);
    SegreStructure base = read_structure(member(obj, path, "structure"), join(path, "structure"));
    const json& stars = member(obj, path, "stars");
    const std::string spath = join(path, "stars");
    if (!stars.is_array()) fail(spath, "expected an array");
    DeformationPattern p{std::move(base), shape, {}, count};
    for (std::size_t i = 0; i < stars.size(); ++i) {
        const std::string ipath = index(spath, i);
        const std::size_t r = read_size(member(stars[i], ipath, "row"), join(ipath, "row"), true);
        const std::size_t c = read_size(member(stars[i], ipath, "col"), join(ipath, "col"), true);
        const std::size_t q = read_size(member(stars[i], ipath, "param"), join(ipath, "param"), true);
        if (r > p.base.size() || c > p.base.size() || q > count) fail(ipath, "index out of range");
        p.stars.push_back({r - 1, c - 1, q - 1});
    }
    return p;
}

}  // namespace

std::string to_string(DeformationShape shape) {
    return shape == DeformationShape::Arnold ? "arnold" : "alternate";
}

std::string dump(const Document& doc) {
    const json j = std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ComplexMatrix>) return matrix_to_json(v);
            else if constexpr (std::is_same_v<T, SegreStructure>) return structure_to_json(v);
            else if constexpr (std::is_same_v<T, MonicPolynomial>) return polynomial_to_json(v);
            else return pattern_to_json(v);
        },
        doc);
    return j.dump(2) + "\n";
}

Document parse(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        // Translate the byte offset into line:column.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw FormatError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                          ": invalid JSON");
    }
    const json& kind = member(j, "", "kind");
    if (kind == "matrix") return read_matrix(j, "");
    if (kind == "structure") return read_structure(j, "");
    if (kind == "polynomial") return read_polynomial(j, "");
    if (kind == "pattern") return read_pattern(j, "");
    fail("kind", "unknown document kind " + kind.dump());
}

void write_file(const std::filesystem::path& path, const Document& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << dump(doc);
    if (!out) throw Error("failed writing " + path.string());
}

Document read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse(buf.str());
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

}  // namespace versal::io

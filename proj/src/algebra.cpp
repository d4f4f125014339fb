#include "algebra.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "builtin_tables.hpp"

namespace conserva {

using json = nlohmann::ordered_json;

Algebra::Algebra(std::string name, std::vector<std::string> basis_labels, Tensor3 structure)
    : name_(std::move(name)), labels_(std::move(basis_labels)), structure_(std::move(structure)) {
    if (labels_.size() != structure_.dim())
        fail(ErrorCode::dimension_mismatch, "basis label count does not match dimension");
    std::set<std::string> distinct(labels_.begin(), labels_.end());
    if (distinct.size() != labels_.size())
        fail(ErrorCode::invalid_argument, "basis labels must be distinct");
}

Element Algebra::basis_element(std::size_t i) const {
    Element e(dim());
    e.at(i) = Rational(1);
    return e;
}

Element Algebra::multiply(const Element& x, const Element& y) const {
    const std::size_t m = dim();
    if (x.size() != m || y.size() != m)
        fail(ErrorCode::dimension_mismatch, "element does not belong to this algebra");
    Element out(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < m; ++j) {
            if (y[j].is_zero())
                continue;
            const Rational xy = x[i] * y[j];
            for (std::size_t k = 0; k < m; ++k) {
                const Rational& c = structure_.at(i, j, k);
                if (!c.is_zero())
                    out[k] += xy * c;
            }
        }
    }
    return out;
}

RatMatrix Algebra::left_mul_matrix(const Element& x) const {
    const std::size_t m = dim();
    if (x.size() != m)
        fail(ErrorCode::dimension_mismatch, "element does not belong to this algebra");
    RatMatrix out(m, m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < m; ++i) {
            if (x[i].is_zero())
                continue;
            for (std::size_t k = 0; k < m; ++k) {
                const Rational& c = structure_.at(i, j, k);
                if (!c.is_zero())
                    out.at(k, j) += x[i] * c;
            }
        }
    return out;
}

bool Algebra::table_is_commutative() const {
    const std::size_t m = dim();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < i; ++j)
            for (std::size_t k = 0; k < m; ++k)
                if (structure_.at(i, j, k) != structure_.at(j, i, k))
                    return false;
    return true;
}

namespace {

std::size_t take_index(const json& v, std::size_t dim, const char* what) {
    if (!v.is_number_integer())
        fail(ErrorCode::parse, std::string("structure ") + what + " index must be an integer");
    const long long i = v.get<long long>();
    if (i < 1 || static_cast<std::size_t>(i) > dim)
        fail(ErrorCode::dimension_mismatch,
             std::string("structure ") + what + " index " + std::to_string(i) +
                 " outside 1.." + std::to_string(dim));
    return static_cast<std::size_t>(i) - 1;
}

} // namespace

Algebra load_algebra(const std::string& json_text) {
    json doc = json::parse(json_text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        fail(ErrorCode::parse, "algebra document is not a JSON object");
    for (const char* key : {"name", "dim", "basis", "structure"})
        if (!doc.contains(key))
            fail(ErrorCode::parse, std::string("algebra document missing \"") + key + "\"");
    if (!doc["name"].is_string() || !doc["dim"].is_number_integer() || !doc["basis"].is_array() ||
        !doc["structure"].is_array())
        fail(ErrorCode::parse, "algebra document field has the wrong type");
    const long long dim_ll = doc["dim"].get<long long>();
    if (dim_ll < 1)
        fail(ErrorCode::parse, "algebra dimension must be positive");
    const std::size_t m = static_cast<std::size_t>(dim_ll);

    std::vector<std::string> labels;
    for (const auto& l : doc["basis"]) {
        if (!l.is_string())
            fail(ErrorCode::parse, "basis labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    if (labels.size() != m)
        fail(ErrorCode::dimension_mismatch, "basis label count does not match dim");

    Tensor3 c(m);
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (const auto& entry : doc["structure"]) {
        if (!entry.is_array() || entry.size() != 4)
            fail(ErrorCode::parse, "structure entries must be [i, j, k, \"p/q\"]");
        const std::size_t i = take_index(entry[0], m, "row");
        const std::size_t j = take_index(entry[1], m, "column");
        const std::size_t k = take_index(entry[2], m, "component");
        if (!entry[3].is_string())
            fail(ErrorCode::parse, "structure coefficient must be a string rational");
        if (!seen.insert({i, j, k}).second)
            fail(ErrorCode::parse, "duplicate structure triple");
        c.at(i, j, k) = Rational::parse(entry[3].get<std::string>());
    }
    return Algebra(doc["name"].get<std::string>(), std::move(labels), std::move(c));
}

Algebra load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::io, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_algebra(ss.str());
}

std::string save_algebra(const Algebra& a) {
    json doc;
    doc["name"] = a.name();
    doc["dim"] = a.dim();
    doc["basis"] = a.basis_labels();
    json entries = json::array();
    const std::size_t m = a.dim();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                const Rational& v = a.structure().at(i, j, k);
                if (!v.is_zero())
                    entries.push_back(json::array({i + 1, j + 1, k + 1, v.str()}));
            }
    doc["structure"] = std::move(entries);
    return doc.dump(2) + "\n";
}

Algebra builtin(const std::string& name, const std::string& algebra_dir) {
    if (!algebra_dir.empty()) {
        const std::string path = algebra_dir + "/" + name + ".json";
        if (std::ifstream(path).good())
            return load_algebra_file(path);
    }
    for (const auto& [builtin_name, text] : detail::builtin_table_documents())
        if (name == builtin_name)
            return load_algebra(text);
    fail(ErrorCode::unknown_algebra, "unknown algebra \"" + name + "\"");
}

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, text] : detail::builtin_table_documents())
            out.push_back(name);
        return out;
    }();
    return names;
}

bool product_power_vanishes(const Algebra& a, std::size_t n) {
    const std::size_t m = a.dim();
    std::vector<std::vector<Element>> span(n + 1);
    for (std::size_t i = 0; i < m; ++i)
        span[1].push_back(a.basis_element(i));
    for (std::size_t s = 2; s <= n; ++s) {
        RowReducer red(m);
        for (std::size_t i = 1; i < s; ++i)
            for (const auto& u : span[i])
                for (const auto& v : span[s - i])
                    red.add_row(a.multiply(u, v));
        red.finalize();
        for (auto& row : red.rref_rows())
            span[s].push_back(to_dense(row, m));
    }
    return span[n].empty();
}

std::string format_element(const Algebra& a, const Element& x) {
    if (x.size() != a.dim())
        fail(ErrorCode::dimension_mismatch, "element does not belong to this algebra");
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero())
            continue;
        const bool negative = x[i].sign() < 0;
        const Rational mag = negative ? -x[i] : x[i];
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (mag != Rational(1))
            out += mag.str() + "*";
        out += a.basis_labels()[i];
    }
    return out.empty() ? "0" : out;
}

std::string render_table(const Algebra& a) {
    const std::size_t m = a.dim();
    std::vector<std::vector<std::string>> cells(m + 1, std::vector<std::string>(m + 1));
    cells[0][0] = ".";
    for (std::size_t j = 0; j < m; ++j)
        cells[0][j + 1] = a.basis_labels()[j];
    for (std::size_t i = 0; i < m; ++i) {
        cells[i + 1][0] = a.basis_labels()[i];
        for (std::size_t j = 0; j < m; ++j)
            cells[i + 1][j + 1] =
                format_element(a, a.multiply(a.basis_element(i), a.basis_element(j)));
    }
    std::vector<std::size_t> width(m + 1);
    for (const auto& row : cells)
        for (std::size_t j = 0; j <= m; ++j)
            width[j] = std::max(width[j], row[j].size());

    std::ostringstream os;
    os << a.name() << " (dim " << m << ")\n";
    for (std::size_t r = 0; r <= m; ++r) {
        os << " ";
        for (std::size_t j = 0; j <= m; ++j) {
            const std::string& s = cells[r][j];
            os << s << std::string(width[j] - s.size(), ' ');
            os << (j == 0 ? " | " : (j == m ? "" : "  "));
        }
        os << "\n";
        if (r == 0) {
            os << " " << std::string(width[0], '-') << "-+-";
            std::size_t total = 0;
            for (std::size_t j = 1; j <= m; ++j)
                total += width[j] + (j == m ? 0 : 2);
            os << std::string(total, '-') << "\n";
        }
    }
    return os.str();
}

} // namespace conserva

#include "conserva/conserva.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "biderivations.hpp"
#include "derivations.hpp"
#include "kantor.hpp"
#include "verify.hpp"

struct conserva_algebra {
    conserva::Algebra impl;
};

namespace {

using conserva::Algebra;
using conserva::Element;
using conserva::Rational;
using conserva::RatMatrix;
using conserva::Tensor3;
using conserva::Vec;
using json = nlohmann::ordered_json;

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

conserva_status status_of(conserva::ErrorCode code) {
    switch (code) {
    case conserva::ErrorCode::invalid_argument:
        return CONSERVA_ERROR_INVALID_ARGUMENT;
    case conserva::ErrorCode::unknown_algebra:
        return CONSERVA_ERROR_UNKNOWN_ALGEBRA;
    case conserva::ErrorCode::parse:
        return CONSERVA_ERROR_PARSE;
    case conserva::ErrorCode::dimension_mismatch:
        return CONSERVA_ERROR_DIMENSION_MISMATCH;
    case conserva::ErrorCode::io:
        return CONSERVA_ERROR_IO;
    }
    return CONSERVA_ERROR_INTERNAL;
}

template <typename Fn>
conserva_status guarded(Fn&& fn) {
    try {
        fn();
        t_last_error.clear();
        return CONSERVA_OK;
    } catch (const conserva::Error& e) {
        t_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return CONSERVA_ERROR_INTERNAL;
    }
}

conserva_status invalid(const char* message) {
    t_last_error = message;
    return CONSERVA_ERROR_INVALID_ARGUMENT;
}

// ---- solve report rendering ----

std::vector<std::vector<std::string>> matrix_cells(const RatMatrix& m) {
    std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            cells[r][c] = m.at(r, c).str();
    return cells;
}

void render_matrix_text(std::ostream& os, const RatMatrix& m) {
    const auto cells = matrix_cells(m);
    std::vector<std::size_t> width(m.cols());
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    for (const auto& row : cells) {
        os << "  [";
        for (std::size_t c = 0; c < row.size(); ++c)
            os << " " << std::string(width[c] - row[c].size(), ' ') << row[c];
        os << " ]\n";
    }
}

json matrix_json(const RatMatrix& m) {
    json rows = json::array();
    for (const auto& row : matrix_cells(m))
        rows.push_back(row);
    return rows;
}

json tensor_entries_json(const Tensor3& t) {
    json entries = json::array();
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j)
            for (std::size_t k = 0; k < t.dim(); ++k)
                if (!t.at(i, j, k).is_zero())
                    entries.push_back(json::array({i + 1, j + 1, k + 1, t.at(i, j, k).str()}));
    return entries;
}

void render_tensor_text(std::ostream& os, const Algebra& a, const Tensor3& t) {
    const std::size_t m = t.dim();
    bool any = false;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Element v(m);
            for (std::size_t k = 0; k < m; ++k)
                v[k] = t.at(i, j, k);
            if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); }))
                continue;
            any = true;
            os << "  d(" << a.basis_labels()[i] << "," << a.basis_labels()[j]
               << ") = " << conserva::format_element(a, v) << "\n";
        }
    if (!any)
        os << "  0\n";
}

std::string solve_report(const Algebra& a, const std::string& kind, const Rational* delta,
                         bool as_json) {
    std::vector<RatMatrix> matrices;
    std::vector<Tensor3> tensors;
    bool tensor_kind = false;
    if (kind == "derivations")
        matrices = conserva::delta_derivation_space(a, Rational(1));
    else if (kind == "delta-derivations")
        matrices = conserva::delta_derivation_space(a, *delta);
    else if (kind == "centroid")
        matrices = conserva::centroid(a);
    else if (kind == "biderivations")
        tensors = conserva::biderivation_space(a), tensor_kind = true;
    else if (kind == "biderivations-sym")
        tensors = conserva::symmetric_biderivation_space(a), tensor_kind = true;
    else if (kind == "biderivations-skew")
        tensors = conserva::skew_biderivation_space(a), tensor_kind = true;
    else
        conserva::fail(conserva::ErrorCode::invalid_argument, "unknown solve kind \"" + kind + "\"");

    const std::size_t dim = tensor_kind ? tensors.size() : matrices.size();
    if (as_json) {
        json doc;
        doc["kind"] = kind;
        doc["algebra"] = a.name();
        if (delta)
            doc["delta"] = delta->str();
        doc["dimension"] = dim;
        json basis = json::array();
        if (tensor_kind)
            for (const auto& t : tensors)
                basis.push_back(tensor_entries_json(t));
        else
            for (const auto& m : matrices)
                basis.push_back(matrix_json(m));
        doc["basis"] = std::move(basis);
        return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "solve: " << kind << "\n";
    os << "algebra: " << a.name() << " (dim " << a.dim() << ")\n";
    if (delta)
        os << "delta: " << delta->str() << "\n";
    os << "dimension: " << dim << "\n";
    for (std::size_t i = 0; i < dim; ++i) {
        os << "basis " << i + 1 << ":\n";
        if (tensor_kind)
            render_tensor_text(os, a, tensors[i]);
        else
            render_matrix_text(os, matrices[i]);
    }
    return os.str();
}

Vec parse_csv_vector(const std::string& csv) {
    Vec out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        if (comma == std::string::npos)
            comma = csv.size();
        out.push_back(Rational::parse(csv.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

} // namespace

extern "C" {

const char* conserva_status_message(conserva_status status) {
    switch (status) {
    case CONSERVA_OK:
        return "ok";
    case CONSERVA_ERROR_INVALID_ARGUMENT:
        return "invalid argument";
    case CONSERVA_ERROR_UNKNOWN_ALGEBRA:
        return "unknown algebra";
    case CONSERVA_ERROR_PARSE:
        return "parse error";
    case CONSERVA_ERROR_DIMENSION_MISMATCH:
        return "dimension mismatch";
    case CONSERVA_ERROR_IO:
        return "i/o error";
    case CONSERVA_ERROR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char* conserva_last_error(void) {
    return t_last_error.c_str();
}

conserva_status conserva_algebra_builtin(const char* name, const char* algebra_dir,
                                         conserva_algebra** out) {
    if (!name || !out)
        return invalid("name and out must not be NULL");
    return guarded([&] {
        *out = new conserva_algebra{conserva::builtin(name, algebra_dir ? algebra_dir : "")};
    });
}

conserva_status conserva_algebra_from_json(const char* json_text, conserva_algebra** out) {
    if (!json_text || !out)
        return invalid("json_text and out must not be NULL");
    return guarded([&] { *out = new conserva_algebra{conserva::load_algebra(json_text)}; });
}

conserva_status conserva_algebra_from_file(const char* path, conserva_algebra** out) {
    if (!path || !out)
        return invalid("path and out must not be NULL");
    return guarded([&] { *out = new conserva_algebra{conserva::load_algebra_file(path)}; });
}

void conserva_algebra_free(conserva_algebra* algebra) {
    delete algebra;
}

int conserva_algebra_dim(const conserva_algebra* algebra) {
    return algebra ? static_cast<int>(algebra->impl.dim()) : 0;
}

const char* conserva_algebra_name(const conserva_algebra* algebra) {
    return algebra ? algebra->impl.name().c_str() : "";
}

conserva_status conserva_algebra_to_json(const conserva_algebra* algebra, char** out_text) {
    if (!algebra || !out_text)
        return invalid("algebra and out_text must not be NULL");
    return guarded([&] { *out_text = dup_string(conserva::save_algebra(algebra->impl)); });
}

conserva_status conserva_algebra_table(const conserva_algebra* algebra, char** out_text) {
    if (!algebra || !out_text)
        return invalid("algebra and out_text must not be NULL");
    return guarded([&] { *out_text = dup_string(conserva::render_table(algebra->impl)); });
}

conserva_status conserva_solve(const conserva_algebra* algebra, const char* kind,
                               const char* delta, int as_json, char** out_text) {
    if (!algebra || !kind || !out_text)
        return invalid("algebra, kind and out_text must not be NULL");
    return guarded([&] {
        const std::string kind_s = kind;
        const bool wants_delta = kind_s == "delta-derivations";
        if (wants_delta && !delta)
            conserva::fail(conserva::ErrorCode::invalid_argument,
                           "delta-derivations requires a delta parameter");
        if (!wants_delta && delta)
            conserva::fail(conserva::ErrorCode::invalid_argument,
                           "delta is only meaningful for delta-derivations");
        Rational d;
        if (wants_delta)
            d = Rational::parse(delta);
        *out_text =
            dup_string(solve_report(algebra->impl, kind_s, wants_delta ? &d : nullptr, as_json));
    });
}

conserva_status conserva_construct_wn(int n, const char* e_csv, int as_json, char** out_report,
                                      char** out_algebra_json) {
    if (!e_csv || !out_report)
        return invalid("e_csv and out_report must not be NULL");
    if (n < 1)
        return invalid("n must be at least 1");
    return guarded([&] {
        const Vec e = parse_csv_vector(e_csv);
        const conserva::WnAlgebra w = conserva::build_wn(static_cast<std::size_t>(n), e);
        const auto sym = conserva::symmetric_subspace(w);
        const auto tz = conserva::trace_zero_subspace(w);
        const std::size_t big = w.result.dim();

        auto closed = [&](const std::vector<conserva::BilinearMap>& basis) {
            std::vector<Vec> span;
            for (const auto& b : basis)
                span.push_back(b.flat());
            for (const auto& p : basis)
                for (const auto& q : basis)
                    if (!conserva::subspace_contains(
                            span, {conserva::kantor_product(p, q, w.e).flat()}, big))
                        return false;
            return true;
        };
        const bool sym_closed = closed(sym);
        const bool tz_closed = closed(tz);

        std::string algebra_doc = conserva::save_algebra(w.result);
        if (as_json) {
            json doc;
            doc["n"] = n;
            json ejson = json::array();
            for (const auto& x : e)
                ejson.push_back(x.str());
            doc["e"] = std::move(ejson);
            doc["dim"] = big;
            doc["commutative"] = {{"dim", sym.size()}, {"closed", sym_closed}};
            doc["trace_zero"] = {{"dim", tz.size()}, {"closed", tz_closed}};
            doc["algebra"] = json::parse(algebra_doc);
            *out_report = dup_string(doc.dump(2) + "\n");
        } else {
            std::ostringstream os;
            os << "constructed " << w.result.name() << ": dim " << big << " (n = " << n
               << ", e = " << e_csv << ")\n";
            os << "commutative subspace: dim " << sym.size()
               << ", closed under the product: " << (sym_closed ? "yes" : "no") << "\n";
            os << "trace-zero subspace: dim " << tz.size()
               << ", closed under the product: " << (tz_closed ? "yes" : "no") << "\n";
            *out_report = dup_string(os.str());
        }
        if (out_algebra_json)
            *out_algebra_json = dup_string(algebra_doc);
    });
}

conserva_status conserva_verify_paper(const char* algebra_dir, int as_json, char** out_report,
                                      int* out_failed, int* out_flagged) {
    if (!out_report)
        return invalid("out_report must not be NULL");
    return guarded([&] {
        const conserva::VerificationReport report =
            conserva::run_paper_verification(algebra_dir ? algebra_dir : "");
        *out_report = dup_string(as_json ? conserva::render_report_json(report)
                                         : conserva::render_report_text(report));
        if (out_failed)
            *out_failed = static_cast<int>(report.count(conserva::ClaimStatus::fail));
        if (out_flagged)
            *out_flagged = static_cast<int>(report.count(conserva::ClaimStatus::flag));
    });
}

void conserva_string_free(char* text) {
    std::free(text);
}

} // extern "C"

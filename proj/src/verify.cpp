#include "verify.hpp"

#include <functional>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "biderivations.hpp"
#include "derivations.hpp"
#include "kantor.hpp"
#include "randomgen.hpp"

namespace conserva {

namespace {

// Pinned sizes of the seeded checks.
constexpr std::size_t kCentroidRandomAlgebras = 100;   // dims cycle 1..5
constexpr std::size_t kDirectSumRandomAlgebras = 100;  // dims cycle 2..5
constexpr std::size_t kNonScalarMaps = 50;             // per builtin algebra
constexpr std::size_t kTwoLocalTables = 20;            // per builtin algebra
constexpr std::size_t kBracketRandomMaps = 100;
constexpr std::size_t kNilpotentAlgebras = 25;         // dims cycle 2..6
constexpr std::size_t kRankNullityMatrices = 200;
constexpr std::size_t kSliceCrossCheckAlgebras = 10;   // dims cycle 2..3

std::vector<Vec> flatten_all(const std::vector<RatMatrix>& mats) {
    std::vector<Vec> out;
    for (const auto& m : mats)
        out.push_back(m.flat());
    return out;
}

std::vector<Vec> flatten_all(const std::vector<Tensor3>& tensors) {
    std::vector<Vec> out;
    for (const auto& t : tensors)
        out.push_back(t.flat());
    return out;
}

bool equals_identity_span(const std::vector<RatMatrix>& basis, std::size_t m) {
    return subspace_equal(flatten_all(basis), {RatMatrix::identity(m).flat()}, m * m);
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------
// The derivation-matrix forms as printed in the source material. Each form is
// a two-parameter family; the generators are its a = 1 and b = 1 members.
// Orientation is ambiguous in print, so spans are compared both as-is
// (columns are images) and transposed (rows are images).
// ---------------------------------------------------------------------------

struct EntrySpec {
    std::size_t row, col;  // 1-based like the printed matrices
    long val;
};

RatMatrix matrix_from(std::size_t m, std::initializer_list<EntrySpec> entries) {
    RatMatrix out(m, m);
    for (const auto& e : entries)
        out.at(e.row - 1, e.col - 1) = Rational(e.val);
    return out;
}

struct MatrixForm {
    std::string label;
    RatMatrix gen_a, gen_b;
};

std::optional<MatrixForm> printed_lemma_form(const std::string& name) {
    if (name == "W2-conservative")
        return MatrixForm{
            "printed derivation-matrix block for W2-conservative",
            matrix_from(8, {{1, 2, 1}, {3, 1, 2}, {4, 3, 3}, {6, 5, -1}, {7, 8, 1}}),
            matrix_from(8, {{2, 2, -1}, {3, 3, 1}, {4, 4, 2}, {6, 6, 1}, {7, 7, 1}})};
    if (name == "W2-commutative")
        return MatrixForm{
            "printed derivation-matrix block for W2-commutative",
            matrix_from(6, {{1, 2, 1}, {2, 3, 2}, {4, 1, -1}, {4, 5, 1}, {5, 2, -1}, {5, 6, 2}, {6, 3, -1}}),
            matrix_from(6, {{2, 2, 1}, {3, 3, 2}, {4, 4, -1}, {6, 6, 1}})};
    if (name == "S2")
        return MatrixForm{
            "printed derivation-matrix block for S2",
            matrix_from(4, {{2, 2, 1}, {3, 3, 2}, {4, 4, -1}}),
            matrix_from(4, {{1, 4, 1}, {2, 1, -2}, {3, 2, -3}})};
    return std::nullopt;
}

/// The D_{e_i} slice shape printed with the biderivation development for
/// W2-conservative; it restates the same two-parameter derivation family.
MatrixForm slice_matrix_form_w2_conservative() {
    return MatrixForm{
        "slice-matrix form printed with the biderivation development",
        matrix_from(8, {{1, 2, 1}, {1, 3, 1}, {2, 4, 1}, {3, 4, 1}, {5, 1, -1}, {5, 6, 1},
                        {5, 7, 1}, {6, 2, -1}, {6, 8, 1}, {7, 3, -1}, {7, 8, 1}, {8, 4, -1}}),
        matrix_from(8, {{2, 2, 1}, {3, 3, 1}, {4, 4, 2}, {5, 5, -1}, {8, 8, 1}})};
}

/// Which reading (if any) of the printed form spans the computed space.
std::optional<std::string> span_match_orientation(const std::vector<RatMatrix>& space,
                                                  const MatrixForm& form, std::size_t m) {
    const auto space_flat = flatten_all(space);
    if (subspace_equal(space_flat, {form.gen_a.flat(), form.gen_b.flat()}, m * m))
        return "columns-as-images";
    if (subspace_equal(space_flat,
                       {form.gen_a.transposed().flat(), form.gen_b.transposed().flat()}, m * m))
        return "rows-as-images";
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Misprint probes: alternative readings of table cells that the run retries a
// failed claim against. A claim is only downgraded from fail to
// discrepancy-flag when one of these mechanical rereadings makes it pass.
// ---------------------------------------------------------------------------

struct TableProbe {
    std::string description;
    Algebra corrected;
};

std::vector<TableProbe> table_probes(const Algebra& a) {
    std::vector<TableProbe> probes;
    if (a.name() == "S2" && a.dim() == 4) {
        // Suspect cell z2*z2; retry with the k-index read as z3.
        Tensor3 c = a.structure();
        bool changed = !(c.at(1, 1, 2) == Rational(-3));
        const std::string loaded = format_element(a, a.multiply(a.basis_element(1), a.basis_element(1)));
        for (std::size_t k = 0; k < 4; ++k)
            c.at(1, 1, k) = Rational(0);
        c.at(1, 1, 2) = Rational(-3);
        if (changed)
            probes.push_back({"cell z2*z2 is loaded as \"" + loaded +
                                  "\"; with the suspected reading \"-3*z3\" the claim holds",
                              Algebra(a.name(), a.basis_labels(), std::move(c))});
    }
    if (a.name() == "W2-commutative" && a.dim() == 6) {
        // Suspect cell xi4*xi2; retry with the transposed cell's value xi2*xi4.
        Tensor3 c = a.structure();
        bool changed = false;
        for (std::size_t k = 0; k < 6; ++k)
            changed = changed || !(c.at(3, 1, k) == c.at(1, 3, k));
        if (changed) {
            const std::string loaded =
                format_element(a, a.multiply(a.basis_element(3), a.basis_element(1)));
            const std::string swapped =
                format_element(a, a.multiply(a.basis_element(1), a.basis_element(3)));
            for (std::size_t k = 0; k < 6; ++k)
                c.at(3, 1, k) = c.at(1, 3, k);
            probes.push_back({"cell xi4*xi2 is loaded as \"" + loaded +
                                  "\"; with the transposed cell's value \"" + swapped +
                                  "\" the claim holds",
                              Algebra(a.name(), a.basis_labels(), std::move(c))});
        }
    }
    return probes;
}

// ---------------------------------------------------------------------------

struct ClaimSink {
    std::vector<Claim> claims;

    void add(std::string id, int criterion, std::string paper, std::string expected,
             std::string computed, ClaimStatus status) {
        claims.push_back({std::move(id), criterion, std::move(paper), std::move(expected),
                          std::move(computed), status});
    }
};

struct Outcome {
    bool pass;
    std::string computed;
};

using TableEval = std::function<Outcome(const Algebra&)>;

/// Evaluates a per-table claim; on failure retries every misprint probe and
/// downgrades to a flag when one of them passes.
void run_table_claim(ClaimSink& sink, const std::string& id, int criterion,
                     const std::string& paper, const std::string& expected, const Algebra& a,
                     const TableEval& eval) {
    Outcome out = eval(a);
    if (out.pass) {
        sink.add(id, criterion, paper, expected, out.computed, ClaimStatus::pass);
        return;
    }
    for (const auto& probe : table_probes(a)) {
        if (eval(probe.corrected).pass) {
            sink.add(id, criterion, paper, expected, out.computed + "; discrepancy: " + probe.description,
                     ClaimStatus::flag);
            return;
        }
    }
    sink.add(id, criterion, paper, expected, out.computed, ClaimStatus::fail);
}

std::string dim_list(const std::vector<RatMatrix>& basis) {
    return std::to_string(basis.size());
}

// ---------------------------------------------------------------------------
// Criterion bodies
// ---------------------------------------------------------------------------

void criterion_1(ClaimSink& sink, const std::vector<Algebra>& builtins) {
    for (const auto& a : builtins) {
        run_table_claim(
            sink, "c1.half-derivations-scalar." + a.name(), 1,
            "half-derivation scalar theorem for " + a.name(),
            "space = span{id}, dim exactly 1", a, [](const Algebra& alg) -> Outcome {
                const auto basis = delta_derivation_space(alg, Rational(1, 2));
                const bool ok = basis.size() == 1 && equals_identity_span(basis, alg.dim());
                return {ok, "dim " + dim_list(basis) + "; equals span{id}: " +
                                yesno(!basis.empty() && equals_identity_span(basis, alg.dim()))};
            });
    }
}

void criterion_2(ClaimSink& sink, const std::vector<Algebra>& builtins) {
    for (const auto& a : builtins) {
        run_table_claim(sink, "c2.centroid-scalar." + a.name(), 2,
                        "centroid scalar corollary for " + a.name(),
                        "centroid = span{id}", a, [](const Algebra& alg) -> Outcome {
                            const auto basis = centroid(alg);
                            const bool ok =
                                basis.size() == 1 && equals_identity_span(basis, alg.dim());
                            return {ok, "dim " + dim_list(basis) + "; equals span{id}: " +
                                            yesno(ok)};
                        });
    }
    Rng rng(0xc2a11ull);
    std::size_t held = 0;
    for (std::size_t t = 0; t < kCentroidRandomAlgebras; ++t) {
        const Algebra a = random_algebra(rng, 1 + t % 5);
        held += centroid_in_delta_check(a) ? 1 : 0;
    }
    sink.add("c2.centroid-in-half.random", 2,
             "centroid-inside-half-derivations observation",
             "inclusion holds for " + std::to_string(kCentroidRandomAlgebras) +
                 " seeded random algebras of dim <= 5",
             std::to_string(held) + "/" + std::to_string(kCentroidRandomAlgebras) + " hold",
             held == kCentroidRandomAlgebras ? ClaimStatus::pass : ClaimStatus::fail);
}

void criterion_3(ClaimSink& sink, const std::vector<Algebra>& builtins) {
    for (const auto& a : builtins) {
        const std::string id = "c3.derivation-lemma." + a.name();
        const std::string paper = "derivation-matrix lemma for " + a.name();
        const std::string expected = "dim 2 and equal to the span of the printed generators";
        const auto eval = [](const Algebra& alg) -> Outcome {
            const auto der = delta_derivation_space(alg, Rational(1));
            std::string computed = "dim " + dim_list(der);
            if (der.size() != 2)
                return {false, computed};
            const auto form = printed_lemma_form(alg.name());
            if (!form)
                return {false, computed + "; no printed form known for this name"};
            if (form->gen_a.rows() != alg.dim())
                return {false, computed + "; table dimension differs from the printed form"};
            if (auto orient = span_match_orientation(der, *form, alg.dim()))
                return {true, computed + "; equals printed-generator span (" + *orient + ")"};
            return {false, computed + "; printed generators do not span the space"};
        };

        Outcome out = eval(a);
        if (out.pass) {
            sink.add(id, 3, paper, expected, out.computed, ClaimStatus::pass);
            continue;
        }
        bool flagged = false;
        for (const auto& probe : table_probes(a)) {
            if (eval(probe.corrected).pass) {
                sink.add(id, 3, paper, expected,
                         out.computed + "; discrepancy: " + probe.description, ClaimStatus::flag);
                flagged = true;
                break;
            }
        }
        if (flagged)
            continue;
        // The table may be fine while the printed lemma block is corrupt: the
        // source restates the same family as the D_{e_i} slice shape, so a
        // match against that form pins the misprint to the lemma block.
        if (a.name() == "W2-conservative" && a.dim() == 8) {
            const auto der = delta_derivation_space(a, Rational(1));
            const auto slice_form = slice_matrix_form_w2_conservative();
            if (der.size() == 2) {
                if (auto orient = span_match_orientation(der, slice_form, a.dim())) {
                    sink.add(id, 3, paper, expected,
                             out.computed +
                                 "; discrepancy: the printed lemma block is not a derivation "
                                 "family of the loaded table, but the " +
                                 slice_form.label + " spans the space exactly (" + *orient +
                                 "), so the lemma block is the misprint",
                             ClaimStatus::flag);
                    continue;
                }
            }
        }
        sink.add(id, 3, paper, expected, out.computed, ClaimStatus::fail);
    }
}

void criterion_4(ClaimSink& sink, const std::vector<Algebra>& builtins) {
    for (const auto& a : builtins) {
        run_table_claim(sink, "c4.biderivations-zero." + a.name(), 4,
                        "biderivations vanish theorem for " + a.name(),
                        "full, symmetric and skew spaces all {0}", a,
                        [](const Algebra& alg) -> Outcome {
                            const auto full = biderivation_space(alg);
                            const auto plus = symmetric_biderivation_space(alg);
                            const auto minus = skew_biderivation_space(alg);
                            const bool ok = full.empty() && plus.empty() && minus.empty();
                            return {ok, "dims " + std::to_string(full.size()) + " / " +
                                            std::to_string(plus.size()) + " / " +
                                            std::to_string(minus.size())};
                        });
    }
}

void criterion_5(ClaimSink& sink, const std::vector<Algebra>& builtins) {
    {
        bool all = true;
        std::string detail;
        for (const auto& a : builtins) {
            const bool ok = direct_sum_check(a);
            all = all && ok;
            detail += (detail.empty() ? "" : ", ") + a.name() + ": " + yesno(ok);
        }
        sink.add("c5.direct-sum.builtin", 5, "symmetric/skew biderivation decomposition",
                 "decomposition holds for the three table algebras", detail,
                 all ? ClaimStatus::pass : ClaimStatus::fail);
    }
    {
        bool all = true;
        std::string detail;
        for (std::size_t m = 2; m <= 4; ++m) {
            const Algebra a = zero_product_algebra(m);
            const std::size_t full = biderivation_space(a).size();
            const std::size_t plus = symmetric_biderivation_space(a).size();
            const std::size_t minus = skew_biderivation_space(a).size();
            const bool ok = direct_sum_check(a) && full == m * m * m &&
                            plus == m * m * (m + 1) / 2 && minus == m * m * (m - 1) / 2;
            all = all && ok;
            detail += (detail.empty() ? "dim " : ", dim ") + std::to_string(m) + ": " +
                      std::to_string(full) + " = " + std::to_string(plus) + " + " +
                      std::to_string(minus);
        }
        sink.add("c5.direct-sum.zero-product", 5, "symmetric/skew biderivation decomposition",
                 "m^3 = m^2(m+1)/2 + m^2(m-1)/2 for zero-product algebras of dims 2..4", detail,
                 all ? ClaimStatus::pass : ClaimStatus::fail);
    }
    {
        Rng rng(0xc5d1ull);
        std::size_t held = 0;
        for (std::size_t t = 0; t < kDirectSumRandomAlgebras; ++t) {
            const Algebra a = random_algebra(rng, 2 + t % 4);
            held += direct_sum_check(a) ? 1 : 0;
        }
        sink.add("c5.direct-sum.random", 5, "symmetric/skew biderivation decomposition",
                 "decomposition holds for " + std::to_string(kDirectSumRandomAlgebras) +
                     " seeded random algebras",
                 std::to_string(held) + "/" + std::to_string(kDirectSumRandomAlgebras) + " hold",
                 held == kDirectSumRandomAlgebras ? ClaimStatus::pass : ClaimStatus::fail);
    }
}

/// Confirms a local counterexample by ranks: D(x) must enlarge the span of
/// the images of x under the space's basis maps.
bool counterexample_confirmed(const std::vector<RatMatrix>& space, const RatMatrix& d,
                              const Element& x) {
    const std::size_t m = x.size();
    RatMatrix images(m, space.size());
    RatMatrix augmented(m, space.size() + 1);
    for (std::size_t t = 0; t < space.size(); ++t) {
        const Vec img = space[t].apply(x);
        for (std::size_t r = 0; r < m; ++r) {
            images.at(r, t) = img[r];
            augmented.at(r, t) = img[r];
        }
    }
    const Vec dx = d.apply(x);
    for (std::size_t r = 0; r < m; ++r)
        augmented.at(r, space.size()) = dx[r];
    return rank(images) < rank(augmented);
}

void criterion_6(ClaimSink& sink, const std::vector<Algebra>& builtins) {
    const Rational half(1, 2);
    bool no_false_passers = true, scalars_pass = true;
    bool all_rejected = true, all_confirmed = true;
    std::size_t candidates = 0, rejected = 0;
    for (const auto& a : builtins) {
        const std::size_t m = a.dim();
        const auto samples = required_local_samples(a);
        const auto space = delta_derivation_space(a, half);
        for (long lambda : {0L, 1L, -2L}) {
            RatMatrix d = RatMatrix::identity(m);
            d *= Rational(lambda);
            scalars_pass = scalars_pass && is_local_delta_derivation(a, d, samples, half).is_local;
        }
        {
            RatMatrix d = RatMatrix::identity(m);
            d *= Rational(3, 2);
            scalars_pass = scalars_pass && is_local_delta_derivation(a, d, samples, half).is_local;
        }
        Rng rng(0xc6a0ull + m);
        std::vector<RatMatrix> nonscalar;
        while (nonscalar.size() < kNonScalarMaps) {
            RatMatrix d = random_matrix(rng, m, m);
            if (!d.is_scalar())
                nonscalar.push_back(std::move(d));
        }
        {
            RatMatrix d = RatMatrix::identity(m);
            d.at(0, 1) = Rational(1);
            nonscalar.push_back(std::move(d));
        }
        for (const auto& d : nonscalar) {
            ++candidates;
            const auto decision = is_local_delta_derivation(a, d, samples, half);
            if (decision.is_local) {
                no_false_passers = false;
            } else {
                ++rejected;
                all_confirmed = all_confirmed && decision.counterexample &&
                                counterexample_confirmed(space, d, *decision.counterexample);
            }
        }
        all_rejected = all_rejected && rejected == candidates;
    }
    sink.add("c6.local-scalar-only", 6, "local half-derivation theorems",
             "scalar maps pass on the required samples; no non-scalar map passes",
             std::string("scalar maps pass: ") + yesno(scalars_pass) + "; non-scalar candidates " +
                 std::to_string(candidates) + ", false passers: " + yesno(!no_false_passers),
             scalars_pass && no_false_passers ? ClaimStatus::pass : ClaimStatus::fail);
    sink.add("c6.local-falsified", 6, "local half-derivation theorems",
             std::to_string(kNonScalarMaps) +
                 "+1 seeded non-scalar maps per algebra are rejected with a rank-confirmed "
                 "counterexample",
             std::to_string(rejected) + "/" + std::to_string(candidates) +
                 " rejected; all counterexamples confirmed: " + yesno(all_confirmed),
             all_rejected && all_confirmed ? ClaimStatus::pass : ClaimStatus::fail);

    bool scalar_tables_pass = true, passers_scalar = true;
    std::size_t tables = 0, table_rejections = 0;
    for (const auto& a : builtins) {
        const std::size_t m = a.dim();
        std::vector<std::pair<Element, Element>> pairs;
        for (std::size_t i = 0; i < m; ++i)
            pairs.emplace_back(a.basis_element(i), a.basis_element(0));

        auto run_table = [&](const PointValueTable& values) {
            return is_two_local_delta_derivation(a, values, pairs, half);
        };
        auto scalar_restriction = [&](const PointValueTable& values) {
            // Is there one lambda with D(e_i) = lambda e_i for every i?
            std::optional<Rational> lambda;
            for (std::size_t i = 0; i < m; ++i) {
                const Element& v = values[i].second;
                for (std::size_t r = 0; r < m; ++r)
                    if (r != i && !v[r].is_zero())
                        return false;
                if (!lambda)
                    lambda = v[i];
                else if (!(*lambda == v[i]))
                    return false;
            }
            return true;
        };

        PointValueTable scalar_table;
        for (std::size_t i = 0; i < m; ++i) {
            Element v = a.basis_element(i);
            for (auto& x : v)
                x *= Rational(5, 3);
            scalar_table.emplace_back(a.basis_element(i), std::move(v));
        }
        scalar_tables_pass = scalar_tables_pass && run_table(scalar_table).is_two_local;

        PointValueTable drifting;  // scalar at each point, but point-dependent
        for (std::size_t i = 0; i < m; ++i) {
            Element v = a.basis_element(i);
            for (auto& x : v)
                x *= Rational(static_cast<long>(i + 1));
            drifting.emplace_back(a.basis_element(i), std::move(v));
        }
        Rng rng(0xc62ull + m);
        std::vector<PointValueTable> candidates_2l{std::move(drifting)};
        for (std::size_t t = 0; t < kTwoLocalTables; ++t) {
            PointValueTable table;
            for (std::size_t i = 0; i < m; ++i)
                table.emplace_back(a.basis_element(i), random_element(rng, m));
            candidates_2l.push_back(std::move(table));
        }
        for (const auto& table : candidates_2l) {
            ++tables;
            const auto decision = run_table(table);
            if (decision.is_two_local)
                passers_scalar = passers_scalar && scalar_restriction(table);
            else
                ++table_rejections;
        }
    }
    sink.add("c6.two-local-scalar", 6, "2-local half-derivation theorems",
             "every table passing all pairs against e1 is the restriction of lambda*id",
             std::string("scalar restrictions pass: ") + yesno(scalar_tables_pass) + "; " +
                 std::to_string(tables) + " other tables, rejected " +
                 std::to_string(table_rejections) + ", non-scalar passers: " +
                 yesno(!passers_scalar),
             scalar_tables_pass && passers_scalar ? ClaimStatus::pass : ClaimStatus::fail);
}

void criterion_7(ClaimSink& sink, const Algebra& table_w2) {
    const WnAlgebra w = build_wn(2, {Rational(1), Rational(0)});
    const auto sym = symmetric_subspace(w);
    const auto tz = trace_zero_subspace(w);
    {
        const bool ok = w.result.dim() == 8 && sym.size() == 6 && tz.size() == 4;
        sink.add("c7.construction-dims", 7, "Kantor construction of the multiplication algebra",
                 "dim 8; commutative subspace dim 6; trace-zero subspace dim 4",
                 "dims " + std::to_string(w.result.dim()) + " / " + std::to_string(sym.size()) +
                     " / " + std::to_string(tz.size()),
                 ok ? ClaimStatus::pass : ClaimStatus::fail);
    }
    {
        auto closed = [&](const std::vector<BilinearMap>& basis) {
            std::vector<Vec> span = flatten_all(basis);
            for (const auto& p : basis)
                for (const auto& q : basis)
                    if (!subspace_contains(span, {kantor_product(p, q, w.e).flat()}, 8))
                        return false;
            return true;
        };
        const bool sym_closed = closed(sym);
        const bool tz_closed = closed(tz);
        sink.add("c7.subalgebra-closure", 7, "Kantor construction of the multiplication algebra",
                 "both subspaces closed under the product on all basis pairs",
                 std::string("commutative: ") + yesno(sym_closed) + ", trace-zero: " +
                     yesno(tz_closed),
                 sym_closed && tz_closed ? ClaimStatus::pass : ClaimStatus::fail);
    }
    {
        Rng rng(0xc7b7ull);
        std::size_t held = 0;
        const RatMatrix id2 = RatMatrix::identity(2);
        for (std::size_t t = 0; t < kBracketRandomMaps; ++t) {
            BilinearMap n(2);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    for (std::size_t k = 0; k < 2; ++k)
                        n.at(i, j, k) = rng.rational(3);
            BilinearMap expect = n;
            expect *= Rational(-1);
            held += bracket(id2, n) == expect ? 1 : 0;
        }
        sink.add("c7.bracket-identity.random", 7,
                 "bracket of the identity map (definition of the bracket)",
                 "[id, N] = -N for " + std::to_string(kBracketRandomMaps) + " random N",
                 std::to_string(held) + "/" + std::to_string(kBracketRandomMaps) + " hold",
                 held == kBracketRandomMaps ? ClaimStatus::pass : ClaimStatus::fail);
    }
    {
        auto profile = [](const Algebra& a) {
            const auto der = delta_derivation_space(a, Rational(1));
            const auto half = delta_derivation_space(a, Rational(1, 2));
            const auto cent = centroid(a);
            const auto bder = biderivation_space(a);
            std::ostringstream os;
            os << "dim Der = " << der.size() << ", half = span{id}: "
               << yesno(half.size() == 1 && equals_identity_span(half, a.dim()))
               << ", centroid = span{id}: "
               << yesno(cent.size() == 1 && equals_identity_span(cent, a.dim()))
               << ", dim BDer = " << bder.size();
            return os.str();
        };
        const std::string built = profile(w.result);
        const std::string table = profile(table_w2);
        if (built == table) {
            sink.add("c7.invariant-profile", 7,
                     "Kantor construction of the multiplication algebra",
                     "constructed and table algebras share the invariant profile",
                     "both: " + built, ClaimStatus::pass);
        } else {
            sink.add("c7.invariant-profile", 7,
                     "Kantor construction of the multiplication algebra",
                     "constructed and table algebras share the invariant profile",
                     "constructed: " + built + "; table: " + table +
                         "; mismatch implicates a table misprint",
                     ClaimStatus::flag);
        }
    }
}

void criterion_8(ClaimSink& sink, const Algebra& table_w2) {
    {
        const auto f = find_associated_f(table_w2);
        const bool holds = f && witness_identity_holds(table_w2, *f);
        sink.add("c8.witness.W2-conservative", 8, "conservativity of the multiplication algebra",
                 "a witness F exists and satisfies the identity at all basis quadruples",
                 std::string("witness found: ") + yesno(f.has_value()) +
                     "; zero residual: " + yesno(holds),
                 holds ? ClaimStatus::pass : ClaimStatus::fail);
    }
    {
        Rng rng(0xc8f0ull);
        std::size_t ok = 0;
        for (std::size_t t = 0; t < kNilpotentAlgebras; ++t) {
            const Algebra a = random_four_nilpotent_algebra(rng, 2 + t % 5);
            if (!product_power_vanishes(a, 4))
                continue;
            const auto f = find_associated_f(a);
            if (f && f->is_zero() && witness_identity_holds(a, Tensor3(a.dim())))
                ++ok;
        }
        sink.add("c8.witness.nilpotent", 8, "4-nilpotent algebras are conservative",
                 "F = 0 certifies " + std::to_string(kNilpotentAlgebras) +
                     " seeded 4-nilpotent algebras (nilpotency checked independently)",
                 std::to_string(ok) + "/" + std::to_string(kNilpotentAlgebras) + " certified",
                 ok == kNilpotentAlgebras ? ClaimStatus::pass : ClaimStatus::fail);
    }
}

void criterion_9(ClaimSink& sink, const std::vector<Algebra>& builtins) {
    {
        bool all = true;
        std::size_t substituted = 0;
        for (const auto& a : builtins) {
            for (const auto& d : delta_derivation_space(a, Rational(1, 2))) {
                all = all && is_delta_derivation(a, d, Rational(1, 2));
                ++substituted;
            }
            for (const auto& d : delta_derivation_space(a, Rational(1))) {
                all = all && is_delta_derivation(a, d, Rational(1));
                ++substituted;
            }
            for (const auto& g : centroid(a)) {
                all = all && is_centroid_map(a, g);
                ++substituted;
            }
            for (const auto& b : biderivation_space(a)) {
                all = all && satisfies_biderivation_identities(a, b);
                ++substituted;
            }
        }
        Rng rng(0xc9c3ull);
        bool slices_ok = true;
        for (std::size_t t = 0; t < kSliceCrossCheckAlgebras; ++t) {
            const Algebra a = random_algebra(rng, 2 + t % 2);
            const auto solutions = biderivation_space(a);
            for (const auto& b : solutions) {
                all = all && satisfies_biderivation_identities(a, b);
                ++substituted;
            }
            slices_ok = slices_ok && slices_lie_in_derivation_span(a, solutions);
        }
        {
            const Algebra zp = zero_product_algebra(3);
            slices_ok = slices_ok && slices_lie_in_derivation_span(zp, biderivation_space(zp));
        }
        sink.add("c9.residual-soundness", 9, "solver soundness (artifact property)",
                 "every solver output satisfies its defining identity exactly; biderivation "
                 "slices lie in the derivation span",
                 std::to_string(substituted) + " basis elements re-substituted: " + yesno(all) +
                     "; slice cross-check: " + yesno(slices_ok),
                 all && slices_ok ? ClaimStatus::pass : ClaimStatus::fail);
    }
    {
        Rng rng(0xc9aaull);
        std::size_t held = 0;
        for (std::size_t t = 0; t < kRankNullityMatrices; ++t) {
            const std::size_t rows = 1 + rng.below(8), cols = 1 + rng.below(8);
            const RatMatrix a = random_matrix(rng, rows, cols);
            const auto kernel = kernel_basis(a);
            bool ok = rank(a) + kernel.size() == cols;
            for (const auto& v : kernel) {
                const Vec image = a.apply(v);
                for (const auto& x : image)
                    ok = ok && x.is_zero();
            }
            held += ok ? 1 : 0;
        }
        sink.add("c9.rank-nullity.random", 9, "solver soundness (artifact property)",
                 "rank + nullity = cols and A*v = 0 for kernel vectors, " +
                     std::to_string(kRankNullityMatrices) + " seeded matrices",
                 std::to_string(held) + "/" + std::to_string(kRankNullityMatrices) + " hold",
                 held == kRankNullityMatrices ? ClaimStatus::pass : ClaimStatus::fail);
    }
}

} // namespace

VerificationReport run_paper_verification(const std::string& algebra_dir) {
    std::vector<Algebra> builtins;
    for (const auto& name : builtin_names())
        builtins.push_back(builtin(name, algebra_dir));
    const Algebra table_w2 = builtin("W2-conservative", algebra_dir);

    ClaimSink sink;
    criterion_1(sink, builtins);
    criterion_2(sink, builtins);
    criterion_3(sink, builtins);
    criterion_4(sink, builtins);
    criterion_5(sink, builtins);
    criterion_6(sink, builtins);
    criterion_7(sink, table_w2);
    criterion_8(sink, table_w2);
    criterion_9(sink, builtins);
    return {std::move(sink.claims)};
}

const char* claim_status_name(ClaimStatus s) {
    switch (s) {
    case ClaimStatus::pass:
        return "pass";
    case ClaimStatus::fail:
        return "fail";
    case ClaimStatus::flag:
        return "discrepancy-flag";
    }
    return "?";
}

std::string render_report_text(const VerificationReport& report) {
    std::ostringstream os;
    for (const auto& c : report.claims) {
        const char* tag = c.status == ClaimStatus::pass   ? "PASS"
                          : c.status == ClaimStatus::fail ? "FAIL"
                                                          : "FLAG";
        os << "[" << tag << "] " << c.id << "\n";
        os << "       claim:    " << c.paper << "\n";
        os << "       expected: " << c.expected << "\n";
        os << "       computed: " << c.computed << "\n";
    }
    os << "summary: " << report.claims.size() << " claims — "
       << report.count(ClaimStatus::pass) << " pass, " << report.count(ClaimStatus::flag)
       << " discrepancy-flag, " << report.count(ClaimStatus::fail) << " fail\n";
    os << "result: " << (report.count(ClaimStatus::fail) == 0 ? "OK" : "FAIL") << "\n";
    return os.str();
}

std::string render_report_json(const VerificationReport& report) {
    nlohmann::ordered_json doc;
    doc["claims"] = nlohmann::ordered_json::array();
    for (const auto& c : report.claims)
        doc["claims"].push_back({{"id", c.id},
                                 {"paper", c.paper},
                                 {"status", claim_status_name(c.status)},
                                 {"expected", c.expected},
                                 {"computed", c.computed}});
    return doc.dump(2) + "\n";
}

} // namespace conserva
